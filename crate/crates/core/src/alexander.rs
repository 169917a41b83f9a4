//! Three independent computations of the spanning-tree polynomial
//! `P_D(t) = Σ c_k(D,r)·t^k` of an Eulerian digraph, with mandatory
//! cross-checking in the trusted entry point.
//!
//! The determinant route uses the signed Laplacian: `l_ii = odeg(i)`,
//! `l_ij = −#(edges i→j)` for `i ≠ j`, and evaluates `det(L̄ + t·L̄ᵀ)`
//! exactly over the integer-polynomial ring.

use crate::graphs::{Digraph, EulerianDigraph, Vertex};
use crate::matrix::{bareiss_det, cofactor_det};
use crate::poly::IntPoly;
use crate::trees::{ck_inclusion_exclusion_vector, ck_vector};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// The signed out-degree Laplacian. Row sums are zero; loops cancel.
#[derive(Clone, Debug)]
pub struct LaplacianMatrix {
    pub full: Vec<Vec<BigInt>>,
    pub removed_index: usize,
}

impl LaplacianMatrix {
    pub fn new(d: &Digraph, removed_index: usize) -> Self {
        let n = d.vertex_count();
        let mut full = vec![vec![BigInt::zero(); n]; n];
        for e in d.edges() {
            if e.init == e.fin {
                continue;
            }
            full[e.init][e.init] += 1;
            full[e.init][e.fin] -= 1;
        }
        LaplacianMatrix {
            full,
            removed_index,
        }
    }

    /// The matrix with the removed row and column struck out.
    pub fn reduced(&self) -> Vec<Vec<BigInt>> {
        let n = self.full.len();
        (0..n)
            .filter(|&i| i != self.removed_index)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != self.removed_index)
                    .map(|j| self.full[i][j].clone())
                    .collect()
            })
            .collect()
    }
}

/// `P_D(t)` by direct enumeration and classification of spanning trees.
pub fn pd_direct(d: &EulerianDigraph, root: Vertex) -> Result<IntPoly> {
    Ok(IntPoly::from_coeffs(ck_vector(d, root)?))
}

/// `P_D(t) = det(L̄ + t·L̄ᵀ)`, removing the largest vertex index by default.
pub fn pd_determinant(d: &EulerianDigraph) -> IntPoly {
    pd_determinant_removing(d, d.graph().vertex_count() - 1)
}

/// Determinant route with an explicit removed row/column index. The result
/// is independent of this choice; tests assert that rather than assume it.
pub fn pd_determinant_removing(d: &EulerianDigraph, removed_index: usize) -> IntPoly {
    let lap = LaplacianMatrix::new(d.graph(), removed_index);
    let reduced = lap.reduced();
    bareiss_det(pencil(&reduced))
}

/// Cofactor-expansion evaluation of the same determinant; exponential and
/// only suitable as an oracle on small matrices.
pub fn pd_determinant_cofactor(d: &EulerianDigraph, removed_index: usize) -> IntPoly {
    let lap = LaplacianMatrix::new(d.graph(), removed_index);
    let reduced = lap.reduced();
    cofactor_det(&pencil(&reduced))
}

/// `L̄ + t·L̄ᵀ` as a polynomial matrix.
fn pencil(reduced: &[Vec<BigInt>]) -> Vec<Vec<IntPoly>> {
    let n = reduced.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    IntPoly::from_coeffs(vec![reduced[i][j].clone(), reduced[j][i].clone()])
                })
                .collect()
        })
        .collect()
}

/// Trusted entry point: evaluates the determinant route and asserts
/// agreement with the direct count (root 0) and, on small instances, with
/// the inclusion-exclusion vector. A mismatch is an internal-inconsistency
/// error, never a silently returned value.
pub fn pd(d: &EulerianDigraph) -> Result<IntPoly> {
    let by_det = pd_determinant(d);
    let by_direct = pd_direct(d, 0)?;
    if by_det != by_direct {
        return Err(Error::inconsistency(format!(
            "determinant route gave {by_det}, direct enumeration gave {by_direct}"
        )));
    }
    let g = d.graph();
    if g.vertex_count() <= 5 && g.edge_count() <= 10 {
        let ie = IntPoly::from_coeffs(ck_inclusion_exclusion_vector(d, 0)?);
        if ie != by_det {
            return Err(Error::inconsistency(format!(
                "inclusion-exclusion gave {ie}, determinant gave {by_det}"
            )));
        }
    }
    Ok(by_det)
}
