//! Totally unimodular representations of the dual oriented matroid of an
//! Eulerian digraph, normalized root-polytope volumes, and the volume
//! expansion of the spanning-tree polynomial over column deletions.
//!
//! Volumes are normalized lattice volumes (a unimodular simplex has volume
//! one). The polytope is never constructed geometrically: every volume the
//! identities need reduces to a rooted tree count.

use crate::graphs::{EdgeId, EulerianDigraph, Vertex};
use crate::matrix::{bareiss_det, circuit_dependency, rank_bigint};
use crate::poly::{t_minus_one_pow, IntPoly};
use crate::trees::{arborescences, c0_matrix_tree, classify, contraction_c0_by_size};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// An integer matrix with entries in {−1, 0, 1} whose columns are labeled
/// by edge ids of the source digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TUMatrix {
    pub rows: Vec<Vec<i64>>,
    pub col_edge_ids: Vec<EdgeId>,
}

impl TUMatrix {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.col_edge_ids.len()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| BigInt::from(r[j])).collect()
    }
}

/// The fundamental-cycle matrix of the digraph with respect to a spanning
/// tree: one row per non-tree edge `f`, with +1 on `f` itself and ±1 on the
/// tree edges of its fundamental cycle according to whether their direction
/// agrees with the cycle traversal (`f` traversed init→fin, then back along
/// the tree path from fin(f) to init(f)). The columns represent the dual of
/// the graphic matroid.
pub fn dual_tu_matrix(d: &EulerianDigraph, tree: &[EdgeId]) -> Result<TUMatrix> {
    let g = d.graph();
    let n = g.vertex_count();
    classify(g, tree, 0)?; // validates that `tree` is a spanning tree
    let tree_set: BTreeSet<EdgeId> = tree.iter().copied().collect();
    let col_edge_ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    let col_of: std::collections::BTreeMap<EdgeId, usize> = col_edge_ids
        .iter()
        .enumerate()
        .map(|(i, &id)| (id, i))
        .collect();

    // adjacency of the tree for path finding
    let mut adj: Vec<Vec<(Vertex, EdgeId, bool)>> = vec![Vec::new(); n];
    for &id in tree {
        let e = g.edge(id)?;
        adj[e.init].push((e.fin, id, true));
        adj[e.fin].push((e.init, id, false));
    }
    // tree path from `from` to `to` as (edge, traversed-along-direction)
    let tree_path = |from: Vertex, to: Vertex| -> Vec<(EdgeId, bool)> {
        let mut prev: Vec<Option<(Vertex, EdgeId, bool)>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &(w, id, forward) in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    prev[w] = Some((v, id, forward));
                    queue.push_back(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, id, forward) = prev[cur].expect("tree connects all vertices");
            path.push((id, forward));
            cur = p;
        }
        path.reverse();
        path
    };

    let mut rows = Vec::new();
    for e in g.edges() {
        if tree_set.contains(&e.id) {
            continue;
        }
        let mut row = vec![0i64; col_edge_ids.len()];
        row[col_of[&e.id]] = 1;
        if e.init != e.fin {
            for (id, forward) in tree_path(e.fin, e.init) {
                row[col_of[&id]] = if forward { 1 } else { -1 };
            }
        }
        rows.push(row);
    }
    Ok(TUMatrix { rows, col_edge_ids })
}

/// Exhaustively checks that all square minors with size up to `bound` have
/// determinant in {−1, 0, 1}.
pub fn verify_totally_unimodular(m: &TUMatrix, bound: usize) -> bool {
    let bound = bound.min(m.row_count()).min(m.col_count());
    for size in 1..=bound {
        for rows in combinations(m.row_count(), size) {
            for cols in combinations(m.col_count(), size) {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| BigInt::from(m.rows[i][j])).collect())
                    .collect();
                let det = bareiss_det(sub);
                if det.abs() > BigInt::from(1) {
                    return false;
                }
            }
        }
    }
    true
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A signed circuit of the matroid represented by the columns of a matrix:
/// the minimal dependent column sets split by the signs of their dependency.
#[derive(Clone, Debug)]
pub struct SignedCircuit {
    pub edges_pos: Vec<EdgeId>,
    pub edges_neg: Vec<EdgeId>,
}

/// All circuits of the matroid represented by the matrix columns, found by
/// scanning column subsets for minimal dependencies. Exponential; intended
/// for the small corpus.
pub fn column_circuits(m: &TUMatrix) -> Vec<SignedCircuit> {
    let cols: Vec<Vec<BigInt>> = (0..m.col_count()).map(|j| m.column(j)).collect();
    let mut circuits = Vec::new();
    let nc = m.col_count();
    for size in 1..=nc {
        for subset in combinations(nc, size) {
            let sub: Vec<Vec<BigInt>> = subset.iter().map(|&j| cols[j].clone()).collect();
            // dependent with every proper subset independent
            let mat: Vec<Vec<BigInt>> = transpose_cols(&sub);
            if rank_bigint(mat) == size {
                continue;
            }
            let minimal = (0..size).all(|skip| {
                let smaller: Vec<Vec<BigInt>> = (0..size)
                    .filter(|&i| i != skip)
                    .map(|i| sub[i].clone())
                    .collect();
                smaller.is_empty() || rank_bigint(transpose_cols(&smaller)) == size - 1
            });
            if !minimal {
                continue;
            }
            if let Some(dep) = circuit_dependency(&sub) {
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                for (i, lambda) in dep.iter().enumerate() {
                    let id = m.col_edge_ids[subset[i]];
                    if lambda > &BigInt::zero() {
                        pos.push(id);
                    } else {
                        neg.push(id);
                    }
                }
                circuits.push(SignedCircuit {
                    edges_pos: pos,
                    edges_neg: neg,
                });
            }
        }
    }
    circuits
}

fn transpose_cols(cols: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if cols.is_empty() {
        return Vec::new();
    }
    let rows = cols[0].len();
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// True when every circuit of the represented matroid is balanced:
/// `|C⁺| = |C⁻|`. For the dual of the graphic matroid of an Eulerian
/// digraph this is the co-Eulerian property.
pub fn verify_co_eulerian(m: &TUMatrix) -> bool {
    column_circuits(m)
        .iter()
        .all(|c| c.edges_pos.len() == c.edges_neg.len())
}

/// The normalized volume of the root polytope of the dual matroid:
/// `Vol(Q_A) = c0(D, r)`. A second, independent value (the number of
/// arborescences rooted at `r`, which is the triangulation count) is
/// computed by enumeration and asserted equal.
pub fn normalized_volume(d: &EulerianDigraph, root: Vertex) -> Result<BigInt> {
    let c0 = c0_matrix_tree(d.graph(), root);
    let arbs = BigInt::from(arborescences(d.graph(), root)?.len());
    if c0 != arbs {
        return Err(Error::inconsistency(format!(
            "volume via matrix-tree ({c0}) disagrees with triangulation count ({arbs})"
        )));
    }
    Ok(c0)
}

/// The volume expansion of `P_D(t)`: summing over cycle-free edge subsets
/// `E'` (the column deletions that keep the dual representation full rank),
/// `Σ Vol(Q_{D/E'}) · (t−1)^{|V|−1−|E'|}`.
pub fn theorem_volume_expansion(d: &EulerianDigraph, root: Vertex) -> Result<IntPoly> {
    let n = d.graph().vertex_count();
    let sums = contraction_c0_by_size(d, root)?;
    let mut acc = IntPoly::zero();
    for (size, total) in sums.iter().enumerate() {
        if total.is_zero() {
            continue;
        }
        acc = &acc + &t_minus_one_pow(n - 1 - size).scale(total);
    }
    Ok(acc)
}
