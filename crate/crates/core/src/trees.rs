//! Spanning-tree enumeration and classification for Eulerian digraphs:
//! k-spanning trees, arborescences, Eulerian tour counting, the directed
//! matrix-tree determinant, and the contraction inclusion–exclusion formula
//! for the coefficients `c_k`.

use crate::graphs::{Digraph, EdgeId, EulerianDigraph, UnionFind, Vertex};
use crate::matrix::bareiss_det;
use crate::poly::binomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// A spanning tree of a digraph together with a root and the set of its
/// edges that point away from the root along tree paths. Reversing exactly
/// the away edges orients the whole tree toward the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTree {
    pub edges: Vec<EdgeId>,
    pub root: Vertex,
    pub away_edges: Vec<EdgeId>,
    pub k: usize,
}

/// All spanning trees of the underlying undirected multigraph, as sorted
/// edge-id lists in lexicographic order. Loops never participate.
pub fn spanning_trees(d: &Digraph) -> Result<Vec<Vec<EdgeId>>> {
    if !d.is_connected_underlying() {
        return Err(Error::input("spanning trees of a disconnected graph"));
    }
    let n = d.vertex_count();
    let edges = d.edges();
    let mut out: Vec<Vec<EdgeId>> = Vec::new();
    let mut chosen: Vec<EdgeId> = Vec::new();

    fn connectable(uf: &UnionFind, edges: &[(Vertex, Vertex)], components: usize) -> bool {
        let mut uf = uf.clone();
        let mut comps = components;
        for &(u, v) in edges {
            if uf.union(u, v) {
                comps -= 1;
            }
        }
        comps == 1
    }

    fn recurse(
        edges: &[(Vertex, Vertex, EdgeId)],
        idx: usize,
        uf: &UnionFind,
        components: usize,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if components == 1 {
            out.push(chosen.clone());
            return;
        }
        if idx == edges.len() {
            return;
        }
        let (u, v, id) = edges[idx];
        let mut uf_inc = uf.clone();
        if uf_inc.union(u, v) {
            chosen.push(id);
            recurse(edges, idx + 1, &uf_inc, components - 1, chosen, out);
            chosen.pop();
        }
        // exclude branch, but only if the rest can still connect everything
        let rest: Vec<(Vertex, Vertex)> = edges[idx + 1..].iter().map(|&(a, b, _)| (a, b)).collect();
        if connectable(uf, &rest, components) {
            recurse(edges, idx + 1, uf, components, chosen, out);
        }
    }

    let flat: Vec<(Vertex, Vertex, EdgeId)> =
        edges.iter().map(|e| (e.init, e.fin, e.id)).collect();
    recurse(&flat, 0, &UnionFind::new(n), n, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

/// Root the given spanning tree at `root` and split its edges into those
/// pointing toward the root and those pointing away; `k` counts the away
/// edges.
pub fn classify(d: &Digraph, tree: &[EdgeId], root: Vertex) -> Result<KTree> {
    let n = d.vertex_count();
    if tree.len() + 1 != n {
        return Err(Error::input("edge set has the wrong size for a spanning tree"));
    }
    if root >= n {
        return Err(Error::input("root out of range"));
    }
    // adjacency of the tree: vertex -> (neighbor, edge id, edge points out of vertex)
    let mut adj: Vec<Vec<(Vertex, EdgeId, bool)>> = vec![Vec::new(); n];
    for &id in tree {
        let e = d.edge(id)?;
        if e.init == e.fin {
            return Err(Error::input("loops cannot be spanning tree edges"));
        }
        adj[e.init].push((e.fin, id, true));
        adj[e.fin].push((e.init, id, false));
    }
    // BFS from the root; every non-root vertex gets a parent edge.
    let mut parent_edge: Vec<Option<(EdgeId, bool)>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &(w, id, v_is_init) in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                reached += 1;
                // the edge joins child w to parent v; it points away from
                // the root exactly when the parent is its initial vertex
                parent_edge[w] = Some((id, v_is_init));
                queue.push_back(w);
            }
        }
    }
    if reached != n {
        return Err(Error::input("edge set is not spanning (cycle or disconnection)"));
    }
    let mut away: Vec<EdgeId> = parent_edge
        .iter()
        .flatten()
        .filter(|&&(_, parent_is_init)| parent_is_init)
        .map(|&(id, _)| id)
        .collect();
    away.sort_unstable();
    let mut edges = tree.to_vec();
    edges.sort_unstable();
    let k = away.len();
    Ok(KTree {
        edges,
        root,
        away_edges: away,
        k,
    })
}

/// The coefficient vector `c_0 .. c_{n-1}`: `c_k` counts spanning trees of
/// classification `k` at the given root.
pub fn ck_vector(d: &EulerianDigraph, root: Vertex) -> Result<Vec<BigInt>> {
    let n = d.graph().vertex_count();
    let mut counts = vec![BigInt::zero(); n];
    for tree in spanning_trees(d.graph())? {
        let kt = classify(d.graph(), &tree, root)?;
        counts[kt.k] += 1;
    }
    Ok(counts)
}

/// Spanning trees all of whose edges point away from `root`: the unique
/// directed path from the root reaches every vertex.
pub fn arborescences(d: &Digraph, root: Vertex) -> Result<Vec<Vec<EdgeId>>> {
    let n = d.vertex_count();
    Ok(spanning_trees(d)?
        .into_iter()
        .filter(|t| classify(d, t, root).map(|kt| kt.k == n - 1).unwrap_or(false))
        .collect())
}

/// Number of Eulerian tours that begin with the edge `start`, counted by
/// exhaustive backtracking.
pub fn count_eulerian_tours(d: &EulerianDigraph, start: EdgeId) -> Result<BigInt> {
    let g = d.graph();
    let e0 = g.edge(start)?;
    let m = g.edge_count();
    if m > 20 {
        return Err(Error::input("tour enumeration limited to 20 edges"));
    }
    let mut out_by_vertex: Vec<Vec<(usize, Vertex)>> = vec![Vec::new(); g.vertex_count()];
    for (pos, e) in g.edges().iter().enumerate() {
        out_by_vertex[e.init].push((pos, e.fin));
    }
    let start_pos = g
        .edges()
        .iter()
        .position(|e| e.id == start)
        .expect("edge exists");

    fn recurse(
        out_by_vertex: &[Vec<(usize, Vertex)>],
        used: &mut Vec<bool>,
        cur: Vertex,
        remaining: usize,
        home: Vertex,
        count: &mut u64,
    ) {
        if remaining == 0 {
            if cur == home {
                *count += 1;
            }
            return;
        }
        for &(pos, to) in &out_by_vertex[cur] {
            if !used[pos] {
                used[pos] = true;
                recurse(out_by_vertex, used, to, remaining - 1, home, count);
                used[pos] = false;
            }
        }
    }

    let mut used = vec![false; m];
    used[start_pos] = true;
    let mut count = 0u64;
    recurse(&out_by_vertex, &mut used, e0.fin, m - 1, e0.init, &mut count);
    Ok(BigInt::from(count))
}

/// Number of spanning trees oriented toward `root` (0-spanning trees), by
/// the directed matrix-tree theorem: the determinant of the out-degree
/// Laplacian with the root row and column removed. Loops cancel out.
pub fn c0_matrix_tree(d: &Digraph, root: Vertex) -> BigInt {
    let n = d.vertex_count();
    if n == 1 {
        return BigInt::one();
    }
    // position of each non-root vertex in the reduced matrix
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    #[allow(clippy::needless_range_loop)]
    for v in 0..n {
        if v != root {
            pos[v] = next;
            next += 1;
        }
    }
    let mut m = vec![vec![0i128; n - 1]; n - 1];
    for e in d.edges() {
        if e.init == e.fin || e.init == root {
            continue;
        }
        let i = pos[e.init];
        m[i][i] += 1;
        if e.fin != root {
            m[i][pos[e.fin]] -= 1;
        }
    }
    if let Some(det) = crate::matrix::bareiss_det_i128(m.clone()) {
        return BigInt::from(det);
    }
    let big: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_det(big)
}

/// All cycle-free edge subsets (forests), via union-find backtracking.
pub fn forests(d: &Digraph) -> Vec<Vec<EdgeId>> {
    let n = d.vertex_count();
    let flat: Vec<(Vertex, Vertex, EdgeId)> = d
        .edges()
        .iter()
        .map(|e| (e.init, e.fin, e.id))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();

    fn recurse(
        flat: &[(Vertex, Vertex, EdgeId)],
        idx: usize,
        uf: &UnionFind,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if idx == flat.len() {
            out.push(chosen.clone());
            return;
        }
        let (u, v, id) = flat[idx];
        let mut uf_inc = uf.clone();
        if u != v && uf_inc.union(u, v) {
            chosen.push(id);
            recurse(flat, idx + 1, &uf_inc, chosen, out);
            chosen.pop();
        }
        recurse(flat, idx + 1, uf, chosen, out);
    }

    recurse(&flat, 0, &UnionFind::new(n), &mut chosen, &mut out);
    out.sort();
    out
}

/// `Σ_{cycle-free E', |E'| = j} c0(D/E', r)` for every forest size `j`.
/// This is the shared kernel of the inclusion-exclusion formula and the
/// volume expansion.
pub fn contraction_c0_by_size(d: &EulerianDigraph, root: Vertex) -> Result<Vec<BigInt>> {
    let n = d.graph().vertex_count();
    let mut sums = vec![BigInt::zero(); n];
    for forest in forests(d.graph()) {
        let j = forest.len();
        let set: BTreeSet<EdgeId> = forest.iter().copied().collect();
        let contraction = d.graph().contract(&set)?;
        let mapped_root = contraction.vertex_map[root];
        sums[j] += c0_matrix_tree(&contraction.graph, mapped_root);
    }
    Ok(sums)
}

/// The inclusion-exclusion evaluation of `c_k`:
/// `Σ_{i=0..k} (-1)^i Σ_{cycle-free E', |E'|=k-i} C(n-1-(k-i), i) · c0(D/E', r)`.
pub fn ck_inclusion_exclusion(d: &EulerianDigraph, root: Vertex, k: usize) -> Result<BigInt> {
    let sums = contraction_c0_by_size(d, root)?;
    Ok(ck_from_contraction_sums(d.graph().vertex_count(), &sums, k))
}

/// Whole vector of inclusion-exclusion values, sharing one forest sweep.
pub fn ck_inclusion_exclusion_vector(d: &EulerianDigraph, root: Vertex) -> Result<Vec<BigInt>> {
    let n = d.graph().vertex_count();
    let sums = contraction_c0_by_size(d, root)?;
    Ok((0..n)
        .map(|k| ck_from_contraction_sums(n, &sums, k))
        .collect())
}

fn ck_from_contraction_sums(n: usize, sums: &[BigInt], k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let size = k - i;
        if size >= sums.len() {
            continue;
        }
        let coeff = binomial(n - 1 - size, i);
        let term = &coeff * &sums[size];
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct EulerianTour {
    pub edges: Vec<EdgeId>,
}

impl EulerianTour {
    /// Checks the tour uses every edge exactly once and closes up.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.edges.len() != d.edge_count() {
            return Err(Error::input("tour does not use every edge"));
        }
        let mut seen = BTreeSet::new();
        for w in 0..self.edges.len() {
            let here = d.edge(self.edges[w])?;
            let next = d.edge(self.edges[(w + 1) % self.edges.len()])?;
            if here.fin != next.init {
                return Err(Error::input(format!(
                    "tour breaks between edges {} and {}",
                    here.id, next.id
                )));
            }
            if !seen.insert(here.id) {
                return Err(Error::input(format!("edge {} repeated in tour", here.id)));
            }
        }
        Ok(())
    }
}
