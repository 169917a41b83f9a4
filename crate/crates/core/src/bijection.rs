//! The weight-preserving bijection between spanning trees of the dual
//! dimap and Crowell arborescences of the medial digraph: the transition
//! map Φ from trees to Eulerian tours, the first-entry map Ψ from tours to
//! arborescences, their composition F, the monomial weight relation
//! `|wt_C(F(T))| = wt_K(T)·t^{m₂−1}`, and the supporting lemma statements
//! as checkable predicates.
//!
//! Pairing convention of Φ at the crossing of a dual edge `e` (slots as in
//! `links`): when `e` is in the tree the tour turns around the vertex
//! corners (in-slot 1 → out-slot 2, in-slot 3 → out-slot 0), running
//! parallel to `e`; when `e` is not in the tree it turns around the face
//! corners (1 → 0, 3 → 2), crossing `e` transversally. Tree inputs always
//! produce a single closed tour; a split is an internal error.

use crate::graphs::{EdgeId, RegionKind, VClass, Vertex};
use crate::links::{CrowellGraph, GoldBlue, LinkDiagram};
use crate::trees::{arborescences, classify, spanning_trees, EulerianTour};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// The in-slot → out-slot pairing at every crossing determined by a
/// spanning tree of the dual dimap.
#[derive(Clone, Debug)]
pub struct TourPairing {
    /// For each crossing, `out_slot[s]` for the two in-slots s ∈ {1, 3}
    /// stored as `[out_for_slot1, out_for_slot3]`.
    pub pairs: Vec<[u8; 2]>,
}

pub fn tour_pairing(l: &LinkDiagram, tree: &[EdgeId]) -> TourPairing {
    let tree_set: BTreeSet<EdgeId> = tree.iter().copied().collect();
    let pairs = (0..l.crossing_count())
        .map(|c| {
            if tree_set.contains(&c) {
                [2u8, 0u8] // parallel to the tree edge: around vertex corners
            } else {
                [0u8, 2u8] // transversal: around face corners
            }
        })
        .collect();
    TourPairing { pairs }
}

/// Φ: follow the pairing from `f_v`; the result must be a single Eulerian
/// tour of the medial digraph visiting every arc once.
pub fn phi(l: &LinkDiagram, tree: &[EdgeId]) -> Result<EulerianTour> {
    let pairing = tour_pairing(l, tree);
    let m = l.medial.arc_count();
    let mut edges = Vec::with_capacity(m);
    let mut used = vec![false; m];
    let mut arc = l.f_v;
    loop {
        if used[arc] {
            return Err(Error::inconsistency(
                "tour pairing revisited an arc before closing",
            ));
        }
        used[arc] = true;
        edges.push(arc);
        let fin_crossing = l.medial.arcs[arc].fin;
        let in_slot = l.medial.arcs[arc].fin_slot;
        let out_slot = match in_slot {
            1 => pairing.pairs[fin_crossing][0],
            3 => pairing.pairs[fin_crossing][1],
            other => {
                return Err(Error::inconsistency(format!(
                    "arc {arc} arrives at slot {other}, expected an in-slot"
                )))
            }
        };
        let next = l.medial.slots[fin_crossing][out_slot as usize];
        debug_assert!(!next.is_fin);
        arc = next.arc;
        if arc == l.f_v {
            break;
        }
    }
    if edges.len() != m {
        return Err(Error::inconsistency(format!(
            "tour pairing split into cycles: covered {} of {m} arcs",
            edges.len()
        )));
    }
    Ok(EulerianTour { edges })
}

/// Ψ: trace the tour (which begins with `f_v` and enters the root) and keep
/// the first arc entering every non-root vertex. The result is an
/// arborescence rooted at `v0`.
pub fn psi(l: &LinkDiagram, cg: &CrowellGraph, tour: &EulerianTour) -> Result<Vec<usize>> {
    if tour.edges.first() != Some(&l.f_v) {
        return Err(Error::input("tour must begin with f_v"));
    }
    tour.validate(&cg.digraph)?;
    let root = l.v0;
    let n = cg.digraph.vertex_count();
    let mut first_in: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &arc in &tour.edges {
        let fin = l.medial.arcs[arc].fin;
        if fin != root {
            first_in.entry(fin).or_insert(arc);
        }
    }
    if first_in.len() + 1 != n {
        return Err(Error::inconsistency("tour missed a vertex"));
    }
    let mut selected: Vec<usize> = first_in.values().copied().collect();
    selected.sort_unstable();
    // must be an arborescence rooted at v0
    let kt = classify(&cg.digraph, &selected, root)
        .map_err(|e| Error::inconsistency(format!("first-entry set is not a tree: {e}")))?;
    if kt.k != n - 1 {
        return Err(Error::inconsistency(
            "first-entry tree is not an arborescence rooted at v0",
        ));
    }
    Ok(selected)
}

/// F = Ψ ∘ Φ.
pub fn big_f(l: &LinkDiagram, cg: &CrowellGraph, tree: &[EdgeId]) -> Result<Vec<usize>> {
    let tour = phi(l, tree)?;
    psi(l, cg, &tour)
}

/// One row of the tree ↔ arborescence table.
#[derive(Clone, Debug)]
pub struct BijectionRow {
    pub tree: Vec<EdgeId>,
    pub k: usize,
    pub kauffman_degree: usize,
    pub arborescence: Vec<usize>,
    pub crowell_degree: usize,
    pub weight_ok: bool,
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    pub rows: Vec<BijectionRow>,
    pub m2: usize,
    pub bijective: bool,
    pub violations: Vec<String>,
}

impl WeightReport {
    pub fn all_ok(&self) -> bool {
        self.bijective && self.violations.is_empty() && self.rows.iter().all(|r| r.weight_ok)
    }
}

/// Check, tree by tree, that F is injective onto the arborescences rooted
/// at `v0` and that `|wt_C(F(T))| = wt_K(T) · t^{m₂−1}` as monomials.
pub fn verify_weight_relation(
    l: &LinkDiagram,
    cg: &CrowellGraph,
    gb: &GoldBlue,
) -> Result<WeightReport> {
    let d = l.dual.graph();
    let root_r = l.exterior_vertex;
    let m2 = gb.m2();
    let trees = spanning_trees(d)?;
    let mut rows = Vec::with_capacity(trees.len());
    let mut violations = Vec::new();
    let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
    for tree in trees {
        let kt = classify(d, &tree, root_r)?;
        let kauffman_degree = tree.len() - kt.k;
        let arb = big_f(l, cg, &tree)?;
        let crowell_degree = arb.iter().filter(|&&a| cg.gold[a]).count();
        let weight_ok = crowell_degree == kauffman_degree + m2 - 1;
        if !weight_ok {
            violations.push(format!(
                "tree {tree:?}: wt_C degree {crowell_degree} != wt_K degree {kauffman_degree} + m2-1 ({})",
                m2 - 1
            ));
        }
        if !images.insert(arb.clone()) {
            violations.push(format!("tree {tree:?}: image arborescence repeated"));
        }
        rows.push(BijectionRow {
            tree,
            k: kt.k,
            kauffman_degree,
            arborescence: arb,
            crowell_degree,
            weight_ok,
        });
    }
    // surjectivity: the image is exactly the arborescence set
    let all_arbs: BTreeSet<Vec<usize>> = arborescences(&cg.digraph, l.v0)?
        .into_iter()
        .collect();
    let bijective = images == all_arbs;
    if !bijective {
        violations.push(format!(
            "image has {} arborescences, target has {}",
            images.len(),
            all_arbs.len()
        ));
    }
    Ok(WeightReport {
        rows,
        m2,
        bijective,
        violations,
    })
}

/// The four supporting lemma statements, evaluated verbatim on every
/// spanning tree. Violations are reported, not fatal.
#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    pub trees_checked: usize,
    /// `f_e` is blue iff `e` is an away edge.
    pub fe_color_violations: Vec<String>,
    /// A blue edge whose head is no tree crossing lies in F(T) iff it is
    /// not the last boundary edge of its region in Φ(T).
    pub last_edge_violations: Vec<String>,
    /// The last boundary edge of a blue region never ends at a tree
    /// crossing.
    pub overlap_violations: Vec<String>,
    /// Between the two entries of Φ(T) into v_{e₁} the tour avoids the
    /// crossings of the other tree edges at the shared endpoint.
    pub path_violations: Vec<String>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.fe_color_violations.is_empty()
            && self.last_edge_violations.is_empty()
            && self.overlap_violations.is_empty()
            && self.path_violations.is_empty()
    }
}

pub fn lemma_checks(l: &LinkDiagram, cg: &CrowellGraph, gb: &GoldBlue) -> Result<LemmaReport> {
    let d = l.dual.graph();
    let root_r = l.exterior_vertex;
    let blue_region_set: BTreeSet<usize> = gb.blue_regions.iter().copied().collect();
    let mut report = LemmaReport::default();

    for tree in spanning_trees(d)? {
        report.trees_checked += 1;
        let kt = classify(d, &tree, root_r)?;
        let away: BTreeSet<EdgeId> = kt.away_edges.iter().copied().collect();
        let tour = phi(l, &tree)?;
        let ftree: BTreeSet<usize> = psi(l, cg, &tour)?.into_iter().collect();
        let tree_set: BTreeSet<EdgeId> = tree.iter().copied().collect();
        let tour_pos: BTreeMap<usize, usize> = tour
            .edges
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, i))
            .collect();

        // f_e: first tour arc entering the crossing of e (defined when the
        // crossing is not the root v0)
        let mut f_e: BTreeMap<EdgeId, usize> = BTreeMap::new();
        for &arc in &tour.edges {
            let fin = l.medial.arcs[arc].fin;
            if fin != l.v0 && tree_set.contains(&fin) {
                f_e.entry(fin).or_insert(arc);
            }
        }

        // Lemma: f_e is blue iff e points away from the root.
        for (&e, &fe) in &f_e {
            let fe_blue = !cg.gold[fe];
            if fe_blue != away.contains(&e) {
                report.fe_color_violations.push(format!(
                    "tree {tree:?}: f_e of edge {e} is {} but edge is {}",
                    if fe_blue { "blue" } else { "gold" },
                    if away.contains(&e) { "away" } else { "toward" },
                ));
            }
        }

        // last boundary arc of each blue region in the tour
        let mut last_of_region: BTreeMap<usize, usize> = BTreeMap::new();
        for &rid in &blue_region_set {
            let last = l.medial.regions[rid]
                .arcs
                .iter()
                .copied()
                .max_by_key(|a| tour_pos[a])
                .expect("regions have boundary");
            last_of_region.insert(rid, last);
        }

        // Lemma (last edge): for blue arcs f whose head is no tree
        // crossing, f ∈ F(T) iff f is not the last arc of its blue region.
        // The arc entering the root (possible here only when e0 ∉ T) can
        // never be selected by Ψ, and indeed always comes last.
        for (arc, meta) in l.medial.arcs.iter().enumerate() {
            if cg.gold[arc] || tree_set.contains(&meta.fin) {
                continue;
            }
            let rid = l.medial.vertex_region_of_arc(arc);
            let is_last = last_of_region.get(&rid) == Some(&arc);
            let in_ftree = ftree.contains(&arc);
            if in_ftree == is_last {
                report.last_edge_violations.push(format!(
                    "tree {tree:?}: blue arc {arc} last={is_last} in_F={in_ftree}"
                ));
            }
        }

        // Lemma (overlap): the last arc of a blue region never ends at the
        // crossing of a tree edge.
        for (&rid, &last) in &last_of_region {
            let fin = l.medial.arcs[last].fin;
            if tree_set.contains(&fin) {
                report.overlap_violations.push(format!(
                    "tree {tree:?}: last arc {last} of blue region {rid} ends at tree crossing {fin}"
                ));
            }
        }

        // Lemma (paths): for e1 ∈ T with f = f_{e1} bounding the region of
        // a shared endpoint w, the tour portion between f and the other
        // entry g of v_{e1} avoids v_{e2} for every other tree edge e2 at w.
        for (&e1, &f) in &f_e {
            let edge1 = d.edge(e1)?;
            let v_e1 = e1;
            // the other arc entering the crossing
            let g = l
                .medial
                .arcs
                .iter()
                .enumerate()
                .filter(|(a, meta)| *a != f && meta.fin == v_e1)
                .map(|(a, _)| a)
                .next()
                .ok_or_else(|| Error::inconsistency("crossing with one in-arc"))?;
            let f_region = l.medial.face_region_of_arc(f);
            for &w in &[edge1.init, edge1.fin] {
                let w_region = l
                    .medial
                    .regions
                    .iter()
                    .position(|r| r.kind == RegionKind::FaceRegion(w));
                if w_region != Some(f_region) {
                    continue;
                }
                let (i, j) = (tour_pos[&f], tour_pos[&g]);
                if i >= j {
                    report.path_violations.push(format!(
                        "tree {tree:?}: f_e of {e1} not before its partner in the tour"
                    ));
                    continue;
                }
                let interior: BTreeSet<Vertex> = tour.edges[i + 1..j]
                    .iter()
                    .map(|&a| l.medial.arcs[a].fin)
                    .collect();
                for &e2 in &tree_set {
                    if e2 == e1 {
                        continue;
                    }
                    let edge2 = d.edge(e2)?;
                    let incident = edge2.init == w || edge2.fin == w;
                    if incident && interior.contains(&e2) {
                        report.path_violations.push(format!(
                            "tree {tree:?}: excursion of edge {e1} at vertex {w} meets crossing {e2}"
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Kauffman weight degree of a tree: `|Edg(T) \ Edg_away(T)|`.
pub fn kauffman_weight_degree(l: &LinkDiagram, tree: &[EdgeId]) -> Result<usize> {
    let kt = classify(l.dual.graph(), tree, l.exterior_vertex)?;
    Ok(tree.len() - kt.k)
}

/// The A-class vertices of the source graph index the blue regions; this
/// cross-check ties the region classification to the bipartition.
pub fn blue_regions_match_classes(l: &LinkDiagram, gb: &GoldBlue) -> bool {
    let blue_vertices: BTreeSet<Vertex> = gb
        .blue_regions
        .iter()
        .filter_map(|&rid| match l.medial.regions[rid].kind {
            RegionKind::VertexRegion(v) => Some(v),
            RegionKind::FaceRegion(_) => None,
        })
        .collect();
    let b_class: BTreeSet<Vertex> = (0..l.source.graph().vertex_count())
        .filter(|&v| l.source.color(v) == VClass::B)
        .collect();
    blue_vertices == b_class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::{build_models, LinkModels};
    use crate::graphs::{Digraph, PlanarBipartiteGraph, RotationSystem};

    fn theta_models() -> LinkModels {
        let g = Digraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0, 2, 4], vec![5, 3, 1]]).unwrap();
        let pb = PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap();
        build_models(&pb).unwrap()
    }

    fn hopf_models() -> LinkModels {
        let g = Digraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0, 2], vec![3, 1]]).unwrap();
        let pb = PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap();
        build_models(&pb).unwrap()
    }

    fn square_models() -> LinkModels {
        let g = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rot =
            RotationSystem::new(&g, vec![vec![0, 7], vec![2, 1], vec![4, 3], vec![6, 5]]).unwrap();
        let pb = PlanarBipartiteGraph::new(
            g,
            rot,
            vec![VClass::A, VClass::B, VClass::A, VClass::B],
        )
        .unwrap();
        build_models(&pb).unwrap()
    }

    #[test]
    fn phi_gives_distinct_tours() {
        let m = theta_models();
        let trees = spanning_trees(m.diagram.dual.graph()).unwrap();
        assert_eq!(trees.len(), 3);
        let tours: BTreeSet<Vec<usize>> = trees
            .iter()
            .map(|t| phi(&m.diagram, t).unwrap().edges)
            .collect();
        assert_eq!(tours.len(), 3);
        for t in &tours {
            assert_eq!(t.len(), 6);
            assert_eq!(t[0], m.diagram.f_v);
        }
    }

    #[test]
    fn hopf_tours() {
        let m = hopf_models();
        let trees = spanning_trees(m.diagram.dual.graph()).unwrap();
        let tours: BTreeSet<Vec<usize>> = trees
            .iter()
            .map(|t| phi(&m.diagram, t).unwrap().edges)
            .collect();
        assert_eq!(tours.len(), 2);
    }

    #[test]
    fn psi_sizes() {
        let m = theta_models();
        for tree in spanning_trees(m.diagram.dual.graph()).unwrap() {
            let arb = big_f(&m.diagram, &m.crowell, &tree).unwrap();
            assert_eq!(arb.len(), m.diagram.crossing_count() - 1);
        }
    }

    #[test]
    fn weight_relation_trefoil_degrees() {
        let m = theta_models();
        let report = verify_weight_relation(&m.diagram, &m.crowell, &m.gold_blue).unwrap();
        assert!(report.all_ok(), "{:?}", report.violations);
        assert_eq!(report.m2, 1);
        // trees with k = 0,1,2 map to Crowell degrees 2,1,0
        let mut pairs: Vec<(usize, usize)> = report
            .rows
            .iter()
            .map(|r| (r.k, r.crowell_degree))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn weight_relation_hopf_and_square() {
        let m = hopf_models();
        let report = verify_weight_relation(&m.diagram, &m.crowell, &m.gold_blue).unwrap();
        assert!(report.all_ok(), "{:?}", report.violations);
        let mut pairs: Vec<(usize, usize)> = report
            .rows
            .iter()
            .map(|r| (r.k, r.crowell_degree))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);

        let m = square_models();
        let report = verify_weight_relation(&m.diagram, &m.crowell, &m.gold_blue).unwrap();
        assert!(report.all_ok(), "{:?}", report.violations);
        assert_eq!(report.m2, 2);
        let mut degrees: Vec<usize> = report.rows.iter().map(|r| r.crowell_degree).collect();
        degrees.sort();
        // wt_K degrees {1,1,0,0} shifted by t^{m2-1}
        assert_eq!(degrees, vec![1, 1, 2, 2]);
    }

    #[test]
    fn lemmas_hold_on_fixtures() {
        for m in [theta_models(), hopf_models(), square_models()] {
            let report = lemma_checks(&m.diagram, &m.crowell, &m.gold_blue).unwrap();
            assert!(
                report.all_ok(),
                "fe: {:?}\nlast: {:?}\noverlap: {:?}\npaths: {:?}",
                report.fe_color_violations,
                report.last_edge_violations,
                report.overlap_violations,
                report.path_violations,
            );
        }
    }

    #[test]
    fn blue_matches_b_class() {
        for m in [theta_models(), hopf_models(), square_models()] {
            assert!(blue_regions_match_classes(&m.diagram, &m.gold_blue));
        }
    }

    #[test]
    fn weight_relation_holds_for_every_admissible_e0() {
        use crate::links::{build_link_with_e0, crowell_graph, gold_blue_regions};
        for m in [theta_models(), hopf_models(), square_models()] {
            let g = m.diagram.source.clone();
            let r = m.diagram.exterior_vertex;
            for e in m.diagram.dual.graph().edges() {
                if e.fin != r {
                    continue;
                }
                let l = build_link_with_e0(&g, Some(e.id)).unwrap();
                let cg = crowell_graph(&l).unwrap();
                let gb = gold_blue_regions(&l, &cg).unwrap();
                let report = verify_weight_relation(&l, &cg, &gb).unwrap();
                assert!(report.all_ok(), "e0={}: {:?}", e.id, report.violations);
                let lemmas = lemma_checks(&l, &cg, &gb).unwrap();
                assert!(lemmas.all_ok(), "e0={}", e.id);
            }
        }
    }
}
