//! Positive special alternating link diagrams built from planar bipartite
//! graphs, and the two state models over them: Kauffman states (spanning
//! trees of the checkerboard graph with corner markers) and the Crowell
//! weighted arborescence model.
//!
//! Local conventions at the crossing of a primal edge (A endpoint `a`,
//! B endpoint `b`, dual edge oriented with `a` on its left), with the four
//! medial arc ends in counterclockwise slot order 0..3:
//!
//! ```text
//!        fin(dual) region, label -1
//!      1                           0
//!        \    (out, under)  (out, over)    slot 0: init end of arc(a->b dart)
//!   a     \                /              slot 1: fin end of its face-predecessor
//! label t  \              /      b        slot 2: init end of arc(b->a dart)
//!           >   crossing <   label 1      slot 3: fin end of its face-predecessor
//!          /               \
//!        /   (in, over)  (in, under)
//!      2                           3
//!        init(dual) region, label -t   <- black hole corner (both strands in)
//! ```
//!
//! In the link orientation an arc runs with its stored (face-traversal)
//! direction exactly when it hugs a B-class corner; every crossing is
//! positive, the over strand being the slot 2 -> slot 0 diagonal. The
//! Crowell digraph orients every arc by its stored direction (over end to
//! under end) and weights it -t when it hugs an A corner and 1 on a B
//! corner; around each clockwise-bounded region the weights are constant,
//! which is asserted, never assumed.

use crate::graphs::{
    medial_graph, planar_dual, AlternatingDimap, Digraph, DualResult, EdgeId, EulerianDigraph,
    Medial, PlanarBipartiteGraph, RegionKind, UnionFind, VClass, Vertex,
};
use crate::poly::IntPoly;
use crate::trees::{arborescences, classify, spanning_trees};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;

/// A combinatorial diagram of a positive special alternating link: the
/// medial 4-regular plane graph of the source bipartite graph, its regions,
/// the dual alternating dimap, and the marked-region data the state models
/// and the bijection need.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    pub source: PlanarBipartiteGraph,
    pub dual: AlternatingDimap,
    pub medial: Medial,
    /// Dual vertex (= primal face) of the unbounded region.
    pub exterior_vertex: Vertex,
    /// Region index of the unbounded region (first marked region).
    pub exterior_region: usize,
    /// Region index of the second marked region, adjacent across `f_v`.
    pub marked_region: usize,
    /// Lowest-id dual edge with final vertex at the exterior dual vertex.
    pub e0: EdgeId,
    /// The crossing of `e0`.
    pub v0: usize,
    /// The exterior-boundary arc whose Crowell direction ends at `v0`.
    pub f_v: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerLabel {
    T,
    One,
    NegT,
    NegOne,
}

impl CornerLabel {
    pub fn degree(self) -> usize {
        matches!(self, CornerLabel::T | CornerLabel::NegT) as usize
    }

    pub fn negative(self) -> bool {
        matches!(self, CornerLabel::NegT | CornerLabel::NegOne)
    }
}

impl LinkDiagram {
    pub fn crossing_count(&self) -> usize {
        self.medial.crossings
    }

    /// All crossings are positive in this construction.
    pub fn crossing_sign(&self, _c: usize) -> i8 {
        1
    }

    /// The four strand ends at a crossing in rotation order, as
    /// (arc, arrives-here) pairs; the over strand is the (2, 0) diagonal in
    /// the link orientation.
    pub fn strand_ends(&self, c: usize) -> [(usize, bool); 4] {
        let slots = &self.medial.slots[c];
        [
            (slots[0].arc, slots[0].is_fin),
            (slots[1].arc, slots[1].is_fin),
            (slots[2].arc, slots[2].is_fin),
            (slots[3].arc, slots[3].is_fin),
        ]
    }

    /// True when the link orientation of the arc agrees with its stored
    /// (face-traversal) direction.
    pub fn link_forward(&self, arc: usize) -> bool {
        self.source.color(self.medial.arcs[arc].hug_vertex) == VClass::B
    }

    /// The Kauffman label of the four corner regions at a crossing, by
    /// region index.
    pub fn corner_label(&self, crossing: usize, region: usize) -> Result<CornerLabel> {
        let e = &self.source.graph().edges()[crossing];
        let (a_end, b_end) = if self.source.color(e.init) == VClass::A {
            (e.init, e.fin)
        } else {
            (e.fin, e.init)
        };
        let dual_edge = self.dual.graph().edge(crossing)?;
        let kind = self.medial.regions[region].kind;
        match kind {
            RegionKind::VertexRegion(v) if v == a_end => Ok(CornerLabel::T),
            RegionKind::VertexRegion(v) if v == b_end => Ok(CornerLabel::One),
            RegionKind::FaceRegion(f) if f == dual_edge.fin => Ok(CornerLabel::NegOne),
            RegionKind::FaceRegion(f) if f == dual_edge.init => Ok(CornerLabel::NegT),
            _ => Err(Error::input(format!(
                "region {region} does not meet crossing {crossing}"
            ))),
        }
    }

    /// The region holding the marker is a black hole when it sits in the
    /// corner between the two incoming strand ends, which for a positive
    /// special alternating crossing is the tail region of the dual edge.
    pub fn is_black_hole(&self, crossing: usize, region: usize) -> Result<bool> {
        Ok(self.corner_label(crossing, region)? == CornerLabel::NegT)
    }
}

/// Build the diagram: medial graph, regions, dual dimap, orientations, and
/// the deterministic marked-region choice (the unbounded region plus the
/// vertex region across `f_v`).
pub fn build_link(g: &PlanarBipartiteGraph) -> Result<LinkDiagram> {
    build_link_with_e0(g, None)
}

/// Same construction with an explicit distinguished edge `e0` (which must
/// end at the exterior dual vertex). The default is the lowest-id choice;
/// canonical results are independent of it, and tests exercise that.
pub fn build_link_with_e0(g: &PlanarBipartiteGraph, e0: Option<EdgeId>) -> Result<LinkDiagram> {
    let DualResult {
        dimap,
        faces: _,
        outer_face,
    } = planar_dual(g)?;
    let (medial, _) = medial_graph(g)?;

    // Region orientation coherence: vertex regions are traversed against
    // the stored arc directions, face regions along them.
    let mut exterior_region = None;
    for (rid, region) in medial.regions.iter().enumerate() {
        let all_odd = region.darts.iter().all(|d| d % 2 == 1);
        let all_even = region.darts.iter().all(|d| d % 2 == 0);
        match region.kind {
            RegionKind::VertexRegion(_) => {
                if !all_odd {
                    return Err(Error::inconsistency(
                        "vertex region boundary not clockwise-coherent",
                    ));
                }
            }
            RegionKind::FaceRegion(f) => {
                if !all_even {
                    return Err(Error::inconsistency(
                        "face region boundary not counterclockwise-coherent",
                    ));
                }
                if f == outer_face {
                    exterior_region = Some(rid);
                }
            }
        }
    }
    let exterior_region =
        exterior_region.ok_or_else(|| Error::inconsistency("unbounded region not found"))?;

    // e0: a dual edge into the exterior vertex (lowest id by default);
    // v0 its crossing.
    let e0 = match e0 {
        Some(id) => {
            let e = dimap.graph().edge(id)?;
            if e.fin != outer_face {
                return Err(Error::input(format!(
                    "edge {id} does not end at the exterior vertex"
                )));
            }
            id
        }
        None => dimap
            .graph()
            .edges()
            .iter()
            .find(|e| e.fin == outer_face)
            .map(|e| e.id)
            .ok_or_else(|| Error::inconsistency("exterior vertex has no incoming dual edge"))?,
    };
    let v0 = e0;

    // f_v: the exterior-boundary arc ending at v0 (lowest id when the
    // boundary passes v0 more than once, which only loops produce).
    let f_v = medial.regions[exterior_region]
        .arcs
        .iter()
        .copied()
        .filter(|&a| medial.arcs[a].fin == v0)
        .min()
        .ok_or_else(|| Error::inconsistency("no exterior-boundary arc ends at v0"))?;
    let marked_region = medial.vertex_region_of_arc(f_v);

    Ok(LinkDiagram {
        source: g.clone(),
        dual: dimap,
        medial,
        exterior_vertex: outer_face,
        exterior_region,
        marked_region,
        e0,
        v0,
        f_v,
    })
}

/// One Kauffman state: the marker bijection from crossings to nonmarked
/// regions induced by a spanning tree of the dual dimap and its dual tree
/// in the checkerboard graph, both rooted at the marked regions.
#[derive(Clone, Debug)]
pub struct KauffmanState {
    /// Spanning tree of the dual dimap.
    pub tree_d: Vec<EdgeId>,
    /// The complementary spanning tree of the source (checkerboard) graph.
    pub tree_g: Vec<EdgeId>,
    /// `(crossing, region, label)` triples, sorted by crossing.
    pub markers: Vec<(usize, usize, CornerLabel)>,
    /// The signed monomial ⟨L|S⟩.
    pub weight: IntPoly,
    pub black_holes: usize,
}

impl KauffmanState {
    /// ⟨L|S⟩·(−1)^{b(S)}
    pub fn signed_weight(&self) -> IntPoly {
        if self.black_holes % 2 == 1 {
            -&self.weight
        } else {
            self.weight.clone()
        }
    }
}

/// Enumerate the states: one per spanning tree of the dual dimap (equally,
/// per spanning tree of the checkerboard graph), markers pointing into each
/// crossing from the initial-vertex region of the rooted tree edges. Uses
/// the diagram's deterministic marked pair.
pub fn kauffman_states(l: &LinkDiagram) -> Result<Vec<KauffmanState>> {
    kauffman_states_with_marks(l, l.exterior_region, l.marked_region)
}

/// States for an arbitrary pair of adjacent marked regions (one region of
/// each checkerboard class; they must share an arc). The canonical value of
/// the state sum does not depend on the choice.
pub fn kauffman_states_with_marks(
    l: &LinkDiagram,
    marked_face_region: usize,
    marked_vertex_region: usize,
) -> Result<Vec<KauffmanState>> {
    let d = l.dual.graph();
    let g = l.source.graph();
    let n_regions_marked: BTreeSet<usize> = [marked_face_region, marked_vertex_region].into();
    if n_regions_marked.len() != 2 {
        return Err(Error::input("marked regions must be distinct"));
    }
    let adjacent = (0..l.medial.arc_count()).any(|a| {
        l.medial.face_region_of_arc(a) == marked_face_region
            && l.medial.vertex_region_of_arc(a) == marked_vertex_region
    });
    if !adjacent {
        return Err(Error::input("marked regions must be adjacent"));
    }
    let RegionKind::FaceRegion(root_d) = l.medial.regions[marked_face_region].kind else {
        return Err(Error::input("first marked region must be a face region"));
    };
    let RegionKind::VertexRegion(root_g) = l.medial.regions[marked_vertex_region].kind else {
        return Err(Error::input("second marked region must be a vertex region"));
    };

    let trees = spanning_trees(d)?;
    let all_ids: BTreeSet<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    let mut states = Vec::with_capacity(trees.len());
    for tree_d in trees {
        let tree_set: BTreeSet<EdgeId> = tree_d.iter().copied().collect();
        let tree_g: Vec<EdgeId> = all_ids.difference(&tree_set).copied().collect();
        // plane duality: the complement must be a spanning tree of G
        let kt_g = classify(g, &tree_g, root_g).map_err(|e| {
            Error::inconsistency(format!("dual complement is not a tree of G: {e}"))
        })?;
        let kt_d = classify(d, &tree_d, root_d)?;
        let away_d: BTreeSet<EdgeId> = kt_d.away_edges.iter().copied().collect();
        let away_g: BTreeSet<EdgeId> = kt_g.away_edges.iter().copied().collect();

        let mut markers = Vec::with_capacity(l.crossing_count());
        for &id in &tree_d {
            // rooted toward root_d: the marker sits at the child endpoint
            let e = d.edge(id)?;
            let child_face = if away_d.contains(&id) { e.fin } else { e.init };
            let region = region_of_kind(l, RegionKind::FaceRegion(child_face))?;
            markers.push((id, region, l.corner_label(id, region)?));
        }
        for &id in &tree_g {
            let e = g.edge(id)?;
            // away edges of the rooted G-tree point from parent=init side
            let child_vertex = if away_g.contains(&id) { e.fin } else { e.init };
            let region = region_of_kind(l, RegionKind::VertexRegion(child_vertex))?;
            markers.push((id, region, l.corner_label(id, region)?));
        }
        markers.sort_by_key(|&(c, _, _)| c);

        // bijectivity onto nonmarked regions
        let mut used = BTreeSet::new();
        for &(_, region, _) in &markers {
            if n_regions_marked.contains(&region) || !used.insert(region) {
                return Err(Error::inconsistency(
                    "state markers do not biject onto nonmarked regions",
                ));
            }
        }

        let mut degree = 0usize;
        let mut negatives = 0usize;
        let mut black_holes = 0usize;
        for &(c, region, label) in &markers {
            degree += label.degree();
            negatives += label.negative() as usize;
            black_holes += l.is_black_hole(c, region)? as usize;
        }
        let coeff = if negatives % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        states.push(KauffmanState {
            tree_d,
            tree_g,
            markers,
            weight: IntPoly::monomial(coeff, degree),
            black_holes,
        });
    }
    Ok(states)
}

fn region_of_kind(l: &LinkDiagram, kind: RegionKind) -> Result<usize> {
    l.medial
        .regions
        .iter()
        .position(|r| r.kind == kind)
        .ok_or_else(|| Error::inconsistency(format!("no region of kind {kind:?}")))
}

/// The raw signed state sum `Σ_S ⟨L|S⟩(−1)^{b(S)}`.
pub fn kauffman_state_sum(l: &LinkDiagram) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for s in kauffman_states(l)? {
        acc = &acc + &s.signed_weight();
    }
    Ok(acc)
}

/// The state sum normalized to the nonnegative Alexander form: substitute
/// `t → −t` and reduce to the canonical `±t^k` representative.
pub fn kauffman_polynomial(l: &LinkDiagram) -> Result<IntPoly> {
    Ok(kauffman_state_sum(l)?.compose_neg_t().canonical())
}

/// The Crowell digraph of the diagram: vertices are crossings, arcs keep
/// their stored over-to-under direction, and `var(e) ∈ {1, −t}` is encoded
/// as a gold flag (`true` = −t).
#[derive(Clone, Debug)]
pub struct CrowellGraph {
    pub digraph: Digraph,
    /// Arc carries weight −t (gold) rather than 1 (blue).
    pub gold: Vec<bool>,
}

impl CrowellGraph {
    pub fn weight_of(&self, arcs: &[usize]) -> IntPoly {
        let gold_count = arcs.iter().filter(|&&a| self.gold[a]).count();
        let coeff = if gold_count % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        IntPoly::monomial(coeff, gold_count)
    }
}

pub fn crowell_graph(l: &LinkDiagram) -> Result<CrowellGraph> {
    let arcs: Vec<(usize, usize)> = l
        .medial
        .arcs
        .iter()
        .map(|a| (a.init, a.fin))
        .collect();
    let digraph = Digraph::new(l.crossing_count(), &arcs)?;
    let eulerian = EulerianDigraph::new(digraph.clone())
        .map_err(|e| Error::inconsistency(format!("Crowell graph not Eulerian: {e}")))?;
    for v in 0..l.crossing_count() {
        if eulerian.out_degree(v) != 2 {
            return Err(Error::inconsistency(format!(
                "Crowell graph vertex {v} has out-degree {}",
                eulerian.out_degree(v)
            )));
        }
    }
    let gold = l
        .medial
        .arcs
        .iter()
        .map(|a| l.source.color(a.hug_vertex) == VClass::A)
        .collect();
    Ok(CrowellGraph { digraph, gold })
}

/// Sum of `wt_C` over all arborescences rooted at `v` (raw, signed).
pub fn crowell_state_sum(cg: &CrowellGraph, v: usize) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for arb in arborescences(&cg.digraph, v)? {
        acc = &acc + &cg.weight_of(&arb);
    }
    Ok(acc)
}

/// Crowell model polynomial, normalized like `kauffman_polynomial`. The
/// canonical form is independent of the root vertex.
pub fn crowell_polynomial(cg: &CrowellGraph, v: usize) -> Result<IntPoly> {
    Ok(crowell_state_sum(cg, v)?.compose_neg_t().canonical())
}

/// The gold/blue classification of the clockwise-bounded regions.
#[derive(Clone, Debug)]
pub struct GoldBlue {
    /// Region indices whose boundary arcs all carry −t.
    pub gold_regions: Vec<usize>,
    /// Region indices whose boundary arcs all carry 1.
    pub blue_regions: Vec<usize>,
}

impl GoldBlue {
    pub fn m1(&self) -> usize {
        self.gold_regions.len()
    }

    pub fn m2(&self) -> usize {
        self.blue_regions.len()
    }
}

/// Classify every clockwise-bounded region of the Crowell graph as gold
/// (all boundary weights −t) or blue (all 1). A mixed region falsifies the
/// exclusivity property and is reported as a violation.
pub fn gold_blue_regions(l: &LinkDiagram, cg: &CrowellGraph) -> Result<GoldBlue> {
    let mut gold_regions = Vec::new();
    let mut blue_regions = Vec::new();
    for (rid, region) in l.medial.regions.iter().enumerate() {
        // clockwise class: the region lies right of every boundary arc
        let clockwise = region.darts.iter().all(|d| d % 2 == 1);
        if !clockwise {
            continue;
        }
        let golds = region.arcs.iter().filter(|&&a| cg.gold[a]).count();
        if golds == region.arcs.len() {
            gold_regions.push(rid);
        } else if golds == 0 {
            blue_regions.push(rid);
        } else {
            return Err(Error::violation(format!(
                "clockwise region {rid} mixes −t and 1 boundary weights"
            )));
        }
    }
    Ok(GoldBlue {
        gold_regions,
        blue_regions,
    })
}

/// Convenience bundle: diagram, Crowell graph, and region classification.
pub struct LinkModels {
    pub diagram: LinkDiagram,
    pub crowell: CrowellGraph,
    pub gold_blue: GoldBlue,
}

pub fn build_models(g: &PlanarBipartiteGraph) -> Result<LinkModels> {
    let diagram = build_link(g)?;
    let crowell = crowell_graph(&diagram)?;
    let gold_blue = gold_blue_regions(&diagram, &crowell)?;
    Ok(LinkModels {
        diagram,
        crowell,
        gold_blue,
    })
}

/// Spanning trees of the checkerboard graph and of the dual dimap are
/// complementary; this helper checks the complement really is a tree, which
/// the state construction relies on.
pub fn dual_tree_complement(l: &LinkDiagram, tree_d: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let g = l.source.graph();
    let tree_set: BTreeSet<EdgeId> = tree_d.iter().copied().collect();
    let complement: Vec<EdgeId> = g
        .edges()
        .iter()
        .map(|e| e.id)
        .filter(|id| !tree_set.contains(id))
        .collect();
    let n = g.vertex_count();
    if complement.len() + 1 != n {
        return Err(Error::inconsistency("complement has the wrong size"));
    }
    let mut uf = UnionFind::new(n);
    for &id in &complement {
        let e = g.edge(id)?;
        if !uf.union(e.init, e.fin) {
            return Err(Error::inconsistency("complement contains a cycle"));
        }
    }
    Ok(complement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::pd;
    use crate::graphs::RotationSystem;

    pub(crate) fn theta() -> PlanarBipartiteGraph {
        let g = Digraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0, 2, 4], vec![5, 3, 1]]).unwrap();
        PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap()
    }

    pub(crate) fn hopf() -> PlanarBipartiteGraph {
        let g = Digraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0, 2], vec![3, 1]]).unwrap();
        PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap()
    }

    pub(crate) fn square() -> PlanarBipartiteGraph {
        let g = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rot = RotationSystem::new(
            &g,
            vec![vec![0, 7], vec![2, 1], vec![4, 3], vec![6, 5]],
        )
        .unwrap();
        PlanarBipartiteGraph::new(
            g,
            rot,
            vec![VClass::A, VClass::B, VClass::A, VClass::B],
        )
        .unwrap()
    }

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn trefoil_diagram_shape() {
        let l = build_link(&theta()).unwrap();
        assert_eq!(l.crossing_count(), 3);
        assert_eq!(l.medial.regions.len(), 5);
        // marked regions are adjacent across f_v
        assert_ne!(l.exterior_region, l.marked_region);
        let fa = &l.medial.arcs[l.f_v];
        assert_eq!(fa.fin, l.v0);
        assert_eq!(l.medial.face_region_of_arc(l.f_v), l.exterior_region);
        assert_eq!(l.medial.vertex_region_of_arc(l.f_v), l.marked_region);
    }

    #[test]
    fn hopf_and_square_shapes() {
        let l = build_link(&hopf()).unwrap();
        assert_eq!(l.crossing_count(), 2);
        assert_eq!(l.medial.regions.len(), 4);
        let l = build_link(&square()).unwrap();
        assert_eq!(l.crossing_count(), 4);
        assert_eq!(l.medial.regions.len(), 6);
    }

    #[test]
    fn trefoil_states() {
        let l = build_link(&theta()).unwrap();
        let states = kauffman_states(&l).unwrap();
        assert_eq!(states.len(), 3);
        // signed weights are exactly {1, -t, t^2}
        let mut signed: Vec<IntPoly> = states.iter().map(|s| s.signed_weight()).collect();
        signed.sort_by_key(|q| q.degree());
        assert_eq!(signed, vec![p(&[1]), p(&[0, -1]), p(&[0, 0, 1])]);
        assert_eq!(kauffman_polynomial(&l).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn hopf_states() {
        let l = build_link(&hopf()).unwrap();
        let states = kauffman_states(&l).unwrap();
        assert_eq!(states.len(), 2);
        assert_eq!(kauffman_polynomial(&l).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn no_cancellation_within_degree() {
        for g in [theta(), hopf(), square()] {
            let l = build_link(&g).unwrap();
            let states = kauffman_states(&l).unwrap();
            let mut signs_by_degree: std::collections::BTreeMap<usize, BTreeSet<bool>> =
                Default::default();
            for s in states {
                let w = s.signed_weight();
                let deg = w.degree().unwrap();
                let negative = w.coeff(deg) < BigInt::from(0);
                signs_by_degree.entry(deg).or_default().insert(negative);
            }
            for (_, signs) in signs_by_degree {
                assert_eq!(signs.len(), 1);
            }
        }
    }

    #[test]
    fn crowell_trefoil() {
        let l = build_link(&theta()).unwrap();
        let cg = crowell_graph(&l).unwrap();
        assert_eq!(cg.digraph.vertex_count(), 3);
        assert_eq!(cg.digraph.edge_count(), 6);
        // raw sum at the canonical root: 1 - t + t^2
        assert_eq!(crowell_state_sum(&cg, l.v0).unwrap(), p(&[1, -1, 1]));
        for v in 0..3 {
            assert_eq!(crowell_polynomial(&cg, v).unwrap(), p(&[1, 1, 1]));
        }
    }

    #[test]
    fn crowell_single_crossing_unknot() {
        // single edge: one crossing with a kink; one empty arborescence
        let g = Digraph::new(2, &[(0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0], vec![1]]).unwrap();
        let pb = PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap();
        let l = build_link(&pb).unwrap();
        let cg = crowell_graph(&l).unwrap();
        assert_eq!(crowell_polynomial(&cg, 0).unwrap(), p(&[1]));
    }

    #[test]
    fn gold_blue_counts() {
        for (g, expect_m2) in [(theta(), 1), (hopf(), 1), (square(), 2)] {
            let models = build_models(&g).unwrap();
            let gb = &models.gold_blue;
            assert_eq!(gb.m2(), expect_m2);
            // partition of the clockwise regions = vertex regions
            let cw = models
                .diagram
                .medial
                .regions
                .iter()
                .filter(|r| matches!(r.kind, RegionKind::VertexRegion(_)))
                .count();
            assert_eq!(gb.m1() + gb.m2(), cw);
        }
    }

    #[test]
    fn models_agree_with_pd() {
        for g in [theta(), hopf(), square()] {
            let models = build_models(&g).unwrap();
            let d = EulerianDigraph::new(models.diagram.dual.graph().clone()).unwrap();
            let expected = pd(&d).unwrap().canonical();
            assert_eq!(kauffman_polynomial(&models.diagram).unwrap(), expected);
            assert_eq!(
                crowell_polynomial(&models.crowell, models.diagram.v0).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn marked_region_choice_is_a_unit() {
        // any adjacent (face region, vertex region) pair may be marked; the
        // canonical state sum is the same for every choice
        for g in [theta(), hopf(), square()] {
            let l = build_link(&g).unwrap();
            let base = kauffman_polynomial(&l).unwrap();
            let mut pairs = BTreeSet::new();
            for a in 0..l.medial.arc_count() {
                pairs.insert((
                    l.medial.face_region_of_arc(a),
                    l.medial.vertex_region_of_arc(a),
                ));
            }
            assert!(pairs.len() > 1);
            for (fr, vr) in pairs {
                let mut acc = IntPoly::zero();
                for s in kauffman_states_with_marks(&l, fr, vr).unwrap() {
                    acc = &acc + &s.signed_weight();
                }
                assert_eq!(acc.compose_neg_t().canonical(), base);
            }
        }
        // non-adjacent marks are rejected: two face regions never share an arc
        let l = build_link(&theta()).unwrap();
        let another_face = (0..l.medial.regions.len())
            .find(|&r| {
                r != l.exterior_region
                    && matches!(l.medial.regions[r].kind, RegionKind::FaceRegion(_))
            })
            .unwrap();
        assert!(kauffman_states_with_marks(&l, l.exterior_region, another_face).is_err());
    }

    #[test]
    fn distinguished_edge_choice_is_a_unit() {
        // every admissible e0 (ending at the exterior dual vertex) gives the
        // same canonical polynomials and a working bijection setup
        for g in [theta(), hopf(), square()] {
            let base_link = build_link(&g).unwrap();
            let base = kauffman_polynomial(&base_link).unwrap();
            let r = base_link.exterior_vertex;
            for e in base_link.dual.graph().edges() {
                if e.fin != r {
                    continue;
                }
                let l = build_link_with_e0(&g, Some(e.id)).unwrap();
                assert_eq!(l.e0, e.id);
                assert_eq!(kauffman_polynomial(&l).unwrap(), base);
                let cg = crowell_graph(&l).unwrap();
                assert_eq!(crowell_polynomial(&cg, l.v0).unwrap(), base);
            }
            // inadmissible choices are rejected
            if let Some(bad) = base_link.dual.graph().edges().iter().find(|e| e.fin != r) {
                assert!(build_link_with_e0(&g, Some(bad.id)).is_err());
            }
        }
    }

    #[test]
    fn a_to_b_tree_edge_count_is_constant() {
        // rooted checkerboard trees contribute a fixed power of t: the
        // number of markers labeled t is the same in every state
        for g in [theta(), hopf(), square()] {
            let l = build_link(&g).unwrap();
            let counts: BTreeSet<usize> = kauffman_states(&l)
                .unwrap()
                .iter()
                .map(|s| {
                    s.markers
                        .iter()
                        .filter(|&&(_, _, label)| label == CornerLabel::T)
                        .count()
                })
                .collect();
            assert_eq!(counts.len(), 1);
        }
    }

    #[test]
    fn state_count_equals_checkerboard_tree_count() {
        for g in [theta(), hopf(), square()] {
            let l = build_link(&g).unwrap();
            let states = kauffman_states(&l).unwrap();
            let checkerboard_trees = spanning_trees(l.source.graph()).unwrap();
            assert_eq!(states.len(), checkerboard_trees.len());
        }
    }
}
