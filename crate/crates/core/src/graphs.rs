//! Directed multigraphs with stable edge ids, Eulerian checks, minors,
//! rotation-system embeddings, face tracing, planar duals of bipartite
//! plane graphs, and medial graphs.
//!
//! Embedding conventions used throughout the crate:
//! * rotations list the half-edges around a vertex in counterclockwise order;
//! * a dart `2e` traverses edge `e` from `init` to `fin`, dart `2e+1` the
//!   reverse; `twin(d) = d ^ 1`;
//! * faces are traced by "next = clockwise-next after the twin", so every
//!   face keeps its region on the left of its darts;
//! * the unbounded region of a plane bipartite graph is the face to the
//!   right of edge 0 (the face containing dart 1).

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

pub type Vertex = usize;
pub type EdgeId = usize;
/// Directed half-edge index: `2e` = init→fin of edge `e`, `2e+1` = reverse.
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub init: Vertex,
    pub fin: Vertex,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, ", self.vertex_count)?;
        let arcs: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}:{}->{}", e.id, e.init, e.fin))
            .collect();
        write!(f, "[{}])", arcs.join(", "))
    }
}

impl Digraph {
    /// Edge ids are assigned by position.
    pub fn new(vertex_count: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        let edges = arcs
            .iter()
            .enumerate()
            .map(|(id, &(init, fin))| Edge { id, init, fin })
            .collect();
        Self::from_parts(vertex_count, edges)
    }

    pub fn from_parts(vertex_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::input(format!("duplicate edge id {}", w[0].id)));
            }
        }
        for e in &edges {
            if e.init >= vertex_count || e.fin >= vertex_count {
                return Err(Error::input(format!(
                    "edge {} endpoint out of range (n={})",
                    e.id, vertex_count
                )));
            }
        }
        Ok(Digraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|i| &self.edges[i])
            .map_err(|_| Error::input(format!("unknown edge id {id}")))
    }

    /// True when edge ids are exactly `0..edge_count()`.
    pub fn has_dense_ids(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, e)| e.id == i)
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.init == v).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.fin == v).count()
    }

    pub fn is_connected_underlying(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.init, e.fin);
        }
        (1..self.vertex_count).all(|v| uf.find(v) == uf.find(0))
    }

    pub fn is_balanced(&self) -> bool {
        let mut delta = vec![0isize; self.vertex_count];
        for e in &self.edges {
            delta[e.init] += 1;
            delta[e.fin] -= 1;
        }
        delta.iter().all(|&d| d == 0)
    }

    pub fn transpose(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    init: e.fin,
                    fin: e.init,
                })
                .collect(),
        }
    }

    /// Contract the given edges. Merged vertex classes are renumbered densely
    /// in order of their smallest original vertex; surviving edges keep their
    /// ids, and edges whose endpoints become identified turn into loops.
    pub fn contract(&self, edge_ids: &BTreeSet<EdgeId>) -> Result<Contraction> {
        for &id in edge_ids {
            self.edge(id)?;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            if edge_ids.contains(&e.id) {
                uf.union(e.init, e.fin);
            }
        }
        let mut vertex_map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let root = uf.find(v);
            if vertex_map[root] == usize::MAX {
                vertex_map[root] = next;
                next += 1;
            }
            vertex_map[v] = vertex_map[root];
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !edge_ids.contains(&e.id))
            .map(|e| Edge {
                id: e.id,
                init: vertex_map[e.init],
                fin: vertex_map[e.fin],
            })
            .collect();
        Ok(Contraction {
            graph: Digraph {
                vertex_count: next,
                edges,
            },
            vertex_map,
        })
    }
}

/// Result of a contraction: the minor plus the old→new vertex map.
pub struct Contraction {
    pub graph: Digraph,
    pub vertex_map: Vec<Vertex>,
}

pub fn is_eulerian(d: &Digraph) -> bool {
    d.vertex_count() > 0 && d.is_balanced() && d.is_connected_underlying()
}

/// A connected digraph with `indeg(v) = odeg(v)` everywhere.
#[derive(Clone, Debug)]
pub struct EulerianDigraph {
    graph: Digraph,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
}

impl EulerianDigraph {
    pub fn new(graph: Digraph) -> Result<Self> {
        if graph.vertex_count() == 0 {
            return Err(Error::input("Eulerian digraph needs at least one vertex"));
        }
        if !graph.is_connected_underlying() {
            return Err(Error::input("digraph is not connected"));
        }
        let mut out_deg = vec![0; graph.vertex_count()];
        let mut in_deg = vec![0; graph.vertex_count()];
        for e in graph.edges() {
            out_deg[e.init] += 1;
            in_deg[e.fin] += 1;
        }
        if out_deg != in_deg {
            return Err(Error::input("digraph is not balanced (indeg != odeg)"));
        }
        Ok(EulerianDigraph {
            graph,
            out_deg,
            in_deg,
        })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_deg[v]
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_deg[v]
    }

    pub fn transpose(&self) -> EulerianDigraph {
        EulerianDigraph {
            graph: self.graph.transpose(),
            out_deg: self.in_deg.clone(),
            in_deg: self.out_deg.clone(),
        }
    }
}

pub fn dart(edge: EdgeId, reverse: bool) -> Dart {
    2 * edge + reverse as usize
}

pub fn dart_edge(d: Dart) -> EdgeId {
    d / 2
}

pub fn dart_is_reverse(d: Dart) -> bool {
    d % 2 == 1
}

pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

/// Cyclic counterclockwise order of the darts leaving each vertex.
/// Requires dense edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<Dart>>,
}

impl RotationSystem {
    pub fn new(graph: &Digraph, order: Vec<Vec<Dart>>) -> Result<Self> {
        if !graph.has_dense_ids() {
            return Err(Error::embedding("rotation systems require dense edge ids"));
        }
        if order.len() != graph.vertex_count() {
            return Err(Error::embedding(format!(
                "rotation lists for {} vertices, graph has {}",
                order.len(),
                graph.vertex_count()
            )));
        }
        let mut seen = vec![false; 2 * graph.edge_count()];
        for (v, darts) in order.iter().enumerate() {
            for &d in darts {
                if d >= 2 * graph.edge_count() {
                    return Err(Error::embedding(format!("dart {d} out of range")));
                }
                if seen[d] {
                    return Err(Error::embedding(format!("dart {d} listed twice")));
                }
                seen[d] = true;
                let e = graph.edge(dart_edge(d))?;
                let origin = if dart_is_reverse(d) { e.fin } else { e.init };
                if origin != v {
                    return Err(Error::embedding(format!(
                        "dart {d} of edge {} listed at vertex {v}, originates at {origin}",
                        e.id
                    )));
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::embedding("some half-edges missing from rotations"));
        }
        Ok(RotationSystem { order })
    }

    pub fn order(&self) -> &[Vec<Dart>] {
        &self.order
    }

    fn origin(graph: &Digraph, d: Dart) -> Vertex {
        let e = &graph.edges()[dart_edge(d)];
        if dart_is_reverse(d) {
            e.fin
        } else {
            e.init
        }
    }

    fn target(graph: &Digraph, d: Dart) -> Vertex {
        Self::origin(graph, twin(d))
    }

    /// Clockwise-previous dart around the origin of `d` (the inverse of the
    /// counterclockwise rotation).
    fn rotate_cw(&self, graph: &Digraph, d: Dart) -> Dart {
        let v = Self::origin(graph, d);
        let list = &self.order[v];
        let pos = list.iter().position(|&x| x == d).expect("dart in rotation");
        list[(pos + list.len() - 1) % list.len()]
    }
}

/// Faces of an embedded graph: each dart lies in exactly one face orbit, and
/// the face keeps its region on the left of each of its darts.
#[derive(Clone, Debug)]
pub struct Faces {
    pub orbits: Vec<Vec<Dart>>,
    pub face_of_dart: Vec<usize>,
}

pub fn faces(rs: &RotationSystem, graph: &Digraph) -> Result<Faces> {
    let dart_count = 2 * graph.edge_count();
    let mut face_of_dart = vec![usize::MAX; dart_count];
    let mut orbits = Vec::new();
    for start in 0..dart_count {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        loop {
            if face_of_dart[d] != usize::MAX {
                return Err(Error::embedding("face traversal does not close"));
            }
            face_of_dart[d] = orbits.len();
            orbit.push(d);
            d = rs.rotate_cw(graph, twin(d));
            if d == start {
                break;
            }
        }
        orbits.push(orbit);
    }
    Ok(Faces {
        orbits,
        face_of_dart,
    })
}

/// Successor of `d` in its face orbit.
pub fn face_next(rs: &RotationSystem, graph: &Digraph, d: Dart) -> Dart {
    rs.rotate_cw(graph, twin(d))
}

/// Predecessor of `d` in its face orbit.
pub fn face_prev(rs: &RotationSystem, graph: &Digraph, d: Dart) -> Dart {
    // inverse of σ⁻¹∘twin is twin∘σ
    let v = RotationSystem::origin(graph, d);
    let list = &rs.order[v];
    let pos = list.iter().position(|&x| x == d).expect("dart in rotation");
    twin(list[(pos + 1) % list.len()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VClass {
    A,
    B,
}

/// An embedded connected bipartite multigraph with a proper 2-coloring.
/// Edges are stored with arbitrary endpoint order; `a_dart` yields the
/// A→B traversal of an edge.
#[derive(Clone, Debug)]
pub struct PlanarBipartiteGraph {
    graph: Digraph,
    rot: RotationSystem,
    color: Vec<VClass>,
}

impl PlanarBipartiteGraph {
    pub fn new(graph: Digraph, rot: RotationSystem, color: Vec<VClass>) -> Result<Self> {
        if color.len() != graph.vertex_count() {
            return Err(Error::input("coloring length != vertex count"));
        }
        if !graph.is_connected_underlying() {
            return Err(Error::input("bipartite graph must be connected"));
        }
        for e in graph.edges() {
            if color[e.init] == color[e.fin] {
                return Err(Error::input(format!(
                    "edge {} joins two {:?} vertices; coloring is not proper",
                    e.id, color[e.init]
                )));
            }
        }
        Ok(PlanarBipartiteGraph { graph, rot, color })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rot
    }

    pub fn color(&self, v: Vertex) -> VClass {
        self.color[v]
    }

    pub fn colors(&self) -> &[VClass] {
        &self.color
    }

    pub fn class_size(&self, class: VClass) -> usize {
        self.color.iter().filter(|&&c| c == class).count()
    }

    /// The dart of `e` that travels from its A-endpoint to its B-endpoint.
    pub fn a_dart(&self, e: EdgeId) -> Dart {
        let edge = &self.graph.edges()[e];
        dart(e, self.color[edge.init] != VClass::A)
    }

    pub fn faces(&self) -> Result<Faces> {
        faces(&self.rot, &self.graph)
    }

    /// The face taken to be the unbounded region: the face to the right of
    /// edge 0 as stored (the face containing dart 1).
    pub fn outer_face(&self, faces: &Faces) -> usize {
        faces.face_of_dart[1]
    }
}

/// A planar Eulerian digraph whose rotation alternates in/out around every
/// vertex.
#[derive(Clone, Debug)]
pub struct AlternatingDimap {
    pub eulerian: EulerianDigraph,
    pub rot: RotationSystem,
}

impl AlternatingDimap {
    pub fn new(eulerian: EulerianDigraph, rot: RotationSystem) -> Result<Self> {
        for (v, darts) in rot.order().iter().enumerate() {
            if darts.is_empty() {
                continue;
            }
            if darts.len() % 2 != 0 {
                return Err(Error::embedding(format!("odd degree at vertex {v}")));
            }
            for w in 0..darts.len() {
                let here = dart_is_reverse(darts[w]);
                let next = dart_is_reverse(darts[(w + 1) % darts.len()]);
                if here == next {
                    return Err(Error::embedding(format!(
                        "half-edges do not alternate in/out around vertex {v}"
                    )));
                }
            }
        }
        Ok(AlternatingDimap { eulerian, rot })
    }

    pub fn graph(&self) -> &Digraph {
        self.eulerian.graph()
    }
}

/// Planar dual of a bipartite plane graph, oriented so that the A-class
/// endpoint of the crossed primal edge lies on the left of each dual edge.
/// Dual edge ids coincide with the primal edge ids they cross.
pub struct DualResult {
    pub dimap: AlternatingDimap,
    pub faces: Faces,
    /// Dual vertex of the unbounded primal face.
    pub outer_face: usize,
}

pub fn planar_dual(g: &PlanarBipartiteGraph) -> Result<DualResult> {
    let faces = g.faces()?;
    let m = g.graph().edge_count();
    if m == 0 {
        return Err(Error::input("dual of an edgeless graph"));
    }
    let mut edges = Vec::with_capacity(m);
    for e in 0..m {
        let da = g.a_dart(e);
        edges.push(Edge {
            id: e,
            init: faces.face_of_dart[twin(da)],
            fin: faces.face_of_dart[da],
        });
    }
    let dual_graph = Digraph::from_parts(faces.orbits.len(), edges)?;
    // Rotation at a dual vertex: the boundary darts of the face in orbit
    // order; the dual half of edge(d) at face F is the fin end when F is
    // the face of the A→B dart, the init end otherwise.
    let mut order = Vec::with_capacity(faces.orbits.len());
    for orbit in &faces.orbits {
        let mut list = Vec::with_capacity(orbit.len());
        for &d in orbit {
            let e = dart_edge(d);
            let is_a_side = d == g.a_dart(e);
            // fin end of dual edge e leaves the face containing the A→B dart
            list.push(dart(e, is_a_side));
        }
        order.push(list);
    }
    let rot = RotationSystem::new(&dual_graph, order)?;
    let eulerian = EulerianDigraph::new(dual_graph)
        .map_err(|e| Error::inconsistency(format!("planar dual not Eulerian: {e}")))?;
    let outer_face = g.outer_face(&faces);
    Ok(DualResult {
        dimap: AlternatingDimap::new(eulerian, rot)?,
        faces,
        outer_face,
    })
}

/// Which of the four rotation slots an arc end occupies at a crossing.
/// Slot layout at the crossing of primal edge `e` (δ = A→B dart of `e`):
/// slot 0 = init end of arc(δ), slot 1 = fin end of arc(face_prev(δ)),
/// slot 2 = init end of arc(δ'), slot 3 = fin end of arc(face_prev(δ')),
/// listed in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcEnd {
    pub arc: usize,
    pub is_fin: bool,
}

/// The medial graph of a bipartite plane graph: one crossing per primal
/// edge, one arc per primal dart. Arc `d` runs from the crossing of
/// `edge(d)` to the crossing of `edge(face_next(d))` inside the face of
/// `d`; its stored direction is the face-traversal direction.
#[derive(Clone, Debug)]
pub struct Medial {
    pub crossings: usize,
    pub arcs: Vec<MedialArc>,
    /// Four arc ends per crossing, in ccw rotation order.
    pub slots: Vec<[ArcEnd; 4]>,
    /// Region index on the left of each medial dart (2a = along arc a,
    /// 2a+1 = against it).
    pub region_of_dart: Vec<usize>,
    pub regions: Vec<Region>,
    arc_vertex_region: Vec<usize>,
    arc_face_region: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MedialArc {
    pub id: usize,
    pub init: usize,
    pub fin: usize,
    pub init_slot: u8,
    pub fin_slot: u8,
    /// Primal vertex whose region this arc bounds.
    pub hug_vertex: Vertex,
    /// Primal face this arc lies in.
    pub face: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionKind {
    /// Region containing primal vertex `v`.
    VertexRegion(Vertex),
    /// Region of primal face `f` (a dual vertex).
    FaceRegion(usize),
}

#[derive(Clone, Debug)]
pub struct Region {
    pub kind: RegionKind,
    /// Medial darts of the boundary, region on the left.
    pub darts: Vec<Dart>,
    /// The arcs of the boundary (ids of `darts` divided by 2).
    pub arcs: Vec<usize>,
}

impl Medial {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The region bounded on the vertex side of the arc.
    pub fn vertex_region_of_arc(&self, a: usize) -> usize {
        self.arc_vertex_region[a]
    }

    /// The region bounded on the face side of the arc.
    pub fn face_region_of_arc(&self, a: usize) -> usize {
        self.arc_face_region[a]
    }
}

pub fn medial_graph(g: &PlanarBipartiteGraph) -> Result<(Medial, Faces)> {
    let m = g.graph().edge_count();
    if m == 0 {
        return Err(Error::input("medial of an edgeless graph"));
    }
    let pr_faces = g.faces()?;
    let graph = g.graph();
    let rot = g.rotation();

    let mut arcs = Vec::with_capacity(2 * m);
    for d in 0..2 * m {
        let nd = face_next(rot, graph, d);
        arcs.push(MedialArc {
            id: d,
            init: dart_edge(d),
            fin: dart_edge(nd),
            init_slot: 0, // fixed below
            fin_slot: 0,
            hug_vertex: RotationSystem::target(graph, d),
            face: pr_faces.face_of_dart[d],
        });
    }

    let mut slots = Vec::with_capacity(m);
    for e in 0..m {
        let da = g.a_dart(e);
        let db = twin(da);
        let s0 = ArcEnd {
            arc: da,
            is_fin: false,
        };
        let s1 = ArcEnd {
            arc: face_prev(rot, graph, da),
            is_fin: true,
        };
        let s2 = ArcEnd {
            arc: db,
            is_fin: false,
        };
        let s3 = ArcEnd {
            arc: face_prev(rot, graph, db),
            is_fin: true,
        };
        slots.push([s0, s1, s2, s3]);
    }
    for (c, sl) in slots.iter().enumerate() {
        for (k, end) in sl.iter().enumerate() {
            let arc = &mut arcs[end.arc];
            if end.is_fin {
                debug_assert_eq!(arc.fin, c);
                arc.fin_slot = k as u8;
            } else {
                debug_assert_eq!(arc.init, c);
                arc.init_slot = k as u8;
            }
        }
    }

    // Trace medial regions with the same face rule, using the slot order as
    // the ccw rotation at each crossing.
    let medial_dart_of = |end: &ArcEnd| -> Dart { 2 * end.arc + end.is_fin as usize };
    let dart_count = 4 * m;
    let mut region_of_dart = vec![usize::MAX; dart_count];
    let mut orbits: Vec<Vec<Dart>> = Vec::new();
    // position of each medial dart in its crossing rotation
    let mut slot_of_dart = vec![usize::MAX; dart_count];
    let mut crossing_of_dart = vec![usize::MAX; dart_count];
    for (c, sl) in slots.iter().enumerate() {
        for (k, end) in sl.iter().enumerate() {
            let md = medial_dart_of(end);
            slot_of_dart[md] = k;
            crossing_of_dart[md] = c;
        }
    }
    if slot_of_dart.contains(&usize::MAX) {
        return Err(Error::embedding("medial slot table incomplete"));
    }
    for start in 0..dart_count {
        if region_of_dart[start] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        loop {
            region_of_dart[d] = orbits.len();
            orbit.push(d);
            // next = clockwise-next after the twin
            let t = d ^ 1;
            let c = crossing_of_dart[t];
            let s = slot_of_dart[t];
            let next_slot = (s + 3) % 4;
            let end = &slots[c][next_slot];
            d = medial_dart_of(end);
            if d == start {
                break;
            }
        }
        orbits.push(orbit);
    }

    // Identify each region: every dart of the orbit must hug the same corner.
    // The corner left of the dart at slot s of crossing e is
    //   s=0: face(δ)   s=1: A endpoint   s=2: face(δ')   s=3: B endpoint.
    let mut regions = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let mut kind: Option<RegionKind> = None;
        for &md in orbit {
            let c = crossing_of_dart[md];
            let s = slot_of_dart[md];
            let edge = &graph.edges()[c];
            let (a_end, b_end) = if g.color(edge.init) == VClass::A {
                (edge.init, edge.fin)
            } else {
                (edge.fin, edge.init)
            };
            let da = g.a_dart(c);
            let k = match s {
                0 => RegionKind::FaceRegion(pr_faces.face_of_dart[da]),
                1 => RegionKind::VertexRegion(a_end),
                2 => RegionKind::FaceRegion(pr_faces.face_of_dart[twin(da)]),
                3 => RegionKind::VertexRegion(b_end),
                _ => unreachable!(),
            };
            match &kind {
                None => kind = Some(k),
                Some(prev) if *prev == k => {}
                Some(prev) => {
                    return Err(Error::embedding(format!(
                        "medial region mixes corners {prev:?} and {k:?}"
                    )))
                }
            }
        }
        let arcs_list: Vec<usize> = orbit.iter().map(|&md| md / 2).collect();
        regions.push(Region {
            kind: kind.expect("nonempty orbit"),
            darts: orbit.clone(),
            arcs: arcs_list,
        });
    }

    // Euler check |V| - |E| + |F| = 2 for the medial itself.
    let f = regions.len();
    if m + f != 2 * m + 2 {
        return Err(Error::embedding(format!(
            "medial Euler check failed: V={m} E={} F={f}",
            2 * m
        )));
    }

    let mut arc_vertex_region = vec![usize::MAX; 2 * m];
    let mut arc_face_region = vec![usize::MAX; 2 * m];
    for (rid, region) in regions.iter().enumerate() {
        for &md in &region.darts {
            let a = md / 2;
            match region.kind {
                RegionKind::VertexRegion(_) => arc_vertex_region[a] = rid,
                RegionKind::FaceRegion(_) => arc_face_region[a] = rid,
            }
        }
    }
    if arc_vertex_region.contains(&usize::MAX)
        || arc_face_region.contains(&usize::MAX)
    {
        return Err(Error::embedding(
            "every medial arc must bound one vertex region and one face region",
        ));
    }

    Ok((
        Medial {
            crossings: m,
            arcs,
            slots,
            region_of_dart,
            regions,
            arc_vertex_region,
            arc_face_region,
        },
        pr_faces,
    ))
}

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn three_cycle() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Theta graph: two vertices joined by three parallel edges, planar.
    pub(crate) fn theta() -> PlanarBipartiteGraph {
        let g = Digraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let rot = RotationSystem::new(
            &g,
            vec![vec![0, 2, 4], vec![5, 3, 1]],
        )
        .unwrap();
        PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap()
    }

    pub(crate) fn square() -> PlanarBipartiteGraph {
        // 4-cycle a0 b0 a1 b1 with the planar embedding
        let g = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rot = RotationSystem::new(
            &g,
            vec![
                vec![0, 7],      // a0: e0 out, e3 in
                vec![2, 1],      // b0: e1 out, e0 in
                vec![4, 3],      // a1: e2 out, e1 in
                vec![6, 5],      // b1: e3 out, e2 in
            ],
        )
        .unwrap();
        PlanarBipartiteGraph::new(
            g,
            rot,
            vec![VClass::A, VClass::B, VClass::A, VClass::B],
        )
        .unwrap()
    }

    #[test]
    fn eulerian_checks() {
        assert!(is_eulerian(&three_cycle()));
        assert!(!is_eulerian(&Digraph::new(2, &[(0, 1)]).unwrap()));
        let bidirected_triangle = Digraph::new(
            3,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)],
        )
        .unwrap();
        assert!(is_eulerian(&bidirected_triangle));
        // balanced but disconnected
        let two_loops = Digraph::new(2, &[(0, 0), (1, 1)]).unwrap();
        assert!(!is_eulerian(&two_loops));
    }

    #[test]
    fn transpose_involution() {
        let d = three_cycle();
        assert_eq!(d.transpose().transpose(), d);
        let t = d.transpose();
        assert_eq!(t.edges()[0].init, 1);
        assert_eq!(t.edges()[0].fin, 0);
    }

    #[test]
    fn contraction() {
        let d = three_cycle();
        let c = d.contract(&BTreeSet::from([0])).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 2);
        // contracting two edges of the triangle leaves one loop
        let c2 = d.contract(&BTreeSet::from([0, 1])).unwrap();
        assert_eq!(c2.graph.vertex_count(), 1);
        let loops: Vec<_> = c2.graph.edges().iter().collect();
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].init, loops[0].fin);
        assert_eq!(loops[0].id, 2);
        // contracting nothing is the identity
        let c3 = d.contract(&BTreeSet::new()).unwrap();
        assert_eq!(c3.graph, d);
        assert!(d.contract(&BTreeSet::from([9])).is_err());
    }

    #[test]
    fn face_counts() {
        // square C4: two faces
        let sq = square();
        let f = sq.faces().unwrap();
        assert_eq!(f.orbits.len(), 2);
        // theta: three faces
        let th = theta();
        assert_eq!(th.faces().unwrap().orbits.len(), 3);
        // single loop on one vertex: two faces
        let lp = Digraph::new(1, &[(0, 0)]).unwrap();
        let rot = RotationSystem::new(&lp, vec![vec![0, 1]]).unwrap();
        assert_eq!(faces(&rot, &lp).unwrap().orbits.len(), 2);
    }

    #[test]
    fn rotation_validation() {
        let d = three_cycle();
        // dart listed at the wrong vertex
        assert!(RotationSystem::new(&d, vec![vec![0, 1], vec![2, 5], vec![4, 3]]).is_err());
        // dart missing
        assert!(RotationSystem::new(&d, vec![vec![0], vec![2, 1], vec![4, 3]]).is_err());
        assert!(RotationSystem::new(&d, vec![vec![0, 5], vec![2, 1], vec![4, 3]]).is_ok());
    }

    #[test]
    fn dual_of_theta_is_three_cycle() {
        let th = theta();
        let dual = planar_dual(&th).unwrap();
        let dg = dual.dimap.graph();
        assert_eq!(dg.vertex_count(), 3);
        assert_eq!(dg.edge_count(), 3);
        assert!(is_eulerian(dg));
        // every vertex has in = out = 1: a directed 3-cycle
        for v in 0..3 {
            assert_eq!(dg.out_degree(v), 1);
            assert_eq!(dg.in_degree(v), 1);
        }
    }

    #[test]
    fn dual_of_square() {
        let sq = square();
        let dual = planar_dual(&sq).unwrap();
        let dg = dual.dimap.graph();
        assert_eq!(dg.vertex_count(), 2);
        assert_eq!(dg.edge_count(), 4);
        assert_eq!(dg.out_degree(0), 2);
        assert_eq!(dg.in_degree(0), 2);
    }

    #[test]
    fn dual_of_single_edge_is_loop() {
        let g = Digraph::new(2, &[(0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0], vec![1]]).unwrap();
        let pb = PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap();
        let dual = planar_dual(&pb).unwrap();
        assert_eq!(dual.dimap.graph().vertex_count(), 1);
        assert_eq!(dual.dimap.graph().edge_count(), 1);
        let e = &dual.dimap.graph().edges()[0];
        assert_eq!(e.init, e.fin);
    }

    #[test]
    fn medial_shapes() {
        // theta -> 3 crossings, 6 arcs, 5 regions (trefoil shadow)
        let (med, _) = medial_graph(&theta()).unwrap();
        assert_eq!(med.crossings, 3);
        assert_eq!(med.arc_count(), 6);
        assert_eq!(med.regions.len(), 5);
        let vertex_regions = med
            .regions
            .iter()
            .filter(|r| matches!(r.kind, RegionKind::VertexRegion(_)))
            .count();
        assert_eq!(vertex_regions, 2);

        // square -> 4 crossings, 8 arcs, 6 regions
        let (med, _) = medial_graph(&square()).unwrap();
        assert_eq!(med.crossings, 4);
        assert_eq!(med.arc_count(), 8);
        assert_eq!(med.regions.len(), 6);

        // single edge -> 1 crossing with two loop arcs, 3 regions
        let g = Digraph::new(2, &[(0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0], vec![1]]).unwrap();
        let pb = PlanarBipartiteGraph::new(g, rot, vec![VClass::A, VClass::B]).unwrap();
        let (med, _) = medial_graph(&pb).unwrap();
        assert_eq!(med.crossings, 1);
        assert_eq!(med.arc_count(), 2);
        assert_eq!(med.regions.len(), 3);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_digraph() -> impl Strategy<Value = Digraph> {
            (1usize..6).prop_flat_map(|n| {
                prop::collection::vec((0..n, 0..n), 0..12)
                    .prop_map(move |arcs| Digraph::new(n, &arcs).unwrap())
            })
        }

        proptest! {
            #[test]
            fn transpose_is_an_involution(d in arbitrary_digraph()) {
                prop_assert_eq!(d.transpose().transpose(), d);
            }

            #[test]
            fn contraction_merges_count(d in arbitrary_digraph(), mask in prop::collection::vec(prop::bool::ANY, 12)) {
                let ids: BTreeSet<EdgeId> = d
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask.get(*i).copied().unwrap_or(false))
                    .map(|(_, e)| e.id)
                    .collect();
                let mut uf = UnionFind::new(d.vertex_count());
                let mut merges = 0;
                let mut cycle_free = true;
                for &id in &ids {
                    let e = d.edge(id).unwrap();
                    if uf.union(e.init, e.fin) {
                        merges += 1;
                    } else {
                        cycle_free = false;
                    }
                }
                let c = d.contract(&ids).unwrap();
                prop_assert_eq!(c.graph.vertex_count(), d.vertex_count() - merges);
                if cycle_free {
                    prop_assert_eq!(c.graph.vertex_count(), d.vertex_count() - ids.len());
                }
                // surviving edges keep their ids
                let surviving: Vec<EdgeId> = c.graph.edges().iter().map(|e| e.id).collect();
                let expected: Vec<EdgeId> = d
                    .edges()
                    .iter()
                    .map(|e| e.id)
                    .filter(|id| !ids.contains(id))
                    .collect();
                prop_assert_eq!(surviving, expected);
            }
        }
    }

    #[test]
    fn dual_requires_connectivity() {
        let g = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert!(PlanarBipartiteGraph::new(
            g,
            rot,
            vec![VClass::A, VClass::B, VClass::A, VClass::B]
        )
        .is_err());
    }
}
