//! The constructive two-dimensional pipeline: extend a triangulated
//! triangle to a sphere, route three internally vertex-disjoint paths
//! through the dual graph by unit-capacity max-flow, and read a labelling
//! off the three regions the paths cut out. The result is a valid
//! labelling whose unique rainbow facet is the requested one; the pipeline
//! validates this outright and can fall back to exhaustive search.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::instance::{Label, LabelSet, SpernerInstance};
use crate::sperner::{
    is_valid_sperner, rainbow_facets, unique_rainbow_witness, Labelling, SearchOptions, Status,
};

/// A two-dimensional Sperner instance whose boundary is a single cycle
/// split by the three corners into corner-to-corner arcs.
#[derive(Clone, Debug)]
pub struct DiskTriangulation {
    instance: SpernerInstance,
    /// Boundary walk starting at the corner with label 1.
    boundary_cycle: Vec<VertexId>,
    /// Arcs in walk order: start corner, end corner, interior vertices.
    arcs: Vec<(VertexId, VertexId, Vec<VertexId>)>,
}

impl DiskTriangulation {
    /// Checks the disk shape: valid 2-dimensional instance, boundary edges
    /// forming one simple cycle through all three corners.
    pub fn new(instance: SpernerInstance) -> Result<Self> {
        if instance.label_count() != 3 {
            return Err(Error::DimensionMismatch(format!(
                "disk triangulations are 2-dimensional, got label count {}",
                instance.label_count()
            )));
        }
        let report = crate::instance::validate_instance(&instance);
        if !report.is_valid() {
            return Err(Error::BadInput(format!(
                "instance invalid: {}",
                report
                    .violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("; ")
            )));
        }

        let boundary = instance.complex().boundary_faces();
        let mut adjacency: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
        for edge in &boundary {
            let vs = edge.vertices();
            adjacency.entry(&vs[0]).or_default().push(&vs[1]);
            adjacency.entry(&vs[1]).or_default().push(&vs[0]);
        }
        for (v, ns) in &adjacency {
            if ns.len() != 2 {
                return Err(Error::BadBoundary(format!(
                    "boundary vertex {v} has {} boundary edges",
                    ns.len()
                )));
            }
        }
        let corners: Vec<&VertexId> = instance.corners().iter().collect();
        for c in &corners {
            if !adjacency.contains_key(*c) {
                return Err(Error::BadBoundary(format!(
                    "corner {c} does not lie on the boundary"
                )));
            }
        }

        let start = corners[0];
        let mut cycle: Vec<VertexId> = vec![start.clone()];
        let mut prev = start;
        let mut current = *adjacency[start].iter().min().unwrap();
        while current != start {
            cycle.push(current.clone());
            let next = *adjacency[current]
                .iter()
                .find(|n| **n != prev)
                .expect("degree-2 boundary vertex");
            prev = current;
            current = next;
        }
        if cycle.len() != adjacency.len() {
            return Err(Error::BadBoundary("boundary is not a single cycle".into()));
        }

        let corner_positions: Vec<usize> = corners
            .iter()
            .map(|c| {
                cycle
                    .iter()
                    .position(|v| v == *c)
                    .expect("corner lies on the cycle")
            })
            .collect();
        let mut split = corner_positions.clone();
        split.sort();
        let mut arcs = Vec::with_capacity(3);
        for i in 0..3 {
            let from = split[i];
            let to = split[(i + 1) % 3];
            let mut walk = Vec::new();
            let mut p = from;
            loop {
                walk.push(cycle[p].clone());
                if p == to && walk.len() > 1 {
                    break;
                }
                p = (p + 1) % cycle.len();
                if walk.len() > cycle.len() {
                    return Err(Error::BadBoundary("arc walk did not close".into()));
                }
            }
            let interior = walk[1..walk.len() - 1].to_vec();
            arcs.push((walk[0].clone(), walk[walk.len() - 1].clone(), interior));
        }

        Ok(DiskTriangulation {
            instance,
            boundary_cycle: cycle,
            arcs,
        })
    }

    pub fn instance(&self) -> &SpernerInstance {
        &self.instance
    }

    pub fn into_instance(self) -> SpernerInstance {
        self.instance
    }

    pub fn boundary_cycle(&self) -> &[VertexId] {
        &self.boundary_cycle
    }
}

/// Closes a disk into a sphere: the three corner chords form the outer
/// face, and each arc's lune is fan-triangulated from the arc's first
/// corner. No vertices are added. The second component is the outer face.
///
/// For the one-facet disk the output carries the outer face as a second
/// facet on the same vertex set; closedness is therefore checked by edge
/// incidence counting with multiplicity rather than by facet-set
/// validation.
pub fn extend_to_sphere(disk: &DiskTriangulation) -> Result<(SimplicialComplex, Simplex)> {
    let mut faces: Vec<Simplex> = disk.instance.complex().facets().to_vec();
    for (from, to, interior) in &disk.arcs {
        if interior.is_empty() {
            continue;
        }
        let mut rim: Vec<&VertexId> = interior.iter().collect();
        rim.push(to);
        for pair in rim.windows(2) {
            faces.push(Simplex::new([
                from.clone(),
                pair[0].clone(),
                pair[1].clone(),
            ])?);
        }
    }
    let tau = Simplex::new(disk.instance.corners().iter().cloned())?;
    faces.push(tau.clone());

    let sphere = SimplicialComplex::from_facets(faces);
    let incidences = sphere.ridge_incidences();
    if let Some((edge, n)) = incidences.iter().find(|(_, n)| **n != 2) {
        return Err(Error::BadBoundary(format!(
            "extension is not closed: edge {edge} lies in {n} faces"
        )));
    }
    let euler =
        sphere.vertex_count() as i64 - incidences.len() as i64 + sphere.facet_count() as i64;
    if euler != 2 {
        return Err(Error::BadBoundary(format!(
            "extension has Euler characteristic {euler}"
        )));
    }
    Ok((sphere, tau))
}

/// Three face sequences from sigma to tau, internally vertex-disjoint in
/// the dual graph, with the primal edge crossed between consecutive faces.
#[derive(Clone, Debug, Serialize)]
pub struct DualPathSystem {
    /// Face indices into the sphere's facet list, sigma first, tau last.
    pub paths: [Vec<usize>; 3],
    /// Primal edges crossed along each path (one fewer than faces).
    pub crossed: [Vec<Simplex>; 3],
}

impl DualPathSystem {
    pub fn crossed_edges(&self) -> BTreeSet<Simplex> {
        self.crossed.iter().flatten().cloned().collect()
    }
}

struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.cost.push(cost);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
        id
    }

    /// One successive-shortest-path augmentation: Bellman-Ford over arcs in
    /// index order (deterministic parents, strict improvement only), then a
    /// single unit pushed along the parent chain. Residual costs may be
    /// negative but never form a negative cycle.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        const INF: i64 = i64::MAX / 4;
        let nodes = self.adj.len();
        let mut dist = vec![INF; nodes];
        let mut parent_arc = vec![usize::MAX; nodes];
        dist[source] = 0;
        for _ in 0..nodes {
            let mut changed = false;
            for arc in 0..self.to.len() {
                if self.cap[arc] <= 0 {
                    continue;
                }
                let from = self.to[arc ^ 1];
                if dist[from] == INF {
                    continue;
                }
                let candidate = dist[from] + self.cost[arc];
                if candidate < dist[self.to[arc]] {
                    dist[self.to[arc]] = candidate;
                    parent_arc[self.to[arc]] = arc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == INF {
            return false;
        }
        let mut v = sink;
        while v != source {
            let arc = parent_arc[v];
            self.cap[arc] -= 1;
            self.cap[arc ^ 1] += 1;
            v = self.to[arc ^ 1];
        }
        true
    }

    fn flow_on(&self, arc: usize) -> i64 {
        self.cap[arc ^ 1]
    }
}

/// Computes three internally vertex-disjoint dual paths between the facets
/// `sigma` and `tau` of a closed triangulated sphere by unit-vertex-capacity
/// flow (vertex splitting, successive shortest augmenting paths over arcs
/// in construction order). When `sigma` and `tau` have equal vertex sets,
/// the first and second occurrences in the facet list are used.
pub fn three_disjoint_dual_paths(
    sphere: &SimplicialComplex,
    sigma: &Simplex,
    tau: &Simplex,
) -> Result<DualPathSystem> {
    three_disjoint_dual_paths_avoiding(sphere, sigma, tau, &BTreeSet::new())
}

/// As [`three_disjoint_dual_paths`], but edges in `penalized` cost far more
/// to cross, so the flow crosses as few of them as possible. The pipeline
/// penalizes the disk's boundary edges: each path then leaves the disk
/// exactly once, which keeps every boundary arc attached to its corners in
/// the region decomposition.
pub fn three_disjoint_dual_paths_avoiding(
    sphere: &SimplicialComplex,
    sigma: &Simplex,
    tau: &Simplex,
    penalized: &BTreeSet<Simplex>,
) -> Result<DualPathSystem> {
    let positions: Vec<usize> = sphere
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| *f == sigma)
        .map(|(i, _)| i)
        .collect();
    let (si, ti) = if sigma == tau {
        if positions.len() < 2 {
            return Err(Error::BadInput(
                "sigma and tau must be distinct facets".into(),
            ));
        }
        (positions[0], positions[1])
    } else {
        let si = *positions
            .first()
            .ok_or_else(|| Error::NotAFacet(sigma.to_string()))?;
        let ti = sphere
            .facets()
            .iter()
            .position(|f| f == tau)
            .ok_or_else(|| Error::NotAFacet(tau.to_string()))?;
        (si, ti)
    };
    dual_paths_by_index(sphere, si, ti, penalized)
}

fn dual_paths_by_index(
    sphere: &SimplicialComplex,
    si: usize,
    ti: usize,
    penalized: &BTreeSet<Simplex>,
) -> Result<DualPathSystem> {
    // Dual multigraph: one edge per primal edge, between the two faces
    // sharing it.
    let mut edge_faces: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (fi, f) in sphere.facets().iter().enumerate() {
        for v in f.vertices() {
            edge_faces.entry(f.without(v)).or_default().push(fi);
        }
    }
    for (edge, faces) in &edge_faces {
        if faces.len() != 2 {
            return Err(Error::BadInput(format!(
                "edge {edge} lies in {} faces; not a closed surface",
                faces.len()
            )));
        }
    }

    let face_count = sphere.facet_count();
    let node_in = |f: usize| 2 * f;
    let node_out = |f: usize| 2 * f + 1;
    let mut net = FlowNet::new(2 * face_count);
    for f in 0..face_count {
        let cap = if f == si || f == ti { 3 } else { 1 };
        net.add_arc(node_in(f), node_out(f), cap, 0);
    }
    // A penalty far above any possible path length makes penalized-edge
    // crossings the primary minimization target, path length the second.
    let penalty = 8 * face_count as i64 + 16;
    let mut arc_edges: BTreeMap<usize, Simplex> = BTreeMap::new();
    for (edge, faces) in &edge_faces {
        let cost = if penalized.contains(edge) { penalty } else { 1 };
        let (a, b) = (faces[0], faces[1]);
        let arc = net.add_arc(node_out(a), node_in(b), 1, cost);
        arc_edges.insert(arc, edge.clone());
        let arc = net.add_arc(node_out(b), node_in(a), 1, cost);
        arc_edges.insert(arc, edge.clone());
    }

    let source = node_out(si);
    let sink = node_in(ti);
    let mut value = 0;
    while value < 3 && net.augment(source, sink) {
        value += 1;
    }
    if value < 3 {
        return Err(Error::FlowLessThan3(value));
    }

    // Decompose the flow into three paths by walking flow-carrying arcs.
    let mut paths: Vec<Vec<usize>> = Vec::with_capacity(3);
    let mut crossed: Vec<Vec<Simplex>> = Vec::with_capacity(3);
    let mut used = vec![false; net.to.len()];
    for _ in 0..3 {
        let mut faces = vec![si];
        let mut edges = Vec::new();
        let mut node = source;
        while node != sink {
            let arc = *net.adj[node]
                .iter()
                .find(|&&a| a % 2 == 0 && !used[a] && net.flow_on(a) > 0)
                .expect("flow decomposes into source-sink paths");
            used[arc] = true;
            if let Some(edge) = arc_edges.get(&arc) {
                edges.push(edge.clone());
                faces.push(net.to[arc] / 2);
            }
            node = net.to[arc];
        }
        paths.push(faces);
        crossed.push(edges);
    }

    let system = DualPathSystem {
        paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
        crossed: [crossed[0].clone(), crossed[1].clone(), crossed[2].clone()],
    };
    debug_assert!(system.internally_disjoint());
    debug_assert!(system.terminal_edges_distinct());
    Ok(system)
}

impl DualPathSystem {
    /// No dual vertex other than the endpoints appears on two paths.
    pub fn internally_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        for path in &self.paths {
            for &f in &path[1..path.len() - 1] {
                if !seen.insert(f) {
                    return false;
                }
            }
        }
        true
    }

    /// The three paths leave sigma and enter tau through distinct edges.
    pub fn terminal_edges_distinct(&self) -> bool {
        let firsts: BTreeSet<&Simplex> = self.crossed.iter().map(|c| &c[0]).collect();
        let lasts: BTreeSet<&Simplex> = self.crossed.iter().map(|c| &c[c.len() - 1]).collect();
        firsts.len() == 3 && lasts.len() == 3
    }
}

/// Deletes the primal edges crossed by the paths, takes connected
/// components of what is left, and labels every vertex by the corner its
/// component contains. Exactly three components are required, each holding
/// one corner and one vertex of `sigma`.
pub fn region_labelling(
    sphere: &SimplicialComplex,
    paths: &DualPathSystem,
    sigma: &Simplex,
    _tau: &Simplex,
    corners: &[VertexId],
) -> Result<Labelling> {
    let crossed = paths.crossed_edges();
    let vertices = sphere.vertices();
    let index: BTreeMap<&VertexId, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (u, v) in sphere.skeleton_edges() {
        let edge = Simplex::new([u.clone(), v.clone()]).expect("skeleton edges are distinct");
        if crossed.contains(&edge) {
            continue;
        }
        adjacency[index[&u]].push(index[&v]);
        adjacency[index[&v]].push(index[&u]);
    }

    let mut component = vec![usize::MAX; vertices.len()];
    let mut components = 0usize;
    for start in 0..vertices.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components;
        components += 1;
        let mut queue = VecDeque::from([start]);
        component[start] = id;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if component[v] == usize::MAX {
                    component[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    if components != 3 {
        return Err(Error::RegionDecompositionFailed(format!(
            "{components} components instead of 3"
        )));
    }

    let mut corner_of_component: Vec<Option<usize>> = vec![None; 3];
    for (ci, corner) in corners.iter().enumerate() {
        let comp = component[index[corner]];
        if corner_of_component[comp].is_some() {
            return Err(Error::RegionDecompositionFailed(format!(
                "two corners share a component, second is {corner}"
            )));
        }
        corner_of_component[comp] = Some(ci);
    }
    let mut sigma_seen = vec![0usize; 3];
    for v in sigma.vertices() {
        sigma_seen[component[index[v]]] += 1;
    }
    if sigma_seen != vec![1, 1, 1] {
        return Err(Error::RegionDecompositionFailed(
            "sigma's vertices are not split one per component".into(),
        ));
    }

    let assignment = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let corner = corner_of_component[component[i]].expect("every component holds a corner");
            (v.clone(), (corner + 1) as Label)
        })
        .collect();
    Ok(Labelling::new(assignment))
}

/// Certificate of one pipeline run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PlanarCertificate {
    pub status: Status,
    pub labelling: Option<Labelling>,
    pub fallback_used: bool,
    /// Dual path lengths in faces crossed, sorted.
    pub path_lengths: Vec<usize>,
}

/// Full constructive run: extend, route, label, then post-validate that
/// the labelling is a valid Sperner labelling whose rainbow set is exactly
/// `{sigma}`. If validation or region decomposition fails and `fallback`
/// is set, the exhaustive unique-rainbow search answers instead (and the
/// certificate records that the fallback ran).
pub fn unique_rainbow_labelling_2d(
    disk: &DiskTriangulation,
    sigma: &Simplex,
    fallback: bool,
    opts: &SearchOptions,
) -> Result<PlanarCertificate> {
    if !disk.instance.complex().contains_facet(sigma) {
        return Err(Error::NotAFacet(sigma.to_string()));
    }
    let constructed = construct(disk, sigma);
    match constructed {
        Ok((labelling, path_lengths)) => Ok(PlanarCertificate {
            status: Status::Pass,
            labelling: Some(labelling),
            fallback_used: false,
            path_lengths,
        }),
        Err(err) => {
            if !fallback {
                return Err(err);
            }
            let witness = unique_rainbow_witness(&disk.instance, sigma, opts)?;
            Ok(PlanarCertificate {
                status: if witness.is_some() {
                    Status::Pass
                } else {
                    Status::Fail
                },
                labelling: witness,
                fallback_used: true,
                path_lengths: Vec::new(),
            })
        }
    }
}

fn construct(disk: &DiskTriangulation, sigma: &Simplex) -> Result<(Labelling, Vec<usize>)> {
    let (sphere, tau) = extend_to_sphere(disk)?;
    let boundary: BTreeSet<Simplex> = disk
        .instance
        .complex()
        .boundary_faces()
        .into_iter()
        .collect();
    let paths = three_disjoint_dual_paths_avoiding(&sphere, sigma, &tau, &boundary)?;
    let labelling = region_labelling(&sphere, &paths, sigma, &tau, disk.instance.corners())?;
    let restricted = labelling.restricted_to(disk.instance.complex());
    if !is_valid_sperner(&disk.instance, &restricted)? {
        return Err(Error::ValidationFailed(
            "region labelling violates a support".into(),
        ));
    }
    let report = rainbow_facets(&disk.instance, &restricted)?;
    if report.rainbow_facets != vec![sigma.clone()] {
        return Err(Error::ValidationFailed(format!(
            "rainbow set is {:?}, expected exactly {{{sigma}}}",
            report.rainbow_facets
        )));
    }
    let mut path_lengths: Vec<usize> = paths.crossed.iter().map(|c| c.len()).collect();
    path_lengths.sort();
    Ok((restricted, path_lengths))
}

// ---------------------------------------------------------------------------
// Shipped fixtures. These are the instances the regression and acceptance
// suites sweep; they are also handy seeds for the command line.

/// The d-simplex as its own (single-facet) triangulation, corners v1..v(d+1).
pub fn trivial_simplex_instance(d: usize) -> SpernerInstance {
    let corners: Vec<VertexId> = (1..=d + 1)
        .map(|i| VertexId::new(format!("v{i}")))
        .collect();
    let complex = SimplicialComplex::single_simplex(
        Simplex::new(corners.iter().cloned()).expect("corner names are distinct"),
    );
    let supports: BTreeMap<VertexId, LabelSet> = corners
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), LabelSet::singleton((i + 1) as Label)))
        .collect();
    SpernerInstance::new(complex, (d + 1) as Label, supports, corners)
}

/// The one-facet disk.
pub fn trivial_disk() -> DiskTriangulation {
    DiskTriangulation::new(trivial_simplex_instance(2)).expect("trivial disk is well-formed")
}

fn disk_from_parts(
    faces: &[[&str; 3]],
    side_supports: &[(&str, [Label; 2])],
    interior: &[&str],
) -> DiskTriangulation {
    let complex = SimplicialComplex::from_facets(
        faces
            .iter()
            .map(|f| Simplex::new(f.iter().map(|v| VertexId::new(*v))).unwrap())
            .collect(),
    );
    let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
    let corners: Vec<VertexId> = (1..=3).map(|i| VertexId::new(format!("v{i}"))).collect();
    for (i, c) in corners.iter().enumerate() {
        supports.insert(c.clone(), LabelSet::singleton((i + 1) as Label));
    }
    for (name, labels) in side_supports {
        supports.insert(VertexId::new(*name), labels.iter().copied().collect());
    }
    for name in interior {
        supports.insert(VertexId::new(*name), LabelSet::full(3));
    }
    DiskTriangulation::new(SpernerInstance::new(complex, 3, supports, corners))
        .expect("fixture disks are well-formed")
}

/// One stellar subdivision of the trivial disk: centre vertex u1.
pub fn stellar_disk_once() -> DiskTriangulation {
    disk_from_parts(
        &[["v1", "v2", "u1"], ["v2", "v3", "u1"], ["v1", "v3", "u1"]],
        &[],
        &["u1"],
    )
}

/// Second stellar subdivision applied to facet `which` (0..3) of
/// [`stellar_disk_once`]; the three choices give three distinct disks.
pub fn stellar_disk_twice(which: usize) -> DiskTriangulation {
    let once = stellar_disk_once();
    let facet = once.instance().complex().facets()[which].clone();
    let complex = crate::complex::stellar_subdivide_facet(
        once.instance().complex(),
        &facet,
        VertexId::new("u2"),
    )
    .expect("facet of the once-subdivided disk");
    let mut extra = BTreeMap::new();
    extra.insert(VertexId::new("u2"), LabelSet::full(3));
    DiskTriangulation::new(once.instance().with_complex(complex, extra))
        .expect("twice-subdivided disk is well-formed")
}

/// Wheel with one subdivision point per side: corners v1..v3, midpoints
/// m12, m23, m13, hub u0.
pub fn one_point_per_side_disk() -> DiskTriangulation {
    disk_from_parts(
        &[
            ["v1", "m12", "u0"],
            ["m12", "v2", "u0"],
            ["v2", "m23", "u0"],
            ["m23", "v3", "u0"],
            ["v3", "m13", "u0"],
            ["m13", "v1", "u0"],
        ],
        &[("m12", [1, 2]), ("m23", [2, 3]), ("m13", [1, 3])],
        &["u0"],
    )
}

/// Ten-vertex disk with two subdivision points per side and a hub ringed
/// by chords, the largest shipped two-dimensional fixture.
pub fn two_points_per_side_disk() -> DiskTriangulation {
    disk_from_parts(
        &[
            ["v1", "s12a", "s13a"],
            ["v2", "s12b", "s23a"],
            ["v3", "s23b", "s13b"],
            ["u0", "s12a", "s13a"],
            ["u0", "s12a", "s12b"],
            ["u0", "s12b", "s23a"],
            ["u0", "s23a", "s23b"],
            ["u0", "s23b", "s13b"],
            ["u0", "s13b", "s13a"],
        ],
        &[
            ("s12a", [1, 2]),
            ("s12b", [1, 2]),
            ("s23a", [2, 3]),
            ("s23b", [2, 3]),
            ("s13a", [1, 3]),
            ("s13b", [1, 3]),
        ],
        &["u0"],
    )
}

/// The named two-dimensional fixtures swept by the regression suites.
pub fn standard_disks() -> Vec<(String, DiskTriangulation)> {
    let mut out = vec![
        ("trivial".to_string(), trivial_disk()),
        ("stellar-once".to_string(), stellar_disk_once()),
    ];
    for which in 0..3 {
        out.push((format!("stellar-twice-{which}"), stellar_disk_twice(which)));
    }
    out.push((
        "two-points-per-side".to_string(),
        two_points_per_side_disk(),
    ));
    out
}
