//! The graph G_K attached to a Sperner instance: one vertex per vertex of
//! K, per facet of K, and per facet of the ambient simplex, wired so that
//! proper (d+1)-colourings of G_K correspond to rainbow-free Sperner
//! labellings. `verify_colouring_equivalence` machine-checks that
//! correspondence by deciding both sides independently.

use std::collections::BTreeMap;
use std::fmt;

use crate::chromatic::{is_k_colourable, Colouring, Graph};
use crate::complex::{Simplex, VertexId};
use crate::error::Result;
use crate::instance::{Label, SpernerInstance};
use crate::sperner::{verify_sperner_lemma, Labelling, SearchOptions, Status};

/// Role and provenance of one vertex of G_K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GallaiRole {
    /// V1: a vertex of K.
    KVertex(VertexId),
    /// V2: a facet of K.
    FacetVertex(Simplex),
    /// V3: the facet of the ambient simplex opposite the given corner label.
    DeltaFacetVertex(Label),
}

impl fmt::Display for GallaiRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GallaiRole::KVertex(v) => write!(f, "V1 {v}"),
            GallaiRole::FacetVertex(s) => write!(f, "V2 {s}"),
            GallaiRole::DeltaFacetVertex(l) => write!(f, "V3 w{l}"),
        }
    }
}

/// G_K together with the role of every graph vertex. Layout: the vertices
/// of K in sorted order, then the facets of K in sorted order, then the
/// ambient-facet vertices w1..w(d+1).
#[derive(Clone, Debug)]
pub struct GallaiGraph {
    graph: Graph,
    roles: Vec<GallaiRole>,
}

impl GallaiGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roles(&self) -> &[GallaiRole] {
        &self.roles
    }

    pub fn index_of_k_vertex(&self, v: &VertexId) -> Option<usize> {
        self.roles
            .iter()
            .position(|r| matches!(r, GallaiRole::KVertex(u) if u == v))
    }

    pub fn index_of_facet(&self, f: &Simplex) -> Option<usize> {
        self.roles
            .iter()
            .position(|r| matches!(r, GallaiRole::FacetVertex(g) if g == f))
    }

    pub fn index_of_delta_facet(&self, label: Label) -> Option<usize> {
        self.roles
            .iter()
            .position(|r| matches!(r, GallaiRole::DeltaFacetVertex(l) if *l == label))
    }

    /// Number of triangles (3-cliques) in the graph.
    pub fn triangle_count(&self) -> usize {
        triangle_count(&self.graph)
    }
}

/// Exact count of 3-cliques by scanning ordered triples.
pub fn triangle_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Builds G_K. Edges: a K-vertex joins every facet of K containing it; a
/// K-vertex `u` joins the ambient facet opposite corner `j` exactly when
/// `j` is outside the support of `u` (the support encodes the carrier of
/// `u`, so this is membership of `u` in that ambient facet); the ambient
/// facet vertices form a clique.
pub fn build_gallai_graph(s: &SpernerInstance) -> GallaiGraph {
    let k_vertices = s.complex().vertices();
    let facets = s.complex().facets();
    let labels = s.label_count();
    let n = k_vertices.len();
    let m = facets.len();

    let mut roles = Vec::with_capacity(n + m + labels as usize);
    roles.extend(k_vertices.iter().cloned().map(GallaiRole::KVertex));
    roles.extend(facets.iter().cloned().map(GallaiRole::FacetVertex));
    roles.extend((1..=labels).map(GallaiRole::DeltaFacetVertex));

    let vertex_index: BTreeMap<&VertexId, usize> =
        k_vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let w_index = |label: Label| n + m + label as usize - 1;

    let mut graph = Graph::new(roles.len());
    for (fi, facet) in facets.iter().enumerate() {
        for v in facet.vertices() {
            graph.add_edge(vertex_index[v], n + fi);
        }
    }
    for (vi, v) in k_vertices.iter().enumerate() {
        let support = s.support(v).unwrap_or_default();
        for label in 1..=labels {
            if !support.contains(label) {
                graph.add_edge(vi, w_index(label));
            }
        }
    }
    for a in 1..=labels {
        for b in a + 1..=labels {
            graph.add_edge(w_index(a), w_index(b));
        }
    }
    GallaiGraph { graph, roles }
}

/// The direct (d+2)-colouring: the ambient clique gets colours 1..d+1,
/// facet vertices colour 1, K-vertices colour d+2. Verified proper before
/// returning.
pub fn explicit_upper_colouring(g: &GallaiGraph) -> Colouring {
    let labels = g
        .roles
        .iter()
        .filter(|r| matches!(r, GallaiRole::DeltaFacetVertex(_)))
        .count();
    let colours = g
        .roles
        .iter()
        .map(|role| match role {
            GallaiRole::KVertex(_) => labels + 1,
            GallaiRole::FacetVertex(_) => 1,
            GallaiRole::DeltaFacetVertex(l) => *l as usize,
        })
        .collect();
    let colouring = Colouring { colours };
    assert!(
        colouring.is_proper(g.graph()),
        "the structural colouring must be proper on a Gallai graph"
    );
    colouring
}

/// Certificate for the two-sided check behind the chromatic reading of the
/// rainbow-existence sweep.
#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EquivalenceCertificate {
    pub status: Status,
    /// Whether G_K admits a proper (d+1)-colouring.
    pub colourable: bool,
    /// Whether some valid labelling has no rainbow facet.
    pub rainbow_free_exists: bool,
    pub space_size: u128,
    pub colouring: Option<Colouring>,
    pub rainbow_free_labelling: Option<Labelling>,
}

/// Decides independently (i) whether G_K is (d+1)-colourable by exhaustive
/// graph search and (ii) whether a rainbow-free valid labelling exists by
/// exhaustive sweep, and certifies that the answers agree.
pub fn verify_colouring_equivalence(
    s: &SpernerInstance,
    opts: &SearchOptions,
) -> Result<EquivalenceCertificate> {
    let gallai = build_gallai_graph(s);
    let colouring = is_k_colourable(gallai.graph(), s.label_count() as usize);
    let sweep = verify_sperner_lemma(s, opts)?;
    let colourable = colouring.is_some();
    let rainbow_free_exists = !sweep.status.passed();
    Ok(EquivalenceCertificate {
        status: if colourable == rainbow_free_exists {
            Status::Pass
        } else {
            Status::Fail
        },
        colourable,
        rainbow_free_exists,
        space_size: sweep.space_size,
        colouring,
        rainbow_free_labelling: sweep.witness,
    })
}
