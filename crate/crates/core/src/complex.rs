//! Pure simplicial complexes given by facet lists: structural validation,
//! joins, stellar subdivision, and exhaustive isomorphism testing.
//!
//! Complexes are abstract: a facet is a set of vertex ids and the face
//! closure is never stored, only enumerated on demand. All values are
//! immutable after construction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifier of a vertex inside a complex.
///
/// Ids are opaque strings. Every operation that invents vertices names them
/// deterministically, so repeated runs produce identical artifacts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        VertexId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

/// A set of vertices. Stored sorted and duplicate-free; the empty simplex
/// (dimension -1) is admitted as the join identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        vs.sort();
        for pair in vs.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].to_string()));
            }
        }
        Ok(Simplex(vs))
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Builds a simplex from single-character vertex names, e.g. `"ABGZ"`.
    pub fn from_letters(letters: &str) -> Self {
        Simplex::new(letters.chars().map(|c| VertexId::new(c.to_string())))
            .expect("letters must be distinct")
    }

    /// Parses a comma-separated list of vertex ids, e.g. `"A,B,p5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let ids = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(VertexId::new);
        Simplex::new(ids)
    }

    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    /// Union of two disjoint simplices (vertex clash is an error).
    pub fn join(&self, other: &Simplex) -> Result<Simplex> {
        if let Some(v) = self.0.iter().find(|v| other.contains(v)) {
            return Err(Error::VertexClash(v.to_string()));
        }
        Simplex::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    /// The simplex with one vertex removed.
    pub fn without(&self, v: &VertexId) -> Simplex {
        Simplex(self.0.iter().filter(|u| *u != v).cloned().collect())
    }

    /// All faces of the given dimension (subsets of size `k + 1`).
    pub fn faces_of_dim(&self, k: usize) -> Vec<Simplex> {
        self.0
            .iter()
            .cloned()
            .combinations(k + 1)
            .map(Simplex)
            .collect()
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .filter(|v| other.contains(v))
                .cloned()
                .collect(),
        )
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        f.write_str(&self.0.iter().map(|v| v.as_str()).join("-"))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A simplicial complex represented by its facet list (maximal simplices).
///
/// Construction canonicalises the order of facets and vertices but performs
/// no validation; [`validate_complex`] reports duplicate or non-maximal
/// facets. The face closure is implied, never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    pub fn from_facets(facets: Vec<Simplex>) -> Self {
        let mut facets = facets;
        facets.sort();
        let vertices: BTreeSet<VertexId> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().cloned())
            .collect();
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
        }
    }

    /// The complex whose single facet is the empty simplex; the identity
    /// for [`join`].
    pub fn join_identity() -> Self {
        SimplicialComplex::from_facets(vec![Simplex::empty()])
    }

    /// The complex consisting of one full simplex and its faces.
    pub fn single_simplex(s: Simplex) -> Self {
        SimplicialComplex::from_facets(vec![s])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension of the complex: the largest facet dimension (−1 for the
    /// join identity).
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains_facet(&self, s: &Simplex) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// A copy with one facet removed (all occurrences).
    pub fn without_facet(&self, s: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains_facet(s) {
            return Err(Error::NotAFacet(s.to_string()));
        }
        Ok(SimplicialComplex::from_facets(
            self.facets.iter().filter(|f| *f != s).cloned().collect(),
        ))
    }

    /// Codimension-1 faces of top-dimensional facets, with the number of
    /// facets containing each (duplicate facets count with multiplicity).
    pub fn ridge_incidences(&self) -> BTreeMap<Simplex, usize> {
        let d = self.dim();
        let mut out: BTreeMap<Simplex, usize> = BTreeMap::new();
        if d < 0 {
            return out;
        }
        for f in &self.facets {
            if f.dim() != d {
                continue;
            }
            for v in f.vertices() {
                *out.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Faces lying in exactly one top-dimensional facet.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        self.ridge_incidences()
            .into_iter()
            .filter(|(_, n)| *n == 1)
            .map(|(s, _)| s)
            .collect()
    }

    /// Every face of every facet, dimension 0 and up, enumerated from the
    /// facet list.
    pub fn closure(&self) -> BTreeSet<Simplex> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for k in 0..f.len() {
                for face in f.faces_of_dim(k) {
                    out.insert(face);
                }
            }
        }
        out
    }

    /// Face counts per dimension, `f_vector()[k]` = number of k-faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        if d < 0 {
            return Vec::new();
        }
        let mut counts = vec![0usize; d as usize + 1];
        for face in self.closure() {
            counts[face.dim() as usize] += 1;
        }
        counts
    }

    /// Alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, n)| if k % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    /// Edges of the 1-skeleton as sorted id pairs.
    pub fn skeleton_edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    out.insert((vs[i].clone(), vs[j].clone()));
                }
            }
        }
        out
    }

    /// Connectivity of the 1-skeleton (vacuously true on ≤ 1 vertex).
    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let index: BTreeMap<&VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (u, v) in self.skeleton_edges() {
            let (iu, iv) = (index[&u], index[&v]);
            adj[iu].push(iv);
            adj[iv].push(iu);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(dim {}, {} vertices, {} facets)",
            self.dim(),
            self.vertex_count(),
            self.facet_count()
        )
    }
}

/// Outcome of [`validate_complex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub pure: bool,
    /// Every codimension-1 face lies in one or two facets.
    pub pseudomanifold: bool,
    pub boundary_faces: Vec<Simplex>,
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
}

impl Serialize for Simplex {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<VertexId>::deserialize(deserializer)?;
        Simplex::new(ids).map_err(serde::de::Error::custom)
    }
}

/// Checks the triangulation-shaped preconditions of a facet list: purity,
/// the pseudomanifold property, boundary faces, f-vector and Euler
/// characteristic. Duplicate and non-maximal facets are hard errors.
pub fn validate_complex(c: &SimplicialComplex) -> Result<StructureReport> {
    if c.facets.is_empty() {
        return Err(Error::EmptyComplex);
    }
    for pair in c.facets.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateFacet(pair[0].to_string()));
        }
    }
    for f in &c.facets {
        for g in &c.facets {
            if f != g && f.is_face_of(g) {
                return Err(Error::NonMaximalFacet(f.to_string(), g.to_string()));
            }
        }
    }
    let pure = c.is_pure();
    let incidences = c.ridge_incidences();
    let pseudomanifold = pure && incidences.values().all(|&n| n == 1 || n == 2);
    Ok(StructureReport {
        pure,
        pseudomanifold,
        boundary_faces: c.boundary_faces(),
        f_vector: c.f_vector(),
        euler_characteristic: c.euler_characteristic(),
    })
}

/// The join of two complexes on disjoint vertex sets: every facet is the
/// union of a facet of `k` and a facet of `l`. Joining with
/// [`SimplicialComplex::join_identity`] returns the other complex unchanged.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    if let Some(v) = k.vertices.iter().find(|v| l.contains_vertex(v)) {
        return Err(Error::VertexClash(v.to_string()));
    }
    let mut facets = Vec::with_capacity(k.facet_count() * l.facet_count());
    for a in &k.facets {
        for b in &l.facets {
            facets.push(a.join(b)?);
        }
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// Replaces the facet `f` by the cone from `new_vertex` over the boundary
/// of `f`: one facet out, `dim f + 1` facets in.
pub fn stellar_subdivide_facet(
    c: &SimplicialComplex,
    f: &Simplex,
    new_vertex: VertexId,
) -> Result<SimplicialComplex> {
    if !c.contains_facet(f) || f.is_empty() {
        return Err(Error::NotAFacet(f.to_string()));
    }
    if c.contains_vertex(&new_vertex) {
        return Err(Error::VertexClash(new_vertex.to_string()));
    }
    let apex = Simplex::new([new_vertex])?;
    let mut facets: Vec<Simplex> = c.facets.iter().filter(|g| *g != f).cloned().collect();
    for v in f.vertices() {
        facets.push(f.without(v).join(&apex)?);
    }
    Ok(SimplicialComplex::from_facets(facets))
}

fn vertex_profile(c: &SimplicialComplex) -> BTreeMap<VertexId, Vec<usize>> {
    let mut out: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for v in &c.vertices {
        let mut sizes: Vec<usize> = c
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.len())
            .collect();
        sizes.sort();
        out.insert(v.clone(), sizes);
    }
    out
}

/// Searches for a vertex bijection mapping the facet list of `a` onto the
/// facet list of `b`. Exhaustive backtracking with facet-degree pruning;
/// intended for desk-scale complexes, errors out above `max_vertices`.
/// Count or profile mismatches are rejected before the size check.
pub fn complexes_isomorphic(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    max_vertices: usize,
) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    if a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count() {
        return Ok(None);
    }
    let size_multiset = |c: &SimplicialComplex| {
        let mut m: Vec<usize> = c.facets.iter().map(|f| f.len()).collect();
        m.sort();
        m
    };
    if size_multiset(a) != size_multiset(b) {
        return Ok(None);
    }
    let profile_a = vertex_profile(a);
    let profile_b = vertex_profile(b);
    {
        let mut pa: Vec<&Vec<usize>> = profile_a.values().collect();
        let mut pb: Vec<&Vec<usize>> = profile_b.values().collect();
        pa.sort();
        pb.sort();
        if pa != pb {
            return Ok(None);
        }
    }
    if a.vertex_count() > max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the isomorphism bound {max_vertices}",
            a.vertex_count()
        )));
    }

    let a_vertices: Vec<VertexId> = a.vertices.clone();
    let b_vertices: Vec<VertexId> = b.vertices.clone();
    // Facets of `a` indexed by the position of their last-mapped vertex in
    // the search order, so each is checked as soon as it is fully mapped.
    let order_index: BTreeMap<&VertexId, usize> =
        a_vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut completed_at: Vec<Vec<&Simplex>> = vec![Vec::new(); a_vertices.len()];
    for f in &a.facets {
        if let Some(last) = f.vertices().iter().map(|v| order_index[v]).max() {
            completed_at[last].push(f);
        }
    }

    struct Search<'s> {
        a_vertices: &'s [VertexId],
        b_vertices: &'s [VertexId],
        profile_a: &'s BTreeMap<VertexId, Vec<usize>>,
        profile_b: &'s BTreeMap<VertexId, Vec<usize>>,
        completed_at: &'s [Vec<&'s Simplex>],
        b: &'s SimplicialComplex,
        assignment: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.a_vertices.len() {
                return true;
            }
            let av = &self.a_vertices[depth];
            for j in 0..self.b_vertices.len() {
                if self.used[j] || self.profile_a[av] != self.profile_b[&self.b_vertices[j]] {
                    continue;
                }
                self.assignment[depth] = Some(j);
                self.used[j] = true;
                let ok = self.completed_at[depth].iter().all(|f| {
                    let image = Simplex::new(f.vertices().iter().map(|v| {
                        let i = self.a_vertices.binary_search(v).unwrap();
                        self.b_vertices[self.assignment[i].unwrap()].clone()
                    }))
                    .expect("bijection preserves distinctness");
                    self.b.contains_facet(&image)
                });
                if ok && self.run(depth + 1) {
                    return true;
                }
                self.assignment[depth] = None;
                self.used[j] = false;
            }
            false
        }
    }

    let mut search = Search {
        a_vertices: &a_vertices,
        b_vertices: &b_vertices,
        profile_a: &profile_a,
        profile_b: &profile_b,
        completed_at: &completed_at,
        b,
        assignment: vec![None; a_vertices.len()],
        used: vec![false; b_vertices.len()],
    };
    if search.run(0) {
        let map = a_vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), b_vertices[search.assignment[i].unwrap()].clone()))
            .collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}
