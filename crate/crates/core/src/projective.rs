//! Centrally symmetric spheres and their antipodal quotients. The
//! construction glues three punctured copies of a cross-polytope boundary
//! into a sphere with a free colour-reversing involution, splices a black
//! and a white copy of a Sperner instance into the two monochromatic
//! facets, cones every copied facet with an apex of the opposite colour,
//! and finally quotients bichromatic edges by the involution. The quotient
//! graph is checked to be the instance's Gallai graph, non-bipartite, and a
//! quadrangulation in the facet-wise complete-bipartite sense.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chromatic::{odd_cycle_or_bipartition, Graph, Parity};
use crate::complex::{validate_complex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::gallai::{build_gallai_graph, GallaiGraph};
use crate::instance::{Label, SpernerInstance};
use crate::sperner::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Colour {
    #[serde(rename = "black")]
    Black,
    #[serde(rename = "white")]
    White,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }
}

/// A complex with a free simplicial involution and an antisymmetric
/// two-colouring in which no edge joins antipodal vertices.
#[derive(Clone, Debug)]
pub struct SymmetricComplex {
    complex: SimplicialComplex,
    involution: BTreeMap<VertexId, VertexId>,
    colour: BTreeMap<VertexId, Colour>,
}

impl SymmetricComplex {
    pub fn new(
        complex: SimplicialComplex,
        involution: BTreeMap<VertexId, VertexId>,
        colour: BTreeMap<VertexId, Colour>,
    ) -> Self {
        SymmetricComplex {
            complex,
            involution,
            colour,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn involution(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.involution
    }

    pub fn colours(&self) -> &BTreeMap<VertexId, Colour> {
        &self.colour
    }

    pub fn antipode(&self, v: &VertexId) -> Option<&VertexId> {
        self.involution.get(v)
    }

    pub fn colour_of(&self, v: &VertexId) -> Option<Colour> {
        self.colour.get(v).copied()
    }

    /// Image of a facet under the involution.
    pub fn antipodal_facet(&self, f: &Simplex) -> Result<Simplex> {
        Simplex::new(
            f.vertices()
                .iter()
                .map(|v| {
                    self.antipode(v)
                        .cloned()
                        .ok_or_else(|| Error::InvariantViolation(format!("no antipode for {v}")))
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Checks that the involution is a free simplicial order-2 bijection,
    /// that it reverses colours, and that no facet contains an antipodal
    /// pair (hence no edge joins one).
    pub fn validate(&self) -> Result<()> {
        for v in self.complex.vertices() {
            let image = self
                .antipode(v)
                .ok_or_else(|| Error::InvariantViolation(format!("vertex {v} has no antipode")))?;
            if image == v {
                return Err(Error::InvariantViolation(format!("{v} is a fixed point")));
            }
            if !self.complex.contains_vertex(image) {
                return Err(Error::InvariantViolation(format!(
                    "antipode {image} of {v} is not a vertex"
                )));
            }
            if self.antipode(image) != Some(v) {
                return Err(Error::InvariantViolation(format!(
                    "involution is not an order-2 map at {v}"
                )));
            }
            let (cv, ci) = (self.colour_of(v), self.colour_of(image));
            match (cv, ci) {
                (Some(a), Some(b)) if a != b => {}
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "antipodal pair {v}/{image} is not bicoloured"
                    )))
                }
            }
        }
        for f in self.complex.facets() {
            let image = self.antipodal_facet(f)?;
            if !self.complex.contains_facet(&image) {
                return Err(Error::InvariantViolation(format!(
                    "involution is not simplicial: image of {f} is missing"
                )));
            }
            for v in f.vertices() {
                if f.contains(self.antipode(v).expect("checked above")) {
                    return Err(Error::InvariantViolation(format!(
                        "facet {f} contains the antipodal pair of {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when every facet carries both colours.
    pub fn no_monochromatic_facet(&self) -> bool {
        self.complex.facets().iter().all(|f| {
            let mut black = false;
            let mut white = false;
            for v in f.vertices() {
                match self.colour_of(v) {
                    Some(Colour::Black) => black = true,
                    Some(Colour::White) => white = true,
                    None => return false,
                }
            }
            black && white
        })
    }
}

/// Sanity conditions certifying a sphere at desk scale: pure, closed
/// pseudomanifold, connected 1-skeleton, and the alternating face-count sum
/// of a d-sphere (2 for even d, 0 for odd d). Full sphere recognition is
/// out of scope; these necessary conditions catch construction bugs.
pub fn certify_sphere_shape(c: &SimplicialComplex, d: i64) -> Result<()> {
    let report = validate_complex(c)?;
    if !report.pure || c.dim() != d {
        return Err(Error::InvariantViolation(format!(
            "expected a pure {d}-complex"
        )));
    }
    if !report.pseudomanifold || !report.boundary_faces.is_empty() {
        return Err(Error::InvariantViolation(
            "expected a closed pseudomanifold".into(),
        ));
    }
    if !c.is_connected() {
        return Err(Error::InvariantViolation("complex is disconnected".into()));
    }
    let expected = if d % 2 == 0 { 2 } else { 0 };
    if report.euler_characteristic != expected {
        return Err(Error::InvariantViolation(format!(
            "Euler characteristic {} differs from {expected}",
            report.euler_characteristic
        )));
    }
    Ok(())
}

/// The glued sphere together with its two monochromatic facets, indexed so
/// that position `i` of each facet carries the vertex that will be matched
/// with the corner of label `i + 1`.
#[derive(Clone, Debug)]
pub struct GluedSphere {
    sym: SymmetricComplex,
    all_white: Vec<VertexId>,
    all_black: Vec<VertexId>,
    rim_white: Vec<VertexId>,
    rim_black: Vec<VertexId>,
}

impl GluedSphere {
    pub fn symmetric(&self) -> &SymmetricComplex {
        &self.sym
    }

    pub fn all_white_facet(&self) -> &[VertexId] {
        &self.all_white
    }

    pub fn all_black_facet(&self) -> &[VertexId] {
        &self.all_black
    }

    pub fn dim(&self) -> i64 {
        self.sym.complex().dim()
    }
}

/// Glues three punctured copies of the boundary of the (d+1)-dimensional
/// cross polytope into a centrally symmetric d-sphere on 4(d+1) vertices:
/// a cylinder (both poles removed) capped on one side by a copy missing the
/// white pole and on the other by a copy missing the black pole. The result
/// has a unique all-white facet and a unique all-black facet, swapped by
/// the involution.
pub fn build_glued_sphere(d: usize) -> GluedSphere {
    assert!(d >= 1, "the construction needs dimension at least 1");
    let k = d + 1;
    let name = |prefix: &str, i: usize| VertexId::new(format!("{prefix}{i}"));
    // cw/cb: cylinder whites and blacks (shared rims); pw/pb: private cap
    // vertices, white on the cap missing the black pole and vice versa.
    let cw: Vec<VertexId> = (1..=k).map(|i| name("cw", i)).collect();
    let cb: Vec<VertexId> = (1..=k).map(|i| name("cb", i)).collect();
    let pw: Vec<VertexId> = (1..=k).map(|i| name("pw", i)).collect();
    let pb: Vec<VertexId> = (1..=k).map(|i| name("pb", i)).collect();

    let facet = |plus: &[VertexId], minus: &[VertexId], signs: u32| {
        Simplex::new((0..k).map(|i| {
            if signs >> i & 1 == 0 {
                plus[i].clone()
            } else {
                minus[i].clone()
            }
        }))
        .expect("sign choices are distinct vertices")
    };
    let all_plus = 0u32;
    let all_minus = (1u32 << k) - 1;

    let mut facets = Vec::new();
    for signs in 0..(1u32 << k) {
        // Cap containing the all-black facet: positives are the white rim.
        if signs != all_plus {
            facets.push(facet(&cw, &pb, signs));
        }
        // Cylinder between the two rims.
        if signs != all_plus && signs != all_minus {
            facets.push(facet(&cw, &cb, signs));
        }
        // Cap containing the all-white facet.
        if signs != all_minus {
            facets.push(facet(&pw, &cb, signs));
        }
    }

    let mut involution = BTreeMap::new();
    let mut colour = BTreeMap::new();
    for i in 0..k {
        involution.insert(pw[i].clone(), pb[i].clone());
        involution.insert(pb[i].clone(), pw[i].clone());
        involution.insert(cw[i].clone(), cb[i].clone());
        involution.insert(cb[i].clone(), cw[i].clone());
        colour.insert(pw[i].clone(), Colour::White);
        colour.insert(cw[i].clone(), Colour::White);
        colour.insert(pb[i].clone(), Colour::Black);
        colour.insert(cb[i].clone(), Colour::Black);
    }

    GluedSphere {
        sym: SymmetricComplex::new(SimplicialComplex::from_facets(facets), involution, colour),
        all_white: pw,
        all_black: pb,
        rim_white: cw,
        rim_black: cb,
    }
}

/// Role of a vertex of the spliced complex, shared by an antipodal pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuadRole {
    /// Corner of the instance with the given label (cap pole vertices).
    Corner(Label),
    /// Non-corner vertex of the instance (fresh copy vertices).
    KVertex(VertexId),
    /// Apex subdividing the copy of the given instance facet.
    Apex(Simplex),
    /// Cylinder rim position, matching the ambient facet opposite the
    /// corner of the given label.
    Cylinder(Label),
}

/// The spliced symmetric complex with per-vertex roles.
#[derive(Clone, Debug)]
pub struct QuadComplex {
    sym: SymmetricComplex,
    roles: BTreeMap<VertexId, QuadRole>,
}

impl QuadComplex {
    pub fn symmetric(&self) -> &SymmetricComplex {
        &self.sym
    }

    pub fn role_of(&self, v: &VertexId) -> Option<&QuadRole> {
        self.roles.get(v)
    }
}

/// Splices a white and a black copy of the instance into the glued
/// sphere's two monochromatic facets (identifying instance corners with
/// facet vertices in label order, antipodally on the black side), then
/// cones every facet of the white copy with a black apex and every facet
/// of the black copy with a white apex. The result has no monochromatic
/// facet and keeps the free colour-reversing involution.
///
/// The instance's boundary must consist of corner vertices only: copies
/// are glued along the boundary of the monochromatic facets, so interior
/// refinements are supported but boundary subdivisions are not.
pub fn insert_k_copies(sphere: &GluedSphere, s: &SpernerInstance) -> Result<QuadComplex> {
    if s.dim() != sphere.dim() {
        return Err(Error::DimensionMismatch(format!(
            "instance dimension {} vs sphere dimension {}",
            s.dim(),
            sphere.dim()
        )));
    }
    let corner_set: Vec<&VertexId> = s.corners().iter().collect();
    for face in s.complex().boundary_faces() {
        for v in face.vertices() {
            if !corner_set.contains(&v) {
                return Err(Error::UnsupportedBoundary(format!(
                    "boundary vertex {v} is not a corner; only interior refinements embed"
                )));
            }
        }
    }

    let sym = sphere.symmetric();
    let mut facets: Vec<Simplex> = Vec::new();
    let white_pole = Simplex::new(sphere.all_white_facet().iter().cloned())?;
    let black_pole = Simplex::new(sphere.all_black_facet().iter().cloned())?;
    for f in sym.complex().facets() {
        if *f != white_pole && *f != black_pole {
            facets.push(f.clone());
        }
    }

    let mut involution = sym.involution().clone();
    let mut colour = sym.colours().clone();
    let mut roles: BTreeMap<VertexId, QuadRole> = BTreeMap::new();
    for (i, (w, b)) in sphere
        .all_white_facet()
        .iter()
        .zip(sphere.all_black_facet())
        .enumerate()
    {
        roles.insert(w.clone(), QuadRole::Corner((i + 1) as Label));
        roles.insert(b.clone(), QuadRole::Corner((i + 1) as Label));
    }
    for (i, (w, b)) in sphere.rim_white.iter().zip(&sphere.rim_black).enumerate() {
        roles.insert(w.clone(), QuadRole::Cylinder((i + 1) as Label));
        roles.insert(b.clone(), QuadRole::Cylinder((i + 1) as Label));
    }

    // Vertex maps for the two copies.
    let mut white_map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut black_map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (i, corner) in s.corners().iter().enumerate() {
        white_map.insert(corner.clone(), sphere.all_white_facet()[i].clone());
        black_map.insert(corner.clone(), sphere.all_black_facet()[i].clone());
    }
    for v in s.complex().vertices() {
        if white_map.contains_key(v) {
            continue;
        }
        let w = VertexId::new(format!("kw:{v}"));
        let b = VertexId::new(format!("kb:{v}"));
        involution.insert(w.clone(), b.clone());
        involution.insert(b.clone(), w.clone());
        colour.insert(w.clone(), Colour::White);
        colour.insert(b.clone(), Colour::Black);
        roles.insert(w.clone(), QuadRole::KVertex(v.clone()));
        roles.insert(b.clone(), QuadRole::KVertex(v.clone()));
        white_map.insert(v.clone(), w);
        black_map.insert(v.clone(), b);
    }

    let map_facet = |f: &Simplex, map: &BTreeMap<VertexId, VertexId>| {
        Simplex::new(f.vertices().iter().map(|v| map[v].clone())).expect("copy maps are injective")
    };
    for (fi, f) in s.complex().facets().iter().enumerate() {
        let white_facet = map_facet(f, &white_map);
        let black_facet = map_facet(f, &black_map);
        let apex_b = VertexId::new(format!("ab{}", fi + 1));
        let apex_w = VertexId::new(format!("aw{}", fi + 1));
        involution.insert(apex_b.clone(), apex_w.clone());
        involution.insert(apex_w.clone(), apex_b.clone());
        colour.insert(apex_b.clone(), Colour::Black);
        colour.insert(apex_w.clone(), Colour::White);
        roles.insert(apex_b.clone(), QuadRole::Apex(f.clone()));
        roles.insert(apex_w.clone(), QuadRole::Apex(f.clone()));
        let apex_b = Simplex::new([apex_b])?;
        let apex_w = Simplex::new([apex_w])?;
        for v in white_facet.vertices() {
            facets.push(white_facet.without(v).join(&apex_b)?);
        }
        for v in black_facet.vertices() {
            facets.push(black_facet.without(v).join(&apex_w)?);
        }
    }

    let sym = SymmetricComplex::new(SimplicialComplex::from_facets(facets), involution, colour);
    sym.validate()?;
    if !sym.no_monochromatic_facet() {
        return Err(Error::InvariantViolation(
            "splicing left a monochromatic facet".into(),
        ));
    }
    Ok(QuadComplex { sym, roles })
}

/// Quotient of a symmetric complex: one vertex per antipodal pair, one
/// edge per bichromatic skeleton edge; monochromatic edges are dropped
/// before identification.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    /// Class index to the antipodal pair it identifies (lexicographically
    /// smaller vertex first).
    pub classes: Vec<(VertexId, VertexId)>,
}

impl QuotientGraph {
    pub fn class_of(&self, v: &VertexId) -> Option<usize> {
        self.classes.iter().position(|(a, b)| a == v || b == v)
    }
}

/// Builds the antipodal quotient graph. The symmetric-complex invariants
/// are re-validated first; a violation is an error, not a certificate.
pub fn antipodal_quotient(sym: &SymmetricComplex) -> Result<QuotientGraph> {
    sym.validate()?;
    let mut classes: Vec<(VertexId, VertexId)> = Vec::new();
    let mut class_index: BTreeMap<&VertexId, usize> = BTreeMap::new();
    let vertices = sym.complex().vertices();
    for v in vertices {
        if class_index.contains_key(v) {
            continue;
        }
        let partner = sym.antipode(v).expect("validated involution");
        let id = classes.len();
        classes.push((v.clone(), partner.clone()));
        class_index.insert(v, id);
        let partner_ref = vertices
            .iter()
            .find(|u| *u == partner)
            .expect("antipode is a vertex");
        class_index.insert(partner_ref, id);
    }
    let mut graph = Graph::new(classes.len());
    for (u, v) in sym.complex().skeleton_edges() {
        if sym.colour_of(&u) == sym.colour_of(&v) {
            continue;
        }
        let (cu, cv) = (class_index[&u], class_index[&v]);
        debug_assert_ne!(cu, cv, "antipodal vertices are never adjacent");
        graph.add_edge(cu, cv);
    }
    Ok(QuotientGraph { graph, classes })
}

/// Certificate of the three quotient checks.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuadCertificate {
    pub status: Status,
    /// The role bijection between quotient classes and Gallai-graph
    /// vertices is a graph isomorphism.
    pub isomorphic_to_gallai: bool,
    /// An odd cycle in the quotient graph (class indices), if any.
    pub odd_cycle: Option<Vec<usize>>,
    /// Every facet's classes induce a complete bipartite subgraph with at
    /// least one edge.
    pub facet_property: bool,
    pub quotient_vertices: usize,
    pub failure: Option<String>,
}

/// Builds the spliced complex for the instance, quotients it, and runs the
/// three checks: the explicit role bijection onto the Gallai graph is an
/// isomorphism, the quotient is non-bipartite (odd-cycle certificate), and
/// every facet of the spliced complex induces a complete bipartite
/// subgraph of the quotient between its white and black classes.
pub fn verify_quadrangulation(s: &SpernerInstance) -> Result<QuadCertificate> {
    let d = s.dim();
    if d < 1 {
        return Err(Error::BadDimension(format!("dimension {d} below 1")));
    }
    let sphere = build_glued_sphere(d as usize);
    certify_sphere_shape(sphere.symmetric().complex(), d)?;
    let ktilde = insert_k_copies(&sphere, s)?;
    certify_sphere_shape(ktilde.symmetric().complex(), d)?;
    let quotient = antipodal_quotient(ktilde.symmetric())?;
    let gallai = build_gallai_graph(s);

    let mut failure = None;
    let isomorphic = match check_role_bijection(s, &ktilde, &quotient, &gallai) {
        Ok(()) => true,
        Err(e) => {
            failure = Some(e.to_string());
            false
        }
    };

    let odd_cycle = match odd_cycle_or_bipartition(&quotient.graph) {
        Parity::OddCycle(cycle) => Some(cycle),
        Parity::Bipartition(_) => {
            failure.get_or_insert_with(|| "quotient graph is bipartite".to_string());
            None
        }
    };

    let facet_property = match check_facet_property(&ktilde, &quotient) {
        Ok(()) => true,
        Err(e) => {
            failure.get_or_insert(e.to_string());
            false
        }
    };

    let status = if isomorphic && odd_cycle.is_some() && facet_property {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(QuadCertificate {
        status,
        isomorphic_to_gallai: isomorphic,
        odd_cycle,
        facet_property,
        quotient_vertices: quotient.graph.vertex_count(),
        failure,
    })
}

/// Maps every quotient class to its Gallai-graph vertex via roles and
/// compares edge sets exactly.
fn check_role_bijection(
    s: &SpernerInstance,
    ktilde: &QuadComplex,
    quotient: &QuotientGraph,
    gallai: &GallaiGraph,
) -> Result<()> {
    if quotient.graph.vertex_count() != gallai.graph().vertex_count() {
        return Err(Error::InvariantViolation(format!(
            "class count {} differs from Gallai vertex count {}",
            quotient.graph.vertex_count(),
            gallai.graph().vertex_count()
        )));
    }
    let mut image = vec![usize::MAX; quotient.classes.len()];
    for (ci, (rep, partner)) in quotient.classes.iter().enumerate() {
        let role = ktilde
            .role_of(rep)
            .ok_or_else(|| Error::InvariantViolation(format!("vertex {rep} has no role")))?;
        if ktilde.role_of(partner) != Some(role) {
            return Err(Error::InvariantViolation(format!(
                "antipodal pair {rep}/{partner} carries two roles"
            )));
        }
        let target = match role {
            QuadRole::Corner(label) => s
                .corner(*label)
                .and_then(|corner| gallai.index_of_k_vertex(corner)),
            QuadRole::KVertex(v) => gallai.index_of_k_vertex(v),
            QuadRole::Apex(f) => gallai.index_of_facet(f),
            QuadRole::Cylinder(label) => gallai.index_of_delta_facet(*label),
        };
        image[ci] = target.ok_or_else(|| {
            Error::InvariantViolation(format!("role {role:?} has no Gallai counterpart"))
        })?;
    }
    {
        let mut seen = image.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != image.len() {
            return Err(Error::InvariantViolation(
                "role bijection is not injective".into(),
            ));
        }
    }
    let mut quotient_edges: Vec<(usize, usize)> = quotient
        .graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (image[u], image[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    quotient_edges.sort();
    let gallai_edges = gallai.graph().edges();
    if quotient_edges != gallai_edges {
        return Err(Error::InvariantViolation(format!(
            "edge sets differ: {} quotient edges vs {} Gallai edges",
            quotient_edges.len(),
            gallai_edges.len()
        )));
    }
    Ok(())
}

/// Every facet's classes must span a complete bipartite quotient subgraph
/// between its white side and its black side, with both sides non-empty.
/// (The *induced* subgraph may have extra same-side edges: the rim classes
/// of a cylinder facet are pairwise adjacent through other facets, exactly
/// as the ambient clique is in the Gallai graph. This matches the classical
/// surface case, where two same-side corners of a quadrilateral may be
/// adjacent through a different face.)
fn check_facet_property(ktilde: &QuadComplex, quotient: &QuotientGraph) -> Result<()> {
    let sym = ktilde.symmetric();
    let class_index: BTreeMap<&VertexId, usize> = {
        let mut map = BTreeMap::new();
        for (i, (a, b)) in quotient.classes.iter().enumerate() {
            map.insert(a, i);
            map.insert(b, i);
        }
        map
    };
    for f in sym.complex().facets() {
        let mut white = Vec::new();
        let mut black = Vec::new();
        for v in f.vertices() {
            match sym.colour_of(v) {
                Some(Colour::White) => white.push(class_index[v]),
                Some(Colour::Black) => black.push(class_index[v]),
                None => {
                    return Err(Error::InvariantViolation(format!(
                        "vertex {v} is uncoloured"
                    )))
                }
            }
        }
        if white.is_empty() || black.is_empty() {
            return Err(Error::InvariantViolation(format!(
                "facet {f} is monochromatic"
            )));
        }
        for &w in &white {
            for &b in &black {
                if !quotient.graph.has_edge(w, b) {
                    return Err(Error::InvariantViolation(format!(
                        "facet {f}: cross pair {w}-{b} missing in the quotient"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::build_kd;
    use crate::planar;

    #[test]
    fn glued_sphere_counts() {
        let s2 = build_glued_sphere(2);
        let c = s2.symmetric().complex();
        assert_eq!(c.vertex_count(), 12);
        assert_eq!(c.facet_count(), 20);
        assert_eq!(c.euler_characteristic(), 2);
        certify_sphere_shape(c, 2).unwrap();

        let s3 = build_glued_sphere(3);
        let c = s3.symmetric().complex();
        assert_eq!(c.vertex_count(), 16);
        assert_eq!(c.facet_count(), 44);
        assert_eq!(c.euler_characteristic(), 0);
        certify_sphere_shape(c, 3).unwrap();
    }

    #[test]
    fn glued_sphere_involution_and_poles() {
        for d in 1..=3 {
            let sphere = build_glued_sphere(d);
            sphere.symmetric().validate().unwrap();
            let c = sphere.symmetric().complex();
            let monochrome: Vec<&Simplex> = c
                .facets()
                .iter()
                .filter(|f| {
                    let colours: Vec<Colour> = f
                        .vertices()
                        .iter()
                        .map(|v| sphere.symmetric().colour_of(v).unwrap())
                        .collect();
                    colours.windows(2).all(|w| w[0] == w[1])
                })
                .collect();
            assert_eq!(monochrome.len(), 2, "d = {d}");
            let white = Simplex::new(sphere.all_white_facet().iter().cloned()).unwrap();
            let black = Simplex::new(sphere.all_black_facet().iter().cloned()).unwrap();
            assert!(monochrome.contains(&&white));
            assert!(monochrome.contains(&&black));
            assert_eq!(sphere.symmetric().antipodal_facet(&white).unwrap(), black);
        }
    }

    #[test]
    fn splicing_the_trivial_triangle() {
        let sphere = build_glued_sphere(2);
        let inst = planar::trivial_simplex_instance(2);
        let ktilde = insert_k_copies(&sphere, &inst).unwrap();
        let c = ktilde.symmetric().complex();
        // 20 - 2 pole facets + two coned copies of the single facet.
        assert_eq!(c.facet_count(), 24);
        assert!(ktilde.symmetric().no_monochromatic_facet());
        certify_sphere_shape(c, 2).unwrap();
    }

    #[test]
    fn splicing_the_19_facet_complex() {
        let sphere = build_glued_sphere(3);
        let (k3, _) = build_kd(3).unwrap();
        let ktilde = insert_k_copies(&sphere, &k3).unwrap();
        let c = ktilde.symmetric().complex();
        // 44 - 2 + 2 * 19 * 4: each copied facet is coned into four.
        assert_eq!(c.facet_count(), 194);
        assert!(ktilde.symmetric().no_monochromatic_facet());
        ktilde.symmetric().validate().unwrap();
    }

    #[test]
    fn splicing_rejects_mismatched_dimensions() {
        let sphere = build_glued_sphere(2);
        let (k3, _) = build_kd(3).unwrap();
        assert!(matches!(
            insert_k_copies(&sphere, &k3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn splicing_rejects_boundary_subdivisions() {
        // A disk with side vertices has non-corner boundary vertices; the
        // splice only glues along corner boundaries.
        let sphere = build_glued_sphere(2);
        let disk = planar::one_point_per_side_disk();
        assert!(matches!(
            insert_k_copies(&sphere, disk.instance()),
            Err(Error::UnsupportedBoundary(_))
        ));
    }

    #[test]
    fn quotient_halves_the_vertex_count() {
        let sphere = build_glued_sphere(2);
        let inst = planar::trivial_simplex_instance(2);
        let ktilde = insert_k_copies(&sphere, &inst).unwrap();
        let quotient = antipodal_quotient(ktilde.symmetric()).unwrap();
        assert_eq!(
            quotient.graph.vertex_count() * 2,
            ktilde.symmetric().complex().vertex_count()
        );
        assert_eq!(quotient.graph.vertex_count(), 7);
    }

    #[test]
    fn dimension_one_quotient_is_an_odd_cycle() {
        let sphere = build_glued_sphere(1);
        certify_sphere_shape(sphere.symmetric().complex(), 1).unwrap();
        let inst = planar::trivial_simplex_instance(1);
        let ktilde = insert_k_copies(&sphere, &inst).unwrap();
        let quotient = antipodal_quotient(ktilde.symmetric()).unwrap();
        assert_eq!(quotient.graph.vertex_count(), 5);
        assert_eq!(quotient.graph.edge_count(), 5);
        match odd_cycle_or_bipartition(&quotient.graph) {
            Parity::OddCycle(cycle) => assert_eq!(cycle.len(), 5),
            Parity::Bipartition(_) => panic!("the quotient pentagon is odd"),
        }
    }

    #[test]
    fn verification_passes_on_the_corpus() {
        for inst in [
            planar::trivial_simplex_instance(1),
            planar::trivial_simplex_instance(2),
            planar::stellar_disk_once().into_instance(),
            build_kd(3).unwrap().0,
        ] {
            let cert = verify_quadrangulation(&inst).unwrap();
            assert!(cert.status.passed(), "failure: {:?}", cert.failure);
            assert!(cert.isomorphic_to_gallai);
            assert!(cert.facet_property);
            let cycle = cert.odd_cycle.unwrap();
            assert_eq!(cycle.len() % 2, 1);
        }
    }

    #[test]
    fn quotient_rejects_broken_involutions() {
        let sphere = build_glued_sphere(2);
        let sym = sphere.symmetric();
        // Flip one vertex's colour so an antipodal pair is monochromatic.
        let mut colours = sym.colours().clone();
        let v = sym.complex().vertices()[0].clone();
        let flipped = colours[&v].flipped();
        colours.insert(v, flipped);
        let broken =
            SymmetricComplex::new(sym.complex().clone(), sym.involution().clone(), colours);
        assert!(matches!(
            antipodal_quotient(&broken),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn quotient_vertex_count_matches_gallai_for_k3() {
        let (k3, _) = build_kd(3).unwrap();
        let cert = verify_quadrangulation(&k3).unwrap();
        assert_eq!(cert.quotient_vertices, 31);
    }
}
