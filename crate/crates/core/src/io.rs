//! File formats: the complex/instance JSON schema, labelling and
//! certificate JSON, and DIMACS .col graphs with role annotations.
//!
//! All JSON is emitted canonically — UTF-8, sorted keys, LF newlines, two
//! space indent, trailing newline — so identical inputs give byte-identical
//! artifacts. Parsing is strict about structure and re-canonicalises
//! ordering, making emit/parse a fixed point.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::chromatic::Graph;
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::gallai::{GallaiGraph, GallaiRole};
use crate::instance::{Label, LabelSet, SpernerInstance};
use crate::projective::{Colour, SymmetricComplex};
use crate::sperner::Labelling;

/// Serialises any serde value with sorted keys (routing through
/// `serde_json::Value`, whose maps are ordered) and a trailing newline.
pub fn to_canonical_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let value = serde_json::to_value(value)
        .map_err(|e| Error::Format(format!("serialisation failed: {e}")))?;
    let mut text = serde_json::to_string_pretty(&value)
        .map_err(|e| Error::Format(format!("serialisation failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

pub fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Format(format!("serialisation failed: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

/// A parsed complex file: always a complex, optionally the Sperner layer
/// (supports and corners), a distinguished facet, and the symmetric layer
/// (involution and colouring).
#[derive(Clone, Debug)]
pub struct ComplexFile {
    pub complex: SimplicialComplex,
    pub instance: Option<SpernerInstance>,
    pub sigma: Option<Simplex>,
    pub symmetric: Option<SymmetricComplex>,
    /// An involution given without a colouring (antipodal maps of plain
    /// polytope boundaries).
    pub involution: Option<BTreeMap<VertexId, VertexId>>,
}

impl ComplexFile {
    /// The Sperner layer, or an error when the file is a bare complex.
    pub fn require_instance(&self) -> Result<&SpernerInstance> {
        self.instance
            .as_ref()
            .ok_or_else(|| Error::Format("file carries no supports/corners (bare complex)".into()))
    }
}

/// Bare complex to JSON.
pub fn complex_to_json(c: &SimplicialComplex) -> Value {
    let vertices: Vec<Value> = c
        .vertices()
        .iter()
        .map(|v| json!({ "id": v.as_str() }))
        .collect();
    json!({
        "dim": c.dim(),
        "facets": facets_to_json(c),
        "vertices": vertices,
    })
}

fn facets_to_json(c: &SimplicialComplex) -> Value {
    Value::Array(
        c.facets()
            .iter()
            .map(|f| {
                Value::Array(
                    f.vertices()
                        .iter()
                        .map(|v| Value::String(v.as_str().to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Instance (complex + supports + corners) to JSON, with an optional
/// distinguished facet.
pub fn instance_to_json(s: &SpernerInstance, sigma: Option<&Simplex>) -> Value {
    let vertices: Vec<Value> = s
        .complex()
        .vertices()
        .iter()
        .map(|v| {
            let support: Vec<Label> = s
                .support(v)
                .map(|set| set.iter().collect())
                .unwrap_or_default();
            json!({ "id": v.as_str(), "support": support })
        })
        .collect();
    let corners: Map<String, Value> = s
        .corners()
        .iter()
        .enumerate()
        .map(|(i, v)| ((i + 1).to_string(), Value::String(v.as_str().to_string())))
        .collect();
    let mut object = Map::new();
    object.insert("dim".into(), json!(s.complex().dim()));
    object.insert("labelCount".into(), json!(s.label_count()));
    object.insert("vertices".into(), Value::Array(vertices));
    object.insert("corners".into(), Value::Object(corners));
    object.insert("facets".into(), facets_to_json(s.complex()));
    if let Some(sigma) = sigma {
        object.insert(
            "sigma".into(),
            Value::Array(
                sigma
                    .vertices()
                    .iter()
                    .map(|v| Value::String(v.as_str().to_string()))
                    .collect(),
            ),
        );
    }
    Value::Object(object)
}

/// Complex plus a bare involution (no colouring), for antipodal maps of
/// polytope boundaries.
pub fn complex_with_involution_to_json(
    c: &SimplicialComplex,
    involution: &BTreeMap<VertexId, VertexId>,
) -> Value {
    let mut object = match complex_to_json(c) {
        Value::Object(map) => map,
        _ => unreachable!("complex serialises to an object"),
    };
    let involution: Map<String, Value> = involution
        .iter()
        .map(|(a, b)| {
            (
                a.as_str().to_string(),
                Value::String(b.as_str().to_string()),
            )
        })
        .collect();
    object.insert("involution".into(), Value::Object(involution));
    Value::Object(object)
}

/// Symmetric complex to JSON: complex plus involution and colour maps.
pub fn symmetric_to_json(sym: &SymmetricComplex) -> Value {
    let mut object = match complex_to_json(sym.complex()) {
        Value::Object(map) => map,
        _ => unreachable!("complex serialises to an object"),
    };
    let involution: Map<String, Value> = sym
        .involution()
        .iter()
        .map(|(a, b)| {
            (
                a.as_str().to_string(),
                Value::String(b.as_str().to_string()),
            )
        })
        .collect();
    let colour: Map<String, Value> = sym
        .colours()
        .iter()
        .map(|(v, c)| {
            let name = match c {
                Colour::Black => "black",
                Colour::White => "white",
            };
            (v.as_str().to_string(), Value::String(name.into()))
        })
        .collect();
    object.insert("involution".into(), Value::Object(involution));
    object.insert("colour".into(), Value::Object(colour));
    Value::Object(object)
}

fn field<'v>(value: &'v Value, key: &str) -> Result<&'v Value> {
    value
        .get(key)
        .ok_or_else(|| Error::Format(format!("missing field \"{key}\"")))
}

fn as_str(value: &Value, what: &str) -> Result<String> {
    value
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| Error::Format(format!("{what} must be a string")))
}

/// Parses the complex JSON schema, including the optional Sperner,
/// distinguished-facet and symmetric layers.
pub fn parse_complex(value: &Value) -> Result<ComplexFile> {
    let declared_dim = field(value, "dim")?
        .as_i64()
        .ok_or_else(|| Error::Format("\"dim\" must be an integer".into()))?;
    let facet_values = field(value, "facets")?
        .as_array()
        .ok_or_else(|| Error::Format("\"facets\" must be an array".into()))?;
    let mut facets = Vec::with_capacity(facet_values.len());
    for f in facet_values {
        let ids = f
            .as_array()
            .ok_or_else(|| Error::Format("each facet must be an array of ids".into()))?;
        let vertices: Result<Vec<VertexId>> = ids
            .iter()
            .map(|v| as_str(v, "facet vertex").map(VertexId::new))
            .collect();
        facets.push(Simplex::new(vertices?).map_err(|e| Error::Format(e.to_string()))?);
    }
    let complex = SimplicialComplex::from_facets(facets);
    if complex.dim() != declared_dim {
        return Err(Error::Format(format!(
            "declared dim {declared_dim} but facets have dimension {}",
            complex.dim()
        )));
    }

    let vertex_values = field(value, "vertices")?
        .as_array()
        .ok_or_else(|| Error::Format("\"vertices\" must be an array".into()))?;
    let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
    let mut any_support = false;
    for v in vertex_values {
        let id = VertexId::new(as_str(field(v, "id")?, "vertex id")?);
        if !complex.contains_vertex(&id) {
            return Err(Error::Format(format!(
                "vertex {id} does not appear in any facet"
            )));
        }
        if let Some(sup) = v.get("support") {
            let labels = sup
                .as_array()
                .ok_or_else(|| Error::Format("\"support\" must be an array".into()))?;
            let mut set = LabelSet::empty();
            for l in labels {
                let l = l
                    .as_u64()
                    .filter(|l| (1..=32).contains(l))
                    .ok_or_else(|| Error::Format("support labels must be 1..=32".into()))?;
                set.insert(l as Label);
            }
            supports.insert(id, set);
            any_support = true;
        }
    }

    let corners_value = value.get("corners");
    let instance = match (any_support, corners_value) {
        (true, Some(Value::Object(corner_map))) => {
            let label_count = match value.get("labelCount").and_then(Value::as_u64) {
                Some(n) if (1..=32).contains(&n) => n as Label,
                Some(_) => return Err(Error::Format("\"labelCount\" must be 1..=32".into())),
                None => (declared_dim + 1) as Label,
            };
            let mut corners = vec![None; label_count as usize];
            for (key, id) in corner_map {
                let label: usize = key
                    .parse()
                    .map_err(|_| Error::Format(format!("corner key \"{key}\" is not a label")))?;
                if !(1..=label_count as usize).contains(&label) {
                    return Err(Error::Format(format!("corner label {label} out of range")));
                }
                corners[label - 1] = Some(VertexId::new(as_str(id, "corner id")?));
            }
            let corners: Result<Vec<VertexId>> = corners
                .into_iter()
                .enumerate()
                .map(|(i, c)| c.ok_or_else(|| Error::Format(format!("corner {} missing", i + 1))))
                .collect();
            Some(SpernerInstance::new(
                complex.clone(),
                label_count,
                supports,
                corners?,
            ))
        }
        (false, None) => None,
        (true, None) => None,
        (_, Some(_)) => {
            return Err(Error::Format("\"corners\" must be an object".into()));
        }
    };

    let sigma = match value.get("sigma") {
        None => None,
        Some(Value::Array(ids)) => {
            let vertices: Result<Vec<VertexId>> = ids
                .iter()
                .map(|v| as_str(v, "sigma vertex").map(VertexId::new))
                .collect();
            Some(Simplex::new(vertices?).map_err(|e| Error::Format(e.to_string()))?)
        }
        Some(_) => return Err(Error::Format("\"sigma\" must be an array of ids".into())),
    };

    let involution = match value.get("involution") {
        None => None,
        Some(Value::Object(inv)) => {
            let mut involution = BTreeMap::new();
            for (a, b) in inv {
                involution.insert(
                    VertexId::new(a.clone()),
                    VertexId::new(as_str(b, "antipode")?),
                );
            }
            Some(involution)
        }
        Some(_) => return Err(Error::Format("\"involution\" must be an object".into())),
    };
    let symmetric = match (&involution, value.get("colour")) {
        (Some(involution), Some(Value::Object(col))) => {
            let mut colours = BTreeMap::new();
            for (v, c) in col {
                let colour = match as_str(c, "colour")?.as_str() {
                    "black" => Colour::Black,
                    "white" => Colour::White,
                    other => return Err(Error::Format(format!("unknown colour \"{other}\""))),
                };
                colours.insert(VertexId::new(v.clone()), colour);
            }
            Some(SymmetricComplex::new(
                complex.clone(),
                involution.clone(),
                colours,
            ))
        }
        (_, None) => None,
        (None, Some(_)) => {
            return Err(Error::Format(
                "\"colour\" requires an \"involution\"".into(),
            ))
        }
        (_, Some(_)) => return Err(Error::Format("\"colour\" must be an object".into())),
    };

    Ok(ComplexFile {
        complex,
        instance,
        sigma,
        symmetric,
        involution,
    })
}

/// Labelling to JSON: `{"assignment": {id: label, ...}}`.
pub fn labelling_to_json(l: &Labelling) -> Value {
    let assignment: Map<String, Value> = l
        .iter()
        .map(|(v, label)| (v.as_str().to_string(), json!(label)))
        .collect();
    json!({ "assignment": assignment })
}

pub fn parse_labelling(value: &Value) -> Result<Labelling> {
    let assignment = field(value, "assignment")?
        .as_object()
        .ok_or_else(|| Error::Format("\"assignment\" must be an object".into()))?;
    let mut map = BTreeMap::new();
    for (v, label) in assignment {
        let label = label
            .as_u64()
            .filter(|l| (1..=32).contains(l))
            .ok_or_else(|| Error::Format("labels must be 1..=32".into()))?;
        map.insert(VertexId::new(v.clone()), label as Label);
    }
    Ok(Labelling::new(map))
}

/// Writes a graph in DIMACS .col form with 1-based vertex ids. Role
/// annotations, when given, are emitted as `c role <id> <V1|V2|V3>
/// <provenance>` comment lines before the problem line.
pub fn graph_to_dimacs(g: &Graph, roles: Option<&[GallaiRole]>) -> String {
    let mut out = String::new();
    if let Some(roles) = roles {
        for (i, role) in roles.iter().enumerate() {
            let (kind, provenance) = match role {
                GallaiRole::KVertex(v) => ("V1", v.to_string()),
                GallaiRole::FacetVertex(f) => ("V2", f.to_string()),
                GallaiRole::DeltaFacetVertex(l) => ("V3", format!("w{l}")),
            };
            out.push_str(&format!("c role {} {} {}\n", i + 1, kind, provenance));
        }
    }
    out.push_str(&format!("p edge {} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Role annotation parsed back from a DIMACS comment: vertex index,
/// kind (V1/V2/V3), provenance text.
pub type RoleAnnotation = (usize, String, String);

/// Parses DIMACS .col. Comment lines are ignored except `c role` lines,
/// which are returned as [`RoleAnnotation`]s.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<RoleAnnotation>)> {
    let mut graph: Option<Graph> = None;
    let mut roles = Vec::new();
    let mut pending_edges: Vec<(usize, usize)> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("c") => {
                let rest: Vec<&str> = parts.collect();
                if rest.first() == Some(&"role") && rest.len() >= 3 {
                    let vertex: usize = rest[1].parse().map_err(|_| {
                        Error::Format(format!("line {}: bad role vertex", line_no + 1))
                    })?;
                    roles.push((vertex - 1, rest[2].to_string(), rest[3..].join(" ")));
                }
            }
            Some("p") => {
                let format = parts.next();
                if format != Some("edge") && format != Some("edges") {
                    return Err(Error::Format(format!(
                        "line {}: expected \"p edge\"",
                        line_no + 1
                    )));
                }
                let n: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                    Error::Format(format!("line {}: bad vertex count", line_no + 1))
                })?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let u: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Format(format!("line {}: bad edge", line_no + 1)))?;
                let v: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Format(format!("line {}: bad edge", line_no + 1)))?;
                if u == 0 || v == 0 {
                    return Err(Error::Format(format!(
                        "line {}: DIMACS vertices are 1-based",
                        line_no + 1
                    )));
                }
                pending_edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Format(format!(
                    "line {}: unknown record \"{other}\"",
                    line_no + 1
                )))
            }
            None => {}
        }
    }
    let mut graph = graph.ok_or_else(|| Error::Format("missing problem line".into()))?;
    for (u, v) in pending_edges {
        if u >= graph.vertex_count() || v >= graph.vertex_count() {
            return Err(Error::Format("edge endpoint out of range".into()));
        }
        graph.add_edge(u, v);
    }
    Ok((graph, roles))
}

/// Export of a Gallai graph: DIMACS body plus role annotations.
pub fn gallai_to_dimacs(g: &GallaiGraph) -> String {
    graph_to_dimacs(g.graph(), Some(g.roles()))
}
