//! Canonical complexes: the boundary of the 4-polytope H8, cross polytopes,
//! and cyclic polytopes via Gale's evenness condition; plus the exhaustive
//! checker that asks whether two prescribed rainbow facets always force a
//! third one.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::complex::{validate_complex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::instance::{Label, LabelSet, SpernerInstance};
use crate::sperner::{Labelling, SearchOptions, Status};

/// The 20 boundary facets of H8 on vertices A, B, C, D, E, F, G, Z.
pub const H8_FACETS: [&str; 20] = [
    "ABCD", "ABCG", "ABDE", "ABEF", "ABFZ", "ABGZ", "ACDZ", "ACGZ", "ADEZ", "AEFZ", "BCDE", "BCEF",
    "BCFG", "BFGZ", "CDEF", "CDFG", "CDGZ", "DEFG", "DEGZ", "EFGZ",
];

/// Boundary complex of H8: a closed 3-pseudomanifold on 8 vertices with 20
/// tetrahedra, 2-neighbourly but not combinatorially equivalent to a cyclic
/// polytope boundary.
pub fn h8_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets(H8_FACETS.iter().map(|f| Simplex::from_letters(f)).collect())
}

/// The distinguished facet ABGZ.
pub fn h8_sigma0() -> Simplex {
    Simplex::from_letters("ABGZ")
}

/// The facet CDEF, disjoint from ABGZ.
pub fn h8_sigma1() -> Simplex {
    Simplex::from_letters("CDEF")
}

/// Boundary of the `dim`-dimensional cross polytope: vertices `+1..+dim`
/// and `-1..-dim`, one facet per sign pattern. Also returns the antipodal
/// involution `+i <-> -i`.
pub fn cross_polytope_boundary(dim: usize) -> (SimplicialComplex, BTreeMap<VertexId, VertexId>) {
    assert!(dim >= 1, "cross polytope needs dimension >= 1");
    let plus: Vec<VertexId> = (1..=dim).map(|i| VertexId::new(format!("+{i}"))).collect();
    let minus: Vec<VertexId> = (1..=dim).map(|i| VertexId::new(format!("-{i}"))).collect();
    let mut facets = Vec::with_capacity(1 << dim);
    for signs in 0u32..(1 << dim) {
        let facet = Simplex::new((0..dim).map(|i| {
            if signs >> i & 1 == 0 {
                plus[i].clone()
            } else {
                minus[i].clone()
            }
        }))
        .expect("sign vertices are distinct");
        facets.push(facet);
    }
    let mut involution = BTreeMap::new();
    for i in 0..dim {
        involution.insert(plus[i].clone(), minus[i].clone());
        involution.insert(minus[i].clone(), plus[i].clone());
    }
    (SimplicialComplex::from_facets(facets), involution)
}

/// Gale's evenness condition: every maximal run of consecutive elements of
/// `subset` touching neither 1 nor `n` must have even length.
fn gale_even(subset: &[usize], n: usize) -> bool {
    let mut i = 0;
    while i < subset.len() {
        let mut j = i;
        while j + 1 < subset.len() && subset[j + 1] == subset[j] + 1 {
            j += 1;
        }
        if subset[i] != 1 && subset[j] != n && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

/// Boundary complex of the cyclic polytope C(n, dim): facets are the
/// `dim`-subsets of `{1..n}` satisfying Gale's evenness condition.
pub fn cyclic_polytope_boundary(n: usize, dim: usize) -> Result<SimplicialComplex> {
    if dim < 1 || n < dim + 1 {
        return Err(Error::BadParams(format!(
            "cyclic polytope needs n >= dim + 1, got n = {n}, dim = {dim}"
        )));
    }
    let facets: Vec<Simplex> = (1..=n)
        .combinations(dim)
        .filter(|s| gale_even(s, n))
        .map(|s| {
            Simplex::new(s.into_iter().map(|i| VertexId::new(i.to_string())))
                .expect("combination elements are distinct")
        })
        .collect();
    Ok(SimplicialComplex::from_facets(facets))
}

/// The Sperner instance obtained from a closed pseudomanifold by removing
/// the facet `tau`: `tau`'s vertices become the corners (in sorted order),
/// every other vertex is free to take any label.
pub fn associated_triangulation(c: &SimplicialComplex, tau: &Simplex) -> Result<SpernerInstance> {
    if !c.contains_facet(tau) {
        return Err(Error::NotAFacet(tau.to_string()));
    }
    let complex = c.without_facet(tau)?;
    let label_count = tau.len() as Label;
    let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
    for v in complex.vertices() {
        supports.insert(v.clone(), LabelSet::full(label_count));
    }
    for (i, v) in tau.vertices().iter().enumerate() {
        supports.insert(v.clone(), LabelSet::singleton((i + 1) as Label));
    }
    Ok(SpernerInstance::new(
        complex,
        label_count,
        supports,
        tau.vertices().to_vec(),
    ))
}

/// Certificate returned by [`check_third_rainbow_forced`].
#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ThirdRainbowCertificate {
    pub status: Status,
    /// Number of labellings enumerated.
    pub space_size: u128,
    /// When the sweep fixes the labels of `sigma0`, the number of label
    /// permutations each enumerated labelling stands for.
    pub symmetry_factor: Option<u128>,
    /// A labelling making `sigma0` and `sigma1` rainbow with no third
    /// rainbow facet, if one exists.
    pub witness: Option<Labelling>,
}

/// Exhaustively decides whether every labelling of the vertices of a closed
/// pseudomanifold that makes both `sigma0` and `sigma1` rainbow also makes
/// some third facet rainbow.
///
/// With `use_symmetry` the labels of `sigma0` are pinned to `1..=d+1` in
/// vertex order and the certificate notes the `(d+1)!` factor; the reduced
/// sweep decides the same question because the property is invariant under
/// relabelling.
pub fn check_third_rainbow_forced(
    c: &SimplicialComplex,
    sigma0: &Simplex,
    sigma1: &Simplex,
    use_symmetry: bool,
    opts: &SearchOptions,
) -> Result<ThirdRainbowCertificate> {
    let report = validate_complex(c)?;
    if !report.pure || !report.pseudomanifold || !report.boundary_faces.is_empty() {
        return Err(Error::BadInput(
            "checker requires a closed pure pseudomanifold".into(),
        ));
    }
    for s in [sigma0, sigma1] {
        if !c.contains_facet(s) {
            return Err(Error::NotAFacet(s.to_string()));
        }
    }
    if !sigma0.intersection(sigma1).is_empty() {
        return Err(Error::BadInput(format!(
            "facets {sigma0} and {sigma1} are not disjoint"
        )));
    }
    let labels = sigma0.len() as Label;

    // Reuse the Sperner sweep kernel by phrasing the question as an
    // instance: pinned sigma0 vertices act as corners, everything else is
    // free. In the unreduced sweep every vertex is free and corners are
    // empty, so validity never constrains the enumeration.
    let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
    for v in c.vertices() {
        supports.insert(v.clone(), LabelSet::full(labels));
    }
    let corners = if use_symmetry {
        for (i, v) in sigma0.vertices().iter().enumerate() {
            supports.insert(v.clone(), LabelSet::singleton((i + 1) as Label));
        }
        sigma0.vertices().to_vec()
    } else {
        Vec::new()
    };
    let instance = SpernerInstance::new(c.clone(), labels, supports, corners);
    let compiled = crate::sperner::Compiled::new(&instance)?;
    if compiled.space > opts.max_space {
        return Err(Error::SearchSpaceTooLarge(compiled.space, opts.max_space));
    }
    let s0 = compiled
        .find_facet(sigma0)
        .expect("sigma0 is a facet of the complex");
    let s1 = compiled
        .find_facet(sigma1)
        .expect("sigma1 is a facet of the complex");

    let first_witness = crate::sperner::partitioned(
        compiled.space,
        opts.jobs,
        |lo, hi| {
            let mut digits = compiled.decode(lo);
            let mut index = lo;
            while index < hi {
                let assigned = compiled.labels_of(&digits);
                if compiled.is_rainbow(&compiled.facets[s0], &assigned)
                    && compiled.is_rainbow(&compiled.facets[s1], &assigned)
                {
                    let third =
                        compiled.facets.iter().enumerate().any(|(fi, f)| {
                            fi != s0 && fi != s1 && compiled.is_rainbow(f, &assigned)
                        });
                    if !third {
                        return Some(index);
                    }
                }
                compiled.advance(&mut digits);
                index += 1;
            }
            None
        },
        |results| results.into_iter().flatten().min(),
    );

    let mut factorial: u128 = 1;
    for i in 2..=labels as u128 {
        factorial *= i;
    }
    Ok(ThirdRainbowCertificate {
        status: if first_witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        space_size: compiled.space,
        symmetry_factor: use_symmetry.then_some(factorial),
        witness: first_witness.map(|index| {
            let assigned = compiled.labels_of(&compiled.decode(index));
            compiled.labelling(&assigned)
        }),
    })
}

/// Per-facet unique-rainbow survey of the instance associated with the
/// cyclic polytope C(n, 4): its boundary minus the lexicographically first
/// facet, swept exhaustively. There is no expected answer; the report
/// records what the search found.
#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CyclicSurvey {
    pub n: usize,
    pub dim: usize,
    pub removed_facet: Simplex,
    pub space_size: u128,
    pub facet_count: usize,
    pub all_admit_unique_rainbow: bool,
    pub entries: Vec<crate::sperner::FacetClass>,
}

/// Runs [`crate::sperner::classify_facets`] over the C(n, 4)-associated
/// instance.
pub fn cyclic_conjecture_survey(n: usize, opts: &SearchOptions) -> Result<CyclicSurvey> {
    let boundary = cyclic_polytope_boundary(n, 4)?;
    let tau = boundary.facets()[0].clone();
    let instance = associated_triangulation(&boundary, &tau)?;
    let entries = crate::sperner::classify_facets(&instance, opts)?;
    Ok(CyclicSurvey {
        n,
        dim: 3,
        removed_facet: tau,
        space_size: instance.space_size(),
        facet_count: entries.len(),
        all_admit_unique_rainbow: entries.iter().all(|e| e.admits_unique_rainbow),
        entries,
    })
}

/// Constraint propagation for the hypothetical situation in which `sigma0`
/// and `sigma1` are the *only* rainbow facets, with `sigma0` pinned to
/// labels `1..=d+1` in vertex order. Two rules run to a fixed point:
///
/// * a facet sharing a codimension-1 face with `sigma0` or `sigma1` would
///   become rainbow if the two vertices in the symmetric difference agreed,
///   so the free one drops the label of the pinned one once it is known;
/// * `sigma1` is rainbow, so its vertices' candidate sets behave like an
///   all-different constraint (singles are eliminated from siblings, and a
///   label possible in only one position is forced there).
///
/// Returns the candidate label sets after propagation.
pub fn forced_label_deduction(
    c: &SimplicialComplex,
    sigma0: &Simplex,
    sigma1: &Simplex,
) -> BTreeMap<VertexId, LabelSet> {
    let labels = sigma0.len() as Label;
    let mut candidates: BTreeMap<VertexId, LabelSet> = c
        .vertices()
        .iter()
        .map(|v| (v.clone(), LabelSet::full(labels)))
        .collect();
    for (i, v) in sigma0.vertices().iter().enumerate() {
        candidates.insert(v.clone(), LabelSet::singleton((i + 1) as Label));
    }

    // (x, y) pairs with x free and y in sigma_i, from facets sharing a
    // codimension-1 face with sigma_i.
    let mut diff_pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for sigma in [sigma0, sigma1] {
        for f in c.facets() {
            if f == sigma || f.intersection(sigma).len() != sigma.len() - 1 {
                continue;
            }
            let x = f
                .vertices()
                .iter()
                .find(|v| !sigma.contains(v))
                .expect("facet differs from sigma");
            let y = sigma
                .vertices()
                .iter()
                .find(|v| !f.contains(v))
                .expect("sigma differs from facet");
            diff_pairs.push((x.clone(), y.clone()));
            diff_pairs.push((y.clone(), x.clone()));
        }
    }

    loop {
        let before = candidates.clone();
        for (x, y) in &diff_pairs {
            let y_set = candidates[y];
            if y_set.len() == 1 {
                let label = y_set.iter().next().unwrap();
                let x_set = candidates.get_mut(x).unwrap();
                x_set.remove(label);
            }
        }
        // All-different over sigma1: eliminate decided labels, then assign
        // labels possible in a single position.
        let decided: Vec<(VertexId, Label)> = sigma1
            .vertices()
            .iter()
            .filter(|v| candidates[*v].len() == 1)
            .map(|v| (v.clone(), candidates[v].iter().next().unwrap()))
            .collect();
        for (v, label) in &decided {
            for u in sigma1.vertices() {
                if u != v {
                    candidates.get_mut(u).unwrap().remove(*label);
                }
            }
        }
        for label in 1..=labels {
            let holders: Vec<&VertexId> = sigma1
                .vertices()
                .iter()
                .filter(|v| candidates[*v].contains(label))
                .collect();
            if holders.len() == 1 {
                candidates.insert(holders[0].clone(), LabelSet::singleton(label));
            }
        }
        if candidates == before {
            return candidates;
        }
    }
}
