//! Labelling enumeration and the exhaustive rainbow-facet searches.
//!
//! All searches run over the product of the vertex supports in lexicographic
//! order of the sorted vertex list, so certificates and witnesses are
//! reproducible. Sweeps may be partitioned into disjoint index ranges and
//! evaluated on worker threads; results merge associatively, the first
//! witness being the lexicographic minimum.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::instance::{Label, SpernerInstance};

/// A total map from vertices to labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Labelling {
    assignment: BTreeMap<VertexId, Label>,
}

impl Labelling {
    pub fn new(assignment: BTreeMap<VertexId, Label>) -> Self {
        Labelling { assignment }
    }

    pub fn get(&self, v: &VertexId) -> Option<Label> {
        self.assignment.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, Label)> {
        self.assignment.iter().map(|(v, l)| (v, *l))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assignment(&self) -> &BTreeMap<VertexId, Label> {
        &self.assignment
    }

    /// The labelling restricted to the vertices of `complex`.
    pub fn restricted_to(&self, complex: &SimplicialComplex) -> Labelling {
        Labelling {
            assignment: self
                .assignment
                .iter()
                .filter(|(v, _)| complex.contains_vertex(v))
                .map(|(v, l)| (v.clone(), *l))
                .collect(),
        }
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, l)) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{l}")?;
        }
        write!(f, "}}")
    }
}

/// Bounds for exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Hard cap on the number of labellings a search may visit.
    pub max_space: u128,
    /// Worker threads for partitionable sweeps.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_space: 1 << 24,
            jobs: 1,
        }
    }
}

/// The facets on which a labelling is injective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RainbowReport {
    pub rainbow_facets: Vec<Simplex>,
}

impl RainbowReport {
    pub fn count(&self) -> usize {
        self.rainbow_facets.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn passed(&self) -> bool {
        *self == Status::Pass
    }
}

/// Outcome of an exhaustive sweep; `witness` carries the offending
/// labelling on failure.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepCertificate {
    pub status: Status,
    pub space_size: u128,
    pub witness: Option<Labelling>,
    /// Recorded observation, not an asserted invariant: whether every
    /// labelling visited had an odd number of rainbow facets. Only the
    /// rainbow-existence sweep fills this in.
    pub odd_parity_observed: Option<bool>,
}

/// Index-level view of an instance used by the search kernels: vertices in
/// sorted order, supports as label vectors, facets as index vectors.
pub(crate) struct Compiled {
    pub ids: Vec<VertexId>,
    pub supports: Vec<Vec<Label>>,
    pub facets: Vec<Vec<usize>>,
    pub space: u128,
}

impl Compiled {
    pub fn new(s: &SpernerInstance) -> Result<Compiled> {
        let ids: Vec<VertexId> = s.complex().vertices().to_vec();
        let mut supports = Vec::with_capacity(ids.len());
        for v in &ids {
            let sup = s
                .support(v)
                .ok_or_else(|| Error::InvalidLabelling(format!("vertex {v} has no support")))?;
            let labels: Vec<Label> = sup.iter().collect();
            if labels.is_empty() {
                return Err(Error::InvalidLabelling(format!(
                    "vertex {v} has empty support"
                )));
            }
            supports.push(labels);
        }
        let index: BTreeMap<&VertexId, usize> =
            ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let facets = s
            .complex()
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(|v| index[v]).collect())
            .collect();
        let space = s.space_size();
        Ok(Compiled {
            ids,
            supports,
            facets,
            space,
        })
    }

    /// Decodes a flat index into per-vertex support positions (the first
    /// vertex is the most significant digit).
    pub fn decode(&self, index: u128) -> Vec<usize> {
        let mut digits = vec![0usize; self.supports.len()];
        let mut rest = index;
        for i in (0..self.supports.len()).rev() {
            let radix = self.supports[i].len() as u128;
            digits[i] = (rest % radix) as usize;
            rest /= radix;
        }
        digits
    }

    pub fn labels_of(&self, digits: &[usize]) -> Vec<Label> {
        digits
            .iter()
            .enumerate()
            .map(|(i, &d)| self.supports[i][d])
            .collect()
    }

    /// Advances the odometer; returns false on wrap-around.
    pub fn advance(&self, digits: &mut [usize]) -> bool {
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < self.supports[i].len() {
                return true;
            }
            digits[i] = 0;
        }
        false
    }

    pub fn labelling(&self, labels: &[Label]) -> Labelling {
        Labelling::new(
            self.ids
                .iter()
                .cloned()
                .zip(labels.iter().copied())
                .collect(),
        )
    }

    pub fn is_rainbow(&self, facet: &[usize], labels: &[Label]) -> bool {
        let mut mask = 0u32;
        for &v in facet {
            mask |= 1 << (labels[v] - 1);
        }
        mask.count_ones() as usize == facet.len()
    }

    pub fn find_facet(&self, sigma: &Simplex) -> Option<usize> {
        let want: Vec<usize> = sigma
            .vertices()
            .iter()
            .map(|v| self.ids.binary_search(v).ok())
            .collect::<Option<Vec<_>>>()?;
        self.facets.iter().position(|f| *f == want)
    }
}

/// Runs `worker` over `jobs` contiguous sub-ranges of `0..space` and folds
/// the per-range results with `merge`. With one job everything stays on the
/// calling thread.
pub(crate) fn partitioned<R, W, M>(space: u128, jobs: usize, worker: W, merge: M) -> R
where
    R: Send,
    W: Fn(u128, u128) -> R + Sync,
    M: Fn(Vec<R>) -> R,
{
    let jobs = jobs.clamp(1, space.clamp(1, 64) as usize);
    if jobs == 1 {
        return merge(vec![worker(0, space)]);
    }
    let chunk = space / jobs as u128;
    let mut bounds = Vec::with_capacity(jobs);
    for j in 0..jobs as u128 {
        let lo = j * chunk;
        let hi = if j + 1 == jobs as u128 {
            space
        } else {
            lo + chunk
        };
        bounds.push((lo, hi));
    }
    let results: Vec<R> = std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn({
                    let worker = &worker;
                    move || worker(lo, hi)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    merge(results)
}

fn check_space(space: u128, opts: &SearchOptions) -> Result<()> {
    if space > opts.max_space {
        return Err(Error::SearchSpaceTooLarge(space, opts.max_space));
    }
    Ok(())
}

/// True iff the labelling fixes every corner to its own label and respects
/// every vertex support. Labellings missing a vertex are an error.
pub fn is_valid_sperner(s: &SpernerInstance, labelling: &Labelling) -> Result<bool> {
    for v in s.complex().vertices() {
        if labelling.get(v).is_none() {
            return Err(Error::MissingVertex(v.to_string()));
        }
    }
    for (i, corner) in s.corners().iter().enumerate() {
        if labelling.get(corner) != Some((i + 1) as Label) {
            return Ok(false);
        }
    }
    for v in s.complex().vertices() {
        let label = labelling.get(v).unwrap();
        match s.support(v) {
            Some(sup) if sup.contains(label) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// The exact list of facets on which a valid labelling is injective.
pub fn rainbow_facets(s: &SpernerInstance, labelling: &Labelling) -> Result<RainbowReport> {
    if !is_valid_sperner(s, labelling)? {
        return Err(Error::InvalidLabelling(
            "labelling violates corners or supports".into(),
        ));
    }
    let rainbow_facets = s
        .complex()
        .facets()
        .iter()
        .filter(|f| {
            let mut mask = 0u32;
            for v in f.vertices() {
                mask |= 1 << (labelling.get(v).unwrap() - 1);
            }
            mask.count_ones() as usize == f.len()
        })
        .cloned()
        .collect();
    Ok(RainbowReport { rainbow_facets })
}

/// Iterator over every support-respecting labelling, in lexicographic order
/// of the sorted vertex list.
pub struct LabellingIter {
    compiled: Compiled,
    digits: Option<Vec<usize>>,
}

impl Iterator for LabellingIter {
    type Item = Labelling;

    fn next(&mut self) -> Option<Labelling> {
        let digits = self.digits.as_mut()?;
        let labels = self.compiled.labels_of(digits);
        let item = self.compiled.labelling(&labels);
        if !self.compiled.advance(digits) {
            self.digits = None;
        }
        Some(item)
    }
}

/// Streams the product of the vertex supports; exactly
/// [`SpernerInstance::space_size`] labellings, no duplicates.
pub fn enumerate_labellings(s: &SpernerInstance) -> Result<LabellingIter> {
    let compiled = Compiled::new(s)?;
    let digits = if compiled.space == 0 {
        None
    } else {
        Some(vec![0usize; compiled.supports.len()])
    };
    Ok(LabellingIter { compiled, digits })
}

/// Sweeps every labelling of the instance and reports whether each one has
/// at least one rainbow facet. A failing witness always means the instance
/// itself is defective, never a refutation of the underlying lemma.
pub fn verify_sperner_lemma(s: &SpernerInstance, opts: &SearchOptions) -> Result<SweepCertificate> {
    let compiled = Compiled::new(s)?;
    check_space(compiled.space, opts)?;
    let (first_bad, all_odd) = partitioned(
        compiled.space,
        opts.jobs,
        |lo, hi| {
            let mut digits = compiled.decode(lo);
            let mut all_odd = true;
            let mut index = lo;
            while index < hi {
                let labels = compiled.labels_of(&digits);
                let rainbow_count = compiled
                    .facets
                    .iter()
                    .filter(|f| compiled.is_rainbow(f, &labels))
                    .count();
                if rainbow_count == 0 {
                    return (Some(index), all_odd);
                }
                all_odd &= rainbow_count % 2 == 1;
                compiled.advance(&mut digits);
                index += 1;
            }
            (None, all_odd)
        },
        |results| {
            let all_odd = results.iter().all(|(_, odd)| *odd);
            (
                results.into_iter().filter_map(|(bad, _)| bad).min(),
                all_odd,
            )
        },
    );
    Ok(match first_bad {
        None => SweepCertificate {
            status: Status::Pass,
            space_size: compiled.space,
            witness: None,
            odd_parity_observed: Some(all_odd),
        },
        Some(index) => {
            let labels = compiled.labels_of(&compiled.decode(index));
            SweepCertificate {
                status: Status::Fail,
                space_size: compiled.space,
                witness: Some(compiled.labelling(&labels)),
                odd_parity_observed: Some(all_odd),
            }
        }
    })
}

/// Backtracking search for a valid labelling whose rainbow set is exactly
/// `{sigma}`. Vertices are assigned in sorted order; a branch is abandoned
/// as soon as `sigma` stops being injective or some other fully-labelled
/// facet becomes rainbow, so the first witness found is the lexicographic
/// minimum over the whole space.
pub fn unique_rainbow_witness(
    s: &SpernerInstance,
    sigma: &Simplex,
    opts: &SearchOptions,
) -> Result<Option<Labelling>> {
    let compiled = Compiled::new(s)?;
    check_space(compiled.space, opts)?;
    let sigma_index = compiled
        .find_facet(sigma)
        .ok_or_else(|| Error::NotAFacet(sigma.to_string()))?;

    // Facets become checkable once their highest vertex is assigned.
    let n = compiled.ids.len();
    let mut completed_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in compiled.facets.iter().enumerate() {
        let last = *f.iter().max().expect("facets are non-empty");
        completed_at[last].push(fi);
    }
    let in_sigma: Vec<bool> = (0..n)
        .map(|i| compiled.facets[sigma_index].contains(&i))
        .collect();

    struct Dfs<'c> {
        compiled: &'c Compiled,
        completed_at: &'c [Vec<usize>],
        in_sigma: &'c [bool],
        sigma_index: usize,
        labels: Vec<Label>,
        sigma_mask: u32,
    }

    impl Dfs<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.compiled.ids.len() {
                return true;
            }
            for pos in 0..self.compiled.supports[depth].len() {
                let label = self.compiled.supports[depth][pos];
                let bit = 1u32 << (label - 1);
                if self.in_sigma[depth] && self.sigma_mask & bit != 0 {
                    continue;
                }
                self.labels[depth] = label;
                if self.in_sigma[depth] {
                    self.sigma_mask |= bit;
                }
                let ok = self.completed_at[depth].iter().all(|&fi| {
                    let rainbow = self
                        .compiled
                        .is_rainbow(&self.compiled.facets[fi], &self.labels);
                    if fi == self.sigma_index {
                        rainbow
                    } else {
                        !rainbow
                    }
                });
                if ok && self.run(depth + 1) {
                    return true;
                }
                if self.in_sigma[depth] {
                    self.sigma_mask &= !bit;
                }
            }
            false
        }
    }

    let mut dfs = Dfs {
        compiled: &compiled,
        completed_at: &completed_at,
        in_sigma: &in_sigma,
        sigma_index,
        labels: vec![0; n],
        sigma_mask: 0,
    };
    if dfs.run(0) {
        let labels = dfs.labels.clone();
        Ok(Some(compiled.labelling(&labels)))
    } else {
        Ok(None)
    }
}

/// Per-facet outcome of the unique-rainbow decision.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FacetClass {
    pub facet: Simplex,
    pub admits_unique_rainbow: bool,
    pub witness: Option<Labelling>,
}

/// Decides, for every facet of the instance, whether some valid labelling
/// has that facet as its unique rainbow facet. Facets are processed in
/// sorted order and may be distributed over worker threads.
pub fn classify_facets(s: &SpernerInstance, opts: &SearchOptions) -> Result<Vec<FacetClass>> {
    let facets: Vec<Simplex> = s.complex().facets().to_vec();
    let jobs = opts.jobs.max(1);
    let results: Vec<Result<FacetClass>> = if jobs == 1 {
        facets.iter().map(|f| classify_one(s, f, opts)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = facets
                .chunks(facets.len().div_ceil(jobs))
                .map(|chunk| {
                    scope.spawn(move || {
                        chunk
                            .iter()
                            .map(|f| classify_one(s, f, opts))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().unwrap())
                .collect()
        })
    };
    results.into_iter().collect()
}

fn classify_one(s: &SpernerInstance, f: &Simplex, opts: &SearchOptions) -> Result<FacetClass> {
    let witness = unique_rainbow_witness(s, f, opts)?;
    Ok(FacetClass {
        facet: f.clone(),
        admits_unique_rainbow: witness.is_some(),
        witness,
    })
}
