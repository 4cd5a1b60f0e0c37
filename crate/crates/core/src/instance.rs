//! Sperner instances: a pure complex plus per-vertex label supports and
//! corner designations. The support of a vertex is the set of labels it may
//! receive; it encodes the carrier face of the vertex, so the boundary
//! condition of a Sperner labelling becomes a purely combinatorial check.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{validate_complex, Simplex, SimplicialComplex, VertexId};

/// Labels are 1-based and bounded by the label count of the instance.
pub type Label = u8;

/// A subset of `{1..=count}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelSet(u32);

impl LabelSet {
    pub fn empty() -> Self {
        LabelSet(0)
    }

    pub fn full(count: Label) -> Self {
        debug_assert!(count <= 32);
        LabelSet(if count == 32 {
            u32::MAX
        } else {
            (1 << count) - 1
        })
    }

    pub fn singleton(label: Label) -> Self {
        LabelSet(1 << (label - 1))
    }

    pub fn insert(&mut self, label: Label) {
        self.0 |= 1 << (label - 1);
    }

    pub fn remove(&mut self, label: Label) {
        self.0 &= !(1 << (label - 1));
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0 >> (label - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn is_subset_of(&self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        (1..=32u8).filter(|l| self.contains(*l))
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<T: IntoIterator<Item = Label>>(iter: T) -> Self {
        let mut s = LabelSet::empty();
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// A Sperner search universe: pure `d`-complex, `d+1` labels, a support per
/// vertex, and one corner vertex per label.
#[derive(Clone, PartialEq, Eq)]
pub struct SpernerInstance {
    complex: SimplicialComplex,
    label_count: Label,
    supports: BTreeMap<VertexId, LabelSet>,
    /// `corners[i]` is the corner carrying label `i + 1`.
    corners: Vec<VertexId>,
}

impl SpernerInstance {
    pub fn new(
        complex: SimplicialComplex,
        label_count: Label,
        supports: BTreeMap<VertexId, LabelSet>,
        corners: Vec<VertexId>,
    ) -> Self {
        SpernerInstance {
            complex,
            label_count,
            supports,
            corners,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn label_count(&self) -> Label {
        self.label_count
    }

    pub fn dim(&self) -> i64 {
        self.label_count as i64 - 1
    }

    pub fn corners(&self) -> &[VertexId] {
        &self.corners
    }

    pub fn corner(&self, label: Label) -> Option<&VertexId> {
        self.corners.get(label as usize - 1)
    }

    pub fn support(&self, v: &VertexId) -> Option<LabelSet> {
        self.supports.get(v).copied()
    }

    pub fn supports(&self) -> &BTreeMap<VertexId, LabelSet> {
        &self.supports
    }

    /// Number of labellings compatible with the supports (corners included,
    /// each contributing a single choice). Saturates at `u128::MAX`.
    pub fn space_size(&self) -> u128 {
        let mut size: u128 = 1;
        for v in self.complex.vertices() {
            let n = self.support(v).map(|s| s.len()).unwrap_or(0) as u128;
            size = size.saturating_mul(n);
        }
        size
    }

    /// Replaces the complex, keeping labels and corners; used by refinement
    /// steps which then register supports for the new vertices.
    pub(crate) fn with_complex(
        &self,
        complex: SimplicialComplex,
        extra_supports: BTreeMap<VertexId, LabelSet>,
    ) -> SpernerInstance {
        let mut supports = self.supports.clone();
        supports.extend(extra_supports);
        SpernerInstance {
            complex,
            label_count: self.label_count,
            supports,
            corners: self.corners.clone(),
        }
    }
}

impl fmt::Debug for SpernerInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SpernerInstance({} labels, {:?})",
            self.label_count, self.complex
        )
    }
}

/// One structural violation found by [`validate_instance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceViolation {
    ComplexInvalid(String),
    ComplexNotPure,
    DimensionMismatch {
        complex_dim: i64,
        label_count: Label,
    },
    CornerCount {
        expected: usize,
        actual: usize,
    },
    CornerUnknownVertex(VertexId),
    DuplicateCorner(VertexId),
    CornerNotSingleton(VertexId),
    CornerSupportMismatch {
        vertex: VertexId,
        label: Label,
    },
    SupportMissing(VertexId),
    SupportEmpty(VertexId),
    SupportOutOfRange(VertexId),
    SupportUnknownVertex(VertexId),
    /// A boundary face whose vertex supports union to all labels, leaving
    /// no label that a Sperner labelling is barred from using there.
    BoundaryFullSupport(Simplex),
}

impl fmt::Display for InstanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceViolation::ComplexInvalid(e) => write!(f, "complex invalid: {e}"),
            InstanceViolation::ComplexNotPure => write!(f, "complex is not pure"),
            InstanceViolation::DimensionMismatch {
                complex_dim,
                label_count,
            } => write!(
                f,
                "complex dimension {complex_dim} does not match label count {label_count}"
            ),
            InstanceViolation::CornerCount { expected, actual } => {
                write!(f, "expected {expected} corners, found {actual}")
            }
            InstanceViolation::CornerUnknownVertex(v) => {
                write!(f, "corner {v} is not a vertex of the complex")
            }
            InstanceViolation::DuplicateCorner(v) => write!(f, "corner {v} used twice"),
            InstanceViolation::CornerNotSingleton(v) => {
                write!(f, "corner {v} does not have a singleton support")
            }
            InstanceViolation::CornerSupportMismatch { vertex, label } => {
                write!(f, "corner {vertex} must have support {{{label}}}")
            }
            InstanceViolation::SupportMissing(v) => write!(f, "vertex {v} has no support"),
            InstanceViolation::SupportEmpty(v) => write!(f, "vertex {v} has empty support"),
            InstanceViolation::SupportOutOfRange(v) => {
                write!(f, "support of {v} uses labels outside the label range")
            }
            InstanceViolation::SupportUnknownVertex(v) => {
                write!(f, "support given for unknown vertex {v}")
            }
            InstanceViolation::BoundaryFullSupport(s) => {
                write!(f, "boundary face {s} allows every label")
            }
        }
    }
}

/// Outcome of [`validate_instance`]: the list of violations, empty when the
/// instance is well-formed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceReport {
    pub violations: Vec<InstanceViolation>,
}

impl InstanceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structural invariant of a Sperner instance and reports all
/// violations rather than failing on the first.
pub fn validate_instance(s: &SpernerInstance) -> InstanceReport {
    let mut violations = Vec::new();
    match validate_complex(s.complex()) {
        Err(e) => violations.push(InstanceViolation::ComplexInvalid(e.to_string())),
        Ok(report) => {
            if !report.pure {
                violations.push(InstanceViolation::ComplexNotPure);
            }
        }
    }
    if s.complex().dim() != s.dim() {
        violations.push(InstanceViolation::DimensionMismatch {
            complex_dim: s.complex().dim(),
            label_count: s.label_count(),
        });
    }

    let expected = s.label_count() as usize;
    if s.corners().len() != expected {
        violations.push(InstanceViolation::CornerCount {
            expected,
            actual: s.corners().len(),
        });
    }
    let mut seen: BTreeMap<&VertexId, usize> = BTreeMap::new();
    for (i, corner) in s.corners().iter().enumerate() {
        let label = (i + 1) as Label;
        if *seen.entry(corner).or_insert(0) == 1 {
            violations.push(InstanceViolation::DuplicateCorner(corner.clone()));
        }
        *seen.get_mut(corner).unwrap() += 1;
        if !s.complex().contains_vertex(corner) {
            violations.push(InstanceViolation::CornerUnknownVertex(corner.clone()));
            continue;
        }
        match s.support(corner) {
            None => {}
            Some(sup) if sup.len() != 1 => {
                violations.push(InstanceViolation::CornerNotSingleton(corner.clone()));
            }
            Some(sup) if !sup.contains(label) => {
                violations.push(InstanceViolation::CornerSupportMismatch {
                    vertex: corner.clone(),
                    label,
                });
            }
            Some(_) => {}
        }
    }

    let all = LabelSet::full(s.label_count());
    for v in s.complex().vertices() {
        match s.support(v) {
            None => violations.push(InstanceViolation::SupportMissing(v.clone())),
            Some(sup) if sup.is_empty() => {
                violations.push(InstanceViolation::SupportEmpty(v.clone()))
            }
            Some(sup) if !sup.is_subset_of(all) => {
                violations.push(InstanceViolation::SupportOutOfRange(v.clone()))
            }
            Some(_) => {}
        }
    }
    for v in s.supports().keys() {
        if !s.complex().contains_vertex(v) {
            violations.push(InstanceViolation::SupportUnknownVertex(v.clone()));
        }
    }

    for face in s.complex().boundary_faces() {
        let union = face
            .vertices()
            .iter()
            .filter_map(|v| s.support(v))
            .fold(LabelSet::empty(), |acc, sup| acc.union(sup));
        if union == all {
            violations.push(InstanceViolation::BoundaryFullSupport(face));
        }
    }

    InstanceReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;
    use crate::counterexample::build_kd;

    #[test]
    fn label_set_basics() {
        let mut s = LabelSet::empty();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(1);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.len(), 2);
        assert!(s.is_subset_of(LabelSet::full(4)));
        assert!(!LabelSet::full(4).is_subset_of(s));
        s.remove(1);
        assert_eq!(s, LabelSet::singleton(3));
    }

    #[test]
    fn canonical_k3_is_valid() {
        let (k3, _) = build_kd(3).unwrap();
        let report = validate_instance(&k3);
        assert!(report.is_valid(), "violations: {:?}", report.violations);
        assert_eq!(k3.space_size(), 256);
    }

    #[test]
    fn corner_with_fat_support_is_flagged() {
        let (k3, _) = build_kd(3).unwrap();
        let mut supports = k3.supports().clone();
        supports.insert(k3.corner(1).unwrap().clone(), [1, 2].into_iter().collect());
        let broken = SpernerInstance::new(
            k3.complex().clone(),
            k3.label_count(),
            supports,
            k3.corners().to_vec(),
        );
        let report = validate_instance(&broken);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, InstanceViolation::CornerNotSingleton(_))));
    }

    #[test]
    fn full_support_boundary_face_is_flagged() {
        let (k3, _) = build_kd(3).unwrap();
        // Opening up the support of corner Z to all four labels makes the
        // boundary triangles through Z cover the full label set.
        let mut supports = k3.supports().clone();
        supports.insert(VertexId::new("Z"), LabelSet::full(4));
        let broken = SpernerInstance::new(
            k3.complex().clone(),
            k3.label_count(),
            supports,
            k3.corners().to_vec(),
        );
        let report = validate_instance(&broken);
        assert!(report.violations.iter().any(
            |v| matches!(v, InstanceViolation::BoundaryFullSupport(f)
                if *f == Simplex::from_letters("ABZ")
                || *f == Simplex::from_letters("AGZ")
                || *f == Simplex::from_letters("BGZ"))
        ));
    }
}
