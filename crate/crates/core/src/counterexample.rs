//! The K_d family: the boundary of H8 minus the facet ABGZ, joined with a
//! simplex of fresh corners, optionally refined by stellar subdivisions.
//! Every member has a facet sigma such that no valid labelling makes sigma
//! the unique rainbow facet; `verify_no_unique_rainbow` certifies this
//! exhaustively.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{stellar_subdivide_facet, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::gallery;
use crate::instance::{Label, LabelSet, SpernerInstance};
use crate::sperner::{partitioned, Compiled, SearchOptions, Status, SweepCertificate};

/// Builds the dimension-`d` member of the family: the 19-facet complex on
/// A..Z joined with a simplex on fresh vertices `p5..p(d+1)`, viewed as a
/// triangulation of the d-simplex with corners A, B, G, Z, p5, ... The
/// returned simplex is CDEF joined with the fresh vertices.
pub fn build_kd(d: usize) -> Result<(SpernerInstance, Simplex)> {
    if d < 3 {
        return Err(Error::BadDimension(format!(
            "the family starts at dimension 3, got {d}"
        )));
    }
    if d + 1 > 32 {
        return Err(Error::BadDimension(format!("dimension {d} out of range")));
    }
    let k = gallery::h8_boundary().without_facet(&gallery::h8_sigma0())?;
    let rho_vertices: Vec<VertexId> = (5..=d + 1)
        .map(|i| VertexId::new(format!("p{i}")))
        .collect();
    let rho = Simplex::new(rho_vertices.iter().cloned())?;
    let complex = crate::complex::join(&k, &SimplicialComplex::single_simplex(rho.clone()))?;

    let label_count = (d + 1) as Label;
    let mut corners: Vec<VertexId> = ["A", "B", "G", "Z"]
        .iter()
        .map(|v| VertexId::new(*v))
        .collect();
    corners.extend(rho_vertices.iter().cloned());

    let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
    for (i, corner) in corners.iter().enumerate() {
        supports.insert(corner.clone(), LabelSet::singleton((i + 1) as Label));
    }
    // C, D, E, F sit inside the face spanned by the first four corners.
    for v in ["C", "D", "E", "F"] {
        supports.insert(VertexId::new(v), LabelSet::full(4));
    }

    let sigma = gallery::h8_sigma1().join(&rho)?;
    Ok((
        SpernerInstance::new(complex, label_count, supports, corners),
        sigma,
    ))
}

/// Stellar-subdivides `steps` facets other than `sigma`, assigning each new
/// apex the full label set. The facet refined at each step is the
/// lexicographically first eligible one, or a seeded random choice.
pub fn refine(
    instance: &SpernerInstance,
    sigma: &Simplex,
    steps: usize,
    seed: Option<u64>,
) -> Result<SpernerInstance> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut current = instance.clone();
    let mut apex_counter = 1usize;
    for _ in 0..steps {
        let eligible: Vec<Simplex> = current
            .complex()
            .facets()
            .iter()
            .filter(|f| *f != sigma)
            .cloned()
            .collect();
        if eligible.is_empty() {
            return Err(Error::NoEligibleFacet);
        }
        let target = match &mut rng {
            None => eligible[0].clone(),
            Some(rng) => eligible[rng.gen_range(0..eligible.len())].clone(),
        };
        let apex = loop {
            let candidate = VertexId::new(format!("b{apex_counter}"));
            apex_counter += 1;
            if !current.complex().contains_vertex(&candidate) {
                break candidate;
            }
        };
        let complex = stellar_subdivide_facet(current.complex(), &target, apex.clone())?;
        let mut extra = BTreeMap::new();
        extra.insert(apex, LabelSet::full(current.label_count()));
        current = current.with_complex(complex, extra);
    }
    Ok(current)
}

/// Sweeps every valid labelling and fails on any whose rainbow facets are
/// contained in `{sigma}` — that is, on a labelling with no rainbow facet
/// at all (which would already contradict the rainbow-existence sweep) or
/// one whose unique rainbow facet is `sigma`.
pub fn verify_no_unique_rainbow(
    instance: &SpernerInstance,
    sigma: &Simplex,
    opts: &SearchOptions,
) -> Result<SweepCertificate> {
    let compiled = Compiled::new(instance)?;
    if compiled.space > opts.max_space {
        return Err(Error::SearchSpaceTooLarge(compiled.space, opts.max_space));
    }
    let sigma_index = compiled
        .find_facet(sigma)
        .ok_or_else(|| Error::NotAFacet(sigma.to_string()))?;
    let first_bad = partitioned(
        compiled.space,
        opts.jobs,
        |lo, hi| {
            let mut digits = compiled.decode(lo);
            let mut index = lo;
            while index < hi {
                let labels = compiled.labels_of(&digits);
                let other_rainbow = compiled
                    .facets
                    .iter()
                    .enumerate()
                    .any(|(fi, f)| fi != sigma_index && compiled.is_rainbow(f, &labels));
                if !other_rainbow {
                    return Some(index);
                }
                compiled.advance(&mut digits);
                index += 1;
            }
            None
        },
        |results| results.into_iter().flatten().min(),
    );
    Ok(match first_bad {
        None => SweepCertificate {
            status: Status::Pass,
            space_size: compiled.space,
            witness: None,
            odd_parity_observed: None,
        },
        Some(index) => SweepCertificate {
            status: Status::Fail,
            space_size: compiled.space,
            witness: Some(compiled.labelling(&compiled.labels_of(&compiled.decode(index)))),
            odd_parity_observed: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate_instance;
    use crate::sperner::{enumerate_labellings, rainbow_facets, unique_rainbow_witness};

    #[test]
    fn family_members_have_the_documented_shape() {
        let (k3, sigma3) = build_kd(3).unwrap();
        assert_eq!(k3.complex().vertex_count(), 8);
        assert_eq!(k3.complex().facet_count(), 19);
        assert_eq!(sigma3, Simplex::from_letters("CDEF"));
        assert!(validate_instance(&k3).is_valid());

        let (k4, sigma4) = build_kd(4).unwrap();
        assert_eq!(k4.complex().vertex_count(), 9);
        assert_eq!(k4.complex().facet_count(), 19);
        assert!(k4.complex().facets().iter().all(|f| f.len() == 5));
        assert_eq!(k4.space_size(), 256);
        assert_eq!(sigma4, Simplex::parse("C,D,E,F,p5").unwrap());
        assert!(validate_instance(&k4).is_valid());

        let (k5, _) = build_kd(5).unwrap();
        assert_eq!(k5.complex().vertex_count(), 10);
        assert_eq!(
            k5.support(&VertexId::new("p6")),
            Some(LabelSet::singleton(6))
        );
        assert!(validate_instance(&k5).is_valid());

        assert!(matches!(build_kd(2), Err(Error::BadDimension(_))));
    }

    #[test]
    fn refinement_counts_and_identity() {
        let (k3, sigma) = build_kd(3).unwrap();
        assert_eq!(refine(&k3, &sigma, 0, None).unwrap(), k3);

        let once = refine(&k3, &sigma, 1, None).unwrap();
        assert_eq!(once.complex().vertex_count(), 9);
        assert_eq!(once.complex().facet_count(), 22);
        assert_eq!(once.space_size(), 1024);
        assert!(validate_instance(&once).is_valid());

        let (k4, sigma4) = build_kd(4).unwrap();
        let twice = refine(&k4, &sigma4, 2, None).unwrap();
        assert_eq!(twice.complex().vertex_count(), 11);
        assert_eq!(twice.complex().facet_count(), 27);
        assert!(validate_instance(&twice).is_valid());
    }

    #[test]
    fn refinement_preserves_boundary_and_corners() {
        let (k3, sigma) = build_kd(3).unwrap();
        let refined = refine(&k3, &sigma, 2, None).unwrap();
        assert_eq!(refined.corners(), k3.corners());
        let before: Vec<_> = k3.complex().boundary_faces();
        let after: Vec<_> = refined.complex().boundary_faces();
        assert_eq!(before, after);
    }

    #[test]
    fn seeded_refinement_is_reproducible() {
        let (k3, sigma) = build_kd(3).unwrap();
        let a = refine(&k3, &sigma, 3, Some(11)).unwrap();
        let b = refine(&k3, &sigma, 3, Some(11)).unwrap();
        assert_eq!(a, b);
        for steps in 1..=3 {
            let seeded = refine(&k3, &sigma, steps, Some(11)).unwrap();
            assert!(validate_instance(&seeded).is_valid());
            // sigma itself is never refined away
            assert!(seeded.complex().contains_facet(&sigma));
        }
    }

    #[test]
    fn refine_requires_an_eligible_facet() {
        let single = SimplicialComplex::single_simplex(Simplex::from_letters("ABGZ"));
        let sigma = Simplex::from_letters("ABGZ");
        let mut supports = BTreeMap::new();
        for (i, v) in ["A", "B", "G", "Z"].iter().enumerate() {
            supports.insert(VertexId::new(*v), LabelSet::singleton((i + 1) as Label));
        }
        let inst = SpernerInstance::new(
            single,
            4,
            supports,
            ["A", "B", "G", "Z"]
                .iter()
                .map(|v| VertexId::new(*v))
                .collect(),
        );
        assert!(matches!(
            refine(&inst, &sigma, 1, None),
            Err(Error::NoEligibleFacet)
        ));
    }

    #[test]
    fn no_unique_rainbow_across_the_family() {
        let opts = SearchOptions::default();
        let (k3, sigma3) = build_kd(3).unwrap();
        let cert = verify_no_unique_rainbow(&k3, &sigma3, &opts).unwrap();
        assert!(cert.status.passed());
        assert_eq!(cert.space_size, 256);
        assert_eq!(unique_rainbow_witness(&k3, &sigma3, &opts).unwrap(), None);

        let (k4, sigma4) = build_kd(4).unwrap();
        let cert4 = verify_no_unique_rainbow(&k4, &sigma4, &opts).unwrap();
        assert!(cert4.status.passed());
        assert_eq!(cert4.space_size, 256);
    }

    #[test]
    fn sweep_is_job_count_independent() {
        let (k3, sigma) = build_kd(3).unwrap();
        let run = |jobs| {
            verify_no_unique_rainbow(
                &k3,
                &sigma,
                &SearchOptions {
                    jobs,
                    ..Default::default()
                },
            )
            .unwrap()
        };
        let (one, five) = (run(1), run(5));
        assert_eq!(one.status, five.status);
        assert_eq!(one.witness, five.witness);
    }

    #[test]
    fn certificates_survive_refinement() {
        let opts = SearchOptions::default();
        let (k3, sigma) = build_kd(3).unwrap();
        let mut expected_space = 256u128;
        for steps in 1..=3 {
            let refined = refine(&k3, &sigma, steps, None).unwrap();
            let cert = verify_no_unique_rainbow(&refined, &sigma, &opts).unwrap();
            expected_space *= 4;
            assert!(cert.status.passed(), "failed after {steps} refinements");
            assert_eq!(cert.space_size, expected_space);
        }
    }

    #[test]
    fn sigma_rainbow_labellings_lift_a_second_rainbow_facet() {
        // Whenever sigma = CDEF * p5 is rainbow, the restriction to the
        // eight original vertices must leave some other facet tau of the
        // 19-facet complex rainbow, and tau joined with p5 is then rainbow
        // in the full complex.
        let (k4, sigma) = build_kd(4).unwrap();
        let base = gallery::h8_boundary()
            .without_facet(&gallery::h8_sigma0())
            .unwrap();
        let p5 = Simplex::parse("p5").unwrap();
        for labelling in enumerate_labellings(&k4).unwrap() {
            let sigma_rainbow = {
                let mut mask = 0u32;
                for v in sigma.vertices() {
                    mask |= 1 << (labelling.get(v).unwrap() - 1);
                }
                mask.count_ones() as usize == sigma.len()
            };
            if !sigma_rainbow {
                continue;
            }
            let report = rainbow_facets(&k4, &labelling).unwrap();
            let tau = base
                .facets()
                .iter()
                .find(|f| {
                    **f != gallery::h8_sigma1() && {
                        let mut mask = 0u32;
                        for v in f.vertices() {
                            mask |= 1 << (labelling.get(v).unwrap() - 1);
                        }
                        mask.count_ones() as usize == f.len()
                    }
                })
                .expect("a second rainbow facet of the base complex");
            let lifted = tau.join(&p5).unwrap();
            assert!(report.rainbow_facets.contains(&lifted));
        }
    }
}
