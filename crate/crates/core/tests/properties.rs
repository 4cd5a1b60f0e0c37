//! Randomised invariants: structural laws of joins, stellar subdivisions
//! and face closures on generated complexes, enumeration counts against
//! support products, and the exact colouring solver against a brute-force
//! oracle.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use sperner_forge::chromatic::{is_k_colourable, odd_cycle_or_bipartition, Graph, Parity};
use sperner_forge::complex::{
    join, stellar_subdivide_facet, validate_complex, Simplex, SimplicialComplex, VertexId,
};
use sperner_forge::instance::{Label, LabelSet, SpernerInstance};
use sperner_forge::sperner::{enumerate_labellings, is_valid_sperner};

/// A random pure 2-complex on up to seven vertices: a non-empty set of
/// distinct triangles. Equal dimension makes every facet maximal.
fn pure_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::btree_set((0usize..7, 0usize..7, 0usize..7), 1..8).prop_filter_map(
        "triangles need three distinct vertices",
        |triples| {
            let facets: BTreeSet<Simplex> = triples
                .into_iter()
                .filter(|(a, b, c)| a != b && b != c && a != c)
                .map(|(a, b, c)| {
                    Simplex::new([a, b, c].map(|i| VertexId::new(format!("t{i}")))).unwrap()
                })
                .collect();
            if facets.is_empty() {
                None
            } else {
                Some(SimplicialComplex::from_facets(facets.into_iter().collect()))
            }
        },
    )
}

fn closure_by_subset_sweep(c: &SimplicialComplex) -> Vec<usize> {
    let vs = c.vertices();
    let mut counts = vec![0usize; c.dim() as usize + 1];
    for mask in 1u32..(1 << vs.len()) {
        let subset: Vec<VertexId> = (0..vs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i].clone())
            .collect();
        if subset.len() > c.dim() as usize + 1 {
            continue;
        }
        let s = Simplex::new(subset).unwrap();
        if c.facets().iter().any(|f| s.is_face_of(f)) {
            counts[s.dim() as usize] += 1;
        }
    }
    counts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_vector_matches_subset_sweep(c in pure_complex()) {
        prop_assert_eq!(c.f_vector(), closure_by_subset_sweep(&c));
    }

    #[test]
    fn join_with_a_point_preserves_facets(c in pure_complex()) {
        let p = SimplicialComplex::single_simplex(Simplex::from_letters("q"));
        let j = join(&c, &p).unwrap();
        prop_assert_eq!(j.facet_count(), c.facet_count());
        prop_assert_eq!(j.dim(), c.dim() + 1);
        prop_assert_eq!(j.vertex_count(), c.vertex_count() + 1);
    }

    #[test]
    fn join_facet_counts_multiply(a in pure_complex(), edges in 1usize..4) {
        // A path of `edges` edges on fresh vertices.
        let b = SimplicialComplex::from_facets(
            (0..edges)
                .map(|i| {
                    Simplex::new([
                        VertexId::new(format!("q{i}")),
                        VertexId::new(format!("q{}", i + 1)),
                    ])
                    .unwrap()
                })
                .collect(),
        );
        let j = join(&a, &b).unwrap();
        prop_assert_eq!(j.facet_count(), a.facet_count() * b.facet_count());
        prop_assert_eq!(j.dim(), a.dim() + b.dim() + 1);
    }

    #[test]
    fn stellar_subdivision_preserves_structure(c in pure_complex(), pick in any::<prop::sample::Index>()) {
        let facet = c.facets()[pick.index(c.facet_count())].clone();
        let before = validate_complex(&c).unwrap();
        let after_complex =
            stellar_subdivide_facet(&c, &facet, VertexId::new("apex")).unwrap();
        let after = validate_complex(&after_complex).unwrap();
        prop_assert_eq!(
            after_complex.facet_count(),
            c.facet_count() + c.dim() as usize
        );
        prop_assert_eq!(after_complex.vertex_count(), c.vertex_count() + 1);
        prop_assert_eq!(before.pseudomanifold, after.pseudomanifold);
        prop_assert_eq!(before.boundary_faces, after.boundary_faces);
    }

    #[test]
    fn enumeration_count_is_the_support_product(
        support_bits in proptest::collection::vec(1u32..8, 4),
    ) {
        // One tetrahedron; corners get singletons, the free part of each
        // support comes from the generator.
        let complex = SimplicialComplex::single_simplex(Simplex::from_letters("wxyz"));
        let names = ["w", "x", "y", "z"];
        let mut supports: BTreeMap<VertexId, LabelSet> = BTreeMap::new();
        let mut expected: u128 = 1;
        for (i, bits) in support_bits.iter().enumerate() {
            let mut set = LabelSet::empty();
            for l in 1..=3u8 {
                if bits >> (l - 1) & 1 == 1 {
                    set.insert(l);
                }
            }
            set.insert(4);
            expected *= set.len() as u128;
            supports.insert(VertexId::new(names[i]), set);
        }
        let instance = SpernerInstance::new(complex, 4, supports, Vec::new());
        prop_assert_eq!(instance.space_size(), expected);
        let all: Vec<_> = enumerate_labellings(&instance).unwrap().collect();
        prop_assert_eq!(all.len() as u128, expected);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for labelling in &all {
            prop_assert!(is_valid_sperner(&instance, labelling).unwrap());
        }
    }

    #[test]
    fn exact_colouring_matches_brute_force(
        edge_bits in 0u32..(1 << 15),
        k in 1usize..5,
    ) {
        // Graphs on six vertices, edges from the bit pattern.
        let n = 6;
        let mut g = Graph::new(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if edge_bits >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        let fast = is_k_colourable(&g, k);
        if let Some(colouring) = &fast {
            prop_assert!(colouring.is_proper(&g));
            prop_assert!(colouring.colours.iter().all(|&c| (1..=k).contains(&c)));
        }
        // Brute force over k^n assignments.
        let mut exists = false;
        'outer: for code in 0..k.pow(n as u32) {
            let mut c = code;
            let mut colours = vec![0; n];
            for slot in colours.iter_mut() {
                *slot = c % k + 1;
                c /= k;
            }
            if g.edges().iter().all(|&(u, v)| colours[u] != colours[v]) {
                exists = true;
                break 'outer;
            }
        }
        prop_assert_eq!(fast.is_some(), exists);
    }

    #[test]
    fn parity_certificates_are_valid(edge_bits in 0u32..(1 << 15)) {
        let n = 6;
        let mut g = Graph::new(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if edge_bits >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        match odd_cycle_or_bipartition(&g) {
            Parity::OddCycle(cycle) => {
                prop_assert_eq!(cycle.len() % 2, 1);
                prop_assert!(cycle.len() >= 3);
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
            Parity::Bipartition(side) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(side[u], side[v]);
                }
            }
        }
    }
}

/// Exhaustive (not randomised) check of label-permutation equivariance on
/// the canonical 19-facet instance: all 24 label permutations preserve the
/// rainbow-count histogram.
#[test]
fn label_permutations_preserve_rainbow_histograms() {
    use itertools::Itertools;
    use sperner_forge::counterexample::build_kd;
    use sperner_forge::sperner::rainbow_facets;

    let (inst, _) = build_kd(3).unwrap();
    let histogram = |s: &SpernerInstance| {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for l in enumerate_labellings(s).unwrap() {
            *counts
                .entry(rainbow_facets(s, &l).unwrap().count())
                .or_insert(0) += 1;
        }
        counts
    };
    let base = histogram(&inst);
    for perm in (1u8..=4).permutations(4) {
        let apply = |l: Label| perm[l as usize - 1];
        let supports = inst
            .supports()
            .iter()
            .map(|(v, s)| (v.clone(), s.iter().map(apply).collect()))
            .collect();
        let mut corners = vec![VertexId::new("?"); 4];
        for (i, c) in inst.corners().iter().enumerate() {
            corners[apply((i + 1) as Label) as usize - 1] = c.clone();
        }
        let permuted = SpernerInstance::new(
            inst.complex().clone(),
            inst.label_count(),
            supports,
            corners,
        );
        assert_eq!(histogram(&permuted), base);
    }
}
