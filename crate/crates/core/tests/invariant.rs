use cubic_dga::augvar::enumerate_augmentations;
use cubic_dga::binseq::differential;
use cubic_dga::field::{FieldSpec, FiniteField, Ring};
use cubic_dga::fixtures;
use cubic_dga::garden::random::random_cubic_graph;
use cubic_dga::graph_core::CubicPlanarGraph;
use cubic_dga::invariant::{
    abs_det, apply_lattice_action, basis_matrices, check_sequence_action, generators_commute, invariant_generators, projection_pi,
    random_basis, tversal_table, verify_action_commutes, verify_invariant_generators, InvariantError, LatticeAction,
};
use cubic_dga::symbolic::{AlgebraElement, Gen, Space};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIXTURES: [&str; 7] = ["k4", "prism", "cube", "prism5", "prism6", "g1", "g2"];

fn field(q: u32) -> FiniteField {
    match FieldSpec::for_order(q).unwrap().ring().unwrap() {
        Ring::Field(f) => (*f).clone(),
        Ring::Integers => unreachable!(),
    }
}

/// Fraction-free Gaussian elimination over `i128`.
fn bareiss_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn tversal_count(g: &CubicPlanarGraph, name: &str, basis: &cubic_dga::graph_core::SpanningBasis, q: u32) -> usize {
    let (_, garden) = fixtures::garden(name).unwrap();
    let table = tversal_table(g, &differential(g, &garden).unwrap(), basis);
    enumerate_augmentations(&table, basis, &field(q)).len()
}

#[test]
fn lattice_generators_commute_with_the_differential() {
    for name in FIXTURES {
        let (g, garden) = fixtures::garden(name).unwrap();
        let r = verify_action_commutes(&g, &garden).unwrap();
        assert_eq!(r.results.len(), g.genus() + 3, "{name}");
        assert!(r.holds(), "{name}: {:?}", r.results.iter().filter(|(_, c)| !c.holds()).map(|(n, _)| n).collect::<Vec<_>>());
        assert!(generators_commute(&g).unwrap(), "{name}");
    }
}

#[test]
fn sequence_weights_scale_by_t() {
    for name in FIXTURES {
        let (g, garden) = fixtures::garden(name).unwrap();
        let r = check_sequence_action(&g, &garden).unwrap();
        assert!(r.sequences > 0, "{name}");
        assert!(r.holds(), "{name}: {:?}", r.failures);
    }
}

#[test]
fn phi0_scales_generators_by_degree() {
    let (g, _) = fixtures::garden("k4").unwrap();
    let phi0 = LatticeAction::generator(&g, 0);
    let s = Space::new(g.n_edges());
    let x = AlgebraElement::gen(&Ring::Integers, s, Gen::X);
    assert_eq!(apply_lattice_action(&g, &phi0, &x).unwrap(), x.extend_t());
    assert_eq!(phi0.y_power(), -1);
    assert!(phi0.edge_powers(&g).iter().all(|&p| p == 1));
}

#[test]
fn bridged_graph_rejects_the_action() {
    let (g, garden) = fixtures::garden("dumbbell").unwrap();
    assert!(matches!(verify_action_commutes(&g, &garden), Err(InvariantError::BridgePresent(_))));
}

#[test]
fn invariant_generators_are_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in FIXTURES {
        let g = fixtures::graph(name).unwrap();
        for basis in [g.spanning_basis(0).unwrap(), random_basis(&g, &mut rng).unwrap()] {
            let mats = basis_matrices(&g, &basis).unwrap();
            assert!(mats.top_block_is_minus_identity(), "{name}");
            let moved = verify_invariant_generators(&g, &invariant_generators(&g, &mats)).unwrap();
            assert!(moved.is_empty(), "{name}: {moved:?}");
        }
    }
}

#[test]
fn fifty_random_bases_are_unimodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 50 {
        let genus = 1 + checked % 5;
        let g = random_cubic_graph(&mut rng, genus);
        let basis = random_basis(&g, &mut rng).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        assert_eq!(bareiss_det(&mats.a).abs(), 1, "genus {genus}");
        assert_eq!(abs_det(&mats), 1);
        checked += 1;
    }
}

#[test]
fn augmentation_counts_do_not_depend_on_the_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for name in ["k4", "prism", "cube", "g1", "g2"] {
        let g = fixtures::graph(name).unwrap();
        let b0 = g.spanning_basis(0).unwrap();
        let b1 = random_basis(&g, &mut rng).unwrap();
        for q in [2, 3, 4] {
            assert_eq!(tversal_count(&g, name, &b0, q), tversal_count(&g, name, &b1, q), "{name} q={q}");
        }
    }
}

#[test]
fn projection_fixes_the_slice() {
    let g = fixtures::graph("cube").unwrap();
    let basis = g.spanning_basis(0).unwrap();
    let mats = basis_matrices(&g, &basis).unwrap();
    let f = field(5);
    let (_, garden) = fixtures::garden("cube").unwrap();
    let table = tversal_table(&g, &differential(&g, &garden).unwrap(), &basis);
    for a in enumerate_augmentations(&table, &basis, &f) {
        assert_eq!(projection_pi(&mats, &f, &a), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_bases_give_unimodular_a(seed in any::<u64>(), genus in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic_graph(&mut rng, genus);
        let basis = random_basis(&g, &mut rng).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        prop_assert_eq!(bareiss_det(&mats.a).abs(), 1);
        prop_assert!(verify_invariant_generators(&g, &invariant_generators(&g, &mats)).unwrap().is_empty());
    }

    #[test]
    fn projection_is_idempotent(seed in any::<u64>(), genus in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic_graph(&mut rng, genus);
        let basis = random_basis(&g, &mut rng).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        let f = field(7);
        let lambda: Vec<u32> = (0..g.n_edges()).map(|_| rand::Rng::gen_range(&mut rng, 1..7)).collect();
        let once = projection_pi(&mats, &f, &lambda);
        for &k in &mats.non_tree {
            prop_assert_eq!(once[k], 1);
        }
        prop_assert_eq!(projection_pi(&mats, &f, &once), once);
    }
}
