use cubic_dga::augvar::{
    aug_to_coloring, canonical_coloring, chromatic_polynomial, coloring_to_aug, count_pgl2_orbits, count_proper_colorings,
    enumerate_augmentations, enumerate_full_augmentations, enumerate_proper_colorings, eval_at, mu_from_aug, verify_chromatic_theorem,
    AugvarError, Coloring,
};
use cubic_dga::binseq::{differential, exterior_equation};
use cubic_dga::field::{FieldSpec, FiniteField, Ring};
use cubic_dga::fixtures;
use cubic_dga::invariant::{basis_matrices, projection_pi, tversal_table};
use std::collections::BTreeSet;

fn field(q: u32) -> FiniteField {
    match FieldSpec::for_order(q).unwrap().ring().unwrap() {
        Ring::Field(f) => (*f).clone(),
        Ring::Integers => unreachable!(),
    }
}

const GRAPHS: [&str; 5] = ["k4", "prism", "cube", "g1", "g2"];

#[test]
fn chromatic_theorem_on_fixtures() {
    for name in GRAPHS {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        for q in [2, 3, 4, 5] {
            let r = verify_chromatic_theorem(&g, &garden, &basis, &field(q)).unwrap();
            assert!(r.holds(), "{name} q={q}: {r}");
        }
    }
}

#[test]
fn k4_theorem_report_text() {
    let (g, garden) = fixtures::garden("k4").unwrap();
    let r = verify_chromatic_theorem(&g, &garden, &g.spanning_basis(0).unwrap(), &field(3)).unwrap();
    assert_eq!(r.to_string(), "24 = 24 × 1");
}

#[test]
fn chromatic_polynomial_matches_brute_force_on_duals() {
    for name in GRAPHS {
        let g = fixtures::graph(name).unwrap();
        let d = g.dual_graph();
        let p = chromatic_polynomial(d.n_vertices, &d.edges);
        for k in 0..=6 {
            assert_eq!(p.eval(k as i64), count_proper_colorings(d.n_vertices, &d.edges, k) as i128, "{name} k={k}");
        }
    }
}

#[test]
fn colorings_and_orbits_cross_check() {
    for name in GRAPHS {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let table = tversal_table(&g, &differential(&g, &garden).unwrap(), &basis);
        let d = g.dual_graph();
        let chi = chromatic_polynomial(d.n_vertices, &d.edges);
        for q in [2, 3, 4] {
            let f = field(q);
            let cols = enumerate_proper_colorings(&g, &f);
            assert_eq!(cols.len() as i128, chi.eval(q as i64 + 1), "{name} q={q}");
            let augs = enumerate_augmentations(&table, &basis, &f);
            assert_eq!(count_pgl2_orbits(&cols, &f), augs.len(), "{name} q={q}");
        }
    }
}

#[test]
fn phi_is_injective_and_proper() {
    for name in GRAPHS {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let table = tversal_table(&g, &differential(&g, &garden).unwrap(), &basis);
        for q in [3, 4, 5] {
            let f = field(q);
            let augs = enumerate_augmentations(&table, &basis, &f);
            let mut images = BTreeSet::new();
            for a in &augs {
                let c = aug_to_coloring(&g, &garden.orientation, &f, a, 0).unwrap_or_else(|e| panic!("{name} q={q}: {e}"));
                assert!(c.is_proper(&g));
                images.insert(c);
            }
            assert_eq!(images.len(), augs.len(), "{name} q={q}");
        }
    }
}

#[test]
fn phi_does_not_depend_on_base_vertex() {
    for name in GRAPHS {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let table = tversal_table(&g, &differential(&g, &garden).unwrap(), &basis);
        let f = field(5);
        for a in enumerate_augmentations(&table, &basis, &f) {
            let c0 = aug_to_coloring(&g, &garden.orientation, &f, &a, 0).unwrap();
            for v in 1..g.n_vertices() {
                let cv = aug_to_coloring(&g, &garden.orientation, &f, &a, v).unwrap();
                assert_eq!(canonical_coloring(&g, &f, &cv, 0).unwrap(), c0, "{name} v={v}");
            }
        }
    }
}

#[test]
fn correspondence_roundtrips() {
    for name in GRAPHS {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        let table = tversal_table(&g, &differential(&g, &garden).unwrap(), &basis);
        for q in [3, 4] {
            let f = field(q);
            let augs = enumerate_augmentations(&table, &basis, &f);
            for a in &augs {
                let c = aug_to_coloring(&g, &garden.orientation, &f, a, 0).unwrap();
                match coloring_to_aug(&g, &garden.orientation, &f, &c, &mats) {
                    Ok(back) => assert_eq!(&back, a, "{name} q={q}: psi(phi(a)) != a"),
                    Err(AugvarError::NoFreeColor) => {}
                    Err(e) => panic!("{name} q={q}: {e}"),
                }
            }
            let mut classes: BTreeSet<Coloring> = BTreeSet::new();
            for c in enumerate_proper_colorings(&g, &f) {
                classes.insert(canonical_coloring(&g, &f, &c, 0).unwrap());
            }
            for c in &classes {
                match coloring_to_aug(&g, &garden.orientation, &f, c, &mats) {
                    Ok(a) => {
                        for p in &table.df {
                            assert_eq!(eval_at(p, &f, &a), 0, "{name} q={q}: psi lands off the variety");
                        }
                        assert_eq!(&aug_to_coloring(&g, &garden.orientation, &f, &a, 0).unwrap(), c, "{name} q={q}");
                    }
                    Err(AugvarError::NoFreeColor) => {}
                    Err(e) => panic!("{name} q={q}: {e}"),
                }
            }
        }
    }
}

#[test]
fn full_augmentations_project_onto_slice() {
    for name in ["k4", "prism", "g1", "g2"] {
        let (g, garden) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        let full_table = differential(&g, &garden).unwrap();
        let table = tversal_table(&g, &full_table, &basis);
        for q in [3, 4] {
            let f = field(q);
            let tv: BTreeSet<Vec<u32>> = enumerate_augmentations(&table, &basis, &f).into_iter().collect();
            let full = enumerate_full_augmentations(&full_table, &f);
            assert_eq!(full.len(), tv.len() * ((q - 1) as usize).pow(g.genus() as u32 + 3), "{name} q={q}");
            let ext = exterior_equation(&g, &garden.orientation, &Ring::Integers);
            for a in &full {
                assert!(tv.contains(&projection_pi(&mats, &f, a)));
                assert_eq!(eval_at(&ext, &f, a), 0);
                let mu = mu_from_aug(&g, &garden.orientation, &f, a);
                assert!(mu.mu_sum_holds(&g, &f) && mu.mu_prod_holds(&g, &f) && mu.product_identity_holds(&g, &f));
            }
        }
    }
}

#[test]
fn bridged_graph_has_no_augmentations() {
    let (g, garden) = fixtures::garden("dumbbell").unwrap();
    let basis = g.spanning_basis(0).unwrap();
    let d = g.dual_graph();
    assert!(chromatic_polynomial(d.n_vertices, &d.edges).is_zero());
    for q in [2, 3, 4, 5] {
        let r = verify_chromatic_theorem(&g, &garden, &basis, &field(q)).unwrap();
        assert_eq!(r.augmentations, 0);
        assert!(r.holds());
    }
}
