//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cubic_dga::augvar::{
    aug_to_coloring, chromatic_polynomial, coloring_to_aug, count_pgl2_orbits, enumerate_augmentations, enumerate_full_augmentations,
    enumerate_proper_colorings, mu_from_aug, verify_chromatic_theorem, AugvarError,
};
use cubic_dga::binseq::{check_d_squared, differential};
use cubic_dga::field::{FieldSpec, FiniteField, Ring};
use cubic_dga::fixtures;
use cubic_dga::garden::random::{random_cubic_graph, random_embedding, random_options, random_orientation};
use cubic_dga::garden::{build_garden_geometric, BuildOptions, Garden};
use cubic_dga::graph_core::{CubicPlanarGraph, SpanningBasis};
use cubic_dga::invariant::{basis_matrices, check_sequence_action, generators_commute, random_basis, tversal_table, verify_action_commutes};
use cubic_dga::moves::move_battery;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const THEOREM_GRAPHS: [&str; 5] = ["k4", "prism", "cube", "g1", "g2"];
const DRAWN: [&str; 7] = ["k4", "prism", "cube", "prism5", "prism6", "g1", "g2"];

type Verdict = Result<String, String>;

fn field(q: u32) -> FiniteField {
    match FieldSpec::for_order(q).unwrap().ring().unwrap() {
        Ring::Field(f) => (*f).clone(),
        Ring::Integers => unreachable!(),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Backtracking count of proper `k`-colorings of the dual graph.
fn dual_colorings(g: &CubicPlanarGraph, k: u32) -> u64 {
    let d = g.dual_graph();
    let mut adj = vec![Vec::new(); d.n_vertices];
    for &(a, b) in &d.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn go(v: usize, k: u32, adj: &[Vec<usize>], col: &mut Vec<u32>) -> u64 {
        if v == adj.len() {
            return 1;
        }
        let mut n = 0;
        for c in 0..k {
            if adj[v].iter().all(|&u| u >= v || col[u] != c) {
                col[v] = c;
                n += go(v + 1, k, adj, col);
            }
        }
        n
    }
    go(0, k, &adj, &mut vec![0; d.n_vertices])
}

fn tversal_augs(g: &CubicPlanarGraph, garden: &Garden, basis: &SpanningBasis, f: &FiniteField) -> Vec<Vec<u32>> {
    let table = tversal_table(g, &differential(g, garden).unwrap(), basis);
    enumerate_augmentations(&table, basis, f)
}

fn c1() -> Verdict {
    let start = Instant::now();
    for name in ["g1", "g2"] {
        let (g, gd) = fixtures::garden(name).unwrap();
        ensure(check_d_squared(&differential(&g, &gd).unwrap()).is_zero(), || format!("{name} over ZZ"))?;
    }
    let (g, gd) = fixtures::garden("prism4m").unwrap();
    let f2 = FieldSpec::for_order(2).unwrap().ring().unwrap();
    ensure(check_d_squared(&differential(&g, &gd).unwrap().change_ring(&f2)).is_zero(), || "modified 4-prism over F2".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs = BTreeSet::new();
    let mut gardens = 0;
    let mut check = |g: &CubicPlanarGraph, rng: &mut ChaCha8Rng, tag: &str| -> Result<(), String> {
        let Some(e) = random_embedding(g, rng) else { return Ok(()) };
        let opts = random_options(g, &e, rng);
        let garden = build_garden_geometric(g, &e, &opts).map_err(|err| format!("{tag}: {err}"))?;
        ensure(check_d_squared(&differential(g, &garden).unwrap()).is_zero(), || format!("{tag}: nonzero square"))?;
        graphs.insert(format!("{g:?}"));
        gardens += 1;
        Ok(())
    };
    for name in DRAWN {
        let g = fixtures::graph(name).unwrap();
        for _ in 0..10 {
            check(&g, &mut rng, name)?;
        }
    }
    for genus in 1..=5 {
        for _ in 0..10 {
            let g = random_cubic_graph(&mut rng, genus);
            check(&g, &mut rng, &format!("random genus {genus}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(gardens >= 100 && graphs.len() >= 5, || format!("only {gardens} gardens on {} graphs", graphs.len()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}"))?;
    Ok(format!("G1, G2 over ZZ, modified 4-prism over F2, {gardens} random gardens on {} graphs in {elapsed:.1?}", graphs.len()))
}

fn c2() -> Verdict {
    let expect = [("g1", 'y', "-e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3"), ("g2", 'x', "-e1^-1*e3^-1*e4*f1 + e4*e5^-1*e6^-1*f2")];
    for (name, gen, s) in expect {
        let (g, gd) = fixtures::garden(name).unwrap();
        let t = differential(&g, &gd).unwrap();
        let got = if gen == 'y' { t.dy.to_text() } else { t.dx.to_text() };
        ensure(got == s, || format!("{name} d{gen} = {got}"))?;
    }
    Ok("G1 dy and G2 dx match".into())
}

fn c3() -> Verdict {
    for name in THEOREM_GRAPHS {
        let (g, gd) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        for q in 2..=5u32 {
            let f = field(q);
            let chi = dual_colorings(&g, q + 1);
            let augs = tversal_augs(&g, &gd, &basis, &f).len() as u64;
            ensure(chi == (q.pow(3) - q) as u64 * augs, || format!("{name} q={q}: {chi} vs {augs}"))?;
            let r = verify_chromatic_theorem(&g, &gd, &basis, &f).unwrap();
            ensure(r.holds(), || format!("{name} q={q}: {r}"))?;
        }
    }
    Ok("5 graphs x q in {2,3,4,5}".into())
}

fn c4() -> Verdict {
    for name in THEOREM_GRAPHS {
        let (g, gd) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let d = g.dual_graph();
        let chi = chromatic_polynomial(d.n_vertices, &d.edges);
        for q in 2..=4u32 {
            let f = field(q);
            let cols = enumerate_proper_colorings(&g, &f);
            ensure(cols.len() as i128 == chi.eval(q as i64 + 1), || format!("{name} q={q}: colorings"))?;
            ensure(cols.len() as u64 == dual_colorings(&g, q + 1), || format!("{name} q={q}: brute force"))?;
            let augs = tversal_augs(&g, &gd, &basis, &f).len();
            let orbits = count_pgl2_orbits(&cols, &f);
            // free action: every orbit has q^3 - q elements
            ensure(orbits * (q.pow(3) - q) as usize == cols.len(), || format!("{name} q={q}: orbit sizes"))?;
            ensure(orbits == augs, || format!("{name} q={q}: {orbits} orbits, {augs} augmentations"))?;
        }
    }
    Ok("coloring and orbit counts for q <= 4".into())
}

fn c5() -> Verdict {
    let (mut real, mut skipped) = (0, 0);
    for name in THEOREM_GRAPHS {
        let (g, gd) = fixtures::garden(name).unwrap();
        let basis = g.spanning_basis(0).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        for q in [3, 4] {
            let f = field(q);
            let augs = tversal_augs(&g, &gd, &basis, &f);
            let mut images = BTreeSet::new();
            for a in &augs {
                let c = aug_to_coloring(&g, &gd.orientation, &f, a, 0).map_err(|e| format!("{name} q={q}: {e}"))?;
                match coloring_to_aug(&g, &gd.orientation, &f, &c, &mats) {
                    Ok(back) => {
                        ensure(&back == a, || format!("{name} q={q}: psi(phi(a)) != a"))?;
                        let again = aug_to_coloring(&g, &gd.orientation, &f, &back, 0).unwrap();
                        ensure(again == c, || format!("{name} q={q}: phi(psi(c)) != c"))?;
                        real += 1;
                    }
                    Err(AugvarError::NoFreeColor) => skipped += 1,
                    Err(e) => return Err(format!("{name} q={q}: {e}")),
                }
                images.insert(c);
            }
            ensure(images.len() == augs.len(), || format!("{name} q={q}: phi not injective"))?;
        }
    }
    ensure(real > 0, || "no roundtrip was exercised".into())?;
    Ok(format!("{real} roundtrips, {skipped} skipped without a free color"))
}

fn c6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut pairs, mut rows) = (0, 0);
    for name in DRAWN {
        let (g, e) = fixtures::embedding(name).unwrap();
        for k in 0..3 {
            let opts = if k == 0 {
                BuildOptions::default()
            } else {
                BuildOptions { orientation: Some(random_orientation(&g, &mut rng)), ..Default::default() }
            };
            let garden = build_garden_geometric(&g, &e, &opts).unwrap();
            for r in move_battery(&g, &garden, Some((&e, &opts))).unwrap() {
                ensure(r.holds(), || format!("{name}: move {} failed {}/{}", r.name, r.failed, r.checked))?;
                if r.name == "III" {
                    ensure(r.checked == 32, || format!("{name}: {} vertex table rows", r.checked))?;
                }
                if r.name == "V" || r.name == "anchor" {
                    pairs += r.checked;
                }
                rows += r.checked;
            }
        }
    }
    for name in ["g1", "g2", "prism4m"] {
        let (g, gd) = fixtures::garden(name).unwrap();
        for r in move_battery(&g, &gd, None).unwrap() {
            ensure(r.holds(), || format!("{name}: move {} failed", r.name))?;
            rows += r.checked;
        }
    }
    ensure(pairs >= 20, || format!("only {pairs} move V / anchor pairs"))?;
    Ok(format!("{rows} checks, {pairs} move V / anchor pairs"))
}

fn c7() -> Verdict {
    for name in DRAWN {
        let (g, gd) = fixtures::garden(name).unwrap();
        let r = check_sequence_action(&g, &gd).unwrap();
        ensure(r.sequences > 0 && r.holds(), || format!("{name}: sequence scaling"))?;
        let a = verify_action_commutes(&g, &gd).unwrap();
        ensure(a.results.len() == g.genus() + 3 && a.holds(), || format!("{name}: generator action"))?;
        ensure(generators_commute(&g).unwrap(), || format!("{name}: generators"))?;
    }
    Ok(format!("{} fixtures", DRAWN.len()))
}

fn bareiss_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (mut sign, mut prev) = (1, 1i128);
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

fn c8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..50 {
        let g = random_cubic_graph(&mut rng, 1 + i % 5);
        let basis = random_basis(&g, &mut rng).unwrap();
        let mats = basis_matrices(&g, &basis).unwrap();
        ensure(bareiss_det(&mats.a).abs() == 1, || format!("pair {i}: det {}", bareiss_det(&mats.a)))?;
    }
    for name in THEOREM_GRAPHS {
        let (g, gd) = fixtures::garden(name).unwrap();
        let b0 = g.spanning_basis(0).unwrap();
        let b1 = random_basis(&g, &mut rng).unwrap();
        for q in 2..=4 {
            let f = field(q);
            let (n0, n1) = (tversal_augs(&g, &gd, &b0, &f).len(), tversal_augs(&g, &gd, &b1, &f).len());
            ensure(n0 == n1, || format!("{name} q={q}: {n0} vs {n1}"))?;
        }
    }
    Ok("50 unimodular pairs, basis-independent counts".into())
}

fn c9() -> Verdict {
    let (g, gd) = fixtures::garden("dumbbell").unwrap();
    let d = g.dual_graph();
    ensure(chromatic_polynomial(d.n_vertices, &d.edges).is_zero(), || "dumbbell chi is nonzero".into())?;
    let basis = g.spanning_basis(0).unwrap();
    for q in 2..=5 {
        ensure(tversal_augs(&g, &gd, &basis, &field(q)).is_empty(), || format!("dumbbell q={q} has augmentations"))?;
    }
    let mut checked = 0;
    for name in ["k4", "prism", "g1", "g2"] {
        let (g, gd) = fixtures::garden(name).unwrap();
        let t = differential(&g, &gd).unwrap();
        for q in [3, 4] {
            let f = field(q);
            for a in enumerate_full_augmentations(&t, &f) {
                let mu = mu_from_aug(&g, &gd.orientation, &f, &a);
                ensure(mu.product_identity_holds(&g, &f), || format!("{name} q={q}: product identity"))?;
                checked += 1;
            }
        }
    }
    ensure(checked > 0, || "no full augmentations".into())?;
    Ok(format!("bridged graph empty, product identity on {checked} full augmentations"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("d-squared vanishes", c1),
        ("published differentials", c2),
        ("chromatic theorem", c3),
        ("colorings and orbits", c4),
        ("correspondence roundtrip", c5),
        ("move invariance", c6),
        ("lattice action", c7),
        ("basis change", c8),
        ("bridges and product identity", c9),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {detail}", i + 1);
            }
        }
    }
    println!("{}/9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
