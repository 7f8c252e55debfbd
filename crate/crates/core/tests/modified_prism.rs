//! The 4-prism with an added interior edge, transcribed with unsigned events and checked over F₂.

use cubic_dga::binseq::{check_d_squared, differential};
use cubic_dga::field::{FieldSpec, Ring};
use cubic_dga::fixtures;
use cubic_dga::symbolic::{AlgebraElement, Gen, LaurentPoly, Space};

const LETTERS: &str = "abcdefghijklmnp";

fn f2() -> Ring {
    FieldSpec::for_order(2).unwrap().ring().unwrap()
}

/// `∏ num / ∏ den` over letter-named edges; `0` is the empty product.
fn eps(num: &str, den: &str) -> LaurentPoly {
    let mut exps = vec![0; LETTERS.len()];
    for (s, sign) in [(num, 1), (den, -1)] {
        for c in s.chars().filter(|&c| c != '0') {
            exps[LETTERS.find(c).unwrap()] += sign;
        }
    }
    LaurentPoly::monomial(&f2(), Space::new(LETTERS.len()), 1, exps)
}

fn sum(ps: &[LaurentPoly]) -> LaurentPoly {
    ps.iter().skip(1).fold(ps[0].clone(), |a, b| &a + b)
}

fn prod(ps: &[LaurentPoly]) -> LaurentPoly {
    ps.iter().skip(1).fold(ps[0].clone(), |a, b| &a * b)
}

fn coefficient(elt: &AlgebraElement, face: usize) -> LaurentPoly {
    elt.terms()
        .find(|(w, _)| w.as_slice() == [Gen::F(face)])
        .map(|(_, p)| p.clone())
        .unwrap_or_else(|| LaurentPoly::zero(&f2(), Space::new(LETTERS.len())))
}

/// Published coefficients of `f1..f6` in `∂y`, `∂x`, `∂z`, unsigned.
fn published() -> [Vec<LaurentPoly>; 3] {
    let ib_mb = sum(&[eps("ib", "j"), eps("mb", "n")]);
    let dp_dk = sum(&[eps("dp", "l"), eps("dk", "h")]);
    let lm_lp = sum(&[eps("lm", "a"), eps("lp", "d")]);
    let m_tail = |last: LaurentPoly| sum(&[eps("m", "0"), prod(&[eps("0", "m"), ib_mb.clone(), last])]);
    let mn_en = sum(&[eps("mn", "b"), eps("en", "f")]);
    let mn_en_pe = sum(&[eps("mn", "b"), eps("ne", "f"), eps("pe", "g")]);
    let gc_kc = sum(&[eps("gc", "f"), eps("kc", "j")]);
    let dy = vec![
        eps("0", "hh"),
        prod(&[eps("0", "ikm"), sum(&[eps("p", "0"), prod(&[eps("0", "p"), lm_lp.clone(), dp_dk.clone()])])]),
        prod(&[eps("0", "ikmp"), ib_mb.clone(), dp_dk.clone()]),
        prod(&[eps("0", "ikp"), m_tail(mn_en_pe.clone())]),
        prod(&[eps("0", "ikeg"), gc_kc.clone(), m_tail(mn_en.clone())]),
        eps("0", "jj"),
    ];
    let zero = LaurentPoly::zero(&f2(), Space::new(LETTERS.len()));
    let dx = vec![
        sum(&[prod(&[eps("kj", "c"), dy[0].clone()]), prod(&[eps("hk", "d"), eps("0", "hh")])]),
        sum(&[prod(&[eps("kj", "c"), dy[1].clone()]), prod(&[eps("k", "imp"), lm_lp])]),
        sum(&[prod(&[eps("kj", "c"), dy[2].clone()]), prod(&[eps("k", "imp"), ib_mb.clone()])]),
        prod(&[eps("kj", "c"), dy[3].clone()]),
        sum(&[prod(&[eps("kj", "c"), dy[4].clone()]), prod(&[eps("k", "ieg"), m_tail(mn_en.clone())])]),
        zero.clone(),
    ];
    let dz = vec![
        sum(&[prod(&[eps("ji", "b"), dy[0].clone()]), prod(&[eps("0", "hh"), eps("ih", "a")])]),
        prod(&[eps("ji", "b"), dy[1].clone()]),
        sum(&[prod(&[eps("ji", "b"), dy[2].clone()]), prod(&[eps("i", "mkp"), dp_dk])]),
        sum(&[prod(&[eps("ji", "b"), dy[3].clone()]), prod(&[eps("i", "mkp"), mn_en_pe])]),
        sum(&[prod(&[eps("ji", "b"), dy[4].clone()]), prod(&[eps("i", "mkeg"), mn_en, gc_kc])]),
        zero,
    ];
    [dy, dx, dz]
}

#[test]
fn differential_matches_published_sums_mod_two() {
    let (g, garden) = fixtures::garden("prism4m").unwrap();
    assert_eq!((g.genus(), g.n_bounded_faces()), (4, 6));
    let t = differential(&g, &garden).unwrap().change_ring(&f2());
    let [dy, dx, dz] = published();
    for (name, ours, theirs) in [("y", &t.dy, dy), ("x", &t.dx, dx), ("z", &t.dz, dz)] {
        for (j, expected) in theirs.iter().enumerate() {
            assert_eq!(&coefficient(ours, j), expected, "∂{name}, f{}", j + 1);
        }
    }
}

#[test]
fn dy_contains_the_squared_h_and_j_terms() {
    let (g, garden) = fixtures::garden("prism4m").unwrap();
    let t = differential(&g, &garden).unwrap().change_ring(&f2());
    assert_eq!(coefficient(&t.dy, 0), eps("0", "hh"));
    assert_eq!(coefficient(&t.dy, 5), eps("0", "jj"));
}

#[test]
fn squares_to_zero_over_f2() {
    let (g, garden) = fixtures::garden("prism4m").unwrap();
    let t = differential(&g, &garden).unwrap();
    assert!(check_d_squared(&t.change_ring(&f2())).is_zero());
}
