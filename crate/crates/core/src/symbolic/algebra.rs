use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Ring;
use crate::symbolic::laurent::{format_monomial, push_term, LaurentPoly, Space};

/// Generators of the noncommutative part: `x, y, z` in degree 2, faces in degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
    Z,
    /// Bounded face, 0-based (printed `f{j+1}`).
    F(usize),
}

impl Gen {
    pub fn degree(self) -> i32 {
        match self {
            Gen::X | Gen::Y | Gen::Z => 2,
            Gen::F(_) => 1,
        }
    }

    pub fn name(self) -> String {
        match self {
            Gen::X => "x".into(),
            Gen::Y => "y".into(),
            Gen::Z => "z".into(),
            Gen::F(j) => format!("f{}", j + 1),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub type Word = Vec<Gen>;

pub fn word_degree(w: &[Gen]) -> i32 {
    w.iter().map(|g| g.degree()).sum()
}

/// Finite sum of `coefficient * word` with coefficients in the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    ring: Ring,
    space: Space,
    terms: BTreeMap<Word, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero(ring: &Ring, space: Space) -> Self {
        AlgebraElement { ring: ring.clone(), space, terms: BTreeMap::new() }
    }

    pub fn scalar(p: LaurentPoly) -> Self {
        Self::term(p, Vec::new())
    }

    pub fn one(ring: &Ring, space: Space) -> Self {
        Self::scalar(LaurentPoly::one(ring, space))
    }

    pub fn term(coeff: LaurentPoly, word: Word) -> Self {
        let mut out = Self::zero(coeff.ring(), coeff.space());
        if !coeff.is_zero() {
            out.terms.insert(word, coeff);
        }
        out
    }

    pub fn gen(ring: &Ring, space: Space, g: Gen) -> Self {
        Self::term(LaurentPoly::one(ring, space), vec![g])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.ring, self.space))
    }

    /// Scalar part (coefficient of the empty word).
    pub fn scalar_part(&self) -> LaurentPoly {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, coeff: &LaurentPoly, word: Word) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.clone());
        use std::collections::btree_map::Entry;
        match entry {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.space, other.space);
        for (w, c) in &other.terms {
            self.add_term(c, w.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.ring, self.space);
        for (w, p) in &self.terms {
            out.add_term(&(p * c), w.clone());
        }
        out
    }

    /// Degrees of the terms.
    pub fn degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self.terms.keys().map(|w| word_degree(w)).collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        let mut space = self.space;
        for (w, p) in &self.terms {
            let q = f(p);
            space = q.space();
            if !q.is_zero() {
                terms.insert(w.clone(), q);
            }
        }
        if self.terms.is_empty() {
            return self.clone();
        }
        AlgebraElement { ring: self.ring.clone(), space, terms }
    }

    pub fn extend_t(&self) -> Self {
        let mut out = self.map_coeffs(|p| p.extend_t());
        out.space = self.space.with_t();
        out
    }

    /// Canonical text: one term per (monomial, word), sorted by (degree, word, monomial).
    pub fn to_text(&self) -> String {
        let mut items: Vec<(i32, &Word, &Vec<i32>, i64)> = Vec::new();
        for (w, p) in &self.terms {
            for (e, c) in p.terms() {
                items.push((word_degree(w), w, e, c));
            }
        }
        if items.is_empty() {
            return "0".into();
        }
        items.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        let mut out = String::new();
        for (i, (_, w, e, c)) in items.iter().enumerate() {
            let (mag, negative) = self.ring.format_coeff(*c);
            let mono = format_monomial(e, self.space);
            let word: Vec<String> = w.iter().map(|g| g.name()).collect();
            let body = match (mono.is_empty(), word.is_empty()) {
                (true, _) => word.join("*"),
                (false, true) => mono,
                (false, false) => format!("{}*{}", mono, word.join("*")),
            };
            push_term(&mut out, i == 0, negative, &mag, &body);
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.map_coeffs(|p| -p)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.space, rhs.space);
        let mut out = AlgebraElement::zero(&self.ring, self.space);
        for (wa, pa) in &self.terms {
            for (wb, pb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(&(pa * pb), w);
            }
        }
        out
    }
}

/// Images of the generators under the differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialTable {
    pub ring: Ring,
    pub space: Space,
    pub dx: AlgebraElement,
    pub dy: AlgebraElement,
    pub dz: AlgebraElement,
    pub df: Vec<LaurentPoly>,
}

impl DifferentialTable {
    pub fn n_faces(&self) -> usize {
        self.df.len()
    }

    pub fn image(&self, g: Gen) -> AlgebraElement {
        match g {
            Gen::X => self.dx.clone(),
            Gen::Y => self.dy.clone(),
            Gen::Z => self.dz.clone(),
            Gen::F(j) => AlgebraElement::scalar(self.df[j].clone()),
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        let mut g = vec![Gen::X, Gen::Y, Gen::Z];
        g.extend((0..self.df.len()).map(Gen::F));
        g
    }

    /// Checks every image has degree one less than its generator.
    pub fn degrees_ok(&self) -> bool {
        self.generators().into_iter().all(|g| {
            let d = self.image(g).degrees();
            d.is_empty() || d == vec![g.degree() - 1]
        })
    }

    /// Applies a coefficient map to every image.
    pub fn map_polys(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let df: Vec<LaurentPoly> = self.df.iter().map(&f).collect();
        let space = df.first().map(|p| p.space()).unwrap_or(self.space);
        let fix = |e: &AlgebraElement| {
            let mut m = e.map_coeffs(&f);
            if m.is_zero() {
                m = AlgebraElement::zero(&self.ring, space);
            }
            m
        };
        DifferentialTable {
            ring: self.ring.clone(),
            space,
            dx: fix(&self.dx),
            dy: fix(&self.dy),
            dz: fix(&self.dz),
            df,
        }
    }

    pub fn extend_t(&self) -> Self {
        let mut t = self.map_polys(|p| p.extend_t());
        t.space = self.space.with_t();
        t.dx = self.dx.extend_t();
        t.dy = self.dy.extend_t();
        t.dz = self.dz.extend_t();
        t
    }

    pub fn change_ring(&self, ring: &Ring) -> Self {
        let mut t = self.map_polys(|p| p.change_ring(ring));
        t.ring = ring.clone();
        let conv = |e: &AlgebraElement| {
            let mut out = AlgebraElement::zero(ring, self.space);
            for (w, p) in e.terms() {
                out.add_term(&p.change_ring(ring), w.clone());
            }
            out
        };
        t.dx = conv(&self.dx);
        t.dy = conv(&self.dy);
        t.dz = conv(&self.dz);
        t
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in self.generators() {
            s.push_str(&format!("d({}) = {}\n", g.name(), self.image(g).to_text()));
        }
        s
    }
}

/// Extends the table to all elements by linearity and the signed Leibniz rule.
pub fn apply_differential(table: &DifferentialTable, elt: &AlgebraElement) -> AlgebraElement {
    let ring = elt.ring().clone();
    let space = elt.space();
    let mut out = AlgebraElement::zero(&ring, space);
    for (w, c) in elt.terms() {
        let mut sign = 1i64;
        for i in 0..w.len() {
            let prefix = AlgebraElement::term(c.scale(sign), w[..i].to_vec());
            let suffix = AlgebraElement::term(LaurentPoly::one(&ring, space), w[i + 1..].to_vec());
            let d = table.image(w[i]);
            out.add_assign_ref(&(&(&prefix * &d) * &suffix));
            if w[i].degree() % 2 != 0 {
                sign = -sign;
            }
        }
    }
    out
}
