use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FiniteField, Ring};
use crate::symbolic::SymbolicError;

/// Variable layout: `e1..en` for the edges, optionally followed by `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    pub n_edges: usize,
    pub with_t: bool,
}

impl Space {
    pub fn new(n_edges: usize) -> Self {
        Space { n_edges, with_t: false }
    }

    pub fn with_t(self) -> Self {
        Space { with_t: true, ..self }
    }

    pub fn nvars(&self) -> usize {
        self.n_edges + usize::from(self.with_t)
    }

    pub fn t_index(&self) -> Option<usize> {
        self.with_t.then_some(self.n_edges)
    }

    pub fn var_name(&self, i: usize) -> String {
        if i < self.n_edges {
            format!("e{}", i + 1)
        } else {
            "t".into()
        }
    }
}

/// Formats the monomial with exponent vector `exps` (empty string for 1).
pub fn format_monomial(exps: &[i32], space: Space) -> String {
    let mut parts = Vec::new();
    for (i, &a) in exps.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let v = space.var_name(i);
        parts.push(if a == 1 { v } else { format!("{v}^{a}") });
    }
    parts.join("*")
}

/// Laurent polynomial with coefficients in a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Ring,
    space: Space,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl LaurentPoly {
    pub fn zero(ring: &Ring, space: Space) -> Self {
        LaurentPoly { ring: ring.clone(), space, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, space: Space, c: i64) -> Self {
        Self::monomial(ring, space, c, vec![0; space.nvars()])
    }

    pub fn one(ring: &Ring, space: Space) -> Self {
        Self::constant(ring, space, 1)
    }

    /// `c * prod var_i^exps_i`; the integer `c` is mapped into the ring.
    pub fn monomial(ring: &Ring, space: Space, c: i64, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), space.nvars(), "exponent vector length mismatch");
        let mut p = Self::zero(ring, space);
        let c = ring.from_int(c);
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Monomial with a raw ring coefficient (a field element code for finite fields).
    pub fn monomial_raw(ring: &Ring, space: Space, c: i64, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), space.nvars(), "exponent vector length mismatch");
        let mut p = Self::zero(ring, space);
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(ring: &Ring, space: Space, i: usize) -> Self {
        let mut e = vec![0; space.nvars()];
        e[i] = 1;
        Self::monomial(ring, space, 1, e)
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn coeff(&self, exps: &[i32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    fn compatible(&self, other: &Self) {
        assert_eq!(self.space, other.space, "Laurent polynomials over different variable spaces");
        assert_eq!(self.ring, other.ring, "Laurent polynomials over different rings");
    }

    fn add_term(&mut self, exps: Vec<i32>, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.ring.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.compatible(other);
        for (k, &v) in &other.terms {
            self.add_term(k.clone(), v);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = self.ring.from_int(c);
        self.scale_raw(c)
    }

    pub fn scale_raw(&self, c: i64) -> Self {
        let mut out = Self::zero(&self.ring, self.space);
        if c == 0 {
            return out;
        }
        for (k, &v) in &self.terms {
            let m = self.ring.mul(v, c);
            if m != 0 {
                out.terms.insert(k.clone(), m);
            }
        }
        out
    }

    /// The unique monomial of a single-term polynomial.
    pub fn as_monomial(&self) -> Option<(i64, &Vec<i32>)> {
        if self.terms.len() == 1 {
            let (k, &v) = self.terms.iter().next().unwrap();
            Some((v, k))
        } else {
            None
        }
    }

    /// Inverse of a unit monomial `±m` (or any unit monomial over a field).
    pub fn invert_monomial(&self) -> Result<Self, SymbolicError> {
        let (c, exps) = self.as_monomial().ok_or(SymbolicError::NotAUnit)?;
        let inv_c = match &self.ring {
            Ring::Integers if c == 1 || c == -1 => c,
            Ring::Integers => return Err(SymbolicError::NotAUnit),
            Ring::Field(f) => f.inv(c as u32).ok_or(SymbolicError::NotAUnit)? as i64,
        };
        let e: Vec<i32> = exps.iter().map(|&a| -a).collect();
        Ok(Self::monomial_raw(&self.ring, self.space, inv_c, e))
    }

    /// Integer power of a unit monomial.
    pub fn pow_monomial(&self, n: i32) -> Result<Self, SymbolicError> {
        let base = if n < 0 { self.invert_monomial()? } else { self.clone() };
        let mut acc = Self::one(&self.ring, self.space);
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Replaces each variable by a unit monomial image, `var_i -> images[i]`.
    pub fn substitute_units(&self, images: &[LaurentPoly]) -> Result<Self, SymbolicError> {
        assert_eq!(images.len(), self.space.nvars());
        let target = images.first().map(|p| p.space).unwrap_or(self.space);
        let mut out = Self::zero(&self.ring, target);
        for (k, &c) in &self.terms {
            let mut term = Self::monomial_raw(&self.ring, target, c, vec![0; target.nvars()]);
            for (i, &a) in k.iter().enumerate() {
                if a != 0 {
                    term = &term * &images[i].pow_monomial(a)?;
                }
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// Sets the listed variables to 1.
    pub fn set_vars_to_one(&self, vars: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, self.space);
        for (k, &c) in &self.terms {
            let mut e = k.clone();
            for &v in vars {
                e[v] = 0;
            }
            out.add_term(e, c);
        }
        out
    }

    /// Embeds into the space extended by `t` (with exponent 0).
    pub fn extend_t(&self) -> Self {
        if self.space.with_t {
            return self.clone();
        }
        let space = self.space.with_t();
        let mut out = Self::zero(&self.ring, space);
        for (k, &c) in &self.terms {
            let mut e = k.clone();
            e.push(0);
            out.terms.insert(e, c);
        }
        out
    }

    /// Multiplies each monomial `m` by `t^{w(m)}`, where `w` is linear in the edge exponents.
    pub fn weight_by_t(&self, edge_weights: &[i32], shift: i32) -> Self {
        let base = self.extend_t();
        let ti = base.space.n_edges;
        let mut out = Self::zero(&self.ring, base.space);
        for (k, &c) in &base.terms {
            let mut e = k.clone();
            let w: i32 = k[..ti].iter().zip(edge_weights).map(|(a, b)| a * b).sum();
            e[ti] += w + shift;
            out.add_term(e, c);
        }
        out
    }

    /// Reinterprets integer coefficients in another ring.
    pub fn change_ring(&self, ring: &Ring) -> Self {
        assert_eq!(self.ring, Ring::Integers, "only integer polynomials can change ring");
        let mut out = Self::zero(ring, self.space);
        for (k, &c) in &self.terms {
            out.add_term(k.clone(), ring.from_int(c));
        }
        out
    }

    /// Evaluates at `var_i = values[i]` in `field`.
    pub fn eval(&self, field: &FiniteField, values: &[u32]) -> Result<u32, SymbolicError> {
        let mut acc = 0u32;
        for (k, &c) in &self.terms {
            let mut term = match &self.ring {
                Ring::Integers => field.from_int(c),
                Ring::Field(f) => {
                    assert_eq!(f.as_ref(), field, "evaluation field differs from coefficient field");
                    c as u32
                }
            };
            for (i, &a) in k.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let v = values[i];
                if v == 0 {
                    return Err(SymbolicError::ZeroAssignment(self.space.var_name(i)));
                }
                term = field.mul(term, field.pow(v, a as i64).unwrap());
            }
            acc = field.add(acc, term);
        }
        Ok(acc)
    }

    /// Checks each monomial has total coefficient `±1`-shaped weight; used for `Weight`.
    pub fn max_abs_coeff(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Canonical text, e.g. `-e1^-2 + 2*e3*e4^-1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, &c)) in self.terms.iter().enumerate() {
            let (mag, negative) = self.ring.format_coeff(c);
            let mono = format_monomial(k, self.space);
            push_term(&mut out, i == 0, negative, &mag, &mono);
        }
        out
    }
}

/// Appends `± mag*body` to `out` in canonical style.
pub(crate) fn push_term(out: &mut String, first: bool, negative: bool, mag: &str, body: &str) {
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    match (mag == "1", body.is_empty()) {
        (true, true) => out.push('1'),
        (true, false) => out.push_str(body),
        (false, true) => out.push_str(mag),
        (false, false) => {
            if mag.contains('+') {
                out.push('(');
                out.push_str(mag);
                out.push(')');
            } else {
                out.push_str(mag);
            }
            out.push('*');
            out.push_str(body);
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ring, self.space);
        for (k, &v) in &self.terms {
            out.terms.insert(k.clone(), self.ring.neg(v));
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.compatible(rhs);
        let mut out = LaurentPoly::zero(&self.ring, self.space);
        for (ka, &ca) in &self.terms {
            for (kb, &cb) in &rhs.terms {
                let e: Vec<i32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(e, self.ring.mul(ca, cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn mono(space: Space, c: i64, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(&Ring::Integers, space, c, e.to_vec())
    }

    #[test]
    fn exponent_addition() {
        let s = Space::new(2);
        let a = mono(s, 1, &[1, -1]);
        let b = mono(s, 1, &[0, 1]);
        assert_eq!(&a * &b, mono(s, 1, &[1, 0]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let s = Space::new(4);
        let eps = mono(s, 1, &[1, -1, 0, 1]);
        let sum = &eps + &(-&eps);
        assert!(sum.is_zero());
        assert_eq!(sum.to_text(), "0");
    }

    #[test]
    fn characteristic_two_cancels() {
        let ring = Ring::field(FiniteField::prime(2).unwrap());
        let s = Space::new(3);
        let eps = LaurentPoly::monomial(&ring, s, 1, vec![1, 0, -1]);
        assert!((&eps + &eps).is_zero());
    }

    #[test]
    fn invert_monomial() {
        let s = Space::new(2);
        assert_eq!(mono(s, -1, &[2, -1]).invert_monomial().unwrap(), mono(s, -1, &[-2, 1]));
        let two_terms = &mono(s, 1, &[1, 0]) + &mono(s, 1, &[0, 1]);
        assert_eq!(two_terms.invert_monomial(), Err(SymbolicError::NotAUnit));
        assert_eq!(mono(s, 2, &[1, 0]).invert_monomial(), Err(SymbolicError::NotAUnit));
    }

    #[test]
    fn text_form() {
        let s = Space::new(6);
        let p = &mono(s, -1, &[-2, 0, 0, 0, 0, 0]) + &mono(s, 3, &[0, 0, -1, 1, 0, 0]);
        assert_eq!(p.to_text(), "-e1^-2 + 3*e3^-1*e4");
        assert_eq!(LaurentPoly::one(&Ring::Integers, s).to_text(), "1");
    }

    #[test]
    fn eval_examples() {
        let f3 = FiniteField::prime(3).unwrap();
        let s = Space::new(2);
        assert_eq!(mono(s, 1, &[1, -1]).eval(&f3, &[1, 1]).unwrap(), 1);
        assert_eq!(mono(s, -1, &[-2, 0]).eval(&f3, &[1, 1]).unwrap(), 2);
        assert!(matches!(mono(s, 1, &[1, 0]).eval(&f3, &[0, 1]), Err(SymbolicError::ZeroAssignment(_))));
    }

    #[test]
    fn substitution_by_sign_flip() {
        let s = Space::new(2);
        let p = &mono(s, 1, &[1, 2]) + &mono(s, 1, &[-1, 0]);
        let images = vec![mono(s, -1, &[1, 0]), mono(s, 1, &[0, 1])];
        let q = p.substitute_units(&images).unwrap();
        assert_eq!(q, &mono(s, -1, &[1, 2]) + &mono(s, -1, &[-1, 0]));
    }
}
