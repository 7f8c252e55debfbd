//! Finite fields GF(p^k) with integer-coded elements and log/exp tables.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {0} too large (limit 65536)")]
    TooLarge(u64),
    #[error("modulus must be monic of degree {0}")]
    BadModulus(u32),
    #[error("modulus is reducible over F_{0}")]
    Reducible(u32),
    #[error("cannot parse field spec `{0}` (expected zz, fp:<p> or gf:<p>,<k>)")]
    BadSpec(String),
    #[error("no built-in modulus for GF({0}^{1}); pass one explicitly")]
    NoDefaultModulus(u32, u32),
}

/// A finite field of order `q = p^k`.
///
/// Elements are the integers `0..q`; the base-`p` digits of an element are the
/// coefficients of its polynomial representative, least significant first.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p, self.k, self.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over F_p as coefficient vectors, least significant first.
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut c = code;
            let mut div = Vec::with_capacity(d + 1);
            for _ in 0..d {
                div.push((c % p as u64) as u32);
                c /= p as u64;
            }
            div.push(1);
            if poly_rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    if k == 1 {
        return Some(vec![0, 1]);
    }
    if p == 2 && k == 2 {
        return Some(vec![1, 1, 1]);
    }
    // Smallest irreducible monic polynomial in code order.
    let count = (p as u64).pow(k);
    for code in 0..count {
        let mut c = code;
        let mut m = Vec::with_capacity(k as usize + 1);
        for _ in 0..k {
            m.push((c % p as u64) as u32);
            c /= p as u64;
        }
        m.push(1);
        if m[0] != 0 && is_irreducible(&m, p) {
            return Some(m);
        }
    }
    None
}

impl FiniteField {
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    /// Builds GF(p^k). `modulus` is monic, least significant coefficient first.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadModulus(k));
        }
        let q64 = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q64 > 65536 {
            return Err(FieldError::TooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus(k));
                }
                if k > 1 && !is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(p));
                }
                m
            }
            None => default_modulus(p, k).ok_or(FieldError::NoDefaultModulus(p, k))?,
        };
        let mut field = FiniteField { p, k, q, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.k as usize);
        let mut c = a;
        for _ in 0..self.k {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    fn encode(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % self.p as u64) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus, self.p);
        let mut d = r;
        d.resize(self.k as usize, 0);
        self.encode(&d)
    }

    fn build_tables(&mut self) {
        let n = self.q - 1;
        if n == 1 {
            // GF(2)
            self.exp = vec![1];
            self.log = vec![0, 0];
            return;
        }
        for g in 2..self.q {
            let mut exp = Vec::with_capacity(n as usize);
            let mut log = vec![u32::MAX; self.q as usize];
            let mut cur = 1u32;
            let mut ok = true;
            for i in 0..n {
                if log[cur as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[cur as usize] = i;
                exp.push(cur);
                cur = self.slow_mul(cur, g);
            }
            if ok && cur == 1 {
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.k
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// Nonzero elements in code order.
    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^e` for any integer exponent; `None` for a negative power of zero.
    pub fn pow(&self, a: u32, e: i64) -> Option<u32> {
        if a == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => None,
                std::cmp::Ordering::Equal => Some(1),
                std::cmp::Ordering::Greater => Some(0),
            };
        }
        let n = (self.q - 1) as i64;
        let s = (self.log[a as usize] as i64 * e).rem_euclid(n);
        Some(self.exp[s as usize])
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Human-readable element: integer for prime fields, polynomial in `a` otherwise.
    pub fn format(&self, x: u32) -> String {
        if self.k == 1 {
            return x.to_string();
        }
        let d = self.digits(x);
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            parts.push(match (c, var.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => var,
                (_, false) => format!("{c}{var}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// Coefficient ring: the integers or a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Integers,
    Field(Arc<FiniteField>),
}

impl Ring {
    pub fn field(f: FiniteField) -> Self {
        Ring::Field(Arc::new(f))
    }

    pub fn as_field(&self) -> Option<&FiniteField> {
        match self {
            Ring::Integers => None,
            Ring::Field(f) => Some(f),
        }
    }

    pub fn from_int(&self, n: i64) -> i64 {
        match self {
            Ring::Integers => n,
            Ring::Field(f) => f.from_int(n) as i64,
        }
    }

    pub fn add(&self, a: i64, b: i64) -> i64 {
        match self {
            Ring::Integers => a.checked_add(b).expect("integer coefficient overflow"),
            Ring::Field(f) => f.add(a as u32, b as u32) as i64,
        }
    }

    pub fn neg(&self, a: i64) -> i64 {
        match self {
            Ring::Integers => -a,
            Ring::Field(f) => f.neg(a as u32) as i64,
        }
    }

    pub fn mul(&self, a: i64, b: i64) -> i64 {
        match self {
            Ring::Integers => a.checked_mul(b).expect("integer coefficient overflow"),
            Ring::Field(f) => f.mul(a as u32, b as u32) as i64,
        }
    }

    /// Formats a coefficient; returns the magnitude and whether it is printed negated.
    pub fn format_coeff(&self, c: i64) -> (String, bool) {
        match self {
            Ring::Integers => (c.unsigned_abs().to_string(), c < 0),
            Ring::Field(f) => (f.format(c as u32), false),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Ring::Integers => "ZZ".into(),
            Ring::Field(f) if f.degree() == 1 => format!("F{}", f.characteristic()),
            Ring::Field(f) => format!("GF({}^{})", f.characteristic(), f.degree()),
        }
    }
}

/// Parsed `--field` argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Integers,
    Prime(u32),
    Extension(u32, u32),
}

impl FromStr for FieldSpec {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadSpec(s.to_string());
        let t = s.trim();
        if t == "zz" {
            return Ok(FieldSpec::Integers);
        }
        if let Some(rest) = t.strip_prefix("fp:") {
            return rest.parse().map(FieldSpec::Prime).map_err(|_| bad());
        }
        if let Some(rest) = t.strip_prefix("gf:") {
            let (p, k) = rest.split_once(',').ok_or_else(bad)?;
            let p = p.trim().parse().map_err(|_| bad())?;
            let k = k.trim().parse().map_err(|_| bad())?;
            return Ok(FieldSpec::Extension(p, k));
        }
        Err(bad())
    }
}

impl FieldSpec {
    pub fn ring(&self) -> Result<Ring, FieldError> {
        Ok(match *self {
            FieldSpec::Integers => Ring::Integers,
            FieldSpec::Prime(p) => Ring::field(FiniteField::prime(p)?),
            FieldSpec::Extension(p, k) => Ring::field(FiniteField::new(p, k, None)?),
        })
    }

    /// Field of order `q` for a prime power `q`.
    pub fn for_order(q: u32) -> Option<FieldSpec> {
        for p in 2..=q {
            if is_prime(p) {
                let mut k = 0;
                let mut n = q;
                while n % p == 0 {
                    n /= p;
                    k += 1;
                }
                if n == 1 && k > 0 {
                    return Some(if k == 1 { FieldSpec::Prime(p) } else { FieldSpec::Extension(p, k) });
                }
                if k > 0 {
                    return None;
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert_eq!(f.units().count() as u32, q - 1);
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)] {
            check_axioms(&FiniteField::new(p, k, None).unwrap());
        }
    }

    #[test]
    fn f4_default_modulus() {
        let f = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // a * a = a + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over F2
        assert_eq!(FiniteField::new(2, 2, Some(vec![1, 0, 1])), Err(FieldError::Reducible(2)));
        assert_eq!(FiniteField::prime(4).unwrap_err(), FieldError::NotPrime(4));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("zz".parse::<FieldSpec>().unwrap(), FieldSpec::Integers);
        assert_eq!("fp:3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert_eq!("gf:2,2".parse::<FieldSpec>().unwrap(), FieldSpec::Extension(2, 2));
        assert!("fp:x".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::for_order(4), Some(FieldSpec::Extension(2, 2)));
        assert_eq!(FieldSpec::for_order(5), Some(FieldSpec::Prime(5)));
        assert_eq!(FieldSpec::for_order(6), None);
    }

    #[test]
    fn pow_negative() {
        let f = FiniteField::prime(7).unwrap();
        assert_eq!(f.pow(3, -1), f.inv(3));
        assert_eq!(f.pow(0, -1), None);
        assert_eq!(f.from_int(-1), 6);
    }
}
