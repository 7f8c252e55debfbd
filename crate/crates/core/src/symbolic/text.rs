//! Parser for the canonical text form of Laurent polynomials and algebra elements.

use crate::field::Ring;
use crate::symbolic::algebra::{AlgebraElement, Gen};
use crate::symbolic::laurent::{LaurentPoly, Space};
use crate::symbolic::SymbolicError;

fn parse_int(s: &str, full: &str) -> Result<i64, SymbolicError> {
    s.parse().map_err(|_| SymbolicError::Parse(format!("bad integer `{s}` in `{full}`")))
}

/// Splits into signed terms, keeping `^-` exponents intact.
fn split_terms(s: &str) -> Vec<(bool, String)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') && prev != Some('*') {
            if !cur.is_empty() {
                out.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push((negative, cur));
    }
    out
}

/// Parses text such as `-e1^-2*f1 + e3^-1*e4^-1*f2`.
pub fn parse_element(s: &str, ring: &Ring, space: Space) -> Result<AlgebraElement, SymbolicError> {
    let mut out = AlgebraElement::zero(ring, space);
    if s.trim() == "0" {
        return Ok(out);
    }
    let terms = split_terms(s);
    if terms.is_empty() {
        return Err(SymbolicError::Parse(format!("empty expression `{s}`")));
    }
    for (negative, body) in terms {
        let mut coeff: i64 = if negative { -1 } else { 1 };
        let mut exps = vec![0i32; space.nvars()];
        let mut word = Vec::new();
        for factor in body.split('*') {
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => (n, parse_int(p, s)? as i32),
                None => (factor, 1),
            };
            if name.is_empty() {
                return Err(SymbolicError::Parse(format!("empty factor in `{s}`")));
            }
            if name.chars().all(|c| c.is_ascii_digit()) {
                if power != 1 {
                    return Err(SymbolicError::Parse(format!("powers of integers unsupported in `{s}`")));
                }
                coeff *= parse_int(name, s)?;
                continue;
            }
            if let Some(idx) = name.strip_prefix('e') {
                let i = parse_int(idx, s)? as usize;
                if i == 0 || i > space.n_edges {
                    return Err(SymbolicError::Parse(format!("edge variable `{name}` out of range")));
                }
                exps[i - 1] += power;
                continue;
            }
            if name == "t" {
                let ti = space
                    .t_index()
                    .ok_or_else(|| SymbolicError::Parse(format!("`t` not in variable space: `{s}`")))?;
                exps[ti] += power;
                continue;
            }
            let g = match name {
                "x" => Gen::X,
                "y" => Gen::Y,
                "z" => Gen::Z,
                _ => {
                    let j = name
                        .strip_prefix('f')
                        .ok_or_else(|| SymbolicError::Parse(format!("unknown symbol `{name}`")))?;
                    let j = parse_int(j, s)? as usize;
                    if j == 0 {
                        return Err(SymbolicError::Parse("faces are numbered from f1".into()));
                    }
                    Gen::F(j - 1)
                }
            };
            if power < 0 {
                return Err(SymbolicError::Parse(format!("negative power of generator `{name}`")));
            }
            for _ in 0..power {
                word.push(g);
            }
        }
        let c = LaurentPoly::monomial(ring, space, coeff, exps);
        out.add_term(&c, word);
    }
    Ok(out)
}

/// Parses a Laurent polynomial (an element with only the empty word).
pub fn parse_poly(s: &str, ring: &Ring, space: Space) -> Result<LaurentPoly, SymbolicError> {
    let e = parse_element(s, ring, space)?;
    if e.terms().any(|(w, _)| !w.is_empty()) {
        return Err(SymbolicError::Parse(format!("`{s}` is not a Laurent polynomial")));
    }
    Ok(e.scalar_part())
}
