//! Chromatic polynomials by deletion–contraction, with a brute-force counter.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Integer polynomial in `k`, coefficient `i` of `k^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChromaticPoly {
    pub coeffs: Vec<i64>,
}

impl ChromaticPoly {
    pub fn zero() -> Self {
        ChromaticPoly { coeffs: Vec::new() }
    }

    fn power(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        ChromaticPoly { coeffs }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&0) - o.coeffs.get(i).unwrap_or(&0)).collect();
        ChromaticPoly { coeffs: c }.trim()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, k: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * k as i128 + c as i128)
    }
}

impl fmt::Display for ChromaticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let mono = match i {
                0 => String::new(),
                1 => "k".into(),
                _ => format!("k^{i}"),
            };
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}*{mono}"),
            };
            if out.is_empty() {
                out = if c < 0 { format!("-{body}") } else { body };
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        f.write_str(&out)
    }
}

type SimpleGraph = (usize, BTreeSet<(usize, usize)>);

/// Chromatic polynomial of a multigraph; loops give the zero polynomial.
pub fn chromatic_polynomial(n_vertices: usize, edges: &[(usize, usize)]) -> ChromaticPoly {
    if edges.iter().any(|(a, b)| a == b) {
        return ChromaticPoly::zero();
    }
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut memo = HashMap::new();
    deletion_contraction(&(n_vertices, set), &mut memo)
}

/// Relabels vertices by first appearance in the sorted edge list; isolated vertices go last.
fn normalize(g: &SimpleGraph) -> SimpleGraph {
    let mut label = vec![usize::MAX; g.0];
    let mut next = 0;
    for &(a, b) in &g.1 {
        for v in [a, b] {
            if label[v] == usize::MAX {
                label[v] = next;
                next += 1;
            }
        }
    }
    let edges = g.1.iter().map(|&(a, b)| {
        let (x, y) = (label[a], label[b]);
        (x.min(y), x.max(y))
    });
    (g.0, edges.collect())
}

fn deletion_contraction(g: &SimpleGraph, memo: &mut HashMap<SimpleGraph, ChromaticPoly>) -> ChromaticPoly {
    let g = normalize(g);
    if let Some(p) = memo.get(&g) {
        return p.clone();
    }
    let (n, edges) = &g;
    let result = match edges.iter().next() {
        None => ChromaticPoly::power(*n),
        Some(&(u, v)) => {
            let mut deleted = edges.clone();
            deleted.remove(&(u, v));
            let del = deletion_contraction(&(*n, deleted.clone()), memo);
            // merge v into u, then move the last vertex into v's slot
            let last = n - 1;
            let relabel = |x: usize| {
                let x = if x == v { u } else { x };
                if x == last {
                    v
                } else {
                    x
                }
            };
            let contracted: BTreeSet<(usize, usize)> = deleted
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (relabel(a), relabel(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            let con = deletion_contraction(&(n - 1, contracted), memo);
            del.sub(&con)
        }
    };
    memo.insert(g, result.clone());
    result
}

/// Number of proper colorings with `k` colors, by backtracking.
pub fn count_proper_colorings(n_vertices: usize, edges: &[(usize, usize)], k: usize) -> u64 {
    if edges.iter().any(|(a, b)| a == b) {
        return 0;
    }
    let mut adj = vec![Vec::new(); n_vertices];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn rec(v: usize, adj: &[Vec<usize>], k: usize, colors: &mut Vec<usize>) -> u64 {
        if v == adj.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if adj[v].iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                total += rec(v + 1, adj, k, colors);
            }
        }
        total
    }
    rec(0, &adj, k, &mut vec![usize::MAX; n_vertices])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    #[test]
    fn complete_graph_k4() {
        let p = chromatic_polynomial(4, &complete(4));
        for k in 0..7 {
            assert_eq!(p.eval(k), (k * (k - 1) * (k - 2) * (k - 3)) as i128);
        }
        assert_eq!(p.to_string(), "k^4 - 6*k^3 + 11*k^2 - 6*k");
    }

    #[test]
    fn triangle_and_loop() {
        let p = chromatic_polynomial(3, &complete(3));
        assert_eq!(p.eval(5), 60);
        assert!(chromatic_polynomial(2, &[(0, 1), (1, 1)]).is_zero());
        assert_eq!(count_proper_colorings(2, &[(0, 0)], 4), 0);
    }

    #[test]
    fn parallel_edges_do_not_matter() {
        let p = chromatic_polynomial(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(p.eval(3), 12);
    }

    #[test]
    fn matches_brute_force_on_wheel() {
        let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (0, i)).collect();
        edges.extend((1..6).map(|i| (i, i % 5 + 1)));
        let p = chromatic_polynomial(6, &edges);
        for k in 0..6 {
            assert_eq!(p.eval(k as i64), count_proper_colorings(6, &edges, k) as i128);
        }
    }
}
