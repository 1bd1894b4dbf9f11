//! Monomials as exponent vectors.
//!
//! Invariant: the exponent vector has exactly one entry per variable of the
//! ambient ring (callers are responsible for using monomials only with their
//! own ring; [`crate::polyring::Polynomial`] enforces this).

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Total degree restricted to the variables in `vars`.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i]).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponentiation (componentwise scaling).
    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    /// Support: indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect()
    }

    /// Renders with the given variable names, e.g. `x^2*y`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Enumerates all monomials of total degree `d` in `nvars` variables,
/// in lexicographically decreasing exponent order. Used by the linear-algebra
/// oracles and by graded-piece computations.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(nvars: usize, i: usize, rest: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == nvars - 1 {
            current[i] = rest;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            current[i] = e;
            rec(nvars, i + 1, rest - e, current, out);
        }
        current[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let m = Monomial::new(vec![2, 1, 0]);
        let n = Monomial::new(vec![3, 1, 2]);
        assert!(m.divides(&n));
        assert!(!n.divides(&m));
        assert_eq!(m.quotient_into(&n), Monomial::new(vec![1, 0, 2]));
        assert_eq!(m.lcm(&n), Monomial::new(vec![3, 1, 2]));
        assert_eq!(m.gcd(&n), Monomial::new(vec![2, 1, 0]));
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(d + n - 1, n - 1) monomials of degree d in n variables.
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(monomials_of_degree(4, 1).len(), 4);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        // All distinct, all of the right degree.
        let ms = monomials_of_degree(4, 3);
        for m in &ms {
            assert_eq!(m.degree(), 3);
        }
        let set: std::collections::HashSet<_> = ms.iter().collect();
        assert_eq!(set.len(), ms.len());
    }

    #[test]
    fn rendering() {
        let vars = vec!["x".to_string(), "y".to_string(), "w".to_string()];
        assert_eq!(Monomial::new(vec![2, 1, 0]).render(&vars), "x^2*y");
        assert_eq!(Monomial::one(3).render(&vars), "1");
    }
}
