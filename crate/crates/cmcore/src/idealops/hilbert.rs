//! Hilbert series numerators, Hilbert functions, and Hilbert polynomials
//! of homogeneous ideals.
//!
//! The dimension counts come from the leading-term (monomial) ideal of a
//! Gröbner basis — a flat degeneration, so the Hilbert function is
//! unchanged. The series numerator N(T) with
//! HS_{S/I}(T) = N(T)/(1−T)^n is computed by a pivot recursion on the
//! monomial generators: pairwise-coprime generator sets are a closed form
//! ∏(1−T^{dᵢ}), and otherwise a pure power v^e splitting a mixed generator
//! strictly shrinks both branches I+(v^e) and (I : v^e).

use crate::groebner::Ideal;
use crate::polyring::{interpolate, Coeff, CoefficientField, Monomial};
use crate::{CaError, Result};

/// Default number of tabulated degrees (0..=depth).
pub const DEFAULT_TABLE_DEPTH: u32 = 8;

/// Exact Hilbert data of a graded quotient S/I.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertData {
    /// Coefficients of the series numerator N(T), ascending in T.
    pub series_numerator: Vec<i64>,
    /// (degree, dim_k (S/I)_degree) for degree = 0..=tableDepth.
    pub function_table: Vec<(u32, u64)>,
    /// Rational coefficients of the Hilbert polynomial, ascending in t.
    pub hilbert_polynomial: Vec<Coeff>,
    /// Smallest tabulated degree from which the function equals the
    /// polynomial at every tabulated point.
    pub regularity_index: u32,
}

impl HilbertData {
    /// Degree of the Hilbert polynomial (0 for constants, including 0).
    pub fn polynomial_degree(&self) -> usize {
        self.hilbert_polynomial.len().saturating_sub(1)
    }

    /// Exact evaluation of the Hilbert polynomial at an integer.
    pub fn evaluate_polynomial(&self, t: i64) -> Coeff {
        let q = CoefficientField::Rationals;
        let x = q.from_i64(t);
        let mut acc = q.zero();
        for c in self.hilbert_polynomial.iter().rev() {
            acc = q.add(&q.mul(&acc, &x), c);
        }
        acc
    }

    /// Compares the Hilbert polynomial with integer coefficients given in
    /// ascending order (e.g. `[1, 3]` for 3t + 1).
    pub fn polynomial_is(&self, coeffs_ascending: &[i64]) -> bool {
        let q = CoefficientField::Rationals;
        let mut mine = self.hilbert_polynomial.clone();
        let mut theirs: Vec<Coeff> = coeffs_ascending.iter().map(|&c| q.from_i64(c)).collect();
        while mine.len() > 1 && q.is_zero(mine.last().unwrap()) {
            mine.pop();
        }
        while theirs.len() > 1 && q.is_zero(theirs.last().unwrap()) {
            theirs.pop();
        }
        mine.len() == theirs.len() && mine.iter().zip(&theirs).all(|(a, b)| q.eq(a, b))
    }

    /// Renders the polynomial like `3*t + 1` (descending powers).
    pub fn render_polynomial(&self) -> String {
        let q = CoefficientField::Rationals;
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.hilbert_polynomial.iter().enumerate().rev() {
            if q.is_zero(c) {
                continue;
            }
            let neg = c.is_display_negative();
            let abs = if neg { q.neg(c) } else { c.clone() };
            let is_one = q.eq(&abs, &q.one());
            let body = match k {
                0 => abs.render(),
                1 if is_one => "t".to_string(),
                1 => format!("{}*t", abs.render()),
                _ if is_one => format!("t^{k}"),
                _ => format!("{}*t^{k}", abs.render()),
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if neg { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

fn poly_shift(a: &[i64], by: usize) -> Vec<i64> {
    let mut out = vec![0i64; by];
    out.extend_from_slice(a);
    out
}

/// 1 − T^d (collapses to 0 for d = 0).
fn one_minus_power(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

/// Removes generators divisible by another generator (and duplicates).
fn prune(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::new();
    let mut gens = gens;
    gens.sort_by_key(|m| m.degree());
    'outer: for m in gens {
        for k in &kept {
            if k.divides(&m) {
                continue 'outer;
            }
        }
        kept.push(m);
    }
    kept
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            if !gens[i].is_coprime_with(&gens[j]) {
                return false;
            }
        }
    }
    true
}

/// Series numerator of S/(gens) for a monomial ideal.
fn series_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = prune(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if pairwise_coprime(&gens) {
        let mut acc = vec![1i64];
        for m in &gens {
            acc = poly_mul(&acc, &one_minus_power(m.degree()));
        }
        return acc;
    }
    // After pruning, a non-coprime set contains a generator that is not a
    // pure power; split on the pure power of its first variable.
    let mixed = gens
        .iter()
        .find(|m| m.support().len() > 1)
        .expect("non-coprime pruned sets contain a mixed generator");
    let v = mixed.support()[0];
    let e = mixed.exp(v);
    let pivot = Monomial::var(mixed.nvars(), v).pow(e);

    // I + (pivot)
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let n_plus = series_numerator(plus);

    // (I : pivot): divide each generator by gcd with the pivot.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.gcd(&pivot).quotient_into(m))
        .collect();
    let n_colon = series_numerator(colon);

    poly_add(&n_plus, &poly_shift(&n_colon, e as usize))
}

/// Binomial coefficient, exact.
fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Hilbert data of S/I for a homogeneous ideal I, tabulated for degrees
/// 0..=table_depth (which must be at least 3 to leave room for the
/// out-of-sample confirmation of the interpolated polynomial).
pub fn hilbert(ideal: &Ideal, table_depth: u32) -> Result<HilbertData> {
    if table_depth < 3 {
        return Err(CaError::invalid("table depth must be at least 3"));
    }
    for g in ideal.generators() {
        if !g.is_homogeneous() {
            return Err(CaError::NotHomogeneous(g.to_string()));
        }
    }
    let n = ideal.ring().nvars() as u64;
    let lead: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.lm().expect("basis elements are nonzero").clone())
        .collect();
    let numerator = series_numerator(lead);

    // Hilbert function from the numerator: the series is
    // N(T)·Σ_d C(d+n−1, n−1)T^d.
    let mut table: Vec<(u32, u64)> = Vec::with_capacity(table_depth as usize + 1);
    for d in 0..=table_depth {
        let mut acc: i128 = 0;
        for (k, &c) in numerator.iter().enumerate() {
            let k = k as u32;
            if k > d || c == 0 {
                continue;
            }
            acc += c as i128 * binom((d - k) as u64 + n - 1, n - 1) as i128;
        }
        debug_assert!(acc >= 0, "Hilbert function values are dimensions");
        table.push((d, acc as u64));
    }

    // Polynomial: smallest point count whose tail interpolant is confirmed
    // by at least one tabulated value it was not built from.
    let q = CoefficientField::Rationals;
    let depth = table_depth as usize;
    let mut found: Option<(Vec<Coeff>, u32)> = None;
    'k: for k in 2..=depth {
        let pts = &table[depth + 1 - k..];
        let xs: Vec<Coeff> = pts.iter().map(|(d, _)| q.from_u64(*d as u64)).collect();
        let ys: Vec<Coeff> = pts.iter().map(|(_, v)| q.from_u64(*v)).collect();
        let Ok(coeffs) = interpolate(q, &xs, &ys) else {
            continue 'k;
        };
        let eval = |t: i64| -> Coeff {
            let x = q.from_i64(t);
            let mut acc = q.zero();
            for c in coeffs.iter().rev() {
                acc = q.add(&q.mul(&acc, &x), c);
            }
            acc
        };
        // Regularity: first index from which every tabulated value matches.
        let mut reg = None;
        for start in 0..=depth {
            let ok = table[start..]
                .iter()
                .all(|(d, v)| q.eq(&eval(*d as i64), &q.from_u64(*v)));
            if ok {
                reg = Some(start as u32);
                break;
            }
        }
        let Some(reg) = reg else { continue 'k };
        // Demand at least one out-of-sample confirmation.
        if (reg as usize) <= depth - k {
            found = Some((coeffs, reg));
            break 'k;
        }
    }
    let Some((hilbert_polynomial, regularity_index)) = found else {
        return Err(CaError::invalid(
            "Hilbert function has not stabilized within the table depth; increase it",
        ));
    };

    Ok(HilbertData {
        series_numerator: numerator,
        function_table: table,
        hilbert_polynomial,
        regularity_index,
    })
}
