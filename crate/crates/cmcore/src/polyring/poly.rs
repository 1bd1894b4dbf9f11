//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Representation invariants (enforced by every constructor and operation):
//! * terms are strictly decreasing in the ring's monomial order;
//! * no zero coefficients, no duplicate monomials;
//! * the zero polynomial has an empty term list;
//! * all terms belong to the polynomial's ring (same variable count).
//!
//! Polynomials over different rings never interoperate implicitly: use
//! [`Polynomial::inject`] (variable renaming into a larger ring),
//! [`Polynomial::restrict`] (into a subring), [`Polynomial::reorder`]
//! (same ring under another order) or [`Polynomial::substitute`] (general
//! ring homomorphism) to move between rings.

use super::coeff::{Coeff, CoefficientField};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::{CaError, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Immutable description of a polynomial ring: named variables, coefficient
/// field, and the monomial order under which terms are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingData {
    vars: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
}

pub type Ring = Arc<RingData>;

impl RingData {
    /// New ring with the default order: degrevlex, precedence = declaration
    /// order (declare variables as `x, y, z, u, w, <deformation vars>` to get
    /// the canonical precedence).
    pub fn new(vars: &[&str], field: CoefficientField) -> Ring {
        let order = MonomialOrder::degrevlex(vars.len());
        Self::with_order(vars, field, order)
    }

    pub fn with_order(vars: &[&str], field: CoefficientField, order: MonomialOrder) -> Ring {
        assert_eq!(order.nvars(), vars.len(), "order arity must match variables");
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), names.len(), "duplicate variable names");
        }
        Arc::new(RingData { vars: names, field, order })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn reordered(self: &Ring, order: MonomialOrder) -> Ring {
        assert_eq!(order.nvars(), self.vars.len());
        if order == self.order {
            return self.clone();
        }
        Arc::new(RingData { vars: self.vars.clone(), field: self.field, order })
    }

    /// Extends the ring by fresh variables (appended, hence least
    /// significant under the default precedence). The order kind is kept.
    pub fn extended(self: &Ring, extra: &[&str]) -> Ring {
        let mut vars = self.vars.clone();
        for e in extra {
            assert!(
                self.var_index(e).is_none(),
                "variable `{e}` already present in the ring"
            );
            vars.push(e.to_string());
        }
        let n = vars.len();
        let order = match &self.order {
            MonomialOrder::Lex { .. } => MonomialOrder::lex(n),
            MonomialOrder::DegRevLex { .. } => MonomialOrder::degrevlex(n),
            MonomialOrder::WeightedDegRevLex { weights, .. } => {
                let mut w = weights.clone();
                w.resize(n, 1);
                MonomialOrder::weighted_degrevlex(w)
            }
            MonomialOrder::Elimination { block, .. } => {
                MonomialOrder::elimination(block.clone(), n)
            }
        };
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        RingData::with_order(&names, self.field, order)
    }

    /// Human-readable header, e.g. `F0[x,y,u,w]`.
    pub fn describe(&self) -> String {
        format!("F{}[{}]", self.field.characteristic(), self.vars.join(","))
    }
}

/// Checks that two rings are interoperable (identical data).
pub fn same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(CaError::RingMismatch(format!(
            "{} vs {}",
            a.describe(),
            b.describe()
        )))
    }
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    // ---- Constructors ----

    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        let mut terms = Vec::new();
        if !ring.field().is_zero(&c) {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field().one())],
        }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| CaError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut terms = Vec::new();
        if !ring.field().is_zero(&c) {
            terms.push((m, c));
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = *ring.field();
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if field.is_zero(&s) {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !field.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        let order = ring.order().clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    // ---- Accessors ----

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &CoefficientField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (monomial, coefficient) under the ring's order.
    pub fn lt(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree (None for the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Maximum total degree in the listed variables over all terms.
    pub fn degree_in_vars(&self, vars: &[usize]) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The coefficient of a specific monomial (zero if absent).
    pub fn coefficient_of(&self, m: &Monomial) -> Coeff {
        for (mm, c) in &self.terms {
            if mm == m {
                return c.clone();
            }
        }
        self.field().zero()
    }

    /// Support union over all terms: which variables actually occur.
    pub fn variables_used(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut used = vec![false; n];
        for (m, _) in &self.terms {
            for i in 0..n {
                if m.exp(i) > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    // ---- Arithmetic ----

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled_shifted(other, &self.field().one(), &Monomial::one(self.ring.nvars()))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let minus_one = self.field().neg(&self.field().one());
        self.add_scaled_shifted(other, &minus_one, &Monomial::one(self.ring.nvars()))
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    /// `self + c * m * other` by a single sorted merge; the workhorse of
    /// division and Buchberger loops.
    pub fn add_scaled_shifted(&self, other: &Polynomial, c: &Coeff, m: &Monomial) -> Polynomial {
        same_ring(&self.ring, &other.ring).expect("add over mismatched rings");
        let field = *self.field();
        let order = self.ring.order().clone();
        if field.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let mb = other.terms[j].0.mul(m);
            match order.cmp(ma, &mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let cb = field.mul(&other.terms[j].1, c);
                    out.push((mb, cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let cb = field.mul(&other.terms[j].1, c);
                    let s = field.add(ca, &cb);
                    if !field.is_zero(&s) {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (mb, cb) in &other.terms[j..] {
            out.push((mb.mul(m), field.mul(cb, c)));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        same_ring(&self.ring, &other.ring).expect("mul over mismatched rings");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Accumulate into the shorter operand's span for fewer merges.
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled_shifted(big, c, m);
        }
        acc
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        let field = *self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), field.mul(cc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// The polynomial minus its leading term (used by division loops that
    /// move irreducible leading terms into an accumulating remainder).
    pub fn without_leading(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division: returns `q` with `self = q * g`, or an error when
    /// `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &g.ring)?;
        if g.is_zero() {
            return Err(CaError::DivisionByZero);
        }
        let field = *self.field();
        let (glm, glc) = g.lt().expect("nonzero divisor");
        let glm = glm.clone();
        let glc = glc.clone();
        let mut rem = self.clone();
        let mut q = Polynomial::zero(&self.ring);
        while let Some((rm, rc)) = rem.lt() {
            if !glm.divides(rm) {
                return Err(CaError::Invalid(format!(
                    "`{}` does not divide `{}` exactly",
                    g, self
                )));
            }
            let m = glm.quotient_into(rm);
            let c = field.div(rc, &glc)?;
            q = q.add_scaled_shifted(&Polynomial::one(&self.ring), &c, &m);
            let minus_c = field.neg(&c);
            rem = rem.add_scaled_shifted(g, &minus_c, &m);
        }
        Ok(q)
    }

    // ---- Grading helpers ----

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Drops every term whose total degree in the listed variables is at
    /// least `bound` (the truncation used for deformation-variable grading).
    pub fn truncate_in_vars(&self, vars: &[usize], bound: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(vars) < bound)
                .cloned()
                .collect(),
        }
    }

    // ---- Calculus ----

    /// Formal partial derivative with respect to variable `i`, exact in the
    /// ring's characteristic.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let field = *self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let factor = field.from_u64(e as u64);
            let c2 = field.mul(c, &factor);
            if field.is_zero(&c2) {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            terms.push((Monomial::new(exps), c2));
        }
        // Term order is preserved by differentiating in a single variable
        // only up to ties; rebuild canonically to be safe.
        Polynomial::from_terms(&self.ring, terms)
    }

    // ---- Ring maps ----

    /// General ring homomorphism determined by per-variable images in the
    /// target ring. Variables without an explicit image map to the target
    /// variable of the same name; it is an error if none exists.
    pub fn substitute(&self, images: &[(usize, Polynomial)], target: &Ring) -> Result<Polynomial> {
        let n = self.ring.nvars();
        enum Image {
            Var(usize),
            Poly(Polynomial),
        }
        let mut table: Vec<Option<Image>> = (0..n).map(|_| None).collect();
        for (i, img) in images {
            same_ring(img.ring(), target)?;
            assert!(*i < n, "image for a variable outside the source ring");
            table[*i] = Some(Image::Poly(img.clone()));
        }
        for (i, slot) in table.iter_mut().enumerate() {
            if slot.is_none() {
                let name = &self.ring.vars()[i];
                let j = target
                    .var_index(name)
                    .ok_or_else(|| CaError::UnknownVariable(name.clone()))?;
                *slot = Some(Image::Var(j));
            }
        }
        let field = *target.field();
        assert_eq!(
            field,
            *self.field(),
            "substitution must stay over one coefficient field"
        );
        // Power cache per (variable, exponent).
        let mut pow_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term_val = Polynomial::constant(target, c.clone());
            let mut plain = Monomial::one(target.nvars());
            for i in 0..n {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match table[i].as_ref().unwrap() {
                    Image::Var(j) => {
                        // Fold renamed variables into a single monomial factor.
                        plain = plain.mul(&Monomial::var(target.nvars(), *j).pow(e));
                    }
                    Image::Poly(p) => {
                        let key = (i, e);
                        let powered = pow_cache
                            .entry(key)
                            .or_insert_with(|| p.pow(e))
                            .clone();
                        term_val = term_val.mul(&powered);
                    }
                }
            }
            if !plain.is_one() {
                term_val = term_val.mul_term(&field.one(), &plain);
            }
            acc = acc.add(&term_val);
        }
        Ok(acc)
    }

    /// Injects into a ring containing all of this ring's variables by name
    /// (pure renaming; cheap, preserves term count).
    pub fn inject(&self, target: &Ring) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let mut map = Vec::with_capacity(n);
        for name in self.ring.vars() {
            let j = target
                .var_index(name)
                .ok_or_else(|| CaError::UnknownVariable(name.clone()))?;
            map.push(j);
        }
        assert_eq!(*target.field(), *self.field());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for i in 0..n {
                    exps[map[i]] += m.exp(i);
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Restriction to a subring: every variable occurring in `self` must
    /// exist in the target ring (an error otherwise).
    pub fn restrict(&self, target: &Ring) -> Result<Polynomial> {
        assert_eq!(*target.field(), *self.field());
        let n = self.ring.nvars();
        let mut map: Vec<Option<usize>> = Vec::with_capacity(n);
        for name in self.ring.vars() {
            map.push(target.var_index(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for i in 0..n {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(CaError::UnknownVariable(format!(
                            "`{}` does not survive restriction to {}",
                            self.ring.vars()[i],
                            target.describe()
                        )))
                    }
                }
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Same ring under a different monomial order (terms re-sorted).
    pub fn reorder(&self, target: &Ring) -> Polynomial {
        assert_eq!(target.vars(), self.ring.vars());
        assert_eq!(*target.field(), *self.field());
        let mut terms = self.terms.clone();
        let order = target.order().clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: target.clone(), terms }
    }

    /// Debug check of the canonical-form invariant.
    pub fn assert_canonical(&self) {
        let order = self.ring.order();
        for w in self.terms.windows(2) {
            assert_eq!(
                order.cmp(&w[0].0, &w[1].0),
                Ordering::Greater,
                "terms out of order"
            );
        }
        for (_, c) in &self.terms {
            assert!(!self.field().is_zero(c), "zero coefficient stored");
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let field = self.field();
        let one = field.one();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_display_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { field.neg(c) } else { c.clone() };
            let coeff_is_one = field.eq(&abs, &one);
            if m.is_one() {
                write!(f, "{}", abs.render())?;
            } else if coeff_is_one {
                write!(f, "{}", m.render(vars))?;
            } else {
                write!(f, "{}*{}", abs.render(), m.render(vars))?;
            }
        }
        Ok(())
    }
}
