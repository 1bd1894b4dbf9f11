//! Derived ideal operations built on Gröbner bases: intersection, colon
//! (quotient), saturation, and elimination — plus Hilbert data and Fitting
//! ideals in the submodules.
//!
//! Algorithm choices: intersections introduce one fresh auxiliary variable
//! `t` and eliminate it from `t·I + (1−t)·J`; colons divide an intersection
//! by the colon element exactly; saturation by a single variable of a
//! homogeneous ideal divides the variable out of a reverse-lexicographic
//! basis (one basis computation), with a stabilized colon iteration as the
//! general fallback.

pub mod fitting;
pub mod hilbert;

pub use fitting::{annihilator, fitting_ideal, torsion_witnesses, ModulePresentation};
pub use hilbert::{hilbert, HilbertData, DEFAULT_TABLE_DEPTH};

use crate::groebner::Ideal;
use crate::polyring::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};
use crate::Result;

/// A variable name of the form `t<k>` not present in the ring.
fn fresh_var_name(ring: &Ring) -> String {
    let mut k = 0usize;
    loop {
        let name = format!("t{k}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// The irrelevant maximal ideal (all variables).
pub fn irrelevant_ideal(ring: &Ring) -> Ideal {
    let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    Ideal::new(ring, gens).expect("variables live in their own ring")
}

/// I ∩ J by eliminating a fresh `t` from `t·I + (1−t)·J`.
pub fn intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a.ring(), b.ring())?;
    let ring = a.ring().clone();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(&ring));
    }
    let aux = fresh_var_name(&ring);
    let ext = ring.extended(&[&aux]);
    let t = Polynomial::var_named(&ext, &aux)?;
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for g in a.generators() {
        gens.push(g.inject(&ext)?.mul(&t));
    }
    for h in b.generators() {
        gens.push(h.inject(&ext)?.mul(&one_minus_t));
    }
    let big = Ideal::new(&ext, gens)?;
    let aux_idx = ext.var_index(&aux).expect("aux var exists");
    let elim = eliminate(&big, &[aux_idx])?;
    elim.restrict(&ring)
}

/// (I : f) for a single element, via (I ∩ (f))/f.
pub fn quotient_by_element(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    same_ring(i.ring(), f.ring())?;
    let ring = i.ring().clone();
    if f.is_zero() {
        return Ok(Ideal::unit(&ring));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    let fi = Ideal::new(&ring, vec![f.clone()])?;
    let inter = intersection(i, &fi)?;
    let gens = inter
        .generators()
        .iter()
        .map(|g| g.div_exact(f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

/// The colon ideal (I : J) = {f : f·J ⊆ I} = ∩ⱼ (I : fⱼ).
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i.ring(), j.ring())?;
    let ring = i.ring().clone();
    if j.is_zero_ideal() {
        return Ok(Ideal::unit(&ring));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.generators() {
        let q = quotient_by_element(i, f)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersection(&prev, &q)?,
        });
    }
    Ok(acc.expect("nonzero ideal has generators"))
}

/// Divides the largest common power of variable `v` out of `g`.
fn divide_out_variable(g: &Polynomial, v: usize) -> Polynomial {
    let k = g.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0);
    if k == 0 {
        return g.clone();
    }
    let ring = g.ring().clone();
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps[v] -= k;
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(&ring, terms)
}

/// (I : v^∞) for one variable. For homogeneous ideals this takes a single
/// basis computation: under degrevlex with `v` least significant, dividing
/// every basis element by its `v`-power generates the saturation. The
/// inhomogeneous fallback is a stabilized colon iteration.
pub fn saturate_by_variable(i: &Ideal, v: usize) -> Result<Ideal> {
    let ring = i.ring().clone();
    assert!(v < ring.nvars(), "variable index out of range");
    if i.is_homogeneous() {
        // Precedence: every other variable in its current significance
        // order, then v last.
        let mut prec: Vec<usize> = (0..ring.nvars()).filter(|&k| k != v).collect();
        prec.push(v);
        let order = MonomialOrder::degrevlex(ring.nvars()).with_precedence(prec);
        let gb = i.groebner_basis_under(&order);
        let gens = gb
            .iter()
            .map(|g| divide_out_variable(g, v).reorder(&ring))
            .collect();
        return Ideal::new(&ring, gens);
    }
    let var = Polynomial::var(&ring, v);
    let mut current = i.clone();
    loop {
        let next = quotient_by_element(&current, &var)?;
        if current.contains_ideal(&next)? {
            return Ok(current);
        }
        current = next;
    }
}

/// The saturation (I : J^∞) as a stabilized colon iteration. When every
/// generator of J is a single variable (e.g. the irrelevant ideal), the
/// saturation is computed as the intersection of the per-variable
/// saturations instead.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i.ring(), j.ring())?;
    let ring = i.ring().clone();
    if j.is_zero_ideal() {
        return Ok(Ideal::unit(&ring));
    }
    if j.generators().iter().any(|g| g.is_constant()) {
        return Ok(i.clone());
    }
    let single_vars: Option<Vec<usize>> = j
        .generators()
        .iter()
        .map(|g| match g.terms() {
            [(m, _)] if m.degree() == 1 => Some(m.support()[0]),
            _ => None,
        })
        .collect();
    if let Some(vars) = single_vars {
        let mut acc: Option<Ideal> = None;
        for v in vars {
            let s = saturate_by_variable(i, v)?;
            acc = Some(match acc {
                None => s,
                Some(prev) => intersection(&prev, &s)?,
            });
        }
        return Ok(acc.expect("nonzero ideal has generators"));
    }
    let mut current = i.clone();
    loop {
        let next = quotient(&current, j)?;
        if current.contains_ideal(&next)? {
            return Ok(current);
        }
        current = next;
    }
}

/// The elimination ideal I ∩ k[variables not in `vars`], returned in the
/// *same* ring (generators simply do not involve the eliminated variables).
/// Use [`Ideal::restrict`] to move it into a genuine subring.
pub fn eliminate(i: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = i.ring().clone();
    if vars.is_empty() {
        return Ok(i.clone());
    }
    for &v in vars {
        assert!(v < ring.nvars(), "variable index out of range");
    }
    let order = MonomialOrder::elimination(vars.to_vec(), ring.nvars());
    let gb = i.groebner_basis_under(&order);
    let kept: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.degree_in_vars(vars) == 0)
        .map(|g| g.reorder(&ring))
        .collect();
    Ideal::new(&ring, kept)
}
