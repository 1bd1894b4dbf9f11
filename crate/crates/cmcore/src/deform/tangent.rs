//! Normal modules and graded tangent spaces.
//!
//! For an ideal I = (g₁, …, g_m) ⊆ S, a homomorphism I → S/I is
//! determined by the images hᵢ of the generators, subject to one
//! compatibility condition per syzygy s of the generators:
//! Σ sᵢhᵢ ≡ 0 (mod I). Generators of the module of such image vectors are
//! therefore syzygies-modulo-I of the rows of the relation matrix, and the
//! graded degree-0 part — the tangent space of the corresponding point
//! when I is saturated and homogeneous — is carved out by exact linear
//! algebra on standard monomials.

use std::collections::{BTreeSet, HashMap};

use crate::groebner::{
    module_contains_modulo, syzygies, syzygies_modulo, FreeModuleVector, Ideal,
};
use crate::idealops::{irrelevant_ideal, saturate};
use crate::polyring::{monomials_of_degree, CMatrix, Coeff, Monomial, Polynomial};
use crate::{CaError, Result};

/// Generators of the normal module Hom(I, S/I), presented by their action
/// on the generator vector of I, components reduced modulo I.
///
/// The returned family is pruned to a (near-)minimal generating set in
/// ascending degree order; generators whose maximum component degree
/// exceeds `degree_bound` are dropped at the end, so callers must pass a
/// bound at least the largest degree in a minimal generating set to get a
/// faithful answer. All the families targeted here generate in degree at
/// most one above the largest ideal generator degree.
pub fn normal_module_generators(
    ideal: &Ideal,
    degree_bound: u32,
) -> Result<Vec<FreeModuleVector>> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    let m = gens.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let as_vectors: Vec<FreeModuleVector> = gens
        .iter()
        .map(|g| FreeModuleVector::new(ring, vec![g.clone()]))
        .collect::<Result<_>>()?;
    let relations = syzygies(&as_vectors)?;
    let raw: Vec<FreeModuleVector> = if relations.is_empty() {
        // No relations: every assignment of images defines a homomorphism.
        (0..m).map(|i| FreeModuleVector::unit(ring, m, i)).collect()
    } else {
        // Rows of the relation matrix whose columns are the syzygies; an
        // image vector h is admissible exactly when it is a syzygy of
        // these rows modulo the ideal.
        let rows: Vec<FreeModuleVector> = (0..m)
            .map(|i| {
                FreeModuleVector::new(
                    ring,
                    relations.iter().map(|s| s.component(i).clone()).collect(),
                )
            })
            .collect::<Result<_>>()?;
        syzygies_modulo(&rows, gens)?
    };
    let mut reduced: Vec<FreeModuleVector> = raw
        .iter()
        .map(|h| h.map(|c| ideal.normal_form(c)))
        .filter(|h| !h.is_zero())
        .collect();
    reduced.sort_by_key(|h| h.degree().unwrap_or(0));
    let mut kept: Vec<FreeModuleVector> = Vec::new();
    for h in reduced {
        if kept.is_empty() || !module_contains_modulo(&kept, gens, &h)? {
            kept.push(h);
        }
    }
    kept.retain(|h| h.degree().is_none_or(|d| d <= degree_bound as i64));
    Ok(kept)
}

/// A graded tangent space: its dimension and a basis of degree-zero
/// homomorphisms, each given by its images on the ideal generators.
#[derive(Debug, Clone)]
pub struct TangentReport {
    pub dimension: usize,
    pub basis: Vec<FreeModuleVector>,
}

/// Dimension of the degree-0 graded part of Hom(I, S/I) for a saturated
/// homogeneous ideal — the Zariski tangent space at the corresponding
/// point of the parameter space of such ideals.
pub fn tangent_dimension(ideal: &Ideal) -> Result<usize> {
    tangent_report(ideal).map(|r| r.dimension)
}

/// Monomials of degree `d` outside the leading-term ideal.
fn standard_monomials(lead: &[Monomial], nvars: usize, d: u32) -> Vec<Monomial> {
    monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !lead.iter().any(|l| l.divides(m)))
        .collect()
}

/// As [`tangent_dimension`], but also returns a basis.
pub fn tangent_report(ideal: &Ideal) -> Result<TangentReport> {
    let ring = ideal.ring();
    let field = *ring.field();
    let gens = ideal.generators();
    let m = gens.len();
    if m == 0 {
        return Ok(TangentReport {
            dimension: 0,
            basis: Vec::new(),
        });
    }
    for g in gens {
        if !g.is_homogeneous() {
            return Err(CaError::NotHomogeneous(g.to_string()));
        }
    }
    let saturation = saturate(ideal, &irrelevant_ideal(ring))?;
    if !crate::groebner::ideal_equal(&saturation, ideal)? {
        return Err(CaError::NotSaturated(ideal.render_generators()));
    }

    let degrees: Vec<u32> = gens.iter().map(|g| g.degree().expect("nonzero")).collect();
    let lead: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.lm().expect("nonzero").clone())
        .collect();
    let n = ring.nvars();

    // Unknowns: the image of generator i ranges over the standard
    // monomials in its degree.
    let bases: Vec<Vec<Monomial>> = degrees
        .iter()
        .map(|&d| standard_monomials(&lead, n, d))
        .collect();
    let mut offsets = Vec::with_capacity(m);
    let mut total = 0usize;
    for b in &bases {
        offsets.push(total);
        total += b.len();
    }
    if total == 0 {
        return Ok(TangentReport {
            dimension: 0,
            basis: Vec::new(),
        });
    }

    // One block of linear constraints per homogeneous piece of each
    // syzygy: the constraint polynomial must vanish identically on the
    // standard monomials of its degree.
    let as_vectors: Vec<FreeModuleVector> = gens
        .iter()
        .map(|g| FreeModuleVector::new(ring, vec![g.clone()]))
        .collect::<Result<_>>()?;
    let relations = syzygies(&as_vectors)?;
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    for s in &relations {
        let mut shifted_degrees: BTreeSet<i64> = BTreeSet::new();
        for (i, c) in s.components().iter().enumerate() {
            for (mono, _) in c.terms() {
                shifted_degrees.insert(mono.degree() as i64 + degrees[i] as i64);
            }
        }
        for &e in &shifted_degrees {
            let target = standard_monomials(&lead, n, e as u32);
            if target.is_empty() {
                continue;
            }
            let index: HashMap<&Monomial, usize> =
                target.iter().enumerate().map(|(k, t)| (t, k)).collect();
            let mut block = vec![vec![field.zero(); total]; target.len()];
            for (i, c) in s.components().iter().enumerate() {
                let piece_degree = e - degrees[i] as i64;
                if piece_degree < 0 {
                    continue;
                }
                let piece = c.homogeneous_component(piece_degree as u32);
                if piece.is_zero() {
                    continue;
                }
                for (col, mu) in bases[i].iter().enumerate() {
                    let product = ideal.normal_form(&piece.mul_term(&field.one(), mu));
                    for (mono, coeff) in product.terms() {
                        let row = *index
                            .get(mono)
                            .expect("normal forms stay on standard monomials");
                        let cell = &mut block[row][offsets[i] + col];
                        *cell = field.add(cell, coeff);
                    }
                }
            }
            rows.extend(block);
        }
    }

    if rows.is_empty() {
        // No syzygies: every image vector works.
        let mut basis = Vec::new();
        for i in 0..m {
            for mu in &bases[i] {
                let mut comps = vec![Polynomial::zero(ring); m];
                comps[i] = Polynomial::monomial(ring, mu.clone(), field.one());
                basis.push(FreeModuleVector::with_shifts(
                    ring,
                    comps,
                    degrees.iter().map(|&d| -(d as i64)).collect(),
                )?);
            }
        }
        return Ok(TangentReport {
            dimension: total,
            basis,
        });
    }

    let nullspace = CMatrix::from_rows(field, rows).nullspace();
    let mut basis = Vec::new();
    for v in &nullspace {
        let comps: Vec<Polynomial> = (0..m)
            .map(|i| {
                let mut p = Polynomial::zero(ring);
                for (k, mu) in bases[i].iter().enumerate() {
                    let c = &v[offsets[i] + k];
                    if !field.is_zero(c) {
                        p = p.add(&Polynomial::monomial(ring, mu.clone(), c.clone()));
                    }
                }
                p
            })
            .collect();
        basis.push(FreeModuleVector::with_shifts(
            ring,
            comps,
            degrees.iter().map(|&d| -(d as i64)).collect(),
        )?);
    }
    Ok(TangentReport {
        dimension: nullspace.len(),
        basis,
    })
}

/// Dimension over the coefficient field of the degree-`degree` graded
/// piece of the submodule of (S/I)^m spanned by `homs` (with component i
/// placed in internal degree `degree + deg gᵢ`). Pieces of the spanning
/// vectors above the requested degree contribute nothing.
pub fn graded_hom_dimension(
    ideal: &Ideal,
    homs: &[FreeModuleVector],
    degree: i64,
) -> Result<usize> {
    let ring = ideal.ring();
    let field = *ring.field();
    let gens = ideal.generators();
    let m = gens.len();
    if m == 0 || homs.is_empty() {
        return Ok(0);
    }
    for h in homs {
        if h.rank() != m {
            return Err(CaError::ShapeMismatch(format!(
                "hom has rank {} but the ideal has {} generators",
                h.rank(),
                m
            )));
        }
    }
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree().expect("nonzero")).collect();
    let lead: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.lm().expect("nonzero").clone())
        .collect();
    let n = ring.nvars();
    let bases: Vec<Vec<Monomial>> = degrees
        .iter()
        .map(|&d| {
            let t = d as i64 + degree;
            if t < 0 {
                Vec::new()
            } else {
                standard_monomials(&lead, n, t as u32)
            }
        })
        .collect();
    let mut offsets = Vec::with_capacity(m);
    let mut total = 0usize;
    for b in &bases {
        offsets.push(total);
        total += b.len();
    }
    if total == 0 {
        return Ok(0);
    }
    let indices: Vec<HashMap<&Monomial, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, t)| (t, k)).collect())
        .collect();

    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    for h in homs {
        let mut piece_degrees: BTreeSet<i64> = BTreeSet::new();
        for (i, c) in h.components().iter().enumerate() {
            for (mono, _) in c.terms() {
                piece_degrees.insert(mono.degree() as i64 - degrees[i] as i64);
            }
        }
        for &e in &piece_degrees {
            if e > degree {
                continue;
            }
            for multiplier in monomials_of_degree(n, (degree - e) as u32) {
                let mut row = vec![field.zero(); total];
                let mut nonzero = false;
                for i in 0..m {
                    let component_degree = e + degrees[i] as i64;
                    if component_degree < 0 {
                        continue;
                    }
                    let piece = h.component(i).homogeneous_component(component_degree as u32);
                    if piece.is_zero() {
                        continue;
                    }
                    let product = ideal.normal_form(&piece.mul_term(&field.one(), &multiplier));
                    for (mono, coeff) in product.terms() {
                        let k = *indices[i]
                            .get(mono)
                            .expect("normal forms stay on standard monomials");
                        row[offsets[i] + k] = field.add(&row[offsets[i] + k], coeff);
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(CMatrix::from_rows(field, rows).rank())
}
