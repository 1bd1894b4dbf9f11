//! Finite plane images of space curves: the pushforward presentation with
//! generators `{1, u}`, its Fitting ideal, scheme-theoretic images, the
//! length of the drop at a plain double point, and the higher-codimension
//! planar-image pattern.

use crate::groebner::{normal_form, Ideal};
use crate::idealops::{
    eliminate, fitting_ideal, hilbert, irrelevant_ideal, saturate, HilbertData,
    ModulePresentation, DEFAULT_TABLE_DEPTH,
};
use crate::polyring::{
    same_ring, CoefficientField, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring, RingData,
};
use crate::{CaError, Result};

/// A space curve together with the linear map it is pushed forward along:
/// the source ideal, one image polynomial per target coordinate, and the
/// target coordinate ring.
#[derive(Debug, Clone)]
pub struct CMCurvePresentation {
    source_ideal: Ideal,
    map_images: Vec<Polynomial>,
    target_ring: Ring,
}

impl CMCurvePresentation {
    /// The images are indexed by target coordinate; each must live in the
    /// source ring and be zero or homogeneous, and both rings must share
    /// the coefficient field.
    pub fn new(source_ideal: Ideal, map_images: Vec<Polynomial>, target_ring: Ring) -> Result<Self> {
        if map_images.len() != target_ring.nvars() {
            return Err(CaError::ShapeMismatch(format!(
                "{} coordinate images for a target ring with {} variables",
                map_images.len(),
                target_ring.nvars()
            )));
        }
        if source_ideal.ring().field() != target_ring.field() {
            return Err(CaError::invalid(
                "source and target must share one coefficient field",
            ));
        }
        for image in &map_images {
            same_ring(image.ring(), source_ideal.ring())?;
            if !image.is_zero() && !image.is_homogeneous() {
                return Err(CaError::invalid(
                    "coordinate images must be homogeneous (or zero)",
                ));
            }
        }
        Ok(CMCurvePresentation {
            source_ideal,
            map_images,
            target_ring,
        })
    }

    pub fn source_ideal(&self) -> &Ideal {
        &self.source_ideal
    }

    pub fn map_images(&self) -> &[Polynomial] {
        &self.map_images
    }

    pub fn target_ring(&self) -> &Ring {
        &self.target_ring
    }
}

fn variable(ring: &Ring, i: usize) -> Polynomial {
    Polynomial::one(ring).mul_term(&ring.field().one(), &Monomial::var(ring.nvars(), i))
}

/// A single term `1·xᵢ`, if the polynomial is exactly that.
fn as_plain_variable(p: &Polynomial) -> Option<usize> {
    let terms = p.terms();
    if terms.len() != 1 {
        return None;
    }
    let (m, c) = &terms[0];
    if m.degree() != 1 || *c != p.ring().field().one() {
        return None;
    }
    Some(m.support()[0])
}

/// How the target coordinates meet the source ring: a bijection of all but
/// one source variable onto coordinate slots, the leftover module variable
/// `u`, and the optional slot whose image is a multiple of `u`.
struct SlotStructure {
    /// `slot_of_source[i] = Some(j)` when target coordinate `j` pulls back
    /// to the source variable `i`.
    slot_of_source: Vec<Option<usize>>,
    module_variable: usize,
}

fn classify_slots(c: &CMCurvePresentation) -> Result<SlotStructure> {
    let src = c.source_ideal().ring();
    let mut slot_of_source: Vec<Option<usize>> = vec![None; src.nvars()];
    let mut extra_slot: Option<usize> = None;
    for (j, image) in c.map_images().iter().enumerate() {
        if let Some(i) = as_plain_variable(image) {
            if slot_of_source[i].is_some() {
                return Err(CaError::InvalidSetup(format!(
                    "two target coordinates pull back to the source variable {}",
                    src.vars()[i]
                )));
            }
            slot_of_source[i] = Some(j);
        } else if extra_slot.replace(j).is_some() {
            return Err(CaError::InvalidSetup(
                "at most one target coordinate may have a non-coordinate image".into(),
            ));
        }
    }
    let uncovered: Vec<usize> = (0..src.nvars())
        .filter(|&i| slot_of_source[i].is_none())
        .collect();
    let module_variable = match uncovered[..] {
        [i] => i,
        // A coordinate bijection (closed immersion): demote one slot to
        // the module-variable role; its image is then 1·u.
        [] if extra_slot.is_none() => {
            let i = src
                .var_index("u")
                .unwrap_or_else(|| src.nvars().saturating_sub(1));
            extra_slot = slot_of_source[i].take();
            i
        }
        _ => {
            return Err(CaError::InvalidSetup(format!(
                "the coordinate images must cover all source variables except one, {} left over",
                uncovered.len()
            )));
        }
    };
    if let Some(j) = extra_slot {
        let image = &c.map_images()[j];
        if !image.is_zero() {
            let u = variable(src, module_variable);
            let cofactor = image.div_exact(&u).map_err(|_| {
                CaError::InvalidSetup(format!(
                    "the image of coordinate {} must be a multiple of {}",
                    c.target_ring().vars()[j],
                    src.vars()[module_variable]
                ))
            })?;
            if cofactor.degree_in_vars(&[module_variable]) > 0 {
                return Err(CaError::InvalidSetup(format!(
                    "the image of coordinate {} must be linear in {}",
                    c.target_ring().vars()[j],
                    src.vars()[module_variable]
                )));
            }
        }
    }
    Ok(SlotStructure {
        slot_of_source,
        module_variable,
    })
}

/// Presentation of the pushforward of the source structure sheaf as a
/// module over the target ring, on the generators `{1, u}`.
///
/// Fails with [`CaError::InvalidSetup`] when the map does not have the
/// supported shape: all but one target coordinate pulls back to a distinct
/// source variable, the remaining coordinate (if any) pulls back to a
/// multiple of the leftover source variable `u`, and `1, u` generate the
/// pushforward (every normal form is linear in `u`).
pub fn pushforward_presentation(c: &CMCurvePresentation) -> Result<ModulePresentation> {
    let src = c.source_ideal().ring().clone();
    let target = c.target_ring().clone();
    let slots = classify_slots(c)?;
    let u = slots.module_variable;

    // Normal forms under an order eliminating u, so that every u-multiple
    // the ideal can rewrite is rewritten.
    let order = MonomialOrder::elimination(vec![u], src.nvars());
    let reordered = src.reordered(order.clone());
    let basis = c.source_ideal().groebner_basis_under(&order);
    let nf = |p: &Polynomial| normal_form(&p.reorder(&reordered), &basis).reorder(&src);

    // Write q = a + b·u; any higher power of u means {1, u} do not generate.
    let split = |q: &Polynomial| -> Result<(Polynomial, Polynomial)> {
        let mut a = Polynomial::zero(&src);
        let mut b = Polynomial::zero(&src);
        for (m, coeff) in q.terms() {
            match m.exp(u) {
                0 => a = a.add(&Polynomial::one(&src).mul_term(coeff, m)),
                1 => {
                    let mut exps = m.exps().to_vec();
                    exps[u] = 0;
                    b = b.add(&Polynomial::one(&src).mul_term(coeff, &Monomial::new(exps)));
                }
                _ => {
                    return Err(CaError::InvalidSetup(
                        "the pushforward is not generated by 1 and u".into(),
                    ))
                }
            }
        }
        Ok((a, b))
    };

    // Rename source variables to their coordinate slots.
    let rename_images: Vec<(usize, Polynomial)> = (0..src.nvars())
        .map(|i| match slots.slot_of_source[i] {
            Some(j) => (i, variable(&target, j)),
            None => (i, Polynomial::zero(&target)),
        })
        .collect();
    let rename = |p: &Polynomial| p.substitute(&rename_images, &target);

    let generators = [Polynomial::one(&src), variable(&src, u)];
    let mut columns: Vec<[Polynomial; 2]> = Vec::new();
    for (j, lambda) in c.map_images().iter().enumerate() {
        for (gi, generator) in generators.iter().enumerate() {
            let (a, b) = split(&nf(&lambda.mul(generator)))?;
            let mut column = [rename(&a)?.neg(), rename(&b)?.neg()];
            column[gi] = column[gi].add(&variable(&target, j));
            if !column[0].is_zero() || !column[1].is_zero() {
                columns.push(column);
            }
        }
    }
    let rows: Vec<Vec<Polynomial>> = (0..2)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let matrix = PolyMatrix::from_rows(&target, rows)?;
    ModulePresentation::ungraded(&target, matrix)
}

/// The 0th Fitting ideal of the pushforward presentation, the equations of
/// the image scheme in the target ring.
///
/// When the result is homogeneous its Hilbert polynomial must have degree
/// one (the image is a curve); a violation reports the map as not finite
/// onto a curve.
pub fn fitting_image(c: &CMCurvePresentation) -> Result<Ideal> {
    let presentation = pushforward_presentation(c)?;
    let fitt = fitting_ideal(&presentation, 0)?;
    if fitt.is_homogeneous() && !fitt.is_unit_ideal() {
        let h = hilbert(&fitt, DEFAULT_TABLE_DEPTH)?;
        if h.polynomial_degree() != 1 {
            return Err(CaError::InvalidSetup(format!(
                "the Fitting image is not a curve: Hilbert polynomial {}",
                h.render_polynomial()
            )));
        }
    }
    Ok(fitt)
}

/// Scheme-theoretic image of the source under the coordinate images:
/// the kernel of the induced ring map, computed by elimination on the
/// graph ideal and saturated in the target ring.
pub fn schematic_image(c: &CMCurvePresentation) -> Result<Ideal> {
    let src = c.source_ideal().ring().clone();
    let target = c.target_ring().clone();

    let mut suffix = String::from("_im");
    let copy_names: Vec<String> = loop {
        let candidate: Vec<String> = target
            .vars()
            .iter()
            .map(|v| format!("{v}{suffix}"))
            .collect();
        if candidate.iter().all(|n| src.var_index(n).is_none()) {
            break candidate;
        }
        suffix.push('_');
    };
    let copy_refs: Vec<&str> = copy_names.iter().map(|s| s.as_str()).collect();
    let combined = src.extended(&copy_refs);

    let mut graph = Vec::new();
    for gen in c.source_ideal().generators() {
        graph.push(gen.inject(&combined)?);
    }
    for (j, image) in c.map_images().iter().enumerate() {
        let copy = Polynomial::var_named(&combined, &copy_names[j])?;
        graph.push(copy.sub(&image.inject(&combined)?));
    }
    let graph_ideal = Ideal::new(&combined, graph)?;
    let source_block: Vec<usize> = (0..src.nvars()).collect();
    let eliminated = eliminate(&graph_ideal, &source_block)?;

    let copy_ring = RingData::new(&copy_refs, *target.field());
    let restricted = eliminated.restrict(&copy_ring)?;
    let back: Vec<(usize, Polynomial)> = (0..target.nvars())
        .map(|j| (j, variable(&target, j)))
        .collect();
    let image = restricted.substitute(&back, &target)?;
    saturate(&image, &irrelevant_ideal(&target))
}

/// Constant difference between the Hilbert polynomial of the source and
/// that of its scheme-theoretic image — the length of the skyscraper the
/// map crushes. Zero exactly for closed immersions, one for plain double
/// points.
pub fn plain_double_point_length(c: &CMCurvePresentation) -> Result<u64> {
    let image = schematic_image(c)?;
    let h_source = hilbert(c.source_ideal(), DEFAULT_TABLE_DEPTH)?;
    let h_image = hilbert(&image, DEFAULT_TABLE_DEPTH)?;

    let rationals = CoefficientField::Rationals;
    let width = h_source
        .hilbert_polynomial
        .len()
        .max(h_image.hilbert_polynomial.len());
    for d in 1..width {
        let a = h_source.hilbert_polynomial.get(d).cloned().unwrap_or(rationals.zero());
        let b = h_image.hilbert_polynomial.get(d).cloned().unwrap_or(rationals.zero());
        if a != b {
            return Err(CaError::invalid(
                "the source and image Hilbert polynomials differ beyond a constant; \
                 the map is not finite onto its image",
            ));
        }
    }

    let (d_src, value_src) = *h_source.function_table.last().expect("nonempty table");
    let (d_img, value_img) = *h_image.function_table.last().expect("nonempty table");
    debug_assert_eq!(d_src, d_img);
    if d_src < h_source.regularity_index || d_img < h_image.regularity_index {
        return Err(CaError::invalid(
            "Hilbert functions did not stabilize within the table depth",
        ));
    }
    value_src.checked_sub(value_img).ok_or_else(|| {
        CaError::invalid("the image Hilbert polynomial exceeds the source's")
    })
}

fn pn_names(n: usize, plane: &Ring) -> Result<Vec<String>> {
    if n < 4 {
        return Err(CaError::invalid(
            "the planar-image construction needs ambient dimension n ≥ 4",
        ));
    }
    if plane.nvars() != 3 || plane.var_index("x").is_none() || plane.var_index("y").is_none() {
        return Err(CaError::invalid(
            "g and f must live in a plane ring with variables x, y and one more",
        ));
    }
    let third = plane
        .vars()
        .iter()
        .find(|v| v.as_str() != "x" && v.as_str() != "y")
        .expect("three variables, two of them x and y")
        .clone();
    let mut names = vec!["x".to_string(), "y".to_string()];
    for i in 1..=n - 2 {
        let z = format!("z{i}");
        if z == third {
            return Err(CaError::invalid(format!(
                "the plane variable {third} collides with a fiber coordinate"
            )));
        }
        names.push(z);
    }
    names.push(third);
    Ok(names)
}

fn pn_validate(g: &Polynomial, f: &Polynomial) -> Result<()> {
    let plane = g.ring();
    same_ring(plane, f.ring())?;
    let ix = plane.var_index("x").expect("checked by pn_names");
    let iy = plane.var_index("y").expect("checked by pn_names");
    for (name, form) in [("g", g), ("f", f)] {
        if form.is_zero() || !form.is_homogeneous() || form.degree() != Some(2) {
            return Err(CaError::invalid(format!(
                "{name} must be a nonzero quadratic form"
            )));
        }
        if form
            .terms()
            .iter()
            .any(|(m, _)| m.degree_in(&[ix, iy]) == 0)
        {
            return Err(CaError::invalid(format!(
                "{name} must lie in the ideal (x, y)"
            )));
        }
    }
    let x = variable(plane, ix);
    let y = variable(plane, iy);
    let cubic = y.mul(g).sub(&x.mul(f));
    if cubic.is_zero() {
        return Err(CaError::invalid("yg − xf must be a nonzero cubic"));
    }
    Ok(())
}

/// The planar-image family in `Pⁿ`: Fitting ideal of the presentation
/// `[[z₁,0,…,z_{n−2},0,g,f],[0,z₁,…,0,z_{n−2},x,y]]` on generators of
/// degrees `(0, 1)`, together with its Hilbert data (the polynomial is
/// `3t + n − 2`).
pub fn planar_image_fitting_pn(
    n: usize,
    g: &Polynomial,
    f: &Polynomial,
) -> Result<(Ideal, HilbertData)> {
    let names = pn_names(n, g.ring())?;
    pn_validate(g, f)?;
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = RingData::new(&refs, *g.ring().field());

    let x = Polynomial::var_named(&ring, "x")?;
    let y = Polynomial::var_named(&ring, "y")?;
    let zero = Polynomial::zero(&ring);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 1..=n - 2 {
        let z = Polynomial::var_named(&ring, &format!("z{i}"))?;
        top.extend([z.clone(), zero.clone()]);
        bottom.extend([zero.clone(), z]);
    }
    top.extend([g.inject(&ring)?, f.inject(&ring)?]);
    bottom.extend([x, y]);
    let matrix = PolyMatrix::from_rows(&ring, vec![top, bottom])?;
    let presentation = ModulePresentation::new(&ring, vec![0, 1], matrix)?;
    let fitt = fitting_ideal(&presentation, 0)?;
    let h = hilbert(&fitt, DEFAULT_TABLE_DEPTH)?;
    Ok((fitt, h))
}

/// The closed-form generator pattern of [`planar_image_fitting_pn`]:
/// `(zᵢzⱼ, zᵢx, zᵢy, yg − xf)` in the same ring.
pub fn planar_image_pattern(n: usize, g: &Polynomial, f: &Polynomial) -> Result<Ideal> {
    let names = pn_names(n, g.ring())?;
    pn_validate(g, f)?;
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = RingData::new(&refs, *g.ring().field());

    let x = Polynomial::var_named(&ring, "x")?;
    let y = Polynomial::var_named(&ring, "y")?;
    let zs: Vec<Polynomial> = (1..=n - 2)
        .map(|i| Polynomial::var_named(&ring, &format!("z{i}")).expect("fiber coordinate"))
        .collect();
    let mut gens = Vec::new();
    for (i, zi) in zs.iter().enumerate() {
        for zj in &zs[i..] {
            gens.push(zi.mul(zj));
        }
        gens.push(zi.mul(&x));
        gens.push(zi.mul(&y));
    }
    gens.push(y.mul(&g.inject(&ring)?).sub(&x.mul(&f.inject(&ring)?)));
    Ideal::new(&ring, gens)
}

/// The critical locus of a hypersurface section: the ideal generated by
/// `f` and its partial derivatives with respect to the named geometric
/// variables (parameters are left alone).
pub fn critical_locus(f: &Polynomial, geometric_vars: &[&str]) -> Result<Ideal> {
    let ring = f.ring();
    let mut gens = vec![f.clone()];
    for name in geometric_vars {
        let i = ring
            .var_index(name)
            .ok_or_else(|| CaError::UnknownVariable((*name).to_string()))?;
        let partial = f.partial_derivative(i);
        if !partial.is_zero() {
            gens.push(partial);
        }
    }
    Ideal::new(ring, gens)
}

/// The universal ternary cubic: the ring `k[c₀,…,c₉,x,y,w]` and the cubic
/// `Σ cᵢ·mᵢ` running over the ten cubic monomials in `x, y, w`.
pub fn universal_ternary_cubic(field: CoefficientField) -> (Ring, Polynomial) {
    let mut names: Vec<String> = (0..10).map(|i| format!("c{i}")).collect();
    names.extend(["x".to_string(), "y".to_string(), "w".to_string()]);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = RingData::new(&refs, field);
    let nvars = ring.nvars();
    let mut f = Polynomial::zero(&ring);
    let mut index = 0;
    for i in (0..=3u32).rev() {
        for j in (0..=3 - i).rev() {
            let k = 3 - i - j;
            let mut exps = vec![0u32; nvars];
            exps[index] = 1;
            exps[10] = i;
            exps[11] = j;
            exps[12] = k;
            f = f.add(&Polynomial::one(&ring).mul_term(&field.one(), &Monomial::new(exps)));
            index += 1;
        }
    }
    (ring, f)
}
