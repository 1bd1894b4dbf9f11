//! The named verification catalog: each check re-derives one of the
//! pinned computations end to end and reports pass/fail with rendered
//! evidence. Checks are pure; randomized checks are driven by an explicit
//! seed so every report is reproducible.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cmcurves::family::{
    embedded_cubic_chart_residue, embedded_cubic_chart_setup, quintic_chart_fitting_generators,
    quintic_projection_chart, quintic_projection_fiber, quintic_torsion_witness,
    stable_sheaf_fitting_fiber, stable_sheaf_presentation, stable_sheaf_product,
    twisted_cubic_family, TWISTED_CUBIC_PARAMETERS,
};
use crate::cmcurves::image::{
    fitting_image, planar_image_fitting_pn, planar_image_pattern, CMCurvePresentation,
};
use crate::cmcurves::section::{
    avoids_projection_center, curve_from_factorization, matrix_factorization,
    ring_condition_check, roundtrip_check, SingularCubicSection,
};
use crate::deform::{lift_check, tangent_dimension};
use crate::groebner::{
    apply_combination, ideal_equal, oracle_membership, syzygies, FreeModuleVector, Ideal,
};
use crate::idealops::{
    fitting_ideal, hilbert, quotient_by_element, saturate, torsion_witnesses,
    ModulePresentation, DEFAULT_TABLE_DEPTH,
};
use crate::polyring::{
    monomials_of_degree, parse_polynomial, Coeff, CoefficientField, PolyMatrix, Polynomial, Ring,
    RingData,
};
use crate::{CaError, Result};

/// Field and seed a check runs under. Randomized sub-checks that pin their
/// own prime field ignore `field` (it is documented per check).
#[derive(Debug, Clone, Copy)]
pub struct CheckContext {
    pub field: CoefficientField,
    pub seed: u64,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            field: CoefficientField::Rationals,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Error => "error",
        }
    }
}

/// Outcome of one named check: identifier, verdict, labelled evidence,
/// wall-clock time.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: CheckStatus,
    pub details: Vec<(String, String)>,
    pub elapsed: Duration,
}

/// Stable catalog of check identifiers, in reporting order.
pub const CATALOG: [&str; 9] = [
    "determinantal-fiber",
    "tangent-12-15-16",
    "ps-obstruction",
    "ft-obstruction",
    "fitting-image-planar",
    "nonflat-5t-1",
    "roundtrip-sc",
    "pn-planar-fitting",
    "kernel-properties",
];

/// Checks whose claims are characteristic-free and therefore worth
/// re-running over small prime fields as well as over the rationals.
pub fn characteristic_sensitive(id: &str) -> bool {
    matches!(id, "tangent-12-15-16" | "ps-obstruction" | "ft-obstruction")
}

/// Run one named check. Unknown identifiers are an error listing the
/// catalog.
pub fn run_check(id: &str, ctx: &CheckContext) -> Result<VerificationReport> {
    let body: fn(&CheckContext) -> Result<(bool, Details)> = match id {
        "determinantal-fiber" => check_determinantal_fiber,
        "tangent-12-15-16" => check_tangent_dimensions,
        "ps-obstruction" => check_ps_obstruction,
        "ft-obstruction" => check_ft_obstruction,
        "fitting-image-planar" => check_fitting_image_planar,
        "nonflat-5t-1" => check_nonflat_quintic,
        "roundtrip-sc" => check_roundtrip,
        "pn-planar-fitting" => check_pn_planar_fitting,
        "kernel-properties" => check_kernel_properties,
        _ => {
            return Err(CaError::invalid(format!(
                "unknown check `{id}`; available checks: {}",
                CATALOG.join(", ")
            )))
        }
    };
    let start = Instant::now();
    let report = match body(ctx) {
        Ok((true, details)) => VerificationReport {
            check_id: id.to_string(),
            status: CheckStatus::Pass,
            details,
            elapsed: start.elapsed(),
        },
        Ok((false, details)) => VerificationReport {
            check_id: id.to_string(),
            status: CheckStatus::Fail,
            details,
            elapsed: start.elapsed(),
        },
        Err(e) => VerificationReport {
            check_id: id.to_string(),
            status: CheckStatus::Error,
            details: vec![("error".to_string(), e.to_string())],
            elapsed: start.elapsed(),
        },
    };
    Ok(report)
}

type Details = Vec<(String, String)>;

fn detail(label: &str, value: impl ToString) -> (String, String) {
    (label.to_string(), value.to_string())
}

fn parse_ideal(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
    let parsed: Result<Vec<Polynomial>> =
        gens.iter().map(|s| parse_polynomial(ring, s)).collect();
    Ideal::new(ring, parsed?)
}

const SAMPLE_PRIME: u64 = 32003;

fn random_coeff(field: CoefficientField, rng: &mut ChaCha8Rng) -> Coeff {
    field.from_u64(rng.gen_range(0..field.characteristic().max(2)))
}

fn random_form(ring: &Ring, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let field = *ring.field();
    let mut form = Polynomial::zero(ring);
    for m in monomials_of_degree(ring.nvars(), degree) {
        let c = random_coeff(field, rng);
        if !field.is_zero(&c) {
            form = form.add(&Polynomial::one(ring).mul_term(&c, &m));
        }
    }
    form
}

fn random_singular_section(ring: &Ring, rng: &mut ChaCha8Rng) -> SingularCubicSection {
    loop {
        let s = random_form(ring, 1, rng);
        let t = random_form(ring, 1, rng);
        let f1 = random_form(ring, 1, rng);
        let phi = random_form(ring, 1, rng);
        let g2 = random_form(ring, 1, rng);
        let q = s
            .mul(&s)
            .mul(&f1)
            .add(&s.mul(&t).mul(&phi))
            .sub(&t.mul(&t).mul(&g2));
        if q.is_zero() {
            continue;
        }
        match SingularCubicSection::new(q, s, t) {
            Ok(sc) => return sc,
            Err(_) => continue,
        }
    }
}

// ---- determinantal-fiber ----------------------------------------------

fn check_determinantal_fiber(ctx: &CheckContext) -> Result<(bool, Details)> {
    let zeros = vec![ctx.field.zero(); TWISTED_CUBIC_PARAMETERS];
    let fiber = twisted_cubic_family(ctx.field, &zeros)?;
    let expected = parse_ideal(fiber.ring(), &["u^2", "u*y - x^2", "x*u"])?;
    let ideal_matches = ideal_equal(&fiber, &expected)?;
    let h = hilbert(&fiber, DEFAULT_TABLE_DEPTH)?;
    let hilbert_matches = h.polynomial_is(&[1, 3]);
    let details = vec![
        detail("fiber ideal", fiber.render_generators()),
        detail("matches (u^2, u*y - x^2, x*u)", ideal_matches),
        detail("hilbert polynomial", h.render_polynomial()),
        detail("matches 3t + 1", hilbert_matches),
    ];
    Ok((ideal_matches && hilbert_matches, details))
}

// ---- tangent-12-15-16 --------------------------------------------------

fn check_tangent_dimensions(ctx: &CheckContext) -> Result<(bool, Details)> {
    let space = RingData::new(&["x", "y", "z", "w"], ctx.field);
    let singular = parse_ideal(&space, &["z^2", "z*x", "z*y", "x^3"])?;
    let smooth = parse_ideal(&space, &["z^2", "z*x", "z*y", "x*w^2"])?;
    let curve_ring = RingData::new(&["x", "y", "u", "w"], ctx.field);
    let curve = parse_ideal(&curve_ring, &["u^2", "u*y - x^2", "x*u"])?;

    let d_singular = tangent_dimension(&singular)?;
    let d_smooth = tangent_dimension(&smooth)?;
    let d_curve = tangent_dimension(&curve)?;
    let details = vec![
        detail("cubic with embedded point (expect 16)", d_singular),
        detail("cubic smooth at the point (expect 15)", d_smooth),
        detail("determinantal curve (expect 12)", d_curve),
    ];
    Ok((
        (d_singular, d_smooth, d_curve) == (16, 15, 12),
        details,
    ))
}

// ---- ps-obstruction -----------------------------------------------------

fn check_ps_obstruction(ctx: &CheckContext) -> Result<(bool, Details)> {
    let setup = embedded_cubic_chart_setup(ctx.field);
    let report = lift_check(&setup)?;
    let expected = embedded_cubic_chart_residue(setup.ring());
    let residue_matches = report.residue == expected;
    let details = vec![
        detail("residue", report.residue.to_string()),
        detail("matches displayed residue", residue_matches),
        detail(
            "product vanishes mod obstruction ideal",
            report.is_zero_mod_obstruction,
        ),
    ];
    Ok((residue_matches && report.is_zero_mod_obstruction, details))
}

// ---- ft-obstruction -----------------------------------------------------

fn check_ft_obstruction(ctx: &CheckContext) -> Result<(bool, Details)> {
    let setup = stable_sheaf_presentation(ctx.field);
    let report = lift_check(&setup)?;
    let expected = stable_sheaf_product(setup.ring());
    let product_matches = report.product == expected;
    let undeformed_zero = setup.undeformed_product().is_zero();
    let details = vec![
        detail("product", report.product.to_string()),
        detail("matches displayed product", product_matches),
        detail(
            "product vanishes mod obstruction ideal",
            report.is_zero_mod_obstruction,
        ),
        detail("undeformed product is zero", undeformed_zero),
    ];
    Ok((
        product_matches && report.is_zero_mod_obstruction && undeformed_zero,
        details,
    ))
}

// ---- fitting-image-planar -----------------------------------------------

fn check_fitting_image_planar(ctx: &CheckContext) -> Result<(bool, Details)> {
    let mut details = Vec::new();

    // (a) Degenerate planar projection of the nodal-cubic curve.
    let plane = RingData::new(&["x", "y", "w"], ctx.field);
    let sc = SingularCubicSection::new(
        parse_polynomial(&plane, "w*(y^2 - x^2) - x^3")?,
        parse_polynomial(&plane, "x")?,
        parse_polynomial(&plane, "y")?,
    )?;
    let curve = curve_from_factorization(&sc)?;
    let src = curve.ring().clone();
    let target = RingData::new(&["x", "y", "z", "w"], ctx.field);
    let degenerate = CMCurvePresentation::new(
        curve,
        vec![
            parse_polynomial(&src, "x")?,
            parse_polynomial(&src, "y")?,
            Polynomial::zero(&src),
            parse_polynomial(&src, "w")?,
        ],
        target.clone(),
    )?;
    let fitt_a = fitting_image(&degenerate)?;
    let expected_a = parse_ideal(&target, &["w*(y^2 - x^2) - x^3", "z^2", "z*x", "z*y"])?;
    let part_a = ideal_equal(&fitt_a, &expected_a)?;
    details.push(detail("degenerate projection ideal", fitt_a.render_generators()));
    details.push(detail("matches (Q, z^2, z*x, z*y)", part_a));

    // (b) The one-parameter family at f₁ = x, g₁ = 0, g₂ = w with the
    // parameter left symbolic.
    let src_b = RingData::new(&["x", "y", "u", "w", "b"], ctx.field);
    let curve_b = parse_ideal(&src_b, &["x*u + w*y", "u*y + x^2", "u^2 - w*x"])?;
    let target_b = RingData::new(&["x", "y", "z", "w", "b"], ctx.field);
    let family = CMCurvePresentation::new(
        curve_b,
        vec![
            parse_polynomial(&src_b, "x")?,
            parse_polynomial(&src_b, "y")?,
            parse_polynomial(&src_b, "b*u")?,
            parse_polynomial(&src_b, "w")?,
            parse_polynomial(&src_b, "b")?,
        ],
        target_b.clone(),
    )?;
    let fitt_b = fitting_image(&family)?;
    let expected_b = parse_ideal(
        &target_b,
        &[
            "x^3 - w*y^2",
            "z^2 - b^2*x*w",
            "z*x + b*w*y",
            "z*y + b*x^2",
        ],
    )?;
    let part_b = ideal_equal(&fitt_b, &expected_b)?;
    details.push(detail("symbolic family ideal", fitt_b.render_generators()));
    details.push(detail("matches (Q, F1, F2, F3)", part_b));

    // (c) Twenty random parameter points of the graded chart family over
    // the fixed sampling prime.
    let sample_field = CoefficientField::Prime(SAMPLE_PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut hilbert_failures = 0usize;
    for _ in 0..20 {
        let point: Vec<Coeff> = (0..4)
            .map(|_| random_coeff(sample_field, &mut rng))
            .collect();
        let fiber =
            stable_sheaf_fitting_fiber(sample_field, &point[0], &point[1], &point[2], &point[3])?;
        let h = hilbert(&fiber, DEFAULT_TABLE_DEPTH)?;
        if !h.polynomial_is(&[1, 3]) {
            hilbert_failures += 1;
        }
    }
    details.push(detail("random parameter points", 20));
    details.push(detail("hilbert failures", hilbert_failures));

    Ok((part_a && part_b && hilbert_failures == 0, details))
}

// ---- nonflat-5t-1 -------------------------------------------------------

fn check_nonflat_quintic(ctx: &CheckContext) -> Result<(bool, Details)> {
    let chart = quintic_projection_chart(ctx.field);
    let ring = chart.ring().clone();
    let fitt = fitting_ideal(&chart, 0)?;
    let closed_form = quintic_chart_fitting_generators(&ring);
    let fitting_matches = ideal_equal(&fitt, &closed_form)?;

    let witness = quintic_torsion_witness(&ring);
    let t = parse_polynomial(&ring, "t")?;
    let colon = quotient_by_element(&fitt, &t)?;
    let witness_in_colon = colon.contains(&witness);
    let witness_outside = !fitt.contains(&witness);
    let torsion_found = !torsion_witnesses(&fitt, "t")?.is_empty();

    let at_one = quintic_projection_fiber(ctx.field, &ctx.field.one())?;
    let at_zero = quintic_projection_fiber(ctx.field, &ctx.field.zero())?;
    let h1 = hilbert(&fitting_ideal(&at_one, 0)?, DEFAULT_TABLE_DEPTH)?;
    let h0 = hilbert(&fitting_ideal(&at_zero, 0)?, DEFAULT_TABLE_DEPTH)?;
    let reembedded_is_quintic = h1.polynomial_is(&[-1, 5]);
    let polynomials_differ = h0.hilbert_polynomial != h1.hilbert_polynomial;

    let details = vec![
        detail("fitting ideal matches closed form", fitting_matches),
        detail("witness", witness.to_string()),
        detail("witness in (Fitt0 : t)", witness_in_colon),
        detail("witness outside Fitt0", witness_outside),
        detail("torsion search nonempty", torsion_found),
        detail("fiber polynomial at t = 1", h1.render_polynomial()),
        detail("fiber polynomial at t = 0", h0.render_polynomial()),
        detail("fiber polynomials differ", polynomials_differ),
    ];
    Ok((
        fitting_matches
            && witness_in_colon
            && witness_outside
            && torsion_found
            && reembedded_is_quintic
            && polynomials_differ,
        details,
    ))
}

// ---- roundtrip-sc -------------------------------------------------------

fn check_roundtrip(ctx: &CheckContext) -> Result<(bool, Details)> {
    let field = CoefficientField::Prime(SAMPLE_PRIME);
    let plane = RingData::new(&["x", "y", "w"], field);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let cases = 50usize;
    let mut failures = 0usize;
    let mut first_failure = None;
    for case in 0..cases {
        let sc = random_singular_section(&plane, &mut rng);
        let curve = curve_from_factorization(&sc)?;
        let h = hilbert(&curve, DEFAULT_TABLE_DEPTH)?;
        let report = roundtrip_check(&sc)?;
        let presentation = ModulePresentation::ungraded(&plane, matrix_factorization(&sc)?)?;
        let section_ideal = Ideal::new(&plane, vec![sc.s().clone(), sc.t().clone()])?;
        let ok = h.polynomial_is(&[1, 3])
            && avoids_projection_center(&curve)?
            && report.image_matches_q
            && report.section_matches_annihilator
            && ring_condition_check(&presentation, &section_ideal)?;
        if !ok {
            failures += 1;
            first_failure.get_or_insert_with(|| format!("case {case}: Q = {}", sc.q()));
        }
    }
    let mut details = vec![detail("cases", cases), detail("failures", failures)];
    if let Some(f) = first_failure {
        details.push(detail("first failure", f));
    }
    Ok((failures == 0, details))
}

// ---- pn-planar-fitting --------------------------------------------------

fn check_pn_planar_fitting(ctx: &CheckContext) -> Result<(bool, Details)> {
    let plane = RingData::new(&["x", "y", "w"], ctx.field);
    let g = parse_polynomial(&plane, "y^2")?;
    let f = parse_polynomial(&plane, "x^2")?;
    let mut details = Vec::new();
    let mut all = true;
    for (n, expected) in [(4usize, [2i64, 3]), (5, [3, 3])] {
        let (fitt, h) = planar_image_fitting_pn(n, &g, &f)?;
        let pattern = planar_image_pattern(n, &g, &f)?;
        let hilbert_matches = h.polynomial_is(&expected);
        let pattern_matches = ideal_equal(&fitt, &pattern)?;
        details.push(detail(
            &format!("n = {n} hilbert polynomial"),
            h.render_polynomial(),
        ));
        details.push(detail(&format!("n = {n} matches 3t + {}", n - 2), hilbert_matches));
        details.push(detail(&format!("n = {n} matches pattern"), pattern_matches));
        all = all && hilbert_matches && pattern_matches;
    }
    Ok((all, details))
}

// ---- kernel-properties --------------------------------------------------

fn check_kernel_properties(ctx: &CheckContext) -> Result<(bool, Details)> {
    let field = CoefficientField::Prime(SAMPLE_PRIME);
    let ring = RingData::new(&["x", "y", "z"], field);
    let cases = 200usize;
    let mut details = Vec::new();
    let mut all = true;

    // Membership: the Gröbner verdict against the brute-force oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut failures = 0usize;
    for _ in 0..cases {
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| random_form(&ring, rng.gen_range(1..=2), &mut rng))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let degree = 3u32;
        let candidate = if rng.gen_bool(0.5) {
            let mut f = Polynomial::zero(&ring);
            for g in &gens {
                let cofactor_degree = degree - g.degree().unwrap_or(0);
                f = f.add(&g.mul(&random_form(&ring, cofactor_degree, &mut rng)));
            }
            f
        } else {
            random_form(&ring, degree, &mut rng)
        };
        if candidate.is_zero() {
            continue;
        }
        let ideal = Ideal::new(&ring, gens.clone())?;
        let via_groebner = ideal.contains(&candidate);
        let via_oracle = oracle_membership(&candidate, &gens, degree)?;
        if via_groebner != via_oracle {
            failures += 1;
        }
    }
    details.push(detail("membership vs oracle failures", failures));
    all = all && failures == 0;

    // Fitting-ideal invariance under row/column operations and trivial
    // stabilization.
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(1));
    let mut failures = 0usize;
    for _ in 0..cases {
        let entries: Vec<Vec<Polynomial>> = (0..2)
            .map(|_| {
                (0..3)
                    .map(|_| random_form(&ring, rng.gen_range(0..=1), &mut rng))
                    .collect()
            })
            .collect();
        let matrix = PolyMatrix::from_rows(&ring, entries.clone())?;
        let base = fitting_ideal(&ModulePresentation::ungraded(&ring, matrix.clone())?, 0)?;

        // Row operation: add a polynomial multiple of row 1 to row 0,
        // then swap the rows.
        let multiplier = random_form(&ring, 1, &mut rng);
        let mut row_op: Vec<Vec<Polynomial>> = entries.clone();
        for c in 0..3 {
            row_op[0][c] = row_op[0][c].add(&multiplier.mul(&entries[1][c]));
        }
        row_op.swap(0, 1);
        let after_rows =
            fitting_ideal(&ModulePresentation::ungraded(&ring, PolyMatrix::from_rows(&ring, row_op)?)?, 0)?;

        // Column operation: add a multiple of column 0 to column 2, scale
        // column 1 by a unit, then permute the columns.
        let mut col_op: Vec<Vec<Polynomial>> = entries.clone();
        let unit = Polynomial::constant(&ring, field.from_u64(rng.gen_range(1..SAMPLE_PRIME)));
        for r in 0..2 {
            let shifted = col_op[r][2].add(&multiplier.mul(&entries[r][0]));
            col_op[r][2] = shifted;
            col_op[r][1] = col_op[r][1].mul(&unit);
            col_op[r].rotate_left(1);
        }
        let after_cols =
            fitting_ideal(&ModulePresentation::ungraded(&ring, PolyMatrix::from_rows(&ring, col_op)?)?, 0)?;

        // Trivial stabilization: a redundant generator killed by a unit.
        let mut stabilized: Vec<Vec<Polynomial>> = entries
            .iter()
            .map(|row| {
                let mut row = row.clone();
                row.push(Polynomial::zero(&ring));
                row
            })
            .collect();
        let mut last = vec![Polynomial::zero(&ring); 3];
        last.push(Polynomial::one(&ring));
        stabilized.push(last);
        let after_stab = fitting_ideal(
            &ModulePresentation::ungraded(&ring, PolyMatrix::from_rows(&ring, stabilized)?)?,
            0,
        )?;

        if !(ideal_equal(&base, &after_rows)?
            && ideal_equal(&base, &after_cols)?
            && ideal_equal(&base, &after_stab)?)
        {
            failures += 1;
        }
    }
    details.push(detail("fitting invariance failures", failures));
    all = all && failures == 0;

    // Saturation idempotence (and containment of the original ideal).
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(2));
    let mut failures = 0usize;
    for _ in 0..cases {
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| random_form(&ring, rng.gen_range(1..=2), &mut rng))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(&ring, gens)?;
        let by = Ideal::new(&ring, vec![parse_polynomial(&ring, "x")?])?;
        let once = saturate(&ideal, &by)?;
        let twice = saturate(&once, &by)?;
        if !(ideal_equal(&once, &twice)? && once.contains_ideal(&ideal)?) {
            failures += 1;
        }
    }
    details.push(detail("saturation idempotence failures", failures));
    all = all && failures == 0;

    // Syzygy exactness: every computed relation evaluates to zero.
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(3));
    let mut failures = 0usize;
    for _ in 0..cases {
        let gens: Vec<Polynomial> = (0..3)
            .map(|_| random_form(&ring, rng.gen_range(1..=2), &mut rng))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let vectors: Result<Vec<FreeModuleVector>> = gens
            .iter()
            .map(|g| FreeModuleVector::new(&ring, vec![g.clone()]))
            .collect();
        let vectors = vectors?;
        for s in syzygies(&vectors)? {
            if !apply_combination(&s, &vectors).is_zero() {
                failures += 1;
                break;
            }
        }
    }
    details.push(detail("syzygy exactness failures", failures));
    all = all && failures == 0;

    // Matrix factorizations: det M = −Q for random singular sections.
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(4));
    let plane = RingData::new(&["x", "y", "w"], field);
    let mut failures = 0usize;
    for _ in 0..cases {
        let sc = random_singular_section(&plane, &mut rng);
        let m = matrix_factorization(&sc)?;
        if m.det()? != sc.q().neg() {
            failures += 1;
        }
    }
    details.push(detail("matrix factorization failures", failures));
    all = all && failures == 0;

    details.push(detail("cases per property", cases));
    Ok((all, details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_resolve_and_fast_checks_pass() {
        let ctx = CheckContext::default();
        for id in [
            "determinantal-fiber",
            "tangent-12-15-16",
            "ps-obstruction",
            "ft-obstruction",
            "pn-planar-fitting",
        ] {
            let report = run_check(id, &ctx).unwrap();
            assert_eq!(report.status, CheckStatus::Pass, "{id}: {:?}", report.details);
            assert_eq!(report.check_id, id);
        }
    }

    #[test]
    fn unknown_check_lists_the_catalog() {
        let err = run_check("no-such-check", &CheckContext::default()).unwrap_err();
        let message = err.to_string();
        for id in CATALOG {
            assert!(message.contains(id), "missing {id} in {message}");
        }
    }

    #[test]
    fn characteristic_sensitivity_is_stable() {
        let sensitive: Vec<&str> = CATALOG
            .iter()
            .copied()
            .filter(|id| characteristic_sensitive(id))
            .collect();
        assert_eq!(
            sensitive,
            ["tangent-12-15-16", "ps-obstruction", "ft-obstruction"]
        );
    }

    #[test]
    fn nonflat_check_passes_and_reports_the_witness() {
        let report = run_check("nonflat-5t-1", &CheckContext::default()).unwrap();
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);
        let witness = report
            .details
            .iter()
            .find(|(label, _)| label == "witness")
            .map(|(_, value)| value.clone())
            .unwrap();
        assert!(witness.contains("y*z"), "{witness}");
    }

    #[test]
    fn sensitive_checks_pass_over_small_prime_fields() {
        for p in [2u64, 3] {
            let ctx = CheckContext {
                field: CoefficientField::Prime(p),
                seed: 0,
            };
            for id in CATALOG.iter().copied().filter(|id| characteristic_sensitive(id)) {
                let report = run_check(id, &ctx).unwrap();
                assert_eq!(
                    report.status,
                    CheckStatus::Pass,
                    "{id} over F_{p}: {:?}",
                    report.details
                );
            }
        }
    }
}
