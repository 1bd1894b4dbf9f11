//! Plane cubics with a singular section: decomposition along the section,
//! the associated 2×2 matrix factorization, the determinantal space curve
//! it spans, and the round trip back to the plane data.

use crate::groebner::{ideal_equal, Ideal};
use crate::idealops::{annihilator, irrelevant_ideal, saturate, ModulePresentation};
use crate::polyring::{CMatrix, Monomial, PolyMatrix, Polynomial, Ring, RingData};
use crate::polyring::same_ring;
use crate::{CaError, Result};

/// A plane cubic `Q` together with a linear section `V(s, t)` along which it
/// is singular.
///
/// The coordinate ring has exactly three variables; `Q` is a nonzero cubic
/// form, `s` and `t` independent linear forms. Whether `Q` actually lies in
/// `(s, t)²` is checked by [`decompose_singular_cubic`], which is where a
/// violation surfaces.
#[derive(Debug, Clone)]
pub struct SingularCubicSection {
    q: Polynomial,
    s: Polynomial,
    t: Polynomial,
}

impl SingularCubicSection {
    pub fn new(q: Polynomial, s: Polynomial, t: Polynomial) -> Result<Self> {
        let ring = q.ring().clone();
        same_ring(&ring, s.ring())?;
        same_ring(&ring, t.ring())?;
        if ring.nvars() != 3 {
            return Err(CaError::invalid(format!(
                "a plane cubic needs a 3-variable ring, got {}",
                ring.describe()
            )));
        }
        if q.is_zero() || !q.is_homogeneous() || q.degree() != Some(3) {
            return Err(CaError::invalid(
                "the section data needs a nonzero homogeneous cubic",
            ));
        }
        for (name, form) in [("s", &s), ("t", &t)] {
            if form.is_zero() || !form.is_homogeneous() || form.degree() != Some(1) {
                return Err(CaError::invalid(format!(
                    "the section form {name} must be a nonzero linear form"
                )));
            }
        }
        let coeffs = CMatrix::from_rows(
            *ring.field(),
            vec![linear_coefficients(&s), linear_coefficients(&t)],
        );
        if coeffs.rank() != 2 {
            return Err(CaError::invalid(
                "the section forms s and t must be linearly independent",
            ));
        }
        Ok(SingularCubicSection { q, s, t })
    }

    pub fn ring(&self) -> &Ring {
        self.q.ring()
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    pub fn s(&self) -> &Polynomial {
        &self.s
    }

    pub fn t(&self) -> &Polynomial {
        &self.t
    }
}

/// The linear forms of the normalized decomposition
/// `Q = s²·f₁ + st·(f₂ − g₁) − t²·g₂`.
#[derive(Debug, Clone)]
pub struct CubicDecomposition {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub g1: Polynomial,
    pub g2: Polynomial,
}

fn linear_coefficients(form: &Polynomial) -> Vec<crate::polyring::Coeff> {
    let ring = form.ring();
    (0..ring.nvars())
        .map(|i| form.coefficient_of(&Monomial::var(ring.nvars(), i)))
        .collect()
}

/// Write the cubic as `s²·f₁ + st·(f₂ − g₁) − t²·g₂` with linear forms
/// `f₁, f₂, g₁, g₂`.
///
/// The choice is normalized deterministically: after the linear change of
/// coordinates making `s` and `t` the first two variables, the part of the
/// cubic divisible by `s²` goes to `f₁`, the mixed `st` part goes entirely
/// to `f₂` (so `g₁ = 0`), and the `t²` part goes to `−g₂`. Fails with
/// [`CaError::NotSingularSection`] when the cubic has a term outside
/// `(s, t)²`, i.e. when the cubic is not singular along the section.
pub fn decompose_singular_cubic(sc: &SingularCubicSection) -> Result<CubicDecomposition> {
    let ring = sc.ring().clone();
    let field = *ring.field();
    let row_s = linear_coefficients(sc.s());
    let row_t = linear_coefficients(sc.t());

    // Extend {s, t} to a coordinate system by one of the original variables.
    let mut change = None;
    for k in 0..3 {
        let mut unit = vec![field.zero(), field.zero(), field.zero()];
        unit[k] = field.one();
        let m = CMatrix::from_rows(field, vec![row_s.clone(), row_t.clone(), unit]);
        if m.rank() == 3 {
            change = Some((m, k));
            break;
        }
    }
    let (m, k) = change.expect("independent linear forms extend to a basis");

    // Columns of the inverse matrix: x_i = Σ_j inv[i][j]·v_j with
    // v₀ = s, v₁ = t, v₂ = x_k.
    let mut inverse_columns = Vec::with_capacity(3);
    for j in 0..3 {
        let mut unit = vec![field.zero(), field.zero(), field.zero()];
        unit[j] = field.one();
        inverse_columns.push(m.solve(&unit).expect("the change of basis is invertible"));
    }
    let images: Vec<(usize, Polynomial)> = (0..3)
        .map(|i| {
            let mut image = Polynomial::zero(&ring);
            for j in 0..3 {
                let term = Polynomial::one(&ring)
                    .mul_term(&inverse_columns[j][i], &Monomial::var(3, j));
                image = image.add(&term);
            }
            (i, image)
        })
        .collect();
    let in_section_coords = sc.q().substitute(&images, &ring)?;

    // Bucket the terms by their degree in v₀ = s and v₁ = t.
    let mut f1 = Polynomial::zero(&ring);
    let mut f2 = Polynomial::zero(&ring);
    let mut g2 = Polynomial::zero(&ring);
    for (mono, coeff) in in_section_coords.terms() {
        let (a, b) = (mono.exp(0), mono.exp(1));
        let strip = |s_part: u32, t_part: u32| {
            let stripped = Monomial::new(vec![a - s_part, b - t_part, mono.exp(2)]);
            Polynomial::one(&ring).mul_term(coeff, &stripped)
        };
        if a >= 2 {
            f1 = f1.add(&strip(2, 0));
        } else if a == 1 && b >= 1 {
            f2 = f2.add(&strip(1, 1));
        } else if b >= 2 {
            g2 = g2.sub(&strip(0, 2));
        } else {
            return Err(CaError::NotSingularSection(format!(
                "the term {} of the cubic lies outside the square of the section ideal",
                mono.render(ring.vars())
            )));
        }
    }

    // Return to the original coordinates.
    let back: Vec<(usize, Polynomial)> = vec![
        (0, sc.s().clone()),
        (1, sc.t().clone()),
        (2, Polynomial::one(&ring).mul_term(&field.one(), &Monomial::var(3, k))),
    ];
    let dec = CubicDecomposition {
        f1: f1.substitute(&back, &ring)?,
        f2: f2.substitute(&back, &ring)?,
        g1: Polynomial::zero(&ring),
        g2: g2.substitute(&back, &ring)?,
    };

    let (s, t) = (sc.s(), sc.t());
    let rebuilt = s
        .mul(s)
        .mul(&dec.f1)
        .add(&s.mul(t).mul(&dec.f2.sub(&dec.g1)))
        .sub(&t.mul(t).mul(&dec.g2));
    if rebuilt != *sc.q() {
        return Err(CaError::invalid(
            "internal error: the decomposition does not rebuild the cubic",
        ));
    }
    Ok(dec)
}

/// The 2×2 matrix factorization `M = [[g₁s+g₂t, f₁s+f₂t],[s, t]]` of the
/// cubic; `det(M) = −Q`.
pub fn matrix_factorization(sc: &SingularCubicSection) -> Result<PolyMatrix> {
    let dec = decompose_singular_cubic(sc)?;
    let (s, t) = (sc.s(), sc.t());
    let g = dec.g1.mul(s).add(&dec.g2.mul(t));
    let f = dec.f1.mul(s).add(&dec.f2.mul(t));
    PolyMatrix::from_rows(
        sc.ring(),
        vec![vec![g, f], vec![s.clone(), t.clone()]],
    )
}

/// The space ring `k[x, y, u, w]` obtained from a plane ring `k[x, y, w]`
/// by inserting the extra coordinate `u` in third position.
fn space_ring(plane: &Ring) -> Result<Ring> {
    let names = plane.vars();
    if names.iter().any(|n| n == "u") {
        return Err(CaError::invalid(
            "the plane ring already uses the variable name u",
        ));
    }
    let extended = [
        names[0].as_str(),
        names[1].as_str(),
        "u",
        names[2].as_str(),
    ];
    Ok(RingData::new(&extended, *plane.field()))
}

/// The determinantal space curve attached to the section data: the ideal of
/// 2×2 minors of `[[s, −g₂, u+f₂],[t, u+g₁, −f₁]]` in `k[x, y, u, w]`.
///
/// The curve has Hilbert polynomial `3t+1` and avoids the point
/// `(0:0:1:0)` (adding `(x, y, w)` and saturating gives the unit ideal).
pub fn curve_from_factorization(sc: &SingularCubicSection) -> Result<Ideal> {
    let dec = decompose_singular_cubic(sc)?;
    let space = space_ring(sc.ring())?;
    let lift = |p: &Polynomial| p.inject(&space);
    let u = Polynomial::var_named(&space, "u")?;
    let rows = vec![
        vec![lift(sc.s())?, lift(&dec.g2)?.neg(), u.add(&lift(&dec.f2)?)],
        vec![lift(sc.t())?, u.add(&lift(&dec.g1)?), lift(&dec.f1)?.neg()],
    ];
    let matrix = PolyMatrix::from_rows(&space, rows)?;
    Ideal::new(&space, matrix.minors(2)?)
}

/// Whether the curve ideal avoids the projection center `(0:0:1:0)`:
/// adding the ideal of the point and saturating must give the unit ideal.
pub fn avoids_projection_center(curve: &Ideal) -> Result<bool> {
    let ring = curve.ring();
    let point: Vec<Polynomial> = ring
        .vars()
        .iter()
        .enumerate()
        .filter(|(_, name)| name.as_str() != "u")
        .map(|(i, _)| Polynomial::one(ring).mul_term(&ring.field().one(), &Monomial::var(ring.nvars(), i)))
        .collect();
    let through_point = curve.sum(&Ideal::new(ring, point)?)?;
    Ok(saturate(&through_point, &irrelevant_ideal(ring))?.is_unit_ideal())
}

/// The ring condition: both first-row entries of a 2×2 presentation matrix
/// lie in the given ideal.
pub fn ring_condition_check(presentation: &ModulePresentation, n: &Ideal) -> Result<bool> {
    same_ring(presentation.ring(), n.ring())?;
    if presentation.generator_count() != 2 || presentation.relation_count() != 2 {
        return Err(CaError::ShapeMismatch(format!(
            "the ring condition applies to 2×2 presentations, got {}×{}",
            presentation.generator_count(),
            presentation.relation_count()
        )));
    }
    let matrix = presentation.relation_matrix();
    Ok(n.contains(matrix.get(0, 0)) && n.contains(matrix.get(0, 1)))
}

/// Result of [`roundtrip_check`]: does the space curve project back onto
/// the cubic, and does the section reappear as the annihilator of the
/// quotient module?
#[derive(Debug, Clone)]
pub struct RoundtripReport {
    /// Scheme-theoretic image of the curve under the projection that
    /// forgets `u`, as an ideal of the plane ring.
    pub image: Ideal,
    /// Annihilator of the cokernel of the section inside the pushforward.
    pub annihilator: Ideal,
    pub image_matches_q: bool,
    pub section_matches_annihilator: bool,
}

/// Run the section → curve → plane pipeline and compare both ends.
///
/// Builds the space curve, eliminates `u` and saturates to get the image
/// (which must be the principal ideal `(Q)`), then presents the quotient of
/// the pushforward by the structure section and compares its annihilator
/// with `(s, t)`.
pub fn roundtrip_check(sc: &SingularCubicSection) -> Result<RoundtripReport> {
    let plane = sc.ring().clone();
    let curve = curve_from_factorization(sc)?;
    let space = curve.ring().clone();
    let u_index = space.var_index("u").expect("the space ring carries u");

    let image_in_space = crate::idealops::eliminate(&curve, &[u_index])?;
    let image = saturate(
        &image_in_space.restrict(&plane)?,
        &irrelevant_ideal(&plane),
    )?;
    let principal = Ideal::new(&plane, vec![sc.q().clone()])?;
    let image_matches_q = ideal_equal(&image, &principal)?;

    // The pushforward is generated by 1 and u with relation matrix
    // [[g, f],[s, t]]; quotienting by the section adds the column (1, 0).
    let factorization = matrix_factorization(sc)?;
    let quotient_matrix = PolyMatrix::from_rows(
        &plane,
        vec![
            vec![
                factorization.get(0, 0).clone(),
                factorization.get(0, 1).clone(),
                Polynomial::one(&plane),
            ],
            vec![sc.s().clone(), sc.t().clone(), Polynomial::zero(&plane)],
        ],
    )?;
    let skyscraper = ModulePresentation::ungraded(&plane, quotient_matrix)?;
    let ann = annihilator(&skyscraper)?;
    let section_ideal = Ideal::new(&plane, vec![sc.s().clone(), sc.t().clone()])?;
    let section_matches_annihilator = ideal_equal(&ann, &section_ideal)?;

    Ok(RoundtripReport {
        image,
        annihilator: ann,
        image_matches_q,
        section_matches_annihilator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealops::{hilbert, DEFAULT_TABLE_DEPTH};
    use crate::polyring::{parse_polynomial, CoefficientField};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: CoefficientField = CoefficientField::Rationals;

    fn plane(field: CoefficientField) -> Ring {
        RingData::new(&["x", "y", "w"], field)
    }

    fn section(ring: &Ring, q: &str, s: &str, t: &str) -> SingularCubicSection {
        SingularCubicSection::new(
            parse_polynomial(ring, q).unwrap(),
            parse_polynomial(ring, s).unwrap(),
            parse_polynomial(ring, t).unwrap(),
        )
        .unwrap()
    }

    fn poly(ring: &Ring, src: &str) -> Polynomial {
        parse_polynomial(ring, src).unwrap()
    }

    #[test]
    fn construction_rejects_bad_data() {
        let ring = plane(Q);
        let x = poly(&ring, "x");
        let y = poly(&ring, "y");
        let cubic = poly(&ring, "x^3");
        // Dependent section forms.
        assert!(SingularCubicSection::new(cubic.clone(), x.clone(), x.clone()).is_err());
        // Non-cubic first argument.
        assert!(SingularCubicSection::new(x.clone(), x.clone(), y.clone()).is_err());
        // Non-linear section form.
        assert!(SingularCubicSection::new(cubic.clone(), poly(&ring, "x^2"), y.clone()).is_err());
        // Wrong ring shape.
        let big = RingData::new(&["x", "y", "z", "w"], Q);
        assert!(SingularCubicSection::new(
            poly(&big, "x^3"),
            poly(&big, "x"),
            poly(&big, "y")
        )
        .is_err());
    }

    #[test]
    fn decomposition_of_the_cuspidal_cubic() {
        let ring = plane(Q);
        let sc = section(&ring, "x^3", "x", "y");
        let dec = decompose_singular_cubic(&sc).unwrap();
        assert_eq!(dec.f1, poly(&ring, "x"));
        assert!(dec.f2.is_zero() && dec.g1.is_zero() && dec.g2.is_zero());
    }

    #[test]
    fn decomposition_of_a_single_s2_term() {
        let ring = plane(Q);
        let sc = section(&ring, "x^2*w", "x", "y");
        let dec = decompose_singular_cubic(&sc).unwrap();
        assert_eq!(dec.f1, poly(&ring, "w"));
        assert!(dec.f2.is_zero() && dec.g1.is_zero() && dec.g2.is_zero());
    }

    #[test]
    fn decomposition_of_the_nodal_cubic() {
        let ring = plane(Q);
        let sc = section(&ring, "w*(y^2 - x^2) - x^3", "x", "y");
        let dec = decompose_singular_cubic(&sc).unwrap();
        assert_eq!(dec.f1, poly(&ring, "-(w + x)"));
        assert_eq!(dec.g2, poly(&ring, "-w"));
        assert!(dec.f2.is_zero() && dec.g1.is_zero());
    }

    #[test]
    fn nonsingular_section_is_rejected() {
        let ring = plane(Q);
        let sc = section(&ring, "y^3 + x*w^2", "x", "y");
        let err = decompose_singular_cubic(&sc).unwrap_err();
        assert!(matches!(err, CaError::NotSingularSection(_)), "{err}");
    }

    #[test]
    fn general_section_forms_decompose_too() {
        let ring = plane(Q);
        // Singular along V(x+y, y−w): take Q = (x+y)²·x + (x+y)(y−w)·w − (y−w)²·y.
        let s = poly(&ring, "x + y");
        let t = poly(&ring, "y - w");
        let q = s
            .mul(&s)
            .mul(&poly(&ring, "x"))
            .add(&s.mul(&t).mul(&poly(&ring, "w")))
            .sub(&t.mul(&t).mul(&poly(&ring, "y")));
        let sc = SingularCubicSection::new(q.clone(), s.clone(), t.clone()).unwrap();
        let dec = decompose_singular_cubic(&sc).unwrap();
        let rebuilt = s
            .mul(&s)
            .mul(&dec.f1)
            .add(&s.mul(&t).mul(&dec.f2.sub(&dec.g1)))
            .sub(&t.mul(&t).mul(&dec.g2));
        assert_eq!(rebuilt, q);
    }

    #[test]
    fn factorization_of_the_cuspidal_cubic() {
        let ring = plane(Q);
        let sc = section(&ring, "x^3", "x", "y");
        let m = matrix_factorization(&sc).unwrap();
        let expected = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![poly(&ring, "0"), poly(&ring, "x^2")],
                vec![poly(&ring, "x"), poly(&ring, "y")],
            ],
        )
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.det().unwrap(), poly(&ring, "-x^3"));
    }

    #[test]
    fn factorization_of_x2w() {
        let ring = plane(Q);
        let sc = section(&ring, "x^2*w", "x", "y");
        let m = matrix_factorization(&sc).unwrap();
        let expected = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![poly(&ring, "0"), poly(&ring, "x*w")],
                vec![poly(&ring, "x"), poly(&ring, "y")],
            ],
        )
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.det().unwrap(), poly(&ring, "-x^2*w"));
    }

    fn random_section(ring: &Ring, rng: &mut ChaCha8Rng) -> SingularCubicSection {
        let field = ring.field();
        let p = field.characteristic();
        loop {
            let linear = |rng: &mut ChaCha8Rng| {
                let mut form = Polynomial::zero(ring);
                for i in 0..3 {
                    let c = field.from_u64(rng.gen_range(0..p));
                    form = form.add(&Polynomial::one(ring).mul_term(&c, &Monomial::var(3, i)));
                }
                form
            };
            let (s, t) = (linear(rng), linear(rng));
            let (f1, phi, g2) = (linear(rng), linear(rng), linear(rng));
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

    #[test]
    fn random_factorizations_have_determinant_minus_q() {
        let ring = plane(CoefficientField::Prime(32003));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let sc = random_section(&ring, &mut rng);
            let m = matrix_factorization(&sc).unwrap();
            assert_eq!(m.det().unwrap(), sc.q().neg());
        }
    }

    #[test]
    fn curve_of_the_negated_cuspidal_cubic_is_the_degenerate_cubic() {
        let ring = plane(Q);
        let sc = section(&ring, "-x^3", "x", "y");
        let curve = curve_from_factorization(&sc).unwrap();
        let space = curve.ring();
        let expected = Ideal::new(
            space,
            vec![
                poly(space, "u^2"),
                poly(space, "u*y - x^2"),
                poly(space, "x*u"),
            ],
        )
        .unwrap();
        assert!(ideal_equal(&curve, &expected).unwrap());
    }

    #[test]
    fn curve_of_the_cuspidal_cubic_is_a_coordinate_twin() {
        let ring = plane(Q);
        let sc = section(&ring, "x^3", "x", "y");
        let curve = curve_from_factorization(&sc).unwrap();
        let space = curve.ring();
        // The sign convention of the minors lands on the twin with u ↦ −u.
        let expected = Ideal::new(
            space,
            vec![
                poly(space, "u^2"),
                poly(space, "u*y + x^2"),
                poly(space, "x*u"),
            ],
        )
        .unwrap();
        assert!(ideal_equal(&curve, &expected).unwrap());
        let h = hilbert(&curve, DEFAULT_TABLE_DEPTH).unwrap();
        assert!(h.polynomial_is(&[1, 3]));
    }

    #[test]
    fn curves_avoid_the_projection_center() {
        let ring = plane(Q);
        for q in ["x^3", "-x^3", "w*(y^2 - x^2) - x^3"] {
            let sc = section(&ring, q, "x", "y");
            let curve = curve_from_factorization(&sc).unwrap();
            assert!(avoids_projection_center(&curve).unwrap(), "cubic {q}");
        }
    }

    #[test]
    fn random_curves_have_the_twisted_cubic_hilbert_polynomial() {
        let ring = plane(CoefficientField::Prime(32003));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let sc = random_section(&ring, &mut rng);
            let curve = curve_from_factorization(&sc).unwrap();
            let h = hilbert(&curve, DEFAULT_TABLE_DEPTH).unwrap();
            assert!(h.polynomial_is(&[1, 3]), "got {}", h.render_polynomial());
        }
    }

    #[test]
    fn ring_condition_examples() {
        let ring = plane(Q);
        let n = Ideal::new(&ring, vec![poly(&ring, "x"), poly(&ring, "y")]).unwrap();
        let check = |entries: [&str; 2]| {
            let matrix = PolyMatrix::from_rows(
                &ring,
                vec![
                    vec![poly(&ring, entries[0]), poly(&ring, entries[1])],
                    vec![poly(&ring, "x"), poly(&ring, "y")],
                ],
            )
            .unwrap();
            let pres = ModulePresentation::ungraded(&ring, matrix).unwrap();
            ring_condition_check(&pres, &n).unwrap()
        };
        assert!(check(["y^2", "x^2"]));
        assert!(!check(["1", "0"]));
        assert!(check(["0", "0"]));
    }

    #[test]
    fn ring_condition_rejects_wrong_shapes() {
        let ring = plane(Q);
        let n = Ideal::new(&ring, vec![poly(&ring, "x")]).unwrap();
        let wide = PolyMatrix::from_rows(
            &ring,
            vec![vec![poly(&ring, "x"), poly(&ring, "y"), poly(&ring, "w")]],
        )
        .unwrap();
        let pres = ModulePresentation::ungraded(&ring, wide).unwrap();
        assert!(matches!(
            ring_condition_check(&pres, &n),
            Err(CaError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn roundtrip_on_the_cuspidal_cubic() {
        let ring = plane(Q);
        let sc = section(&ring, "x^3", "x", "y");
        let report = roundtrip_check(&sc).unwrap();
        assert!(report.image_matches_q);
        assert!(report.section_matches_annihilator);
    }

    #[test]
    fn roundtrip_on_a_general_section() {
        let ring = plane(Q);
        let s = poly(&ring, "x + y");
        let t = poly(&ring, "y - w");
        let q = s
            .mul(&s)
            .mul(&poly(&ring, "x"))
            .add(&s.mul(&t).mul(&poly(&ring, "w")))
            .sub(&t.mul(&t).mul(&poly(&ring, "y")));
        let sc = SingularCubicSection::new(q, s, t).unwrap();
        let report = roundtrip_check(&sc).unwrap();
        assert!(report.image_matches_q);
        assert!(report.section_matches_annihilator);
        let pres = ModulePresentation::ungraded(&ring, matrix_factorization(&sc).unwrap()).unwrap();
        let n = Ideal::new(&ring, vec![sc.s().clone(), sc.t().clone()]).unwrap();
        assert!(ring_condition_check(&pres, &n).unwrap());
    }
}
