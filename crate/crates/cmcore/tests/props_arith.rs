//! Property tests for the polynomial arithmetic layer: ring-homomorphism
//! laws for substitution, the Leibniz rule, the Frobenius identity in small
//! characteristic, and alternating-determinant facts for matrix minors.

use cmcore::polyring::{CoefficientField, Monomial, PolyMatrix, Polynomial, Ring, RingData};
use proptest::prelude::*;

/// Raw term data: exponents (capped small) and an integer coefficient.
type TermData = (u8, u8, u8, i64);

fn term_strategy() -> impl Strategy<Value = TermData> {
    (0u8..3, 0u8..3, 0u8..3, -6i64..7)
}

fn poly_strategy() -> impl Strategy<Value = Vec<TermData>> {
    prop::collection::vec(term_strategy(), 0..6)
}

fn ring(field: CoefficientField) -> Ring {
    RingData::new(&["x", "y", "z"], field)
}

fn build(ring: &Ring, data: &[TermData]) -> Polynomial {
    let field = *ring.field();
    let mut p = Polynomial::zero(ring);
    for &(a, b, c, n) in data {
        let m = Monomial::new(vec![u32::from(a), u32::from(b), u32::from(c)]);
        p = p.add(&Polynomial::monomial(ring, m, field.from_i64(n)));
    }
    p
}

/// The fields the arithmetic laws are exercised over.
fn fields() -> Vec<CoefficientField> {
    vec![
        CoefficientField::Rationals,
        CoefficientField::Prime(2),
        CoefficientField::Prime(5),
        CoefficientField::Prime(32003),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Substituting variables by polynomials is a ring homomorphism:
    /// it commutes with both addition and multiplication.
    #[test]
    fn substitution_is_a_ring_homomorphism(
        f in poly_strategy(),
        g in poly_strategy(),
        im0 in poly_strategy(),
        im1 in poly_strategy(),
    ) {
        for field in fields() {
            let r = ring(field);
            let f = build(&r, &f);
            let g = build(&r, &g);
            let images = vec![(0usize, build(&r, &im0)), (1usize, build(&r, &im1))];

            let phi = |p: &Polynomial| p.substitute(&images, &r).expect("substitution");
            prop_assert_eq!(phi(&f.add(&g)), phi(&f).add(&phi(&g)));
            prop_assert_eq!(phi(&f.mul(&g)), phi(&f).mul(&phi(&g)));
        }
    }

    /// Partial derivatives satisfy the Leibniz product rule in every
    /// characteristic.
    #[test]
    fn derivative_satisfies_leibniz(f in poly_strategy(), g in poly_strategy()) {
        for field in fields() {
            let r = ring(field);
            let f = build(&r, &f);
            let g = build(&r, &g);
            for i in 0..r.nvars() {
                let lhs = f.mul(&g).partial_derivative(i);
                let rhs = f.partial_derivative(i).mul(&g)
                    .add(&f.mul(&g.partial_derivative(i)));
                prop_assert_eq!(lhs, rhs, "variable {}", i);
            }
        }
    }

    /// Over F_p the Frobenius map is additive: (f + g)^p = f^p + g^p.
    #[test]
    fn frobenius_is_additive_in_small_characteristic(
        f in poly_strategy(),
        g in poly_strategy(),
    ) {
        for p in [2u64, 3, 5] {
            let field = CoefficientField::new(p).expect("prime");
            let r = ring(field);
            let f = build(&r, &f);
            let g = build(&r, &g);
            let k = u32::try_from(p).expect("small exponent");
            prop_assert_eq!(f.add(&g).pow(k), f.pow(k).add(&g.pow(k)), "p = {}", p);
        }
    }

    /// A square matrix with two identical columns has determinant zero
    /// (the determinant is the unique maximal minor).
    #[test]
    fn determinant_vanishes_on_repeated_columns(
        entries in prop::collection::vec(poly_strategy(), 9),
        dup in 0usize..3,
        src in 0usize..3,
    ) {
        let r = ring(CoefficientField::Rationals);
        let mut rows: Vec<Vec<Polynomial>> = entries
            .chunks(3)
            .map(|row| row.iter().map(|d| build(&r, d)).collect())
            .collect();
        for row in &mut rows {
            let copy = row[src].clone();
            row[dup] = copy;
        }
        let m = PolyMatrix::from_rows(&r, rows).expect("3x3 matrix");
        if dup != src {
            let dets = m.minors(3).expect("maximal minors");
            prop_assert!(dets.iter().all(Polynomial::is_zero));
        }
    }

    /// Scaling one row of a square matrix scales the determinant by the
    /// same factor (multilinearity in the rows).
    #[test]
    fn determinant_is_multilinear_in_rows(
        entries in prop::collection::vec(poly_strategy(), 4),
        scale in -5i64..6,
        row in 0usize..2,
    ) {
        let r = ring(CoefficientField::Rationals);
        let field = *r.field();
        let c = field.from_i64(scale);
        let base: Vec<Vec<Polynomial>> = entries
            .chunks(2)
            .map(|chunk| chunk.iter().map(|d| build(&r, d)).collect())
            .collect();
        let mut scaled = base.clone();
        for entry in &mut scaled[row] {
            *entry = entry.scale(&c);
        }
        let det = |rows: Vec<Vec<Polynomial>>| -> Polynomial {
            PolyMatrix::from_rows(&r, rows)
                .expect("2x2 matrix")
                .minors(2)
                .expect("determinant")
                .remove(0)
        };
        prop_assert_eq!(det(scaled), det(base).scale(&c));
    }
}
