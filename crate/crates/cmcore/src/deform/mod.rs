//! Deformation calculus: perturbed presentations with candidate
//! obstruction ideals, lifting verification, normal-module generators,
//! and graded tangent-space dimensions.

mod tangent;

pub use tangent::{
    graded_hom_dimension, normal_module_generators, tangent_dimension, tangent_report,
    TangentReport,
};

use crate::groebner::Ideal;
use crate::polyring::{same_ring, PolyMatrix, Polynomial, Ring};
use crate::{CaError, Result};

/// A perturbed presentation: a generator matrix and a relation matrix over
/// a ring enlarged by deformation variables, together with a candidate
/// base-space (obstruction) ideal in those variables and a truncation
/// degree for reporting residues.
///
/// The defining invariant, enforced on construction, is that specializing
/// every deformation variable to zero makes the product of the two
/// matrices vanish identically: the undeformed presentation is exact.
#[derive(Debug, Clone)]
pub struct DeformationSetup {
    base_ring: Ring,
    generator_matrix: PolyMatrix,
    relation_matrix: PolyMatrix,
    obstruction_ideal: Ideal,
    deformation_variables: Vec<usize>,
    truncation_degree: u32,
}

impl DeformationSetup {
    pub fn new(
        generator_matrix: PolyMatrix,
        relation_matrix: PolyMatrix,
        obstruction_ideal: Ideal,
        deformation_variables: &[usize],
        truncation_degree: u32,
    ) -> Result<Self> {
        let base_ring = generator_matrix.ring().clone();
        same_ring(&base_ring, relation_matrix.ring())?;
        same_ring(&base_ring, obstruction_ideal.ring())?;
        if generator_matrix.ncols() != relation_matrix.nrows() {
            return Err(CaError::ShapeMismatch(format!(
                "cannot multiply a {}x{} matrix by a {}x{} matrix",
                generator_matrix.nrows(),
                generator_matrix.ncols(),
                relation_matrix.nrows(),
                relation_matrix.ncols(),
            )));
        }
        let mut deformation_variables = deformation_variables.to_vec();
        deformation_variables.sort_unstable();
        deformation_variables.dedup();
        if let Some(&bad) = deformation_variables
            .iter()
            .find(|&&v| v >= base_ring.nvars())
        {
            return Err(CaError::invalid(format!(
                "deformation variable index {bad} out of range for {}",
                base_ring.describe()
            )));
        }
        let setup = DeformationSetup {
            base_ring,
            generator_matrix,
            relation_matrix,
            obstruction_ideal,
            deformation_variables,
            truncation_degree,
        };
        if !setup.undeformed_product().is_zero() {
            return Err(CaError::InvalidSetup(
                "the product must vanish identically once every deformation variable is set to zero"
                    .into(),
            ));
        }
        Ok(setup)
    }

    pub fn ring(&self) -> &Ring {
        &self.base_ring
    }

    pub fn generator_matrix(&self) -> &PolyMatrix {
        &self.generator_matrix
    }

    pub fn relation_matrix(&self) -> &PolyMatrix {
        &self.relation_matrix
    }

    pub fn obstruction_ideal(&self) -> &Ideal {
        &self.obstruction_ideal
    }

    pub fn deformation_variables(&self) -> &[usize] {
        &self.deformation_variables
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    /// Entry-wise specialization of a matrix at deformation variables = 0.
    fn specialize(&self, m: &PolyMatrix) -> PolyMatrix {
        let zeros: Vec<(usize, Polynomial)> = self
            .deformation_variables
            .iter()
            .map(|&v| (v, Polynomial::zero(&self.base_ring)))
            .collect();
        m.map_entries(|p| {
            p.substitute(&zeros, &self.base_ring)
                .expect("specialization stays in the same ring")
        })
    }

    /// The matrix product with every deformation variable set to zero.
    pub fn undeformed_product(&self) -> PolyMatrix {
        self.specialize(&self.generator_matrix)
            .mul(&self.specialize(&self.relation_matrix))
            .expect("shapes were validated on construction")
    }
}

/// Outcome of a lifting verification.
#[derive(Debug, Clone)]
pub struct LiftReport {
    /// The full product of the perturbed matrices.
    pub product: PolyMatrix,
    /// The product with all terms of deformation-variable degree at least
    /// the truncation degree discarded.
    pub residue: PolyMatrix,
    /// Whether every entry of the full product reduces to zero modulo the
    /// obstruction ideal.
    pub is_zero_mod_obstruction: bool,
}

/// Multiplies the perturbed matrices, reports the residue below the
/// truncation degree, and checks the product against the obstruction
/// ideal. With a zero obstruction ideal the verdict is true exactly when
/// the product vanishes identically.
pub fn lift_check(setup: &DeformationSetup) -> Result<LiftReport> {
    let product = setup.generator_matrix().mul(setup.relation_matrix())?;
    let residue = product.map_entries(|p| {
        p.truncate_in_vars(setup.deformation_variables(), setup.truncation_degree())
    });
    let mut is_zero_mod_obstruction = true;
    for r in 0..product.nrows() {
        for c in 0..product.ncols() {
            if !setup
                .obstruction_ideal()
                .normal_form(product.get(r, c))
                .is_zero()
            {
                is_zero_mod_obstruction = false;
            }
        }
    }
    Ok(LiftReport {
        product,
        residue,
        is_zero_mod_obstruction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, CoefficientField, RingData};

    fn matrix(ring: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        let parsed: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_polynomial(ring, s).unwrap())
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(ring, parsed).unwrap()
    }

    fn ideal(ring: &Ring, srcs: &[&str]) -> Ideal {
        let gens = srcs
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn exact_lift_of_a_koszul_pair() {
        // Perturbing (x, y) and its Koszul relation consistently keeps the
        // product identically zero, so even the zero obstruction accepts.
        let r = RingData::new(&["x", "y", "a", "b"], CoefficientField::Rationals);
        let gens = matrix(&r, &[&["x + a", "y + b"]]);
        let rels = matrix(&r, &[&["y + b"], &["-x - a"]]);
        let setup = DeformationSetup::new(
            gens,
            rels,
            Ideal::zero(&r),
            &[r.var_index("a").unwrap(), r.var_index("b").unwrap()],
            2,
        )
        .unwrap();
        let report = lift_check(&setup).unwrap();
        assert!(report.product.is_zero());
        assert!(report.residue.is_zero());
        assert!(report.is_zero_mod_obstruction);
    }

    #[test]
    fn obstructed_lift_detected_and_excused() {
        // Deforming only the generator leaves a residue a*y, which a zero
        // obstruction rejects and the ideal (a) absorbs.
        let r = RingData::new(&["x", "y", "a"], CoefficientField::Rationals);
        let gens = matrix(&r, &[&["x + a", "y"]]);
        let rels = matrix(&r, &[&["y"], &["-x"]]);
        let a = r.var_index("a").unwrap();

        let strict =
            DeformationSetup::new(gens.clone(), rels.clone(), Ideal::zero(&r), &[a], 2).unwrap();
        let report = lift_check(&strict).unwrap();
        assert!(!report.is_zero_mod_obstruction);
        assert_eq!(report.product.get(0, 0).to_string(), "y*a");
        // Truncating below the a-degree of the residue hides it.
        assert_eq!(report.residue.get(0, 0).to_string(), "y*a");
        let tighter = DeformationSetup::new(gens.clone(), rels.clone(), Ideal::zero(&r), &[a], 1)
            .unwrap();
        assert!(lift_check(&tighter).unwrap().residue.is_zero());

        let excused = DeformationSetup::new(gens, rels, ideal(&r, &["a"]), &[a], 2).unwrap();
        assert!(lift_check(&excused).unwrap().is_zero_mod_obstruction);
    }

    #[test]
    fn constructor_rejects_inexact_undeformed_presentations() {
        let r = RingData::new(&["x", "y", "a"], CoefficientField::Rationals);
        let gens = matrix(&r, &[&["x + a", "y"]]);
        let rels = matrix(&r, &[&["y"], &["-x - 1"]]);
        let err = DeformationSetup::new(gens, rels, Ideal::zero(&r), &[2], 2);
        assert!(matches!(err, Err(CaError::InvalidSetup(_))));

        // Shape mismatch is caught before the exactness check.
        let gens = matrix(&r, &[&["x", "y"]]);
        let rels = matrix(&r, &[&["y"]]);
        assert!(matches!(
            DeformationSetup::new(gens, rels, Ideal::zero(&r), &[2], 2),
            Err(CaError::ShapeMismatch(_))
        ));
    }
}
