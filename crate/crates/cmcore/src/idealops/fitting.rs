//! Fitting ideals, annihilators, and torsion witnesses of finitely
//! presented graded modules.

use crate::groebner::{syzygies, FreeModuleVector, Ideal};
use crate::idealops::{intersection, quotient_by_element};
use crate::polyring::{same_ring, PolyMatrix, Polynomial, Ring};
use crate::{CaError, Result};

/// A finitely presented module coker(Rᵐᵃᵗ : F_r → F_g), given by a g×r
/// matrix whose columns are relations among the g generators.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePresentation {
    ring: Ring,
    generator_degrees: Vec<i64>,
    relation_matrix: PolyMatrix,
}

impl ModulePresentation {
    pub fn new(
        ring: &Ring,
        generator_degrees: Vec<i64>,
        relation_matrix: PolyMatrix,
    ) -> Result<Self> {
        same_ring(ring, relation_matrix.ring())?;
        if generator_degrees.len() != relation_matrix.nrows() {
            return Err(CaError::ShapeMismatch(format!(
                "{} generator degrees for a matrix with {} rows",
                generator_degrees.len(),
                relation_matrix.nrows()
            )));
        }
        Ok(ModulePresentation {
            ring: ring.clone(),
            generator_degrees,
            relation_matrix,
        })
    }

    /// Presentation with all generators in degree 0.
    pub fn ungraded(ring: &Ring, relation_matrix: PolyMatrix) -> Result<Self> {
        let degs = vec![0; relation_matrix.nrows()];
        ModulePresentation::new(ring, degs, relation_matrix)
    }

    /// The zero module (no generators, no relations).
    pub fn zero_module(ring: &Ring) -> Self {
        ModulePresentation {
            ring: ring.clone(),
            generator_degrees: Vec::new(),
            relation_matrix: PolyMatrix::zero(ring, 0, 0),
        }
    }

    /// Free module of the given rank (no relations).
    pub fn free(ring: &Ring, rank: usize) -> Self {
        ModulePresentation {
            ring: ring.clone(),
            generator_degrees: vec![0; rank],
            relation_matrix: PolyMatrix::zero(ring, rank, 0),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generator_count(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.generator_degrees
    }

    pub fn relation_matrix(&self) -> &PolyMatrix {
        &self.relation_matrix
    }

    pub fn relation_count(&self) -> usize {
        self.relation_matrix.ncols()
    }

    /// Relation columns as free-module vectors carrying the generator
    /// degrees as shifts.
    pub fn relation_columns(&self) -> Vec<FreeModuleVector> {
        (0..self.relation_matrix.ncols())
            .map(|j| {
                FreeModuleVector::with_shifts(
                    &self.ring,
                    self.relation_matrix.column(j),
                    self.generator_degrees.clone(),
                )
                .expect("matrix columns share the presentation ring")
            })
            .collect()
    }

    /// True when every relation column is homogeneous with respect to the
    /// generator degrees.
    pub fn is_graded(&self) -> bool {
        for j in 0..self.relation_matrix.ncols() {
            let mut column_degree: Option<i64> = None;
            for (i, entry) in self.relation_matrix.column(j).iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                if !entry.is_homogeneous() {
                    return false;
                }
                let d = entry.degree().expect("nonzero") as i64 + self.generator_degrees[i];
                match column_degree {
                    None => column_degree = Some(d),
                    Some(existing) if existing == d => {}
                    Some(_) => return false,
                }
            }
        }
        true
    }
}

/// n-th Fitting ideal: the ideal of (g−n)×(g−n) minors of the relation
/// matrix, where g is the generator count. For n ≥ g this is the unit
/// ideal; when the matrix has fewer than g−n columns there are no minors
/// and the ideal is zero.
pub fn fitting_ideal(presentation: &ModulePresentation, n: usize) -> Result<Ideal> {
    let ring = presentation.ring();
    let g = presentation.generator_count();
    if n >= g {
        return Ok(Ideal::unit(ring));
    }
    let k = g - n;
    if k > presentation.relation_matrix.ncols() {
        return Ok(Ideal::zero(ring));
    }
    let minors = presentation.relation_matrix.minors(k)?;
    Ideal::new(ring, minors)
}

/// Annihilator of the presented module: ∩ᵢ (column span : eᵢ), each colon
/// read off the first components of the syzygies of [eᵢ, columns].
pub fn annihilator(presentation: &ModulePresentation) -> Result<Ideal> {
    let ring = presentation.ring();
    let g = presentation.generator_count();
    if g == 0 {
        return Ok(Ideal::unit(ring));
    }
    let columns: Vec<FreeModuleVector> = (0..presentation.relation_matrix.ncols())
        .map(|j| {
            FreeModuleVector::new(ring, presentation.relation_matrix.column(j))
                .expect("matrix columns share the presentation ring")
        })
        .collect();
    let mut result: Option<Ideal> = None;
    for i in 0..g {
        let mut vectors = Vec::with_capacity(columns.len() + 1);
        vectors.push(FreeModuleVector::unit(ring, g, i));
        vectors.extend(columns.iter().cloned());
        let relations = syzygies(&vectors)?;
        let coefficients: Vec<Polynomial> = relations
            .iter()
            .map(|s| s.component(0).clone())
            .collect();
        let colon = Ideal::new(ring, coefficients)?;
        result = Some(match result {
            None => colon,
            Some(acc) => intersection(&acc, &colon)?,
        });
    }
    Ok(result.expect("at least one generator"))
}

/// Generators of (I : v) that do not reduce to zero modulo I. A nonempty
/// result exhibits v-torsion in ring/I; an empty result certifies that the
/// colon adds nothing beyond I itself.
pub fn torsion_witnesses(ideal: &Ideal, variable: &str) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let index = ring
        .var_index(variable)
        .ok_or_else(|| CaError::UnknownVariable(variable.to_string()))?;
    let v = Polynomial::var(ring, index);
    let colon = quotient_by_element(ideal, &v)?;
    let mut witnesses = Vec::new();
    for f in colon.generators() {
        if !ideal.normal_form(f).is_zero() {
            witnesses.push(f.clone());
        }
    }
    Ok(witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
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
    fn fitting_chain_of_chart_presentation() {
        // coker [[z,0,0,-x^2],[0,z,x,y]]: Fitt0 is the degree-three space
        // curve chart ideal, Fitt1 the entry ideal, Fitt2 and beyond unit.
        let r = RingData::new(&["x", "y", "z", "t"], CoefficientField::Rationals);
        let a = matrix(&r, &[&["z", "0", "0", "-x^2"], &["0", "z", "x", "y"]]);
        let p = ModulePresentation::ungraded(&r, a).unwrap();

        let f0 = fitting_ideal(&p, 0).unwrap();
        let expected = ideal(&r, &["z^2", "z*x", "z*y", "x^3"]);
        assert!(ideal_equal(&f0, &expected).unwrap());

        let f1 = fitting_ideal(&p, 1).unwrap();
        assert!(ideal_equal(&f1, &ideal(&r, &["z", "x", "y"])).unwrap());

        assert!(fitting_ideal(&p, 2).unwrap().is_unit_ideal());
        assert!(fitting_ideal(&p, 7).unwrap().is_unit_ideal());

        // Fitt0 annihilates the module.
        let ann = annihilator(&p).unwrap();
        assert!(ann.contains_ideal(&f0).unwrap());
    }

    #[test]
    fn identity_and_thin_matrices() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let id2 = matrix(&r, &[&["1", "0"], &["0", "1"]]);
        let p = ModulePresentation::ungraded(&r, id2).unwrap();
        assert!(fitting_ideal(&p, 0).unwrap().is_unit_ideal());
        assert!(annihilator(&p).unwrap().is_unit_ideal());

        // Two generators, one relation: no 2-minors.
        let thin = matrix(&r, &[&["x"], &["y"]]);
        let q = ModulePresentation::ungraded(&r, thin).unwrap();
        assert!(fitting_ideal(&q, 0).unwrap().is_zero_ideal());
    }

    #[test]
    fn zero_and_free_modules() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let zero = ModulePresentation::zero_module(&r);
        assert!(annihilator(&zero).unwrap().is_unit_ideal());
        assert!(fitting_ideal(&zero, 0).unwrap().is_unit_ideal());

        let free = ModulePresentation::free(&r, 1);
        assert!(annihilator(&free).unwrap().is_zero_ideal());
        assert!(fitting_ideal(&free, 0).unwrap().is_zero_ideal());
        assert!(fitting_ideal(&free, 1).unwrap().is_unit_ideal());
    }

    #[test]
    fn annihilator_of_rank_one_torsion_sheaf() {
        // B = coker [[y^2, x^2],[x, y]] is a rank-one module on the cubic
        // x^3 - y^3 = 0, so its annihilator is exactly that cubic.
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let b = matrix(&r, &[&["y^2", "x^2"], &["x", "y"]]);
        let p = ModulePresentation::ungraded(&r, b).unwrap();
        let ann = annihilator(&p).unwrap();
        assert!(ideal_equal(&ann, &ideal(&r, &["x^3 - y^3"])).unwrap());
    }

    #[test]
    fn annihilator_after_killing_the_unit_generator() {
        // Quotienting B by the submodule generated by e1 leaves a module
        // supported at the origin with annihilator (x, y).
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let m = matrix(&r, &[&["y^2", "x^2", "1"], &["x", "y", "0"]]);
        let p = ModulePresentation::ungraded(&r, m).unwrap();
        let ann = annihilator(&p).unwrap();
        assert!(ideal_equal(&ann, &ideal(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn gradedness_detection() {
        let r = RingData::new(&["x", "y", "z", "t"], CoefficientField::Rationals);
        let a = matrix(&r, &[&["z", "0", "0", "-x^2"], &["0", "z", "x", "y"]]);
        // Column 4 mixes degrees 2 and 1 unless generator degrees differ by 1.
        let flat = ModulePresentation::ungraded(&r, a.clone()).unwrap();
        assert!(!flat.is_graded());
        let shifted = ModulePresentation::new(&r, vec![0, 1], a).unwrap();
        assert!(shifted.is_graded());
    }

    #[test]
    fn torsion_witnesses_basic() {
        let r = RingData::new(&["x", "y", "t"], CoefficientField::Rationals);
        let i = ideal(&r, &["t*x"]);
        let w = torsion_witnesses(&i, "t").unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].to_string(), "x");

        // A prime ideal not containing t has no t-torsion.
        let p = ideal(&r, &["x^2 + y^2 - t^2"]);
        assert!(torsion_witnesses(&p, "t").unwrap().is_empty());

        assert!(matches!(
            torsion_witnesses(&i, "q"),
            Err(CaError::UnknownVariable(_))
        ));
    }
}
