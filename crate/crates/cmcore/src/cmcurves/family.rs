//! Determinantal families of space curves and the two deformation charts
//! used by the verification catalog.
//!
//! The central objects:
//!
//! * a twelve-parameter family of determinantal ideals in `k[x,y,u,w]`
//!   whose zero fiber is the degenerate twisted cubic `(u², uy−x², xu)`;
//! * the deformation chart of the plane cubic with an embedded point,
//!   `(z², zx, zy, x³)`, with its quadratic obstruction ideal;
//! * the deformation chart of the rank-two presentation of the pushforward
//!   sheaf of that curve (the moduli-of-sheaves side of the same point);
//! * a one-parameter projection family of a quintic space curve whose
//!   Fitting ideals detect a failure of flatness.

use crate::deform::DeformationSetup;
use crate::groebner::Ideal;
use crate::idealops::ModulePresentation;
use crate::polyring::{
    parse_polynomial, Coeff, CoefficientField, PolyMatrix, Polynomial, Ring, RingData,
};
use crate::{CaError, Result};

/// Number of parameters of [`twisted_cubic_family`].
pub const TWISTED_CUBIC_PARAMETERS: usize = 12;

/// The 2×3 matrix of the family over an arbitrary ring, given the geometric
/// variables and a parameter lookup (1-based, `a[1]` through `a[12]`).
fn family_matrix(ring: &Ring, param: impl Fn(usize) -> Polynomial) -> Result<PolyMatrix> {
    let var = |name: &str| Polynomial::var_named(ring, name);
    let (x, y, u, w) = (var("x")?, var("y")?, var("u")?, var("w")?);
    let entry = |base: &Polynomial, terms: &[(usize, &Polynomial)]| {
        let mut acc = base.clone();
        for (k, v) in terms {
            acc = acc.add(&param(*k).mul(v));
        }
        acc
    };
    let rows = vec![
        vec![
            entry(&x, &[(2, &w)]),
            entry(&Polynomial::zero(ring), &[(7, &y), (6, &w)]),
            entry(&u, &[(12, &x), (11, &y), (10, &u), (9, &w)]),
        ],
        vec![
            entry(&y, &[(1, &w)]),
            entry(&u, &[(5, &x), (4, &y), (3, &w)]),
            entry(&x, &[(8, &w)]),
        ],
    ];
    PolyMatrix::from_rows(ring, rows)
}

/// The determinantal family of space curves at fixed parameter values.
///
/// Returns the ideal of 2×2 minors of the family matrix in `k[x,y,u,w]`.
/// With all twelve values zero this is exactly `(u², uy−x², xu)`; at
/// generic values the fiber is a twisted cubic, and every fiber has Hilbert
/// polynomial `3t+1`.
pub fn twisted_cubic_family(field: CoefficientField, values: &[Coeff]) -> Result<Ideal> {
    if values.len() != TWISTED_CUBIC_PARAMETERS {
        return Err(CaError::ShapeMismatch(format!(
            "the family takes {TWISTED_CUBIC_PARAMETERS} parameter values, got {}",
            values.len()
        )));
    }
    let ring = RingData::new(&["x", "y", "u", "w"], field);
    let matrix = family_matrix(&ring, |k| Polynomial::constant(&ring, values[k - 1].clone()))?;
    Ideal::new(&ring, matrix.minors(2)?)
}

/// The same family with the twelve parameters left symbolic, as an ideal in
/// `k[x,y,u,w,a1,…,a12]`.
pub fn twisted_cubic_family_symbolic(field: CoefficientField) -> Ideal {
    let names: Vec<String> = ["x", "y", "u", "w"]
        .iter()
        .map(|s| s.to_string())
        .chain((1..=TWISTED_CUBIC_PARAMETERS).map(|k| format!("a{k}")))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = RingData::new(&name_refs, field);
    let matrix = family_matrix(&ring, |k| {
        Polynomial::var_named(&ring, &format!("a{k}")).expect("parameter variable exists")
    })
    .expect("family matrix is well formed");
    Ideal::new(&ring, matrix.minors(2).expect("2x2 minors of a 2x3 matrix"))
        .expect("minors live in the family ring")
}

fn parse_matrix(ring: &Ring, rows: &[&[&str]]) -> PolyMatrix {
    let parsed: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|src| parse_polynomial(ring, src).expect("matrix entry parses"))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(ring, parsed).expect("rows have equal length")
}

fn parse_ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    let parsed = gens
        .iter()
        .map(|src| parse_polynomial(ring, src).expect("generator parses"))
        .collect();
    Ideal::new(ring, parsed).expect("generators live in the ring")
}

fn indices_of(ring: &Ring, names: &[&str]) -> Vec<usize> {
    names
        .iter()
        .map(|n| ring.var_index(n).expect("deformation variable exists"))
        .collect()
}

/// Deformation chart of the plane cubic with an embedded point.
///
/// Chart coordinates `x, y, z` (the affine chart `w = 1`) and eight
/// deformation variables `a3, a6, a8, b12, c13, c14, c15, c16`; the
/// variables `a3` and `a6` stand for whole negative-weight blocks and are
/// treated as atomic. The generator row deforms `(zx, zy, z², x³)`, the
/// relation matrix deforms its Koszul-style relations, and the candidate
/// obstruction ideal is `(b12·c13, b12·c14, b12·c15, b12·c16)`. Truncation
/// degree 3 reports the quadratic residue of the product.
pub fn embedded_cubic_chart_setup(field: CoefficientField) -> DeformationSetup {
    let ring = RingData::new(
        &[
            "x", "y", "z", "a3", "a6", "a8", "b12", "c13", "c14", "c15", "c16",
        ],
        field,
    );
    let generators = parse_matrix(
        &ring,
        &[&[
            "z*x + b12*a3*x - b12*a6*y",
            "z*y - b12*x*(x + a8)",
            "z^2 + c16*z + b12*a3*z - b12^2*a6*(x + a8)",
            "x^3 + a3*x*y - a6*y^2 + a8*x^2 + c13*x + c14*y + c15*z + c15*c16",
        ]],
    );
    let relations = parse_matrix(
        &ring,
        &[
            &["-b12*(x + a8)", "z + c16", "-y", "-x*(x + a8) - c13"],
            &["-z - c16 - b12*a3", "b12*a6", "x", "-c14 - a3*x + a6*y"],
            &["y", "-x", "0", "-c15"],
            &["0", "0", "b12", "z"],
        ],
    );
    let obstruction = parse_ideal(&ring, &["b12*c13", "b12*c14", "b12*c15", "b12*c16"]);
    let defvars = indices_of(&ring, &["a3", "a6", "a8", "b12", "c13", "c14", "c15", "c16"]);
    DeformationSetup::new(generators, relations, obstruction, &defvars, 3)
        .expect("the undeformed product vanishes")
}

/// The residue the chart setup must reproduce, as a 1×4 matrix.
pub fn embedded_cubic_chart_residue(ring: &Ring) -> PolyMatrix {
    parse_matrix(
        ring,
        &[&[
            "b12*c16*x^2",
            "0",
            "b12*c13*x + b12*c14*y + b12*c15*z",
            "b12*c14*x^2",
        ]],
    )
}

/// Deformation chart of the rank-two sheaf presentation at the same point.
///
/// The undeformed presentation is the pair
/// `A = [[z,0,0,−x²],[0,z,x,y]]`, `B = [[0,x²],[−x,−y],[z,0],[0,z]]` with
/// `A·B = 0`; the chart deforms both matrices over the six deformation
/// variables `a3, a6, a8, b12, c13, c14` (again with `a3`, `a6` atomic) and
/// carries the obstruction ideal `(b12·c13, b12·c14)`. Truncation degree 4
/// keeps the full product in the report.
pub fn stable_sheaf_presentation(field: CoefficientField) -> DeformationSetup {
    let ring = RingData::new(
        &["x", "y", "z", "a3", "a6", "a8", "b12", "c13", "c14"],
        field,
    );
    let generators = parse_matrix(
        &ring,
        &[
            &[
                "z",
                "-b12*a6*(x + a8)",
                "a3*x - a6*y + c14",
                "-x*(x + a8) - c13",
            ],
            &["-b12", "z + b12*a3", "x", "y"],
        ],
    );
    let relations = parse_matrix(
        &ring,
        &[
            &["-a3*x + a6*y - c14", "x*(x + a8) + c13"],
            &["-x", "-y"],
            &["z", "b12*(x + a8)"],
            &["b12*a6", "z + b12*a3"],
        ],
    );
    let obstruction = parse_ideal(&ring, &["b12*c13", "b12*c14"]);
    let defvars = indices_of(&ring, &["a3", "a6", "a8", "b12", "c13", "c14"]);
    DeformationSetup::new(generators, relations, obstruction, &defvars, 4)
        .expect("the undeformed product vanishes")
}

/// The exact 2×2 product the sheaf chart must reproduce.
pub fn stable_sheaf_product(ring: &Ring) -> PolyMatrix {
    parse_matrix(
        ring,
        &[
            &[
                "-c13*b12*a6",
                "c14*b12*(x + a8) - c13*b12*a3",
            ],
            &["c14*b12", "-c13*b12"],
        ],
    )
}

/// Graded Fitting-scheme fiber of the sheaf chart on the locus
/// `c13 = c14 = 0`, at scalar values of the remaining parameters.
///
/// Re-homogenizing the chart with `w` (the parameters carry weights
/// `a3, a6, a8 ↦ 1` and `b12 ↦ 0`) turns the generator matrix into a graded
/// presentation with generator degrees `(0, 1)` over `k[x,y,z,w]`; its 0th
/// Fitting ideal defines a curve with Hilbert polynomial `3t+1` for every
/// choice of values.
pub fn stable_sheaf_fitting_fiber(
    field: CoefficientField,
    a3: &Coeff,
    a6: &Coeff,
    a8: &Coeff,
    b12: &Coeff,
) -> Result<Ideal> {
    let ring = RingData::new(&["x", "y", "z", "w"], field);
    let var = |name: &str| Polynomial::var_named(&ring, name).expect("coordinate exists");
    let (x, y, z, w) = (var("x"), var("y"), var("z"), var("w"));
    let scal = |c: &Coeff| Polynomial::constant(&ring, c.clone());
    // x + a8·w, the deformed first coordinate.
    let x_shift = x.add(&scal(a8).mul(&w));
    let rows = vec![
        vec![
            z.clone(),
            scal(b12).mul(&scal(a6)).mul(&w).mul(&x_shift).neg(),
            scal(a3).mul(&w).mul(&x).sub(&scal(a6).mul(&w).mul(&y)),
            x.mul(&x_shift).neg(),
        ],
        vec![
            scal(b12).neg(),
            z.add(&scal(b12).mul(&scal(a3)).mul(&w)),
            x.clone(),
            y.clone(),
        ],
    ];
    let matrix = PolyMatrix::from_rows(&ring, rows)?;
    let presentation = ModulePresentation::new(&ring, vec![0, 1], matrix)?;
    crate::idealops::fitting_ideal(&presentation, 0)
}

/// Chart presentation of the quintic projection family over `k[x,y,z,t]`.
///
/// The source curve is the degree-5 genus-2 curve cut out by the 2×2 minors
/// of `[[x, u, y²+w²],[y, x, u²]]`; the family re-embeds it through
/// `z ↦ t·u` with `t` the family parameter. In the affine chart `w = 1` the
/// pushforward is generated by `1, u, u²` with the displayed 3×6 relation
/// matrix.
pub fn quintic_projection_chart(field: CoefficientField) -> ModulePresentation {
    let ring = RingData::new(&["x", "y", "z", "t"], field);
    let matrix = parse_matrix(
        &ring,
        &[
            &["z", "0", "-t*x*(y^2 + 1)", "0", "x^2", "-y - y^3"],
            &["-t", "z", "0", "x^2", "-y", "0"],
            &["0", "-t", "z", "-y", "0", "x"],
        ],
    );
    ModulePresentation::ungraded(&ring, matrix).expect("chart presentation is well formed")
}

/// The eight generators the chart Fitting ideal must match, in the chart
/// ring of [`quintic_projection_chart`].
pub fn quintic_chart_fitting_generators(ring: &Ring) -> Ideal {
    parse_ideal(
        ring,
        &[
            "z^3 - t^3*x*(y^2 + 1)",
            "z^2*x - t^2*y*(y^2 + 1)",
            "z*x^3 - t*y^2*(y^2 + 1)",
            "x^5 - y^3*(y^2 + 1)",
            "(y*z - t*x^2)*x",
            "(y*z - t*x^2)*y",
            "(y*z - t*x^2)*z",
            "(y*z - t*x^2)*t",
        ],
    )
}

/// The parameter-torsion witness of the quintic family, `yz − tx²`.
pub fn quintic_torsion_witness(ring: &Ring) -> Polynomial {
    parse_polynomial(ring, "y*z - t*x^2").expect("witness parses")
}

/// Graded fiber of the quintic projection family at a scalar value of `t`,
/// as a presentation over `k[x,y,z,w]` with generator degrees `(0, 1, 2)`.
pub fn quintic_projection_fiber(field: CoefficientField, t: &Coeff) -> Result<ModulePresentation> {
    let ring = RingData::new(&["x", "y", "z", "w"], field);
    let var = |name: &str| Polynomial::var_named(&ring, name).expect("coordinate exists");
    let (x, y, z, w) = (var("x"), var("y"), var("z"), var("w"));
    let tt = Polynomial::constant(&ring, t.clone());
    let zero = Polynomial::zero(&ring);
    // y² + w², the binomial the source curve repeats.
    let q = y.mul(&y).add(&w.mul(&w));
    let rows = vec![
        vec![
            z.clone(),
            zero.clone(),
            tt.mul(&x).mul(&q).neg(),
            zero.clone(),
            x.mul(&x),
            y.mul(&q).neg(),
        ],
        vec![
            tt.neg(),
            z.clone(),
            zero.clone(),
            x.mul(&x),
            y.neg(),
            zero.clone(),
        ],
        vec![zero.clone(), tt.neg(), z, y.neg(), zero, x],
    ];
    let matrix = PolyMatrix::from_rows(&ring, rows)?;
    ModulePresentation::new(&ring, vec![0, 1, 2], matrix)
}
