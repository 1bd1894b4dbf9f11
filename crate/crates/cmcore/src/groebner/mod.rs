//! Buchberger's algorithm, reduced Gröbner bases, multivariate division,
//! and ideal membership — including a brute-force linear-algebra membership
//! oracle used to cross-check division results in tests.
//!
//! Bases are always reduced: monic, auto-reduced (no term of any element is
//! divisible by the leading monomial of another), and sorted ascending by
//! leading monomial, which makes them unique for a fixed order and hence
//! directly comparable.

pub mod module;

pub use module::{
    apply_combination, module_buchberger, module_contains, module_contains_modulo, module_equal,
    module_equal_modulo, module_normal_form, module_reduce_basis, syzygies, syzygies_modulo,
    FreeModuleVector, ModuleOrder,
};

use crate::polyring::{
    monomials_of_degree, same_ring, CMatrix, Coeff, Monomial, MonomialOrder, Polynomial, Ring,
};
use crate::Result;
use std::collections::HashMap;
use std::sync::OnceLock;

/// Remainder of full multivariate division of `f` by `basis` under the
/// ring's order: no term of the result is divisible by any leading monomial
/// of `basis`, and `f - result` lies in the ideal generated by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = *f.field();
    // Precompute leading data; zero divisors are skipped.
    let leads: Vec<(usize, &Monomial, &Coeff)> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.lt().map(|(m, c)| (i, m, c)))
        .collect();
    let mut h = f.clone();
    let mut tail: Vec<(Monomial, Coeff)> = Vec::new();
    'outer: while let Some((hm, hc)) = h.lt() {
        for (i, gm, gc) in &leads {
            if gm.divides(hm) {
                let m = gm.quotient_into(hm);
                let c = field.neg(&field.div(hc, gc).expect("nonzero leading coefficient"));
                h = h.add_scaled_shifted(&basis[*i], &c, &m);
                continue 'outer;
            }
        }
        // Irreducible leading term: it is part of the normal form.
        tail.push((hm.clone(), hc.clone()));
        h = h.without_leading();
    }
    Polynomial::from_terms(&ring, tail)
}

/// The S-polynomial of `f` and `g` (both nonzero).
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = *f.field();
    let (fm, fc) = f.lt().expect("nonzero");
    let (gm, gc) = g.lt().expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(
        &field.inv(fc).expect("unit leading coefficient"),
        &fm.quotient_into(&lcm),
    );
    let b = g.mul_term(
        &field.inv(gc).expect("unit leading coefficient"),
        &gm.quotient_into(&lcm),
    );
    a.sub(&b)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, deterministic tie-break) and the coprimality and chain
/// criteria. Returns the reduced basis.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let ring = basis[0].ring().clone();
    let order = ring.order().clone();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: minimal lcm degree, then minimal lcm in the
        // order, then lowest indices — fully deterministic.
        let mut best = 0;
        let mut best_key: Option<(u32, Monomial, usize, usize)> = None;
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let lcm = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
            let key = (lcm.degree(), lcm, i, j);
            let better = match &best_key {
                None => true,
                Some(bk) => {
                    key.0 < bk.0
                        || (key.0 == bk.0
                            && (order.cmp(&key.1, &bk.1) == std::cmp::Ordering::Less
                                || (key.1 == bk.1 && (key.2, key.3) < (bk.2, bk.3))))
                }
            };
            if better {
                best = idx;
                best_key = Some(key);
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let mi = basis[i].lm().unwrap();
        let mj = basis[j].lm().unwrap();
        let lcm = mi.lcm(mj);
        // Coprimality (product) criterion: S(f,g) reduces to zero when the
        // leading monomials are coprime.
        if mi.is_coprime_with(mj) {
            continue;
        }
        // Chain criterion: skip when some third element divides the lcm and
        // both connecting pairs have already been treated.
        let chain = basis.iter().enumerate().any(|(k, gk)| {
            k != i
                && k != j
                && gk.lm().unwrap().divides(&lcm)
                && !pairs.contains(&pair_key(i, k))
                && !pairs.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(r.monic());
            for t in 0..new_idx {
                pairs.push((t, new_idx));
            }
        }
    }
    reduce_basis(basis)
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and auto-reduces a Gröbner basis: drops elements whose
/// leading monomial is divisible by another's, fully tail-reduces each
/// survivor against the others, normalizes to monic, and sorts ascending
/// by leading monomial.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    if basis.is_empty() {
        return basis;
    }
    let order = basis[0].ring().order().clone();

    // Minimalize: keep an element only if no other kept/later element has a
    // leading monomial properly dividing (or equal at an earlier index to) its own.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let mi = basis[i].lm().unwrap();
            let mj = basis[j].lm().unwrap();
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // Inter-reduce to a fixed point (each element fully reduced by the rest).
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let g = minimal[i].clone();
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let r = normal_form(&g, &others).monic();
            if r != g {
                changed = true;
                minimal[i] = r;
            }
        }
        minimal.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| order.cmp(a.lm().unwrap(), b.lm().unwrap()));
    minimal
}

#[derive(Debug, Clone)]
struct CachedBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

/// A finitely generated ideal with a lazily computed, cached reduced
/// Gröbner basis. The cache is single-assignment: concurrent callers may
/// duplicate the computation but always observe one consistent result.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: OnceLock<CachedBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(c) = self.cache.get() {
            let _ = cache.set(c.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache,
        }
    }
}

impl PartialEq for Ideal {
    /// Structural equality of the generator lists (not ideal equality; use
    /// [`ideal_equal`] for that).
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.generators == other.generators
    }
}

impl Ideal {
    /// Zero generators are dropped; the empty list is the zero ideal.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            same_ring(g.ring(), ring)?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, cache: OnceLock::new() })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), cache: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
            cache: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis under the ring's own order (cached).
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self
            .cache
            .get_or_init(|| CachedBasis {
                order: self.ring.order().clone(),
                basis: buchberger(&self.generators),
            })
            .basis
    }

    /// Reduced basis under an arbitrary order over the same variables.
    /// Reuses the cache when the order matches; otherwise computes in a
    /// reordered ring and maps back (result terms sorted under `order`'s
    /// ring in the returned polynomials' own ring, which is the reordered
    /// one).
    pub fn groebner_basis_under(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        if let Some(c) = self.cache.get() {
            if c.order == *order {
                return c.basis.clone();
            }
        }
        if *order == *self.ring.order() {
            return self.groebner_basis().to_vec();
        }
        let reordered = self.ring.reordered(order.clone());
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.reorder(&reordered))
            .collect();
        buchberger(&gens)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        Ok(other.generators.iter().all(|g| self.contains(g)))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when every generator is homogeneous (a sufficient certificate
    /// for homogeneity of the ideal).
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner_basis()
            .first()
            .map(|g| g.is_constant() && !g.is_zero())
            .unwrap_or(false)
    }

    /// Sum I + J (concatenated generators).
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product I·J (pairwise generator products).
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Renames generators into a larger ring (cache not carried over).
    pub fn inject(&self, target: &Ring) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.inject(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Restricts generators to a subring; fails if any generator involves a
    /// variable missing from the target.
    pub fn restrict(&self, target: &Ring) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.restrict(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Applies a substitution map to every generator.
    pub fn substitute(
        &self,
        images: &[(usize, Polynomial)],
        target: &Ring,
    ) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute(images, target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Renders the generator list, e.g. for reports.
    pub fn render_generators(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// True exactly when the two ideals are equal as sets, decided by mutual
/// reduction of generators.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    same_ring(a.ring(), b.ring())?;
    Ok(a.contains_ideal(b)? && b.contains_ideal(a)?)
}

/// Brute-force membership oracle: searches for an expression of `f` as a
/// polynomial combination of `gens` with every product bounded by
/// `degree_bound`, by exact linear algebra on monomial coordinates.
///
/// For homogeneous input this is a complete decision procedure once
/// `degree_bound ≥ deg f`; in general a `false` only certifies that no
/// combination exists within the bound.
pub fn oracle_membership(f: &Polynomial, gens: &[Polynomial], degree_bound: u32) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ring = f.ring().clone();
    for g in gens {
        same_ring(g.ring(), &ring)?;
    }
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let deg_f = f.degree().unwrap();
    if deg_f > degree_bound {
        return Ok(false);
    }
    let homogeneous = f.is_homogeneous() && gens.iter().all(|g| g.is_homogeneous());
    let n = ring.nvars();

    // Row space: monomials of the relevant degrees.
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let add_degree = |d: u32, row_of: &mut HashMap<Monomial, usize>| {
        for m in monomials_of_degree(n, d) {
            let next = row_of.len();
            row_of.entry(m).or_insert(next);
        }
    };
    if homogeneous {
        add_degree(deg_f, &mut row_of);
    } else {
        for d in 0..=degree_bound {
            add_degree(d, &mut row_of);
        }
    }

    // Columns: shifted generators m·g with deg(m·g) within scope.
    let mut columns: Vec<Polynomial> = Vec::new();
    for g in &gens {
        let dg = g.degree().unwrap();
        if dg > degree_bound || (homogeneous && dg > deg_f) {
            continue;
        }
        let shifts: Vec<u32> = if homogeneous {
            vec![deg_f - dg]
        } else {
            (0..=(degree_bound - dg)).collect()
        };
        for s in shifts {
            for m in monomials_of_degree(n, s) {
                columns.push(g.mul_term(&ring.field().one(), &m));
            }
        }
    }
    if columns.is_empty() {
        return Ok(false);
    }

    let field = *ring.field();
    let nrows = row_of.len();
    let mut matrix = CMatrix::zero(field, nrows, columns.len());
    for (cidx, col) in columns.iter().enumerate() {
        for (m, c) in col.terms() {
            let r = *row_of.get(m).expect("column term within degree scope");
            matrix.set(r, cidx, c.clone());
        }
    }
    let mut rhs: Vec<Coeff> = (0..nrows).map(|_| field.zero()).collect();
    for (m, c) in f.terms() {
        match row_of.get(m) {
            Some(r) => rhs[*r] = c.clone(),
            None => return Ok(false), // f sticks out of the degree scope
        }
    }
    Ok(matrix.solve(&rhs).is_some())
}

/// Membership decision for homogeneous ideals via the oracle, choosing the
/// complete bound automatically.
pub fn oracle_membership_auto(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let bound = f.degree().unwrap_or(0).max(
        gens.iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0),
    ) + 4;
    oracle_membership(f, gens, bound)
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render_generators())
    }
}
