//! Gröbner bases for submodules of free modules R^r and syzygy
//! computation.
//!
//! Vectors carry their components as plain polynomials; a module term is a
//! (component, monomial) pair. Two orders are provided:
//!
//! * term-over-position ([`ModuleOrder::top`]): ring order on monomials,
//!   ties broken toward the lower component index — the workhorse for
//!   normal forms and module equality;
//! * a position-block order ([`ModuleOrder::block`]): terms in components
//!   below the split dominate all terms above it — the elimination order
//!   used to read syzygies off an augmented module basis.
//!
//! Syzygies of v₁,…,vₘ ∈ R^r are computed from a basis of the module
//! generated by wᵢ = vᵢ ⊕ eᵢ ⊆ R^{r+m} under the block order with split r:
//! basis elements whose first r components vanish have tails that generate
//! the syzygy module exactly.

use crate::polyring::{same_ring, Coeff, Monomial, Polynomial, Ring};
use crate::{CaError, Result};
use std::cmp::Ordering;

/// An element of a free module R^r with optional degree shifts for graded
/// bookkeeping (component i of a homogeneous vector has total degree
/// `degree − shifts[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleVector {
    ring: Ring,
    components: Vec<Polynomial>,
    shifts: Vec<i64>,
}

impl FreeModuleVector {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        let shifts = vec![0; components.len()];
        Self::with_shifts(ring, components, shifts)
    }

    pub fn with_shifts(
        ring: &Ring,
        components: Vec<Polynomial>,
        shifts: Vec<i64>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(CaError::ShapeMismatch("rank must be positive".into()));
        }
        if shifts.len() != components.len() {
            return Err(CaError::ShapeMismatch(format!(
                "{} components but {} shifts",
                components.len(),
                shifts.len()
            )));
        }
        for c in &components {
            same_ring(c.ring(), ring)?;
        }
        Ok(FreeModuleVector { ring: ring.clone(), components, shifts })
    }

    /// The i-th standard basis vector of R^rank.
    pub fn unit(ring: &Ring, rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let components = (0..rank)
            .map(|j| {
                if j == i {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect();
        FreeModuleVector { ring: ring.clone(), components, shifts: vec![0; rank] }
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        let components = (0..rank).map(|_| Polynomial::zero(ring)).collect();
        FreeModuleVector { ring: ring.clone(), components, shifts: vec![0; rank] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combined(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combined(other, |a, b| a.sub(b))
    }

    fn combined<F>(&self, other: &Self, f: F) -> Self
    where
        F: Fn(&Polynomial, &Polynomial) -> Polynomial,
    {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        same_ring(&self.ring, &other.ring).expect("module vectors over one ring");
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect();
        FreeModuleVector {
            ring: self.ring.clone(),
            components,
            shifts: self.shifts.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Self {
        self.map(|p| p.mul_term(c, m))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        self.map(|p| p.mul(f))
    }

    /// `self + c·m·other`, the merge step of module division.
    pub fn add_scaled_shifted(&self, other: &Self, c: &Coeff, m: &Monomial) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add_scaled_shifted(b, c, m))
            .collect();
        FreeModuleVector {
            ring: self.ring.clone(),
            components,
            shifts: self.shifts.clone(),
        }
    }

    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&Polynomial) -> Polynomial,
    {
        FreeModuleVector {
            ring: self.ring.clone(),
            components: self.components.iter().map(f).collect(),
            shifts: self.shifts.clone(),
        }
    }

    /// Leading module term under `order`: the greatest (component,
    /// monomial) over all nonzero components.
    pub fn leading(&self, order: &ModuleOrder) -> Option<(usize, Monomial, Coeff)> {
        let mut best: Option<(usize, Monomial, Coeff)> = None;
        for (i, comp) in self.components.iter().enumerate() {
            let Some((m, c)) = comp.lt() else { continue };
            let replace = match &best {
                None => true,
                Some((bi, bm, _)) => order.cmp((i, m), (*bi, bm)) == Ordering::Greater,
            };
            if replace {
                best = Some((i, m.clone(), c.clone()));
            }
        }
        best
    }

    /// Removes the vector's leading term under `order`.
    fn without_leading(&self, order: &ModuleOrder) -> Self {
        let Some((i, _, _)) = self.leading(order) else {
            return self.clone();
        };
        let mut components = self.components.clone();
        components[i] = components[i].without_leading();
        FreeModuleVector {
            ring: self.ring.clone(),
            components,
            shifts: self.shifts.clone(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, order: &ModuleOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, _, c)) => {
                let inv = self
                    .ring
                    .field()
                    .inv(&c)
                    .expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Truncation to a sub-vector of the first `k` components.
    pub fn take_components(&self, k: usize) -> Result<Self> {
        FreeModuleVector::new(&self.ring, self.components[..k].to_vec())
    }

    /// Maximum total degree over nonzero components, shifted.
    pub fn degree(&self) -> Option<i64> {
        self.components
            .iter()
            .zip(&self.shifts)
            .filter_map(|(c, s)| c.degree().map(|d| d as i64 + s))
            .max()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// A monomial order on free-module terms (component, monomial). Monomials
/// are always compared with the underlying ring's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Term-over-position: ring order on monomials, then lower component
    /// index wins.
    Top { ring: Ring },
    /// Components `< split` strictly dominate components `≥ split`; within
    /// one side, term-over-position.
    Block { ring: Ring, split: usize },
}

impl ModuleOrder {
    pub fn top(ring: &Ring) -> Self {
        ModuleOrder::Top { ring: ring.clone() }
    }

    pub fn block(ring: &Ring, split: usize) -> Self {
        ModuleOrder::Block { ring: ring.clone(), split }
    }

    fn ring(&self) -> &Ring {
        match self {
            ModuleOrder::Top { ring } => ring,
            ModuleOrder::Block { ring, .. } => ring,
        }
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::Top { ring } => ring
                .order()
                .cmp(a.1, b.1)
                .then_with(|| b.0.cmp(&a.0)),
            ModuleOrder::Block { ring, split } => {
                let block = |c: usize| usize::from(c >= *split);
                // Lower block index = more dominant.
                block(b.0)
                    .cmp(&block(a.0))
                    .then_with(|| ring.order().cmp(a.1, b.1))
                    .then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

/// Full module normal form of `v` against `basis` under `order`.
pub fn module_normal_form(
    v: &FreeModuleVector,
    basis: &[FreeModuleVector],
    order: &ModuleOrder,
) -> FreeModuleVector {
    let ring = order.ring().clone();
    let field = *ring.field();
    let leads: Vec<(usize, (usize, Monomial, Coeff))> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.leading(order).map(|l| (i, l)))
        .collect();
    let mut h = v.clone();
    let mut tail = FreeModuleVector::zero(&ring, v.rank());
    tail.shifts = v.shifts.clone();
    'outer: while let Some((hcomp, hm, hc)) = h.leading(order) {
        for (i, (gcomp, gm, gc)) in &leads {
            if *gcomp == hcomp && gm.divides(&hm) {
                let m = gm.quotient_into(&hm);
                let c = field.neg(&field.div(&hc, gc).expect("unit leading coefficient"));
                h = h.add_scaled_shifted(&basis[*i], &c, &m);
                continue 'outer;
            }
        }
        // Move the irreducible leading term to the remainder.
        let mut unit = FreeModuleVector::zero(&ring, v.rank());
        unit.components[hcomp] = Polynomial::monomial(&ring, hm, hc);
        tail = tail.add(&unit);
        h = h.without_leading(order);
    }
    tail
}

fn module_s_vector(
    f: &FreeModuleVector,
    g: &FreeModuleVector,
    order: &ModuleOrder,
) -> Option<FreeModuleVector> {
    let (fc, fm, fl) = f.leading(order)?;
    let (gc, gm, gl) = g.leading(order)?;
    if fc != gc {
        return None; // S-vectors only exist for matching leading components.
    }
    let field = *f.ring().field();
    let lcm = fm.lcm(&gm);
    let a = f.mul_term(&field.inv(&fl).unwrap(), &fm.quotient_into(&lcm));
    let b = g.mul_term(&field.inv(&gl).unwrap(), &gm.quotient_into(&lcm));
    Some(a.sub(&b))
}

/// Buchberger for submodules of a free module. The product criterion is
/// only valid for rank-1 modules (ideals); the chain criterion applies
/// verbatim with matching components.
pub fn module_buchberger(
    gens: &[FreeModuleVector],
    order: &ModuleOrder,
) -> Vec<FreeModuleVector> {
    let mut basis: Vec<FreeModuleVector> = gens
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.monic(order))
        .collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let rank = basis[0].rank();
    let ring_order = order.ring().order().clone();

    let lead = |b: &[FreeModuleVector], i: usize| b[i].leading(order).expect("nonzero");

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let seed_pairs = |pairs: &mut Vec<(usize, usize)>, b: &[FreeModuleVector], j: usize| {
        for i in 0..j {
            if lead(b, i).0 == lead(b, j).0 {
                pairs.push((i, j));
            }
        }
    };
    for j in 1..basis.len() {
        seed_pairs(&mut pairs, &basis, j);
    }

    while !pairs.is_empty() {
        // Normal strategy on the lcm of the leading monomials.
        let mut best = 0;
        let mut best_key: Option<(u32, Monomial, usize, usize)> = None;
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let lcm = lead(&basis, i).1.lcm(&lead(&basis, j).1);
            let key = (lcm.degree(), lcm, i, j);
            let better = match &best_key {
                None => true,
                Some(bk) => {
                    key.0 < bk.0
                        || (key.0 == bk.0
                            && (ring_order.cmp(&key.1, &bk.1) == Ordering::Less
                                || (key.1 == bk.1 && (key.2, key.3) < (bk.2, bk.3))))
                }
            };
            if better {
                best = idx;
                best_key = Some(key);
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let (ci, mi, _) = lead(&basis, i);
        let (_, mj, _) = lead(&basis, j);
        let lcm = mi.lcm(&mj);
        if rank == 1 && mi.is_coprime_with(&mj) {
            continue;
        }
        let chain = basis.iter().enumerate().any(|(k, gk)| {
            if k == i || k == j {
                return false;
            }
            let Some((ck, mk, _)) = gk.leading(order) else {
                return false;
            };
            ck == ci
                && mk.divides(&lcm)
                && !pairs.contains(&super::pair_key(i, k))
                && !pairs.contains(&super::pair_key(j, k))
        });
        if chain {
            continue;
        }

        let Some(s) = module_s_vector(&basis[i], &basis[j], order) else {
            continue;
        };
        let r = module_normal_form(&s, &basis, order);
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(r.monic(order));
            seed_pairs(&mut pairs, &basis, new_idx);
        }
    }
    module_reduce_basis(basis, order)
}

/// Minimal, auto-reduced, monic module basis sorted ascending by leading
/// term.
pub fn module_reduce_basis(
    basis: Vec<FreeModuleVector>,
    order: &ModuleOrder,
) -> Vec<FreeModuleVector> {
    let mut basis: Vec<FreeModuleVector> =
        basis.into_iter().filter(|v| !v.is_zero()).collect();
    if basis.is_empty() {
        return basis;
    }
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ci, mi, _) = basis[i].leading(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (cj, mj, _) = basis[j].leading(order).unwrap();
            if cj == ci && mj.divides(&mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<FreeModuleVector> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let g = minimal[i].clone();
            let others: Vec<FreeModuleVector> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let r = module_normal_form(&g, &others, order).monic(order);
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
    minimal.sort_by(|a, b| {
        let (ca, ma, _) = a.leading(order).unwrap();
        let (cb, mb, _) = b.leading(order).unwrap();
        order.cmp((ca, &ma), (cb, &mb))
    });
    minimal
}

fn check_family(vectors: &[FreeModuleVector]) -> Result<(Ring, usize)> {
    let Some(first) = vectors.first() else {
        return Err(CaError::ShapeMismatch("empty vector family".into()));
    };
    let ring = first.ring().clone();
    let rank = first.rank();
    for v in vectors {
        same_ring(v.ring(), &ring)?;
        if v.rank() != rank {
            return Err(CaError::ShapeMismatch(format!(
                "mixed ranks {} and {}",
                rank,
                v.rank()
            )));
        }
    }
    Ok((ring, rank))
}

/// Generators of the syzygy module of `vectors` = kernel of
/// R^m → R^rank, eⱼ ↦ vⱼ. Every returned s satisfies Σ sⱼ·vⱼ = 0 exactly
/// (asserted in debug builds).
pub fn syzygies(vectors: &[FreeModuleVector]) -> Result<Vec<FreeModuleVector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let (ring, rank) = check_family(vectors)?;
    let m = vectors.len();
    // Augment: wᵢ = vᵢ ⊕ eᵢ in R^{rank+m}.
    let mut augmented = Vec::with_capacity(m);
    for (i, v) in vectors.iter().enumerate() {
        let mut comps = v.components().to_vec();
        for j in 0..m {
            comps.push(if j == i {
                Polynomial::one(&ring)
            } else {
                Polynomial::zero(&ring)
            });
        }
        augmented.push(FreeModuleVector::new(&ring, comps)?);
    }
    let order = ModuleOrder::block(&ring, rank);
    let gb = module_buchberger(&augmented, &order);
    let mut syz = Vec::new();
    for g in &gb {
        if g.components()[..rank].iter().all(|c| c.is_zero()) {
            let tail = FreeModuleVector::new(&ring, g.components()[rank..].to_vec())?;
            debug_assert!(
                apply_combination(&tail, vectors).is_zero(),
                "syzygy fails to annihilate the generators"
            );
            syz.push(tail);
        }
    }
    Ok(syz)
}

/// Σ sⱼ·vⱼ for a coefficient vector s against the family v.
pub fn apply_combination(
    s: &FreeModuleVector,
    vectors: &[FreeModuleVector],
) -> FreeModuleVector {
    assert_eq!(s.rank(), vectors.len());
    let rank = vectors[0].rank();
    let mut acc = FreeModuleVector::zero(s.ring(), rank);
    for (coeff, v) in s.components().iter().zip(vectors) {
        acc = acc.add(&v.mul_poly(coeff));
    }
    acc
}

/// Generators of the kernel of R^m → (R/I)^rank, eⱼ ↦ vⱼ mod I: syzygies
/// of the family augmented with I·eₖ for every component k, projected back
/// to the first m coordinates.
pub fn syzygies_modulo(
    vectors: &[FreeModuleVector],
    ideal_gens: &[Polynomial],
) -> Result<Vec<FreeModuleVector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let (ring, rank) = check_family(vectors)?;
    let m = vectors.len();
    let mut family = vectors.to_vec();
    for f in ideal_gens {
        same_ring(f.ring(), &ring)?;
        if f.is_zero() {
            continue;
        }
        for k in 0..rank {
            family.push(FreeModuleVector::unit(&ring, rank, k).mul_poly(f));
        }
    }
    let full = syzygies(&family)?;
    let mut out = Vec::new();
    for s in &full {
        let head = s.take_components(m)?;
        if !head.is_zero() && !out.contains(&head) {
            out.push(head);
        }
    }
    Ok(out)
}

/// Membership of `v` in the module generated by `gens` (over the ring).
pub fn module_contains(gens: &[FreeModuleVector], v: &FreeModuleVector) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    if gens.is_empty() {
        return Ok(false);
    }
    let (ring, rank) = check_family(gens)?;
    same_ring(v.ring(), &ring)?;
    if v.rank() != rank {
        return Err(CaError::ShapeMismatch("rank mismatch".into()));
    }
    let order = ModuleOrder::top(&ring);
    let gb = module_buchberger(gens, &order);
    Ok(module_normal_form(v, &gb, &order).is_zero())
}

/// Equality of the generated submodules.
pub fn module_equal(a: &[FreeModuleVector], b: &[FreeModuleVector]) -> Result<bool> {
    for v in b {
        if !module_contains(a, v)? {
            return Ok(false);
        }
    }
    for v in a {
        if !module_contains(b, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership modulo an ideal: v ∈ ⟨gens⟩ + I·R^rank.
pub fn module_contains_modulo(
    gens: &[FreeModuleVector],
    ideal_gens: &[Polynomial],
    v: &FreeModuleVector,
) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    let ring = v.ring().clone();
    let rank = v.rank();
    let mut family = gens.to_vec();
    for f in ideal_gens {
        if f.is_zero() {
            continue;
        }
        for k in 0..rank {
            family.push(FreeModuleVector::unit(&ring, rank, k).mul_poly(f));
        }
    }
    module_contains(&family, v)
}

/// Equality of submodules of (R/I)^rank given by generator families.
pub fn module_equal_modulo(
    a: &[FreeModuleVector],
    b: &[FreeModuleVector],
    ideal_gens: &[Polynomial],
) -> Result<bool> {
    for v in b {
        if !module_contains_modulo(a, ideal_gens, v)? {
            return Ok(false);
        }
    }
    for v in a {
        if !module_contains_modulo(b, ideal_gens, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, CoefficientField, RingData};

    fn vec_of(ring: &Ring, comps: &[&str]) -> FreeModuleVector {
        let components = comps
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        FreeModuleVector::new(ring, components).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_x_y() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let fam = vec![vec_of(&r, &["x"]), vec_of(&r, &["y"])];
        let syz = syzygies(&fam).unwrap();
        assert_eq!(syz.len(), 1);
        let expected = vec_of(&r, &["y", "-x"]);
        assert!(module_equal(&syz, &[expected]).unwrap());
    }

    #[test]
    fn nonzerodivisor_has_no_syzygy() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let fam = vec![vec_of(&r, &["x^2 + y^2"])];
        assert!(syzygies(&fam).unwrap().is_empty());
    }

    #[test]
    fn syzygies_annihilate_generators() {
        let r = RingData::new(&["x", "y", "u", "w"], CoefficientField::Rationals);
        // Three vectors in R^2 with genuine relations.
        let fam = vec![
            vec_of(&r, &["x", "y"]),
            vec_of(&r, &["y", "x"]),
            vec_of(&r, &["x + y", "x + y"]),
        ];
        let syz = syzygies(&fam).unwrap();
        assert!(!syz.is_empty());
        for s in &syz {
            assert!(apply_combination(s, &fam).is_zero());
        }
    }

    #[test]
    fn syzygy_modulo_unit_ideal_is_everything() {
        let r = RingData::new(&["x"], CoefficientField::Rationals);
        let fam = vec![vec_of(&r, &["x^2"])];
        let one = vec![parse_polynomial(&r, "1").unwrap()];
        let syz = syzygies_modulo(&fam, &one).unwrap();
        // e_1 itself must be a kernel element mod (1).
        let e1 = FreeModuleVector::unit(&r, 1, 0);
        assert!(module_contains(&syz, &e1).unwrap());
    }

    #[test]
    fn syzygy_of_x_modulo_x() {
        let r = RingData::new(&["x"], CoefficientField::Rationals);
        let fam = vec![vec_of(&r, &["x"])];
        let ideal = vec![parse_polynomial(&r, "x").unwrap()];
        let syz = syzygies_modulo(&fam, &ideal).unwrap();
        let e1 = FreeModuleVector::unit(&r, 1, 0);
        assert!(module_equal(&syz, &[e1]).unwrap());
    }

    #[test]
    fn module_membership_and_reduction() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let gens = vec![vec_of(&r, &["x", "0"]), vec_of(&r, &["0", "y"])];
        assert!(module_contains(&gens, &vec_of(&r, &["x^2", "y^2"])).unwrap());
        assert!(!module_contains(&gens, &vec_of(&r, &["y", "0"])).unwrap());
        assert!(
            module_contains_modulo(&gens, &[parse_polynomial(&r, "y").unwrap()],
                &vec_of(&r, &["y", "0"])).unwrap()
        );
    }

    #[test]
    fn top_and_block_orders_disagree_as_intended() {
        let r = RingData::new(&["x", "y"], CoefficientField::Rationals);
        let top = ModuleOrder::top(&r);
        let block = ModuleOrder::block(&r, 1);
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        // Top: monomial first (x > y), so (1, x) beats (0, y).
        assert_eq!(top.cmp((1, &x), (0, &y)), Ordering::Greater);
        // Block split 1: component 0 dominates regardless of the monomial.
        assert_eq!(block.cmp((1, &x), (0, &y)), Ordering::Less);
        // Ties on the monomial resolve toward the lower component.
        assert_eq!(top.cmp((0, &x), (1, &x)), Ordering::Greater);
    }

    #[test]
    fn relation_matrix_of_degree_three_curve_generators() {
        // The generator vector (zx, zy, z^2, Q) with Q = x^3 (so f = x^2,
        // g = 0) has syzygy module generated by the four columns of its
        // relation matrix.
        let r = RingData::new(&["x", "y", "z", "w"], CoefficientField::Rationals);
        let fam = vec![
            vec_of(&r, &["z*x"]),
            vec_of(&r, &["z*y"]),
            vec_of(&r, &["z^2"]),
            vec_of(&r, &["x^3"]),
        ];
        let syz = syzygies(&fam).unwrap();
        let expected = vec![
            vec_of(&r, &["0", "-z", "y", "0"]),
            vec_of(&r, &["z", "0", "-x", "0"]),
            vec_of(&r, &["-y", "x", "0", "0"]),
            vec_of(&r, &["-x^2", "0", "0", "z"]),
        ];
        for e in &expected {
            assert!(apply_combination(e, &fam).is_zero());
        }
        assert!(module_equal(&syz, &expected).unwrap());
    }
}
