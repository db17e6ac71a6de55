//! Strict closure `R*` of a monomial algebra `R` inside an extension `T`.
//!
//! With `T = R·1 + Σ R·x^{f_i}` and `ε : R^{n+1} → T` the evaluation map,
//! `x^h ∈ R*` exactly when the vector `x^h e_0 - Σ a_i e_i` (for any
//! representation `x^h = Σ a_i x^{f_i}`) lies in the image of `T ⊗ Ker ε`
//! inside `T^{n+1}`. Everything is `Z^d`-graded and every graded piece of
//! `T` is at most one-dimensional, so the test splits into one small exact
//! linear problem per degree `h`:
//!
//! * the kernel of `ε` in degree `g` is the set of rational tuples on
//!   `I(g) = {i : g - deg f_i ∈ S_R}` that sum to zero;
//! * its `T`-multiples reach degree `h` from every `g <= h` with
//!   `h - g ∈ S_T`, and act on coefficient vectors as the identity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{IntRow, RowSpace};
use crate::monomial::{
    check_containment, module_generators_complete, module_generators_in, BoxPoints, DegreeBox,
    ExponentVector, MembershipTable, MonomialAlgebra,
};
use crate::normalization::{group_lattice, normalization};

/// `T` presented as an `R`-module by monomial generators `1, x^{f_1}, …`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    base: MonomialAlgebra,
    extension: MonomialAlgebra,
    module_gens: Vec<ExponentVector>,
    complete: bool,
    domain: DegreeBox,
    base_table: MembershipTable,
    ext_table: MembershipTable,
    /// `I(g)` for every point `g` of the box, indexed like the box.
    supports: Vec<Vec<usize>>,
}

impl ModulePresentation {
    pub fn base(&self) -> &MonomialAlgebra {
        &self.base
    }

    pub fn extension(&self) -> &MonomialAlgebra {
        &self.extension
    }

    /// `f_1, …, f_n` in ascending lexicographic order; `f_0 = 0` is implicit.
    pub fn module_gens(&self) -> &[ExponentVector] {
        &self.module_gens
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn domain(&self) -> &DegreeBox {
        &self.domain
    }

    /// Number of coordinates of `R^{n+1}`, the unit included.
    pub fn rank(&self) -> usize {
        self.module_gens.len() + 1
    }

    /// Degree of the `i`-th module generator, `0` for the unit.
    pub fn degree(&self, i: usize) -> ExponentVector {
        if i == 0 {
            ExponentVector::zero(self.base.dim())
        } else {
            self.module_gens[i - 1].clone()
        }
    }

    pub fn base_table(&self) -> &MembershipTable {
        &self.base_table
    }

    pub fn ext_table(&self) -> &MembershipTable {
        &self.ext_table
    }

    fn index_of(&self, g: &ExponentVector) -> Result<usize> {
        if g.dim() != self.domain.dim() {
            return Err(Error::DimensionMismatch { expected: self.domain.dim(), found: g.dim() });
        }
        self.domain.index(g.coords()).ok_or_else(|| Error::OutsideBox(g.clone()))
    }

    /// `I(g) = {i : g - deg f_i ∈ S_R}`.
    pub fn support_at(&self, g: &ExponentVector) -> Result<&[usize]> {
        Ok(&self.supports[self.index_of(g)?])
    }

    /// `{i : h - deg f_i ∈ S_T}`: coordinates of `T^{n+1}` alive in degree `h`.
    pub fn extension_support_at(&self, h: &ExponentVector) -> Result<Vec<usize>> {
        self.index_of(h)?;
        Ok((0..self.rank())
            .filter(|&i| h.checked_sub(&self.degree(i)).is_some_and(|r| self.ext_table.contains(&r)))
            .collect())
    }
}

/// Presents `T` over `R` by the monomial module generators found in the box.
pub fn present(base: &MonomialAlgebra, ext: &MonomialAlgebra, domain: &DegreeBox) -> Result<ModulePresentation> {
    check_containment(base, ext)?;
    if domain.dim() != base.dim() {
        return Err(Error::DimensionMismatch { expected: base.dim(), found: domain.dim() });
    }
    let base_table = base.table(domain);
    let ext_table = ext.table(domain);
    let module_gens = module_generators_in(base.generators(), &ext_table);
    let complete = module_generators_complete(base, ext, domain, &module_gens);

    let degrees: Vec<ExponentVector> =
        std::iter::once(ExponentVector::zero(base.dim())).chain(module_gens.iter().cloned()).collect();
    let supports = domain
        .points()
        .map(|g| {
            degrees
                .iter()
                .enumerate()
                .filter(|(_, d)| g.checked_sub(d).is_some_and(|r| base_table.contains(&r)))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    Ok(ModulePresentation {
        base: base.clone(),
        extension: ext.clone(),
        module_gens,
        complete,
        domain: domain.clone(),
        base_table,
        ext_table,
        supports,
    })
}

/// A homogeneous element of `R^{n+1}` (or `T^{n+1}`) of degree `g`: entry `i`
/// stands for `coefficient · x^{g - deg f_i} · e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVector {
    pub degree: ExponentVector,
    pub entries: BTreeMap<usize, i64>,
}

impl GradedVector {
    /// Image under `ε`: every entry contributes `coefficient · x^g`.
    pub fn evaluation(&self) -> i64 {
        self.entries.values().sum()
    }

    /// The monomial multiplying `e_i`.
    pub fn monomial(&self, p: &ModulePresentation, i: usize) -> Option<ExponentVector> {
        self.entries.get(&i).and_then(|_| self.degree.checked_sub(&p.degree(i)))
    }
}

/// Basis of `Ker ε` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyBasisAtDegree {
    pub degree: ExponentVector,
    pub basis: Vec<GradedVector>,
}

/// Differences `e_a - e_b` of consecutive members of `I(g)`.
pub fn syzygy_basis_at(p: &ModulePresentation, g: &ExponentVector) -> Result<SyzygyBasisAtDegree> {
    let support = p.support_at(g)?;
    let basis = support
        .windows(2)
        .map(|w| GradedVector { degree: g.clone(), entries: BTreeMap::from([(w[0], 1), (w[1], -1)]) })
        .collect();
    Ok(SyzygyBasisAtDegree { degree: g.clone(), basis })
}

/// A representation `x^h = Σ c_i · x^{h - deg f_i} · x^{f_i}` with
/// `c_i = w_i / Σ w`. Each index must satisfy `h - deg f_i ∈ S_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    weights: Vec<(usize, i64)>,
}

impl Representation {
    pub fn single(index: usize) -> Self {
        Self { weights: vec![(index, 1)] }
    }

    pub fn weighted(weights: Vec<(usize, i64)>) -> Self {
        Self { weights }
    }

    pub fn weights(&self) -> &[(usize, i64)] {
        &self.weights
    }
}

/// Greedy choice: the lexicographically largest `f_i` with `h - f_i ∈ S_R`.
pub fn greedy_representation(p: &ModulePresentation, h: &ExponentVector) -> Result<Representation> {
    p.support_at(h)?
        .last()
        .map(|&i| Representation::single(i))
        .ok_or_else(|| Error::PresentationIncomplete(h.clone()))
}

/// Whether `x^h` lies in the strict closure of `R` in `T`, using the greedy
/// representation of `x^h`.
///
/// The verdict is exact for every `h` in the box; `p.complete()` only speaks
/// about module generators beyond it.
pub fn in_strict_closure(p: &ModulePresentation, h: &ExponentVector) -> Result<bool> {
    check_in_extension(p, h)?;
    if p.base_table.contains(h) {
        return Ok(true);
    }
    let rep = greedy_representation(p, h)?;
    in_strict_closure_with(p, h, &rep)
}

fn check_in_extension(p: &ModulePresentation, h: &ExponentVector) -> Result<()> {
    p.index_of(h)?;
    if !p.ext_table.contains(h) {
        return Err(Error::NotInExtension(h.clone()));
    }
    Ok(())
}

/// Same test with a caller-chosen representation of `x^h`.
pub fn in_strict_closure_with(p: &ModulePresentation, h: &ExponentVector, rep: &Representation) -> Result<bool> {
    check_in_extension(p, h)?;
    let allowed = p.support_at(h)?;
    let total: i64 = rep.weights.iter().map(|(_, w)| w).sum();
    if rep.weights.is_empty() || total == 0 {
        return Err(Error::InvalidInput("representation weights must have nonzero sum".into()));
    }
    if let Some((i, _)) = rep.weights.iter().find(|(i, _)| !allowed.contains(i)) {
        return Err(Error::InvalidInput(format!("index {i} does not represent degree {h}")));
    }

    // target = total · e_0 - Σ w_i e_i, i.e. the representation scaled by Σ w
    let n1 = p.rank();
    let mut target = vec![0i64; n1];
    target[0] = total;
    for &(i, w) in &rep.weights {
        target[i] -= w;
    }
    if target.iter().all(|&t| t == 0) {
        return Ok(true);
    }
    let target: IntRow = target.into_iter().map(BigInt::from).collect();

    let max_rank = p.extension_support_at(h)?.len().saturating_sub(1);
    let h_index = p.index_of(h)?;
    let mut span = RowSpace::new(n1);
    for g in BoxPoints::new(h.clone()) {
        let g_offset = p.domain.offset(g.coords());
        // index(h - g) = index(h) - offset(g) since g <= h
        if !p.ext_table.at(h_index - g_offset) {
            continue;
        }
        let support = &p.supports[g_offset];
        if support.len() < 2 {
            continue;
        }
        let mut grew = false;
        for w in support.windows(2) {
            let mut row = vec![BigInt::from(0); n1];
            row[w[0]] = BigInt::from(1);
            row[w[1]] = BigInt::from(-1);
            grew |= span.insert(row);
        }
        if grew && (span.rank() >= max_rank || span.contains(&target)) {
            return Ok(true);
        }
    }
    Ok(span.contains(&target))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictClosureReport {
    pub closure: MonomialAlgebra,
    /// Degrees of `S_{R*} \ S_R` inside the box, ascending.
    pub new_degrees: Vec<ExponentVector>,
    pub complete: bool,
}

/// Strict closure of `R` in `T` inside the box.
pub fn strict_closure(base: &MonomialAlgebra, ext: &MonomialAlgebra, domain: &DegreeBox) -> Result<StrictClosureReport> {
    check_containment(base, ext)?;
    if group_lattice(base.semigroup())? != group_lattice(ext.semigroup())? {
        return Err(Error::FractionGroupMismatch);
    }
    strict_closure_unchecked(base, ext, domain)
}

fn strict_closure_unchecked(base: &MonomialAlgebra, ext: &MonomialAlgebra, domain: &DegreeBox) -> Result<StrictClosureReport> {
    let p = present(base, ext, domain)?;
    let candidates: Vec<ExponentVector> = p.ext_table.members().filter(|h| !p.base_table.contains(h)).collect();
    let verdicts = candidates
        .par_iter()
        .map(|h| in_strict_closure(&p, h))
        .collect::<Result<Vec<bool>>>()?;
    let new_degrees: Vec<ExponentVector> =
        candidates.into_iter().zip(verdicts).filter(|(_, keep)| *keep).map(|(h, _)| h).collect();

    let mut closed = p.base_table.clone();
    for h in &new_degrees {
        closed.set(h, true);
    }
    // R* is a ring containing R: the found set must be closed under addition
    for h in &new_degrees {
        for other in base.generators().iter().chain(&new_degrees) {
            let sum = h + other;
            if let Some(member) = closed.get(&sum) {
                assert!(member, "strict closure not additively closed at {h} + {other}");
            }
        }
    }
    let closure = MonomialAlgebra::from_generators(
        base.dim(),
        closed.minimal_generators().into_iter().chain(base.generators().iter().cloned()),
    )?;
    Ok(StrictClosureReport { closure, new_degrees, complete: p.complete })
}

/// Verdict of a strict-closedness test inside a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedVerdict {
    StrictlyClosed,
    /// Certified: these degrees lie in `R* \ R`.
    NotStrictlyClosed { new_degrees: Vec<ExponentVector> },
    /// Nothing new was found, but a completeness flag failed.
    Indeterminate,
}

/// Strict closedness of `R` in its normalization.
pub fn is_strictly_closed(r: &MonomialAlgebra, domain: &DegreeBox) -> Result<ClosedVerdict> {
    let (norm, norm_complete) = normalization(r, domain)?;
    // any degree found inside a truncated normalization stays in R* of the full one
    let report = strict_closure_unchecked(r, &norm, domain)?;
    Ok(if !report.new_degrees.is_empty() {
        ClosedVerdict::NotStrictlyClosed { new_degrees: report.new_degrees }
    } else if norm_complete && report.complete {
        ClosedVerdict::StrictlyClosed
    } else {
        ClosedVerdict::Indeterminate
    })
}

fn check_adjoined(r: &MonomialAlgebra, v: &[ExponentVector]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::InvalidInput("the adjoined set must be nonempty".into()));
    }
    for u in v {
        if u.dim() != r.dim() {
            return Err(Error::DimensionMismatch { expected: r.dim(), found: u.dim() });
        }
        if u.is_zero() {
            return Err(Error::InvalidInput("the adjoined set must not contain 0".into()));
        }
    }
    Ok(())
}

/// First pair `(u, v)`, `u <= v` lexicographically, with `u + v ∉ S_R`.
pub fn pairwise_product_violation(r: &MonomialAlgebra, v: &[ExponentVector]) -> Result<Option<(ExponentVector, ExponentVector)>> {
    check_adjoined(r, v)?;
    let mut sorted = v.to_vec();
    sorted.sort();
    sorted.dedup();
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i..] {
            if !r.contains(&(a + b))? {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// `u + v ∈ S_R` for all `u, v ∈ V` (squares included). When true, `R` is
/// strictly closed in `R[V]`.
pub fn criterion_pairwise_products(r: &MonomialAlgebra, v: &[ExponentVector]) -> Result<bool> {
    Ok(pairwise_product_violation(r, v)?.is_none())
}

/// `A[{fg : f, g ∈ V}, {f^3 : f ∈ V}]`: strictly closed, with normalization
/// `A[V]` when `A[V]` is normal.
pub fn build_products_and_cubes(a: &MonomialAlgebra, v: &[ExponentVector]) -> Result<MonomialAlgebra> {
    check_adjoined(a, v)?;
    let mut extra = Vec::new();
    for (i, f) in v.iter().enumerate() {
        for g in &v[i..] {
            extra.push(f + g);
        }
        extra.push(f.scaled(3));
    }
    a.adjoin(extra)
}

/// Rees algebra `k[x_1..x_d][I t]` of a monomial ideal, in `d + 1` variables.
pub fn rees_algebra(d: usize, ideal_gens: &[ExponentVector]) -> Result<MonomialAlgebra> {
    if ideal_gens.is_empty() {
        return Err(Error::InvalidInput("the ideal must have at least one generator".into()));
    }
    if let Some(g) = ideal_gens.iter().find(|g| g.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: g.dim() });
    }
    let units = (0..d).map(|i| ExponentVector::unit(d, i).extended(0));
    let lifted = ideal_gens.iter().map(|g| g.extended(1));
    MonomialAlgebra::from_generators(d + 1, units.chain(lifted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(c: [u32; N]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn alg(d: usize, rows: &[&[u32]]) -> MonomialAlgebra {
        MonomialAlgebra::from_rows(d, rows).unwrap()
    }

    fn r526() -> MonomialAlgebra {
        alg(2, &[&[5, 0], &[1, 4], &[0, 5]])
    }

    fn r526_bar() -> MonomialAlgebra {
        alg(2, &[&[5, 0], &[4, 1], &[3, 2], &[2, 3], &[1, 4], &[0, 5]])
    }

    /// The intermediate ring between R and its normalization.
    fn t_mid() -> MonomialAlgebra {
        alg(2, &[&[5, 0], &[13, 7], &[9, 6], &[4, 11], &[1, 4], &[0, 5]])
    }

    /// Union-find oracle: `e_0 - e_j` is in the span of the differences over
    /// all `I(g)` exactly when `0` and `j` are connected.
    fn connectivity_oracle(p: &ModulePresentation, h: &ExponentVector, j: usize) -> bool {
        let n1 = p.rank();
        let mut parent: Vec<usize> = (0..n1).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                x = parent[x];
            }
            x
        }
        for g in p.domain().points().filter(|g| g.is_below(h)) {
            if !p.ext_table().contains(&h.checked_sub(&g).unwrap()) {
                continue;
            }
            let support = p.support_at(&g).unwrap().to_vec();
            for w in support.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        find(&mut parent, 0) == find(&mut parent, j)
    }

    #[test]
    fn present_examples() {
        let b = DegreeBox::cube(2, 24).unwrap();
        let p = present(&r526(), &r526_bar(), &b).unwrap();
        assert_eq!(p.module_gens(), &[ev([2, 3]), ev([3, 2]), ev([4, 1])]);
        assert!(p.complete());
        assert!(present(&r526(), &r526(), &b).unwrap().module_gens().is_empty());

        let r = alg(2, &[&[3, 0], &[1, 2], &[0, 3]]);
        let t = r.adjoin([ev([2, 1])]).unwrap();
        let p = present(&r, &t, &DegreeBox::cube(2, 12).unwrap()).unwrap();
        assert_eq!(p.module_gens(), &[ev([2, 1])]);
    }

    #[test]
    fn syzygy_basis_examples() {
        // T-presentation of the normalization with generators X^4Y, X^3Y^2, X^2Y^3
        let b = DegreeBox::cube(2, 24).unwrap();
        let p = present(&t_mid(), &r526_bar(), &b).unwrap();
        assert_eq!(p.module_gens(), &[ev([2, 3]), ev([3, 2]), ev([4, 1])]);
        let s = syzygy_basis_at(&p, &ev([5, 5])).unwrap();
        assert_eq!(s.basis.len(), 1);
        let v = &s.basis[0];
        // (X^5Y^5, -XY^4, 0, 0): the unit entry carries X^5Y^5, the X^4Y entry XY^4
        assert_eq!(v.evaluation(), 0);
        assert_eq!(v.monomial(&p, 0), Some(ev([5, 5])));
        assert_eq!(v.monomial(&p, 3), Some(ev([1, 4])));
        assert_eq!(v.entries.len(), 2);

        assert!(syzygy_basis_at(&p, &ev([0, 0])).unwrap().basis.is_empty());

        let r = alg(2, &[&[2, 0], &[1, 1], &[0, 2], &[3, 0], &[0, 3]]);
        let p = present(&r, &MonomialAlgebra::polynomial_ring(2), &DegreeBox::cube(2, 8).unwrap()).unwrap();
        assert_eq!(p.module_gens(), &[ev([0, 1]), ev([1, 0])]);
        // X^2Y is not in R, so the unit drops out of the support
        assert_eq!(p.support_at(&ev([2, 1])).unwrap(), &[1, 2]);
        assert_eq!(syzygy_basis_at(&p, &ev([2, 1])).unwrap().basis.len(), 1);
        assert_eq!(p.support_at(&ev([3, 1])).unwrap(), &[0, 1]);
    }

    #[test]
    fn in_strict_closure_examples() {
        let b = DegreeBox::cube(2, 24).unwrap();
        let p = present(&t_mid(), &r526_bar(), &b).unwrap();
        assert!(in_strict_closure(&p, &ev([8, 7])).unwrap());
        assert!(in_strict_closure(&p, &ev([5, 0])).unwrap());

        let p = present(&r526(), &r526_bar(), &b).unwrap();
        assert!(!in_strict_closure(&p, &ev([4, 1])).unwrap());
        assert!(in_strict_closure(&p, &ev([9, 6])).unwrap());
        assert!(matches!(in_strict_closure(&p, &ev([1, 1])), Err(Error::NotInExtension(_))));
        assert!(matches!(in_strict_closure(&p, &ev([30, 1])), Err(Error::OutsideBox(_))));
    }

    #[test]
    fn linear_solve_matches_connectivity() {
        let b = DegreeBox::cube(2, 16).unwrap();
        for (r, t) in [(r526(), r526_bar()), (t_mid(), r526_bar())] {
            let p = present(&r, &t, &b).unwrap();
            for h in p.ext_table().members() {
                for &j in p.support_at(&h).unwrap() {
                    let rep = Representation::single(j);
                    assert_eq!(
                        in_strict_closure_with(&p, &h, &rep).unwrap(),
                        connectivity_oracle(&p, &h, j),
                        "{h} via index {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn five_four_closure_and_intermediate_agree() {
        let b = DegreeBox::cube(2, 24).unwrap();
        let expected = vec![ev([0, 5]), ev([1, 4]), ev([4, 11]), ev([5, 0]), ev([8, 7]), ev([9, 6])];
        let rep = strict_closure(&r526(), &r526_bar(), &b).unwrap();
        assert_eq!(rep.closure.generators(), expected.as_slice());
        assert!(rep.complete);
        let mid = strict_closure(&t_mid(), &r526_bar(), &b).unwrap();
        assert_eq!(mid.closure, rep.closure);
    }

    #[test]
    fn closure_is_idempotent_and_trivial_cases() {
        let b = DegreeBox::cube(2, 20).unwrap();
        let rep = strict_closure(&r526(), &r526_bar(), &b).unwrap();
        let again = strict_closure(&rep.closure, &r526_bar(), &b).unwrap();
        assert!(again.new_degrees.is_empty());
        assert!(strict_closure(&r526(), &r526(), &b).unwrap().new_degrees.is_empty());
    }

    #[test]
    fn fraction_group_mismatch_is_rejected() {
        let r = alg(2, &[&[2, 0], &[0, 2]]);
        let t = MonomialAlgebra::polynomial_ring(2);
        let b = DegreeBox::cube(2, 6).unwrap();
        assert_eq!(strict_closure(&r, &t, &b), Err(Error::FractionGroupMismatch));
    }

    #[test]
    fn is_strictly_closed_examples() {
        let veronese3 = alg(2, &[&[3, 0], &[1, 2], &[0, 3]]);
        assert_eq!(is_strictly_closed(&veronese3, &DegreeBox::cube(2, 15).unwrap()).unwrap(), ClosedVerdict::StrictlyClosed);
        assert!(matches!(
            is_strictly_closed(&r526(), &DegreeBox::cube(2, 20).unwrap()).unwrap(),
            ClosedVerdict::NotStrictlyClosed { .. }
        ));
        assert_eq!(
            is_strictly_closed(&MonomialAlgebra::polynomial_ring(2), &DegreeBox::cube(2, 4).unwrap()).unwrap(),
            ClosedVerdict::StrictlyClosed
        );
    }

    #[test]
    fn pairwise_criterion_examples() {
        let r1 = alg(2, &[&[2, 0], &[1, 1], &[0, 2], &[3, 0], &[0, 3]]);
        assert!(criterion_pairwise_products(&r1, &[ev([1, 0]), ev([0, 1])]).unwrap());
        let veronese3 = alg(2, &[&[3, 0], &[1, 2], &[0, 3]]);
        assert!(criterion_pairwise_products(&veronese3, &[ev([2, 1])]).unwrap());
        assert_eq!(
            pairwise_product_violation(&r526(), &[ev([4, 1])]).unwrap(),
            Some((ev([4, 1]), ev([4, 1])))
        );
        assert!(criterion_pairwise_products(&r526(), &[]).is_err());
        assert!(criterion_pairwise_products(&r526(), &[ev([0, 0])]).is_err());
    }

    #[test]
    fn squares_only_extension_adds_nothing() {
        // T = R[f] with 2f ∈ S_R
        let r = alg(2, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let f = ev([2, 2]);
        assert!(!r.contains(&f).unwrap());
        assert!(r.contains(&f.scaled(2)).unwrap());
        let t = r.adjoin([f]).unwrap();
        let rep = strict_closure(&r, &t, &DegreeBox::cube(2, 12).unwrap()).unwrap();
        assert!(rep.new_degrees.is_empty());
    }

    #[test]
    fn products_and_cubes_examples() {
        let k2 = MonomialAlgebra::from_generators(2, []).unwrap();
        let units2 = [ev([1, 0]), ev([0, 1])];
        assert_eq!(build_products_and_cubes(&k2, &units2).unwrap(), alg(2, &[&[2, 0], &[1, 1], &[0, 2], &[3, 0], &[0, 3]]));

        let k3 = MonomialAlgebra::from_generators(3, []).unwrap();
        let units3: Vec<_> = (0..3).map(|i| ExponentVector::unit(3, i)).collect();
        let built = build_products_and_cubes(&k3, &units3).unwrap();
        assert_eq!(built.generators().len(), 6 + 3);

        let k1 = MonomialAlgebra::from_generators(1, []).unwrap();
        assert_eq!(build_products_and_cubes(&k1, &[ev([1])]).unwrap(), alg(1, &[&[2], &[3]]));
    }

    #[test]
    fn rees_algebra_examples() {
        let r = rees_algebra(2, &[ev([3, 0]), ev([1, 4]), ev([0, 5])]).unwrap();
        assert_eq!(r, alg(3, &[&[1, 0, 0], &[0, 1, 0], &[3, 0, 1], &[1, 4, 1], &[0, 5, 1]]));
        assert_eq!(rees_algebra(1, &[ev([1])]).unwrap(), alg(2, &[&[1, 0], &[1, 1]]));
        assert_eq!(
            rees_algebra(2, &[ev([1, 0]), ev([0, 1])]).unwrap(),
            alg(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert!(rees_algebra(2, &[]).is_err());
    }
}
