//! Exponent vectors, affine semigroups and the monomial algebras they span.
//!
//! A monomial algebra `k[x^a : a in S]` is determined by its exponent
//! semigroup `S`, so all ring-level questions here reduce to lattice point
//! questions about `S`. Infinite graded objects are truncated to a
//! [`DegreeBox`] and stored as dense [`MembershipTable`]s.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::numerical;

/// A point of the nonnegative integer lattice, the multidegree of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// The `i`-th unit vector in dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Componentwise `self <= other`.
    pub fn is_below(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: u32) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Appends one coordinate, e.g. the `t`-degree of a Rees algebra.
    pub fn extended(&self, last: u32) -> Self {
        let mut coords = self.0.clone();
        coords.push(last);
        Self(coords)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(coords: Vec<u32>) -> Self {
        Self(coords)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(coords: &[u32]) -> Self {
        Self(coords.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(coords: [u32; N]) -> Self {
        Self(coords.to_vec())
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Componentwise upper limit `[0, bound]` for sweeps over multidegrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBox {
    bound: ExponentVector,
    strides: Vec<usize>,
}

impl DegreeBox {
    pub fn new(bound: ExponentVector) -> Result<Self> {
        if bound.dim() == 0 {
            return Err(Error::InvalidInput("degree box must have positive dimension".into()));
        }
        if bound.coords().contains(&0) {
            return Err(Error::InvalidInput(format!(
                "degree box {bound} must have every coordinate at least 1"
            )));
        }
        Ok(Self::spanning(bound))
    }

    pub fn cube(dim: usize, side: u32) -> Result<Self> {
        Self::new(ExponentVector(vec![side; dim]))
    }

    /// `[0, bound]` without the positivity check; used for membership DPs.
    pub(crate) fn spanning(bound: ExponentVector) -> Self {
        let d = bound.dim();
        let mut strides = vec![1usize; d];
        for k in (0..d.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * (bound.0[k + 1] as usize + 1);
        }
        Self { bound, strides }
    }

    pub fn bound(&self) -> &ExponentVector {
        &self.bound
    }

    pub fn dim(&self) -> usize {
        self.bound.dim()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        v.is_below(&self.bound)
    }

    /// Number of lattice points in the box.
    pub fn len(&self) -> usize {
        self.bound.0.iter().map(|&b| b as usize + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lexicographic position of a point, `None` outside the box.
    pub fn index(&self, coords: &[u32]) -> Option<usize> {
        if coords.len() != self.dim() {
            return None;
        }
        let mut idx = 0;
        for ((&c, &b), &s) in coords.iter().zip(&self.bound.0).zip(&self.strides) {
            if c > b {
                return None;
            }
            idx += c as usize * s;
        }
        Some(idx)
    }

    /// Offset of a vector in index space; `index(p) - offset(g) == index(p - g)`
    /// whenever `g <= p` inside the box.
    pub(crate) fn offset(&self, coords: &[u32]) -> usize {
        coords.iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    /// All points of the box in ascending lexicographic order.
    pub fn points(&self) -> BoxPoints {
        BoxPoints::new(self.bound.clone())
    }

    pub fn scaled(&self, k: u32) -> Self {
        Self::spanning(self.bound.scaled(k))
    }

    /// Smallest box containing both.
    pub fn join(&self, other: &Self) -> Self {
        let bound = self.bound.0.iter().zip(&other.bound.0).map(|(a, b)| *a.max(b)).collect();
        Self::spanning(ExponentVector(bound))
    }
}

impl fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bound)
    }
}

/// Odometer over `[0, bound]` in lexicographic order.
pub struct BoxPoints {
    bound: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl BoxPoints {
    pub fn new(bound: ExponentVector) -> Self {
        let next = Some(vec![0; bound.dim()]);
        Self { bound: bound.0, next }
    }
}

impl Iterator for BoxPoints {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if succ[k] < self.bound[k] {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(ExponentVector(current))
    }
}

/// A subset of a degree box stored as a dense bit grid.
#[derive(Clone, Debug)]
pub struct MembershipTable {
    domain: DegreeBox,
    member: Vec<bool>,
}

impl MembershipTable {
    /// The semigroup generated by `generators`, restricted to `domain`.
    ///
    /// Points are visited in lexicographic order, so `p - g` is always
    /// decided before `p`.
    pub fn semigroup(generators: &[ExponentVector], domain: &DegreeBox) -> Self {
        let gens: Vec<(&[u32], usize)> = generators
            .iter()
            .filter(|g| !g.is_zero() && g.is_below(domain.bound()))
            .map(|g| (g.coords(), domain.offset(g.coords())))
            .collect();
        let mut member = vec![false; domain.len()];
        for (idx, p) in domain.points().enumerate() {
            member[idx] = idx == 0
                || gens.iter().any(|(g, off)| {
                    g.iter().zip(p.coords()).all(|(a, b)| a <= b) && member[idx - off]
                });
        }
        Self { domain: domain.clone(), member }
    }

    pub fn from_predicate(domain: &DegreeBox, mut pred: impl FnMut(&ExponentVector) -> bool) -> Self {
        let member = domain.points().map(|p| pred(&p)).collect();
        Self { domain: domain.clone(), member }
    }

    pub fn domain(&self) -> &DegreeBox {
        &self.domain
    }

    /// Membership of `v`; `None` when `v` is outside the table's box.
    pub fn get(&self, v: &ExponentVector) -> Option<bool> {
        self.get_coords(v.coords())
    }

    pub fn get_coords(&self, coords: &[u32]) -> Option<bool> {
        self.domain.index(coords).map(|i| self.member[i])
    }

    /// Membership of `v`, treating points outside the box as absent.
    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.get(v).unwrap_or(false)
    }

    pub(crate) fn at(&self, index: usize) -> bool {
        self.member[index]
    }

    pub(crate) fn set(&mut self, v: &ExponentVector, value: bool) {
        if let Some(i) = self.domain.index(v.coords()) {
            self.member[i] = value;
        }
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        self.domain
            .points()
            .zip(&self.member)
            .filter(|(_, &m)| m)
            .map(|(p, _)| p)
    }

    pub fn count(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }

    /// Minimal generators of the (assumed additively closed) member set:
    /// nonzero members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<ExponentVector> {
        let mut gens: Vec<ExponentVector> = Vec::new();
        for m in self.members() {
            if m.is_zero() {
                continue;
            }
            let reducible = gens
                .iter()
                .any(|g| m.checked_sub(g).is_some_and(|rest| self.contains(&rest)));
            if !reducible {
                gens.push(m);
            }
        }
        gens
    }
}

/// A finitely generated subsemigroup of `N^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSemigroup {
    ambient_dim: usize,
    generators: Vec<ExponentVector>,
}

impl AffineSemigroup {
    /// Zero vectors are dropped and duplicates merged; generators are kept in
    /// ascending lexicographic order.
    pub fn new(ambient_dim: usize, generators: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        let mut gens = Vec::new();
        for g in generators {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: g.dim() });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        gens.sort();
        gens.dedup();
        Ok(Self { ambient_dim, generators: gens })
    }

    /// The semigroup `{0}`, i.e. the coefficient field.
    pub fn trivial(ambient_dim: usize) -> Self {
        Self { ambient_dim, generators: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    fn check_dim(&self, v: &ExponentVector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.dim() });
        }
        Ok(())
    }

    /// Whether `v` is a nonnegative integer combination of the generators,
    /// by dynamic programming over `[0, v]`.
    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        self.check_dim(v)?;
        Ok(membership_in(&self.generators, v))
    }

    pub fn table(&self, domain: &DegreeBox) -> MembershipTable {
        MembershipTable::semigroup(&self.generators, domain)
    }

    /// The unique minimal generating set.
    pub fn minimize(&self) -> Self {
        let gens = &self.generators;
        let minimal = gens
            .iter()
            .enumerate()
            .filter(|(i, g)| {
                let others: Vec<ExponentVector> = gens
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| j != i)
                    .map(|(_, h)| h.clone())
                    .collect();
                !membership_in(&others, g)
            })
            .map(|(_, g)| g.clone())
            .collect();
        Self { ambient_dim: self.ambient_dim, generators: minimal }
    }

    /// Componentwise maximum over the generators (zero when there are none).
    pub fn max_coords(&self) -> ExponentVector {
        let mut m = vec![0; self.ambient_dim];
        for g in &self.generators {
            for (a, b) in m.iter_mut().zip(g.coords()) {
                *a = (*a).max(*b);
            }
        }
        ExponentVector(m)
    }

    /// The semigroup generated by these generators together with `extra`.
    pub fn adjoin(&self, extra: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        Self::new(self.ambient_dim, self.generators.iter().cloned().chain(extra))
    }
}

fn membership_in(generators: &[ExponentVector], v: &ExponentVector) -> bool {
    if v.is_zero() {
        return true;
    }
    let domain = DegreeBox::spanning(v.clone());
    let table = MembershipTable::semigroup(generators, &domain);
    table.contains(v)
}

pub fn contains(s: &AffineSemigroup, v: &ExponentVector) -> Result<bool> {
    s.contains(v)
}

pub fn minimize_generators(s: &AffineSemigroup) -> AffineSemigroup {
    s.minimize()
}

/// The semigroup ring `k[x^a : a in S]` over the rationals, always held with
/// a minimal generating set so that equal algebras compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialAlgebra {
    semigroup: AffineSemigroup,
}

impl MonomialAlgebra {
    pub fn new(semigroup: AffineSemigroup) -> Self {
        Self { semigroup: semigroup.minimize() }
    }

    pub fn from_generators(ambient_dim: usize, generators: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        Ok(Self::new(AffineSemigroup::new(ambient_dim, generators)?))
    }

    /// Convenience constructor from coordinate rows.
    pub fn from_rows<R: AsRef<[u32]>>(ambient_dim: usize, rows: &[R]) -> Result<Self> {
        Self::from_generators(ambient_dim, rows.iter().map(|r| ExponentVector::from(r.as_ref())))
    }

    /// The polynomial ring in `dim` variables.
    pub fn polynomial_ring(dim: usize) -> Self {
        Self::from_generators(dim, (0..dim).map(|i| ExponentVector::unit(dim, i))).expect("unit vectors are valid generators")
    }

    pub fn semigroup(&self) -> &AffineSemigroup {
        &self.semigroup
    }

    pub fn dim(&self) -> usize {
        self.semigroup.ambient_dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.semigroup.generators
    }

    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        self.semigroup.contains(v)
    }

    pub fn table(&self, domain: &DegreeBox) -> MembershipTable {
        self.semigroup.table(domain)
    }

    pub fn adjoin(&self, extra: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        Ok(Self::new(self.semigroup.adjoin(extra)?))
    }
}

impl fmt::Display for MonomialAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("k[")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

/// Monomial generators of an extension `T` as a module over `R`, truncated
/// to a box. The unit generator `1` is implicit and not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGenerators {
    pub generators: Vec<ExponentVector>,
    /// Heuristic certificate that no generator lies beyond the box (exact
    /// in dimension one).
    pub complete: bool,
}

/// Checks `S_R ⊆ S_T` on the generators of `R`.
pub fn check_containment(base: &MonomialAlgebra, ext: &MonomialAlgebra) -> Result<()> {
    if base.dim() != ext.dim() {
        return Err(Error::DimensionMismatch { expected: base.dim(), found: ext.dim() });
    }
    for g in base.generators() {
        if !ext.contains(g)? {
            return Err(Error::NotContained(g.clone()));
        }
    }
    Ok(())
}

/// `{m in S_T ∩ box : m ∉ g + S_T for every generator g of S_R}`, minus zero.
pub fn module_generators_over(base: &MonomialAlgebra, ext: &MonomialAlgebra, domain: &DegreeBox) -> Result<ModuleGenerators> {
    check_containment(base, ext)?;
    if domain.dim() != base.dim() {
        return Err(Error::DimensionMismatch { expected: base.dim(), found: domain.dim() });
    }
    let ext_table = ext.table(domain);
    let generators = module_generators_in(base.generators(), &ext_table);
    let complete = module_generators_complete(base, ext, domain, &generators);
    Ok(ModuleGenerators { generators, complete })
}

pub(crate) fn module_generators_in(base_gens: &[ExponentVector], ext_table: &MembershipTable) -> Vec<ExponentVector> {
    ext_table
        .members()
        .filter(|m| !m.is_zero())
        .filter(|m| {
            !base_gens
                .iter()
                .any(|g| m.checked_sub(g).is_some_and(|rest| ext_table.contains(&rest)))
        })
        .collect()
}

pub(crate) fn module_generators_complete(
    base: &MonomialAlgebra,
    ext: &MonomialAlgebra,
    domain: &DegreeBox,
    found: &[ExponentVector],
) -> bool {
    if base.dim() == 1 {
        if let Some(limit) = numerical_module_bound(base, ext) {
            return u64::from(domain.bound().coords()[0]) >= limit;
        }
    }
    !found.iter().any(|m| in_top_shell(base.semigroup(), domain, m))
}

/// In dimension one with `S_T` inside `gZ` (g the gcd of `S_R`), every module
/// generator is below `g*C + a`, C the conductor of `S_R / g` and `a` the
/// smallest generator. Returns that bound minus one.
fn numerical_module_bound(base: &MonomialAlgebra, ext: &MonomialAlgebra) -> Option<u64> {
    let base_vals: Vec<u64> = base.generators().iter().map(|g| u64::from(g.coords()[0])).collect();
    let g = numerical::gcd_all(&base_vals);
    if g == 0 {
        return None;
    }
    if ext.generators().iter().any(|t| u64::from(t.coords()[0]) % g != 0) {
        return None;
    }
    let scaled: Vec<u64> = base_vals.iter().map(|v| v / g).collect();
    let conductor = numerical::conductor(&scaled);
    let smallest = *base_vals.iter().min()?;
    Some((g * conductor + smallest).saturating_sub(1))
}

/// Per-coordinate shell width: the largest generator coordinate, at least 1.
pub(crate) fn shell_widths(s: &AffineSemigroup) -> Vec<u32> {
    s.max_coords().coords().iter().map(|&c| c.max(1)).collect()
}

/// Whether `m` lies within one generator width of the top face of the box
/// in some coordinate.
pub(crate) fn in_top_shell(s: &AffineSemigroup, domain: &DegreeBox, m: &ExponentVector) -> bool {
    shell_widths(s)
        .iter()
        .zip(m.coords())
        .zip(domain.bound().coords())
        .any(|((&w, &c), &b)| u64::from(c) + u64::from(w) > u64::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(c: [u32; N]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn s526() -> AffineSemigroup {
        AffineSemigroup::new(2, [ev([5, 0]), ev([1, 4]), ev([0, 5])]).unwrap()
    }

    #[test]
    fn polynomial_ring_is_canonical() {
        let units = MonomialAlgebra::from_rows(3, &[[0, 0, 1], [1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(MonomialAlgebra::polynomial_ring(3), units);
    }

    /// Naive recursion: subtract any generator and recurse.
    fn naive_contains(gens: &[ExponentVector], v: &ExponentVector) -> bool {
        v.is_zero() || gens.iter().any(|g| v.checked_sub(g).is_some_and(|r| naive_contains(gens, &r)))
    }

    #[test]
    fn contains_examples() {
        let s = s526();
        assert!(s.contains(&ev([6, 4])).unwrap());
        assert!(s.contains(&ev([0, 0])).unwrap());
        assert!(!s.contains(&ev([4, 1])).unwrap());
        assert!(matches!(s.contains(&ev([1, 2, 3])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn contains_4_1_by_enumeration() {
        // every combination a(5,0)+b(1,4)+c(0,5) inside [0,(4,1)]
        let mut hit = false;
        for a in 0..=1u32 {
            for b in 0..=4u32 {
                for c in 0..=1u32 {
                    if (5 * a + b, 4 * b + 5 * c) == (4, 1) {
                        hit = true;
                    }
                }
            }
        }
        assert!(!hit);
        assert!(!s526().contains(&ev([4, 1])).unwrap());
    }

    #[test]
    fn dp_agrees_with_naive_recursion() {
        let cases = [
            s526(),
            AffineSemigroup::new(2, [ev([2, 0]), ev([1, 1]), ev([0, 3])]).unwrap(),
            AffineSemigroup::new(2, [ev([3, 1]), ev([1, 2]), ev([0, 4]), ev([2, 0])]).unwrap(),
        ];
        for s in &cases {
            for x in 0..=15u32 {
                for y in 0..=(15 - x) {
                    let v = ev([x, y]);
                    assert_eq!(s.contains(&v).unwrap(), naive_contains(s.generators(), &v), "{v}");
                }
            }
        }
    }

    #[test]
    fn minimize_examples() {
        let s = AffineSemigroup::new(2, [ev([1, 0]), ev([0, 1]), ev([1, 1])]).unwrap();
        assert_eq!(s.minimize().generators(), &[ev([0, 1]), ev([1, 0])]);
        assert_eq!(s526().minimize(), s526());
        let line = AffineSemigroup::new(1, [ev([2])]).unwrap();
        assert_eq!(line.minimize(), line);
    }

    #[test]
    fn new_drops_zero_and_duplicates() {
        let s = AffineSemigroup::new(2, [ev([0, 0]), ev([1, 0]), ev([1, 0])]).unwrap();
        assert_eq!(s.generators(), &[ev([1, 0])]);
        assert!(AffineSemigroup::new(0, []).is_err());
    }

    #[test]
    fn box_points_are_lexicographic_and_indexed() {
        let b = DegreeBox::new(ev([2, 3])).unwrap();
        let pts: Vec<_> = b.points().collect();
        assert_eq!(pts.len(), b.len());
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(b.index(p.coords()), Some(i));
        }
        assert_eq!(b.index(&[3, 0]), None);
        assert!(DegreeBox::new(ev([0, 3])).is_err());
    }

    #[test]
    fn module_generators_of_normalization() {
        let r = MonomialAlgebra::new(s526());
        let t = MonomialAlgebra::from_rows(2, &[[5, 0], [4, 1], [3, 2], [2, 3], [1, 4], [0, 5]]).unwrap();
        let b = DegreeBox::cube(2, 20).unwrap();
        let m = module_generators_over(&r, &t, &b).unwrap();
        assert_eq!(m.generators, vec![ev([2, 3]), ev([3, 2]), ev([4, 1])]);
        assert!(m.complete);

        let same = module_generators_over(&r, &r, &b).unwrap();
        assert!(same.generators.is_empty());
        assert!(same.complete);
    }

    #[test]
    fn module_generators_squares_and_cubes() {
        let r = MonomialAlgebra::from_rows(2, &[[2, 0], [1, 1], [0, 2], [3, 0], [0, 3]]).unwrap();
        let t = MonomialAlgebra::polynomial_ring(2);
        let b = DegreeBox::cube(2, 10).unwrap();
        let m = module_generators_over(&r, &t, &b).unwrap();
        // S_T minus the union of g + S_T, enumerated directly
        let oracle: Vec<ExponentVector> = b
            .points()
            .filter(|p| !p.is_zero())
            .filter(|p| r.generators().iter().all(|g| p.checked_sub(g).is_none()))
            .collect();
        assert_eq!(m.generators, oracle);
        assert_eq!(m.generators, vec![ev([0, 1]), ev([1, 0])]);
        assert!(m.complete);
    }

    #[test]
    fn module_generators_reject_non_containment() {
        let r = MonomialAlgebra::polynomial_ring(2);
        let t = MonomialAlgebra::new(s526());
        let b = DegreeBox::cube(2, 5).unwrap();
        assert!(matches!(module_generators_over(&r, &t, &b), Err(Error::NotContained(_))));
    }

    #[test]
    fn module_generators_flag_truncation() {
        // k[X] inside k[X,Y] is not module-finite
        let r = MonomialAlgebra::from_rows(2, &[[1, 0]]).unwrap();
        let t = MonomialAlgebra::polynomial_ring(2);
        let b = DegreeBox::cube(2, 6).unwrap();
        assert!(!module_generators_over(&r, &t, &b).unwrap().complete);
    }

    #[test]
    fn numerical_module_generators_are_certified() {
        let r = MonomialAlgebra::from_rows(1, &[[3], [5]]).unwrap();
        let t = MonomialAlgebra::polynomial_ring(1);
        // conductor 8 and smallest generator 3 certify everything below 11
        let small = module_generators_over(&r, &t, &DegreeBox::cube(1, 9).unwrap()).unwrap();
        assert!(!small.complete);
        let big = module_generators_over(&r, &t, &DegreeBox::cube(1, 10).unwrap()).unwrap();
        assert!(big.complete);
        let vals: Vec<u32> = big.generators.iter().map(|g| g.coords()[0]).collect();
        assert_eq!(vals, vec![1, 2]);
    }

    #[test]
    fn minimal_generators_of_table() {
        let s = s526();
        let b = DegreeBox::cube(2, 12).unwrap();
        assert_eq!(s.table(&b).minimal_generators(), s.generators());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn semigroup2() -> impl Strategy<Value = AffineSemigroup> {
            prop::collection::vec((0u32..6, 0u32..6), 1..5).prop_map(|rows| {
                AffineSemigroup::new(2, rows.into_iter().map(|(a, b)| ExponentVector::from([a, b]))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn membership_is_additive(s in semigroup2(), x in 0u32..8, y in 0u32..8, u in 0u32..8, w in 0u32..8) {
                let v = ExponentVector::from([x, y]);
                let z = ExponentVector::from([u, w]);
                if s.contains(&v).unwrap() && s.contains(&z).unwrap() {
                    prop_assert!(s.contains(&(&v + &z)).unwrap());
                }
            }

            #[test]
            fn minimize_is_idempotent_and_preserves_membership(s in semigroup2()) {
                let m = s.minimize();
                prop_assert_eq!(m.minimize(), m.clone());
                let b = DegreeBox::cube(2, 10).unwrap();
                for p in b.points() {
                    prop_assert_eq!(s.contains(&p).unwrap(), m.contains(&p).unwrap());
                }
            }
        }
    }
}
