//! Integral closure of a monomial algebra.
//!
//! A monomial `x^v` is integral over `k[S]` exactly when `v` lies in the
//! saturation `group(S) ∩ cone(S)`. The group is kept as a Hermite basis and
//! the cone as a list of facet normals, both computed exactly.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntRow};
use crate::monomial::{
    in_top_shell, AffineSemigroup, DegreeBox, ExponentVector, MembershipTable, MonomialAlgebra,
};
use crate::numerical;

/// Hermite basis of the group generated by a semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Integer coordinates of `v` in the row basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut residual: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let pivot = i128::from(row[p]);
            if residual[p] % pivot != 0 {
                return None;
            }
            let c = residual[p] / pivot;
            for (r, &b) in residual.iter_mut().zip(row) {
                *r -= c * i128::from(b);
            }
            coords.push(i64::try_from(c).ok()?);
        }
        residual.iter().all(|&r| r == 0).then_some(coords)
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        let v: Vec<i64> = v.coords().iter().map(|&c| i64::from(c)).collect();
        self.coordinates(&v).is_some()
    }

    /// Solves `rows · x = target` with `x` supported on the pivot columns;
    /// the result is scaled to a primitive integer vector.
    fn dual_vector(&self, target: &[BigInt]) -> Result<Vec<i64>> {
        let r = self.rank();
        let mut x = vec![BigRational::zero(); self.ambient_dim];
        for k in (0..r).rev() {
            let row = &self.rows[k];
            let mut acc = BigRational::from_integer(target[k].clone());
            for j in (k + 1)..r {
                let pj = self.pivots[j];
                acc -= BigRational::from_integer(BigInt::from(row[pj])) * &x[pj];
            }
            x[self.pivots[k]] = acc / BigRational::from_integer(BigInt::from(row[self.pivots[k]]));
        }
        let denom = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut ints: IntRow = x.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
        linalg::make_primitive(&mut ints);
        ints.iter().map(|v| v.to_i64().ok_or(Error::Overflow)).collect()
    }
}

/// Hermite normal form of the generator matrix.
pub fn group_lattice(s: &AffineSemigroup) -> Result<LatticeBasis> {
    let d = s.ambient_dim();
    let rows: Vec<IntRow> = s
        .generators()
        .iter()
        .map(|g| g.coords().iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let hnf = linalg::hermite_normal_form(&rows, d);
    let mut out_rows = Vec::with_capacity(hnf.len());
    let mut pivots = Vec::with_capacity(hnf.len());
    for row in &hnf {
        pivots.push(row.iter().position(|x| !x.is_zero()).expect("nonzero HNF row"));
        out_rows.push(row.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?);
    }
    Ok(LatticeBasis { ambient_dim: d, rows: out_rows, pivots })
}

/// Facet normals `n` of the cone spanned by a semigroup, in ambient
/// coordinates: the cone is `{x in span : <n, x> >= 0}`.
///
/// When the lattice has rank below the ambient dimension the normals are
/// only meaningful on the lattice's span; combine with lattice membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeInequalities {
    pub normals: Vec<Vec<i64>>,
}

impl ConeInequalities {
    pub fn satisfied_by(&self, v: &ExponentVector) -> bool {
        self.normals.iter().all(|n| {
            n.iter().zip(v.coords()).map(|(&a, &c)| i128::from(a) * i128::from(c)).sum::<i128>() >= 0
        })
    }
}

/// Facets of `cone(S)`, found in lattice coordinates (where the cone is full
/// dimensional) as the hyperplanes through `rank - 1` independent rays that
/// leave every ray on one side.
pub fn cone_facets(s: &AffineSemigroup) -> Result<ConeInequalities> {
    let lattice = group_lattice(s)?;
    cone_facets_in(s, &lattice)
}

fn cone_facets_in(s: &AffineSemigroup, lattice: &LatticeBasis) -> Result<ConeInequalities> {
    let r = lattice.rank();
    if r == 0 {
        return Ok(ConeInequalities { normals: Vec::new() });
    }
    let mut rays: Vec<IntRow> = s
        .generators()
        .iter()
        .map(|g| {
            let v: Vec<i64> = g.coords().iter().map(|&c| i64::from(c)).collect();
            let mut c = linalg::to_row(&lattice.coordinates(&v).expect("generator lies in its own lattice"));
            linalg::make_primitive(&mut c);
            c
        })
        .collect();
    rays.sort();
    rays.dedup();

    let mut lattice_normals: Vec<IntRow> = Vec::new();
    for subset in rays.iter().cloned().combinations(r - 1) {
        let ns = linalg::nullspace(&subset, r);
        if ns.len() != 1 {
            continue;
        }
        let mut n = ns.into_iter().next().unwrap();
        let values: Vec<BigInt> = rays.iter().map(|ray| ray.iter().zip(&n).map(|(a, b)| a * b).sum()).collect();
        if values.iter().any(|v| v.is_negative()) {
            if values.iter().any(|v| v.is_positive()) {
                continue;
            }
            n.iter_mut().for_each(|x| *x = -&*x);
        }
        if !lattice_normals.contains(&n) {
            lattice_normals.push(n);
        }
    }
    let mut normals = lattice_normals
        .iter()
        .map(|n| lattice.dual_vector(n))
        .collect::<Result<Vec<_>>>()?;
    normals.sort();
    normals.dedup();
    Ok(ConeInequalities { normals })
}

/// `group(S) ∩ cone(S)` as a reusable membership test.
#[derive(Clone, Debug)]
pub struct Saturation {
    lattice: LatticeBasis,
    cone: ConeInequalities,
}

impl Saturation {
    pub fn new(s: &AffineSemigroup) -> Result<Self> {
        let lattice = group_lattice(s)?;
        let cone = cone_facets_in(s, &lattice)?;
        Ok(Self { lattice, cone })
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    pub fn cone(&self) -> &ConeInequalities {
        &self.cone
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        v.dim() == self.lattice.ambient_dim && self.cone.satisfied_by(v) && self.lattice.contains(v)
    }

    pub fn table(&self, domain: &DegreeBox) -> MembershipTable {
        MembershipTable::from_predicate(domain, |p| self.contains(p))
    }
}

pub fn saturation_contains(s: &AffineSemigroup, v: &ExponentVector) -> Result<bool> {
    if v.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim(), found: v.dim() });
    }
    Ok(Saturation::new(s)?.contains(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationResult {
    pub generators: Vec<ExponentVector>,
    /// Exact in dimension one; otherwise no generator was found in the top
    /// shell of the box.
    pub complete: bool,
}

/// Minimal generators of the saturation found inside `domain`.
pub fn normalization_generators(s: &AffineSemigroup, domain: &DegreeBox) -> Result<NormalizationResult> {
    if domain.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim(), found: domain.dim() });
    }
    if s.ambient_dim() == 1 {
        // saturation of a numerical semigroup scaled by g is gN
        let vals: Vec<u64> = s.generators().iter().map(|g| u64::from(g.coords()[0])).collect();
        let g = numerical::gcd_all(&vals);
        let generators = if g == 0 { Vec::new() } else { vec![ExponentVector::from([g as u32])] };
        return Ok(NormalizationResult { generators, complete: true });
    }
    let sat = Saturation::new(s)?;
    let generators = sat.table(domain).minimal_generators();
    let complete = !generators.iter().any(|m| in_top_shell(s, domain, m));
    Ok(NormalizationResult { generators, complete })
}

/// The normalization as an algebra, with its completeness flag.
pub fn normalization(r: &MonomialAlgebra, domain: &DegreeBox) -> Result<(MonomialAlgebra, bool)> {
    let res = normalization_generators(r.semigroup(), domain)?;
    Ok((MonomialAlgebra::from_generators(r.dim(), res.generators)?, res.complete))
}

/// Default sweep box: twice the componentwise maximum of the normalization
/// generators plus the generators of `R`. In dimension one it is also
/// stretched past the conductor so module generators are certified.
pub fn default_box(r: &MonomialAlgebra) -> Result<DegreeBox> {
    let d = r.dim();
    let rmax = r.semigroup().max_coords();
    let provisional = DegreeBox::new(ExponentVector::new(rmax.coords().iter().map(|&c| (2 * c).max(2)).collect()))?;
    let norm = normalization_generators(r.semigroup(), &provisional)?;
    let mut nmax = vec![0u32; d];
    for g in &norm.generators {
        for (a, &b) in nmax.iter_mut().zip(g.coords()) {
            *a = (*a).max(b);
        }
    }
    let mut bound: Vec<u32> = nmax.iter().zip(rmax.coords()).map(|(a, b)| (2 * (a + b)).max(1)).collect();
    if d == 1 && !r.generators().is_empty() {
        let vals: Vec<u64> = r.generators().iter().map(|g| u64::from(g.coords()[0])).collect();
        let g = numerical::gcd_all(&vals);
        let scaled: Vec<u64> = vals.iter().map(|v| v / g).collect();
        let c = numerical::conductor(&scaled);
        let need = g * c + vals.iter().min().unwrap();
        bound[0] = bound[0].max(u32::try_from(need).map_err(|_| Error::Overflow)?);
    }
    DegreeBox::new(ExponentVector::new(bound))
}
