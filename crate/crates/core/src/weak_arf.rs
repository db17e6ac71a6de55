//! Weak-Arf verdicts: `y/x, z/x ∈ R̄` implies `yz/x ∈ R`.
//!
//! For monomials `x = x^a, y = x^b, z = x^c` this reads: `b - a, c - a ∈ S̄`
//! implies `b + c - a ∈ S_R`. A violating triple is a proof that `R` is not
//! weakly Arf. In dimension one the monomial check is complete; in higher
//! dimension an empty search is only a bounded report.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{module_generators_over, AffineSemigroup, DegreeBox, ExponentVector, MonomialAlgebra};
use crate::normalization::{normalization, Saturation};
use crate::numerical;
use crate::strict_closure::{is_strictly_closed, ClosedVerdict};

/// `a, b, c ∈ S_R` with `b - a, c - a ∈ S̄` and `b + c - a ∉ S_R`.
///
/// Witnesses are written with `b >= c` lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakArfWitness {
    pub a: ExponentVector,
    pub b: ExponentVector,
    pub c: ExponentVector,
}

impl WeakArfWitness {
    /// `b + c - a`, the degree of `yz/x`.
    pub fn product_degree(&self) -> ExponentVector {
        (&self.b + &self.c).checked_sub(&self.a).expect("c - a is nonnegative")
    }

    /// Re-checks all four membership claims from scratch.
    pub fn verify(&self, r: &MonomialAlgebra) -> Result<bool> {
        let sat = Saturation::new(r.semigroup())?;
        let over = |u: &ExponentVector| u.checked_sub(&self.a).is_some_and(|d| sat.contains(&d));
        Ok(r.contains(&self.a)?
            && r.contains(&self.b)?
            && r.contains(&self.c)?
            && over(&self.b)
            && over(&self.c)
            && !r.contains(&self.product_degree())?)
    }
}

impl fmt::Display for WeakArfWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakArfVerdict {
    /// No monomial violation inside the box.
    NoWitness,
    Witness(WeakArfWitness),
}

/// Exhaustive search over monomial triples in the box; returns the first
/// witness in lexicographic order of `(a, b, c)` with `b >= c`.
pub fn monomial_weak_arf(r: &MonomialAlgebra, domain: &DegreeBox) -> Result<WeakArfVerdict> {
    if domain.dim() != r.dim() {
        return Err(Error::DimensionMismatch { expected: r.dim(), found: domain.dim() });
    }
    let sat = Saturation::new(r.semigroup())?.table(domain);
    // b + c - a <= b + (c - a) stays inside the doubled box
    let wide = r.table(&domain.scaled(2));
    let elements: Vec<ExponentVector> = wide.members().filter(|m| domain.contains(m)).collect();

    for a in elements.iter().filter(|a| !a.is_zero()) {
        let above: Vec<&ExponentVector> = elements
            .iter()
            .filter(|b| b.checked_sub(a).is_some_and(|d| sat.contains(&d)))
            .collect();
        for (i, b) in above.iter().enumerate() {
            for c in &above[..=i] {
                let prod: Vec<u32> = b
                    .coords()
                    .iter()
                    .zip(c.coords())
                    .zip(a.coords())
                    .map(|((x, y), z)| x + y - z)
                    .collect();
                if !wide.get_coords(&prod).expect("inside the doubled box") {
                    return Ok(WeakArfVerdict::Witness(WeakArfWitness {
                        a: a.clone(),
                        b: (*b).clone(),
                        c: (*c).clone(),
                    }));
                }
            }
        }
    }
    Ok(WeakArfVerdict::NoWitness)
}

/// Certified weak-Arf decision for a numerical semigroup ring `k[t^S]`.
///
/// Generators are divided by their gcd first. Any violation has
/// `a <= c` and `b + c - a < C`, hence `a, b, c < C` for the conductor `C`.
/// The witness is returned in the original (unscaled) units.
pub fn numerical_weak_arf_witness(s: &AffineSemigroup) -> Result<Option<[u64; 3]>> {
    if s.ambient_dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: s.ambient_dim() });
    }
    let vals: Vec<u64> = s.generators().iter().map(|g| u64::from(g.coords()[0])).collect();
    if vals.is_empty() {
        return Ok(None);
    }
    let g = numerical::gcd_all(&vals);
    let scaled: Vec<u64> = vals.iter().map(|v| v / g).collect();
    if numerical::gcd_all(&scaled) != 1 {
        return Err(Error::InvalidInput("generators do not have gcd 1 after rescaling".into()));
    }
    let conductor = numerical::conductor(&scaled) as usize;
    let mut member = vec![false; conductor.max(1)];
    member[0] = true;
    for v in 1..conductor {
        member[v] = scaled.iter().any(|&a| a as usize <= v && member[v - a as usize]);
    }
    let in_s = |v: usize| v >= conductor || member[v];
    let elems: Vec<usize> = (1..conductor).filter(|&v| member[v]).collect();
    for &a in &elems {
        for &b in elems.iter().filter(|&&b| b >= a) {
            for &c in elems.iter().filter(|&&c| c >= a && c <= b) {
                if !in_s(b + c - a) {
                    return Ok(Some([a as u64 * g, b as u64 * g, c as u64 * g]));
                }
            }
        }
    }
    Ok(None)
}

pub fn numerical_weak_arf(s: &AffineSemigroup) -> Result<bool> {
    Ok(numerical_weak_arf_witness(s)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConductorVerdict {
    /// `m R̄ ⊆ R`: a certificate of the weak Arf property.
    Holds,
    /// A generator `g` of `m` and a module generator `u` of `R̄` with
    /// `g + u ∉ S_R`.
    Fails { generator: ExponentVector, module_gen: ExponentVector },
    Indeterminate,
}

/// Checks `m R̄ ⊆ R` on generators: `g + u ∈ S_R` for every minimal generator
/// `g` of `S_R` and every `R`-module generator `u` of `R̄`.
pub fn conductor_criterion(r: &MonomialAlgebra, domain: &DegreeBox) -> Result<ConductorVerdict> {
    let (norm, norm_complete) = normalization(r, domain)?;
    let module = module_generators_over(r, &norm, domain)?;
    for g in r.generators() {
        for u in &module.generators {
            if !r.contains(&(g + u))? {
                return Ok(ConductorVerdict::Fails { generator: g.clone(), module_gen: u.clone() });
            }
        }
    }
    Ok(if norm_complete && module.complete { ConductorVerdict::Holds } else { ConductorVerdict::Indeterminate })
}

/// Combined weak-Arf decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakArfDecision {
    WeaklyArf,
    NotWeaklyArf(WeakArfWitness),
    /// No witness in the box and no certificate either.
    Indeterminate,
}

/// Exact in one variable. Otherwise a witness in the box disproves the
/// property, and `m R̄ ⊆ R` or strict closedness proves it.
pub fn decide_weak_arf(r: &MonomialAlgebra, domain: &DegreeBox) -> Result<WeakArfDecision> {
    if r.dim() == 1 {
        return Ok(match numerical_weak_arf_witness(r.semigroup())? {
            None => WeakArfDecision::WeaklyArf,
            Some(t) => {
                let unit = |v: u64| u32::try_from(v).map(|v| ExponentVector::from([v])).map_err(|_| Error::Overflow);
                WeakArfDecision::NotWeaklyArf(WeakArfWitness { a: unit(t[0])?, b: unit(t[1])?, c: unit(t[2])? })
            }
        });
    }
    if let WeakArfVerdict::Witness(w) = monomial_weak_arf(r, domain)? {
        return Ok(WeakArfDecision::NotWeaklyArf(w));
    }
    if conductor_criterion(r, domain)? == ConductorVerdict::Holds
        || is_strictly_closed(r, domain)? == ClosedVerdict::StrictlyClosed
    {
        return Ok(WeakArfDecision::WeaklyArf);
    }
    Ok(WeakArfDecision::Indeterminate)
}
