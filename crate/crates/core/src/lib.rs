//! Strict closures, normalizations and weak-Arf verdicts for monomial
//! subalgebras of polynomial rings, and strict closedness of
//! Stanley-Reisner rings.
//!
//! Monomial algebras are handled through their affine semigroups. Questions
//! about infinitely many degrees are answered inside a [`DegreeBox`], and
//! every result carries a completeness flag saying whether the box was large
//! enough to be sure.

pub mod cli;
pub mod error;
pub mod format;
pub mod linalg;
pub mod monomial;
pub mod normalization;
pub mod numerical;
pub mod stanley_reisner;
pub mod strict_closure;
pub mod weak_arf;

pub use error::{Error, Result};
pub use format::{parse_algebra, parse_complex, write_algebra, write_complex};
pub use monomial::{contains, minimize_generators, AffineSemigroup, DegreeBox, ExponentVector, MembershipTable, MonomialAlgebra};
pub use normalization::{default_box, normalization, normalization_generators, Saturation};
pub use stanley_reisner::{minimal_primes, sr_component, sr_is_strictly_closed, SimplicialComplex};
pub use strict_closure::{
    build_products_and_cubes, criterion_pairwise_products, in_strict_closure, is_strictly_closed, present, rees_algebra,
    strict_closure, ClosedVerdict, StrictClosureReport,
};
pub use weak_arf::{
    conductor_criterion, decide_weak_arf, monomial_weak_arf, numerical_weak_arf, numerical_weak_arf_witness, ConductorVerdict,
    WeakArfDecision, WeakArfVerdict, WeakArfWitness,
};
