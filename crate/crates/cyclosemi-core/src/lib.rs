//! Exact computation with numerical semigroups and cyclotomic polynomials.
//!
//! A numerical semigroup is an additive submonoid of the non-negative
//! integers with finite complement. This crate computes, over exact 64-bit
//! integer arithmetic (overflow is detected, never wrapped):
//!
//! * semigroup polynomials `P_S(x) = (1 - x) H_S(x)` and truncated Hilbert
//!   series numerators,
//! * cyclotomic polynomials and factorizations of integer polynomials into
//!   cyclotomic parts by trial division,
//! * cyclotomicity of a semigroup and its polynomial length (number of
//!   irreducible factors of `P_S` counted with multiplicity),
//! * cyclotomic exponent sequences, exact for cyclotomic semigroups and
//!   truncated otherwise,
//! * gluing decompositions, complete-intersection witnesses, minimal
//!   presentation cardinality via Betti elements, and a classification of
//!   the length-1 and length-2 shapes,
//! * exhaustive enumeration of (symmetric) numerical semigroups by
//!   Frobenius number and a census pipeline with conjecture checks.
//!
//! The crate is `no_std` + `alloc`; IO, file formats and the CLI live in the
//! companion `cyclosemi` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod cyclotomy;
pub mod enumeration;
pub mod error;
pub mod polynomials;
pub mod semigroup;
pub mod structure;

pub use cyclotomy::{CycloFactorization, CycloTable, ExponentSequence};
pub use enumeration::{CensusRecord, CensusReport, Conjecture, ConjectureOutcome, ConjectureSet, FrobeniusSlice};
pub use error::{Error, Result};
pub use polynomials::IntPoly;
pub use semigroup::{FactorizationVector, NumericalSemigroup};
pub use structure::{Classification, GluingTree};
