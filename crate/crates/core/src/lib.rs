//! Exact integer arithmetic for divisor classes and Mukai vectors on an
//! Enriques surface.
//!
//! The crate models the rank-10 numerical lattice `U ⊕ E8(-1)` together with
//! the 2-torsion canonical class, and builds on top of it:
//!
//! - [`lattice`]: symmetric bilinear forms on `Z^n`, divisibility of a
//!   class, linear pairing equations, isotropic enumeration;
//! - [`divisor`]: divisor classes with the torsion bit, Riemann-Roch for
//!   line bundles, nef/ample tests against a finite curve test set;
//! - [`mukai`]: Mukai vectors `(r, D, s)` with `s` stored exactly as
//!   `t = 2s`, the Euler pairing and the exceptional predicate;
//! - [`reflection`]: the reflection `(r, D, s) ↦ (2s, D + (s + r/2)K, r/2)`
//!   and its reconstruction through evaluation/extension sequences;
//! - [`k3`]: pullback of Mukai vectors to the K3 double cover;
//! - [`polarization`]: certified search for an ample class pairing
//!   coprimely to the rank;
//! - [`collections`]: isotropic sequences and the numerical exceptional
//!   collection test.
//!
//! Everything is integer arithmetic; pairings accumulate in `i128` and any
//! overflow is a hard error, never wraparound. The crate is `no_std`
//! (`alloc` only).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod arith;
mod error;

pub mod collections;
pub mod divisor;
pub mod k3;
pub mod lattice;
pub mod mukai;
pub mod polarization;
pub mod reflection;

pub use error::{AmpleObstruction, Error};

pub type Result<T> = core::result::Result<T, Error>;

pub use divisor::{CurveTestSet, DivisorClass};
pub use lattice::{GramLattice, NumClass};
pub use mukai::MukaiVector;
