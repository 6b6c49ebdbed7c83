//! Exact intersection-theoretic calculus on the smooth quadric threefold `Q ⊂ P⁴`.
//!
//! The Chow ring of `Q` has basis `1, h, l, p` (hyperplane, line, point) with
//! `h² = 2l`, `h·l = p`. Everything in this crate is exact: Chern data are
//! integers in `(h, l, p)` units and all intermediate quantities are rationals.
//!
//! Module map:
//!
//! * [`chow`]: Chow-ring arithmetic, total Chern classes, twist / dual /
//!   tensor / Whitney division.
//! * [`hrr`]: Euler characteristics by the closed cubic formula and by
//!   Hirzebruch–Riemann–Roch with the Todd class of `Q`.
//! * [`bott`]: cohomology of `Ω^p_{P^n}(t)` and `TP^n(t)`.
//! * [`qcoh`]: cohomology tables of the standard bundles `O_Q(t)`, `Σ`, `A`,
//!   `Φ`, `G_P`, `E_P` and a closed catalogue of tensor pairs.
//! * [`curves`]: curve numerics: `c3` from a curve, trisecant counts, the
//!   `α` invariant and the degree-4 del Pezzo lattice solver.
//! * [`classify`]: regeneration of the rank-3 and higher-rank tables.
//! * [`cli`] and [`verify`]: structured command results behind the `qgg`
//!   binary, including the full identity report.

pub mod bott;
pub mod chow;
pub mod classify;
pub mod cli;
pub mod curves;
mod error;
pub mod hrr;
pub mod qcoh;
pub mod verify;

pub use chow::{ChernData, ChowElement};
pub use error::{Error, Result};
pub use hrr::ChernCharacter;
pub use qcoh::{CohomologyTable, Provenance, StandardBundle};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::Ratio<i64>;
