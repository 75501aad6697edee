//! Exact enumeration of Catalan-type objects and verification of cyclic,
//! dihedral and symmetric sieving identities.
//!
//! Every identity has the same shape: a brute-force count of objects fixed by
//! a group element on one side, and an exact evaluation of a polynomial at the
//! eigenvalues of that element on the other. Both sides are computed with
//! big integers and exact cyclotomic arithmetic, so a check either passes
//! exactly or produces a witness.
//!
//! Modules:
//! - [`polyqt`]: q,t-polynomials, univariate polynomials, cyclotomic values.
//! - [`raney`]: Raney numbers and coral diagrams.
//! - [`dyck`]: rational Dyck paths, area, sweep, signed shape counts.
//! - [`dissect`]: k-angulations, dihedral actions, type B/D polygon models.
//! - [`roots`]: root systems, cluster complexes, tau/R dynamics.
//! - [`posets`]: root posets, special posets, order ideals.
//! - [`symfunc`]: symmetric-function evaluations at permutation eigenvalues.
//! - [`harness`]: verification suites and reports.

pub mod dissect;
pub mod dyck;
mod error;
pub mod harness;
pub mod polyqt;
pub mod posets;
pub mod raney;
pub mod roots;
pub mod symfunc;
pub(crate) mod util;

pub use error::{Result, SieveError};
