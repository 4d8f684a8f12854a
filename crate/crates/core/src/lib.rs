//! Exact evaluation and verification of shifted double brackets on free
//! graded noncommutative algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, words, sparse tensors and the Koszul sign engine.
//! * [`bracket`]: double brackets given by generator tables, their extension
//!   by the derivation rules, and the axiom checks.
//! * [`free`]: brackets on free algebras `T_A(M)`, double Lie-Rinehart data
//!   and the linear/associative/quadratic dictionaries.
//! * [`calculus`]: noncommutative 1-forms, double derivations, and the
//!   Koszul and Schouten-Nijenhuis brackets.
//! * [`shift`]: transport of double Lie-Rinehart data along a degree shift.
//! * [`cli`]: the text format and the `dbrk` command driver.

pub mod algebra;
pub mod bracket;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod free;
pub mod report;
pub mod shift;

pub use error::{Error, Result};
