//! Brackets on free algebras `T_A(M)` and double Lie-Rinehart data.

pub mod assoc;
pub mod bimodule;
pub mod classify;
pub mod dlr;
pub mod dlr_check;
pub mod double_lie;

pub use assoc::{assoc_product_check, AssocProduct};
pub use bimodule::Bimodule;
pub use classify::{classify_bracket, BracketClass, Classification};
pub use dlr::{dlr_to_linear, linear_to_dlr, DlrData, MValue};
pub use dlr_check::{dlr_check, DlrEval};
pub use double_lie::{quadratic_as_double_lie, DoubleLie};
