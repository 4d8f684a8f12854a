//! Forms, double derivations and the Koszul and Schouten-Nijenhuis brackets.

pub mod derivation;
pub mod koszul;
pub mod omega;
pub mod sn;

pub use derivation::{lift_derivation, Derivation, LiftedDerivation};
pub use koszul::{d_legwise, koszul_bracket, koszul_unchecked};
pub use omega::{universal_derivation, OmegaPresentation};
pub use sn::{sn_bracket, SN};
