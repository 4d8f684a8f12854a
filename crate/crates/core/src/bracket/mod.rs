//! Shifted double brackets on free algebras given by generator tables.

pub mod checks;
pub mod engine;
pub mod necklace;
pub mod spec;

pub use checks::{
    check_all, check_antisymmetry, check_double_jacobi, check_double_poisson, check_left_leibniz,
};
pub use engine::{double_jacobiator, extend_bracket, leibniz_bracket, Engine, ExpansionOrder};
pub use necklace::{check_necklace, necklace_bracket};
pub use spec::BracketSpec;
