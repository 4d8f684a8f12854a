//! Exact graded noncommutative arithmetic and the sign engine.

pub mod cells;
pub mod combination;
pub mod cyclic;
pub mod poly;
pub mod rational;
pub mod sign;
pub mod word;

pub use cells::{Cell, Cells, Chain, Row};
pub use combination::{render_tensor, Combination, Tensor2, Tensor3};
pub use cyclic::cyclic_normalize;
pub use poly::{poly_mul, NCPoly};
pub use rational::Rational;
pub use sign::{koszul_sign, Sign};
pub use word::{Alphabet, Colour, GenId, Generator, Word};
