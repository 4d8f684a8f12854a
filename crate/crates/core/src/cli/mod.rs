//! Text format and command driver.

pub mod commands;
pub mod document;
pub mod syntax;

pub use commands::{run, EXIT_INPUT, EXIT_PASS, EXIT_VIOLATION};
pub use document::{format, parse, Block, Document};
pub use syntax::{parse_poly, parse_tensor2, parse_word};
