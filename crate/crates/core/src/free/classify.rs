//! Constant, linear and quadratic brackets on `T_A(M)`.

use serde::Serialize;

use crate::algebra::{Colour, Tensor2};
use crate::bracket::BracketSpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BracketClass {
    Constant,
    Linear,
    Quadratic,
    General,
}

/// Membership in each named class, plus the first class that applies.
///
/// The zero bracket belongs to all three.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Classification {
    pub constant: bool,
    pub linear: bool,
    pub quadratic: bool,
    pub class: BracketClass,
}

pub fn classify_bracket(spec: &BracketSpec) -> Classification {
    let alphabet = spec.alphabet();
    let weights = |v: &Tensor2| -> Vec<(usize, usize)> {
        v.keys()
            .map(|legs| (alphabet.weight(&legs[0]), alphabet.weight(&legs[1])))
            .collect()
    };
    let (mut constant, mut linear, mut quadratic) = (true, true, true);
    for (&(i, j), v) in spec.table() {
        let w = weights(v);
        match (alphabet.colour(i), alphabet.colour(j)) {
            (Colour::Base, Colour::Base) => {
                constant = false;
                linear = false;
                quadratic = false;
            }
            (Colour::Module, Colour::Module) => {
                constant &= w.iter().all(|&(a, b)| a + b == 0);
                linear &= w.iter().all(|&(a, b)| a + b == 1);
                quadratic &= w.iter().all(|&(a, b)| a == 1 && b == 1);
            }
            _ => {
                constant = false;
                quadratic = false;
                linear &= w.iter().all(|&(a, b)| a + b == 0);
            }
        }
    }
    let class = if constant {
        BracketClass::Constant
    } else if linear {
        BracketClass::Linear
    } else if quadratic {
        BracketClass::Quadratic
    } else {
        BracketClass::General
    };
    Classification {
        constant,
        linear,
        quadratic,
        class,
    }
}
