//! Quadratic brackets on `T_𝟙(M)` as double Lie algebras on `M`.

use std::time::Instant;

use super::classify::classify_bracket;
use crate::algebra::Colour;
use crate::bracket::checks::{antisymmetry_entry, double_jacobi_entries};
use crate::bracket::{BracketSpec, Engine};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// A double bracket `M⊗M -> M⊗M` on the generators of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleLie {
    spec: BracketSpec,
}

impl DoubleLie {
    /// The restriction to generators.
    pub fn table(&self) -> &BracketSpec {
        &self.spec
    }

    /// The quadratic bracket on `T_𝟙(M)` obtained by derivation extension.
    pub fn extend(&self) -> BracketSpec {
        self.spec.clone()
    }

    /// Antisymmetry and the double Jacobi identity on generator triples.
    pub fn check(&self) -> CheckReport {
        let start = Instant::now();
        let engine = Engine::new(&self.spec);
        let mut entries = vec![antisymmetry_entry(&engine, 1)];
        entries.extend(double_jacobi_entries(&engine, 1));
        CheckReport::with_entries("double-lie", 1, entries).timed(start)
    }
}

pub fn quadratic_as_double_lie(spec: &BracketSpec) -> Result<DoubleLie> {
    if spec
        .alphabet()
        .gens()
        .iter()
        .any(|g| g.colour == Colour::Base)
    {
        return Err(Error::NontrivialBase);
    }
    if !classify_bracket(spec).quadratic {
        return Err(Error::NotQuadratic);
    }
    Ok(DoubleLie { spec: spec.clone() })
}
