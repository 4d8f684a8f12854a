//! Moving a double Lie-Rinehart structure between `M` and `Σ^δ M`.
//!
//! A word `p · m · q` of `T_A(Σ^δ M)` is identified with `±Σ^δ(p m q)`: the
//! suspension passes the prefix `p` on its way to the module letter. The
//! anchor picks up the sign of `Σ^δ` passing `Σ^r m`; bracket values pick up
//! the sign of `Σ^δ` passing the letters in front of the module letter of
//! each output term. The pair `Σ^{-δ}Σ^{δ}` cancels with sign `+1`.

use std::sync::Arc;
use std::time::Instant;

use crate::algebra::{koszul_sign, Generator, Tensor2, Word};
use crate::free::{dlr_check, Bimodule, DlrData};
use crate::report::{AxiomEntry, CheckReport, Violation};

/// DLR data together with its shift, kept for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedDLR {
    pub data: DlrData,
    pub r: i64,
}

impl ShiftedDLR {
    pub fn new(data: DlrData) -> Self {
        let r = data.shift();
        ShiftedDLR { data, r }
    }

    pub fn shift(&self, delta: i64) -> ShiftedDLR {
        ShiftedDLR::new(shift_dlr(&self.data, delta))
    }
}

/// Shifts every module generator by `delta` and the structure by `-delta`.
pub fn shift_dlr(d: &DlrData, delta: i64) -> DlrData {
    if delta == 0 {
        return d.clone();
    }
    let old = d.bimodule();
    let mgens: Vec<Generator> = old
        .module_gens()
        .iter()
        .map(|g| Generator::module(&g.name, g.degree + delta))
        .collect();
    let new = Arc::new(Bimodule::new(old.base().clone(), mgens).expect("same names"));
    let total = old.total();
    let r = d.shift();

    let anchor: Vec<_> = d
        .anchor()
        .iter()
        .map(|(&(m, a), v)| {
            let s = koszul_sign(&[delta], &[r + total.degree(m)]);
            ((m, a), v.scale(s.to_rational()))
        })
        .collect();

    let prefix_degree = |legs: &[Word; 2]| -> i64 {
        let mut deg = 0;
        for g in legs.iter().flat_map(|w| w.letters()) {
            if old.is_module(*g) {
                return deg;
            }
            deg += total.degree(*g);
        }
        unreachable!("bracket values have a module letter")
    };
    let bracket: Vec<_> = d
        .mbracket()
        .iter()
        .map(|(&k, v)| {
            let mut out = Tensor2::zero();
            for (legs, c) in v.total().iter() {
                let s = koszul_sign(&[delta], &[prefix_degree(legs)]);
                out.add_term(legs.clone(), *c * s.to_rational());
            }
            (k, out)
        })
        .collect();

    DlrData::new(new, r - delta, anchor, bracket).expect("shifted data is valid")
}

/// Runs [`dlr_check`] on both sides of the shift and compares the verdicts
/// axiom by axiom. Each entry passes when the two verdicts agree.
pub fn verify_shift_equivalence(d: &DlrData, delta: i64, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let before = dlr_check(d, max_len);
    let after = dlr_check(&shift_dlr(d, delta), max_len);
    let verdict = |p: bool| if p { "pass" } else { "fail" };
    let entries = before
        .entries
        .iter()
        .zip(&after.entries)
        .map(|(x, y)| {
            let agree = x.passed == y.passed;
            AxiomEntry {
                axiom: x.axiom.clone(),
                passed: agree,
                cases: x.cases + y.cases,
                violation: (!agree).then(|| Violation {
                    input: format!("delta {delta}"),
                    residual: format!(
                        "unshifted {}, shifted {}",
                        verdict(x.passed),
                        verdict(y.passed)
                    ),
                }),
            }
        })
        .collect();
    CheckReport::with_entries("shift-equivalence", max_len, entries).timed(start)
}

/// Axiom names with their verdicts, in report order.
pub type Verdicts = Vec<(String, bool)>;

/// Per-axiom verdicts of both sides, for reporting.
pub fn shift_verdicts(d: &DlrData, delta: i64, max_len: usize) -> (Verdicts, Verdicts) {
    (
        dlr_check(d, max_len).verdicts(),
        dlr_check(&shift_dlr(d, delta), max_len).verdicts(),
    )
}
