//! The Koszul double bracket on `T_A(Ω_A)`.

use super::omega::OmegaPresentation;
use crate::algebra::Tensor2;
use crate::bracket::{check_double_poisson, BracketSpec};
use crate::error::{Error, Result};
use crate::free::DlrData;

/// Bound used to certify the input before building the Koszul data.
pub const PRECONDITION_MAX_LEN: usize = 3;

/// `(d⊗1 + 1⊗d)` on a tensor of base words.
pub fn d_legwise(p: &OmegaPresentation, v: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (legs, c) in v.iter() {
        for (w, e) in p.d_word(&legs[0]).iter() {
            out.add_term([w.clone(), legs[1].clone()], *c * *e);
        }
        for (w, e) in p.d_word(&legs[1]).iter() {
            out.add_term([legs[0].clone(), w.clone()], *c * *e);
        }
    }
    out
}

/// Anchor `ρ(dx, y) = {{x, y}}` and bracket `{{dx, dy}} = (d⊗1 + 1⊗d){{x, y}}`.
pub fn koszul_bracket(spec: &BracketSpec) -> Result<DlrData> {
    if !check_double_poisson(spec, PRECONDITION_MAX_LEN).passed() {
        return Err(Error::NotDoublePoisson);
    }
    koszul_unchecked(spec)
}

/// The same construction without the double Poisson precondition.
pub fn koszul_unchecked(spec: &BracketSpec) -> Result<DlrData> {
    let p = OmegaPresentation::new(spec.alphabet())?;
    let base = spec.alphabet();
    let mut anchor = Vec::new();
    let mut bracket = Vec::new();
    for i in base.ids() {
        for j in base.ids() {
            let Some(v) = spec.value(i, j) else {
                continue;
            };
            anchor.push(((p.d_gen(i), j), v.clone()));
            if i <= j {
                bracket.push(((p.d_gen(i), p.d_gen(j)), d_legwise(&p, v)));
            }
        }
    }
    DlrData::new(p.bimodule().clone(), spec.shift(), anchor, bracket)
}
