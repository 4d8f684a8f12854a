//! Double Lie-Rinehart data and its dictionary with linear brackets.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::bimodule::Bimodule;
use super::classify::classify_bracket;
use crate::algebra::{render_tensor, GenId, Tensor2, Word};
use crate::bracket::spec::{pair_name, swap_by_antisymmetry, BracketSpec};
use crate::error::{Error, Result};

/// A value of the module bracket in `M⊗A ⊕ A⊗M`, by components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MValue {
    /// Terms with the module letter in the first leg.
    pub l: Tensor2,
    /// Terms with the module letter in the second leg.
    pub r: Tensor2,
}

impl MValue {
    pub fn total(&self) -> Tensor2 {
        self.l.plus(&self.r)
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.r.is_zero()
    }
}

/// Anchor and module bracket on generators.
///
/// Anchor keys are `(module, base)`; bracket keys are module pairs `(i, j)`
/// with `i <= j`, the other orientation following from antisymmetry.
#[derive(Clone, Debug)]
pub struct DlrData {
    bimodule: Arc<Bimodule>,
    shift: i64,
    anchor: BTreeMap<(GenId, GenId), Tensor2>,
    mbracket: BTreeMap<(GenId, GenId), MValue>,
    full: HashMap<(GenId, GenId), Tensor2>,
}

impl PartialEq for DlrData {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift
            && self.bimodule == other.bimodule
            && self.anchor == other.anchor
            && self.mbracket == other.mbracket
    }
}

impl Eq for DlrData {}

impl DlrData {
    pub fn zero(bimodule: Arc<Bimodule>, shift: i64) -> Self {
        Self::new(bimodule, shift, [], []).expect("zero data is valid")
    }

    /// Validates colours and degrees. Bracket values are given as one tensor
    /// and split into components by the position of the module letter.
    pub fn new(
        bimodule: Arc<Bimodule>,
        shift: i64,
        anchor: impl IntoIterator<Item = ((GenId, GenId), Tensor2)>,
        mbracket: impl IntoIterator<Item = ((GenId, GenId), Tensor2)>,
    ) -> Result<Self> {
        let total = bimodule.total().clone();
        let mut anchors = BTreeMap::new();
        for ((m, a), v) in anchor {
            if !bimodule.is_module(m) || bimodule.is_module(a) {
                return Err(Error::Colour(format!(
                    "anchor key {} must be (module, base)",
                    pair_name(&total, m, a)
                )));
            }
            check_degrees(&bimodule, shift, m, a, &v)?;
            if v.keys().flatten().any(|w| total.weight(w) > 0) {
                return Err(Error::Colour(format!(
                    "anchor value for {} has module letters",
                    pair_name(&total, m, a)
                )));
            }
            if anchors.insert((m, a), v).is_some() {
                return Err(Error::DuplicateEntry(pair_name(&total, m, a)));
            }
        }
        anchors.retain(|_, v: &mut Tensor2| !v.is_zero());

        let mut canon: BTreeMap<(GenId, GenId), Tensor2> = BTreeMap::new();
        let mut reversed: BTreeMap<(GenId, GenId), Tensor2> = BTreeMap::new();
        for ((i, j), v) in mbracket {
            if !bimodule.is_module(i) || !bimodule.is_module(j) {
                return Err(Error::Colour(format!(
                    "bracket key {} must be a module pair",
                    pair_name(&total, i, j)
                )));
            }
            check_degrees(&bimodule, shift, i, j, &v)?;
            for legs in v.keys() {
                if total.weight(&legs[0]) + total.weight(&legs[1]) != 1 {
                    return Err(Error::Colour(format!(
                        "bracket value for {} must lie in M⊗A ⊕ A⊗M",
                        pair_name(&total, i, j)
                    )));
                }
            }
            let target = if i <= j { &mut canon } else { &mut reversed };
            if target.insert((i, j), v).is_some() {
                return Err(Error::DuplicateEntry(pair_name(&total, i, j)));
            }
        }
        for ((j, i), v) in reversed {
            let converted =
                swap_by_antisymmetry(&total, shift, &Word::letter(j), &Word::letter(i), &v);
            match canon.get(&(i, j)) {
                Some(given) if *given != converted => {
                    return Err(Error::Antisymmetry(pair_name(&total, i, j)));
                }
                Some(_) => {}
                None => {
                    canon.insert((i, j), converted);
                }
            }
        }
        let mut mbracket = BTreeMap::new();
        let mut full = HashMap::new();
        for ((i, j), v) in canon {
            if v.is_zero() {
                continue;
            }
            if i != j {
                let partner =
                    swap_by_antisymmetry(&total, shift, &Word::letter(i), &Word::letter(j), &v);
                full.insert((j, i), partner);
            }
            mbracket.insert((i, j), split_components(&total, &v));
            full.insert((i, j), v);
        }
        Ok(DlrData {
            bimodule,
            shift,
            anchor: anchors,
            mbracket,
            full,
        })
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.bimodule
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn anchor(&self) -> &BTreeMap<(GenId, GenId), Tensor2> {
        &self.anchor
    }

    pub fn mbracket(&self) -> &BTreeMap<(GenId, GenId), MValue> {
        &self.mbracket
    }

    pub fn anchor_value(&self, m: GenId, a: GenId) -> Option<&Tensor2> {
        self.anchor.get(&(m, a))
    }

    /// `{{m, m'}}` on generators, either orientation.
    pub fn bracket_value(&self, i: GenId, j: GenId) -> Option<&Tensor2> {
        self.full.get(&(i, j))
    }

    /// The same data with every anchor value negated.
    pub fn with_flipped_anchor(&self) -> DlrData {
        let anchor: Vec<_> = self.anchor.iter().map(|(k, v)| (*k, v.neg())).collect();
        let br: Vec<_> = self.mbracket.iter().map(|(k, v)| (*k, v.total())).collect();
        DlrData::new(self.bimodule.clone(), self.shift, anchor, br).expect("still valid")
    }

    pub fn render(&self) -> String {
        let t = self.bimodule.total();
        let mut s = String::new();
        for (&(m, a), v) in &self.anchor {
            s.push_str(&format!(
                "anchor {} = {}\n",
                pair_name(t, m, a),
                render_tensor(t, v)
            ));
        }
        for (&(i, j), v) in &self.mbracket {
            s.push_str(&format!(
                "bracket {} = {}\n",
                pair_name(t, i, j),
                render_tensor(t, &v.total())
            ));
        }
        s
    }
}

fn check_degrees(b: &Bimodule, shift: i64, i: GenId, j: GenId, v: &Tensor2) -> Result<()> {
    let t = b.total();
    let expected = t.degree(i) + t.degree(j) + shift;
    for legs in v.keys() {
        let found = t.word_degree(&legs[0]) + t.word_degree(&legs[1]);
        if found != expected {
            return Err(Error::Degree {
                pair: pair_name(t, i, j),
                expected,
                found,
            });
        }
    }
    Ok(())
}

pub(crate) fn split_components(total: &crate::algebra::Alphabet, v: &Tensor2) -> MValue {
    MValue {
        l: v.filter(|legs| total.weight(&legs[0]) > 0),
        r: v.filter(|legs| total.weight(&legs[0]) == 0),
    }
}

/// The linear bracket on `T_A(M)` determined by the data.
pub fn dlr_to_linear(d: &DlrData) -> BracketSpec {
    let entries = d
        .anchor
        .iter()
        .map(|(k, v)| (*k, v.clone()))
        .chain(d.mbracket.iter().map(|(k, v)| (*k, v.total())));
    BracketSpec::new(d.bimodule.total().clone(), d.shift, entries)
        .expect("validated data gives a valid table")
}

/// Restriction of a linear bracket to anchor and module bracket.
pub fn linear_to_dlr(spec: &BracketSpec) -> Result<DlrData> {
    if !classify_bracket(spec).linear {
        return Err(Error::NotLinear);
    }
    let bimodule = Arc::new(Bimodule::from_total(spec.alphabet().clone())?);
    let mut anchor = Vec::new();
    let mut br = Vec::new();
    for (&(i, j), v) in spec.table() {
        match (bimodule.is_module(i), bimodule.is_module(j)) {
            (true, false) => anchor.push(((i, j), v.clone())),
            (true, true) => br.push(((i, j), v.clone())),
            _ => return Err(Error::NotLinear),
        }
    }
    DlrData::new(bimodule, spec.shift(), anchor, br)
}
