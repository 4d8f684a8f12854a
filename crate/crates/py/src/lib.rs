//! Python bindings for `doublebracket`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use doublebracket::algebra::{
    cyclic_normalize as normalize, koszul_sign as sign, render_tensor, Alphabet, Generator, Sign,
};
use doublebracket::bracket::{
    check_all, double_jacobiator, extend_bracket, necklace_bracket, BracketSpec,
};
use doublebracket::calculus::koszul_bracket;
use doublebracket::cli::{parse_poly, parse_word, Block, Document as Doc};
use doublebracket::free::{dlr_check, DlrData};
use doublebracket::report::CheckReport;
use doublebracket::shift::{shift_dlr, verify_shift_equivalence};

fn err(e: doublebracket::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_json(r: &CheckReport) -> String {
    serde_json::to_string(&r.to_json(false)).expect("reports serialize")
}

/// A parsed document of algebras, bimodules, brackets and DLR blocks.
#[pyclass(module = "doublebracket", frozen)]
struct Document {
    doc: Doc,
}

#[pymethods]
impl Document {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Doc::parse(text).map(|doc| Document { doc }).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Document::new(&text)
    }

    fn format(&self) -> String {
        self.doc.format()
    }

    fn names(&self) -> Vec<String> {
        self.doc
            .blocks
            .iter()
            .map(|b| b.name().to_string())
            .collect()
    }

    fn bracket(&self, name: &str) -> PyResult<Bracket> {
        let spec = self.doc.bracket(name).map_err(err)?.clone();
        Ok(Bracket { spec })
    }

    fn dlr(&self, name: &str) -> PyResult<Dlr> {
        let data = self.doc.dlr(name).map_err(err)?.clone();
        Ok(Dlr { data })
    }

    /// Reports for every bracket and DLR block, as JSON.
    #[pyo3(signature = (max_len = 3))]
    fn check(&self, max_len: usize) -> Vec<String> {
        self.doc
            .blocks
            .iter()
            .filter_map(|b| match b {
                Block::Bracket { spec, .. } => Some(check_all(spec, max_len)),
                Block::Dlr { data, .. } => Some(dlr_check(data, max_len)),
                _ => None,
            })
            .map(|r| report_json(&r))
            .collect()
    }

    fn __eq__(&self, other: &Document) -> bool {
        self.doc == other.doc
    }

    fn __repr__(&self) -> String {
        format!("Document({:?})", self.names())
    }
}

/// A double bracket given by its generator table.
#[pyclass(module = "doublebracket", frozen)]
struct Bracket {
    spec: BracketSpec,
}

impl Bracket {
    fn poly(&self, s: &str) -> PyResult<doublebracket::algebra::NCPoly> {
        parse_poly(self.spec.alphabet(), s).map_err(err)
    }
}

#[pymethods]
impl Bracket {
    #[getter]
    fn shift(&self) -> i64 {
        self.spec.shift()
    }

    fn eval(&self, a: &str, b: &str) -> PyResult<String> {
        let v = extend_bracket(&self.spec, &self.poly(a)?, &self.poly(b)?).map_err(err)?;
        Ok(render_tensor(self.spec.alphabet(), &v))
    }

    fn jacobiator(&self, a: &str, b: &str, c: &str) -> PyResult<String> {
        let (a, b, c) = (self.poly(a)?, self.poly(b)?, self.poly(c)?);
        let v = double_jacobiator(&self.spec, &a, &b, &c).map_err(err)?;
        Ok(render_tensor(self.spec.alphabet(), &v))
    }

    fn necklace(&self, a: &str, b: &str) -> PyResult<String> {
        let al = self.spec.alphabet();
        let (a, b) = (
            parse_word(al, a).map_err(err)?,
            parse_word(al, b).map_err(err)?,
        );
        let v = necklace_bracket(&self.spec, &a, &b).map_err(err)?;
        Ok(doublebracket::algebra::NCPoly::from_terms(al, v).render())
    }

    #[pyo3(signature = (max_len = 3))]
    fn check(&self, max_len: usize) -> String {
        report_json(&check_all(&self.spec, max_len))
    }

    fn koszul(&self) -> PyResult<Dlr> {
        koszul_bracket(&self.spec)
            .map(|data| Dlr { data })
            .map_err(err)
    }
}

/// Double Lie-Rinehart data on a free bimodule.
#[pyclass(module = "doublebracket", frozen)]
struct Dlr {
    data: DlrData,
}

#[pymethods]
impl Dlr {
    #[getter]
    fn shift(&self) -> i64 {
        self.data.shift()
    }

    #[pyo3(signature = (max_len = 3))]
    fn check(&self, max_len: usize) -> String {
        report_json(&dlr_check(&self.data, max_len))
    }

    fn shifted(&self, delta: i64) -> Dlr {
        Dlr {
            data: shift_dlr(&self.data, delta),
        }
    }

    #[pyo3(signature = (delta, max_len = 3))]
    fn verify_shift(&self, delta: i64, max_len: usize) -> String {
        report_json(&verify_shift_equivalence(&self.data, delta, max_len))
    }

    fn __eq__(&self, other: &Dlr) -> bool {
        self.data == other.data
    }
}

/// `(-1)^(Σmoved · Σpassed)` as `1` or `-1`.
#[pyfunction]
fn koszul_sign(moved: Vec<i64>, passed: Vec<i64>) -> i64 {
    match sign(&moved, &passed) {
        Sign::Plus => 1,
        Sign::Minus => -1,
    }
}

/// Representative and sign of the cyclic class of `word` over `gens`,
/// a list of `(name, degree)` pairs.
#[pyfunction]
fn cyclic_normalize(gens: Vec<(String, i64)>, word: &str) -> PyResult<(String, String)> {
    let al =
        Alphabet::new(gens.iter().map(|(n, d)| Generator::base(n, *d)).collect()).map_err(err)?;
    let w = parse_word(&al, word).map_err(err)?;
    let (rep, c) = normalize(&al, &w).map_err(err)?;
    Ok((al.render(&rep), c.to_string()))
}

#[pymodule]
#[pyo3(name = "doublebracket")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Document>()?;
    m.add_class::<Bracket>()?;
    m.add_class::<Dlr>()?;
    m.add_function(wrap_pyfunction!(koszul_sign, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_normalize, m)?)?;
    Ok(())
}
