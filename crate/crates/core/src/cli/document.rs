//! Documents: algebras, bimodules, bracket tables and DLR data.

use std::collections::HashMap;
use std::sync::Arc;

use super::syntax::{Parser, Tok};
use crate::algebra::{render_tensor, Alphabet, GenId, Generator, Tensor2};
use crate::bracket::BracketSpec;
use crate::error::{Error, Result};
use crate::free::{Bimodule, DlrData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Algebra {
        name: String,
        shift: i64,
        alphabet: Arc<Alphabet>,
    },
    Bimodule {
        name: String,
        over: String,
        bimodule: Arc<Bimodule>,
    },
    Bracket {
        name: String,
        on: String,
        spec: BracketSpec,
    },
    Dlr {
        name: String,
        module: String,
        data: DlrData,
    },
}

impl Block {
    pub fn name(&self) -> &str {
        match self {
            Block::Algebra { name, .. }
            | Block::Bimodule { name, .. }
            | Block::Bracket { name, .. }
            | Block::Dlr { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub blocks: Vec<Block>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        parse(text)
    }

    pub fn get(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name() == name)
    }

    pub fn algebra(&self, name: &str) -> Result<(i64, &Arc<Alphabet>)> {
        match self.get(name) {
            Some(Block::Algebra {
                shift, alphabet, ..
            }) => Ok((*shift, alphabet)),
            _ => Err(Error::Unresolved(format!("no algebra named '{name}'"))),
        }
    }

    pub fn bracket(&self, name: &str) -> Result<&BracketSpec> {
        match self.get(name) {
            Some(Block::Bracket { spec, .. }) => Ok(spec),
            _ => Err(Error::Unresolved(format!("no bracket named '{name}'"))),
        }
    }

    pub fn dlr(&self, name: &str) -> Result<&DlrData> {
        match self.get(name) {
            Some(Block::Dlr { data, .. }) => Ok(data),
            _ => Err(Error::Unresolved(format!("no dlr named '{name}'"))),
        }
    }

    /// The algebra a bracket block is declared on, by block name.
    pub fn bracket_target(&self, name: &str) -> Option<&str> {
        match self.get(name) {
            Some(Block::Bracket { on, .. }) => Some(on),
            _ => None,
        }
    }

    pub fn format(&self) -> String {
        format(self)
    }
}

/// Alphabet and shift an expression block is written over.
struct Scope {
    shift: i64,
    alphabet: Arc<Alphabet>,
    bimodule: Option<(String, Arc<Bimodule>)>,
}

pub fn parse(text: &str) -> Result<Document> {
    let mut p = Parser::new(text)?;
    let mut doc = Document::default();
    let mut scopes: HashMap<String, Scope> = HashMap::new();
    while !p.at_end() {
        let here = p.here();
        let kind = p.ident()?;
        let name = p.ident()?;
        if doc.get(&name).is_some() {
            return Err(Error::Parse {
                line: here.0,
                col: here.1,
                message: format!("duplicate block name '{name}'"),
            });
        }
        let block = match kind.as_str() {
            "algebra" => {
                p.expect(&Tok::LBrace)?;
                p.keyword("shift")?;
                p.expect(&Tok::Eq)?;
                let shift = p.int()?;
                let gens = gen_list(&mut p, Generator::base)?;
                p.expect(&Tok::RBrace)?;
                let alphabet = Arc::new(Alphabet::new(gens).map_err(|e| at(here, e))?);
                scopes.insert(
                    name.clone(),
                    Scope {
                        shift,
                        alphabet: alphabet.clone(),
                        bimodule: None,
                    },
                );
                Block::Algebra {
                    name,
                    shift,
                    alphabet,
                }
            }
            "bimodule" => {
                p.keyword("over")?;
                let over_at = p.here();
                let over = p.ident()?;
                let (shift, base) = doc.algebra(&over).map_err(|e| at(over_at, e))?;
                let base = base.clone();
                p.expect(&Tok::LBrace)?;
                let gens = gen_list(&mut p, Generator::module)?;
                p.expect(&Tok::RBrace)?;
                let bimodule = Arc::new(Bimodule::new(base, gens).map_err(|e| at(here, e))?);
                scopes.insert(
                    name.clone(),
                    Scope {
                        shift,
                        alphabet: bimodule.total().clone(),
                        bimodule: Some((name.clone(), bimodule.clone())),
                    },
                );
                Block::Bimodule {
                    name,
                    over,
                    bimodule,
                }
            }
            "bracket" => {
                p.keyword("on")?;
                let on_at = p.here();
                let on = p.ident()?;
                let scope = scopes.get(&on).ok_or_else(|| {
                    at(
                        on_at,
                        Error::Unresolved(format!("no algebra or bimodule named '{on}'")),
                    )
                })?;
                let entries = rules(&mut p, &scope.alphabet)?;
                let spec = BracketSpec::new(scope.alphabet.clone(), scope.shift, entries)
                    .map_err(|e| at(here, e))?;
                Block::Bracket { name, on, spec }
            }
            "dlr" => {
                p.expect(&Tok::LBrace)?;
                p.keyword("module")?;
                p.expect(&Tok::Eq)?;
                let m_at = p.here();
                let module = p.ident()?;
                let scope = scopes
                    .get(&module)
                    .filter(|s| s.bimodule.is_some())
                    .ok_or_else(|| {
                        at(
                            m_at,
                            Error::Unresolved(format!("no bimodule named '{module}'")),
                        )
                    })?;
                let bimodule = scope.bimodule.as_ref().expect("filtered").1.clone();
                p.keyword("anchor")?;
                let anchor = rules(&mut p, &scope.alphabet)?;
                p.keyword("bracket")?;
                let bracket = rules(&mut p, &scope.alphabet)?;
                p.expect(&Tok::RBrace)?;
                let data = DlrData::new(bimodule, scope.shift, anchor, bracket)
                    .map_err(|e| at(here, e))?;
                Block::Dlr { name, module, data }
            }
            other => {
                return Err(Error::Parse {
                    line: here.0,
                    col: here.1,
                    message: format!("unknown block kind '{other}'"),
                })
            }
        };
        doc.blocks.push(block);
    }
    Ok(doc)
}

fn at(pos: (usize, usize), e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line: pos.0,
            col: pos.1,
            message: other.to_string(),
        },
    }
}

/// `"gens" "=" "[" (IDENT ":" INT),* "]"`
fn gen_list(p: &mut Parser, make: fn(&str, i64) -> Generator) -> Result<Vec<Generator>> {
    p.keyword("gens")?;
    p.expect(&Tok::Eq)?;
    p.expect(&Tok::LBrack)?;
    let mut gens = Vec::new();
    if p.eat(&Tok::RBrack) {
        return Ok(gens);
    }
    loop {
        let name = p.ident()?;
        p.expect(&Tok::Colon)?;
        let degree = p.int()?;
        gens.push(make(&name, degree));
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.expect(&Tok::RBrack)?;
    Ok(gens)
}

/// `"{" ("[" IDENT "," IDENT "]" "=" tensor2)* "}"`
fn rules(p: &mut Parser, alphabet: &Alphabet) -> Result<Vec<((GenId, GenId), Tensor2)>> {
    p.expect(&Tok::LBrace)?;
    let mut out = Vec::new();
    while !p.eat(&Tok::RBrace) {
        p.expect(&Tok::LBrack)?;
        let i = gen_ref(p, alphabet)?;
        p.expect(&Tok::Comma)?;
        let j = gen_ref(p, alphabet)?;
        p.expect(&Tok::RBrack)?;
        p.expect(&Tok::Eq)?;
        out.push(((i, j), p.sum::<2>(alphabet)?));
    }
    Ok(out)
}

fn gen_ref(p: &mut Parser, alphabet: &Alphabet) -> Result<GenId> {
    let here = p.here();
    let name = p.ident()?;
    alphabet.lookup(&name).map_err(|_| Error::Parse {
        line: here.0,
        col: here.1,
        message: format!("unknown generator '{name}'"),
    })
}

fn gens_text(gens: &[Generator]) -> String {
    let items: Vec<String> = gens
        .iter()
        .map(|g| format!("{}:{}", g.name, g.degree))
        .collect();
    format!("[{}]", items.join(", "))
}

fn rule_lines<'a>(
    alphabet: &Alphabet,
    indent: &str,
    entries: impl Iterator<Item = (&'a (GenId, GenId), Tensor2)>,
) -> String {
    entries
        .map(|(&(i, j), v)| {
            format!(
                "{indent}[{},{}] = {}\n",
                alphabet.name(i),
                alphabet.name(j),
                render_tensor(alphabet, &v)
            )
        })
        .collect()
}

/// Canonical text of a document; [`parse`] reads it back to an equal value.
pub fn format(doc: &Document) -> String {
    let mut parts = Vec::new();
    for b in &doc.blocks {
        let text = match b {
            Block::Algebra {
                name,
                shift,
                alphabet,
            } => format!(
                "algebra {name} {{\n  shift = {shift}\n  gens = {}\n}}\n",
                gens_text(alphabet.gens())
            ),
            Block::Bimodule {
                name,
                over,
                bimodule,
            } => format!(
                "bimodule {name} over {over} {{\n  gens = {}\n}}\n",
                gens_text(bimodule.module_gens())
            ),
            Block::Bracket { name, on, spec } => format!(
                "bracket {name} on {on} {{\n{}}}\n",
                rule_lines(
                    spec.alphabet(),
                    "  ",
                    spec.table().iter().map(|(k, v)| (k, v.clone()))
                )
            ),
            Block::Dlr { name, module, data } => {
                let t = data.bimodule().total();
                format!(
                    "dlr {name} {{\n  module = {module}\n  anchor {{\n{}  }}\n  bracket {{\n{}  }}\n}}\n",
                    rule_lines(t, "    ", data.anchor().iter().map(|(k, v)| (k, v.clone()))),
                    rule_lines(t, "    ", data.mbracket().iter().map(|(k, v)| (k, v.total()))),
                )
            }
        };
        parts.push(text);
    }
    parts.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "
        # two generators
        algebra A { shift = 0 gens = [ x:0, y:0 ] }
        bracket B on A { [x,y] = 1 (*) 1 }
        bimodule M over A { gens = [e:1] }
        dlr D { module = M anchor { [e,x] = 0 } bracket { } }
    ";

    #[test]
    fn parses_and_round_trips() {
        let doc = parse(SAMPLE).unwrap();
        assert_eq!(doc.blocks.len(), 4);
        let text = format(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(format(&parse(&text).unwrap()), text);
    }

    #[test]
    fn unresolved_names_are_reported() {
        let err = parse("bracket B on Z { }").unwrap_err();
        assert!(err.to_string().contains("'Z'"), "{err}");
        let err = parse("algebra A { shift = 0 gens = [x:0] } algebra A { shift = 0 gens = [] }");
        assert!(err.is_err());
    }
}
