//! Tokens and expressions of the document grammar.

use std::sync::Arc;

use crate::algebra::{Alphabet, Combination, NCPoly, Rational, Tensor2, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Slash,
    Star,
    Tensor,
    Dot,
    Plus,
    Minus,
    LBrace,
    RBrace,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Eq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Slash => "'/'".into(),
            Tok::Star => "'*'".into(),
            Tok::Tensor => "'(*)'".into(),
            Tok::Dot => "'.'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LBrack => "'['".into(),
            Tok::RBrack => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Colon => "':'".into(),
            Tok::Eq => "'='".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn perr(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

pub fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut push = |tok: Tok, n: usize, i: &mut usize, col: &mut usize| {
            out.push(Token {
                tok,
                line: l0,
                col: c0,
            });
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' => {
                if chars.get(i + 1) == Some(&'*') && chars.get(i + 2) == Some(&')') {
                    push(Tok::Tensor, 3, &mut i, &mut col);
                } else {
                    return Err(perr(line, col, "expected '(*)'"));
                }
            }
            '/' => push(Tok::Slash, 1, &mut i, &mut col),
            '*' => push(Tok::Star, 1, &mut i, &mut col),
            '.' => push(Tok::Dot, 1, &mut i, &mut col),
            '+' => push(Tok::Plus, 1, &mut i, &mut col),
            '-' => push(Tok::Minus, 1, &mut i, &mut col),
            '{' => push(Tok::LBrace, 1, &mut i, &mut col),
            '}' => push(Tok::RBrace, 1, &mut i, &mut col),
            '[' => push(Tok::LBrack, 1, &mut i, &mut col),
            ']' => push(Tok::RBrack, 1, &mut i, &mut col),
            ',' => push(Tok::Comma, 1, &mut i, &mut col),
            ':' => push(Tok::Colon, 1, &mut i, &mut col),
            '=' => push(Tok::Eq, 1, &mut i, &mut col),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse::<i64>()
                    .map_err(|_| perr(l0, c0, format!("integer '{s}' out of range")))?;
                col += i - start;
                out.push(Token {
                    tok: Tok::Int(n),
                    line: l0,
                    col: c0,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                col += i - start;
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: l0,
                    col: c0,
                });
            }
            other => return Err(perr(line, col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// A cursor over tokens with position-annotated errors.
pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    pub fn new(text: &str) -> Result<Self> {
        let toks = lex(text)?;
        let lines: Vec<&str> = text.split('\n').collect();
        let end = (
            lines.len(),
            lines.last().map_or(0, |l| l.chars().count()) + 1,
        );
        Ok(Parser { toks, pos: 0, end })
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    pub fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.col))
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let (line, col) = self.here();
        perr(line, col, message)
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("'{kw}'"))),
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    pub fn int(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    /// `INT ["/" INT]`, unsigned.
    fn rational(&mut self) -> Result<Rational> {
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => {
                self.pos -= 1;
                return Err(self.unexpected("a coefficient"));
            }
        };
        if self.eat(&Tok::Slash) {
            let here = self.here();
            let d = match self.bump() {
                Some(Tok::Int(d)) => d,
                _ => {
                    self.pos -= 1;
                    return Err(self.unexpected("a denominator"));
                }
            };
            return Rational::new(n, d).map_err(|e| perr(here.0, here.1, e.to_string()));
        }
        Ok(Rational::from_integer(n))
    }

    /// `"1" | IDENT ("." IDENT)*`
    pub fn word(&mut self, alphabet: &Alphabet) -> Result<Word> {
        if self.peek() == Some(&Tok::Int(1)) {
            self.pos += 1;
            return Ok(Word::unit());
        }
        let mut letters = Vec::new();
        loop {
            let here = self.here();
            let name = self.ident()?;
            let g = alphabet
                .lookup(&name)
                .map_err(|_| perr(here.0, here.1, format!("unknown generator '{name}'")))?;
            letters.push(g);
            if !self.eat(&Tok::Dot) {
                break;
            }
        }
        Ok(Word(letters))
    }

    /// Optional coefficient: `RATIONAL "*"` when the next tokens say so.
    fn coefficient(&mut self) -> Result<Rational> {
        let is_coeff = matches!(self.peek(), Some(Tok::Int(_)))
            && matches!(self.peek_at(1), Some(Tok::Star) | Some(Tok::Slash));
        if !is_coeff {
            return Ok(Rational::one());
        }
        let c = self.rational()?;
        self.expect(&Tok::Star)?;
        Ok(c)
    }

    /// A signed sum of `legs`-fold tensor terms; `0` is the empty sum.
    pub fn sum<const N: usize>(&mut self, alphabet: &Alphabet) -> Result<Combination<[Word; N]>> {
        let mut out = Combination::zero();
        if self.peek() == Some(&Tok::Int(0))
            && !matches!(self.peek_at(1), Some(Tok::Star) | Some(Tok::Slash))
        {
            self.pos += 1;
            return Ok(out);
        }
        let mut sign = Rational::one();
        if self.eat(&Tok::Minus) {
            sign = -sign;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let c = self.coefficient()?;
            let mut legs: Vec<Word> = Vec::with_capacity(N);
            for k in 0..N {
                if k > 0 {
                    self.expect(&Tok::Tensor)?;
                }
                legs.push(self.word(alphabet)?);
            }
            let legs: [Word; N] = legs.try_into().expect("N legs");
            out.add_term(legs, sign * c);
            sign = if self.eat(&Tok::Plus) {
                Rational::one()
            } else if self.eat(&Tok::Minus) {
                -Rational::one()
            } else {
                break;
            };
        }
        Ok(out)
    }
}

fn whole<T>(text: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(text)?;
    let v = f(&mut p)?;
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses `c * u (*) v ± ...` over `alphabet`.
pub fn parse_tensor2(alphabet: &Alphabet, text: &str) -> Result<Tensor2> {
    whole(text, |p| p.sum::<2>(alphabet))
}

/// Parses `c * w ± ...` over `alphabet`.
pub fn parse_poly(alphabet: &Arc<Alphabet>, text: &str) -> Result<NCPoly> {
    let t = whole(text, |p| p.sum::<1>(alphabet))?;
    Ok(NCPoly::from_terms(alphabet, t.map_keys(|[w]| w.clone())))
}

pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word> {
    whole(text, |p| p.word(alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::render_tensor;

    #[test]
    fn tensor_round_trip() {
        let a = Alphabet::base(&[("x", 0), ("y", 0)]).unwrap();
        for (s, canonical) in [
            ("1 (*) 1", "1 (*) 1"),
            ("x (*) 1 - 1 (*) x", "-1 * 1 (*) x + x (*) 1"),
            ("-1 * x.y (*) 1 + 3/2 * 1 (*) y", "3/2 * 1 (*) y - x.y (*) 1"),
            ("0", "0"),
        ] {
            let t = parse_tensor2(&a, s).unwrap();
            assert_eq!(render_tensor(&a, &t), canonical);
            assert_eq!(parse_tensor2(&a, canonical).unwrap(), t);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let a = Alphabet::base(&[("x", 0)]).unwrap();
        match parse_tensor2(&a, "x (*)\n  z") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(parse_tensor2(&a, "x (*) 1 +").is_err());
        assert!(parse_tensor2(&a, "1/0 * x (*) 1").is_err());
    }
}
