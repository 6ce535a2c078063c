//! Cusp-type literals: `[6]`, `[2_4]`, `[3,2]` (multiplicity sequences with
//! `u_n` repetition shorthand), `(2,3)(2,1)` (Newton pairs) and `<4,6,13>`
//! (semigroup generators).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::{MultSeq, NewtonPairs, Semigroup};

/// A cusp type as written by the user.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CuspType {
    MultSeq(MultSeq),
    Newton(NewtonPairs),
    Generators(Vec<u64>),
}

impl CuspType {
    pub fn semigroup(&self) -> Result<Semigroup> {
        let s = match self {
            CuspType::MultSeq(ms) => Semigroup::from_multseq(ms)?,
            CuspType::Newton(np) => Semigroup::from_newton_pairs(np)?,
            CuspType::Generators(gens) => Semigroup::from_generators(gens)?,
        };
        if s.is_naturals() {
            return Err(Error::InvalidInput(format!(
                "{self} is a smooth point, not a cusp"
            )));
        }
        if !matches!(self, CuspType::MultSeq(_)) {
            // rejects semigroups that are not plane-branch semigroups
            s.multseq()?;
        }
        Ok(s)
    }

    /// Parses one literal; error columns are 1-based character positions.
    pub fn parse(src: &str) -> Result<CuspType> {
        Parser::new(src, 1, 1).literal_exact()
    }
}

impl From<MultSeq> for CuspType {
    fn from(ms: MultSeq) -> Self {
        CuspType::MultSeq(ms)
    }
}

impl FromStr for CuspType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CuspType::parse(s)
    }
}

impl fmt::Display for CuspType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspType::MultSeq(ms) => write!(f, "{ms}"),
            CuspType::Newton(np) => write!(f, "{np}"),
            CuspType::Generators(gens) => {
                let parts: Vec<String> = gens.iter().map(u64::to_string).collect();
                write!(f, "<{}>", parts.join(","))
            }
        }
    }
}

/// Splits a line into literals and parses each. `line` and `col0` locate the
/// text inside a larger document for error messages.
pub(crate) fn parse_literals(text: &str, line: usize, col0: usize) -> Result<Vec<CuspType>> {
    let mut p = Parser::new(text, line, col0);
    let mut out = Vec::new();
    loop {
        p.skip_ws_and_commas();
        if p.at_end() {
            return Ok(out);
        }
        out.push(p.literal()?);
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Parser {
    fn new(src: &str, line: usize, col0: usize) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            col: self.col0 + self.pos,
            msg: msg.into(),
        })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn skip_ws_and_commas(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == ',') {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{c}', found '{x}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => self.err(format!("expected a number, found '{c}'")),
                None => self.err("expected a number, found end of input"),
            };
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err(format!("number {text} out of range"))
        })
    }

    fn literal_exact(&mut self) -> Result<CuspType> {
        let lit = self.literal()?;
        self.skip_ws();
        if let Some(c) = self.peek() {
            return self.err(format!("unexpected trailing '{c}'"));
        }
        Ok(lit)
    }

    fn literal(&mut self) -> Result<CuspType> {
        self.skip_ws();
        let start = self.pos;
        let lit = match self.peek() {
            Some('[') => self.multseq()?,
            Some('(') => self.newton()?,
            Some('<') | Some('⟨') => self.generators()?,
            Some(c) => return self.err(format!("expected '[', '(' or '<', found '{c}'")),
            None => return self.err("expected a cusp literal"),
        };
        let checked = match lit {
            Lit::MultSeq(v) => MultSeq::new(v).map(CuspType::MultSeq),
            Lit::Newton(v) => NewtonPairs::new(v).map(CuspType::Newton),
            Lit::Generators(v) => Ok(CuspType::Generators(v)),
        };
        checked.or_else(|e| {
            self.pos = start;
            self.err(e.to_string())
        })
    }

    fn multseq(&mut self) -> Result<Lit> {
        self.expect('[')?;
        let mut entries = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            return self.err("empty multiplicity sequence");
        }
        loop {
            let u = self.number()?;
            self.skip_ws();
            let reps = if self.peek() == Some('_') {
                self.pos += 1;
                let n = self.number()?;
                if n == 0 {
                    return self.err("repetition count must be positive");
                }
                n
            } else {
                1
            };
            entries.extend(std::iter::repeat_n(u, reps as usize));
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(Lit::MultSeq(entries));
                }
                Some(c) => return self.err(format!("expected ',' or ']', found '{c}'")),
                None => return self.err("unterminated multiplicity sequence"),
            }
        }
    }

    fn newton(&mut self) -> Result<Lit> {
        let mut pairs = Vec::new();
        while self.peek() == Some('(') {
            self.expect('(')?;
            let p = self.number()?;
            self.expect(',')?;
            let q = self.number()?;
            self.expect(')')?;
            pairs.push((p, q));
        }
        Ok(Lit::Newton(pairs))
    }

    fn generators(&mut self) -> Result<Lit> {
        let close = if self.peek() == Some('⟨') {
            '⟩'
        } else {
            '>'
        };
        self.pos += 1;
        let mut gens = vec![self.number()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    gens.push(self.number()?);
                }
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(Lit::Generators(gens));
                }
                Some(c) => return self.err(format!("expected ',' or '{close}', found '{c}'")),
                None => return self.err("unterminated generator list"),
            }
        }
    }
}

enum Lit {
    MultSeq(Vec<u64>),
    Newton(Vec<(u64, u64)>),
    Generators(Vec<u64>),
}
