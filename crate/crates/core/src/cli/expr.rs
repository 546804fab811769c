//! The ideal expression language.
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := atom ('*' atom)*
//! atom     := '(' monlist ')' | '(' expr ')' | func
//! monlist  := monomial (',' monomial)*
//! monomial := part ('*' part)* | '1'
//! part     := 'x' INT ('^' INT)?
//! func     := 'sbt' '(' monomial ')'
//!           | 'sbtc' '(' monlist ')'
//!           | 'dfixp' '(' part ';' dseq ')'
//!           | 'dfix' '(' part (',' part)* ';' dseq ')'
//!           | 'intersect' '(' expr (',' expr)* ')'
//! dseq     := INT ('|' INT)*
//! ```
//!
//! `&` is reserved for a future intersection operator.

use std::fmt;

use crate::borel::{sbt_closure, sbt_principal};
use crate::dfixed::{dfixed_from_powers, DSequence, VariablePowerSpec};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A monomial as sorted `(variable, exponent)` parts with 0-based variables
/// and positive exponents; empty for `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoLit(pub Vec<(usize, u64)>);

impl MonoLit {
    fn normalized(mut parts: Vec<(usize, u64)>) -> Result<Self> {
        parts.sort_unstable_by_key(|p| p.0);
        let mut out: Vec<(usize, u64)> = Vec::with_capacity(parts.len());
        for (v, e) in parts {
            match out.last_mut() {
                Some(last) if last.0 == v => {
                    last.1 = last.1.checked_add(e).ok_or(Error::ExponentOverflow)?;
                }
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 > 0);
        Ok(MonoLit(out))
    }

    fn max_var(&self) -> Option<usize> {
        self.0.last().map(|p| p.0)
    }

    pub fn to_monomial(&self, ambient: usize) -> Result<Monomial> {
        Monomial::from_sparse(ambient, &self.0)
    }
}

impl fmt::Display for MonoLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", v + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealExpr {
    Literal(Vec<MonoLit>),
    Sum(Vec<IdealExpr>),
    Product(Vec<IdealExpr>),
    Intersect(Vec<IdealExpr>),
    Sbt(MonoLit),
    SbtClosure(Vec<MonoLit>),
    DFixedPrincipal { var: usize, exp: u64, d: DSequence },
    DFixedPowers { pairs: Vec<(usize, u64)>, d: DSequence },
}

impl IdealExpr {
    /// Largest 0-based variable index mentioned anywhere.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            IdealExpr::Literal(ms) | IdealExpr::SbtClosure(ms) => ms.iter().filter_map(MonoLit::max_var).max(),
            IdealExpr::Sum(xs) | IdealExpr::Product(xs) | IdealExpr::Intersect(xs) => {
                xs.iter().filter_map(IdealExpr::max_var).max()
            }
            IdealExpr::Sbt(m) => m.max_var(),
            IdealExpr::DFixedPrincipal { var, .. } => Some(*var),
            IdealExpr::DFixedPowers { pairs, .. } => pairs.iter().map(|p| p.0).max(),
        }
    }

    /// The ambient ring: `vars` if given (and large enough), else the
    /// largest variable mentioned, else one variable.
    pub fn ambient(&self, vars: Option<usize>) -> Result<usize> {
        let needed = self.max_var().map_or(1, |v| v + 1);
        match vars {
            Some(0) => Err(Error::EmptyAmbient),
            Some(n) if n < needed => Err(Error::VariableOutOfRange {
                index: needed - 1,
                ambient: n,
            }),
            Some(n) => Ok(n),
            None => Ok(needed),
        }
    }

    pub fn eval(&self, ambient: usize) -> Result<MonomialIdeal> {
        let fold = |xs: &[IdealExpr], op: fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>| {
            let mut it = xs.iter();
            let first = it.next().ok_or(Error::EmptyInput("empty operand list"))?.eval(ambient)?;
            it.try_fold(first, |acc, x| op(&acc, &x.eval(ambient)?))
        };
        match self {
            IdealExpr::Literal(ms) => MonomialIdeal::minimalize(
                ambient,
                ms.iter().map(|m| m.to_monomial(ambient)).collect::<Result<Vec<_>>>()?,
            ),
            IdealExpr::Sum(xs) => fold(xs, MonomialIdeal::sum),
            IdealExpr::Product(xs) => fold(xs, MonomialIdeal::product),
            IdealExpr::Intersect(xs) => fold(xs, MonomialIdeal::intersect),
            IdealExpr::Sbt(m) => sbt_principal(&m.to_monomial(ambient)?),
            IdealExpr::SbtClosure(ms) => {
                sbt_closure(&ms.iter().map(|m| m.to_monomial(ambient)).collect::<Result<Vec<_>>>()?)
            }
            IdealExpr::DFixedPrincipal { .. } | IdealExpr::DFixedPowers { .. } => {
                dfixed_from_powers(&self.power_spec(ambient)?.expect("d-fixed node"))
            }
        }
    }

    /// The normalized variable-power data of a `dfix`/`dfixp` node.
    pub fn power_spec(&self, ambient: usize) -> Result<Option<VariablePowerSpec>> {
        match self {
            IdealExpr::DFixedPrincipal { var, exp, d } => VariablePowerSpec::new(ambient, &[(*var, *exp)], d).map(Some),
            IdealExpr::DFixedPowers { pairs, d } => VariablePowerSpec::new(ambient, pairs, d).map(Some),
            _ => Ok(None),
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T], sep: &str) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn write_pair(f: &mut fmt::Formatter<'_>, var: usize, exp: u64) -> fmt::Result {
    write!(f, "{}", MonoLit(vec![(var, exp)]))
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Literal(ms) => {
                f.write_str("(")?;
                write_list(f, ms, ", ")?;
                f.write_str(")")
            }
            IdealExpr::Sum(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    match x {
                        IdealExpr::Sum(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            IdealExpr::Product(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" * ")?;
                    }
                    match x {
                        IdealExpr::Sum(_) | IdealExpr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            IdealExpr::Intersect(xs) => {
                f.write_str("intersect(")?;
                write_list(f, xs, ", ")?;
                f.write_str(")")
            }
            IdealExpr::Sbt(m) => write!(f, "sbt({m})"),
            IdealExpr::SbtClosure(ms) => {
                f.write_str("sbtc(")?;
                write_list(f, ms, ", ")?;
                f.write_str(")")
            }
            IdealExpr::DFixedPrincipal { var, exp, d } => {
                f.write_str("dfixp(")?;
                write_pair(f, *var, *exp)?;
                write!(f, "; {d})")
            }
            IdealExpr::DFixedPowers { pairs, d } => {
                f.write_str("dfix(")?;
                for (k, &(v, e)) in pairs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write_pair(f, v, e)?;
                }
                write!(f, "; {d})")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<IdealExpr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(e)
}

/// A comma-separated list of pure powers, as used for variable-power data.
pub fn parse_power_list(text: &str) -> Result<Vec<(usize, u64)>> {
    let mut p = Parser::new(text);
    let mut out = vec![p.pure_power()?];
    while p.eat(',') {
        out.push(p.pure_power()?);
    }
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected("',' or end of input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
            Some(b'&') => Error::parse(self.pos, "'&' is reserved; use intersect(...)"),
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found '{}'", c as char)),
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        (start < self.pos).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters"))
    }

    fn expr(&mut self) -> Result<IdealExpr> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { IdealExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<IdealExpr> {
        let mut atoms = vec![self.atom()?];
        while self.eat('*') {
            atoms.push(self.atom()?);
        }
        Ok(if atoms.len() == 1 { atoms.pop().unwrap() } else { IdealExpr::Product(atoms) })
    }

    fn atom(&mut self) -> Result<IdealExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = match self.peek() {
                    Some(b'x') | Some(b'0'..=b'9') => IdealExpr::Literal(self.monlist()?),
                    _ => self.expr()?,
                };
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => self.func(),
            _ => Err(self.unexpected("'(' or a function name")),
        }
    }

    fn func(&mut self) -> Result<IdealExpr> {
        let start = self.pos;
        let name = self.ident().unwrap_or_default();
        self.expect('(')?;
        let node = match name {
            "sbt" => IdealExpr::Sbt(self.monomial()?),
            "sbtc" => IdealExpr::SbtClosure(self.monlist()?),
            "dfixp" => {
                let (var, exp) = self.pure_power()?;
                self.expect(';')?;
                IdealExpr::DFixedPrincipal {
                    var,
                    exp,
                    d: self.dseq()?,
                }
            }
            "dfix" => {
                let mut pairs = vec![self.pure_power()?];
                while self.eat(',') {
                    pairs.push(self.pure_power()?);
                }
                self.expect(';')?;
                IdealExpr::DFixedPowers { pairs, d: self.dseq()? }
            }
            "intersect" => {
                let mut xs = vec![self.expr()?];
                while self.eat(',') {
                    xs.push(self.expr()?);
                }
                IdealExpr::Intersect(xs)
            }
            other => return Err(Error::parse(start, format!("unknown function {other:?}"))),
        };
        self.expect(')')?;
        Ok(node)
    }

    fn monlist(&mut self) -> Result<Vec<MonoLit>> {
        let mut ms = vec![self.monomial()?];
        while self.eat(',') {
            ms.push(self.monomial()?);
        }
        Ok(ms)
    }

    fn monomial(&mut self) -> Result<MonoLit> {
        if self.peek() == Some(b'1') {
            let at = self.pos;
            if self.int()? != 1 {
                return Err(Error::parse(at, "the only constant monomial is 1"));
            }
            return Ok(MonoLit(Vec::new()));
        }
        let mut parts = vec![self.part()?];
        while self.eat('*') {
            if self.peek() != Some(b'x') {
                return Err(self.unexpected("a variable after '*'"));
            }
            parts.push(self.part()?);
        }
        MonoLit::normalized(parts)
    }

    fn part(&mut self) -> Result<(usize, u64)> {
        if self.peek() != Some(b'x') {
            return Err(self.unexpected("a variable x<k>"));
        }
        self.pos += 1;
        let at = self.pos;
        let idx = self.int()?;
        if idx == 0 {
            return Err(Error::parse(at, "variables are numbered from x1"));
        }
        let exp = if self.eat('^') { self.int()? } else { 1 };
        Ok(((idx - 1) as usize, exp))
    }

    fn pure_power(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let at = self.pos;
        let (v, e) = self.part()?;
        if self.peek() == Some(b'*') {
            return Err(Error::parse(at, "expected a single variable power"));
        }
        Ok((v, e))
    }

    fn dseq(&mut self) -> Result<DSequence> {
        self.skip_ws();
        let at = self.pos;
        let mut terms = vec![self.int()?];
        while self.eat('|') {
            terms.push(self.int()?);
        }
        DSequence::new(terms).map_err(|e| Error::parse(at, e.to_string()))
    }
}
