//! Monomials of `K[x1, ..., xn]` as dense exponent vectors.
//!
//! Variable indices are 0-based throughout the library; only the parser and
//! the printers speak the 1-based `x1 ... xn` names.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A monomial `x1^a1 * ... * xn^an` over a fixed number of variables.
///
/// The unit monomial is the all-zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        Ok(Monomial { exps })
    }

    /// Constructor for callers that already know `exps` is nonempty.
    pub(crate) fn from_exps(exps: Vec<u64>) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    pub fn one(ambient: usize) -> Result<Self> {
        Self::new(vec![0; ambient])
    }

    /// `x_i^e` in `ambient` variables.
    pub fn var_power(ambient: usize, i: usize, e: u64) -> Result<Self> {
        let mut m = Self::one(ambient)?;
        if i >= ambient {
            return Err(Error::VariableOutOfRange { index: i, ambient });
        }
        m.exps[i] = e;
        Ok(m)
    }

    /// Builds a monomial from sparse `(variable, exponent)` pairs; repeated
    /// variables multiply.
    pub fn from_sparse(ambient: usize, parts: &[(usize, u64)]) -> Result<Self> {
        let mut m = Self::one(ambient)?;
        for &(i, e) in parts {
            if i >= ambient {
                return Err(Error::VariableOutOfRange { index: i, ambient });
            }
            m.exps[i] = m.exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    /// Exponent of `x_i` (0-based `i`).
    pub fn nu(&self, i: usize) -> Result<u64> {
        self.exps
            .get(i)
            .copied()
            .ok_or(Error::VariableOutOfRange {
                index: i,
                ambient: self.ambient(),
            })
    }

    pub(crate) fn exp(&self, i: usize) -> u64 {
        self.exps[i]
    }

    /// Largest variable index dividing the monomial, `None` for the unit.
    pub fn max_support(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Componentwise `<=`. Monomials over different ambients never divide
    /// each other.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.ambient() == other.ambient() && divides_exps(&self.exps, &other.exps)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u64, u64) -> u64) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u64::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u64::min)
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `self / divisor`; fails unless `divisor` divides `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_ambient(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                divisor: divisor.clone(),
                dividend: self.clone(),
            });
        }
        self.zip_with(divisor, |a, b| a - b)
    }

    /// `self / gcd(self, v)`, the generator of the principal colon `(self : v)`.
    pub fn colon(&self, v: &Monomial) -> Result<Monomial> {
        self.zip_with(v, u64::saturating_sub)
    }

    /// Copy with the exponent of `x_i` replaced.
    pub fn with_exp(&self, i: usize, e: u64) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial { exps }
    }

    /// Copy with `t` moved from `x_from` to `x_to`; `t` must not exceed the
    /// exponent of `x_from`.
    pub(crate) fn shift(&self, from: usize, to: usize, t: u64) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[from] -= t;
        exps[to] = exps[to].checked_add(t).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps })
    }

    /// Drops trailing variables; all of them must have exponent zero.
    pub fn restrict(&self, ambient: usize) -> Result<Monomial> {
        if ambient == 0 {
            return Err(Error::EmptyAmbient);
        }
        if let Some(i) = self.exps.iter().skip(ambient).position(|&e| e > 0) {
            return Err(Error::VariableOutOfRange {
                index: ambient + i,
                ambient,
            });
        }
        let mut exps = self.exps.clone();
        exps.resize(ambient, 0);
        Ok(Monomial { exps })
    }

    /// Pads with zero exponents up to `ambient` variables.
    pub fn extend(&self, ambient: usize) -> Monomial {
        let mut exps = self.exps.clone();
        if ambient > exps.len() {
            exps.resize(ambient, 0);
        }
        Monomial { exps }
    }

    /// Degree first, then the exponent vector in descending lexicographic
    /// order, so `x1^e` leads its degree.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        graded_cmp_exps(&self.exps, &other.exps)
    }
}

pub(crate) fn divides_exps(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn graded_cmp_exps(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Iterator over all monomials of one degree in graded-lex order
/// (`x1^e` first, `xn^e` last).
pub struct DegreeMonomials {
    current: Option<Vec<u64>>,
}

impl DegreeMonomials {
    pub fn new(ambient: usize, degree: u64) -> Self {
        if ambient == 0 {
            return DegreeMonomials { current: None };
        }
        let mut start = vec![0; ambient];
        start[0] = degree;
        DegreeMonomials {
            current: Some(start),
        }
    }
}

impl Iterator for DegreeMonomials {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.current.take()?;
        let out = Monomial { exps: cur.clone() };
        self.current = next_composition(cur);
        Some(out)
    }
}

/// Successor of a composition in descending lex order: move one unit from
/// the rightmost nonzero non-final entry one place right and collect the
/// tail behind it.
fn next_composition(mut v: Vec<u64>) -> Option<Vec<u64>> {
    let n = v.len();
    if n == 1 {
        return None;
    }
    let tail = v[n - 1];
    v[n - 1] = 0;
    let i = v[..n - 1].iter().rposition(|&e| e > 0)?;
    v[i] -= 1;
    v[i + 1] = tail + 1;
    Some(v)
}

/// Calls `f` on every exponent vector in the box `0 <= e_i <= bounds[i]`.
pub fn for_each_in_box(bounds: &[u64], mut f: impl FnMut(&[u64])) {
    let mut cur = vec![0u64; bounds.len()];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == cur.len() {
                return;
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
