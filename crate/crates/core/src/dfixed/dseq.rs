use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A divisibility chain `1 = d_0 | d_1 | ... | d_s` with strictly increasing
/// entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DSequence {
    terms: Vec<u64>,
}

/// `a = sum_t coeffs[t] * d_t` with `coeffs[t] < d_{t+1} / d_t` below the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DDecomposition {
    pub coeffs: Vec<u64>,
    pub value: u64,
}

impl DDecomposition {
    /// Largest `t` with a nonzero coefficient.
    pub fn top(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c > 0)
    }
}

impl DSequence {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        match terms.first() {
            None => return Err(Error::InvalidDSequence("empty sequence".into())),
            Some(&1) => {}
            Some(&d0) => return Err(Error::InvalidDSequence(format!("d_0 must be 1, got {d0}"))),
        }
        for w in terms.windows(2) {
            if w[1] <= w[0] || w[1] % w[0] != 0 {
                return Err(Error::InvalidDSequence(format!(
                    "{} does not properly divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(DSequence { terms })
    }

    /// `1 | p | p^2 | ... | p^s`.
    pub fn powers_of(p: u64, s: usize) -> Result<Self> {
        let mut terms = vec![1u64];
        for _ in 0..s {
            let next = terms
                .last()
                .and_then(|d| d.checked_mul(p))
                .ok_or(Error::ExponentOverflow)?;
            terms.push(next);
        }
        Self::new(terms)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// `d_t`.
    pub fn get(&self, t: usize) -> u64 {
        self.terms[t]
    }

    /// `s`, the index of the last entry.
    pub fn top_index(&self) -> usize {
        self.terms.len() - 1
    }

    /// Greedy expansion from the top; the top coefficient is unbounded.
    pub fn decompose(&self, a: u64) -> DDecomposition {
        let mut coeffs = vec![0; self.terms.len()];
        let mut rest = a;
        for (t, &d) in self.terms.iter().enumerate().rev() {
            coeffs[t] = rest / d;
            rest %= d;
        }
        DDecomposition { coeffs, value: a }
    }

    pub fn recompose(&self, coeffs: &[u64]) -> Result<u64> {
        if coeffs.len() != self.terms.len() {
            return Err(Error::InvalidDSequence(format!(
                "{} coefficients for a sequence of length {}",
                coeffs.len(),
                self.terms.len()
            )));
        }
        coeffs.iter().zip(&self.terms).try_fold(0u64, |acc, (&c, &d)| {
            c.checked_mul(d)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::ExponentOverflow)
        })
    }

    /// `a <=_d b`: every coefficient of `a` is at most the matching one of `b`.
    pub fn leq(&self, a: u64, b: u64) -> bool {
        let (da, db) = (self.decompose(a), self.decompose(b));
        da.coeffs.iter().zip(&db.coeffs).all(|(x, y)| x <= y)
    }

    /// `a <_d b`: `a <=_d b` and `a != b`.
    pub fn lt(&self, a: u64, b: u64) -> bool {
        a != b && self.leq(a, b)
    }

    /// All `t <= b` with `t <=_d b`, increasing.
    pub fn below(&self, b: u64) -> Vec<u64> {
        let db = self.decompose(b);
        let mut out = vec![0u64];
        for (t, &c) in db.coeffs.iter().enumerate() {
            let d = self.terms[t];
            let prev = out.clone();
            for k in 1..=c {
                out.extend(prev.iter().map(|x| x + k * d));
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for DSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for DSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .split('|')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidDSequence(format!("bad entry {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(terms)
    }
}

impl Serialize for DSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
