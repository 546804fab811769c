use serde::Serialize;

use super::powers::{dfixed_from_powers, VariablePowerSpec};
use super::principal::frobenius_row;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Which exponent the recursive branch compares `alpha_{q+m-2, s_{q+m-2}}`
/// against.
///
/// `Proof` uses `alpha_{q+m-1, s_{q+m-2}}` (same digit on both sides);
/// `Statement` uses `alpha_{q+m-1, s_{q+m-1}}` (each pair's own top digit).
/// Only `Proof` agrees with the enumerated socle on every tested instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecursionVariant {
    #[default]
    Proof,
    Statement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Block width at least 2.
    Direct,
    /// Width-1 block inside a run handled by the recursion.
    Recursive,
}

/// A maximal run of consecutive pairs with equal top digit `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// 0-based pair indices `first..=last`; `last` is `q_j`.
    pub first: usize,
    pub last: usize,
    pub top: usize,
    /// `i_{q_j} - i_{q_{j-1}}` with `i_{q_0} = 0`.
    pub width: usize,
    pub branch: Branch,
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockStructure {
    pub variant: RecursionVariant,
    pub blocks: Vec<Block>,
}

impl BlockStructure {
    pub fn chi(&self) -> Vec<i64> {
        self.blocks.iter().map(|b| b.chi).collect()
    }

    pub fn chi_sum(&self) -> i64 {
        self.blocks.iter().map(|b| b.chi).sum()
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }
}

pub fn block_structure(spec: &VariablePowerSpec, variant: RecursionVariant) -> BlockStructure {
    let pairs = &spec.pairs;
    let d = |t: usize| spec.d.get(t) as i64;
    let digit = |q: usize, t: usize| pairs[q].digits.coeffs[t] as i64;

    let mut blocks: Vec<Block> = Vec::new();
    for (q, p) in pairs.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if b.top == p.top => b.last = q,
            _ => blocks.push(Block {
                first: q,
                last: q,
                top: p.top,
                width: 0,
                branch: Branch::Direct,
                chi: 0,
            }),
        }
    }
    let mut prev_var = 0;
    for b in &mut blocks {
        let end = pairs[b.last].var + 1;
        b.width = end - prev_var;
        prev_var = end;
        if b.width == 1 {
            b.branch = Branch::Recursive;
        }
    }

    // A width-1 block holds a single pair, so block and pair indices move
    // together inside a run.
    let block_of = |q: usize| blocks.iter().position(|b| b.first <= q && q <= b.last).unwrap();
    let mut chi = vec![0i64; blocks.len()];
    let mut j = 0;
    while j < blocks.len() {
        let b = &blocks[j];
        if b.branch == Branch::Direct {
            let s = b.top;
            chi[j] = (d(s) - 1) * b.width as i64 + d(s) * (digit(b.last, s) - 1);
            j += 1;
            continue;
        }
        let run_start = j;
        while j < blocks.len() && blocks[j].branch == Branch::Recursive {
            j += 1;
        }
        let q0 = blocks[run_start].first;
        let mut m = (j - run_start) as i64;
        while m >= 1 {
            let cur = q0 + m as usize - 1;
            if cur == 0 {
                chi[block_of(cur)] = pairs[cur].alpha as i64 - 1;
                m -= 1;
                continue;
            }
            let prev = cur - 1;
            let (sp, sc) = (pairs[prev].top, pairs[cur].top);
            let lhs = digit(prev, sp);
            let rhs = match variant {
                RecursionVariant::Proof => digit(cur, sp),
                RecursionVariant::Statement => digit(cur, sc),
            };
            let tail: i64 = (sp + 1..=sc).map(|t| digit(cur, t) * d(t)).sum();
            if lhs > rhs {
                chi[block_of(cur)] = tail - 1;
                m -= 1;
            } else {
                chi[block_of(cur)] = (digit(cur, sp) - lhs + 1) * d(sp) + tail - 1;
                if m >= 2 {
                    chi[block_of(prev)] = lhs * d(sp) - 1;
                }
                m -= 2;
            }
        }
    }
    for (b, c) in blocks.iter_mut().zip(chi) {
        b.chi = c;
    }
    BlockStructure { variant, blocks }
}

pub fn chi_sequence(spec: &VariablePowerSpec, variant: RecursionVariant) -> Vec<i64> {
    block_structure(spec, variant).chi()
}

fn require_artinian(spec: &VariablePowerSpec) -> Result<()> {
    if spec.reaches_last_variable() {
        Ok(())
    } else {
        Err(Error::NotArtinian)
    }
}

/// `sum_j chi_j` under the default recursion.
pub fn max_socle_degree(spec: &VariablePowerSpec) -> Result<u64> {
    require_artinian(spec)?;
    let sum = block_structure(spec, RecursionVariant::Proof).chi_sum();
    u64::try_from(sum).map_err(|_| Error::InvalidPowers(format!("negative chi sum {sum}")))
}

/// `sum_j chi_j + 1`.
pub fn reg_dfixed_powers(spec: &VariablePowerSpec) -> Result<u64> {
    Ok(max_socle_degree(spec)? + 1)
}

/// `J = J_1 ... J_k` with `J_j = (x_{i_{q_j}}^{chi_j})` for width-1 blocks and
/// `(x_{lo+1} ... x_{hi})^{d_s - 1} sum_e (n_e^{[d_s]})^{alpha_{e,s} - 1}`
/// otherwise, built exactly as written.
pub fn socle_witness_ideal(spec: &VariablePowerSpec) -> Result<MonomialIdeal> {
    require_artinian(spec)?;
    let n = spec.ambient;
    let structure = block_structure(spec, RecursionVariant::Proof);
    let mut acc = MonomialIdeal::unit(n)?;
    let mut lo = 0;
    for b in &structure.blocks {
        let hi = spec.pairs[b.last].var + 1;
        let factor = if b.width == 1 {
            let e = u64::try_from(b.chi).map_err(|_| Error::InvalidPowers("negative chi".into()))?;
            MonomialIdeal::principal(Monomial::var_power(n, hi - 1, e)?)
        } else {
            let ds = spec.d.get(b.top);
            let mut corner = vec![0; n];
            corner[lo..hi].fill(ds - 1);
            let mut inner = MonomialIdeal::zero(n)?;
            for e in b.first..=b.last {
                let (elo, ehi) = spec.segment(e);
                let power = spec.pairs[e].digits.coeffs[b.top] - 1;
                inner = inner.sum(&frobenius_row(n, elo, ehi, ds)?.power(power)?)?;
            }
            MonomialIdeal::principal(Monomial::new(corner)?).product(&inner)?
        };
        acc = acc.product(&factor)?;
        lo = hi;
    }
    Ok(acc)
}

/// The three properties a socle witness ideal should have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessAudit {
    pub witness: MonomialIdeal,
    /// `J ⊆ (I : m)`.
    pub inside_colon: bool,
    /// No generator of `J` lies in `I`.
    pub avoids_ideal: bool,
    /// `deg(J) = sum_j chi_j`.
    pub degree_matches: bool,
    pub degree: u64,
    pub chi_sum: u64,
}

impl WitnessAudit {
    pub fn passes(&self) -> bool {
        self.inside_colon && self.avoids_ideal && self.degree_matches
    }
}

pub fn audit_socle_witness(spec: &VariablePowerSpec) -> Result<WitnessAudit> {
    let ideal = dfixed_from_powers(spec)?;
    let witness = socle_witness_ideal(spec)?;
    let colon = ideal.colon_ideal(&MonomialIdeal::variables(spec.ambient, spec.ambient)?)?;
    let degree = witness.max_generator_degree();
    let chi_sum = max_socle_degree(spec)?;
    Ok(WitnessAudit {
        inside_colon: witness.is_subset(&colon),
        avoids_ideal: witness.generators().iter().all(|g| !ideal.contains(g)),
        degree_matches: degree == chi_sum,
        degree,
        chi_sum,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfixed::dseq::DSequence;

    fn spec(n: usize, pairs: &[(usize, u64)], d: &str) -> VariablePowerSpec {
        VariablePowerSpec::new(n, pairs, &d.parse::<DSequence>().unwrap()).unwrap()
    }

    #[test]
    fn two_blocks_direct() {
        let s = spec(5, &[(1, 7), (2, 10), (4, 17)], "1|2|6|12");
        let b = block_structure(&s, RecursionVariant::Proof);
        assert_eq!(b.k(), 2);
        assert_eq!(b.blocks[0].first, 0);
        assert_eq!(b.blocks[0].last, 1);
        assert_eq!(b.blocks[0].width, 3);
        assert_eq!(b.blocks[1].width, 2);
        assert_eq!(b.chi(), vec![15, 22]);
        assert_eq!(max_socle_degree(&s).unwrap(), 37);
        assert_eq!(reg_dfixed_powers(&s).unwrap(), 38);
    }

    #[test]
    fn three_singletons_recursive() {
        let s = spec(3, &[(0, 2), (1, 7), (2, 16)], "1|4|12");
        let b = block_structure(&s, RecursionVariant::Proof);
        assert!(b.blocks.iter().all(|b| b.branch == Branch::Recursive));
        assert_eq!(b.chi(), vec![1, 3, 15]);
        assert_eq!(max_socle_degree(&s).unwrap(), 19);
        assert_eq!(chi_sequence(&s, RecursionVariant::Statement), vec![1, 3, 15]);
    }

    #[test]
    fn single_pair() {
        let s = spec(3, &[(2, 16)], "1|4|12");
        assert_eq!(chi_sequence(&s, RecursionVariant::Proof), vec![33]);
        let s = spec(1, &[(0, 5)], "1|2");
        assert_eq!(chi_sequence(&s, RecursionVariant::Proof), vec![4]);
    }

    #[test]
    fn non_artinian_is_rejected() {
        let s = spec(3, &[(1, 4)], "1|2");
        assert_eq!(max_socle_degree(&s), Err(Error::NotArtinian));
        assert_eq!(socle_witness_ideal(&s), Err(Error::NotArtinian));
    }

    #[test]
    fn witness_for_single_pair() {
        let s = spec(2, &[(1, 2)], "1|2");
        let w = socle_witness_ideal(&s).unwrap();
        assert_eq!(w, MonomialIdeal::principal(Monomial::new(vec![1, 1]).unwrap()));
        assert!(audit_socle_witness(&s).unwrap().passes());
    }
}
