//! Borel-type and strong Borel type (SBT) ideals: classification, the
//! principal SBT closed form, sequential chains and three regularity paths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A generator `u` and a pair of variables `target < source` for which the
/// SBT exchange `x_target^t * u / x_source^{nu_source(u)}` never lands in the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbtViolation {
    pub monomial: Monomial,
    pub source: usize,
    pub target: usize,
}

/// `(I : x_j^∞) = (I : (x_1, ..., x_j)^∞)` for every `j`.
pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(borel_type_failure(ideal)?.is_none())
}

/// The first variable `j` at which the two saturations differ.
pub fn borel_type_failure(ideal: &MonomialIdeal) -> Result<Option<usize>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient();
    for j in 0..n {
        let by_variable = ideal.saturate_variable(j)?;
        let by_prime = ideal.saturate_ideal(&MonomialIdeal::variables(n, j + 1)?)?;
        if by_variable != by_prime {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Smallest `t <= nu_source(u)` with `x_target^t * u / x_source^{nu} ∈ I`.
fn sbt_exchange_witness(ideal: &MonomialIdeal, u: &Monomial, source: usize, target: usize) -> Option<u64> {
    let nu = u.exp(source);
    let base = u.with_exp(source, 0);
    (0..=nu).find(|&t| ideal.contains(&base.with_exp(target, base.exp(target) + t)))
}

/// SBT test on the minimal generators.
///
/// If `v = u * w` with `u ∈ G(I)` and `t` works for `u`, then
/// `x_j^t v / x_i^{nu_i(v)} = (x_j^t u / x_i^{nu_i(u)}) * (w / x_i^{nu_i(w)})`
/// lies in `I` as well, so generators suffice.
pub fn is_sbt(ideal: &MonomialIdeal) -> bool {
    sbt_violation(ideal).is_none()
}

pub fn sbt_violation(ideal: &MonomialIdeal) -> Option<SbtViolation> {
    ideal.generators().iter().find_map(|u| sbt_violation_at(ideal, u))
}

pub(crate) fn sbt_violation_at(ideal: &MonomialIdeal, u: &Monomial) -> Option<SbtViolation> {
    for source in 0..u.ambient() {
        if u.exp(source) == 0 {
            continue;
        }
        for target in 0..source {
            if sbt_exchange_witness(ideal, u, source, target).is_none() {
                return Some(SbtViolation {
                    monomial: u.clone(),
                    source,
                    target,
                });
            }
        }
    }
    None
}

/// The support of `u` as `(variable, exponent)` blocks with increasing
/// variables.
pub fn support_blocks(u: &Monomial) -> Vec<(usize, u64)> {
    u.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i, e))
        .collect()
}

/// `SBT(u) = prod_q (x_1^{a_q}, ..., x_{i_q}^{a_q})` for
/// `u = x_{i_1}^{a_1} ... x_{i_r}^{a_r}`.
pub fn sbt_principal(u: &Monomial) -> Result<MonomialIdeal> {
    if u.is_one() {
        return Err(Error::UnitMonomial);
    }
    let n = u.ambient();
    let mut acc = MonomialIdeal::unit(n)?;
    for (i, a) in support_blocks(u) {
        acc = acc.product(&MonomialIdeal::variable_powers(n, 0..=i, a)?)?;
    }
    Ok(acc)
}

/// The smallest SBT ideal containing every monomial of `set`.
///
/// Any SBT ideal containing `u` holds some `x_j^t u / x_i^{nu}` with
/// `t <= nu`, hence its multiple `x_j^{nu} u / x_i^{nu}`; adding exactly
/// those monomials until nothing changes therefore stays inside every SBT
/// ideal containing `set`. Added monomials keep their degree, so the loop
/// ends.
pub fn sbt_closure(set: &[Monomial]) -> Result<MonomialIdeal> {
    let first = set.first().ok_or(Error::EmptyInput("SBT closure of an empty set"))?;
    if set.iter().any(Monomial::is_one) {
        return Err(Error::UnitMonomial);
    }
    let n = first.ambient();
    let mut ideal = MonomialIdeal::minimalize(n, set.iter().cloned())?;
    loop {
        let mut added = Vec::new();
        for u in ideal.generators() {
            for source in 0..n {
                let nu = u.exp(source);
                if nu == 0 {
                    continue;
                }
                for target in 0..source {
                    if sbt_exchange_witness(&ideal, u, source, target).is_none() {
                        added.push(u.shift(source, target, nu)?);
                    }
                }
            }
        }
        if added.is_empty() {
            return Ok(ideal);
        }
        ideal = MonomialIdeal::minimalize(n, ideal.generators().iter().cloned().chain(added))?;
    }
}

/// One step `I_l -> I_{l+1} = (I_l : x_{n_l}^∞)` of a sequential chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub ideal: MonomialIdeal,
    /// `n_l = m(I_l)`, 0-based.
    pub variable: usize,
    /// `J_l`: `G(I_l)` inside `K[x_1, ..., x_{n_l}]`.
    pub section: MonomialIdeal,
    /// `J_l^sat` with respect to the irrelevant ideal of that ring.
    pub section_saturation: MonomialIdeal,
    /// A top-degree monomial of `J_l^sat \ J_l`.
    pub top_element: Option<Monomial>,
}

impl ChainStep {
    /// `s(J_l^sat / J_l)`.
    pub fn top_degree(&self) -> Option<u64> {
        self.top_element.as_ref().map(Monomial::degree)
    }
}

/// The ascending chain `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequentialChain {
    pub ambient: usize,
    pub steps: Vec<ChainStep>,
}

impl SequentialChain {
    /// `max_l s(J_l^sat / J_l) + 1`.
    pub fn regularity(&self) -> Result<u64> {
        self.steps
            .iter()
            .filter_map(ChainStep::top_degree)
            .max()
            .map(|s| s + 1)
            .ok_or(Error::DegenerateChain)
    }

    /// Index of step `l` when the chain is numbered from the top instead,
    /// as in `I = I_r ⊂ ... ⊂ I_0 = S`.
    pub fn descending_index(&self, l: usize) -> usize {
        self.steps.len() - l
    }
}

pub fn sequential_chain(ideal: &MonomialIdeal) -> Result<SequentialChain> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !is_borel_type(ideal)? {
        return Err(Error::NotBorelType);
    }
    let mut steps = Vec::new();
    let mut current = ideal.clone();
    while !current.is_unit() {
        let var = current
            .max_variable()
            .expect("a proper nonzero ideal has a non-unit generator");
        let k = var + 1;
        let section = current.restrict(k)?;
        let section_saturation = section.saturate_ideal(&MonomialIdeal::variables(k, k)?)?;
        let top_element = section_saturation.top_quotient_element(&section)?;
        if let Some(w) = &top_element {
            // reg(J) <= k (deg(J) - 1) + 1 for Borel-type J.
            let bound = k as u64 * section.max_generator_degree().saturating_sub(1);
            if w.degree() > bound {
                return Err(Error::BoundExceeded {
                    what: "s(J^sat/J) Borel-type bound",
                    bound,
                });
            }
        }
        let next = current.saturate_variable(var)?;
        steps.push(ChainStep {
            ideal: current,
            variable: var,
            section,
            section_saturation,
            top_element,
        });
        current = next;
    }
    Ok(SequentialChain {
        ambient: ideal.ambient(),
        steps,
    })
}

/// Regularity from the sequential chain: `max_l s(J_l^sat/J_l) + 1`.
pub fn reg_sequential(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    sequential_chain(ideal)?.regularity()
}

/// One row `chi_{q,1..i_q}^{(f)}` of the closed-form table for `SBT(u)`.
/// `q` and `f` are 1-based block numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiRow {
    pub q: usize,
    pub f: usize,
    pub entries: Vec<u64>,
    pub sum: u64,
}

/// The closed-form chi table for a principal SBT ideal, evaluated exactly as
/// the case split reads:
///
/// ```text
/// chi_{qj}^{(f)} = a_j + a_q - 1   if j < q and a_j >= a_f
///                  a_f - 1          otherwise
/// ```
///
/// for `1 <= j <= i_q` and admissible `f <= q` with `a_f <= a_q`. The
/// enumerative paths ([`reg_sequential`], [`reg_truncation`]) remain the
/// authority; this table is reported as "formula (as printed)".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiTable {
    /// `(i_q, a_q)` with 1-based variable numbers.
    pub blocks: Vec<(usize, u64)>,
    pub rows: Vec<ChiRow>,
    /// `chi_q = max_f chi_q^{(f)}`, one per block.
    pub chi: Vec<u64>,
    pub regularity: u64,
}

impl ChiTable {
    pub fn row(&self, q: usize, f: usize) -> Option<&ChiRow> {
        self.rows.iter().find(|r| r.q == q && r.f == f)
    }
}

pub fn chi_table(u: &Monomial) -> Result<ChiTable> {
    if u.is_one() {
        return Err(Error::UnitMonomial);
    }
    let blocks: Vec<(usize, u64)> = support_blocks(u).into_iter().map(|(i, a)| (i + 1, a)).collect();
    let alpha = |k: usize| blocks[k - 1].1;
    let r = blocks.len();
    let mut rows = Vec::new();
    let mut chi = Vec::with_capacity(r);
    for q in 1..=r {
        let iq = blocks[q - 1].0;
        let mut best = 0;
        for f in (1..=q).filter(|&f| alpha(f) <= alpha(q)) {
            let entries: Vec<u64> = (1..=iq)
                .map(|j| {
                    if j < q && alpha(j) >= alpha(f) {
                        alpha(j) + alpha(q) - 1
                    } else {
                        alpha(f) - 1
                    }
                })
                .collect();
            let sum = entries.iter().sum();
            best = best.max(sum);
            rows.push(ChiRow { q, f, entries, sum });
        }
        chi.push(best);
    }
    let regularity = chi.iter().max().copied().unwrap_or(0) + 1;
    Ok(ChiTable {
        blocks,
        rows,
        chi,
        regularity,
    })
}

/// `max_q chi_q + 1` from [`chi_table`].
pub fn reg_sbt_formula(u: &Monomial) -> Result<u64> {
    Ok(chi_table(u)?.regularity)
}

/// `n (deg(I) - 1) + 1`.
pub fn reg_upper_bound(ideal: &MonomialIdeal) -> u64 {
    ideal.ambient() as u64 * ideal.max_generator_degree().saturating_sub(1) + 1
}

/// Smallest `e >= deg(I)` for which `I_{>=e}` is stable, scanning no further
/// than [`reg_upper_bound`].
pub fn reg_truncation(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_borel_type(ideal)? {
        return Err(Error::NotBorelType);
    }
    first_stable_truncation(ideal)
}

pub(crate) fn first_stable_truncation(ideal: &MonomialIdeal) -> Result<u64> {
    let bound = reg_upper_bound(ideal);
    for e in ideal.max_generator_degree()..=bound {
        if ideal.truncate(e)?.is_stable() {
            return Ok(e);
        }
    }
    Err(Error::BoundExceeded {
        what: "stable truncation scan",
        bound,
    })
}
