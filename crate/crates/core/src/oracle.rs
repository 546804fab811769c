//! Brute-force ground truth. Nothing here calls a closed-form path; only
//! monomial and ideal primitives are shared.

use serde::Serialize;

use crate::borel::SequentialChain;
use crate::dfixed::DSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_in_box, DegreeMonomials, Monomial};

/// The monomials of `(I : m) \ I` and the top degree among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub socle: Vec<Monomial>,
    pub max_degree: Option<u64>,
    pub reg: Option<u64>,
}

/// Inclusive bounds `(a_1 - 1, ..., a_n - 1)` from the pure powers
/// `x_i^{a_i}` of a proper artinian ideal.
fn artinian_box(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    (0..ideal.ambient())
        .map(|i| ideal.pure_power(i).map(|a| a - 1).ok_or(Error::NotArtinian))
        .collect()
}

/// Every standard monomial `u` with `u * x_j ∈ I` for all `j`, found by
/// walking the box spanned by the pure powers of `I`.
pub fn socle_oracle(ideal: &MonomialIdeal) -> Result<SocleReport> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let bounds = artinian_box(ideal)?;
    let mut socle = Vec::new();
    let mut buf = vec![0u64; bounds.len()];
    for_each_in_box(&bounds, |u| {
        if ideal.contains_exps(u) {
            return;
        }
        buf.copy_from_slice(u);
        let killed = (0..buf.len()).all(|j| {
            buf[j] += 1;
            let inside = ideal.contains_exps(&buf);
            buf[j] -= 1;
            inside
        });
        if killed {
            socle.push(Monomial::new(u.to_vec()).expect("box point has the ambient length"));
        }
    });
    socle.sort_by(|a, b| a.graded_cmp(b));
    let max_degree = socle.iter().map(Monomial::degree).max();
    let reg = max_degree.map(|e| e + 1);
    Ok(SocleReport {
        socle,
        max_degree,
        reg,
    })
}

/// Top degree of a standard monomial of an artinian ideal, with one
/// monomial attaining it.
pub fn top_standard_monomial(ideal: &MonomialIdeal) -> Result<Monomial> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let bounds = artinian_box(ideal)?;
    let mut best: Option<Vec<u64>> = None;
    let mut best_deg = 0;
    for_each_in_box(&bounds, |u| {
        let deg: u64 = u.iter().sum();
        if (best.is_none() || deg > best_deg) && !ideal.contains_exps(u) {
            best_deg = deg;
            best = Some(u.to_vec());
        }
    });
    Ok(Monomial::new(best.expect("1 is standard in a proper ideal")).expect("ambient length"))
}

pub fn top_standard_degree(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(top_standard_monomial(ideal)?.degree())
}

/// Regularity of an artinian ideal from its socle.
pub fn reg_socle_artinian(ideal: &MonomialIdeal) -> Result<u64> {
    socle_oracle(ideal)?.reg.ok_or(Error::UnitIdeal)
}

/// Monomials `u ∈ Jsat \ J` with `u * x_j ∈ J` for every `j`, found inside
/// the box of exponents below the largest exponent occurring in either
/// generating set. Any quotient element outside that box generates an
/// infinite ray, which is reported as [`Error::InfiniteLength`].
pub fn relative_socle(jsat: &MonomialIdeal, j: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let n = j.ambient();
    if jsat.ambient() != n {
        return Err(Error::AmbientMismatch {
            left: jsat.ambient(),
            right: n,
        });
    }
    let bounds: Vec<u64> = (0..n)
        .map(|i| {
            jsat.generators()
                .iter()
                .chain(j.generators())
                .map(|g| g.exponents()[i])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = Vec::new();
    let mut escaped = false;
    let mut buf = vec![0u64; n];
    for_each_in_box(&bounds, |u| {
        if escaped || !jsat.contains_exps(u) || j.contains_exps(u) {
            return;
        }
        if u.iter().zip(&bounds).any(|(e, b)| e >= b) {
            escaped = true;
            return;
        }
        buf.copy_from_slice(u);
        let killed = (0..n).all(|k| {
            buf[k] += 1;
            let inside = j.contains_exps(&buf);
            buf[k] -= 1;
            inside
        });
        if killed {
            out.push(Monomial::new(u.to_vec()).expect("ambient length"));
        }
    });
    if escaped {
        return Err(Error::InfiniteLength);
    }
    out.sort_by(|a, b| a.graded_cmp(b));
    Ok(out)
}

/// `1 + max_l` of the top socle degree of `J_l^sat / J_l` along a sequential
/// chain. For artinian ideals the chain has the single step `J^sat = S`, so
/// this is the ordinary socle regularity.
pub fn reg_socle_chain(chain: &SequentialChain) -> Result<u64> {
    let mut best: Option<u64> = None;
    for step in &chain.steps {
        let socle = relative_socle(&step.section_saturation, &step.section)?;
        if let Some(top) = socle.iter().map(Monomial::degree).max() {
            best = Some(best.map_or(top, |b| b.max(top)));
        }
    }
    best.map(|b| b + 1).ok_or(Error::DegenerateChain)
}

/// Outcome of a bounded exhaustive check: the first monomial of the ideal
/// that breaks the condition, with the pair of variables involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveCheck {
    pub holds: bool,
    pub max_degree: u64,
    pub checked: u64,
    pub witness: Option<ExhaustiveWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveWitness {
    pub monomial: Monomial,
    pub source: usize,
    pub target: usize,
}

/// Walks every monomial of `I` of degree at most `deg(I) + extra` and asks
/// `bad(u, i, j)` for every `j < i` with `x_i | u`.
fn exhaustive(
    ideal: &MonomialIdeal,
    extra: u64,
    mut bad: impl FnMut(&Monomial, usize, usize) -> bool,
) -> ExhaustiveCheck {
    let max_degree = ideal.max_generator_degree() + extra;
    let mut checked = 0;
    for e in 0..=max_degree {
        for u in DegreeMonomials::new(ideal.ambient(), e) {
            if !ideal.contains(&u) {
                continue;
            }
            checked += 1;
            for i in 0..u.ambient() {
                if u.exponents()[i] == 0 {
                    continue;
                }
                for j in 0..i {
                    if bad(&u, i, j) {
                        return ExhaustiveCheck {
                            holds: false,
                            max_degree,
                            checked,
                            witness: Some(ExhaustiveWitness {
                                monomial: u,
                                source: i,
                                target: j,
                            }),
                        };
                    }
                }
            }
        }
    }
    ExhaustiveCheck {
        holds: true,
        max_degree,
        checked,
        witness: None,
    }
}

fn moved(u: &Monomial, i: usize, j: usize, remove: u64, add: u64) -> Monomial {
    let e = u.exponents();
    u.with_exp(i, e[i] - remove).with_exp(j, e[j] + add)
}

/// Strong Borel type over all monomials up to the degree bound: some
/// `t <= nu_i(u)` has `x_j^t u / x_i^{nu_i(u)} ∈ I`.
pub fn exhaustive_sbt_check(ideal: &MonomialIdeal, extra: u64) -> ExhaustiveCheck {
    exhaustive(ideal, extra, |u, i, j| {
        let nu = u.exponents()[i];
        !(0..=nu).any(|t| ideal.contains(&moved(u, i, j, nu, t)))
    })
}

/// d-fixed over all monomials up to the degree bound: every `t <=_d
/// nu_i(u)` has `u x_j^t / x_i^t ∈ I`.
pub fn exhaustive_dfixed_check(ideal: &MonomialIdeal, d: &DSequence, extra: u64) -> ExhaustiveCheck {
    exhaustive(ideal, extra, |u, i, j| {
        let nu = u.exponents()[i];
        (1..=nu)
            .filter(|&t| d.leq(t, nu))
            .any(|t| !ideal.contains(&moved(u, i, j, t, t)))
    })
}

/// Stability over all monomials up to the degree bound: `x_j u / x_{m(u)}`
/// lies in `I` for `j < m(u)`.
pub fn exhaustive_stable_check(ideal: &MonomialIdeal, extra: u64) -> ExhaustiveCheck {
    exhaustive(ideal, extra, |u, i, j| {
        u.max_support() == Some(i) && !ideal.contains(&moved(u, i, j, 1, 1))
    })
}

/// The witness characterization of Borel type over all monomials up to the
/// degree bound: some `t > 0` has `x_j^t u / x_i^{nu_i(u)} ∈ I`. Exponents
/// of `x_j` beyond the largest one among the generators change nothing, so
/// `t` is searched up to that value.
pub fn borel_witness_check(ideal: &MonomialIdeal, extra: u64) -> ExhaustiveCheck {
    let caps: Vec<u64> = (0..ideal.ambient())
        .map(|j| ideal.generators().iter().map(|g| g.exponents()[j]).max().unwrap_or(0))
        .collect();
    exhaustive(ideal, extra, |u, i, j| {
        let nu = u.exponents()[i];
        !(1..=caps[j].max(1)).any(|t| ideal.contains(&moved(u, i, j, nu, t)))
    })
}
