use serde::Serialize;

use super::dseq::{DDecomposition, DSequence};
use super::principal::{digit_product, principal_d_fixed};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// One pair `(i_q, alpha_q)` together with the d-digits of `alpha_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerPair {
    /// 0-based variable index.
    pub var: usize,
    pub alpha: u64,
    pub digits: DDecomposition,
    /// `s_q`, the top nonzero digit.
    pub top: usize,
}

/// Normalized data of `<x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}>_d`: strictly
/// increasing variables and exponents, no pair implied by another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariablePowerSpec {
    pub ambient: usize,
    pub d: DSequence,
    pub pairs: Vec<PowerPair>,
}

impl VariablePowerSpec {
    /// Drops every pair `(i, a)` for which another pair `(j, b)` has
    /// `i <= j` and `a >= b`, since then `<x_i^a> ⊆ <x_j^b>`.
    pub fn new(ambient: usize, pairs: &[(usize, u64)], d: &DSequence) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::EmptyAmbient);
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput("no variable powers"));
        }
        for &(var, alpha) in pairs {
            if var >= ambient {
                return Err(Error::VariableOutOfRange { index: var, ambient });
            }
            if alpha == 0 {
                return Err(Error::InvalidPowers(format!("x{}^0 is the unit", var + 1)));
            }
        }
        let mut kept: Vec<(usize, u64)> = pairs
            .iter()
            .copied()
            .filter(|&(i, a)| !pairs.iter().any(|&(j, b)| (j, b) != (i, a) && i <= j && a >= b))
            .collect();
        kept.sort_unstable();
        kept.dedup();
        let pairs = kept
            .into_iter()
            .map(|(var, alpha)| {
                let digits = d.decompose(alpha);
                let top = digits.top().expect("alpha is positive");
                PowerPair { var, alpha, digits, top }
            })
            .collect::<Vec<_>>();
        debug_assert!(pairs.windows(2).all(|w| w[0].var < w[1].var && w[0].alpha < w[1].alpha));
        debug_assert!(pairs.windows(2).all(|w| w[0].top <= w[1].top));
        Ok(VariablePowerSpec {
            ambient,
            d: d.clone(),
            pairs,
        })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `(i_q, alpha_q)` with 0-based variables.
    pub fn raw_pairs(&self) -> Vec<(usize, u64)> {
        self.pairs.iter().map(|p| (p.var, p.alpha)).collect()
    }

    /// Whether `i_r = n`, which makes the ideal artinian.
    pub fn reaches_last_variable(&self) -> bool {
        self.pairs.last().map(|p| p.var + 1) == Some(self.ambient)
    }

    /// `I_q`, the principal d-fixed ideal of pair `q` (0-based).
    pub fn piece(&self, q: usize) -> Result<MonomialIdeal> {
        let p = &self.pairs[q];
        principal_d_fixed(self.ambient, p.var, p.alpha, &self.d)
    }

    /// `I_1 + ... + I_{q+1}` (0-based `q`).
    pub fn partial_sum(&self, q: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::zero(self.ambient)?;
        for e in 0..=q {
            acc = acc.sum(&self.piece(e)?)?;
        }
        Ok(acc)
    }

    /// The variable range `n_q = {x_{i_{q-1}+1}, ..., x_{i_q}}` as 0-based
    /// `lo..hi`.
    pub fn segment(&self, q: usize) -> (usize, usize) {
        let lo = if q == 0 { 0 } else { self.pairs[q - 1].var + 1 };
        (lo, self.pairs[q].var + 1)
    }
}

/// `<x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}>_d = sum_q I_q`.
pub fn dfixed_from_powers(spec: &VariablePowerSpec) -> Result<MonomialIdeal> {
    spec.partial_sum(spec.len() - 1)
}

/// Which tuples enter the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaRule {
    /// The four constraints exactly as printed. Digit sums may carry, and
    /// then the product term is not inside the ideal.
    #[default]
    AsPrinted,
    /// The printed constraints plus: for every prefix, the digit-wise sums
    /// of the `g_e` stay at or below the digits of `a_q`.
    CarryFree,
}

/// The tuples `(g_1, ..., g_q)` with every `g_e <=_d a_q`, partial sums
/// `g_1 + ... + g_i < a_i` and `<_d a_q` for `i < q`, and total `a_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaFamily {
    /// 1-based pair number.
    pub q: usize,
    pub rule: GammaRule,
    pub tuples: Vec<Vec<u64>>,
}

/// `q` is 1-based, matching the pair numbering.
pub fn gamma_families(spec: &VariablePowerSpec, q: usize) -> Result<GammaFamily> {
    gamma_families_with(spec, q, GammaRule::AsPrinted)
}

pub fn gamma_families_with(spec: &VariablePowerSpec, q: usize, rule: GammaRule) -> Result<GammaFamily> {
    if q == 0 || q > spec.len() {
        return Err(Error::InvalidPowers(format!("q = {q} outside 1..={}", spec.len())));
    }
    let target = spec.pairs[q - 1].alpha;
    let mut search = GammaSearch {
        spec,
        q,
        target,
        allowed: spec.d.below(target),
        rule,
        current: Vec::with_capacity(q),
        digit_sum: vec![0; spec.d.terms().len()],
        out: Vec::new(),
    };
    search.extend(0);
    Ok(GammaFamily {
        q,
        rule,
        tuples: search.out,
    })
}

struct GammaSearch<'a> {
    spec: &'a VariablePowerSpec,
    q: usize,
    target: u64,
    allowed: Vec<u64>,
    rule: GammaRule,
    current: Vec<u64>,
    digit_sum: Vec<u64>,
    out: Vec<Vec<u64>>,
}

impl GammaSearch<'_> {
    /// Adds the digits of `g` to the running sums; false if the carry-free
    /// rule rejects the result (the sums are left updated either way).
    fn add_digits(&mut self, g: u64) -> bool {
        let digits = self.spec.d.decompose(g).coeffs;
        let cap = &self.spec.pairs[self.q - 1].digits.coeffs;
        let mut fits = true;
        for (t, c) in digits.iter().enumerate() {
            self.digit_sum[t] += c;
            fits &= self.digit_sum[t] <= cap[t];
        }
        fits || self.rule == GammaRule::AsPrinted
    }

    fn remove_digits(&mut self, g: u64) {
        for (t, c) in self.spec.d.decompose(g).coeffs.iter().enumerate() {
            self.digit_sum[t] -= c;
        }
    }

    fn extend(&mut self, sum: u64) {
        let d = &self.spec.d;
        if self.current.len() + 1 == self.q {
            let last = self.target - sum;
            if d.leq(last, self.target) {
                if self.add_digits(last) {
                    let mut tuple = self.current.clone();
                    tuple.push(last);
                    self.out.push(tuple);
                }
                self.remove_digits(last);
            }
            return;
        }
        let i = self.current.len();
        for k in 0..self.allowed.len() {
            let g = self.allowed[k];
            let partial = sum + g;
            if partial >= self.spec.pairs[i].alpha {
                break;
            }
            if !d.lt(partial, self.target) {
                continue;
            }
            if self.add_digits(g) {
                self.current.push(g);
                self.extend(partial);
                self.current.pop();
            }
            self.remove_digits(g);
        }
    }
}

/// The pieces `I^{(q)} = sum_gamma prod_e prod_t (n_e^{[d_t]})^{gamma_{et}}`
/// and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DFixedDecomposition {
    pub rule: GammaRule,
    pub parts: Vec<MonomialIdeal>,
    pub ideal: MonomialIdeal,
}

/// The decomposition over the tuples as printed. It can be strictly larger
/// than [`dfixed_from_powers`]; see [`GammaRule`].
pub fn dfixed_decomposition(spec: &VariablePowerSpec) -> Result<DFixedDecomposition> {
    dfixed_decomposition_with(spec, GammaRule::AsPrinted)
}

pub fn dfixed_decomposition_with(spec: &VariablePowerSpec, rule: GammaRule) -> Result<DFixedDecomposition> {
    let n = spec.ambient;
    let mut parts = Vec::with_capacity(spec.len());
    let mut total = MonomialIdeal::zero(n)?;
    for q in 1..=spec.len() {
        let family = gamma_families_with(spec, q, rule)?;
        let mut part = MonomialIdeal::zero(n)?;
        for tuple in &family.tuples {
            let mut term = MonomialIdeal::unit(n)?;
            for (e, &g) in tuple.iter().enumerate() {
                let (lo, hi) = spec.segment(e);
                term = term.product(&digit_product(n, lo, hi, &spec.d.decompose(g).coeffs, &spec.d)?)?;
            }
            part = part.sum(&term)?;
        }
        total = total.sum(&part)?;
        parts.push(part);
    }
    Ok(DFixedDecomposition {
        rule,
        parts,
        ideal: total,
    })
}

/// The relations around the colon of a partial sum, for pair `q`:
///
/// ```text
/// (I_q : m_q) + P  ⊆  (P : m_q)  ⊆  (P : n_q)  =  (I_q : n_q) + P
/// ```
///
/// with `P = I_1 + ... + I_q`, `m_q = (x_1, ..., x_{i_q})` and `n_q` the
/// segment of pair `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonChain {
    pub q: usize,
    pub lower_in_middle: bool,
    pub middle_in_upper: bool,
    pub upper_matches: bool,
}

impl ColonChain {
    pub fn holds(&self) -> bool {
        self.lower_in_middle && self.middle_in_upper && self.upper_matches
    }
}

/// `q` is 1-based.
pub fn colon_chain(spec: &VariablePowerSpec, q: usize) -> Result<ColonChain> {
    if q == 0 || q > spec.len() {
        return Err(Error::InvalidPowers(format!("q = {q} outside 1..={}", spec.len())));
    }
    let n = spec.ambient;
    let partial = spec.partial_sum(q - 1)?;
    let piece = spec.piece(q - 1)?;
    let (lo, hi) = spec.segment(q - 1);
    let m_q = MonomialIdeal::variable_powers(n, 0..hi, 1)?;
    let n_q = MonomialIdeal::variable_powers(n, lo..hi, 1)?;
    let lower = piece.colon_ideal(&m_q)?.sum(&partial)?;
    let middle = partial.colon_ideal(&m_q)?;
    let upper = partial.colon_ideal(&n_q)?;
    let upper_alt = piece.colon_ideal(&n_q)?.sum(&partial)?;
    Ok(ColonChain {
        q,
        lower_in_middle: lower.is_subset(&middle),
        middle_in_upper: middle.is_subset(&upper),
        upper_matches: upper == upper_alt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfixed::principal::is_d_fixed;

    fn d(s: &str) -> DSequence {
        s.parse().unwrap()
    }

    fn example_spec() -> VariablePowerSpec {
        VariablePowerSpec::new(5, &[(1, 7), (2, 10), (4, 17)], &d("1|2|4|12")).unwrap()
    }

    #[test]
    fn normalization() {
        let seq = d("1|2");
        assert_eq!(example_spec().raw_pairs(), vec![(1, 7), (2, 10), (4, 17)]);
        let s = VariablePowerSpec::new(3, &[(1, 7), (2, 5)], &seq).unwrap();
        assert_eq!(s.raw_pairs(), vec![(2, 5)]);
        let s = VariablePowerSpec::new(3, &[(1, 5), (2, 5), (2, 5)], &seq).unwrap();
        assert_eq!(s.raw_pairs(), vec![(2, 5)]);
        let s = VariablePowerSpec::new(1, &[(0, 4)], &seq).unwrap();
        assert_eq!(s.raw_pairs(), vec![(0, 4)]);
        assert!(VariablePowerSpec::new(2, &[(2, 4)], &seq).is_err());
        assert!(VariablePowerSpec::new(2, &[(1, 0)], &seq).is_err());
        assert!(VariablePowerSpec::new(2, &[], &seq).is_err());
    }

    #[test]
    fn gamma_examples() {
        let spec = example_spec();
        assert_eq!(gamma_families(&spec, 1).unwrap().tuples, vec![vec![7]]);
        assert_eq!(
            gamma_families(&spec, 2).unwrap().tuples,
            vec![vec![0, 10], vec![2, 8], vec![4, 6], vec![6, 4]]
        );
        let mut got = gamma_families(&spec, 3).unwrap().tuples;
        got.sort();
        let mut expected = vec![
            vec![0, 0, 17],
            vec![0, 1, 16],
            vec![0, 4, 13],
            vec![0, 5, 12],
            vec![1, 0, 16],
            vec![1, 4, 12],
            vec![4, 0, 13],
            vec![4, 1, 12],
            vec![5, 0, 12],
        ];
        expected.sort();
        assert_eq!(got, expected);
        assert!(gamma_families(&spec, 4).is_err());
    }

    #[test]
    fn decomposition_matches_sum() {
        let spec = example_spec();
        let dec = dfixed_decomposition(&spec).unwrap();
        assert_eq!(dec.ideal, dfixed_from_powers(&spec).unwrap());
        assert_eq!(dec.parts[0], spec.piece(0).unwrap());
        assert!(is_d_fixed(&dec.ideal, &spec.d));
        let strict = dfixed_decomposition_with(&spec, GammaRule::CarryFree).unwrap();
        assert_eq!(strict.parts, dec.parts);
    }

    #[test]
    fn printed_tuples_can_carry() {
        // 1 + 1 = 2 carries over 1|2, so (1, 1, 9) brings in x1*x2*x3^9,
        // which is not in <x3^11>_d.
        let spec = VariablePowerSpec::new(3, &[(0, 8), (1, 10), (2, 11)], &d("1|2")).unwrap();
        assert!(gamma_families(&spec, 3).unwrap().tuples.contains(&vec![1, 1, 9]));
        let strict = gamma_families_with(&spec, 3, GammaRule::CarryFree).unwrap();
        assert!(!strict.tuples.contains(&vec![1, 1, 9]));
        let direct = dfixed_from_powers(&spec).unwrap();
        let printed = dfixed_decomposition(&spec).unwrap().ideal;
        let u = crate::monomial::Monomial::new(vec![1, 1, 9]).unwrap();
        assert!(printed.contains(&u) && !direct.contains(&u));
        assert!(direct.is_subset(&printed));
        assert_eq!(dfixed_decomposition_with(&spec, GammaRule::CarryFree).unwrap().ideal, direct);
    }

    fn sum_of_products(terms: &[Vec<MonomialIdeal>]) -> MonomialIdeal {
        let mut acc = MonomialIdeal::zero(5).unwrap();
        for factors in terms {
            let mut t = MonomialIdeal::unit(5).unwrap();
            for f in factors {
                t = t.product(f).unwrap();
            }
            acc = acc.sum(&t).unwrap();
        }
        acc
    }

    #[test]
    fn pieces_as_displayed() {
        let spec = example_spec();
        let parts = dfixed_decomposition(&spec).unwrap().parts;
        let row = |lo, hi, e| MonomialIdeal::variable_powers(5, lo..hi, e).unwrap();
        let a = |e| row(0, 2, e);
        let x3 = |e| row(2, 3, e);
        let b = |e| row(3, 5, e);
        let second = sum_of_products(&[
            vec![a(2), a(4), x3(4)],
            vec![a(4), x3(6)],
            vec![a(2), x3(8)],
            vec![x3(10)],
        ]);
        assert_eq!(parts[1], second);
        let third = sum_of_products(&[
            vec![a(1), a(4), b(12)],
            vec![a(4), x3(1), b(12)],
            vec![a(4), b(1), b(12)],
            vec![a(1), x3(4), b(12)],
            vec![a(1), b(4), b(12)],
            vec![x3(1), b(4), b(12)],
            vec![x3(4), b(1), b(12)],
            vec![x3(5), b(12)],
            vec![b(1), b(4), b(12)],
        ]);
        assert_eq!(parts[2], third);
    }

    #[test]
    fn colon_chain_on_example() {
        let spec = VariablePowerSpec::new(3, &[(0, 2), (1, 7), (2, 16)], &d("1|4|12")).unwrap();
        for q in 1..=3 {
            assert!(colon_chain(&spec, q).unwrap().holds(), "q = {q}");
        }
    }
}
