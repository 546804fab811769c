//! Monomial ideals stored as their minimal generating sets.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{divides_exps, for_each_in_box, graded_cmp_exps, DegreeMonomials, Monomial};

/// A monomial ideal in a polynomial ring with `ambient` variables.
///
/// The generators are always a divisibility antichain sorted by
/// [`Monomial::graded_cmp`], so structural equality is ideal equality.
/// The zero ideal has no generators, the unit ideal has exactly `{1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

/// The monomials of one degree, split by membership in an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedSlice {
    pub degree: u64,
    pub inside: Vec<Monomial>,
    pub outside: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal generated by `gens`.
    pub fn minimalize(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: bad.ambient(),
            });
        }
        all.sort_by(|a, b| a.graded_cmp(b));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            // Candidates come in nondecreasing degree, so only kept ones of
            // smaller degree can divide `g`.
            let lower = kept.partition_point(|k| k.degree() < g.degree());
            if !kept[..lower].iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal {
            ambient,
            gens: kept,
        })
    }

    pub fn zero(ambient: usize) -> Result<Self> {
        Self::minimalize(ambient, [])
    }

    pub fn unit(ambient: usize) -> Result<Self> {
        Self::minimalize(ambient, [Monomial::one(ambient)?])
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            ambient: u.ambient(),
            gens: vec![u],
        }
    }

    /// The irrelevant ideal `(x_1, ..., x_k)` inside `ambient` variables.
    pub fn variables(ambient: usize, k: usize) -> Result<Self> {
        if k > ambient {
            return Err(Error::VariableOutOfRange { index: k - 1, ambient });
        }
        let gens = (0..k)
            .map(|i| Monomial::var_power(ambient, i, 1))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ambient, gens)
    }

    /// The Frobenius-style power `(x_i^e : i in vars)`.
    pub fn variable_powers(ambient: usize, vars: impl IntoIterator<Item = usize>, e: u64) -> Result<Self> {
        let gens = vars
            .into_iter()
            .map(|i| Monomial::var_power(ambient, i, e))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ambient, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        u.ambient() == self.ambient && self.contains_exps(u.exponents())
    }

    /// Membership of a raw exponent vector of the right length.
    pub(crate) fn contains_exps(&self, u: &[u64]) -> bool {
        let d: u64 = u.iter().sum();
        let lower = self.gens.partition_point(|g| g.degree() < d);
        if self.gens[..lower].iter().any(|g| divides_exps(g.exponents(), u)) {
            return true;
        }
        // Among generators of the same degree, division means equality.
        let upper = lower + self.gens[lower..].partition_point(|g| g.degree() == d);
        self.gens[lower..upper]
            .binary_search_by(|g| graded_cmp_exps(g.exponents(), u))
            .is_ok()
    }

    /// Ideal inclusion `self ⊆ other`, decided on generators.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.ambient == other.ambient && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        Self::minimalize(self.ambient, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.multiply(b)?);
            }
        }
        Self::minimalize(self.ambient, prods)
    }

    /// `self^k`, with `self^0` the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.ambient)?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b)?);
            }
        }
        Self::minimalize(self.ambient, lcms)
    }

    /// `(I : v)`, generated by `u / gcd(u, v)` for `u` in `G(I)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: v.ambient(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|u| u.colon(v))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(self.ambient, gens)
    }

    /// `(I : J)`, the intersection of `(I : v)` over `v` in `G(J)`.
    pub fn colon_ideal(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(j)?;
        let (first, rest) = j.gens.split_first().ok_or(Error::ZeroIdeal)?;
        let mut acc = self.colon_monomial(first)?;
        for v in rest {
            acc = self.intersect_over(&acc, &self.colon_monomial(v)?)?;
        }
        Ok(acc)
    }

    /// `A ∩ B` for ideals `A, B ⊇ self`: lcms involving a generator that
    /// already lies in `self` are multiples of `G(self)`, so only the
    /// generators outside `self` need pairing.
    fn intersect_over(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        let a_out: Vec<&Monomial> = a.gens.iter().filter(|g| !self.contains(g)).collect();
        let b_out: Vec<&Monomial> = b.gens.iter().filter(|g| !self.contains(g)).collect();
        let mut gens = self.gens.clone();
        for x in &a_out {
            for y in &b_out {
                gens.push(x.lcm(y)?);
            }
        }
        Self::minimalize(self.ambient, gens)
    }

    /// `(I : x_j^∞)`: every generator loses its `x_j` part.
    pub fn saturate_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.ambient {
            return Err(Error::VariableOutOfRange {
                index: j,
                ambient: self.ambient,
            });
        }
        Self::minimalize(self.ambient, self.gens.iter().map(|g| g.with_exp(j, 0)))
    }

    /// `(I : v^∞)`: every generator loses the variables of `v`.
    pub fn saturate_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: v.ambient(),
            });
        }
        let support: Vec<usize> = (0..self.ambient).filter(|&i| v.exponents()[i] > 0).collect();
        Self::minimalize(
            self.ambient,
            self.gens.iter().map(|g| support.iter().fold(g.clone(), |acc, &i| acc.with_exp(i, 0))),
        )
    }

    /// `(I : P^∞) = ∩_{v ∈ G(P)} (I : v^∞)`. If `v^N u ∈ I` for each
    /// generator then every product of `sum N` generators of `P` has some
    /// `v^N` as a factor.
    pub fn saturate_ideal(&self, p: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(p)?;
        let (first, rest) = p.gens.split_first().ok_or(Error::ZeroIdeal)?;
        let mut acc = self.saturate_monomial(first)?;
        for v in rest {
            acc = acc.intersect(&self.saturate_monomial(v)?)?;
        }
        Ok(acc)
    }

    pub fn graded_slice(&self, e: u64) -> GradedSlice {
        let (inside, outside) = DegreeMonomials::new(self.ambient, e).partition(|u| self.contains(u));
        GradedSlice {
            degree: e,
            inside,
            outside,
        }
    }

    /// The ideal generated by all degree-`e` monomials of `I`; this is
    /// `I_{>=e}` whenever `e >= deg(I)`.
    pub fn truncate(&self, e: u64) -> Result<MonomialIdeal> {
        let top = self.max_generator_degree();
        if e < top {
            return Err(Error::TruncationBelowDegree {
                degree: e,
                generator_degree: top,
            });
        }
        let inside = DegreeMonomials::new(self.ambient, e).filter(|u| self.contains(u));
        Self::minimalize(self.ambient, inside)
    }

    /// Generator-level stability test: for every minimal generator `u` and
    /// every `j < m(u)`, `x_j * u / x_{m(u)}` must lie in `I`.
    pub fn is_stable(&self) -> bool {
        self.stability_violation().is_none()
    }

    /// First generator and target variable breaking stability, if any.
    pub fn stability_violation(&self) -> Option<(Monomial, usize)> {
        for u in &self.gens {
            let Some(m) = u.max_support() else { continue };
            for j in 0..m {
                let v = u.shift(m, j, 1).expect("exponent of x_m is positive");
                if !self.contains(&v) {
                    return Some((u.clone(), j));
                }
            }
        }
        None
    }

    /// `deg(I)`: the largest degree of a minimal generator (0 for the zero ideal).
    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `m(I)`: the largest variable occurring in a minimal generator.
    pub fn max_variable(&self) -> Option<usize> {
        self.gens.iter().filter_map(Monomial::max_support).max()
    }

    /// Exponent `a` of the smallest pure power `x_i^a` in `I`, if any.
    pub fn pure_power(&self, i: usize) -> Option<u64> {
        self.gens
            .iter()
            .filter(|g| g.exponents().iter().enumerate().all(|(k, &e)| k == i || e == 0))
            .map(|g| g.exp(i))
            .min()
    }

    /// Contains a pure power of every variable.
    pub fn is_artinian(&self) -> bool {
        (0..self.ambient).all(|i| self.pure_power(i).is_some())
    }

    /// The same generators viewed in the first `k` variables.
    pub fn restrict(&self, k: usize) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.restrict(k))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(k, gens)
    }

    /// Extension to a ring with `k >= ambient` variables.
    pub fn extend(&self, k: usize) -> Result<MonomialIdeal> {
        if k < self.ambient {
            return Err(Error::AmbientMismatch {
                left: k,
                right: self.ambient,
            });
        }
        Self::minimalize(k, self.gens.iter().map(|g| g.extend(k)))
    }

    /// Exponent bounds `M_i = max` over the generators of both ideals.
    fn joint_exponent_bounds(&self, other: &MonomialIdeal) -> Vec<u64> {
        (0..self.ambient)
            .map(|i| {
                self.gens
                    .iter()
                    .chain(&other.gens)
                    .map(|g| g.exp(i))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// A monomial of largest degree in `Jsat \ J` where `self` is `Jsat`,
    /// or `None` when the two ideals coincide.
    ///
    /// Membership in either ideal only depends on `min(u_i, M_i)` where
    /// `M_i` is the largest exponent of `x_i` among both generating sets.
    /// Finite length of `Jsat / J` therefore forces every element of the
    /// difference into the box `u_i < M_i`; the faces `u_i = M_i` of the
    /// closed box act as the sentinel that certifies this.
    pub fn top_quotient_element(&self, j: &MonomialIdeal) -> Result<Option<Monomial>> {
        self.check_ambient(j)?;
        if !j.is_subset(self) {
            return Err(Error::NotContained);
        }
        let bounds = self.joint_exponent_bounds(j);
        let mut best: Option<Vec<u64>> = None;
        let mut escaped = false;
        for_each_in_box(&bounds, |u| {
            if escaped || !self.contains_exps(u) || j.contains_exps(u) {
                return;
            }
            if u.iter().zip(&bounds).any(|(a, b)| a == b) {
                escaped = true;
                return;
            }
            let better = match &best {
                None => true,
                Some(b) => graded_cmp_exps(u, b) == Ordering::Greater,
            };
            if better {
                best = Some(u.to_vec());
            }
        });
        if escaped {
            return Err(Error::InfiniteLength);
        }
        let best = best.map(Monomial::from_exps);
        if let Some(w) = &best {
            let bound: u64 = j.gens.iter().map(Monomial::degree).sum();
            if w.degree() > bound {
                return Err(Error::BoundExceeded {
                    what: "s(Jsat/J) generator-degree-sum bound",
                    bound,
                });
            }
        }
        Ok(best)
    }

    /// `s(Jsat/J)`: the top nonzero degree of the finite-length quotient,
    /// with `self` playing `Jsat`.
    pub fn s_quotient(&self, j: &MonomialIdeal) -> Result<Option<u64>> {
        Ok(self.top_quotient_element(j)?.map(|w| w.degree()))
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.gens.serialize(serializer)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
