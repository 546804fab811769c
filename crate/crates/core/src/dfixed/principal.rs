use serde::Serialize;

use super::dseq::DSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A generator `u`, variables `target < source` and a shift `t <=_d
/// nu_source(u)` with `u * x_target^t / x_source^t` outside the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DFixedViolation {
    pub monomial: Monomial,
    pub source: usize,
    pub target: usize,
    pub shift: u64,
}

/// `(x_lo^e, ..., x_{hi-1}^e)` in `ambient` variables.
pub fn frobenius_row(ambient: usize, lo: usize, hi: usize, e: u64) -> Result<MonomialIdeal> {
    MonomialIdeal::variable_powers(ambient, lo..hi, e)
}

/// `prod_t (row^{[d_t]})^{coeffs[t]}` over the variables `lo..hi`.
pub(crate) fn digit_product(
    ambient: usize,
    lo: usize,
    hi: usize,
    coeffs: &[u64],
    d: &DSequence,
) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(ambient)?;
    for (t, &c) in coeffs.iter().enumerate() {
        if c > 0 {
            acc = acc.product(&frobenius_row(ambient, lo, hi, d.get(t))?.power(c)?)?;
        }
    }
    Ok(acc)
}

/// Generator-level d-fixed test: for every generator `u`, every `j < i` and
/// every `0 < t <=_d nu_i(u)`, `u * x_j^t / x_i^t` lies in the ideal.
pub fn is_d_fixed(ideal: &MonomialIdeal, d: &DSequence) -> bool {
    d_fixed_violation(ideal, d).is_none()
}

pub fn d_fixed_violation(ideal: &MonomialIdeal, d: &DSequence) -> Option<DFixedViolation> {
    for u in ideal.generators() {
        for source in 0..u.ambient() {
            let nu = u.exp(source);
            if nu == 0 {
                continue;
            }
            for shift in d.below(nu).into_iter().filter(|&t| t > 0) {
                for target in 0..source {
                    let moved = u.with_exp(source, nu - shift).with_exp(target, u.exp(target) + shift);
                    if !ideal.contains(&moved) {
                        return Some(DFixedViolation {
                            monomial: u.clone(),
                            source,
                            target,
                            shift,
                        });
                    }
                }
            }
        }
    }
    None
}

/// The smallest d-fixed ideal containing `x_var^alpha`:
/// `prod_t ((x_1, ..., x_{var+1})^{[d_t]})^{alpha_t}`.
pub fn principal_d_fixed(ambient: usize, var: usize, alpha: u64, d: &DSequence) -> Result<MonomialIdeal> {
    if var >= ambient {
        return Err(Error::VariableOutOfRange { index: var, ambient });
    }
    if alpha == 0 {
        return Err(Error::InvalidPowers("exponent must be positive".into()));
    }
    digit_product(ambient, 0, var + 1, &d.decompose(alpha).coeffs, d)
}

/// `alpha_s d_s + (n - 1)(d_s - 1)`, evaluated as written.
pub fn principal_regularity_formula(n: usize, alpha: u64, d: &DSequence) -> Result<u64> {
    if n == 0 {
        return Err(Error::EmptyAmbient);
    }
    let dec = d.decompose(alpha);
    let s = dec
        .top()
        .ok_or_else(|| Error::InvalidPowers("exponent must be positive".into()))?;
    let ds = d.get(s);
    Ok(dec.coeffs[s] * ds + (n as u64 - 1) * (ds - 1))
}

/// Regularity of the principal d-fixed ideal of `x_n^alpha` in `n` variables.
///
/// The closed form needs at least two variables; in one variable the ideal
/// is `(x_1^alpha)` with regularity `alpha`, which the closed form misses as
/// soon as `alpha` has nonzero lower digits.
pub fn reg_principal_d_fixed(n: usize, alpha: u64, d: &DSequence) -> Result<u64> {
    if n == 1 {
        if alpha == 0 {
            return Err(Error::InvalidPowers("exponent must be positive".into()));
        }
        return Ok(alpha);
    }
    principal_regularity_formula(n, alpha, d)
}

/// `sum_{t : alpha_t > 0} (x_1...x_n)^{d_t - 1} (m^{[d_t]})^{alpha_t - 1}
/// prod_{j > t} (m^{[d_j]})^{alpha_j}`, evaluated as written.
pub fn socle_formula_ideal(n: usize, alpha: u64, d: &DSequence) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::EmptyAmbient);
    }
    if alpha == 0 {
        return Err(Error::InvalidPowers("exponent must be positive".into()));
    }
    let coeffs = d.decompose(alpha).coeffs;
    let mut acc = MonomialIdeal::zero(n)?;
    for (t, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut digits = coeffs.clone();
        digits[..t].fill(0);
        digits[t] = c - 1;
        let corner = Monomial::new(vec![d.get(t) - 1; n])?;
        let term = MonomialIdeal::principal(corner).product(&digit_product(n, 0, n, &digits, d)?)?;
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// An ideal `J` with `Soc(S/I) = (J + I)/I` for the principal d-fixed ideal
/// of `x_n^alpha` in `n` variables; `(x_1^{alpha-1})` when `n = 1`.
pub fn socle_principal_d_fixed(n: usize, alpha: u64, d: &DSequence) -> Result<MonomialIdeal> {
    if n == 1 {
        if alpha == 0 {
            return Err(Error::InvalidPowers("exponent must be positive".into()));
        }
        return Ok(MonomialIdeal::principal(Monomial::var_power(1, 0, alpha - 1)?));
    }
    socle_formula_ideal(n, alpha, d)
}
