// Shared instance generators for the integration tests. Every grid is drawn
// from a fixed seed so failures reproduce.
#![allow(dead_code)]

use monoreg::borel::{sbt_closure, sbt_principal};
use monoreg::dfixed::{DSequence, VariablePowerSpec};
use monoreg::monomial::for_each_in_box;
use monoreg::{Monomial, MonomialIdeal};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GRID_SEQUENCES: [&str; 4] = ["1|2", "1|4", "1|2|4", "1|2|6"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dseq(text: &str) -> DSequence {
    text.parse().expect("valid d-sequence literal")
}

pub fn mono(exps: &[u64]) -> Monomial {
    Monomial::new(exps.to_vec()).unwrap()
}

pub fn random_monomial(rng: &mut impl Rng, n: usize, max_exp: u64) -> Monomial {
    loop {
        let exps: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps).unwrap();
        }
    }
}

/// Principal SBT ideals `SBT(u)` with `n <= 4` and exponents at most 5.
pub fn principal_sbt_grid(count: usize, seed: u64) -> Vec<(Monomial, MonomialIdeal)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=4);
            let u = random_monomial(&mut r, n, 5);
            let ideal = sbt_principal(&u).unwrap();
            (u, ideal)
        })
        .collect()
}

/// An SBT ideal in `n` variables: either principal or the closure of up to
/// three random monomials.
pub fn random_sbt_ideal(rng: &mut impl Rng, n: usize) -> MonomialIdeal {
    if rng.gen_bool(0.5) {
        sbt_principal(&random_monomial(rng, n, 3)).unwrap()
    } else {
        let k = rng.gen_range(1..=3);
        let seeds: Vec<Monomial> = (0..k).map(|_| random_monomial(rng, n, 3)).collect();
        sbt_closure(&seeds).unwrap()
    }
}

/// A normalized, artinian variable-power spec with `n <= 4`: the last pair
/// always sits on `x_n`.
pub fn random_power_spec(rng: &mut impl Rng) -> VariablePowerSpec {
    let n = rng.gen_range(1..=4);
    let d = dseq(GRID_SEQUENCES.choose(rng).unwrap());
    let r = rng.gen_range(1..=n);
    let mut vars: Vec<usize> = (0..n - 1).collect();
    vars.shuffle(rng);
    vars.truncate(r - 1);
    vars.push(n - 1);
    vars.sort_unstable();
    let mut alphas: Vec<u64> = (1..=16).collect::<Vec<_>>().choose_multiple(rng, r).copied().collect();
    alphas.sort_unstable();
    let pairs: Vec<(usize, u64)> = vars.into_iter().zip(alphas).collect();
    VariablePowerSpec::new(n, &pairs, &d).unwrap()
}

/// Monomials outside `I` inside the box cut out by its pure powers.
pub fn standard_monomials(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let bounds: Vec<u64> = (0..ideal.ambient())
        .map(|i| ideal.pure_power(i).expect("artinian ideal") - 1)
        .collect();
    let mut out = Vec::new();
    for_each_in_box(&bounds, |u| {
        let m = Monomial::new(u.to_vec()).unwrap();
        if !ideal.contains(&m) {
            out.push(m);
        }
    });
    out
}
