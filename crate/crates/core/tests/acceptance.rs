// Acceptance suite: one PASS/FAIL line per criterion. Runs without the
// libtest harness so the lines are always printed.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use monoreg::borel::{
    chi_table, is_borel_type, is_sbt, reg_sbt_formula, reg_truncation, reg_upper_bound, sbt_principal,
    sbt_violation, sequential_chain,
};
use monoreg::cli::expr::parse;
use monoreg::dfixed::{
    block_structure, chi_sequence, colon_chain, dfixed_decomposition, dfixed_from_powers, gamma_families,
    max_socle_degree, principal_d_fixed, principal_regularity_formula, reg_dfixed_powers,
    reg_principal_d_fixed, socle_formula_ideal, socle_principal_d_fixed, DSequence, RecursionVariant,
    VariablePowerSpec,
};
use monoreg::oracle::{borel_witness_check, exhaustive_sbt_check, reg_socle_chain, socle_oracle};
use monoreg::MonomialIdeal;
use rand::Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn cli_json(args: &[&str]) -> Result<(Value, i32), String> {
    let mut argv = vec!["monoreg", "--format", "json"];
    argv.extend_from_slice(args);
    let out = monoreg::cli::run(argv, &mut std::io::empty());
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
    Ok((v, out.code))
}

fn notes(report: &Value) -> Vec<String> {
    report["discrepancy_notes"]
        .as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
        .unwrap_or_default()
}

fn sbt_example() -> MonomialIdeal {
    sbt_principal(&mono(&[0, 6, 7])).unwrap()
}

fn example_two_nine_one() -> VariablePowerSpec {
    VariablePowerSpec::new(5, &[(1, 7), (2, 10), (4, 17)], &dseq("1|2|6|12")).unwrap()
}

fn example_two_nine_two() -> VariablePowerSpec {
    VariablePowerSpec::new(3, &[(0, 2), (1, 7), (2, 16)], &dseq("1|4|12")).unwrap()
}

fn sbt_example_regularity() -> Outcome {
    let ideal = sbt_example();
    let chain = ok(sequential_chain(&ideal), "chain")?;
    let s_of = |k: usize| {
        chain
            .steps
            .iter()
            .find(|st| st.section.ambient() == k)
            .and_then(|st| st.top_degree())
    };
    ensure!(s_of(2) == Some(10), "s(J_1^sat/J_1) = {:?}, expected 10", s_of(2));
    ensure!(s_of(3) == Some(23), "s(J_2^sat/J_2) = {:?}, expected 23", s_of(3));
    let by_chain = ok(chain.regularity(), "chain reg")?;
    let by_truncation = ok(reg_truncation(&ideal), "truncation")?;
    let by_socle = ok(reg_socle_chain(&chain), "socle")?;
    ensure!(
        (by_chain, by_truncation, by_socle) == (24, 24, 24),
        "chain {by_chain}, truncation {by_truncation}, socle {by_socle}"
    );
    Ok("chain = truncation = socle = 24; s = 10, 23".into())
}

fn sbt_formula_audit() -> Outcome {
    let table = ok(chi_table(&mono(&[0, 6, 7])), "chi table")?;
    let row = table.row(2, 1).ok_or("no row q=2 f=1")?;
    ensure!(row.sum == 22, "chi_2^(1) = {}, expected 22 as printed", row.sum);
    ensure!(table.regularity == 23, "formula reg {}, expected 23", table.regularity);

    let (report, _) = cli_json(&["reg", "sbt(x2^6*x3^7)"])?;
    let flagged = report["agreements"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["a"] == "chain" && a["b"] == "chi-formula" && a["equal"] == false);
    ensure!(flagged, "report lacks chain/chi-formula disagreement");
    let ns = notes(&report);
    ensure!(
        ns.iter().any(|n| n.contains("chi-formula gives 23") && n.contains("gives 24")),
        "no 23-vs-24 discrepancy note in {ns:?}"
    );

    let grid = principal_sbt_grid(100, 2);
    let mut agree = 0;
    let mut unavailable = 0;
    for (u, ideal) in &grid {
        let chain = ok(sequential_chain(ideal).and_then(|c| c.regularity()), "chain")?;
        let trunc = ok(reg_truncation(ideal), "truncation")?;
        ensure!(chain == trunc, "{u}: chain {chain} vs truncation {trunc}");
        match reg_sbt_formula(u) {
            Ok(f) if f == chain => agree += 1,
            Ok(_) => {}
            Err(_) => unavailable += 1,
        }
    }
    Ok(format!(
        "example: chi_2^(1) = 22, reg 23 vs 24 flagged; grid: chain = truncation 100/100, \
         chi-formula agrees with chain on {agree}/100 ({unavailable} unavailable)"
    ))
}

fn borel_not_sbt() -> Outcome {
    let ideal = MonomialIdeal::minimalize(2, [mono(&[3, 0]), mono(&[0, 2])]).unwrap();
    ensure!(ok(is_borel_type(&ideal), "borel")?, "not Borel type");
    let v = sbt_violation(&ideal).ok_or("SBT check found no violation")?;
    let ex = exhaustive_sbt_check(&ideal, 2);
    ensure!(!ex.holds && ex.witness.is_some(), "exhaustive SBT check holds");
    let bw = borel_witness_check(&ideal, 2);
    ensure!(bw.holds, "exhaustive Borel witness check fails: {:?}", bw.witness);
    Ok(format!(
        "borel-type true, SBT false at {} (x{} -> x{}); exhaustive checks agree",
        v.monomial,
        v.source + 1,
        v.target + 1
    ))
}

/// The 50 operand pairs and their sums, products and intersections.
fn closure_grid() -> Vec<(MonomialIdeal, MonomialIdeal, [MonomialIdeal; 3])> {
    let mut r = rng(4);
    (0..50)
        .map(|_| {
            let n = r.gen_range(1..=4);
            let a = random_sbt_ideal(&mut r, n);
            let b = random_sbt_ideal(&mut r, n);
            let ops = [a.sum(&b).unwrap(), a.product(&b).unwrap(), a.intersect(&b).unwrap()];
            (a, b, ops)
        })
        .collect()
}

fn sbt_closure_grid() -> Outcome {
    for (a, b, ops) in closure_grid() {
        ensure!(is_sbt(&a) && is_sbt(&b), "operand not SBT: {a} / {b}");
        for (name, c) in ["sum", "product", "intersection"].iter().zip(&ops) {
            ensure!(is_sbt(c), "{name} of {a} and {b} is not SBT");
            let ex = exhaustive_sbt_check(c, 1);
            ensure!(ex.holds, "exhaustive check disagrees on {name} {c}: {:?}", ex.witness);
        }
    }
    Ok("50 pairs, 150 derived ideals SBT; exhaustive checks agree".into())
}

fn example_d_decompositions() -> Outcome {
    let d = dseq("1|2|4|12");
    for (a, want) in [(7, [1, 1, 1, 0]), (10, [0, 1, 2, 0]), (17, [1, 0, 1, 1])] {
        let got = d.decompose(a).coeffs;
        ensure!(got == want, "{a}: {got:?}, expected {want:?}");
    }
    let spec = VariablePowerSpec::new(5, &[(1, 7), (2, 10), (4, 17)], &d).unwrap();
    let q2: BTreeSet<Vec<u64>> = ok(gamma_families(&spec, 2), "gamma")?.tuples.into_iter().collect();
    let want2: BTreeSet<Vec<u64>> = [[0, 10], [2, 8], [4, 6], [6, 4]].iter().map(|t| t.to_vec()).collect();
    ensure!(q2 == want2, "q=2 tuples {q2:?}");
    let q3: BTreeSet<Vec<u64>> = ok(gamma_families(&spec, 3), "gamma")?.tuples.into_iter().collect();
    let want3: BTreeSet<Vec<u64>> = [
        [0, 0, 17],
        [0, 1, 16],
        [0, 4, 13],
        [0, 5, 12],
        [1, 0, 16],
        [1, 4, 12],
        [4, 0, 13],
        [4, 1, 12],
        [5, 0, 12],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    ensure!(q3 == want3, "q=3 tuples {q3:?}");
    let dec = ok(dfixed_decomposition(&spec), "decomposition")?;
    let direct = ok(dfixed_from_powers(&spec), "from powers")?;
    ensure!(dec.ideal == direct, "decomposition differs from the direct construction");
    Ok(format!(
        "7, 10, 17 decompose as expected; 4 and 9 gamma tuples; decomposition = direct ({} generators)",
        direct.generators().len()
    ))
}

fn principal_dfixed_grid() -> Outcome {
    let mut instances = 0;
    let mut raw_reg_misses = Vec::new();
    let mut raw_socle_misses = 0;
    for n in 1..=4usize {
        for text in GRID_SEQUENCES {
            let d = dseq(text);
            for alpha in 1..=20u64 {
                instances += 1;
                let ideal = ok(principal_d_fixed(n, n - 1, alpha, &d), "ideal")?;
                let oracle = ok(socle_oracle(&ideal), "oracle")?;
                let j = ok(socle_principal_d_fixed(n, alpha, &d), "socle formula")?;
                let standard = standard_monomials(&ideal);
                let by_formula: BTreeSet<Vec<u64>> = standard
                    .iter()
                    .filter(|u| j.contains(u))
                    .map(|u| u.exponents().to_vec())
                    .collect();
                let by_oracle: BTreeSet<Vec<u64>> = oracle.socle.iter().map(|u| u.exponents().to_vec()).collect();
                ensure!(by_formula == by_oracle, "n={n} d={text} alpha={alpha}: socle sets differ");
                let reg = ok(reg_principal_d_fixed(n, alpha, &d), "reg")?;
                ensure!(
                    Some(reg) == oracle.reg,
                    "n={n} d={text} alpha={alpha}: formula {reg}, oracle {:?}",
                    oracle.reg
                );
                if principal_regularity_formula(n, alpha, &d).ok() != oracle.reg {
                    raw_reg_misses.push(n);
                }
                let raw = ok(socle_formula_ideal(n, alpha, &d), "raw socle")?;
                let raw_set: BTreeSet<Vec<u64>> = standard
                    .iter()
                    .filter(|u| raw.contains(u))
                    .map(|u| u.exponents().to_vec())
                    .collect();
                if raw_set != by_oracle {
                    raw_socle_misses += 1;
                }
            }
        }
    }
    let only_n1 = raw_reg_misses.iter().all(|&n| n == 1);
    Ok(format!(
        "{instances}/{instances} socle sets and regularities match; unadjusted closed forms miss \
         reg on {} and socle on {} instances{}",
        raw_reg_misses.len(),
        raw_socle_misses,
        if only_n1 { " (all n = 1)" } else { "" }
    ))
}

fn large_dfixed_example() -> Outcome {
    let spec = example_two_nine_one();
    let chi = chi_sequence(&spec, RecursionVariant::default());
    ensure!(chi == vec![15, 22], "chi {chi:?}");
    let ideal = ok(dfixed_from_powers(&spec), "ideal")?;
    let oracle = ok(socle_oracle(&ideal), "oracle")?;
    ensure!(oracle.max_degree == Some(37), "oracle max socle degree {:?}", oracle.max_degree);
    ensure!(ok(max_socle_degree(&spec), "chi sum")? == 37, "chi sum differs from oracle");
    let witness = mono(&[5, 5, 5, 11, 11]);
    ensure!(oracle.socle.contains(&witness), "{witness} is not a socle element");
    ensure!(ok(reg_dfixed_powers(&spec), "reg")? == 38, "formula reg is not 38");
    ensure!(oracle.reg == Some(38), "oracle reg {:?}", oracle.reg);
    let (report, _) = cli_json(&["reg", "dfix(x2^7, x3^10, x5^17; 1|2|6|12)"])?;
    let ns = notes(&report);
    ensure!(ns.iter().any(|n| n.contains("reg = 27")), "no reg = 27 note in {ns:?}");
    Ok(format!(
        "chi (15, 22); socle top degree 37 over {} socle monomials; {witness} in socle; reg 38; reg = 27 note present",
        oracle.socle.len()
    ))
}

fn recursive_dfixed_example() -> Outcome {
    let spec = example_two_nine_two();
    let chi = chi_sequence(&spec, RecursionVariant::default());
    ensure!(chi == vec![1, 3, 15], "chi {chi:?}");
    let ideal = ok(dfixed_from_powers(&spec), "ideal")?;
    let oracle = ok(socle_oracle(&ideal), "oracle")?;
    ensure!(oracle.max_degree == Some(19), "oracle max socle degree {:?}", oracle.max_degree);
    ensure!(oracle.reg == Some(20), "oracle reg {:?}", oracle.reg);
    ensure!(ideal.contains(&mono(&[1, 3, 19])), "x1*x2^3*x3^19 is not in the ideal");
    let (report, _) = cli_json(&["reg", "dfix(x1^2, x2^7, x3^16; 1|4|12)"])?;
    let ns = notes(&report);
    for needle in ["chi_3 = 19", "reg = 23", "x1*x2^3*x3^19 lies in the ideal"] {
        ensure!(ns.iter().any(|n| n.contains(needle)), "missing note {needle:?} in {ns:?}");
    }
    Ok("chi (1, 3, 15); socle top degree 19, reg 20; three reference notes present".into())
}

fn power_spec_grid() -> Outcome {
    let mut r = rng(9);
    let mut counterexamples = Vec::new();
    let mut k_one = 0;
    for _ in 0..30 {
        let spec = random_power_spec(&mut r);
        let ideal = ok(dfixed_from_powers(&spec), "ideal")?;
        let last = ok(spec.piece(spec.len() - 1), "last piece")?;
        let reg = ok(socle_oracle(&ideal), "oracle")?.reg.ok_or("empty socle")?;
        let reg_last = ok(socle_oracle(&last), "oracle")?.reg.ok_or("empty socle")?;
        let desc = format!("{:?} d={}", spec.raw_pairs(), spec.d);
        ensure!(reg <= reg_last, "{desc}: reg {reg} > reg(I_r) {reg_last}");
        for q in 1..=spec.len() {
            let c = ok(colon_chain(&spec, q), "colon chain")?;
            ensure!(c.holds(), "{desc}: colon relations fail at q={q}: {c:?}");
        }
        let k = block_structure(&spec, RecursionVariant::default()).k();
        if k == 1 {
            k_one += 1;
        }
        if (reg == reg_last) != (k == 1) {
            counterexamples.push(format!("{desc} (k={k}, reg {reg}, reg(I_r) {reg_last})"));
        }
    }
    ensure!(
        counterexamples.is_empty(),
        "reg(I) = reg(I_r) does not track k = 1 on: {}",
        counterexamples.join("; ")
    );
    Ok(format!("30 specs ({k_one} with k = 1): bound, equality pattern and colon relations hold"))
}

fn stable_truncations() -> Outcome {
    let mut checked_below = 0;
    for (u, ideal) in principal_sbt_grid(100, 2) {
        let reg = ok(sequential_chain(&ideal).and_then(|c| c.regularity()), "chain")?;
        for e in reg..=reg + 2 {
            ensure!(ok(ideal.truncate(e), "truncate")?.is_stable(), "SBT({u}): I_>={e} not stable");
        }
        if reg >= 1 && reg - 1 >= ideal.max_generator_degree() {
            checked_below += 1;
            let below = ok(ideal.truncate(reg - 1), "truncate")?;
            ensure!(!below.is_stable(), "SBT({u}): I_>={} already stable", reg - 1);
        }
    }
    Ok(format!("100 instances stable from reg on; {checked_below} checked unstable at reg - 1"))
}

fn regularity_bound() -> Outcome {
    let mut ideals: Vec<MonomialIdeal> = principal_sbt_grid(100, 2).into_iter().map(|p| p.1).collect();
    for (a, b, ops) in closure_grid() {
        ideals.push(a);
        ideals.push(b);
        ideals.extend(ops);
    }
    for ideal in &ideals {
        if ideal.is_unit() {
            continue;
        }
        let reg = ok(sequential_chain(ideal).and_then(|c| c.regularity()), "chain")?;
        let bound = reg_upper_bound(ideal);
        ensure!(reg <= bound, "{ideal}: reg {reg} > {bound}");
    }
    Ok(format!("{} SBT instances within n(deg - 1) + 1", ideals.len()))
}

fn lucas_dominance() -> Outcome {
    for (p, s) in [(2u64, 6usize), (3, 4)] {
        let d = ok(DSequence::powers_of(p, s), "powers")?;
        // Pascal's triangle mod p, built by addition only.
        let mut row = vec![1u64];
        for b in 0..=64u64 {
            for a in 0..=b {
                let nonzero = row[a as usize] != 0;
                ensure!(d.leq(a, b) == nonzero, "p={p}: a={a} b={b}: leq {} vs C(b,a) mod p {}", d.leq(a, b), row[a as usize]);
            }
            let mut next = vec![1u64; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % p;
            }
            row = next;
        }
    }
    Ok("p = 2, 3: all 2145 pairs a <= b <= 64 agree per prime".into())
}

fn cli_contract() -> Outcome {
    let corpus: Vec<&str> = include_str!("data/expressions.txt").lines().filter(|l| !l.trim().is_empty()).collect();
    ensure!(corpus.len() == 50, "corpus has {} expressions", corpus.len());
    for text in &corpus {
        let first = ok(parse(text), text)?;
        let printed = first.to_string();
        let second = ok(parse(&printed), &printed)?;
        ensure!(first == second, "{text:?} -> {printed:?} reparses differently");
        ensure!(second.to_string() == printed, "printer not idempotent on {printed:?}");
    }

    let schema_value: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let schema = jsonschema::JSONSchema::compile(&schema_value).map_err(|e| format!("schema: {e}"))?;
    let cases: &[(&[&str], i32)] = &[
        (&["gens", "(x1^3,x2^2)"], 0),
        (&["reg", "sbt(x2^6*x3^7)", "--method", "chain"], 0),
        (&["reg", "sbt(x2^6*x3^7)", "--method", "truncation"], 0),
        (&["reg", "sbt(x2^6*x3^7)", "--method", "socle"], 0),
        (&["reg", "sbt(x2^6*x3^7)", "--method", "sbt-formula"], 0),
        (&["reg", "sbt(x2^6*x3^7)", "--method", "chi-formula"], 0),
        (&["reg", "(x1^3,x2^2)", "--method", "auto"], 0),
        (&["reg", "dfix(x1^2, x2^7, x3^16; 1|4|12)"], 0),
        (&["chain", "sbt(x2^6*x3^7)"], 0),
        (&["socle", "(x1^3,x2^2)"], 0),
        (&["check", "(x1^3,x2^2)"], 0),
        (&["check", "dfixp(x2^3; 1|2)", "--dfixed", "1|2"], 0),
        (&["decomp", "17", "1|2|4|12"], 0),
        (&["gamma", "x2^7, x3^10, x5^17", "1|2|4|12", "--q", "2"], 0),
        (&["gens", "(x1^3,,x2)"], 2),
        (&["reg", "sbt(x2^6*x3^7", "--method", "chain"], 2),
        (&["decomp", "5", "1|x"], 2),
        (&["socle", "(x1^6,x2^6)", "--vars", "3"], 3),
        (&["reg", "(x1*x2)"], 3),
        (&["decomp", "5", "1|3|4"], 3),
    ];
    let bin = env!("CARGO_BIN_EXE_monoreg");
    for (args, code) in cases {
        let out = Command::new(bin)
            .args(["--format", "json"])
            .args(*args)
            .output()
            .map_err(|e| format!("spawn: {e}"))?;
        let got = out.status.code().unwrap_or(-1);
        ensure!(got == *code, "{args:?}: exit {got}, expected {code}");
        let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
        let violations: Vec<String> = match schema.validate(&v) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| e.to_string()).collect(),
        };
        ensure!(violations.is_empty(), "{args:?}: schema violations {violations:?}");
    }
    let (decomp, _) = cli_json(&["decomp", "17", "1|2|4|12"])?;
    ensure!(decomp["results"][0]["value"] == serde_json::json!([1, 0, 1, 1]), "decomp value {decomp}");
    let (chain, _) = cli_json(&["reg", "sbt(x2^6*x3^7)", "--method", "chain"])?;
    ensure!(chain["results"][0]["value"] == 24, "chain value {chain}");
    Ok(format!("50 expressions round-trip; {} invocations schema-valid with expected exit codes", cases.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "SBT example regularity by chain, truncation and socle", limit: Some(Duration::from_secs(5)), run: sbt_example_regularity },
    Criterion { id: 2, name: "SBT closed form as printed, and principal-SBT grid", limit: None, run: sbt_formula_audit },
    Criterion { id: 3, name: "(x1^3, x2^2) is Borel type but not SBT", limit: None, run: borel_not_sbt },
    Criterion { id: 4, name: "SBT closed under sum, product, intersection", limit: None, run: sbt_closure_grid },
    Criterion { id: 5, name: "d-decompositions and gamma families over 1|2|4|12", limit: Some(Duration::from_secs(5)), run: example_d_decompositions },
    Criterion { id: 6, name: "principal d-fixed socle and regularity grid", limit: None, run: principal_dfixed_grid },
    Criterion { id: 7, name: "dfix(x2^7, x3^10, x5^17; 1|2|6|12)", limit: Some(Duration::from_secs(120)), run: large_dfixed_example },
    Criterion { id: 8, name: "dfix(x1^2, x2^7, x3^16; 1|4|12)", limit: Some(Duration::from_secs(30)), run: recursive_dfixed_example },
    Criterion { id: 9, name: "variable-power grid: reg bound, equality pattern, colon relations", limit: None, run: power_spec_grid },
    Criterion { id: 10, name: "truncations stable exactly from reg on", limit: None, run: stable_truncations },
    Criterion { id: 11, name: "reg <= n(deg - 1) + 1 on SBT grids", limit: None, run: regularity_bound },
    Criterion { id: 12, name: "d-dominance for prime powers matches binomials mod p", limit: None, run: lucas_dominance },
    Criterion { id: 13, name: "CLI round trip, JSON schema and exit codes", limit: Some(Duration::from_secs(10)), run: cli_contract },
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        println!("{tag} {:>2} {} [{elapsed:.2?}]: {detail}", c.id, c.name);
        if result.is_err() {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
