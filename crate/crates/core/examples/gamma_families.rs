//! The tuple families that decompose a d-fixed ideal generated by powers of
//! variables, under both tuple rules.

use monoreg::dfixed::{
    dfixed_decomposition_with, dfixed_from_powers, gamma_families_with, DSequence, GammaRule, VariablePowerSpec,
};

fn show(spec: &VariablePowerSpec) -> Result<(), Box<dyn std::error::Error>> {
    let direct = dfixed_from_powers(spec)?;
    println!("{:?} over {}: {} generators", spec.raw_pairs(), spec.d, direct.generators().len());
    for rule in [GammaRule::AsPrinted, GammaRule::CarryFree] {
        for q in 1..=spec.len() {
            let fam = gamma_families_with(spec, q, rule)?;
            println!("  {rule:?} q={q}: {} tuples {:?}", fam.tuples.len(), fam.tuples);
        }
        let dec = dfixed_decomposition_with(spec, rule)?;
        println!("  {rule:?}: decomposition equals the ideal: {}", dec.ideal == direct);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: DSequence = "1|2|4|12".parse()?;
    show(&VariablePowerSpec::new(5, &[(1, 7), (2, 10), (4, 17)], &d)?)?;
    // Over 1|2, 1 + 1 carries, and the printed rule admits (1, 1, 9).
    let d: DSequence = "1|2".parse()?;
    show(&VariablePowerSpec::new(3, &[(0, 8), (1, 10), (2, 11)], &d)?)?;
    Ok(())
}
