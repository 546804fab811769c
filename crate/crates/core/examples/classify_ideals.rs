//! Generator-level classification next to the bounded exhaustive checks.

use monoreg::borel::{borel_type_failure, sbt_violation};
use monoreg::cli::expr::parse;
use monoreg::dfixed::{d_fixed_violation, DSequence};
use monoreg::oracle::{borel_witness_check, exhaustive_dfixed_check, exhaustive_sbt_check, exhaustive_stable_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: DSequence = "1|2".parse()?;
    for text in ["(x1^3, x2^2)", "(x1*x2)", "sbt(x2^2*x3)", "dfixp(x3^4; 1|2)", "(x1^2, x1*x2, x2^3)"] {
        let expr = parse(text)?;
        let ideal = expr.eval(expr.ambient(None)?)?;
        println!("{text}  =  {ideal}");
        println!(
            "  borel type  {:<5}  exhaustive {}",
            borel_type_failure(&ideal)?.is_none(),
            borel_witness_check(&ideal, 2).holds
        );
        match sbt_violation(&ideal) {
            None => println!("  SBT         true   exhaustive {}", exhaustive_sbt_check(&ideal, 2).holds),
            Some(v) => println!(
                "  SBT         false  {} fails x{} -> x{}",
                v.monomial,
                v.source + 1,
                v.target + 1
            ),
        }
        println!(
            "  stable      {:<5}  exhaustive {}",
            ideal.is_stable(),
            exhaustive_stable_check(&ideal, 2).holds
        );
        let dv = d_fixed_violation(&ideal, &d);
        println!(
            "  {d}-fixed    {:<5}  exhaustive {}",
            dv.is_none(),
            exhaustive_dfixed_check(&ideal, &d, 2).holds
        );
    }
    Ok(())
}
