//! The chain of saturations of a Borel-type ideal, with the top degree of
//! each local quotient J^sat/J.

use monoreg::borel::sequential_chain;
use monoreg::cli::expr::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(x1^2, x1*x2^3, x2^5, x1*x3)".into());
    let expr = parse(&text)?;
    let ideal = expr.eval(expr.ambient(None)?)?;
    let chain = sequential_chain(&ideal)?;

    println!("I = {ideal}");
    for step in &chain.steps {
        println!(
            "saturate x{}: n = {}, J = {}, J^sat = {}, s = {:?} (top element {})",
            step.variable + 1,
            step.section.ambient(),
            step.section,
            step.section_saturation,
            step.top_degree(),
            step.top_element.as_ref().map_or("-".to_string(), |m| m.to_string()),
        );
    }
    println!("reg = {}", chain.regularity()?);
    Ok(())
}
