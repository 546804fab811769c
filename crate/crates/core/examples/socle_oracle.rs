//! Socle of an artinian monomial quotient by direct enumeration.

use monoreg::cli::expr::parse;
use monoreg::oracle::{socle_oracle, top_standard_monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(x1^3, x1*x2^2, x2^4, x3^2)".into());
    let expr = parse(&text)?;
    let ideal = expr.eval(expr.ambient(None)?)?;
    if !ideal.is_artinian() {
        return Err(format!("{ideal} is not artinian").into());
    }
    let report = socle_oracle(&ideal)?;
    println!("I = {ideal}");
    for u in &report.socle {
        println!("  socle {u} (degree {})", u.degree());
    }
    println!("top standard monomial {}", top_standard_monomial(&ideal)?);
    println!("reg = {:?}", report.reg);
    Ok(())
}
