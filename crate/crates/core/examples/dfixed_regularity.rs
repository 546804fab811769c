//! Block structure, chi values and regularity of a d-fixed ideal generated
//! by powers of variables, checked against the enumerated socle.
//!
//!     cargo run --example dfixed_regularity -- "dfix(x1^2, x2^7, x3^16; 1|4|12)"

use monoreg::cli::expr::parse;
use monoreg::dfixed::{audit_socle_witness, block_structure, reg_dfixed_powers, RecursionVariant};
use monoreg::oracle::socle_oracle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "dfix(x2^7, x3^10, x5^17; 1|2|6|12)".into());
    let expr = parse(&text)?;
    let n = expr.ambient(None)?;
    let spec = expr.power_spec(n)?.ok_or("expected dfix(...) or dfixp(...)")?;
    let ideal = expr.eval(n)?;

    for variant in [RecursionVariant::Proof, RecursionVariant::Statement] {
        let bs = block_structure(&spec, variant);
        println!("{variant:?}: chi = {:?}, sum {}", bs.chi(), bs.chi_sum());
        for b in &bs.blocks {
            println!("  pairs {}..={} top digit {} width {} {:?}", b.first + 1, b.last + 1, b.top, b.width, b.branch);
        }
    }
    println!("formula reg = {}", reg_dfixed_powers(&spec)?);

    let report = socle_oracle(&ideal)?;
    println!("enumerated: {} socle monomials, top degree {:?}, reg {:?}", report.socle.len(), report.max_degree, report.reg);
    let audit = audit_socle_witness(&spec)?;
    println!(
        "witness ideal {}: inside (I : m) {}, outside I {}, degree {} vs chi sum {}",
        audit.witness, audit.inside_colon, audit.avoids_ideal, audit.degree, audit.chi_sum
    );
    Ok(())
}
