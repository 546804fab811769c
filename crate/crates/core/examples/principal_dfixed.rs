//! Principal d-fixed ideals: socle generators and regularity in closed form
//! against enumeration, over a small range of exponents.

use monoreg::dfixed::{principal_d_fixed, reg_principal_d_fixed, socle_principal_d_fixed, DSequence};
use monoreg::oracle::socle_oracle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: DSequence = std::env::args().nth(1).unwrap_or_else(|| "1|2|6".into()).parse()?;
    for n in 1..=3 {
        for alpha in [1, 5, 8, 13] {
            let ideal = principal_d_fixed(n, n - 1, alpha, &d)?;
            let socle = socle_principal_d_fixed(n, alpha, &d)?;
            let report = socle_oracle(&ideal)?;
            let covered = report.socle.iter().all(|u| socle.contains(u));
            println!(
                "n={n} alpha={alpha:>2}: reg {} (enumerated {:?}), {} socle monomials, formula ideal covers them: {covered}",
                reg_principal_d_fixed(n, alpha, &d)?,
                report.reg,
                report.socle.len(),
            );
        }
    }
    Ok(())
}
