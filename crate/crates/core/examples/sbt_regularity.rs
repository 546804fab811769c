//! Regularity of a principal strong-Borel-type ideal three ways, next to the
//! closed-form table.
//!
//!     cargo run --example sbt_regularity -- 2 6 7   # exponents of x1, x2, x3

use monoreg::borel::{chi_table, reg_truncation, sbt_principal, sequential_chain};
use monoreg::oracle::reg_socle_chain;
use monoreg::Monomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let exps: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let exps = if exps.is_empty() { vec![0, 6, 7] } else { exps };
    let u = Monomial::new(exps)?;
    let ideal = sbt_principal(&u)?;
    println!("SBT({u}) has {} minimal generators", ideal.generators().len());

    let chain = sequential_chain(&ideal)?;
    println!("chain       {}", chain.regularity()?);
    println!("truncation  {}", reg_truncation(&ideal)?);
    println!("socle       {}", reg_socle_chain(&chain)?);

    let table = chi_table(&u)?;
    println!("closed form {} (chi = {:?})", table.regularity, table.chi);
    for row in &table.rows {
        println!("  q={} f={}  {:?} -> {}", row.q, row.f, row.entries, row.sum);
    }
    Ok(())
}
