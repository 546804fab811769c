//! Truncations I_{>=e} of a Borel-type ideal turn stable exactly at the
//! regularity.

use monoreg::borel::{reg_upper_bound, sbt_principal, sequential_chain};
use monoreg::Monomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ideal = sbt_principal(&Monomial::new(vec![1, 2, 2])?)?;
    let reg = sequential_chain(&ideal)?.regularity()?;
    println!("I = {ideal}\nreg = {reg}, bound n(deg - 1) + 1 = {}", reg_upper_bound(&ideal));
    for e in ideal.max_generator_degree()..=reg + 2 {
        let t = ideal.truncate(e)?;
        let verdict = match t.stability_violation() {
            None => "stable".to_string(),
            Some((u, j)) => format!("not stable: {u} with x{}", j + 1),
        };
        println!("  e = {e:>2}: {:>3} generators, {verdict}", t.generators().len());
    }
    Ok(())
}
