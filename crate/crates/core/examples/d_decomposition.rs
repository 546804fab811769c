//! d-decompositions and the dominance order they induce.
//!
//!     cargo run --example d_decomposition -- "1|2|4|12" 17

use monoreg::dfixed::DSequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let d: DSequence = args.next().unwrap_or_else(|| "1|2|4|12".into()).parse()?;
    let b: u64 = args.next().map_or(Ok(17), |a| a.parse())?;

    for a in [7, 10, b] {
        let dec = d.decompose(a);
        println!("{a:>3} over {d}: {:?} (top digit index {:?})", dec.coeffs, dec.top());
    }
    let below = d.below(b);
    println!("t <=_d {b}: {below:?}");
    let strictly: Vec<u64> = below.iter().copied().filter(|&t| d.lt(t, b)).collect();
    println!("t <_d {b}:  {strictly:?}");

    // Powers of a prime give the carry-free order from Lucas' theorem.
    let two = DSequence::powers_of(2, 5)?;
    println!("over {two}: 5 <= 13 is {}, 6 <= 13 is {}", two.leq(5, 13), two.leq(6, 13));
    Ok(())
}
