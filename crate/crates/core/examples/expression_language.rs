//! The expression language and the report pipeline behind the command line.

use monoreg::cli::expr::parse;
use monoreg::cli::run;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "(x1^6,x2^6)*(x1^7,x2^7,x3^7)",
        "sbt(x2^6*x3^7)",
        "intersect(sbt(x3^2), sbtc(x1^3, x2^2)) + (x1*x2*x3)",
        "dfix(x2^7, x3^10, x5^17; 1|2|4|12)",
    ] {
        let expr = parse(text)?;
        let n = expr.ambient(None)?;
        let ideal = expr.eval(n)?;
        println!("{expr}\n  in {n} variables: {} generators, degree {}", ideal.generators().len(), ideal.max_generator_degree());
    }

    if let Err(e) = parse("(x1^2,, x2)") {
        println!("parse error: {e}");
    }

    let out = run(["monoreg", "reg", "(x1^3,x2^2)"], &mut std::io::empty());
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
    Ok(())
}
