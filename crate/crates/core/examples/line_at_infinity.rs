//! Symbolic and geometric line-at-infinity tests side by side.
//!
//! ```text
//! cargo run -p linearr --example line_at_infinity -- "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1"
//! ```

use linearr::nomenclature::realize_nomenclature;
use linearr::symbolic::{branch, line_at_infinity_symbolic, line_at_infinity_symbolic_with, ConditionReading};
use linearr::Nomenclature;

fn main() -> linearr::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "1^+1 2^-1 5^+1 3^+1 4^-1 6^+1".into());
    let nom: Nomenclature = text.parse()?;
    let arr = realize_nomenclature(&nom)?;
    println!("{nom}");
    println!("pos  line  branch     symbolic  geometric");
    for t in 1..=nom.n() {
        let line = nom.label(t);
        println!(
            "{t:3}  {line:4}  {:9}  {:8}  {}",
            format!("{:?}", branch(&nom, t)?),
            line_at_infinity_symbolic(&nom, t)?,
            arr.member_at_infinity(line)?
        );
    }

    // The word-for-word reading of one ordering condition gets this case wrong.
    let tricky: Nomenclature = "4^+1 3^-1 1^+1 2^-1".parse()?;
    let geometric = realize_nomenclature(&tricky)?.member_at_infinity(4)?;
    println!("\n{tricky}, line 4");
    println!("  geometric {geometric}");
    println!("  mirrored  {}", line_at_infinity_symbolic_with(&tricky, 1, ConditionReading::Mirrored)?);
    println!("  literal   {}", line_at_infinity_symbolic_with(&tricky, 1, ConditionReading::Literal)?);
    Ok(())
}
