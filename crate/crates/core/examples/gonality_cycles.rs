//! Counting, realizing and recognizing gonality cycles.
//!
//! ```text
//! cargo run -p linearr --example gonality_cycles
//! ```

use linearr::cyclicity::{
    cycle_count_formula, cycles, detect_gonality_cycle, realize_cycle, reconstruct_cycle, thm_a_triangles,
};
use linearr::GonalityCycle;

fn main() -> linearr::Result<()> {
    println!(" n  cycles  2^(n-1)-n");
    for n in 3..=16 {
        println!("{n:2}  {:6}  {:9}", cycles(n)?.count(), cycle_count_formula(n));
    }

    let c: GonalityCycle = "(1 3 4 2 5)".parse()?;
    let arr = realize_cycle(&c)?;
    println!("\ncycle {c} (first run of length {})", c.r());
    println!("detected on its realization: {}", detect_gonality_cycle(&arr).expect("n-gon present"));
    let listed = thm_a_triangles(&c)?;
    print!("listed triangles:\n{listed}");
    println!("geometry agrees: {}", listed == arr.triangle_faces_oracle());
    println!("classes: {}", listed.equivalence_classes().len());
    println!("recovered from triangles: {}", reconstruct_cycle(&listed, c.n())?.expect("injective"));
    Ok(())
}
