//! Two six-line arrangements with identical triangles that are not isomorphic.
//!
//! ```text
//! cargo run -p linearr --example same_triangles
//! ```

use linearr::nomenclature::realize_nomenclature;
use linearr::symbolic::{line_at_infinity_symbolic, thm_b_triangles};
use linearr::Nomenclature;

fn main() -> linearr::Result<()> {
    let a: Nomenclature = "1^+1 2^-1 5^+1 3^+1 4^-1 6^+1".parse()?;
    let b: Nomenclature = "1^+1 2^-1 5^+1 3^+1 6^+1 4^-1".parse()?;
    let (ra, rb) = (realize_nomenclature(&a)?, realize_nomenclature(&b)?);

    for (nom, arr) in [(&a, &ra), (&b, &rb)] {
        println!("{nom}");
        println!("  triangles: {}", arr.triangle_faces_oracle().iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "));
        println!("  symbolic list agrees: {}", thm_b_triangles(nom) == arr.triangle_faces_oracle());
        let t = nom.position_of(6).expect("label 6");
        println!(
            "  L6 at infinity: symbolic {}, geometric {}",
            line_at_infinity_symbolic(nom, t)?,
            arr.member_at_infinity(6)?
        );
    }
    println!("same triangles: {}", ra.triangle_faces_oracle() == rb.triangle_faces_oracle());
    println!("isomorphic: {}", ra.is_isomorphic_trivial(&rb));
    for id in ra.ids() {
        println!("  L{id}: {:?} vs {:?}", ra.line_orders().row(id), rb.line_orders().row(id));
    }
    Ok(())
}
