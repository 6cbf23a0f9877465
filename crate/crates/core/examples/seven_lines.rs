//! A seven-line arrangement built from its nomenclature, then read back.
//!
//! ```text
//! cargo run -p linearr --example seven_lines
//! ```

use linearr::nomenclature::{canonical_infinity_permutation, derive_nomenclature, realize_nomenclature};
use linearr::symbolic::thm_b_triangles;
use linearr::Nomenclature;

fn main() -> linearr::Result<()> {
    let nom: Nomenclature = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1".parse()?;
    let arr = realize_nomenclature(&nom)?;

    println!("nomenclature  {nom}");
    for id in arr.ids() {
        println!("  L{id}: {}", arr.line(id));
    }

    let oracle = arr.triangle_faces_oracle();
    let symbolic = thm_b_triangles(&nom);
    println!("triangles (geometry): {}", oracle.to_vec().len());
    print!("{oracle}");
    println!("symbolic list agrees: {}", oracle == symbolic);

    for (k, class) in oracle.equivalence_classes().iter().enumerate() {
        let items: Vec<String> = class.iter().map(ToString::to_string).collect();
        println!("class {}: {}", k + 1, items.join(" | "));
    }
    let corners: Vec<String> = arr.corner_points().iter().map(|(i, j)| format!("L{i}∩L{j}")).collect();
    println!("corner points: {}", corners.join(", "));

    // Another insertion order of the same lines gives another nomenclature.
    let other = derive_nomenclature(&arr, Some(&[1, 2, 3, 4, 7, 6, 5]))?;
    println!("also          {other}");
    let perm = canonical_infinity_permutation(&arr).expect("infinity type");
    println!("canonical     {}", derive_nomenclature(&arr, Some(&perm))?);
    Ok(())
}
