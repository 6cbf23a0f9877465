//! Bounded faces, crossing orders and corner points of a cyclic arrangement.
//!
//! ```text
//! cargo run -p linearr --example faces_and_corners -- "(1 2 5 3 4)"
//! ```

use linearr::cyclicity::{faces_are_near_ngon, realize_cycle};
use linearr::GonalityCycle;

fn main() -> linearr::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(1 2 5 3 4)".into());
    let c: GonalityCycle = text.parse()?;
    let arr = realize_cycle(&c)?;

    println!("crossing orders:");
    for (id, row) in arr.line_orders().rows() {
        println!("  L{id}: {row:?}");
    }
    let faces = arr.bounded_faces();
    println!("bounded faces: {}", faces.faces.len());
    for f in &faces.faces {
        println!("  {}-gon on lines {:?}", f.len(), f.lines());
    }
    println!("only the n-gon, quadrilaterals and triangles on its sides: {}", faces_are_near_ngon(arr.n(), &faces));
    let corners = arr.corner_points();
    println!("corner points: {corners:?}");
    println!("same via quadrants: {}", corners == arr.corner_points_by_quadrants());
    Ok(())
}
