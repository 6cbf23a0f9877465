//! Saves an arrangement file and an SVG drawing of it.
//!
//! ```text
//! cargo run -p linearr --example render_svg -- out_dir
//! ```

use std::path::PathBuf;

use linearr::io::{load_arr, save_arr};
use linearr::nomenclature::realize_nomenclature;
use linearr::render::{render_svg, RenderSpec};

fn main() -> linearr::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/render".into()));
    std::fs::create_dir_all(&dir)?;

    let arr = realize_nomenclature(&"1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1".parse()?)?;
    let file = dir.join("seven.arr");
    save_arr(&file, &arr)?;
    let back = load_arr(&file)?;
    assert_eq!(back.lines(), arr.lines());

    let spec = RenderSpec::new(dir.join("seven.svg"));
    render_svg(&back, &spec)?;
    println!("wrote {} and {}", file.display(), spec.path.display());
    Ok(())
}
