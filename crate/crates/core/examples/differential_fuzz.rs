//! Runs the differential fuzzer on all three families.
//!
//! ```text
//! cargo run --release -p linearr --example differential_fuzz -- 500 42
//! ```

use linearr::fuzz::{fuzz_differential, Family, FuzzConfig};

fn main() -> linearr::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    for (family, lo, hi) in [(Family::Infinity, 3, 10), (Family::Cyclic, 4, 12), (Family::Generic, 3, 9)] {
        let report = fuzz_differential(&FuzzConfig::new(family, seed, trials, lo, hi))?;
        println!("{report}");
    }
    Ok(())
}
