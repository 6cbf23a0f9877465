//! Exact combinatorics of line arrangements in the plane.
//!
//! Given lines in general position (no two parallel, no three concurrent,
//! none horizontal) this crate
//!
//! * normalizes them to the conventional embedding and reads off crossing
//!   orders, corner points and bounded faces ([`arrangement`]);
//! * derives and realizes signed nomenclatures of infinity-type arrangements
//!   ([`nomenclature`]);
//! * validates, enumerates, realizes and recognizes gonality cycles of
//!   arrangements whose lines all bound one convex face ([`cyclicity`]);
//! * lists triangles and decides lines at infinity purely symbolically
//!   ([`symbolic`]);
//! * cross-checks all of the above with a seeded differential fuzzer
//!   ([`fuzz`]).
//!
//! All geometry is exact rational arithmetic; no floating point value ever
//! influences a combinatorial answer.
//!
//! The runnable programs in `examples/` walk through each capability:
//!
//! ```text
//! cargo run -p linearr --example seven_lines
//! cargo run -p linearr --example gonality_cycles
//! cargo run -p linearr --example same_triangles
//! cargo run -p linearr --example line_at_infinity
//! cargo run -p linearr --example faces_and_corners
//! cargo run -p linearr --example render_svg
//! cargo run -p linearr --example differential_fuzz
//! ```

pub mod arrangement;
pub mod cli;
pub mod cyclicity;
pub mod error;
pub mod exact;
pub mod fuzz;
pub mod io;
pub mod nomenclature;
pub mod render;
pub mod symbolic;

/// Line labels are `1..=n`, assigned in increasing angle order.
pub type LineId = usize;

pub use arrangement::{Arrangement, LineOrderTable, Triangle, TriangleSet};
pub use cyclicity::GonalityCycle;
pub use error::{Error, Result};
pub use exact::{Line, Point, Rat};
pub use nomenclature::{Nomenclature, Sign};
