//! Full report for a matrix file, with brute-force cross-checks.
//!
//!     cargo run --example analyze -- crates/core/fixtures/code_6_3_3.txt

use cycflat::io::{analyze, read_matrix};
use cycflat::Matroid;

fn main() -> cycflat::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/simplex_7_3_4.txt").to_string()
    });
    let m = Matroid::from_matrix(read_matrix(path.as_ref())?);
    let report = analyze(&m, true)?;
    print!("{}", report.to_text());
    Ok(())
}
