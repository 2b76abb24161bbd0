//! Prints the lattice of cyclic flats of a bundled matrix as Graphviz DOT.
//!
//!     cargo run --example lattice_dot -- code_11_4_5 | dot -Tsvg > lattice.svg

use cycflat::fixtures::Fixture;
use cycflat::io::lattice_dot;
use cycflat::build_zlattice;

fn main() -> cycflat::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "example1".into());
    let fixture = Fixture::from_name(&name).expect("unknown fixture");
    let lattice = build_zlattice(&fixture.matroid())?;
    print!("{}", lattice_dot(&lattice));
    Ok(())
}
