//! Checks a hand-written family of sets and ranks against the cyclic-flat
//! axioms, then rebuilds the matroid it describes.

use cycflat::io::parse_presentation;
use cycflat::zlattice::{matroid_from_cyclic_flats, verify_z_axioms};
use cycflat::build_zlattice;

const FANO_DUAL: &str = "\
n=7
- 0
1,2,3,4,5,6,7 4
";

const BROKEN: &str = "\
n=6
- 0
1,2,3,4 2
3,4,5,6 2
1,2,3,4,5,6 3
";

fn main() -> cycflat::Result<()> {
    for text in [FANO_DUAL, BROKEN] {
        let p = parse_presentation(text)?;
        match verify_z_axioms(&p) {
            Ok(()) => {
                let m = matroid_from_cyclic_flats(&p)?;
                let l = build_zlattice(&m)?;
                println!("valid: rebuilt matroid has {} cyclic flats, rank {}", l.len(), m.full_rank());
            }
            Err(v) => println!("invalid: {v}"),
        }
    }
    Ok(())
}
