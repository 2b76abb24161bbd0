//! Blunt coatoms and the minimum distance of restrictions to coatoms.

use cycflat::binary::{blunt_flags, dmzc_relation_check};
use cycflat::fixtures::Fixture;
use cycflat::build_zlattice;

fn main() -> cycflat::Result<()> {
    let m = Fixture::Code1145.matroid();
    let l = build_zlattice(&m)?;

    let report = blunt_flags(&m, &l)?;
    for c in l.coatoms() {
        let z = l.element(c);
        println!("{} (rank {}, nullity {}): blunt {}", z.set, z.rank, z.nullity, report.flag(c).blunt);
    }
    for check in &report.checks {
        println!("{}: {} checked, holds {}", check.name, check.checked, check.holds());
    }

    for r in dmzc_relation_check(&m, &l)? {
        println!(
            "d(M|{}) = {} via {:?}, relation holds {}",
            l.element(r.coatom).set,
            r.restricted_distance,
            r.case,
            r.holds
        );
    }
    Ok(())
}
