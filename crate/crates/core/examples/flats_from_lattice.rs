use cycflat::fixtures::Fixture;
use cycflat::flats::{corank2_flats, count_corank2_interval, is_flat_via_zlattice, upsilon};
use cycflat::build_zlattice;

fn main() -> cycflat::Result<()> {
    let m = Fixture::Simplex734.matroid();
    let l = build_zlattice(&m)?;

    let flats = m.ground_set().subsets().filter(|&f| is_flat_via_zlattice(&l, f)).count();
    println!("{flats} flats recognised from {} cyclic flats", l.len());

    for f in corank2_flats(&m, &l)? {
        let ups = upsilon(&m, &l, f)?;
        println!(
            "{f}: {} hyperplanes above, {} maximal members",
            count_corank2_interval(&m, &l, f)?,
            ups.maximal.len()
        );
    }
    Ok(())
}
