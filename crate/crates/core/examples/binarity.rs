//! Decides binarity from the lattice alone and compares with a direct search
//! for a `U(4,2)` minor.

use cycflat::corpus::random_gf3_table;
use cycflat::fixtures::Fixture;
use cycflat::flats::{find_u4_2_minor, is_binary_via_zlattice};
use cycflat::{build_zlattice, Matroid};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn report(name: &str, m: &Matroid) -> cycflat::Result<()> {
    let l = build_zlattice(m)?;
    let verdict = is_binary_via_zlattice(m, &l)?;
    let minor = find_u4_2_minor(m)?;
    print!("{name:>14}: binary {:<5}", verdict.binary);
    match minor {
        Some(spec) => println!(" U(4,2) at {spec}"),
        None => println!(),
    }
    Ok(())
}

fn main() -> cycflat::Result<()> {
    report("hamming", &Fixture::Hamming743.matroid())?;
    report("U(4,2)", &Matroid::uniform(4, 2)?)?;
    report("U(5,3)", &Matroid::uniform(5, 3)?)?;

    let mut rng = StdRng::seed_from_u64(3);
    for i in 0..4 {
        let m = Matroid::from_rank_table(6, random_gf3_table(&mut rng, 6, 3))?;
        report(&format!("GF(3) #{i}"), &m)?;
    }
    Ok(())
}
