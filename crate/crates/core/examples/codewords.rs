//! Light codewords against large coatoms.

use cycflat::binary::coatom_codeword_map;
use cycflat::fixtures::Fixture;
use cycflat::build_zlattice;

fn main() -> cycflat::Result<()> {
    let m = Fixture::Code633.matroid();
    let l = build_zlattice(&m)?;
    let map = coatom_codeword_map(&m, &l)?;
    println!("weight < {}, coatom size > {}", map.weight_limit, map.size_threshold);
    for p in &map.pairs {
        println!("  {} (weight {}) -> {}", p.codeword, p.weight, l.element(p.coatom).set);
    }
    println!("bijective: {}", map.bijective);
    Ok(())
}
