//! Cyclic flats of a minor computed two ways: from the lattice of the parent
//! and directly from the minor itself.

use cycflat::fixtures::Fixture;
use cycflat::minors::{is_minor_uniform, zmap_minor, MinorSpec};
use cycflat::{build_zlattice, SubsetMask};

fn main() -> cycflat::Result<()> {
    let m = Fixture::ReedMuller844.matroid();
    let l = build_zlattice(&m)?;

    // Contract element 8, keep everything: the simplex matroid.
    let x = SubsetMask::from_one_based([8]);
    let spec = MinorSpec::new(x, m.ground_set())?;
    let (image, _) = zmap_minor(&m, &l, spec);
    let direct = build_zlattice(&m.minor(x, m.ground_set())?)?;

    println!("{spec}");
    println!("  images of Z(M): {} sets", image.len());
    println!("  Z of the minor: {} sets", direct.len());
    println!("  params {}", m.minor(x, m.ground_set())?.params()?);

    let line = MinorSpec::new(SubsetMask::EMPTY, SubsetMask::from_one_based([1, 2, 3, 5]))?;
    let verdict = is_minor_uniform(&m, &l, line)?;
    println!("{line}: uniform {} via {:?}", verdict.is_uniform, verdict.criterion);
    Ok(())
}
