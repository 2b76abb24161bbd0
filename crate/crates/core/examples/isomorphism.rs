use cycflat::fixtures::Fixture;
use cycflat::iso::is_isomorphic;
use cycflat::SubsetMask;

fn main() -> cycflat::Result<()> {
    // Deleting any element of RM(1,3) leaves the Hamming matroid.
    let rm = Fixture::ReedMuller844.matroid();
    let hamming = Fixture::Hamming743.matroid();
    for e in 0..rm.n() {
        let deletion = rm.restrict(rm.ground_set().without(e))?;
        let witness = is_isomorphic(&deletion, &hamming)?;
        println!("delete {}: {:?}", e + 1, witness.map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>()));
    }

    let contraction = rm.contract(SubsetMask::singleton(0))?;
    let simplex = Fixture::Simplex734.matroid();
    println!("contract 1 ~ simplex: {}", is_isomorphic(&contraction, &simplex)?.is_some());
    Ok(())
}
