use cycflat::binary::{griesmer_chain, griesmer_check, residual_set};
use cycflat::fixtures::Fixture;

fn main() -> cycflat::Result<()> {
    for f in Fixture::ALL {
        let m = f.matroid();
        let p = m.params()?;
        let g = griesmer_check(p.n, p.k, p.d)?;
        let r = residual_set(&m)?;
        println!(
            "{:<16} {p}  bound {:>2}  slack {}  residual {} via {:?}",
            f.name(),
            g.bound,
            g.slack,
            r.a,
            r.case
        );
    }

    println!();
    for level in griesmer_chain(&Fixture::Code1145.matroid())? {
        println!("{} ({},{},{})", level.set, level.size, level.rank, level.distance);
    }
    Ok(())
}
