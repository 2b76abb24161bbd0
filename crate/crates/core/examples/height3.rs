use cycflat::binary::{classify_height3, Height3Class};
use cycflat::corpus::{iso_reduce, pg_subsets};
use cycflat::build_zlattice;

fn main() -> cycflat::Result<()> {
    let mut found = Vec::new();
    for n in 6..=8 {
        for m in pg_subsets(4, n).chain(pg_subsets(3, n.min(7))) {
            if m.isthmuses().is_empty() && build_zlattice(&m)?.height() == 3 {
                found.push(m);
            }
        }
    }
    for m in iso_reduce(found)? {
        let class = match classify_height3(&m)? {
            Height3Class::NullityTwo => "nullity two".to_string(),
            Height3Class::Isomorphic { fixture, .. } => fixture.name().to_string(),
        };
        println!("{} -> {class}", m.params()?);
    }
    Ok(())
}
