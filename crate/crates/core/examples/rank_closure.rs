use cycflat::{parse_matrix, Matroid, SubsetMask};

fn main() -> cycflat::Result<()> {
    let g = parse_matrix("101011\n011011\n000111")?;
    let m = Matroid::from_matrix(g);

    for set in [vec![1, 2], vec![1, 2, 3], vec![3, 4], vec![5, 6]] {
        let x = SubsetMask::from_one_based(set);
        println!(
            "{x}: rank {}, closure {}, cyclic part {}",
            m.rank(x),
            m.closure(x),
            m.cyclic_operator(x)
        );
    }
    println!("params {}", m.params()?);
    Ok(())
}
