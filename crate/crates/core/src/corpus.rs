//! Generators for families of small matroids: column subsets of `PG(k-1, 2)`,
//! random simple binary matroids, and random rank tables that need not be
//! binary.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::Result;
use crate::gf2::BinaryMatrix;
use crate::iso::is_isomorphic;
use crate::matroid::Matroid;
use crate::subset::SubsetMask;

/// The binary matroid whose columns are `columns` (bit `i` is row `i`).
pub fn binary_from_columns(k: usize, columns: &[u64]) -> Result<Matroid> {
    Ok(Matroid::from_matrix(BinaryMatrix::from_columns(k, columns)?))
}

/// Every simple binary matroid of rank exactly `k` on `n` elements, one per
/// `n`-subset of the points of `PG(k-1, 2)`. Not reduced up to isomorphism.
pub fn pg_subsets(k: usize, n: usize) -> impl Iterator<Item = Matroid> {
    let points = (1u64 << k) - 1;
    SubsetMask::full(points as usize)
        .subsets_of_size(n)
        .filter_map(move |choice| {
            let cols: Vec<u64> = choice.iter().map(|i| i as u64 + 1).collect();
            let m = binary_from_columns(k, &cols).ok()?;
            (m.full_rank() == k).then_some(m)
        })
}

/// Keeps one representative of each isomorphism class, in input order.
pub fn iso_reduce(ms: impl IntoIterator<Item = Matroid>) -> Result<Vec<Matroid>> {
    let mut reps: Vec<Matroid> = Vec::new();
    'next: for m in ms {
        for r in &reps {
            if is_isomorphic(&m, r)?.is_some() {
                continue 'next;
            }
        }
        reps.push(m);
    }
    Ok(reps)
}

/// `n` distinct nonzero columns of `GF(2)^k` spanning the space, or `None`
/// when `n` is out of range.
pub fn random_simple_binary<R: Rng>(rng: &mut R, k: usize, n: usize) -> Option<Matroid> {
    let points = (1usize << k) - 1;
    if n < k || n > points {
        return None;
    }
    loop {
        let cols: Vec<u64> = sample(rng, points, n).iter().map(|i| i as u64 + 1).collect();
        let m = binary_from_columns(k, &cols).expect("columns fit");
        if m.full_rank() == k {
            return Some(m);
        }
    }
}

/// `n` random columns of `GF(2)^k`, repeats and zero columns allowed.
pub fn random_binary<R: Rng>(rng: &mut R, k: usize, n: usize) -> Matroid {
    let cols: Vec<u64> = (0..n).map(|_| rng.gen_range(0..1u64 << k)).collect();
    binary_from_columns(k, &cols).expect("columns fit")
}

/// Random simple binary matroids without isthmuses, with `2 <= k <= max_k`
/// and `n <= max_n`.
pub fn simple_binary_corpus<R: Rng>(
    rng: &mut R,
    count: usize,
    max_k: usize,
    max_n: usize,
) -> Vec<Matroid> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=max_k);
        let hi = max_n.min((1 << k) - 1);
        if hi < k + 1 {
            continue;
        }
        let n = rng.gen_range(k + 1..=hi);
        let m = random_simple_binary(rng, k, n).expect("n in range");
        if m.isthmuses().is_empty() {
            out.push(m);
        }
    }
    out
}

fn gf3_rank(vectors: &[Vec<u8>]) -> usize {
    let mut rows: Vec<Vec<u8>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col]; // 1 and 2 are self-inverse mod 3
        for x in rows[rank].iter_mut() {
            *x = (*x * inv) % 3;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + 3 * 3 - f * p) % 3;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank table of `n` random vectors in `GF(3)^r`.
pub fn random_gf3_table<R: Rng>(rng: &mut R, n: usize, r: usize) -> Vec<u8> {
    let cols: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..r).map(|_| rng.gen_range(0..3)).collect())
        .collect();
    SubsetMask::full(n)
        .subsets()
        .map(|x| {
            let picked: Vec<Vec<u8>> = x.iter().map(|j| cols[j].clone()).collect();
            gf3_rank(&picked) as u8
        })
        .collect()
}

/// Rank table of a sparse paving matroid: `U_n^r` with a random family of
/// `r`-sets, pairwise meeting in at most `r - 2` elements, lowered to rank
/// `r - 1`.
pub fn random_sparse_paving_table<R: Rng>(rng: &mut R, n: usize, r: usize) -> Vec<u8> {
    let mut hyperplanes: Vec<SubsetMask> = Vec::new();
    if r >= 1 && r <= n {
        for candidate in SubsetMask::full(n).subsets_of_size(r) {
            let compatible = hyperplanes
                .iter()
                .all(|h| h.intersection(candidate).len() + 2 <= r);
            if compatible && rng.gen_bool(0.4) {
                hyperplanes.push(candidate);
            }
        }
    }
    SubsetMask::full(n)
        .subsets()
        .map(|x| {
            let base = x.len().min(r);
            (base - usize::from(hyperplanes.contains(&x))) as u8
        })
        .collect()
}

/// Rank table of `n` random vectors in `GF(2)^r`.
pub fn random_gf2_table<R: Rng>(rng: &mut R, n: usize, r: usize) -> Vec<u8> {
    let cols: Vec<u64> = (0..n).map(|_| rng.gen_range(0..1u64 << r)).collect();
    binary_from_columns(r, &cols)
        .and_then(|m| m.rank_table())
        .expect("small binary matroid")
}

/// Valid rank tables on at most `max_n` elements, cycling through `GF(3)`
/// representations, sparse paving matroids and `GF(2)` representations.
pub fn random_rank_tables<R: Rng>(rng: &mut R, count: usize, max_n: usize) -> Vec<Matroid> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(4..=max_n);
            let r = rng.gen_range(2..=n.min(4));
            let table = match i % 3 {
                0 => random_gf3_table(rng, n, r),
                1 => random_sparse_paving_table(rng, n, r),
                _ => random_gf2_table(rng, n, r),
            };
            Matroid::from_rank_table(n, table).expect("generated tables satisfy R1-R3")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pg_subset_counts() {
        // Every 3-subset of the Fano plane spanning rank 3: 35 minus 7 lines.
        assert_eq!(pg_subsets(3, 3).count(), 28);
        assert_eq!(pg_subsets(3, 7).count(), 1);
        let reps = iso_reduce(pg_subsets(3, 4)).unwrap();
        // Four points of the Fano plane: a line plus a point, or a frame.
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn random_families_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in simple_binary_corpus(&mut rng, 30, 5, 12) {
            assert!(m.is_simple());
            assert!(m.isthmuses().is_empty());
            assert!(m.n() <= 12 && m.full_rank() <= 5);
        }
        assert!(random_simple_binary(&mut rng, 3, 8).is_none());
        let tables = random_rank_tables(&mut rng, 10, 7);
        assert_eq!(tables.len(), 10);
    }

    #[test]
    fn gf3_realizes_u42() {
        let cols = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
        let table: Vec<u8> = SubsetMask::full(4)
            .subsets()
            .map(|x| gf3_rank(&x.iter().map(|j| cols[j].clone()).collect::<Vec<_>>()) as u8)
            .collect();
        let m = Matroid::from_rank_table(4, table).unwrap();
        assert_eq!(crate::oracle::uniform_rank(&m), Some(2));
    }
}
