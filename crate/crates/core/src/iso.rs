//! Exact isomorphism testing for small matroids.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::SubsetMask;

/// Largest ground set [`is_isomorphic`] accepts.
pub const MAX_ISO_SIZE: usize = 12;

type Profile = BTreeMap<(u8, u8), u32>;

/// Histogram of `(|S|, ρ(S))` over the subsets `S ⊇ fixed`.
fn profile(table: &[u8], n: usize, fixed: SubsetMask) -> Profile {
    let mut h = Profile::new();
    for rest in fixed.complement(n).subsets() {
        let s = rest.union(fixed);
        *h.entry((s.len() as u8, table[s.bits() as usize])).or_default() += 1;
    }
    h
}

struct Side {
    table: Vec<u8>,
    element: Vec<Profile>,
    pair: Vec<Vec<Profile>>,
}

impl Side {
    fn new(m: &Matroid) -> Result<Self> {
        let n = m.n();
        let table = m.rank_table()?;
        let element = (0..n)
            .map(|e| profile(&table, n, SubsetMask::singleton(e)))
            .collect();
        let pair = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| profile(&table, n, SubsetMask::from_indices([a, b])))
                    .collect()
            })
            .collect();
        Ok(Side {
            table,
            element,
            pair,
        })
    }
}

/// Searches for a bijection `ψ` with `ρ₂(ψ(X)) = ρ₁(X)` for all `X`. On
/// success the witness maps element `i` of `m1` to `witness[i]` of `m2`.
pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Result<Option<Vec<usize>>> {
    let n = m1.n();
    if n > MAX_ISO_SIZE || m2.n() > MAX_ISO_SIZE {
        return Err(Error::BoundExceeded {
            what: "ground set size for isomorphism search",
            limit: MAX_ISO_SIZE,
        });
    }
    if n != m2.n() || m1.full_rank() != m2.full_rank() {
        return Ok(None);
    }
    let a = Side::new(m1)?;
    let b = Side::new(m2)?;

    let mut ha: Vec<&Profile> = a.element.iter().collect();
    let mut hb: Vec<&Profile> = b.element.iter().collect();
    ha.sort();
    hb.sort();
    if ha != hb {
        return Ok(None);
    }

    // Most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| a.element.iter().filter(|p| **p == a.element[e]).count());

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(&a, &b, &order, 0, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn search(
    a: &Side,
    b: &Side,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    for t in 0..image.len() {
        if used[t] || a.element[e] != b.element[t] {
            continue;
        }
        let pairs_ok = order[..depth]
            .iter()
            .all(|&p| a.pair[e][p] == b.pair[t][image[p]]);
        if !pairs_ok {
            continue;
        }
        image[e] = t;
        // Every subset of the mapped prefix that contains `e`.
        let prefix = SubsetMask::from_indices(order[..depth].iter().copied());
        let consistent = prefix.subsets().all(|s| {
            let img = s.iter().fold(SubsetMask::singleton(t), |acc, x| acc.with(image[x]));
            a.table[s.with(e).bits() as usize] == b.table[img.bits() as usize]
        });
        if consistent {
            used[t] = true;
            if search(a, b, order, depth + 1, image, used) {
                return true;
            }
            used[t] = false;
        }
        image[e] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{parse_matrix, BinaryMatrix};

    fn fig_4() -> Matroid {
        Matroid::from_matrix(parse_matrix("100111\n010101\n001011").unwrap())
    }

    fn permuted(m: &BinaryMatrix, perm: &[usize]) -> Matroid {
        let rows = m
            .rows()
            .iter()
            .map(|&r| {
                perm.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &src)| acc | (((r >> src) & 1) << j))
            })
            .collect();
        Matroid::from_matrix(BinaryMatrix::new(m.num_cols(), rows).unwrap())
    }

    #[test]
    fn self_isomorphism() {
        let m = fig_4();
        let w = is_isomorphic(&m, &m).unwrap().unwrap();
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn permuted_copy_is_isomorphic_with_valid_witness() {
        let m = fig_4();
        let perm = [3, 5, 0, 2, 4, 1];
        let p = permuted(m.matrix().unwrap(), &perm);
        let w = is_isomorphic(&m, &p).unwrap().unwrap();
        for x in m.ground_set().subsets() {
            let img = SubsetMask::from_indices(x.iter().map(|i| w[i]));
            assert_eq!(p.rank(img), m.rank(x));
        }
    }

    #[test]
    fn uniform_is_not_a_restriction_of_example_1() {
        let m = Matroid::from_matrix(parse_matrix("101011\n011011\n000111").unwrap());
        let u = Matroid::uniform(4, 2).unwrap();
        for y in m.ground_set().subsets_of_size(4) {
            let r = m.restrict(y).unwrap();
            assert!(is_isomorphic(&u, &r).unwrap().is_none());
        }
    }

    #[test]
    fn size_bound_is_enforced() {
        let u = Matroid::uniform(13, 2).unwrap();
        assert!(is_isomorphic(&u, &u).is_err());
    }
}
