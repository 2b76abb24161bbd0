//! Brute-force reference computations by exhaustive subset enumeration.
//!
//! Exponential in the ground set size. Used by `--verify` and by the tests.

use std::collections::BTreeSet;

use crate::matroid::Matroid;
use crate::subset::SubsetMask;

fn is_flat(m: &Matroid, s: SubsetMask) -> bool {
    let r = m.rank(s);
    s.complement(m.n()).iter().all(|e| m.rank(s.with(e)) > r)
}

fn is_cyclic(m: &Matroid, s: SubsetMask) -> bool {
    let r = m.rank(s);
    s.iter().all(|e| m.rank(s.without(e)) == r)
}

/// Every flat, in subset-bit order.
pub fn flats(m: &Matroid) -> Vec<SubsetMask> {
    m.ground_set().subsets().filter(|&s| is_flat(m, s)).collect()
}

/// Every cyclic set, in subset-bit order.
pub fn cyclic_sets(m: &Matroid) -> Vec<SubsetMask> {
    m.ground_set().subsets().filter(|&s| is_cyclic(m, s)).collect()
}

/// Every cyclic flat.
pub fn cyclic_flats(m: &Matroid) -> BTreeSet<SubsetMask> {
    m.ground_set()
        .subsets()
        .filter(|&s| is_flat(m, s) && is_cyclic(m, s))
        .collect()
}

/// Cyclic flats of `M|Y/X`, in the original labels.
pub fn minor_cyclic_flats(m: &Matroid, x: SubsetMask, y: SubsetMask) -> BTreeSet<SubsetMask> {
    let minor = m.minor(x, y).expect("X ⊆ Y ⊆ E");
    let kept = y.difference(x);
    cyclic_flats(&minor)
        .into_iter()
        .map(|s| s.expand(kept))
        .collect()
}

/// `Some(k)` when `m` is `U_n^k`.
pub fn uniform_rank(m: &Matroid) -> Option<usize> {
    let k = m.full_rank();
    m.ground_set()
        .subsets()
        .all(|s| m.rank(s) == s.len().min(k))
        .then_some(k)
}

/// `n` minus the size of a largest non-spanning set.
pub fn minimum_distance(m: &Matroid) -> Option<usize> {
    let k = m.full_rank();
    if k == 0 {
        return None;
    }
    m.ground_set()
        .subsets()
        .filter(|&s| m.rank(s) < k)
        .map(|s| m.n() - s.len())
        .min()
}

/// Flats `F` with `lo ⊊ F ⊊ hi`.
pub fn flats_strictly_between(m: &Matroid, lo: SubsetMask, hi: SubsetMask) -> usize {
    hi.difference(lo)
        .subsets()
        .map(|s| s.union(lo))
        .filter(|&s| s != lo && s != hi && is_flat(m, s))
        .count()
}

/// A pair `(X, Y)` with `M|Y/X ≅ U_4^2`, searched over every 4-set `W = Y - X`
/// and every independent `X` disjoint from it.
pub fn find_u42_minor(m: &Matroid) -> Option<(SubsetMask, SubsetMask)> {
    let e = m.ground_set();
    for w in e.subsets_of_size(4) {
        for x in e.difference(w).subsets() {
            if !m.is_independent(x) {
                continue;
            }
            let rx = x.len();
            if m.rank(x.union(w)) != rx + 2 {
                continue;
            }
            let pairs_ok = w
                .subsets_of_size(2)
                .all(|p| m.rank(x.union(p)) == rx + 2);
            if pairs_ok {
                return Some((x, x.union(w)));
            }
        }
    }
    None
}

/// All circuits.
pub fn circuits(m: &Matroid) -> Vec<SubsetMask> {
    m.ground_set()
        .subsets()
        .filter(|&c| {
            !c.is_empty() && m.rank(c) + 1 == c.len() && c.iter().all(|e| m.is_independent(c.without(e)))
        })
        .collect()
}
