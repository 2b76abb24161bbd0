//! Matroids given by a rank oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, MAX_CODEWORD_RANK};
use crate::subset::{SubsetMask, MAX_GROUND_SET};
use crate::zlattice::CyclicFlatPresentation;

const DENSE_CACHE_LIMIT: usize = 20;
const UNKNOWN: u8 = u8::MAX;

/// `(n, k, d)` together with `η(E) = n - k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub eta: usize,
}

impl fmt::Display for MatroidParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

enum Backend {
    Matrix(BinaryMatrix),
    Uniform { k: usize },
    CyclicFlats(CyclicFlatPresentation),
    Table(Vec<u8>),
    Dual(Matroid),
    Minor {
        base: Matroid,
        contracted: SubsetMask,
        kept: SubsetMask,
        contracted_rank: usize,
    },
}

enum RankCache {
    None,
    Dense(Vec<AtomicU8>),
    Sparse(Mutex<HashMap<u64, u8>>),
}

impl RankCache {
    fn for_size(n: usize) -> Self {
        if n <= DENSE_CACHE_LIMIT {
            RankCache::Dense((0..1usize << n).map(|_| AtomicU8::new(UNKNOWN)).collect())
        } else {
            RankCache::Sparse(Mutex::new(HashMap::new()))
        }
    }

    fn get(&self, x: u64) -> Option<usize> {
        match self {
            RankCache::None => None,
            RankCache::Dense(v) => match v[x as usize].load(Ordering::Relaxed) {
                UNKNOWN => None,
                r => Some(r as usize),
            },
            RankCache::Sparse(m) => m.lock().unwrap().get(&x).map(|&r| r as usize),
        }
    }

    fn put(&self, x: u64, r: usize) {
        match self {
            RankCache::None => {}
            RankCache::Dense(v) => v[x as usize].store(r as u8, Ordering::Relaxed),
            RankCache::Sparse(m) => {
                m.lock().unwrap().insert(x, r as u8);
            }
        }
    }
}

struct Inner {
    n: usize,
    backend: Backend,
    cache: RankCache,
}

/// A matroid on `{0, .., n-1}`. Cheap to clone; clones share the rank cache.
#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.0.backend {
            Backend::Matrix(_) => "matrix",
            Backend::Uniform { .. } => "uniform",
            Backend::CyclicFlats(_) => "cyclic-flats",
            Backend::Table(_) => "table",
            Backend::Dual(_) => "dual",
            Backend::Minor { .. } => "minor",
        };
        write!(f, "Matroid({kind}, n={}, k={})", self.n(), self.full_rank())
    }
}

impl Matroid {
    fn wrap(n: usize, backend: Backend, cache: RankCache) -> Self {
        Matroid(Arc::new(Inner { n, backend, cache }))
    }

    /// Column matroid of a binary matrix.
    pub fn from_matrix(m: BinaryMatrix) -> Self {
        Matroid::wrap(m.num_cols(), Backend::Matrix(m), RankCache::None)
    }

    /// `U_n^k`: every set of at most `k` elements is independent.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::precondition(format!("uniform({n},{k}) needs k <= n")));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::BoundExceeded {
                what: "ground set size",
                limit: MAX_GROUND_SET,
            });
        }
        Ok(Matroid::wrap(n, Backend::Uniform { k }, RankCache::None))
    }

    /// Matroid whose rank is the minimum formula over a cyclic-flat
    /// presentation. The presentation is not validated here; see
    /// [`crate::zlattice::matroid_from_cyclic_flats`] for the checked route.
    pub fn from_presentation(p: CyclicFlatPresentation) -> Self {
        let n = p.n();
        Matroid::wrap(n, Backend::CyclicFlats(p), RankCache::for_size(n))
    }

    /// Matroid from an explicit rank table indexed by subset bits. The table
    /// is checked against the rank axioms.
    pub fn from_rank_table(n: usize, table: Vec<u8>) -> Result<Self> {
        if n > DENSE_CACHE_LIMIT {
            return Err(Error::BoundExceeded {
                what: "ground set size for a rank table",
                limit: DENSE_CACHE_LIMIT,
            });
        }
        if table.len() != 1 << n {
            return Err(Error::InvalidRankFunction(format!(
                "table has {} entries, expected {}",
                table.len(),
                1usize << n
            )));
        }
        validate_rank_table(n, &table)?;
        Ok(Matroid::wrap(n, Backend::Table(table), RankCache::None))
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn ground_set(&self) -> SubsetMask {
        SubsetMask::full(self.0.n)
    }

    /// The underlying matrix, for matrix-backed matroids.
    pub fn matrix(&self) -> Option<&BinaryMatrix> {
        match &self.0.backend {
            Backend::Matrix(m) => Some(m),
            _ => None,
        }
    }

    /// The presentation, for matroids built from cyclic flats.
    pub fn presentation(&self) -> Option<&CyclicFlatPresentation> {
        match &self.0.backend {
            Backend::CyclicFlats(p) => Some(p),
            _ => None,
        }
    }

    /// For a minor, the original (0-based) index of each element of the
    /// minor's ground set, in order.
    pub fn index_map(&self) -> Option<Vec<usize>> {
        match &self.0.backend {
            Backend::Minor { kept, .. } => Some(kept.iter().collect()),
            _ => None,
        }
    }

    fn check(&self, x: SubsetMask) -> Result<()> {
        if x.is_subset(self.ground_set()) {
            Ok(())
        } else {
            Err(Error::OutOfGroundSet { set: x, n: self.n() })
        }
    }

    /// `ρ(X)`. Panics if `x` leaves the ground set; see [`Matroid::try_rank`].
    pub fn rank(&self, x: SubsetMask) -> usize {
        debug_assert!(x.is_subset(self.ground_set()), "{x} outside [{}]", self.n());
        let bits = x.bits();
        if let Some(r) = self.0.cache.get(bits) {
            return r;
        }
        let r = match &self.0.backend {
            Backend::Matrix(m) => m.rank_of_columns_unchecked(x),
            Backend::Uniform { k } => x.len().min(*k),
            Backend::CyclicFlats(p) => p.rank_of(x),
            Backend::Table(t) => t[bits as usize] as usize,
            Backend::Dual(base) => {
                let e = base.ground_set();
                x.len() + base.rank(e.difference(x)) - base.full_rank()
            }
            Backend::Minor {
                base,
                contracted,
                kept,
                contracted_rank,
            } => base.rank(x.expand(*kept).union(*contracted)) - contracted_rank,
        };
        self.0.cache.put(bits, r);
        r
    }

    pub fn try_rank(&self, x: SubsetMask) -> Result<usize> {
        self.check(x)?;
        Ok(self.rank(x))
    }

    /// `k = ρ(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank(self.ground_set())
    }

    /// `η(X) = |X| - ρ(X)`.
    pub fn nullity(&self, x: SubsetMask) -> usize {
        x.len() - self.rank(x)
    }

    pub fn is_independent(&self, x: SubsetMask) -> bool {
        self.rank(x) == x.len()
    }

    pub fn is_basis(&self, x: SubsetMask) -> bool {
        x.len() == self.full_rank() && self.is_independent(x)
    }

    /// `cl(X)`: `X` together with every element that does not raise its rank.
    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        let r = self.rank(x);
        x.complement(self.n())
            .iter()
            .filter(|&e| self.rank(x.with(e)) == r)
            .fold(x, SubsetMask::with)
    }

    /// `cyc(X)`: the elements of `X` lying on a circuit inside `X`.
    pub fn cyclic_operator(&self, x: SubsetMask) -> SubsetMask {
        let r = self.rank(x);
        x.iter()
            .filter(|&e| self.rank(x.without(e)) == r)
            .fold(SubsetMask::EMPTY, SubsetMask::with)
    }

    pub fn is_flat(&self, x: SubsetMask) -> bool {
        self.closure(x) == x
    }

    pub fn is_cyclic(&self, x: SubsetMask) -> bool {
        self.cyclic_operator(x) == x
    }

    pub fn is_cyclic_flat(&self, x: SubsetMask) -> bool {
        self.is_flat(x) && self.is_cyclic(x)
    }

    /// `M*`, with `ρ*(A) = |A| + ρ(E - A) - ρ(E)`.
    pub fn dual(&self) -> Matroid {
        if let Backend::Dual(base) = &self.0.backend {
            return base.clone();
        }
        Matroid::wrap(self.n(), Backend::Dual(self.clone()), RankCache::None)
    }

    /// `M|Y`, relabelled onto `0..|Y|`.
    pub fn restrict(&self, y: SubsetMask) -> Result<Matroid> {
        self.minor(SubsetMask::EMPTY, y)
    }

    /// `M/X`, relabelled onto `0..n-|X|`.
    pub fn contract(&self, x: SubsetMask) -> Result<Matroid> {
        self.minor(x, self.ground_set())
    }

    /// `M|Y/X`. The ground set `Y - X` is renumbered in ascending order;
    /// [`Matroid::index_map`] recovers the original labels.
    pub fn minor(&self, x: SubsetMask, y: SubsetMask) -> Result<Matroid> {
        self.check(y)?;
        if !x.is_subset(y) {
            return Err(Error::precondition(format!("contracted set {x} is not inside {y}")));
        }
        let kept = y.difference(x);
        let contracted_rank = self.rank(x);
        let n = kept.len();
        let cache = if matches!(self.0.backend, Backend::Matrix(_)) {
            RankCache::None
        } else {
            RankCache::for_size(n)
        };
        Ok(Matroid::wrap(
            n,
            Backend::Minor {
                base: self.clone(),
                contracted: x,
                kept,
                contracted_rank,
            },
            cache,
        ))
    }

    /// `cl(∅)`.
    pub fn loops(&self) -> SubsetMask {
        self.closure(SubsetMask::EMPTY)
    }

    /// `E - cyc(E)`.
    pub fn isthmuses(&self) -> SubsetMask {
        let e = self.ground_set();
        e.difference(self.cyclic_operator(e))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.loops().is_empty() && self.isthmuses().is_empty()
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        if !self.loops().is_empty() {
            return false;
        }
        let e = self.ground_set();
        e.iter().all(|a| {
            e.iter()
                .filter(|&b| b > a)
                .all(|b| self.rank(SubsetMask::from_indices([a, b])) == 2)
        })
    }

    /// Least `|X|` with `ρ(E - X) < ρ(E)`.
    pub fn minimum_distance(&self) -> Result<usize> {
        let k = self.full_rank();
        if k == 0 {
            return Err(Error::RankZero);
        }
        match &self.0.backend {
            Backend::Matrix(m) if m.rank() <= MAX_CODEWORD_RANK => {
                Ok(m.min_nonzero_weight()?.expect("nonzero rank has a nonzero codeword"))
            }
            Backend::Minor {
                base,
                contracted,
                kept,
                ..
            } if contracted.is_empty() && base.matrix().is_some_and(|m| m.rank() <= MAX_CODEWORD_RANK) => {
                let m = base.matrix().expect("checked above");
                let columns: Vec<u64> = kept.iter().map(|j| m.column(j)).collect();
                let sub = BinaryMatrix::from_columns(m.rank(), &columns)?;
                Ok(sub.min_nonzero_weight()?.expect("nonzero rank has a nonzero codeword"))
            }
            Backend::Uniform { k } => Ok(self.n() - k + 1),
            Backend::CyclicFlats(_) if self.is_nondegenerate() => {
                self.min_distance_via_cyclic_flats()
            }
            _ => Ok(self.min_distance_sweep()),
        }
    }

    /// The subset sweep behind [`Matroid::minimum_distance`], usable on any backend.
    pub fn min_distance_sweep(&self) -> usize {
        let e = self.ground_set();
        let k = self.full_rank();
        // d = n - (size of a largest hyperplane).
        (1..=self.n())
            .find(|&s| e.subsets_of_size(s).any(|x| self.rank(e.difference(x)) < k))
            .expect("removing E drops the rank when k > 0")
    }

    /// `d = η(E) + 1 - max{η(Z) : Z proper cyclic flat}`, valid for
    /// non-degenerate matroids.
    pub fn min_distance_via_cyclic_flats(&self) -> Result<usize> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        if self.full_rank() == 0 {
            return Err(Error::RankZero);
        }
        let lattice = crate::zlattice::build_zlattice(self)?;
        let e = self.ground_set();
        let max_proper = lattice
            .elements()
            .iter()
            .filter(|z| z.set != e)
            .map(|z| z.nullity)
            .max()
            .unwrap_or(0);
        Ok(self.nullity(e) + 1 - max_proper)
    }

    pub fn params(&self) -> Result<MatroidParams> {
        let n = self.n();
        let k = self.full_rank();
        Ok(MatroidParams {
            n,
            k,
            d: self.minimum_distance()?,
            eta: n - k,
        })
    }

    /// Rank of every subset, indexed by subset bits.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        if self.n() > DENSE_CACHE_LIMIT {
            return Err(Error::BoundExceeded {
                what: "ground set size for a rank table",
                limit: DENSE_CACHE_LIMIT,
            });
        }
        Ok(self
            .ground_set()
            .subsets()
            .map(|x| self.rank(x) as u8)
            .collect())
    }
}

/// Checks R1-R3 through their local forms: `ρ(∅) = 0`, unit increase, and
/// `ρ(X+e) + ρ(X+f) >= ρ(X+e+f) + ρ(X)`.
pub fn validate_rank_table(n: usize, table: &[u8]) -> Result<()> {
    if table[0] != 0 {
        return Err(Error::InvalidRankFunction("rank of the empty set is not 0".into()));
    }
    let full = SubsetMask::full(n);
    for x in full.subsets() {
        let rx = table[x.bits() as usize];
        for e in x.complement(n).iter() {
            let xe = x.with(e);
            let re = table[xe.bits() as usize];
            if re < rx || re > rx + 1 {
                return Err(Error::InvalidRankFunction(format!(
                    "rank({xe}) = {re} but rank({x}) = {rx}"
                )));
            }
            for f in x.complement(n).iter().filter(|&f| f > e) {
                let rf = table[x.with(f).bits() as usize];
                let ref_ = table[xe.with(f).bits() as usize];
                if re + rf < ref_ + rx {
                    return Err(Error::InvalidRankFunction(format!(
                        "submodularity fails at {x} with {} and {}",
                        e + 1,
                        f + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::parse_matrix;
    use proptest::prelude::*;

    fn s(ix: &[usize]) -> SubsetMask {
        SubsetMask::from_one_based(ix.iter().copied())
    }

    fn example_1() -> Matroid {
        Matroid::from_matrix(parse_matrix("101011\n011011\n000111").unwrap())
    }

    fn fig_4() -> Matroid {
        Matroid::from_matrix(parse_matrix("100111\n010101\n001011").unwrap())
    }

    #[test]
    fn rank_and_nullity() {
        let u = Matroid::uniform(4, 2).unwrap();
        assert_eq!(u.rank(s(&[1, 2, 3])), 2);
        let m = example_1();
        assert_eq!(m.rank(s(&[3, 4, 5, 6])), 2);
        assert_eq!(m.nullity(SubsetMask::EMPTY), 0);
        assert_eq!(m.nullity(m.ground_set()), 3);
        assert_eq!(m.nullity(s(&[1, 2, 3])), 1);
    }

    #[test]
    fn closure_and_cyclic_operator() {
        let m = example_1();
        assert_eq!(m.closure(s(&[5])), s(&[5, 6]));
        assert_eq!(fig_4().closure(s(&[1, 2])), s(&[1, 2, 4]));
        assert_eq!(m.cyclic_operator(s(&[3, 4, 5, 6])), s(&[3, 4, 5, 6]));
        assert_eq!(m.cyclic_operator(s(&[1, 2, 3, 4])), s(&[1, 2, 3]));
        assert_eq!(m.cyclic_operator(s(&[1, 2])), SubsetMask::EMPTY);
    }

    #[test]
    fn dual_rank() {
        let m = example_1();
        assert_eq!(m.dual().full_rank(), 3);
        let u = Matroid::uniform(4, 2).unwrap();
        let ud = u.dual();
        for x in u.ground_set().subsets() {
            assert_eq!(ud.rank(x), u.rank(x));
        }
    }

    #[test]
    fn minors() {
        let m = example_1();
        let r = m.restrict(s(&[3, 4, 5, 6])).unwrap();
        assert_eq!(r.n(), 4);
        assert_eq!(r.full_rank(), 2);
        assert_eq!(r.nullity(r.ground_set()), 2);
        assert_eq!(r.index_map().unwrap(), vec![2, 3, 4, 5]);
        let c = m.contract(s(&[1, 2, 4])).unwrap();
        assert_eq!(c.full_rank(), 0);
        assert!(m.minor(s(&[1]), s(&[2, 3])).is_err());
    }

    #[test]
    fn uniform_minors_are_uniform() {
        for n in 0..=6 {
            for k in 0..=n {
                let u = Matroid::uniform(n, k).unwrap();
                let e = u.ground_set();
                for y in e.subsets() {
                    for x in y.subsets() {
                        let mnr = u.minor(x, y).unwrap();
                        let kk = k.saturating_sub(x.len()).min(mnr.n());
                        for a in mnr.ground_set().subsets() {
                            assert_eq!(mnr.rank(a), a.len().min(kk));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minimum_distance_examples() {
        assert_eq!(fig_4().minimum_distance().unwrap(), 3);
        assert_eq!(Matroid::uniform(4, 2).unwrap().minimum_distance().unwrap(), 3);
        assert_eq!(example_1().minimum_distance().unwrap(), 2);
        assert_eq!(example_1().min_distance_sweep(), 2);
        assert!(Matroid::uniform(3, 0).unwrap().minimum_distance().is_err());
    }

    #[test]
    fn loops_and_isthmuses() {
        let id = Matroid::from_matrix(parse_matrix("100\n010\n001").unwrap());
        assert_eq!(id.isthmuses(), id.ground_set());
        assert!(example_1().is_nondegenerate());
        let z = Matroid::from_matrix(parse_matrix("100\n010").unwrap());
        assert_eq!(z.loops(), s(&[3]));
        assert_eq!(Matroid::uniform(3, 3).unwrap().isthmuses().len(), 3);
        assert_eq!(id.minimum_distance().unwrap(), 1);
    }

    #[test]
    fn rank_table_validation() {
        let u = Matroid::uniform(4, 2).unwrap();
        let t = u.rank_table().unwrap();
        assert!(Matroid::from_rank_table(4, t.clone()).is_ok());
        let mut bad = t.clone();
        bad[0b0011] = 3;
        assert!(Matroid::from_rank_table(4, bad).is_err());
        let mut bad = t;
        bad[0] = 1;
        assert!(Matroid::from_rank_table(4, bad).is_err());
    }

    fn random_matroid() -> impl Strategy<Value = Matroid> {
        (1usize..=9).prop_flat_map(|n| {
            prop::collection::vec(0u64..(1u64 << n), 1..=5).prop_map(move |rows| {
                Matroid::from_matrix(BinaryMatrix::new(n, rows).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn cl_cyc_identities(m in random_matroid(), y in any::<u64>()) {
            let y = SubsetMask::from_bits(y).intersection(m.ground_set());
            let cyc = m.cyclic_operator(y);
            let cl = m.closure(y);
            prop_assert_eq!(m.closure(cyc).intersection(y), cyc);
            prop_assert_eq!(m.cyclic_operator(cl).union(y), cl);
            prop_assert_eq!(m.closure(cl), cl);
            prop_assert_eq!(m.cyclic_operator(cyc), cyc);
            prop_assert_eq!(m.is_cyclic(y), m.closure(cyc) == cl);
            prop_assert_eq!(m.is_flat(y), m.cyclic_operator(cl) == cyc);
            prop_assert!(m.is_cyclic_flat(m.cyclic_operator(m.closure(cyc))));
            prop_assert!(m.is_cyclic_flat(m.closure(m.cyclic_operator(cl))));
        }

        #[test]
        fn double_dual_is_identity(m in random_matroid()) {
            let dd = m.dual().dual();
            let d = m.dual();
            let d_fresh = Matroid::from_rank_table(m.n(), d.rank_table().unwrap()).unwrap();
            let dd_fresh = d_fresh.dual();
            for x in m.ground_set().subsets() {
                prop_assert_eq!(dd.rank(x), m.rank(x));
                prop_assert_eq!(dd_fresh.rank(x), m.rank(x));
            }
        }

        #[test]
        fn minor_orders_commute(m in random_matroid(), a in any::<u64>(), b in any::<u64>()) {
            let e = m.ground_set();
            let y = SubsetMask::from_bits(a | b).intersection(e);
            let x = SubsetMask::from_bits(a).intersection(y);
            let direct = m.minor(x, y).unwrap();
            let two_step = m.restrict(y).unwrap().contract(x.compress(y)).unwrap();
            let other = m.contract(x).unwrap().restrict(y.difference(x).compress(e.difference(x))).unwrap();
            for s in direct.ground_set().subsets() {
                prop_assert_eq!(direct.rank(s), two_step.rank(s));
                prop_assert_eq!(direct.rank(s), other.rank(s));
            }
        }

        #[test]
        fn distance_agrees_with_sweep(m in random_matroid()) {
            prop_assume!(m.full_rank() > 0);
            prop_assert_eq!(m.minimum_distance().unwrap(), m.min_distance_sweep());
        }
    }
}
