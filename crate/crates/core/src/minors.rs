//! Cyclic flats of minors and uniformity criteria.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::SubsetMask;
use crate::zlattice::ZLattice;

/// The pair `(X, Y)` describing `M|Y/X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinorSpec {
    pub x: SubsetMask,
    pub y: SubsetMask,
}

impl MinorSpec {
    pub fn new(x: SubsetMask, y: SubsetMask) -> Result<Self> {
        if !x.is_subset(y) {
            return Err(Error::precondition(format!("{x} is not a subset of {y}")));
        }
        Ok(MinorSpec { x, y })
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M|{}/{}", self.y, self.x)
    }
}

/// Which criterion produced a [`UniformVerdict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    CoverEdge,
    Restriction,
    Contraction,
    Combined,
    IndependentSupport,
    SpanningContraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformVerdict {
    pub is_uniform: bool,
    /// Size of the minor's ground set.
    pub n: usize,
    /// Rank of the minor.
    pub k: usize,
    pub criterion: Criterion,
    /// 1-based index of the first failing condition.
    pub failed_condition: Option<u8>,
    /// A cyclic flat of `M` witnessing the failure, when there is one.
    pub witness: Option<SubsetMask>,
}

impl UniformVerdict {
    fn pass(n: usize, k: usize, criterion: Criterion) -> Self {
        UniformVerdict {
            is_uniform: true,
            n,
            k,
            criterion,
            failed_condition: None,
            witness: None,
        }
    }

    fn fail(n: usize, k: usize, criterion: Criterion, cond: u8, witness: Option<SubsetMask>) -> Self {
        UniformVerdict {
            is_uniform: false,
            n,
            k,
            criterion,
            failed_condition: Some(cond),
            witness,
        }
    }
}

fn uniform_directly(m: &Matroid, x: SubsetMask, y: SubsetMask) -> bool {
    crate::oracle::uniform_rank(&m.minor(x, y).expect("X ⊆ Y")).is_some()
}

/// `Z(M|Y/X)` for `X` cyclic and `Y` a flat, read off the interval `[X, Y]`
/// of `Z(M)`. Sets are relabelled onto `0..|Y - X|`.
pub fn zlattice_interval_minor(
    m: &Matroid,
    l: &ZLattice,
    x: SubsetMask,
    y: SubsetMask,
) -> Result<ZLattice> {
    if !x.is_subset(y) {
        return Err(Error::precondition(format!("{x} is not a subset of {y}")));
    }
    if !m.is_cyclic(x) {
        return Err(Error::precondition(format!("{x} is not cyclic")));
    }
    if !m.is_flat(y) {
        return Err(Error::precondition(format!("{y} is not a flat")));
    }
    let kept = y.difference(x);
    let rx = m.rank(x);
    let members = l
        .interval(x, y)
        .into_iter()
        .map(|id| {
            let z = l.element(id);
            (z.set.difference(x).compress(kept), z.rank - rx)
        })
        .collect();
    ZLattice::from_elements(kept.len(), members)
}

/// `{cyc(Z ∩ Y) : Z ∈ Z(M)}`.
pub fn zmap_restriction(m: &Matroid, l: &ZLattice, y: SubsetMask) -> BTreeSet<SubsetMask> {
    l.sets()
        .map(|z| m.cyclic_operator(z.intersection(y)))
        .collect()
}

/// `{cl(X ∪ Z) - X : Z ∈ Z(M)}`.
pub fn zmap_contraction(m: &Matroid, l: &ZLattice, x: SubsetMask) -> BTreeSet<SubsetMask> {
    l.sets()
        .map(|z| m.closure(x.union(z)).difference(x))
        .collect()
}

/// The two images of `Z(M)` describing `Z(M|Y/X)`:
/// `cl(X ∪ cyc(Z ∩ Y)) ∩ (Y - X)` and `cyc(cl(X ∪ Z) ∩ Y) - X`.
pub fn zmap_minor(
    m: &Matroid,
    l: &ZLattice,
    spec: MinorSpec,
) -> (BTreeSet<SubsetMask>, BTreeSet<SubsetMask>) {
    let MinorSpec { x, y } = spec;
    let first = l
        .sets()
        .map(|z| {
            m.closure(x.union(m.cyclic_operator(z.intersection(y))))
                .intersection(y.difference(x))
        })
        .collect();
    let second = l
        .sets()
        .map(|z| m.cyclic_operator(m.closure(x.union(z)).intersection(y)).difference(x))
        .collect();
    (first, second)
}

/// For a cover `child ⋖ parent`, `M|parent/child` is `U_n^k` with
/// `n = |parent| - |child|` and `k` the rank jump.
pub fn uniform_minor_from_edge(
    m: &Matroid,
    l: &ZLattice,
    child: usize,
    parent: usize,
) -> Result<UniformVerdict> {
    let edge = l
        .edge(child, parent)
        .ok_or_else(|| Error::precondition("not a cover edge"))?;
    let (x, y) = (l.element(child).set, l.element(parent).set);
    let verdict = UniformVerdict::pass(y.len() - x.len(), edge.d_rho, Criterion::CoverEdge);
    debug_assert!(uniform_directly(m, x, y));
    Ok(verdict)
}

/// Uniformity of `M|Y` for a spanning `Y`.
pub fn is_restriction_uniform(m: &Matroid, l: &ZLattice, y: SubsetMask) -> Result<UniformVerdict> {
    let k = m.full_rank();
    if m.rank(y) != k {
        return Err(Error::precondition(format!(
            "{y} is not spanning; restrict to its closure first"
        )));
    }
    let n = y.len();
    let verdict = if y.len() == k {
        UniformVerdict::pass(n, k, Criterion::Restriction)
    } else if !m.is_cyclic(y) {
        UniformVerdict::fail(n, k, Criterion::Restriction, 1, None)
    } else {
        match l
            .elements()
            .iter()
            .find(|z| z.rank < k && !m.is_independent(z.set.intersection(y)))
        {
            Some(z) => UniformVerdict::fail(n, k, Criterion::Restriction, 2, Some(z.set)),
            None => UniformVerdict::pass(n, k, Criterion::Restriction),
        }
    };
    debug_assert_eq!(verdict.is_uniform, uniform_directly(m, SubsetMask::EMPTY, y));
    Ok(verdict)
}

/// Uniformity of `M/X` for an independent `X`. A basis gives `U_{n-k}^0`.
pub fn is_contraction_uniform(m: &Matroid, l: &ZLattice, x: SubsetMask) -> Result<UniformVerdict> {
    if !m.is_independent(x) {
        return Err(Error::precondition(format!(
            "{x} is dependent; contract its cyclic part first"
        )));
    }
    let e = m.ground_set();
    let n = m.n() - x.len();
    let k = m.full_rank() - x.len();
    let verdict = if k == 0 {
        UniformVerdict::pass(n, k, Criterion::Contraction)
    } else if !m.is_flat(x) {
        UniformVerdict::fail(n, k, Criterion::Contraction, 1, None)
    } else {
        let bottom = l.bottom();
        match l
            .elements()
            .iter()
            .filter(|z| z.id != bottom)
            .find(|z| m.closure(x.union(z.set)) != e)
        {
            Some(z) => UniformVerdict::fail(n, k, Criterion::Contraction, 2, Some(z.set)),
            None => UniformVerdict::pass(n, k, Criterion::Contraction),
        }
    };
    debug_assert_eq!(verdict.is_uniform, uniform_directly(m, x, e));
    Ok(verdict)
}

/// Uniformity of an arbitrary minor `M|Y/X`.
///
/// The problem is first moved to `M' = M|cl(Y)/cyc(X)`, where `Y` becomes
/// spanning and `X` independent, and then routed to the restriction,
/// contraction or combined criterion.
pub fn is_minor_uniform(m: &Matroid, l: &ZLattice, spec: MinorSpec) -> Result<UniformVerdict> {
    let MinorSpec { x, y } = spec;
    if !y.is_subset(m.ground_set()) || !x.is_subset(y) {
        return Err(Error::precondition(format!("invalid minor {spec}")));
    }
    let cx = m.cyclic_operator(x);
    let cly = m.closure(y);
    let kept = cly.difference(cx);
    let mp = m.minor(cx, cly)?;
    let lp = zlattice_interval_minor(m, l, cx, cly)?;
    let xp = x.difference(cx).compress(kept);
    let yp = y.difference(cx).compress(kept);
    let lift = |w: Option<SubsetMask>| w.map(|s| s.expand(kept).union(cx));

    let n = y.len() - x.len();
    let k = m.rank(y) - m.rank(x);
    let mut verdict = if xp.is_empty() {
        is_restriction_uniform(&mp, &lp, yp)?
    } else if yp == mp.ground_set() {
        is_contraction_uniform(&mp, &lp, xp)?
    } else if mp.is_independent(yp) {
        UniformVerdict::pass(n, k, Criterion::IndependentSupport)
    } else if mp.rank(xp) == mp.full_rank() {
        UniformVerdict::pass(n, k, Criterion::SpanningContraction)
    } else {
        combined_criterion(&mp, &lp, xp, yp)
    };
    verdict.n = n;
    verdict.k = k;
    verdict.witness = lift(verdict.witness);
    debug_assert_eq!(verdict.is_uniform, uniform_directly(m, x, y));
    Ok(verdict)
}

/// Both forms of the combined criterion for a dependent spanning `Y` and an
/// independent, non-spanning `X`. The forms must agree.
fn combined_criterion(m: &Matroid, l: &ZLattice, x: SubsetMask, y: SubsetMask) -> UniformVerdict {
    let e = m.ground_set();
    let n = y.len() - x.len();
    let k = m.full_rank() - m.rank(x);

    let first = if m.closure(x).intersection(y) != x {
        Err((1, None))
    } else if !y.difference(x).is_subset(m.cyclic_operator(y)) {
        Err((2, None))
    } else {
        match l.sets().find(|&z| {
            !m.is_independent(z.intersection(y))
                && m.closure(x.union(m.cyclic_operator(z.intersection(y)))) != e
        }) {
            Some(z) => Err((3, Some(z))),
            None => Ok(()),
        }
    };
    let second = m.closure(x).intersection(y) == x
        && y.difference(x).is_subset(m.cyclic_operator(y))
        && l.sets().all(|z| {
            let c = m.closure(x.union(z));
            c == e || m.is_independent(c.intersection(y))
        });
    debug_assert_eq!(first.is_ok(), second, "combined criterion forms disagree");

    match first {
        Ok(()) => UniformVerdict::pass(n, k, Criterion::Combined),
        Err((cond, w)) => UniformVerdict::fail(n, k, Criterion::Combined, cond, w),
    }
}

/// Second form of the combined criterion, exposed for testing.
pub fn combined_criterion_second_form(
    m: &Matroid,
    l: &ZLattice,
    x: SubsetMask,
    y: SubsetMask,
) -> bool {
    let e = m.ground_set();
    m.closure(x).intersection(y) == x
        && y.difference(x).is_subset(m.cyclic_operator(y))
        && l.sets().all(|z| {
            let c = m.closure(x.union(z));
            c == e || m.is_independent(c.intersection(y))
        })
}
