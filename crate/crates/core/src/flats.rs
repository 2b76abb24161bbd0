//! Flats recovered from the lattice of cyclic flats, counting of corank-2
//! intervals, rank-2 uniform minors and the binarity test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::minors::MinorSpec;
use crate::subset::SubsetMask;
use crate::zlattice::{enumerate_flats, ZLattice};

/// Largest ground set [`find_u4_2_minor`] searches.
pub const MAX_U42_SEARCH: usize = 14;

/// `A^F = {e ∉ A : A + e is a flat}`.
pub fn flat_extension_set(m: &Matroid, a: SubsetMask) -> SubsetMask {
    a.complement(m.n())
        .iter()
        .filter(|&e| m.is_flat(a.with(e)))
        .fold(SubsetMask::EMPTY, SubsetMask::with)
}

/// `A^F` for a flat `A`: the `e` with `ρ(A + e + f) = ρ(A) + 2` for every other `f ∉ A`.
pub fn flat_extension_set_by_rank(m: &Matroid, a: SubsetMask) -> SubsetMask {
    let outside = a.complement(m.n());
    let r = m.rank(a);
    outside
        .iter()
        .filter(|&e| {
            outside
                .without(e)
                .iter()
                .all(|f| m.rank(a.with(e).with(f)) == r + 2)
        })
        .fold(SubsetMask::EMPTY, SubsetMask::with)
}

/// Bounds of a set `A` inside `Z(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatContext {
    pub a: SubsetMask,
    pub a_f: SubsetMask,
    /// Join of the cyclic flats inside `A`.
    pub a_vee: SubsetMask,
    /// Meet of the cyclic flats containing `A`; the top when there are none.
    pub a_wedge: SubsetMask,
    /// Ids of `[cl(cyc A), cyc(cl A)]`.
    pub z_interval: Vec<usize>,
    /// Ids of `[A^∨, A^∧]`.
    pub zprime_interval: Vec<usize>,
}

fn vee(l: &ZLattice, a: SubsetMask) -> usize {
    let below = l
        .elements()
        .iter()
        .filter(|z| z.set.is_subset(a))
        .map(|z| z.id);
    l.join_all(below).expect("Z(M) is a lattice")
}

fn wedge(l: &ZLattice, a: SubsetMask) -> usize {
    let above = l
        .elements()
        .iter()
        .filter(|z| a.is_subset(z.set))
        .map(|z| z.id);
    l.meet_all(above).expect("Z(M) is a lattice")
}

pub fn cyclic_bounds(m: &Matroid, l: &ZLattice, a: SubsetMask) -> FlatContext {
    let a_vee = l.element(vee(l, a)).set;
    let a_wedge = l.element(wedge(l, a)).set;
    let lo = m.closure(m.cyclic_operator(a));
    let hi = m.cyclic_operator(m.closure(a));
    debug_assert!(
        a_vee.is_subset(lo) && lo.is_subset(hi) && hi.is_subset(a_wedge),
        "bound chain broken at {a}"
    );
    FlatContext {
        a,
        a_f: flat_extension_set(m, a),
        a_vee,
        a_wedge,
        z_interval: l.interval(lo, hi),
        zprime_interval: l.interval(a_vee, a_wedge),
    }
}

/// The four lattice-side flatness conditions for one set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlatConditions {
    pub vee_is_top_of_interval: bool,
    pub nullity_bound: bool,
    pub all_between_and_wedge: bool,
    pub all_between_wedge_bound: bool,
}

impl FlatConditions {
    pub fn all_equal(&self) -> bool {
        let v = [
            self.vee_is_top_of_interval,
            self.nullity_bound,
            self.all_between_and_wedge,
            self.all_between_wedge_bound,
        ];
        v.iter().all(|&b| b == v[0])
    }
}

/// `|F ∩ Z| - ρ(Z) < η(F^∨)` for all `Z ∈ [F^∨, F^∧]` other than `F^∨`.
/// Uses only the lattice and the ranks stored in it.
fn nullity_condition(l: &ZLattice, f: SubsetMask) -> bool {
    let v = l.element(vee(l, f));
    if !v.set.is_subset(f) {
        return false;
    }
    let w = l.element(wedge(l, f)).set;
    l.interval(v.set, w)
        .into_iter()
        .filter(|&id| id != v.id)
        .all(|id| {
            let z = l.element(id);
            (f.intersection(z.set).len() as i64) - (z.rank as i64) < v.nullity as i64
        })
}

fn vee_condition(m: &Matroid, l: &ZLattice, b: SubsetMask) -> bool {
    l.element(vee(l, b)).set == m.cyclic_operator(m.closure(b))
}

/// `|B| - ρ(B^∧) < η(B^∨)`, required whenever `B ⊊ B^∧`.
fn wedge_bound(l: &ZLattice, b: SubsetMask) -> bool {
    let w = l.element(wedge(l, b));
    if !b.is_proper_subset(w.set) {
        return true;
    }
    let v = l.element(vee(l, b));
    (b.len() as i64) - (w.rank as i64) < v.nullity as i64
}

/// Evaluates the lattice flatness conditions for `f`. Each should agree with
/// `cl(F) = F`. Sets with `F^∨ ⊄ F` are never flats and get all-false.
pub fn flat_conditions(m: &Matroid, l: &ZLattice, f: SubsetMask) -> FlatConditions {
    let v = l.element(vee(l, f)).set;
    if !v.is_subset(f) {
        return FlatConditions {
            vee_is_top_of_interval: false,
            nullity_bound: false,
            all_between_and_wedge: false,
            all_between_wedge_bound: false,
        };
    }
    let between = || f.difference(v).subsets().map(move |s| s.union(v));
    FlatConditions {
        vee_is_top_of_interval: vee_condition(m, l, f),
        nullity_bound: nullity_condition(l, f),
        all_between_and_wedge: between().all(|b| vee_condition(m, l, b)) && wedge_bound(l, f),
        all_between_wedge_bound: between().all(|b| wedge_bound(l, b)),
    }
}

/// Flatness of `f` decided from `Z(M)` alone.
pub fn is_flat_via_zlattice(l: &ZLattice, f: SubsetMask) -> bool {
    nullity_condition(l, f)
}

/// Members of `Z(M)` with `ρ(1_Z) - 1 = ρ(X) + |F - X|` for a corank-2 flat `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpsilonFamily {
    pub f: SubsetMask,
    pub members: Vec<usize>,
    pub maximal: Vec<usize>,
}

fn check_corank2(m: &Matroid, l: &ZLattice, f: SubsetMask) -> Result<()> {
    let top = l.element(l.top());
    if !m.is_flat(f) {
        return Err(Error::precondition(format!("{f} is not a flat")));
    }
    if !f.is_subset(top.set) {
        return Err(Error::precondition(format!("{f} is not inside 1_Z = {}", top.set)));
    }
    if m.rank(f) + 2 != top.rank {
        return Err(Error::precondition(format!(
            "{f} has rank {}, expected {}",
            m.rank(f),
            top.rank as i64 - 2
        )));
    }
    Ok(())
}

pub fn upsilon(m: &Matroid, l: &ZLattice, f: SubsetMask) -> Result<UpsilonFamily> {
    check_corank2(m, l, f)?;
    let target = l.element(l.top()).rank - 1;
    let members: Vec<usize> = l
        .elements()
        .iter()
        .filter(|x| x.rank + f.difference(x.set).len() == target)
        .map(|x| x.id)
        .collect();
    let maximal: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&a| {
            !members
                .iter()
                .any(|&b| l.element(a).set.is_proper_subset(l.element(b).set))
        })
        .collect();

    let top = l.element(l.top()).set;
    let non_extending = top.difference(f).difference(flat_extension_set(m, f));
    if !non_extending.is_empty() {
        let mut expected: Vec<SubsetMask> = non_extending
            .iter()
            .map(|e| m.cyclic_operator(m.closure(f.with(e))))
            .collect();
        expected.sort();
        expected.dedup();
        let mut got: Vec<SubsetMask> = maximal.iter().map(|&id| l.element(id).set).collect();
        got.sort();
        debug_assert_eq!(got, expected, "maximal members at F = {f}");
    }
    Ok(UpsilonFamily { f, members, maximal })
}

/// `|(F, 1_Z)_F|`, the number of flats strictly between `F` and `1_Z`, as
/// `|1_Z - F| - Σ (|Z - F| - 1)` over the maximal members of `Υ(F)` that are
/// not contained in `F`.
pub fn count_corank2_interval(m: &Matroid, l: &ZLattice, f: SubsetMask) -> Result<usize> {
    let ups = upsilon(m, l, f)?;
    Ok(interval_count(l, &ups))
}

fn interval_count(l: &ZLattice, ups: &UpsilonFamily) -> usize {
    let top = l.element(l.top()).set;
    let f = ups.f;
    let excess: usize = ups
        .maximal
        .iter()
        .map(|&id| l.element(id).set.difference(f).len())
        .filter(|&outside| outside > 0)
        .map(|outside| outside - 1)
        .sum();
    top.difference(f).len() - excess
}

/// Corank-2 flats of `M` inside `1_Z`.
pub fn corank2_flats(m: &Matroid, l: &ZLattice) -> Result<Vec<SubsetMask>> {
    let top = l.element(l.top());
    if top.rank < 2 {
        return Ok(Vec::new());
    }
    Ok(enumerate_flats(m)?
        .into_iter()
        .filter(|&f| f.is_subset(top.set) && m.rank(f) + 2 == top.rank)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Evaluated,
    /// `ρ(1_Z) < 2`: there are no corank-2 flats to inspect.
    RankTooSmall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rank2MinorResult {
    /// Largest `n` with `U_n^2` a minor (meaningful for `n >= 3`); 0 when
    /// `ρ(1_Z) < 2`.
    pub largest: usize,
    pub status: Status,
    /// A corank-2 flat attaining `largest`.
    pub witness: Option<SubsetMask>,
}

pub fn max_rank2_uniform_minor(m: &Matroid, l: &ZLattice) -> Result<Rank2MinorResult> {
    if l.element(l.top()).rank < 2 {
        return Ok(Rank2MinorResult {
            largest: 0,
            status: Status::RankTooSmall,
            witness: None,
        });
    }
    let mut best = (0, None);
    for f in corank2_flats(m, l)? {
        let c = count_corank2_interval(m, l, f)?;
        if c > best.0 {
            best = (c, Some(f));
        }
    }
    Ok(Rank2MinorResult {
        largest: best.0,
        status: Status::Evaluated,
        witness: best.1,
    })
}

/// Largest `n` with `U_n^{n-2}` a minor, computed on the dual.
pub fn max_corank2_uniform_minor(m: &Matroid) -> Result<Rank2MinorResult> {
    let d = m.dual();
    let ld = crate::zlattice::build_zlattice(&d)?;
    let mut r = max_rank2_uniform_minor(&d, &ld)?;
    r.witness = r.witness.map(|f| f.complement(m.n()));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BinaryStatus {
    Evaluated,
    Vacuous,
}

/// Outcome of the lattice binarity test, evaluated from flats and,
/// independently, from cyclic sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryVerdict {
    pub binary: bool,
    pub via_flats: bool,
    pub via_cyclic_sets: bool,
    pub status: BinaryStatus,
    /// A corank-2 flat whose interval count reaches 4.
    pub witness_flat: Option<(SubsetMask, usize)>,
    /// A cyclic set whose dual count reaches 4.
    pub witness_cyclic_set: Option<(SubsetMask, usize)>,
}

/// For a cyclic set `U ⊇ 0_Z` with `η(U) = |0_Z| + 2`, the number of cyclic
/// sets strictly between `0_Z` and `U`: `|U - 0_Z| - Σ (|U - X| - 1)` over the
/// inclusion-minimal `X` with `|X ∩ U| = |0_Z| + 1 + ρ(X)` that do not contain `U`.
pub fn count_corank2_cyclic_interval(l: &ZLattice, u: SubsetMask) -> usize {
    let bottom = l.element(l.bottom()).set;
    let target = bottom.len() + 1;
    let members: Vec<SubsetMask> = l
        .elements()
        .iter()
        .filter(|x| x.set.intersection(u).len() == target + x.rank)
        .map(|x| x.set)
        .collect();
    let excess: usize = members
        .iter()
        .filter(|&&x| !members.iter().any(|&y| y.is_proper_subset(x)))
        .map(|&x| u.difference(x).len())
        .filter(|&inside| inside > 0)
        .map(|inside| inside - 1)
        .sum();
    u.difference(bottom).len() - excess
}

/// Cyclic sets `U ⊇ 0_Z` with `η(U) = |0_Z| + 2`.
pub fn corank2_cyclic_sets(m: &Matroid, l: &ZLattice) -> Result<Vec<SubsetMask>> {
    let bottom = l.element(l.bottom()).set;
    let e = m.ground_set();
    Ok(enumerate_flats(&m.dual())?
        .into_iter()
        .map(|f| e.difference(f))
        .filter(|&u| bottom.is_subset(u) && m.nullity(u) == bottom.len() + 2)
        .collect())
}

pub fn is_binary_via_zlattice(m: &Matroid, l: &ZLattice) -> Result<BinaryVerdict> {
    let status = if l.element(l.top()).rank < 2 {
        BinaryStatus::Vacuous
    } else {
        BinaryStatus::Evaluated
    };
    let mut witness_flat = None;
    for f in corank2_flats(m, l)? {
        let c = count_corank2_interval(m, l, f)?;
        if c >= 4 {
            witness_flat = Some((f, c));
            break;
        }
    }
    let mut witness_cyclic_set = None;
    for u in corank2_cyclic_sets(m, l)? {
        let c = count_corank2_cyclic_interval(l, u);
        if c >= 4 {
            witness_cyclic_set = Some((u, c));
            break;
        }
    }
    let via_flats = witness_flat.is_none();
    let via_cyclic_sets = witness_cyclic_set.is_none();
    debug_assert_eq!(via_flats, via_cyclic_sets, "binarity conditions disagree");
    Ok(BinaryVerdict {
        binary: via_flats && via_cyclic_sets,
        via_flats,
        via_cyclic_sets,
        status,
        witness_flat,
        witness_cyclic_set,
    })
}

/// Searches for `M|Y/X ≅ U_4^2` with `X` a corank-2 flat and `Y - X` four
/// elements spanning over `X`, checking ranks directly.
pub fn find_u4_2_minor(m: &Matroid) -> Result<Option<MinorSpec>> {
    if m.n() > MAX_U42_SEARCH {
        return Err(Error::BoundExceeded {
            what: "ground set size for the U(4,2) search",
            limit: MAX_U42_SEARCH,
        });
    }
    let k = m.full_rank();
    if k < 2 {
        return Ok(None);
    }
    let e = m.ground_set();
    for a in enumerate_flats(m)?.into_iter().filter(|&a| m.rank(a) + 2 == k) {
        for w in e.difference(a).subsets_of_size(4) {
            let spanning = m.rank(a.union(w)) == k;
            let pairs = w.subsets_of_size(2).all(|p| m.rank(a.union(p)) == k);
            if spanning && pairs {
                return Ok(Some(MinorSpec { x: a, y: a.union(w) }));
            }
        }
    }
    Ok(None)
}
