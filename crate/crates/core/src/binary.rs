//! Structure of the lattice of cyclic flats of binary matroids: nullity and
//! rank relations across rank-2 intervals, the height-3 classification,
//! blunt cyclic flats, residual sets, the Griesmer chain and the
//! correspondence between light codewords and coatoms.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::iso::is_isomorphic;
use crate::matroid::Matroid;
use crate::subset::SubsetMask;
use crate::zlattice::{build_zlattice, ZLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationCase {
    NoneBetween,
    OneBetween,
    /// Two in between, and they span the whole interval (union is the top,
    /// or for the dual form the intersection is the bottom).
    TwoCovering,
    /// Two in between with elements left over.
    TwoWithGap,
    ThreeBetween,
}

/// One evaluated relation between cyclic flats `Z1 ⊂ Z2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullityRelationReport {
    pub z1: usize,
    pub z2: usize,
    pub upsilon_between: Vec<usize>,
    pub case: RelationCase,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

fn between(l: &ZLattice, z1: usize, z2: usize) -> Vec<usize> {
    l.parents(z1)
        .iter()
        .copied()
        .filter(|p| l.children(z2).contains(p))
        .collect()
}

fn too_many(l: &ZLattice, z1: usize, z2: usize, count: usize) -> Error {
    Error::precondition(format!(
        "{count} cyclic flats strictly between {} and {}; the matroid is not binary",
        l.element(z1).set,
        l.element(z2).set
    ))
}

/// Nullity of `Z2` from the cyclic flats between `Z1` and `Z2`, where
/// `ρ(Z2) - ρ(Z1) = 2`.
fn rank_gap_relation(l: &ZLattice, z1: usize, z2: usize) -> Result<NullityRelationReport> {
    let ups = between(l, z1, z2);
    let eta = |id: usize| l.element(id).nullity as i64;
    let sum: i64 = ups.iter().map(|&id| eta(id)).sum();
    let (e1, e2) = (eta(z1), eta(z2));
    let union = ups
        .iter()
        .fold(SubsetMask::EMPTY, |acc, &id| acc.union(l.element(id).set));
    let (case, rhs) = match ups.len() {
        0 => (RelationCase::NoneBetween, e1 + 1),
        1 => (RelationCase::OneBetween, sum + 1),
        2 if union == l.element(z2).set => (RelationCase::TwoCovering, sum - e1),
        2 => (RelationCase::TwoWithGap, 1 + sum - e1),
        3 => (RelationCase::ThreeBetween, 1 + sum - 2 * e1),
        c => return Err(too_many(l, z1, z2, c)),
    };
    Ok(NullityRelationReport {
        z1,
        z2,
        upsilon_between: ups,
        case,
        lhs: e2,
        rhs,
        holds: e2 == rhs,
    })
}

/// Ranks of the cyclic flats between `Z1` and `Z2`, where `η(Z2) - η(Z1) = 2`.
fn nullity_gap_relation(l: &ZLattice, z1: usize, z2: usize) -> Result<NullityRelationReport> {
    let ups = between(l, z1, z2);
    let rho = |id: usize| l.element(id).rank as i64;
    let sum: i64 = ups.iter().map(|&id| rho(id)).sum();
    let (r1, r2) = (rho(z1), rho(z2));
    let inter = ups
        .iter()
        .fold(l.element(z2).set, |acc, &id| acc.intersection(l.element(id).set));
    let (case, lhs, rhs) = match ups.len() {
        0 => (RelationCase::NoneBetween, r2, r1 + 1),
        1 => (RelationCase::OneBetween, sum, r1 + 1),
        2 if inter == l.element(z1).set => (RelationCase::TwoCovering, sum, r1 + r2),
        2 => (RelationCase::TwoWithGap, sum, 1 + r1 + r2),
        3 => (RelationCase::ThreeBetween, sum, 1 + r1 + 2 * r2),
        c => return Err(too_many(l, z1, z2, c)),
    };
    Ok(NullityRelationReport {
        z1,
        z2,
        upsilon_between: ups,
        case,
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// The relation between `η(E)` and the atoms of a rank-2 non-degenerate
/// binary matroid.
pub fn check_rank2_relations(m: &Matroid) -> Result<NullityRelationReport> {
    if m.full_rank() != 2 {
        return Err(Error::precondition(format!("rank is {}, expected 2", m.full_rank())));
    }
    if !m.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let l = build_zlattice(m)?;
    rank_gap_relation(&l, l.bottom(), l.top())
}

fn comparable_pairs(l: &ZLattice) -> impl Iterator<Item = (usize, usize)> + '_ {
    let els = l.elements();
    els.iter().flat_map(move |a| {
        els.iter()
            .filter(move |b| a.set.is_proper_subset(b.set))
            .map(move |b| (a.id, b.id))
    })
}

/// Every comparable pair with rank difference 2.
pub fn check_rankdiff2_relations(l: &ZLattice) -> Result<Vec<NullityRelationReport>> {
    comparable_pairs(l)
        .filter(|&(a, b)| l.element(b).rank == l.element(a).rank + 2)
        .map(|(a, b)| rank_gap_relation(l, a, b))
        .collect()
}

/// Every comparable pair with nullity difference 2.
pub fn check_null2_relations(l: &ZLattice) -> Result<Vec<NullityRelationReport>> {
    comparable_pairs(l)
        .filter(|&(a, b)| l.element(b).nullity == l.element(a).nullity + 2)
        .map(|(a, b)| nullity_gap_relation(l, a, b))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "class")]
pub enum Height3Class {
    /// `η(E) = 2`.
    NullityTwo,
    Isomorphic {
        fixture: Fixture,
        /// `witness[i]` is the image of element `i` in the fixture.
        witness: Vec<usize>,
    },
}

const HEIGHT3_REFERENCES: [Fixture; 4] = [
    Fixture::Code633,
    Fixture::Simplex734,
    Fixture::Hamming743,
    Fixture::ReedMuller844,
];

/// Places a simple binary matroid without isthmuses whose lattice of cyclic
/// flats has height 3 into one of the five possible classes.
pub fn classify_height3(m: &Matroid) -> Result<Height3Class> {
    if !m.is_simple() {
        return Err(Error::precondition("matroid is not simple"));
    }
    if !m.isthmuses().is_empty() {
        return Err(Error::precondition("matroid has isthmuses"));
    }
    let l = build_zlattice(m)?;
    if l.height() != 3 {
        return Err(Error::precondition(format!("lattice height is {}, expected 3", l.height())));
    }
    if m.nullity(m.ground_set()) == 2 {
        return Ok(Height3Class::NullityTwo);
    }
    for fixture in HEIGHT3_REFERENCES {
        let r = fixture.matroid();
        if r.n() != m.n() || r.full_rank() != m.full_rank() {
            continue;
        }
        if let Some(witness) = is_isomorphic(m, &r)? {
            return Ok(Height3Class::Isomorphic { fixture, witness });
        }
    }
    Err(Error::ClassificationViolated(format!(
        "height-3 matroid on {} elements of rank {} matches no known class",
        m.n(),
        m.full_rank()
    )))
}

/// Whether every cover below a cyclic flat drops the rank by exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BluntFlag {
    pub id: usize,
    pub blunt: bool,
    /// A covered cyclic flat whose rank is at least 2 lower.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl PropertyCheck {
    fn new(name: &'static str) -> Self {
        PropertyCheck {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BluntReport {
    pub flags: Vec<BluntFlag>,
    pub checks: Vec<PropertyCheck>,
}

impl BluntReport {
    pub fn flag(&self, id: usize) -> &BluntFlag {
        &self.flags[id]
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(PropertyCheck::holds)
    }
}

pub fn blunt_flag(l: &ZLattice, id: usize) -> BluntFlag {
    let r = l.element(id).rank;
    let witness = l
        .children(id)
        .iter()
        .copied()
        .find(|&c| l.element(c).rank + 1 < r);
    BluntFlag {
        id,
        blunt: witness.is_none(),
        witness,
    }
}

/// Largest nullity of a coatom, the nullity of `Z^d`.
fn max_coatom_nullity(l: &ZLattice) -> Option<usize> {
    l.coatoms().iter().map(|&c| l.element(c).nullity).max()
}

/// Coatoms attaining the largest nullity, lexicographically least first.
fn max_nullity_coatoms(l: &ZLattice) -> Vec<usize> {
    let Some(best) = max_coatom_nullity(l) else {
        return Vec::new();
    };
    let mut ids: Vec<usize> = l
        .coatoms()
        .into_iter()
        .filter(|&c| l.element(c).nullity == best)
        .collect();
    ids.sort_by(|&a, &b| l.element(a).set.lex_cmp(l.element(b).set));
    ids
}

/// Flags every cyclic flat and, for non-degenerate matroids, checks the
/// distance bounds tied to blunt coatoms.
pub fn blunt_flags(m: &Matroid, l: &ZLattice) -> Result<BluntReport> {
    let flags: Vec<BluntFlag> = (0..l.len()).map(|id| blunt_flag(l, id)).collect();
    let mut checks = Vec::new();
    if m.is_nondegenerate() && m.full_rank() > 0 {
        let d = m.minimum_distance()?;
        let top = l.top();

        let mut nulledge = PropertyCheck::new("top-covers-are-nullity-edges");
        if d >= 3 {
            for &c in l.children(top) {
                let e = l.edge(c, top).expect("cover edge");
                nulledge.record(e.d_eta >= 2, || {
                    format!("cover {} of E has nullity step {}", l.element(c).set, e.d_eta)
                });
            }
        }
        checks.push(nulledge);

        let mut sharp = PropertyCheck::new("non-blunt-max-coatom-bounds-distance");
        for zd in max_nullity_coatoms(l) {
            if !flags[zd].blunt {
                sharp.record(d <= 4, || {
                    format!("coatom {} is not blunt but d = {d}", l.element(zd).set)
                });
            }
        }
        checks.push(sharp);

        let mut gap = PropertyCheck::new("non-blunt-coatom-bounds-distance");
        if d >= 3 {
            let size_d = m.n() - d;
            for c in l.coatoms() {
                let zc = l.element(c);
                if !flags[c].blunt && zc.set.len() < size_d {
                    let bound = 2 * (size_d - zc.set.len() + 1);
                    gap.record(d <= bound, || {
                        format!("coatom {} gives bound {bound} but d = {d}", zc.set)
                    });
                }
            }
        }
        checks.push(gap);
    }
    Ok(BluntReport { flags, checks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceCase {
    /// Three coatoms above `Z_1^c`.
    Three,
    /// Two coatoms above `Z_1^c` leaving elements of `E` uncovered.
    TwoWithGap,
    /// Two coatoms above `Z_1^c` covering `E`.
    TwoCovering,
    /// `M|Z^c` has no proper nonempty cyclic flat to serve as `Z_1^c`.
    Inapplicable,
}

/// Distance of `M|Z^c` for a blunt coatom `Z^c` of rank `k - 1`, compared
/// against the value predicted by the coatoms above `Z_1^c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedDistanceReport {
    pub coatom: usize,
    pub z1c: Option<usize>,
    pub restricted_distance: usize,
    pub coatoms_above: Vec<usize>,
    pub case: DistanceCase,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    /// `2 d_{M|Z^c} >= d - (η(Z^d) - η(Z^c))`.
    pub lower_bound_holds: bool,
}

/// Restriction to `a` together with the lattice of the restriction.
fn restricted(m: &Matroid, a: SubsetMask) -> Result<(Matroid, ZLattice)> {
    let r = m.restrict(a)?;
    let l = build_zlattice(&r)?;
    Ok((r, l))
}

pub fn dmzc_relation_check(m: &Matroid, l: &ZLattice) -> Result<Vec<RestrictedDistanceReport>> {
    if !m.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let k = m.full_rank();
    if k == 0 {
        return Err(Error::RankZero);
    }
    let d = m.minimum_distance()?;
    if d < 3 {
        return Err(Error::precondition(format!("minimum distance {d} is below 3")));
    }
    let eta_d = max_coatom_nullity(l).expect("rank > 0 has a coatom") as i64;
    let e = m.ground_set();
    let d = d as i64;
    let mut out = Vec::new();
    for c in l.coatoms() {
        let zc = l.element(c);
        if zc.rank + 1 != k || !blunt_flag(l, c).blunt {
            continue;
        }
        let d_c = restricted(m, zc.set)?.0.minimum_distance()? as i64;
        let eta_c = zc.nullity as i64;
        let lower_bound_holds = 2 * d_c >= d - (eta_d - eta_c);
        // Maximal nullity is attained on a cover, which has rank k - 2.
        let z1c = l
            .children(c)
            .iter()
            .copied()
            .filter(|&x| x != l.bottom())
            .max_by(|&a, &b| {
                let (za, zb) = (l.element(a), l.element(b));
                za.nullity.cmp(&zb.nullity).then(zb.set.lex_cmp(za.set))
            });
        let z1c = match z1c {
            Some(x) => {
                debug_assert_eq!(d_c, eta_c + 1 - l.element(x).nullity as i64);
                x
            }
            None => {
                out.push(RestrictedDistanceReport {
                    coatom: c,
                    z1c: None,
                    restricted_distance: d_c as usize,
                    coatoms_above: Vec::new(),
                    case: DistanceCase::Inapplicable,
                    lhs: 0,
                    rhs: 0,
                    holds: true,
                    lower_bound_holds,
                });
                continue;
            }
        };
        let above: Vec<usize> = l
            .parents(z1c)
            .iter()
            .copied()
            .filter(|&p| p != l.top())
            .collect();
        let others: Vec<usize> = above.iter().copied().filter(|&p| p != c).collect();
        let eta = |id: usize| l.element(id).nullity as i64;
        let (case, lhs, rhs) = match others.as_slice() {
            [z1, z2] => (
                DistanceCase::Three,
                2 * d_c,
                d + eta_d + eta_c - (eta(*z1) + eta(*z2)),
            ),
            [z1] if zc.set.union(l.element(*z1).set) != e => {
                (DistanceCase::TwoWithGap, d_c, d - 1 + eta_d - eta(*z1))
            }
            [z1] => (DistanceCase::TwoCovering, d_c, d + eta_d - eta(*z1)),
            _ => {
                return Err(Error::ClassificationViolated(format!(
                    "{} coatoms above {}; at least two and at most three are possible",
                    above.len(),
                    l.element(z1c).set
                )))
            }
        };
        out.push(RestrictedDistanceReport {
            coatom: c,
            z1c: Some(z1c),
            restricted_distance: d_c as usize,
            coatoms_above: above,
            case,
            lhs,
            rhs,
            holds: lhs == rhs,
            lower_bound_holds,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidualCase {
    /// A coatom of maximal nullity and rank `k - 1`.
    MaxNullityCoatom,
    /// A maximal-nullity coatom of lower rank, padded with independent elements.
    Augmented,
    /// The complement of an isthmus.
    Hyperplane,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualResult {
    pub a: SubsetMask,
    pub size: usize,
    pub rank: usize,
    /// Minimum distance of `M|A`; absent when `M|A` has rank 0.
    pub distance: Option<usize>,
    pub case: ResidualCase,
    /// `|A| = n - d`, `ρ(A) = k - 1` and `2 d' >= d`, checked directly.
    pub verified: bool,
}

/// A set `A` with `M|A` of parameters `(n - d, k - 1, d')`, `d' >= ⌈d/2⌉`.
pub fn residual_set(m: &Matroid) -> Result<ResidualResult> {
    let k = m.full_rank();
    if k == 0 {
        return Err(Error::RankZero);
    }
    let n = m.n();
    let d = m.minimum_distance()?;
    let isthmuses = m.isthmuses();
    let (a, case) = if let Some(e) = isthmuses.first() {
        (m.ground_set().without(e), ResidualCase::Hyperplane)
    } else {
        let l = build_zlattice(m)?;
        let candidates = max_nullity_coatoms(&l);
        if let Some(&zd) = candidates.iter().find(|&&z| l.element(z).rank + 1 == k) {
            (l.element(zd).set, ResidualCase::MaxNullityCoatom)
        } else {
            let z = l.element(candidates[0]);
            let pad = k - z.rank - 1;
            let b = m.ground_set().difference(z.set).iter().take(pad);
            (b.fold(z.set, SubsetMask::with), ResidualCase::Augmented)
        }
    };
    let rank = m.rank(a);
    let distance = if rank > 0 {
        Some(m.restrict(a)?.minimum_distance()?)
    } else {
        None
    };
    let verified =
        a.len() + d == n && rank + 1 == k && distance.is_none_or(|dp| 2 * dp >= d);
    Ok(ResidualResult {
        a,
        size: a.len(),
        rank,
        distance,
        case,
        verified,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GriesmerCheck {
    pub bound: usize,
    pub slack: i64,
}

/// `Σ_{i<k} ⌈d / 2^i⌉` and `n` minus that sum.
pub fn griesmer_check(n: usize, k: usize, d: usize) -> Result<GriesmerCheck> {
    if k == 0 || d == 0 {
        return Err(Error::precondition("Griesmer bound needs k >= 1 and d >= 1"));
    }
    let bound: usize = (0..k)
        .map(|i| if i >= usize::BITS as usize { 1 } else { d.div_ceil(1 << i) })
        .sum();
    Ok(GriesmerCheck {
        bound,
        slack: n as i64 - bound as i64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLevel {
    pub set: SubsetMask,
    pub size: usize,
    pub rank: usize,
    pub distance: usize,
}

/// Iterated residual sets from `E` down to rank 1.
pub fn griesmer_chain(m: &Matroid) -> Result<Vec<ChainLevel>> {
    let k = m.full_rank();
    if k == 0 {
        return Err(Error::RankZero);
    }
    let mut current = m.ground_set();
    let mut sub = m.clone();
    let mut levels = vec![ChainLevel {
        set: current,
        size: current.len(),
        rank: k,
        distance: m.minimum_distance()?,
    }];
    while sub.full_rank() > 1 {
        let r = residual_set(&sub)?;
        current = r.a.expand(current);
        sub = m.restrict(current)?;
        levels.push(ChainLevel {
            set: current,
            size: r.size,
            rank: r.rank,
            distance: r.distance.expect("rank stays positive"),
        });
    }
    Ok(levels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodewordCoatom {
    pub codeword: SubsetMask,
    pub weight: usize,
    pub coatom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodewordCoatomMap {
    pub weight_limit: usize,
    pub size_threshold: usize,
    pub pairs: Vec<CodewordCoatom>,
    /// Coatoms with more than `size_threshold` elements.
    pub qualifying_coatoms: Vec<usize>,
    pub bijective: bool,
}

/// Pairs every codeword of weight below `2d - 2` with the coatom
/// `E - supp(c)`, and checks that this hits each coatom of size above
/// `n - 2d + 2` exactly once.
pub fn coatom_codeword_map(m: &Matroid, l: &ZLattice) -> Result<CodewordCoatomMap> {
    let g = m
        .matrix()
        .ok_or_else(|| Error::precondition("codewords need a matrix-backed matroid"))?;
    if !m.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let d = m.minimum_distance()?;
    if d < 3 {
        return Err(Error::precondition(format!("minimum distance {d} is below 3")));
    }
    let n = m.n();
    let e = m.ground_set();
    let weight_limit = 2 * d - 2;
    let size_threshold = (n + 2).saturating_sub(2 * d);
    let top = l.top();
    let mut pairs = Vec::new();
    let mut bijective = true;
    for c in g.enumerate_codewords()? {
        if c.weight == 0 || c.weight >= weight_limit {
            continue;
        }
        match l.id_of(e.difference(c.mask)) {
            Some(z) if l.parents(z) == [top] => pairs.push(CodewordCoatom {
                codeword: c.mask,
                weight: c.weight,
                coatom: z,
            }),
            _ => bijective = false,
        }
    }
    let mut qualifying_coatoms: Vec<usize> = l
        .coatoms()
        .into_iter()
        .filter(|&z| l.element(z).set.len() > size_threshold)
        .collect();
    qualifying_coatoms.sort_unstable();
    let mut images: Vec<usize> = pairs.iter().map(|p| p.coatom).collect();
    images.sort_unstable();
    bijective &= images == qualifying_coatoms;
    Ok(CodewordCoatomMap {
        weight_limit,
        size_threshold,
        pairs,
        qualifying_coatoms,
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::parse_matrix;

    fn s(ix: &[usize]) -> SubsetMask {
        SubsetMask::from_one_based(ix.iter().copied())
    }

    fn mat(text: &str) -> Matroid {
        Matroid::from_matrix(parse_matrix(text).unwrap())
    }

    #[test]
    fn rank2_cases() {
        let r = check_rank2_relations(&mat("1011\n0111")).unwrap();
        assert_eq!((r.case, r.lhs, r.rhs), (RelationCase::OneBetween, 2, 2));
        let r = check_rank2_relations(&mat("101\n011")).unwrap();
        assert_eq!((r.case, r.lhs), (RelationCase::NoneBetween, 1));
        let r = check_rank2_relations(&mat("110011\n001111")).unwrap();
        assert_eq!((r.case, r.lhs, r.rhs), (RelationCase::ThreeBetween, 4, 4));
        let r = check_rank2_relations(&mat("11000\n00111")).unwrap();
        assert_eq!(r.case, RelationCase::TwoCovering);
        assert!(r.holds);
        let r = check_rank2_relations(&mat("11001\n00111")).unwrap();
        assert_eq!(r.case, RelationCase::TwoWithGap);
        assert!(r.holds);
        assert!(check_rank2_relations(&Fixture::Code633.matroid()).is_err());
    }

    #[test]
    fn rank_gap_relations_on_fixtures() {
        let m = Fixture::Example1.matroid();
        let l = build_zlattice(&m).unwrap();
        let reports = check_rankdiff2_relations(&l).unwrap();
        let r = reports
            .iter()
            .find(|r| r.z1 == l.bottom() && l.element(r.z2).set == s(&[3, 4, 5, 6]))
            .unwrap();
        assert_eq!(r.upsilon_between, vec![l.id_of(s(&[5, 6])).unwrap()]);
        assert_eq!((r.case, r.lhs, r.rhs), (RelationCase::OneBetween, 2, 2));
        for f in Fixture::ALL {
            let l = build_zlattice(&f.matroid()).unwrap();
            assert!(check_rankdiff2_relations(&l).unwrap().iter().all(|r| r.holds));
            assert!(check_null2_relations(&l).unwrap().iter().all(|r| r.holds));
        }
    }

    #[test]
    fn nullity_gap_with_three_between() {
        // Dual of three parallel pairs in rank 2.
        let m = mat("110011\n001111").dual();
        let l = build_zlattice(&m).unwrap();
        let r = nullity_gap_relation(&l, l.bottom(), l.top()).unwrap();
        assert_eq!(r.case, RelationCase::ThreeBetween);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn height3_classes() {
        let cases = [
            (Fixture::Code633, Fixture::Code633),
            (Fixture::ReedMuller844, Fixture::ReedMuller844),
            (Fixture::Simplex734, Fixture::Simplex734),
            (Fixture::Hamming743, Fixture::Hamming743),
        ];
        for (input, expected) in cases {
            let m = input.matroid();
            match classify_height3(&m).unwrap() {
                Height3Class::Isomorphic { fixture, witness } => {
                    assert_eq!(fixture, expected);
                    let r = fixture.matroid();
                    for x in m.ground_set().subsets() {
                        let img = SubsetMask::from_indices(x.iter().map(|i| witness[i]));
                        assert_eq!(r.rank(img), m.rank(x));
                    }
                }
                other => panic!("{other:?}"),
            }
        }
        // Two triangles sharing a point.
        let m = mat("10011\n01010\n00101");
        assert_eq!(classify_height3(&m).unwrap(), Height3Class::NullityTwo);
        assert!(classify_height3(&Matroid::uniform(4, 3).unwrap()).is_err());
        assert_eq!(
            classify_height3(&mat("10110\n01110\n00001")).ok(),
            None,
            "isthmus present"
        );
    }

    #[test]
    fn blunt_examples() {
        let m = Fixture::Example1.matroid();
        let l = build_zlattice(&m).unwrap();
        let r = blunt_flags(&m, &l).unwrap();
        assert!(r.flag(l.top()).blunt);
        assert!(r.holds());

        let m = Fixture::Code1145.matroid();
        let l = build_zlattice(&m).unwrap();
        let r = blunt_flags(&m, &l).unwrap();
        let c = l.id_of(s(&[1, 2, 3, 5])).unwrap();
        assert!(!r.flag(c).blunt);
        assert_eq!(r.flag(c).witness, Some(l.bottom()));
        assert!(r.flag(l.top()).blunt);
        assert!(r.holds(), "{:?}", r.checks);
        let gap = r.checks.iter().find(|c| c.name == "non-blunt-coatom-bounds-distance").unwrap();
        assert!(gap.checked > 0);
    }

    #[test]
    fn restricted_distance_on_griesmer_code() {
        let m = Fixture::Code1145.matroid();
        let l = build_zlattice(&m).unwrap();
        let reports = dmzc_relation_check(&m, &l).unwrap();
        let zd = l.id_of(s(&[1, 2, 4, 6, 9, 11])).unwrap();
        let r = reports.iter().find(|r| r.coatom == zd).unwrap();
        assert_eq!(r.restricted_distance, 3);
        assert_eq!(r.case, DistanceCase::Three);
        let sum: usize = r
            .coatoms_above
            .iter()
            .filter(|&&z| z != zd)
            .map(|&z| l.element(z).nullity)
            .sum();
        assert_eq!(sum, 5);
        assert!(reports.iter().all(|r| r.holds && r.lower_bound_holds));

        let f = Fixture::Code633.matroid();
        assert!(dmzc_relation_check(&f, &build_zlattice(&f).unwrap()).unwrap().is_empty());
        let e1 = Fixture::Example1.matroid();
        assert!(dmzc_relation_check(&e1, &build_zlattice(&e1).unwrap()).is_err());
    }

    #[test]
    fn residual_examples() {
        let r = residual_set(&Fixture::Code1145.matroid()).unwrap();
        assert_eq!((r.size, r.rank, r.distance), (6, 3, Some(3)));
        assert_eq!(r.a, s(&[1, 2, 4, 6, 9, 11]));
        let r = residual_set(&Fixture::Code633.matroid()).unwrap();
        assert_eq!((r.size, r.rank, r.distance), (3, 2, Some(2)));
        let r = residual_set(&mat("100\n010\n001")).unwrap();
        assert_eq!(r.case, ResidualCase::Hyperplane);
        assert_eq!((r.size, r.rank, r.distance), (2, 2, Some(1)));
        let r = residual_set(&mat("111")).unwrap();
        assert_eq!((r.size, r.rank, r.distance), (0, 0, None));
        assert!(r.verified);
        assert!(matches!(residual_set(&mat("000")), Err(Error::RankZero)));
    }

    #[test]
    fn griesmer() {
        for (n, k, d) in [(11, 4, 5), (6, 3, 3), (7, 3, 4), (8, 4, 4)] {
            assert_eq!(griesmer_check(n, k, d).unwrap().slack, 0);
        }
        assert_eq!(griesmer_check(9, 1, 4).unwrap().bound, 4);
        assert!(griesmer_check(3, 0, 1).is_err());

        let chain = griesmer_chain(&Fixture::Code1145.matroid()).unwrap();
        let sets: Vec<_> = chain.iter().map(|c| c.set).collect();
        assert_eq!(
            sets,
            vec![SubsetMask::full(11), s(&[1, 2, 4, 6, 9, 11]), s(&[1, 4, 9]), s(&[1])]
        );
        let ds: Vec<_> = chain.iter().map(|c| c.distance).collect();
        assert_eq!(ds, vec![5, 3, 2, 1]);
    }

    #[test]
    fn codeword_coatoms() {
        let m = Fixture::Code1145.matroid();
        let map = coatom_codeword_map(&m, &build_zlattice(&m).unwrap()).unwrap();
        assert_eq!((map.pairs.len(), map.qualifying_coatoms.len()), (14, 14));
        assert!(map.bijective);
        let m = Fixture::Code633.matroid();
        let map = coatom_codeword_map(&m, &build_zlattice(&m).unwrap()).unwrap();
        assert_eq!((map.pairs.len(), map.qualifying_coatoms.len()), (4, 4));
        assert!(map.bijective);
        let e1 = Fixture::Example1.matroid();
        assert!(coatom_codeword_map(&e1, &build_zlattice(&e1).unwrap()).is_err());
    }
}
