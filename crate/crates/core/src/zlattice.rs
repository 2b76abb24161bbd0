//! The lattice of cyclic flats.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{SubsetMask, MAX_GROUND_SET};

/// Flats visited before [`enumerate_flats`] gives up.
pub const FLAT_GUARD: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Z0,
    Z1,
    Z2,
    Z3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZElement {
    pub id: usize,
    pub set: SubsetMask,
    pub rank: usize,
    pub nullity: usize,
}

/// Classification of a cover edge by its rank and nullity jumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Elementary,
    Rank(usize),
    Nullity(usize),
    Mixed { d_rho: usize, d_eta: usize },
}

impl EdgeLabel {
    pub fn classify(d_rho: usize, d_eta: usize) -> Self {
        match (d_rho, d_eta) {
            (1, 1) => EdgeLabel::Elementary,
            (r, 1) if r > 1 => EdgeLabel::Rank(r),
            (1, h) if h > 1 => EdgeLabel::Nullity(h),
            (d_rho, d_eta) => EdgeLabel::Mixed { d_rho, d_eta },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            EdgeLabel::Elementary => "elementary",
            EdgeLabel::Rank(_) => "rank",
            EdgeLabel::Nullity(_) => "nullity",
            EdgeLabel::Mixed { .. } => "mixed",
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Elementary => f.write_str("elementary"),
            EdgeLabel::Rank(l) => write!(f, "rank:{l}"),
            EdgeLabel::Nullity(l) => write!(f, "nullity:{l}"),
            EdgeLabel::Mixed { d_rho, d_eta } => write!(f, "mixed:{d_rho},{d_eta}"),
        }
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub child: usize,
    pub parent: usize,
    pub label: EdgeLabel,
    pub d_rho: usize,
    pub d_eta: usize,
}

/// A finite family of sets ordered by inclusion, with ranks, its Hasse
/// diagram and (when it is a lattice) bottom and top.
#[derive(Clone, Debug, Serialize)]
pub struct ZLattice {
    n: usize,
    elements: Vec<ZElement>,
    edges: Vec<CoverEdge>,
    bottom: usize,
    top: usize,
    height: usize,
    #[serde(skip)]
    index: HashMap<SubsetMask, usize>,
    #[serde(skip)]
    children: Vec<Vec<usize>>,
    #[serde(skip)]
    parents: Vec<Vec<usize>>,
}

impl ZLattice {
    /// Orders the given `(set, rank)` pairs by `(rank, lex)` and computes the
    /// cover relation. Fails if the family has no least or no greatest member.
    pub fn from_elements(n: usize, members: Vec<(SubsetMask, usize)>) -> Result<Self> {
        let mut members = members;
        members.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.lex_cmp(b.0)));
        let elements: Vec<ZElement> = members
            .iter()
            .enumerate()
            .map(|(id, &(set, rank))| ZElement {
                id,
                set,
                rank,
                nullity: set.len().saturating_sub(rank),
            })
            .collect();
        let index: HashMap<SubsetMask, usize> =
            elements.iter().map(|z| (z.set, z.id)).collect();
        if index.len() != elements.len() {
            return Err(Error::precondition("family contains a repeated set"));
        }
        let m = elements.len();
        let bottom = (0..m)
            .find(|&i| elements.iter().all(|z| elements[i].set.is_subset(z.set)))
            .ok_or_else(|| Error::precondition("family has no least member"))?;
        let top = (0..m)
            .find(|&i| elements.iter().all(|z| z.set.is_subset(elements[i].set)))
            .ok_or_else(|| Error::precondition("family has no greatest member"))?;

        let mut children = vec![Vec::new(); m];
        let mut parents = vec![Vec::new(); m];
        let mut edges = Vec::new();
        for (i, a) in elements.iter().enumerate() {
            let above: Vec<usize> = (0..m)
                .filter(|&j| a.set.is_proper_subset(elements[j].set))
                .collect();
            for &j in &above {
                let b = &elements[j];
                let is_cover = !above
                    .iter()
                    .any(|&c| elements[c].set.is_proper_subset(b.set));
                if is_cover {
                    let d_rho = b.rank.saturating_sub(a.rank);
                    let d_eta = b.nullity.saturating_sub(a.nullity);
                    edges.push(CoverEdge {
                        child: i,
                        parent: j,
                        label: EdgeLabel::classify(d_rho, d_eta),
                        d_rho,
                        d_eta,
                    });
                    children[j].push(i);
                    parents[i].push(j);
                }
            }
        }
        edges.sort_by_key(|e| (e.child, e.parent));

        // Longest chain, counted in elements; process by set size.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| elements[i].set.len());
        let mut chain = vec![1usize; m];
        for &i in &order {
            for &c in &children[i] {
                chain[i] = chain[i].max(chain[c] + 1);
            }
        }
        let height = chain.into_iter().max().unwrap_or(0);

        Ok(ZLattice {
            n,
            elements,
            edges,
            bottom,
            top,
            height,
            index,
            children,
            parents,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ZElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &ZElement {
        &self.elements[id]
    }

    pub fn edges(&self) -> &[CoverEdge] {
        &self.edges
    }

    pub fn id_of(&self, set: SubsetMask) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.index.contains_key(&set)
    }

    /// `0_Z`.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// `1_Z`.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Elements covered by `id`.
    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    /// Elements covering `id`.
    pub fn parents(&self, id: usize) -> &[usize] {
        &self.parents[id]
    }

    pub fn edge(&self, child: usize, parent: usize) -> Option<&CoverEdge> {
        self.edges
            .iter()
            .find(|e| e.child == child && e.parent == parent)
    }

    pub fn sets(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.elements.iter().map(|z| z.set)
    }

    /// Ids of elements `z` with `lo ⊆ z ⊆ hi`.
    pub fn interval(&self, lo: SubsetMask, hi: SubsetMask) -> Vec<usize> {
        self.elements
            .iter()
            .filter(|z| lo.is_subset(z.set) && z.set.is_subset(hi))
            .map(|z| z.id)
            .collect()
    }

    /// Least upper bound inside the family.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let u = self.elements[a].set.union(self.elements[b].set);
        let upper: Vec<usize> = self
            .elements
            .iter()
            .filter(|z| u.is_subset(z.set))
            .map(|z| z.id)
            .collect();
        upper.iter().copied().find(|&c| {
            upper
                .iter()
                .all(|&o| self.elements[c].set.is_subset(self.elements[o].set))
        })
    }

    /// Greatest lower bound inside the family.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let i = self.elements[a].set.intersection(self.elements[b].set);
        let lower: Vec<usize> = self
            .elements
            .iter()
            .filter(|z| z.set.is_subset(i))
            .map(|z| z.id)
            .collect();
        lower.iter().copied().find(|&c| {
            lower
                .iter()
                .all(|&o| self.elements[o].set.is_subset(self.elements[c].set))
        })
    }

    /// Join of an arbitrary collection; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, ids: I) -> Option<usize> {
        ids.into_iter()
            .try_fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary collection; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, ids: I) -> Option<usize> {
        ids.into_iter().try_fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.parents[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.children[self.top].clone()
    }

    fn atoms_below(&self, id: usize) -> Vec<usize> {
        let s = self.elements[id].set;
        self.atoms()
            .into_iter()
            .filter(|&a| self.elements[a].set.is_subset(s))
            .collect()
    }

    fn coatoms_above(&self, id: usize) -> Vec<usize> {
        let s = self.elements[id].set;
        self.coatoms()
            .into_iter()
            .filter(|&c| s.is_subset(self.elements[c].set))
            .collect()
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomic(&self) -> bool {
        (0..self.len()).all(|id| self.join_all(self.atoms_below(id)) == Some(id))
    }

    /// Every element other than the bottom is the union of the atoms below it.
    pub fn is_atomic_by_union(&self) -> bool {
        (0..self.len()).filter(|&id| id != self.bottom).all(|id| {
            self.atoms_below(id)
                .iter()
                .fold(SubsetMask::EMPTY, |acc, &a| acc.union(self.elements[a].set))
                == self.elements[id].set
        })
    }

    /// Every element is the meet of the coatoms above it.
    pub fn is_coatomic(&self) -> bool {
        (0..self.len()).all(|id| self.meet_all(self.coatoms_above(id)) == Some(id))
    }

    /// Every element other than the top is the intersection of the coatoms above it.
    pub fn is_coatomic_by_intersection(&self) -> bool {
        let top = self.elements[self.top].set;
        (0..self.len()).filter(|&id| id != self.top).all(|id| {
            self.coatoms_above(id)
                .iter()
                .fold(top, |acc, &c| acc.intersection(self.elements[c].set))
                == self.elements[id].set
        })
    }

    /// Counts of edges per label kind, in a fixed key order.
    pub fn edge_census(&self) -> Vec<(String, usize)> {
        let mut census: std::collections::BTreeMap<String, usize> = Default::default();
        for e in &self.edges {
            *census.entry(e.label.to_string()).or_default() += 1;
        }
        census.into_iter().collect()
    }

    /// The `(set, rank)` pairs of this lattice.
    pub fn presentation(&self) -> CyclicFlatPresentation {
        CyclicFlatPresentation {
            n: self.n,
            flats: self.elements.iter().map(|z| (z.set, z.rank)).collect(),
        }
    }
}

/// All flats of `m`, by breadth-first closure expansion from `cl(∅)`.
pub fn enumerate_flats(m: &Matroid) -> Result<Vec<SubsetMask>> {
    let e = m.ground_set();
    let start = m.loops();
    let mut seen: HashSet<SubsetMask> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(f) = queue.pop_front() {
        out.push(f);
        let mut rest = e.difference(f);
        while let Some(x) = rest.first() {
            let g = m.closure(f.with(x));
            rest = rest.difference(g);
            if seen.insert(g) {
                if seen.len() > FLAT_GUARD {
                    return Err(Error::EnumerationGuard { visited: seen.len() });
                }
                queue.push_back(g);
            }
        }
    }
    Ok(out)
}

/// All flats of rank `r`.
pub fn flats_of_rank(m: &Matroid, r: usize) -> Result<Vec<SubsetMask>> {
    Ok(enumerate_flats(m)?
        .into_iter()
        .filter(|&f| m.rank(f) == r)
        .collect())
}

/// `Z(M)`: the flats fixed by `cyc`, with their ranks and cover edges.
pub fn build_zlattice(m: &Matroid) -> Result<ZLattice> {
    let members = enumerate_flats(m)?
        .into_iter()
        .filter(|&f| m.is_cyclic(f))
        .map(|f| (f, m.rank(f)))
        .collect();
    ZLattice::from_elements(m.n(), members)
}

/// Id of `cl(A ∪ B)`.
pub fn z_join(m: &Matroid, l: &ZLattice, a: usize, b: usize) -> usize {
    let s = m.closure(l.element(a).set.union(l.element(b).set));
    l.id_of(s).expect("closure of a union of cyclic sets is a cyclic flat")
}

/// Id of `cyc(A ∩ B)`.
pub fn z_meet(m: &Matroid, l: &ZLattice, a: usize, b: usize) -> usize {
    let s = m.cyclic_operator(l.element(a).set.intersection(l.element(b).set));
    l.id_of(s).expect("cyclic part of an intersection of flats is a cyclic flat")
}

/// A candidate family of cyclic flats with ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFlatPresentation {
    n: usize,
    flats: Vec<(SubsetMask, usize)>,
}

/// First axiom failure found by [`verify_z_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZViolation {
    pub axiom: Axiom,
    pub witness: Vec<SubsetMask>,
    pub detail: String,
}

impl fmt::Display for ZViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl CyclicFlatPresentation {
    /// Rejects repeated sets and sets outside `[n]`.
    pub fn new(n: usize, flats: Vec<(SubsetMask, usize)>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::BoundExceeded {
                what: "ground set size",
                limit: MAX_GROUND_SET,
            });
        }
        let mut seen = HashSet::new();
        for &(s, _) in &flats {
            if !s.is_subset(SubsetMask::full(n)) {
                return Err(Error::OutOfGroundSet { set: s, n });
            }
            if !seen.insert(s) {
                return Err(Error::precondition(format!("set {s} listed twice")));
            }
        }
        Ok(CyclicFlatPresentation { n, flats })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[(SubsetMask, usize)] {
        &self.flats
    }

    /// `min{ρ(F) + |X - F|}` over the family.
    pub fn rank_of(&self, x: SubsetMask) -> usize {
        self.flats
            .iter()
            .map(|&(f, r)| r + x.difference(f).len())
            .min()
            .unwrap_or(x.len())
    }
}

/// Checks (Z0)-(Z3) and reports the first violation.
pub fn verify_z_axioms(p: &CyclicFlatPresentation) -> std::result::Result<(), ZViolation> {
    let flats = &p.flats;
    if flats.is_empty() {
        return Err(ZViolation {
            axiom: Axiom::Z0,
            witness: vec![],
            detail: "empty family".into(),
        });
    }
    let lattice = ZLattice::from_elements(p.n, flats.clone()).map_err(|e| ZViolation {
        axiom: Axiom::Z0,
        witness: vec![],
        detail: e.to_string(),
    })?;
    let m = lattice.len();
    let set = |i: usize| lattice.element(i).set;
    let rank = |i: usize| lattice.element(i).rank;

    let mut joins = vec![vec![0usize; m]; m];
    let mut meets = vec![vec![0usize; m]; m];
    for a in 0..m {
        for b in a..m {
            let j = lattice.join(a, b).ok_or_else(|| ZViolation {
                axiom: Axiom::Z0,
                witness: vec![set(a), set(b)],
                detail: "no least common upper bound".into(),
            })?;
            let mt = lattice.meet(a, b).ok_or_else(|| ZViolation {
                axiom: Axiom::Z0,
                witness: vec![set(a), set(b)],
                detail: "no greatest common lower bound".into(),
            })?;
            joins[a][b] = j;
            joins[b][a] = j;
            meets[a][b] = mt;
            meets[b][a] = mt;
        }
    }

    let bottom = lattice.bottom();
    if rank(bottom) != 0 {
        return Err(ZViolation {
            axiom: Axiom::Z1,
            witness: vec![set(bottom)],
            detail: format!("least member has rank {}", rank(bottom)),
        });
    }

    for a in 0..m {
        for b in 0..m {
            if set(a).is_proper_subset(set(b)) {
                let dr = rank(b) as i64 - rank(a) as i64;
                let ds = set(b).len() as i64 - set(a).len() as i64;
                if !(0 < dr && dr < ds) {
                    return Err(ZViolation {
                        axiom: Axiom::Z2,
                        witness: vec![set(a), set(b)],
                        detail: format!("rank difference {dr} not strictly between 0 and {ds}"),
                    });
                }
            }
        }
    }

    for a in 0..m {
        for b in a + 1..m {
            let (j, mt) = (joins[a][b], meets[a][b]);
            let excess = set(a).intersection(set(b)).difference(set(mt)).len();
            let lhs = rank(a) + rank(b);
            let rhs = rank(j) + rank(mt) + excess;
            if lhs < rhs {
                return Err(ZViolation {
                    axiom: Axiom::Z3,
                    witness: vec![set(a), set(b)],
                    detail: format!("{lhs} < {rhs}"),
                });
            }
        }
    }
    Ok(())
}

/// Rank of `x` by the minimum formula over the presentation.
pub fn rank_from_cyclic_flats(p: &CyclicFlatPresentation, x: SubsetMask) -> usize {
    p.rank_of(x)
}

/// The matroid with the given cyclic flats, after checking the axioms.
pub fn matroid_from_cyclic_flats(p: &CyclicFlatPresentation) -> Result<Matroid> {
    verify_z_axioms(p).map_err(|v| Error::AxiomViolation {
        axiom: v.axiom,
        detail: v.to_string(),
    })?;
    Ok(Matroid::from_presentation(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::parse_matrix;

    fn s(ix: &[usize]) -> SubsetMask {
        SubsetMask::from_one_based(ix.iter().copied())
    }

    fn example_1() -> Matroid {
        Matroid::from_matrix(parse_matrix("101011\n011011\n000111").unwrap())
    }

    fn fig_4() -> Matroid {
        Matroid::from_matrix(parse_matrix("100111\n010101\n001011").unwrap())
    }

    fn fig_2_presentation() -> CyclicFlatPresentation {
        CyclicFlatPresentation::new(
            6,
            vec![
                (SubsetMask::EMPTY, 0),
                (s(&[5, 6]), 1),
                (s(&[1, 2, 3]), 2),
                (s(&[3, 4, 5, 6]), 2),
                (s(&[1, 2, 3, 4, 5, 6]), 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_1_lattice() {
        let l = build_zlattice(&example_1()).unwrap();
        let got: Vec<(SubsetMask, usize)> = l.elements().iter().map(|z| (z.set, z.rank)).collect();
        assert_eq!(
            got,
            vec![
                (SubsetMask::EMPTY, 0),
                (s(&[5, 6]), 1),
                (s(&[1, 2, 3]), 2),
                (s(&[3, 4, 5, 6]), 2),
                (s(&[1, 2, 3, 4, 5, 6]), 3),
            ]
        );
        let label = |a: &[usize], b: &[usize]| {
            l.edge(l.id_of(s(a)).unwrap(), l.id_of(s(b)).unwrap())
                .unwrap()
                .label
        };
        assert_eq!(label(&[], &[1, 2, 3]), EdgeLabel::Rank(2));
        assert_eq!(label(&[1, 2, 3], &[1, 2, 3, 4, 5, 6]), EdgeLabel::Nullity(2));
        assert_eq!(label(&[], &[5, 6]), EdgeLabel::Elementary);
        assert_eq!(l.edges().len(), 5);
        assert_eq!(l.height(), 4);
        assert!(!l.is_atomic());
    }

    #[test]
    fn fig_4_lattice() {
        let m = fig_4();
        let l = build_zlattice(&m).unwrap();
        assert_eq!(l.len(), 6);
        let atoms: Vec<SubsetMask> = l.atoms().iter().map(|&a| l.element(a).set).collect();
        assert_eq!(
            atoms,
            vec![s(&[1, 2, 4]), s(&[1, 3, 5]), s(&[2, 5, 6]), s(&[3, 4, 6])]
        );
        assert_eq!(l.height(), 3);
        assert!(l.is_atomic() && l.is_atomic_by_union());
        assert!(l.is_coatomic());
        let a = l.id_of(s(&[1, 2, 4])).unwrap();
        let b = l.id_of(s(&[1, 3, 5])).unwrap();
        assert_eq!(z_join(&m, &l, a, b), l.top());
        assert_eq!(l.join(a, b), Some(l.top()));
        assert_eq!(l.meet(a, l.bottom()), Some(l.bottom()));
    }

    #[test]
    fn uniform_lattice_has_two_elements() {
        let l = build_zlattice(&Matroid::uniform(4, 2).unwrap()).unwrap();
        let sets: Vec<_> = l.sets().collect();
        assert_eq!(sets, vec![SubsetMask::EMPTY, SubsetMask::full(4)]);
    }

    #[test]
    fn joins_and_meets_match_closure_and_cyc() {
        let m = example_1();
        let l = build_zlattice(&m).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(l.join(a, b), Some(z_join(&m, &l, a, b)));
                assert_eq!(l.meet(a, b), Some(z_meet(&m, &l, a, b)));
            }
        }
        let a = l.id_of(s(&[1, 2, 3])).unwrap();
        let b = l.id_of(s(&[3, 4, 5, 6])).unwrap();
        assert_eq!(l.element(z_meet(&m, &l, a, b)).set, SubsetMask::EMPTY);
    }

    #[test]
    fn axioms_on_fig_2() {
        let p = fig_2_presentation();
        assert_eq!(verify_z_axioms(&p), Ok(()));
        assert_eq!(rank_from_cyclic_flats(&p, s(&[4, 5, 6])), 2);

        let mut flats = p.flats().to_vec();
        flats[2].1 = 3;
        let bad = CyclicFlatPresentation::new(6, flats).unwrap();
        let v = verify_z_axioms(&bad).unwrap_err();
        assert_eq!(v.axiom, Axiom::Z2);
        assert!(v.witness.contains(&s(&[1, 2, 3])));

        let no_top = CyclicFlatPresentation::new(
            4,
            vec![(SubsetMask::EMPTY, 0), (s(&[1, 2]), 1), (s(&[3, 4]), 1)],
        )
        .unwrap();
        assert_eq!(verify_z_axioms(&no_top).unwrap_err().axiom, Axiom::Z0);

        let z1 = CyclicFlatPresentation::new(3, vec![(SubsetMask::EMPTY, 1), (s(&[1, 2, 3]), 2)]).unwrap();
        assert_eq!(verify_z_axioms(&z1).unwrap_err().axiom, Axiom::Z1);

        assert!(CyclicFlatPresentation::new(3, vec![(s(&[1]), 0), (s(&[1]), 0)]).is_err());
    }

    #[test]
    fn presentation_roundtrip_example_1() {
        let m = example_1();
        let l = build_zlattice(&m).unwrap();
        let rebuilt = matroid_from_cyclic_flats(&l.presentation()).unwrap();
        for x in m.ground_set().subsets() {
            assert_eq!(rebuilt.rank(x), m.rank(x));
        }
        let l2 = build_zlattice(&rebuilt).unwrap();
        assert_eq!(l2.elements(), l.elements());
    }

    #[test]
    fn dual_lattice_is_complemented() {
        let m = example_1();
        let l = build_zlattice(&m).unwrap();
        let ld = build_zlattice(&m.dual()).unwrap();
        let eta_e = m.nullity(m.ground_set());
        let mut expected: Vec<(SubsetMask, usize)> = l
            .elements()
            .iter()
            .map(|z| {
                let c = z.set.complement(6);
                (c, eta_e - m.nullity(z.set))
            })
            .collect();
        expected.sort();
        let mut got: Vec<_> = ld.elements().iter().map(|z| (z.set, z.rank)).collect();
        got.sort();
        assert_eq!(got, expected);
    }
}
