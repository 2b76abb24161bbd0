//! Text formats and the full analysis report.
//!
//! Cyclic-flat presentation files look like
//!
//! ```text
//! # comments and blank lines are ignored
//! n=6
//! - 0
//! 1,2,3 2
//! 1,2,3,4,5,6 3
//! ```
//!
//! Each line after the header lists a set by its 1-based indices (or `-` for
//! the empty set) followed by its rank.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::binary::{
    blunt_flag, blunt_flags, griesmer_chain, griesmer_check, BluntReport, ChainLevel,
    GriesmerCheck,
};
use crate::error::{Error, ParseError, Result};
use crate::flats::{corank2_flats, count_corank2_interval, is_binary_via_zlattice, BinaryVerdict};
use crate::gf2::{parse_matrix, BinaryMatrix};
use crate::matroid::{Matroid, MatroidParams};
use crate::oracle;
use crate::subset::SubsetMask;
use crate::zlattice::{build_zlattice, matroid_from_cyclic_flats, CyclicFlatPresentation, ZLattice};

/// Largest ground set for which `--verify` runs the brute-force oracles.
pub const MAX_VERIFY_SIZE: usize = 16;

pub fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    Ok(parse_matrix(&std::fs::read_to_string(path)?)?)
}

fn malformed(line: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError::Malformed {
        line,
        message: message.into(),
    })
}

fn parse_set(token: &str, line: usize) -> Result<SubsetMask> {
    if token == "-" {
        return Ok(SubsetMask::EMPTY);
    }
    let mut indices = Vec::new();
    for part in token.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| malformed(line, format!("`{part}` is not an index")))?;
        if i == 0 || i > crate::subset::MAX_GROUND_SET {
            return Err(malformed(line, format!("index {i} is out of range")));
        }
        indices.push(i);
    }
    Ok(SubsetMask::from_one_based(indices))
}

pub fn parse_presentation(text: &str) -> Result<CyclicFlatPresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (no, header) = lines.next().ok_or(Error::Parse(ParseError::Empty))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| malformed(no, "expected a header of the form n=<int>"))?;
    let mut flats = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(set), Some(rank), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed(no, "expected `<indices or -> <rank>`"));
        };
        let rank: usize = rank
            .parse()
            .map_err(|_| malformed(no, format!("`{rank}` is not a rank")))?;
        flats.push((parse_set(set, no)?, rank));
    }
    CyclicFlatPresentation::new(n, flats)
}

fn set_token(s: SubsetMask) -> String {
    if s.is_empty() {
        return "-".into();
    }
    s.to_one_based()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_presentation(p: &CyclicFlatPresentation) -> String {
    let mut out = format!("n={}\n", p.n());
    for &(set, rank) in p.flats() {
        let _ = writeln!(out, "{} {rank}", set_token(set));
    }
    out
}

#[derive(Deserialize)]
struct ElementJson {
    set: SubsetMask,
    rank: usize,
}

#[derive(Deserialize)]
struct LatticeJson {
    n: usize,
    elements: Vec<ElementJson>,
}

/// Reads the `(set, rank)` pairs back out of lattice JSON.
pub fn presentation_from_lattice_json(text: &str) -> Result<CyclicFlatPresentation> {
    let l: LatticeJson = serde_json::from_str(text)?;
    CyclicFlatPresentation::new(l.n, l.elements.into_iter().map(|e| (e.set, e.rank)).collect())
}

/// Reads a presentation from either format, choosing by the first character.
pub fn parse_presentation_any(text: &str) -> Result<CyclicFlatPresentation> {
    if text.trim_start().starts_with('{') {
        presentation_from_lattice_json(text)
    } else {
        parse_presentation(text)
    }
}

pub fn lattice_json(l: &ZLattice) -> Result<String> {
    Ok(serde_json::to_string_pretty(l)?)
}

fn compact(s: SubsetMask) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let ix = s.to_one_based();
    let sep = if ix.iter().any(|&i| i > 9) { "," } else { "" };
    ix.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

/// Graphviz rendering with one row per rank.
pub fn lattice_dot(l: &ZLattice) -> String {
    let mut out = String::from("graph cyclic_flats {\n  rankdir=BT;\n  node [shape=box];\n");
    let max_rank = l.elements().iter().map(|z| z.rank).max().unwrap_or(0);
    for r in 0..=max_rank {
        let ids: Vec<String> = l
            .elements()
            .iter()
            .filter(|z| z.rank == r)
            .map(|z| format!("z{}", z.id))
            .collect();
        if !ids.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
    }
    for z in l.elements() {
        let _ = writeln!(out, "  z{} [label=\"{}\\nρ={}\"];", z.id, compact(z.set), z.rank);
    }
    for e in l.edges() {
        let _ = writeln!(out, "  z{} -- z{} [label=\"{}\"];", e.child, e.parent, e.label);
    }
    out.push_str("}\n");
    out
}

pub fn lattice_text(l: &ZLattice) -> String {
    let mut out = format!(
        "{} cyclic flats, {} cover edges, height {}\n",
        l.len(),
        l.edges().len(),
        l.height()
    );
    let _ = writeln!(out, "{:>4}  {:>4}  {:>4}  set", "id", "rank", "null");
    for z in l.elements() {
        let _ = writeln!(out, "{:>4}  {:>4}  {:>4}  {}", z.id, z.rank, z.nullity, z.set);
    }
    out.push_str("edges\n");
    for e in l.edges() {
        let _ = writeln!(
            out,
            "  {} < {}  {}",
            l.element(e.child).set,
            l.element(e.parent).set,
            e.label
        );
    }
    out
}

/// Outcome of one brute-force cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub params: MatroidParams,
    pub lattice: ZLattice,
    pub binarity: BinaryVerdict,
    pub edge_census: Vec<(String, usize)>,
    pub atoms: Vec<SubsetMask>,
    pub coatoms: Vec<SubsetMask>,
    pub blunt: BluntReport,
    /// Present for binary matroids of positive rank.
    pub griesmer: Option<GriesmerCheck>,
    pub residual_chain: Option<Vec<ChainLevel>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<Verification>>,
}

impl AnalysisReport {
    /// Whether every cross-check and internal property held.
    pub fn consistent(&self) -> bool {
        self.blunt.holds()
            && self
                .verification
                .as_ref()
                .is_none_or(|v| v.iter().all(|c| c.ok))
    }

    pub fn to_text(&self) -> String {
        let p = self.params;
        let mut out = format!("parameters (n,k,d) = {p}, nullity {}\n", p.eta);
        let _ = writeln!(
            out,
            "lattice: {} cyclic flats, height {}",
            self.lattice.len(),
            self.lattice.height()
        );
        for (label, count) in &self.edge_census {
            let _ = writeln!(out, "  {label}: {count}");
        }
        let sets = |v: &[SubsetMask]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "atoms: {}", sets(&self.atoms));
        let _ = writeln!(out, "coatoms: {}", sets(&self.coatoms));
        let _ = writeln!(out, "binary: {}", self.binarity.binary);
        if let Some((f, c)) = self.binarity.witness_flat {
            let _ = writeln!(out, "  corank-2 flat {f} has {c} flats above it");
        }
        let non_blunt = self.blunt.flags.iter().filter(|f| !f.blunt).count();
        let _ = writeln!(out, "non-blunt cyclic flats: {non_blunt}");
        if let Some(g) = self.griesmer {
            let _ = writeln!(out, "griesmer bound {}, slack {}", g.bound, g.slack);
        }
        if let Some(chain) = &self.residual_chain {
            out.push_str("residual chain:");
            for lvl in chain {
                let _ = write!(out, " ({},{},{})", lvl.size, lvl.rank, lvl.distance);
            }
            out.push('\n');
        }
        if let Some(v) = &self.verification {
            for c in v {
                let _ = writeln!(out, "verify {}: {} {}", c.name, if c.ok { "ok" } else { "MISMATCH" }, c.detail);
            }
        }
        out
    }
}

pub fn analyze(m: &Matroid, verify: bool) -> Result<AnalysisReport> {
    let params = m.params()?;
    let l = build_zlattice(m)?;
    let binarity = is_binary_via_zlattice(m, &l)?;
    let atoms = l.atoms().into_iter().map(|id| l.element(id).set).collect();
    let coatoms = l.coatoms().into_iter().map(|id| l.element(id).set).collect();
    let (blunt, griesmer, residual_chain) = if binarity.binary {
        (
            blunt_flags(m, &l)?,
            Some(griesmer_check(params.n, params.k, params.d)?),
            Some(griesmer_chain(m)?),
        )
    } else {
        let flags = (0..l.len()).map(|id| blunt_flag(&l, id)).collect();
        (BluntReport { flags, checks: Vec::new() }, None, None)
    };
    let verification = if verify {
        if m.n() > MAX_VERIFY_SIZE {
            return Err(Error::BoundExceeded {
                what: "ground set size for brute-force verification",
                limit: MAX_VERIFY_SIZE,
            });
        }
        Some(cross_check(m, &l, &binarity, params)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        params,
        edge_census: l.edge_census(),
        lattice: l,
        binarity,
        atoms,
        coatoms,
        blunt,
        griesmer,
        residual_chain,
        verification,
    })
}

fn cross_check(
    m: &Matroid,
    l: &ZLattice,
    binarity: &BinaryVerdict,
    params: MatroidParams,
) -> Result<Vec<Verification>> {
    let mut out = Vec::new();
    let mut push = |name, ok, detail: String| out.push(Verification { name, ok, detail });

    let direct = oracle::cyclic_flats(m);
    let ok = direct == l.sets().collect();
    push("cyclic-flats", ok, format!("{} by subset sweep", direct.len()));

    let minor = oracle::find_u42_minor(m);
    push(
        "binarity",
        minor.is_none() == binarity.binary,
        match minor {
            Some((x, y)) => format!("U(4,2) minor at X={x}, Y={y}"),
            None => "no U(4,2) minor".into(),
        },
    );

    let top = l.element(l.top()).set;
    let mut mismatches = 0;
    let flats = corank2_flats(m, l)?;
    for &f in &flats {
        if count_corank2_interval(m, l, f)? != oracle::flats_strictly_between(m, f, top) {
            mismatches += 1;
        }
    }
    push(
        "interval-counts",
        mismatches == 0,
        format!("{} corank-2 flats, {mismatches} mismatches", flats.len()),
    );

    let d = oracle::minimum_distance(m);
    push("minimum-distance", d == Some(params.d), format!("{d:?} by subset sweep"));

    let rebuilt = matroid_from_cyclic_flats(&l.presentation())?;
    let agree = m.ground_set().subsets().all(|x| rebuilt.rank(x) == m.rank(x));
    push("reconstruction", agree, format!("2^{} subsets", m.n()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    #[test]
    fn presentation_roundtrip() {
        let l = build_zlattice(&Fixture::Example1.matroid()).unwrap();
        let text = write_presentation(&l.presentation());
        assert!(text.starts_with("n=6\n- 0\n"));
        assert_eq!(parse_presentation(&text).unwrap(), l.presentation());
        let json = lattice_json(&l).unwrap();
        assert_eq!(parse_presentation_any(&json).unwrap(), l.presentation());
    }

    #[test]
    fn presentation_errors() {
        assert!(parse_presentation("").is_err());
        assert!(parse_presentation("m=3\n- 0").is_err());
        assert!(parse_presentation("n=3\n1,x 1").is_err());
        assert!(parse_presentation("n=3\n1,2").is_err());
        assert!(parse_presentation("n=3\n0 1").is_err());
        assert!(parse_presentation("n=3\n1,2,4 1").is_err());
    }

    #[test]
    fn dot_has_rows_and_edges() {
        let l = build_zlattice(&Fixture::Example1.matroid()).unwrap();
        let dot = lattice_dot(&l);
        assert_eq!(dot.matches(" -- ").count(), l.edges().len());
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("nullity:2"));
    }

    #[test]
    fn analysis_verifies() {
        let r = analyze(&Fixture::Code1145.matroid(), true).unwrap();
        assert!(r.consistent(), "{}", r.to_text());
        assert_eq!(r.griesmer.unwrap().slack, 0);
        let a = serde_json::to_string(&r).unwrap();
        let b = serde_json::to_string(&analyze(&Fixture::Code1145.matroid(), true).unwrap()).unwrap();
        assert_eq!(a, b);
        let u = analyze(&Matroid::uniform(4, 2).unwrap(), true).unwrap();
        assert!(!u.binarity.binary);
        assert!(u.griesmer.is_none());
        assert!(u.consistent());
    }
}
