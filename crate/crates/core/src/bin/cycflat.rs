use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cycflat::binary::{griesmer_chain, griesmer_check, residual_set};
use cycflat::fixtures::Fixture;
use cycflat::flats::{find_u4_2_minor, is_binary_via_zlattice};
use cycflat::io::{
    analyze, lattice_dot, lattice_json, lattice_text, parse_presentation_any, read_matrix,
    write_presentation,
};
use cycflat::minors::{is_minor_uniform, zmap_minor, MinorSpec};
use cycflat::zlattice::{build_zlattice, matroid_from_cyclic_flats, verify_z_axioms};
use cycflat::{Error, Matroid, SubsetMask};

#[derive(Parser)]
#[command(name = "cycflat", version, about = "Lattices of cyclic flats of binary matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lattice of cyclic flats.
    Lattice(Common),
    /// Run the whole pipeline and print a report.
    Analyze(Common),
    /// Check a cyclic-flat presentation against the lattice axioms.
    Axioms {
        #[arg(long)]
        input: PathBuf,
        /// On success, rebuild the matroid and print its lattice.
        #[arg(long)]
        emit: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide binarity from the lattice.
    Binary(Common),
    /// Cyclic flats and uniformity of a minor `M|Y/X`.
    Minors {
        #[command(flatten)]
        common: Common,
        /// Contracted set `X`, as comma-separated 1-based indices.
        #[arg(long, default_value = "")]
        contract: String,
        /// Kept set `Y`; defaults to the whole ground set.
        #[arg(long)]
        restrict: Option<String>,
    },
    /// A residual set of the input.
    Residual(Common),
    /// The Griesmer bound and the chain of residual sets.
    Griesmer(Common),
}

#[derive(Args)]
struct Common {
    /// Matrix file, one row of 0/1 entries per line.
    #[arg(long, conflicts_with_all = ["uniform", "fixture"])]
    input: Option<PathBuf>,
    /// Use `U(N, K)`: N elements of rank K.
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    uniform: Option<Vec<usize>>,
    /// Use a bundled matrix by name.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-derive results with brute-force oracles.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

enum Failure {
    Violation(String),
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } | Error::EnumerationGuard { .. } => Failure::Guard(e.to_string()),
            Error::AxiomViolation { .. } | Error::ClassificationViolated(_) => {
                Failure::Violation(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(c: &Common) -> Result<Matroid, Failure> {
    if let Some(path) = &c.input {
        return Ok(Matroid::from_matrix(read_matrix(path)?));
    }
    if let Some(v) = &c.uniform {
        return Ok(Matroid::uniform(v[0], v[1])?);
    }
    if let Some(name) = &c.fixture {
        let names: Vec<&str> = Fixture::ALL.iter().map(|f| f.name()).collect();
        return Fixture::from_name(name)
            .map(Fixture::matroid)
            .ok_or_else(|| Failure::Input(format!("unknown fixture `{name}`; try one of {}", names.join(", "))));
    }
    Err(Failure::Input("one of --input, --uniform or --fixture is required".into()))
}

fn parse_indices(text: &str) -> Result<SubsetMask, Failure> {
    let mut out = SubsetMask::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.parse::<usize>() {
            Ok(i) if (1..=64).contains(&i) => out = out.with(i - 1),
            _ => return Err(Failure::Input(format!("`{part}` is not a 1-based index"))),
        }
    }
    Ok(out)
}

fn emit<T: Serialize>(value: &T, text: impl FnOnce() -> String, format: Format) -> Outcome {
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
            println!("{json}");
        }
        _ => print!("{}", text()),
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Lattice(c) => {
            let l = build_zlattice(&load(&c)?)?;
            match c.format {
                Format::Json => println!("{}", lattice_json(&l)?),
                Format::Dot => print!("{}", lattice_dot(&l)),
                Format::Text => print!("{}", lattice_text(&l)),
            }
            Ok(())
        }
        Command::Analyze(c) => {
            let report = analyze(&load(&c)?, c.verify)?;
            emit(&report, || report.to_text(), c.format)?;
            if report.consistent() {
                Ok(())
            } else {
                Err(Failure::Violation("report contains failed checks".into()))
            }
        }
        Command::Axioms { input, emit: rebuild, format } => {
            let text = std::fs::read_to_string(&input).map_err(Error::from)?;
            let p = parse_presentation_any(&text)?;
            if let Err(v) = verify_z_axioms(&p) {
                println!("fail {v}");
                return Err(Failure::Violation(format!("axiom {} violated", v.axiom)));
            }
            println!("pass");
            if rebuild {
                let m = matroid_from_cyclic_flats(&p)?;
                let l = build_zlattice(&m)?;
                let mut expected: Vec<_> = p.flats().to_vec();
                let mut got: Vec<_> = l.presentation().flats().to_vec();
                expected.sort();
                got.sort();
                if expected != got {
                    return Err(Failure::Violation("rebuilt lattice differs from the input".into()));
                }
                match format {
                    Format::Json => println!("{}", lattice_json(&l)?),
                    Format::Dot => print!("{}", lattice_dot(&l)),
                    Format::Text => print!("{}", write_presentation(&l.presentation())),
                }
            }
            Ok(())
        }
        Command::Binary(c) => {
            let m = load(&c)?;
            let l = build_zlattice(&m)?;
            let verdict = is_binary_via_zlattice(&m, &l)?;
            emit(
                &verdict,
                || {
                    let mut s = format!("binary: {}\n", verdict.binary);
                    if let Some((f, count)) = verdict.witness_flat {
                        s += &format!("corank-2 flat {f} has {count} flats above it\n");
                    }
                    if let Some((u, count)) = verdict.witness_cyclic_set {
                        s += &format!("cyclic set {u} has {count} cyclic sets below it\n");
                    }
                    s
                },
                c.format,
            )?;
            if c.verify {
                let minor = find_u4_2_minor(&m)?;
                if let Some(spec) = minor {
                    eprintln!("U(4,2) minor: {spec}");
                }
                if minor.is_none() != verdict.binary {
                    return Err(Failure::Violation("lattice verdict disagrees with minor search".into()));
                }
            }
            Ok(())
        }
        Command::Minors { common, contract, restrict } => {
            let m = load(&common)?;
            let x = parse_indices(&contract)?;
            let y = match restrict {
                Some(r) => parse_indices(&r)?,
                None => m.ground_set(),
            };
            let spec = MinorSpec::new(x, y)?;
            if !y.is_subset(m.ground_set()) {
                return Err(Failure::Input(format!("{y} is outside the ground set")));
            }
            let l = build_zlattice(&m)?;
            let verdict = is_minor_uniform(&m, &l, spec)?;
            let (first, second) = zmap_minor(&m, &l, spec);
            #[derive(Serialize)]
            struct MinorReport {
                spec: MinorSpec,
                uniform: cycflat::minors::UniformVerdict,
                cyclic_flats: Vec<SubsetMask>,
            }
            let report = MinorReport {
                spec,
                uniform: verdict,
                cyclic_flats: first.iter().copied().collect(),
            };
            emit(
                &report,
                || {
                    let mut s = format!("{spec}\nuniform: {}", report.uniform.is_uniform);
                    if report.uniform.is_uniform {
                        s += &format!(" (U({},{}))", report.uniform.n, report.uniform.k);
                    }
                    s += "\ncyclic flats:";
                    for z in &report.cyclic_flats {
                        s += &format!(" {z}");
                    }
                    s + "\n"
                },
                common.format,
            )?;
            if common.verify {
                let direct = cycflat::oracle::minor_cyclic_flats(&m, x, y);
                if first != direct || second != direct {
                    return Err(Failure::Violation("image formulas disagree with the minor".into()));
                }
            }
            Ok(())
        }
        Command::Residual(c) => {
            let r = residual_set(&load(&c)?)?;
            emit(
                &r,
                || {
                    let d = r.distance.map_or("-".to_string(), |d| d.to_string());
                    format!("A = {} ({},{},{d}) via {:?}\n", r.a, r.size, r.rank, r.case)
                },
                c.format,
            )?;
            if r.verified {
                Ok(())
            } else {
                Err(Failure::Violation("residual set misses its parameters".into()))
            }
        }
        Command::Griesmer(c) => {
            let m = load(&c)?;
            let p = m.params()?;
            let check = griesmer_check(p.n, p.k, p.d)?;
            let chain = griesmer_chain(&m)?;
            #[derive(Serialize)]
            struct GriesmerReport {
                n: usize,
                k: usize,
                d: usize,
                bound: usize,
                slack: i64,
                chain: Vec<cycflat::binary::ChainLevel>,
            }
            let report = GriesmerReport {
                n: p.n,
                k: p.k,
                d: p.d,
                bound: check.bound,
                slack: check.slack,
                chain,
            };
            emit(
                &report,
                || {
                    let mut s = format!("{p}: bound {}, slack {}\n", check.bound, check.slack);
                    for lvl in &report.chain {
                        s += &format!("  {} ({},{},{})\n", lvl.set, lvl.size, lvl.rank, lvl.distance);
                    }
                    s
                },
                c.format,
            )?;
            if check.slack < 0 {
                return Err(Failure::Violation("Griesmer bound violated".into()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("cycflat: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("cycflat: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("cycflat: {msg}");
            ExitCode::from(3)
        }
    }
}
