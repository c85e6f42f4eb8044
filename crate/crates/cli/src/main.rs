use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigencone::faces::{enumerate_regular_facets, FaceSpec};
use eigencone::oracle::{Oracle, DEFAULT_MAX_HEIGHT};
use eigencone::rays::{self, classify_face};
use eigencone::reproduce::{reproduce_against, Target};
use eigencone::rootdata::{ParabolicSpec, RootSystem};
use eigencone::schubert::ProductTable;
use eigencone::symmetry;
use eigencone::system::EigenconeSystem;
use eigencone::tuple::RayTuple;
use eigencone::weyl::{self, WeylElem};
use eigencone::{Error, Rational};
use serde_json::{json, Value};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "eigencone", version, about = "Faces and extremal rays of tensor cones of semisimple groups")]
struct Cli {
    /// Cartan type, e.g. D4 or A1xA2
    #[arg(long = "type", global = true)]
    cartan: Option<String>,

    /// Number of tensor factors
    #[arg(long, global = true, default_value_t = 3)]
    s: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for cached Schubert structure constants
    #[arg(long, global = true, env = "EIGENCONE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Largest multiple N tried by the invariant oracle
    #[arg(long, global = true, default_value_t = 4)]
    oracle_max_n: u32,

    /// Report one representative per symmetry orbit
    #[arg(long, global = true, value_enum, default_value_t = Quotient::None)]
    quotient_symmetry: Quotient,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quotient {
    None,
    /// permutations of the tensor factors
    Entries,
    /// factor permutations and Dynkin diagram automorphisms
    Diagram,
}

#[derive(Args)]
struct FaceArgs {
    /// 1-based simple roots omitted from the Levi, e.g. "2" or "1,3"
    #[arg(long)]
    parabolic: String,

    /// One Weyl word per factor, separated by ';', e.g. "s4 s3 s1 s2; ..."
    #[arg(long)]
    words: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the regular facets
    Facets {
        /// only facets for this parabolic
        #[arg(long)]
        parabolic: Option<String>,
    },
    /// Classify the extremal rays of a regular face
    FaceRays {
        #[command(flatten)]
        face: FaceArgs,
    },
    /// Basic divisor class D(j, v) of a simple cover
    Divisor {
        #[command(flatten)]
        face: FaceArgs,
        /// "j:word" with 1-based j; the word may use u, v, w (s = 3) or w1..ws
        #[arg(long)]
        pair: String,
    },
    /// Induce a Levi weight tuple to the face
    Induct {
        #[command(flatten)]
        face: FaceArgs,
        /// "(ω4, ω4, 0)" or "0 0 0 1; 0 0 0 1; 0 0 0 0"
        #[arg(allow_hyphen_values = true)]
        tuple: String,
        /// skip the shift to degree 0 and the degree check
        #[arg(long)]
        raw: bool,
    },
    /// Test whether a weight tuple lies in the tensor cone
    Membership {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
        /// also compute invariant dimensions of N times the tuple
        #[arg(long)]
        oracle: bool,
    },
    /// All extremal rays of the tensor cone
    ConeRays,
    /// Recompute a worked example and compare with the stored values
    Reproduce {
        /// ex1, subbie, apples or p4-table
        target: String,
        /// compare with reference values from this JSON file instead
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_parse() {
                ExitCode::from(EXIT_PARSE)
            } else if matches!(e, Error::Inconsistent(_) | Error::Io(_) | Error::Cache(_)) {
                ExitCode::FAILURE
            } else {
                ExitCode::from(EXIT_PRECONDITION)
            }
        }
    }
}

fn run(cli: &Cli) -> Res<()> {
    if let Command::Reproduce { target, golden } = &cli.command {
        return run_reproduce(cli, target, golden.as_deref());
    }
    let label = cli.cartan.as_deref().ok_or_else(|| Failure::Usage("--type is required".into()))?;
    let rs = RootSystem::parse(label)?;
    if cli.s < 2 {
        return Err(Failure::Usage("--s must be at least 2".into()));
    }
    let table = ProductTable::load_or_build(&rs, cli.cache_dir.as_deref())?;
    match &cli.command {
        Command::Facets { parabolic } => {
            let filter = parabolic.as_deref().map(|p| ParabolicSpec::parse_omitted(&rs, p)).transpose()?;
            let quotient = match cli.quotient_symmetry {
                Quotient::None => false,
                Quotient::Entries => true,
                Quotient::Diagram => {
                    return Err(Failure::Usage("facets support --quotient-symmetry entries only".into()))
                }
            };
            let facets: Vec<FaceSpec> = enumerate_regular_facets(&table, cli.s, quotient)?
                .into_iter()
                .filter(|f| filter.as_ref().is_none_or(|p| *p == f.parabolic))
                .collect();
            emit(cli, facets_output(&rs, &facets))
        }
        Command::FaceRays { face } => {
            let face = parse_face(&rs, cli.s, face)?;
            let sys = EigenconeSystem::new(table, cli.s)?;
            face.validate(sys.table())?;
            let rep = classify_face(&sys, &face)?;
            let mut lines = vec![format!("face {} on {}", face.words_string(&rs), face.parabolic)];
            lines.push(format!(
                "q = {}, c = {}, exotic = {}, total = {}",
                rep.q,
                rep.zero_count,
                rep.exotic.len(),
                rep.total
            ));
            lines.push("type I:".into());
            for (pr, d) in &rep.basic_rays {
                lines.push(format!("  ({}, {}) by α{}: {d}", pr.j + 1, weyl::word_string(&rs, &pr.v), pr.l + 1));
            }
            lines.push("type II:".into());
            lines.extend(rep.type2_rays.iter().map(|t| format!("  {t}")));
            lines.push("Levi rays:".into());
            for l in &rep.levi_rays {
                let note = if l.is_exotic() { "  (exotic)" } else { "" };
                lines.push(format!("  {} ↦ {}{note}", l.levi, l.image));
            }
            let levi = rep
                .levi_rays
                .iter()
                .map(|l| {
                    Ok(json!({
                        "levi": l.levi.to_json_value()?,
                        "image": l.image.to_json_value()?,
                        "exotic": l.is_exotic(),
                    }))
                })
                .collect::<eigencone::Result<Vec<_>>>()?;
            let value = json!({
                "face": face.to_json(&rs),
                "q": rep.q,
                "c": rep.zero_count,
                "exotic": rep.exotic.len(),
                "total": rep.total,
                "type_i": tuples_json(rep.basic_rays.iter().map(|(_, d)| d))?,
                "type_ii": tuples_json(&rep.type2_rays)?,
                "face_rays": tuples_json(&rep.face_rays)?,
                "levi": levi,
            });
            emit(cli, (lines, value))
        }
        Command::Divisor { face, pair } => {
            let face = parse_face(&rs, cli.s, face)?;
            face.validate(&table)?;
            let (j, v) = parse_pair(&rs, &face, pair)?;
            let d = rays::basic_divisor_class(&table, &face, j, &v)?;
            emit(cli, (vec![d.to_string()], d.to_json_value()?))
        }
        Command::Induct { face, tuple, raw } => {
            let face = parse_face(&rs, cli.s, face)?;
            face.validate(&table)?;
            let mu = parse_tuple(&rs, cli.s, tuple)?;
            let img = if *raw {
                rays::induct_raw(&table, &face, &mu)?
            } else {
                rays::induct(&table, &face, &rays::shift_to_degree0(&rs, &mu, &face.parabolic))?
            };
            emit(cli, (vec![img.to_string()], img.to_json_value()?))
        }
        Command::Membership { tuple, oracle } => {
            let x = parse_tuple(&rs, cli.s, tuple)?;
            let sys = EigenconeSystem::new(table, cli.s)?;
            let member = sys.tens_membership(&x)?;
            let tight = if member { sys.tight_facets(&x).len() } else { 0 };
            let mut lines = vec![format!("{x}: in cone {member}")];
            if member {
                lines.push(format!("tight regular facets: {tight}"));
            }
            let mut value = json!({ "tuple": x.to_json_value()?, "member": member, "tight_facets": tight });
            if *oracle {
                let o = Oracle::new(&rs, DEFAULT_MAX_HEIGHT);
                let mut dims = Vec::new();
                for n in 1..=cli.oracle_max_n {
                    let d = o.invariant_dim(&x.scale(&Rational::from_integer(n.into())))?;
                    lines.push(format!("dim invariants of {n}·x: {d}"));
                    dims.push(d);
                }
                value["invariant_dims"] = json!(dims);
            }
            emit(cli, (lines, value))
        }
        Command::ConeRays => {
            let sys = EigenconeSystem::new(table, cli.s)?;
            let rays = sys.extremal_rays()?;
            let shown: Vec<(RayTuple, usize)> = match cli.quotient_symmetry {
                Quotient::None => rays.iter().map(|r| (r.clone(), 1)).collect(),
                q => symmetry::orbits(&rs, &rays, q == Quotient::Diagram)
                    .into_iter()
                    .map(|o| (rays[o[0]].clone(), o.len()))
                    .collect(),
            };
            let mut lines: Vec<String> = shown
                .iter()
                .map(|(r, n)| if *n > 1 { format!("{r}  [orbit {n}]") } else { r.to_string() })
                .collect();
            lines.push(format!("{} extremal rays, {} listed", rays.len(), shown.len()));
            let value = json!({
                "count": rays.len(),
                "rays": tuples_json(shown.iter().map(|(r, _)| r))?,
                "orbit_sizes": shown.iter().map(|(_, n)| *n).collect::<Vec<_>>(),
            });
            emit(cli, (lines, value))
        }
        Command::Reproduce { .. } => unreachable!(),
    }
}

fn run_reproduce(cli: &Cli, target: &str, golden: Option<&Path>) -> Res<()> {
    let target: Target = target.parse()?;
    let reference = golden.map(std::fs::read_to_string).transpose().map_err(Error::from)?;
    let rep = reproduce_against(target, reference.as_deref(), cli.cache_dir.as_deref())?;
    match cli.format {
        Format::Text => {
            for l in &rep.lines {
                println!("{l}");
            }
            if rep.is_ok() {
                println!("{target}: all values match");
            } else {
                println!("{target}: {} mismatches", rep.mismatches.len());
                print!("{}", rep.diff());
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&rep).map_err(Error::from)?),
    }
    if rep.is_ok() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn emit(cli: &Cli, (lines, value): (Vec<String>, Value)) -> Res<()> {
    match cli.format {
        Format::Text => {
            for l in lines {
                println!("{l}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).map_err(Error::from)?),
    }
    Ok(())
}

fn facets_output(rs: &RootSystem, facets: &[FaceSpec]) -> (Vec<String>, Value) {
    let mut lines: Vec<String> =
        facets.iter().map(|f| format!("P{:?}: {}", one_based(&f.parabolic.omitted(rs)), f.words_string(rs))).collect();
    lines.push(format!("{} regular facets", facets.len()));
    let value = json!(facets.iter().map(|f| f.to_json(rs)).collect::<Vec<_>>());
    (lines, value)
}

fn one_based(nodes: &[usize]) -> Vec<usize> {
    nodes.iter().map(|n| n + 1).collect()
}

fn tuples_json<'a>(it: impl IntoIterator<Item = &'a RayTuple>) -> eigencone::Result<Vec<Value>> {
    it.into_iter().map(RayTuple::to_json_value).collect()
}

fn parse_face(rs: &RootSystem, s: usize, args: &FaceArgs) -> Res<FaceSpec> {
    let face = FaceSpec::parse(rs, &args.parabolic, &args.words)?;
    if face.s() != s {
        return Err(Failure::Usage(format!("--words has {} entries but --s is {s}", face.s())));
    }
    Ok(face)
}

/// Names usable inside `--pair` words: `w1..ws`, plus `u, v, w` for three
/// factors.
fn word_names(face: &FaceSpec) -> Vec<(String, WeylElem)> {
    let mut names: Vec<(String, WeylElem)> =
        face.words.iter().enumerate().map(|(i, w)| (format!("w{}", i + 1), w.clone())).collect();
    if face.s() == 3 {
        for (n, w) in ["u", "v", "w"].iter().zip(&face.words) {
            names.push((n.to_string(), w.clone()));
        }
    }
    names
}

fn parse_pair(rs: &RootSystem, face: &FaceSpec, pair: &str) -> Res<(usize, WeylElem)> {
    let (j, word) = pair.split_once(':').ok_or_else(|| Failure::Usage(format!("--pair `{pair}` is not j:word")))?;
    let j: usize = j.trim().parse().map_err(|_| Failure::Usage(format!("bad entry index `{j}`")))?;
    if j == 0 || j > face.s() {
        return Err(Failure::Usage(format!("entry index {j} is out of range 1..{}", face.s())));
    }
    let v = weyl::parse_word_with(rs, word, &word_names(face))?;
    Ok((j - 1, v))
}

fn parse_tuple(rs: &RootSystem, s: usize, text: &str) -> Res<RayTuple> {
    let t = if text.contains(['ω', 'w', '(']) {
        RayTuple::parse_display(text, rs.rank())?
    } else {
        RayTuple::parse(text, rs.rank())?
    };
    if t.s() != s {
        return Err(Failure::Lib(Error::ArityMismatch { expected: s, got: t.s() }));
    }
    Ok(t)
}
