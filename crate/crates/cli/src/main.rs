use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use solvlie::aclass::{self, AMethod};
use solvlie::config::{Config, EnumBudget, Fault};
use solvlie::exec::{self, Exec};
use solvlie::field::{AnyField, Field, FieldSpec};
use solvlie::generators;
use solvlie::lie::AnyAlgebra;
use solvlie::report::{self, CorpusItem, CorpusKind, ReportOptions};
use solvlie::{with_algebra, Error};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_A: u8 = 3;
const EXIT_UNDECIDED: u8 = 4;
const EXIT_SUITE_FAILURE: u8 = 5;

#[derive(Parser)]
#[command(name = "solvlie", version, about = "Structure of solvable Lie algebras and the A-algebra property")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of element pairs an exhaustive A-check may visit.
    #[arg(long, global = true, default_value_t = EnumBudget::default().max_pairs)]
    max_pairs: u64,
    /// Largest number of subspaces an enumeration may visit.
    #[arg(long, global = true, default_value_t = EnumBudget::default().max_subspaces)]
    max_subspaces: u64,
    /// Wall-clock limit for a single enumeration, in seconds.
    #[arg(long, global = true)]
    time_limit: Option<u64>,
    /// Deliberately break a code path to check that the suite notices.
    #[arg(long, global = true, hide = true, value_enum)]
    inject_fault: Option<FaultArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    LinearComplement,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Structural,
}

impl From<MethodArg> for AMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => AMethod::Auto,
            MethodArg::Oracle => AMethod::OraclePairs,
            MethodArg::Structural => AMethod::Structural,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusArg {
    /// Seeded random solvable algebras.
    Random,
    /// Split metabelian algebras with invertible action on the derived algebra.
    Invertible,
    /// Algebra JSON files given with --files.
    Files,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Abelian,
    TwoDim,
    Heisenberg,
    CyclicShift,
    Diagonal,
    CyclicModule,
    Random,
    Invertible,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file (alternating law and Jacobi identity).
    Check { path: PathBuf },
    /// Write the full report for one algebra.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timings (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Include the property suite.
        #[arg(long)]
        properties: bool,
    },
    /// Decide whether every nilpotent subalgebra is abelian.
    IsA {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Print the triangular decomposition into abelian subalgebras.
    Decompose { path: PathBuf },
    /// Emit algebra JSON files.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value = "gf2")]
        field: String,
        /// Dimension for `abelian`, dimension bound for `random`.
        #[arg(long, default_value_t = 5)]
        dim: usize,
        /// Eigenvalue parameters: `0,1` for cyclic-module, `1,2;0,1` (rows) for diagonal.
        #[arg(long)]
        lambdas: Option<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output directory; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suite over a corpus.
    Verify {
        #[arg(long, value_enum, default_value = "random")]
        corpus: CorpusArg,
        #[arg(long, default_value = "gf2")]
        field: String,
        #[arg(long, default_value_t = 5)]
        dim_max: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, num_args = 1..)]
        files: Vec<PathBuf>,
        /// Write the failure records (replayable JSON lines) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = config(&cli.global);
    let run = || dispatch(cli.command, &cfg);
    let code = match cli.global.threads {
        Some(t) => exec::with_threads(t, run),
        None => run(),
    };
    ExitCode::from(code)
}

fn config(g: &GlobalOpts) -> Config {
    Config {
        seed: g.seed,
        budget: EnumBudget {
            max_subspaces: g.max_subspaces,
            max_pairs: g.max_pairs,
            time_limit: g.time_limit.map(Duration::from_secs),
        },
        exec: if g.threads == Some(1) { Exec::Sequential } else { Exec::Parallel },
        fault: g.inject_fault.map(|FaultArg::LinearComplement| Fault::LinearComplement),
    }
}

fn dispatch(cmd: Command, cfg: &Config) -> u8 {
    match cmd {
        Command::Check { path } => with_loaded(&path, |alg| {
            println!("ok\tdim={}\tfield={}", alg.dim(), alg.field_spec());
            EXIT_OK
        }),
        Command::Analyze {
            path,
            method,
            out,
            timings,
            properties,
        } => with_loaded(&path, |alg| {
            let input = json!({ "path": path.display().to_string(), "algebra": alg.to_json() });
            let opts = ReportOptions { timings, properties };
            let rep = report::run_report(input, &alg, method.into(), cfg, opts);
            emit(out.as_deref(), &rep)
        }),
        Command::IsA { path, method } => with_loaded(&path, |alg| is_a(&alg, method.into(), cfg)),
        Command::Decompose { path } => with_loaded(&path, |alg| match report::decompose(&alg, cfg) {
            Ok(v) => emit(None, &v),
            Err(e @ Error::BudgetExceeded(_)) => {
                eprintln!("{e}");
                EXIT_UNDECIDED
            }
            Err(e) => {
                eprintln!("{e}");
                EXIT_INVALID
            }
        }),
        Command::Generate {
            family,
            field,
            dim,
            lambdas,
            count,
            out,
        } => generate(family, &field, dim, lambdas.as_deref(), count, out.as_deref(), cfg.seed),
        Command::Verify {
            corpus,
            field,
            dim_max,
            count,
            files,
            out,
        } => verify(corpus, &field, dim_max, count, &files, out.as_deref(), cfg),
    }
}

/// Parses the file and hands the algebra over, mapping load failures to
/// exit codes.
fn with_loaded(path: &Path, run: impl FnOnce(AnyAlgebra) -> u8) -> u8 {
    match load(path) {
        Ok(alg) => run(alg),
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            load_exit(&e)
        }
    }
}

fn load(path: &Path) -> Result<AnyAlgebra, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read file: {e}")))?;
    AnyAlgebra::from_json_str(&text)
}

fn load_exit(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidField(_) => EXIT_PARSE,
        _ => EXIT_INVALID,
    }
}

fn emit(out: Option<&Path>, v: &Value) -> u8 {
    let text = serde_json::to_string_pretty(v).expect("JSON value serializes") + "\n";
    match out {
        Some(p) => match fs::write(p, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("cannot write {}: {e}", p.display());
                EXIT_INVALID
            }
        },
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn is_a(alg: &AnyAlgebra, method: AMethod, cfg: &Config) -> u8 {
    with_algebra!(alg, |l| match aclass::is_a(l, method, cfg) {
        Ok(cert) => {
            println!("{}", cert.to_json(l.field()));
            if cert.verdict {
                EXIT_OK
            } else {
                EXIT_NOT_A
            }
        }
        Err(e @ (Error::Undecided(_) | Error::BudgetExceeded(_) | Error::SamplingInconclusive(_))) => {
            println!("{}", json!({ "verdict": Value::Null, "reason": e.to_string() }));
            EXIT_UNDECIDED
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_INVALID
        }
    })
}

fn parse_field(s: &str) -> Result<FieldSpec, u8> {
    s.parse::<FieldSpec>().map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })
}

fn parse_scalars<F: Field>(f: &F, s: &str) -> Result<Vec<F::Elem>, u8> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map(|n| f.from_i64(n)).map_err(|_| {
                eprintln!("'{t}' is not an integer");
                EXIT_PARSE
            })
        })
        .collect()
}

fn build_family<F: Field>(f: F, family: Family, dim: usize, lambdas: Option<&str>, seed: u64) -> Result<AnyAlgebra, u8>
where
    AnyAlgebra: From<solvlie::lie::LieAlgebra<F>>,
{
    let fail = |e: Error| {
        eprintln!("{e}");
        EXIT_INVALID
    };
    let l = match family {
        Family::Abelian => generators::abelian(f, dim),
        Family::TwoDim => generators::two_dim_nonabelian(f),
        Family::Heisenberg => generators::heisenberg(f),
        Family::CyclicShift => generators::cyclic_shift_algebra(f),
        Family::Diagonal => {
            let rows = lambdas
                .unwrap_or("1")
                .split(';')
                .map(|r| parse_scalars(&f, r))
                .collect::<Result<Vec<_>, u8>>()?;
            generators::diagonal_action_algebra(f, &rows)
        }
        Family::CyclicModule => {
            let ls = parse_scalars(&f, lambdas.unwrap_or("0"))?;
            let p = f.characteristic();
            generators::cyclic_module_algebra(f, p, &ls)
        }
        Family::Random => generators::random_solvable(seed, dim, f),
        Family::Invertible => {
            eprintln!("the invertible family needs a finite field");
            return Err(EXIT_INVALID);
        }
    };
    l.map(Into::into).map_err(fail)
}

fn generate(
    family: Family,
    field: &str,
    dim: usize,
    lambdas: Option<&str>,
    count: usize,
    out: Option<&Path>,
    seed: u64,
) -> u8 {
    let spec = match parse_field(field) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let any = match spec.build() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_PARSE;
        }
    };
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        let alg = match (&any, family) {
            (AnyField::Finite(g), Family::Invertible) => {
                generators::random_a_candidate(s, g.clone()).map(AnyAlgebra::from).map_err(|e| {
                    eprintln!("{e}");
                    EXIT_INVALID
                })
            }
            (AnyField::Finite(g), _) => build_family(g.clone(), family, dim, lambdas, s),
            (AnyField::Rationals(q), _) => build_family(q.clone(), family, dim, lambdas, s),
        };
        let alg = match alg {
            Ok(a) => a,
            Err(code) => return code,
        };
        let text = serde_json::to_string_pretty(&alg.to_json()).expect("serializes") + "\n";
        match out {
            Some(dir) => {
                let name = format!("{}-{}.json", family_name(family), s);
                if let Err(e) = fs::create_dir_all(dir).and_then(|_| fs::write(dir.join(&name), text)) {
                    eprintln!("cannot write {name}: {e}");
                    return EXIT_INVALID;
                }
            }
            None => print!("{text}"),
        }
    }
    EXIT_OK
}

fn family_name(f: Family) -> String {
    f.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn verify(
    corpus: CorpusArg,
    field: &str,
    dim_max: usize,
    count: usize,
    files: &[PathBuf],
    out: Option<&Path>,
    cfg: &Config,
) -> u8 {
    let items = match corpus {
        CorpusArg::Files => {
            let mut items = Vec::new();
            for p in files {
                match load(p) {
                    Ok(algebra) => items.push(CorpusItem {
                        name: p.display().to_string(),
                        algebra,
                    }),
                    Err(e) => {
                        eprintln!("{}: {e}", p.display());
                        return load_exit(&e);
                    }
                }
            }
            items
        }
        CorpusArg::Random | CorpusArg::Invertible => {
            let spec = match parse_field(field) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let kind = if matches!(corpus, CorpusArg::Random) {
                CorpusKind::Random
            } else {
                CorpusKind::Invertible
            };
            match report::generate_corpus(kind, &spec, dim_max, count, cfg.seed) {
                Ok(items) => items,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_INVALID;
                }
            }
        }
    };
    let summary = report::verify_corpus(&items, cfg);
    print!("{}", summary.to_tsv());
    let lines: String = summary
        .failures
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializes") + "\n")
        .collect();
    for r in &summary.failures {
        let kind = if r.closed_field_proxy { "proxy failure" } else { "FAILURE" };
        eprintln!("{kind}: {} on {}: {}", r.property, r.item, r.witness);
    }
    if let Some(p) = out {
        let written = fs::File::create(p).and_then(|mut fh| fh.write_all(lines.as_bytes()));
        if let Err(e) = written {
            eprintln!("cannot write {}: {e}", p.display());
            return EXIT_INVALID;
        }
    }
    let blocking = summary.blocking().count();
    println!(
        "# items={} blocking_failures={} proxy_failures={}",
        summary.items,
        blocking,
        summary.failures.len() - blocking
    );
    if blocking > 0 {
        EXIT_SUITE_FAILURE
    } else {
        EXIT_OK
    }
}
