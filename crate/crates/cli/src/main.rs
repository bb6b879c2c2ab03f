use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flagweights::demo::so5_demo;
use flagweights::exact::Mat;
use flagweights::matroid::{check_exchange, matroid_from_matrix, verify_ggms};
use flagweights::normality::{holes_up_to, orbit_closure_normality, GradedGenerators, DEFAULT_MAX_DEGREE};
use flagweights::par::Execution;
use flagweights::polytope::{Point, PointSet};
use flagweights::roots::{b2_roots, extend_to_root_basis, type_a_roots, DominantWeight, WeightVec};
use flagweights::suites::{run_suite, Suite};
use flagweights::weights::{fundamental_weight_set, root_saturation_check, semistable, weight_set};
use flagweights::Error;

/// Exact weight polytopes, semistability and normality checks for torus
/// orbits in flag varieties.
#[derive(Parser)]
#[command(name = "flagweights", version)]
struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Print progress and diagnostics to standard error.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bases of the matroid of the first k columns of a matrix.
    Matroid {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        k: usize,
        /// Also check the edge/exchange correspondence on its polytope.
        #[arg(long)]
        ggms: bool,
    },
    /// Weight set of a matrix for a dominant weight or a single level k.
    Wtset {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        lambda: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Semistability of a matrix for a dominant weight twisted by mu.
    Semistable {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Root-saturation of a point set, or of a weight set shifted by -lambda.
    SaturationCheck {
        #[command(flatten)]
        source: PointSource,
        #[arg(long, value_enum, default_value_t = RootKind::TypeA)]
        roots: RootKind,
        /// Coset representative of the points (defaults to the origin).
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Semigroup holes up to a degree bound.
    Normality {
        #[command(flatten)]
        source: PointSource,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Extend independent type-A roots to a basis of the root lattice.
    ExtendBasis {
        #[arg(long)]
        n: usize,
        /// Semicolon-separated roots, e.g. "1,0,-1;0,1,-1".
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        roots: String,
    },
    /// The isotropic-line example for SO(5).
    So5Demo,
    /// Run a property suite over a seeded corpus.
    PropertySuite(SuiteArgs),
}

#[derive(Args)]
struct PointSource {
    #[arg(long, requires = "lambda", conflicts_with = "points")]
    matrix: Option<PathBuf>,
    #[arg(long)]
    lambda: Option<String>,
    /// Point set JSON: {"dim": d, "points": [[...], ...]} or a bare list of points.
    #[arg(long, visible_alias = "generators")]
    points: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootKind {
    TypeA,
    B2,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    entry_bound: Option<i64>,
    #[arg(long)]
    lambda_sum_max: Option<i64>,
    /// Run instances on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

/// A finished command: its JSON result and whether every checked property held.
struct Done {
    value: Value,
    ok: bool,
}

fn done(value: Value, ok: bool) -> Result<Done, Error> {
    Ok(Done { value, ok })
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Mat, Error> {
    Mat::from_json(&read(path)?)
}

fn read_points(path: &Path) -> Result<PointSet, Error> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text)?;
    if value.is_array() {
        let points: Vec<Point> = serde_json::from_value(value)?;
        let dim = points.first().map_or(0, Vec::len);
        PointSet::new(dim, points)
    } else {
        PointSet::from_json(&text)
    }
}

impl PointSource {
    /// Either the explicit points, or the weight set of `(matrix, λ)` with `λ`.
    fn load(&self) -> Result<(PointSet, Option<DominantWeight>), Error> {
        match (&self.matrix, &self.points) {
            (Some(m), None) => {
                let l: DominantWeight = self.lambda.as_deref().unwrap_or_default().parse()?;
                Ok((weight_set(&read_matrix(m)?, &l)?.points, Some(l)))
            }
            (None, Some(p)) => Ok((read_points(p)?, None)),
            _ => Err(Error::Invalid("give either --matrix with --lambda, or --points".into())),
        }
    }
}

fn parse_vec(s: &str) -> Result<Point, Error> {
    Ok(s.parse::<WeightVec>()?.into_coords())
}

fn run(cli: &Cli) -> Result<Done, Error> {
    match &cli.command {
        Command::Matroid { matrix, k, ggms } => {
            let m = matroid_from_matrix(&read_matrix(matrix)?, *k)?;
            let mut value = m.to_json();
            let mut ok = true;
            if *ggms {
                let report = verify_ggms(&m)?;
                let exchange = check_exchange(&m);
                ok = report.pass && exchange.is_none();
                value["ggms"] = serde_json::to_value(&report)?;
                value["exchange_violation"] = serde_json::to_value(&exchange)?;
            }
            done(value, ok)
        }
        Command::Wtset { matrix, lambda, k } => {
            let g = read_matrix(matrix)?;
            let ws = match (lambda, k) {
                (Some(l), _) => weight_set(&g, &l.parse()?)?,
                (None, Some(k)) => fundamental_weight_set(&g, *k)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            done(ws.to_json(), true)
        }
        Command::Semistable { matrix, lambda, mu } => {
            let rep = semistable(&read_matrix(matrix)?, &lambda.parse()?, &mu.parse()?)?;
            let theorem_holds = !rep.semistable || rep.witness.is_some();
            done(rep.to_json(), theorem_holds)
        }
        Command::SaturationCheck { source, roots, shift } => {
            let (points, lambda) = source.load()?;
            let points = match &lambda {
                Some(l) => points.translate(&l.coords().iter().map(|x| -x).collect::<Vec<_>>())?,
                None => points,
            };
            let rs = match roots {
                RootKind::TypeA => type_a_roots(points.dim())?,
                RootKind::B2 => b2_roots(),
            };
            let shift = match shift {
                Some(s) => parse_vec(s)?,
                None => vec![0; points.dim()],
            };
            let rep = root_saturation_check(&points, &rs, &shift)?;
            done(serde_json::to_value(&rep)?, rep.is_saturated)
        }
        Command::Normality { source, max_degree } => {
            let rep = match (&source.matrix, &source.lambda) {
                (Some(m), Some(l)) => orbit_closure_normality(&read_matrix(m)?, &l.parse()?, *max_degree)?,
                _ => {
                    let (points, _) = source.load()?;
                    holes_up_to(&GradedGenerators::new(points)?, *max_degree)?
                }
            };
            done(rep.to_json(), rep.normal_up_to_d)
        }
        Command::ExtendBasis { n, roots } => {
            let roots: Vec<Point> =
                roots.split(';').filter(|s| !s.trim().is_empty()).map(parse_vec).collect::<Result<_, _>>()?;
            let ext = extend_to_root_basis(&roots, *n)?;
            done(serde_json::to_value(&ext)?, ext.is_unimodular())
        }
        Command::So5Demo => {
            let d = so5_demo()?;
            if cli.verbose {
                eprintln!("weight set: {}", d.weight_set);
                eprintln!("missing points: {}", d.saturation.missing_points);
                eprintln!("origin in square sum: {}", d.origin_in_square_sum);
            }
            done(d.to_json(), d.matches_expected())
        }
        Command::PropertySuite(a) => {
            let suite: Suite = a.suite.parse()?;
            let mut spec = suite.default_spec(a.seed, a.count);
            if let Some(v) = a.n_max {
                spec.n_max = v;
            }
            if let Some(v) = a.entry_bound {
                spec.entry_bound = v;
            }
            if let Some(v) = a.lambda_sum_max {
                spec.lambda_sum_max = v;
            }
            let exec = if a.sequential { Execution::Sequential } else { Execution::Parallel };
            let rep = run_suite(suite, &spec, exec);
            if cli.verbose {
                eprintln!("{suite}: {} passed, {} failed", rep.passed, rep.failed);
            }
            done(rep.to_json(), rep.all_passed())
        }
    }
}

fn emit(cli: &Cli, value: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialise") + "\n";
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Done { value, ok }) => {
            if let Err(e) = emit(&cli, &value) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                if cli.verbose {
                    eprintln!("a checked property failed");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Independence { cycle } = &e {
                let _ = emit(&cli, &json!({"independent": false, "cycle": cycle}));
            }
            ExitCode::from(2)
        }
    }
}
