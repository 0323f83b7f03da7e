use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdgenus::enumerate::{
    euler_polynomial, max_pd_genus, pdg_polynomial, EnumOptions, GenusMethod, MaxGenusMethod,
};
use pdgenus::families::{closed_form_euler, closed_form_pdg, generate, FamilySpec, FAMILY_NAMES};
use pdgenus::stats::{asymptotic_suite, suite_csv, AsymptoticFamily, SuiteRow};
use pdgenus::theorems::{deletion_recurrence, DeletionForm};
use pdgenus::{EdgeSubset, IntPolynomial, RibbonGraph};

mod verify;

#[derive(Parser, Debug)]
#[command(
    name = "pdgenus",
    version,
    about = "Partial-dual genus polynomials of ribbon graphs"
)]
struct Cli {
    /// Worker threads for subset sweeps; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Partial-dual genus polynomial.
    Pdg(PolyArgs),
    /// Partial-dual Euler-genus polynomial.
    Euler(PolyArgs),
    /// Write the partial dual G^A as a ribbon-graph file.
    Dual {
        #[arg(long)]
        file: PathBuf,
        /// Comma-separated edge indices, e.g. `0,2,5`.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        /// Output file; stdout when omitted or `-`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum genus over all partial duals.
    Maxgenus {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MaxMethod::Brute)]
        method: MaxMethod,
    },
    /// Exponent support of the polynomial and whether it has gaps.
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// Use the Euler-genus polynomial.
        #[arg(long)]
        euler: bool,
    },
    /// Emit a family member as a ribbon-graph file, or list the families.
    Family {
        #[arg(long, required_unless_present = "list")]
        family: Option<String>,
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["family", "n", "m", "out"])]
        list: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact moments and KS distance for fans or necklaces.
    Stats {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n_max: usize,
        /// `csv` or `-` for stdout, otherwise a file path.
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Ribbon-graph file.
    #[arg(long, conflicts_with_all = ["family", "n", "m"], required_unless_present = "family")]
    file: Option<PathBuf>,
    /// Family name; see `family --list`.
    #[arg(long, requires = "n")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Second parameter, used by `join_with_bm`.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
    /// Anchor edge for `--method recurrence`; the first non-bridge by default.
    #[arg(long)]
    edge: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumerate graphs above the default edge cap.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Every subset, genus from spanning-subgraph counts.
    Brute,
    /// Every subset, genus from the constructed partial dual.
    Construct,
    /// Family closed form.
    Closed,
    /// Deletion recurrence on one edge.
    Recurrence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MaxMethod {
    Brute,
    Xi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Suite {
    Props,
    Theorems,
    Families,
    Stats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Parse(String),
    Precondition(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Verification(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Verification(m) => m,
        }
    }
}

pub(crate) fn pre(e: impl std::fmt::Display) -> CliError {
    CliError::Precondition(e.to_string())
}

fn read_graph(path: &Path) -> Result<RibbonGraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    RibbonGraph::decode(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn family_spec(name: &str, n: Option<usize>, m: Option<usize>) -> Result<FamilySpec, CliError> {
    let n = n.ok_or_else(|| pre("--family needs --n"))?;
    FamilySpec::from_name(name, n, m).map_err(pre)
}

fn load(source: &Source) -> Result<(RibbonGraph, Option<FamilySpec>), CliError> {
    match (&source.file, &source.family) {
        (Some(path), _) => Ok((read_graph(path)?, None)),
        (None, Some(name)) => {
            let spec = family_spec(name, source.n, source.m)?;
            Ok((generate(&spec).map_err(pre)?, Some(spec)))
        }
        (None, None) => Err(pre("give --file or --family")),
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<String, CliError> {
    match out {
        Some(path) if path != Path::new("-") => {
            fs::write(path, text)
                .map_err(|e| pre(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        _ => Ok(text.to_string()),
    }
}

fn poly_output(p: &IntPolynomial, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Csv => {
            let mut out = String::from("genus,count\n");
            for (i, c) in p.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{i},{c}");
            }
            out
        }
        Format::Json => {
            let rows: Vec<String> = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{{\"genus\":{i},\"count\":{c}}}"))
                .collect();
            format!("[{}]\n", rows.join(","))
        }
    }
}

fn polynomial(args: &PolyArgs, euler: bool, opts: &EnumOptions) -> Result<IntPolynomial, CliError> {
    let (g, spec) = load(&args.source)?;
    let opts = EnumOptions {
        allow_large: args.allow_large,
        ..opts.clone()
    };
    let pdg = |method| pdg_polynomial(&g, method, &opts).map_err(pre);
    match (args.method, euler) {
        (Method::Brute, false) => pdg(GenusMethod::Formula),
        (Method::Construct, false) => pdg(GenusMethod::Construct),
        (Method::Brute | Method::Construct, true) => euler_polynomial(&g, &opts).map_err(pre),
        (Method::Closed, _) => {
            let spec = spec.ok_or_else(|| pre("--method closed needs --family"))?;
            if !euler {
                return closed_form_pdg(&spec).map_err(pre);
            }
            closed_form_euler(&spec).or_else(|_| {
                if spec.is_orientable() {
                    closed_form_pdg(&spec)
                        .map(|p| p.substitute_square())
                        .map_err(pre)
                } else {
                    Err(pre(format!(
                        "no closed form for the Euler polynomial of {spec}"
                    )))
                }
            })
        }
        (Method::Recurrence, false) => {
            let e = match args.edge {
                Some(e) => e,
                None => (0..g.edge_count())
                    .find(|&k| !g.is_bridge(k))
                    .ok_or_else(|| {
                        pre("--method recurrence needs an edge that is not a cut ribbon")
                    })?,
            };
            deletion_recurrence(&g, e, DeletionForm::Cycle).map_err(pre)
        }
        (Method::Recurrence, true) => Err(pre("--method recurrence applies to pdg only")),
    }
}

fn stats_output(rows: &[SuiteRow], format: Format) -> String {
    match format {
        Format::Csv => suite_csv(rows),
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let ks = r
                    .stats
                    .ks_to_normal
                    .map(|k| format!("{k:.10}"))
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    out,
                    "n={} mean={} variance={} ks={ks}",
                    r.n, r.stats.mean, r.stats.variance
                );
            }
            out
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|r| {
                    let ks = r.stats.ks_to_normal.map(|k| format!("{k:.10}")).unwrap_or_else(|| "null".into());
                    format!(
                        "{{\"n\":{},\"mean_num\":{},\"mean_den\":{},\"var_num\":{},\"var_den\":{},\"ks\":{ks}}}",
                        r.n,
                        r.stats.mean.numer(),
                        r.stats.mean.denom(),
                        r.stats.variance.numer(),
                        r.stats.variance.denom()
                    )
                })
                .collect();
            format!("[{}]\n", items.join(","))
        }
    }
}

fn run(cli: &Cli, opts: &EnumOptions) -> Result<String, CliError> {
    match &cli.verb {
        Verb::Pdg(args) => Ok(poly_output(&polynomial(args, false, opts)?, args.format)),
        Verb::Euler(args) => Ok(poly_output(&polynomial(args, true, opts)?, args.format)),
        Verb::Dual { file, subset, out } => {
            let g = read_graph(file)?;
            let a = EdgeSubset::parse_list(subset, g.edge_count())
                .map_err(|e| CliError::Parse(e.to_string()))?;
            write_out(out.as_deref(), &g.partial_dual(a).encode())
        }
        Verb::Maxgenus { source, method } => {
            let (g, _) = load(source)?;
            let method = match method {
                MaxMethod::Brute => MaxGenusMethod::Brute,
                MaxMethod::Xi => MaxGenusMethod::Xi,
            };
            Ok(format!(
                "{}\n",
                max_pd_genus(&g, method, opts).map_err(pre)?
            ))
        }
        Verb::Spectrum { source, euler } => {
            let (g, _) = load(source)?;
            let p = if *euler {
                euler_polynomial(&g, opts)
            } else {
                pdg_polynomial(&g, GenusMethod::Formula, opts)
            }
            .map_err(pre)?;
            Ok(format!("{}\n", p.spectrum()))
        }
        Verb::Family {
            family,
            n,
            m,
            out,
            list,
        } => {
            if *list {
                return Ok(FAMILY_NAMES.iter().map(|f| format!("{f}\n")).collect());
            }
            let spec = family_spec(family.as_deref().expect("required by clap"), *n, *m)?;
            let g = generate(&spec).map_err(pre)?;
            let text = format!("# {spec}\n{}", g.encode());
            write_out(out.as_deref(), &text)
        }
        Verb::Verify {
            suite,
            seed,
            trials,
            max_edges,
            format,
        } => verify::run_suite(*suite, *seed, *trials, *max_edges, *format),
        Verb::Stats {
            family,
            n_max,
            out,
            format,
        } => {
            let family: AsymptoticFamily = family.parse().map_err(pre)?;
            if *n_max == 0 {
                return Err(pre("--n-max must be at least 1"));
            }
            let text = stats_output(&asymptotic_suite(family, *n_max), *format);
            let target = (out != "csv").then(|| Path::new(out.as_str()));
            write_out(target, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        Some(n) => EnumOptions::with_threads(n),
        None => EnumOptions::default(),
    };
    let result = opts
        .install(|| run(&cli, &opts))
        .unwrap_or_else(|e| Err(pre(e)));
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Verification(report)) => {
            print!("{report}");
            ExitCode::from(5)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
