use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use chromatic_core::chromatic::DEFAULT_VERTEX_CAP;
use chromatic_core::oracle::{DEFAULT_COLOR_CAP, DEFAULT_ELEMENT_CAP};
use chromatic_core::sequence::{DEFAULT_PF_ORDER, DEFAULT_PF_PAD};
use chromatic_core::stirling::cache::TableCache;
use chromatic_core::{Engine, Error, Family, GraphSpec, Oracle, RecurrenceSpec, TriangleTable};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;
mod source;

const DEFAULT_ROW_CAP: usize = 400;

#[derive(Parser, Debug)]
#[command(
    name = "chromstir",
    version,
    about = "Exact chromatic polynomials, restricted Stirling triangles and their identities"
)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Largest graph accepted by deletion-contraction.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    pub cap_vertices: usize,

    /// Largest ground set the brute-force oracle will enumerate.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ELEMENT_CAP, global = true)]
    pub cap_oracle: usize,

    /// Largest triangle row that may be generated.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ROW_CAP, global = true)]
    pub cap_rows: usize,

    /// Seed for the randomized identity suites.
    #[arg(long, value_name = "N", default_value_t = 1, global = true)]
    pub seed: u64,

    /// Directory for cached triangles. Defaults to $CHROMSTIR_CACHE_DIR,
    /// then a `chromstir` directory under the system temp dir.
    #[arg(long, value_name = "DIR", global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the triangle cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial, falling-factorial coefficients and chromatic number.
    Poly {
        /// Graph expression such as `K(3)+O(2)` or `E(4;0-1,1-2)`.
        spec: String,
    },
    /// Falling-factorial coefficients alpha_0..alpha_n.
    Alpha {
        spec: String,
        #[arg(long, value_enum, default_value_t = AlphaMethod::Dc)]
        method: AlphaMethod,
    },
    /// Generate a triangle of Stirling-type numbers.
    Stirling {
        #[arg(value_enum)]
        family: FamilyName,
        /// Last row to generate.
        n: Option<usize>,
        #[command(flatten)]
        params: FamilyParams,
        /// Last row to generate (same as the positional N).
        #[arg(long, value_name = "N", conflicts_with = "n")]
        rows: Option<usize>,
    },
    /// Check an identity exhaustively over parameter ranges.
    Verify {
        /// Identity id (I1..I14, I2a, I6a, I12a), `all`, `catalog` or `amended`.
        id: String,
        /// Restrict the family identities to this r vector.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        r: Option<Vec<usize>>,
        /// Unrestricted elements added to |r|.
        #[arg(long, value_name = "N")]
        nmax: Option<usize>,
        /// Smaller ranges.
        #[arg(long)]
        quick: bool,
        /// Replace each literal identity by its amended form where one exists.
        #[arg(long)]
        use_amended: bool,
    },
    /// Decide a sequence property.
    Check {
        #[arg(value_enum)]
        property: PropertyName,
        #[command(flatten)]
        source: source::SourceArgs,
        /// Largest minor order for `pf`.
        #[arg(long, default_value_t = DEFAULT_PF_ORDER)]
        order: usize,
        /// Zero padding appended before building the Toeplitz matrix for `pf`.
        #[arg(long, default_value_t = DEFAULT_PF_PAD)]
        pad: usize,
        /// Use P_n^2 - P_{n-1} P_{n+1} >= 0 for `qlc`.
        #[arg(long)]
        reversed: bool,
    },
    /// Polynomials B(l; K_{n,r}) for n = 0..=nmax.
    Bell {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        r: Option<Vec<usize>>,
        #[arg(long, value_name = "N", default_value_t = 6)]
        nmax: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlphaMethod {
    /// Deletion-contraction, then basis conversion.
    Dc,
    /// Finite differences of the chromatic polynomial.
    Fd,
    /// Brute-force enumeration of independent partitions.
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Classical,
    R,
    Multi,
    K,
    T,
    U,
    V,
    W,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyParams {
    /// Comma-separated restriction vector.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub r: Option<Vec<usize>>,
    /// Parameter h of the u, v and w recurrences.
    #[arg(long)]
    pub h: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PropertyName {
    Lc,
    Pf,
    Qlc,
    Newton,
    Realroots,
}

/// Everything that ends a command early.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Core(Error::Json(e))
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Rendered output and whether the checked property held.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// Shared state built from the global flags.
pub struct Ctx {
    pub global: Global,
    pub engine: Engine,
    pub oracle: Oracle,
}

impl Ctx {
    fn new(global: Global) -> Self {
        Ctx {
            engine: Engine::with_cap(global.cap_vertices),
            oracle: Oracle {
                element_cap: global.cap_oracle,
                color_cap: DEFAULT_COLOR_CAP,
            },
            global,
        }
    }

    pub fn graph(&self, spec: &str) -> Result<chromatic_core::Graph, Failure> {
        let spec: GraphSpec = spec.parse()?;
        Ok(spec.to_graph()?)
    }

    fn cache(&self) -> Option<TableCache> {
        if self.global.no_cache {
            return None;
        }
        let dir = self
            .global
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("CHROMSTIR_CACHE_DIR").map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("chromstir"));
        Some(TableCache::new(dir))
    }

    /// Rows `0..=n_max` of `family`, through the cache when enabled.
    pub fn table(&self, family: &Family, n_max: usize) -> Result<TriangleTable, Failure> {
        if n_max > self.global.cap_rows {
            return Err(Error::CapExceeded {
                what: "triangle rows",
                value: n_max,
                cap: self.global.cap_rows,
            }
            .into());
        }
        let table = match self.cache() {
            Some(cache) => cache.load_or_generate_with(family, n_max, &self.engine)?,
            None => TriangleTable::generate_with(family, n_max, &self.engine)?,
        };
        Ok(table)
    }
}

/// Builds the family named on the command line from its parameters.
pub fn family(name: FamilyName, params: &FamilyParams) -> Result<Family, Failure> {
    let r = params.r.clone();
    let no_h = |f: Family| -> Result<Family, Failure> {
        if params.h.is_some() {
            return Err(usage(format!("family {} takes no --h", f.name())));
        }
        Ok(f)
    };
    let need_r = || r.clone().ok_or_else(|| usage("this family needs --r"));
    let custom = |make: fn(i64) -> RecurrenceSpec| -> Result<Family, Failure> {
        if r.is_some() {
            return Err(usage("families u, v and w take --h, not --r"));
        }
        Ok(Family::Custom(make(params.h.unwrap_or(1))))
    };
    match name {
        FamilyName::Classical => match r {
            Some(_) => Err(usage("family classical takes no --r")),
            None => no_h(Family::Classical),
        },
        FamilyName::R => match need_r()?.as_slice() {
            [r] => no_h(Family::R(*r)),
            _ => Err(usage("family r takes a single value, e.g. --r 2")),
        },
        FamilyName::Multi => no_h(Family::MultiR(need_r()?)),
        FamilyName::K => no_h(Family::K(need_r()?)),
        FamilyName::T => no_h(Family::T(need_r()?)),
        FamilyName::U => custom(RecurrenceSpec::u),
        FamilyName::V => custom(RecurrenceSpec::v),
        FamilyName::W => custom(RecurrenceSpec::w),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let ctx = Ctx::new(cli.global);
    match cli.command {
        Command::Poly { spec } => commands::poly(&ctx, &spec),
        Command::Alpha { spec, method } => commands::alpha(&ctx, &spec, method),
        Command::Stirling { family: name, n, params, rows } => {
            let n_max = n.or(rows).ok_or_else(|| usage("give the last row as N or --rows N"))?;
            commands::stirling(&ctx, &family(name, &params)?, n_max)
        }
        Command::Verify { id, r, nmax, quick, use_amended } => {
            commands::verify(&ctx, &id, r, nmax, quick, use_amended)
        }
        Command::Check { property, source, order, pad, reversed } => {
            commands::check(&ctx, property, &source, order, pad, reversed)
        }
        Command::Bell { r, nmax } => commands::bell(&ctx, &r.unwrap_or_default(), nmax),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// Runs a parsed command line, writes its output and returns the exit code.
fn execute(cli: Cli) -> u8 {
    let out = cli.global.out.clone();
    match run(cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&out, &outcome.text) {
                eprintln!("error: {e}");
                return 2;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(execute(Cli::parse()))
}
