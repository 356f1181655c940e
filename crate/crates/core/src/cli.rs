//! The `rschur` command line.
//!
//! Exit codes: 0 success, 1 the checked property is false, 2 domain error,
//! 3 budget exhausted or formula/search mismatch, 64 usage error, 65 bad
//! input file, 74 output file could not be written.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coloring::{
    construct_rainbow_lower, construct_weak_lower, has_t_colored_solution, max_solution_colors,
    parse_coloring, Coloring,
};
use crate::error::Error;
use crate::numbers::{evaluate, ProblemParams};
use crate::oracle::{ColoringSearch, RsSearch, SearchBudget, DEFAULT_MAX_NODES};
use crate::solutions::enumerate_solutions;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_IO: i32 = 74;

/// Overrides the default `--max-nodes`.
pub const MAX_NODES_ENV: &str = "RSCHUR_MAX_NODES";

#[derive(Debug, Parser)]
#[command(
    name = "rschur",
    version,
    about = "Rainbow Schur numbers for x_1 + ... + x_{m-1} = x_m"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the closed form for RS_{t,m}(n)
    Formula(Instance),
    /// Compute RS_{t,m}(n) by exhaustive search
    Search {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the witness coloring (value - 1 colors) here as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare formula and search over a range of n
    Verify {
        #[arg(long)]
        m: u64,
        /// Colors required on a solution; defaults to m (rainbow)
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        n_from: u64,
        #[arg(long)]
        n_to: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Write each row's witness coloring into this directory
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build the extremal block coloring with formula - 1 colors
    Construct {
        #[command(flatten)]
        instance: Instance,
        /// Write the coloring here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the solutions carried by a coloring file (JSON or one text row; `-` for stdin)
    Check {
        coloring: PathBuf,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: Option<u64>,
    },
    /// List the solutions of E_m in [1, n]
    Solutions {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Only solutions with pairwise distinct values
        #[arg(long)]
        distinct: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Instance {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    /// Colors required on a solution; defaults to m (rainbow)
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Node limit across the whole search [default: 100000000, or $RSCHUR_MAX_NODES]
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Wall-clock limit in seconds
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

impl BudgetArgs {
    fn resolve(&self) -> Result<SearchBudget, Failure> {
        let max_nodes = match self.max_nodes {
            Some(n) => n,
            None => match std::env::var(MAX_NODES_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| {
                    Failure::usage(format!("{MAX_NODES_ENV} must be a non-negative integer (got {v:?})"))
                })?,
                Err(_) => DEFAULT_MAX_NODES,
            },
        };
        let time_limit = match self.time_limit {
            Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Failure::usage(format!("--time-limit must be non-negative (got {s})"))),
            None => None,
        };
        if self.threads == 0 {
            return Err(Failure::usage("--threads must be at least 1"));
        }
        Ok(SearchBudget {
            max_nodes,
            time_limit,
            threads: self.threads,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// One line of `verify` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub m: u64,
    pub t: u64,
    pub n: u64,
    pub formula_value: Option<u64>,
    pub search_value: Option<u64>,
    pub agree: bool,
    pub witness_path: Option<String>,
    pub nodes: u64,
    pub millis: u64,
    /// `ok`, `mismatch`, `no-formula` or `budget`.
    pub status: String,
}

impl VerificationRow {
    /// Rows whose closed form is known take part in the exit status.
    pub fn in_domain(&self) -> bool {
        self.formula_value.is_some()
    }

    pub fn passed(&self) -> bool {
        self.status != "budget" && (!self.in_domain() || self.agree)
    }

    pub fn tsv(&self) -> String {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.m,
            self.t,
            self.n,
            opt(self.formula_value),
            opt(self.search_value),
            self.agree,
            self.nodes,
            self.millis
        )
    }

    pub fn json(&self) -> String {
        // serde_json::Value keeps object keys sorted
        serde_json::to_value(self)
            .expect("plain struct serializes")
            .to_string()
    }
}

pub const TSV_HEADER: &str = "m\tt\tn\tformula\tsearch\tagree\tnodes\tmillis";

/// A command's failure: message plus exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Parse(_) => EXIT_PARSE,
            Error::Domain(_)
            | Error::UnsupportedM { .. }
            | Error::OutsideTheoremDomain { .. }
            | Error::EmptyInput
            | Error::Overflow(_) => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parse `args` (including the program name) and run the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "rschur: {}", failure.message);
            failure.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Formula(instance) => cmd_formula(instance, out),
        Command::Search {
            instance,
            budget,
            out: path,
        } => cmd_search(instance, budget.resolve()?, path.as_deref(), out),
        Command::Verify {
            m,
            t,
            n_from,
            n_to,
            format,
            witness_dir,
            budget,
        } => cmd_verify(
            m,
            t,
            n_from,
            n_to,
            format,
            witness_dir.as_deref(),
            budget.resolve()?,
            out,
        ),
        Command::Construct {
            instance,
            out: path,
        } => cmd_construct(instance, path.as_deref(), out),
        Command::Check { coloring, m, t } => cmd_check(&coloring, m, t, out),
        Command::Solutions { m, n, distinct } => cmd_solutions(m, n, distinct, out),
    }
}

fn params(m: u64, t: Option<u64>, n: u64) -> Result<ProblemParams, Failure> {
    Ok(ProblemParams::new(m, t.unwrap_or(m), n)?)
}

fn label(p: &ProblemParams) -> String {
    if p.is_rainbow() {
        format!("RS_{}({})", p.m(), p.n())
    } else {
        format!("RS_{{{},{}}}({})", p.t(), p.m(), p.n())
    }
}

fn small(p: &ProblemParams) -> Result<(usize, usize, u32), Failure> {
    let n = u32::try_from(p.n())
        .map_err(|_| Failure::from(Error::Domain(format!("n = {} is too large to search", p.n()))))?;
    Ok((p.m() as usize, p.t() as usize, n))
}

fn write_coloring(path: &Path, c: &Coloring) -> Result<(), Failure> {
    fs::write(path, c.to_json() + "\n").map_err(|e| Failure::io(path, e))
}

/// No closed form is known for `t = 2` below `n = 2m - 4`.
fn exploratory(p: &ProblemParams) -> bool {
    matches!(evaluate(p), Err(Error::OutsideTheoremDomain { .. }))
}

fn cmd_formula(instance: Instance, out: &mut dyn Write) -> Outcome {
    let p = params(instance.m, instance.t, instance.n)?;
    let (value, kind) = evaluate(&p)?;
    writeln!(out, "{} = {value}", label(&p))?;
    writeln!(out, "method: formula")?;
    writeln!(out, "formula: {}", kind.describe())?;
    Ok(EXIT_OK)
}

fn run_search(p: &ProblemParams, budget: &SearchBudget) -> Result<RsSearch, Failure> {
    let (m, t, n) = small(p)?;
    Ok(ColoringSearch::new(m, t, n)?.min_colors(budget)?)
}

fn cmd_search(
    instance: Instance,
    budget: SearchBudget,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let p = params(instance.m, instance.t, instance.n)?;
    let found = run_search(&p, &budget)?;
    match found.number.value {
        Some(v) => writeln!(out, "{} = {v}", label(&p))?,
        None => writeln!(
            out,
            "{} = none (no solution of E_{} in [1, {}] carries {} colors)",
            label(&p),
            p.m(),
            p.n(),
            p.t()
        )?,
    }
    writeln!(out, "method: search")?;
    if exploratory(&p) {
        writeln!(out, "note: exploratory, no closed form is known for this n")?;
    }
    if let Some(w) = &found.number.witness {
        writeln!(out, "witness ({} colors): {}", w.r(), w.class_summary())?;
        if let Some(path) = path {
            write_coloring(path, w)?;
            writeln!(out, "witness written to {}", path.display())?;
        }
    }
    writeln!(out, "nodes: {}", found.nodes_explored)?;
    writeln!(out, "elapsed_ms: {}", found.elapsed.as_millis())?;
    Ok(EXIT_OK)
}

/// Formula and search values for one instance, plus the search witness.
/// `witness_path` is left empty.
pub fn verification_row(
    p: &ProblemParams,
    budget: &SearchBudget,
) -> crate::Result<(VerificationRow, Option<Coloring>)> {
    let formula_value = evaluate(p).ok().map(|(v, _)| v);
    let mut row = VerificationRow {
        m: p.m(),
        t: p.t(),
        n: p.n(),
        formula_value,
        search_value: None,
        agree: false,
        witness_path: None,
        nodes: 0,
        millis: 0,
        status: String::new(),
    };
    let n = u32::try_from(p.n()).map_err(|_| Error::Domain(format!("n = {} is too large", p.n())))?;
    let mut witness = None;
    let searched = ColoringSearch::new(p.m() as usize, p.t() as usize, n)
        .and_then(|s| s.min_colors(budget));
    match searched {
        Ok(found) => {
            row.search_value = found.number.value;
            row.nodes = found.nodes_explored;
            row.millis = found.elapsed.as_millis() as u64;
            row.agree = formula_value.is_some() && formula_value == row.search_value;
            witness = found.number.witness;
            row.status = match (formula_value, row.agree) {
                (None, _) => "no-formula",
                (Some(_), true) => "ok",
                (Some(_), false) => "mismatch",
            }
            .into();
        }
        Err(Error::BudgetExceeded { nodes, elapsed, .. }) => {
            row.nodes = nodes;
            row.millis = elapsed.as_millis() as u64;
            row.status = "budget".into();
        }
        Err(e) => return Err(e),
    }
    Ok((row, witness))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    m: u64,
    t: Option<u64>,
    n_from: u64,
    n_to: u64,
    format: Format,
    witness_dir: Option<&Path>,
    budget: SearchBudget,
    out: &mut dyn Write,
) -> Outcome {
    if n_from < 1 || n_from > n_to {
        return Err(Failure::usage(format!(
            "need 1 <= --n-from <= --n-to (got {n_from}..{n_to})"
        )));
    }
    // validate m and t once, before any row
    params(m, t, n_from)?;
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    }
    if format == Format::Tsv {
        writeln!(out, "{TSV_HEADER}")?;
    }
    let mut all_passed = true;
    for n in n_from..=n_to {
        let p = params(m, t, n)?;
        let (mut row, witness) = verification_row(&p, &budget)?;
        if let (Some(dir), Some(w)) = (witness_dir, witness) {
            let path = dir.join(format!("witness_m{}_t{}_n{}.json", p.m(), p.t(), p.n()));
            write_coloring(&path, &w)?;
            row.witness_path = Some(path.display().to_string());
        }
        all_passed &= row.passed();
        match format {
            Format::Tsv => writeln!(out, "{}", row.tsv())?,
            Format::Json => writeln!(out, "{}", row.json())?,
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_BUDGET })
}

fn cmd_construct(instance: Instance, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let p = params(instance.m, instance.t, instance.n)?;
    let (value, _) = evaluate(&p)?;
    let coloring = if p.is_rainbow() {
        construct_rainbow_lower(p.m(), p.n())?
    } else {
        construct_weak_lower(p.t(), p.m(), p.n())?
    };
    if let Some(sol) = has_t_colored_solution(&coloring, p.m() as usize, p.t() as usize)? {
        return Err(Failure {
            code: EXIT_FALSE,
            message: format!(
                "self-check failed: the constructed coloring carries {} colors on {sol}",
                p.t()
            ),
        });
    }
    writeln!(out, "{} = {value}", label(&p))?;
    writeln!(out, "colors: {} (= {value} - 1)", coloring.r())?;
    writeln!(out, "classes: {}", coloring.class_summary())?;
    match path {
        Some(path) => {
            write_coloring(path, &coloring)?;
            writeln!(out, "written to {}", path.display())?;
        }
        None => writeln!(out, "{}", coloring.to_json())?,
    }
    Ok(EXIT_OK)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|s| text = s)
    };
    res.map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(text)
}

fn cmd_check(path: &Path, m: u64, t: Option<u64>, out: &mut dyn Write) -> Outcome {
    let text = read_input(path)?;
    let coloring = parse_coloring(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    let p = params(m, t, u64::from(coloring.n()))?;
    let (m, t) = (p.m() as usize, p.t() as usize);
    let best = max_solution_colors(&coloring, m, None)?;
    writeln!(out, "n: {}", coloring.n())?;
    writeln!(out, "colors: {}", coloring.r())?;
    writeln!(out, "surplus integers: {}", coloring.surplus_count())?;
    writeln!(out, "max colors over solutions: {}", best.colors)?;
    match has_t_colored_solution(&coloring, m, t)? {
        Some(sol) => {
            writeln!(out, "solution with at least {t} colors: {sol}")?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "no solution with at least {t} colors")?;
            Ok(EXIT_FALSE)
        }
    }
}

fn cmd_solutions(m: u64, n: u64, distinct: bool, out: &mut dyn Write) -> Outcome {
    let n = u32::try_from(n).map_err(|_| Failure::from(Error::Domain(format!("n = {n} is too large"))))?;
    let mut count = 0u64;
    for sol in enumerate_solutions(m as usize, n, distinct)? {
        writeln!(out, "{sol}")?;
        count += 1;
    }
    writeln!(out, "count: {count}")?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rschur").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["formula", "--m", "x", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("search"));
        assert_eq!(
            run_args(&["verify", "--m", "4", "--n-from", "9", "--n-to", "6"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["search", "--m", "4", "--n", "6", "--threads", "0"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn row_status() {
        let budget = SearchBudget::default();
        let p = ProblemParams::new(6, 2, 6).unwrap();
        let (row, _) = verification_row(&p, &budget).unwrap();
        assert_eq!(row.formula_value, None);
        assert_eq!(row.search_value, Some(4));
        assert!(!row.agree && row.passed());
        assert_eq!(row.status, "no-formula");
        let p = ProblemParams::new(4, 4, 9).unwrap();
        let (row, _) = verification_row(&p, &budget).unwrap();
        assert!(row.agree && row.passed());
        assert_eq!(row.tsv().split('\t').count(), 8);
        let tight = SearchBudget {
            max_nodes: 0,
            ..budget
        };
        let p = ProblemParams::new(3, 3, 24).unwrap();
        let (row, _) = verification_row(&p, &tight).unwrap();
        assert_eq!(row.status, "budget");
        assert!(!row.passed());
    }

    #[test]
    fn json_keys_sorted() {
        let p = ProblemParams::new(4, 4, 6).unwrap();
        let (row, _) = verification_row(&p, &SearchBudget::default()).unwrap();
        let json = row.json();
        let keys: Vec<_> = [
            "agree",
            "formula_value",
            "m",
            "millis",
            "n",
            "nodes",
            "search_value",
            "status",
            "t",
            "witness_path",
        ]
        .iter()
        .map(|k| json.find(&format!("\"{k}\"")).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{json}");
    }
}
