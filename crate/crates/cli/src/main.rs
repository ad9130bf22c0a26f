//! Command-line front end. Subcommands expose the expansion of a product of
//! factorial Schur polynomials into ordinary Schur polynomials, single
//! coefficients, tableau enumeration, single-partition change of basis, and
//! the verification suites.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! output. Exit codes: 0 success, 1 verification or consistency failure,
//! 2 usage error (malformed input).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use facschur::basis::{c_coeff_det, complement, d_coeff_det, d_coeff_dual, d_coeff_tableau, sub_partitions};
use facschur::lr::{enumerate_lr_tableaux, lr_coefficient, lr_expand, oracle_coefficient, oracle_expand};
use facschur::tableau::enumerate_barred;
use facschur::verify::{
    basis_suite, cancellation_suite, compose_suite, involution_suite, lemma3_suite,
    partitions_up_to, theorem_suite, SuiteReport,
};
use facschur::{CoeffTable, Error, MultiShape, Partition, Polynomial, VarId};

#[derive(Parser)]
#[command(
    name = "facschur",
    version,
    about = "Exact expansion of products of factorial Schur polynomials, \
             with tableau enumeration, change of basis, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand the product over a shape into ordinary Schur polynomials
    Expand(ExpandArgs),
    /// Print one expansion coefficient as a polynomial in the shift variables
    Coeff(CoeffArgs),
    /// Enumerate barred fillings of a shape, one JSON object per line
    Tableaux(TableauxArgs),
    /// Expand one partition between the Schur and factorial Schur bases
    #[command(name = "change-basis")]
    ChangeBasis(ChangeBasisArgs),
    /// Run a verification suite and report pass/fail counts
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Args)]
struct ExpandArgs {
    /// Shape as a JSON list of partitions, first diagram top-right, e.g. "[[2,1],[1,1]]"
    #[arg(long)]
    shape: String,
    /// Number of x variables
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Recompute every entry from the alternant oracle; exit 1 on mismatch
    #[arg(long)]
    check: bool,
    /// "y<f>=0" zeroes shift family f; "y<f>_<j>=<int>" sets one variable
    #[arg(long)]
    specialize: Vec<String>,
}

#[derive(Args)]
struct CoeffArgs {
    /// Shape as a JSON list of partitions, e.g. "[[2,1],[1,1]]"
    #[arg(long)]
    shape: String,
    /// Target partition as a JSON array, e.g. "[2,2]"
    #[arg(long)]
    mu: String,
    /// Number of x variables
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Recompute the coefficient from the alternant oracle; exit 1 on mismatch
    #[arg(long)]
    check: bool,
    /// "y<f>=0" zeroes shift family f; "y<f>_<j>=<int>" sets one variable
    #[arg(long)]
    specialize: Vec<String>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["all", "lr"]))]
struct TableauxArgs {
    /// Shape as a JSON list of partitions
    #[arg(long)]
    shape: String,
    /// Number of values (entries run over 1..=n, barred or plain)
    #[arg(long)]
    n: usize,
    /// Enumerate every barred filling of the shape
    #[arg(long)]
    all: bool,
    /// Only fillings whose unbarred column word is a Yamanouchi word
    #[arg(long)]
    lr: bool,
    /// With --lr: restrict to fillings of this unbarred content
    #[arg(long)]
    mu: Option<String>,
    /// Draw each tableau as ASCII art instead of JSON
    #[arg(long)]
    render: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Coefficients of ordinary Schur polynomials in one factorial Schur polynomial
    FactorialToSchur,
    /// Coefficients of factorial Schur polynomials in one ordinary Schur polynomial
    SchurToFactorial,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Jacobi-Trudi style determinant in truncated e or h polynomials
    Det,
    /// Complement both partitions in a rectangle and reuse the opposite determinant
    Dual,
    /// Weighted tableau enumeration
    Tableau,
}

#[derive(Args)]
struct ChangeBasisArgs {
    /// Single partition as a JSON array, e.g. "[2,1]" (a singleton list also works)
    #[arg(long)]
    shape: String,
    /// Number of x variables
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    direction: Direction,
    #[arg(long, value_enum, default_value_t = Method::Det)]
    method: Method,
    /// Rectangle width for the dual method (default: smallest admissible)
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Recompute every entry by the other two methods; exit 1 on mismatch
    #[arg(long)]
    check: bool,
    /// "y<f>=0" zeroes shift family f; "y<f>_<j>=<int>" sets one variable
    #[arg(long)]
    specialize: Vec<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Value-swap involutions: validity, weight, self-inverse, decomposition independence
    Involutions,
    /// Sign-reversing pairing on non-Yamanouchi fillings and its symbolic cancellation
    Cancellation,
    /// Weighted filling sums rebuild the product, in monomial and alternant form
    Lemma3,
    /// Tableau-rule expansion equals the alternant oracle on the whole envelope
    Theorem,
    /// Change-of-basis identities plus the composed two-diagram evaluation
    Basis,
    /// Every suite above, in order
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest total box count for enumerated shapes
    #[arg(long, default_value_t = 6)]
    max_boxes: u32,
    /// Largest partition size for the basis sweep
    #[arg(long, default_value_t = 4)]
    max_size: u32,
    /// Number of x variables (upper bound for the sweeps)
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Seed for the randomized phases of the involution and cancellation suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Failure route: usage errors exit 2, consistency failures exit 1.
enum Failure {
    Usage(String),
    Inconsistent(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            // an inadmissible rectangle is a consistency problem, not a syntax one
            Error::RectangleTooNarrow { .. } => Failure::Inconsistent(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Expand(a) => cmd_expand(a),
        Cmd::Coeff(a) => cmd_coeff(a),
        Cmd::Tableaux(a) => cmd_tableaux(a),
        Cmd::ChangeBasis(a) => cmd_change_basis(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    Ok(())
}

fn parse_json(s: &str) -> Result<serde_json::Value, Failure> {
    serde_json::from_str(s).map_err(|_| usage(format!("not valid JSON: {s}")))
}

/// A shape argument: JSON list of partitions, outermost first.
fn parse_shape(s: &str) -> Result<MultiShape, Failure> {
    let v = parse_json(s)?;
    let arr = v
        .as_array()
        .ok_or_else(|| usage(format!("shape must be a JSON list of partitions: {s}")))?;
    let diagrams = arr
        .iter()
        .map(Partition::from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultiShape::new(diagrams))
}

/// A partition argument: JSON array of weakly decreasing integers.
fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let v = parse_json(s)?;
    Ok(Partition::from_json(&v)?)
}

/// change-basis takes one partition; accept "[2,1]" or the singleton "[[2,1]]".
fn parse_single_partition(s: &str) -> Result<Partition, Failure> {
    let v = parse_json(s)?;
    if let Some(arr) = v.as_array() {
        if arr.len() == 1 && arr[0].is_array() {
            return Ok(Partition::from_json(&arr[0])?);
        }
    }
    Ok(Partition::from_json(&v)?)
}

/// One y-specialization from the command line.
enum SpecOp {
    ZeroFamily(u32),
    Assign(VarId, BigInt),
}

fn parse_specialize(args: &[String]) -> Result<Vec<SpecOp>, Failure> {
    let mut ops = Vec::new();
    for s in args {
        let (lhs, rhs) = s
            .split_once('=')
            .ok_or_else(|| usage(format!("specialize: expected <var>=<int>, got {s:?}")))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if let Ok(v) = VarId::parse(lhs) {
            if v.is_x() {
                return Err(usage(format!("specialize: only y variables can be set ({lhs})")));
            }
            let value: BigInt = rhs
                .parse()
                .map_err(|_| usage(format!("specialize: {rhs:?} is not an integer")))?;
            ops.push(SpecOp::Assign(v, value));
            continue;
        }
        let family = lhs
            .strip_prefix('y')
            .and_then(|t| t.parse::<u32>().ok())
            .filter(|&f| f > 0)
            .ok_or_else(|| usage(format!("specialize: bad variable {lhs:?}")))?;
        if rhs != "0" {
            return Err(usage(format!(
                "specialize: a whole family can only be zeroed (y{family}=0)"
            )));
        }
        ops.push(SpecOp::ZeroFamily(family));
    }
    Ok(ops)
}

fn apply_specializations(p: &Polynomial, ops: &[SpecOp]) -> Polynomial {
    let mut out = p.clone();
    for op in ops {
        out = match op {
            SpecOp::ZeroFamily(f) => out.zero_y_family(*f),
            SpecOp::Assign(v, value) => out.assign_var(*v, value),
        };
    }
    out
}

fn print_poly(p: &Polynomial, format: Format) {
    match format {
        Format::Plain => println!("{p}"),
        Format::Latex => println!("{}", p.to_latex()),
        Format::Json => println!("{}", p.to_json()),
    }
}

/// Prints a coefficient table. `letter` labels the rows in text formats;
/// `basis` (when given) is added to the JSON document.
fn print_table(table: &CoeffTable, format: Format, letter: char, basis: Option<&str>) {
    match format {
        Format::Plain => {
            for (mu, poly) in table.iter() {
                println!("{letter}{mu} = {poly}");
            }
        }
        Format::Latex => {
            for (mu, poly) in table.iter() {
                let label = if mu.is_empty() {
                    "\\emptyset".to_string()
                } else {
                    mu.to_string()
                };
                println!("{letter}^{{{label}}} = {}", poly.to_latex());
            }
        }
        Format::Json => {
            let mut v = table.to_json();
            if let Some(b) = basis {
                v["basis"] = b.into();
            }
            println!("{v}");
        }
    }
}

fn cmd_expand(a: ExpandArgs) -> Result<ExitCode, Failure> {
    check_n(a.n)?;
    let shape = parse_shape(&a.shape)?;
    let ops = parse_specialize(&a.specialize)?;
    let table = lr_expand(&shape, a.n)?;
    let emitted = if ops.is_empty() {
        table.clone()
    } else {
        table.map_polys(|p| apply_specializations(p, &ops))
    };
    print_table(&emitted, a.format, 'c', None);
    if a.check && oracle_expand(&shape, a.n)? != table {
        eprintln!("check failed: tableau expansion disagrees with the alternant oracle");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_coeff(a: CoeffArgs) -> Result<ExitCode, Failure> {
    check_n(a.n)?;
    let shape = parse_shape(&a.shape)?;
    let mu = parse_partition(&a.mu)?;
    let ops = parse_specialize(&a.specialize)?;
    // a target with more rows than variables indexes the zero polynomial
    let poly = if mu.fits_rows(a.n) {
        lr_coefficient(&shape, &mu, a.n)?
    } else {
        Polynomial::zero()
    };
    print_poly(&apply_specializations(&poly, &ops), a.format);
    if a.check && mu.fits_rows(a.n) && oracle_coefficient(&shape, &mu, a.n)? != poly {
        eprintln!("check failed: coefficient at {mu} disagrees with the alternant oracle");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tableaux(a: TableauxArgs) -> Result<ExitCode, Failure> {
    check_n(a.n)?;
    let shape = parse_shape(&a.shape)?;
    let n32 = u32::try_from(a.n).map_err(|_| usage("--n is too large"))?;
    let list = if a.all {
        if a.mu.is_some() {
            return Err(usage("--mu only applies together with --lr"));
        }
        enumerate_barred(&shape, n32)
    } else {
        match &a.mu {
            Some(text) => {
                let mu = parse_partition(text)?;
                if mu.fits_rows(a.n) {
                    enumerate_lr_tableaux(&shape, &mu, a.n)?
                } else {
                    Vec::new()
                }
            }
            None => {
                // every admissible content, contents in lexicographic order
                let mut contents = partitions_up_to(shape.total_boxes(), a.n);
                contents.sort();
                let mut out = Vec::new();
                for mu in &contents {
                    out.extend(enumerate_lr_tableaux(&shape, mu, a.n)?);
                }
                out
            }
        }
    };
    for t in &list {
        if a.render {
            print!("{}", t.render_ascii());
            println!();
        } else {
            println!("{}", t.to_json());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_change_basis(a: ChangeBasisArgs) -> Result<ExitCode, Failure> {
    check_n(a.n)?;
    let lambda = parse_single_partition(&a.shape)?;
    if !lambda.fits_rows(a.n) {
        return Err(Error::TooManyParts { parts: lambda.len(), n: a.n }.into());
    }
    let ops = parse_specialize(&a.specialize)?;
    let family = 1;
    let compute = |mu: &Partition, method: Method| -> Result<Polynomial, Error> {
        match (a.direction, method) {
            (Direction::FactorialToSchur, Method::Det) => c_coeff_det(&lambda, mu, a.n, family),
            (Direction::FactorialToSchur, Method::Tableau) => {
                lr_coefficient(&MultiShape::single(lambda.clone()), mu, a.n)
            }
            (Direction::FactorialToSchur, Method::Dual) => {
                // complement both partitions, evaluate the opposite determinant
                // in the rectangle, and negate the shift variables
                let needed = lambda.first().max(mu.first());
                let m = a.m.unwrap_or(needed);
                if m < needed {
                    return Err(Error::RectangleTooNarrow { m, needed });
                }
                let lc = complement(&lambda, a.n, m)?;
                let mc = complement(mu, a.n, m)?;
                Ok(d_coeff_det(&mc, &lc, m as usize, family)?.negate_y_family(family))
            }
            (Direction::SchurToFactorial, Method::Det) => d_coeff_det(&lambda, mu, a.n, family),
            (Direction::SchurToFactorial, Method::Dual) => {
                d_coeff_dual(&lambda, mu, a.n, a.m, family)
            }
            (Direction::SchurToFactorial, Method::Tableau) => {
                d_coeff_tableau(&lambda, mu, a.n, a.m, family)
            }
        }
    };
    let candidates = sub_partitions(&lambda);
    let mut table = CoeffTable::new(MultiShape::single(lambda.clone()), a.n);
    for mu in &candidates {
        table.insert(mu.clone(), compute(mu, a.method)?);
    }
    let emitted = if ops.is_empty() {
        table.clone()
    } else {
        table.map_polys(|p| apply_specializations(p, &ops))
    };
    let (letter, basis) = match a.direction {
        Direction::FactorialToSchur => ('c', "schur"),
        Direction::SchurToFactorial => ('d', "factorial"),
    };
    print_table(&emitted, a.format, letter, Some(basis));
    if a.check {
        for other in [Method::Det, Method::Dual, Method::Tableau] {
            if other == a.method {
                continue;
            }
            for mu in &candidates {
                if compute(mu, other)? != table.coefficient(mu) {
                    eprintln!("check failed: methods disagree at {mu}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    check_n(a.n)?;
    let involutions = || involution_suite(a.max_boxes, 2, a.n, a.seed);
    let cancellation = || cancellation_suite(a.max_boxes, 2, a.n, a.seed);
    let lemma3 = || lemma3_suite(a.max_boxes, 3, a.n);
    let theorem = || theorem_suite(a.max_boxes, 3, a.n);
    let basis = || basis_suite(a.max_size, a.n, 6);
    let compose = || compose_suite(a.max_boxes, a.n, a.max_boxes.min(5), a.n.min(2));
    let reports: Vec<SuiteReport> = match a.suite {
        Suite::Involutions => vec![involutions()],
        Suite::Cancellation => vec![cancellation()],
        Suite::Lemma3 => vec![lemma3()],
        Suite::Theorem => vec![theorem()],
        Suite::Basis => vec![basis(), compose()],
        Suite::All => vec![
            involutions(),
            cancellation(),
            lemma3(),
            theorem(),
            basis(),
            compose(),
        ],
    };
    let mut all_ok = true;
    for report in &reports {
        println!("{report}");
        all_ok &= report.ok();
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
