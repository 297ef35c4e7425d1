//! Command implementations behind the `splinequad` binary. Each command
//! renders its full output into a `String` so it can be tested without a
//! process boundary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use splinequad::convergence::{fmt_sci, reference_table};
use splinequad::peano::PieceIntegrals;
use splinequad::quadrature::{extrapolated_qs_dd, simpson_dd, simpson_rule};
use splinequad::summation::DoubleDouble;
use splinequad::{
    build_qi_rule_with, builtin, oracle_integral, weight_bound_report, Integrand, MomentFormula,
    Partition, PeanoKernel, QuasiInterpolant,
};

const EXPRESSION_HELP: &str = "\
Integrands:
  f1, f2, f3       built-in test integrands with known integrals
                   (f1 = 16 x^(3/2) sin(x^2) on [0,1],
                    f2 = 1/((x-0.3)^2+0.01) + 0.8/((x-0.7)^2+0.04) on [0,1],
                    f3 = 1/(1+16 x^2) on [-1,1])
  expr:<text>      an expression in the variable x

Expression syntax:
  numbers          3, 0.25, 1e-3, .5
  variable         x
  operators        + - * / ^   (^ binds tightest and is right-associative;
                                unary minus binds looser than ^, so -x^2 = -(x^2))
  functions        sin cos exp log sqrt abs
  grouping         ( )

Example: --fn 'expr:exp(-(x^2))*cos(3*x)'";

#[derive(Debug, Parser)]
#[command(
    name = "splinequad",
    version,
    about = "Quadrature from a quadratic spline quasi-interpolant, with Simpson and extrapolated comparisons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate a function with the QI, Simpson or extrapolated rule
    #[command(after_help = EXPRESSION_HELP)]
    Integrate(IntegrateArgs),
    /// Recompute one of the reference error tables
    Table(TableArgs),
    /// Sample the Peano kernel of the uniform QI rule on [0,1]
    Kernel(KernelArgs),
    /// Estimate the sup-norm of the quasi-interpolant on a partition
    Lebesgue(LebesgueArgs),
    /// Dump the nodes and weights of a rule as CSV
    Weights(WeightsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleChoice {
    Qi,
    Simpson,
    Qs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MomentChoice {
    /// Integrals of the B-splines (exact on quadratics)
    Exact,
    /// Steplength approximation of the B-spline integrals
    Simplified,
}

impl From<MomentChoice> for MomentFormula {
    fn from(m: MomentChoice) -> Self {
        match m {
            MomentChoice::Exact => MomentFormula::Exact,
            MomentChoice::Simplified => MomentFormula::Simplified,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionArgs {
    /// uniform, chebyshev, or file:<path> (one knot per line, '#' comments)
    #[arg(long, default_value = "uniform")]
    pub partition: String,
    /// Left end of the interval
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Right end of the interval
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Number of subintervals [default: 64, or the file's count]
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct IntegrateArgs {
    /// f1, f2, f3 or expr:<text>
    #[arg(long = "fn", value_name = "FN")]
    pub function: String,
    #[arg(long, value_enum, default_value_t = RuleChoice::Qi)]
    pub rule: RuleChoice,
    #[arg(long, value_enum, default_value_t = MomentChoice::Exact)]
    pub moments: MomentChoice,
    /// Also integrate adaptively and report the error against that reference
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub partition: PartitionArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Reference example 1, 2 or 3
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub example: u8,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    /// Number of uniform subintervals of [0,1], at least 5
    #[arg(long)]
    pub n: usize,
    /// Number of sample intervals; emits samples + 1 rows
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LebesgueArgs {
    #[command(flatten)]
    pub partition: PartitionArgs,
    #[arg(long, default_value_t = 64)]
    pub samples_per_interval: usize,
}

#[derive(Debug, Clone, Args)]
pub struct WeightsArgs {
    #[arg(long, value_enum, default_value_t = RuleChoice::Qi)]
    pub rule: RuleChoice,
    #[arg(long, value_enum, default_value_t = MomentChoice::Exact)]
    pub moments: MomentChoice,
    #[command(flatten)]
    pub partition: PartitionArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<splinequad::Error> for CliError {
    fn from(e: splinequad::Error) -> Self {
        use splinequad::Error as E;
        match e {
            E::NoConvergence { .. } | E::Evaluation { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Integrate(args) => integrate(args),
        Command::Table(args) => table(args),
        Command::Kernel(args) => kernel(args),
        Command::Lebesgue(args) => lebesgue(args),
        Command::Weights(args) => weights(args),
    }
}

fn resolve_integrand(spec: &str) -> CliResult<Integrand> {
    match spec.strip_prefix("expr:") {
        Some(src) => Ok(Integrand::from_expression(src)?),
        None => Ok(builtin(spec)?),
    }
}

impl PartitionArgs {
    fn build(&self, default_domain: (f64, f64)) -> CliResult<Partition> {
        let a = self.a.unwrap_or(default_domain.0);
        let b = self.b.unwrap_or(default_domain.1);
        let n = self.n.unwrap_or(64);
        let p = match self.partition.as_str() {
            "uniform" => Partition::uniform(a, b, n)?,
            "chebyshev" => Partition::chebyshev(a, b, n)?,
            other => {
                let path = other.strip_prefix("file:").ok_or_else(|| {
                    CliError::Usage(format!(
                        "unknown partition {other:?}: expected uniform, chebyshev or file:<path>"
                    ))
                })?;
                let path = PathBuf::from(path);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                let p = Partition::parse(&text)?;
                if self.a.is_some() || self.b.is_some() {
                    return Err(CliError::Usage(
                        "--a/--b cannot be combined with a partition file".into(),
                    ));
                }
                if let Some(n) = self.n {
                    if n != p.n() {
                        return Err(CliError::Usage(format!(
                            "--n {n} disagrees with {} subintervals in {}",
                            p.n(),
                            path.display()
                        )));
                    }
                }
                p
            }
        };
        Ok(p)
    }
}

fn describe(p: &Partition, kind: &str) -> String {
    format!("{kind} n={} on [{}, {}]", p.n(), p.a(), p.b())
}

fn integrate(args: &IntegrateArgs) -> CliResult<String> {
    let f = resolve_integrand(&args.function)?;
    let domain = f.domain().unwrap_or((0.0, 1.0));
    let p = args.partition.build(domain)?;
    let value = match args.rule {
        RuleChoice::Qi => build_qi_rule_with(&p, args.moments.into()).apply_dd(&f)?,
        RuleChoice::Simpson => simpson_dd(&p, &f)?,
        RuleChoice::Qs => extrapolated_qs_dd(&p, &f)?,
    };
    let mut out = String::new();
    let _ = writeln!(out, "integrand: {}", f.label());
    if let Some(note) = f.note() {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "rule: {:?}", args.rule);
    let _ = writeln!(
        out,
        "partition: {}",
        describe(&p, &args.partition.partition)
    );
    let _ = writeln!(out, "value: {:.16e}", value.to_f64());
    let on_domain = f.domain() == Some((p.a(), p.b()));
    if let (Some(exact), true) = (f.exact(), on_domain) {
        let exact = exact.to_double_double();
        let _ = writeln!(out, "exact: {:.16e}", exact.to_f64());
        let _ = writeln!(out, "error: {}", fmt_sci((exact - value).to_f64()));
    }
    if args.oracle {
        let r = oracle_integral(&f, p.a(), p.b(), 1e-13)?;
        let reference = DoubleDouble::new(r.value, 0.0);
        let _ = writeln!(out, "oracle: {:.16e}", r.value);
        let _ = writeln!(out, "oracle_error_estimate: {}", fmt_sci(r.error_estimate));
        let _ = writeln!(
            out,
            "error_vs_oracle: {}",
            fmt_sci((reference - value).to_f64())
        );
    }
    Ok(out)
}

fn table(args: &TableArgs) -> CliResult<String> {
    let report = reference_table(args.example)?.compute()?;
    Ok(match args.format {
        Format::Csv => report.to_csv(),
        Format::Markdown => report.to_markdown(),
    })
}

fn kernel(args: &KernelArgs) -> CliResult<String> {
    let k = PeanoKernel::new(args.n)?;
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let mut out = String::from("t,k\n");
    for j in 0..=args.samples {
        let t = j as f64 / args.samples as f64;
        let _ = writeln!(out, "{t},{}", fmt_sci(k.eval(t)?));
    }
    let h = k.h();
    let [r0, r1] = k.roots();
    let _ = writeln!(out, "# h={h}");
    let _ = writeln!(out, "# roots {r0} {r1}");
    let got = k.piece_integrals();
    let want = PieceIntegrals::expected(h);
    let pieces = [
        ("neg_lobe", got.neg_lobe, want.neg_lobe),
        ("first_partial", got.first_partial, want.first_partial),
        ("first_full", got.first_full, want.first_full),
        ("interior", got.interior, want.interior),
    ];
    for (name, g, w) in pieces {
        let verified = (g - w).abs() <= 1e-12 * w.abs();
        let _ = writeln!(
            out,
            "# integral {name}={} expected={} verified={verified}",
            fmt_sci(g),
            fmt_sci(w)
        );
    }
    Ok(out)
}

fn lebesgue(args: &LebesgueArgs) -> CliResult<String> {
    let p = args.partition.build((0.0, 1.0))?;
    let norm = QuasiInterpolant::new(&p).operator_norm_estimate(args.samples_per_interval)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "partition: {}",
        describe(&p, &args.partition.partition)
    );
    let _ = writeln!(out, "mesh_ratio: {}", p.mesh_ratio());
    let _ = writeln!(out, "norm_estimate: {norm}");
    let _ = writeln!(out, "bound3_ok: {}", norm <= 3.0);
    Ok(out)
}

fn weights(args: &WeightsArgs) -> CliResult<String> {
    let p = args.partition.build((0.0, 1.0))?;
    let rule = match args.rule {
        RuleChoice::Qi => build_qi_rule_with(&p, args.moments.into()),
        RuleChoice::Simpson => simpson_rule(&p)?,
        RuleChoice::Qs => {
            return Err(CliError::Usage(
                "the extrapolated rule combines two rules; dump qi and simpson separately".into(),
            ))
        }
    };
    let mut out = String::from("theta,w\n");
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        let _ = writeln!(out, "{x},{w}");
    }
    if args.rule == RuleChoice::Qi {
        let r = weight_bound_report(&rule, &p);
        let _ = writeln!(
            out,
            "# sum_abs={} bound3={} bound_r={} negative={:?}",
            r.sum_abs, r.bound3, r.bound_r, r.negative_indices
        );
    }
    Ok(out)
}
