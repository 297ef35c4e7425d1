//! Error tables `E_Q`, `E_S`, `E_QS` against a known integral, with fitted
//! convergence orders.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::funclib::{builtin, Integrand};
use crate::partition::Partition;
use crate::quadrature::{build_qi_rule, simpson_dd};
use crate::summation::DoubleDouble;

/// Errors below this magnitude are not resolved by double precision.
pub const FP_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub e_q: f64,
    pub e_s: f64,
    pub e_qs: f64,
    /// Per column: the tabulated reference error is below [`FP_FLOOR`].
    pub below_floor: [bool; 3],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedOrders {
    pub q: Option<f64>,
    pub s: Option<f64>,
    pub qs: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub integrand_label: String,
    pub rows: Vec<ConvergenceRow>,
    pub fitted_orders: FittedOrders,
}

/// Least-squares slope of `ln|E|` against `ln(1/n)`, over points with
/// `|E| > FP_FLOOR`. `None` with fewer than two usable points.
pub fn fitted_order(points: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, e)| e.abs() > FP_FLOOR)
        .map(|&(n, e)| (-(n as f64).ln(), e.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// Observed order between two consecutive rows.
pub fn local_order(n0: usize, e0: f64, n1: usize, e1: f64) -> f64 {
    (e0.abs() / e1.abs()).ln() / (n1 as f64 / n0 as f64).ln()
}

/// The three errors `I - I_rule` on a uniform `n`-interval grid.
pub fn errors_at(f: &Integrand, exact: DoubleDouble, a: f64, b: f64, n: usize) -> Result<[f64; 3]> {
    let p = Partition::uniform(a, b, n)?;
    let q = build_qi_rule(&p).apply_dd(f)?;
    let s = simpson_dd(&p, f)?;
    let qs = (q * 32.0 + s * 23.0) / 55.0;
    Ok([
        (exact - q).to_f64(),
        (exact - s).to_f64(),
        (exact - qs).to_f64(),
    ])
}

/// Runs all three rules for each `n` (even, ascending).
pub fn convergence_study(
    f: &Integrand,
    exact: DoubleDouble,
    a: f64,
    b: f64,
    ns: &[usize],
) -> Result<ConvergenceReport> {
    let mut sorted = ns.to_vec();
    sorted.sort_unstable();
    let rows = sorted
        .iter()
        .map(|&n| {
            let [e_q, e_s, e_qs] = errors_at(f, exact, a, b, n)?;
            Ok(ConvergenceRow {
                n,
                e_q,
                e_s,
                e_qs,
                below_floor: [false; 3],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let col = |g: fn(&ConvergenceRow) -> f64| -> Vec<(usize, f64)> {
        rows.iter().map(|r| (r.n, g(r))).collect()
    };
    let fitted_orders = FittedOrders {
        q: fitted_order(&col(|r| r.e_q)),
        s: fitted_order(&col(|r| r.e_s)),
        qs: fitted_order(&col(|r| r.e_qs)),
    };
    Ok(ConvergenceReport {
        integrand_label: f.label().to_string(),
        rows,
        fitted_orders,
    })
}

/// A tabulated error as printed, e.g. `-.86(-7)` for `-0.86e-7`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedValue {
    pub value: f64,
    /// Place value of the last printed digit.
    pub unit: f64,
}

impl PrintedValue {
    pub fn parse(text: &str) -> Option<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (mantissa, rest) = text.split_once('(')?;
        let exp: i32 = rest.strip_suffix(')')?.parse().ok()?;
        let m: f64 = mantissa.parse().ok()?;
        let decimals = mantissa.split_once('.').map_or(0, |(_, d)| d.len()) as i32;
        Some(Self {
            value: m * 10f64.powi(exp),
            unit: 10f64.powi(exp - decimals),
        })
    }

    /// `|computed - value| <= units * unit`.
    pub fn matches(&self, computed: f64, units: f64) -> bool {
        (computed - self.value).abs() <= units * self.unit * (1.0 + 1e-9)
    }
}

/// One of the three reference error tables.
#[derive(Debug, Clone)]
pub struct ReferenceTable {
    pub id: u8,
    pub integrand: &'static str,
    /// `(n, [E_Q, E_S, E_QS])` in printed notation
    pub rows: &'static [(usize, [&'static str; 3])],
}

pub const REFERENCE_TABLES: [ReferenceTable; 3] = [
    ReferenceTable {
        id: 1,
        integrand: "f1",
        rows: &[
            (64, ["-.86(-7)", "1.23(-7)", "1.13(-9)"]),
            (128, ["-.54(-8)", ".76(-8)", ".16(-10)"]),
            (256, ["-.34(-9)", ".47(-9)", "-.40(-12)"]),
            (512, ["-.21(-10)", ".29(-10)", "-.52(-13)"]),
            (1024, ["-.13(-11)", ".18(-11)", "-.33(-14)"]),
        ],
    },
    ReferenceTable {
        id: 2,
        integrand: "f2",
        rows: &[
            (64, ["-.19(-5)", ".23(-5)", "-.14(-6)"]),
            (128, ["-.11(-6)", ".14(-6)", "-.37(-8)"]),
            (256, ["-.67(-8)", ".90(-8)", "-.11(-9)"]),
            (512, ["-.41(-9)", ".56(-9)", "-.35(-11)"]),
            (1024, ["-.25(-10)", ".35(-10)", "-.11(-12)"]),
        ],
    },
    ReferenceTable {
        id: 3,
        integrand: "f3",
        rows: &[
            (256, ["-.33(-10)", ".46(-10)", "-.44(-12)"]),
            (512, ["-.21(-11)", ".28(-11)", "-.13(-13)"]),
            (1024, ["-.13(-12)", ".18(-12)", "-.42(-15)"]),
            (2048, ["-.80(-14)", ".11(-13)", "-.13(-16)"]),
            (4096, ["-.50(-15)", ".69(-15)", "-.41(-18)"]),
        ],
    },
];

pub fn reference_table(id: u8) -> Result<&'static ReferenceTable> {
    REFERENCE_TABLES.iter().find(|t| t.id == id).ok_or_else(|| {
        Error::InvalidParameter(format!("no reference table {id} (expected 1, 2 or 3)"))
    })
}

impl ReferenceTable {
    pub fn ns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    pub fn printed(&self, row: usize, col: usize) -> PrintedValue {
        PrintedValue::parse(self.rows[row].1[col]).expect("well-formed table entry")
    }

    /// Recomputes the table against the integrand's reference integral.
    pub fn compute(&self) -> Result<ConvergenceReport> {
        let f = builtin(self.integrand)?;
        let (a, b) = f.domain().expect("builtins carry a domain");
        let exact = f
            .exact()
            .expect("builtins carry an exact value")
            .to_double_double();
        let mut report = convergence_study(&f, exact, a, b, &self.ns())?;
        for (k, row) in report.rows.iter_mut().enumerate() {
            for col in 0..3 {
                row.below_floor[col] = self.printed(k, col).value.abs() < FP_FLOOR;
            }
        }
        Ok(report)
    }
}

/// Shortest round-trip scientific notation.
pub fn fmt_sci(v: f64) -> String {
    format!("{v:e}")
}

fn fmt_order(v: Option<f64>) -> String {
    v.map_or_else(|| "nan".to_string(), |o| format!("{o:.4}"))
}

impl ConvergenceReport {
    /// CSV with header `n,e_q,e_s,e_qs,order_q,order_s,order_qs`; order columns
    /// hold the observed order against the previous row. Trailing `#` lines
    /// carry the fitted orders and floor notes.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,e_q,e_s,e_qs,order_q,order_s,order_qs\n");
        let mut prev: Option<&ConvergenceRow> = None;
        for r in &self.rows {
            let orders = match prev {
                Some(p) => format!(
                    "{:.4},{:.4},{:.4}",
                    local_order(p.n, p.e_q, r.n, r.e_q),
                    local_order(p.n, p.e_s, r.n, r.e_s),
                    local_order(p.n, p.e_qs, r.n, r.e_qs)
                ),
                None => ",,".to_string(),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.n,
                fmt_sci(r.e_q),
                fmt_sci(r.e_s),
                fmt_sci(r.e_qs),
                orders
            );
            prev = Some(r);
        }
        let f = &self.fitted_orders;
        let _ = writeln!(
            out,
            "# fitted_orders q={} s={} qs={}",
            fmt_order(f.q),
            fmt_order(f.s),
            fmt_order(f.qs)
        );
        for r in &self.rows {
            let cols: Vec<&str> = ["e_q", "e_s", "e_qs"]
                .iter()
                .zip(r.below_floor)
                .filter(|(_, b)| *b)
                .map(|(c, _)| *c)
                .collect();
            if !cols.is_empty() {
                let _ = writeln!(out, "# n={}: {} ~0 (fp floor)", r.n, cols.join(","));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "{}\n\n| n | E_Q | E_S | E_QS |\n|---:|---:|---:|---:|\n",
            self.integrand_label
        );
        for r in &self.rows {
            let cell = |v: f64, floor: bool| {
                if floor {
                    format!("{v:.2e} ~0 (fp floor)")
                } else {
                    format!("{v:.2e}")
                }
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                r.n,
                cell(r.e_q, r.below_floor[0]),
                cell(r.e_s, r.below_floor[1]),
                cell(r.e_qs, r.below_floor[2])
            );
        }
        let f = &self.fitted_orders;
        let _ = writeln!(
            out,
            "\nfitted orders: E_Q {}, E_S {}, E_QS {}",
            fmt_order(f.q),
            fmt_order(f.s),
            fmt_order(f.qs)
        );
        out
    }
}
