//! Integrands: the three reference examples, parsed expressions, and an
//! adaptive Gauss–Kronrod integrator used to produce reference values.

mod expr;
mod oracle;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::summation::DoubleDouble;

pub use expr::{parse_expression, BinaryOp, Expression, Function};
pub use oracle::{oracle_integral, OracleResult};

/// A known value of `∫_a^b f`, kept with its full decimal expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactIntegral {
    pub value: f64,
    pub digits: String,
}

impl ExactIntegral {
    pub fn to_double_double(&self) -> DoubleDouble {
        DoubleDouble::parse_decimal(&self.digits).expect("valid decimal")
    }

    pub fn from_decimal(digits: &str) -> Self {
        Self {
            value: digits.parse().expect("valid decimal"),
            digits: digits.to_string(),
        }
    }
}

/// Real function of one variable, with optional domain and reference integral.
#[derive(Clone)]
pub struct Integrand {
    label: String,
    func: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    domain: Option<(f64, f64)>,
    exact: Option<ExactIntegral>,
    note: Option<&'static str>,
}

impl fmt::Debug for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Integrand")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .field("exact", &self.exact)
            .finish_non_exhaustive()
    }
}

impl Integrand {
    pub fn from_fn<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            func: Arc::new(f),
            domain: None,
            exact: None,
            note: None,
        }
    }

    /// Integrand evaluating a parsed expression.
    pub fn from_expression(src: &str) -> Result<Self> {
        let e = parse_expression(src)?;
        Ok(Self::from_fn(src.trim(), move |x| e.eval(x)))
    }

    pub fn with_domain(mut self, a: f64, b: f64) -> Self {
        self.domain = Some((a, b));
        self
    }

    pub fn with_exact(mut self, exact: ExactIntegral) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Option<(f64, f64)> {
        self.domain
    }

    pub fn exact(&self) -> Option<&ExactIntegral> {
        self.exact.as_ref()
    }

    /// Smoothness caveat, if any.
    pub fn note(&self) -> Option<&'static str> {
        self.note
    }

    /// Evaluates `f(x)`; non-finite results are reported with the abscissa.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let v = (self.func)(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation { x })
        }
    }

    /// Raw evaluation without the finiteness check.
    pub fn call(&self, x: f64) -> f64 {
        (self.func)(x)
    }
}

pub const F1_EXACT: &str = "3.2523064663781227544";
pub const F2_EXACT: &str = "35.880612010038328566";
pub const F3_EXACT: &str = "0.6629088318340162325296195";

/// `16 x^{3/2} sin(x²)` on `[0, 1]`.
pub fn f1(x: f64) -> f64 {
    16.0 * x.powf(1.5) * (x * x).sin()
}

/// Two Lorentzian bumps on `[0, 1]`.
pub fn f2(x: f64) -> f64 {
    let u = x - 0.3;
    let v = x - 0.7;
    1.0 / (u * u + 0.01) + 0.8 / (v * v + 0.04)
}

/// Runge's function `1 / (1 + 16 x²)` on `[-1, 1]`.
pub fn f3(x: f64) -> f64 {
    1.0 / (1.0 + 16.0 * x * x)
}

/// One of the reference integrands `f1`, `f2`, `f3`.
pub fn builtin(name: &str) -> Result<Integrand> {
    let f = match name {
        "f1" => Integrand::from_fn("f1: 16 x^(3/2) sin(x^2)", f1)
            .with_domain(0.0, 1.0)
            .with_exact(ExactIntegral::from_decimal(F1_EXACT)),
        "f2" => Integrand::from_fn("f2: 1/((x-0.3)^2+0.01) + 0.8/((x-0.7)^2+0.04)", f2)
            .with_domain(0.0, 1.0)
            .with_exact(ExactIntegral::from_decimal(F2_EXACT)),
        "f3" => Integrand::from_fn("f3: 1/(1+16 x^2)", f3)
            .with_domain(-1.0, 1.0)
            .with_exact(ExactIntegral::from_decimal(F3_EXACT)),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Ok(match name {
        "f1" => Integrand {
            note: Some("x^(3/2) factor: fourth derivative unbounded near x = 0"),
            ..f
        },
        _ => f,
    })
}
