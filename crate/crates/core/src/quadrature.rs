//! Quadrature from integrating `Qf`, composite Simpson, and their
//! extrapolated combination.

use crate::error::{Error, Result};
use crate::funclib::Integrand;
use crate::partition::Partition;
use crate::spline_qi::QuasiInterpolant;
use crate::summation::{CompensatedSum, DoubleDouble};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Qi,
    Simpson,
}

/// How the B-spline integrals `w_i = ∫ B_i` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MomentFormula {
    /// `w_i = (x_{i+1} - x_{i-2}) / 3`, the exact integral of a quadratic B-spline.
    #[default]
    Exact,
    /// `w_i = (h_{i-1} + 4h_i + h_{i+1}) / 6`, `w_1 = (3h_1 + h_2) / 6`,
    /// `w_n = (h_{n-1} + 3h_n) / 6`, `w_0 = h_1/3`, `w_{n+1} = h_n/3`.
    ///
    /// Agrees with `Exact` on uniform partitions. On non-uniform ones the rule
    /// it produces still integrates constants exactly but not linear functions.
    Simplified,
}

/// Weights `w_i = c_i * scale / divisor` with small integer `c_i`, so the rule
/// can be applied without rounding the weights.
#[derive(Debug, Clone, PartialEq)]
struct IntegerForm {
    coefficients: Vec<f64>,
    scale: f64,
    divisor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: RuleKind,
    integer_form: Option<IntegerForm>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Compensated `Σ w_i f(x_i)` in double-double.
    pub fn apply_dd(&self, f: &Integrand) -> Result<DoubleDouble> {
        let mut acc = CompensatedSum::new();
        match &self.integer_form {
            Some(form) => {
                for (x, c) in self.nodes.iter().zip(&form.coefficients) {
                    acc.add_product(*c, f.eval(*x)?);
                }
                Ok(acc.to_double_double() * form.scale / form.divisor)
            }
            None => {
                for (x, w) in self.nodes.iter().zip(&self.weights) {
                    acc.add_product(*w, f.eval(*x)?);
                }
                Ok(acc.to_double_double())
            }
        }
    }

    pub fn apply(&self, f: &Integrand) -> Result<f64> {
        self.apply_dd(f).map(DoubleDouble::to_f64)
    }
}

/// `∫ B_i = (h_{i-1} + h_i + h_{i+1}) / 3` for `i ∈ Γ`, the support length over
/// three (`h_{-1} = h_0 = h_{n+1} = h_{n+2} = 0`).
pub fn bspline_moments(p: &Partition) -> Vec<f64> {
    let h = |i: usize| p.step(i);
    (0..p.n() + 2)
        .map(|i| {
            let left = if i >= 1 { h(i - 1) } else { 0.0 };
            (left + h(i) + h(i + 1)) / 3.0
        })
        .collect()
}

/// Moments from the steplength formula of [`MomentFormula::Simplified`].
///
/// For `n = 1` the formula is not defined and the exact moments are returned.
pub fn simplified_moments(p: &Partition) -> Vec<f64> {
    let n = p.n();
    if n == 1 {
        return bspline_moments(p);
    }
    let h = |i: usize| p.step(i);
    let mut w = vec![0.0; n + 2];
    w[0] = h(1) / 3.0;
    w[1] = (3.0 * h(1) + h(2)) / 6.0;
    for (i, wi) in w.iter_mut().enumerate().take(n).skip(2) {
        *wi = (h(i - 1) + 4.0 * h(i) + h(i + 1)) / 6.0;
    }
    w[n] = (h(n - 1) + 3.0 * h(n)) / 6.0;
    w[n + 1] = h(n) / 3.0;
    w
}

pub fn moments(p: &Partition, formula: MomentFormula) -> Vec<f64> {
    match formula {
        MomentFormula::Exact => bspline_moments(p),
        MomentFormula::Simplified => simplified_moments(p),
    }
}

/// `w̄_i = c_{i-1} w_{i-1} + b_i w_i + a_{i+1} w_{i+1}`, always through the
/// general recurrence.
pub fn qi_weights_general(p: &Partition, formula: MomentFormula) -> Vec<f64> {
    let qi = QuasiInterpolant::new(p);
    let w = moments(p, formula);
    let s = qi.stencils();
    let last = p.n() + 1;
    (0..=last)
        .map(|i| {
            let mut acc = CompensatedSum::new();
            acc.add_product(s[i].b, w[i]);
            if i > 0 {
                acc.add_product(s[i - 1].c, w[i - 1]);
            }
            if i < last {
                acc.add_product(s[i + 1].a, w[i + 1]);
            }
            acc.value()
        })
        .collect()
}

/// `72 * w̄_i / h` on a uniform partition with `n >= 5`.
fn uniform_coefficients(n: usize) -> Vec<f64> {
    let mut c = vec![72.0; n + 2];
    for (lo, v) in [(0, 8.0), (1, 63.0), (2, 73.0)] {
        c[lo] = v;
        c[n + 1 - lo] = v;
    }
    c
}

/// The rule `∫ Qf = Σ w̄_i f(θ_i)` with exact B-spline moments.
///
/// Uniform partitions with `n >= 5` use the closed form
/// `h [1/9, 7/8, 73/72, 1, ..., 1, 73/72, 7/8, 1/9]`.
pub fn build_qi_rule(p: &Partition) -> QuadratureRule {
    build_qi_rule_with(p, MomentFormula::Exact)
}

pub fn build_qi_rule_with(p: &Partition, formula: MomentFormula) -> QuadratureRule {
    let n = p.n();
    let nodes = p.greville_points();
    if p.is_uniform() && n >= 5 {
        let coefficients = uniform_coefficients(n);
        let divisor = 72.0 * n as f64;
        let weights = coefficients
            .iter()
            .map(|c| (DoubleDouble::from(*c) * p.width() / divisor).to_f64())
            .collect();
        return QuadratureRule {
            nodes,
            weights,
            kind: RuleKind::Qi,
            integer_form: Some(IntegerForm {
                coefficients,
                scale: p.width(),
                divisor,
            }),
        };
    }
    QuadratureRule {
        nodes,
        weights: qi_weights_general(p, formula),
        kind: RuleKind::Qi,
        integer_form: None,
    }
}

fn check_simpson(p: &Partition) -> Result<()> {
    if !p.is_uniform() {
        return Err(Error::NonUniformPartition);
    }
    if !p.n().is_multiple_of(2) {
        return Err(Error::OddSubintervals(p.n()));
    }
    Ok(())
}

/// Composite Simpson on the knots of a uniform partition with even `n`.
pub fn simpson_rule(p: &Partition) -> Result<QuadratureRule> {
    check_simpson(p)?;
    let n = p.n();
    let coefficients: Vec<f64> = (0..=n)
        .map(|j| match j {
            0 => 1.0,
            j if j == n => 1.0,
            j if j % 2 == 1 => 4.0,
            _ => 2.0,
        })
        .collect();
    let divisor = 3.0 * n as f64;
    let weights = coefficients
        .iter()
        .map(|c| (DoubleDouble::from(*c) * p.width() / divisor).to_f64())
        .collect();
    Ok(QuadratureRule {
        nodes: p.knots().to_vec(),
        weights,
        kind: RuleKind::Simpson,
        integer_form: Some(IntegerForm {
            coefficients,
            scale: p.width(),
            divisor,
        }),
    })
}

pub fn apply_rule(rule: &QuadratureRule, f: &Integrand) -> Result<f64> {
    rule.apply(f)
}

pub fn simpson_dd(p: &Partition, f: &Integrand) -> Result<DoubleDouble> {
    simpson_rule(p)?.apply_dd(f)
}

pub fn simpson(p: &Partition, f: &Integrand) -> Result<f64> {
    simpson_dd(p, f).map(DoubleDouble::to_f64)
}

/// `(32 I_Q + 23 I_S) / 55`.
pub fn extrapolated_qs_dd(p: &Partition, f: &Integrand) -> Result<DoubleDouble> {
    let s = simpson_dd(p, f)?;
    let q = build_qi_rule(p).apply_dd(f)?;
    Ok((q * 32.0 + s * 23.0) / 55.0)
}

pub fn extrapolated_qs(p: &Partition, f: &Integrand) -> Result<f64> {
    extrapolated_qs_dd(p, f).map(DoubleDouble::to_f64)
}

/// Absolute-weight diagnostics for a QI rule.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightBoundReport {
    /// `Σ |w̄_i|`
    pub sum_abs: f64,
    /// `3 (b - a)`
    pub bound3: f64,
    /// `(b - a)(1 + 2 (r / (r + 1))²)` with `r` the mesh ratio
    pub bound_r: f64,
    pub negative_indices: Vec<usize>,
}

impl WeightBoundReport {
    pub fn within_bounds(&self) -> bool {
        self.sum_abs <= self.bound3 && self.sum_abs <= self.bound_r
    }
}

pub fn weight_bound_report(rule: &QuadratureRule, p: &Partition) -> WeightBoundReport {
    let sum_abs = rule
        .weights()
        .iter()
        .map(|w| w.abs())
        .collect::<CompensatedSum>()
        .value();
    let r = p.mesh_ratio();
    let q = r / (r + 1.0);
    WeightBoundReport {
        sum_abs,
        bound3: 3.0 * p.width(),
        bound_r: p.width() * (1.0 + 2.0 * q * q),
        negative_indices: rule
            .weights()
            .iter()
            .enumerate()
            .filter(|(_, w)| **w < 0.0)
            .map(|(i, _)| i)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn uniform_moments() {
        let p = Partition::uniform(0.0, 1.0, 6).unwrap();
        let h = 1.0 / 6.0;
        let want = [
            1.0 / 3.0,
            2.0 / 3.0,
            1.0,
            1.0,
            1.0,
            1.0,
            2.0 / 3.0,
            1.0 / 3.0,
        ];
        assert_eq!(bspline_moments(&p).len(), want.len());
        for (w, e) in bspline_moments(&p).iter().zip(want) {
            assert!(rel(*w, e * h) < 1e-15, "{w} {}", e * h);
        }
        for (x, y) in bspline_moments(&p).iter().zip(simplified_moments(&p)) {
            assert!(rel(*x, y) < 1e-15);
        }
    }

    #[test]
    fn single_interval_is_simpson() {
        let p = Partition::uniform(0.0, 1.0, 1).unwrap();
        let w = bspline_moments(&p);
        for v in &w {
            assert!(rel(*v, 1.0 / 3.0) < 1e-15);
        }
        let rule = build_qi_rule(&p);
        let want = [1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0];
        for (w, e) in rule.weights().iter().zip(want) {
            assert!(rel(*w, e) < 1e-15);
        }
    }

    #[test]
    fn uniform_closed_form() {
        let p = Partition::uniform(0.0, 1.0, 10).unwrap();
        let rule = build_qi_rule(&p);
        assert_eq!(rule.len(), 12);
        let h = 0.1;
        let mut want = vec![h; 12];
        for (i, v) in [(0, 1.0 / 9.0), (1, 7.0 / 8.0), (2, 73.0 / 72.0)] {
            want[i] = h * v;
            want[11 - i] = h * v;
        }
        for (w, e) in rule.weights().iter().zip(&want) {
            assert!(rel(*w, *e) <= 1e-15);
        }
    }

    #[test]
    fn simpson_preconditions() {
        let p = Partition::uniform(0.0, 1.0, 5).unwrap();
        let f = Integrand::from_fn("1", |_| 1.0);
        assert_eq!(simpson(&p, &f), Err(Error::OddSubintervals(5)));
        let q = Partition::from_knots(vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(simpson(&q, &f), Err(Error::NonUniformPartition));
        assert_eq!(extrapolated_qs(&p, &f), Err(Error::OddSubintervals(5)));
    }

    #[test]
    fn cubic_exactness() {
        let p = Partition::uniform(0.0, 1.0, 8).unwrap();
        let f = Integrand::from_fn("x^3", |x| x * x * x);
        assert!((build_qi_rule(&p).apply(&f).unwrap() - 0.25).abs() <= 1e-15);
        assert!((simpson(&p, &f).unwrap() - 0.25).abs() <= 1e-15);
        let one = Integrand::from_fn("1", |_| 1.0);
        assert!((build_qi_rule(&p).apply(&one).unwrap() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn evaluation_failure_reports_node() {
        let p = Partition::uniform(0.0, 1.0, 6).unwrap();
        let f = Integrand::from_fn("1/x", |x| 1.0 / x);
        assert_eq!(
            build_qi_rule(&p).apply(&f),
            Err(Error::Evaluation { x: 0.0 })
        );
    }

    #[test]
    fn simplified_moments_break_linear_exactness() {
        let p = Partition::from_knots(vec![-1.0, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0]).unwrap();
        let id = Integrand::from_fn("x", |x| x);
        let simplified = build_qi_rule_with(&p, MomentFormula::Simplified)
            .apply(&id)
            .unwrap();
        assert!((simplified + 6.25e-4).abs() < 1e-12, "{simplified}");
        let exact = build_qi_rule(&p).apply(&id).unwrap();
        assert!(exact.abs() < 1e-15);
    }

    #[test]
    fn uniform_report() {
        let p = Partition::uniform(2.0, 5.0, 9).unwrap();
        let rep = weight_bound_report(&build_qi_rule(&p), &p);
        assert!((rep.sum_abs - 3.0).abs() < 1e-14);
        assert!(rep.negative_indices.is_empty());
        assert!((rep.bound_r - 4.5).abs() < 1e-15);
        assert!(rep.within_bounds());
    }
}
