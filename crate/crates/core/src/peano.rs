//! Peano kernel of the uniform QI rule on `[0, 1]`.
//!
//! The rule integrates cubics exactly, so for `f ∈ C⁴`
//!
//! ```text
//! E(f) = ∫ f - Σ w̄_i f(θ_i) = (1/6) ∫_0^1 K(t) f''''(t) dt,
//! K(t) = (1 - t)⁴/4 - Σ w̄_i (θ_i - t)₊³ = t⁴/4 - Σ w̄_i (t - θ_i)₊³.
//! ```
//!
//! The two expressions differ by the rule's error on the cubic `(x - t)³`,
//! which is zero. Evaluation uses whichever one has fewer terms at `t`, so
//! the `O(h⁴)` result is not swamped by cancellation between `O(1)` terms.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quadrature::{build_qi_rule, QuadratureRule};
use crate::summation::CompensatedSum;

/// `∫_{J_1} K = -γ₁ h⁵`
pub const GAMMA1: f64 = 64.0 / 295_245.0;
/// Leading coefficient: `∫_{J_2} K = γ₂ h⁴ - γ₃ h⁵`
pub const GAMMA2: f64 = 23.0 / 960.0;
pub const GAMMA3: f64 = 291_149.0 / 9_447_840.0;
/// `γ₂ / 6`, the `h⁴` error constant.
pub const LEADING_ERROR_CONSTANT: f64 = 23.0 / 5760.0;
/// `(2γ₁ + γ₃) / 6`, the `h⁵` correction constant.
pub const CORRECTION_ERROR_CONSTANT: f64 = 1.0 / 192.0;
/// Composite Simpson error constant.
pub const SIMPSON_ERROR_CONSTANT: f64 = 1.0 / 180.0;

const GAUSS3: [(f64, f64); 3] = [
    (-0.774_596_669_241_483_4, 5.0 / 9.0),
    (0.0, 8.0 / 9.0),
    (0.774_596_669_241_483_4, 5.0 / 9.0),
];

const GAUSS5: [(f64, f64); 5] = [
    (-0.906_179_845_938_664, 0.236_926_885_056_189_1),
    (-0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (0.0, 0.568_888_888_888_888_9),
    (0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (0.906_179_845_938_664, 0.236_926_885_056_189_1),
];

fn gauss<F: Fn(f64) -> f64>(rule: &[(f64, f64)], lo: f64, hi: f64, f: F) -> f64 {
    let c = 0.5 * (lo + hi);
    let r = 0.5 * (hi - lo);
    let mut acc = CompensatedSum::new();
    for &(x, w) in rule {
        acc.add_product(w, f(c + r * x));
    }
    acc.value() * r
}

#[derive(Debug, Clone)]
pub struct PeanoKernel {
    n: usize,
    h: f64,
    rule: QuadratureRule,
}

/// Exact integrals of `K` over its characteristic pieces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PieceIntegrals {
    /// `∫_0^{4h/9} K`
    pub neg_lobe: f64,
    /// `∫_{4h/9}^{h/2} K`
    pub first_partial: f64,
    /// `∫_{h/2}^{3h/2} K`
    pub first_full: f64,
    /// `∫_{3h/2}^{5h/2} K`, one interior period
    pub interior: f64,
}

impl PieceIntegrals {
    /// Closed-form values for step `h`.
    pub fn expected(h: f64) -> Self {
        let h5 = h.powi(5);
        Self {
            neg_lobe: -64.0 * h5 / 295_245.0,
            first_partial: 1631.0 * h5 / 37_791_360.0,
            first_full: 59.0 * h5 / 2880.0,
            interior: 23.0 * h5 / 960.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignReport {
    pub ok: bool,
    pub violations: Vec<f64>,
}

impl PeanoKernel {
    pub fn new(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::KernelTooCoarse(n));
        }
        let p = Partition::uniform(0.0, 1.0, n)?;
        Ok(Self {
            n,
            h: 1.0 / n as f64,
            rule: build_qi_rule(&p),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    /// The two interior sign changes `4h/9` and `1 - 4h/9`.
    pub fn roots(&self) -> [f64; 2] {
        let r = 4.0 * self.h / 9.0;
        [r, 1.0 - r]
    }

    fn check(&self, t: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfDomain {
                x: t,
                a: 0.0,
                b: 1.0,
            });
        }
        Ok(())
    }

    fn eval_unchecked(&self, t: f64) -> f64 {
        let mut acc = CompensatedSum::new();
        let nodes = self.rule.nodes();
        let weights = self.rule.weights();
        if t <= 0.5 {
            let t2 = t * t;
            acc.add_product(0.25 * t2, t2);
            for (&x, &w) in nodes.iter().zip(weights).take_while(|(x, _)| **x < t) {
                let d = t - x;
                acc.add_product(-w, d * d * d);
            }
        } else {
            let s = 1.0 - t;
            let s2 = s * s;
            acc.add_product(0.25 * s2, s2);
            for (&x, &w) in nodes.iter().zip(weights).rev().take_while(|(x, _)| **x > t) {
                let d = x - t;
                acc.add_product(-w, d * d * d);
            }
        }
        acc.value()
    }

    /// `K(t)`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        Ok(self.eval_unchecked(t))
    }

    /// `K(t)` straight from `(1 - t)⁴/4 - Σ w̄_i (θ_i - t)₊³`; loses roughly
    /// `eps / h⁴` relative accuracy near the left end.
    pub fn eval_defining(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        let s = 1.0 - t;
        let mut acc = CompensatedSum::new();
        acc.add(0.25 * s * s * s * s);
        for (&x, &w) in self.rule.nodes().iter().zip(self.rule.weights()) {
            if x > t {
                let d = x - t;
                acc.add_product(-w, d * d * d);
            }
        }
        Ok(acc.value())
    }

    /// Samples `K` at `samples` interior grid points `j / samples` and checks
    /// `K < 0` on `(0, 4h/9)`, `K > 0` on `(4h/9, 1 - 4h/9)`, `K < 0` on
    /// `(1 - 4h/9, 1)`. Points within `h/100` of a root are skipped; the rest
    /// must clear `|K| > 1e-14 h⁴`.
    pub fn verify_sign_structure(&self, samples: usize) -> Result<SignReport> {
        if samples < 100 {
            return Err(Error::InvalidParameter(format!(
                "sign check needs at least 100 samples, got {samples}"
            )));
        }
        let [r1, r2] = self.roots();
        let guard = self.h / 100.0;
        let margin = 1e-14 * self.h.powi(4);
        let mut violations = Vec::new();
        for j in 1..samples {
            let t = j as f64 / samples as f64;
            if [0.0, r1, r2, 1.0].iter().any(|r| (t - r).abs() <= guard) {
                continue;
            }
            let k = self.eval_unchecked(t);
            let ok = if t < r1 || t > r2 {
                k < -margin
            } else {
                k > margin
            };
            if !ok {
                violations.push(t);
            }
        }
        Ok(SignReport {
            ok: violations.is_empty(),
            violations,
        })
    }

    /// `∫_lo^hi K` where `[lo, hi]` lies between two consecutive nodes.
    fn piece(&self, lo: f64, hi: f64) -> f64 {
        gauss(&GAUSS3, lo, hi, |t| self.eval_unchecked(t))
    }

    pub fn piece_integrals(&self) -> PieceIntegrals {
        let h = self.h;
        let r = 4.0 * h / 9.0;
        PieceIntegrals {
            neg_lobe: self.piece(0.0, r),
            first_partial: self.piece(r, 0.5 * h),
            first_full: self.piece(0.5 * h, 1.5 * h),
            interior: self.piece(1.5 * h, 2.5 * h),
        }
    }

    /// `∫_0^1 K g` with a 5-point Gauss rule on every polynomial piece of `K`;
    /// exact when `g` has degree at most 5.
    pub fn weighted_integral<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        let nodes = self.rule.nodes();
        nodes
            .windows(2)
            .map(|w| gauss(&GAUSS5, w[0], w[1], |t| self.eval_unchecked(t) * g(t)))
            .collect::<CompensatedSum>()
            .value()
    }

    /// `∫_0^1 K`.
    pub fn total_integral(&self) -> f64 {
        self.weighted_integral(|_| 1.0)
    }

    /// Bound on `|E_Q(f)|` given `|f''''| <= m4` on `[0, 1]`.
    pub fn error_bound(&self, m4: f64) -> Result<f64> {
        if !(m4 >= 0.0) {
            return Err(Error::Negative {
                name: "m4",
                value: m4,
            });
        }
        let h4 = self.h.powi(4);
        Ok(LEADING_ERROR_CONSTANT * h4 * m4 + CORRECTION_ERROR_CONSTANT * h4 * self.h * m4)
    }
}

/// Bound `h⁴ m4 / 180` on the composite Simpson error over `[0, 1]`.
pub fn simpson_error_reference(m4: f64, h: f64) -> Result<f64> {
    if !(m4 >= 0.0) {
        return Err(Error::Negative {
            name: "m4",
            value: m4,
        });
    }
    if !(h > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "step must be positive, got {h}"
        )));
    }
    Ok(SIMPSON_ERROR_CONSTANT * h.powi(4) * m4)
}
