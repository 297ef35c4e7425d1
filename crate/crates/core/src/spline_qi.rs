//! Quadratic B-splines with triple end knots and the discrete quasi-interpolant
//!
//! ```text
//! Qf = Σ μ_i(f) B_i,   μ_i(f) = a_i f(θ_{i-1}) + b_i f(θ_i) + c_i f(θ_{i+1})
//! ```
//!
//! which reproduces quadratic polynomials. Indices follow `Γ = {0, ..., n+1}`;
//! `B_i` is supported on `[x_{i-2}, x_{i+1}]` with `x_{-2} = x_{-1} = a` and
//! `x_{n+1} = x_{n+2} = b`.

use crate::error::{Error, Result};
use crate::funclib::Integrand;
use crate::partition::Partition;

/// Coefficient triple of the functional `μ_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stencil {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Stencil {
    const IDENTITY: Self = Self {
        a: 0.0,
        b: 1.0,
        c: 0.0,
    };
}

#[derive(Debug, Clone)]
pub struct QuasiInterpolant {
    partition: Partition,
    /// Extended knot vector `(a, a, a, x_1, ..., x_{n-1}, b, b, b)`.
    ext: Vec<f64>,
    /// One stencil per `i ∈ Γ`; the two end entries are the identity, so
    /// `c_0 = a_{n+1} = 0`.
    stencils: Vec<Stencil>,
    sigma: Vec<f64>,
    sigma_prime: Vec<f64>,
}

impl QuasiInterpolant {
    pub fn new(partition: &Partition) -> Self {
        let n = partition.n();
        let h = |i: usize| partition.step(i);

        // σ_i = h_i / (h_{i-1} + h_i), σ'_i = h_{i-1} / (h_{i-1} + h_i), 1 <= i <= n+1
        let mut sigma = vec![0.0; n + 2];
        let mut sigma_prime = vec![0.0; n + 2];
        for i in 1..=n + 1 {
            let s = h(i - 1) + h(i);
            sigma[i] = h(i) / s;
            sigma_prime[i] = h(i - 1) / s;
        }

        let mut stencils = vec![Stencil::IDENTITY; n + 2];
        for i in 1..=n {
            let s = sigma[i];
            let sp = sigma_prime[i + 1];
            let d = s + sp;
            stencils[i] = Stencil {
                a: -s * s * sp / d,
                b: 1.0 + s * sp,
                c: -s * sp * sp / d,
            };
        }

        let knots = partition.knots();
        let mut ext = Vec::with_capacity(n + 5);
        ext.extend([knots[0]; 2]);
        ext.extend_from_slice(knots);
        ext.extend([knots[n]; 2]);

        Self {
            partition: partition.clone(),
            ext,
            stencils,
            sigma,
            sigma_prime,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn extended_knots(&self) -> &[f64] {
        &self.ext
    }

    /// `(a_i, b_i, c_i)` for `1 <= i <= n`.
    pub fn coefficients(&self, i: usize) -> Option<Stencil> {
        (1..=self.n()).contains(&i).then(|| self.stencils[i])
    }

    /// Stencils for all of `Γ`, identity at both ends.
    pub fn stencils(&self) -> &[Stencil] {
        &self.stencils
    }

    /// `σ_i` for `1 <= i <= n+1`.
    pub fn sigma(&self, i: usize) -> f64 {
        self.sigma[i]
    }

    /// `σ'_i = 1 - σ_i` for `1 <= i <= n+1`.
    pub fn sigma_prime(&self, i: usize) -> f64 {
        self.sigma_prime[i]
    }

    fn check_x(&self, x: f64) -> Result<()> {
        let (a, b) = (self.partition.a(), self.partition.b());
        if !(a..=b).contains(&x) {
            return Err(Error::OutOfDomain { x, a, b });
        }
        Ok(())
    }

    /// Subinterval `m ∈ 1..=n` containing `x`; `b` belongs to the last one.
    fn span(&self, x: f64) -> usize {
        let knots = self.partition.knots();
        let n = self.n();
        // first knot strictly greater than x
        let upper = knots.partition_point(|&k| k <= x);
        upper.clamp(1, n)
    }

    /// Values of the three B-splines alive on the span of `x`: returns `m` and
    /// `[B_{m-1}(x), B_m(x), B_{m+1}(x)]`.
    pub fn active_basis(&self, x: f64) -> (usize, [f64; 3]) {
        let m = self.span(x);
        // extended index of the span's left knot
        let k = m + 1;
        let t = &self.ext;
        let mut basis = [1.0, 0.0, 0.0];
        let mut left = [0.0; 3];
        let mut right = [0.0; 3];
        for j in 1..=2 {
            left[j] = x - t[k + 1 - j];
            right[j] = t[k + j] - x;
            let mut saved = 0.0;
            for r in 0..j {
                let temp = basis[r] / (right[r + 1] + left[j - r]);
                basis[r] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            basis[j] = saved;
        }
        (m, basis)
    }

    /// `B_i(x)`.
    pub fn bspline(&self, i: usize, x: f64) -> Result<f64> {
        let max = self.n() + 1;
        if i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        self.check_x(x)?;
        let (m, basis) = self.active_basis(x);
        Ok(match (i + 1).checked_sub(m) {
            Some(j) if j < 3 => basis[j],
            _ => 0.0,
        })
    }

    /// `μ_i(f)` from values `f(θ_0), ..., f(θ_{n+1})`.
    pub fn functional_from_values(&self, i: usize, values: &[f64]) -> f64 {
        let s = self.stencils[i];
        let n1 = self.n() + 1;
        if i == 0 || i == n1 {
            return values[i];
        }
        s.a * values[i - 1] + s.b * values[i] + s.c * values[i + 1]
    }

    /// `μ_i(f)`.
    pub fn functional(&self, i: usize, f: &Integrand) -> Result<f64> {
        let max = self.n() + 1;
        if i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        let theta = self.partition.greville_points();
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(max);
        let mut values = vec![0.0; max + 1];
        for j in lo..=hi {
            values[j] = f.eval(theta[j])?;
        }
        Ok(self.functional_from_values(i, &values))
    }

    /// Samples `f` at the Greville points and returns the spline `Qf`.
    pub fn apply(&self, f: &Integrand) -> Result<QiSpline<'_>> {
        let values = self
            .partition
            .greville_points()
            .into_iter()
            .map(|t| f.eval(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.apply_values(&values))
    }

    /// `Qf` from precomputed values at the Greville points.
    pub fn apply_values(&self, values: &[f64]) -> QiSpline<'_> {
        assert_eq!(values.len(), self.n() + 2, "one value per Greville point");
        let coeffs = (0..values.len())
            .map(|i| self.functional_from_values(i, values))
            .collect();
        QiSpline { qi: self, coeffs }
    }

    /// `Qf(x)`.
    pub fn eval(&self, f: &Integrand, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let (m, basis) = self.active_basis(x);
        let mut acc = 0.0;
        for (j, bv) in basis.iter().enumerate() {
            acc += self.functional(m - 1 + j, f)? * bv;
        }
        Ok(acc)
    }

    /// Fundamental functions `B̄_i(x)` for the (at most five) indices alive at `x`:
    /// returns the first index and the values.
    pub fn fundamental_functions(&self, x: f64) -> (usize, Vec<f64>) {
        let (m, basis) = self.active_basis(x);
        let bval = |i: usize| -> f64 {
            match (i + 1).checked_sub(m) {
                Some(j) if j < 3 => basis[j],
                _ => 0.0,
            }
        };
        let n1 = self.n() + 1;
        let first = m.saturating_sub(2);
        let last = (m + 2).min(n1);
        let values = (first..=last)
            .map(|i| {
                let mut v = self.stencils[i].b * bval(i);
                if i > 0 {
                    v += self.stencils[i - 1].c * bval(i - 1);
                }
                if i < n1 {
                    v += self.stencils[i + 1].a * bval(i + 1);
                }
                v
            })
            .collect();
        (first, values)
    }

    /// Lebesgue function `Λ_Q(x) = Σ |B̄_i(x)|`.
    pub fn lebesgue_function(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let (_, values) = self.fundamental_functions(x);
        Ok(values.iter().map(|v| v.abs()).sum())
    }

    /// Sampled lower bound of `‖Q‖∞`: maximum of `Λ_Q` over
    /// `samples_per_interval + 1` equispaced points of every subinterval plus all
    /// Greville points.
    pub fn operator_norm_estimate(&self, samples_per_interval: usize) -> Result<f64> {
        if samples_per_interval < 2 {
            return Err(Error::InvalidParameter(format!(
                "samples_per_interval must be >= 2, got {samples_per_interval}"
            )));
        }
        let knots = self.partition.knots();
        let mut best = 0.0f64;
        for w in knots.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for j in 0..=samples_per_interval {
                let x = if j == samples_per_interval {
                    hi
                } else {
                    lo + (hi - lo) * j as f64 / samples_per_interval as f64
                };
                best = best.max(self.lebesgue_function(x)?);
            }
        }
        for t in self.partition.greville_points() {
            best = best.max(self.lebesgue_function(t)?);
        }
        Ok(best)
    }
}

/// `Qf` as explicit B-spline coefficients `μ_i(f)`.
#[derive(Debug, Clone)]
pub struct QiSpline<'a> {
    qi: &'a QuasiInterpolant,
    coeffs: Vec<f64>,
}

impl QiSpline<'_> {
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.qi.check_x(x)?;
        let (m, basis) = self.qi.active_basis(x);
        Ok(basis
            .iter()
            .enumerate()
            .map(|(j, bv)| self.coeffs[m - 1 + j] * bv)
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(n: usize) -> QuasiInterpolant {
        QuasiInterpolant::new(&Partition::uniform(0.0, 1.0, n).unwrap())
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn uniform_stencils() {
        let q = uniform(8);
        let s = q.coefficients(1).unwrap();
        assert!(
            close(s.a, -1.0 / 3.0, 1e-15)
                && close(s.b, 1.5, 1e-15)
                && close(s.c, -1.0 / 6.0, 1e-15)
        );
        for i in 2..=7 {
            assert_eq!(
                q.coefficients(i).unwrap(),
                Stencil {
                    a: -0.125,
                    b: 1.25,
                    c: -0.125
                }
            );
        }
        let s = q.coefficients(8).unwrap();
        assert!(
            close(s.a, -1.0 / 6.0, 1e-15)
                && close(s.b, 1.5, 1e-15)
                && close(s.c, -1.0 / 3.0, 1e-15)
        );
        assert!(q.coefficients(0).is_none());
        assert!(q.coefficients(9).is_none());
    }

    #[test]
    fn single_interval_stencil() {
        let q = uniform(1);
        assert_eq!(
            q.coefficients(1).unwrap(),
            Stencil {
                a: -0.5,
                b: 2.0,
                c: -0.5
            }
        );
    }

    #[test]
    fn basis_at_endpoints() {
        let q = uniform(4);
        assert_eq!(q.bspline(0, 0.0).unwrap(), 1.0);
        for i in 1..=5 {
            assert_eq!(q.bspline(i, 0.0).unwrap(), 0.0);
        }
        assert_eq!(q.bspline(5, 1.0).unwrap(), 1.0);
        assert_eq!(q.bspline(4, 1.0).unwrap(), 0.0);
        assert!(close(q.bspline(2, 0.25).unwrap(), 0.5, 1e-15));
    }

    #[test]
    fn basis_errors() {
        let q = uniform(4);
        assert_eq!(
            q.bspline(6, 0.5),
            Err(Error::IndexOutOfRange { index: 6, max: 5 })
        );
        assert!(matches!(q.bspline(1, 1.5), Err(Error::OutOfDomain { .. })));
        assert!(matches!(
            q.lebesgue_function(-0.1),
            Err(Error::OutOfDomain { .. })
        ));
    }

    #[test]
    fn basis_support() {
        let p = Partition::from_knots(vec![0.0, 0.1, 0.4, 0.5, 0.9, 1.0]).unwrap();
        let q = QuasiInterpolant::new(&p);
        let k = p.knots();
        for i in 0..=6usize {
            let lo = k[i.saturating_sub(2)];
            let hi = k[(i + 1).min(5)];
            for j in 0..=200 {
                let x = j as f64 / 200.0;
                let v = q.bspline(i, x).unwrap();
                assert!(v >= 0.0);
                if x < lo || x > hi {
                    assert_eq!(v, 0.0, "B_{i}({x})");
                }
            }
        }
    }

    #[test]
    fn functionals_reproduce_linear() {
        let q = uniform(4);
        let one = Integrand::from_fn("1", |_| 1.0);
        let id = Integrand::from_fn("x", |x| x);
        let theta = q.partition().greville_points();
        for i in 0..=5 {
            assert!(close(q.functional(i, &one).unwrap(), 1.0, 1e-15));
        }
        for (i, t) in theta.iter().enumerate().take(4).skip(2) {
            assert!(close(q.functional(i, &id).unwrap(), *t, 1e-15));
        }
    }

    #[test]
    fn qf_at_left_end_is_f() {
        let q = QuasiInterpolant::new(&Partition::from_knots(vec![0.0, 0.3, 0.35, 1.0]).unwrap());
        let f = Integrand::from_fn("exp", f64::exp);
        assert_eq!(q.eval(&f, 0.0).unwrap(), 1.0);
        assert!(close(q.eval(&f, 1.0).unwrap(), 1f64.exp(), 1e-15));
    }

    #[test]
    fn lebesgue_at_end_is_one() {
        let q = uniform(6);
        assert!(close(q.lebesgue_function(0.0).unwrap(), 1.0, 1e-15));
        assert!(close(q.lebesgue_function(1.0).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn norm_sample_density_validated() {
        assert!(uniform(3).operator_norm_estimate(1).is_err());
    }
}
