//! Partitions of a bounded interval `[a, b]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Strictly increasing knots `x_0 = a < x_1 < ... < x_n = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    knots: Vec<f64>,
    steps: Vec<f64>,
    uniform: bool,
}

impl Partition {
    /// `n` equal subintervals, with `x_i = a + i (b - a) / n` computed per index.
    /// Every steplength is stored as the same value `(b - a) / n`.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        check_interval(a, b, n)?;
        let width = b - a;
        let mut knots: Vec<f64> = (0..=n).map(|i| a + i as f64 * width / n as f64).collect();
        knots[n] = b;
        let mut p = Self::from_knots(knots)?;
        p.steps = vec![width / n as f64; n];
        p.uniform = true;
        Ok(p)
    }

    pub fn from_knots(knots: Vec<f64>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::TooFewKnots(knots.len()));
        }
        for (index, x) in knots.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteKnot { index });
            }
        }
        for index in 1..knots.len() {
            if knots[index] <= knots[index - 1] {
                return Err(Error::NonIncreasingKnots {
                    index,
                    prev: knots[index - 1],
                    value: knots[index],
                });
            }
        }
        let steps = knots.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(Self {
            knots,
            steps,
            uniform: false,
        })
    }

    /// Chebyshev–Gauss–Lobatto knots mapped to `[a, b]`, symmetric about the midpoint.
    pub fn chebyshev(a: f64, b: f64, n: usize) -> Result<Self> {
        check_interval(a, b, n)?;
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut knots = vec![0.0; n + 1];
        for i in 0..=n / 2 {
            // cos(i pi / n) evaluated once and mirrored so x_i + x_{n-i} = a + b
            let c = half * (i as f64 * PI / n as f64).cos();
            knots[i] = mid - c;
            knots[n - i] = mid + c;
        }
        if n.is_multiple_of(2) {
            knots[n / 2] = mid;
        }
        knots[0] = a;
        knots[n] = b;
        Self::from_knots(knots)
    }

    /// Parses the plain-text partition format: one knot per line, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut knots = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let x: f64 = line.parse().map_err(|_| Error::PartitionFile {
                line: lineno + 1,
                msg: format!("not a number: {line:?}"),
            })?;
            knots.push(x);
        }
        Self::from_knots(knots)
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Steplengths `h_1..h_n` (stored 0-based).
    pub fn steps(&self) -> &[f64] {
        &self.steps
    }

    /// Steplength `h_i` with the triple-end-knot convention `h_0 = h_{n+1} = 0`.
    pub fn step(&self, i: usize) -> f64 {
        if i == 0 || i > self.n() {
            0.0
        } else {
            self.steps[i - 1]
        }
    }

    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn a(&self) -> f64 {
        self.knots[0]
    }

    pub fn b(&self) -> f64 {
        self.knots[self.n()]
    }

    pub fn width(&self) -> f64 {
        self.b() - self.a()
    }

    /// Largest steplength.
    pub fn max_step(&self) -> f64 {
        self.steps.iter().copied().fold(0.0, f64::max)
    }

    /// True when built by [`Partition::uniform`].
    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    /// `θ_0 = a`, `θ_i = (x_{i-1} + x_i) / 2`, `θ_{n+1} = b`.
    pub fn greville_points(&self) -> Vec<f64> {
        let mut theta = Vec::with_capacity(self.n() + 2);
        theta.push(self.a());
        theta.extend(self.knots.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        theta.push(self.b());
        theta
    }

    /// Smallest `r >= 1` with `1/r <= h_{i+1}/h_i <= r` for all adjacent steps.
    pub fn mesh_ratio(&self) -> f64 {
        if self.uniform {
            return 1.0;
        }
        self.steps
            .windows(2)
            .map(|w| (w[1] / w[0]).max(w[0] / w[1]))
            .fold(1.0, f64::max)
    }
}

fn check_interval(a: f64, b: f64, n: usize) -> Result<()> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInterval { a, b });
    }
    if n < 1 {
        return Err(Error::InvalidSize(n));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skewed() -> Partition {
        Partition::from_knots(vec![-1.0, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0]).unwrap()
    }

    #[test]
    fn uniform_knots() {
        let p = Partition::uniform(0.0, 1.0, 4).unwrap();
        assert_eq!(p.knots(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        let p = Partition::uniform(0.0, 1.0, 1).unwrap();
        assert_eq!(p.knots(), &[0.0, 1.0]);
        assert_eq!(p.greville_points(), vec![0.0, 0.5, 1.0]);
        let p = Partition::uniform(-1.0, 1.0, 256).unwrap();
        assert!(p.steps().iter().all(|&h| h == 2.0 / 256.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Partition::uniform(1.0, 1.0, 3),
            Err(Error::InvalidInterval { a: 1.0, b: 1.0 })
        );
        assert_eq!(Partition::uniform(0.0, 1.0, 0), Err(Error::InvalidSize(0)));
        assert!(matches!(
            Partition::from_knots(vec![0.0, 0.5, 0.5, 1.0]),
            Err(Error::NonIncreasingKnots { index: 2, .. })
        ));
        assert_eq!(Partition::from_knots(vec![0.0]), Err(Error::TooFewKnots(1)));
    }

    #[test]
    fn skewed_steps_and_ratio() {
        let p = skewed();
        assert_eq!(p.n(), 7);
        let expected = [0.1, 0.6, 0.1, 0.7, 0.1, 0.35, 0.05];
        for (h, e) in p.steps().iter().zip(expected) {
            assert!((h - e).abs() < 1e-15);
        }
        assert!((p.mesh_ratio() - 7.0).abs() < 1e-12);
        let theta = p.greville_points();
        assert_eq!(theta.len(), 9);
        assert!((theta[1] + 0.95).abs() < 1e-15);
        assert!((theta[2] + 0.6).abs() < 1e-15);
        assert!((theta[7] - 0.975).abs() < 1e-15);
    }

    #[test]
    fn greville_uniform() {
        let p = Partition::uniform(0.0, 1.0, 4).unwrap();
        assert_eq!(
            p.greville_points(),
            vec![0.0, 0.125, 0.375, 0.625, 0.875, 1.0]
        );
    }

    #[test]
    fn mesh_ratio_cases() {
        assert_eq!(Partition::uniform(0.0, 3.0, 7).unwrap().mesh_ratio(), 1.0);
        assert_eq!(
            Partition::from_knots(vec![0.0, 1.0, 3.0])
                .unwrap()
                .mesh_ratio(),
            2.0
        );
        assert_eq!(
            Partition::from_knots(vec![0.0, 1.0]).unwrap().mesh_ratio(),
            1.0
        );
    }

    #[test]
    fn chebyshev_knots() {
        let p = Partition::chebyshev(-1.0, 1.0, 2).unwrap();
        assert_eq!(p.knots(), &[-1.0, 0.0, 1.0]);
        let p = Partition::chebyshev(-1.0, 1.0, 4).unwrap();
        let s = 0.5f64.sqrt();
        for (x, e) in p.knots().iter().zip([-1.0, -s, 0.0, s, 1.0]) {
            assert!((x - e).abs() < 1e-15);
        }
    }

    #[test]
    fn parses_text_format() {
        let p = Partition::parse("# X7\n-1\n-0.9\n\n-0.3\n1\n").unwrap();
        assert_eq!(p.knots(), &[-1.0, -0.9, -0.3, 1.0]);
        assert!(matches!(
            Partition::parse("0\nabc\n"),
            Err(Error::PartitionFile { line: 2, .. })
        ));
    }
}
