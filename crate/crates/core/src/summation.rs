//! Error-free transformations and a double-double accumulator.
//!
//! Every rule in this crate sums `w_i * f(x_i)` through [`CompensatedSum`], which
//! keeps the rounding error of each product and each addition in a second word.
//! The result is as accurate as if the dot product were computed in twice the
//! working precision and then rounded.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// `a + b = s + e` exactly (Knuth).
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// `a * b = p + e` exactly, using a fused multiply-add.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    /// Exact rational `num / den` to double-double accuracy.
    pub fn ratio(num: f64, den: f64) -> Self {
        Self::from(num) / den
    }

    /// Parses a plain decimal such as `-35.880612010038328566` to about 32
    /// significant digits.
    pub fn parse_decimal(text: &str) -> Option<Self> {
        let text = text.trim();
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        let mut acc = Self::ZERO;
        let mut scale = 0usize;
        let mut significant = 0usize;
        for (k, ch) in int.chars().chain(frac.chars()).enumerate() {
            let d = ch.to_digit(10)? as f64;
            let in_frac = k >= int.len();
            if significant >= 32 {
                if !in_frac {
                    scale = scale.checked_sub(1)?;
                    acc = acc * 10.0;
                }
                continue;
            }
            if d != 0.0 || significant > 0 {
                significant += 1;
            }
            acc = acc * 10.0 + d;
            if in_frac {
                scale += 1;
            }
        }
        for _ in 0..scale {
            acc = acc / 10.0;
        }
        Some(if neg { -acc } else { acc })
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::new(s, e + f)
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        let (s, e) = two_sum(self.hi, rhs);
        Self::new(s, e + self.lo)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Sub<f64> for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: f64) -> Self {
        self + (-rhs)
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        Self::new(p, self.lo.mul_add(rhs, e))
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        let q1 = self.hi / rhs;
        // remainder self - q1 * rhs, carried in double-double
        let r = self - DoubleDouble::from(q1) * rhs;
        let q2 = r.hi / rhs;
        let r = r - DoubleDouble::from(q2) * rhs;
        let q3 = r.hi / rhs;
        DoubleDouble::new(q1, q2) + q3
    }
}

/// Running compensated sum (Ogita–Rump–Oishi `Sum2`/`Dot2`).
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    err: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let (s, e) = two_sum(self.sum, v);
        self.sum = s;
        self.err += e;
    }

    /// Adds `a * b` with the product's rounding error retained.
    #[inline]
    pub fn add_product(&mut self, a: f64, b: f64) {
        let (p, ep) = two_prod(a, b);
        let (s, es) = two_sum(self.sum, p);
        self.sum = s;
        self.err += ep + es;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.err
    }

    pub fn to_double_double(&self) -> DoubleDouble {
        DoubleDouble::new(self.sum, self.err)
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of a slice.
pub fn sum(values: &[f64]) -> f64 {
    values.iter().copied().collect::<CompensatedSum>().value()
}
