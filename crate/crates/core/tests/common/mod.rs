#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use splinequad::Partition;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random partition of `[a, b]` with `n` steps whose adjacent ratios are at
/// most `max_ratio`.
pub fn random_partition(rng: &mut StdRng, a: f64, b: f64, n: usize, max_ratio: f64) -> Partition {
    let mut steps: Vec<f64> = Vec::with_capacity(n);
    for i in 0..n {
        let h = if i == 0 {
            1.0
        } else {
            let prev = steps[i - 1];
            prev * max_ratio.powf(rng.gen_range(-1.0..=1.0))
        };
        steps.push(h);
    }
    let total: f64 = steps.iter().sum();
    let mut knots = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    knots.push(a);
    for h in &steps[..n - 1] {
        acc += h;
        knots.push(a + (b - a) * acc / total);
    }
    knots.push(b);
    Partition::from_knots(knots).expect("increasing knots")
}

pub fn skewed_knots() -> Vec<f64> {
    vec![-1.0, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0]
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
