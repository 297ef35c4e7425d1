//! Plot-ready data for the demo page. Plain Rust so it can be tested natively.

use splinequad::{
    build_qi_rule_with, weight_bound_report, MomentFormula, Partition, PeanoKernel,
    QuasiInterpolant, Result,
};

/// A sampled curve plus a few scalars worth annotating.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// Abscissae to mark on the plot (roots, knots).
    pub marks: Vec<f64>,
    /// Named scalars shown next to the plot.
    pub stats: Vec<(&'static str, f64)>,
}

/// Knots for one of the preset partitions: `uniform`, `chebyshev`, or `skewed`
/// (a fixed seven-interval partition with mesh ratio 7 on [-1, 1]).
pub fn preset_knots(kind: &str, n: usize) -> Result<Vec<f64>> {
    let p = match kind {
        "uniform" => Partition::uniform(0.0, 1.0, n)?,
        "chebyshev" => Partition::chebyshev(0.0, 1.0, n)?,
        "skewed" => Partition::from_knots(vec![-1.0, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0])?,
        other => {
            return Err(splinequad::Error::InvalidParameter(format!(
                "unknown preset {other:?}"
            )))
        }
    };
    Ok(p.knots().to_vec())
}

/// `K(t)/h⁴` on `samples + 1` equispaced points of [0,1]; marks are the two
/// sign changes.
pub fn kernel(n: usize, samples: usize) -> Result<Series> {
    let k = PeanoKernel::new(n)?;
    let samples = samples.max(1);
    let h4 = k.h().powi(4);
    let mut x = Vec::with_capacity(samples + 1);
    let mut y = Vec::with_capacity(samples + 1);
    for j in 0..=samples {
        let t = j as f64 / samples as f64;
        x.push(t);
        y.push(k.eval(t)? / h4);
    }
    let peak = y.iter().copied().fold(f64::MIN, f64::max);
    let trough = y.iter().copied().fold(f64::MAX, f64::min);
    Ok(Series {
        x,
        y,
        marks: k.roots().to_vec(),
        stats: vec![("h", k.h()), ("max K/h^4", peak), ("min K/h^4", trough)],
    })
}

/// Lebesgue function of the quasi-interpolant on `knots`, sampled
/// `per_interval + 1` times per subinterval.
pub fn lebesgue(knots: &[f64], per_interval: usize) -> Result<Series> {
    let p = Partition::from_knots(knots.to_vec())?;
    let q = QuasiInterpolant::new(&p);
    let per_interval = per_interval.max(2);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for w in p.knots().windows(2) {
        for j in 0..per_interval {
            let t = w[0] + (w[1] - w[0]) * j as f64 / per_interval as f64;
            x.push(t);
            y.push(q.lebesgue_function(t)?);
        }
    }
    x.push(p.b());
    y.push(q.lebesgue_function(p.b())?);
    Ok(Series {
        x,
        y,
        marks: p.knots().to_vec(),
        stats: vec![
            ("norm estimate", q.operator_norm_estimate(per_interval)?),
            ("mesh ratio", p.mesh_ratio()),
        ],
    })
}

/// Nodes and weights of the QI rule on `knots`.
pub fn weights(knots: &[f64], simplified_moments: bool) -> Result<Series> {
    let p = Partition::from_knots(knots.to_vec())?;
    let formula = if simplified_moments {
        MomentFormula::Simplified
    } else {
        MomentFormula::Exact
    };
    let rule = build_qi_rule_with(&p, formula);
    let report = weight_bound_report(&rule, &p);
    Ok(Series {
        x: rule.nodes().to_vec(),
        y: rule.weights().to_vec(),
        marks: p.knots().to_vec(),
        stats: vec![
            ("sum |w|", report.sum_abs),
            ("sum w", rule.weights().iter().sum()),
            ("bound 3(b-a)", report.bound3),
            ("mesh-ratio bound", report.bound_r),
            ("negative weights", report.negative_indices.len() as f64),
        ],
    })
}
