//! Derived values checked against independent computations.

mod common;

use splinequad::funclib::{builtin, oracle_integral, Integrand};
use splinequad::peano::{simpson_error_reference, PeanoKernel};
use splinequad::quadrature::{
    bspline_moments, build_qi_rule, extrapolated_qs, extrapolated_qs_dd, simpson_dd,
};
use splinequad::summation::DoubleDouble;
use splinequad::{Partition, QuasiInterpolant};

use common::{random_partition, rel, rng, skewed_knots};

const GL3: [(f64, f64); 3] = [
    (-0.774_596_669_241_483_4, 5.0 / 9.0),
    (0.0, 8.0 / 9.0),
    (0.774_596_669_241_483_4, 5.0 / 9.0),
];

/// Σ over subintervals of 3-point Gauss–Legendre; exact for piecewise quintics.
fn piecewise_gauss(knots: &[f64], f: impl Fn(f64) -> f64) -> f64 {
    knots
        .windows(2)
        .map(|w| {
            let (c, r) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
            r * GL3.iter().map(|(x, wt)| wt * f(c + r * x)).sum::<f64>()
        })
        .sum()
}

#[test]
fn moments_match_integrated_bsplines() {
    let mut r = rng(1);
    let mut parts = vec![
        Partition::from_knots(vec![0.0, 1.0]).unwrap(),
        Partition::from_knots(vec![0.0, 0.2, 1.0]).unwrap(),
        Partition::from_knots(skewed_knots()).unwrap(),
    ];
    for n in [3, 7, 20] {
        parts.push(random_partition(&mut r, -2.0, 3.0, n, 30.0));
    }
    for p in parts {
        let q = QuasiInterpolant::new(&p);
        let w = bspline_moments(&p);
        for (i, wi) in w.iter().enumerate() {
            let oracle = piecewise_gauss(p.knots(), |x| q.bspline(i, x).unwrap());
            assert!(
                (wi - oracle).abs() <= 1e-15 * p.width() * 4.0,
                "n={}, i={i}: {wi} vs {oracle}",
                p.n()
            );
        }
        let total: f64 = w.iter().sum();
        assert!(rel(total, p.width()) <= 1e-14);
    }
}

#[test]
fn single_interval_lebesgue_constant() {
    // Q on one interval is quadratic interpolation at a, mid, b: Λ peaks at 5/4
    let p = Partition::from_knots(vec![0.0, 1.0]).unwrap();
    let q = QuasiInterpolant::new(&p);
    let brute = (0..=100_000)
        .map(|j| q.lebesgue_function(j as f64 / 100_000.0).unwrap())
        .fold(0.0f64, f64::max);
    assert!((brute - 1.25).abs() < 1e-9, "{brute}");
    let est = q.operator_norm_estimate(40).unwrap();
    assert!((est - 1.25).abs() < 1e-12, "{est}");
}

#[test]
fn norm_bounds() {
    let q = QuasiInterpolant::new(&Partition::from_knots(skewed_knots()).unwrap());
    let v = q.operator_norm_estimate(200).unwrap();
    assert!((1.0..=3.0).contains(&v), "{v}");
    let q = QuasiInterpolant::new(&Partition::uniform(0.0, 1.0, 20).unwrap());
    assert!((q.operator_norm_estimate(40).unwrap() - 305.0 / 207.0).abs() < 1e-3);
}

#[test]
fn quadratic_spline_expansion() {
    // e_2 = Σ x_{i-1} x_i B_i, so μ_i(e_2) must equal x_{i-1} x_i
    let p = Partition::from_knots(vec![0.0, 0.1, 0.45, 0.5, 0.8, 1.3]).unwrap();
    let q = QuasiInterpolant::new(&p);
    let sq = Integrand::from_fn("x^2", |x| x * x);
    let k = p.knots();
    let n = p.n();
    let knot = |j: isize| k[j.clamp(0, n as isize) as usize];
    for i in 0..=n + 1 {
        let mu = q.functional(i, &sq).unwrap();
        let want = knot(i as isize - 1) * knot(i as isize);
        assert!((mu - want).abs() < 1e-14, "i={i}: {mu} vs {want}");
    }
    let s = q.apply(&sq).unwrap();
    for j in 0..100 {
        let x = (1.3 * j as f64 / 99.0).min(1.3);
        assert!((s.eval(x).unwrap() - x * x).abs() <= 1e-13);
    }
}

#[test]
fn qi_approximation_of_f1() {
    let p = Partition::uniform(0.0, 1.0, 64).unwrap();
    let q = QuasiInterpolant::new(&p);
    let f = builtin("f1").unwrap();
    let s = q.apply(&f).unwrap();
    let worst = (0..=1000)
        .map(|j| {
            let x = j as f64 / 1000.0;
            (s.eval(x).unwrap() - f.eval(x).unwrap()).abs()
        })
        .fold(0.0f64, f64::max);
    assert!(worst <= 1e-4, "{worst:e}");
    assert!(q.eval(&f, 0.37).is_ok());
    assert!((q.eval(&f, 0.37).unwrap() - s.eval(0.37).unwrap()).abs() < 1e-15);
}

#[test]
fn chebyshev_partition_integrates_cubics() {
    let p = Partition::chebyshev(0.0, 1.0, 4).unwrap();
    let f = Integrand::from_fn("x^3", |x| x * x * x);
    let v = build_qi_rule(&p).apply(&f).unwrap();
    assert!((v - 0.25).abs() <= 1e-13);
}

#[test]
fn simpson_on_quartic() {
    let quartic = Integrand::from_fn("x^4", |x| x.powi(4));
    let fifth = DoubleDouble::ratio(1.0, 5.0);
    for n in [2usize, 4, 10, 16, 64] {
        let p = Partition::uniform(0.0, 1.0, n).unwrap();
        let h = 1.0 / n as f64;
        let e = (fifth - simpson_dd(&p, &quartic).unwrap()).to_f64();
        // non-dyadic nodes carry their own rounding into f(x)
        let tol = if n.is_power_of_two() { 1e-13 } else { 1e-10 };
        assert!(rel(e, -24.0 * h.powi(4) / 180.0) <= tol, "n = {n}");
        assert!(e.abs() <= simpson_error_reference(24.0, h).unwrap() * (1.0 + 1e-10));
    }
}

#[test]
fn quartic_errors_in_closed_form() {
    let quartic = Integrand::from_fn("x^4", |x| x.powi(4));
    let fifth = DoubleDouble::ratio(1.0, 5.0);
    for n in [16usize, 64, 256] {
        let p = Partition::uniform(0.0, 1.0, n).unwrap();
        let h = 1.0 / n as f64;
        let e_q = (fifth - build_qi_rule(&p).apply_dd(&quartic).unwrap()).to_f64();
        let e_s = (fifth - simpson_dd(&p, &quartic).unwrap()).to_f64();
        let e_qs = (fifth - extrapolated_qs_dd(&p, &quartic).unwrap()).to_f64();
        assert!(
            rel(e_q, 23.0 / 240.0 * h.powi(4) - h.powi(5) / 8.0) <= 1e-8,
            "n = {n}"
        );
        assert!(rel(e_s, -2.0 / 15.0 * h.powi(4)) <= 1e-8, "n = {n}");
        // the h^4 terms cancel, leaving the QI boundary term scaled by 32/55
        assert!(
            rel(e_qs, -4.0 / 55.0 * h.powi(5)) <= 1e-6,
            "n = {n}: {e_qs:e}"
        );
        let ratio = e_s / e_q;
        assert!(rel(ratio.abs(), 32.0 / 23.0) < 0.03 * (64.0 / n as f64));
    }
}

#[test]
fn example_extrapolated_values() {
    let f1 = builtin("f1").unwrap();
    let p = Partition::uniform(0.0, 1.0, 64).unwrap();
    let e = f1.exact().unwrap().value - extrapolated_qs(&p, &f1).unwrap();
    assert!((e - 1.13e-9).abs() < 0.02e-9, "{e:e}");
    let f2 = builtin("f2").unwrap();
    let p = Partition::uniform(0.0, 1.0, 128).unwrap();
    let e = f2.exact().unwrap().value - extrapolated_qs(&p, &f2).unwrap();
    assert!((e + 3.7e-9).abs() < 0.2e-9, "{e:e}");
    let e_q = f1.exact().unwrap().value
        - build_qi_rule(&Partition::uniform(0.0, 1.0, 64).unwrap())
            .apply(&f1)
            .unwrap();
    assert!((e_q + 8.6e-8).abs() < 0.1e-8, "{e_q:e}");
}

#[test]
fn kernel_first_piece_closed_form() {
    let k = PeanoKernel::new(12).unwrap();
    let h = k.h();
    for j in 0..=50 {
        let t = 0.5 * h * j as f64 / 50.0;
        let want = 0.25 * t.powi(4) - h * t.powi(3) / 9.0;
        assert!((k.eval(t).unwrap() - want).abs() <= 1e-12 * h.powi(4));
    }
}

#[test]
fn kernel_interior_factorisation() {
    let n = 12;
    let k = PeanoKernel::new(n).unwrap();
    let h = k.h();
    let h4 = h.powi(4);
    // pieces I_i = [(i - 3/2) h, (i - 1/2) h] for 3 <= i <= n - 1
    for i in 3..n {
        let lo = (i as f64 - 1.5) * h;
        let hi = (i as f64 - 0.5) * h;
        for j in 0..20 {
            let t = lo + (hi - lo) * (j as f64 + 0.5) / 20.0;
            let want = h4 / 64.0 + 0.25 * (t - lo).powi(2) * (t - hi).powi(2);
            assert!(rel(k.eval(t).unwrap(), want) <= 1e-10, "i={i}, t={t}");
        }
    }
    for i in 3..=n - 2 {
        let max = k.eval((i as f64 - 1.0) * h).unwrap();
        let min = k.eval((i as f64 - 0.5) * h).unwrap();
        assert!(rel(max, h4 / 32.0) <= 1e-10);
        assert!(rel(min, h4 / 64.0) <= 1e-10);
    }
}

#[test]
fn kernel_second_piece_maximum() {
    let k = PeanoKernel::new(16).unwrap();
    let h = k.h();
    let h4 = h.powi(4);
    let tbar = (35.0 + 217f64.sqrt()) / 48.0 * h;
    // K_2'(t) = K_1'(t) - (21h/8)(t - h/2)², K_1'(t) = t²(t - h/3)
    let dk2 = tbar * tbar * (tbar - h / 3.0) - 21.0 * h / 8.0 * (tbar - h / 2.0).powi(2);
    assert!(dk2.abs() <= 1e-15 * h.powi(3));
    let peak = (0..=2000)
        .map(|j| k.eval(0.5 * h + h * j as f64 / 2000.0).unwrap())
        .fold(f64::MIN, f64::max);
    assert!(rel(peak, k.eval(tbar).unwrap()) < 1e-6);
    assert!(
        (peak / h4 - 0.03).abs() < 0.005 && peak <= h4 / 32.0,
        "{}",
        peak / h4
    );
    assert!(rel(k.eval(1.5 * h).unwrap(), h4 / 64.0) < 1e-10);
}

#[test]
fn sign_structure_across_sizes() {
    for n in [5, 6, 16, 33, 64] {
        let k = PeanoKernel::new(n).unwrap();
        let rep = k.verify_sign_structure(10_000).unwrap();
        assert!(
            rep.ok,
            "n = {n}: {:?}",
            &rep.violations[..rep.violations.len().min(3)]
        );
        for j in 1..10_000 {
            let t = j as f64 / 10_000.0;
            let (a, b) = (k.eval(t).unwrap(), k.eval(1.0 - t).unwrap());
            assert!(a.signum() == b.signum() || a.abs() < 1e-18);
        }
    }
}

#[test]
fn total_kernel_integral() {
    for n in [8, 16, 30] {
        let k = PeanoKernel::new(n).unwrap();
        let h = k.h();
        let want = 23.0 / 960.0 * h.powi(4) - h.powi(5) / 32.0;
        let got = k.total_integral();
        assert!(rel(got, want) < 1e-10, "n = {n}: {got:e} vs {want:e}");
    }
}

#[test]
fn peano_representation_of_the_error() {
    let k = PeanoKernel::new(16).unwrap();
    let p = Partition::uniform(0.0, 1.0, 16).unwrap();
    let rule = build_qi_rule(&p);
    type Case = (Integrand, DoubleDouble, fn(f64) -> f64);
    let cases: [Case; 2] = [
        (
            Integrand::from_fn("x^4", |x| x.powi(4)),
            DoubleDouble::ratio(1.0, 5.0),
            |_| 24.0,
        ),
        (
            Integrand::from_fn("x^5", |x| x.powi(5)),
            DoubleDouble::ratio(1.0, 6.0),
            |t| 120.0 * t,
        ),
    ];
    for (f, exact, d4) in cases {
        let lhs = (exact - rule.apply_dd(&f).unwrap()).to_f64();
        let rhs = k.weighted_integral(d4) / 6.0;
        assert!(rel(lhs, rhs) <= 1e-10, "{}: {lhs:e} vs {rhs:e}", f.label());
    }
}

#[test]
fn error_bounds_hold() {
    let quartic = Integrand::from_fn("x^4", |x| x.powi(4));
    let k = PeanoKernel::new(16).unwrap();
    let h = k.h();
    let p = Partition::uniform(0.0, 1.0, 16).unwrap();
    let e =
        (DoubleDouble::ratio(1.0, 5.0) - build_qi_rule(&p).apply_dd(&quartic).unwrap()).to_f64();
    assert!(e.abs() <= k.error_bound(24.0).unwrap());
    let want = 24.0 * (23.0 / 5760.0) * h.powi(4) - 24.0 / 192.0 * h.powi(5);
    assert!(rel(e, want) <= 1e-10);

    let sine = Integrand::from_fn("sin", f64::sin);
    let exact = 1.0 - 1f64.cos();
    for n in [8, 16, 32, 64, 128] {
        let k = PeanoKernel::new(n).unwrap();
        let p = Partition::uniform(0.0, 1.0, n).unwrap();
        let e = exact - build_qi_rule(&p).apply(&sine).unwrap();
        assert!(e.abs() <= k.error_bound(1.0).unwrap(), "n = {n}: {e:e}");
    }
}

#[test]
fn oracle_reproduces_reference_integrals() {
    for (name, tol) in [("f1", 1e-12), ("f2", 1e-12), ("f3", 1e-12)] {
        let f = builtin(name).unwrap();
        let (a, b) = f.domain().unwrap();
        let r = oracle_integral(&f, a, b, 1e-13).unwrap();
        assert!((r.value - f.exact().unwrap().value).abs() <= tol, "{name}");
        // same value regardless of how the interval is presented
        let again = oracle_integral(&f, a, b, 1e-13).unwrap();
        assert_eq!(r, again);
    }
}
