mod common;

use common::{oracle_f64, oracle_list};
use proptest::prelude::*;
use superosc::scaling::{fit_line, sweep_dx, sweep_n, AmplitudeSource, SweepConfig};
use superosc::xprec::{to_decimal, PrecisionContext};

/// 0.2·10^(−i/6), i = 0..=6, as exact decimal strings of 200-bit values.
fn geometric_grid() -> Vec<String> {
    let ctx = PrecisionContext::new(200).unwrap();
    let tenth = ctx.parse("0.1").unwrap();
    (0..=6)
        .map(|i| {
            let f = tenth.clone().ln() * i as u32 / 6u32;
            to_decimal(&(f.exp() * ctx.parse("0.2").unwrap()))
        })
        .collect()
}

#[test]
fn dx_exponents_match_oracle() {
    let grid = geometric_grid();
    let refs: Vec<&str> = grid.iter().map(String::as_str).collect();
    for n in [2usize, 3, 4] {
        let report = sweep_dx(&SweepConfig::vary_dx(n, &refs)).unwrap();
        assert!(report.complete);
        let alpha = report.exponent.unwrap();
        let want = oracle_f64(&format!("alpha_n{n}"));
        assert!((alpha - want).abs() < 1e-9, "N={n}: {alpha} vs {want}");
        assert_eq!(report.fit.as_ref().unwrap().points, 7);
    }
}

#[test]
fn n_sweep_matches_oracle_values() {
    let report = sweep_n(&SweepConfig::vary_n("0.1", 4..=16)).unwrap();
    let want = oracle_list("smin_sweepN_r01");
    let probe = PrecisionContext::new(256).unwrap();
    for (p, w) in report.points.iter().zip(&want) {
        let got = probe.parse(p.s_min.as_ref().unwrap()).unwrap();
        let w = probe.parse(w).unwrap();
        assert!(common::rel_err(&got, &w) < 1e-30, "N = {}", p.n);
    }
    let gamma = report.exponent.unwrap();
    assert!((gamma - oracle_f64("gamma_r01")).abs() < 1e-9);
    let (front, back) = report.gamma_halves().unwrap();
    assert!((front - oracle_f64("gamma_r01_front")).abs() < 1e-9);
    assert!((back - oracle_f64("gamma_r01_back")).abs() < 1e-9);
    // the N^{1/2} prefactor is what makes the log model straight
    let plain = report.uncorrected_fit.as_ref().unwrap().max_residual;
    let corrected = report.fit.as_ref().unwrap().max_residual;
    assert!((plain - oracle_f64("maxres_plain_r01")).abs() < 1e-9);
    assert!((corrected - oracle_f64("maxres_corrected_r01")).abs() < 1e-9);
}

#[test]
fn gamma_grows_as_spacing_shrinks() {
    let g = |r: &str| sweep_n(&SweepConfig::vary_n(r, 4..=10)).unwrap().exponent.unwrap();
    let (a, b, c) = (g("0.2"), g("0.1"), g("0.05"));
    assert!(a < b && b < c, "{a} {b} {c}");
}

#[test]
fn s_min_is_monotone_along_both_axes() {
    let grid = ["0.3", "0.2", "0.1", "0.05", "0.02"];
    let mut previous: Option<Vec<f64>> = None;
    for n in 2..=5 {
        let report = sweep_dx(&SweepConfig::vary_dx(n, &grid)).unwrap();
        let s: Vec<f64> = report.s_min_values().into_iter().map(Option::unwrap).collect();
        assert!(s.windows(2).all(|w| w[1] < w[0]), "N={n}: {s:?}");
        if let Some(prev) = &previous {
            // adding a node can only lower the smallest eigenvalue (interlacing)
            assert!(s.iter().zip(prev).all(|(a, b)| a <= b));
        }
        previous = Some(s);
    }
}

#[test]
fn alternating_amplitudes_never_beat_the_eigenvector() {
    let mut cfg = SweepConfig::vary_n("0.1", [3, 5, 7, 9]);
    let best = sweep_n(&cfg).unwrap();
    cfg.amplitudes = AmplitudeSource::Alternating;
    let alt = sweep_n(&cfg).unwrap();
    let probe = PrecisionContext::new(256).unwrap();
    for (b, a) in best.points.iter().zip(&alt.points) {
        let b = probe.parse(b.amplitude.as_ref().unwrap()).unwrap();
        let a = probe.parse(a.amplitude.as_ref().unwrap()).unwrap();
        assert!(b <= a);
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = SweepConfig::vary_dx(3, &["0.2", "0.1", "0.05", "0.025"]);
    let a = sweep_dx(&cfg).unwrap();
    let b = sweep_dx(&cfg).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    let back: superosc::scaling::ScalingReport = serde_json::from_str(&a.to_json().unwrap()).unwrap();
    assert_eq!(back.points.len(), 4);
    assert_eq!(back.exponent, a.exponent);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fit_recovers_a_noiseless_line(slope in -10.0f64..10.0, icpt in -50.0f64..50.0, m in 3usize..20) {
        let xs: Vec<f64> = (0..m).map(|i| i as f64 * 0.7 - 2.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| slope * x + icpt).collect();
        let f = fit_line(&xs, &ys).unwrap();
        prop_assert!((f.slope - slope).abs() < 1e-9);
        prop_assert!((f.intercept - icpt).abs() < 1e-8);
        prop_assert!(f.max_residual < 1e-8);
    }
}
