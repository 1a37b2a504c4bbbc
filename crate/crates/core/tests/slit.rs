mod common;

use common::{alternating, auto_ctx, oracle_f64};
use superosc::slit::{acceleration_summary, truncate_and_transform, SlitWindow};
use superosc::synth::synthesize;
use superosc::xprec::PrecisionContext;

fn n10() -> superosc::synth::Wavefunction {
    let ctx = auto_ctx(10, "0.1");
    synthesize(&alternating(10, "0.1", &ctx), ctx).unwrap()
}

#[test]
fn node_span_matches_oracle() {
    let psi = n10();
    let ctx = psi.context();
    let win = SlitWindow::node_span(psi.clone()).unwrap();
    let p = ctx.pi() * 40u32;
    let report = truncate_and_transform(&win, &p, win.recommended_n_quad()).unwrap();
    let e = report.expectation_abs_p.to_f64();
    let f = report.fraction_above_cutoff.to_f64();
    let ratio = (report.grid_mass.clone() / &report.window_mass).to_f64();
    eprintln!("E|p| = {e}, fraction = {f}, grid/window = {ratio}, quad_error = {}", report.quad_error);
    assert!((e / oracle_f64("slit_n10_expect_abs_p") - 1.0).abs() < 1e-3);
    assert!((f - oracle_f64("slit_n10_fraction_above")).abs() < 1e-3);
    assert!((ratio - oracle_f64("slit_n10_grid_mass_over_window_mass")).abs() < 1e-3);
    let summary = acceleration_summary(&report, psi.nodes());
    assert!(summary.self_accelerated);
    assert!(summary.expectation_over_superoscillation > 0.5 && summary.expectation_over_superoscillation < 2.0);
}

fn n6() -> superosc::synth::Wavefunction {
    let ctx = auto_ctx(6, "0.1");
    synthesize(&alternating(6, "0.1", &ctx), ctx).unwrap()
}

#[test]
fn flanks_dilute_the_acceleration() {
    let psi = n6();
    let ctx = psi.context();
    let p = ctx.pi() * 40u32;
    let tight = SlitWindow::node_span(psi.clone()).unwrap();
    let wide = SlitWindow::new(psi, &ctx.real(-0.4), &ctx.real(0.9)).unwrap();
    let a = truncate_and_transform(&tight, &p, tight.recommended_n_quad()).unwrap();
    let b = truncate_and_transform(&wide, &p, wide.recommended_n_quad()).unwrap();
    assert!(b.fraction_above_cutoff < a.fraction_above_cutoff);
    assert!(b.captured_probability >= a.captured_probability);
}

#[test]
fn doubling_n_quad_is_converged() {
    let psi = n6();
    let ctx = psi.context();
    let win = SlitWindow::node_span(psi).unwrap();
    let p = ctx.pi() * 40u32;
    let n = win.recommended_n_quad();
    let a = truncate_and_transform(&win, &p, n).unwrap();
    let b = truncate_and_transform(&win, &p, 2 * n).unwrap();
    let rel = ((a.expectation_abs_p.clone() - &b.expectation_abs_p) / &b.expectation_abs_p).abs();
    assert!(rel < 1e-6, "{}", rel.to_f64());
    assert!((a.density_mass() - 1u32).abs() < 1e-30);
    assert!(a.density.iter().all(|d| *d >= 0));
}

#[test]
fn boost_restores_node_amplitudes() {
    let psi = n6();
    let ctx = psi.context();
    let unit = psi.normalize().unwrap();
    let win = SlitWindow::new(psi, &ctx.real(-0.05), &ctx.real(0.55)).unwrap();
    let r = truncate_and_transform(&win, &(ctx.pi() * 40u32), win.recommended_n_quad()).unwrap();
    assert_eq!(r.renormalized_amplitudes.len(), 6);
    for (k, amp) in &r.renormalized_amplitudes {
        let want = unit.node_amplitudes()[*k].scale(&r.boost);
        let d = (amp - &want).abs() / want.abs();
        assert!(d < 1e-20, "node {k}: {}", d.to_f64());
    }
    assert!(r.captured_probability > 0 && r.captured_probability <= 1);
}

#[test]
fn window_growth_never_loses_probability() {
    let psi = n6();
    let ctx = psi.context();
    let p = ctx.pi() * 40u32;
    let mut last = ctx.zero();
    for hi in ["0.1", "0.2", "0.35", "0.5"] {
        let win = SlitWindow::new(psi.clone(), &ctx.zero(), &ctx.parse(hi).unwrap()).unwrap();
        let r = truncate_and_transform(&win, &p, win.recommended_n_quad()).unwrap();
        assert!(r.captured_probability >= last);
        last = r.captured_probability;
    }
}

// Whole-line stand-in: ±5 λ_min around a single sinc.
#[test]
fn wide_window_on_sinc_is_nearly_a_box() {
    let ctx = PrecisionContext::new(96).unwrap();
    let geom = superosc::prolate::NodeGeometry::new(vec![ctx.zero()], ctx.pi(), ctx.one()).unwrap();
    let psi = synthesize(&superosc::prolate::NodeSpec::real(geom, vec![ctx.one()]).unwrap(), ctx).unwrap();
    let win = SlitWindow::new(psi.clone(), &ctx.real(-10), &ctx.real(10)).unwrap();
    let r = truncate_and_transform(&win, &(ctx.pi() * 4u32), win.recommended_n_quad()).unwrap();
    let f = r.fraction_above_cutoff.to_f64();
    assert!(f < 0.02, "{f}");
    // flat box: density ≈ 1/(2 p_max) well inside the band
    let box_height = 1.0 / (2.0 * std::f64::consts::PI);
    for (p, d) in r.momenta.iter().zip(&r.density) {
        if p.to_f64().abs() < 0.5 * std::f64::consts::PI {
            assert!((d.to_f64() / box_height - 1.0).abs() < 0.1, "p = {}", p.to_f64());
        }
    }
    let summary = acceleration_summary(&r, psi.nodes());
    assert!(!summary.self_accelerated && summary.expectation_over_p_max <= 1.0);
    // Parseval: the windowed transform keeps the window mass up to the tail
    let kept = (r.grid_mass.clone() / &r.window_mass).to_f64();
    assert!(kept > 0.99 && kept <= 1.0 + 1e-12, "{kept}");
    assert!(r.window_mass < *psi.norm_sq());
}

#[test]
fn csv_and_header() {
    let psi = n6();
    let ctx = psi.context();
    let win = SlitWindow::node_span(psi).unwrap();
    let r = truncate_and_transform(&win, &(ctx.pi() * 40u32), win.recommended_n_quad()).unwrap();
    let csv = r.to_csv(6);
    assert!(csv.starts_with("p,density,log10_density\n"));
    assert_eq!(csv.lines().count(), r.momenta.len() + 1);
    let row = csv.lines().nth(1).unwrap();
    let p: Vec<&str> = row.split(',').collect();
    assert_eq!(ctx.parse(p[0]).unwrap(), r.momenta[0]);
    let h: superosc::slit::SlitHeader = serde_json::from_str(&r.header_json().unwrap()).unwrap();
    assert_eq!(h.grid_points, r.momenta.len());
    assert!(r.tail_bound > 0);
}
