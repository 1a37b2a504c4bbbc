//! Cross-module invariants of a synthesized wave function: exact
//! interpolation, Parseval, and minimality against perturbations that vanish
//! at the nodes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::prolate::{NodeGeometry, NodeSpec};
use crate::synth::{synthesize, Wavefunction};
use crate::xprec::{estimate_required_bits, PrecisionContext, XComplex, XReal};

/// max_k|ψ(x_k) − a_k| ≤ this · ‖a‖∞
pub const INTERPOLATION_TOL: f64 = 1e-20;
/// |∫|ψ̃|² − a†S⁻¹a| ≤ this · a†S⁻¹a
pub const PARSEVAL_TOL: f64 = 1e-10;
/// |⟨ψ, g⟩| ≤ this · ‖ψ‖‖g‖, and ‖ψ + g‖² ≥ (1 − this)·‖ψ‖²
pub const MINIMALITY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One `PASS name: detail` or `FAIL name: detail` line per check.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
            .collect()
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(PropertyCheck { name: name.to_string(), passed, detail });
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalityStats {
    pub trials: usize,
    /// max |⟨ψ, g⟩| / (‖ψ‖‖g‖)
    pub worst_overlap: f64,
    /// min (‖ψ + g‖² − ‖ψ‖²) / ‖ψ‖²
    pub worst_gain: f64,
    pub bits: u32,
}

impl MinimalityStats {
    pub fn orthogonal(&self) -> bool {
        self.worst_overlap <= MINIMALITY_TOL
    }

    pub fn minimal(&self) -> bool {
        self.worst_gain >= -MINIMALITY_TOL
    }
}

/// Precision that keeps ψ's nodes plus up to three extra points, at least
/// half the smallest node gap apart, well conditioned.
fn perturbation_context(psi: &Wavefunction) -> Result<PrecisionContext> {
    let geom = psi.geometry();
    let ctx = psi.context();
    let lambda = geom.lambda_min();
    let gap = geom.min_spacing().unwrap_or_else(|| lambda.clone() / 2u32);
    let mut ratio = gap / 2u32 / &lambda;
    if ratio > 0.25 {
        ratio = ctx.real(0.25);
    }
    let base = estimate_required_bits(geom.len() + 3, &ratio)?;
    PrecisionContext::with_guard(base.max(ctx.bits() - ctx.guard_bits()), ctx.guard_bits().max(32))
}

/// A bandlimited g with g(x_k) = 0 at every node of `geom`: the minimum-norm
/// interpolant of zeros at the nodes and random complex values at one to
/// three extra points beyond either end of the node span.
pub fn null_perturbation(geom: &NodeGeometry, ctx: PrecisionContext, rng: &mut impl Rng) -> Result<Wavefunction> {
    let lambda = geom.lambda_min();
    let gap = geom.min_spacing().unwrap_or_else(|| lambda.clone() / 2u32);
    let xs = geom.xs();
    let extra = rng.gen_range(1..=3usize);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for j in 1..=extra {
        let offset = gap.clone() * (j as f64 + rng.gen_range(0.0..0.5));
        if rng.gen_bool(0.5) {
            right.push(xs[xs.len() - 1].clone() + offset);
        } else {
            left.push(xs[0].clone() - offset);
        }
    }
    left.reverse();
    let mut points = Vec::with_capacity(xs.len() + extra);
    let mut amps = Vec::with_capacity(xs.len() + extra);
    let random_amp = |rng: &mut dyn rand::RngCore| {
        XComplex::new(ctx.real(rng.gen_range(-1.0..1.0)), ctx.real(rng.gen_range(-1.0..1.0)))
    };
    for y in left {
        points.push(ctx.adopt(&y));
        amps.push(random_amp(rng));
    }
    for x in xs {
        points.push(ctx.adopt(x));
        amps.push(XComplex::zero(ctx.bits()));
    }
    for y in right {
        points.push(ctx.adopt(&y));
        amps.push(random_amp(rng));
    }
    let g = NodeGeometry::new(points, ctx.adopt(geom.p_max()), ctx.adopt(geom.hbar()))?;
    synthesize(&NodeSpec::new(g, amps)?, ctx)
}

/// ⟨ψ, g⟩ and ‖ψ + g‖² by momentum quadrature for `trials` seeded
/// perturbations.
pub fn minimality_suite(psi: &Wavefunction, trials: usize, seed: u64) -> Result<MinimalityStats> {
    let ctx = perturbation_context(psi)?;
    let psi = synthesize(&psi.nodes().with_precision(&ctx), ctx)?;
    let geom = psi.geometry().clone();
    let psi_norm = psi.momentum_norm_sq();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_overlap = 0.0f64;
    let mut worst_gain = f64::INFINITY;
    for _ in 0..trials {
        let g = null_perturbation(&geom, ctx, &mut rng)?;
        let overlap = psi.inner_product(&g)?.abs();
        let g_norm = g.momentum_norm_sq();
        let scale = (psi_norm.clone() * &g_norm).sqrt();
        worst_overlap = worst_overlap.max((overlap / scale).to_f64());
        let sum = psi.norm_sq_of_sum(&g)?;
        worst_gain = worst_gain.min(((sum - &psi_norm) / &psi_norm).to_f64());
    }
    Ok(MinimalityStats { trials, worst_overlap, worst_gain, bits: ctx.bits() })
}

fn inf_norm(amps: &[XComplex], prec: u32) -> XReal {
    amps.iter().map(XComplex::abs).fold(XReal::new(prec), |m, a| if a > m { a } else { m })
}

/// Runs the invariant suite on ψ; `trials` perturbations for minimality.
pub fn verify_wavefunction(psi: &Wavefunction, trials: usize, seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let prec = psi.context().bits();

    let residual = psi.interpolation_residual();
    let scale = inf_norm(psi.node_amplitudes(), prec);
    let rel = (residual / &scale).to_f64();
    report.push(
        "interpolation",
        rel < INTERPOLATION_TOL,
        format!("max|psi(x_k) - a_k| / max|a_k| = {rel:.3e} (tol {INTERPOLATION_TOL:e})"),
    );

    let parseval = psi.momentum_norm_sq();
    let rel = ((parseval - psi.norm_sq()) / psi.norm_sq()).abs().to_f64();
    report.push(
        "parseval",
        rel < PARSEVAL_TOL,
        format!("|int |psi~|^2 dp - a'S^-1 a| / a'S^-1 a = {rel:.3e} (tol {PARSEVAL_TOL:e})"),
    );

    let stats = minimality_suite(psi, trials, seed)?;
    report.push(
        "orthogonality",
        stats.orthogonal(),
        format!(
            "max |<psi,g>|/(|psi||g|) = {:.3e} over {} perturbations (tol {MINIMALITY_TOL:e})",
            stats.worst_overlap, stats.trials
        ),
    );
    report.push(
        "minimality",
        stats.minimal(),
        format!("min (|psi+g|^2 - |psi|^2)/|psi|^2 = {:.3e} over {} perturbations", stats.worst_gain, stats.trials),
    );
    Ok(report)
}
