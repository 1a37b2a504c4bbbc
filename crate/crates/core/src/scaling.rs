//! Parameter sweeps of the smallest prolate eigenvalue.
//!
//! At fixed N, s_min falls like (Δx)^{2(N−1)} as the spacing shrinks; at fixed
//! spacing it falls like N^{1/2}·e^{−γN}. Both laws are checked by least
//! squares on logarithms of s_min computed at per-point precision.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prolate::{NodeGeometry, NodeSpec, ProlateMatrix};
use crate::xprec::{parse_scalar, to_decimal, PrecisionContext, XReal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    FixedNVaryDx,
    FixedDxVaryN,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmplitudeSource {
    /// a = s_min eigenvector: ‖a‖/‖ψ‖ = s_min^{1/2}.
    #[default]
    SminEigenvector,
    /// a_k = (−1)^k: ‖a‖/‖ψ‖ = √N/‖ψ‖.
    Alternating,
}

/// Sweep grid. Spacings are given as Δx/λ_min decimal strings so each point
/// can be parsed at its own working precision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Sweep {
    FixedNVaryDx { n: usize, dx_over_lambda: Vec<String> },
    FixedDxVaryN { dx_over_lambda: String, ns: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub sweep: Sweep,
    pub p_max: String,
    pub hbar: String,
    #[serde(default)]
    pub amplitudes: AmplitudeSource,
    pub guard_bits: u32,
    /// Fixed precision for every point instead of the per-point estimate.
    #[serde(default)]
    pub bits: Option<u32>,
    /// Record wall time per point; off gives byte-identical reports.
    #[serde(default)]
    pub timing: bool,
}

impl SweepConfig {
    pub fn vary_dx(n: usize, dx_over_lambda: &[&str]) -> Self {
        Self::with_sweep(Sweep::FixedNVaryDx { n, dx_over_lambda: dx_over_lambda.iter().map(|s| s.to_string()).collect() })
    }

    pub fn vary_n(dx_over_lambda: &str, ns: impl IntoIterator<Item = usize>) -> Self {
        Self::with_sweep(Sweep::FixedDxVaryN { dx_over_lambda: dx_over_lambda.to_string(), ns: ns.into_iter().collect() })
    }

    fn with_sweep(sweep: Sweep) -> Self {
        Self {
            sweep,
            p_max: "pi".into(),
            hbar: "1".into(),
            amplitudes: AmplitudeSource::default(),
            guard_bits: PrecisionContext::DEFAULT_GUARD_BITS,
            bits: None,
            timing: false,
        }
    }

    pub fn mode(&self) -> SweepMode {
        match self.sweep {
            Sweep::FixedNVaryDx { .. } => SweepMode::FixedNVaryDx,
            Sweep::FixedDxVaryN { .. } => SweepMode::FixedDxVaryN,
        }
    }

    fn validate(&self) -> Result<()> {
        let probe = PrecisionContext::new(128)?;
        let check_ratio = |s: &str| -> Result<()> {
            let r = parse_scalar(s, &probe)?;
            if !(r > 0 && r < 0.5) {
                return Err(Error::InvalidSweep(format!("Δx/λ_min = {s} is outside (0, 1/2)")));
            }
            Ok(())
        };
        match &self.sweep {
            Sweep::FixedNVaryDx { n, dx_over_lambda } => {
                if *n == 0 {
                    return Err(Error::InvalidSweep("N must be at least 1".into()));
                }
                if dx_over_lambda.len() < 4 {
                    return Err(Error::InvalidSweep("grid needs at least 4 points".into()));
                }
                dx_over_lambda.iter().try_for_each(|s| check_ratio(s))
            }
            Sweep::FixedDxVaryN { dx_over_lambda, ns } => {
                check_ratio(dx_over_lambda)?;
                if ns.len() < 4 {
                    return Err(Error::InvalidSweep("grid needs at least 4 points".into()));
                }
                if ns.iter().any(|&n| n < 2) || ns.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidSweep("N grid must be ascending with every N ≥ 2".into()));
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    /// Δx/λ_min or N, as given.
    pub parameter: String,
    pub n: usize,
    pub dx_over_lambda: String,
    pub s_min: Option<String>,
    /// ℓ² norm of the normalized node amplitudes, ‖a‖/‖ψ‖.
    pub amplitude: Option<String>,
    pub bits_used: u32,
    pub wall_time: f64,
    pub error: Option<String>,
    #[serde(skip)]
    ln_s_min: Option<f64>,
    #[serde(skip)]
    ln_dx: f64,
}

/// Least-squares line y = slope·x + intercept.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// max |y − model|
    pub max_residual: f64,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub mode: SweepMode,
    pub config: SweepConfig,
    pub points: Vec<SweepPoint>,
    /// ln s_min against ln Δx (smallest decade), or ln s_min − ½ ln N against N.
    pub fit: Option<LineFit>,
    /// α for Δx sweeps, γ for N sweeps.
    pub exponent: Option<f64>,
    /// 2(N−1) for Δx sweeps.
    pub expected_exponent: Option<f64>,
    /// ln s_min against N without the N^{1/2} factor (N sweeps only).
    pub uncorrected_fit: Option<LineFit>,
    pub complete: bool,
}

pub fn fit_line(xs: &[f64], ys: &[f64]) -> Option<LineFit> {
    let m = xs.len();
    if m < 2 || ys.len() != m {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / m as f64;
    let my = ys.iter().sum::<f64>() / m as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let resid: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| y - slope * x - intercept).collect();
    let ss_res: f64 = resid.iter().map(|r| r * r).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 { if ss_res == 0.0 { 1.0 } else { 0.0 } } else { 1.0 - ss_res / ss_tot };
    let max_residual = resid.iter().fold(0.0f64, |a, r| a.max(r.abs()));
    Some(LineFit { slope, intercept, r_squared, max_residual, points: m })
}

fn ln(x: &XReal) -> f64 {
    x.clone().ln().to_f64()
}

fn evaluate_point(cfg: &SweepConfig, n: usize, ratio_text: &str, parameter: String) -> Result<SweepPoint> {
    let probe = PrecisionContext::new(128)?;
    let ratio_probe = parse_scalar(ratio_text, &probe)?;
    let ctx = match cfg.bits {
        Some(b) => PrecisionContext::new(b)?,
        None => PrecisionContext::for_problem(n, &ratio_probe, cfg.guard_bits)?,
    };
    let started = Instant::now();
    let ratio = parse_scalar(ratio_text, &ctx)?;
    let p_max = parse_scalar(&cfg.p_max, &ctx)?;
    let hbar = parse_scalar(&cfg.hbar, &ctx)?;
    let lambda = ctx.pi() * 2u32 * &hbar / &p_max;
    let dx = ratio * &lambda;
    let mut point = SweepPoint {
        parameter,
        n,
        dx_over_lambda: ratio_text.to_string(),
        s_min: None,
        amplitude: None,
        bits_used: ctx.bits(),
        wall_time: 0.0,
        error: None,
        ln_s_min: None,
        ln_dx: ln(&dx),
    };
    let outcome = (|| -> Result<(XReal, XReal)> {
        let geom = NodeGeometry::equispaced(n, &dx, p_max, hbar)?;
        let prolate = ProlateMatrix::build(&geom, ctx)?;
        let (s_min, _) = prolate.smallest_eigenpair()?;
        let amplitude = match cfg.amplitudes {
            AmplitudeSource::SminEigenvector => s_min.clone().sqrt(),
            AmplitudeSource::Alternating => {
                let spec = NodeSpec::alternating(prolate.geometry().clone());
                (ctx.real(n as u32) / prolate.quadratic_form_inv(spec.amps())?).sqrt()
            }
        };
        Ok((s_min, amplitude))
    })();
    match outcome {
        Ok((s_min, amplitude)) => {
            point.ln_s_min = Some(ln(&s_min));
            point.s_min = Some(to_decimal(&s_min));
            point.amplitude = Some(to_decimal(&amplitude));
        }
        Err(e @ (Error::PrecisionExhausted { .. } | Error::NotSpd { .. } | Error::NotConverged { .. })) => {
            point.error = Some(e.to_string());
        }
        Err(e) => return Err(e),
    }
    if cfg.timing {
        point.wall_time = started.elapsed().as_secs_f64();
    }
    Ok(point)
}

/// s_min over a Δx grid at fixed N; α fitted on the smallest decade of Δx.
pub fn sweep_dx(cfg: &SweepConfig) -> Result<ScalingReport> {
    cfg.validate()?;
    let Sweep::FixedNVaryDx { n, dx_over_lambda } = &cfg.sweep else {
        return Err(Error::InvalidSweep("sweep_dx needs a fixed-N configuration".into()));
    };
    let points = dx_over_lambda
        .par_iter()
        .map(|r| evaluate_point(cfg, *n, r, r.clone()))
        .collect::<Result<Vec<_>>>()?;
    let ok: Vec<&SweepPoint> = points.iter().filter(|p| p.ln_s_min.is_some()).collect();
    let smallest = ok.iter().map(|p| p.ln_dx).fold(f64::INFINITY, f64::min);
    let decade: Vec<&&SweepPoint> = ok.iter().filter(|p| p.ln_dx <= smallest + std::f64::consts::LN_10 + 1e-12).collect();
    let xs: Vec<f64> = decade.iter().map(|p| p.ln_dx).collect();
    let ys: Vec<f64> = decade.iter().map(|p| p.ln_s_min.unwrap()).collect();
    let fit = fit_line(&xs, &ys);
    Ok(ScalingReport {
        mode: SweepMode::FixedNVaryDx,
        config: cfg.clone(),
        complete: ok.len() == points.len(),
        exponent: fit.as_ref().map(|f| f.slope),
        expected_exponent: Some(2.0 * (*n as f64 - 1.0)),
        fit,
        uncorrected_fit: None,
        points,
    })
}

/// s_min over an N grid at fixed Δx; γ from ln s_min − ½ ln N = −γN + const.
pub fn sweep_n(cfg: &SweepConfig) -> Result<ScalingReport> {
    cfg.validate()?;
    let Sweep::FixedDxVaryN { dx_over_lambda, ns } = &cfg.sweep else {
        return Err(Error::InvalidSweep("sweep_n needs a fixed-Δx configuration".into()));
    };
    let points = ns
        .par_iter()
        .map(|&n| evaluate_point(cfg, n, dx_over_lambda, n.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let ok: Vec<&SweepPoint> = points.iter().filter(|p| p.ln_s_min.is_some()).collect();
    let fit = gamma_fit(&ok, true);
    Ok(ScalingReport {
        mode: SweepMode::FixedDxVaryN,
        config: cfg.clone(),
        complete: ok.len() == points.len(),
        exponent: fit.as_ref().map(|f| -f.slope),
        expected_exponent: None,
        uncorrected_fit: gamma_fit(&ok, false),
        fit,
        points,
    })
}

fn gamma_fit(points: &[&SweepPoint], corrected: bool) -> Option<LineFit> {
    let xs: Vec<f64> = points.iter().map(|p| p.n as f64).collect();
    let ys: Vec<f64> = points
        .iter()
        .map(|p| {
            let y = p.ln_s_min.unwrap();
            if corrected { y - 0.5 * (p.n as f64).ln() } else { y }
        })
        .collect();
    fit_line(&xs, &ys)
}

impl ScalingReport {
    /// γ fitted separately on the first and second halves of an N sweep; the
    /// middle point belongs to both halves when the count is odd.
    pub fn gamma_halves(&self) -> Option<(f64, f64)> {
        if self.mode != SweepMode::FixedDxVaryN {
            return None;
        }
        let ok: Vec<&SweepPoint> = self.points.iter().filter(|p| p.ln_s_min.is_some()).collect();
        if ok.len() < 4 {
            return None;
        }
        let mid = ok.len() / 2;
        let front = gamma_fit(&ok[..=mid], true)?;
        let back = gamma_fit(&ok[mid..], true)?;
        Some((-front.slope, -back.slope))
    }

    /// CSV with columns parameter, s_min, bits_used, wall_time.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("parameter,s_min,bits_used,wall_time\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{}\n",
                p.parameter,
                p.s_min.as_deref().unwrap_or(""),
                p.bits_used,
                p.wall_time
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn s_min_values(&self) -> Vec<Option<f64>> {
        self.points.iter().map(|p| p.ln_s_min.map(f64::exp)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_exponent_is_zero() {
        let report = sweep_dx(&SweepConfig::vary_dx(1, &["0.2", "0.1", "0.05", "0.025"])).unwrap();
        let fit = report.fit.unwrap();
        assert!(fit.slope.abs() < 1e-12);
        for p in &report.points {
            // p_max/(πħ) = 1
            assert!((p.ln_s_min.unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn config_validation() {
        assert!(sweep_dx(&SweepConfig::vary_dx(2, &["0.2", "0.1", "0.05"])).is_err());
        assert!(sweep_dx(&SweepConfig::vary_dx(2, &["0.6", "0.1", "0.05", "0.02"])).is_err());
        assert!(sweep_n(&SweepConfig::vary_n("0.1", [4, 3, 5, 6])).is_err());
        assert!(sweep_n(&SweepConfig::vary_n("0.1", [1, 2, 3, 4])).is_err());
        assert!(sweep_n(&SweepConfig::vary_dx(2, &["0.2", "0.1", "0.05", "0.02"])).is_err());
    }

    #[test]
    fn fit_line_exact() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let f = fit_line(&xs, &ys).unwrap();
        assert!((f.slope - 3.0).abs() < 1e-12 && (f.intercept + 1.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert!(fit_line(&[1.0, 1.0], &[0.0, 2.0]).is_none());
    }

    #[test]
    fn starved_precision_gives_incomplete_report() {
        let mut cfg = SweepConfig::vary_n("0.02", [4, 8, 12, 16]);
        cfg.bits = Some(64);
        let report = sweep_n(&cfg).unwrap();
        assert!(!report.complete);
        assert!(report.points.iter().any(|p| p.error.is_some()));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let report = sweep_dx(&SweepConfig::vary_dx(2, &["0.2", "0.1", "0.05", "0.025"])).unwrap();
        let csv = report.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "parameter,s_min,bits_used,wall_time");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("0.2,"));
    }
}
