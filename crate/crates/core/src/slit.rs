//! Hard-edged slit: truncate ψ to [x_lo, x_hi], renormalize, and look at the
//! momentum distribution of what emerges.
//!
//! The windowed transform ψ̃_W(p) = (2πħ)^{-1/2} ∫_{x_lo}^{x_hi} ψ(x) e^{−ipx/ħ} dx
//! is computed by composite Gauss–Legendre in x; the density |ψ̃_W|² is then
//! integrated by composite Gauss–Legendre in p over [−P, P] with breakpoints
//! at ±p_max, so the mass beyond the cutoff is a sum over whole panels.

use rayon::prelude::*;
use rug::float::Constant;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prolate::NodeSpec;
use crate::quad::{CompositeRule, GaussLegendre};
use crate::synth::Wavefunction;
use crate::xprec::{to_decimal, to_decimal_digits, XComplex, XReal};

/// Gauss–Legendre order of every x and p panel.
pub const PANEL_ORDER: usize = 16;
/// A window misses when its mean |ψ|² is below this fraction of max_k|a_k|².
///
/// Captured probability itself is no guide: a superoscillating stretch holds an
/// exponentially small share of ‖ψ‖².
pub const MISS_THRESHOLD: f64 = 1e-12;
/// Largest accepted relative quadrature error of the captured mass.
pub const MAX_QUAD_ERROR: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct SlitWindow {
    lo: XReal,
    hi: XReal,
    source: Wavefunction,
}

impl SlitWindow {
    pub fn new(source: Wavefunction, lo: &XReal, hi: &XReal) -> Result<Self> {
        let prec = source.context().bits();
        let lo = Float::with_val(prec, lo);
        let hi = Float::with_val(prec, hi);
        if !(lo < hi) {
            return Err(Error::Config(format!("slit window needs x_lo < x_hi, got [{}, {}]", lo.to_f64(), hi.to_f64())));
        }
        Ok(Self { lo, hi, source })
    }

    /// Window over [x_0, x_{N−1}].
    pub fn node_span(source: Wavefunction) -> Result<Self> {
        let xs = source.geometry().xs();
        let (lo, hi) = (xs[0].clone(), xs[xs.len() - 1].clone());
        Self::new(source, &lo, &hi)
    }

    pub fn lo(&self) -> &XReal {
        &self.lo
    }

    pub fn hi(&self) -> &XReal {
        &self.hi
    }

    pub fn source(&self) -> &Wavefunction {
        &self.source
    }

    pub fn width(&self) -> XReal {
        self.hi.clone() - &self.lo
    }

    /// Node spacing that sets the superoscillation scale; λ_min/2 for one node.
    pub fn superoscillation_spacing(&self) -> XReal {
        let g = self.source.geometry();
        match g.min_spacing() {
            Some(d) if d < g.lambda_min() / 2u32 => d,
            _ => g.lambda_min() / 2u32,
        }
    }

    /// Period of the fastest oscillation in the window: twice the spacing.
    pub fn local_wavelength(&self) -> XReal {
        self.superoscillation_spacing() * 2u32
    }

    /// 4πħ/Δx: the momentum grid must reach this far.
    pub fn min_p_grid(&self) -> XReal {
        let g = self.source.geometry();
        Float::with_val(g.prec(), Constant::Pi) * 4u32 * g.hbar() / self.superoscillation_spacing()
    }

    /// Smallest n_quad whose panels are at most a quarter local wavelength.
    pub fn recommended_n_quad(&self) -> usize {
        let per = self.local_wavelength() / 4u32;
        PANEL_ORDER * (self.width() / per).ceil().to_f64().max(1.0) as usize
    }
}

#[derive(Clone, Debug)]
pub struct SlitReport {
    pub lo: XReal,
    pub hi: XReal,
    pub p_max: XReal,
    /// ∫_W|ψ|² / ‖ψ‖²
    pub captured_probability: XReal,
    /// ∫_W|ψ|² before renormalization.
    pub window_mass: XReal,
    /// ∫_{−P}^{P}|ψ̃_W|² before renormalization.
    pub grid_mass: XReal,
    /// Quadrature nodes in p, ascending.
    pub momenta: Vec<XReal>,
    pub weights: Vec<XReal>,
    /// |ψ̃_W(p)|² renormalized to unit mass on the grid.
    pub density: Vec<XReal>,
    pub expectation_abs_p: XReal,
    pub fraction_above_cutoff: XReal,
    /// Leading-order mass beyond |p| = P from the O(1/p) edge decay, relative
    /// to the grid mass.
    pub tail_bound: XReal,
    /// |coarse − fine| / fine for the captured mass.
    pub quad_error: f64,
    pub n_quad: usize,
    pub p_grid_max: XReal,
    /// 1/√captured_probability
    pub boost: XReal,
    /// (k, ψ(x_k)/√window_mass) for every node inside the window.
    pub renormalized_amplitudes: Vec<(usize, XComplex)>,
}

/// Everything in a report except the density samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlitHeader {
    pub window: [String; 2],
    pub p_max: String,
    pub p_grid_max: String,
    pub n_quad: usize,
    pub captured_probability: String,
    pub grid_mass_over_window_mass: String,
    pub expectation_abs_p: String,
    pub fraction_above_cutoff: String,
    pub tail_bound: String,
    pub quad_error: f64,
    pub boost: String,
    pub grid_points: usize,
}

impl SlitReport {
    pub fn header(&self) -> SlitHeader {
        SlitHeader {
            window: [to_decimal(&self.lo), to_decimal(&self.hi)],
            p_max: to_decimal(&self.p_max),
            p_grid_max: to_decimal(&self.p_grid_max),
            n_quad: self.n_quad,
            captured_probability: to_decimal(&self.captured_probability),
            grid_mass_over_window_mass: to_decimal(&(self.grid_mass.clone() / &self.window_mass)),
            expectation_abs_p: to_decimal(&self.expectation_abs_p),
            fraction_above_cutoff: to_decimal(&self.fraction_above_cutoff),
            tail_bound: to_decimal(&self.tail_bound),
            quad_error: self.quad_error,
            boost: to_decimal(&self.boost),
            grid_points: self.momenta.len(),
        }
    }

    pub fn header_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.header())?)
    }

    /// `p,density` at full precision plus a `log10_density` column rounded to
    /// `digits` significant digits.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("p,density,log10_density\n");
        for (p, d) in self.momenta.iter().zip(&self.density) {
            let log = if d.is_zero() { "-inf".to_string() } else { to_decimal_digits(&d.clone().log10(), digits) };
            out.push_str(&format!("{},{},{}\n", to_decimal(p), to_decimal(d), log));
        }
        out
    }

    /// Σ w·density; one up to rounding.
    pub fn density_mass(&self) -> XReal {
        let mut acc = Float::new(self.p_max.prec());
        for (w, d) in self.weights.iter().zip(&self.density) {
            acc += w.clone() * d;
        }
        acc
    }
}

fn panels_rule(lo: &XReal, hi: &XReal, panels: usize, gl: &GaussLegendre) -> (Vec<XReal>, Vec<XReal>) {
    let len = hi.clone() - lo;
    let mut points = Vec::with_capacity(panels * gl.order());
    let mut weights = Vec::with_capacity(panels * gl.order());
    for j in 0..panels {
        let a = lo.clone() + len.clone() * j as u32 / panels as u32;
        let b = if j + 1 == panels { hi.clone() } else { lo.clone() + len.clone() * (j + 1) as u32 / panels as u32 };
        for (x, w) in gl.mapped(&a, &b) {
            points.push(x);
            weights.push(w);
        }
    }
    (points, weights)
}

fn weighted_mass(values: &[XComplex], weights: &[XReal], prec: u32) -> XReal {
    let mut acc = Float::new(prec);
    for (v, w) in values.iter().zip(weights) {
        acc += v.norm_sqr() * w;
    }
    acc
}

/// Windows ψ to the slit, transforms, and renormalizes the momentum density.
///
/// `n_quad` is the number of x quadrature points; it is rounded up to whole
/// panels of [`PANEL_ORDER`] points, and the panels must be at most a quarter
/// of the local wavelength wide.
pub fn truncate_and_transform(win: &SlitWindow, p_grid_max: &XReal, n_quad: usize) -> Result<SlitReport> {
    let psi = win.source();
    let geom = psi.geometry();
    let prec = psi.context().bits();
    let big_p = Float::with_val(prec, p_grid_max);
    let p_need = win.min_p_grid();
    let slack = p_need.clone() * psi.context().eps() * 1024u32;
    if big_p < p_need.clone() - slack {
        return Err(Error::MomentumGridTooNarrow { got: big_p.to_f64(), min: p_need.to_f64() });
    }
    let panels = n_quad.div_ceil(PANEL_ORDER).max(1);
    let width = win.width();
    if width.clone() / panels as u32 > win.local_wavelength() / 4u32 {
        return Err(Error::QuadratureTooCoarse { estimate: f64::INFINITY, hint: win.recommended_n_quad() });
    }
    let gl = GaussLegendre::new(PANEL_ORDER, prec);
    let (xs, xw) = panels_rule(win.lo(), win.hi(), panels, &gl);
    let values: Vec<XComplex> = xs.par_iter().map(|x| psi.eval_position(x)).collect();
    let window_mass = weighted_mass(&values, &xw, prec);
    let captured = window_mass.clone() / psi.norm_sq();
    let peak = psi.node_amplitudes().iter().map(|a| a.norm_sqr()).max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
    if window_mass.clone() / &width < peak * MISS_THRESHOLD {
        return Err(Error::SlitMisses { captured: to_decimal_digits(&captured, 6) });
    }

    let coarse_panels = panels.div_ceil(2);
    let (cx, cw) = panels_rule(win.lo(), win.hi(), coarse_panels, &gl);
    let coarse_values: Vec<XComplex> = cx.par_iter().map(|x| psi.eval_position(x)).collect();
    let coarse_mass = weighted_mass(&coarse_values, &cw, prec);
    let quad_error = ((coarse_mass - &window_mass) / &window_mass).abs().to_f64();
    if quad_error > MAX_QUAD_ERROR {
        return Err(Error::QuadratureTooCoarse {
            estimate: quad_error,
            hint: (2 * panels * PANEL_ORDER).max(win.recommended_n_quad()),
        });
    }

    let hbar = geom.hbar().clone();
    let mut prefactor = Float::with_val(prec, Constant::Pi) * 2u32 * &hbar;
    prefactor.recip_sqrt_mut();
    let scaled: Vec<XComplex> = values.iter().zip(&xw).map(|(v, w)| v.scale(&(w.clone() * &prefactor))).collect();

    let p_max = geom.p_max().clone();
    let p_width = {
        let osc = Float::with_val(prec, Constant::Pi) * &hbar / &width;
        let half = p_max.clone() / 2u32;
        if osc < half { osc } else { half }
    };
    let breaks = [-big_p.clone(), -p_max.clone(), Float::new(prec), p_max.clone(), big_p.clone()];
    let prule = CompositeRule::new(&breaks, &p_width, &gl);
    let raw: Vec<XReal> = prule
        .points
        .par_iter()
        .map(|p| {
            let mut acc = XComplex::zero(prec);
            for (x, v) in xs.iter().zip(&scaled) {
                let phase = -(p.clone() * x) / &hbar;
                acc += &(v * &XComplex::cis(&phase));
            }
            acc.norm_sqr()
        })
        .collect();

    let mut grid_mass = Float::new(prec);
    for (d, w) in raw.iter().zip(&prule.weights) {
        grid_mass += d.clone() * w;
    }
    let density: Vec<XReal> = raw.iter().map(|d| d.clone() / &grid_mass).collect();
    let mut expectation = Float::new(prec);
    let mut above = Float::new(prec);
    for ((p, w), d) in prule.points.iter().zip(&prule.weights).zip(&density) {
        let m = w.clone() * d;
        let ap = Float::with_val(prec, p.abs_ref());
        if ap > p_max {
            above += &m;
        }
        expectation += m * ap;
    }

    // |ψ̃_W(p)| ≈ (2πħ)^{-1/2}·ħ·|ψ(x_hi)e^{..} − ψ(x_lo)e^{..}|/|p|
    let edge = psi.eval_position(win.lo()).abs() + psi.eval_position(win.hi()).abs();
    let tail_bound = edge.square() * &hbar / (Float::with_val(prec, Constant::Pi) * &big_p) / &grid_mass;

    let inv_root = window_mass.clone().recip_sqrt();
    let renormalized_amplitudes = geom
        .xs()
        .iter()
        .enumerate()
        .filter(|(_, x)| **x >= *win.lo() && **x <= *win.hi())
        .map(|(k, x)| (k, psi.eval_position(x).scale(&inv_root)))
        .collect();

    Ok(SlitReport {
        lo: win.lo().clone(),
        hi: win.hi().clone(),
        p_max,
        boost: captured.clone().recip_sqrt(),
        captured_probability: captured,
        window_mass,
        grid_mass,
        momenta: prule.points,
        weights: prule.weights,
        density,
        expectation_abs_p: expectation,
        fraction_above_cutoff: above,
        tail_bound,
        quad_error,
        n_quad: panels * PANEL_ORDER,
        p_grid_max: big_p,
        renormalized_amplitudes,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AccelerationSummary {
    /// ⟨|p|⟩ / p_max
    pub expectation_over_p_max: f64,
    /// πħ/Δx for the smallest node gap; p_max for a single node.
    pub superoscillation_momentum: f64,
    /// ⟨|p|⟩ / (πħ/Δx)
    pub expectation_over_superoscillation: f64,
    pub fraction_above_cutoff: f64,
    pub self_accelerated: bool,
}

pub fn acceleration_summary(report: &SlitReport, nodes: &NodeSpec) -> AccelerationSummary {
    let geom = nodes.geometry();
    let e = report.expectation_abs_p.to_f64();
    let p_max = geom.p_max().to_f64();
    let scale = match geom.min_spacing() {
        Some(d) => std::f64::consts::PI * geom.hbar().to_f64() / d.to_f64(),
        None => p_max,
    };
    AccelerationSummary {
        expectation_over_p_max: e / p_max,
        superoscillation_momentum: scale,
        expectation_over_superoscillation: e / scale,
        fraction_above_cutoff: report.fraction_above_cutoff.to_f64(),
        self_accelerated: report.expectation_abs_p > *geom.p_max(),
    }
}
