//! Minimum-norm bandlimited interpolation.
//!
//! For nodes x_k with prescribed amplitudes a_k, the bandlimited function of
//! least L² norm with ψ(x_k) = a_k is
//!
//! ```text
//! ψ(x) = Σ_r c_r · sin((x − x_r)·p_max/ħ) / (π·(x − x_r)),   c = S⁻¹·a,
//! ψ̃(p) = (2πħ)^{-1/2} · Σ_r c_r · e^{−i x_r p/ħ}  for |p| ≤ p_max, 0 otherwise,
//! ‖ψ‖² = a†·S⁻¹·a.
//! ```
//!
//! The coefficients c are huge and alternate in sign whenever the nodes are
//! closer than λ_min/2, so every evaluation runs at the working precision of
//! the wave function.

use std::sync::Arc;

use rayon::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prolate::{NodeGeometry, NodeSpec, ProlateMatrix};
use crate::quad::{CompositeRule, GaussLegendre};
use crate::xprec::{to_decimal, PrecisionContext, XComplex, XReal};

const MOMENTUM_ORDER: usize = 24;
const POSITION_ORDER: usize = 20;

#[derive(Clone, Debug)]
pub struct Wavefunction {
    nodes: NodeSpec,
    coeffs: Vec<XComplex>,
    norm_sq: XReal,
    prolate: Arc<ProlateMatrix>,
}

/// Position-space norm: quadrature over [−X, X] plus the analytic tails.
#[derive(Clone, Debug)]
pub struct PositionNorm {
    pub interior: XReal,
    pub tail: XReal,
    pub total: XReal,
    pub panels: usize,
}

/// What `local_wavelength` measures.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum WavelengthProbe {
    /// Zero crossings of Re ψ.
    #[default]
    RealPart,
    /// Local minima of |ψ|, for complex amplitudes whose real part may not cross.
    ModulusMinima,
}

/// Solves for c = S⁻¹a and assembles the minimum-norm wave function.
pub fn synthesize(nodes: &NodeSpec, ctx: PrecisionContext) -> Result<Wavefunction> {
    let prolate = Arc::new(ProlateMatrix::build(nodes.geometry(), ctx)?);
    synthesize_with(prolate, nodes.amps())
}

/// Same as [`synthesize`] but reuses an already built prolate matrix.
pub fn synthesize_with(prolate: Arc<ProlateMatrix>, amps: &[XComplex]) -> Result<Wavefunction> {
    let ctx = prolate.context();
    let amps: Vec<XComplex> = amps.iter().map(|a| XComplex::new(ctx.adopt(&a.re), ctx.adopt(&a.im))).collect();
    let nodes = NodeSpec::new(prolate.geometry().clone(), amps)?;
    let coeffs = prolate.solve(nodes.amps())?;
    let norm_sq = prolate.quadratic_form_inv(nodes.amps())?;
    Ok(Wavefunction { nodes, coeffs, norm_sq, prolate })
}

/// Normalized wave function whose node amplitudes are the s_min eigenvector
/// of S scaled by s_min^{1/2}: the largest amplitudes any normalized
/// bandlimited function can reach at these nodes.
pub fn maximal_superoscillation(geometry: &NodeGeometry, ctx: PrecisionContext) -> Result<Wavefunction> {
    let prolate = Arc::new(ProlateMatrix::build(geometry, ctx)?);
    let (_, v) = prolate.smallest_eigenpair()?;
    let amps: Vec<XComplex> = v.into_iter().map(XComplex::from_real).collect();
    synthesize_with(prolate, &amps)?.normalize()
}

impl Wavefunction {
    pub fn nodes(&self) -> &NodeSpec {
        &self.nodes
    }

    pub fn geometry(&self) -> &NodeGeometry {
        self.nodes.geometry()
    }

    /// Values at the nodes, a_k (or a_k/‖ψ‖ after normalization).
    pub fn node_amplitudes(&self) -> &[XComplex] {
        self.nodes.amps()
    }

    pub fn coeffs(&self) -> &[XComplex] {
        &self.coeffs
    }

    pub fn norm_sq(&self) -> &XReal {
        &self.norm_sq
    }

    pub fn prolate(&self) -> &ProlateMatrix {
        &self.prolate
    }

    pub fn context(&self) -> PrecisionContext {
        self.prolate.context()
    }

    fn prec(&self) -> u32 {
        self.context().bits()
    }

    /// ψ(x)
    pub fn eval_position(&self, x: &XReal) -> XComplex {
        let geom = self.geometry();
        let x = Float::with_val(self.prec(), x);
        let mut acc = XComplex::zero(self.prec());
        for (xr, c) in geom.xs().iter().zip(&self.coeffs) {
            let k = geom.kernel(&(x.clone() - xr));
            acc.add_scaled(c, &k);
        }
        acc
    }

    /// ψ̃(p); exactly zero outside [−p_max, p_max].
    pub fn eval_momentum(&self, p: &XReal) -> XComplex {
        let geom = self.geometry();
        let prec = self.prec();
        if Float::with_val(prec, p.abs_ref()) > *geom.p_max() {
            return XComplex::zero(prec);
        }
        let p = Float::with_val(prec, p);
        let mut acc = XComplex::zero(prec);
        for (xr, c) in geom.xs().iter().zip(&self.coeffs) {
            let phase = -(xr.clone() * &p) / geom.hbar();
            acc += &(c * &XComplex::cis(&phase));
        }
        acc.scale(&self.momentum_prefactor())
    }

    /// (2πħ)^{-1/2}
    fn momentum_prefactor(&self) -> XReal {
        let mut d = Float::with_val(self.prec(), Constant::Pi) * 2u32 * self.geometry().hbar();
        d.recip_sqrt_mut();
        d
    }

    /// ψ/‖ψ‖; node amplitudes become a_k/‖ψ‖ and the norm is recomputed from
    /// the rescaled amplitudes.
    pub fn normalize(&self) -> Result<Wavefunction> {
        if self.norm_sq <= 0 {
            return Err(Error::InvalidNodes("cannot normalize a zero wave function".into()));
        }
        let mut inv = self.norm_sq.clone();
        inv.recip_sqrt_mut();
        let nodes = self.nodes.scaled(&inv);
        let coeffs = self.coeffs.iter().map(|c| c.scale(&inv)).collect();
        let norm_sq = self.prolate.quadratic_form_inv(nodes.amps())?;
        Ok(Wavefunction { nodes, coeffs, norm_sq, prolate: self.prolate.clone() })
    }

    /// max_k |ψ(x_k) − a_k|
    pub fn interpolation_residual(&self) -> XReal {
        let mut worst = Float::new(self.prec());
        for (x, a) in self.geometry().xs().iter().zip(self.node_amplitudes()) {
            let d = (&self.eval_position(x) - a).abs();
            if d > worst {
                worst = d;
            }
        }
        worst
    }

    /// Panel count for momentum quadrature of products with a function whose
    /// nodes span `span`: enough panels to follow e^{i·span·p/ħ}.
    fn momentum_rule(&self, span: &XReal) -> CompositeRule {
        let geom = self.geometry();
        let prec = self.prec();
        let pmax = geom.p_max().clone();
        // period of the fastest oscillation is 2πħ/span
        let period = if span.is_zero() {
            pmax.clone() * 2u32
        } else {
            Float::with_val(prec, Constant::Pi) * 2u32 * geom.hbar() / span
        };
        let width = if period > pmax { pmax.clone() / 2u32 } else { period / 2u32 };
        let gl = GaussLegendre::new(MOMENTUM_ORDER, prec);
        CompositeRule::new(&[-pmax.clone(), pmax], &width, &gl)
    }

    fn span_with(&self, other: Option<&Wavefunction>) -> XReal {
        let mut xs: Vec<&XReal> = self.geometry().xs().iter().collect();
        if let Some(o) = other {
            xs.extend(o.geometry().xs());
        }
        let lo = xs.iter().min_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
        let hi = xs.iter().max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
        Float::with_val(self.prec(), *hi - *lo)
    }

    /// ∫|ψ̃|² dp over [−p_max, p_max] by composite Gauss–Legendre.
    pub fn momentum_norm_sq(&self) -> XReal {
        let rule = self.momentum_rule(&self.span_with(None));
        let terms: Vec<XReal> = rule
            .points
            .par_iter()
            .zip(&rule.weights)
            .map(|(p, w)| self.eval_momentum(p).norm_sqr() * w)
            .collect();
        sum(terms, self.prec())
    }

    /// ⟨self, other⟩ = ∫ conj(ψ̃)·g̃ dp, by quadrature in momentum space.
    pub fn inner_product(&self, other: &Wavefunction) -> Result<XComplex> {
        self.check_compatible(other)?;
        let rule = self.momentum_rule(&self.span_with(Some(other)));
        let terms: Vec<XComplex> = rule
            .points
            .par_iter()
            .zip(&rule.weights)
            .map(|(p, w)| (&self.eval_momentum(p).conj() * &other.eval_momentum(p)).scale(w))
            .collect();
        let mut acc = XComplex::zero(self.prec());
        for t in &terms {
            acc += t;
        }
        Ok(acc)
    }

    /// ⟨self, other⟩ from the reproducing kernel: Σ_r Σ_j conj(c_r)·d_j·K(x_r − y_j).
    pub fn inner_product_kernel(&self, other: &Wavefunction) -> Result<XComplex> {
        self.check_compatible(other)?;
        let geom = self.geometry();
        let mut acc = XComplex::zero(self.prec());
        for (xr, c) in geom.xs().iter().zip(&self.coeffs) {
            for (yj, d) in other.geometry().xs().iter().zip(&other.coeffs) {
                let k = geom.kernel(&(xr.clone() - yj));
                acc.add_scaled(&(&c.conj() * d), &k);
            }
        }
        Ok(acc)
    }

    /// ‖self + other‖², by quadrature in momentum space.
    pub fn norm_sq_of_sum(&self, other: &Wavefunction) -> Result<XReal> {
        self.check_compatible(other)?;
        let rule = self.momentum_rule(&self.span_with(Some(other)));
        let terms: Vec<XReal> = rule
            .points
            .par_iter()
            .zip(&rule.weights)
            .map(|(p, w)| (&self.eval_momentum(p) + &other.eval_momentum(p)).norm_sqr() * w)
            .collect();
        Ok(sum(terms, self.prec()))
    }

    fn check_compatible(&self, other: &Wavefunction) -> Result<()> {
        let (a, b) = (self.geometry(), other.geometry());
        if a.p_max() != b.p_max() || a.hbar() != b.hbar() {
            return Err(Error::InvalidNodes("wave functions have different band limits".into()));
        }
        Ok(())
    }

    /// ∫|ψ|² dx over the whole line: composite Gauss–Legendre on
    /// [−half_width, half_width] plus asymptotic series for both tails.
    ///
    /// Panels are at most λ_min/4 wide, and at most half the smallest node
    /// gap within one λ_min of the nodes. `half_width` must exceed four times
    /// the largest |x_k|.
    pub fn position_norm_sq(&self, half_width: &XReal) -> Result<PositionNorm> {
        let geom = self.geometry();
        let prec = self.prec();
        let big_x = Float::with_val(prec, half_width);
        let reach = geom.xs().iter().map(|x| x.clone().abs()).max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
        if big_x <= reach.clone() * 4u32 {
            return Err(Error::InvalidNodes("position quadrature window must exceed 4·max|x_k|".into()));
        }
        let lambda = geom.lambda_min();
        let coarse = lambda.clone() / 4u32;
        let fine = match geom.min_spacing() {
            Some(g) if g.clone() / 2u32 < coarse => g / 2u32,
            _ => coarse.clone(),
        };
        let gl = GaussLegendre::new(POSITION_ORDER, prec);
        let inner_lo = (geom.xs()[0].clone() - &lambda).max(&-big_x.clone());
        let inner_hi = (geom.xs()[geom.len() - 1].clone() + &lambda).min(&big_x);
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let mut panels = 0;
        for (a, b, w) in [
            (-big_x.clone(), inner_lo.clone(), &coarse),
            (inner_lo, inner_hi.clone(), &fine),
            (inner_hi, big_x.clone(), &coarse),
        ] {
            let r = CompositeRule::new(&[a, b], w, &gl);
            panels += r.panels;
            points.extend(r.points);
            weights.extend(r.weights);
        }
        let terms: Vec<XReal> = points
            .par_iter()
            .zip(&weights)
            .map(|(x, w)| self.eval_position(x).norm_sqr() * w)
            .collect();
        let interior = sum(terms, prec);
        let neg: Vec<XReal> = geom.xs().iter().map(|x| -x.clone()).collect();
        let tail = tail_norm_sq(geom.xs(), &self.coeffs, &geom.wavenumber(), &big_x)
            + tail_norm_sq(&neg, &self.coeffs, &geom.wavenumber(), &big_x);
        let total = interior.clone() + &tail;
        Ok(PositionNorm { interior, tail, total, panels })
    }

    /// Zero crossings of Re ψ in [lo, hi].
    ///
    /// Sampled at 64 points per smallest node gap (λ_min/2 for a single
    /// node), refined by bisection. A sample that is zero to rounding counts
    /// as a crossing when it sits on the interval boundary or the signs on
    /// either side differ.
    pub fn zero_crossings(&self, lo: &XReal, hi: &XReal) -> Vec<XReal> {
        let prec = self.prec();
        let lo = Float::with_val(prec, lo);
        let hi = Float::with_val(prec, hi);
        let xs = self.sample_grid(&lo, &hi);
        let values: Vec<XReal> = xs.par_iter().map(|x| self.eval_position(x).re).collect();
        let tol = self.rounding_floor();
        let sign = |v: &XReal| -> i8 {
            if v.clone().abs() <= tol {
                0
            } else if v.is_sign_negative() {
                -1
            } else {
                1
            }
        };
        let signs: Vec<i8> = values.iter().map(sign).collect();
        let last = xs.len() - 1;
        let mut out = Vec::new();
        let mut i = 0;
        while i <= last {
            if signs[i] == 0 {
                let start = i;
                while i < last && signs[i + 1] == 0 {
                    i += 1;
                }
                let before = if start == 0 { 0 } else { signs[start - 1] };
                let after = if i == last { 0 } else { signs[i + 1] };
                if start == 0 || i == last || before != after {
                    out.push(xs[start].clone());
                }
            } else if i < last && signs[i + 1] != 0 && signs[i] != signs[i + 1] {
                out.push(self.bisect_real_part(&xs[i], &xs[i + 1], signs[i]));
            }
            i += 1;
        }
        out
    }

    /// 2 × mean gap between consecutive zero crossings of Re ψ in [lo, hi].
    pub fn local_wavelength(&self, lo: &XReal, hi: &XReal) -> Result<XReal> {
        self.local_wavelength_with(lo, hi, WavelengthProbe::RealPart)
    }

    pub fn local_wavelength_with(&self, lo: &XReal, hi: &XReal, probe: WavelengthProbe) -> Result<XReal> {
        let marks = match probe {
            WavelengthProbe::RealPart => self.zero_crossings(lo, hi),
            WavelengthProbe::ModulusMinima => self.modulus_minima(lo, hi),
        };
        if marks.len() < 3 {
            return Err(Error::NotOscillatory { crossings: marks.len() });
        }
        let span = marks[marks.len() - 1].clone() - &marks[0];
        Ok(span * 2u32 / (marks.len() - 1) as u32)
    }

    fn modulus_minima(&self, lo: &XReal, hi: &XReal) -> Vec<XReal> {
        let prec = self.prec();
        let xs = self.sample_grid(&Float::with_val(prec, lo), &Float::with_val(prec, hi));
        let mags: Vec<XReal> = xs.par_iter().map(|x| self.eval_position(x).norm_sqr()).collect();
        (1..xs.len().saturating_sub(1))
            .filter(|&i| mags[i] < mags[i - 1] && mags[i] <= mags[i + 1])
            .map(|i| xs[i].clone())
            .collect()
    }

    fn sample_grid(&self, lo: &XReal, hi: &XReal) -> Vec<XReal> {
        let geom = self.geometry();
        let gap = geom.min_spacing().unwrap_or_else(|| geom.lambda_min() / 2u32);
        let step = gap / 64u32;
        let count = ((hi.clone() - lo) / &step).ceil().to_f64().max(1.0) as usize;
        let step = (hi.clone() - lo) / count as u32;
        (0..=count).map(|i| lo.clone() + step.clone() * i as u32).collect()
    }

    /// Rounding-level bound on |ψ(x)|: 256·eps·Σ|c_r|·p_max/(πħ).
    fn rounding_floor(&self) -> XReal {
        let geom = self.geometry();
        let mut total = Float::new(self.prec());
        for c in &self.coeffs {
            total += c.abs();
        }
        self.context().eps() * 256u32 * total * geom.kernel(&Float::new(self.prec()))
    }

    fn bisect_real_part(&self, a: &XReal, b: &XReal, sign_a: i8) -> XReal {
        let mut lo = a.clone();
        let mut hi = b.clone();
        for _ in 0..64 {
            let mid = (lo.clone() + &hi) / 2u32;
            let v = self.eval_position(&mid).re;
            if v.is_zero() {
                return mid;
            }
            if (v.is_sign_negative() && sign_a < 0) || (!v.is_sign_negative() && sign_a > 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo + hi) / 2u32
    }

    /// Serializable form with every number as a full-precision decimal string.
    pub fn to_document(&self) -> WavefunctionDoc {
        let geom = self.geometry();
        let ctx = self.context();
        WavefunctionDoc {
            format: WavefunctionDoc::FORMAT.to_string(),
            bits: ctx.bits(),
            guard_bits: ctx.guard_bits(),
            p_max: to_decimal(geom.p_max()),
            hbar: to_decimal(geom.hbar()),
            nodes: geom.xs().iter().map(to_decimal).collect(),
            amps: self.node_amplitudes().iter().map(ComplexDoc::from).collect(),
            coeffs: self.coeffs.iter().map(ComplexDoc::from).collect(),
            norm_sq: to_decimal(&self.norm_sq),
        }
    }

    /// Rebuilds from a document; stored coefficients and norm are used as-is.
    pub fn from_document(doc: &WavefunctionDoc) -> Result<Self> {
        if doc.format != WavefunctionDoc::FORMAT {
            return Err(Error::Config(format!("unsupported wave function format {:?}", doc.format)));
        }
        let base = doc.bits.checked_sub(doc.guard_bits).ok_or_else(|| Error::Config("guard_bits exceeds bits".into()))?;
        let ctx = PrecisionContext::with_guard(base, doc.guard_bits)?;
        let xs = doc.nodes.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>()?;
        let geom = NodeGeometry::new(xs, ctx.parse(&doc.p_max)?, ctx.parse(&doc.hbar)?)?;
        let amps = doc.amps.iter().map(|z| z.parse(&ctx)).collect::<Result<Vec<_>>>()?;
        let coeffs = doc.coeffs.iter().map(|z| z.parse(&ctx)).collect::<Result<Vec<_>>>()?;
        if coeffs.len() != geom.len() {
            return Err(Error::DimensionMismatch { expected: geom.len(), got: coeffs.len() });
        }
        let prolate = Arc::new(ProlateMatrix::build(&geom, ctx)?);
        let nodes = NodeSpec::new(prolate.geometry().clone(), amps)?;
        Ok(Self { nodes, coeffs, norm_sq: ctx.parse(&doc.norm_sq)?, prolate })
    }
}

fn sum(terms: Vec<XReal>, prec: u32) -> XReal {
    let mut acc = Float::new(prec);
    for t in terms {
        acc += t;
    }
    acc
}

/// ∫_X^∞ |Σ_r c_r sin(q(x − x_r))/(π(x − x_r))|² dx for X well beyond the
/// centres.
///
/// With B±(x) = Σ_r c_r e^{∓iqx_r}/(x − x_r) the integrand is
/// (|B₊|² + |B₋|² − 2·Re(e^{2iqx}·B₊·conj B₋)) / (4π²). B± expand in inverse
/// powers of x through the moments Σ_r c_r e^{∓iqx_r} x_r^m; the
/// non-oscillating part integrates term by term and the oscillating part by
/// repeated integration by parts.
fn tail_norm_sq(centers: &[XReal], coeffs: &[XComplex], q: &XReal, big_x: &XReal) -> XReal {
    let prec = big_x.prec();
    let eps = crate::xprec::eps_at(prec);
    let reach = centers.iter().map(|x| x.clone().abs()).max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
    let rho = reach / big_x;
    let terms = if rho.is_zero() {
        1
    } else {
        let per_term = -rho.clone().log2().to_f64();
        ((f64::from(prec) / per_term).ceil() as usize + 2).clamp(1, 512)
    };

    let phases: Vec<(XComplex, XComplex)> = centers
        .iter()
        .zip(coeffs)
        .map(|(x, c)| {
            let qx = q.clone() * x;
            let minus = XComplex::cis(&-qx.clone());
            let plus = XComplex::cis(&qx);
            (c * &minus, c * &plus)
        })
        .collect();
    let mut m_plus = Vec::with_capacity(terms);
    let mut m_minus = Vec::with_capacity(terms);
    let mut powers: Vec<XReal> = centers.iter().map(|_| Float::with_val(prec, 1)).collect();
    for _ in 0..terms {
        let mut mp = XComplex::zero(prec);
        let mut mm = XComplex::zero(prec);
        for ((a, b), pw) in phases.iter().zip(&powers) {
            mp.add_scaled(a, pw);
            mm.add_scaled(b, pw);
        }
        m_plus.push(mp);
        m_minus.push(mm);
        for (pw, x) in powers.iter_mut().zip(centers) {
            *pw *= x;
        }
    }

    let omega = q.clone() * 2u32;
    let mut x_pow = big_x.clone(); // X^{k+1}
    let mut smooth = Float::new(prec);
    let mut oscillating = XComplex::zero(prec);
    for k in 0..(2 * terms - 1) {
        let mut g = XComplex::zero(prec);
        let mut h = XComplex::zero(prec);
        let lo = k.saturating_sub(terms - 1);
        for m in lo..=k.min(terms - 1) {
            let l = k - m;
            g += &(&m_plus[m] * &m_plus[l].conj());
            g += &(&m_minus[m] * &m_minus[l].conj());
            h += &(&m_plus[m] * &m_minus[l].conj());
        }
        smooth += g.re / (x_pow.clone() * (k + 1) as u32);
        oscillating += &(&h * &oscillatory_power_integral(k + 2, &omega, big_x, &eps));
        x_pow *= big_x;
    }
    let pi = Float::with_val(prec, Constant::Pi);
    (smooth - oscillating.re * 2u32) / (pi.square() * 4u32)
}

/// ∫_X^∞ e^{iωx} x^{−n} dx ≈ −e^{iωX} Σ_j (n)_j / ((iω)^{j+1} X^{n+j}), summed
/// until the terms stop shrinking or fall below eps relative to the first.
fn oscillatory_power_integral(n: usize, omega: &XReal, big_x: &XReal, eps: &XReal) -> XComplex {
    let prec = big_x.prec();
    // term_j = coef_j / (iω)^{j+1}, coef_j = (n)_j X^{−(n+j)}
    let mut coef = Float::with_val(prec, 1) / big_x.clone().pow(n as u32);
    let mut inv_iw = XComplex::new(Float::new(prec), -(Float::with_val(prec, 1) / omega)); // 1/(iω) = −i/ω
    let step = inv_iw.clone();
    let mut acc = XComplex::zero(prec);
    let mut first: Option<XReal> = None;
    let mut prev = Float::with_val(prec, rug::float::Special::Infinity);
    for j in 0..200 {
        let term = inv_iw.scale(&coef);
        let mag = term.abs();
        if mag >= prev {
            break;
        }
        acc += &term;
        let reference = first.get_or_insert_with(|| mag.clone()).clone();
        if mag <= reference * eps {
            break;
        }
        prev = mag;
        coef = coef * (n + j) as u32 / big_x;
        inv_iw = &inv_iw * &step;
    }
    let lead = XComplex::cis(&(omega.clone() * big_x));
    -(&lead * &acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub re: String,
    pub im: String,
}

impl From<&XComplex> for ComplexDoc {
    fn from(z: &XComplex) -> Self {
        Self { re: to_decimal(&z.re), im: to_decimal(&z.im) }
    }
}

impl ComplexDoc {
    pub fn parse(&self, ctx: &PrecisionContext) -> Result<XComplex> {
        Ok(XComplex::new(ctx.parse(&self.re)?, ctx.parse(&self.im)?))
    }
}

/// JSON form of a [`Wavefunction`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WavefunctionDoc {
    pub format: String,
    pub bits: u32,
    pub guard_bits: u32,
    pub p_max: String,
    pub hbar: String,
    pub nodes: Vec<String>,
    pub amps: Vec<ComplexDoc>,
    pub coeffs: Vec<ComplexDoc>,
    pub norm_sq: String,
}

impl WavefunctionDoc {
    pub const FORMAT: &'static str = "superosc-wavefunction/1";
}

pub fn eval_position(w: &Wavefunction, x: &XReal) -> XComplex {
    w.eval_position(x)
}

pub fn eval_momentum(w: &Wavefunction, p: &XReal) -> XComplex {
    w.eval_momentum(p)
}

pub fn normalize(w: &Wavefunction) -> Result<Wavefunction> {
    w.normalize()
}

pub fn local_wavelength(w: &Wavefunction, lo: &XReal, hi: &XReal) -> Result<XReal> {
    w.local_wavelength(lo, hi)
}
