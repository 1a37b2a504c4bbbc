//! Node geometry, prescribed amplitudes, and the prolate matrix
//!
//! S_{k,r} = sin((x_k − x_r)·p_max/ħ) / (π·(x_k − x_r)),  S_{k,k} = p_max/(π·ħ),
//!
//! which is the Gram matrix of the sinc kernels centred on the nodes and is
//! positive definite for distinct nodes.

use std::sync::OnceLock;

use rug::Float;

use crate::error::{Error, Result};
use crate::xprec::{sym_eigen, to_decimal, Cholesky, PrecisionContext, SymEigen, SymMatrix, XComplex, XReal};

/// Node positions plus the band limit. Positions are strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeGeometry {
    xs: Vec<XReal>,
    p_max: XReal,
    hbar: XReal,
}

impl NodeGeometry {
    pub fn new(xs: Vec<XReal>, p_max: XReal, hbar: XReal) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::InvalidNodes("need at least one node".into()));
        }
        if !(p_max.is_finite() && p_max > 0) {
            return Err(Error::InvalidNodes("p_max must be positive".into()));
        }
        if !(hbar.is_finite() && hbar > 0) {
            return Err(Error::InvalidNodes("hbar must be positive".into()));
        }
        if xs.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidNodes("node positions must be finite".into()));
        }
        let geom = Self { xs, p_max, hbar };
        let prec = geom.prec();
        // gaps below 2^(−bits/2)·λ_min are treated as coincident
        let mut min_gap = geom.lambda_min();
        min_gap >>= prec / 2;
        for (k, w) in geom.xs.windows(2).enumerate() {
            let gap = w[1].clone() - &w[0];
            if gap.is_zero() || (gap > 0 && gap < min_gap) {
                return Err(Error::CoincidentNodes { index: k + 1 });
            }
            if gap < 0 {
                return Err(Error::InvalidNodes(format!("positions must be strictly increasing (index {})", k + 1)));
            }
        }
        Ok(geom)
    }

    /// x_k = k·dx for k = 0..n.
    pub fn equispaced(n: usize, dx: &XReal, p_max: XReal, hbar: XReal) -> Result<Self> {
        let xs = (0..n).map(|k| dx.clone() * k as u32).collect();
        Self::new(xs, p_max, hbar)
    }

    /// Same geometry rounded to another precision.
    pub fn with_precision(&self, ctx: &PrecisionContext) -> Self {
        Self {
            xs: self.xs.iter().map(|x| ctx.adopt(x)).collect(),
            p_max: ctx.adopt(&self.p_max),
            hbar: ctx.adopt(&self.hbar),
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn xs(&self) -> &[XReal] {
        &self.xs
    }

    pub fn p_max(&self) -> &XReal {
        &self.p_max
    }

    pub fn hbar(&self) -> &XReal {
        &self.hbar
    }

    pub fn prec(&self) -> u32 {
        self.p_max.prec()
    }

    /// λ_min = 2πħ/p_max
    pub fn lambda_min(&self) -> XReal {
        let two_pi = Float::with_val(self.prec(), rug::float::Constant::Pi) * 2u32;
        two_pi * &self.hbar / &self.p_max
    }

    /// p_max/ħ
    pub fn wavenumber(&self) -> XReal {
        self.p_max.clone() / &self.hbar
    }

    /// Smallest gap between neighbouring nodes, if there are two or more.
    pub fn min_spacing(&self) -> Option<XReal> {
        self.xs.windows(2).map(|w| w[1].clone() - &w[0]).min_by(|a, b| a.partial_cmp(b).unwrap())
    }

    /// sin(d·p_max/ħ)/(π·d), with the analytic value p_max/(πħ) at d = 0.
    pub fn kernel(&self, d: &XReal) -> XReal {
        let pi = Float::with_val(d.prec().max(self.prec()), rug::float::Constant::Pi);
        if d.is_zero() {
            return self.wavenumber() / pi;
        }
        let mut s = self.wavenumber() * d;
        s.sin_mut();
        s / (pi * d)
    }
}

/// Geometry plus the amplitudes a_k prescribed at the nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSpec {
    geometry: NodeGeometry,
    amps: Vec<XComplex>,
}

impl NodeSpec {
    pub fn new(geometry: NodeGeometry, amps: Vec<XComplex>) -> Result<Self> {
        if amps.len() != geometry.len() {
            return Err(Error::DimensionMismatch { expected: geometry.len(), got: amps.len() });
        }
        if amps.iter().all(XComplex::is_zero) {
            return Err(Error::InvalidNodes("amplitudes are all zero".into()));
        }
        Ok(Self { geometry, amps })
    }

    pub fn real(geometry: NodeGeometry, amps: Vec<XReal>) -> Result<Self> {
        Self::new(geometry, amps.into_iter().map(XComplex::from_real).collect())
    }

    /// a_k = (−1)^k
    pub fn alternating(geometry: NodeGeometry) -> Self {
        let prec = geometry.prec();
        let amps = (0..geometry.len())
            .map(|k| XComplex::from_real(Float::with_val(prec, if k % 2 == 0 { 1 } else { -1 })))
            .collect();
        Self { geometry, amps }
    }

    pub fn geometry(&self) -> &NodeGeometry {
        &self.geometry
    }

    pub fn amps(&self) -> &[XComplex] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    /// Same nodes with amplitudes multiplied by `k`.
    pub fn scaled(&self, k: &XReal) -> Self {
        Self { geometry: self.geometry.clone(), amps: self.amps.iter().map(|a| a.scale(k)).collect() }
    }

    /// ‖a‖₂
    pub fn amp_norm(&self) -> XReal {
        let mut acc = Float::new(self.geometry.prec());
        for a in &self.amps {
            acc += a.norm_sqr();
        }
        acc.sqrt()
    }

    pub fn with_precision(&self, ctx: &PrecisionContext) -> Self {
        Self {
            geometry: self.geometry.with_precision(ctx),
            amps: self.amps.iter().map(|a| XComplex::new(ctx.adopt(&a.re), ctx.adopt(&a.im))).collect(),
        }
    }
}

/// The prolate matrix S for a node geometry, with its Cholesky factor and
/// spectrum computed on first use.
#[derive(Clone, Debug)]
pub struct ProlateMatrix {
    geometry: NodeGeometry,
    ctx: PrecisionContext,
    matrix: SymMatrix,
    chol: OnceLock<Result<Cholesky>>,
    spectrum: OnceLock<Result<SymEigen>>,
}

impl ProlateMatrix {
    pub fn build(geometry: &NodeGeometry, ctx: PrecisionContext) -> Result<Self> {
        let geometry = NodeGeometry::new(
            geometry.xs.iter().map(|x| ctx.adopt(x)).collect(),
            ctx.adopt(&geometry.p_max),
            ctx.adopt(&geometry.hbar),
        )?;
        let xs = geometry.xs();
        let matrix = SymMatrix::from_fn(geometry.len(), |i, j| {
            if i == j {
                geometry.kernel(&ctx.zero())
            } else {
                geometry.kernel(&(xs[i].clone() - &xs[j]))
            }
        });
        Ok(Self { geometry, ctx, matrix, chol: OnceLock::new(), spectrum: OnceLock::new() })
    }

    pub fn geometry(&self) -> &NodeGeometry {
        &self.geometry
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn cholesky(&self) -> Result<&Cholesky> {
        self.chol.get_or_init(|| Cholesky::factor(&self.matrix)).as_ref().map_err(Clone::clone)
    }

    pub fn spectrum(&self) -> Result<&SymEigen> {
        self.spectrum.get_or_init(|| sym_eigen(&self.matrix)).as_ref().map_err(Clone::clone)
    }

    /// λ_max/λ_min from the spectrum.
    pub fn condition_number(&self) -> Result<XReal> {
        let e = self.spectrum()?;
        Ok(e.values[e.values.len() - 1].clone() / &e.values[0])
    }

    /// (s_min, v) with ‖v‖₂ = 1 and its largest-magnitude entry positive.
    pub fn smallest_eigenpair(&self) -> Result<(XReal, Vec<XReal>)> {
        let e = self.spectrum()?;
        let s_min = e.values[0].clone();
        let floor = self.ctx.eps() * self.dim() as u32 * self.matrix.norm_inf();
        if s_min <= floor {
            return Err(Error::PrecisionExhausted { value: to_decimal(&s_min), bits: self.ctx.bits() });
        }
        let mut v = e.vectors[0].clone();
        let mut lead = 0;
        for (i, x) in v.iter().enumerate() {
            if x.clone().abs() > v[lead].clone().abs() {
                lead = i;
            }
        }
        if v[lead].is_sign_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        Ok((s_min, v))
    }

    /// a†S⁻¹a through the Cholesky factor; the (vanishing) imaginary part is
    /// checked against n·eps·cond(S)·‖a‖² and dropped.
    pub fn quadratic_form_inv(&self, a: &[XComplex]) -> Result<XReal> {
        let (re, im) = self.quadratic_form_inv_parts(a)?;
        let mut norm_a = Float::new(self.ctx.bits());
        for z in a {
            norm_a += z.norm_sqr();
        }
        let tol = self.ctx.eps() * (16 * self.dim()) as u32 * self.condition_number()? * norm_a;
        if im.clone().abs() > tol {
            return Err(Error::ImaginaryResidue { residue: to_decimal(&im), tolerance: to_decimal(&tol) });
        }
        Ok(re)
    }

    /// Real and imaginary parts of a†S⁻¹a without the residue check.
    pub fn quadratic_form_inv_parts(&self, a: &[XComplex]) -> Result<(XReal, XReal)> {
        if a.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: a.len() });
        }
        let a: Vec<XComplex> = a.iter().map(|z| XComplex::new(self.ctx.adopt(&z.re), self.ctx.adopt(&z.im))).collect();
        let y = self.cholesky()?.solve_complex(&a)?;
        let mut acc = XComplex::zero(self.ctx.bits());
        for (ai, yi) in a.iter().zip(&y) {
            acc += &(&ai.conj() * yi);
        }
        Ok((acc.re, acc.im))
    }

    /// S⁻¹·a
    pub fn solve(&self, a: &[XComplex]) -> Result<Vec<XComplex>> {
        if a.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: a.len() });
        }
        let a: Vec<XComplex> = a.iter().map(|z| XComplex::new(self.ctx.adopt(&z.re), self.ctx.adopt(&z.im))).collect();
        self.cholesky()?.solve_complex(&a)
    }
}

/// Builds S for `geometry` at `ctx` precision.
pub fn build_prolate(geometry: &NodeGeometry, ctx: PrecisionContext) -> Result<ProlateMatrix> {
    ProlateMatrix::build(geometry, ctx)
}

pub fn smallest_eigenpair(p: &ProlateMatrix) -> Result<(XReal, Vec<XReal>)> {
    p.smallest_eigenpair()
}

pub fn quadratic_form_inv(p: &ProlateMatrix, a: &[XComplex]) -> Result<XReal> {
    p.quadratic_form_inv(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(bits: u32) -> PrecisionContext {
        PrecisionContext::new(bits).unwrap()
    }

    fn geom(c: &PrecisionContext, xs: &[&str]) -> NodeGeometry {
        NodeGeometry::new(xs.iter().map(|s| c.parse(s).unwrap()).collect(), c.pi(), c.one()).unwrap()
    }

    fn abs_diff(a: &XReal, b: &XReal) -> f64 {
        (a.clone() - b).abs().to_f64()
    }

    #[test]
    fn single_node_is_one() {
        let c = ctx(128);
        let p = build_prolate(&geom(&c, &["0"]), c).unwrap();
        assert!(abs_diff(p.matrix().get(0, 0), &c.one()) == 0.0);
    }

    #[test]
    fn nyquist_spacing_gives_identity() {
        let c = ctx(128);
        let p = build_prolate(&geom(&c, &["0", "1"]), c).unwrap();
        assert!(p.matrix().get(0, 1).clone().abs() < 1e-35);
        assert_eq!(*p.matrix().get(1, 1), 1);
    }

    #[test]
    fn half_spacing_off_diagonal() {
        let c = ctx(200);
        let p = build_prolate(&geom(&c, &["0", "0.5"]), c).unwrap();
        let want = c.real(2) / c.pi();
        assert!(abs_diff(p.matrix().get(0, 1), &want) < 1e-55);
    }

    #[test]
    fn duplicates_and_near_duplicates_rejected() {
        let c = ctx(128);
        let xs = vec![c.real(0), c.real(0.25), c.real(0.25)];
        assert!(matches!(NodeGeometry::new(xs, c.pi(), c.one()), Err(Error::CoincidentNodes { index: 2 })));
        // 2^-70 < 2^-64·λ_min
        let mut tiny = c.one();
        tiny >>= 70;
        let xs = vec![c.real(0), tiny];
        assert!(matches!(NodeGeometry::new(xs, c.pi(), c.one()), Err(Error::CoincidentNodes { .. })));
        let xs = vec![c.real(1), c.real(0)];
        assert!(matches!(NodeGeometry::new(xs, c.pi(), c.one()), Err(Error::InvalidNodes(_))));
    }

    #[test]
    fn invalid_inputs_rejected() {
        let c = ctx(128);
        assert!(NodeGeometry::new(vec![], c.pi(), c.one()).is_err());
        assert!(NodeGeometry::new(vec![c.zero()], c.real(-1), c.one()).is_err());
        assert!(NodeGeometry::new(vec![c.zero()], c.pi(), c.zero()).is_err());
        let g = geom(&c, &["0", "0.1"]);
        assert!(NodeSpec::real(g.clone(), vec![c.zero(), c.zero()]).is_err());
        assert!(NodeSpec::real(g, vec![c.one()]).is_err());
    }

    #[test]
    fn smallest_eigenpair_identity_and_two_by_two() {
        let c = ctx(128);
        let p = build_prolate(&geom(&c, &["0", "1", "2"]), c).unwrap();
        let (s, v) = p.smallest_eigenpair().unwrap();
        assert!(abs_diff(&s, &c.one()) < 1e-30);
        assert!(v.iter().filter(|x| (*x).clone().abs() > 0.5).count() == 1);
        assert!(v.iter().all(|x| !x.is_sign_negative() || (*x).clone().abs() < 1e-30));

        let p = build_prolate(&geom(&c, &["0", "0.5"]), c).unwrap();
        let (s, v) = p.smallest_eigenpair().unwrap();
        let want = c.one() - c.real(2) / c.pi();
        assert!(abs_diff(&s, &want) < 1e-35);
        // (1, −1)/√2 up to sign, largest entry positive
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((v[0].to_f64().abs() - r).abs() < 1e-30);
        assert!((v[0].to_f64() + v[1].to_f64()).abs() < 1e-30);
    }

    #[test]
    fn quadratic_form_examples() {
        let c = ctx(160);
        let p = build_prolate(&geom(&c, &["0", "1", "2"]), c).unwrap();
        let e0 = vec![
            XComplex::from_real(c.one()),
            XComplex::from_real(c.zero()),
            XComplex::from_real(c.zero()),
        ];
        assert!(abs_diff(&p.quadratic_form_inv(&e0).unwrap(), &c.one()) < 1e-40);

        let p = build_prolate(&geom(&c, &["0", "0.5"]), c).unwrap();
        let a = vec![XComplex::from_real(c.one()), XComplex::from_real(-c.one())];
        let want = c.real(2) / (c.one() - c.real(2) / c.pi());
        assert!(abs_diff(&p.quadratic_form_inv(&a).unwrap(), &want) < 1e-40);

        let (s, v) = p.smallest_eigenpair().unwrap();
        let a: Vec<XComplex> = v.into_iter().map(XComplex::from_real).collect();
        let want = c.one() / s;
        assert!(abs_diff(&p.quadratic_form_inv(&a).unwrap(), &want) < 1e-40);

        assert!(p.quadratic_form_inv(&a[..1]).is_err());
    }

    #[test]
    fn complex_amplitudes_give_real_form() {
        let c = ctx(200);
        let p = build_prolate(&geom(&c, &["0", "0.1", "0.3"]), c).unwrap();
        let a = vec![
            XComplex::new(c.real(1), c.real(2)),
            XComplex::new(c.real(-0.5), c.real(0.25)),
            XComplex::new(c.real(0), c.real(-1)),
        ];
        let (re, im) = p.quadratic_form_inv_parts(&a).unwrap();
        assert!(re > 0);
        assert!(im.abs() < 1e-40);
    }

    #[test]
    fn exhausted_precision_reported() {
        // 12 nodes at spacing 0.01 need ~ 64 + 2·11·log2(200) ≈ 233 bits
        let c = ctx(64);
        let g = NodeGeometry::equispaced(12, &c.parse("0.01").unwrap(), c.pi(), c.one()).unwrap();
        let p = build_prolate(&g, c).unwrap();
        match p.smallest_eigenpair() {
            Err(Error::PrecisionExhausted { .. }) | Err(Error::NotConverged { .. }) => {}
            other => panic!("expected precision failure, got {other:?}"),
        }
    }
}
