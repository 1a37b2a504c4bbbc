//! Gauss–Legendre quadrature at working precision.

use rug::float::Constant;
use rug::Float;

use crate::xprec::{eps_at, XReal};

/// n-point Gauss–Legendre rule on [−1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<XReal>,
    weights: Vec<XReal>,
}

impl GaussLegendre {
    /// Roots of P_n by Newton's method from the usual cosine guesses.
    pub fn new(order: usize, prec: u32) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let n = order;
        let eps = eps_at(prec) * 16u32;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let pi = Float::with_val(prec, Constant::Pi);
        for i in 0..n {
            // i-th root counted from +1 downwards
            let mut x = Float::with_val(prec, (i as f64 + 0.75) / (n as f64 + 0.5)) * &pi;
            x.cos_mut();
            let mut deriv = Float::new(prec);
            for _ in 0..200 {
                let (p, dp) = legendre_with_derivative(n, &x);
                let step = p / &dp;
                x -= &step;
                deriv = dp;
                if step.abs() <= eps {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, &x);
            if !dp.is_zero() {
                deriv = dp;
            }
            let one_minus = Float::with_val(prec, 1) - x.clone().square();
            let w = Float::with_val(prec, 2) / (one_minus * deriv.square());
            nodes.push(x);
            weights.push(w);
        }
        nodes.reverse();
        weights.reverse();
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[XReal] {
        &self.nodes
    }

    pub fn weights(&self) -> &[XReal] {
        &self.weights
    }

    /// Nodes and weights mapped to [a, b].
    pub fn mapped(&self, a: &XReal, b: &XReal) -> impl Iterator<Item = (XReal, XReal)> + '_ {
        let half = (b.clone() - a) / 2u32;
        let mid = (b.clone() + a) / 2u32;
        self.nodes.iter().zip(&self.weights).map(move |(t, w)| (mid.clone() + half.clone() * t, half.clone() * w))
    }

    pub fn integrate(&self, a: &XReal, b: &XReal, mut f: impl FnMut(&XReal) -> XReal) -> XReal {
        let mut acc = Float::new(a.prec());
        for (x, w) in self.mapped(a, b) {
            acc += f(&x) * w;
        }
        acc
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: &XReal) -> (XReal, XReal) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        // k P_k = (2k−1) x P_{k−1} − (k−1) P_{k−2}
        let mut p2 = x.clone() * &p1 * (2 * k - 1) as u32;
        p2 -= p0 * (k - 1) as u32;
        p2 /= k as u32;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (Float::with_val(prec, 1), Float::new(prec));
    }
    // P_n' = n (x P_n − P_{n−1}) / (x² − 1)
    let num = (x.clone() * &p1 - &p0) * n as u32;
    let den = x.clone().square() - 1u32;
    (p1, num / den)
}

/// Composite rule: each interval between consecutive breakpoints is split
/// into equal panels no wider than `max_width`.
#[derive(Clone, Debug)]
pub struct CompositeRule {
    pub points: Vec<XReal>,
    pub weights: Vec<XReal>,
    pub panels: usize,
}

impl CompositeRule {
    pub fn new(breakpoints: &[XReal], max_width: &XReal, rule: &GaussLegendre) -> Self {
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let mut panels = 0;
        for w in breakpoints.windows(2) {
            let len = w[1].clone() - &w[0];
            if len <= 0 {
                continue;
            }
            let count = (len.clone() / max_width).ceil().to_f64().max(1.0) as usize;
            let step = len / count as u32;
            for j in 0..count {
                let a = w[0].clone() + step.clone() * j as u32;
                let b = if j + 1 == count { w[1].clone() } else { a.clone() + &step };
                for (x, wt) in rule.mapped(&a, &b) {
                    points.push(x);
                    weights.push(wt);
                }
            }
            panels += count;
        }
        Self { points, weights, panels }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}
