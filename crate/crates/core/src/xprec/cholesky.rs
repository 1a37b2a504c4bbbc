use rug::Float;

use super::{to_decimal, SymMatrix, XComplex, XReal};
use crate::error::{Error, Result};

/// Lower-triangular factor L with S = L·Lᵀ.
#[derive(Clone, Debug)]
pub struct Cholesky {
    n: usize,
    // row-major lower triangle
    l: Vec<XReal>,
}

impl Cholesky {
    pub fn factor(s: &SymMatrix) -> Result<Self> {
        let n = s.dim();
        let prec = s.prec();
        let mut l: Vec<XReal> = vec![Float::new(prec); n * (n + 1) / 2];
        let at = |i: usize, j: usize| i * (i + 1) / 2 + j;
        for j in 0..n {
            let mut d = s.get(j, j).clone();
            for k in 0..j {
                d -= l[at(j, k)].clone().square();
            }
            if d <= 0 || !d.is_finite() {
                return Err(Error::NotSpd { index: j, pivot: to_decimal(&d) });
            }
            d.sqrt_mut();
            for i in (j + 1)..n {
                let mut acc = s.get(i, j).clone();
                for k in 0..j {
                    acc -= l[at(i, k)].clone() * &l[at(j, k)];
                }
                acc /= &d;
                l[at(i, j)] = acc;
            }
            l[at(j, j)] = d;
        }
        Ok(Self { n, l })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn at(&self, i: usize, j: usize) -> &XReal {
        &self.l[i * (i + 1) / 2 + j]
    }

    pub fn solve(&self, b: &[XReal]) -> Result<Vec<XReal>> {
        if b.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: b.len() });
        }
        let n = self.n;
        // L z = b
        let mut z: Vec<XReal> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Float::with_val(self.at(i, i).prec(), &b[i]);
            for (k, zk) in z.iter().enumerate() {
                acc -= self.at(i, k).clone() * zk;
            }
            acc /= self.at(i, i);
            z.push(acc);
        }
        // Lᵀ y = z
        let mut y = z;
        for i in (0..n).rev() {
            let mut acc = y[i].clone();
            for k in (i + 1)..n {
                acc -= self.at(k, i).clone() * &y[k];
            }
            acc /= self.at(i, i);
            y[i] = acc;
        }
        Ok(y)
    }

    pub fn solve_complex(&self, b: &[XComplex]) -> Result<Vec<XComplex>> {
        let re: Vec<XReal> = b.iter().map(|z| z.re.clone()).collect();
        let im: Vec<XReal> = b.iter().map(|z| z.im.clone()).collect();
        let yr = self.solve(&re)?;
        let yi = self.solve(&im)?;
        Ok(yr.into_iter().zip(yi).map(|(r, i)| XComplex::new(r, i)).collect())
    }

    /// (max_i L_ii / min_i L_ii)², a cheap lower bound on cond(S).
    pub fn condition_lower_bound(&self) -> XReal {
        let mut lo = self.at(0, 0).clone();
        let mut hi = lo.clone();
        for i in 1..self.n {
            let d = self.at(i, i);
            if *d < lo {
                lo = d.clone();
            }
            if *d > hi {
                hi = d.clone();
            }
        }
        (hi / lo).square()
    }
}

/// Solves S·y = b for symmetric positive definite S.
pub fn cholesky_solve(s: &SymMatrix, b: &[XReal]) -> Result<Vec<XReal>> {
    if b.len() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), got: b.len() });
    }
    Cholesky::factor(s)?.solve(b)
}
