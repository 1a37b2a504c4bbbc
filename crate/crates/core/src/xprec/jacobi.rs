use rug::Float;

use super::{eps_at, to_decimal, SymMatrix, XReal};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition with eigenvalues ascending; `vectors[i]` belongs to
/// `values[i]` and the vectors are orthonormal.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<XReal>,
    pub vectors: Vec<Vec<XReal>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi eigensolver.
///
/// A rotation for (p, q) is skipped once |a_pq| ≤ eps·sqrt(|a_pp·a_qq|);
/// iteration stops after a sweep with no rotations. The off-diagonal mass at
/// that point is below n²·eps·‖S‖, and because the test is relative to the
/// diagonal the tiny eigenvalues of a positive definite matrix keep their
/// relative accuracy.
pub fn sym_eigen(s: &SymMatrix) -> Result<SymEigen> {
    let n = s.dim();
    let prec = s.prec();
    let eps = eps_at(prec);
    let mut a = s.to_dense();
    let mut v: Vec<Vec<XReal>> = (0..n)
        .map(|i| (0..n).map(|j| Float::with_val(prec, u32::from(i == j))).collect())
        .collect();

    let mut sweeps = 0;
    loop {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged { sweeps, off_norm: to_decimal(&off_norm(&a)) });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].is_zero() {
                    continue;
                }
                let mut thresh = (a[p][p].clone() * &a[q][q]).abs();
                thresh.sqrt_mut();
                thresh *= &eps;
                if a[p][q].clone().abs() <= thresh {
                    continue;
                }
                rotated = true;
                rotate(&mut a, &mut v, p, q);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| a[i][i].clone()).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|r| v[r][i].clone()).collect()).collect();
    Ok(SymEigen { values, vectors, sweeps })
}

fn rotate(a: &mut [Vec<XReal>], v: &mut [Vec<XReal>], p: usize, q: usize) {
    let n = a.len();
    let apq = a[p][q].clone();
    // θ = (a_qq − a_pp) / (2 a_pq); t = sgn θ / (|θ| + sqrt(θ² + 1))
    let theta = (a[q][q].clone() - &a[p][p]) / (apq.clone() * 2u32);
    let mut root = theta.clone().square();
    root += 1u32;
    root.sqrt_mut();
    let mut t = root + theta.clone().abs();
    t.recip_mut();
    if theta.is_sign_negative() {
        t = -t;
    }
    let mut c = t.clone().square();
    c += 1u32;
    c.sqrt_mut();
    c.recip_mut();
    let s = t.clone() * &c;
    let tau = s.clone() / (c + 1u32);
    let h = t * &apq;
    a[p][p] -= &h;
    a[q][q] += &h;
    a[p][q] = Float::new(apq.prec());
    a[q][p] = Float::new(apq.prec());

    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = a[r][p].clone();
        let hh = a[r][q].clone();
        let new_rp = g.clone() - s.clone() * (hh.clone() + g.clone() * &tau);
        let new_rq = hh.clone() + s.clone() * (g - hh * &tau);
        a[p][r] = new_rp.clone();
        a[r][p] = new_rp;
        a[q][r] = new_rq.clone();
        a[r][q] = new_rq;
    }
    for row in v.iter_mut() {
        let g = row[p].clone();
        let hh = row[q].clone();
        row[p] = g.clone() - s.clone() * (hh.clone() + g.clone() * &tau);
        row[q] = hh.clone() + s.clone() * (g - hh * &tau);
    }
}

fn off_norm(a: &[Vec<XReal>]) -> XReal {
    let prec = a[0][0].prec();
    let mut acc = Float::new(prec);
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                acc += x.clone().square();
            }
        }
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xprec::PrecisionContext;

    fn close(a: &XReal, b: f64, tol: f64) -> bool {
        (a.clone() - b).abs() < tol
    }

    #[test]
    fn diagonal_sorted_with_coordinate_vectors() {
        let c = PrecisionContext::new(128).unwrap();
        let s = SymMatrix::diagonal(vec![c.real(3), c.real(1), c.real(2)]);
        let e = sym_eigen(&s).unwrap();
        assert_eq!(e.values, vec![c.real(1), c.real(2), c.real(3)]);
        assert_eq!(e.vectors[0], vec![c.real(0), c.real(1), c.real(0)]);
        assert_eq!(e.vectors[1], vec![c.real(0), c.real(0), c.real(1)]);
        assert_eq!(e.vectors[2], vec![c.real(1), c.real(0), c.real(0)]);
    }

    #[test]
    fn two_by_two_hand_case() {
        let c = PrecisionContext::new(128).unwrap();
        let s = SymMatrix::from_fn(2, |i, j| c.real(if i == j { 2 } else { 1 }));
        let e = sym_eigen(&s).unwrap();
        assert!(close(&e.values[0], 1.0, 1e-35));
        assert!(close(&e.values[1], 3.0, 1e-35));
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let v0: Vec<f64> = e.vectors[0].iter().map(|x| x.to_f64()).collect();
        let v1: Vec<f64> = e.vectors[1].iter().map(|x| x.to_f64()).collect();
        assert!((v0[0].abs() - r).abs() < 1e-15 && (v0[0] + v0[1]).abs() < 1e-15);
        assert!((v1[0].abs() - r).abs() < 1e-15 && (v1[0] - v1[1]).abs() < 1e-15);
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let c = PrecisionContext::new(96).unwrap();
        let e = sym_eigen(&SymMatrix::identity(4, c.bits())).unwrap();
        assert!(e.values.iter().all(|x| *x == 1));
        assert_eq!(e.sweeps, 1);
    }
}
