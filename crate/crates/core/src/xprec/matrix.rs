use rug::Float;

use super::XReal;

/// Dense symmetric matrix storing only the lower triangle, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    packed: Vec<XReal>,
}

#[inline]
fn packed_index(i: usize, j: usize) -> usize {
    let (r, c) = if i >= j { (i, j) } else { (j, i) };
    r * (r + 1) / 2 + c
}

impl SymMatrix {
    /// Builds from `f(i, j)`, which is only called with `i >= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> XReal) -> Self {
        let mut packed = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                packed.push(f(i, j));
            }
        }
        Self { n, packed }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        Self::from_fn(n, |i, j| Float::with_val(prec, u32::from(i == j)))
    }

    pub fn diagonal(d: Vec<XReal>) -> Self {
        let n = d.len();
        let prec = d.first().map_or(64, |x| x.prec());
        Self::from_fn(n, |i, j| if i == j { d[i].clone() } else { Float::new(prec) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn prec(&self) -> u32 {
        self.packed.first().map_or(64, |x| x.prec())
    }

    pub fn get(&self, i: usize, j: usize) -> &XReal {
        &self.packed[packed_index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: XReal) {
        self.packed[packed_index(i, j)] = value;
    }

    pub fn mul_vec(&self, v: &[XReal]) -> Vec<XReal> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        let prec = self.prec();
        (0..self.n)
            .map(|i| {
                let mut acc = Float::new(prec);
                for (j, vj) in v.iter().enumerate() {
                    acc += self.get(i, j).clone() * vj;
                }
                acc
            })
            .collect()
    }

    /// max row sum of absolute values
    pub fn norm_inf(&self) -> XReal {
        let prec = self.prec();
        let mut best = Float::new(prec);
        for i in 0..self.n {
            let mut row = Float::new(prec);
            for j in 0..self.n {
                row += self.get(i, j).clone().abs();
            }
            if row > best {
                best = row;
            }
        }
        best
    }

    pub fn to_dense(&self) -> Vec<Vec<XReal>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }
}
