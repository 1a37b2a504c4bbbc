use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use rug::Float;

use super::XReal;

/// Complex number as a pair of [`XReal`]s at a common precision.
#[derive(Clone, Debug, PartialEq)]
pub struct XComplex {
    pub re: XReal,
    pub im: XReal,
}

impl XComplex {
    pub fn new(re: XReal, im: XReal) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn from_real(re: XReal) -> Self {
        let im = Float::new(re.prec());
        Self { re, im }
    }

    /// e^{iθ}
    pub fn cis(theta: &XReal) -> Self {
        let mut s = theta.clone();
        let mut c = Float::new(theta.prec());
        s.sin_cos_mut(&mut c);
        Self { re: c, im: s }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> XReal {
        let mut r = self.re.clone().square();
        r += self.im.clone().square();
        r
    }

    pub fn abs(&self) -> XReal {
        self.re.clone().hypot(&self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &XReal) -> Self {
        Self { re: self.re.clone() * k, im: self.im.clone() * k }
    }

    /// self += a·k for real k.
    pub fn add_scaled(&mut self, a: &XComplex, k: &XReal) {
        self.re += a.re.clone() * k;
        self.im += a.im.clone() * k;
    }
}

impl Add for &XComplex {
    type Output = XComplex;
    fn add(self, rhs: &XComplex) -> XComplex {
        XComplex { re: self.re.clone() + &rhs.re, im: self.im.clone() + &rhs.im }
    }
}

impl Sub for &XComplex {
    type Output = XComplex;
    fn sub(self, rhs: &XComplex) -> XComplex {
        XComplex { re: self.re.clone() - &rhs.re, im: self.im.clone() - &rhs.im }
    }
}

impl Mul for &XComplex {
    type Output = XComplex;
    fn mul(self, rhs: &XComplex) -> XComplex {
        let mut re = self.re.clone() * &rhs.re;
        re -= self.im.clone() * &rhs.im;
        let mut im = self.re.clone() * &rhs.im;
        im += self.im.clone() * &rhs.re;
        XComplex { re, im }
    }
}

impl AddAssign<&XComplex> for XComplex {
    fn add_assign(&mut self, rhs: &XComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for XComplex {
    type Output = XComplex;
    fn neg(self) -> XComplex {
        XComplex { re: -self.re, im: -self.im }
    }
}
