//! Extended-precision arithmetic and the small amount of dense symmetric
//! linear algebra the rest of the crate needs.
//!
//! Reals are MPFR floats ([`rug::Float`]); every value created through a
//! [`PrecisionContext`] carries the context's precision, and all tolerances
//! in this crate are expressed as multiples of the context epsilon.

mod cholesky;
mod complex;
mod jacobi;
mod matrix;

pub use cholesky::{cholesky_solve, Cholesky};
pub use complex::XComplex;
pub use jacobi::{sym_eigen, SymEigen};
pub use matrix::SymMatrix;

use rug::float::Constant;
use rug::{Assign, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision real. Arithmetic is correctly rounded by MPFR at the
/// precision of the destination.
pub type XReal = Float;

/// Working precision for one computation.
///
/// `bits` is the significand precision actually used; `guard_bits` records how
/// many of those were added on top of [`estimate_required_bits`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    bits: u32,
    guard_bits: u32,
}

impl PrecisionContext {
    pub const MIN_BITS: u32 = 64;
    pub const DEFAULT_GUARD_BITS: u32 = 32;

    pub fn new(bits: u32) -> Result<Self> {
        Self::with_guard(bits, 0)
    }

    /// `base_bits + guard_bits` of working precision.
    pub fn with_guard(base_bits: u32, guard_bits: u32) -> Result<Self> {
        if base_bits < Self::MIN_BITS {
            return Err(Error::PrecisionTooLow { got: base_bits, min: Self::MIN_BITS });
        }
        Ok(Self { bits: base_bits + guard_bits, guard_bits })
    }

    /// Precision for `n` nodes at spacing `dx_over_lambda`·λ_min, from the
    /// condition-number estimate plus `guard_bits`.
    pub fn for_problem(n: usize, dx_over_lambda: &XReal, guard_bits: u32) -> Result<Self> {
        Self::with_guard(estimate_required_bits(n, dx_over_lambda)?, guard_bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    /// 2^(1−bits), exactly.
    pub fn eps(&self) -> XReal {
        eps_at(self.bits)
    }

    pub fn real<T>(&self, value: T) -> XReal
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits, value)
    }

    pub fn zero(&self) -> XReal {
        Float::new(self.bits)
    }

    pub fn one(&self) -> XReal {
        self.real(1)
    }

    pub fn pi(&self) -> XReal {
        Float::with_val(self.bits, Constant::Pi)
    }

    /// Parses a decimal (or exponent-notation) string at working precision.
    pub fn parse(&self, text: &str) -> Result<XReal> {
        let t = text.trim();
        Float::parse(t)
            .map(|p| Float::with_val(self.bits, p))
            .map_err(|_| Error::Parse(t.to_string()))
    }

    /// Rounds `x` to this context's precision.
    pub fn adopt(&self, x: &XReal) -> XReal {
        Float::with_val(self.bits, x)
    }
}

/// Parses a decimal number or a rational multiple of π: `pi`, `-pi`,
/// `2*pi`, `2pi`, `pi/4`, `3*pi/2`.
pub fn parse_scalar(text: &str, ctx: &PrecisionContext) -> Result<XReal> {
    let t: String = text.trim().chars().filter(|c| !c.is_whitespace()).collect();
    let lower = t.to_ascii_lowercase();
    let Some(at) = lower.find("pi") else {
        return ctx.parse(&t);
    };
    let bad = || Error::Parse(text.to_string());
    let head = lower[..at].trim_end_matches('*');
    let tail = &lower[at + 2..];
    let mut value = match head {
        "" | "+" => ctx.pi(),
        "-" => -ctx.pi(),
        h => ctx.parse(h).map_err(|_| bad())? * ctx.pi(),
    };
    if !tail.is_empty() {
        let den = tail.strip_prefix('/').ok_or_else(bad)?;
        let den = ctx.parse(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        value /= den;
    }
    Ok(value)
}

pub(crate) fn eps_at(bits: u32) -> XReal {
    let mut e = Float::with_val(bits, 1);
    e >>= bits - 1;
    e
}

/// Full-precision decimal rendering that parses back to the same value at
/// the same precision.
pub fn to_decimal(x: &XReal) -> String {
    x.to_string_radix(10, None)
}

/// Decimal rendering truncated to `digits` significant digits.
pub fn to_decimal_digits(x: &XReal, digits: usize) -> String {
    x.to_string_radix(10, Some(digits.max(1)))
}

/// Working precision needed so that about 64 bits survive the condition
/// number of the prolate matrix for `n` equispaced nodes at spacing
/// `dx_over_lambda`·λ_min.
///
/// log2 cond(S) grows like 2(n−1)·log2(1/ratio); the estimate returns
/// `64 + ceil(2(n−1)·log2(1/ratio))`, which stays above the brute-force
/// log2 cond(S) for N = 10 at 0.05·λ_min and N = 16 at 0.1·λ_min. At or above
/// Nyquist spacing no extra precision is needed, but the ratio is rejected so
/// callers notice; use [`PrecisionContext::MIN_BITS`] to force it.
pub fn estimate_required_bits(n: usize, dx_over_lambda: &XReal) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidNodes("need at least one node".into()));
    }
    if !dx_over_lambda.is_finite() || *dx_over_lambda <= 0 {
        return Err(Error::InvalidNodes(format!(
            "node spacing ratio must be positive, got {}",
            dx_over_lambda.to_f64()
        )));
    }
    if *dx_over_lambda >= 0.5 {
        return Err(Error::NotSuperoscillatory { ratio: dx_over_lambda.to_f64() });
    }
    if n == 1 {
        return Ok(PrecisionContext::MIN_BITS);
    }
    let mut inv = Float::with_val(dx_over_lambda.prec().max(64), 1);
    inv /= dx_over_lambda;
    inv.log2_mut();
    inv *= 2 * (n as u32 - 1);
    let extra = inv.to_f64().ceil().max(0.0) as u32;
    Ok(PrecisionContext::MIN_BITS + extra)
}
