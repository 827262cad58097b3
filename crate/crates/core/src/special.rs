//! Scalar special functions: pi, the Kronecker symbol, gamma at rational
//! arguments, and trigonometric functions at rational multiples of pi.

use rug::float::{Constant, Round};
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::real::{check_precision, PrecReal};

/// Pi at the requested precision. The recorded bound is one ulp, well
/// inside the contracted 2^(4-P).
pub fn const_pi(precision_bits: u32) -> Result<PrecReal> {
    check_precision(precision_bits)?;
    let value = Float::with_val(precision_bits, Constant::Pi);
    let err = Float::with_val(32, Float::u_exp(1, 2 - precision_bits as i32));
    Ok(PrecReal::with_err(value, err))
}

/// Kronecker symbol (a/m) for m >= 1, extending the Jacobi symbol to even
/// lower arguments: (a/1) = 1 and (a/2) is 0 for even a, +1 for a = +-1
/// mod 8 and -1 for a = +-3 mod 8.
pub fn kronecker(a: i64, m: i64) -> Result<i32> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!(
            "kronecker lower argument must be >= 1, got {m}"
        )));
    }
    let mut n = m;
    let mut res: i32 = 1;
    // Split off factors of two via the (a/2) rule.
    while n % 2 == 0 {
        n /= 2;
        if a % 2 == 0 {
            return Ok(0);
        }
        match a.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => res = -res,
            _ => unreachable!("odd residue mod 8"),
        }
    }
    // Jacobi symbol (a/n) for odd n >= 1 by binary reciprocity.
    let mut a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                res = -res;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            res = -res;
        }
        a %= n;
    }
    Ok(if n == 1 { res } else { 0 })
}

/// Gamma at a positive rational argument.
pub fn gamma_rational(r: &Rational, precision_bits: u32) -> Result<PrecReal> {
    check_precision(precision_bits)?;
    if *r <= 0 {
        return Err(Error::Domain(format!(
            "gamma pole or invalid argument at {r}"
        )));
    }
    let work = precision_bits + 32;
    let x = Float::with_val(work, r);
    let value = Float::with_val(precision_bits, x.gamma());
    // Correctly rounded up to argument conversion; record a relative 2^(2-P).
    let err = Float::with_val_round(
        32,
        value.as_abs().as_ref() * Float::u_exp(1, 2 - (precision_bits as i32)),
        Round::Up,
    )
    .0;
    Ok(PrecReal::with_err(value, err))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Sin,
    Cos,
    Tan,
}

impl TrigKind {
    pub fn name(self) -> &'static str {
        match self {
            TrigKind::Sin => "sinpi",
            TrigKind::Cos => "cospi",
            TrigKind::Tan => "tanpi",
        }
    }
}

/// sin, cos or tan of r*pi. Tangent at odd multiples of pi/2 is rejected.
pub fn trig_pi(kind: TrigKind, r: &Rational, precision_bits: u32) -> Result<PrecReal> {
    check_precision(precision_bits)?;
    if kind == TrigKind::Tan {
        // Poles at r = 1/2 mod 1.
        let shifted = Rational::from(r - Rational::from((1, 2)));
        if shifted.denom() == &1 {
            return Err(Error::InvalidArgument(format!(
                "tan({r} pi) is a pole"
            )));
        }
    }
    let work = precision_bits + 32;
    let x = Float::with_val(work, r);
    let raw = match kind {
        TrigKind::Sin => x.sin_pi(),
        TrigKind::Cos => x.cos_pi(),
        TrigKind::Tan => x.tan_pi(),
    };
    let value = Float::with_val(precision_bits, raw);
    let scale = match kind {
        // |d tan| = 1 + tan^2
        TrigKind::Tan => Float::with_val_round(
            32,
            1 + value.as_abs().as_ref() * value.as_abs().as_ref(),
            Round::Up,
        )
        .0,
        _ => Float::with_val(32, 1),
    };
    let err = Float::with_val_round(
        32,
        scale * Float::u_exp(1, 2 - (precision_bits as i32)),
        Round::Up,
    )
    .0;
    Ok(PrecReal::with_err(value, err))
}
