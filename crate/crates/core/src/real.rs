//! Arbitrary-precision reals tagged with a conservative absolute error bound.
//!
//! [`PrecReal`] wraps an MPFR float together with a small upward-rounded
//! error field. Every arithmetic operation propagates the bound so that it
//! always dominates the true error of the represented quantity; the bound
//! includes one ulp per rounding step, which over-covers MPFR's correctly
//! rounded half-ulp.

use rug::float::Round;
use rug::ops::{NegAssign, Pow};
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Smallest accepted working precision, in bits.
pub const MIN_PRECISION: u32 = 64;

/// Guard bits carried by internal computations above the certification target.
pub const GUARD_BITS: u32 = 64;

/// Precision of the error-bound field. Bounds only need an order of
/// magnitude, not accuracy.
const ERR_PREC: u32 = 32;

/// Validate a requested precision against the module minimum.
pub fn check_precision(precision_bits: u32) -> Result<()> {
    if precision_bits < MIN_PRECISION {
        return Err(Error::InvalidArgument(format!(
            "precision {precision_bits} below minimum {MIN_PRECISION} bits"
        )));
    }
    Ok(())
}

/// A real scalar at a fixed binary precision with an absolute error bound.
#[derive(Debug, Clone)]
pub struct PrecReal {
    value: Float,
    err: Float,
}

fn err_zero() -> Float {
    Float::with_val(ERR_PREC, 0)
}

fn round_up<T>(incomplete: T) -> Float
where
    T: rug::ops::CompleteRound<Completed = Float, Prec = u32, Round = Round>,
{
    incomplete.complete_round(ERR_PREC, Round::Up).0
}

fn round_down<T>(incomplete: T) -> Float
where
    T: rug::ops::CompleteRound<Completed = Float, Prec = u32, Round = Round>,
{
    incomplete.complete_round(ERR_PREC, Round::Down).0
}

/// One ulp of `v` as an upward-rounded error term; zero for an exact zero.
fn ulp(v: &Float) -> Float {
    match v.get_exp() {
        Some(e) => Float::with_val(ERR_PREC, Float::u_exp(1, e.saturating_sub(v.prec() as i32))),
        None => err_zero(),
    }
}

impl PrecReal {
    /// Wrap a float treated as an exact input.
    pub fn from_float(value: Float) -> Self {
        PrecReal {
            value,
            err: err_zero(),
        }
    }

    pub fn from_i64(v: i64, precision_bits: u32) -> Self {
        PrecReal::from_float(Float::with_val(precision_bits, v))
    }

    /// Round a rational to `precision_bits`; the bound records the rounding.
    pub fn from_rational(r: &Rational, precision_bits: u32) -> Self {
        let value = Float::with_val(precision_bits, r);
        let err = ulp(&value);
        PrecReal { value, err }
    }

    pub(crate) fn with_err(value: Float, err: Float) -> Self {
        debug_assert!(!err.is_sign_negative());
        PrecReal { value, err }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_value(self) -> Float {
        self.value
    }

    pub fn err_bound(&self) -> &Float {
        &self.err
    }

    pub fn precision_bits(&self) -> u32 {
        self.value.prec()
    }

    fn join_prec(&self, other: &PrecReal) -> u32 {
        self.value.prec().max(other.value.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_sign_negative() && !self.value.is_zero()
    }

    pub fn add(&self, other: &PrecReal) -> PrecReal {
        let value = Float::with_val(self.join_prec(other), &self.value + &other.value);
        let err = round_up(&self.err + &other.err + ulp(&value));
        PrecReal { value, err }
    }

    pub fn sub(&self, other: &PrecReal) -> PrecReal {
        let value = Float::with_val(self.join_prec(other), &self.value - &other.value);
        let err = round_up(&self.err + &other.err + ulp(&value));
        PrecReal { value, err }
    }

    pub fn mul(&self, other: &PrecReal) -> PrecReal {
        let value = Float::with_val(self.join_prec(other), &self.value * &other.value);
        let cross = round_up(&self.err * &other.err);
        let err = round_up(
            self.value.as_abs().as_ref() * &other.err
                + other.value.as_abs().as_ref() * &self.err
                + cross
                + ulp(&value),
        );
        PrecReal { value, err }
    }

    /// Division; fails when the divisor's error bound does not separate it
    /// from zero.
    pub fn div(&self, other: &PrecReal) -> Result<PrecReal> {
        let denom_low = round_down(other.value.as_abs().as_ref() - &other.err);
        if !(denom_low > 0) {
            return Err(Error::Domain(
                "division by a value not separated from zero".into(),
            ));
        }
        let value = Float::with_val(self.join_prec(other), &self.value / &other.value);
        let num = round_up(&self.err + value.as_abs().as_ref() * &other.err);
        let err = round_up(num / &denom_low + ulp(&value));
        Ok(PrecReal { value, err })
    }

    pub fn neg(&self) -> PrecReal {
        let mut value = self.value.clone();
        value.neg_assign();
        PrecReal {
            value,
            err: self.err.clone(),
        }
    }

    pub fn abs(&self) -> PrecReal {
        PrecReal {
            value: self.value.clone().abs(),
            err: self.err.clone(),
        }
    }

    /// Square root. The argument must not be negative beyond its error bound.
    pub fn sqrt(&self) -> Result<PrecReal> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative value".into()));
        }
        let value = self.value.clone().sqrt();
        let low = round_down(&self.value - &self.err);
        let err = if low > 0 {
            // |sqrt(a + d) - sqrt(a)| <= d / (2 sqrt(a - e))
            let denom = round_down(2 * low.sqrt());
            round_up(&self.err / &denom + ulp(&value))
        } else {
            // Hoelder fallback near zero: |sqrt x - sqrt y| <= sqrt|x - y|
            round_up(self.err.clone().sqrt() + ulp(&value))
        };
        Ok(PrecReal { value, err })
    }

    /// Real k-th root of a nonnegative value.
    pub fn nth_root(&self, k: u32) -> Result<PrecReal> {
        if k == 0 {
            return Err(Error::InvalidArgument("zeroth root".into()));
        }
        if self.is_negative() {
            return Err(Error::Eval(format!("{k}-th root of a negative value")));
        }
        let value = self.value.clone().root(k);
        let low = round_down(&self.value - &self.err);
        let err = if low > 0 {
            // d/dx x^(1/k) = x^(1/k) / (k x)
            let denom = round_down(&low * k);
            round_up(value.as_abs().as_ref() * &self.err / &denom + ulp(&value))
        } else {
            let mut frac = Float::with_val(ERR_PREC, self.err.clone());
            frac.root_mut(k);
            round_up(frac + ulp(&value))
        };
        Ok(PrecReal { value, err })
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn pow_i64(&self, k: i64) -> Result<PrecReal> {
        let prec = self.value.prec();
        if k == 0 {
            return Ok(PrecReal::from_i64(1, prec));
        }
        let mut base = self.clone();
        let mut e = k.unsigned_abs();
        let mut acc: Option<PrecReal> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        let acc = acc.expect("nonzero exponent");
        if k < 0 {
            PrecReal::from_i64(1, prec).div(&acc)
        } else {
            Ok(acc)
        }
    }

    /// Rational power of a nonnegative base: x^(p/q) = (x^p)^(1/q).
    pub fn pow_rational(&self, r: &Rational) -> Result<PrecReal> {
        let p = r.numer().to_i64().ok_or_else(|| {
            Error::InvalidArgument("rational exponent numerator exceeds i64".into())
        })?;
        let q = r.denom().to_u32().ok_or_else(|| {
            Error::InvalidArgument("rational exponent denominator exceeds u32".into())
        })?;
        if q == 1 {
            return self.pow_i64(p);
        }
        if self.is_negative() {
            return Err(Error::Eval(
                "non-integer power of a negative value".into(),
            ));
        }
        self.pow_i64(p)?.nth_root(q)
    }

    pub fn exp(&self) -> Result<PrecReal> {
        if self.err > 1u32 {
            return Err(Error::Eval("error bound too large for exp".into()));
        }
        let value = self.value.clone().exp();
        let grow = round_up(&self.err + self.err.clone().square());
        let err = round_up(value.as_abs().as_ref() * &grow + ulp(&value));
        Ok(PrecReal { value, err })
    }

    pub fn ln(&self) -> Result<PrecReal> {
        let low = round_down(&self.value - &self.err);
        if !(low > 0) {
            return Err(Error::Domain("logarithm of a nonpositive value".into()));
        }
        let value = self.value.clone().ln();
        let err = round_up(&self.err / &low + ulp(&value));
        Ok(PrecReal { value, err })
    }

    /// Absolute difference |self - other| as a plain float.
    pub fn abs_diff(&self, other: &PrecReal) -> Float {
        Float::with_val(self.join_prec(other), &self.value - &other.value).abs()
    }

    /// Format with `places` digits after the decimal point, rounding
    /// half-to-even.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = Integer::from(10).pow(places);
        let work = self.value.prec() + 32 + scale.significant_bits() as u32;
        let scaled = Float::with_val(work, &self.value * &scale).round_even();
        let n = scaled
            .to_integer()
            .expect("finite value expected for formatting");
        let neg = n < 0;
        let digits = n.abs().to_string();
        let places = places as usize;
        let (int_part, frac_part) = if digits.len() > places {
            let split = digits.len() - places;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{digits:0>places$}"))
        };
        let sign = if neg { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Shortest decimal string that round-trips at the working precision.
    pub fn to_decimal_full(&self) -> String {
        self.value.to_string_radix(10, None)
    }
}

impl PartialEq for PrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for PrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(v: f64) -> PrecReal {
        PrecReal::from_float(Float::with_val(128, v))
    }

    #[test]
    fn error_bounds_accumulate() {
        let a = pr(1.5);
        let b = pr(2.25);
        let s = a.add(&b);
        assert_eq!(s.value().to_f64(), 3.75);
        assert!(s.err_bound() >= &0);
        let p = s.mul(&s);
        assert!(p.err_bound() > s.err_bound());
    }

    #[test]
    fn division_by_unseparated_zero_fails() {
        let a = pr(1.0);
        let z = PrecReal::with_err(Float::with_val(128, 0), Float::with_val(32, 1e-3));
        assert!(a.div(&z).is_err());
    }

    #[test]
    fn sqrt_of_negative_rejected() {
        assert!(pr(-2.0).sqrt().is_err());
    }

    #[test]
    fn pow_i64_matches_repeated_multiplication() {
        let x = pr(1.75);
        let direct = x.mul(&x).mul(&x);
        let powered = x.pow_i64(3).unwrap();
        assert_eq!(direct.value(), powered.value());
        let inv = x.pow_i64(-2).unwrap();
        let expected = Float::with_val(128, 1.75f64).pow(-2);
        assert!((inv.value().clone() - expected).abs() < 1e-30);
    }

    #[test]
    fn decimal_formatting_rounds_half_even() {
        assert_eq!(pr(1.0).to_decimal(10), "1.0000000000");
        assert_eq!(pr(0.125).to_decimal(2), "0.12"); // tie to even
        assert_eq!(pr(0.375).to_decimal(2), "0.38"); // tie to even
        assert_eq!(pr(-2.5).to_decimal(0), "-2");
        assert_eq!(pr(0.0625).to_decimal(4), "0.0625");
    }

    #[test]
    fn rational_rounding_recorded_in_bound() {
        let third = Rational::from((1, 3));
        let x = PrecReal::from_rational(&third, 128);
        assert!(x.err_bound() > &0);
        let y = PrecReal::from_i64(4, 128);
        assert!(y.err_bound().is_zero());
    }
}
