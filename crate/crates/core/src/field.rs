//! Scalar fields.
//!
//! Every matrix and vector is homogeneous in one of three fields: exact
//! rationals, `f64`, or complex `f64`. Generic code is written against
//! [`Field`]; the dynamically tagged [`Scalar`] exists for the CLI and the
//! C ABI, where the field is only known at run time.
//!
//! Promotion runs one way along the ladder rational → real → complex.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type Complex = num_complex::Complex64;

/// Field tag, ordered by the promotion ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Real,
    Complex,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rational => "rational",
            FieldTag::Real => "real",
            FieldTag::Complex => "complex",
        }
    }

    /// The smallest field containing both.
    pub fn join(self, other: FieldTag) -> FieldTag {
        self.max(other)
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(FieldTag::Rational),
            "real" => Ok(FieldTag::Real),
            "complex" => Ok(FieldTag::Complex),
            other => Err(Error::Parse(format!("unknown field '{other}'"))),
        }
    }
}

pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const TAG: FieldTag;

    fn from_rational(q: &Rational) -> Self;

    /// `None` for rationals when `v` is not finite.
    fn from_f64(v: f64) -> Option<Self>;

    /// Absolute value (modulus for complex) as a double.
    fn modulus(&self) -> f64;

    fn to_scalar(&self) -> Scalar;

    /// Converts a tagged scalar into this field, promoting if needed.
    fn from_scalar(s: &Scalar) -> Result<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn is_exact() -> bool {
        Self::TAG == FieldTag::Rational
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Rational;

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_f64(v: f64) -> Option<Self> {
        Rational::from_float(v)
    }

    fn modulus(&self) -> f64 {
        rational_to_f64(self).abs()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::Rational(q) => Ok(q.clone()),
            other => Err(Error::FieldDemotion {
                from: other.tag(),
                to: FieldTag::Rational,
            }),
        }
    }
}

impl Field for f64 {
    const TAG: FieldTag = FieldTag::Real;

    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }

    fn from_f64(v: f64) -> Option<Self> {
        Some(v)
    }

    fn modulus(&self) -> f64 {
        self.abs()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Real(*self)
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::Rational(q) => Ok(rational_to_f64(q)),
            Scalar::Real(v) => Ok(*v),
            Scalar::Complex(_) => Err(Error::FieldDemotion {
                from: FieldTag::Complex,
                to: FieldTag::Real,
            }),
        }
    }
}

impl Field for Complex {
    const TAG: FieldTag = FieldTag::Complex;

    fn from_rational(q: &Rational) -> Self {
        Complex::new(rational_to_f64(q), 0.0)
    }

    fn from_f64(v: f64) -> Option<Self> {
        Some(Complex::new(v, 0.0))
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Complex(*self)
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        Ok(match s {
            Scalar::Rational(q) => Complex::new(rational_to_f64(q), 0.0),
            Scalar::Real(v) => Complex::new(*v, 0.0),
            Scalar::Complex(c) => *c,
        })
    }
}

/// Nearest double, falling back to a scaled division when numerator or
/// denominator overflow on their own.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let num = q.numer();
    let den = q.denom();
    let shift = num.bits().max(den.bits()).saturating_sub(1000);
    let n = (num >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// A value tagged with its field.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Real(f64),
    Complex(Complex),
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Real(_) => FieldTag::Real,
            Scalar::Complex(_) => FieldTag::Complex,
        }
    }

    /// Moves the value up the ladder to `target`; moving down is an error.
    pub fn promote(&self, target: FieldTag) -> Result<Scalar> {
        Ok(match target {
            FieldTag::Rational => Scalar::Rational(Rational::from_scalar(self)?),
            FieldTag::Real => Scalar::Real(f64::from_scalar(self)?),
            FieldTag::Complex => Scalar::Complex(Complex::from_scalar(self)?),
        })
    }

    pub fn modulus(&self) -> f64 {
        match self {
            Scalar::Rational(q) => q.modulus(),
            Scalar::Real(v) => v.abs(),
            Scalar::Complex(c) => c.norm(),
        }
    }

    /// Parses `text` directly into the `target` field.
    ///
    /// Rationals accept `p/q` and exact decimals (`-0.5`, `1.25e-3`).
    /// Reals additionally accept anything `f64` parses. Complex accepts
    /// `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with real-syntax components.
    pub fn parse(text: &str, target: FieldTag) -> Result<Scalar> {
        let t = text.trim();
        match target {
            FieldTag::Rational => parse_rational(t).map(Scalar::Rational),
            FieldTag::Real => parse_real(t).map(Scalar::Real),
            FieldTag::Complex => parse_complex(t).map(Scalar::Complex),
        }
    }

    /// Smallest field that can hold the literal: rational when it parses
    /// exactly, complex when it carries an imaginary unit, else real.
    pub fn natural_field(text: &str) -> FieldTag {
        let t = text.trim();
        if parse_rational(t).is_ok() {
            FieldTag::Rational
        } else if t.ends_with('i') && parse_complex(t).is_ok() {
            FieldTag::Complex
        } else {
            FieldTag::Real
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Real(v) => f.write_str(&format_real(*v)),
            Scalar::Complex(c) => f.write_str(&format_complex(*c)),
        }
    }
}

/// Shortest round-tripping text, switching to exponent form for very large
/// or very small magnitudes.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let a = v.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn format_complex(c: Complex) -> String {
    let re = format_real(c.re);
    if c.im.is_sign_negative() {
        format!("{re}-{}i", format_real(-c.im))
    } else {
        format!("{re}+{}i", format_real(c.im))
    }
}

pub fn parse_rational(t: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: '{t}'"));
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{t}'")));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&all).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i64;
    if exponent.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let ten = Rational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}

pub fn parse_real(t: &str) -> Result<f64> {
    if t.contains('/') {
        return parse_rational(t).map(|q| rational_to_f64(&q));
    }
    t.parse::<f64>()
        .map_err(|_| Error::Parse(format!("not a real number: '{t}'")))
}

pub fn parse_complex(t: &str) -> Result<Complex> {
    let bad = || Error::Parse(format!("not a complex number: '{t}'"));
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(t).map(|re| Complex::new(re, 0.0));
    };
    // Split at the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() { 0.0 } else { parse_real(re_text).map_err(|_| bad())? };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => parse_real(s.strip_prefix('+').unwrap_or(s)).map_err(|_| bad())?,
    };
    Ok(Complex::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn rationals_are_normalized() {
        let v = q(6, -8);
        assert_eq!(v.numer(), &BigInt::from(-3));
        assert_eq!(v.denom(), &BigInt::from(4));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("1.25e-1").unwrap(), q(1, 8));
        assert_eq!(parse_rational("2e3").unwrap(), q(2000, 1));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1+i").is_err());
    }

    #[test]
    fn parse_complex_forms() {
        assert_eq!(parse_complex("i").unwrap(), Complex::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("1-2i").unwrap(), Complex::new(1.0, -2.0));
        assert_eq!(parse_complex("-1+i").unwrap(), Complex::new(-1.0, 1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), Complex::new(0.0, 2.5));
        assert_eq!(parse_complex("1e-3+4e+2i").unwrap(), Complex::new(1e-3, 400.0));
        assert_eq!(parse_complex("3").unwrap(), Complex::new(3.0, 0.0));
    }

    #[test]
    fn promotion_is_one_way() {
        let half = Scalar::Rational(q(1, 2));
        assert_eq!(half.promote(FieldTag::Real).unwrap(), Scalar::Real(0.5));
        assert_eq!(
            half.promote(FieldTag::Complex).unwrap(),
            Scalar::Complex(Complex::new(0.5, 0.0))
        );
        assert_eq!(
            Scalar::Real(0.5).promote(FieldTag::Rational),
            Err(Error::FieldDemotion {
                from: FieldTag::Real,
                to: FieldTag::Rational
            })
        );
        assert!(Scalar::Complex(Complex::new(0.0, 1.0))
            .promote(FieldTag::Real)
            .is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::Rational(q(-3, 4)).to_string(), "-3/4");
        assert_eq!(Scalar::Rational(q(0, 1)).to_string(), "0");
        assert_eq!(Scalar::Complex(Complex::new(1.5, -0.5)).to_string(), "1.5-0.5i");
        assert_eq!(Scalar::Real(1e-20).to_string(), "1e-20");
        assert_eq!(Scalar::Real(-2.0).to_string(), "-2");
    }

    #[test]
    fn natural_field_detection() {
        assert_eq!(Scalar::natural_field("-1/2"), FieldTag::Rational);
        assert_eq!(Scalar::natural_field("0.25"), FieldTag::Rational);
        assert_eq!(Scalar::natural_field("1+i"), FieldTag::Complex);
        assert_eq!(Scalar::natural_field("inf"), FieldTag::Real);
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = Rational::new(
            num_traits::pow(BigInt::from(10), 400) + 1,
            num_traits::pow(BigInt::from(10), 399),
        );
        assert!((rational_to_f64(&big) - 10.0).abs() < 1e-12);
    }
}
