//! Exact rationals and positive linear forms.
//!
//! [`Rational`] is an arbitrary-precision rational kept in lowest terms with
//! positive denominator; zero is always `0/1`. [`LinearForm`] is `a*z + b`
//! with nonnegative integer coefficients, not both zero, carrying the
//! coefficientwise partial order and the polynomial gcd.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number in lowest terms.
///
/// Backed by [`num_rational::BigRational`], whose constructor already
/// normalizes: `den >= 1`, `gcd(|num|, den) = 1`, and zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Shorthand used pervasively in tests and examples.
    pub fn from_i64s(num: i64, den: i64) -> Result<Self, Error> {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// `max(|num|, den)`, defined for nonzero rationals only.
    pub fn height(&self) -> Result<BigUint, Error> {
        if self.is_zero() {
            return Err(Error::HeightOfZero);
        }
        let n = self.num().magnitude();
        let d = self.den().magnitude();
        Ok(n.max(d).clone())
    }
}

macro_rules! rational_binop {
    ($op:ident, $method:ident) => {
        impl $op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    /// `num/den`, with integers printed without the `/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `num/den` or a bare integer, with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_signed(num_str).ok_or_else(bad)?;
        let den = match den_str {
            Some(d) => BigInt::from(parse_unsigned(d).ok_or_else(bad)?),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mag = parse_unsigned(digits)?;
    let n = BigInt::from(mag);
    Some(if negative { -n } else { n })
}

fn parse_unsigned(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::from_str(s).ok()
}

/// A positive linear form `a*z + b`: nonnegative integer coefficients with
/// `a + b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    a: BigUint,
    b: BigUint,
}

impl LinearForm {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Result<Self, Error> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { a, b })
    }

    /// Coefficient of `z`.
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// Constant term.
    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// The coefficientwise partial order: `self <= other` in both slots.
    pub fn leq(&self, other: &LinearForm) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Strict order: `leq` and distinct.
    pub fn lt(&self, other: &LinearForm) -> bool {
        self.leq(other) && self != other
    }

    /// Two distinct forms are comparable when one strictly precedes the other.
    pub fn comparable(&self, other: &LinearForm) -> bool {
        self.lt(other) || other.lt(self)
    }

    /// `gcd(a, b)`; at least 1 because the form is nonzero.
    pub fn content(&self) -> BigUint {
        self.a.gcd(&self.b)
    }

    /// Greatest common divisor in the polynomial ring `Z[z]`.
    ///
    /// Proportional forms share a primitive part, and the gcd is that part
    /// times the gcd of the contents; otherwise the gcd is the constant
    /// gcd of the contents.
    pub fn gcd(&self, other: &LinearForm) -> LinearForm {
        let content_gcd = self.content().gcd(&other.content());
        let cross = BigInt::from(self.a.clone()) * BigInt::from(other.b.clone())
            - BigInt::from(self.b.clone()) * BigInt::from(other.a.clone());
        if cross.is_zero() {
            let c = self.content();
            LinearForm {
                a: &self.a / &c * &content_gcd,
                b: &self.b / &c * &content_gcd,
            }
        } else {
            LinearForm {
                a: BigUint::zero(),
                b: content_gcd,
            }
        }
    }

    /// Substitute the rational `x` for `z`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let az = Rational::from_integer(BigInt::from(self.a.clone())) * x.clone();
        az + Rational::from_integer(BigInt::from(self.b.clone()))
    }

    /// `a + b`, the termination measure of the Euclidean chain.
    pub fn coeff_sum(&self) -> BigUint {
        &self.a + &self.b
    }

    /// Exact divisibility in `Z[z]`: is `self = q * d` for some `q` in the
    /// ring? The quotient is a constant unless `d` is a constant.
    pub fn divisible_by(&self, d: &LinearForm) -> bool {
        if d.a.is_zero() {
            // Constant divisor: may divide into a linear quotient.
            (&self.a % &d.b).is_zero() && (&self.b % &d.b).is_zero()
        } else {
            // Linear divisor: quotient must be the constant a/d.a.
            if !(&self.a % &d.a).is_zero() {
                return false;
            }
            let q = &self.a / &d.a;
            &d.b * &q == self.b
        }
    }
}

impl fmt::Display for LinearForm {
    /// Canonical rendering: `b` when `a = 0`, `z` for the coefficient 1,
    /// and `+b` omitted when `b = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_zero() {
            return write!(f, "{}", self.b);
        }
        if self.a.is_one() {
            write!(f, "z")?;
        } else {
            write!(f, "{}*z", self.a)?;
        }
        if !self.b.is_zero() {
            write!(f, "+{}", self.b)?;
        }
        Ok(())
    }
}

impl PartialOrd for LinearForm {
    /// The coefficientwise partial order; `None` for incomparable forms.
    fn partial_cmp(&self, other: &LinearForm) -> Option<Ordering> {
        if self == other {
            Some(Ordering::Equal)
        } else if self.leq(other) {
            Some(Ordering::Less)
        } else if other.leq(self) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}
