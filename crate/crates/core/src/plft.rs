//! Positive linear fractional transformations as formal 2x2 matrices.
//!
//! `(az+b)/(cz+d)` is stored as the matrix `[a b; c d]` with nonnegative
//! arbitrary-precision entries and `ad - bc != 0`. No common factor is ever
//! cancelled between the rows: `[2 0; 0 2]` and `[1 0; 0 1]` are distinct
//! vertices in different trees of the forest. Equality is entrywise.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exactnum::{LinearForm, Rational};

/// How a matrix sits in its tree: left child, right child, or a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChildKind {
    Left,
    Right,
    Orphan,
}

/// A positive linear fractional transformation `(az+b)/(cz+d)`, identified
/// with the matrix `[a b; c d]` in `GL2` over the nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Plft {
    a: BigUint,
    b: BigUint,
    c: BigUint,
    d: BigUint,
}

impl Plft {
    /// Rejects `ad - bc = 0` at construction; everything downstream relies
    /// on a nonzero determinant.
    pub fn new(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
        d: impl Into<BigUint>,
    ) -> Result<Self, Error> {
        let m = Plft {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        if (&m.a * &m.d) == (&m.b * &m.c) {
            return Err(Error::ZeroDeterminant);
        }
        Ok(m)
    }

    pub fn from_u64s(a: u64, b: u64, c: u64, d: u64) -> Result<Self, Error> {
        Plft::new(a, b, c, d)
    }

    /// The function `z`, root of the determinant-1 tree.
    pub fn identity() -> Self {
        Plft {
            a: BigUint::one(),
            b: BigUint::zero(),
            c: BigUint::zero(),
            d: BigUint::one(),
        }
    }

    pub fn from_forms(num: &LinearForm, den: &LinearForm) -> Result<Self, Error> {
        Plft::new(
            num.a().clone(),
            num.b().clone(),
            den.a().clone(),
            den.b().clone(),
        )
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// Numerator form `az + b`. Never zero, because the determinant is not.
    pub fn num_form(&self) -> LinearForm {
        LinearForm::new(self.a.clone(), self.b.clone()).expect("det != 0 forces (a,b) != (0,0)")
    }

    /// Denominator form `cz + d`.
    pub fn den_form(&self) -> LinearForm {
        LinearForm::new(self.c.clone(), self.d.clone()).expect("det != 0 forces (c,d) != (0,0)")
    }

    /// `ad - bc`; nonzero by construction.
    pub fn det(&self) -> BigInt {
        BigInt::from(&self.a * &self.d) - BigInt::from(&self.b * &self.c)
    }

    /// Function composition `self . other`, i.e. the matrix product.
    /// Determinants multiply.
    pub fn compose(&self, other: &Plft) -> Plft {
        Plft {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// `(a.x + b)/(c.x + d)` as a reduced rational.
    ///
    /// The denominator can only vanish for negative `x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational, Error> {
        let den = self.den_form().eval(x);
        if den.is_zero() {
            return Err(Error::PoleAtInput);
        }
        Ok(&self.num_form().eval(x) / &den)
    }

    /// `self/(self+1)`: prepends the lower triangular generator, keeping the
    /// determinant.
    pub fn left_child(&self) -> Plft {
        Plft {
            a: self.a.clone(),
            b: self.b.clone(),
            c: &self.a + &self.c,
            d: &self.b + &self.d,
        }
    }

    /// `self + 1`: prepends the upper triangular generator, keeping the
    /// determinant.
    pub fn right_child(&self) -> Plft {
        Plft {
            a: &self.a + &self.c,
            b: &self.b + &self.d,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// Left children have `num < den` coefficientwise, right children the
    /// reverse, and orphans have incomparable rows. Equality of the rows is
    /// impossible since the determinant would be zero.
    pub fn classify(&self) -> ChildKind {
        let num = self.num_form();
        let den = self.den_form();
        if num.lt(&den) {
            ChildKind::Left
        } else if den.lt(&num) {
            ChildKind::Right
        } else {
            ChildKind::Orphan
        }
    }

    pub fn is_orphan(&self) -> bool {
        self.classify() == ChildKind::Orphan
    }

    /// Undoes one generation step; errors on orphans.
    pub fn parent(&self) -> Result<Plft, Error> {
        match self.classify() {
            ChildKind::Left => Ok(Plft {
                a: self.a.clone(),
                b: self.b.clone(),
                c: &self.c - &self.a,
                d: &self.d - &self.b,
            }),
            ChildKind::Right => Ok(Plft {
                a: &self.a - &self.c,
                b: &self.b - &self.d,
                c: self.c.clone(),
                d: self.d.clone(),
            }),
            ChildKind::Orphan => Err(Error::NoParent),
        }
    }

    /// `max(a+b, c+d)`; both children of any vertex have height `a+b+c+d`,
    /// strictly larger.
    pub fn height(&self) -> BigUint {
        let num = &self.a + &self.b;
        let den = &self.c + &self.d;
        num.max(den)
    }

    /// The involution `f(z) -> 1/f(1/z)`, i.e. `[a b; c d] -> [d c; b a]`.
    /// It swaps left and right children.
    pub fn phi(&self) -> Plft {
        Plft {
            a: self.d.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.a.clone(),
        }
    }

    /// `f -> 1/f`, the row swap `[a b; c d] -> [c d; a b]`. Negates the
    /// determinant, maps orphans to orphans, and is an involution.
    pub fn reciprocal(&self) -> Plft {
        Plft {
            a: self.c.clone(),
            b: self.d.clone(),
            c: self.a.clone(),
            d: self.b.clone(),
        }
    }

    /// Function-style rendering: `z+1`, `z/(z+1)`, `(z+2)/(2*z+1)`, ...
    ///
    /// A denominator equal to the constant 1 is omitted, and a side is
    /// parenthesized only when its printed form has two terms.
    pub fn to_function_string(&self) -> String {
        let num = self.num_form().to_string();
        if self.c.is_zero() && self.d.is_one() {
            return num;
        }
        let den = self.den_form().to_string();
        let wrap = |s: String| {
            if s.contains('+') || s.contains('*') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(num), wrap(den))
    }
}

impl fmt::Display for Plft {
    /// Matrix format `[a b; c d]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Plft {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid matrix `{s}`"));
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (top, bottom) = inner.split_once(';').ok_or_else(bad)?;
        let mut entries = Vec::with_capacity(4);
        for row in [top, bottom] {
            let mut count = 0;
            for tok in row.split_whitespace() {
                if !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                entries.push(BigUint::from_str(tok).map_err(|_| bad())?);
                count += 1;
            }
            if count != 2 {
                return Err(bad());
            }
        }
        let d = entries.pop().unwrap();
        let c = entries.pop().unwrap();
        let b = entries.pop().unwrap();
        let a = entries.pop().unwrap();
        Plft::new(a, b, c, d)
    }
}
