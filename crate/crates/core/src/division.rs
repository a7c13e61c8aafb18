//! Division and Euclidean algorithms on positive linear forms, continued
//! fractions with orphan roots, and the depth formula.
//!
//! Dividing `az+b` by a coefficientwise-smaller form `cz+d` leaves a unique
//! quotient and a remainder that drops strictly in one coefficient.
//! Iterating the division walks any matrix down to an orphan and yields its
//! continued fraction; on the determinant-1 tree the quotient sum is exactly
//! the row index.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exactnum::{LinearForm, Rational};
use crate::plft::{ChildKind, Plft};

use std::fmt;
use std::str::FromStr;

/// Outcome of one division step `num = q * den + rem`.
///
/// The remainder satisfies `rem.a < den.a` or `rem.b < den.b`, and the cross
/// determinant of `(rem, den)` equals that of `(num, den)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: BigUint,
    pub remainder: LinearForm,
}

/// Division algorithm for comparable forms.
///
/// Requires `den` strictly below `num` coefficientwise. The quotient is
/// `min(a/c, b/d)` (dropping an undefined ratio when `c` or `d` is zero).
/// Proportional inputs would leave the zero form and are reported as
/// [`Error::ZeroRemainder`]; they cannot arise from a matrix with nonzero
/// determinant.
pub fn divide_forms(num: &LinearForm, den: &LinearForm) -> Result<DivisionResult, Error> {
    if !den.lt(num) {
        return Err(Error::NotComparable);
    }
    let q = if den.a().is_zero() {
        num.b() / den.b()
    } else if den.b().is_zero() {
        num.a() / den.a()
    } else {
        (num.a() / den.a()).min(num.b() / den.b())
    };
    let r = num.a() - &q * den.a();
    let s = num.b() - &q * den.b();
    if r.is_zero() && s.is_zero() {
        return Err(Error::ZeroRemainder);
    }
    Ok(DivisionResult {
        quotient: q,
        remainder: LinearForm::new(r, s).expect("remainder checked nonzero"),
    })
}

fn parts(f: &Plft) -> Result<(BigUint, Plft), Error> {
    match f.classify() {
        ChildKind::Orphan => Err(Error::UndefinedPart),
        ChildKind::Left => Ok((BigUint::zero(), f.clone())),
        ChildKind::Right => {
            let div = divide_forms(&f.num_form(), &f.den_form())
                .expect("right child has den < num and det != 0");
            let frac = Plft::from_forms(&div.remainder, &f.den_form())
                .expect("division preserves the cross determinant");
            Ok((div.quotient, frac))
        }
    }
}

/// The quotient `q` of the division of the numerator form by the denominator
/// form; 0 for left children, undefined for orphans.
pub fn integer_part(f: &Plft) -> Result<BigUint, Error> {
    parts(f).map(|(q, _)| q)
}

/// What is left after removing the integer part: `(rz+s)/(cz+d)`, with the
/// same determinant as `f`.
pub fn fractional_part(f: &Plft) -> Result<Plft, Error> {
    parts(f).map(|(_, frac)| frac)
}

/// A continued fraction `[q0, q1, ..., q_{k-1}; root]`.
///
/// `q0 >= 0` (and `q0 = 0` exactly for left children), all later quotients
/// are positive, and the root is either an orphan or an integer shift
/// `[1 q; 0 1]` of the identity — the shifted shape is how a chain that
/// bottoms out at `1/z` is presented, with the final quotient absorbed:
/// `q + 1/(1/z) = q + z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub quotients: Vec<BigUint>,
    pub root: Plft,
}

/// Euclidean algorithm on the two forms of `f`.
///
/// Runs [`divide_forms`] down the remainder chain until the current pair is
/// incomparable (a chain starting with `num < den` first emits `q0 = 0` and
/// swaps). Terminates because the coefficient sum of the remainders strictly
/// decreases. Orphan input yields no quotients and the matrix itself as root.
pub fn euclid_cf(f: &Plft) -> ContinuedFraction {
    let mut cur = f.num_form();
    let mut next = f.den_form();
    let mut quotients = Vec::new();
    if cur.lt(&next) {
        quotients.push(BigUint::zero());
        std::mem::swap(&mut cur, &mut next);
    }
    while next.lt(&cur) {
        let div = divide_forms(&cur, &next).expect("det != 0 keeps remainders nonzero");
        quotients.push(div.quotient);
        cur = next;
        next = div.remainder;
    }
    let mut root = Plft::from_forms(&cur, &next).expect("chain preserves |det|");
    // A chain ending at the reciprocal-of-identity orphan reads
    // ... + 1/(q + 1/(1/z)) = ... + 1/(q + z): fold the last quotient into
    // the root.
    if root == Plft::identity().reciprocal() && !quotients.is_empty() {
        let q = quotients.pop().expect("nonempty");
        root = Plft::new(BigUint::one(), q, BigUint::zero(), BigUint::one())
            .expect("shifted identity has determinant 1");
    }
    ContinuedFraction { quotients, root }
}

/// When the root is the shift `[1 q; 0 1]`, the `q` still counts toward the
/// depth; orphan roots contribute nothing.
fn root_shift(root: &Plft) -> Option<BigUint> {
    if root.a().is_one() && root.c().is_zero() && root.d().is_one() {
        Some(root.b().clone())
    } else {
        None
    }
}

/// Rebuilds the matrix from its continued fraction by folding
/// `v -> q + 1/v` from the root outward.
///
/// Accepts exactly the roots [`euclid_cf`] can produce: orphans and shifted
/// identities. Quotients after the first must be positive.
pub fn reconstruct(cf: &ContinuedFraction) -> Result<Plft, Error> {
    if !(cf.root.is_orphan() || root_shift(&cf.root).is_some()) {
        return Err(Error::InvalidRoot);
    }
    if cf.quotients.iter().skip(1).any(|q| q.is_zero()) {
        return Err(Error::InvalidQuotient);
    }
    let mut v = cf.root.clone();
    for q in cf.quotients.iter().rev() {
        // q + 1/v, as matrices: swap the rows of v, then add q times the
        // new denominator row to the numerator row.
        let r = v.reciprocal();
        v = Plft::new(
            r.a() + q * r.c(),
            r.b() + q * r.d(),
            r.c().clone(),
            r.d().clone(),
        )
        .expect("reciprocal and shear preserve |det|");
    }
    Ok(v)
}

/// Row index of a determinant-1 matrix in the tree rooted at the identity:
/// the sum of all continued fraction quotients, counting the shift of a
/// shifted-identity root.
pub fn depth_det1(f: &Plft) -> Result<BigUint, Error> {
    if f.det() != BigInt::one() {
        return Err(Error::NotDeterminantOne);
    }
    let cf = euclid_cf(f);
    let mut total: BigUint = cf.quotients.iter().sum();
    if let Some(shift) = root_shift(&cf.root) {
        total += shift;
    }
    Ok(total)
}

/// Plain continued fraction of a positive rational, by the raw Euclidean
/// algorithm on numerator and denominator.
///
/// For non-integers this ends with a final quotient `>= 2`; an integer `n`
/// is just `[n]`.
pub fn rational_cf(x: &Rational) -> Result<Vec<BigUint>, Error> {
    if !x.is_positive() {
        return Err(Error::NonPositive);
    }
    let mut n = x.num().magnitude().clone();
    let mut d = x.den().magnitude().clone();
    let mut out = Vec::new();
    loop {
        let (q, r) = n.div_rem(&d);
        out.push(q);
        if r.is_zero() {
            return Ok(out);
        }
        n = d;
        d = r;
    }
}

/// Row index of a positive rational in the Calkin-Wilf tree: the quotient
/// sum of its continued fraction, minus one.
pub fn rational_depth(x: &Rational) -> Result<BigUint, Error> {
    let cf = rational_cf(x)?;
    let sum: BigUint = cf.iter().sum();
    Ok(sum - BigUint::one())
}

/// Text form of a rational continued fraction: `[a0, a1, ..., ak]`.
pub fn rational_cf_string(x: &Rational) -> Result<String, Error> {
    let quotients = rational_cf(x)?;
    let rendered: Vec<String> = quotients.iter().map(BigUint::to_string).collect();
    Ok(format!("[{}]", rendered.join(", ")))
}

impl fmt::Display for ContinuedFraction {
    /// `[q0, q1, ..., qk; [a b; c d]]`; with no quotients, `[; [a b; c d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "; {}]", self.root)
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid continued fraction `{s}`"));
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let root_start = inner.find('[').ok_or_else(bad)?;
        let head = inner[..root_start].trim_end();
        let head = head.strip_suffix(';').ok_or_else(bad)?;
        let root: Plft = inner[root_start..].parse()?;
        let mut quotients = Vec::new();
        if !head.trim().is_empty() {
            for tok in head.split(',') {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                quotients.push(BigUint::from_str(tok).map_err(|_| bad())?);
            }
        }
        Ok(ContinuedFraction { quotients, root })
    }
}
