//! The `(u, v)` generation rule: children `w/(uw+1)` and `vw+1` on positive
//! rationals, with orphan interval `[1/u, v]`. The rule `(1, 1)` is the
//! Calkin-Wilf tree.

use num_bigint::BigInt;

use crate::error::Error;
use crate::exactnum::Rational;
use crate::plft::{ChildKind, Plft};
use crate::treenav::{Step, Word};

/// A pair `u, v >= 1` selecting the generators `[1 0; u 1]` and `[1 v; 0 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenRule {
    u: u64,
    v: u64,
}

impl GenRule {
    pub fn new(u: u64, v: u64) -> Result<Self, Error> {
        if u == 0 || v == 0 {
            return Err(Error::InvalidRule);
        }
        Ok(GenRule { u, v })
    }

    /// The classical rule `(1, 1)`.
    pub fn calkin_wilf() -> Self {
        GenRule { u: 1, v: 1 }
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }
}

fn positive_parts(x: &Rational) -> Result<(BigInt, BigInt), Error> {
    if !x.is_positive() {
        return Err(Error::NonPositive);
    }
    Ok((x.num().clone(), x.den().clone()))
}

/// Children of `x = a/b`: left `a/(u*a + b)`, right `(a + v*b)/b`. Both are
/// already reduced when `a/b` is.
pub fn gen_children(rule: GenRule, x: &Rational) -> Result<(Rational, Rational), Error> {
    let (a, b) = positive_parts(x)?;
    let left = Rational::new(a.clone(), BigInt::from(rule.u) * &a + &b)?;
    let right = Rational::new(&a + BigInt::from(rule.v) * &b, b)?;
    Ok((left, right))
}

/// Left child iff `b > u*a`, right child iff `a > v*b`, orphan exactly on
/// the closed interval `1/u <= x <= v` (endpoints included).
pub fn gen_classify(rule: GenRule, x: &Rational) -> Result<ChildKind, Error> {
    let (a, b) = positive_parts(x)?;
    if b > BigInt::from(rule.u) * &a {
        Ok(ChildKind::Left)
    } else if a > BigInt::from(rule.v) * &b {
        Ok(ChildKind::Right)
    } else {
        Ok(ChildKind::Orphan)
    }
}

/// Undoes one generation step; orphans have no parent.
pub fn gen_parent(rule: GenRule, x: &Rational) -> Result<Rational, Error> {
    let (a, b) = positive_parts(x)?;
    match gen_classify(rule, x)? {
        ChildKind::Left => Rational::new(a.clone(), b - BigInt::from(rule.u) * &a),
        ChildKind::Right => Rational::new(a - BigInt::from(rule.v) * &b, b),
        ChildKind::Orphan => Err(Error::NoParent),
    }
}

/// The matrices realizing the rule: `([1 0; u 1], [1 v; 0 1])`.
pub fn gen_matrices(rule: GenRule) -> (Plft, Plft) {
    let left = Plft::from_u64s(1, 0, rule.u, 1).expect("determinant 1");
    let right = Plft::from_u64s(1, rule.v, 0, 1).expect("determinant 1");
    (left, right)
}

/// Climbs to the orphan above `x` and records the root-to-vertex word.
/// Terminates because numerator plus denominator strictly decreases.
pub fn gen_locate(rule: GenRule, x: &Rational) -> Result<(Rational, Word), Error> {
    let mut cur = x.clone();
    let mut rev_steps = Vec::new();
    let mut prev_measure = cur.num().magnitude() + cur.den().magnitude() + 1u32;
    loop {
        let measure = cur.num().magnitude() + cur.den().magnitude();
        assert!(measure < prev_measure, "parent measure must decrease");
        prev_measure = measure;
        match gen_classify(rule, &cur)? {
            ChildKind::Orphan => break,
            kind => {
                rev_steps.push(if kind == ChildKind::Left {
                    Step::L
                } else {
                    Step::R
                });
                cur = gen_parent(rule, &cur)?;
            }
        }
    }
    rev_steps.reverse();
    Ok((cur, Word::from(rev_steps)))
}

/// Replays a word from a root with [`gen_children`].
pub fn gen_vertex_at(rule: GenRule, root: &Rational, word: &Word) -> Result<Rational, Error> {
    let mut cur = root.clone();
    for step in word.steps() {
        let (left, right) = gen_children(rule, &cur)?;
        cur = match step {
            Step::L => left,
            Step::R => right,
        };
    }
    Ok(cur)
}
