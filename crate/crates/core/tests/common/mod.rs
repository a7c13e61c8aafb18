//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library code paths they are used
//! to check: rational tree rows are grown by raw numerator/denominator
//! arithmetic on integer pairs, and depths are counted by explicit parent
//! walks.

#![allow(dead_code)]

use cwforest::exactnum::{LinearForm, Rational};
use cwforest::plft::Plft;
use cwforest::treenav::{Step, Word};
use rand::Rng;

pub fn m(a: u64, b: u64, c: u64, d: u64) -> Plft {
    Plft::from_u64s(a, b, c, d).unwrap()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::from_i64s(n, d).unwrap()
}

pub fn form(a: u64, b: u64) -> LinearForm {
    LinearForm::new(a, b).unwrap()
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

/// Rows 0..=3 of the matrix tree rooted at `z`, copied from the four-row
/// display.
pub fn display_rows_matrix() -> Vec<Vec<Plft>> {
    vec![
        vec![m(1, 0, 0, 1)],
        vec![m(1, 0, 1, 1), m(1, 1, 0, 1)],
        vec![m(1, 0, 2, 1), m(2, 1, 1, 1), m(1, 1, 1, 2), m(1, 2, 0, 1)],
        vec![
            m(1, 0, 3, 1),
            m(3, 1, 2, 1),
            m(2, 1, 3, 2),
            m(3, 2, 1, 1),
            m(1, 1, 2, 3),
            m(2, 3, 1, 2),
            m(1, 2, 1, 3),
            m(1, 3, 0, 1),
        ],
    ]
}

/// Rows 0..=3 of the rational tree, copied from the four-row display.
pub fn display_rows_rational() -> Vec<Vec<Rational>> {
    let r = |n, d| rat(n, d);
    vec![
        vec![r(1, 1)],
        vec![r(1, 2), r(2, 1)],
        vec![r(1, 3), r(3, 2), r(2, 3), r(3, 1)],
        vec![
            r(1, 4),
            r(4, 3),
            r(3, 5),
            r(5, 2),
            r(2, 5),
            r(5, 3),
            r(3, 4),
            r(4, 1),
        ],
    ]
}

/// Oracle: row `n` of the rational tree grown by the raw child rule
/// `(a, b) -> (a, a+b), (a+b, b)` on integer pairs.
pub fn oracle_rational_row(n: u32) -> Vec<(u64, u64)> {
    let mut row = vec![(1u64, 1u64)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() * 2);
        for &(a, b) in &row {
            next.push((a, a + b));
            next.push((a + b, b));
        }
        row = next;
    }
    row
}

/// Oracle: depth of the reduced fraction `a/b` by walking parents
/// (`a -= b` or `b -= a`) until reaching `1/1`.
pub fn oracle_rational_depth(mut a: u64, mut b: u64) -> u64 {
    let mut steps = 0;
    while (a, b) != (1, 1) {
        if a > b {
            a -= b;
        } else {
            b -= a;
        }
        steps += 1;
    }
    steps
}

/// Oracle: the root-to-vertex word of `a/b`, collected on the way up.
pub fn oracle_rational_word(mut a: u64, mut b: u64) -> Vec<Step> {
    let mut rev = Vec::new();
    while (a, b) != (1, 1) {
        if a > b {
            rev.push(Step::R);
            a -= b;
        } else {
            rev.push(Step::L);
            b -= a;
        }
    }
    rev.reverse();
    rev
}

/// Oracle: replay a word with the raw child rule.
pub fn oracle_rational_replay(steps: &[Step]) -> (u64, u64) {
    let (mut a, mut b) = (1u64, 1u64);
    for s in steps {
        match s {
            Step::L => b += a,
            Step::R => a += b,
        }
    }
    (a, b)
}

/// All reduced positive fractions of height at most `h`, as integer pairs.
pub fn reduced_pairs_up_to(h: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for a in 1..=h {
        for b in 1..=h {
            if gcd(a, b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let steps = (0..len)
        .map(|_| if rng.gen_bool(0.5) { Step::L } else { Step::R })
        .collect::<Vec<_>>();
    Word::from(steps)
}

pub fn random_positive_rational(rng: &mut impl Rng, max_part: u64) -> Rational {
    let a = rng.gen_range(1..=max_part);
    let b = rng.gen_range(1..=max_part);
    Rational::from_i64s(a as i64, b as i64).unwrap()
}

pub fn random_plft(rng: &mut impl Rng, max_entry: u64) -> Plft {
    loop {
        let quad: [u64; 4] = [
            rng.gen_range(0..=max_entry),
            rng.gen_range(0..=max_entry),
            rng.gen_range(0..=max_entry),
            rng.gen_range(0..=max_entry),
        ];
        if let Ok(p) = Plft::from_u64s(quad[0], quad[1], quad[2], quad[3]) {
            return p;
        }
    }
}
