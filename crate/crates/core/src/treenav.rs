//! Navigation of the matrix trees: root-to-vertex words, row/index
//! addresses, row enumeration via the successor formula, locate-to-root,
//! and the factorization of determinant-1 matrices into generator words.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, One, Zero};

use crate::division::integer_part;
use crate::error::Error;
use crate::exactnum::Rational;
use crate::plft::{ChildKind, Plft};

/// Largest row that may be materialized in full (`2^n` vertices).
pub const ROW_MATERIALIZE_CAP: u32 = 26;

/// One step down a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    L,
    R,
}

/// A root-to-vertex path; its length is the depth of the vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    pub fn empty() -> Self {
        Word { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl From<Vec<Step>> for Word {
    fn from(steps: Vec<Step>) -> Self {
        Word { steps }
    }
}

impl fmt::Display for Word {
    /// Letters `L`/`R`, first step from the root first; the empty word
    /// prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "e");
        }
        for s in &self.steps {
            match s {
                Step::L => write!(f, "L")?,
                Step::R => write!(f, "R")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "e" {
            return Ok(Word::empty());
        }
        let mut steps = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'L' => steps.push(Step::L),
                'R' => steps.push(Step::R),
                _ => return Err(Error::Parse(format!("invalid word `{s}`"))),
            }
        }
        if steps.is_empty() {
            return Err(Error::Parse("empty word must be written `e`".into()));
        }
        Ok(Word { steps })
    }
}

/// Position `(row, index)` of a vertex, `1 <= index <= 2^row`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeAddress {
    row: u32,
    index: BigUint,
}

impl TreeAddress {
    pub fn new(row: u32, index: BigUint) -> Result<Self, Error> {
        if index.is_zero() || index > (BigUint::one() << row) {
            return Err(Error::IndexOutOfRange);
        }
        Ok(TreeAddress { row, index })
    }

    pub fn from_u64s(row: u32, index: u64) -> Result<Self, Error> {
        TreeAddress::new(row, BigUint::from(index))
    }

    pub fn row(&self) -> u32 {
        self.row
    }

    pub fn index(&self) -> &BigUint {
        &self.index
    }
}

impl fmt::Display for TreeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.row, self.index)
    }
}

impl FromStr for TreeAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid address `{s}`"));
        let (row, index) = s.split_once(':').ok_or_else(bad)?;
        let row: u32 = row.parse().map_err(|_| bad())?;
        if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = BigUint::from_str(index).map_err(|_| bad())?;
        TreeAddress::new(row, index)
    }
}

/// Word of the vertex at an address: the bits of `index - 1`, most
/// significant first over `row` bits, with 0 as `L` and 1 as `R`.
pub fn index_to_word(addr: &TreeAddress) -> Word {
    let offset = addr.index() - BigUint::one();
    let mut steps = Vec::with_capacity(addr.row() as usize);
    for i in (0..addr.row() as u64).rev() {
        steps.push(if offset.bit(i) { Step::R } else { Step::L });
    }
    Word { steps }
}

/// Inverse of [`index_to_word`].
pub fn word_to_index(word: &Word) -> TreeAddress {
    let mut offset = BigUint::zero();
    for step in word.steps() {
        offset <<= 1;
        if *step == Step::R {
            offset += 1u32;
        }
    }
    TreeAddress {
        row: word.len() as u32,
        index: offset + BigUint::one(),
    }
}

/// Mirror address `(row, 2^row - index + 1)`; the involution `phi` maps the
/// vertex at an address of the identity-rooted tree to its mirror.
pub fn symmetry_partner(addr: &TreeAddress) -> TreeAddress {
    TreeAddress {
        row: addr.row(),
        index: (BigUint::one() << addr.row()) - addr.index() + BigUint::one(),
    }
}

/// Walks `word` down from `root`, applying left/right child steps.
pub fn vertex_at(root: &Plft, word: &Word) -> Plft {
    let mut cur = root.clone();
    for step in word.steps() {
        cur = match step {
            Step::L => cur.left_child(),
            Step::R => cur.right_child(),
        };
    }
    cur
}

/// Climbs to the orphan above `f`, returning the orphan and the
/// root-to-vertex word. Replaying the word from the root restores `f`.
pub fn locate(f: &Plft) -> (Plft, Word) {
    let mut cur = f.clone();
    let mut rev_steps = Vec::new();
    let mut prev_height = cur.height() + BigUint::one();
    loop {
        let h = cur.height();
        assert!(h < prev_height, "parent height must strictly decrease");
        prev_height = h;
        match cur.classify() {
            ChildKind::Orphan => break,
            ChildKind::Left => {
                rev_steps.push(Step::L);
                cur = cur.parent().expect("left child has a parent");
            }
            ChildKind::Right => {
                rev_steps.push(Step::R);
                cur = cur.parent().expect("right child has a parent");
            }
        }
    }
    rev_steps.reverse();
    (cur, Word { steps: rev_steps })
}

/// Next vertex to the right on the same row: `1/(2q + 1 - f)` with `q` the
/// integer part of `f`, realized on matrices as
/// `[c d; (2q+1)c - a  (2q+1)d - b]`.
///
/// Fails with [`Error::NoSuccessor`] on orphans (a row-0 vertex is alone on
/// its row) and when the subtraction leaves the nonnegative matrices, which
/// is how the end of a row of the identity-rooted tree announces itself.
/// [`RowIter`] counts vertices instead of relying on that signal, because
/// in trees with other roots the formula can wrap past the row end without
/// going negative.
pub fn successor(f: &Plft) -> Result<Plft, Error> {
    if f.is_orphan() {
        return Err(Error::NoSuccessor);
    }
    let q = integer_part(f).expect("non-orphans have an integer part");
    let factor = BigUint::from(2u32) * q + BigUint::one();
    let new_c = (&factor * f.c())
        .checked_sub(f.a())
        .ok_or(Error::NoSuccessor)?;
    let new_d = (&factor * f.d())
        .checked_sub(f.b())
        .ok_or(Error::NoSuccessor)?;
    Ok(Plft::new(f.c().clone(), f.d().clone(), new_c, new_d)
        .expect("successor keeps the determinant"))
}

/// Streaming enumeration of row `n`: starts at the `n`-fold left descendant
/// and applies [`successor`] `2^n - 1` times. State is one matrix.
pub struct RowIter {
    current: Option<Plft>,
    remaining: BigUint,
}

impl Iterator for RowIter {
    type Item = Plft;

    fn next(&mut self) -> Option<Plft> {
        if self.remaining.is_zero() {
            return None;
        }
        self.remaining -= 1u32;
        let out = self.current.take()?;
        if !self.remaining.is_zero() {
            self.current =
                Some(successor(&out).expect("successor is defined before the end of the row"));
        }
        Some(out)
    }
}

/// Row `n` of the tree rooted at `root`, in left-to-right order.
pub fn row_iter(root: &Plft, n: u32) -> RowIter {
    let mut first = root.clone();
    for _ in 0..n {
        first = first.left_child();
    }
    RowIter {
        current: Some(first),
        remaining: BigUint::one() << n,
    }
}

/// Row `n` materialized by repeated child expansion, the oracle route the
/// successor formula is checked against. Capped at
/// [`ROW_MATERIALIZE_CAP`] because the result has `2^n` entries.
pub fn bfs_row(root: &Plft, n: u32) -> Result<Vec<Plft>, Error> {
    if n > ROW_MATERIALIZE_CAP {
        return Err(Error::DepthCapExceeded);
    }
    let mut row = vec![root.clone()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() * 2);
        for v in &row {
            next.push(v.left_child());
            next.push(v.right_child());
        }
        row = next;
    }
    Ok(row)
}

/// Does the denominator of each vertex on row `n` equal the numerator of
/// the next one? Proved for the identity-rooted tree; callable on any root
/// for exploration.
pub fn check_den_num(root: &Plft, n: u32) -> bool {
    let mut iter = row_iter(root, n);
    let Some(mut prev) = iter.next() else {
        return true;
    };
    for cur in iter {
        if prev.c() != cur.a() || prev.d() != cur.b() {
            return false;
        }
        prev = cur;
    }
    true
}

/// Does the successor formula reproduce row `n` exactly as child expansion
/// does? Subject to the materialization cap of the expansion route.
pub fn check_successor_bfs(root: &Plft, n: u32) -> Result<bool, Error> {
    let expanded = bfs_row(root, n)?;
    let mut streamed = row_iter(root, n);
    for v in &expanded {
        if streamed.next().as_ref() != Some(v) {
            return Ok(false);
        }
    }
    Ok(streamed.next().is_none())
}

/// Does `phi` reverse row `n` of the identity-rooted tree?
pub fn check_symmetry(n: u32) -> Result<bool, Error> {
    if n > ROW_MATERIALIZE_CAP {
        return Err(Error::DepthCapExceeded);
    }
    let row: Vec<Plft> = row_iter(&Plft::identity(), n).collect();
    Ok(row
        .iter()
        .zip(row.iter().rev())
        .all(|(f, mirror)| &f.phi() == mirror))
}

/// Does every vertex of row `n` of the identity-rooted tree report depth
/// `n`, both by quotient sum and by word length?
pub fn check_depth_rows(n: u32) -> Result<bool, Error> {
    let expected = BigUint::from(n);
    for v in bfs_row(&Plft::identity(), n)? {
        let by_quotients = crate::division::depth_det1(&v).expect("tree vertices have det 1");
        if by_quotients != expected {
            return Ok(false);
        }
        let (root, word) = locate(&v);
        if root != Plft::identity() || word.len() != n as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique generator word with `vertex_at(identity, word) = m`, defined
/// on determinant-1 matrices: the generators freely generate them all.
pub fn factor_sl2(m: &Plft) -> Result<Word, Error> {
    if m.det() != BigInt::one() {
        return Err(Error::NotDeterminantOne);
    }
    let (root, word) = locate(m);
    assert_eq!(
        root,
        Plft::identity(),
        "determinant-1 matrices locate to the identity"
    );
    Ok(word)
}

/// Successor on the rational Calkin-Wilf row: `1/(2*floor(x) + 1 - x)`.
///
/// Total for positive rationals; at the right end of a row it wraps to the
/// head of the next row, so row enumeration counts instead of probing.
pub fn rational_successor(x: &Rational) -> Result<Rational, Error> {
    if !x.is_positive() {
        return Err(Error::NonPositive);
    }
    let twice_floor_plus_one = Rational::from_integer(BigInt::from(2) * x.floor_int() + 1);
    let denominator = &twice_floor_plus_one - x;
    Ok(denominator
        .recip()
        .expect("2*floor(x)+1-x is nonzero for positive x"))
}

/// Streaming row `n` of the rational Calkin-Wilf tree, starting from
/// `1/(n+1)`.
pub struct RationalRowIter {
    current: Option<Rational>,
    remaining: BigUint,
}

impl Iterator for RationalRowIter {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        if self.remaining.is_zero() {
            return None;
        }
        self.remaining -= 1u32;
        let out = self.current.take()?;
        if !self.remaining.is_zero() {
            self.current = Some(rational_successor(&out).expect("row elements are positive"));
        }
        Some(out)
    }
}

pub fn rational_row_iter(n: u32) -> RationalRowIter {
    let first = Rational::new(BigInt::one(), BigInt::from(n) + 1).expect("n + 1 >= 1");
    RationalRowIter {
        current: Some(first),
        remaining: BigUint::one() << n,
    }
}
