//! The forest decomposition: orphan matrices of a given determinant, the
//! class number `h(D)`, the reciprocal bijection between `D` and `-D`, and
//! a brute-force verifier that the trees really partition each
//! determinant class.
//!
//! For `D > 0` an orphan `[a b; c d]` has `a > c`, `b < d`, and therefore
//! `b + c <= D - 1`; only finitely many matrices qualify. Every matrix of
//! determinant `D` descends from exactly one of them.

use std::collections::{HashMap, HashSet};

use num_integer::Roots;

use crate::error::Error;
use crate::plft::Plft;
use crate::treenav::{locate, vertex_at};

/// All orphan matrices of one determinant, sorted by `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrphanSet {
    pub det: i64,
    pub orphans: Vec<Plft>,
}

/// Enumerates the orphans of determinant `d`.
///
/// For `d > 0`, scans the pairs `(b, c)` with `b + c <= d - 1` and, for
/// each, the factorizations `a * dd = d + b*c` with `a > c` and `dd > b`.
/// Negative determinants go through the reciprocal bijection with `-d`.
pub fn enumerate_orphans(d: i64) -> Result<OrphanSet, Error> {
    if d == 0 {
        return Err(Error::ZeroDeterminant);
    }
    if d < 0 {
        let positive = enumerate_orphans(-d)?;
        let mut orphans: Vec<Plft> = positive.orphans.iter().map(Plft::reciprocal).collect();
        orphans.sort();
        return Ok(OrphanSet { det: d, orphans });
    }
    let d_pos = d as u64;
    let mut orphans = Vec::new();
    for b in 0..d_pos {
        for c in 0..(d_pos - b) {
            let product = d_pos + b * c;
            for small in 1..=product.sqrt() {
                if !product.is_multiple_of(small) {
                    continue;
                }
                let large = product / small;
                for (a, dd) in [(small, large), (large, small)] {
                    if a == dd && small != large {
                        continue;
                    }
                    if a > c && dd > b {
                        orphans.push(
                            Plft::from_u64s(a, b, c, dd).expect("a*dd > b*c by construction"),
                        );
                    }
                    if small == large {
                        break;
                    }
                }
            }
        }
    }
    orphans.sort();
    Ok(OrphanSet { det: d, orphans })
}

/// `h(d)`: the number of orphans of determinant `d`, which is the number of
/// trees in the determinant-`d` forest. Satisfies `h(d) = h(-d)`.
pub fn class_number(d: i64) -> Result<u64, Error> {
    Ok(enumerate_orphans(d)?.orphans.len() as u64)
}

/// Vertex count of one tree of the forest, up to the verifier's height cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeTally {
    pub root: Plft,
    pub count: u64,
}

/// Outcome of [`verify_partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub det: i64,
    pub height: u32,
    pub trees: Vec<TreeTally>,
    pub pass: bool,
}

/// Checks the partition property at desk scale: every matrix of determinant
/// `d` and height at most `height` must locate to an enumerated orphan with
/// exact replay, and expanding each orphan's tree must reproduce the same
/// set of matrices exactly once.
pub fn verify_partition(d: i64, height: u32) -> Result<PartitionReport, Error> {
    let orphan_set = enumerate_orphans(d)?;
    let roots: HashSet<Plft> = orphan_set.orphans.iter().cloned().collect();
    let mut pass = true;

    // Route one: scan every matrix of the determinant class and climb to
    // its root.
    let mut scanned: HashSet<Plft> = HashSet::new();
    let mut located: HashMap<Plft, u64> = HashMap::new();
    let bound = height as u64;
    for a in 0..=bound {
        for b in 0..=(bound - a) {
            for c in 0..=bound {
                for dd in 0..=(bound - c) {
                    let det = (a as i128) * (dd as i128) - (b as i128) * (c as i128);
                    if det != d as i128 {
                        continue;
                    }
                    let f = Plft::from_u64s(a, b, c, dd).expect("determinant checked nonzero");
                    let (root, word) = locate(&f);
                    if !roots.contains(&root) || vertex_at(&root, &word) != f {
                        pass = false;
                    }
                    *located.entry(root).or_insert(0) += 1;
                    scanned.insert(f);
                }
            }
        }
    }

    // Route two: grow each tree from its root and make sure the union hits
    // the scanned set exactly once per matrix.
    let mut grown: HashSet<Plft> = HashSet::new();
    let mut trees = Vec::with_capacity(orphan_set.orphans.len());
    let height_cap = num_bigint::BigUint::from(height);
    for root in &orphan_set.orphans {
        let mut count = 0u64;
        let mut frontier = vec![root.clone()];
        while let Some(v) = frontier.pop() {
            if v.height() > height_cap {
                continue;
            }
            count += 1;
            if !grown.insert(v.clone()) {
                pass = false; // two trees met: not a partition
            }
            frontier.push(v.left_child());
            frontier.push(v.right_child());
        }
        if located.get(root).copied().unwrap_or(0) != count {
            pass = false;
        }
        trees.push(TreeTally {
            root: root.clone(),
            count,
        });
    }
    if grown != scanned {
        pass = false;
    }

    Ok(PartitionReport {
        det: d,
        height,
        trees,
        pass,
    })
}
