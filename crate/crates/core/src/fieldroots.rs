//! Which rationals can root an infinite binary tree under `w -> w/(w+1),
//! w+1`: exactly the ones that are not negative. A negative root always
//! reaches `-1`, whose left child is undefined, and the witness path is
//! forced by the sign at every step.

use crate::exactnum::Rational;
use crate::treenav::{Step, Word};

/// Whether a rational can root an infinite binary tree; when it cannot, the
/// witness path leads from it to `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVerdict {
    pub viable: bool,
    pub witness: Option<Word>,
}

/// Children under the generation rule, on all rationals: the right child
/// `x + 1` always exists, the left child `x/(x+1)` is undefined at `-1`.
pub fn rational_children(x: &Rational) -> (Option<Rational>, Rational) {
    let right = x + &Rational::one();
    let left = if right.is_zero() {
        None
    } else {
        Some(x / &right)
    };
    (left, right)
}

/// Nonnegative rationals are viable roots. For a negative rational the
/// descent is deterministic: step right while below `-1` (adding one), step
/// left in `(-1, 0)` (the height drops either way), and stop at `-1`.
pub fn root_viability(x: &Rational) -> RootVerdict {
    if !x.is_negative() {
        return RootVerdict {
            viable: true,
            witness: None,
        };
    }
    let minus_one = -Rational::one();
    let mut cur = x.clone();
    let mut steps = Vec::new();
    while cur != minus_one {
        let height_before = cur.height().expect("negative rationals are nonzero");
        if cur < minus_one {
            steps.push(Step::R);
            cur = &cur + &Rational::one();
        } else {
            steps.push(Step::L);
            let denominator = &cur + &Rational::one();
            cur = &cur / &denominator;
        }
        let height_after = cur.height().expect("descent stays negative");
        assert!(height_after < height_before, "descent height must drop");
    }
    RootVerdict {
        viable: false,
        witness: Some(Word::from(steps)),
    }
}
