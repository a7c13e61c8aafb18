//! Calkin-Wilf trees of positive rationals and of 2x2 nonnegative integer
//! matrices, in exact arithmetic.
//!
//! The crate revolves around positive linear fractional transformations
//! `(az+b)/(cz+d)` with nonnegative integer coefficients and nonzero
//! determinant, stored as formal matrices ([`plft::Plft`]). Applying the
//! generation rule `w -> w/(w+1), w+1` to any such matrix grows an infinite
//! binary tree, and the set of all matrices splits into a forest of these
//! trees indexed by determinant ([`forest`]). On the determinant-1 tree the
//! classical Calkin-Wilf facts (denominator-numerator, symmetry, successor,
//! depth via continued fractions) hold verbatim and are implemented in
//! [`division`] and [`treenav`]. Specializing `z = 1` recovers the rational
//! Calkin-Wilf tree.
//!
//! All arithmetic is arbitrary precision; there are no floating-point
//! operations anywhere.
//!
//! ```
//! use cwforest::division::euclid_cf;
//! use cwforest::plft::Plft;
//! use cwforest::treenav::locate;
//!
//! let f: Plft = "[17 10; 5 3]".parse()?;
//! let (root, word) = locate(&f);
//! assert_eq!(root, Plft::identity());
//! assert_eq!(word.to_string(), "LRLLRRR");
//! assert_eq!(euclid_cf(&f).to_string(), "[3, 2, 1, 1; [1 0; 0 1]]");
//! # Ok::<(), cwforest::Error>(())
//! ```

pub mod division;
pub mod error;
pub mod exactnum;
pub mod fieldroots;
pub mod forest;
pub mod generalized;
pub mod plft;
pub mod treenav;

pub use error::Error;
pub use exactnum::{LinearForm, Rational};
pub use plft::{ChildKind, Plft};
