use std::fmt;

/// Errors shared by every module of the crate.
///
/// The variant name is stable and appears first in the `Display` output, so
/// callers (and the CLI) can report failures by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `height` is undefined for the rational 0.
    HeightOfZero,
    /// A rational was constructed with denominator 0.
    ZeroDenominator,
    /// A linear form must have at least one nonzero coefficient.
    ZeroForm,
    /// A matrix with `ad - bc = 0` is not a linear fractional transformation.
    ZeroDeterminant,
    /// Evaluation at a point where the denominator form vanishes.
    PoleAtInput,
    /// Orphans have no parent.
    NoParent,
    /// Form division requires the divisor to precede the dividend in the
    /// coefficientwise order.
    NotComparable,
    /// Form division produced the zero form; the input forms were
    /// proportional, which cannot arise from a nonzero determinant.
    ZeroRemainder,
    /// Integer and fractional parts are undefined for orphans.
    UndefinedPart,
    /// The operation is only defined on determinant-1 matrices.
    NotDeterminantOne,
    /// The operation requires a positive rational.
    NonPositive,
    /// A continued fraction root must be an orphan or an integer shift of
    /// the identity.
    InvalidRoot,
    /// Continued fraction quotients after the first must be at least 1.
    InvalidQuotient,
    /// A tree address needs `1 <= index <= 2^row`.
    IndexOutOfRange,
    /// The last vertex of a row has no successor.
    NoSuccessor,
    /// Generation rules need `u >= 1` and `v >= 1`.
    InvalidRule,
    /// Refusing to materialize a row beyond the configured cap.
    DepthCapExceeded,
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::HeightOfZero => write!(f, "HeightOfZero: height is undefined for 0"),
            Error::ZeroDenominator => write!(f, "ZeroDenominator: rational denominator is 0"),
            Error::ZeroForm => write!(f, "ZeroForm: linear form must satisfy a + b > 0"),
            Error::ZeroDeterminant => write!(f, "ZeroDeterminant: ad - bc must be nonzero"),
            Error::PoleAtInput => write!(f, "PoleAtInput: denominator vanishes at this point"),
            Error::NoParent => write!(f, "NoParent: an orphan has no parent"),
            Error::NotComparable => {
                write!(f, "NotComparable: divisor does not precede the dividend")
            }
            Error::ZeroRemainder => write!(f, "ZeroRemainder: forms are proportional"),
            Error::UndefinedPart => {
                write!(f, "UndefinedPart: integer part of an orphan is undefined")
            }
            Error::NotDeterminantOne => write!(f, "NotDeterminantOne: determinant must be 1"),
            Error::NonPositive => write!(f, "NonPositive: a positive rational is required"),
            Error::InvalidRoot => {
                write!(
                    f,
                    "InvalidRoot: continued fraction root has the wrong shape"
                )
            }
            Error::InvalidQuotient => {
                write!(
                    f,
                    "InvalidQuotient: quotients after the first must be positive"
                )
            }
            Error::IndexOutOfRange => write!(f, "IndexOutOfRange: need 1 <= index <= 2^row"),
            Error::NoSuccessor => write!(f, "NoSuccessor: last vertex of its row"),
            Error::InvalidRule => write!(f, "InvalidRule: generation rule needs u, v >= 1"),
            Error::DepthCapExceeded => write!(f, "DepthCapExceeded: row materialization cap hit"),
            Error::Parse(msg) => write!(f, "Parse: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
