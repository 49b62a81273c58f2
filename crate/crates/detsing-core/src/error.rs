use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter lies outside the range an operation accepts.
    OutOfRange(String),
    /// Operand shapes do not fit together.
    SizeMismatch(String),
    /// A matrix that has to be invertible or split is not.
    Singular(String),
    /// A quiver representation is not generated by its top vertex.
    NotGenerated,
    /// Parameters lie outside the regime where higher direct images vanish.
    OutsideRegime(String),
    /// A syzygy generator reached the caller-supplied degree bound.
    DegreeBound { level: usize, degree: i32 },
    /// Two routes that must agree gave different answers.
    Inconsistent(String),
    /// A malformed input value.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange(s) => write!(f, "out of range: {s}"),
            Error::SizeMismatch(s) => write!(f, "size mismatch: {s}"),
            Error::Singular(s) => write!(f, "singular: {s}"),
            Error::NotGenerated => write!(f, "representation is not generated by the top vertex"),
            Error::OutsideRegime(s) => write!(f, "outside the vanishing regime: {s}"),
            Error::DegreeBound { level, degree } => {
                write!(f, "syzygy generators at level {level} reach the degree bound {degree}")
            }
            Error::Inconsistent(s) => write!(f, "inconsistent: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! ensure {
    ($cond:expr, $variant:ident, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::$variant(alloc::format!($($arg)*)));
        }
    };
}
pub(crate) use ensure;
