use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// A point outside `1..=degree`.
    PointOutOfRange {
        point: u64,
        degree: usize,
    },
    RepeatedPoint(u32),
    /// Image data does not describe a bijection.
    NotABijection,
    Malformed(&'static str),
    ZeroDegree,
    CapExceeded {
        order: u128,
        cap: u128,
    },
    NotPrimePower(u64),
    /// Prime power outside the supported range of a constructor.
    UnsupportedField(u64),
    InvalidPartition,
    NotASubgroup,
    /// The subgroup equals the ambient group where a proper one is required.
    NotProper,
    ElementOutsideGroup,
    /// A 2-transitivity query on fewer than two points.
    DegreeTooSmall(usize),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::PointOutOfRange { point, degree } => {
                write!(f, "point {point} outside 1..={degree}")
            }
            Error::RepeatedPoint(p) => write!(f, "repeated point {p}"),
            Error::NotABijection => f.write_str("images do not form a bijection"),
            Error::Malformed(what) => write!(f, "malformed input: {what}"),
            Error::ZeroDegree => f.write_str("degree must be positive"),
            Error::CapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds enumeration cap {cap}")
            }
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::UnsupportedField(q) => write!(f, "field size {q} not supported here"),
            Error::InvalidPartition => f.write_str("blocks do not partition the points"),
            Error::NotASubgroup => f.write_str("not a subgroup of the ambient group"),
            Error::NotProper => f.write_str("subgroup equals the whole group"),
            Error::ElementOutsideGroup => f.write_str("element does not lie in the group"),
            Error::DegreeTooSmall(n) => write!(f, "degree {n} is too small for this query"),
        }
    }
}

impl core::error::Error for Error {}
