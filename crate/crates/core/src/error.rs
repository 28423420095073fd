use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Partition text could not be parsed.
    Parse(String),
    /// Two partitions (or representations) were expected to have the same size.
    SizeMismatch { left: usize, right: usize },
    /// A configured enumeration bound would be exceeded.
    BoundExceeded { what: &'static str, value: usize, bound: usize },
    /// `inner` is not contained in `outer`.
    NotContained,
    /// A diagram has more rows than allowed.
    TooManyRows { rows: usize, max_rows: usize },
    /// Two virtual representations live in different Grothendieck groups.
    GroupMismatch,
    /// An operation was handed a representation in the wrong basis.
    WrongBasis,
    /// A computation that must be exact was not; always a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "invalid partition: {msg}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::BoundExceeded { what, value, bound } => {
                write!(f, "{what} = {value} exceeds the bound {bound}")
            }
            Error::NotContained => f.write_str("inner diagram is not contained in outer diagram"),
            Error::TooManyRows { rows, max_rows } => {
                write!(f, "diagram has {rows} rows, at most {max_rows} allowed")
            }
            Error::GroupMismatch => {
                f.write_str("representations belong to different groups or sizes")
            }
            Error::WrongBasis => f.write_str("representation is expressed in the wrong basis"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
