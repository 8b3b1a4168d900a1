use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    MalformedToken(String),
    GeneratorOutOfRange { generator: i64, strands: usize },
    ZeroStrands,
    WrongStrandCount { expected: usize, found: usize },
    IndexOutOfRange { index: usize, len: usize },
    UnknownFamily(String),
    InvalidFamilyIndex,
    MalformedDiagram(&'static str),
    NotBipartite,
    RegionNotWhite(usize),
    NoSuchRegion(usize),
    NotSymmetric,
    NotSquare,
    DimensionTooLarge { dim: usize, max: usize },
    PreconditionViolated(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedToken(t) => write!(f, "malformed token `{t}`"),
            Error::GeneratorOutOfRange { generator, strands } => write!(
                f,
                "generator a{generator} out of range for {strands} strands (valid: 1..={})",
                strands.saturating_sub(1)
            ),
            Error::ZeroStrands => write!(f, "a braid needs at least one strand"),
            Error::WrongStrandCount { expected, found } => {
                write!(
                    f,
                    "expected a {expected}-strand word, found {found} strands"
                )
            }
            Error::IndexOutOfRange { index, len } => {
                write!(
                    f,
                    "letter index {index} out of range for word of length {len}"
                )
            }
            Error::UnknownFamily(name) => write!(f, "unknown family `{name}`"),
            Error::InvalidFamilyIndex => write!(f, "family indices must be at least 1"),
            Error::MalformedDiagram(why) => write!(f, "malformed diagram: {why}"),
            Error::NotBipartite => write!(f, "face adjacency graph is not bipartite"),
            Error::RegionNotWhite(id) => write!(f, "face {id} is not white"),
            Error::NoSuchRegion(id) => write!(f, "no face with id {id}"),
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "dimension {dim} exceeds oracle limit {max}")
            }
            Error::PreconditionViolated(why) => write!(f, "precondition violated: {why}"),
        }
    }
}

impl core::error::Error for Error {}
