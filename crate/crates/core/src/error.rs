use core::fmt;

use crate::roots::Family;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The rank is not valid for the requested family.
    InvalidRank { family: Family, rank: usize },
    /// A coordinate vector has the wrong length for the ambient space.
    DimensionMismatch { expected: usize, found: usize },
    /// The vector is not an element of the root system.
    NotARoot,
    /// The root is not a positive root of the system.
    NotAPositiveRoot,
    /// The given roots are not pairwise incomparable in the root poset.
    NotAnAntichain,
    /// Objects from different root systems were mixed.
    KindMismatch,
    /// The image list does not describe a group element of the family.
    InvalidPermutation(&'static str),
    /// The inversion vector is infeasible (some entry is too large).
    InvalidInversionVector,
    /// The root set is not the inversion set of any group element.
    NotAnInversionSet,
    /// The pair (w, P) is not a parking function.
    InvalidParkingFunction(&'static str),
    /// The sign pattern does not correspond to any Shi region.
    Inadmissible(&'static str),
    /// More than one parking function matched a sign type; this would
    /// falsify the region/parking-function bijection, so it fails loudly.
    MultipleParkingFunctions,
    /// The requested value does not label any slot of the diagram.
    ValueNotInDiagram(i64),
    /// An arc-count query needs two distinct values.
    IdenticalValues,
    /// Too many arcs for exhaustive subset enumeration.
    TooManyArcs(usize),
    /// The point lies on the reflecting hyperplane.
    PointOnHyperplane,
    /// The point has an integer pairing with some root, so it lies on a
    /// hyperplane of the affine arrangement rather than in an open alcove.
    DegeneratePoint,
    /// No member of the group dominates all others in componentwise
    /// absolute value; the enumeration radius is too small.
    Unsaturated,
    /// The operation is only defined for a specific family.
    WrongFamily(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { family, rank } => {
                write!(f, "rank {rank} is not valid for family {family}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            Error::NotARoot => write!(f, "vector is not a root of the system"),
            Error::NotAPositiveRoot => write!(f, "root is not a positive root"),
            Error::NotAnAntichain => write!(f, "roots are not an antichain of the root poset"),
            Error::KindMismatch => write!(f, "objects belong to different root systems"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::InvalidInversionVector => write!(f, "infeasible inversion vector"),
            Error::NotAnInversionSet => write!(f, "not the inversion set of any group element"),
            Error::InvalidParkingFunction(msg) => write!(f, "invalid parking function: {msg}"),
            Error::Inadmissible(msg) => write!(f, "inadmissible sign type: {msg}"),
            Error::MultipleParkingFunctions => {
                write!(f, "multiple parking functions match one sign type")
            }
            Error::ValueNotInDiagram(v) => write!(f, "value {v} does not appear in the diagram"),
            Error::IdenticalValues => write!(f, "arc count needs two distinct values"),
            Error::TooManyArcs(n) => write!(f, "{n} arcs is too many for exhaustive search"),
            Error::PointOnHyperplane => write!(f, "point lies on the reflecting hyperplane"),
            Error::DegeneratePoint => {
                write!(f, "point has an integer pairing and lies on a hyperplane")
            }
            Error::Unsaturated => {
                write!(f, "no componentwise dominating member; enlarge the search radius")
            }
            Error::WrongFamily(msg) => write!(f, "{msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
