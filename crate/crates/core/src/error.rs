use std::fmt;

use crate::graph::VertexSet;

/// Witness returned when interval recognition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotIntervalWitness {
    /// An induced cycle of length at least 4, listed in cycle order.
    InducedCycle(Vec<usize>),
    /// Three independent vertices no one of which separates the other two.
    AsteroidalTriple([usize; 3]),
}

impl fmt::Display for NotIntervalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotIntervalWitness::InducedCycle(c) => write!(f, "induced cycle {:?}", c),
            NotIntervalWitness::AsteroidalTriple(t) => write!(f, "asteroidal triple {:?}", t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph exceeds the configured vertex limit for an exact computation.
    SizeLimitExceeded { n: usize, limit: usize },
    /// The graph is not an interval graph; carries a witness when available.
    NotInterval(Option<NotIntervalWitness>),
    NotConnected,
    /// The (a, c, b) triple is not a separation: not a partition, or an a-b edge exists.
    NotASeparation,
    /// The separation is not a clean clique separation where one is required.
    NotClean,
    /// `sides` requires degree at least maxdeg - 1.
    DegreeTooSmall { vertex: usize, degree: usize, required: usize },
    HasUniversalVertex,
    InvalidVertexSet(VertexSet),
    /// The interval representation does not realize the graph it is paired with.
    RepresentationMismatch,
    /// Deck operations need at least 3 cards.
    OrderTooSmall { n: usize },
    /// A deck-level procedure was invoked outside its graph-class preconditions.
    NotApplicable(&'static str),
    NotIntervalDeck,
    /// Internal consistency failure: two non-isomorphic graphs match the deck.
    AmbiguousDeck,
    /// No case of the reconstruction procedure produced a deck-consistent graph.
    CaseUnmatched(&'static str),
    /// Annotated parts cannot be glued: separator data disagrees.
    IncompatibleParts,
    NotLinearlyOrdered,
    /// Caller-attested preconditions of distant-vertex recovery could not be used:
    /// the candidate recoveries disagree.
    PreconditionUnverifiable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimitExceeded { n, limit } => {
                write!(f, "graph on {} vertices exceeds the limit of {}", n, limit)
            }
            Error::NotInterval(Some(w)) => write!(f, "not an interval graph: {}", w),
            Error::NotInterval(None) => write!(f, "not an interval graph"),
            Error::NotConnected => write!(f, "graph is not connected"),
            Error::NotASeparation => write!(f, "triple is not a separation"),
            Error::NotClean => write!(f, "separation is not a clean clique separation"),
            Error::DegreeTooSmall { vertex, degree, required } => write!(
                f,
                "vertex {} has degree {}, need at least {}",
                vertex, degree, required
            ),
            Error::HasUniversalVertex => write!(f, "graph has a universal vertex"),
            Error::InvalidVertexSet(s) => write!(f, "vertex set {:?} is not valid here", s),
            Error::RepresentationMismatch => {
                write!(f, "interval representation does not realize the graph")
            }
            Error::OrderTooSmall { n } => write!(f, "deck of order {} is too small", n),
            Error::NotApplicable(what) => write!(f, "not applicable: {}", what),
            Error::NotIntervalDeck => write!(f, "deck does not belong to an interval graph"),
            Error::AmbiguousDeck => write!(f, "deck admits non-isomorphic reconstructions"),
            Error::CaseUnmatched(which) => write!(f, "no case matched in {}", which),
            Error::IncompatibleParts => write!(f, "annotated parts are incompatible"),
            Error::NotLinearlyOrdered => write!(f, "separator neighborhoods not linearly ordered"),
            Error::PreconditionUnverifiable => {
                write!(f, "distant-vertex recovery candidates disagree")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
