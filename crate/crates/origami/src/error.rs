use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    NotPermutation(String),
    #[error("the permutations do not act transitively (surface is disconnected)")]
    NotTransitive,
    #[error("polygon sides do not pair up into parallel opposite sides")]
    UnpairedSides,
    #[error("polygon is not simple")]
    NotSimple,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("the q-family needs an odd q >= 3, got {0}")]
    EvenQ(i64),
    #[error("matrix does not have determinant 1")]
    NotSl2z,
    #[error("matrix is not in the Veech group of the origami")]
    NotInVeechGroup,
    #[error("permutation is not an automorphism of the origami")]
    NotAutomorphism,
    #[error("closing choice {0} is out of range")]
    BadClosingChoice(usize),
    #[error("no power up to {0} is the identity")]
    OrderExceedsCap(u64),
    #[error("subspace is not invariant under the map")]
    NotInvariant,
    #[error("chain is not absolute (nonzero boundary)")]
    NotAbsolute,
    #[error("operation expects a different catalog surface: {0}")]
    WrongSurface(String),
    #[error("vector set is not a D4 root system: {0}")]
    NotD4(String),
    #[error("map does not preserve the root system")]
    NotInAut,
    #[error("action on H_tau is not a power of the generator")]
    NotInCyclicImage,
    #[error("action image is not finite within the cap")]
    ActionNotFinite,
    #[error("walk is not closed")]
    NotClosed,
    #[error("walk backtracks along the same edge-end")]
    Backtrack,
    #[error("a vertex has even cone multiplicity; index parity is ill-defined")]
    EvenConeMultiplicity,
    #[error("some zero has odd order; spin parity is undefined")]
    OddOrderZeros,
    #[error("Gram matrix is not unimodular")]
    NotUnimodular,
    #[error("a probe maps a marked vertex to an unmarked one")]
    ProbeMovesMarks,
    #[error("lifts live on different origamis")]
    Mismatch,
    #[error("direction must be a primitive nonzero integer vector")]
    BadDirection,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
