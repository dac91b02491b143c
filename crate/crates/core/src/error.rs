use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("cocharacter is not antidominant for the requested subset")]
    NotAntidominant,
    #[error("vector is not a root")]
    NotARoot,
    #[error("root is not a positive root of the Siegel Levi")]
    NotSiegelPositive,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("residue field size p^f overflows")]
    FieldTooLarge,
    #[error("{0} is not a non-square unit modulo p")]
    NotNonSquare(u64),
    #[error("the solvability oracle needs f = 1")]
    OracleNeedsPrimeField,
    #[error("value group order {order} must be even and prime to p = {p}")]
    BadValueGroup { order: u64, p: u64 },
    #[error("characters live in different value groups")]
    ValueGroupMismatch,
    #[error("weight is not q-restricted")]
    NotRestricted,
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("the long simple root has no honest coroot character")]
    LongRootRestriction,
    #[error("coefficient missing at a required cocharacter")]
    MissingCoefficient,
    #[error("coefficient supplied outside the expected support")]
    UnexpectedCoefficient,
    #[error("Hecke character undefined at a required cocharacter")]
    UndefinedValue,
    #[error("Hecke character value at 0 must be 1")]
    ValueAtZero,
    #[error("Hecke character is not multiplicative")]
    NotMultiplicative,
    #[error("vector is not in the set")]
    NotAMember,
    #[error("insufficient p-adic precision to decide a pivot")]
    Precision,
    #[error("matrix is not in the tagged group")]
    NotInGroup,
    #[error("oracle supports SL_2 and Sp_4 only")]
    UnsupportedGroup,
    #[error("coset count did not stabilize at depth {0}")]
    NotStabilized(u32),
    #[error("missing triviality flag for simple root {0}")]
    MissingFlag(usize),
    #[error("simple root {0} is not eligible for a triviality flag")]
    IneligibleFlag(usize),
    #[error("genuine data cannot be trivial on the long simple root")]
    LongRootFlag,
    #[error("flags disagree with the torus character")]
    FlagMismatch,
    #[error("torus character requires the empty Levi subset")]
    TorusCharacterLevi,
    #[error("invalid triple: {0}")]
    InvalidTriple(&'static str),
    #[error("menu entries share an identity but disagree on data")]
    InconsistentDatum,
}
