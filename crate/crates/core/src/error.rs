use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{a} is not coprime to {modulus}")]
    NotCoprime { a: u64, modulus: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entry {value} out of range for modulus {p}")]
    EntryOutOfRange { value: i64, p: u32 },

    #[error("matrices over different fields (p = {0} and p = {1})")]
    FieldMismatch(u32, u32),

    #[error("generator {index} not invertible mod {p}")]
    NotInvertible { index: usize, p: u32 },

    #[error("group too large: closure exceeded cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("scan too large: {size} exceeds cap {cap}")]
    ScanTooLarge { size: u128, cap: u128 },

    #[error("element is not in the group")]
    NotAnElement,

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("action does not define a module: {0}")]
    NotAModule(String),

    #[error("subspace is not invariant under the group action")]
    NotInvariant,

    #[error("modules are over different groups")]
    GroupMismatch,

    #[error("Maschke hypothesis violated: p = {p} divides |G| = {order}")]
    MaschkeViolated { p: u32, order: usize },

    #[error("scalar must be non-zero")]
    ZeroScalar,

    #[error("{0} is not a generator of the multiplicative group")]
    NotPrimitive(u32),

    #[error("form is not alternating")]
    NotAlternating,

    #[error("transversal inconsistent with subgroup: {0}")]
    InvalidTransversal(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
