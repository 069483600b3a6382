use thiserror::Error;

/// Reasons an `(n, k, r)` triple or repair-set partition is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("divisibility: r+1 = {r_plus_one} does not divide n = {n}")]
    NotDivisible { n: usize, r_plus_one: usize },
    #[error("locality r must be at least 1")]
    ZeroLocality,
    #[error("locality r = {r} must be smaller than the dimension k = {k}")]
    LocalityNotBelowDimension { k: usize, r: usize },
    #[error("dimension k = {k} exceeds g*r = {max}")]
    DimensionTooLarge { k: usize, max: usize },
    #[error("code length n = {n} exceeds the supported maximum of {max}")]
    LengthTooLarge { n: usize, max: usize },
    #[error("malformed partition: {0}")]
    Partition(String),
}

/// Field and generator-matrix construction failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds 2^16")]
    TooLarge { p: u32, m: u32 },
    #[error("modulus {modulus} is not a monic degree-{m} polynomial over GF({p})")]
    BadModulus { p: u32, m: u32, modulus: u64 },
    #[error("modulus {0} is reducible")]
    Reducible(u64),
    #[error("no built-in modulus for GF({p}^{m}); supply one explicitly")]
    NoDefaultModulus { p: u32, m: u32 },
    #[error("element {value} is not in GF({order})")]
    ElementOutOfRange { value: u32, order: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(#[from] ParamError),
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("{what}: size {size} exceeds the exhaustive limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("contract set {contract} and delete set {delete} overlap")]
    Overlap { contract: String, delete: String },
    #[error("set {set} is not contained in the ground set {ground}")]
    OutsideGround { set: String, ground: String },
    #[error("{0} is not a flat")]
    NotAFlat(String),
    #[error("k' = {k_prime} is outside the admissible range {range}")]
    RankOutOfRange { k_prime: usize, range: String },
    #[error("no construction applies: {0}")]
    NoConstruction(String),
    #[error("no valid n in {n_min}..={n_max} for k = {k}, r = {r}")]
    EmptySweep {
        k: usize,
        r: usize,
        n_min: usize,
        n_max: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn too_large(
        what: &'static str,
        size: impl Into<u128>,
        limit: impl Into<u128>,
    ) -> Self {
        Error::TooLarge {
            what,
            size: size.into(),
            limit: limit.into(),
        }
    }
}
