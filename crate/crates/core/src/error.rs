use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators must be strictly increasing ({0} is followed by {1})")]
    NotIncreasing(u64, u64),
    #[error("generator {0} exceeds the supported bound 2^31")]
    GeneratorTooLarge(u64),
    #[error("generators have gcd {0}; without a cap the complement is infinite")]
    NotCoprime(u64),
    #[error("cap {cap} is below the smallest generator {m}")]
    CapBelowMultiplicity { cap: u64, m: u64 },
    #[error("membership window of {0} bits exceeds the supported size")]
    WindowTooLarge(usize),
    #[error("range [{lo}, {hi}) is outside the window [0, {end})")]
    RangeOutsideWindow { lo: u64, hi: u64, end: u64 },
    #[error("bad token '{token}' in generator spec")]
    Parse { token: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("requires q >= {need}, semigroup has q = {q}")]
    QTooSmall { need: u64, q: u64 },
    #[error("requires q = {need}, semigroup has q = {q}")]
    WrongQ { need: u64, q: u64 },
    #[error("requires profile (k, 0), got {0:?}")]
    WrongProfile(Vec<u64>),
    #[error("the semigroup of all naturals has no left primitives")]
    Naturals,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("binomial value overflows 128-bit arithmetic")]
    Overflow,
    #[error("Hilbert sequence must start with h_0 = 1")]
    BadStart,
    #[error("Hilbert sequence has {len} values, need at least {need}")]
    TooShort { len: usize, need: usize },
    #[error("sumset generators must be nonempty and positive")]
    BadGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("genus {requested} exceeds the safety limit {limit}")]
    GenusTooLarge { requested: u32, limit: u32 },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}
