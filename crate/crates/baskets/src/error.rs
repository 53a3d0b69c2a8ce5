use crate::pair::Pair;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasketError {
    #[error("invalid pair ({b},{r}): need 0 < b < r")]
    InvalidPair { b: i64, r: i64 },
    #[error("({b},{r}) is not a terminal pair: need gcd(b,r) = 1 and 2b <= r")]
    NotTerminal { b: i64, r: i64 },
    #[error("delta^{n} is undefined for {pair}: b/r exceeds 1/2")]
    DeltaDomain { pair: Pair, n: i64 },
    #[error("{0} is not in the basket (or not twice, for a doubled packing)")]
    MissingPair(Pair),
    #[error("chi_m is undefined for m = {0}; need m >= 2")]
    ChiIndex(i64),
    #[error("chi_{m} is not an integer ({value}); the formal basket is inconsistent")]
    NonIntegerChi { m: i64, value: String },
    #[error("chi2 must be non-negative, got {0}")]
    NegativeChi2(i64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("infeasible profile: {0}")]
    InfeasibleProfile(String),
}

pub type Result<T> = std::result::Result<T, BasketError>;
