use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{BasketError, Result};
use crate::Q;

/// A generalized pair `(b, r)` with `0 < b < r`.
///
/// Ordering is the canonical basket order: larger `b/r` first, ties broken by
/// smaller `r`, so `(1,2) < (2,4) < (5,11)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pair {
    pub b: i64,
    pub r: i64,
}

impl Pair {
    pub fn new(b: i64, r: i64) -> Result<Pair> {
        if b <= 0 || b >= r {
            return Err(BasketError::InvalidPair { b, r });
        }
        Ok(Pair { b, r })
    }

    /// A pair that is also a terminal quotient singularity.
    pub fn terminal(b: i64, r: i64) -> Result<Pair> {
        let p = Pair::new(b, r)?;
        if !p.is_terminal() {
            return Err(BasketError::NotTerminal { b, r });
        }
        Ok(p)
    }

    pub fn is_terminal(&self) -> bool {
        self.b.gcd(&self.r) == 1 && 2 * self.b <= self.r
    }

    /// `(g, (b/g, r/g))` with `g = gcd(b, r)`.
    pub fn reduced(&self) -> (i64, Pair) {
        let g = self.b.gcd(&self.r);
        (g, Pair { b: self.b / g, r: self.r / g })
    }

    pub fn fraction(&self) -> Q {
        Q::new(self.b.into(), self.r.into())
    }

    pub fn same_fraction(&self, other: &Pair) -> bool {
        self.b * other.r == other.b * self.r
    }

    pub fn sigma_prime(&self) -> Q {
        Q::new((self.b * self.b).into(), self.r.into())
    }

    /// `Δⁿ(b,r) = δbn − rδ(δ+1)/2` with `δ = ⌊bn/r⌋`.
    pub fn delta(&self, n: i64) -> Result<i64> {
        if 2 * self.b > self.r {
            return Err(BasketError::DeltaDomain { pair: *self, n });
        }
        Ok(self.delta_unchecked(n))
    }

    pub(crate) fn delta_unchecked(&self, n: i64) -> i64 {
        let d = Integer::div_floor(&(self.b * n), &self.r);
        d * self.b * n - self.r * d * (d + 1) / 2
    }

    /// The mediant `(b1+b2, r1+r2)`.
    pub fn merge(&self, other: &Pair) -> Pair {
        Pair { b: self.b + other.b, r: self.r + other.r }
    }

    /// `|b1·r2 − b2·r1|`; a packing is prime when this is 1.
    pub fn det(&self, other: &Pair) -> i64 {
        (self.b * other.r - other.b * self.r).abs()
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.b * self.r)
            .cmp(&(self.b * other.r))
            .then(self.r.cmp(&other.r))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.r)
    }
}

impl std::str::FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("expected `(b,r)`, got `{}`", s.trim()))?;
        let (b, r) = inner
            .split_once(',')
            .ok_or_else(|| format!("expected `(b,r)`, got `{}`", s.trim()))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad integer `{}`", b.trim()))?;
        let r: i64 = r.trim().parse().map_err(|_| format!("bad integer `{}`", r.trim()))?;
        Pair::new(b, r).map_err(|e| e.to_string())
    }
}

/// Unchecked constructor for literal slot tables.
pub const fn p(b: i64, r: i64) -> Pair {
    Pair { b, r }
}
