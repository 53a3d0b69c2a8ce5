//! Level sets `S⁽ⁿ⁾` and the canonical unpacking `B ↦ B⁽ⁿ⁾`.

use crate::basket::Basket;
use crate::error::{BasketError, Result};
use crate::pair::Pair;

/// `S⁽ⁿ⁾`: reduced fractions `b/r ≤ 1/2` with `r ≤ n`, together with every
/// unit fraction `1/r`. Levels 0 through 4 all consist of unit fractions only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelSet {
    pub n: i64,
}

impl LevelSet {
    pub fn new(n: i64) -> LevelSet {
        LevelSet { n }
    }

    pub fn contains(&self, pair: &Pair) -> bool {
        let (_, q) = pair.reduced();
        2 * q.b <= q.r && (q.b == 1 || q.r <= self.n)
    }

    /// The non-unit members, ascending by value.
    pub fn non_unit(&self) -> Vec<Pair> {
        let mut v = Vec::new();
        for r in 5..=self.n.max(0) {
            for b in 2..=r / 2 {
                let q = Pair { b, r };
                if q.is_terminal() {
                    v.push(q);
                }
            }
        }
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// Members with denominator at most `max_r`, descending by value.
    pub fn members(&self, max_r: i64) -> Vec<Pair> {
        let mut v: Vec<Pair> = (2..=max_r).map(|r| Pair { b: 1, r }).collect();
        v.extend(self.non_unit().into_iter().filter(|q| q.r <= max_r));
        v.sort();
        v
    }

    /// Closest members above and below `b/r`, for `b/r ≤ 1/2` not in the set.
    pub fn neighbors(&self, pair: &Pair) -> Result<(Pair, Pair)> {
        let (_, q) = pair.reduced();
        if 2 * q.b > q.r {
            return Err(BasketError::DeltaDomain { pair: *pair, n: self.n });
        }
        // unit fractions 1/k > b/r need kb < r; 1/k < b/r need kb > r
        let mut upper = Pair { b: 1, r: (q.r - 1) / q.b };
        let mut lower = Pair { b: 1, r: q.r / q.b + 1 };
        for c in self.non_unit() {
            let above = c.b * q.r > q.b * c.r;
            let below = c.b * q.r < q.b * c.r;
            if above && c.b * upper.r < upper.b * c.r {
                upper = c;
            }
            if below && c.b * lower.r > lower.b * c.r {
                lower = c;
            }
        }
        Ok((upper, lower))
    }
}

/// `B⁽ⁿ⁾`: every entry outside `S⁽ⁿ⁾` is replaced by
/// `a×(p₁,q₁) + c×(p₂,q₂)` where `p₁/q₁ > b/r > p₂/q₂` are its neighbours,
/// `a = b·q₂ − r·p₂` and `c = r·p₁ − b·q₁`. Entries already in `S⁽ⁿ⁾` are
/// reduced, so `(4,10)` becomes `2×(2,5)`.
pub fn unpack_to_level(basket: &Basket, n: i64) -> Result<Basket> {
    let set = LevelSet::new(n);
    let mut out = Basket::new();
    for (p, w) in basket.iter() {
        if set.contains(&p) {
            let (g, q) = p.reduced();
            out.add(q, w * g as u64);
            continue;
        }
        let (hi, lo) = set.neighbors(&p)?;
        let a = p.b * lo.r - p.r * lo.b;
        let c = p.r * hi.b - p.b * hi.r;
        debug_assert!(a > 0 && c > 0);
        out.add(hi, w * a as u64);
        out.add(lo, w * c as u64);
    }
    Ok(out)
}

/// `εₙ = Δⁿ(B⁽ⁿ⁻¹⁾) − Δⁿ(B⁽ⁿ⁾)`, the number of prime packings between the
/// two levels.
pub fn epsilon_n(basket: &Basket, n: i64) -> Result<i64> {
    let prev = unpack_to_level(basket, n - 1)?;
    let cur = unpack_to_level(basket, n)?;
    Ok(prev.delta(n)? - cur.delta(n)?)
}

/// `B⁽⁰⁾, B⁽⁵⁾, B⁽⁶⁾, …, B⁽ᵗᵒᵖ⁾`.
pub fn canonical_sequence(basket: &Basket, top: i64) -> Result<Vec<(i64, Basket)>> {
    let mut v = vec![(0, unpack_to_level(basket, 0)?)];
    for n in 5..=top {
        v.push((n, unpack_to_level(basket, n)?));
    }
    Ok(v)
}
