use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{BasketError, Result};
use crate::pair::Pair;
use crate::Q;

/// A finite weighted multiset of pairs, kept in canonical order with equal
/// pairs merged and zero weights dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basket {
    entries: BTreeMap<Pair, u64>,
}

impl Basket {
    pub fn new() -> Basket {
        Basket::default()
    }

    pub fn from_weighted<I: IntoIterator<Item = (u64, Pair)>>(items: I) -> Basket {
        let mut b = Basket::new();
        for (w, p) in items {
            b.add(p, w);
        }
        b
    }

    pub fn add(&mut self, pair: Pair, weight: u64) {
        if weight > 0 {
            *self.entries.entry(pair).or_insert(0) += weight;
        }
    }

    /// Removes one copy of `pair`.
    pub fn take(&mut self, pair: Pair) -> Result<()> {
        match self.entries.get_mut(&pair) {
            Some(w) if *w > 1 => *w -= 1,
            Some(_) => {
                self.entries.remove(&pair);
            }
            None => return Err(BasketError::MissingPair(pair)),
        }
        Ok(())
    }

    pub fn weight(&self, pair: &Pair) -> u64 {
        self.entries.get(pair).copied().unwrap_or(0)
    }

    /// `(pair, weight)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Pair, u64)> + '_ {
        self.entries.iter().map(|(p, w)| (*p, *w))
    }

    /// Number of distinct pairs.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of elements counted with multiplicity.
    pub fn total_weight(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn sigma(&self) -> i64 {
        self.iter().map(|(p, w)| w as i64 * p.b).sum()
    }

    pub fn sigma_prime(&self) -> Q {
        let mut s = Q::zero();
        for (p, w) in self.iter() {
            s += p.sigma_prime() * Q::from_integer((w as i64).into());
        }
        s
    }

    pub fn delta(&self, n: i64) -> Result<i64> {
        let mut s = 0;
        for (p, w) in self.iter() {
            s += w as i64 * p.delta(n)?;
        }
        Ok(s)
    }

    /// Replaces one copy each of `p1` and `p2` by their mediant. The two may
    /// coincide if the weight is at least 2.
    pub fn pack(&self, p1: Pair, p2: Pair) -> Result<Basket> {
        let mut out = self.clone();
        out.take(p1)?;
        out.take(p2).map_err(|_| BasketError::MissingPair(p2))?;
        out.add(p1.merge(&p2), 1);
        Ok(out)
    }

    /// Every non-reduced pair `(gb, gr)` becomes `g` copies of `(b, r)`.
    /// σ, σ′ and every Δⁿ are unchanged.
    pub fn normalized(&self) -> Basket {
        let mut out = Basket::new();
        for (p, w) in self.iter() {
            let (g, q) = p.reduced();
            out.add(q, w * g as u64);
        }
        out
    }

    pub fn is_terminal(&self) -> bool {
        self.entries.keys().all(Pair::is_terminal)
    }

    /// Text form: one `w x (b,r)` line per entry.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (p, w) in self.iter() {
            s.push_str(&format!("{w} x {p}\n"));
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are ignored; the
    /// weight prefix is optional and `×` is accepted for `x`.
    pub fn parse(text: &str) -> Result<Basket> {
        let mut b = Basket::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (w, p) = parse_entry(line).map_err(|msg| BasketError::Parse { line: i + 1, msg })?;
            b.add(p, w);
        }
        Ok(b)
    }
}

pub(crate) fn parse_entry(line: &str) -> std::result::Result<(u64, Pair), String> {
    let (w, pair) = match line.find('(') {
        Some(0) => ("1", line),
        Some(k) => (line[..k].trim(), &line[k..]),
        None => return Err(format!("expected `w x (b,r)`, got `{line}`")),
    };
    let w = w.trim_end_matches(['x', '×', '*']).trim();
    let w: u64 = if w.is_empty() { 1 } else { w.parse().map_err(|_| format!("bad weight `{w}`"))? };
    let pair: Pair = pair.parse()?;
    Ok((w, pair))
}

impl FromIterator<Pair> for Basket {
    fn from_iter<I: IntoIterator<Item = Pair>>(iter: I) -> Self {
        Basket::from_weighted(iter.into_iter().map(|p| (1, p)))
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, w)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if w > 1 {
                write!(f, "{w}×")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Whether merging `p1` and `p2` is a prime packing.
pub fn is_prime_packing(p1: &Pair, p2: &Pair) -> bool {
    p1.det(p2) == 1
}

/// The exact drop `σ′(B) − σ′(B′)` of a packing, `(r1b2 − r2b1)² / (r1r2(r1+r2))`.
pub fn sigma_prime_drop(p1: &Pair, p2: &Pair) -> Q {
    let d = p1.det(p2);
    Q::new((d * d).into(), (p1.r * p2.r * (p1.r + p2.r)).into())
}
