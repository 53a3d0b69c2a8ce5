use std::fmt;

use crate::basket::{parse_entry, Basket};
use crate::error::{BasketError, Result};
use crate::Q;

/// A formal basket `(B, χ̃, χ̃₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalBasket {
    pub basket: Basket,
    pub chi: i64,
    pub chi2: i64,
}

impl FormalBasket {
    pub fn new(basket: Basket, chi: i64, chi2: i64) -> Result<FormalBasket> {
        if chi2 < 0 {
            return Err(BasketError::NegativeChi2(chi2));
        }
        Ok(FormalBasket { basket, chi, chi2 })
    }

    /// `K³ = −σ + σ′ + 6χ̃ + 2χ̃₂`.
    pub fn k_cubed(&self) -> Q {
        self.basket.sigma_prime() + Q::from_integer((self.k3_minus_sigma_prime()).into())
    }

    /// `K³ − σ′ = −σ + 6χ̃ + 2χ̃₂`, always an integer.
    pub fn k3_minus_sigma_prime(&self) -> i64 {
        -self.basket.sigma() + 6 * self.chi + 2 * self.chi2
    }

    pub fn is_positive(&self) -> bool {
        self.k_cubed() > Q::from_integer(0.into())
    }

    /// `χₘ` for `m ≥ 2`.
    pub fn chi_m(&self, m: i64) -> Result<i64> {
        Ok(*self.chi_table(m)?.last().expect("non-empty"))
    }

    /// `[χ₂, χ₃, …, χₘ]`.
    pub fn chi_table(&self, m: i64) -> Result<Vec<i64>> {
        if m < 2 {
            return Err(BasketError::ChiIndex(m));
        }
        let sigma = self.basket.sigma() as i128;
        let a = self.k3_minus_sigma_prime() as i128;
        let mut out = vec![self.chi2];
        let mut cur = -sigma + 10 * self.chi as i128 + 5 * self.chi2 as i128;
        if m >= 3 {
            out.push(cur as i64);
        }
        for k in 3..m {
            let k2 = k as i128;
            let twice = k2 * k2 * a + k2 * sigma;
            if twice % 2 != 0 {
                return Err(BasketError::NonIntegerChi {
                    m: k + 1,
                    value: format!("{}/2", twice + 2 * cur),
                });
            }
            cur += twice / 2 - 2 * self.chi as i128 + self.basket.delta(k)? as i128;
            out.push(cur as i64);
        }
        Ok(out)
    }

    /// Positive, and every admissible packing (see
    /// [`crate::minimize::admissible_packings`]) has `K³ ≤ 0`.
    pub fn is_minimal_positive(&self) -> bool {
        self.is_positive()
            && crate::minimize::admissible_packings(&self.basket, crate::minimize::DEFAULT_LEVEL)
                .into_iter()
                .all(|(_, _, child)| {
                    let f = FormalBasket { basket: child, ..self.clone() };
                    !f.is_positive()
                })
    }

    /// Basket text plus optional `chi = N` and `chi2 = N` lines.
    pub fn parse(text: &str) -> Result<FormalBasket> {
        let mut basket = Basket::new();
        let (mut chi, mut chi2) = (0, 0);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| BasketError::Parse { line: i + 1, msg };
            if let Some((key, value)) = line.split_once('=') {
                let value: i64 =
                    value.trim().parse().map_err(|_| err(format!("bad integer `{}`", value.trim())))?;
                match key.trim() {
                    "chi" | "χ" => chi = value,
                    "chi2" | "χ2" | "χ₂" => chi2 = value,
                    k => return Err(err(format!("unknown key `{k}`"))),
                }
                continue;
            }
            let (w, p) = parse_entry(line).map_err(err)?;
            basket.add(p, w);
        }
        FormalBasket::new(basket, chi, chi2)
    }

    pub fn to_text(&self) -> String {
        format!("chi = {}\nchi2 = {}\n{}", self.chi, self.chi2, self.basket.to_text())
    }
}

impl fmt::Display for FormalBasket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, χ̃={}, χ̃₂={})", self.basket, self.chi, self.chi2)
    }
}
