use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basket::Basket;
use crate::error::{BasketError, Result};
use crate::pair::p;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// `n⁰₁,ᵣ = 0` for `r ≥ 6`.
    #[serde(rename = "i")]
    I,
    /// `n⁰₁,₆ = 1`.
    #[serde(rename = "ii")]
    II,
}

impl Case {
    pub const ALL: [Case; 2] = [Case::I, Case::II];

    pub fn tag(&self) -> &'static str {
        match self {
            Case::I => "i",
            Case::II => "ii",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Case {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "i" | "I" | "1" => Ok(Case::I),
            "ii" | "II" | "2" => Ok(Case::II),
            _ => Err(format!("unknown case `{s}` (expected i or ii)")),
        }
    }
}

/// Plurigenera `P₂..P₁₃`, `χ`, and the packing counts `η, ζ, α, β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PluriProfile {
    pub case: Case,
    pub chi: i64,
    /// Indexed by `m`; entries 0 and 1 are unused.
    pub p: [i64; 14],
    pub eta: i64,
    pub zeta: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl PluriProfile {
    /// `P₃..P₁₁` as given, `P₁₂ = 2`, everything else zero.
    pub fn new(case: Case, chi: i64, p3_to_p11: [i64; 9]) -> PluriProfile {
        let mut p = [0; 14];
        p[3..12].copy_from_slice(&p3_to_p11);
        p[12] = 2;
        PluriProfile { case, chi, p, eta: 0, zeta: 0, alpha: 0, beta: 0 }
    }

    pub fn with_p13(mut self, p13: i64) -> PluriProfile {
        self.p[13] = p13;
        self
    }

    pub fn with_counts(mut self, eta: i64, zeta: i64, alpha: i64, beta: i64) -> PluriProfile {
        (self.eta, self.zeta, self.alpha, self.beta) = (eta, zeta, alpha, beta);
        self
    }

    pub fn pm(&self, m: usize) -> i64 {
        self.p[m]
    }

    /// `σ = 10χ + 5P₂ − P₃`.
    pub fn sigma(&self) -> i64 {
        10 * self.chi + 5 * self.p[2] - self.p[3]
    }

    /// `τ = σ′ − K³ = 4χ + 3P₂ − P₃`.
    pub fn tau(&self) -> i64 {
        4 * self.chi + 3 * self.p[2] - self.p[3]
    }

    /// `ε = −P₃ + P₄ + P₅ + P₆ − P₇`.
    pub fn epsilon(&self) -> i64 {
        -self.p[3] + self.p[4] + self.p[5] + self.p[6] - self.p[7]
    }

    /// The level-0 counts of `(1,5)` and `(1,6)`.
    fn tail_b0(&self) -> (i64, i64) {
        match self.case {
            Case::I => (self.epsilon(), 0),
            Case::II => (0, 1),
        }
    }

    /// `R = 2n⁰₁,₅ + 5n⁰₁,₆`.
    pub fn r(&self) -> i64 {
        let (n5, n6) = self.tail_b0();
        2 * n5 + 5 * n6
    }

    /// The δ = 12 regime: `P₂ = 0`, `Pₘ ≤ 1` for `3 ≤ m ≤ 11`, `P₁₂ = 2`, `χ ≥ 2`.
    pub fn check_regime(&self) -> std::result::Result<(), String> {
        if self.p[2] != 0 {
            return Err(format!("P2 = {} but must be 0", self.p[2]));
        }
        if let Some(m) = (3..=11).find(|&m| !(0..=1).contains(&self.p[m])) {
            return Err(format!("P{m} = {} outside 0..=1", self.p[m]));
        }
        if self.p[12] != 2 {
            return Err(format!("P12 = {} but must be 2", self.p[12]));
        }
        if self.chi < 2 {
            return Err(format!("chi = {} but must be at least 2", self.chi));
        }
        Ok(())
    }

    /// `Pₐ₊ᵦ ≥ Pₐ·Pᵦ` for `a, b ≥ 2`, `a + b ≤ 13`.
    pub fn check_products(&self) -> std::result::Result<(), String> {
        for a in 2..=11 {
            for b in a..=13 - a {
                if self.p[a + b] < self.p[a] * self.p[b] {
                    return Err(format!("P{} < P{a}·P{b}", a + b));
                }
            }
        }
        Ok(())
    }
}

/// `Δⁿ` of any basket compatible with the profile, from the `χₘ` recursion
/// with `χₘ = Pₘ`. For `P₂ = 0` this is the familiar table
/// `Δ³ = 5χ − 4P₃ + P₄`, …, `Δ¹² = 230χ − 66P₃ − P₁₂ + P₁₃`.
pub fn delta_from_profile(profile: &PluriProfile, n: usize) -> i64 {
    assert!((2..=12).contains(&n), "delta_from_profile needs 2 <= n <= 12");
    let sigma = profile.sigma();
    let k3_minus_sp = 6 * profile.chi + 2 * profile.p[2] - sigma;
    let n = n as i64;
    let twice = n * n * k3_minus_sp + n * sigma;
    profile.p[n as usize + 1] - profile.p[n as usize] - twice / 2 + 2 * profile.chi
}

/// The level-0 basket `{n⁰₁,₂ (1,2), n⁰₁,₃ (1,3), n⁰₁,₄ (1,4), n⁰₁,₅ (1,5), n⁰₁,₆ (1,6)}`.
pub fn solve_b0(profile: &PluriProfile) -> Result<Basket> {
    let counts = b0_counts(profile);
    if let Some(i) = counts.iter().position(|&c| c < 0) {
        return Err(BasketError::InfeasibleProfile(format!(
            "n0_(1,{}) = {} is negative",
            i + 2,
            counts[i]
        )));
    }
    Ok(Basket::from_weighted(
        counts.iter().enumerate().map(|(i, &c)| (c as u64, p(1, i as i64 + 2))),
    ))
}

pub(crate) fn b0_counts(profile: &PluriProfile) -> [i64; 5] {
    let d3 = delta_from_profile(profile, 3);
    let d4 = delta_from_profile(profile, 4);
    let (n5, n6) = profile.tail_b0();
    let n2 = d3;
    let n3 = d4 - 2 * d3;
    let n4 = profile.sigma() - n2 - n3 - n5 - n6;
    [n2, n3, n4, n5, n6]
}
