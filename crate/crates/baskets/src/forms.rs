//! Closed-form linear tables for the level-`n` coefficients and `εₙ`, as
//! functions of `χ, P₃..P₁₃, η, ζ, α, β`.

use std::sync::OnceLock;

use crate::pair::{p, Pair};
use crate::profile::{Case, PluriProfile};

/// Number of variables: constant, `χ`, `P₃..P₁₃`, `η, ζ, α, β`.
pub const NVARS: usize = 17;
const ETA: usize = 13;

/// An integer linear form in the profile variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coef: [i64; NVARS],
}

impl LinearForm {
    /// Parses sums like `2χ − 3P3 + 2P4 + η − 1`; ASCII `-` works too.
    pub fn parse(src: &str) -> Result<LinearForm, String> {
        let mut coef = [0; NVARS];
        let s: String = src.replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err("empty form".into());
        }
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                _ => 1,
            };
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (num, var) = term.split_at(split);
            let k: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| format!("bad term `{term}`"))? };
            let idx = match var {
                "" => 0,
                "χ" => 1,
                "η" => 13,
                "ζ" => 14,
                "α" => 15,
                "β" => 16,
                v => match v.strip_prefix('P').and_then(|m| m.parse::<usize>().ok()) {
                    Some(m @ 3..=13) => m - 1,
                    _ => return Err(format!("unknown variable `{v}` in `{src}`")),
                },
            };
            coef[idx] += sign * k;
        }
        Ok(LinearForm { coef })
    }

    pub fn eval(&self, x: &[i64; NVARS]) -> i64 {
        self.coef.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Deepest of `η, ζ, α, β` (1..=4) the form depends on, or 0.
    pub fn depth(&self) -> usize {
        (ETA..NVARS).rev().find(|&i| self.coef[i] != 0).map_or(0, |i| i - ETA + 1)
    }
}

/// Variable vector for [`LinearForm::eval`].
pub fn vars(profile: &PluriProfile) -> [i64; NVARS] {
    let mut x = [0; NVARS];
    x[0] = 1;
    x[1] = profile.chi;
    x[2..13].copy_from_slice(&profile.p[3..=13]);
    x[13] = profile.eta;
    x[14] = profile.zeta;
    x[15] = profile.alpha;
    x[16] = profile.beta;
    x
}

/// Level-12 slots for case (i).
pub const SLOTS_I: [Pair; 15] = [
    p(1, 2), p(5, 11), p(4, 9), p(3, 7), p(5, 12), p(2, 5), p(3, 8), p(4, 11),
    p(1, 3), p(3, 10), p(2, 7), p(3, 11), p(1, 4), p(2, 9), p(1, 5),
];

/// Level-12 slots for case (ii): `(2,9)` is replaced by `(1,6)`.
pub const SLOTS_II: [Pair; 15] = [
    p(1, 2), p(5, 11), p(4, 9), p(3, 7), p(5, 12), p(2, 5), p(3, 8), p(4, 11),
    p(1, 3), p(3, 10), p(2, 7), p(3, 11), p(1, 4), p(1, 5), p(1, 6),
];

pub fn slots(case: Case) -> &'static [Pair; 15] {
    match case {
        Case::I => &SLOTS_I,
        Case::II => &SLOTS_II,
    }
}

/// How an `εₙ` form is constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsRule {
    NonNegative,
    Zero,
}

#[derive(Debug)]
pub struct Tables {
    /// `(n, [(slot, form)])`, levels ascending.
    pub levels: Vec<(i64, Vec<(Pair, LinearForm)>)>,
    /// `(n, form, rule)`.
    pub eps: Vec<(i64, LinearForm, EpsRule)>,
}

impl Tables {
    pub fn level(&self, n: i64) -> Option<&[(Pair, LinearForm)]> {
        self.levels.iter().find(|(m, _)| *m == n).map(|(_, v)| v.as_slice())
    }
}

type Raw = &'static [(i64, &'static [((i64, i64), &'static str)])];

const LEVELS_I: Raw = &[
    (0, &[
        ((1, 2), "5χ − 4P3 + P4"),
        ((1, 3), "4χ + 2P3 − 3P4 + P5"),
        ((1, 4), "χ + 2P3 + P4 − 2P5 − P6 + P7"),
        ((1, 5), "−P3 + P4 + P5 + P6 − P7"),
    ]),
    (7, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − η"),
        ((2, 5), "χ + P3 − P4 + P5 − 3P6 + P8 + η"),
        ((1, 3), "2χ + 2P3 − 2P4 + 2P6 − P7 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + 2P3 + P4 − 2P5 − P6 + P7 − η"),
        ((1, 5), "−P3 + P4 + P5 + P6 − P7"),
    ]),
    (8, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − η"),
        ((2, 5), "χ + 2P3 − 4P6 + P9 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9"),
        ((1, 3), "2χ + 3P3 − P4 − P5 + P6 − P7 − P8 + P9 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + 2P3 + P4 − 2P5 − P6 + P7 − η"),
        ((1, 5), "−P3 + P4 + P5 + P6 − P7"),
    ]),
    (9, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η − ζ"),
        ((4, 9), "ζ"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − η − ζ"),
        ((2, 5), "χ + 2P3 − 4P6 + P9 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9"),
        ((1, 3), "2χ + 3P3 − P4 − P5 + P6 − P7 − P8 + P9 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + 3P3 + P4 − 2P5 + P7 − P8 − P9 + P10 − 2η + ζ"),
        ((2, 9), "−P3 − P6 + P8 + P9 − P10 + η − ζ"),
        ((1, 5), "P4 + P5 + 2P6 − P7 − P8 − P9 + P10 − η + ζ"),
    ]),
    (10, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η − ζ"),
        ((4, 9), "ζ"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − η − ζ"),
        ((2, 5), "χ + 2P3 − 4P6 + P9 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9"),
        ((1, 3), "2χ + 3P3 − 2P7 − P8 + P9 − P10 + P11"),
        ((3, 10), "−P4 − P5 + P6 + P7 + P10 − P11 − η"),
        ((2, 7), "P4 + P5 − P6 − P7 − P10 + P11 + 2η"),
        ((1, 4), "χ + 3P3 + P4 − 2P5 + P7 − P8 − P9 + P10 − 2η + ζ"),
        ((2, 9), "−P3 − P6 + P8 + P9 − P10 + η − ζ"),
        ((1, 5), "P4 + P5 + 2P6 − P7 − P8 − P9 + P10 − η + ζ"),
    ]),
    (11, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η − ζ − α"),
        ((5, 11), "α"),
        ((4, 9), "ζ − α"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − η − ζ"),
        ((2, 5), "χ + 2P3 − 4P6 + P9 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − β"),
        ((4, 11), "β"),
        ((1, 3), "2χ + 3P3 − 2P7 − P8 + P9 − P10 + P11 − β"),
        ((3, 10), "−P4 − P5 + P6 + P7 + P10 − P11 − η"),
        ((2, 7), "−χ + P4 + 2P5 − P7 − P9 − P10 + P12 + 2η + ζ + α + β"),
        ((3, 11), "χ − P5 − P6 + P9 + P11 − P12 − ζ − α − β"),
        ((1, 4), "3P3 + P4 − P5 + P6 + P7 − P8 − 2P9 + P10 − P11 + P12 − 2η + 2ζ + α + β"),
        ((2, 9), "−P3 − P6 + P8 + P9 − P10 + η − ζ"),
        ((1, 5), "P4 + P5 + 2P6 − P7 − P8 − P9 + P10 − η + ζ"),
    ]),
    (12, &[
        ((1, 2), "2χ − 3P3 + 2P4 − P5 + P6 − 2P7 + P8 + η − ζ − α"),
        ((5, 11), "α"),
        ((4, 9), "ζ − α"),
        ((3, 7), "2χ + P3 + P4 − P5 + P6 + P7 − 2P8 − P12 + P13 − 2η − ζ"),
        ((5, 12), "−χ − 2P3 − P4 + P5 + P8 + P12 − P13 + η"),
        ((2, 5), "2χ + 4P3 + P4 − P5 − 4P6 − P8 + P9 − P12 + P13"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − β"),
        ((4, 11), "β"),
        ((1, 3), "2χ + 3P3 − 2P7 − P8 + P9 − P10 + P11 − β"),
        ((3, 10), "−P4 − P5 + P6 + P7 + P10 − P11 − η"),
        ((2, 7), "−χ + P4 + 2P5 − P7 − P9 − P10 + P12 + 2η + ζ + α + β"),
        ((3, 11), "χ − P5 − P6 + P9 + P11 − P12 − ζ − α − β"),
        ((1, 4), "3P3 + P4 − P5 + P6 + P7 − P8 − 2P9 + P10 − P11 + P12 − 2η + 2ζ + α + β"),
        ((2, 9), "−P3 − P6 + P8 + P9 − P10 + η − ζ"),
        ((1, 5), "P4 + P5 + 2P6 − P7 − P8 − P9 + P10 − η + ζ"),
    ]),
];

const EPS_I: &[(i64, &str)] = &[
    // −3P₂ − P₃ + P₄ + P₅ + P₆ − P₇ − ε vanishes identically
    (6, "0"),
    (7, "χ − P3 + P6 + P7 − P8"),
    (8, "−P3 − P4 + P5 + P6 + P8 − P9"),
    (9, "−P3 − P6 + P8 + P9 − P10 + η"),
    (10, "−P4 − P5 + P6 + P7 + P10 − P11 − η"),
    (11, "χ − P5 − P6 + P9 + P11 − P12 − ζ"),
    (12, "−χ − 2P3 − P4 + P5 + P8 + P12 − P13 + η"),
];

const LEVELS_II: Raw = &[
    (0, &[
        ((1, 2), "5χ − 4P3 + P4"),
        ((1, 3), "4χ + 2P3 − 3P4 + P5"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1"),
        ((1, 6), "1"),
    ]),
    (5, &[
        ((1, 2), "3χ − 3P3 + P4 − 2P5 + P6 + 1"),
        ((2, 5), "2χ − P3 + 2P5 − P6 − 1"),
        ((1, 3), "2χ + 3P3 − 3P4 − P5 + P6 + 1"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1"),
        ((1, 6), "1"),
    ]),
    (7, &[
        ((1, 2), "2χ − 2P3 + P4 − 2P5 − P7 + P8 + 2 + η"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − 1 − η"),
        ((2, 5), "χ + 2P5 − 2P6 − P7 + P8 + η"),
        ((1, 3), "2χ + 3P3 − 3P4 − P5 + P6 + 1 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1 − η"),
        ((1, 6), "1"),
    ]),
    (8, &[
        ((1, 2), "2χ − 2P3 + P4 − 2P5 − P7 + P8 + 2 + η"),
        ((3, 7), "χ − P3 + P6 + P7 − P8 − 1 − η"),
        ((2, 5), "χ + P3 + P4 + P5 − 3P6 − P7 + P9 + 1 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − 1"),
        ((1, 3), "2χ + 4P3 − 2P4 − 2P5 − P8 + P9 + 2 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1 − η"),
        ((1, 6), "1"),
    ]),
    (9, &[
        ((1, 2), "2χ − 3P5 − P9 + P10 + 3"),
        ((4, 9), "−2P3 + P4 + P5 − P7 + P8 + P9 − P10 − 1 + η"),
        ((3, 7), "χ + P3 − P4 − P5 + P6 + 2P7 − 2P8 − P9 + P10 − 2η"),
        ((2, 5), "χ + P3 + P4 + P5 − 3P6 − P7 + P9 + 1 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − 1"),
        ((1, 3), "2χ + 4P3 − 2P4 − 2P5 − P8 + P9 + 2 − η"),
        ((2, 7), "η"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1 − η"),
        ((1, 6), "1"),
    ]),
    (10, &[
        ((1, 2), "2χ − 3P5 − P9 + P10 + 3"),
        ((4, 9), "−2P3 + P4 + P5 − P7 + P8 + P9 − P10 − 1 + η"),
        ((3, 7), "χ + P3 − P4 − P5 + P6 + 2P7 − 2P8 − P9 + P10 − 2η"),
        ((2, 5), "χ + P3 + P4 + P5 − 3P6 − P7 + P9 + 1 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − 1"),
        ((1, 3), "2χ + 5P3 − 2P4 − 2P5 − 2P6 − P8 + P9 − P10 + P11 + 4"),
        ((3, 10), "−P3 + 2P6 + P10 − P11 − 2 − η"),
        ((2, 7), "P3 − 2P6 − P10 + P11 + 2 + 2η"),
        ((1, 4), "χ + P3 + 2P4 − P5 − 1 − η"),
        ((1, 6), "1"),
    ]),
    (11, &[
        ((1, 2), "2χ − 3P5 − P9 + P10 + 3 − α"),
        ((5, 11), "α"),
        ((4, 9), "−2P3 + P4 + P5 − P7 + P8 + P9 − P10 − 1 + η − α"),
        ((3, 7), "χ + P3 − P4 − P5 + P6 + 2P7 − 2P8 − P9 + P10 − 2η"),
        ((2, 5), "χ + P3 + P4 + P5 − 3P6 − P7 + P9 + 1 + η"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − 1 − β"),
        ((4, 11), "β"),
        ((1, 3), "2χ + 5P3 − 2P4 − 2P5 − 2P6 − P8 + P9 − P10 + P11 + 4 − β"),
        ((3, 10), "−P3 + 2P6 + P10 − P11 − 2 − η"),
        ((2, 7), "−χ + P5 − 2P6 + P8 − 2P10 + 4 + 3η + α + β"),
        ((3, 11), "χ + P3 − P5 − P8 + P10 + P11 − 2 − η − α − β"),
        ((1, 4), "2P4 + P8 − P10 − P11 + 1 + α + β"),
        ((1, 6), "1"),
    ]),
    (12, &[
        ((1, 2), "2χ − 3P5 − P9 + P10 + 3 − α"),
        ((5, 11), "α"),
        ((4, 9), "−2P3 + P4 + P5 − P7 + P8 + P9 − P10 − 1 + η − α"),
        ((3, 7), "2χ + 4P3 − P4 − 3P5 + 3P7 − 3P8 − P9 + P10 + P13 + 1 − 3η"),
        ((5, 12), "−χ − 3P3 + 2P5 + P6 − P7 + P8 − P13 − 1 + η"),
        ((2, 5), "2χ + 4P3 + P4 − P5 − 4P6 − P8 + P9 + P13 + 2"),
        ((3, 8), "−P3 − P4 + P5 + P6 + P8 − P9 − 1 − β"),
        ((4, 11), "β"),
        ((1, 3), "2χ + 5P3 − 2P4 − 2P5 − 2P6 − P8 + P9 − P10 + P11 + 4 − β"),
        ((3, 10), "−P3 + 2P6 + P10 − P11 − 2 − η"),
        ((2, 7), "−χ + P5 − 2P6 + P8 − 2P10 + 4 + 3η + α + β"),
        ((3, 11), "χ + P3 − P5 − P8 + P10 + P11 − 2 − η − α − β"),
        ((1, 4), "2P4 + P8 − P10 − P11 + 1 + α + β"),
        ((1, 6), "1"),
    ]),
];

const EPS_II: &[(i64, &str)] = &[
    (5, "2χ − P3 + 2P5 − P6 − 1"),
    (6, "−P3 + P4 + P5 + P6 − P7 − 2"),
    (7, "χ − P3 + P6 + P7 − P8 − 1"),
    (8, "−P3 − P4 + P5 + P6 + P8 − P9 − 1"),
    (9, "−2P3 + P4 + P5 − P7 + P8 + P9 − P10 − 1 + η"),
    (10, "−P3 + 2P6 + P10 − P11 − 2 − η"),
    (11, "χ + P3 − P5 − P8 + P10 + P11 − 2 − η"),
    (12, "−χ − 3P3 + 2P5 + P6 − P7 + P8 − P13 − 1 + η"),
];

fn build(levels: Raw, eps: &[(i64, &str)]) -> Tables {
    let form = |s: &str| LinearForm::parse(s).unwrap_or_else(|e| panic!("table form `{s}`: {e}"));
    Tables {
        levels: levels
            .iter()
            .map(|(n, rows)| (*n, rows.iter().map(|((b, r), s)| (p(*b, *r), form(s))).collect()))
            .collect(),
        eps: eps
            .iter()
            .map(|(n, s)| (*n, form(s), if *n == 6 { EpsRule::Zero } else { EpsRule::NonNegative }))
            .collect(),
    }
}

/// The closed-form tables for one case.
pub fn tables(case: Case) -> &'static Tables {
    static I: OnceLock<Tables> = OnceLock::new();
    static II: OnceLock<Tables> = OnceLock::new();
    match case {
        Case::I => I.get_or_init(|| build(LEVELS_I, EPS_I)),
        Case::II => II.get_or_init(|| build(LEVELS_II, EPS_II)),
    }
}
