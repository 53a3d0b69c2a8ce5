//! Pruned enumeration of level-12 classes for δ = 12, `P₁₂ = 2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::basket::Basket;
use crate::error::{BasketError, Result};
use crate::forms::{self, slots, vars, EpsRule, LinearForm, NVARS};
use crate::level::{epsilon_n, unpack_to_level};
use crate::pair::Pair;
use crate::profile::{b0_counts, delta_from_profile, Case, PluriProfile};
use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    /// F1: every coefficient at every level is non-negative.
    NonNegative,
    /// F2: every `εₙ` is non-negative (`ε₆` vanishes), and `ε ≥ 0` in case (i).
    Epsilon,
    /// F3: the δ = 12 regime on `χ` and `Pₘ`.
    Regime,
    /// F4: `Pₐ₊ᵦ ≥ Pₐ·Pᵦ`.
    ProductRule,
    /// F5: `Δʲ(B⁽¹²⁾)` agrees with the profile for `3 ≤ j ≤ 12`.
    Delta,
}

impl Filter {
    pub const ALL: [Filter; 5] =
        [Filter::NonNegative, Filter::Epsilon, Filter::Regime, Filter::ProductRule, Filter::Delta];

    pub fn name(&self) -> &'static str {
        match self {
            Filter::NonNegative => "nonneg",
            Filter::Epsilon => "epsilon",
            Filter::Regime => "regime",
            Filter::ProductRule => "product-rule",
            Filter::Delta => "delta",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == s || format!("f{}", *f as usize + 1) == s.to_lowercase())
            .ok_or_else(|| {
                let names: Vec<_> = Filter::ALL.iter().map(|f| f.name()).collect();
                format!("unknown filter `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    disabled: BTreeSet<usize>,
    /// Use the printed parameter bounds; otherwise a wide box.
    pub printed_bounds: bool,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config { disabled: BTreeSet::new(), printed_bounds: true, jobs: None }
    }
}

impl Config {
    pub fn without(mut self, f: Filter) -> Config {
        self.disabled.insert(f as usize);
        self
    }

    pub fn enabled(&self, f: Filter) -> bool {
        !self.disabled.contains(&(f as usize))
    }

    pub fn jobs(mut self, n: usize) -> Config {
        self.jobs = Some(n);
        self
    }
}

/// Cap on α: it may depend on ζ (case i) or η (case ii).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaCap {
    Zeta,
    EtaPlus(i64),
    Fixed(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub p13: (i64, i64),
    pub eta: i64,
    pub zeta: i64,
    pub alpha: AlphaCap,
    pub beta: i64,
}

impl Bounds {
    pub fn alpha_max(&self, eta: i64, zeta: i64) -> i64 {
        match self.alpha {
            AlphaCap::Zeta => zeta,
            AlphaCap::EtaPlus(k) => eta + k,
            AlphaCap::Fixed(k) => k,
        }
    }
}

/// Parameter ranges once `χ` and `P₃..P₁₁` are fixed, or `None` if empty.
pub fn bounds(case: Case, chi: i64, pm: &[i64; 14]) -> Option<Bounds> {
    let b = match case {
        Case::I => {
            if chi > 5 {
                return None;
            }
            let hi = (-chi - 2 * pm[3] - 2 * pm[4] + pm[6] + pm[7] + pm[8] + pm[10] - pm[11] + 2)
                .min(-chi + 6);
            Bounds { p13: (0, hi), eta: chi + 4, zeta: chi + 4, alpha: AlphaCap::Zeta, beta: 3 }
        }
        Case::II => {
            if chi > 3 {
                return None;
            }
            Bounds { p13: (0, -chi + 4), eta: chi + 2, zeta: 0, alpha: AlphaCap::EtaPlus(3), beta: 2 }
        }
    };
    (b.p13.0 <= b.p13.1).then_some(b)
}

/// A generous box used to check that the printed bounds lose nothing.
pub fn wide_bounds(case: Case) -> Bounds {
    let zeta = if case == Case::I { 12 } else { 0 };
    Bounds { p13: (0, 12), eta: 12, zeta, alpha: AlphaCap::Fixed(12), beta: 12 }
}

pub fn chi_range(case: Case) -> std::ops::RangeInclusive<i64> {
    match case {
        Case::I => 2..=5,
        Case::II => 2..=3,
    }
}

/// Level-12 counts in slot order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffVector {
    pub case: Case,
    pub counts: [u64; 15],
}

impl CoeffVector {
    pub fn to_basket(&self) -> Basket {
        Basket::from_weighted(self.counts.iter().zip(slots(self.case)).map(|(w, p)| (*w, *p)))
    }

    /// Reads a level-12 basket back into slots; `None` if it uses other pairs.
    pub fn from_basket(case: Case, basket: &Basket) -> Option<CoeffVector> {
        let s = slots(case);
        let mut counts = [0; 15];
        for (p, w) in basket.normalized().iter() {
            counts[s.iter().position(|q| *q == p)?] = w;
        }
        Some(CoeffVector { case, counts })
    }
}

impl fmt::Display for CoeffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

/// One `(P₁₃, η, ζ, α, β)` that produces a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub p13: i64,
    pub eta: i64,
    pub zeta: i64,
    pub alpha: i64,
    pub beta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    /// Profile evaluated at the first witness.
    pub profile: PluriProfile,
    pub b12: CoeffVector,
    pub k3: Q,
    /// Every witness mapping to this class, ascending.
    pub witnesses: Vec<Witness>,
    /// Row number in the reference table, when the class appears there.
    pub table_row: Option<usize>,
}

impl ClassRecord {
    pub fn case(&self) -> Case {
        self.profile.case
    }

    pub fn chi(&self) -> i64 {
        self.profile.chi
    }

    /// `P₃..P₁₁`.
    pub fn p3_p11(&self) -> [i64; 9] {
        self.profile.p[3..12].try_into().expect("nine entries")
    }

    pub fn formal(&self) -> crate::formal::FormalBasket {
        crate::formal::FormalBasket { basket: self.b12.to_basket(), chi: self.chi(), chi2: 0 }
    }

    /// `case-x row N` with the reference row number, or the enumeration index.
    pub fn label(&self, index: usize) -> String {
        match self.table_row {
            Some(r) => format!("case-{} row {r}", self.case()),
            None => format!("case-{} class #{index}", self.case()),
        }
    }
}

/// Raw closed-form values at every tabulated level, and every `εₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficients {
    pub levels: BTreeMap<i64, Vec<(Pair, i64)>>,
    pub eps: BTreeMap<i64, i64>,
}

/// Evaluates every closed form. Fails with the first negative coefficient
/// or `εₙ` (or non-zero `ε₆`).
pub fn coefficients(profile: &PluriProfile) -> Result<Coefficients> {
    let c = raw_coefficients(profile);
    for (n, row) in &c.levels {
        if let Some((p, v)) = row.iter().find(|(_, v)| *v < 0) {
            return Err(BasketError::InfeasibleProfile(format!("n{n}_{p} = {v} < 0")));
        }
    }
    for (n, form, rule) in &forms::tables(profile.case).eps {
        let v = form.eval(&vars(profile));
        if (*rule == EpsRule::NonNegative && v < 0) || (*rule == EpsRule::Zero && v != 0) {
            return Err(BasketError::InfeasibleProfile(format!("eps{n} = {v}")));
        }
    }
    Ok(c)
}

pub fn raw_coefficients(profile: &PluriProfile) -> Coefficients {
    let x = vars(profile);
    let t = forms::tables(profile.case);
    Coefficients {
        levels: t
            .levels
            .iter()
            .map(|(n, row)| (*n, row.iter().map(|(p, f)| (*p, f.eval(&x))).collect()))
            .collect(),
        eps: t.eps.iter().map(|(n, f, _)| (*n, f.eval(&x))).collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Coef,
    Coef12,
    Eps(EpsRule),
}

/// Table checks grouped by the deepest of η, ζ, α, β they involve.
struct Staged {
    by_depth: [Vec<(LinearForm, Kind)>; 5],
    b12: Vec<LinearForm>,
}

fn staged(case: Case) -> Staged {
    let t = forms::tables(case);
    let mut by_depth: [Vec<(LinearForm, Kind)>; 5] = Default::default();
    for (n, row) in &t.levels {
        for (_, f) in row {
            let kind = if *n == 12 { Kind::Coef12 } else { Kind::Coef };
            by_depth[f.depth()].push((f.clone(), kind));
        }
    }
    for (_, f, rule) in &t.eps {
        by_depth[f.depth()].push((f.clone(), Kind::Eps(*rule)));
    }
    let s = slots(case);
    let row12 = t.level(12).expect("level 12 table");
    let b12 = s
        .iter()
        .map(|p| {
            row12.iter().find(|(q, _)| q == p).map(|(_, f)| f.clone()).unwrap_or(LinearForm { coef: [0; NVARS] })
        })
        .collect();
    Staged { by_depth, b12 }
}

impl Staged {
    fn pass(&self, depth: usize, x: &[i64; NVARS], cfg: &Config) -> bool {
        self.by_depth[depth].iter().all(|(f, kind)| match kind {
            Kind::Coef12 => f.eval(x) >= 0,
            Kind::Coef => !cfg.enabled(Filter::NonNegative) || f.eval(x) >= 0,
            Kind::Eps(rule) => {
                !cfg.enabled(Filter::Epsilon)
                    || match rule {
                        EpsRule::NonNegative => f.eval(x) >= 0,
                        EpsRule::Zero => f.eval(x) == 0,
                    }
            }
        })
    }
}

type Key = (i64, [i64; 9], [u64; 15]);

fn shard(case: Case, chi: i64, bits: u32, st: &Staged, cfg: &Config) -> Vec<(Key, Witness, Q)> {
    let mut out = Vec::new();
    let mut p9 = [0i64; 9];
    for (i, v) in p9.iter_mut().enumerate() {
        *v = ((bits >> (8 - i)) & 1) as i64;
    }
    let mut prof = PluriProfile::new(case, chi, p9);
    if cfg.enabled(Filter::Regime) && prof.check_regime().is_err() {
        return out;
    }
    let bd = if cfg.printed_bounds {
        match bounds(case, chi, &prof.p) {
            Some(b) => b,
            None => return out,
        }
    } else {
        wide_bounds(case)
    };
    if cfg.enabled(Filter::NonNegative) && b0_counts(&prof).iter().any(|&c| c < 0) {
        return out;
    }
    if cfg.enabled(Filter::Epsilon) && case == Case::I && prof.epsilon() < 0 {
        return out;
    }
    let zeta_max = if case == Case::II { 0 } else { bd.zeta };
    for p13 in bd.p13.0..=bd.p13.1 {
        prof.p[13] = p13;
        if cfg.enabled(Filter::ProductRule) && prof.check_products().is_err() {
            continue;
        }
        let mut x = vars(&prof);
        if !st.pass(0, &x, cfg) {
            continue;
        }
        for eta in 0..=bd.eta {
            x[13] = eta;
            if !st.pass(1, &x, cfg) {
                continue;
            }
            for zeta in 0..=zeta_max {
                x[14] = zeta;
                if !st.pass(2, &x, cfg) {
                    continue;
                }
                for alpha in 0..=bd.alpha_max(eta, zeta) {
                    x[15] = alpha;
                    if !st.pass(3, &x, cfg) {
                        continue;
                    }
                    for beta in 0..=bd.beta {
                        x[16] = beta;
                        if !st.pass(4, &x, cfg) {
                            continue;
                        }
                        let vals: Vec<i64> = st.b12.iter().map(|f| f.eval(&x)).collect();
                        if vals.iter().any(|&v| v < 0) {
                            continue;
                        }
                        let mut counts = [0u64; 15];
                        for (c, v) in counts.iter_mut().zip(&vals) {
                            *c = *v as u64;
                        }
                        let b12 = CoeffVector { case, counts };
                        let basket = b12.to_basket();
                        if cfg.enabled(Filter::Delta)
                            && !(3..=12).all(|j| basket.delta(j as i64).ok() == Some(delta_from_profile(&prof, j)))
                        {
                            continue;
                        }
                        let f = crate::formal::FormalBasket { basket, chi, chi2: 0 };
                        let k3 = f.k_cubed();
                        if k3 <= Q::zero() {
                            continue;
                        }
                        let w = Witness { p13, eta, zeta, alpha, beta };
                        out.push(((chi, p9, counts), w, k3));
                    }
                }
            }
        }
    }
    out
}

/// All classes of one case, deduplicated on `(χ, P₃..P₁₁, B⁽¹²⁾)` and sorted
/// by that key.
pub fn enumerate(case: Case, cfg: &Config) -> Vec<ClassRecord> {
    let st = staged(case);
    let shards: Vec<(i64, u32)> = chi_range(case).flat_map(|c| (0..512u32).map(move |b| (c, b))).collect();
    let run = || -> Vec<Vec<(Key, Witness, Q)>> {
        shards.par_iter().map(|&(chi, bits)| shard(case, chi, bits, &st, cfg)).collect()
    };
    let found = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut merged: BTreeMap<Key, (BTreeSet<Witness>, Q)> = BTreeMap::new();
    for (key, w, k3) in found.into_iter().flatten() {
        let e = merged.entry(key).or_insert_with(|| (BTreeSet::new(), k3.clone()));
        assert_eq!(e.1, k3, "K^3 depends only on the basket and chi");
        e.0.insert(w);
    }
    let mut records: Vec<ClassRecord> = merged
        .into_iter()
        .map(|((chi, p9, counts), (ws, k3))| {
            let witnesses: Vec<Witness> = ws.into_iter().collect();
            let w = witnesses[0];
            let profile =
                PluriProfile::new(case, chi, p9).with_p13(w.p13).with_counts(w.eta, w.zeta, w.alpha, w.beta);
            ClassRecord { profile, b12: CoeffVector { case, counts }, k3, witnesses, table_row: None }
        })
        .collect();
    crate::golden::annotate_table_rows(&mut records);
    records
}

/// Outcome of [`validate_class`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub mismatches: Vec<String>,
}

impl Diagnostics {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes every tabulated level and `εₙ` two ways: from the closed forms
/// at the record's profile, and by unpacking its level-12 basket.
pub fn validate_class(record: &ClassRecord) -> Diagnostics {
    let mut d = Diagnostics::default();
    let b12 = record.b12.to_basket();
    let c = raw_coefficients(&record.profile);
    for (n, row) in &c.levels {
        if let Some((p, v)) = row.iter().find(|(_, v)| *v < 0) {
            d.mismatches.push(format!("level {n}: closed form gives {p} count {v}"));
            continue;
        }
        let closed = Basket::from_weighted(row.iter().map(|(p, v)| (*v as u64, *p)));
        let target = if *n == 12 { Ok(b12.clone()) } else { unpack_to_level(&b12, *n) };
        match target {
            Ok(t) if t == closed => {}
            Ok(t) => d.mismatches.push(format!("level {n}: closed form {closed} vs unpacked {t}")),
            Err(e) => d.mismatches.push(format!("level {n}: {e}")),
        }
    }
    for (n, v) in &c.eps {
        match epsilon_n(&b12, *n) {
            Ok(e) if e == *v => {}
            Ok(e) => d.mismatches.push(format!("eps{n}: closed form {v} vs operator {e}")),
            Err(e) => d.mismatches.push(format!("eps{n}: {e}")),
        }
    }
    d
}
