//! Minimal positive descendants of a formal basket under packing.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::basket::{sigma_prime_drop, Basket};
use crate::enumerate::ClassRecord;
use crate::formal::FormalBasket;
use crate::level::LevelSet;
use crate::pair::Pair;
use crate::Q;

/// Packings must keep `Δʲ` for `2 ≤ j ≤ DEFAULT_LEVEL`.
pub const DEFAULT_LEVEL: i64 = 12;

/// Every way to merge two element copies, with the literal merged pair.
pub fn all_packings(basket: &Basket) -> Vec<(Pair, Pair, Basket)> {
    let entries: Vec<(Pair, u64)> = basket.iter().collect();
    let mut out = Vec::new();
    for (i, &(p1, w1)) in entries.iter().enumerate() {
        for &(p2, _) in &entries[i..] {
            if p1 == p2 && w1 < 2 {
                continue;
            }
            out.push((p1, p2, basket.pack(p1, p2).expect("both present")));
        }
    }
    out
}

fn keeps_deltas(p1: &Pair, p2: &Pair, level: i64) -> bool {
    let m = p1.merge(p2);
    (2..=level).all(|j| p1.delta_unchecked(j) + p2.delta_unchecked(j) == m.delta_unchecked(j))
}

/// Packings that change `K³`: two distinct fractions whose merge keeps every
/// `Δʲ` with `j ≤ level`. Merging equal fractions leaves σ, σ′ and every
/// `Δʲ` alone, so it is not a move. Results are normalized.
pub fn admissible_packings(basket: &Basket, level: i64) -> Vec<(Pair, Pair, Basket)> {
    let entries: Vec<(Pair, u64)> = basket.iter().collect();
    let mut out = Vec::new();
    for (i, &(p1, _)) in entries.iter().enumerate() {
        for &(p2, _) in &entries[i + 1..] {
            if p1.same_fraction(&p2) || !keeps_deltas(&p1, &p2, level) {
                continue;
            }
            let merged = p1.merge(&p2);
            if 2 * merged.b > merged.r {
                // outside the domain of Δⁿ; cannot happen for fractions ≤ 1/2
                continue;
            }
            out.push((p1, p2, basket.pack(p1, p2).expect("both present").normalized()));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub left: Pair,
    pub right: Pair,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{} ≻ {}", self.left, self.right, self.left.merge(&self.right))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descendant {
    pub basket: Basket,
    pub k3: Q,
    /// One packing sequence from the root.
    pub steps: Vec<Step>,
    /// The steps grouped into `k(b,r),k(b′,r′) ≻ k(b″,r″)` blocks.
    pub trace: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub level: i64,
    pub memoize: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { level: DEFAULT_LEVEL, memoize: true }
    }
}

/// Describes `basket` by the merged pairs it holds outside `S⁽ˡᵉᵛᵉˡ⁾`, each
/// written as the level-`level` pairs it unpacks into.
pub fn render_trace(basket: &Basket, level: i64) -> String {
    let set = LevelSet::new(level);
    let mut groups = Vec::new();
    for (q, w) in basket.iter() {
        if set.contains(&q) {
            continue;
        }
        let Ok((hi, lo)) = set.neighbors(&q) else { continue };
        let a = (q.b * lo.r - q.r * lo.b) as u64 * w;
        let c = (q.r * hi.b - q.b * hi.r) as u64 * w;
        let k = |n: u64| if n == 1 { String::new() } else { n.to_string() };
        groups.push(format!("{}{hi},{}{lo} ≻ {}{q}", k(a), k(c), k(w)));
    }
    groups.join("; ")
}

/// Depth-first search over packing sequences. A basket is emitted when
/// `K³ > 0` and every admissible packing of it has `K³ ≤ 0`. Sorted by `K³`,
/// then basket.
pub fn minimal_positive_descendants(f: &FormalBasket) -> Vec<Descendant> {
    minimal_positive_descendants_with(f, SearchOptions::default())
}

pub fn minimal_positive_descendants_with(f: &FormalBasket, opts: SearchOptions) -> Vec<Descendant> {
    let mut found = BTreeMap::new();
    let mut seen = HashSet::new();
    let mut steps = Vec::new();
    let k3 = f.k_cubed();
    if k3 > Q::zero() {
        visit(&f.basket.normalized(), k3, &mut steps, &mut seen, &mut found, opts);
    }
    let mut out: Vec<Descendant> = found
        .into_iter()
        .map(|(basket, (k3, steps))| {
            let trace = render_trace(&basket, opts.level);
            Descendant { basket, k3, steps, trace }
        })
        .collect();
    out.sort_by(|a, b| a.k3.cmp(&b.k3).then_with(|| a.basket.cmp(&b.basket)));
    out
}

fn visit(
    basket: &Basket,
    k3: Q,
    steps: &mut Vec<Step>,
    seen: &mut HashSet<Basket>,
    found: &mut BTreeMap<Basket, (Q, Vec<Step>)>,
    opts: SearchOptions,
) {
    if opts.memoize && !seen.insert(basket.clone()) {
        return;
    }
    let mut positive = Vec::new();
    for (p1, p2, child) in admissible_packings(basket, opts.level) {
        let drop = sigma_prime_drop(&p1, &p2);
        assert!(drop > Q::zero(), "distinct fractions must lower K^3");
        let ck = &k3 - drop;
        if ck > Q::zero() {
            positive.push((Step { left: p1, right: p2 }, child, ck));
        }
    }
    if positive.is_empty() {
        found.entry(basket.clone()).or_insert_with(|| (k3, steps.clone()));
        return;
    }
    for (step, child, ck) in positive {
        steps.push(step);
        visit(&child, ck, steps, seen, found, opts);
        steps.pop();
    }
}

/// Descendants of every class, in input order.
pub fn minimize_all(classes: &[ClassRecord], jobs: Option<usize>) -> Vec<Vec<Descendant>> {
    let run = || -> Vec<Vec<Descendant>> {
        classes.par_iter().map(|c| minimal_positive_descendants(&c.formal())).collect()
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalMinimum {
    pub k3: Q,
    /// `(class index, descendant)` for every attaining descendant.
    pub witnesses: Vec<(usize, Descendant)>,
}

/// Smallest `K³` over all descendants; `None` if there are none.
pub fn global_minimum(descendants: &[Vec<Descendant>]) -> Option<GlobalMinimum> {
    let k3 = descendants.iter().flatten().map(|d| &d.k3).min()?.clone();
    let witnesses = descendants
        .iter()
        .enumerate()
        .flat_map(|(i, ds)| ds.iter().filter(|d| d.k3 == k3).map(move |d| (i, d.clone())))
        .collect();
    Some(GlobalMinimum { k3, witnesses })
}
