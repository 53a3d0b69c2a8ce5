use baskets::enumerate::{bounds, coefficients, enumerate, validate_class, AlphaCap, Config, Filter};
use baskets::forms::LinearForm;
use baskets::{delta_from_profile, p, BasketError, Case, ClassRecord, PluriProfile, Q};

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn by_row(v: &[ClassRecord], row: usize) -> &ClassRecord {
    v.iter().find(|c| c.table_row == Some(row)).expect("row present")
}

#[test]
fn case_i_classes() {
    let v = enumerate(Case::I, &Config::default());
    assert_eq!(v.len(), 149);
    let r1 = by_row(&v, 1);
    assert_eq!(r1.b12.counts, [4, 0, 0, 2, 0, 2, 0, 0, 4, 0, 0, 0, 2, 0, 0]);
    assert_eq!(r1.k3, q(1, 210));
    let r122 = by_row(&v, 122);
    assert_eq!(r122.chi(), 4);
    assert_eq!(r122.b12.counts, [9, 0, 1, 2, 0, 2, 2, 0, 5, 0, 1, 1, 1, 0, 0]);
    assert_eq!(r122.k3, q(19, 3465));
    let mut rows: Vec<usize> = v.iter().map(|c| c.table_row.unwrap()).collect();
    rows.sort();
    assert_eq!(rows, (1..=149).collect::<Vec<_>>());
}

#[test]
fn case_ii_classes() {
    let v = enumerate(Case::II, &Config::default());
    let k: Vec<Q> = v.iter().map(|c| c.k3.clone()).collect();
    assert_eq!(k, vec![q(1, 420), q(1, 360)]);
    assert_eq!(v[0].b12.counts, [5, 0, 0, 1, 0, 1, 2, 0, 3, 0, 0, 0, 0, 0, 1]);
    assert_eq!(v[1].b12.counts, [4, 0, 1, 0, 0, 2, 1, 0, 4, 0, 0, 0, 0, 0, 1]);
}

#[test]
fn sorted_and_deterministic() {
    let a = enumerate(Case::I, &Config::default().jobs(1));
    let b = enumerate(Case::I, &Config::default().jobs(7));
    assert_eq!(a, b);
    let keys: Vec<_> = a.iter().map(|c| (c.chi(), c.p3_p11(), c.b12.counts)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn printed_bounds_lose_nothing() {
    for case in Case::ALL {
        let mut wide = Config::default();
        wide.printed_bounds = false;
        let w = enumerate(case, &wide);
        let n = enumerate(case, &Config::default());
        let key = |v: &[ClassRecord]| v.iter().map(|c| (c.chi(), c.p3_p11(), c.b12.counts)).collect::<Vec<_>>();
        assert_eq!(key(&w), key(&n));
    }
}

#[test]
fn relaxing_filters_gives_supersets() {
    let base = enumerate(Case::I, &Config::default());
    let keys = |v: &[ClassRecord]| v.iter().map(|c| (c.chi(), c.p3_p11(), c.b12.counts)).collect::<std::collections::BTreeSet<_>>();
    let k0 = keys(&base);
    for f in Filter::ALL {
        let v = enumerate(Case::I, &Config::default().without(f));
        assert!(keys(&v).is_superset(&k0), "{f}");
    }
    assert!(enumerate(Case::I, &Config::default().without(Filter::ProductRule)).len() > 149);
}

#[test]
fn filter_names() {
    assert_eq!("product-rule".parse::<Filter>(), Ok(Filter::ProductRule));
    assert_eq!("F5".parse::<Filter>(), Ok(Filter::Delta));
    assert!("nope".parse::<Filter>().is_err());
}

#[test]
fn every_class_is_consistent() {
    for case in Case::ALL {
        for c in enumerate(case, &Config::default()) {
            let d = validate_class(&c);
            assert!(d.ok(), "{:?}: {:?}", c.table_row, d.mismatches);
            let f = c.formal();
            assert_eq!(f.k_cubed(), c.k3);
            let chis = f.chi_table(13).unwrap();
            for m in 3..=13 {
                assert_eq!(chis[m - 2], c.profile.p[m], "chi_{m}");
            }
            for j in 3..=12 {
                assert_eq!(f.basket.delta(j as i64).unwrap(), delta_from_profile(&c.profile, j));
            }
            assert!(c.profile.check_regime().is_ok());
            assert!(c.profile.check_products().is_ok());
            for w in &c.witnesses {
                let prof = c.profile.clone().with_p13(w.p13).with_counts(w.eta, w.zeta, w.alpha, w.beta);
                let co = coefficients(&prof).unwrap();
                let b12: Vec<u64> = baskets::forms::slots(case)
                    .iter()
                    .map(|s| co.levels[&12].iter().find(|(x, _)| x == s).map_or(0, |(_, v)| *v as u64))
                    .collect();
                assert_eq!(b12, c.b12.counts.to_vec());
            }
        }
    }
}

#[test]
fn corrupted_record_is_caught() {
    let mut c = enumerate(Case::I, &Config::default()).remove(0);
    c.b12.counts[0] -= 1;
    let d = validate_class(&c);
    assert!(d.mismatches.iter().any(|m| m.starts_with("level 12")), "{:?}", d.mismatches);
}

#[test]
fn row_122_counts_are_packing_tallies() {
    let v = enumerate(Case::I, &Config::default());
    let c = by_row(&v, 122);
    let w = c.witnesses[0];
    assert_eq!(c.witnesses.len(), 1);
    let b12 = c.b12.to_basket();
    let at = |n, x| baskets::unpack_to_level(&b12, n).unwrap().weight(&x) as i64;
    assert_eq!(w.eta, at(7, p(2, 7)));
    assert_eq!(w.zeta, at(9, p(4, 9)));
    assert_eq!(w.alpha, at(11, p(5, 11)));
    assert_eq!(w.beta, at(11, p(4, 11)));
    assert_eq!((w.eta, w.zeta, w.alpha, w.beta), (2, 1, 0, 0));
}

#[test]
fn case_ii_row_1_coefficients() {
    let prof = PluriProfile::new(Case::II, 2, [0, 0, 1, 1, 0, 1, 0, 1, 1]).with_p13(1);
    let co = coefficients(&prof).unwrap();
    let l12: Vec<i64> = co.levels[&12].iter().map(|(_, v)| *v).collect();
    assert_eq!(l12, vec![5, 0, 0, 1, 0, 1, 2, 0, 3, 0, 0, 0, 0, 1]);
    assert_eq!(co.levels[&12].last().unwrap().0, p(1, 6));
    assert_eq!(co.eps[&6], 0);
}

#[test]
fn case_i_row_1_coefficients() {
    let prof = PluriProfile::new(Case::I, 2, [0; 9]);
    let co = coefficients(&prof).unwrap();
    let get = |s| co.levels[&12].iter().find(|(x, _)| *x == s).unwrap().1;
    assert_eq!([get(p(1, 2)), get(p(3, 7)), get(p(2, 5)), get(p(1, 3)), get(p(1, 4))], [4, 2, 2, 4, 2]);
}

#[test]
fn infeasible_profiles() {
    let prof = PluriProfile::new(Case::II, 2, [1, 0, 0, 1, 0, 0, 0, 0, 0]);
    assert!(matches!(coefficients(&prof), Err(BasketError::InfeasibleProfile(_))));
}

#[test]
fn parameter_bounds() {
    let b = bounds(Case::I, 5, &PluriProfile::new(Case::I, 5, [0, 0, 0, 1, 1, 1, 0, 1, 0]).p).unwrap();
    assert_eq!(b.p13, (0, 1));
    assert_eq!((b.eta, b.zeta, b.alpha, b.beta), (9, 9, AlphaCap::Zeta, 3));
    assert!(bounds(Case::I, 6, &[0; 14]).is_none());
    let b = bounds(Case::II, 3, &[0; 14]).unwrap();
    assert_eq!((b.eta, b.p13.1), (5, 1));
    assert!(bounds(Case::II, 4, &[0; 14]).is_none());
}

#[test]
fn linear_forms() {
    let f = LinearForm::parse("2χ − 3P3 + P13 − η + 4 + 2β").unwrap();
    assert_eq!(f.coef[0], 4);
    assert_eq!(f.coef[1], 2);
    assert_eq!(f.coef[2], -3);
    assert_eq!(f.coef[12], 1);
    assert_eq!(f.depth(), 4);
    assert!(LinearForm::parse("P14").is_err());
    assert!(LinearForm::parse("").is_err());
}
