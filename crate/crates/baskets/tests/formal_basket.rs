use baskets::{b_h, delta_from_profile, p, solve_b0, Basket, BasketError, Case, FormalBasket, PluriProfile, Q};

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn row1() -> Basket {
    Basket::from_weighted([(4, p(1, 2)), (2, p(3, 7)), (2, p(2, 5)), (4, p(1, 3)), (2, p(1, 4))])
}

fn fb(b: Basket, chi: i64) -> FormalBasket {
    FormalBasket::new(b, chi, 0).unwrap()
}

#[test]
fn volumes() {
    assert_eq!(fb(Basket::new(), 1).k_cubed(), q(6, 1));
    assert_eq!(fb(b_h(), 4).k_cubed(), q(31, 48048));
    assert_eq!(fb(row1(), 2).k_cubed(), q(1, 210));
    assert_eq!(FormalBasket::new(Basket::new(), 0, 3).unwrap().k_cubed(), q(6, 1));
}

#[test]
fn chi_values() {
    let h = fb(b_h(), 4);
    assert_eq!(h.chi_m(3), Ok(0));
    assert_eq!(h.chi_m(12), Ok(2));
    assert_eq!(fb(Basket::new(), 1).chi_m(2), Ok(0));
    assert_eq!(h.chi_m(1), Err(BasketError::ChiIndex(1)));
    assert_eq!(h.chi_table(13).unwrap(), vec![0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 2, 1]);
}

#[test]
fn chi_recursion_by_hand() {
    // χ₄ − χ₃ = (9/2)(K³ − σ′) + (3/2)σ − 2χ̃ + Δ³
    let f = fb(row1(), 2);
    let a = f.k3_minus_sigma_prime();
    let s = f.basket.sigma();
    let d3 = f.basket.delta(3).unwrap();
    assert_eq!(f.chi_m(4).unwrap() - f.chi_m(3).unwrap(), (9 * a + 3 * s) / 2 - 4 + d3);
}

#[test]
fn negative_chi2_rejected() {
    assert_eq!(FormalBasket::new(Basket::new(), 1, -1), Err(BasketError::NegativeChi2(-1)));
}

#[test]
fn minimal_positive() {
    assert!(fb(Basket::new(), 1).is_minimal_positive());
    assert!(fb(row1(), 2).is_minimal_positive());
    assert!(!fb(Basket::new(), -1).is_minimal_positive());
    // (7,16),(3,7) ≻ (10,23) keeps every Δʲ with j ≤ 12 and leaves K³ = 71/276276 > 0
    let h = fb(b_h(), 4);
    let child = fb(h.basket.pack(p(7, 16), p(3, 7)).unwrap(), 4);
    assert_eq!(child.k_cubed(), q(71, 276276));
    assert!(!h.is_minimal_positive());
}

#[test]
fn formal_text() {
    let f = FormalBasket::parse("chi = 4\n# B_H\n9 x (1,2)\n(7,16)\n(3,7)\n2 x (5,13)\n5x(1,3)\n(2,7)\n(3,11)\n(1,4)\n").unwrap();
    assert_eq!(f, fb(b_h(), 4));
    assert_eq!(FormalBasket::parse(&f.to_text()).unwrap(), f);
    assert_eq!(FormalBasket::parse("").unwrap().chi, 0);
    assert!(matches!(FormalBasket::parse("chi = x"), Err(BasketError::Parse { line: 1, .. })));
    assert!(matches!(FormalBasket::parse("chi2 = -1"), Err(BasketError::NegativeChi2(-1))));
}

/// The printed Δ table, used as an independent oracle for the recursion.
fn table_3_1(chi: i64, pm: &[i64; 14], n: usize) -> i64 {
    let (a, b) = [(5, 4), (14, 6), (27, 10), (44, 15), (65, 21), (90, 28), (119, 36), (152, 45), (189, 55), (230, 66)][n - 3];
    let tail = if n == 3 { pm[4] } else { pm[n + 1] - pm[n] };
    a * chi - b * pm[3] + tail
}

#[test]
fn delta_table() {
    let prof = PluriProfile::new(Case::I, 2, [0; 9]);
    assert_eq!(delta_from_profile(&prof, 3), 10);
    assert_eq!(delta_from_profile(&prof, 12), 458);
    let prof = PluriProfile::new(Case::I, 2, [0, 0, 1, 1, 0, 1, 0, 1, 1]).with_p13(1);
    assert_eq!(delta_from_profile(&prof, 5), 54);
    assert_eq!(prof.sigma(), 20);
    assert_eq!(prof.tau(), 8);
    for chi in 2..=5 {
        for bits in 0..2048u32 {
            let mut p9 = [0; 9];
            for (i, v) in p9.iter_mut().enumerate() {
                *v = ((bits >> i) & 1) as i64;
            }
            let prof = PluriProfile::new(Case::I, chi, p9).with_p13((bits >> 9) as i64);
            for n in 3..=12 {
                assert_eq!(delta_from_profile(&prof, n), table_3_1(chi, &prof.p, n), "n={n}");
            }
        }
    }
}

#[test]
fn level_zero() {
    let prof = PluriProfile::new(Case::II, 2, [0, 0, 1, 1, 0, 1, 0, 1, 1]);
    let b0 = solve_b0(&prof).unwrap();
    assert_eq!(b0, Basket::from_weighted([(10, p(1, 2)), (9, p(1, 3)), (0, p(1, 4)), (1, p(1, 6))]));
    let prof = PluriProfile::new(Case::I, 2, [0; 9]);
    assert_eq!(solve_b0(&prof).unwrap(), Basket::from_weighted([(10, p(1, 2)), (8, p(1, 3)), (2, p(1, 4))]));
    assert_eq!(prof.r(), 0);
    let bad = PluriProfile::new(Case::I, 0, [1, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert!(matches!(solve_b0(&bad), Err(BasketError::InfeasibleProfile(_))));
    assert!(bad.check_regime().is_err());
}
