use baskets::{b_h, canonical_sequence, epsilon_n, p, unpack_to_level, Basket, LevelSet, Pair};

#[test]
fn level_set_differences() {
    let s9 = LevelSet::new(9).members(12);
    let s8 = LevelSet::new(8).members(12);
    let new: Vec<Pair> = s9.into_iter().filter(|x| !s8.contains(x)).collect();
    assert_eq!(new, vec![p(4, 9), p(2, 9)]);
    assert_eq!(LevelSet::new(4).members(6), vec![p(1, 2), p(1, 3), p(1, 4), p(1, 5), p(1, 6)]);
    assert_eq!(LevelSet::new(0).members(6), LevelSet::new(4).members(6));
}

#[test]
fn membership() {
    let s = LevelSet::new(12);
    assert!(s.contains(&p(5, 12)));
    assert!(s.contains(&p(1, 40)));
    assert!(s.contains(&p(4, 10)));
    assert!(!s.contains(&p(7, 16)));
    assert!(!s.contains(&p(5, 13)));
}

#[test]
fn neighbors() {
    assert_eq!(LevelSet::new(8).neighbors(&p(4, 9)).unwrap(), (p(1, 2), p(3, 7)));
    assert_eq!(LevelSet::new(8).neighbors(&p(2, 9)).unwrap(), (p(1, 4), p(1, 5)));
    assert_eq!(LevelSet::new(6).neighbors(&p(2, 7)).unwrap(), (p(1, 3), p(1, 4)));
    assert_eq!(LevelSet::new(12).neighbors(&p(7, 16)).unwrap(), (p(4, 9), p(3, 7)));
    assert_eq!(LevelSet::new(3).neighbors(&p(2, 9)).unwrap(), (p(1, 4), p(1, 5)));
}

#[test]
fn unpacking() {
    let one = |x: Pair| Basket::from_iter([x]);
    assert_eq!(unpack_to_level(&one(p(4, 9)), 8).unwrap(), Basket::from_iter([p(1, 2), p(3, 7)]));
    assert_eq!(unpack_to_level(&one(p(1, 2)), 5).unwrap(), one(p(1, 2)));
    // 4/9 is already in S⁽¹²⁾, so 7/16 splits as 4/9 + 3/7 rather than 1/2 + 2×3/7
    assert_eq!(unpack_to_level(&one(p(7, 16)), 12).unwrap(), Basket::from_iter([p(4, 9), p(3, 7)]));
    assert_eq!(unpack_to_level(&one(p(4, 10)), 12).unwrap(), Basket::from_weighted([(2, p(2, 5))]));
    assert_eq!(
        unpack_to_level(&one(p(10, 26)), 12).unwrap(),
        Basket::from_weighted([(2, p(2, 5)), (2, p(3, 8))])
    );
}

#[test]
fn b_h_lands_on_row_122() {
    let b12 = unpack_to_level(&b_h(), 12).unwrap();
    let expect = Basket::from_weighted([
        (9, p(1, 2)),
        (1, p(4, 9)),
        (2, p(3, 7)),
        (2, p(2, 5)),
        (2, p(3, 8)),
        (5, p(1, 3)),
        (1, p(2, 7)),
        (1, p(3, 11)),
        (1, p(1, 4)),
    ]);
    assert_eq!(b12, expect);
}

#[test]
fn epsilons() {
    assert_eq!(epsilon_n(&Basket::from_iter([p(2, 5)]), 5), Ok(1));
    for n in 1..=14 {
        assert_eq!(epsilon_n(&Basket::from_iter([p(1, 2)]), n), Ok(0));
    }
    assert_eq!(epsilon_n(&Basket::from_iter([p(7, 16)]), 12), Ok(0));
}

#[test]
fn sequence_levels() {
    let seq = canonical_sequence(&b_h(), 12).unwrap();
    let levels: Vec<i64> = seq.iter().map(|(n, _)| *n).collect();
    assert_eq!(levels, vec![0, 5, 6, 7, 8, 9, 10, 11, 12]);
    for (_, b) in &seq {
        assert_eq!(b.sigma(), 40);
    }
    assert!(seq[0].1.iter().all(|(x, _)| x.b == 1));
}
