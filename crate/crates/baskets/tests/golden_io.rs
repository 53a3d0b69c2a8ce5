use baskets::enumerate::{enumerate, Config};
use baskets::golden::{self, approximates, GoldenError, GoldenSet, VerifyReport, FILES};
use baskets::minimize::minimize_all;
use baskets::report::{fmt_q, parse_q, write_classes, write_descendants, Format};
use baskets::{Basket, Case, Q};

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn verify_with(g: &GoldenSet) -> VerifyReport {
    let mut rep = VerifyReport::default();
    for case in Case::ALL {
        golden::verify(g, case, &enumerate(case, &Config::default()), None, &mut rep);
    }
    rep
}

#[test]
fn embedded_tables_match() {
    let rep = verify_with(GoldenSet::embedded());
    assert!(rep.passed(), "{:#?}", rep.table_diffs);
    assert_eq!(rep.accepted.len(), 6);
}

#[test]
fn shipped_directory_matches_embedded() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden");
    assert_eq!(&GoldenSet::load_dir(&dir).unwrap(), GoldenSet::embedded());
}

#[test]
fn edited_volume_is_one_diff() {
    let mut g = GoldenSet::embedded().clone();
    g.case_i[41].k3 = "1/2".into();
    let rep = verify_with(&g);
    assert_eq!(rep.table_diffs.len(), 1, "{:?}", rep.table_diffs);
    assert!(rep.table_diffs[0].starts_with("K^3 mismatch case-i row 42"));
}

#[test]
fn removed_row_is_missing_and_extra() {
    let mut g = GoldenSet::embedded().clone();
    g.case_ii.remove(0);
    let rep = verify_with(&g);
    assert_eq!(rep.table_diffs.len(), 1);
    assert!(rep.table_diffs[0].starts_with("extra case-ii class"));
    let mut g = GoldenSet::embedded().clone();
    g.case_ii[0].counts[0] += 1;
    let rep = verify_with(&g);
    assert_eq!(rep.table_diffs.len(), 2);
}

#[test]
fn missing_directory() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(GoldenSet::load_dir(dir.path()), Err(GoldenError::Missing(_))));
    std::fs::write(dir.path().join(FILES[0]), "row\nx\n").unwrap();
    for f in &FILES[1..] {
        std::fs::write(dir.path().join(f), "").unwrap();
    }
    assert!(matches!(GoldenSet::load_dir(dir.path()), Err(GoldenError::Malformed { .. })));
}

#[test]
fn descendant_comparison_runs() {
    let g = GoldenSet::embedded();
    let classes = enumerate(Case::II, &Config::default());
    let desc = minimize_all(&classes, None);
    let mut rep = VerifyReport::default();
    golden::verify(g, Case::II, &classes, Some(&desc), &mut rep);
    assert!(rep.passed());
    // row 2.a is found; row 1 carries an unprinted descendant
    assert!(rep.descendant_diffs.iter().all(|d| d.starts_with("case-ii row 1")), "{:?}", rep.descendant_diffs);
}

#[test]
fn rationals() {
    assert_eq!(parse_q("31/48048"), Some(q(31, 48048)));
    assert_eq!(parse_q("6"), Some(q(6, 1)));
    assert_eq!(parse_q("2/4"), Some(q(1, 2)));
    assert_eq!(parse_q("1/0"), None);
    assert_eq!(fmt_q(&q(6, 1)), "6/1");
    assert_eq!(fmt_q(&q(-2, 4)), "-1/2");
    assert!(approximates(&q(42, 10303), &q(113, 27720)));
    assert!(approximates(&q(27, 22733), &q(107, 90090)));
    assert!(!approximates(&q(1, 1000), &q(1, 1001)));
}

fn csv_rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let h: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    rd.records().map(|r| h.iter().cloned().zip(r.unwrap().iter().map(String::from)).collect()).collect()
}

fn flatten(v: &serde_json::Value, out: &mut Vec<(String, String)>) {
    for (k, x) in v.as_object().unwrap() {
        match x {
            serde_json::Value::Object(_) => flatten(x, out),
            serde_json::Value::String(s) => out.push((k.clone(), s.clone())),
            serde_json::Value::Null => out.push((k.clone(), String::new())),
            other => out.push((k.clone(), other.to_string())),
        }
    }
}

#[test]
fn csv_and_json_agree() {
    for case in Case::ALL {
        let classes = enumerate(case, &Config::default());
        let desc = minimize_all(&classes, None);
        for tables in [false, true] {
            let (mut c, mut j) = (Vec::new(), Vec::new());
            if tables {
                write_descendants(&mut c, Format::Csv, &classes, &desc).unwrap();
                write_descendants(&mut j, Format::Json, &classes, &desc).unwrap();
            } else {
                write_classes(&mut c, Format::Csv, &classes).unwrap();
                write_classes(&mut j, Format::Json, &classes).unwrap();
            }
            let c = String::from_utf8(c).unwrap();
            assert!(!c.contains('\r'));
            let rows = csv_rows(&c);
            let json: Vec<serde_json::Value> = serde_json::from_slice(&j).unwrap();
            assert_eq!(rows.len(), json.len());
            for (r, v) in rows.iter().zip(&json) {
                let mut flat = Vec::new();
                flatten(v, &mut flat);
                let mut r = r.clone();
                r.sort();
                flat.sort();
                assert_eq!(r, flat);
            }
        }
    }
}

#[test]
fn table_baskets_round_trip() {
    for case in Case::ALL {
        for c in enumerate(case, &Config::default()) {
            let b = c.b12.to_basket();
            assert_eq!(Basket::parse(&b.to_text()).unwrap(), b);
            assert_eq!(baskets::CoeffVector::from_basket(case, &b), Some(c.b12.clone()));
        }
    }
}

#[test]
fn output_is_byte_identical() {
    let run = |jobs| {
        let mut out = Vec::new();
        write_classes(&mut out, Format::Csv, &enumerate(Case::I, &Config::default().jobs(jobs))).unwrap();
        out
    };
    assert_eq!(run(1), run(5));
}
