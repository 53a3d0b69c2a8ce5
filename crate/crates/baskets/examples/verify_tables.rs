use baskets::enumerate::{enumerate, Config};
use baskets::golden::{verify, GoldenSet, VerifyReport};
use baskets::minimize::minimize_all;
use baskets::Case;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let golden = GoldenSet::embedded();
    let mut rep = VerifyReport::default();
    for case in Case::ALL {
        let classes = enumerate(case, &Config::default());
        let desc = minimize_all(&classes, None);
        verify(golden, case, &classes, Some(&desc), &mut rep);
    }
    for a in &rep.accepted {
        println!("accepted: {a}");
    }
    println!(
        "{} table differences, {} descendant differences",
        rep.table_diffs.len(),
        rep.descendant_diffs.len()
    );
    if !rep.passed() {
        return Err("class tables differ".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
