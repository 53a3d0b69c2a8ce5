use baskets::enumerate::{enumerate, validate_class, Config, Filter};
use baskets::report::{write_classes, Format};
use baskets::Case;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for case in Case::ALL {
        let classes = enumerate(case, &Config::default());
        let relaxed = enumerate(case, &Config::default().without(Filter::ProductRule));
        println!("case {case}: {} classes ({} without the product rule)", classes.len(), relaxed.len());
        assert!(classes.iter().all(|c| validate_class(c).ok()));
    }
    let ii = enumerate(Case::II, &Config::default());
    write_classes(&mut std::io::stdout().lock(), Format::Csv, &ii)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
