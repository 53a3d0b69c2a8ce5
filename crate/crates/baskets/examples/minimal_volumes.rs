// Minimal positive descendants of row 122 and the smallest volume overall.

use baskets::enumerate::{enumerate, Config};
use baskets::minimize::{global_minimum, minimal_positive_descendants, minimize_all};
use baskets::{b_h, Case, ClassRecord, FormalBasket};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let classes: Vec<ClassRecord> = Case::ALL.iter().flat_map(|c| enumerate(*c, &Config::default())).collect();
    let row122 = classes.iter().find(|c| c.case() == Case::I && c.table_row == Some(122)).ok_or("row 122")?;
    println!("row 122: {} K^3 = {}", row122.b12.to_basket(), row122.k3);
    for d in minimal_positive_descendants(&row122.formal()) {
        println!("  {:>12}  {}", d.k3.to_string(), d.trace);
    }
    let h = FormalBasket::new(b_h(), 4, 0)?;
    println!("B_H: K^3 = {}, minimal positive: {}", h.k_cubed(), h.is_minimal_positive());

    let desc = minimize_all(&classes, None);
    let g = global_minimum(&desc).ok_or("no descendants")?;
    for (i, d) in &g.witnesses {
        println!("min K^3 = {} at {}: {}", g.k3, classes[*i].label(*i + 1), d.trace);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
