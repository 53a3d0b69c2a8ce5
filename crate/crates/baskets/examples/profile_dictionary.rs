// From plurigenera to Δⁿ, the level-0 basket, and the closed-form tables.

use baskets::enumerate::coefficients;
use baskets::{delta_from_profile, solve_b0, Case, PluriProfile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let prof = PluriProfile::new(Case::II, 2, [0, 0, 1, 1, 0, 1, 0, 1, 1]).with_p13(1);
    println!("sigma = {}, tau = {}", prof.sigma(), prof.tau());
    let deltas: Vec<i64> = (3..=12).map(|n| delta_from_profile(&prof, n)).collect();
    println!("Delta^3..Delta^12 = {deltas:?}");
    println!("B(0) = {}", solve_b0(&prof)?);
    let c = coefficients(&prof)?;
    for (n, row) in &c.levels {
        let cells: Vec<String> = row.iter().filter(|(_, v)| *v != 0).map(|(p, v)| format!("{v}{p}")).collect();
        println!("level {n:>2}: {}", cells.join(" "));
    }
    println!("eps = {:?}", c.eps);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
