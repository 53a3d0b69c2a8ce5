// σ, σ′, Δⁿ, K³ and χₘ of the extremal basket with χ̃ = 4.

use baskets::{b_h, FormalBasket};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FormalBasket::new(b_h(), 4, 0)?;
    println!("B = {}", f.basket);
    println!("sigma = {}, sigma' = {}", f.basket.sigma(), f.basket.sigma_prime());
    for n in [3, 7, 12] {
        println!("Delta^{n} = {}", f.basket.delta(n)?);
    }
    println!("K^3 = {}", f.k_cubed());
    let chis = f.chi_table(13)?;
    println!("chi_2..chi_13 = {chis:?}");
    assert_eq!(f.k_cubed().to_string(), "31/48048");
    assert_eq!(chis[10], 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
