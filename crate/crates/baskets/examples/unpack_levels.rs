use baskets::{b_h, canonical_sequence, epsilon_n, LevelSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let b = b_h();
    for (n, bn) in canonical_sequence(&b, 12)? {
        let eps = if n >= 5 { epsilon_n(&b, n)?.to_string() } else { "-".into() };
        println!("B({n:>2}) eps={eps:>2}  {bn}");
    }
    let s12 = LevelSet::new(12);
    let (hi, lo) = s12.neighbors(&baskets::p(7, 16))?;
    println!("(7,16) sits between {hi} and {lo} at level 12");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
