use weylfusion::charformulas::{arm_leg, pieri_gm, product_onerow, product_onerow_char, qwhittaker_partition};
use weylfusion::{Partition, Rank};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(2)?;
    let mu = Partition::new(vec![2, 1])?;
    println!("arm/leg of (1,1) in {mu}: {:?}", arm_leg(&mu, 1, 1)?);

    for (lam, phi) in pieri_gm(&mu, 2, rank)? {
        println!("  {lam}: phi = {phi}");
    }
    for (lam, c) in product_onerow(2, &mu, rank)? {
        println!("  P_(2) P_{mu} ∋ ({c}) P_{lam}");
    }

    let brute = qwhittaker_partition(&Partition::new(vec![2])?, rank)?.multiply(&qwhittaker_partition(&mu, rank)?)?;
    assert_eq!(brute, product_onerow_char(2, &mu, rank)?);
    println!("expansion matches the direct product");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("Pieri example");
}
