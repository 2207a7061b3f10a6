use weylfusion::charformulas::{decompose_weyl_basis, qwhittaker_char};
use weylfusion::{Rank, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(2)?;
    let a = qwhittaker_char(&Weight::new(rank, vec![2, 0])?)?;
    let b = qwhittaker_char(&Weight::new(rank, vec![0, 2])?)?;
    let product = a.multiply(&b)?;
    let terms = decompose_weyl_basis(&product)?;
    for t in &terms {
        println!("({}) W_loc({})", t.coeff, t.weight);
    }
    assert_eq!(terms.len(), 3);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("decomposition example");
}
