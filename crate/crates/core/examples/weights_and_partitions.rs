//! Weights of sl(n+1), their bounding partitions, and dominance.

use weylfusion::weights::{bounding_sequence, dominance_leq, pairing, partition_to_weight, w0_dual};
use weylfusion::{Partition, Rank, Root, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(3)?;
    let lambda = Weight::new(rank, vec![2, 0, 1])?;
    println!("λ = {lambda}, height {}", lambda.height());
    println!("bounding sequence {:?}", bounding_sequence(&lambda));
    println!("-w0 λ = {}", w0_dual(&lambda));
    for alpha in Root::positive_roots(rank) {
        println!("  λ(h_{alpha}) = {}", pairing(&lambda, alpha)?);
    }

    let p = Partition::new(vec![3, 1, 1])?;
    println!("{p} has conjugate {} and weight {}", p.conjugate(), partition_to_weight(&p, rank)?);
    let q = Partition::new(vec![2, 2, 1])?;
    println!("{q} ≤ {p} in dominance: {}", dominance_leq(&q, &p)?);
    assert!(dominance_leq(&q, &p)?);
    assert_eq!(bounding_sequence(&lambda), vec![3, 1, 1, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weights example");
}
