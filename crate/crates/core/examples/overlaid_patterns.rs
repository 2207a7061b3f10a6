//! Partition overlaid patterns: enumeration, grades, the total order and
//! the symbolic basis words.

use std::cmp::Ordering;

use weylfusion::gtpop::{basis_word, enumerate_pops, lowest_weight_pop, pop_compare, pop_grade};
use weylfusion::{Rank, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Weight::new(Rank::new(2)?, vec![1, 1])?;
    let mut pops: Vec<_> = enumerate_pops(&lambda)?.collect();
    println!("W_loc({lambda}) has {} POPs", pops.len());

    pops.sort_by(|a, b| pop_compare(a, b).expect("same bounding row"));
    for p in &pops {
        println!("  grade {}  weight {:?}  word {}", pop_grade(p), p.weight(), basis_word(p));
    }

    let lowest = lowest_weight_pop(&lambda)?;
    println!("lowest weight POP has weight {:?} and is the greatest", lowest.weight());
    for p in &pops {
        assert_ne!(pop_compare(p, &lowest)?, Ordering::Greater);
    }
    println!("{}", serde_json::to_string(&lowest)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("POP example");
}
