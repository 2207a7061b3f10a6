use weylfusion::gtpop::{enumerate_gt, pattern_weight};
use weylfusion::{Partition, Rank};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(2)?;
    let bounding = Partition::new(vec![2, 1])?;
    let patterns: Vec<_> = enumerate_gt(&bounding, rank)?.collect();
    println!("{} GT patterns with bottom row (2,1,0)", patterns.len());
    for p in &patterns {
        println!("  {p}  weight {:?}", pattern_weight(p));
    }
    assert_eq!(patterns.len(), 8);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("GT example");
}
