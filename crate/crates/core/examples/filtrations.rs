//! Successive quotients of the filtrations of `W_loc(mω) ⊗ W_loc(kω')` and
//! their multiplicities.

use weylfusion::filtration::{extract_filtration, verify_filtration, FiltrationTheorem};
use weylfusion::Rank;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(2)?;
    for theorem in FiltrationTheorem::ALL {
        println!("{theorem} with m = 3, k = 2:");
        for layer in extract_filtration(3, 2, theorem, rank)? {
            println!("  {layer}  (copies {}, max shift {})", layer.copies(), layer.max_shift());
        }
        for report in verify_filtration(3, 2, theorem, rank)? {
            assert!(report.passed(), "{report}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("filtration example");
}
