use weylfusion::charformulas::{irreducible_char, pop_char, qwhittaker_char};
use weylfusion::{Rank, Weight};

/// The graded character of a local Weyl module, computed two ways, and its
/// specializations at `q = 0` and `q = 1`.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Weight::new(Rank::new(2)?, vec![1, 1])?;
    let ch = qwhittaker_char(&lambda)?;
    print!("{ch}");
    println!("graded dimension {}", ch.graded_dimension());

    assert_eq!(ch, pop_char(&lambda)?);
    assert_eq!(ch.at_q_zero(), irreducible_char(&lambda)?);
    assert_eq!(ch.dimension(), 9.into());
    assert!(ch.is_symmetric());
    println!("GT sum = POP sum; q=0 gives ch V(λ); dimension {}", ch.dimension());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("character example");
}
