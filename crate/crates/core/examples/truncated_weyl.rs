use weylfusion::charformulas::{lemma63_terms, truncated_char_lemma63};
use weylfusion::filtration::{truncated_dim_check, verify_lemma64};
use weylfusion::{Rank, Weight};

/// Truncated Weyl modules `W_{|λ|-j}(λ)` of `sl_3[t]`.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Weight::new(Rank::new(2)?, vec![2, 2])?;
    for j in 0..=2 {
        let ch = truncated_char_lemma63(&lambda, j)?;
        println!("W_{}({lambda}): graded dimension {}", lambda.height() - i64::from(j), ch.graded_dimension());
        assert!(truncated_dim_check(&lambda, j)?.passed());
    }
    for t in lemma63_terms(&lambda, 2)? {
        println!("  ({}) W_loc({})", t.coeff, t.weight);
    }

    let report = verify_lemma64(3, 2)?;
    println!("{report}");
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("truncated example");
}
