//! Tensor products of two one-row local Weyl modules against their
//! closed-form expansion.

use weylfusion::charformulas::{lemma51_terms, qwhittaker_char, tensor_char_lemma51, TensorVariant};
use weylfusion::filtration::verify_lemma51;
use weylfusion::Rank;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(3)?;
    for variant in TensorVariant::ALL {
        let (a, b) = variant.factors(2, 2, rank)?;
        println!("W_loc({a}) ⊗ W_loc({b}):");
        for t in lemma51_terms(variant, 2, 2, rank)? {
            println!("  ({}) W_loc({})", t.coeff, t.weight);
        }
        let product = qwhittaker_char(&a)?.multiply(&qwhittaker_char(&b)?)?;
        assert!(product.sl_eq(&tensor_char_lemma51(variant, 2, 2, rank)?));
        let report = verify_lemma51(variant, 2, 2, rank)?;
        println!("  {report}");
        assert!(report.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tensor example");
}
