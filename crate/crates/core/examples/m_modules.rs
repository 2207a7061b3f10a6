use weylfusion::charformulas::{m_module_char_prop71, MVariant};
use weylfusion::filtration::{m_expansion_terms, verify_lemma72};
use weylfusion::{Rank, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rank = Rank::new(3)?;
    let nu = Weight::new(rank, vec![1, 1, 0])?;
    let ch = m_module_char_prop71(&nu, 1, MVariant::First)?;
    println!("M({nu}, 2ω1): dimension {}, graded {}", ch.dimension(), ch.graded_dimension());

    for variant in MVariant::ALL {
        for (nu, s, mult) in m_expansion_terms(variant, 3, 2, rank)? {
            println!("  {variant}: [{mult}] M({nu}, s={s})");
        }
        let report = verify_lemma72(variant, 3, 2, rank)?;
        println!("  {report}");
        assert!(report.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("M-module example");
}
