use weylfusion::filtration::{
    fusion_dim, verify_section8_identity, verify_section8_recurrences, Section8Bounds, Section8Identity, XiTuple,
};
use weylfusion::{Rank, Root};

/// Dimensions of the `sl_3[t]` modules `M_j(λ_1, λ_2, λ_3)` and their
/// additivity along exact sequences.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let xi = XiTuple::try_from_coeffs(2, [0, 0], [1, 0], [0, 0]).expect("dominant");
    println!("{xi}: dimension {}", fusion_dim(&xi));
    println!("ξ^θ = {}", xi.xi(Root::theta(Rank::new(2)?)));

    let id = Section8Identity::DoubleThetaZero;
    for layer in id.layers(&xi)? {
        println!("  layer {layer}: {}", fusion_dim(&layer));
    }
    println!("{}", verify_section8_identity(id, &xi));

    let reports = verify_section8_recurrences(Section8Bounds::default())?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed} of {} parameter points pass, the rest are outside a hypothesis", reports.len());
    assert!(reports.iter().all(|r| !r.failed()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fusion example");
}
