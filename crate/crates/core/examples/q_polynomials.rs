use weylfusion::qalg::{q_binomial, q_pochhammer};
use weylfusion::{QFactorRatio, QPoly};

/// Gaussian binomials, `(q;q)_m`, and ratios of `(1 - q^k)` factors.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=4 {
        let row: Vec<String> = (0..=n).map(|r| q_binomial(n, r).to_string()).collect();
        println!("[{n} r]_q: {}", row.join("  |  "));
    }
    let b = q_binomial(6, 3);
    println!("[6 3]_q at q=1: {}", b.eval_one());
    assert_eq!(b.eval_one(), 20.into());

    let poch = q_pochhammer(3);
    println!("(q;q)_3 = {poch}");

    // [5 2]_q as a factor ratio, reduced and expanded
    let r = QFactorRatio::q_binomial(5, 2).expect("0 <= 2 <= 5");
    println!("{r} = {}", r.to_qpoly()?);
    assert_eq!(r.to_qpoly()?, q_binomial(5, 2));

    let p = QPoly::from_i64s(&[1, 0, -1]);
    println!("({p}) / (1 - q) = {}", p.div_one_minus_qk(1).expect("divisible"));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("q-polynomial example");
}
