use serde::{Deserialize, Serialize};

use crate::charformulas::{qwhittaker_partition, GradedCharacter};
use crate::error::{domain, Result};
use crate::qalg::{QFactorRatio, QPoly};
use crate::weights::{Partition, Rank};

/// Arm and leg of a cell: boxes to the right in its row, below in its column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArmLeg {
    pub arm: u32,
    pub leg: u32,
}

/// Arm and leg of the cell `(row, col)` (1-based) of `p`.
pub fn arm_leg(p: &Partition, row: usize, col: u32) -> Result<ArmLeg> {
    if !p.contains_cell(row, col) {
        return domain(format!("cell ({row}, {col}) is not in the diagram of {p}"));
    }
    Ok(ArmLeg { arm: p.part(row) - col, leg: (p.column_len(col) - row) as u32 })
}

/// `b_p(s; q, 0)`: `1 / (1 - q^{arm + 1})` on cells with leg 0, and 1 on
/// every other cell and outside the diagram.
pub fn b_factor_t0(p: &Partition, row: usize, col: u32) -> QFactorRatio {
    let mut r = QFactorRatio::one();
    if let Ok(al) = arm_leg(p, row, col) {
        if al.leg == 0 {
            r.div_factor(al.arm as usize + 1).expect("arm + 1 is positive");
        }
    }
    r
}

/// All `λ ⊇ μ` with `λ/μ` a horizontal strip of size `m` and at most
/// `n + 1` rows, with `φ_{λ/μ}(q, 0)`. Results are sorted by `λ`,
/// lexicographically descending.
pub fn pieri_gm(mu: &Partition, m: u32, rank: Rank) -> Result<Vec<(Partition, QFactorRatio)>> {
    let rows = rank.num_vars();
    let mu_v = mu.padded(rows)?;
    let mut out = Vec::new();
    let mut lam = vec![0u32; rows];
    strips(&mu_v, 0, m, &mut lam, &mut out);
    out.iter()
        .map(|l| {
            let lam = Partition::new(l.clone())?;
            let phi = phi_t0(&lam, mu);
            Ok((lam, phi))
        })
        .collect()
}

fn strips(mu: &[u32], i: usize, left: u32, lam: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == mu.len() {
        if left == 0 {
            out.push(lam.clone());
        }
        return;
    }
    let cap = if i == 0 { left } else { (mu[i - 1] - mu[i]).min(left) };
    for add in (0..=cap).rev() {
        lam[i] = mu[i] + add;
        strips(mu, i + 1, left - add, lam, out);
    }
}

/// `φ_{λ/μ} = ∏_{s ∈ C} b_λ(s) / b_μ(s)` over the columns `C` meeting `λ/μ`.
fn phi_t0(lam: &Partition, mu: &Partition) -> QFactorRatio {
    let mut r = QFactorRatio::one();
    for col in 1..=lam.part(1) {
        if lam.column_len(col) == mu.column_len(col) {
            continue;
        }
        for row in 1..=lam.column_len(col) {
            r = r.multiply(&b_factor_t0(lam, row, col));
            r = r.divide(&b_factor_t0(mu, row, col));
        }
    }
    r.reduce()
}

/// Coefficients of `P_{(m)} · P_μ = Σ c_λ P_λ` at `t = 0`: `c_λ = (q;q)_m φ_{λ/μ}`.
pub fn product_onerow(m: u32, mu: &Partition, rank: Rank) -> Result<Vec<(Partition, QPoly)>> {
    let poch = QFactorRatio::pochhammer(m as usize);
    pieri_gm(mu, m, rank)?
        .into_iter()
        .map(|(lam, phi)| Ok((lam, poch.multiply(&phi).to_qpoly()?)))
        .collect()
}

/// `Σ c_λ P_λ(x; q, 0)` assembled from [`product_onerow`].
pub fn product_onerow_char(m: u32, mu: &Partition, rank: Rank) -> Result<GradedCharacter> {
    let mut out = GradedCharacter::zero(rank);
    for (lam, c) in product_onerow(m, mu, rank)? {
        out.add_scaled(&qwhittaker_partition(&lam, rank)?, &c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{q_binomial, q_pochhammer};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(arm_leg(&p(&[3, 1]), 1, 1).unwrap(), ArmLeg { arm: 2, leg: 1 });
        for m in 1..5 {
            for j in 1..=m {
                assert_eq!(arm_leg(&p(&[m]), 1, j).unwrap(), ArmLeg { arm: m - j, leg: 0 });
            }
        }
        // (k+m-i, k, …, k, i) with n = 3, cell (n+1, l)
        let (k, m, i) = (3u32, 2u32, 2u32);
        let lam = p(&[k + m - i, k, k, i]);
        for l in 1..=i {
            assert_eq!(arm_leg(&lam, 4, l).unwrap(), ArmLeg { arm: i - l, leg: 0 });
        }
        assert!(arm_leg(&p(&[1]), 2, 1).is_err());
    }

    #[test]
    fn b_factor_examples() {
        assert!(b_factor_t0(&p(&[3, 1]), 1, 1).is_identity());
        let b = b_factor_t0(&p(&[3]), 1, 1);
        assert_eq!(b.den_factors(), vec![3]);
        assert!(b_factor_t0(&p(&[1]), 3, 3).is_identity());
    }

    #[test]
    fn pieri_on_rectangle() {
        let (n, k, m) = (3usize, 2u32, 3u32);
        let mu = p(&[k, k, k]);
        let terms = product_onerow(m, &mu, r(n)).unwrap();
        let expect: Vec<Partition> = (0..=m.min(k)).map(|i| p(&[k + m - i, k, k, i])).collect();
        let got: Vec<Partition> = terms.iter().map(|t| t.0.clone()).collect();
        assert_eq!(got, expect);
        for (i, (_, c)) in terms.iter().enumerate() {
            let i = i as i64;
            let want = &(&q_binomial(i64::from(k), i) * &q_binomial(i64::from(m), i)) * &q_pochhammer(i as usize);
            assert_eq!(c, &want);
        }
    }

    #[test]
    fn pieri_on_one_row() {
        let (m, k) = (3u32, 2u32);
        let got: Vec<Partition> = pieri_gm(&p(&[m]), k, r(2)).unwrap().into_iter().map(|t| t.0).collect();
        let expect: Vec<Partition> = (0..=k).map(|i| p(&[m + k - i, i])).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn pieri_from_empty() {
        let terms = pieri_gm(&Partition::empty(), 2, r(2)).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, p(&[2]));
        assert_eq!(terms[0].1.den_factors(), vec![1, 2]);
        assert!(terms[0].1.num_factors().is_empty());
    }

    #[test]
    fn onerow_small() {
        let terms = product_onerow(1, &p(&[1]), r(2)).unwrap();
        assert_eq!(terms, vec![(p(&[2]), QPoly::one()), (p(&[1, 1]), QPoly::from_i64s(&[1, -1]))]);
        let id = product_onerow(0, &p(&[2, 1]), r(2)).unwrap();
        assert_eq!(id, vec![(p(&[2, 1]), QPoly::one())]);
    }
}
