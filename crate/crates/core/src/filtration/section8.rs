//! Dimension bookkeeping for the `sl_3[t]` modules `M_j(λ_1, λ_2, λ_3)`.
//!
//! `M_j(λ_1, λ_2, λ_3)` is indexed by a tuple of partitions with parts in
//! `{1, 2, 3}`; its dimension is that of the fusion product
//! `D(3, 3λ_3) ∗ D(2, 2λ_2) ∗ D(1, λ_1) ∗ V(θ)^{∗j}`, with atomic dimensions
//! `dim D(1, ω_i) = 3`, `dim D(2, 2ω_i) = 6`, `dim D(3, 3ω_i) = 10`,
//! `dim V(θ) = 8`.

use std::fmt;

use num_bigint::BigInt;

use crate::charformulas::truncated_char_lemma63;
use crate::error::{domain, Result};
use crate::filtration::report::{Side, VerificationReport};
use crate::params;
use crate::weights::{pairing, Partition, Rank, Root, Weight};

/// The data `(j, λ_1, λ_2, λ_3)` of `M_j(λ_1, λ_2, λ_3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XiTuple {
    pub j: u32,
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub lambda3: Weight,
}

impl XiTuple {
    pub fn new(j: u32, lambda1: Weight, lambda2: Weight, lambda3: Weight) -> Result<Self> {
        for w in [&lambda1, &lambda2, &lambda3] {
            if w.rank().n() != 2 {
                return domain(format!("M_j modules live over sl_3, got a weight of rank {}", w.rank()));
            }
            w.require_dominant()?;
        }
        Ok(XiTuple { j, lambda1, lambda2, lambda3 })
    }

    /// Build from coefficient pairs, returning `None` if any is not dominant.
    pub fn try_from_coeffs(j: u32, l1: [i64; 2], l2: [i64; 2], l3: [i64; 2]) -> Option<Self> {
        let rank = sl3();
        let w = |c: [i64; 2]| Weight::new(rank, c.to_vec()).ok().filter(Weight::is_dominant);
        Some(XiTuple { j, lambda1: w(l1)?, lambda2: w(l2)?, lambda3: w(l3)? })
    }

    /// The partition `ξ^α = (3^{λ_3(h_α)}, 2^{λ_2(h_α)+jδ}, 1^{λ_1(h_α)+j(1-δ)})`
    /// where `δ = 1` for `α = θ` and `0` for a simple root.
    pub fn xi(&self, alpha: Root) -> Partition {
        let p = |w: &Weight| pairing(w, alpha).expect("rank-2 root") as usize;
        let is_theta = alpha == Root::theta(sl3());
        let (twos, ones) = if is_theta {
            (p(&self.lambda2) + self.j as usize, p(&self.lambda1))
        } else {
            (p(&self.lambda2), p(&self.lambda1) + self.j as usize)
        };
        let mut parts = vec![3; p(&self.lambda3)];
        parts.extend(std::iter::repeat(2).take(twos));
        parts.extend(std::iter::repeat(1).take(ones));
        Partition::new(parts).expect("weakly decreasing by construction")
    }

    /// `λ_1 + 2λ_2 + 3λ_3 + jθ`.
    pub fn weight(&self) -> Weight {
        let theta = Weight::theta(sl3());
        &(&(&self.lambda1 + &self.lambda2.scale(2)) + &self.lambda3.scale(3)) + &theta.scale(i64::from(self.j))
    }

    /// `|ξ^α| = μ(h_α)` for every positive root `α`.
    pub fn is_compatible(&self, mu: &Weight) -> bool {
        mu.rank() == sl3()
            && Root::positive_roots(sl3())
                .into_iter()
                .all(|a| self.xi(a).size() as i64 == pairing(mu, a).expect("rank-2 root"))
    }
}

impl fmt::Display for XiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}({}, {}, {})", self.j, self.lambda1, self.lambda2, self.lambda3)
    }
}

fn sl3() -> Rank {
    Rank::new(2).expect("2 is a valid rank")
}

/// `10^{λ_3(h_θ)} · 6^{λ_2(h_θ)} · 3^{λ_1(h_θ)} · 8^j`.
pub fn fusion_dim(xi: &XiTuple) -> BigInt {
    let h = |w: &Weight| w.height() as usize;
    num_traits::pow(BigInt::from(10), h(&xi.lambda3))
        * num_traits::pow(BigInt::from(6), h(&xi.lambda2))
        * num_traits::pow(BigInt::from(3), h(&xi.lambda1))
        * num_traits::pow(BigInt::from(8), xi.j as usize)
}

/// Sweep limits for [`verify_section8_recurrences`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Section8Bounds {
    /// Largest `λ_1(h_θ)` when `λ_1` is free.
    pub max_h1: u32,
    pub max_h2: u32,
    pub max_h3: u32,
    pub max_j: u32,
}

impl Default for Section8Bounds {
    fn default() -> Self {
        Section8Bounds { max_h1: 3, max_h2: 3, max_h3: 3, max_j: 4 }
    }
}

/// One short exact sequence or two-step filtration of an `M_j` module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section8Identity {
    /// `λ_1 = 0`, `j = 1`, `λ_2(h_1) ≥ 1`.
    ThetaSplitA1,
    /// `λ_1 = 0`, `j = 1`, `λ_2(h_1) = 0`, `λ_2(h_2) ≥ 1`.
    ThetaSplitA2,
    /// `λ_1 = ω_1`, `j = 1`.
    ThetaAbsorbW1,
    /// `λ_1 = ω_2`, `j = 1`.
    ThetaAbsorbW2,
    /// `λ_1 = 0`, `j ≥ 2`.
    DoubleThetaZero,
    /// `λ_1 = ω_1`, `j ≥ 2`.
    DoubleThetaW1,
    /// `λ_1 = ω_2`, `j ≥ 2`.
    DoubleThetaW2,
    /// `λ_3 = 0`, `j = 1`, `λ_1(h_1) ≥ 1`.
    LevelOneSingleA1,
    /// `λ_3 = 0`, `j = 1`, `λ_1(h_2) ≥ 1`.
    LevelOneSingleA2,
    /// `λ_3 = 0`, `j ≥ 2`, `λ_1(h_1) ≥ 1`.
    LevelOneStepA1,
    /// `λ_3 = 0`, `j ≥ 2`, `λ_1(h_2) ≥ 1`.
    LevelOneStepA2,
}

impl Section8Identity {
    pub const ALL: [Section8Identity; 11] = [
        Section8Identity::ThetaSplitA1,
        Section8Identity::ThetaSplitA2,
        Section8Identity::ThetaAbsorbW1,
        Section8Identity::ThetaAbsorbW2,
        Section8Identity::DoubleThetaZero,
        Section8Identity::DoubleThetaW1,
        Section8Identity::DoubleThetaW2,
        Section8Identity::LevelOneSingleA1,
        Section8Identity::LevelOneSingleA2,
        Section8Identity::LevelOneStepA1,
        Section8Identity::LevelOneStepA2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section8Identity::ThetaSplitA1 => "theta_split_a1",
            Section8Identity::ThetaSplitA2 => "theta_split_a2",
            Section8Identity::ThetaAbsorbW1 => "theta_absorb_w1",
            Section8Identity::ThetaAbsorbW2 => "theta_absorb_w2",
            Section8Identity::DoubleThetaZero => "double_theta_zero",
            Section8Identity::DoubleThetaW1 => "double_theta_w1",
            Section8Identity::DoubleThetaW2 => "double_theta_w2",
            Section8Identity::LevelOneSingleA1 => "level_one_single_a1",
            Section8Identity::LevelOneSingleA2 => "level_one_single_a2",
            Section8Identity::LevelOneStepA1 => "level_one_step_a1",
            Section8Identity::LevelOneStepA2 => "level_one_step_a2",
        }
    }

    fn fixed_lambda1(self) -> Option<[i64; 2]> {
        use Section8Identity::*;
        match self {
            ThetaSplitA1 | ThetaSplitA2 | DoubleThetaZero => Some([0, 0]),
            ThetaAbsorbW1 | DoubleThetaW1 => Some([1, 0]),
            ThetaAbsorbW2 | DoubleThetaW2 => Some([0, 1]),
            _ => None,
        }
    }

    fn single_step(self) -> bool {
        use Section8Identity::*;
        matches!(self, ThetaSplitA1 | ThetaSplitA2 | ThetaAbsorbW1 | ThetaAbsorbW2 | LevelOneSingleA1 | LevelOneSingleA2)
    }

    /// The middle module and its layers, or the violated hypothesis.
    pub fn layers(self, xi: &XiTuple) -> std::result::Result<Vec<XiTuple>, String> {
        use Section8Identity::*;
        let (j, l1, l2, l3) = (xi.j, &xi.lambda1, &xi.lambda2, &xi.lambda3);
        let c = |w: &Weight| [w.coeff(1), w.coeff(2)];
        let (a1, a2, a3) = (c(l1), c(l2), c(l3));
        if let Some(fixed) = self.fixed_lambda1() {
            if a1 != fixed {
                return Err(format!("needs λ_1 = {}", Weight::new(sl3(), fixed.to_vec()).unwrap()));
            }
        } else if a3 != [0, 0] {
            return Err("needs λ_3 = 0".into());
        }
        if self.single_step() && j != 1 {
            return Err("needs j = 1".into());
        }
        if !self.single_step() && j < 2 {
            return Err("needs j >= 2".into());
        }
        let add = |a: [i64; 2], b: [i64; 2]| [a[0] + b[0], a[1] + b[1]];
        let (w1, w2, th, zero) = ([1, 0], [0, 1], [1, 1], [0, 0]);
        let neg = |a: [i64; 2]| [-a[0], -a[1]];
        let t = |j: u32, x: [i64; 2], y: [i64; 2], z: [i64; 2]| {
            XiTuple::try_from_coeffs(j, x, y, z).ok_or_else(|| "a layer weight is not dominant".to_string())
        };
        let out = match self {
            ThetaSplitA1 => {
                if a2[0] < 1 {
                    return Err("needs λ_2(h_1) >= 1".into());
                }
                vec![t(0, w1, add(add(a2, neg(w1)), w2), a3)?, t(0, w2, add(a2, neg(w1)), add(a3, w1))?]
            }
            ThetaSplitA2 => {
                if a2[0] != 0 || a2[1] < 1 {
                    return Err("needs λ_2(h_1) = 0 and λ_2(h_2) >= 1".into());
                }
                vec![t(0, w2, add(add(a2, neg(w2)), w1), a3)?, t(0, w1, add(a2, neg(w2)), add(a3, w2))?]
            }
            ThetaAbsorbW1 => vec![t(0, zero, add(a2, w2), a3)?, t(0, w2, add(a2, w1), a3)?],
            ThetaAbsorbW2 => vec![t(0, zero, add(a2, w1), a3)?, t(0, w1, add(a2, w2), a3)?],
            DoubleThetaZero => vec![
                t(j - 2, w2, add(a2, w2), a3)?,
                t(j - 2, zero, a2, add(a3, w1))?,
                t(j - 2, zero, add(a2, th), a3)?,
            ],
            DoubleThetaW1 => vec![
                t(j - 1, zero, add(a2, w2), a3)?,
                t(j - 2, zero, add(a2, [2, 0]), a3)?,
                t(j - 2, w1, add(a2, th), a3)?,
            ],
            DoubleThetaW2 => vec![
                t(j - 1, zero, add(a2, w1), a3)?,
                t(j - 2, zero, add(a2, [0, 2]), a3)?,
                t(j - 2, w2, add(a2, th), a3)?,
            ],
            LevelOneSingleA1 | LevelOneStepA1 | LevelOneSingleA2 | LevelOneStepA2 => {
                let (lead, other) = match self {
                    LevelOneSingleA1 | LevelOneStepA1 => (w1, w2),
                    _ => (w2, w1),
                };
                let idx = if lead == w1 { 0 } else { 1 };
                if a1[idx] < 1 {
                    return Err(format!("needs λ_1(h_{}) >= 1", idx + 1));
                }
                let rest = add(a1, neg(lead));
                if j == 1 {
                    vec![t(0, add(rest, other), add(a2, lead), zero)?, t(0, rest, add(a2, other), zero)?]
                } else {
                    vec![
                        t(j - 1, rest, add(a2, other), zero)?,
                        t(j - 2, rest, add(a2, [2 * lead[0], 2 * lead[1]]), zero)?,
                        t(j - 2, a1, add(a2, th), zero)?,
                    ]
                }
            }
        };
        Ok(out)
    }
}

impl fmt::Display for Section8Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `dim` of the middle term against the sum over the layers.
pub fn verify_section8_identity(id: Section8Identity, xi: &XiTuple) -> VerificationReport {
    let rep = VerificationReport::new(id.name(), params!("module" => xi));
    match id.layers(xi) {
        Err(reason) => rep.skipped(reason),
        Ok(layers) => {
            let sum: BigInt = layers.iter().map(fusion_dim).sum();
            rep.compare(Side::Integer(fusion_dim(xi)), Side::Integer(sum))
        }
    }
}

/// `M_j(λ_1, 0, 0)` is the truncated Weyl module `W_{|μ|-j}(μ)` with
/// `μ = λ_1 + jθ`; compare its graded character at `q = 1` with
/// `fusion_dim`.
pub fn verify_truncated_m(xi: &XiTuple) -> Result<VerificationReport> {
    let rep = VerificationReport::new("m_truncated", params!("module" => xi));
    if !xi.lambda2.is_zero() || !xi.lambda3.is_zero() {
        return Ok(rep.skipped("needs λ_2 = λ_3 = 0"));
    }
    let mu = xi.weight();
    let dim = truncated_char_lemma63(&mu, xi.j)?.dimension();
    Ok(rep.compare(Side::Integer(dim), Side::Integer(fusion_dim(xi))))
}

fn weights_up_to(h: u32) -> Vec<[i64; 2]> {
    let h = i64::from(h);
    (0..=h).flat_map(|t| (0..=t).map(move |a| [a, t - a])).collect()
}

/// Every identity at every parameter point within `bounds`; points that
/// violate a hypothesis are reported as skipped.
pub fn verify_section8_recurrences(bounds: Section8Bounds) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let l2s = weights_up_to(bounds.max_h2);
    let l3s = weights_up_to(bounds.max_h3);
    for id in Section8Identity::ALL {
        let js: Vec<u32> = if id.single_step() { vec![1] } else { (2..=bounds.max_j).collect() };
        let l1s = match id.fixed_lambda1() {
            Some(f) => vec![f],
            None => weights_up_to(bounds.max_h1),
        };
        let l3s = if id.fixed_lambda1().is_some() { l3s.clone() } else { vec![[0, 0]] };
        for &j in &js {
            for &a1 in &l1s {
                for &a2 in &l2s {
                    for &a3 in &l3s {
                        let xi = XiTuple::try_from_coeffs(j, a1, a2, a3).expect("dominant sweep");
                        out.push(verify_section8_identity(id, &xi));
                    }
                }
            }
        }
    }
    for j in 0..=bounds.max_j {
        for a1 in weights_up_to(bounds.max_h1) {
            let xi = XiTuple::try_from_coeffs(j, a1, [0, 0], [0, 0]).expect("dominant sweep");
            out.push(verify_truncated_m(&xi)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(j: u32, a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> XiTuple {
        XiTuple::try_from_coeffs(j, a, b, c).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(fusion_dim(&xi(1, [0, 0], [0, 0], [0, 0])), BigInt::from(8));
        assert_eq!(fusion_dim(&xi(0, [2, 1], [0, 0], [0, 0])), BigInt::from(27));
        assert_eq!(fusion_dim(&xi(2, [1, 0], [0, 1], [1, 0])), BigInt::from(64 * 3 * 6 * 10));
    }

    #[test]
    fn xi_partitions() {
        let x = xi(1, [1, 0], [0, 2], [1, 1]);
        let th = Root::theta(sl3());
        assert_eq!(x.xi(th).parts(), &[3, 3, 2, 2, 2, 1]);
        assert_eq!(x.xi(Root::simple(1).unwrap()).parts(), &[3, 1, 1]);
        assert_eq!(x.xi(Root::simple(2).unwrap()).parts(), &[3, 2, 2, 1]);
        assert!(x.is_compatible(&x.weight()));
        assert!(!x.is_compatible(&Weight::zero(sl3())));
    }

    #[test]
    fn worked_identities() {
        let r = verify_section8_identity(Section8Identity::ThetaSplitA1, &xi(1, [0, 0], [1, 0], [0, 0]));
        assert!(r.passed(), "{r}");
        let r = verify_section8_identity(Section8Identity::DoubleThetaZero, &xi(2, [0, 0], [0, 0], [0, 0]));
        assert!(r.passed(), "{r}");
        let r = verify_section8_identity(Section8Identity::LevelOneSingleA1, &xi(1, [1, 0], [0, 0], [0, 0]));
        assert!(r.passed(), "{r}");
        let r = verify_section8_identity(Section8Identity::ThetaSplitA1, &xi(1, [0, 0], [0, 1], [0, 0]));
        assert_eq!(r.status, crate::filtration::Status::Skipped);
    }

    #[test]
    fn default_sweep_passes() {
        let reps = verify_section8_recurrences(Section8Bounds::default()).unwrap();
        assert!(reps.iter().all(|r| !r.failed()));
        assert!(reps.iter().filter(|r| r.passed()).count() > 500);
    }
}
