use std::fmt;
use std::str::FromStr;

use crate::charformulas::{qwhittaker_char, GradedCharacter};
use crate::error::{domain, Error, Result};
use crate::qalg::{q_binomial, q_pochhammer, QPoly};
use crate::weights::{Rank, Weight};

/// Which pair of one-row weights is tensored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TensorVariant {
    /// `W_loc(mω_1) ⊗ W_loc(kω_n)`
    Omega1OmegaN,
    /// `W_loc(mω_1) ⊗ W_loc(kω_1)`
    Omega1Omega1,
    /// `W_loc(mω_n) ⊗ W_loc(kω_n)`
    OmegaNOmegaN,
}

impl TensorVariant {
    pub const ALL: [TensorVariant; 3] =
        [TensorVariant::Omega1OmegaN, TensorVariant::Omega1Omega1, TensorVariant::OmegaNOmegaN];

    /// The two highest weights `(mω_a, kω_b)` being tensored.
    pub fn factors(self, m: i64, k: i64, rank: Rank) -> Result<(Weight, Weight)> {
        let n = rank.n();
        let (a, b) = match self {
            TensorVariant::Omega1OmegaN => (1, n),
            TensorVariant::Omega1Omega1 => (1, 1),
            TensorVariant::OmegaNOmegaN => (n, n),
        };
        Ok((Weight::sparse(rank, &[(a, m)])?, Weight::sparse(rank, &[(b, k)])?))
    }
}

impl fmt::Display for TensorVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorVariant::Omega1OmegaN => "omega1_omegan",
            TensorVariant::Omega1Omega1 => "omega1_omega1",
            TensorVariant::OmegaNOmegaN => "omegan_omegan",
        })
    }
}

impl FromStr for TensorVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega1_omegan" => Ok(TensorVariant::Omega1OmegaN),
            "omega1_omega1" => Ok(TensorVariant::Omega1Omega1),
            "omegan_omegan" => Ok(TensorVariant::OmegaNOmegaN),
            _ => Err(Error::Parse(format!(
                "unknown variant {s:?} (expected omega1_omegan, omega1_omega1 or omegan_omegan)"
            ))),
        }
    }
}

/// `M(ν, λ)` shape: supported on the first two or the last two fundamental
/// weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MVariant {
    First,
    Last,
}

impl MVariant {
    pub const ALL: [MVariant; 2] = [MVariant::First, MVariant::Last];
}

impl fmt::Display for MVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MVariant::First => "first",
            MVariant::Last => "last",
        })
    }
}

impl FromStr for MVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(MVariant::First),
            "last" => Ok(MVariant::Last),
            _ => Err(Error::Parse(format!("unknown variant {s:?} (expected first or last)"))),
        }
    }
}

/// One summand `c · ch W_loc(weight)` of a closed-form character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylTerm {
    pub weight: Weight,
    pub coeff: QPoly,
}

/// Summands of the closed form for the tensor product of two one-row
/// local Weyl modules:
/// `Σ_i [m i]_q [k i]_q (q;q)_i ch W_loc(λ_i)`.
pub fn lemma51_terms(variant: TensorVariant, m: u32, k: u32, rank: Rank) -> Result<Vec<WeylTerm>> {
    let n = rank.n();
    if n < 2 {
        return domain(format!("{variant} needs n >= 2, got n = {n}"));
    }
    let (m, k) = (i64::from(m), i64::from(k));
    (0..=m.min(k))
        .map(|i| {
            let weight = match variant {
                TensorVariant::Omega1OmegaN => Weight::sparse(rank, &[(1, m - i), (n, k - i)])?,
                TensorVariant::Omega1Omega1 => Weight::sparse(rank, &[(1, m + k - 2 * i), (2, i)])?,
                TensorVariant::OmegaNOmegaN => Weight::sparse(rank, &[(n - 1, i), (n, m + k - 2 * i)])?,
            };
            let coeff = &(&q_binomial(m, i) * &q_binomial(k, i)) * &q_pochhammer(i as usize);
            Ok(WeylTerm { weight, coeff })
        })
        .collect()
}

/// Sum `Σ c · ch W_loc(λ)` of a list of terms.
pub fn assemble(terms: &[WeylTerm], rank: Rank) -> Result<GradedCharacter> {
    let mut out = GradedCharacter::zero(rank);
    for t in terms {
        rank.check(t.weight.rank())?;
        out.add_scaled(&qwhittaker_char(&t.weight)?, &t.coeff)?;
    }
    Ok(out)
}

/// Closed-form graded character of the tensor product of two one-row local
/// Weyl modules (`n ≥ 2`).
pub fn tensor_char_lemma51(variant: TensorVariant, m: u32, k: u32, rank: Rank) -> Result<GradedCharacter> {
    assemble(&lemma51_terms(variant, m, k, rank)?, rank)
}

/// Summands of the truncated Weyl module character for `sl_3`:
/// `ch W_{|λ|-j}(λ) = Σ_i (-1)^i [j i]_q q^{i(|λ|-j) - i(i-1)/2} ch W_loc(λ - iθ)`.
pub fn lemma63_terms(lambda: &Weight, j: u32) -> Result<Vec<WeylTerm>> {
    if lambda.rank().n() != 2 {
        return domain(format!("truncated Weyl characters need n = 2, got n = {}", lambda.rank().n()));
    }
    lambda.require_dominant()?;
    let l = lambda.coeff(1).min(lambda.coeff(2));
    let j = i64::from(j);
    if j > l {
        return domain(format!("j = {j} exceeds min(m1, m2) = {l} for {lambda}"));
    }
    let height = lambda.height();
    let theta = Weight::theta(lambda.rank());
    (0..=j)
        .map(|i| {
            let weight = lambda.checked_sub(&theta.scale(i))?;
            let mut coeff = q_binomial(j, i).shift(usize::try_from(i * (height - j) - i * (i - 1) / 2).unwrap());
            if i % 2 == 1 {
                coeff = -coeff;
            }
            Ok(WeylTerm { weight, coeff })
        })
        .collect()
}

/// Graded character of the truncated Weyl module `W_{|λ|-j}(λ)` of `sl_3[t]`.
pub fn truncated_char_lemma63(lambda: &Weight, j: u32) -> Result<GradedCharacter> {
    assemble(&lemma63_terms(lambda, j)?, lambda.rank())
}

/// Summands of `ch M(ν, 2sω_1)` (first) or `ch M(ν, 2sω_n)` (last).
///
/// First: `Σ_i (-1)^i [s i]_q q^{i(s+ν_1) - i(i-1)/2} ch W_loc((2s+ν_1-2i)ω_1 + (ν_2+i)ω_2)`,
/// with `ν` supported on `ω_1, ω_2`. Last is the mirror image under
/// `ω_i ↦ ω_{n+1-i}`.
pub fn prop71_terms(nu: &Weight, s: u32, variant: MVariant) -> Result<Vec<WeylTerm>> {
    let rank = nu.rank();
    let n = rank.n();
    nu.require_dominant()?;
    let (lead, side) = match variant {
        MVariant::First => (1usize, 2usize),
        MVariant::Last => (n, n.wrapping_sub(1)),
    };
    for idx in 1..=n {
        if idx != lead && idx != side && nu.coeff(idx) != 0 {
            return domain(format!("ν = {nu} must be supported on ω{lead} and ω{side}"));
        }
    }
    let (s, v_lead) = (i64::from(s), nu.coeff(lead));
    let v_side = if side >= 1 && side <= n && side != lead { nu.coeff(side) } else { 0 };
    (0..=s)
        .map(|i| {
            let weight = Weight::sparse(rank, &[(lead, 2 * s + v_lead - 2 * i), (side, v_side + i)])?;
            let mut coeff = q_binomial(s, i).shift(usize::try_from(i * (s + v_lead) - i * (i - 1) / 2).unwrap());
            if i % 2 == 1 {
                coeff = -coeff;
            }
            Ok(WeylTerm { weight, coeff })
        })
        .collect()
}

/// Graded character of `M(ν, 2sω_1)` or `M(ν, 2sω_n)`.
pub fn m_module_char_prop71(nu: &Weight, s: u32, variant: MVariant) -> Result<GradedCharacter> {
    assemble(&prop71_terms(nu, s, variant)?, nu.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn w(n: usize, c: &[i64]) -> Weight {
        Weight::new(r(n), c.to_vec()).unwrap()
    }

    #[test]
    fn lemma51_small() {
        let c = tensor_char_lemma51(TensorVariant::Omega1Omega1, 1, 1, r(2)).unwrap();
        let mut expect = qwhittaker_char(&w(2, &[2, 0])).unwrap();
        expect.add_scaled(&qwhittaker_char(&w(2, &[0, 1])).unwrap(), &QPoly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(c, expect);
        assert_eq!(c.dimension(), BigInt::from(9));
        let single = tensor_char_lemma51(TensorVariant::Omega1OmegaN, 3, 0, r(3)).unwrap();
        assert_eq!(single, qwhittaker_char(&w(3, &[3, 0, 0])).unwrap());
        assert!(tensor_char_lemma51(TensorVariant::Omega1Omega1, 1, 1, r(1)).is_err());
    }

    #[test]
    fn lemma63_small() {
        let lam = w(2, &[2, 3]);
        assert_eq!(truncated_char_lemma63(&lam, 0).unwrap(), qwhittaker_char(&lam).unwrap());
        let t = lemma63_terms(&w(2, &[1, 1]), 1).unwrap();
        assert_eq!(t[1].weight, w(2, &[0, 0]));
        assert_eq!(t[1].coeff, QPoly::monomial(-1, 1));
        let d = truncated_char_lemma63(&w(2, &[2, 2]), 2).unwrap().dimension();
        assert_eq!(d, BigInt::from(64));
        assert!(truncated_char_lemma63(&w(2, &[1, 2]), 2).is_err());
        assert!(truncated_char_lemma63(&w(3, &[1, 0, 1]), 0).is_err());
    }

    #[test]
    fn prop71_small() {
        let nu = w(3, &[2, 1, 0]);
        assert_eq!(m_module_char_prop71(&nu, 0, MVariant::First).unwrap(), qwhittaker_char(&nu).unwrap());
        assert!(prop71_terms(&w(3, &[0, 0, 1]), 1, MVariant::First).is_err());
        let first = m_module_char_prop71(&w(3, &[1, 1, 0]), 2, MVariant::First).unwrap();
        let last = m_module_char_prop71(&w(3, &[0, 1, 1]), 2, MVariant::Last).unwrap();
        assert_eq!(first.dual(), last.sl_normalized());
    }

    #[test]
    fn variants_parse() {
        for v in TensorVariant::ALL {
            assert_eq!(v.to_string().parse::<TensorVariant>().unwrap(), v);
        }
        for v in MVariant::ALL {
            assert_eq!(v.to_string().parse::<MVariant>().unwrap(), v);
        }
        assert!("nope".parse::<MVariant>().is_err());
    }
}
