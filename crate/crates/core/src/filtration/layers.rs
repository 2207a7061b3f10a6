use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::charformulas::{m_module_char_prop71, qwhittaker_char, truncated_char_lemma63, GradedCharacter, MVariant};
use crate::error::{domain, Error, Result};
use crate::filtration::report::{Side, VerificationReport};
use crate::params;
use crate::qalg::{q_binomial, QPoly};
use crate::weights::{Rank, Weight};

/// Which filtration of a tensor product of two one-row Weyl modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiltrationTheorem {
    /// `W_loc(mω_1) ⊗ W_loc(kω_2)` for `sl_3`, by truncated Weyl modules.
    Thm66,
    /// `W_loc(mω_1) ⊗ W_loc(kω_1)`, by `M(ν, 2sω_1)` modules.
    Thm73First,
    /// `W_loc(mω_n) ⊗ W_loc(kω_n)`, by `M(ν, 2sω_n)` modules.
    Thm73Last,
}

impl FiltrationTheorem {
    pub const ALL: [FiltrationTheorem; 3] =
        [FiltrationTheorem::Thm66, FiltrationTheorem::Thm73First, FiltrationTheorem::Thm73Last];

    /// The two factors `(mω_a, kω_b)`.
    pub fn factors(self, m: u32, k: u32, rank: Rank) -> Result<(Weight, Weight)> {
        let n = rank.n();
        let (a, b) = match self {
            FiltrationTheorem::Thm66 => {
                if n != 2 {
                    return domain(format!("the truncated Weyl filtration needs n = 2, got n = {n}"));
                }
                (1, 2)
            }
            FiltrationTheorem::Thm73First => (1, 1),
            FiltrationTheorem::Thm73Last => (n, n),
        };
        if n < 2 {
            return domain(format!("M(ν, λ) filtrations need n >= 2, got n = {n}"));
        }
        Ok((Weight::sparse(rank, &[(a, i64::from(m))])?, Weight::sparse(rank, &[(b, i64::from(k))])?))
    }
}

impl fmt::Display for FiltrationTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationTheorem::Thm66 => "thm66",
            FiltrationTheorem::Thm73First => "thm73_first",
            FiltrationTheorem::Thm73Last => "thm73_last",
        })
    }
}

impl FromStr for FiltrationTheorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FiltrationTheorem::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown filtration {s:?}; expected thm66, thm73_first or thm73_last")))
    }
}

/// The module type of a successive quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LayerFamily {
    /// `W_N(λ)` with `N = |λ| - j`; stored as `(λ, j)`.
    TruncatedWeyl { lambda: Weight, j: u32 },
    /// `M(ν, 2sω)`, with `ω = ω_1` or `ω_n` according to `variant`.
    MNuLambda { nu: Weight, s: u32, variant: MVariant },
}

/// Layer `r` of a filtration: its module and how many grade-shifted copies
/// appear, as a polynomial whose coefficient of `q^l` counts copies
/// shifted by `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLayer {
    pub r: u32,
    pub family: LayerFamily,
    pub multiplicity: QPoly,
}

impl FiltrationLayer {
    pub fn character(&self) -> Result<GradedCharacter> {
        match &self.family {
            LayerFamily::TruncatedWeyl { lambda, j } => truncated_char_lemma63(lambda, *j),
            LayerFamily::MNuLambda { nu, s, variant } => m_module_char_prop71(nu, *s, *variant),
        }
    }

    /// Number of copies, the multiplicity at `q = 1`.
    pub fn copies(&self) -> BigInt {
        self.multiplicity.eval_one()
    }

    /// Largest grade shift occurring.
    pub fn max_shift(&self) -> usize {
        self.multiplicity.degree().unwrap_or(0)
    }

    pub fn label(&self) -> String {
        match &self.family {
            LayerFamily::TruncatedWeyl { lambda, j } => {
                format!("W_{}({})", lambda.height() - i64::from(*j), lambda)
            }
            LayerFamily::MNuLambda { nu, s, variant } => {
                let omega = match variant {
                    MVariant::First => "ω1".to_string(),
                    MVariant::Last => format!("ω{}", nu.rank().n()),
                };
                if *s == 0 {
                    format!("M({nu}, 0)")
                } else {
                    format!("M({nu}, {}{omega})", 2 * s)
                }
            }
        }
    }
}

impl fmt::Display for FiltrationLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} {} multiplicity {}", self.r, self.label(), self.multiplicity)
    }
}

/// Layers `r = 0, …, L` of the filtration, `L = min(m, k)`, `M = max(m, k)`.
pub fn extract_filtration(m: u32, k: u32, theorem: FiltrationTheorem, rank: Rank) -> Result<Vec<FiltrationLayer>> {
    theorem.factors(m, k, rank)?;
    let n = rank.n();
    let (big, l) = (m.max(k), m.min(k));
    (0..=l)
        .map(|r| {
            let family = match theorem {
                FiltrationTheorem::Thm66 => LayerFamily::TruncatedWeyl {
                    lambda: Weight::new(rank, vec![i64::from(m - r), i64::from(k - r)])?,
                    j: l - r,
                },
                FiltrationTheorem::Thm73First => LayerFamily::MNuLambda {
                    nu: Weight::sparse(rank, &[(1, i64::from(big - l)), (2, i64::from(r))])?,
                    s: l - r,
                    variant: MVariant::First,
                },
                FiltrationTheorem::Thm73Last => LayerFamily::MNuLambda {
                    nu: Weight::sparse(rank, &[(n - 1, i64::from(r)), (n, i64::from(big - l))])?,
                    s: l - r,
                    variant: MVariant::Last,
                },
            };
            Ok(FiltrationLayer { r, family, multiplicity: q_binomial(i64::from(l), i64::from(r)) })
        })
        .collect()
}

/// The layers reproduce the tensor product: graded characters agree, the
/// `q = 1` dimensions agree, and each layer's shifts stay within
/// `0 ≤ l ≤ (L - r) r`.
pub fn verify_filtration(m: u32, k: u32, theorem: FiltrationTheorem, rank: Rank) -> Result<Vec<VerificationReport>> {
    let p = || params!("theorem" => theorem, "n" => rank, "m" => m, "k" => k);
    let layers = extract_filtration(m, k, theorem, rank)?;
    let (a, b) = theorem.factors(m, k, rank)?;
    let product = qwhittaker_char(&a)?.multiply(&qwhittaker_char(&b)?)?;
    let mut graded = GradedCharacter::zero(rank);
    let mut dim = BigInt::from(0);
    let l = m.min(k) as usize;
    let mut shifts_ok = true;
    for layer in &layers {
        let c = layer.character()?;
        dim += layer.copies() * c.dimension();
        graded.add_scaled(&c, &layer.multiplicity)?;
        let r = layer.r as usize;
        shifts_ok &= layer.max_shift() <= (l - r) * r && layer.multiplicity.has_nonnegative_coeffs();
    }
    let bound = |ok: bool| Side::Integer(BigInt::from(u8::from(ok)));
    Ok(vec![
        VerificationReport::new("filtration_character", p())
            .compare(Side::Character(graded.sl_normalized()), Side::Character(product.sl_normalized())),
        VerificationReport::new("filtration_dimension", p())
            .compare(Side::Integer(dim), Side::Integer(product.dimension())),
        VerificationReport::new("filtration_shifts", p()).compare(bound(shifts_ok), bound(true)),
    ])
}
