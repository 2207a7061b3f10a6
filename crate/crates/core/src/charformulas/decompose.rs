use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::charformulas::{qwhittaker_char, GradedCharacter, WeylTerm};
use crate::error::{Error, Result};
use crate::weights::{partition_to_weight, sl_dominance_cmp, Partition};

const MAX_STEPS: usize = 100_000;

/// Expand a symmetric character in the basis `{ch W_loc(μ)}`.
///
/// Repeatedly takes a dominance-maximal dominant exponent with nonzero
/// coefficient `c`, records `(μ, c)` and subtracts `c · ch W_loc(μ)`.
/// Ties between incomparable maximal exponents go to the one that is
/// largest when read from the last coordinate. The input is compared as an
/// sl-character, so gl-exponents that differ by `(1, …, 1)` are merged.
pub fn decompose_weyl_basis(f: &GradedCharacter) -> Result<Vec<WeylTerm>> {
    let rank = f.rank();
    let mut rem = f.sl_normalized();
    if !rem.is_symmetric() {
        return Err(Error::Decomposition("input character is not symmetric".into()));
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    while !rem.is_zero() {
        if out.len() >= MAX_STEPS {
            return Err(Error::Decomposition(format!("no convergence after {MAX_STEPS} steps")));
        }
        let top = leading_exponent(&rem)
            .ok_or_else(|| Error::Decomposition("remainder has no dominant exponent".into()))?;
        if !seen.insert(top.clone()) {
            return Err(Error::Decomposition(format!("exponent {top:?} reappeared in the remainder")));
        }
        let coeff = rem.coeff(&top);
        let weight = partition_to_weight(&Partition::new(top)?, rank)?;
        let basis = qwhittaker_char(&weight)?.sl_normalized();
        rem.add_scaled(&basis, &(-&coeff))?;
        out.push(WeylTerm { weight, coeff });
    }
    Ok(out)
}

fn leading_exponent(c: &GradedCharacter) -> Option<Vec<u32>> {
    let dominant: Vec<&Vec<u32>> = c.terms().keys().filter(|e| e.windows(2).all(|w| w[0] >= w[1])).collect();
    let maximal = dominant
        .iter()
        .filter(|e| !dominant.iter().any(|d| sl_dominance_cmp(e, d) == Some(Ordering::Less)))
        .copied();
    maximal.max_by(|a, b| a.iter().rev().cmp(b.iter().rev())).cloned()
}
