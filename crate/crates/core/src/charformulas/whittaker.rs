use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::charformulas::GradedCharacter;
use crate::error::Result;
use crate::gtpop::{cells, enumerate_gt, enumerate_pops, overlay_shape, pattern_weight, pop_grade};
use crate::qalg::{q_binomial, QPoly};
use crate::weights::{weight_to_bounding_partition, Partition, Rank, Weight};

fn cache() -> &'static Mutex<HashMap<Vec<u32>, GradedCharacter>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, GradedCharacter>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `P_p(x; q, 0)` for a partition with at most `n + 1` parts, as the sum over
/// GT patterns with bounding row `p` of `x^wt ∏_cells [a + b, a]_q`.
pub fn qwhittaker_partition(p: &Partition, rank: Rank) -> Result<GradedCharacter> {
    let bottom = p.padded(rank.num_vars())?;
    if let Some(c) = cache().lock().expect("cache poisoned").get(&bottom) {
        return Ok(c.clone());
    }
    let mut binoms: HashMap<(u32, u32), QPoly> = HashMap::new();
    let mut out = GradedCharacter::zero(rank);
    for pat in enumerate_gt(p, rank)? {
        let mut coeff = QPoly::one();
        for c in cells(rank) {
            let (a, b) = overlay_shape(&pat, c);
            if a == 0 || b == 0 {
                continue;
            }
            let f = binoms.entry((a, b)).or_insert_with(|| q_binomial(i64::from(a + b), i64::from(a)));
            coeff = &coeff * f;
        }
        out.add_term(pattern_weight(&pat), &coeff);
    }
    cache().lock().expect("cache poisoned").insert(bottom, out.clone());
    Ok(out)
}

/// Graded character of `W_loc(λ)`, i.e. `P_{b_λ}(x; q, 0)`.
pub fn qwhittaker_char(lambda: &Weight) -> Result<GradedCharacter> {
    let b = weight_to_bounding_partition(lambda)?;
    qwhittaker_partition(&b, lambda.rank())
}

/// Graded character of `W_loc(λ)` read off the POP basis:
/// `Σ q^grade x^weight`. Independent of [`qwhittaker_char`].
pub fn pop_char(lambda: &Weight) -> Result<GradedCharacter> {
    let rank = lambda.rank();
    let mut counts: std::collections::BTreeMap<Vec<u32>, Vec<i64>> = Default::default();
    for p in enumerate_pops(lambda)? {
        let g = pop_grade(&p) as usize;
        let v = counts.entry(p.weight()).or_default();
        if v.len() <= g {
            v.resize(g + 1, 0);
        }
        v[g] += 1;
    }
    GradedCharacter::from_terms(rank, counts.into_iter().map(|(e, c)| (e, QPoly::from_i64s(&c))))
}

/// Character of the irreducible module `V(λ)`: one monomial per GT pattern.
pub fn irreducible_char(lambda: &Weight) -> Result<GradedCharacter> {
    let rank = lambda.rank();
    let b = weight_to_bounding_partition(lambda)?;
    let mut out = GradedCharacter::zero(rank);
    let one = QPoly::one();
    for pat in enumerate_gt(&b, rank)? {
        out.add_term(pattern_weight(&pat), &one);
    }
    Ok(out)
}
