use num_bigint::BigInt;

use crate::charformulas::{
    decompose_weyl_basis, irreducible_char, lemma51_terms, m_module_char_prop71, pop_char, product_onerow_char,
    qwhittaker_char, qwhittaker_partition, tensor_char_lemma51, truncated_char_lemma63, GradedCharacter, MVariant,
    TensorVariant, WeylTerm,
};
use crate::error::{domain, Result};
use crate::filtration::report::{Side, VerificationReport};
use crate::filtration::section8::{fusion_dim, XiTuple};
use crate::gtpop::enumerate_pops;
use crate::params;
use crate::qalg::{q_binomial, q_pochhammer, QPoly, QXPoly};
use crate::weights::{Partition, Rank, Weight};

/// `∏_i C(n+1, i)^{m_i}`, the dimension of `W_loc(λ)`.
pub fn weyl_module_dim(lambda: &Weight) -> BigInt {
    let n = lambda.rank().n() as u64;
    let mut out = BigInt::from(1);
    for (idx, &m) in lambda.coeffs().iter().enumerate() {
        let c = binomial(n + 1, idx as u64 + 1);
        out *= num_traits::pow(c, m as usize);
    }
    out
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

fn sl(c: GradedCharacter) -> Side {
    Side::Character(c.sl_normalized())
}

/// Number of POPs against `∏ C(n+1, i)^{m_i}`.
pub fn verify_pop_count(lambda: &Weight) -> Result<VerificationReport> {
    let count = enumerate_pops(lambda)?.count();
    let r = VerificationReport::new("pop_count", params!("n" => lambda.rank(), "lambda" => lambda));
    Ok(r.compare(Side::Integer(BigInt::from(count)), Side::Integer(weyl_module_dim(lambda))))
}

/// The GT-sum character against the POP-sum character.
pub fn verify_oracle(lambda: &Weight) -> Result<VerificationReport> {
    let r = VerificationReport::new("oracle", params!("n" => lambda.rank(), "lambda" => lambda));
    Ok(r.compare(Side::Character(qwhittaker_char(lambda)?), Side::Character(pop_char(lambda)?)))
}

/// `q = 0` gives `ch V(λ)`, `q = 1` gives the module dimension, and the
/// character is symmetric.
pub fn verify_specialization(lambda: &Weight) -> Result<Vec<VerificationReport>> {
    let c = qwhittaker_char(lambda)?;
    let p = || params!("n" => lambda.rank(), "lambda" => lambda);
    Ok(vec![
        VerificationReport::new("q_zero", p())
            .compare(Side::Character(c.at_q_zero()), Side::Character(irreducible_char(lambda)?)),
        VerificationReport::new("q_one", p())
            .compare(Side::Integer(c.dimension()), Side::Integer(weyl_module_dim(lambda))),
        VerificationReport::new("symmetry", p()).compare(
            Side::Integer(BigInt::from(u8::from(c.is_symmetric()))),
            Side::Integer(BigInt::from(1)),
        ),
    ])
}

/// `P_{(m)} · P_μ` against the Pieri expansion, exactly (gl exponents).
pub fn verify_pieri(m: u32, mu: &Partition, rank: Rank) -> Result<VerificationReport> {
    let r = VerificationReport::new("pieri", params!("n" => rank, "m" => m, "mu" => mu));
    let row = Partition::new(vec![m])?;
    let lhs = qwhittaker_partition(&row, rank)?.multiply(&qwhittaker_partition(mu, rank)?)?;
    Ok(r.compare(Side::Character(lhs), Side::Character(product_onerow_char(m, mu, rank)?)))
}

/// Product of the two one-row Weyl characters against the closed form.
pub fn verify_lemma51(variant: TensorVariant, m: u32, k: u32, rank: Rank) -> Result<VerificationReport> {
    let r = VerificationReport::new(
        "lemma51",
        params!("variant" => variant, "n" => rank, "m" => m, "k" => k),
    );
    let (a, b) = variant.factors(i64::from(m), i64::from(k), rank)?;
    let lhs = qwhittaker_char(&a)?.multiply(&qwhittaker_char(&b)?)?;
    let rhs = tensor_char_lemma51(variant, m, k, rank)?;
    Ok(r.compare(sl(lhs), sl(rhs)))
}

/// `ch W(mω_1) · ch W(kω_2) = Σ_i [L i]_q ch W_{M-i}((m-i)ω_1 + (k-i)ω_2)` for `sl_3`.
pub fn verify_lemma64(m: u32, k: u32) -> Result<VerificationReport> {
    let rank = Rank::new(2)?;
    let r = VerificationReport::new("lemma64", params!("m" => m, "k" => k));
    let lhs = qwhittaker_char(&Weight::new(rank, vec![i64::from(m), 0])?)?
        .multiply(&qwhittaker_char(&Weight::new(rank, vec![0, i64::from(k)])?)?)?;
    let l = m.min(k);
    let mut rhs = GradedCharacter::zero(rank);
    for i in 0..=l {
        let lam = Weight::new(rank, vec![i64::from(m - i), i64::from(k - i)])?;
        rhs.add_scaled(&truncated_char_lemma63(&lam, l - i)?, &q_binomial(i64::from(l), i64::from(i)))?;
    }
    Ok(r.compare(sl(lhs), sl(rhs)))
}

/// Parameters `(ν, s)` of the `M(ν, 2sω)` layers in the expansion of
/// `W(mω_1) ⊗ W(kω_1)` (first) or `W(mω_n) ⊗ W(kω_n)` (last), with the
/// multiplicity `[L i]_q`.
pub fn m_expansion_terms(variant: MVariant, m: u32, k: u32, rank: Rank) -> Result<Vec<(Weight, u32, QPoly)>> {
    let n = rank.n();
    if n < 2 {
        return domain(format!("M(ν, λ) expansions need n >= 2, got n = {n}"));
    }
    let (big, l) = (m.max(k), m.min(k));
    (0..=l)
        .map(|i| {
            let nu = match variant {
                MVariant::First => Weight::sparse(rank, &[(1, i64::from(big - l)), (2, i64::from(i))])?,
                MVariant::Last => Weight::sparse(rank, &[(n - 1, i64::from(i)), (n, i64::from(big - l))])?,
            };
            Ok((nu, l - i, q_binomial(i64::from(l), i64::from(i))))
        })
        .collect()
}

/// Product of two one-row Weyl characters against `Σ_i [L i]_q ch M(…)`.
pub fn verify_lemma72(variant: MVariant, m: u32, k: u32, rank: Rank) -> Result<VerificationReport> {
    let r = VerificationReport::new("lemma72", params!("variant" => variant, "n" => rank, "m" => m, "k" => k));
    let tv = match variant {
        MVariant::First => TensorVariant::Omega1Omega1,
        MVariant::Last => TensorVariant::OmegaNOmegaN,
    };
    let (a, b) = tv.factors(i64::from(m), i64::from(k), rank)?;
    let lhs = qwhittaker_char(&a)?.multiply(&qwhittaker_char(&b)?)?;
    let mut rhs = GradedCharacter::zero(rank);
    for (nu, s, mult) in m_expansion_terms(variant, m, k, rank)? {
        rhs.add_scaled(&m_module_char_prop71(&nu, s, variant)?, &mult)?;
    }
    Ok(r.compare(sl(lhs), sl(rhs)))
}

/// `dim W_{|λ|-j}(λ) = 8^j 3^{|λ|-2j}` from the graded character, and the
/// same number from the fusion-product dimension of `M_j(λ - jθ, 0, 0)`.
pub fn truncated_dim_check(lambda: &Weight, j: u32) -> Result<VerificationReport> {
    let r = VerificationReport::new("thm62_dim", params!("lambda" => lambda, "j" => j));
    let dim = truncated_char_lemma63(lambda, j)?.dimension();
    let h = lambda.height() as usize;
    let j = j as usize;
    let formula = num_traits::pow(BigInt::from(8), j) * num_traits::pow(BigInt::from(3), h - 2 * j);
    let rest = lambda.checked_sub(&Weight::theta(lambda.rank()).scale(j as i64))?;
    let zero = Weight::zero(lambda.rank());
    let fd = fusion_dim(&XiTuple::new(j as u32, rest, zero.clone(), zero)?);
    if fd != formula {
        return Ok(r.compare(Side::Integer(fd), Side::Integer(formula)));
    }
    Ok(r.compare(Side::Integer(dim), Side::Integer(formula)))
}

/// The recursion behind the truncated character:
/// `ch W_{|λ|-j}(λ) = ch W_{|λ|-j+1}(λ) - q^{|λ|-j} ch W_{|λ-θ|-(j-1)}(λ-θ)`.
pub fn verify_truncation_step(lambda: &Weight, j: u32) -> Result<VerificationReport> {
    let r = VerificationReport::new("thm62_step", params!("lambda" => lambda, "j" => j));
    if j == 0 {
        return domain("the truncation step needs j >= 1");
    }
    let theta = Weight::theta(lambda.rank());
    let lower = lambda.checked_sub(&theta)?;
    let lhs = truncated_char_lemma63(lambda, j)?;
    let shift = lambda.height() as usize - j as usize;
    let mut rhs = truncated_char_lemma63(lambda, j - 1)?;
    rhs.add_scaled(&truncated_char_lemma63(&lower, j - 1)?, &QPoly::monomial(-1, shift))?;
    Ok(r.compare(sl(lhs), sl(rhs)))
}

/// `Σ_r (-1)^{j-r} [j r]_q q^{C(j-r, 2)} x^r = (x - 1)(x - q)⋯(x - q^{j-1})`
/// in `Z[q][x]`, and its substitutions `x = q^M` for `j ≤ M ≤ max_m`.
pub fn verify_qbinomial(j: u32, max_m: u32) -> Result<Vec<VerificationReport>> {
    let j = i64::from(j);
    let mut lhs = Vec::new();
    for r in 0..=j {
        let c = (j - r) * (j - r - 1) / 2;
        let mut t = q_binomial(j, r).shift(c as usize);
        if (j - r) % 2 == 1 {
            t = -t;
        }
        lhs.push(t);
    }
    let lhs = QXPoly::from_coeffs(lhs);
    let mut rhs = QXPoly::one();
    for i in 0..j {
        rhs = rhs.mul_x_minus(&QPoly::q_pow(i as usize));
    }
    let mut out = Vec::new();
    let width = lhs.coeffs().len().max(rhs.coeffs().len());
    let at = |p: &QXPoly, r: usize| p.coeffs().get(r).cloned().unwrap_or_default();
    let first_diff = (0..width).find(|&r| at(&lhs, r) != at(&rhs, r));
    let rep = VerificationReport::new("qbinomial", params!("j" => j));
    out.push(match first_diff {
        None => rep,
        Some(r) => VerificationReport::new("qbinomial", params!("j" => j, "x_power" => r))
            .compare(Side::Poly(at(&lhs, r)), Side::Poly(at(&rhs, r))),
    });
    for big_m in j..=i64::from(max_m) {
        let mut l = QPoly::zero();
        for r in 0..=j {
            let e = r * (big_m - j + r) - r * (r - 1) / 2;
            let mut t = q_binomial(j, r).shift(e as usize);
            if r % 2 == 1 {
                t = -t;
            }
            l += &t;
        }
        let rr = &q_binomial(big_m, j) * &q_pochhammer(j as usize);
        out.push(
            VerificationReport::new("qbinomial_subs", params!("j" => j, "M" => big_m))
                .compare(Side::Poly(l), Side::Poly(rr)),
        );
    }
    Ok(out)
}

/// Decompose `ch W(mω_a) · ch W(kω_b)` in the Weyl basis and compare with
/// the closed-form coefficients.
pub fn verify_decompose_product(variant: TensorVariant, m: u32, k: u32, rank: Rank) -> Result<VerificationReport> {
    let r = VerificationReport::new("decompose", params!("variant" => variant, "n" => rank, "m" => m, "k" => k));
    let (a, b) = variant.factors(i64::from(m), i64::from(k), rank)?;
    let product = qwhittaker_char(&a)?.multiply(&qwhittaker_char(&b)?)?;
    let got = normalize_terms(decompose_weyl_basis(&product)?);
    let want = normalize_terms(lemma51_terms(variant, m, k, rank)?);
    let as_char = |ts: &[WeylTerm]| {
        let mut c = GradedCharacter::zero(rank);
        for t in ts {
            let mut e = vec![0u32; rank.num_vars()];
            for (idx, &x) in t.weight.coeffs().iter().enumerate() {
                e[idx] = x as u32;
            }
            c.add_term(e, &t.coeff);
        }
        c
    };
    Ok(r.compare(Side::Character(as_char(&got)), Side::Character(as_char(&want))))
}

/// Merge equal weights, drop zero coefficients, sort by weight.
pub fn normalize_terms(terms: Vec<WeylTerm>) -> Vec<WeylTerm> {
    let mut map: std::collections::BTreeMap<Weight, QPoly> = Default::default();
    for t in terms {
        *map.entry(t.weight).or_default() += &t.coeff;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(weight, coeff)| WeylTerm { weight, coeff }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn w(n: usize, c: &[i64]) -> Weight {
        Weight::new(r(n), c.to_vec()).unwrap()
    }

    #[test]
    fn module_dims() {
        assert_eq!(weyl_module_dim(&w(3, &[2, 0, 1])), BigInt::from(64));
        assert_eq!(weyl_module_dim(&w(2, &[1, 1])), BigInt::from(9));
    }

    #[test]
    fn examples_pass() {
        assert!(verify_lemma51(TensorVariant::Omega1Omega1, 1, 1, r(2)).unwrap().passed());
        assert!(verify_lemma51(TensorVariant::Omega1OmegaN, 3, 0, r(3)).unwrap().passed());
        assert!(verify_lemma51(TensorVariant::OmegaNOmegaN, 2, 2, r(3)).unwrap().passed());
        assert!(verify_lemma64(1, 1).unwrap().passed());
        assert!(verify_lemma64(3, 0).unwrap().passed());
        assert!(verify_lemma64(3, 2).unwrap().passed());
        assert!(verify_lemma72(MVariant::First, 1, 1, r(2)).unwrap().passed());
        assert!(verify_lemma72(MVariant::First, 3, 0, r(3)).unwrap().passed());
        assert!(verify_lemma72(MVariant::Last, 2, 2, r(3)).unwrap().passed());
        assert!(truncated_dim_check(&w(2, &[1, 1]), 1).unwrap().passed());
        assert!(truncated_dim_check(&w(2, &[2, 2]), 2).unwrap().passed());
        assert!(verify_truncation_step(&w(2, &[2, 3]), 2).unwrap().passed());
        assert!(verify_qbinomial(4, 8).unwrap().iter().all(VerificationReport::passed));
        assert!(verify_decompose_product(TensorVariant::Omega1Omega1, 2, 3, r(2)).unwrap().passed());
    }

    #[test]
    fn failures_carry_both_sides() {
        let rep = VerificationReport::new("x", vec![]).compare(Side::Integer(1.into()), Side::Integer(2.into()));
        assert!(rep.failed());
        assert!(rep.sides.is_some());
        assert!(rep.to_json().get("lhs").is_some());
    }
}
