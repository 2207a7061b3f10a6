mod support;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use support::*;
use weylfusion::charformulas::{decompose_weyl_basis, qwhittaker_char};
use weylfusion::filtration::{extract_filtration, fusion_dim, truncated_dim_check, FiltrationTheorem, XiTuple};
use weylfusion::gtpop::{cells, enumerate_gt, enumerate_pops, overlay_shape, pop_compare, pop_grade, GtPattern};
use weylfusion::qalg::{q_binomial, q_pochhammer};
use weylfusion::weights::{dominance_leq, pairing, partition_to_weight, w0_dual, weight_to_bounding_partition};
use weylfusion::{Partition, Pop, QFactorRatio, QPoly, Rank, Root, Weight};

fn dominant_weight(max_n: usize, max_coeff: i64) -> impl Strategy<Value = Weight> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_coeff, n).prop_map(move |c| weight(n, &c))
    })
}

fn partitions_of(size: u32, max: u32) -> Vec<Vec<u32>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=size.min(max)).rev() {
        for mut rest in partitions_of(size - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

proptest! {
    #[test]
    fn pairing_is_additive(n in 1usize..=4, a in proptest::collection::vec(0i64..6, 4), b in proptest::collection::vec(0i64..6, 4)) {
        let (x, y) = (weight(n, &a[..n]), weight(n, &b[..n]));
        for alpha in Root::positive_roots(rank(n)) {
            prop_assert_eq!(pairing(&(&x + &y), alpha).unwrap(), pairing(&x, alpha).unwrap() + pairing(&y, alpha).unwrap());
        }
    }

    #[test]
    fn bounding_partition_round_trip(n in 1usize..=4, parts in proptest::collection::vec(0u32..7, 1..=4)) {
        let mut parts = parts;
        parts.truncate(n);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        let w = partition_to_weight(&p, rank(n)).unwrap();
        prop_assert_eq!(weight_to_bounding_partition(&w).unwrap(), p);
    }

    #[test]
    fn w0_dual_is_an_involution(lam in dominant_weight(4, 5)) {
        let n = lam.rank().n();
        let d = w0_dual(&lam);
        prop_assert_eq!(w0_dual(&d), lam.clone());
        for a in Root::positive_roots(lam.rank()) {
            let mirror = Root::new(n + 1 - a.j, n + 1 - a.i).unwrap();
            prop_assert_eq!(pairing(&d, a).unwrap(), pairing(&lam, mirror).unwrap());
        }
    }

    #[test]
    fn q_pascal(n in 1i64..=20, r in 0i64..=20) {
        prop_assume!(r <= n);
        let rhs = &q_binomial(n - 1, r - 1) + &q_binomial(n - 1, r).shift(r as usize);
        prop_assert_eq!(q_binomial(n, r), rhs);
        prop_assert_eq!(q_binomial(n, r).eval_one(), BigInt::from(binom(n as u64, r as u64)));
    }

    #[test]
    fn pochhammer_step(m in 1usize..=20) {
        let mut prev = q_pochhammer(m - 1);
        prev.mul_one_minus_qk(m);
        prop_assert_eq!(q_pochhammer(m), prev);
    }

    #[test]
    fn ratio_round_trip(bins in proptest::collection::vec((0usize..8, 0usize..8), 0..4), pochs in proptest::collection::vec(0usize..6, 0..3)) {
        let mut ratio = QFactorRatio::one();
        let mut poly = QPoly::one();
        for &(a, b) in &bins {
            let (n, r) = (a.max(b), a.min(b));
            ratio = ratio.multiply(&QFactorRatio::q_binomial(n, r).unwrap());
            poly = &poly * &q_binomial(n as i64, r as i64);
        }
        for &m in &pochs {
            ratio = ratio.multiply(&QFactorRatio::pochhammer(m));
            poly = &poly * &q_pochhammer(m);
        }
        prop_assert_eq!(ratio.reduce().to_qpoly().unwrap(), poly);
    }

    #[test]
    fn fusion_dim_is_multiplicative(j in 0u32..5, c in proptest::collection::vec(0i64..4, 6)) {
        let x = XiTuple::try_from_coeffs(j, [c[0], c[1]], [c[2], c[3]], [c[4], c[5]]).unwrap();
        let part = |a: [i64; 2], b: [i64; 2], d: [i64; 2]| fusion_dim(&XiTuple::try_from_coeffs(0, a, b, d).unwrap());
        let z = [0, 0];
        let expect = part([c[0], c[1]], z, z) * part(z, [c[2], c[3]], z) * part(z, z, [c[4], c[5]]) * BigInt::from(8u32).pow(j);
        prop_assert_eq!(fusion_dim(&x), expect);
    }

    #[test]
    fn decompose_recovers_combinations(
        n in 1usize..=3,
        picks in proptest::collection::vec((0usize..100, proptest::collection::vec(-3i64..=3, 1..4)), 1..=5),
    ) {
        let pool = dominant(n, 3);
        let mut expect: BTreeMap<Vec<i64>, Poly> = BTreeMap::new();
        for (i, c) in &picks {
            let e = expect.entry(pool[i % pool.len()].clone()).or_default();
            *e = add(e, &trim(c.clone()));
        }
        expect.retain(|_, c| !c.is_empty());
        let terms: Vec<_> = expect.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let got: BTreeMap<Vec<i64>, Poly> = decompose_weyl_basis(&combine(n, &terms))
            .unwrap()
            .into_iter()
            .map(|t| (t.weight.coeffs().to_vec(), t.coeff.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect()))
            .collect();
        prop_assert_eq!(got, expect);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for size in 0..=8 {
        let ps: Vec<Partition> = partitions_of(size, size).into_iter().map(|p| Partition::new(p).unwrap()).collect();
        let leq = |a: &Partition, b: &Partition| dominance_leq(a, b).unwrap();
        for a in &ps {
            assert!(leq(a, a));
            for b in &ps {
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
fn weyl_dimension_formula(parts: &[u32], vars: usize) -> u128 {
    let l: Vec<i64> = (0..vars).map(|i| i64::from(parts.get(i).copied().unwrap_or(0))).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..vars {
        for j in i + 1..vars {
            num *= (l[i] - l[j] + (j - i) as i64) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as u128
}

#[test]
fn gt_count_is_weyl_dimension() {
    for n in 1..=3 {
        for c in dominant(n, 4) {
            let b = Partition::new(partition_of(&c)).unwrap();
            let count = enumerate_gt(&b, rank(n)).unwrap().count() as u128;
            assert_eq!(count, weyl_dimension_formula(b.parts(), n + 1), "n={n} λ={c:?}");
        }
    }
}

#[test]
fn pop_order_is_total() {
    for n in 1..=3 {
        for c in dominant(n, 4) {
            if weyl_dim(&c) > 200 {
                continue;
            }
            let pops: Vec<_> = enumerate_pops(&weight(n, &c)).unwrap().collect();
            let cmp = |a: &Pop, b: &Pop| pop_compare(a, b).unwrap();
            for (i, a) in pops.iter().enumerate() {
                for (k, b) in pops.iter().enumerate() {
                    let ab = cmp(a, b);
                    assert_eq!(ab == Ordering::Equal, i == k, "n={n} λ={c:?}");
                    assert_eq!(ab.reverse(), cmp(b, a));
                }
            }
            let mut sorted = pops.clone();
            sorted.sort_by(|a, b| cmp(a, b));
            for w in sorted.windows(3) {
                assert_eq!(cmp(&w[0], &w[2]), Ordering::Less);
            }
            for a in &pops {
                for b in &pops {
                    if cmp(a, b) != Ordering::Less {
                        continue;
                    }
                    for d in &pops {
                        if cmp(b, d) == Ordering::Less {
                            assert_eq!(cmp(a, d), Ordering::Less);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn overlay_generating_function_per_pattern() {
    for n in 1..=3 {
        for c in dominant(n, 3) {
            let mut by_pattern: BTreeMap<GtPattern, Poly> = BTreeMap::new();
            for p in enumerate_pops(&weight(n, &c)).unwrap() {
                let e = by_pattern.entry(p.pattern().clone()).or_default();
                *e = add(e, &shift(&[1], pop_grade(&p) as usize));
            }
            for (pat, gf) in by_pattern {
                let mut expect = vec![1];
                for cell in cells(rank(n)) {
                    let (a, b) = overlay_shape(&pat, cell);
                    expect = mul(&expect, &qbin(i64::from(a + b), i64::from(a)));
                }
                assert_eq!(gf, expect, "pattern {pat}");
            }
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn characters_are_fully_symmetric() {
    for n in 1..=3 {
        for c in dominant(n, 3) {
            let ch = qwhittaker_char(&weight(n, &c)).unwrap();
            for perm in permutations(n + 1) {
                for (e, p) in ch.terms() {
                    let moved: Vec<u32> = perm.iter().map(|&i| e[i]).collect();
                    assert_eq!(&ch.coeff(&moved), p, "n={n} λ={c:?}");
                }
            }
        }
    }
}

#[test]
fn filtration_dimensions_add_up() {
    for t in FiltrationTheorem::ALL {
        for n in [2usize, 3] {
            for m in 0..=4u32 {
                for k in 0..=4u32 {
                    let Ok(layers) = extract_filtration(m, k, t, rank(n)) else {
                        assert!(t == FiltrationTheorem::Thm66 && n != 2);
                        continue;
                    };
                    let total: BigInt =
                        layers.iter().map(|l| l.copies() * l.character().unwrap().dimension()).sum();
                    let (a, b) = t.factors(m, k, rank(n)).unwrap();
                    let expect = weyl_dim(a.coeffs()) * weyl_dim(b.coeffs());
                    assert_eq!(total, BigInt::from(expect), "{t} n={n} m={m} k={k}");
                    for l in &layers {
                        assert_eq!(l.max_shift() as u32, (m.min(k) - l.r) * l.r);
                    }
                }
            }
        }
    }
}

#[test]
fn truncated_dimension_matches_fusion_dimension() {
    for c in dominant(2, 8) {
        let lam = weight(2, &c);
        for j in 0..=c[0].min(c[1]) {
            assert!(truncated_dim_check(&lam, j as u32).unwrap().passed(), "λ={c:?} j={j}");
            let x = XiTuple::try_from_coeffs(j as u32, [c[0] - j, c[1] - j], [0, 0], [0, 0]).unwrap();
            let h = (c[0] + c[1] - 2 * j) as u32;
            assert_eq!(fusion_dim(&x), BigInt::from(8u32).pow(j as u32) * BigInt::from(3u32).pow(h));
        }
    }
}

#[test]
fn one_row_sl2_rank_is_rejected() {
    use weylfusion::charformulas::{lemma51_terms, TensorVariant};
    for v in TensorVariant::ALL {
        assert!(lemma51_terms(v, 2, 1, Rank::new(1).unwrap()).is_err());
    }
}
