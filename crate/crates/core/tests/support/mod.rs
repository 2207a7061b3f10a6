//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's polynomial helpers; polynomials are plain `Vec<i64>`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use weylfusion::charformulas::qwhittaker_char;
use weylfusion::{GradedCharacter, QPoly, Rank, Weight};

pub type Poly = Vec<i64>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn shift(p: &[i64], s: usize) -> Poly {
    if p.is_empty() {
        return vec![];
    }
    let mut out = vec![0; s];
    out.extend_from_slice(p);
    out
}

pub fn neg(p: &[i64]) -> Poly {
    p.iter().map(|x| -x).collect()
}

/// `[n k]_q` by the q-Pascal rule `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn qbin(n: i64, k: i64) -> Poly {
    if k < 0 || k > n || n < 0 {
        return vec![];
    }
    let n = n as usize;
    let k = k as usize;
    let mut table: Vec<Vec<Poly>> = vec![vec![vec![]; n + 1]; n + 1];
    for a in 0..=n {
        table[a][0] = vec![1];
        for b in 1..=a {
            let left = table[a - 1][b - 1].clone();
            let right = if b <= a - 1 { shift(&table[a - 1][b], b) } else { vec![] };
            table[a][b] = add(&left, &right);
        }
    }
    table[n][k].clone()
}

/// `(1-q)(1-q^2)⋯(1-q^i)`.
pub fn poch(i: usize) -> Poly {
    let mut out = vec![1];
    for k in 1..=i {
        let mut f = vec![0; k + 1];
        f[0] = 1;
        f[k] = -1;
        out = mul(&out, &f);
    }
    out
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * u128::from(n - i) / u128::from(i + 1);
    }
    r
}

pub fn to_qpoly(p: &[i64]) -> QPoly {
    QPoly::from_i64s(p)
}

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn weight(n: usize, c: &[i64]) -> Weight {
    Weight::new(rank(n), c.to_vec()).unwrap()
}

/// `Σ c_i · ch W_loc(λ_i)`.
pub fn combine(n: usize, terms: &[(Vec<i64>, Poly)]) -> GradedCharacter {
    let mut out = GradedCharacter::zero(rank(n));
    for (w, c) in terms {
        out.add_scaled(&qwhittaker_char(&weight(n, w)).unwrap(), &to_qpoly(c)).unwrap();
    }
    out
}

fn sparse(n: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, x) in entries {
        v[i - 1] += x;
    }
    v
}

/// The three displayed closed forms for one-row tensor products, variant
/// 0: `mω_1 ⊗ kω_n`, 1: `mω_1 ⊗ kω_1`, 2: `mω_n ⊗ kω_n`.
pub fn one_row_closed_form(variant: usize, m: i64, k: i64, n: usize) -> Vec<(Vec<i64>, Poly)> {
    (0..=m.min(k))
        .map(|i| {
            let w = match variant {
                0 => sparse(n, &[(1, m - i), (n, k - i)]),
                1 => sparse(n, &[(1, m + k - 2 * i), (2, i)]),
                _ => sparse(n, &[(n - 1, i), (n, m + k - 2 * i)]),
            };
            (w, mul(&mul(&qbin(m, i), &qbin(k, i)), &poch(i as usize)))
        })
        .collect()
}

/// `ch W_{|λ|-j}(λ)` for `sl_3` in the Weyl basis.
pub fn truncated_terms(l: [i64; 2], j: i64) -> Vec<(Vec<i64>, Poly)> {
    let h = l[0] + l[1];
    (0..=j)
        .map(|i| {
            let mut c = shift(&qbin(j, i), (i * (h - j) - i * (i - 1) / 2) as usize);
            if i % 2 == 1 {
                c = neg(&c);
            }
            (vec![l[0] - i, l[1] - i], c)
        })
        .collect()
}

/// `ch M(ν, 2sω_1)` (`last = false`) or `ch M(ν, 2sω_n)` (`last = true`),
/// with `lead` and `side` the coefficients of `ω_1, ω_2` (resp. `ω_n, ω_{n-1}`).
pub fn m_module_terms(n: usize, lead: i64, side: i64, s: i64, last: bool) -> Vec<(Vec<i64>, Poly)> {
    (0..=s)
        .map(|i| {
            let mut c = shift(&qbin(s, i), (i * (s + lead) - i * (i - 1) / 2) as usize);
            if i % 2 == 1 {
                c = neg(&c);
            }
            let w = if last {
                sparse(n, &[(n - 1, side + i), (n, 2 * s + lead - 2 * i)])
            } else {
                sparse(n, &[(1, 2 * s + lead - 2 * i), (2, side + i)])
            };
            (w, c)
        })
        .collect()
}

pub fn scale_terms(terms: Vec<(Vec<i64>, Poly)>, c: &[i64]) -> Vec<(Vec<i64>, Poly)> {
    terms.into_iter().map(|(w, p)| (w, mul(&p, c))).collect()
}

/// `ch V(λ)` in `n + 1` variables by enumerating semistandard tableaux of
/// shape `parts` row by row.
pub fn schur(parts: &[u32], vars: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fill(parts, vars, 0, &mut rows, &mut out);
    out
}

fn fill(parts: &[u32], vars: usize, r: usize, rows: &mut Vec<Vec<u32>>, out: &mut BTreeMap<Vec<u32>, i64>) {
    if r == parts.len() {
        let mut e = vec![0u32; vars];
        for row in rows.iter() {
            for &x in row {
                e[x as usize] += 1;
            }
        }
        *out.entry(e).or_insert(0) += 1;
        return;
    }
    let len = parts[r] as usize;
    let mut row = vec![0u32; len];
    rows_for(parts, vars, r, 0, &mut row, rows, out);
}

fn rows_for(
    parts: &[u32],
    vars: usize,
    r: usize,
    c: usize,
    row: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Vec<u32>, i64>,
) {
    if c == row.len() {
        rows.push(row.clone());
        fill(parts, vars, r + 1, rows, out);
        rows.pop();
        return;
    }
    let lo_row = if c > 0 { row[c - 1] } else { 0 };
    let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 0 };
    for x in lo_row.max(lo_col)..vars as u32 {
        row[c] = x;
        rows_for(parts, vars, r, c + 1, row, rows, out);
    }
}

/// Bounding partition `(Σ_{i≥1} m_i, Σ_{i≥2} m_i, …)` of a weight.
pub fn partition_of(coeffs: &[i64]) -> Vec<u32> {
    (0..coeffs.len()).map(|k| coeffs[k..].iter().sum::<i64>() as u32).filter(|&x| x > 0).collect()
}

/// All dominant weights of rank `n` with `Σ m_i ≤ total`.
pub fn dominant(n: usize, total: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=total - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `dim W_loc(λ) = ∏ C(n+1, i)^{m_i}`.
pub fn weyl_dim(coeffs: &[i64]) -> u128 {
    let n = coeffs.len() as u64;
    coeffs.iter().enumerate().map(|(i, &m)| binom(n + 1, i as u64 + 1).pow(m as u32)).product()
}
