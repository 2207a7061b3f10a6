//! Weights, roots and partitions for `sl(n+1)`.
//!
//! Weights are kept in fundamental-weight coordinates: `Weight { coeffs }`
//! stands for `Σ coeffs[i-1] ω_i`. A dominant weight `λ = Σ m_i ω_i`
//! corresponds to the partition with last part 0 whose consecutive
//! differences are the `m_i` (the bounding sequence of its GT patterns).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// The rank `n` of `sl(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    /// The `n` of `sl(n+1)`.
    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// Number of variables `x_1, …, x_{n+1}` in a character.
    #[inline]
    pub fn num_vars(self) -> usize {
        self.0 + 1
    }

    pub(crate) fn check(self, other: Rank) -> Result<()> {
        if self != other {
            return Err(Error::RankMismatch { expected: self.0, found: other.0 });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A positive root `α_{ij} = α_i + … + α_j`, `1 ≤ i ≤ j ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j {
            return domain(format!("root α_{{{i},{j}}} needs 1 <= i <= j"));
        }
        Ok(Root { i, j })
    }

    pub fn simple(i: usize) -> Result<Self> {
        Root::new(i, i)
    }

    /// The highest root `θ = α_{1n}`.
    pub fn theta(rank: Rank) -> Self {
        Root { i: 1, j: rank.n() }
    }

    /// All positive roots of `sl(n+1)`, ordered by `(i, j)`.
    pub fn positive_roots(rank: Rank) -> Vec<Root> {
        let n = rank.n();
        (1..=n).flat_map(|i| (i..=n).map(move |j| Root { i, j })).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α_{{{},{}}}", self.i, self.j)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    rank: Rank,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(rank: Rank, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != rank.n() {
            return Err(Error::RankMismatch { expected: rank.n(), found: coeffs.len() });
        }
        Ok(Weight { rank, coeffs })
    }

    pub fn zero(rank: Rank) -> Self {
        Weight { rank, coeffs: vec![0; rank.n()] }
    }

    /// `ω_i`, `1 ≤ i ≤ n`.
    pub fn fundamental(rank: Rank, i: usize) -> Result<Self> {
        Weight::sparse(rank, &[(i, 1)])
    }

    /// `Σ c ω_i` over the listed `(i, c)`. Indices outside `1..=n` are only
    /// accepted with coefficient 0, so formulas written for a generic rank
    /// can be instantiated where the extra terms vanish.
    pub fn sparse(rank: Rank, terms: &[(usize, i64)]) -> Result<Self> {
        let mut coeffs = vec![0; rank.n()];
        for &(i, c) in terms {
            if c == 0 {
                continue;
            }
            if i == 0 || i > rank.n() {
                return domain(format!("ω_{i} does not exist for sl({})", rank.n() + 1));
            }
            coeffs[i - 1] += c;
        }
        Ok(Weight { rank, coeffs })
    }

    /// The highest root `θ = ω_1 + ω_n` (`2ω_1` when `n = 1`).
    pub fn theta(rank: Rank) -> Self {
        let mut coeffs = vec![0; rank.n()];
        coeffs[0] += 1;
        coeffs[rank.n() - 1] += 1;
        Weight { rank, coeffs }
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `ω_i` (1-based); 0 outside `1..=n`.
    pub fn coeff(&self, i: usize) -> i64 {
        if i == 0 || i > self.coeffs.len() {
            0
        } else {
            self.coeffs[i - 1]
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `λ(h_θ) = Σ m_i`, written `|λ|` for `sl_3`.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        Weight { rank: self.rank, coeffs: self.coeffs.iter().map(|&x| c * x).collect() }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.rank.check(other.rank)?;
        Ok(Weight {
            rank: self.rank,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.checked_add(&other.scale(-1))
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if !self.is_dominant() {
            return domain(format!("weight {self} is not dominant"));
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weights of different rank")
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weights of different rank")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}ω{}", idx + 1)?;
            } else {
                write!(f, "{sign}{mag}ω{}", idx + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `λ(h_α)` for `α = α_{ij}`, i.e. `Σ_{k=i}^{j} m_k`.
pub fn pairing(lambda: &Weight, alpha: Root) -> Result<i64> {
    if alpha.i == 0 || alpha.i > alpha.j {
        return domain(format!("invalid root {alpha}"));
    }
    if alpha.j > lambda.rank.n() {
        return Err(Error::RankMismatch { expected: lambda.rank.n(), found: alpha.j });
    }
    Ok(lambda.coeffs[alpha.i - 1..alpha.j].iter().sum())
}

/// The diagram involution `-w_0`: `ω_i ↦ ω_{n+1-i}`.
pub fn w0_dual(lambda: &Weight) -> Weight {
    let mut coeffs = lambda.coeffs.clone();
    coeffs.reverse();
    Weight { rank: lambda.rank, coeffs }
}

/// A partition `p_1 ≥ p_2 ≥ … ≥ 0`. Trailing zeros are dropped on
/// construction, so two partitions differing only in trailing zeros are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts.
    #[inline]
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `p_i` (1-based), 0 beyond the last nonzero part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Result<Vec<u32>> {
        if self.parts.len() > len {
            return domain(format!("partition {self} has more than {len} nonzero parts"));
        }
        let mut v = self.parts.clone();
        v.resize(len, 0);
        Ok(v)
    }

    /// Conjugate partition: `p'_j = #{i : p_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    /// `p'_j`, the length of column `j`.
    pub fn column_len(&self, j: u32) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().filter(|&&p| p >= j).count()
    }

    /// Whether cell `(row, col)` (1-based) lies in the diagram.
    pub fn contains_cell(&self, row: usize, col: u32) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// Subtract the last of `len` parts from every part (`len` must cover all
    /// nonzero parts). Used to pass from a gl-partition to its sl-weight.
    pub fn normalized(&self, len: usize) -> Result<Partition> {
        let v = self.padded(len)?;
        let min = *v.last().unwrap_or(&0);
        Partition::new(v.into_iter().map(|p| p - min).collect())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Bounding sequence `b_λ = (Σ_{i≥1} m_i, Σ_{i≥2} m_i, …, m_n, 0)` of a
/// dominant weight, as a partition with `n + 1` entries (last one 0).
pub fn weight_to_bounding_partition(lambda: &Weight) -> Result<Partition> {
    lambda.require_dominant()?;
    Partition::new(bounding_sequence(lambda))
}

/// The bounding sequence as a padded vector of length `n + 1`.
pub fn bounding_sequence(lambda: &Weight) -> Vec<u32> {
    let n = lambda.rank.n();
    let mut out = vec![0u32; n + 1];
    for k in (0..n).rev() {
        out[k] = out[k + 1] + lambda.coeffs[k] as u32;
    }
    out
}

/// `λ = Σ (p_i - p_{i+1}) ω_i` for a partition with at most `n + 1` parts.
pub fn partition_to_weight(p: &Partition, rank: Rank) -> Result<Weight> {
    let v = p.padded(rank.num_vars())?;
    let coeffs = v.windows(2).map(|w| i64::from(w[0]) - i64::from(w[1])).collect();
    Weight::new(rank, coeffs)
}

/// Dominance order on partitions of equal size: partial sums of `p` are
/// bounded by those of `r`.
pub fn dominance_leq(p: &Partition, r: &Partition) -> Result<bool> {
    if p.size() != r.size() {
        return domain(format!("dominance needs equal sizes: |{p}| = {}, |{r}| = {}", p.size(), r.size()));
    }
    Ok(dominance_leq_vec(
        &p.parts.iter().map(|&x| i64::from(x)).collect::<Vec<_>>(),
        &r.parts.iter().map(|&x| i64::from(x)).collect::<Vec<_>>(),
    ))
}

/// Dominance on integer vectors of equal total (missing entries count as 0).
pub(crate) fn dominance_leq_vec(p: &[i64], r: &[i64]) -> bool {
    let len = p.len().max(r.len());
    let (mut sp, mut sr) = (0i64, 0i64);
    for k in 0..len {
        sp += p.get(k).copied().unwrap_or(0);
        sr += r.get(k).copied().unwrap_or(0);
        if sp > sr {
            return false;
        }
    }
    true
}

/// Compare two exponent vectors of `n + 1` variables as sl-weights in the
/// dominance order, after shifting one of them by a multiple of `(1,…,1)`.
/// Returns `None` when the two are incomparable (including different
/// classes modulo the root lattice).
pub(crate) fn sl_dominance_cmp(a: &[u32], b: &[u32]) -> Option<Ordering> {
    let len = a.len() as i64;
    let sa: i64 = a.iter().map(|&x| i64::from(x)).sum();
    let sb: i64 = b.iter().map(|&x| i64::from(x)).sum();
    if (sa - sb).rem_euclid(len) != 0 {
        return None;
    }
    let shift = (sb - sa) / len;
    let av: Vec<i64> = a.iter().map(|&x| i64::from(x) + shift).collect();
    let bv: Vec<i64> = b.iter().map(|&x| i64::from(x)).collect();
    match (dominance_leq_vec(&av, &bv), dominance_leq_vec(&bv, &av)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
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

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&w(2, &[1, 1]), Root::theta(r(2))).unwrap(), 2);
        assert_eq!(pairing(&w(2, &[2, 0]), Root::simple(2).unwrap()).unwrap(), 0);
        for (m1, m2) in [(0, 0), (3, 1), (5, 7)] {
            assert_eq!(pairing(&w(2, &[m1, m2]), Root::theta(r(2))).unwrap(), m1 + m2);
        }
    }

    #[test]
    fn pairing_out_of_range_is_rank_mismatch() {
        let err = pairing(&w(2, &[1, 1]), Root::new(1, 3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::RankMismatch { .. }));
    }

    #[test]
    fn bounding_partition_examples() {
        assert_eq!(weight_to_bounding_partition(&w(2, &[2, 1])).unwrap(), p(&[3, 1, 0]));
        assert_eq!(weight_to_bounding_partition(&w(3, &[0, 0, 0])).unwrap(), p(&[0, 0, 0, 0]));
        assert_eq!(weight_to_bounding_partition(&w(2, &[5, 0])).unwrap(), p(&[5]));
        assert!(weight_to_bounding_partition(&w(2, &[-1, 2])).is_err());
    }

    #[test]
    fn partition_to_weight_examples() {
        assert_eq!(partition_to_weight(&p(&[3, 1, 0]), r(2)).unwrap(), w(2, &[2, 1]));
        for n in 1..5 {
            let kk = vec![4u32; n];
            let mut expected = vec![0; n];
            expected[n - 1] = 4;
            assert_eq!(partition_to_weight(&p(&kk), r(n)).unwrap(), w(n, &expected));
        }
        assert_eq!(partition_to_weight(&p(&[1, 1]), r(1)).unwrap(), w(1, &[0]));
        assert!(partition_to_weight(&p(&[1, 1, 1]), r(1)).is_err());
    }

    #[test]
    fn w0_dual_examples() {
        assert_eq!(w0_dual(&w(2, &[1, 0])), w(2, &[0, 1]));
        for n in 1..5 {
            let t = Weight::theta(r(n));
            assert_eq!(w0_dual(&t), t);
        }
        assert_eq!(w0_dual(&w(3, &[3, 0, 1])), w(3, &[1, 0, 3]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])).unwrap());
        assert!(!dominance_leq(&p(&[2, 0]), &p(&[1, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[2, 2, 0])).unwrap());
        assert!(dominance_leq(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn partitions_ignore_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn theta_and_sparse() {
        assert_eq!(Weight::theta(r(1)), w(1, &[2]));
        assert_eq!(Weight::theta(r(3)), w(3, &[1, 0, 1]));
        assert!(Weight::sparse(r(1), &[(2, 1)]).is_err());
        assert_eq!(Weight::sparse(r(1), &[(1, 3), (2, 0)]).unwrap(), w(1, &[3]));
        assert_eq!(w(3, &[2, 0, -1]).to_string(), "2ω1-ω3");
    }

    #[test]
    fn sl_dominance_shifts() {
        // (2,0,0) vs (1,1,0) as sl_3 weights: 2ω1 > ω2? 2ω1 - ω2 = α1 + ... check via gl: same size.
        assert_eq!(sl_dominance_cmp(&[2, 0, 0], &[1, 1, 0]), Some(Ordering::Greater));
        // (1,1,1) is the zero weight, same class as (0,0,0).
        assert_eq!(sl_dominance_cmp(&[1, 1, 1], &[0, 0, 0]), Some(Ordering::Equal));
        // ω1 vs 0 lie in different classes.
        assert_eq!(sl_dominance_cmp(&[1, 0, 0], &[0, 0, 0]), None);
    }
}
