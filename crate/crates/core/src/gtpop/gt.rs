use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::weights::{bounding_sequence, Partition, Rank, Weight};

/// A Gelfand-Tsetlin pattern. `rows[r]` has `r + 1` entries; the last row
/// is the bounding sequence. Entry `i` of row `r` lies between entries
/// `i + 1` and `i` of row `r + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() < 2 {
            return domain("a pattern needs at least two rows");
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return domain(format!("row {} has {} entries, expected {}", r + 1, row.len(), r + 1));
            }
        }
        for r in 0..rows.len() - 1 {
            let (up, down) = (&rows[r], &rows[r + 1]);
            for i in 0..up.len() {
                if up[i] > down[i] || up[i] < down[i + 1] {
                    return domain(format!("rows {} and {} do not interlace", r + 1, r + 2));
                }
            }
        }
        if rows.last().unwrap().windows(2).any(|w| w[0] < w[1]) {
            return domain("bounding row is not weakly decreasing");
        }
        Ok(GtPattern { rows })
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.rows.len() - 1).expect("patterns have at least two rows")
    }

    #[inline]
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The bounding sequence (last row).
    pub fn bounding(&self) -> &[u32] {
        self.rows.last().unwrap()
    }

    /// `λ_i^j` with 1-based row `j` and position `i`.
    #[inline]
    pub fn entry(&self, j: usize, i: usize) -> u32 {
        self.rows[j - 1][i - 1]
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// Exponent vector of the monomial attached to a pattern: entry `k` is the
/// sum of row `k` minus the sum of row `k - 1` (row 0 is empty), so the
/// patterns of `ω_1` give `x_1 + ⋯ + x_{n+1}`.
pub fn pattern_weight(p: &GtPattern) -> Vec<u32> {
    let mut prev = 0u32;
    p.rows
        .iter()
        .map(|row| {
            let s: u32 = row.iter().sum();
            let w = s - prev;
            prev = s;
            w
        })
        .collect()
}

/// Streaming enumeration of all GT patterns with a fixed bounding row.
///
/// Order: lexicographic in the rows read from the bottom (row `n`) up to the
/// top row, so the top entry varies fastest.
#[derive(Debug, Clone)]
pub struct GtIter {
    current: Option<Vec<Vec<u32>>>,
}

impl GtIter {
    fn from_bounding(bottom: Vec<u32>) -> Self {
        let n = bottom.len() - 1;
        let mut rows = vec![Vec::new(); n + 1];
        rows[n] = bottom;
        fill_minimal(&mut rows, n);
        GtIter { current: Some(rows) }
    }
}

/// Set rows `0..below` to their smallest admissible values.
fn fill_minimal(rows: &mut [Vec<u32>], below: usize) {
    for r in (0..below).rev() {
        rows[r] = rows[r + 1][1..].to_vec();
    }
}

impl Iterator for GtIter {
    type Item = GtPattern;

    fn next(&mut self) -> Option<GtPattern> {
        let rows = self.current.as_mut()?;
        let out = GtPattern { rows: rows.clone() };
        let n = rows.len() - 1;
        let mut advanced = false;
        'outer: for r in 0..n {
            for i in (0..=r).rev() {
                if rows[r][i] < rows[r + 1][i] {
                    rows[r][i] += 1;
                    for t in i + 1..=r {
                        rows[r][t] = rows[r + 1][t + 1];
                    }
                    fill_minimal(rows, r);
                    advanced = true;
                    break 'outer;
                }
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

/// All GT patterns with bounding row `bounding` (padded to `n + 1` entries).
pub fn enumerate_gt(bounding: &Partition, rank: Rank) -> Result<GtIter> {
    let bottom = bounding.padded(rank.num_vars())?;
    Ok(GtIter::from_bounding(bottom))
}

/// All GT patterns for the bounding sequence of a dominant weight.
pub fn enumerate_gt_weight(lambda: &Weight) -> Result<GtIter> {
    lambda.require_dominant()?;
    Ok(GtIter::from_bounding(bounding_sequence(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_gt(&part(&[1, 0]), r(1)).unwrap().count(), 2);
        assert_eq!(enumerate_gt(&part(&[1, 0, 0]), r(2)).unwrap().count(), 3);
        assert_eq!(enumerate_gt(&part(&[1, 1, 0]), r(2)).unwrap().count(), 3);
        assert_eq!(enumerate_gt(&part(&[2, 1, 0]), r(2)).unwrap().count(), 8);
        assert!(enumerate_gt(&part(&[1, 1, 1]), r(1)).is_err());
    }

    #[test]
    fn weights_of_omega1() {
        let pats: Vec<_> = enumerate_gt(&part(&[1, 0]), r(1)).unwrap().collect();
        let ws: Vec<_> = pats.iter().map(pattern_weight).collect();
        assert_eq!(ws, vec![vec![0, 1], vec![1, 0]]);
        let zero: Vec<_> = enumerate_gt(&part(&[0, 0]), r(1)).unwrap().map(|p| pattern_weight(&p)).collect();
        assert_eq!(zero, vec![vec![0, 0]]);
    }

    #[test]
    fn weights_of_omega2_sl3() {
        let mut ws: Vec<_> = enumerate_gt(&part(&[1, 1, 0]), r(2)).unwrap().map(|p| pattern_weight(&p)).collect();
        ws.sort();
        assert_eq!(ws, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn patterns_are_valid_distinct_and_ordered() {
        let pats: Vec<_> = enumerate_gt(&part(&[3, 1, 0, 0]), r(3)).unwrap().collect();
        let keys: Vec<Vec<u32>> = pats
            .iter()
            .map(|p| p.rows().iter().rev().skip(1).flatten().copied().collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        for p in &pats {
            assert!(GtPattern::new(p.rows().to_vec()).is_ok());
        }
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(GtPattern::new(vec![vec![2], vec![1, 0]]).is_err());
        assert!(GtPattern::new(vec![vec![1], vec![1]]).is_err());
        assert!(GtPattern::new(vec![vec![1], vec![1, 0]]).is_ok());
    }
}
