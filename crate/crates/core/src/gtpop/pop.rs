use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::gtpop::gt::{enumerate_gt_weight, pattern_weight, GtIter, GtPattern};
use crate::weights::{bounding_sequence, Rank, Root, Weight};

/// A cell `(j, i)` of a pattern: row `j ∈ 1..=n`, position `i ∈ 1..=j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub pos: usize,
}

/// Cells of a rank-`n` pattern in lexicographic `(row, pos)` order.
pub fn cells(rank: Rank) -> impl Iterator<Item = Cell> {
    let n = rank.n();
    (1..=n).flat_map(|row| (1..=row).map(move |pos| Cell { row, pos }))
}

/// `(parts, bound)` for the overlay at a cell: `λ_i^{j+1} - λ_i^j` parts,
/// each at most `λ_i^j - λ_{i+1}^{j+1}`.
pub fn overlay_shape(p: &GtPattern, c: Cell) -> (u32, u32) {
    let (j, i) = (c.row, c.pos);
    let parts = p.entry(j + 1, i) - p.entry(j, i);
    let bound = p.entry(j, i) - p.entry(j + 1, i + 1);
    (parts, bound)
}

/// A partition overlaid pattern. `overlays` follows [`cells`] order; each
/// overlay is stored as exactly the prescribed number of weakly decreasing
/// parts, zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pop {
    pattern: GtPattern,
    overlays: Vec<Vec<u32>>,
}

impl Pop {
    pub fn new(pattern: GtPattern, overlays: Vec<Vec<u32>>) -> Result<Self> {
        let rank = pattern.rank();
        let cs: Vec<Cell> = cells(rank).collect();
        if overlays.len() != cs.len() {
            return domain(format!("expected {} overlays, found {}", cs.len(), overlays.len()));
        }
        for (c, ov) in cs.iter().zip(&overlays) {
            let (a, b) = overlay_shape(&pattern, *c);
            if ov.len() != a as usize
                || ov.iter().any(|&x| x > b)
                || ov.windows(2).any(|w| w[0] < w[1])
            {
                return domain(format!(
                    "overlay {ov:?} at cell ({}, {}) must have {a} weakly decreasing parts in [0, {b}]",
                    c.row, c.pos
                ));
            }
        }
        Ok(Pop { pattern, overlays })
    }

    #[inline]
    pub fn pattern(&self) -> &GtPattern {
        &self.pattern
    }

    #[inline]
    pub fn overlays(&self) -> &[Vec<u32>] {
        &self.overlays
    }

    pub fn overlay(&self, c: Cell) -> &[u32] {
        &self.overlays[cell_index(c)]
    }

    pub fn rank(&self) -> Rank {
        self.pattern.rank()
    }

    pub fn weight(&self) -> Vec<u32> {
        pattern_weight(&self.pattern)
    }

    /// `|π(j)^i|`, the number of boxes in one overlay.
    pub fn cell_size(&self, c: Cell) -> u32 {
        self.overlay(c).iter().sum()
    }

    /// `r(s)` at a cell: multiplicity of `s` among its parts, `s = 0..=bound`.
    pub fn part_counts(&self, c: Cell) -> Vec<u32> {
        let (_, b) = overlay_shape(&self.pattern, c);
        let mut r = vec![0u32; b as usize + 1];
        for &x in self.overlay(c) {
            r[x as usize] += 1;
        }
        r
    }
}

fn cell_index(c: Cell) -> usize {
    c.row * (c.row - 1) / 2 + (c.pos - 1)
}

/// Total number of overlay boxes; the `t`-degree of the basis word.
pub fn pop_grade(p: &Pop) -> u64 {
    p.overlays.iter().flatten().map(|&x| u64::from(x)).sum()
}

/// Advance a weakly decreasing vector with entries in `[0, b]` to its
/// lexicographic successor; `false` when exhausted.
fn next_box_partition(v: &mut [u32], b: u32) -> bool {
    for k in (0..v.len()).rev() {
        if v[k] < b && (k == 0 || v[k] < v[k - 1]) {
            v[k] += 1;
            for x in &mut v[k + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Streaming enumeration of `𝔓(λ)`: GT patterns in [`GtIter`] order, and
/// for each pattern the overlay tuples in lexicographic order with the
/// last cell varying fastest.
#[derive(Debug, Clone)]
pub struct PopIter {
    patterns: GtIter,
    current: Option<(GtPattern, Vec<u32>, Vec<Vec<u32>>)>,
}

impl PopIter {
    fn load(&mut self) {
        self.current = self.patterns.next().map(|p| {
            let rank = p.rank();
            let shapes: Vec<(u32, u32)> = cells(rank).map(|c| overlay_shape(&p, c)).collect();
            let bounds = shapes.iter().map(|s| s.1).collect();
            let overlays = shapes.iter().map(|s| vec![0; s.0 as usize]).collect();
            (p, bounds, overlays)
        });
    }
}

impl Iterator for PopIter {
    type Item = Pop;

    fn next(&mut self) -> Option<Pop> {
        let (pattern, bounds, overlays) = self.current.as_mut()?;
        let out = Pop { pattern: pattern.clone(), overlays: overlays.clone() };
        let mut advanced = false;
        for k in (0..overlays.len()).rev() {
            if next_box_partition(&mut overlays[k], bounds[k]) {
                for ov in &mut overlays[k + 1..] {
                    ov.iter_mut().for_each(|x| *x = 0);
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.load();
        }
        Some(out)
    }
}

/// All partition overlaid patterns of a dominant weight.
pub fn enumerate_pops(lambda: &Weight) -> Result<PopIter> {
    let mut it = PopIter { patterns: enumerate_gt_weight(lambda)?, current: None };
    it.load();
    Ok(it)
}

/// The total order on `𝔓(μ)`.
///
/// Cells are ordered lexicographically by `(row, pos)` and scanned from the
/// last one backwards. At the first cell where the overlay sizes differ, the
/// POP with the smaller size is the greater one. If all sizes agree, at the
/// first cell (same scan) where the part counts differ, the POP with the
/// larger `r(s)` at the smallest differing `s` is the greater one.
pub fn pop_compare(a: &Pop, b: &Pop) -> Result<Ordering> {
    if a.pattern.bounding() != b.pattern.bounding() {
        return domain(format!(
            "POPs with bounding rows {:?} and {:?} are not comparable",
            a.pattern.bounding(),
            b.pattern.bounding()
        ));
    }
    let cs: Vec<Cell> = cells(a.rank()).collect();
    for &c in cs.iter().rev() {
        let (sa, sb) = (a.cell_size(c), b.cell_size(c));
        if sa != sb {
            return Ok(sb.cmp(&sa));
        }
    }
    for &c in cs.iter().rev() {
        let (ra, rb) = (a.part_counts(c), b.part_counts(c));
        if ra == rb {
            continue;
        }
        let len = ra.len().max(rb.len());
        for s in 0..len {
            let x = ra.get(s).copied().unwrap_or(0);
            let y = rb.get(s).copied().unwrap_or(0);
            if x != y {
                return Ok(x.cmp(&y));
            }
        }
    }
    Ok(Ordering::Equal)
}

/// The least element of `𝔓(μ)` strictly greater than `p`, if any.
pub fn pop_successor(p: &Pop) -> Result<Option<Pop>> {
    let lambda = bounding_to_weight(p.pattern.bounding(), p.rank())?;
    let mut best: Option<Pop> = None;
    for other in enumerate_pops(&lambda)? {
        if pop_compare(&other, p)? != Ordering::Greater {
            continue;
        }
        match &best {
            Some(b) if pop_compare(&other, b)? != Ordering::Less => {}
            _ => best = Some(other),
        }
    }
    Ok(best)
}

fn bounding_to_weight(bounding: &[u32], rank: Rank) -> Result<Weight> {
    let coeffs = bounding.windows(2).map(|w| i64::from(w[0]) - i64::from(w[1])).collect();
    Weight::new(rank, coeffs)
}

/// The POP with `λ_i^j = b_{i+n+1-j}` and all overlay parts zero; its
/// weight is the lowest weight of the module.
pub fn lowest_weight_pop(lambda: &Weight) -> Result<Pop> {
    lambda.require_dominant()?;
    let b = bounding_sequence(lambda);
    let n = lambda.rank().n();
    let rows: Vec<Vec<u32>> = (1..=n + 1).map(|j| (1..=j).map(|i| b[i + n - j]).collect()).collect();
    let pattern = GtPattern::new(rows)?;
    let overlays = cells(lambda.rank()).map(|c| vec![0; overlay_shape(&pattern, c).0 as usize]).collect();
    Pop::new(pattern, overlays)
}

/// One factor `y_{ij}(λ, π)` of a basis word: the root `α_{ij}` and, for each
/// power `s` of `t`, the exponent `r^{ij}(s)` of `y_{ij} ⊗ t^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordFactor {
    pub root: Root,
    pub powers: BTreeMap<u32, u32>,
}

/// The monomial `y_1(λ, π) ⋯ y_n(λ, π)` with `y_j = y_{1j} ⋯ y_{jj}`, as
/// symbolic data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisWord {
    pub factors: Vec<WordFactor>,
}

impl BasisWord {
    /// Total power of `t`.
    pub fn t_degree(&self) -> u64 {
        self.factors
            .iter()
            .flat_map(|f| f.powers.iter())
            .map(|(&s, &m)| u64::from(s) * u64::from(m))
            .sum()
    }

    /// Total exponent of `y_{ij}` over all powers of `t`.
    pub fn root_exponent(&self, root: Root) -> u32 {
        self.factors.iter().filter(|f| f.root == root).flat_map(|f| f.powers.values()).sum()
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for fac in &self.factors {
            for (&s, &m) in &fac.powers {
                if m == 0 {
                    continue;
                }
                write!(f, "(y_{{{}{}}}⊗t^{s})^{m}", fac.root.i, fac.root.j)?;
                any = true;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The basis word of a POP; cell `(j, i)` carries the root `α_{ij}`.
pub fn basis_word(p: &Pop) -> BasisWord {
    let rank = p.rank();
    let mut factors = Vec::new();
    for c in cells(rank) {
        let mut powers = BTreeMap::new();
        for &x in p.overlay(c) {
            *powers.entry(x).or_insert(0) += 1;
        }
        if powers.is_empty() {
            continue;
        }
        factors.push(WordFactor { root: Root { i: c.pos, j: c.row }, powers });
    }
    BasisWord { factors }
}

#[derive(Serialize, Deserialize)]
struct OverlayJson {
    cell: [usize; 2],
    parts: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PopJson {
    rows: Vec<Vec<u32>>,
    overlays: Vec<OverlayJson>,
    weight: Vec<u32>,
    grade: u64,
    word: String,
}

impl Serialize for Pop {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let overlays = cells(self.rank())
            .zip(&self.overlays)
            .map(|(c, ov)| OverlayJson { cell: [c.row, c.pos], parts: ov.clone() })
            .collect();
        PopJson {
            rows: self.pattern.rows().to_vec(),
            overlays,
            weight: self.weight(),
            grade: pop_grade(self),
            word: basis_word(self).to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pop {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PopJson::deserialize(d)?;
        let pattern = GtPattern::new(raw.rows).map_err(D::Error::custom)?;
        let mut by_cell: BTreeMap<(usize, usize), Vec<u32>> =
            raw.overlays.into_iter().map(|o| ((o.cell[0], o.cell[1]), o.parts)).collect();
        let overlays = cells(pattern.rank())
            .map(|c| by_cell.remove(&(c.row, c.pos)).unwrap_or_default())
            .collect();
        Pop::new(pattern, overlays).map_err(D::Error::custom)
    }
}
