use std::fmt;
use std::str::FromStr;

use crate::charformulas::{MVariant, TensorVariant};
use crate::error::{Error, Result};
use crate::filtration::checks::{
    truncated_dim_check, verify_decompose_product, verify_lemma51, verify_lemma64, verify_lemma72, verify_oracle,
    verify_pieri, verify_pop_count, verify_qbinomial, verify_specialization, verify_truncation_step,
};
use crate::filtration::layers::{verify_filtration, FiltrationTheorem};
use crate::filtration::report::VerificationReport;
use crate::filtration::section8::{verify_section8_recurrences, Section8Bounds};
use crate::params;
use crate::weights::{Partition, Rank, Weight};

/// A named family of checks with default sweep bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    PopCount,
    Oracle,
    Specialization,
    Pieri,
    Lemma51,
    QBinomial,
    Lemma64,
    Lemma72,
    Truncated,
    Fusion,
    Filtration,
    Decompose,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::PopCount,
        Suite::Oracle,
        Suite::Specialization,
        Suite::Pieri,
        Suite::Lemma51,
        Suite::QBinomial,
        Suite::Lemma64,
        Suite::Lemma72,
        Suite::Truncated,
        Suite::Fusion,
        Suite::Filtration,
        Suite::Decompose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PopCount => "pop_count",
            Suite::Oracle => "oracle",
            Suite::Specialization => "specialization",
            Suite::Pieri => "pieri",
            Suite::Lemma51 => "lemma51",
            Suite::QBinomial => "qbinomial",
            Suite::Lemma64 => "lemma64",
            Suite::Lemma72 => "lemma72",
            Suite::Truncated => "truncated",
            Suite::Fusion => "fusion",
            Suite::Filtration => "filtration",
            Suite::Decompose => "decompose",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::PopCount => "POP count equals the module dimension",
            Suite::Oracle => "GT-sum character equals POP-sum character",
            Suite::Specialization => "q=0 gives ch V(λ), q=1 gives the dimension, symmetry",
            Suite::Pieri => "one-row Pieri expansion against the brute product",
            Suite::Lemma51 => "product of two one-row Weyl characters, closed form",
            Suite::QBinomial => "alternating q-binomial sum as a product, and its substitutions",
            Suite::Lemma64 => "W(mω1)⊗W(kω2) as a sum of truncated Weyl characters (sl3)",
            Suite::Lemma72 => "W(mω1)⊗W(kω1) and W(mωn)⊗W(kωn) as sums of M(ν,λ) characters",
            Suite::Truncated => "truncated Weyl dimensions 8^j 3^(|λ|-2j) and the truncation recursion (sl3)",
            Suite::Fusion => "dimension additivity across exact sequences of M_j modules (sl3)",
            Suite::Filtration => "filtration layers reproduce the tensor product",
            Suite::Decompose => "Weyl-basis decomposition of products recovers the closed form",
        }
    }

    /// Default sweep bounds, as shown by `verify --list`.
    pub fn default_bounds(self) -> &'static str {
        match self {
            Suite::PopCount | Suite::Oracle | Suite::Specialization => "n<=3, sum(m_i)<=4",
            Suite::Pieri => "n<=3, m<=4, mu<=min(3,n+1) rows, parts<=4",
            Suite::Lemma51 => "n in {2,3}, m,k<=5",
            Suite::QBinomial => "j<=12, M<=20",
            Suite::Lemma64 => "n=2, m,k<=4",
            Suite::Lemma72 => "n in {2,3}, m,k<=4",
            Suite::Truncated => "n=2, |λ|<=8, 0<=j<=min(m1,m2)",
            Suite::Fusion => "λ2(hθ),λ3(hθ),λ1(hθ)<=3, j<=4",
            Suite::Filtration => "n in {2,3}, m,k<=4",
            Suite::Decompose => "n in {2,3}, m,k<=3",
        }
    }

    fn default_size(self) -> u32 {
        match self {
            Suite::PopCount | Suite::Oracle | Suite::Specialization | Suite::Pieri => 4,
            Suite::Lemma51 => 5,
            Suite::QBinomial => 12,
            Suite::Lemma64 | Suite::Lemma72 | Suite::Filtration => 4,
            Suite::Truncated => 8,
            Suite::Fusion => 4,
            Suite::Decompose => 3,
        }
    }

    fn ranks(self) -> &'static [usize] {
        match self {
            Suite::PopCount | Suite::Oracle | Suite::Specialization | Suite::Pieri => &[1, 2, 3],
            Suite::Lemma51 | Suite::Lemma72 | Suite::Filtration | Suite::Decompose => &[2, 3],
            Suite::Lemma64 | Suite::Truncated | Suite::Fusion => &[2],
            Suite::QBinomial => &[],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Overrides for a suite run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Replaces the suite's main size bound (`m, k`, `Σ m_i`, `j` or `|λ|`).
    pub max_mk: Option<u32>,
    /// Restrict to one rank.
    pub rank: Option<Rank>,
}

/// Every dominant weight of `rank` with `Σ m_i ≤ total`, ordered by
/// height then coefficients.
pub fn dominant_weights(rank: Rank, total: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    for h in 0..=total {
        compositions(h, rank.n(), &mut vec![], &mut |c| out.push(Weight::new(rank, c.to_vec()).expect("valid rank")));
    }
    out
}

fn compositions(total: u32, parts: usize, acc: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if parts == 1 {
        acc.push(i64::from(total));
        f(acc);
        acc.pop();
        return;
    }
    for first in (0..=total).rev() {
        acc.push(i64::from(first));
        compositions(total - first, parts - 1, acc, f);
        acc.pop();
    }
}

/// Partitions with at most `rows` parts, each at most `max_part`.
pub fn bounded_partitions(rows: usize, max_part: u32) -> Vec<Partition> {
    fn go(rows: usize, cap: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(acc.clone()).expect("decreasing"));
        if acc.len() == rows {
            return;
        }
        for p in 1..=cap {
            acc.push(p);
            go(rows, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, max_part, &mut vec![], &mut out);
    out.sort();
    out
}

/// Run one suite; reports come in parameter order.
pub fn run_suite(suite: Suite, config: SuiteConfig) -> Result<Vec<VerificationReport>> {
    let size = config.max_mk.unwrap_or(suite.default_size());
    let ranks: Vec<Rank> = match config.rank {
        Some(r) if suite.ranks().contains(&r.n()) => vec![r],
        Some(r) if suite != Suite::QBinomial => {
            let rep = VerificationReport::new(suite.name(), params!("n" => r))
                .skipped(format!("suite covers n in {:?}", suite.ranks()));
            return Ok(vec![rep]);
        }
        _ => suite.ranks().iter().map(|&n| Rank::new(n)).collect::<Result<_>>()?,
    };
    let mut out = Vec::new();
    let grid = |f: &mut dyn FnMut(u32, u32) -> Result<()>| -> Result<()> {
        for m in 0..=size {
            for k in 0..=size {
                f(m, k)?;
            }
        }
        Ok(())
    };
    match suite {
        Suite::PopCount | Suite::Oracle | Suite::Specialization => {
            for &rank in &ranks {
                for lam in dominant_weights(rank, size) {
                    match suite {
                        Suite::PopCount => out.push(verify_pop_count(&lam)?),
                        Suite::Oracle => out.push(verify_oracle(&lam)?),
                        _ => out.extend(verify_specialization(&lam)?),
                    }
                }
            }
        }
        Suite::Pieri => {
            for &rank in &ranks {
                let rows = (rank.n() + 1).min(3);
                for mu in bounded_partitions(rows, 4) {
                    for m in 0..=size {
                        out.push(verify_pieri(m, &mu, rank)?);
                    }
                }
            }
        }
        Suite::Lemma51 | Suite::Decompose => {
            for &rank in &ranks {
                for v in TensorVariant::ALL {
                    grid(&mut |m, k| {
                        out.push(if suite == Suite::Lemma51 {
                            verify_lemma51(v, m, k, rank)?
                        } else {
                            verify_decompose_product(v, m, k, rank)?
                        });
                        Ok(())
                    })?;
                }
            }
        }
        Suite::QBinomial => {
            for j in 0..=size {
                out.extend(verify_qbinomial(j, 20.max(j))?);
            }
        }
        Suite::Lemma64 => grid(&mut |m, k| {
            out.push(verify_lemma64(m, k)?);
            Ok(())
        })?,
        Suite::Lemma72 => {
            for &rank in &ranks {
                for v in MVariant::ALL {
                    grid(&mut |m, k| {
                        out.push(verify_lemma72(v, m, k, rank)?);
                        Ok(())
                    })?;
                }
            }
        }
        Suite::Truncated => {
            for lam in dominant_weights(ranks[0], size) {
                let l = lam.coeff(1).min(lam.coeff(2)) as u32;
                for j in 0..=l {
                    out.push(truncated_dim_check(&lam, j)?);
                    if j >= 1 {
                        out.push(verify_truncation_step(&lam, j)?);
                    }
                }
            }
        }
        Suite::Fusion => {
            let mut b = Section8Bounds::default();
            if let Some(j) = config.max_mk {
                b.max_j = j;
            }
            out.extend(verify_section8_recurrences(b)?);
        }
        Suite::Filtration => {
            for &rank in &ranks {
                for t in FiltrationTheorem::ALL {
                    if t == FiltrationTheorem::Thm66 && rank.n() != 2 {
                        continue;
                    }
                    grid(&mut |m, k| {
                        out.extend(verify_filtration(m, k, t, rank)?);
                        Ok(())
                    })?;
                }
            }
        }
    }
    Ok(out)
}

/// Run several suites in order.
pub fn run_suites(suites: &[Suite], config: SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &s in suites {
        out.extend(run_suite(s, config)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn enumerations() {
        let r = Rank::new(2).unwrap();
        assert_eq!(dominant_weights(r, 2).len(), 6);
        assert_eq!(bounded_partitions(2, 2).len(), 6);
    }

    #[test]
    fn small_runs_pass() {
        let cfg = SuiteConfig { max_mk: Some(2), rank: Some(Rank::new(2).unwrap()) };
        for s in Suite::ALL {
            for rep in run_suite(s, cfg).unwrap() {
                assert!(!rep.failed(), "{rep}");
            }
        }
    }
}
