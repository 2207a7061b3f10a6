use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qalg::QPoly;
use crate::weights::Rank;

/// An element of `Z[q][x_1, …, x_{n+1}]`: exponent vectors of length `n + 1`
/// mapped to nonzero coefficients in `Z[q]`.
///
/// Exponents are kept gl-style (no normalization). Two characters describe
/// the same sl-character when their [`sl_normalized`](Self::sl_normalized)
/// forms agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    rank: Rank,
    terms: BTreeMap<Vec<u32>, QPoly>,
}

impl GradedCharacter {
    pub fn zero(rank: Rank) -> Self {
        GradedCharacter { rank, terms: BTreeMap::new() }
    }

    /// The constant character `1`.
    pub fn one(rank: Rank) -> Self {
        let mut c = GradedCharacter::zero(rank);
        c.add_term(vec![0; rank.num_vars()], &QPoly::one());
        c
    }

    pub fn from_terms(rank: Rank, terms: impl IntoIterator<Item = (Vec<u32>, QPoly)>) -> Result<Self> {
        let mut c = GradedCharacter::zero(rank);
        for (e, p) in terms {
            if e.len() != rank.num_vars() {
                return Err(Error::RankMismatch { expected: rank.num_vars(), found: e.len() });
            }
            c.add_term(e, &p);
        }
        Ok(c)
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> QPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Add `p · x^e`. The exponent length is the caller's responsibility.
    pub fn add_term(&mut self, e: Vec<u32>, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.rank.num_vars());
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += p;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &GradedCharacter, c: &QPoly) -> Result<()> {
        self.rank.check(other.rank)?;
        if c.is_zero() {
            return Ok(());
        }
        for (e, p) in &other.terms {
            self.add_term(e.clone(), &(p * c));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GradedCharacter) -> Result<GradedCharacter> {
        let mut out = self.clone();
        out.add_scaled(other, &QPoly::one())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GradedCharacter) -> Result<GradedCharacter> {
        let mut out = self.clone();
        out.add_scaled(other, &QPoly::constant(-1))?;
        Ok(out)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> GradedCharacter {
        let mut out = GradedCharacter::zero(self.rank);
        out.add_scaled(self, c).expect("same rank");
        out
    }

    /// Character of a tensor product: convolution of the terms.
    pub fn multiply(&self, other: &GradedCharacter) -> Result<GradedCharacter> {
        self.rank.check(other.rank)?;
        let mut out = GradedCharacter::zero(self.rank);
        for (ea, pa) in &self.terms {
            for (eb, pb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(pa * pb));
            }
        }
        Ok(out)
    }

    /// Subtract the minimum entry from every exponent vector, i.e. pass to
    /// the quotient by `x_1 ⋯ x_{n+1} = 1`.
    pub fn sl_normalized(&self) -> GradedCharacter {
        let mut out = GradedCharacter::zero(self.rank);
        for (e, p) in &self.terms {
            let min = e.iter().copied().min().unwrap_or(0);
            out.add_term(e.iter().map(|x| x - min).collect(), p);
        }
        out
    }

    /// Equality as sl-characters.
    pub fn sl_eq(&self, other: &GradedCharacter) -> bool {
        self.rank == other.rank && self.sl_normalized() == other.sl_normalized()
    }

    /// Invariance under all permutations of the variables.
    pub fn is_symmetric(&self) -> bool {
        let len = self.rank.num_vars();
        self.terms.iter().all(|(e, p)| {
            (0..len - 1).all(|k| {
                let mut f = e.clone();
                f.swap(k, k + 1);
                self.terms.get(&f) == Some(p)
            })
        })
    }

    /// Image under `x_k ↦ x_{n+2-k}^{-1}`, sl-normalized. On characters of
    /// `W_loc(λ)` this gives the character of `W_loc(-w_0 λ)`.
    pub fn dual(&self) -> GradedCharacter {
        let mut out = GradedCharacter::zero(self.rank);
        for (e, p) in &self.sl_normalized().terms {
            let max = e.iter().copied().max().unwrap_or(0);
            out.add_term(e.iter().rev().map(|x| max - x).collect(), p);
        }
        out
    }

    /// Set `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<Vec<u32>, BigInt> {
        self.terms
            .iter()
            .map(|(e, p)| (e.clone(), p.eval_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Set `q = 0`.
    pub fn at_q_zero(&self) -> GradedCharacter {
        let mut out = GradedCharacter::zero(self.rank);
        for (e, p) in &self.terms {
            out.add_term(e.clone(), &QPoly::constant(p.eval_zero()));
        }
        out
    }

    /// Total dimension: sum of all coefficients at `q = 1`.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().map(QPoly::eval_one).sum()
    }

    /// Sum of all coefficients as a polynomial in `q` (the graded dimension).
    pub fn graded_dimension(&self) -> QPoly {
        let mut out = QPoly::zero();
        for p in self.terms.values() {
            out += p;
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(QPoly::has_nonnegative_coeffs)
    }

    /// Canonical JSON: `{"rank": n, "terms": [{"exponent": [...], "coeffs": [...]}]}`
    /// with terms in ascending exponent order and `coeffs[k]` the
    /// coefficient of `q^k`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, p)| {
                let coeffs: Vec<Value> = p.coeffs().iter().map(bigint_to_json).collect();
                json!({ "exponent": e, "coeffs": coeffs })
            })
            .collect();
        json!({ "rank": self.rank.n(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let perr = |m: &str| Error::Parse(m.to_string());
        let n = v.get("rank").and_then(Value::as_u64).ok_or_else(|| perr("missing integer field \"rank\""))?;
        let rank = Rank::new(n as usize)?;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| perr("missing array field \"terms\""))?;
        let mut out = GradedCharacter::zero(rank);
        for t in terms {
            let e: Vec<u32> = t
                .get("exponent")
                .and_then(Value::as_array)
                .ok_or_else(|| perr("term without \"exponent\""))?
                .iter()
                .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()))
                .collect::<Option<_>>()
                .ok_or_else(|| perr("exponents must be non-negative integers"))?;
            if e.len() != rank.num_vars() {
                return Err(Error::RankMismatch { expected: rank.num_vars(), found: e.len() });
            }
            let coeffs = t
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| perr("term without \"coeffs\""))?
                .iter()
                .map(json_to_bigint)
                .collect::<Result<Vec<_>>>()?;
            out.add_term(e, &QPoly::from_coeffs(coeffs));
        }
        Ok(out)
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> Value {
    Value::Number(c.to_string().parse().expect("integers are valid JSON numbers"))
}

fn json_to_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer"))),
        other => Err(Error::Parse(format!("{other} is not an integer"))),
    }
}

fn monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(k, &x)| if x == 1 { format!("x{}", k + 1) } else { format!("x{}^{x}", k + 1) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for GradedCharacter {
    /// One term per line, `(coefficient) monomial`, descending exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (e, p) in self.terms.iter().rev() {
            writeln!(f, "({p}) {}", monomial(e))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn ch(n: usize, terms: &[(&[u32], &[i64])]) -> GradedCharacter {
        GradedCharacter::from_terms(r(n), terms.iter().map(|(e, c)| (e.to_vec(), QPoly::from_i64s(c)))).unwrap()
    }

    #[test]
    fn multiply_by_one() {
        let a = ch(1, &[(&[1, 0], &[1]), (&[0, 1], &[1])]);
        assert_eq!(a.multiply(&GradedCharacter::one(r(1))).unwrap(), a);
        let sq = a.multiply(&a).unwrap();
        assert_eq!(sq, ch(1, &[(&[2, 0], &[1]), (&[1, 1], &[2]), (&[0, 2], &[1])]));
        assert_eq!(sq.dimension(), BigInt::from(4));
    }

    #[test]
    fn rank_mismatch() {
        let a = GradedCharacter::one(r(1));
        let b = GradedCharacter::one(r(2));
        assert!(matches!(a.multiply(&b), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn normalization_and_dual() {
        let a = ch(2, &[(&[1, 1, 1], &[1]), (&[2, 1, 1], &[0, 1])]);
        assert_eq!(a.sl_normalized(), ch(2, &[(&[0, 0, 0], &[1]), (&[1, 0, 0], &[0, 1])]));
        let d = ch(2, &[(&[1, 0, 0], &[1])]).dual();
        assert_eq!(d, ch(2, &[(&[1, 1, 0], &[1])]));
    }

    #[test]
    fn symmetry() {
        assert!(ch(2, &[(&[1, 0, 0], &[1]), (&[0, 1, 0], &[1]), (&[0, 0, 1], &[1])]).is_symmetric());
        assert!(!ch(2, &[(&[1, 0, 0], &[1]), (&[0, 1, 0], &[1])]).is_symmetric());
    }

    #[test]
    fn json_round_trip() {
        let big = QPoly::from_coeffs(vec!["123456789012345678901234567890".parse().unwrap(), BigInt::from(-2)]);
        let a = GradedCharacter::from_terms(r(1), [(vec![1, 0], big), (vec![0, 1], QPoly::one())]).unwrap();
        let v = a.to_json();
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains("123456789012345678901234567890"));
        let back = GradedCharacter::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn json_errors() {
        assert!(GradedCharacter::from_json(&json!({"terms": []})).is_err());
        assert!(GradedCharacter::from_json(&json!({"rank": 1, "terms": [{"exponent": [1], "coeffs": [1]}]})).is_err());
        assert!(GradedCharacter::from_json(&json!({"rank": 0, "terms": []})).is_err());
    }
}
