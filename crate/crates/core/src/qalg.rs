//! Exact arithmetic in `Z[q]`.
//!
//! [`QPoly`] is a dense coefficient vector over arbitrary-precision integers.
//! [`QFactorRatio`] carries products and quotients of `(1 - q^k)` factors
//! symbolically until they are known to be polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q` with integer coefficients, ascending exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        QPoly::from_coeffs(coeffs)
    }

    /// `q^e`.
    pub fn q_pow(e: usize) -> Self {
        QPoly::monomial(1, e)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients `c_0, c_1, …` up to the degree.
    #[inline]
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `q = 0`.
    pub fn eval_zero(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Multiply by `1 - q^k` in place.
    pub fn mul_one_minus_qk(&mut self, k: usize) {
        if self.is_zero() || k == 0 {
            // 1 - q^0 = 0
            if k == 0 {
                self.coeffs.clear();
            }
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + k, BigInt::zero());
        for e in (k..old_len + k).rev() {
            let t = self.coeffs[e - k].clone();
            self.coeffs[e] -= t;
        }
        self.trim();
    }

    /// Divide by `1 - q^k`; `None` unless the division is exact.
    pub fn div_one_minus_qk(&self, k: usize) -> Option<QPoly> {
        if k == 0 {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        // p = (1 - q^k) r  ⇔  r_e = p_e + r_{e-k}.
        let len = self.coeffs.len();
        if len <= k {
            return None;
        }
        let rlen = len - k;
        let mut r: Vec<BigInt> = Vec::with_capacity(rlen);
        for e in 0..rlen {
            let mut v = self.coeffs[e].clone();
            if e >= k {
                v += &r[e - k];
            }
            r.push(v);
        }
        // Remaining coefficients must match: p_e = -r_{e-k} for e >= rlen.
        for e in rlen..len {
            let mut expect = if e >= k { -r[e - k].clone() } else { BigInt::zero() };
            if e < rlen {
                expect += &r[e];
            }
            if self.coeffs[e] != expect {
                return None;
            }
        }
        Some(QPoly::from_coeffs(r))
    }

    /// Exact division by a nonzero polynomial with leading coefficient ±1
    /// or dividing all intermediate remainders; `None` if inexact.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let sd = rem.len() - 1;
        if sd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for e in (0..=sd - dd).rev() {
            let c = &rem[e + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % &lead).is_zero() {
                return None;
            }
            let f = c / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[e + i] -= &f * dc;
            }
            quot[e] = f;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(QPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut out = QPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    /// Ascending exponents: `1 + 2q^2 - q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// `[m]_q = 1 + q + … + q^{m-1}`.
pub fn q_int(m: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); m])
}

/// Gaussian binomial `[n r]_q`; zero unless `n`, `r`, `n - r` are all ≥ 0.
pub fn q_binomial(n: i64, r: i64) -> QPoly {
    if n < 0 || r < 0 || n - r < 0 {
        return QPoly::zero();
    }
    let r = r.min(n - r) as usize;
    let n = n as usize;
    let mut out = QPoly::one();
    for i in 1..=r {
        out.mul_one_minus_qk(n - r + i);
        out = out.div_one_minus_qk(i).expect("Gaussian binomial partial products are polynomial");
    }
    out
}

/// `(q;q)_m = (1 - q)(1 - q^2)⋯(1 - q^m)`.
pub fn q_pochhammer(m: usize) -> QPoly {
    let mut out = QPoly::one();
    for i in 1..=m {
        out.mul_one_minus_qk(i);
    }
    out
}

/// Multiply by `q^s`.
pub fn grade_shift(p: &QPoly, s: usize) -> QPoly {
    p.shift(s)
}

/// `± q^e ∏ (1 - q^a) / ∏ (1 - q^b)` over multisets of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QFactorRatio {
    negative: bool,
    qpower: usize,
    num: BTreeMap<usize, u32>,
    den: BTreeMap<usize, u32>,
}

impl Default for QFactorRatio {
    fn default() -> Self {
        QFactorRatio::one()
    }
}

impl QFactorRatio {
    pub fn one() -> Self {
        QFactorRatio { negative: false, qpower: 0, num: BTreeMap::new(), den: BTreeMap::new() }
    }

    /// Build from factor lists; factors `k = 0` are rejected.
    pub fn new(negative: bool, qpower: usize, num: &[usize], den: &[usize]) -> Result<Self> {
        let mut r = QFactorRatio { negative, qpower, ..QFactorRatio::one() };
        for &k in num {
            r.mul_factor(k)?;
        }
        for &k in den {
            r.div_factor(k)?;
        }
        Ok(r)
    }

    /// `(q;q)_m` as a ratio.
    pub fn pochhammer(m: usize) -> Self {
        let mut r = QFactorRatio::one();
        for k in 1..=m {
            *r.num.entry(k).or_default() += 1;
        }
        r
    }

    /// `[n r]_q` as a ratio (identity ratio times zero is not representable,
    /// so out-of-range arguments give `None`).
    pub fn q_binomial(n: usize, r: usize) -> Option<Self> {
        if r > n {
            return None;
        }
        let mut out = QFactorRatio::pochhammer(n);
        out = out.divide(&QFactorRatio::pochhammer(r));
        out = out.divide(&QFactorRatio::pochhammer(n - r));
        Some(out.reduce())
    }

    pub fn mul_factor(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::Domain("factor 1 - q^0 vanishes".into()));
        }
        *self.num.entry(k).or_default() += 1;
        Ok(())
    }

    pub fn div_factor(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::Domain("division by 1 - q^0".into()));
        }
        *self.den.entry(k).or_default() += 1;
        Ok(())
    }

    #[inline]
    pub fn is_negative(&self) -> bool {
        self.negative
    }

    #[inline]
    pub fn qpower(&self) -> usize {
        self.qpower
    }

    /// Numerator factors with multiplicity, ascending.
    pub fn num_factors(&self) -> Vec<usize> {
        expand(&self.num)
    }

    /// Denominator factors with multiplicity, ascending.
    pub fn den_factors(&self) -> Vec<usize> {
        expand(&self.den)
    }

    pub fn is_identity(&self) -> bool {
        let r = self.reduce();
        !r.negative && r.qpower == 0 && r.num.is_empty() && r.den.is_empty()
    }

    pub fn multiply(&self, other: &QFactorRatio) -> QFactorRatio {
        let mut out = self.clone();
        out.negative ^= other.negative;
        out.qpower += other.qpower;
        for (&k, &c) in &other.num {
            *out.num.entry(k).or_default() += c;
        }
        for (&k, &c) in &other.den {
            *out.den.entry(k).or_default() += c;
        }
        out
    }

    pub fn divide(&self, other: &QFactorRatio) -> QFactorRatio {
        let mut out = self.clone();
        out.negative ^= other.negative;
        // q-powers in a denominator are never produced here; keep the ratio
        // polynomial-shaped by requiring other.qpower <= self.qpower.
        out.qpower = out.qpower.saturating_sub(other.qpower);
        for (&k, &c) in &other.num {
            *out.den.entry(k).or_default() += c;
        }
        for (&k, &c) in &other.den {
            *out.num.entry(k).or_default() += c;
        }
        out
    }

    /// Cancel identical factors between numerator and denominator.
    pub fn reduce(&self) -> QFactorRatio {
        let mut num = BTreeMap::new();
        let mut den = BTreeMap::new();
        let keys: std::collections::BTreeSet<usize> = self.num.keys().chain(self.den.keys()).copied().collect();
        for k in keys {
            let a = self.num.get(&k).copied().unwrap_or(0);
            let b = self.den.get(&k).copied().unwrap_or(0);
            if a > b {
                num.insert(k, a - b);
            } else if b > a {
                den.insert(k, b - a);
            }
        }
        QFactorRatio { negative: self.negative, qpower: self.qpower, num, den }
    }

    /// Expand to a polynomial; fails if the ratio is not in `Z[q]`.
    pub fn to_qpoly(&self) -> Result<QPoly> {
        let r = self.reduce();
        let mut p = QPoly::q_pow(r.qpower);
        if r.negative {
            p = -p;
        }
        for (&k, &c) in &r.num {
            for _ in 0..c {
                p.mul_one_minus_qk(k);
            }
        }
        for (&k, &c) in &r.den {
            for _ in 0..c {
                p = p.div_one_minus_qk(k).ok_or_else(|| {
                    Error::Integrality(format!("{self} is not a polynomial in q"))
                })?;
            }
        }
        Ok(p)
    }
}

fn expand(m: &BTreeMap<usize, u32>) -> Vec<usize> {
    m.iter().flat_map(|(&k, &c)| std::iter::repeat(k).take(c as usize)).collect()
}

impl fmt::Display for QFactorRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = |m: &BTreeMap<usize, u32>| {
            if m.is_empty() {
                return "1".to_string();
            }
            expand(m).iter().map(|k| format!("(1-q^{k})")).collect::<Vec<_>>().join("")
        };
        if self.negative {
            write!(f, "-")?;
        }
        if self.qpower > 0 {
            write!(f, "q^{}·", self.qpower)?;
        }
        write!(f, "{}", factors(&self.num))?;
        if !self.den.is_empty() {
            write!(f, "/{}", factors(&self.den))?;
        }
        Ok(())
    }
}

/// Polynomials in `x` with coefficients in `Z[q]`, indexed by the power of `x`.
/// Only what the q-binomial theorem checks need.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QXPoly {
    coeffs: Vec<QPoly>,
}

impl QXPoly {
    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        QXPoly { coeffs }
    }

    pub fn one() -> Self {
        QXPoly::from_coeffs(vec![QPoly::one()])
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Multiply by `x - c`.
    pub fn mul_x_minus(&self, c: &QPoly) -> QXPoly {
        let mut out = vec![QPoly::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] -= &(a * c);
        }
        QXPoly::from_coeffs(out)
    }

    /// Substitute `x = q^m`.
    pub fn eval_q_power(&self, m: usize) -> QPoly {
        let mut out = QPoly::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            out += &a.shift(i * m);
        }
        out
    }
}
