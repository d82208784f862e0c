//! Integer Laurent polynomials with dense storage, cyclic folding and the
//! exponent-sequence invariants of flat/alternating polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("folded coefficients are not symmetric (residue {residue})")]
    AsymmetricFolding { residue: i64 },
    #[error("middle folded coefficient {value} is odd")]
    OddMiddleCoefficient { value: i64 },
    #[error("polynomial is not flat and alternating")]
    NotFlatAlternating,
    #[error("support cannot be centered (exponent span is odd)")]
    NotCenterable,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `sum coeffs[i] * t^(min_exp + i)`, trimmed so that the first and last
/// stored coefficients are nonzero. The zero polynomial has no coefficients
/// and `min_exp == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawPoly")]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPoly {
    min_exp: i64,
    coeffs: Vec<i64>,
}

impl From<RawPoly> for LaurentPoly {
    fn from(raw: RawPoly) -> Self {
        LaurentPoly::from_coeffs(raw.min_exp, raw.coeffs)
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<i64>) -> Self {
        let Some(first) = coeffs.iter().position(|&c| c != 0) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|&c| c != 0).unwrap();
        coeffs.truncate(last + 1);
        coeffs.drain(..first);
        LaurentPoly { min_exp: min_exp + first as i64, coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0; (hi - lo + 1) as usize];
        for &(e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Raw coefficient slice starting at `min_exp`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> i64 {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    /// Top exponent; for a symmetric polynomial this is the degree `d`.
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.max_exp()
        }
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        let m = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (m + i as i64, c))
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_zero()
            || (self.min_exp == -self.max_exp()
                && self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn shift(&self, n: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: self.min_exp + n, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if self.is_zero() {
            return if sign == 1 { other.clone() } else { other.neg() };
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exp().max(other.max_exp());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + sign * other.coeff(e)).collect();
        Self::from_coeffs(lo, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        let b_terms: Vec<(usize, i64)> =
            other.coeffs.iter().copied().enumerate().filter(|t| t.1 != 0).collect();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &b_terms {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.min_exp + other.min_exp, out)
    }

    /// Exact quotient `self / den`. Long division from the top; only the
    /// nonzero terms of `den` are visited, so sparse divisors are cheap.
    pub fn exact_div(&self, den: &Self) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let den_span = den.coeffs.len() - 1;
        if self.coeffs.len() <= den_span {
            return Err(LaurentError::NotDivisible);
        }
        let lc = den.leading_coeff();
        let den_terms: Vec<(usize, i64)> =
            den.coeffs.iter().copied().enumerate().filter(|t| t.1 != 0).collect();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - den_span;
        let mut quot = vec![0i64; qlen];
        for qi in (0..qlen).rev() {
            let c = rem[qi + den_span];
            if c == 0 {
                continue;
            }
            if c % lc != 0 {
                return Err(LaurentError::NotDivisible);
            }
            let qc = c / lc;
            quot[qi] = qc;
            for &(j, d) in &den_terms {
                rem[qi + j] -= qc * d;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(LaurentError::NotDivisible);
        }
        Ok(Self::from_coeffs(self.min_exp - den.min_exp, quot))
    }

    /// Representative of `self` up to units `±t^n`: support centered on 0 and
    /// top coefficient positive.
    pub fn symmetrize(&self) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let span = self.max_exp() + self.min_exp;
        if span % 2 != 0 {
            return Err(LaurentError::NotCenterable);
        }
        let centered = self.shift(-span / 2);
        Ok(if centered.leading_coeff() < 0 { centered.neg() } else { centered })
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text, highest exponent first: `t^3 - t^2 + 1 - t^-2 + t^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            if n == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// `Delta_{T(r,s)} = t^{-d} (t^{rs}-1)(t-1) / ((t^r-1)(t^s-1))`, `d = (r-1)(s-1)/2`.
pub fn torus_polynomial(r: i64, s: i64) -> Result<LaurentPoly, LaurentError> {
    if r < 2 || s < 2 || gcd(r, s) != 1 {
        return Err(ArithError::NotCoprime { a: r, p: s }.into());
    }
    let len = crate::arith::checked_mul(r, s, "torus polynomial size")? as usize;
    // (t^{rs}-1)/(t^r-1) is the sparse sum of t^{ri}, i < s.
    let mut geo = vec![0i64; len - r as usize + 1];
    for i in 0..s as usize {
        geo[i * r as usize] = 1;
    }
    let geo = LaurentPoly::from_coeffs(0, geo);
    let num = geo.mul(&LaurentPoly::from_terms(&[(1, 1), (0, -1)]));
    let den = LaurentPoly::from_terms(&[(s, 1), (0, -1)]);
    let q = num.exact_div(&den)?;
    Ok(q.shift(-(r - 1) * (s - 1) / 2))
}

/// Coefficients folded modulo `t^p - 1`; `values[i]` sums every coefficient
/// whose exponent is congruent to `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicCoeffs {
    pub p: i64,
    pub values: Vec<i64>,
}

impl PeriodicCoeffs {
    pub fn get(&self, x: i64) -> i64 {
        self.values[x.rem_euclid(self.p) as usize]
    }
}

pub fn reduce_cyclic(f: &LaurentPoly, p: i64) -> PeriodicCoeffs {
    assert!(p >= 1);
    let mut values = vec![0i64; p as usize];
    for (e, c) in f.terms() {
        values[e.rem_euclid(p) as usize] += c;
    }
    PeriodicCoeffs { p, values }
}

/// The symmetric lift supported in `|i| <= p/2`, splitting an even
/// middle coefficient evenly between `t^{p/2}` and `t^{-p/2}`.
pub fn smallest_symmetric_rep(pc: &PeriodicCoeffs) -> Result<LaurentPoly, LaurentError> {
    let p = pc.p;
    for i in 0..p {
        if pc.get(i) != pc.get(-i) {
            return Err(LaurentError::AsymmetricFolding { residue: i });
        }
    }
    let h = p / 2;
    let mut coeffs = vec![0i64; (2 * h + 1) as usize];
    for i in -((p - 1) / 2)..=(p - 1) / 2 {
        coeffs[(i + h) as usize] = pc.get(i);
    }
    if p % 2 == 0 {
        let mid = pc.get(h);
        if mid % 2 != 0 {
            return Err(LaurentError::OddMiddleCoefficient { value: mid });
        }
        coeffs[0] = mid / 2;
        coeffs[(2 * h) as usize] = mid / 2;
    }
    Ok(LaurentPoly::from_coeffs(-h, coeffs))
}

/// Coefficients in {-1,0,1}, nonzero ones alternating in sign, top one +1.
pub fn flat_alternating(f: &LaurentPoly) -> bool {
    if f.is_zero() || f.leading_coeff() != 1 {
        return false;
    }
    let mut prev = 0;
    for (_, c) in f.terms() {
        if c.abs() != 1 || c == prev {
            return false;
        }
        prev = c;
    }
    true
}

/// Exponent data of a flat/alternating symmetric polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonZeroProfile {
    /// All nonzero exponents, decreasing: `n_1 > ... > n_{2r+1}`.
    pub ns: Vec<i64>,
    /// The nonnegative part of `ns`.
    pub ns_h: Vec<i64>,
    pub degree: i64,
    pub alpha: i64,
    /// Exponents of the +1 terms in the top run of `(+1, -1)` pairs at
    /// distance one: `n_1, n_3, ..., n_{2j+1}`.
    pub adjacent: Vec<i64>,
    pub r: usize,
}

impl NonZeroProfile {
    /// `n_i` with 1-based indexing, as used in the literature.
    pub fn n(&self, i: usize) -> Option<i64> {
        i.checked_sub(1).and_then(|i| self.ns.get(i).copied())
    }

    pub fn term_count(&self) -> usize {
        self.ns.len()
    }
}

pub fn profile(f: &LaurentPoly) -> Result<NonZeroProfile, LaurentError> {
    if !f.is_symmetric() || !flat_alternating(f) {
        return Err(LaurentError::NotFlatAlternating);
    }
    let ns: Vec<i64> = f.terms().rev().map(|t| t.0).collect();
    let ns_h = ns.iter().copied().filter(|&n| n >= 0).collect();
    let r = (ns.len() - 1) / 2;
    let mut j = 0;
    while j < r && ns[2 * j] - ns[2 * j + 1] == 1 {
        j += 1;
    }
    let adjacent: Vec<i64> = (0..=j).map(|i| ns[2 * i]).collect();
    Ok(NonZeroProfile {
        degree: ns[0],
        alpha: ns[0] - ns[2 * j],
        ns_h,
        adjacent,
        ns,
        r,
    })
}
