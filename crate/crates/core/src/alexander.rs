//! Three independent constructions of the Alexander polynomial attached to a
//! surgery parameter, plus genus and the L-space test.
//!
//! * torus reduction: fold `Delta_{T(k,l)}` modulo `t^p - 1`, `kl = 1 mod p`
//! * type-A counting formula: each coefficient is an interval count
//! * IST formula: a quotient of two exponential sums (type-B knots)

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{checked_mul, gcd, in_interval, inv_mod, lar, mul_mod, rem1p, ArithError, Interval};
use crate::laurent::{
    profile, reduce_cyclic, smallest_symmetric_rep, torus_polynomial, LaurentError, LaurentPoly,
    NonZeroProfile, PeriodicCoeffs,
};
use crate::params::{normalize, ParamError, SurgeryParameter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("no l = k^-1 mod p coprime to k found for {0:?}")]
    NoCoprimeLift(SurgeryParameter),
    #[error("invalid IST input p={p}, k={k}")]
    InvalidIst { p: i64, k: i64 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    TorusReduction,
    TypeAFormula,
    IstFormula,
}

/// Candidate lifts `l = k2 mod p` for the torus knot `T(k, l)`, in the order
/// they are tried: `l, l+p, l-p, l+2p, ...`.
pub fn torus_lifts(param: &SurgeryParameter) -> impl Iterator<Item = i64> {
    let (p, k) = (param.p, param.k);
    let l = rem1p(param.k2, p);
    std::iter::once(l)
        .chain((1..=k).flat_map(move |t| [l + t * p, l - t * p]))
        .filter(|&x| x >= 2)
}

/// The first coprime lift. Lifts `l + t p` for `t = 0..k` cover every residue
/// class of `l` modulo `k`, so one of them is coprime to `k`.
pub fn torus_lift(param: &SurgeryParameter) -> Result<i64, AlexanderError> {
    torus_lifts(param)
        .find(|&l| gcd(param.k, l) == 1)
        .ok_or(AlexanderError::NoCoprimeLift(*param))
}

/// Smallest symmetric representative of `Delta_{T(k,l)}` modulo `t^p - 1`.
pub fn yamka_rep(param: &SurgeryParameter) -> Result<LaurentPoly, AlexanderError> {
    if param.is_trivial() {
        return Ok(LaurentPoly::one());
    }
    yamka_rep_with_lift(param, torus_lift(param)?)
}

pub fn yamka_rep_with_lift(param: &SurgeryParameter, l: i64) -> Result<LaurentPoly, AlexanderError> {
    let t = torus_polynomial(param.k, l)?;
    Ok(smallest_symmetric_rep(&reduce_cyclic(&t, param.p))?)
}

/// `abar_i = -m + e * #{ j in I_k : lar(-q^-1 (j + k i + c), p) in I_{k2} }`
/// for every residue `i`.
pub fn type_a_periodic(param: &SurgeryParameter) -> PeriodicCoeffs {
    let SurgeryParameter { p, k, k2, e, c, m, .. } = *param;
    let qi = param.q_inv();
    let target = Interval::new(k2);
    let values = (0..p)
        .map(|i| {
            let base = (k * i + c).rem_euclid(p);
            let hits = (1..=k)
                .filter(|&j| in_interval(lar(-mul_mod(qi, j + base, p), p), target))
                .count() as i64;
            -m + e * hits
        })
        .collect();
    PeriodicCoeffs { p, values }
}

/// The counting formula, lifted to its smallest symmetric representative.
/// For even `p` a middle value of 2 becomes `t^{p/2} + t^{-p/2}` (the
/// `2g = p` case).
pub fn type_a_poly(param: &SurgeryParameter) -> Result<LaurentPoly, AlexanderError> {
    Ok(smallest_symmetric_rep(&type_a_periodic(param))?)
}

/// Unsymmetrized pieces of the IST formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IstExpansion {
    pub p: i64,
    pub k: i64,
    /// `Phi(i) p - rem1p(q' i, p) k` for `i = 0..k`.
    pub exponents: Vec<i64>,
    /// `N(t) / D(t)` before symmetrization; its coefficients are `b_l`.
    pub quotient: LaurentPoly,
}

pub fn ist_expansion(p: i64, k: i64) -> Result<IstExpansion, AlexanderError> {
    if p < 2 || k < 1 || k >= p || gcd(p, k) != 1 {
        return Err(AlexanderError::InvalidIst { p, k });
    }
    let q = rem1p(-mul_mod(k, k, p), p);
    let qp = inv_mod(q, p)?;
    let r = |i: i64| rem1p(mul_mod(qp, i, p), p);
    let mut ranks: Vec<i64> = (1..k).map(r).collect();
    ranks.sort_unstable();
    let exponents = (0..k)
        .map(|i| {
            let ri = r(i);
            let phi = ranks.partition_point(|&x| x < ri) as i64;
            Ok(checked_mul(phi, p, "IST exponent")? - checked_mul(ri, k, "IST exponent")?)
        })
        .collect::<Result<Vec<i64>, ArithError>>()?;
    let num = LaurentPoly::from_terms(&exponents.iter().map(|&x| (x, 1)).collect::<Vec<_>>());
    let den = LaurentPoly::from_coeffs(0, vec![1; k as usize]);
    let quotient = num.exact_div(&den)?;
    Ok(IstExpansion { p, k, exponents, quotient })
}

pub fn ist_poly(p: i64, k: i64) -> Result<LaurentPoly, AlexanderError> {
    Ok(ist_expansion(p, k)?.quotient.symmetrize()?)
}

/// Degree of a symmetric polynomial, which is the genus for these knots.
pub fn genus(poly: &LaurentPoly) -> i64 {
    poly.degree()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LSpaceClass {
    LSpace,
    NonLSpace,
    Boundary,
}

/// Compares `2g` with `p + 1`.
pub fn classify_genus(p: i64, g: i64) -> LSpaceClass {
    match (2 * g).cmp(&(p + 1)) {
        std::cmp::Ordering::Less => LSpaceClass::LSpace,
        std::cmp::Ordering::Greater => LSpaceClass::NonLSpace,
        std::cmp::Ordering::Equal => LSpaceClass::Boundary,
    }
}

pub fn lspace_classify(p: i64, k: i64) -> Result<LSpaceClass, AlexanderError> {
    Ok(classify_genus(p, genus(&ist_poly(p, k)?)))
}

/// A polynomial together with where it came from and its exponent profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotClass {
    pub param: SurgeryParameter,
    pub poly: LaurentPoly,
    /// `None` when the polynomial fails the flat/alternating screen.
    pub profile: Option<NonZeroProfile>,
    pub source: Source,
}

impl KnotClass {
    pub fn new(param: SurgeryParameter, poly: LaurentPoly, source: Source) -> Self {
        let profile = profile(&poly).ok();
        KnotClass { param, poly, profile, source }
    }

    pub fn torus_reduction(param: SurgeryParameter) -> Result<Self, AlexanderError> {
        Ok(Self::new(param, yamka_rep(&param)?, Source::TorusReduction))
    }

    pub fn type_a(param: SurgeryParameter) -> Result<Self, AlexanderError> {
        Ok(Self::new(param, type_a_poly(&param)?, Source::TypeAFormula))
    }

    /// The parameter stored is `normalize(p, k)`; the polynomial only
    /// depends on that class.
    pub fn ist(p: i64, k: i64) -> Result<Self, AlexanderError> {
        let param = normalize(p, k)?;
        Ok(Self::new(param, ist_poly(p, k)?, Source::IstFormula))
    }

    pub fn genus(&self) -> i64 {
        genus(&self.poly)
    }
}

impl Serialize for KnotClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            param: &'a SurgeryParameter,
            poly: &'a LaurentPoly,
            ns_h: Option<&'a [i64]>,
            genus: i64,
            alpha: Option<i64>,
            source: Source,
        }
        Wire {
            param: &self.param,
            poly: &self.poly,
            ns_h: self.profile.as_ref().map(|p| p.ns_h.as_slice()),
            genus: self.genus(),
            alpha: self.profile.as_ref().map(|p| p.alpha),
            source: self.source,
        }
        .serialize(s)
    }
}
