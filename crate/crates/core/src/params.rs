//! Lens surgery parameters `(p, k, k2)` and their derived constants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, inv_mod, lar, rem1p, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("gcd({p}, {k}) != 1")]
    NotCoprime { p: i64, k: i64 },
    #[error("p = {0} admits no parameter with 0 < k < p/2")]
    Degenerate(i64),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A normalized surgery parameter.
///
/// * `0 < k < p/2`, `gcd(p, k) = 1`
/// * `k * k2 = 1 (mod p)`, `-p/2 < k2 <= p/2`
/// * `q = -k^2 (mod p)` in `1..p`
/// * `e = sign(k2)`, `c = (k+1-p)(k-1)/2`, `m = (k*k2 - 1)/p`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurgeryParameter {
    pub p: i64,
    pub k: i64,
    pub k2: i64,
    pub q: i64,
    pub e: i64,
    pub c: i64,
    pub m: i64,
}

impl SurgeryParameter {
    /// `k = 1`: the class of the unknot, with `Delta = 1`.
    pub fn is_trivial(&self) -> bool {
        self.k == 1
    }

    pub fn k2_abs(&self) -> i64 {
        self.k2.abs()
    }

    /// Inverse of `q` modulo `p`; equals `-k2^2 mod p`. This is the multiplier
    /// that makes the counting formula and the `dA` closed form agree with
    /// the folded torus polynomial.
    pub fn q_inv(&self) -> i64 {
        (-(self.k2 * self.k2)).rem_euclid(self.p)
    }

    /// Checks every field relation; used by tests and sweeps.
    pub fn validate(&self) -> Result<(), String> {
        let SurgeryParameter { p, k, k2, q, e, c, m } = *self;
        let fail = |what: &str| Err(format!("{what} violated for {self:?}"));
        if gcd(p, k) != 1 || !(0 < k && 2 * k < p) {
            return fail("0 < k < p/2, gcd(p,k) = 1");
        }
        if (k * k2 - 1).rem_euclid(p) != 0 || !(-p < 2 * k2 && 2 * k2 <= p) {
            return fail("k*k2 = 1 mod p, k2 in (-p/2, p/2]");
        }
        if !(1..p).contains(&q) || (k * k + q).rem_euclid(p) != 0 {
            return fail("q = -k^2 mod p");
        }
        if e != k2.signum() || 2 * c != (k + 1 - p) * (k - 1) || m * p != k * k2 - 1 {
            return fail("e, c, m");
        }
        Ok(())
    }
}

/// Picks the representative of `{±k, ±k^-1} mod p` in `(0, p/2)` with the
/// smallest value and fills in all derived constants.
pub fn normalize(p: i64, k_raw: i64) -> Result<SurgeryParameter, ParamError> {
    if p <= 2 {
        return Err(ParamError::Degenerate(p));
    }
    if gcd(p, k_raw) != 1 {
        return Err(ParamError::NotCoprime { p, k: k_raw });
    }
    let inv = inv_mod(k_raw, p)?;
    let k = lar(k_raw, p).abs().min(lar(inv, p).abs());
    let k2 = lar(inv_mod(k, p)?, p);
    let q = rem1p(-k * k, p);
    let c = (k + 1 - p) * (k - 1) / 2;
    let m = (k * k2 - 1) / p;
    Ok(SurgeryParameter { p, k, k2, q, e: k2.signum(), c, m })
}

/// All normalized parameters with `3 <= p <= p_max`, one per class
/// `{k, |k2|}`, sorted by `(p, k)`. `k = 1` is included.
pub fn enumerate(p_max: i64) -> Vec<SurgeryParameter> {
    let mut out = BTreeMap::new();
    for p in 3..=p_max {
        for k in 1..=(p - 1) / 2 {
            if gcd(p, k) != 1 {
                continue;
            }
            let sp = normalize(p, k).expect("coprime k");
            out.entry((sp.p, sp.k)).or_insert(sp);
        }
    }
    out.into_values().collect()
}
