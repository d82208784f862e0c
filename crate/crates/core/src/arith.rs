//! Modular arithmetic on exponents.
//!
//! Everything here works on `i64`. Products that could leave the 64-bit range
//! go through `i128` or checked operations, and an overflow becomes an error
//! instead of a silent wrap.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{a} is not invertible modulo {p}")]
    NotCoprime { a: i64, p: i64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

/// The index set `I_alpha`: `{1..=alpha}` for positive alpha and
/// `{alpha+1..=0}` for negative alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    alpha: i64,
}

impl Interval {
    /// Panics on `alpha == 0`, which has no meaning.
    pub fn new(alpha: i64) -> Self {
        assert!(alpha != 0, "I_0 is undefined");
        Interval { alpha }
    }

    pub fn alpha(self) -> i64 {
        self.alpha
    }

    pub fn contains(self, x: i64) -> bool {
        in_interval(x, self)
    }

    /// Number of elements, always `|alpha|`.
    pub fn len(self) -> i64 {
        self.alpha.abs()
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        if self.alpha > 0 {
            1..=self.alpha
        } else {
            (self.alpha + 1)..=0
        }
    }
}

pub fn in_interval(x: i64, iv: Interval) -> bool {
    if iv.alpha > 0 {
        (1..=iv.alpha).contains(&x)
    } else {
        (iv.alpha + 1..=0).contains(&x)
    }
}

/// Least absolute remainder, in `(-p/2, p/2]`.
pub fn lar(y: i64, p: i64) -> i64 {
    debug_assert!(p >= 1);
    let r = y.rem_euclid(p);
    if 2 * r > p {
        r - p
    } else {
        r
    }
}

/// Remainder in `1..=p`; multiples of `p` map to `p`.
pub fn rem1p(y: i64, p: i64) -> i64 {
    debug_assert!(p >= 1);
    let r = y.rem_euclid(p);
    if r == 0 {
        p
    } else {
        r
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Inverse of `a` modulo `p`, in `1..p` (or 0 when p = 1).
pub fn inv_mod(a: i64, p: i64) -> Result<i64, ArithError> {
    if p == 1 {
        return Ok(0);
    }
    let (mut r0, mut r1) = (p as i128, (a as i128).rem_euclid(p as i128));
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(ArithError::NotCoprime { a, p });
    }
    Ok(t0.rem_euclid(p as i128) as i64)
}

/// `a * b mod p` in `0..p` without intermediate overflow.
pub fn mul_mod(a: i64, b: i64, p: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(p as i128)) as i64
}

/// `e` if `lar(arg, p)` lies in `I_beta`, otherwise 0.
pub fn e_beta(arg: i64, beta: i64, p: i64, e: i64) -> i64 {
    debug_assert!(e == 1 || e == -1);
    if in_interval(lar(arg, p), Interval::new(beta)) {
        e
    } else {
        0
    }
}

pub fn checked_mul(a: i64, b: i64, what: &'static str) -> Result<i64, ArithError> {
    a.checked_mul(b).ok_or(ArithError::Overflow(what))
}

pub fn checked_add(a: i64, b: i64, what: &'static str) -> Result<i64, ArithError> {
    a.checked_add(b).ok_or(ArithError::Overflow(what))
}
