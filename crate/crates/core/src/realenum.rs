//! Finite-precision reals `a·10^(−b)` and their diagonal enumeration.
//!
//! Pairs `(a, b)` are laid out on the diagonals of an infinite matrix and
//! numbered from 0. Three functions do all the work:
//!
//! * `diag_start(x) = x(x+1)/2`, the index of the first pair on diagonal `x`;
//! * `pair_index(x, y)`, which strips trailing zeros of `x` against `y`
//!   (so `1.50` and `1.5` share an index) and otherwise returns
//!   `diag_start(x+y) + y`;
//! * `pair_decode(i)`, the closed-form inverse through `⌊√(1+8i)⌋`.
//!
//! Everything is exact big-integer arithmetic.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealEnumError {
    /// `x` has more trailing zeros than `y` can absorb.
    #[error("({x}, {y}) has no index: {x} has more trailing zeros than the shift {y}")]
    ShiftUnderflow { x: BigUint, y: BigUint },
}

/// `a·10^(−b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePrecisionReal {
    pub a: BigUint,
    pub b: BigUint,
}

impl FinitePrecisionReal {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Self {
        FinitePrecisionReal { a: a.into(), b: b.into() }
    }

    pub fn value(&self) -> BigRational {
        real_value(&self.a, &self.b)
    }

    /// Payload without trailing zeros, or the pair `(0, 0)`.
    pub fn is_canonical(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_zero()
        } else {
            !(&self.a % 10u32).is_zero()
        }
    }
}

fn pow10(b: &BigUint) -> BigUint {
    let e = b.to_u32().expect("decimal shift fits in u32");
    num_traits::pow(BigUint::from(10u32), e as usize)
}

/// `a × 10^(−b)` as an exact rational.
pub fn real_value(a: &BigUint, b: &BigUint) -> BigRational {
    BigRational::new(a.clone().into(), pow10(b).into())
}

/// `a·10^(−b)` in positional notation when `b ≤ 64`, else as `{a}e-{b}`.
pub fn decimal_string(a: &BigUint, b: &BigUint) -> String {
    let Some(shift) = b.to_usize().filter(|&s| s <= 64) else {
        return format!("{a}e-{b}");
    };
    let digits = a.to_string();
    if shift == 0 {
        return digits;
    }
    let padded = format!("{}{digits}", "0".repeat((shift + 1).saturating_sub(digits.len())));
    let (int, frac) = padded.split_at(padded.len() - shift);
    format!("{int}.{frac}")
}

/// `x(x+1)/2`.
pub fn diag_start(x: &BigUint) -> BigUint {
    (x * (x + 1u32)) >> 1
}

/// Index of the pair `(x, y)`.
pub fn pair_index(x: &BigUint, y: &BigUint) -> Result<BigUint, RealEnumError> {
    let (mut x, mut y) = (x.clone(), y.clone());
    loop {
        if x.is_zero() {
            return Ok(BigUint::zero());
        }
        let (q, r) = x.div_rem(&BigUint::from(10u32));
        if !r.is_zero() {
            return Ok(diag_start(&(&x + &y)) + y);
        }
        if y.is_zero() {
            return Err(RealEnumError::ShiftUnderflow { x: x.clone(), y });
        }
        x = q;
        y -= 1u32;
    }
}

/// `⌊√v⌋` by Newton iteration from above, checked `r² ≤ v < (r+1)²`.
pub fn isqrt(v: &BigUint) -> BigUint {
    if v.is_zero() {
        return BigUint::zero();
    }
    // 2^⌈bits/2⌉ ≥ √v, so the iteration decreases monotonically to the floor
    let mut r = BigUint::one() << v.bits().div_ceil(2);
    loop {
        let next = (&r + v / &r) >> 1;
        if next >= r {
            break;
        }
        r = next;
    }
    debug_assert!(&r * &r <= *v && (&r + 1u32) * (&r + 1u32) > *v);
    r
}

/// The pair with index `idx`, as `(x, y)`.
pub fn pair_decode(idx: &BigUint) -> (BigUint, BigUint) {
    let s = isqrt(&(idx * 8u32 + 1u32));
    // ⌊(√v + k)/2⌋ = ⌊(⌊√v⌋ + k)/2⌋ for integer k
    let lo = (&s - 1u32) >> 1;
    let hi5 = (&s + 5u32) >> 1;
    let hi1 = (&s + 1u32) >> 1;
    let x = ((&lo * &hi5) >> 1) - idx;
    let y = idx - ((&lo * &hi1) >> 1);
    (x, y)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum PairStatus {
    Canonical,
    /// Same value as the pair numbered `of`.
    Duplicate { of: String },
    /// `pair_index` rejects the pair (trailing zeros exceed the shift).
    Unnumbered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumEntry {
    pub index: BigUint,
    pub real: FinitePrecisionReal,
    pub status: PairStatus,
}

/// Decode one index, flagging a pair that repeats an earlier value.
pub fn enumerate_one(index: &BigUint) -> EnumEntry {
    let (a, b) = pair_decode(index);
    let real = FinitePrecisionReal { a, b };
    let status = if real.is_canonical() {
        PairStatus::Canonical
    } else {
        match pair_index(&real.a, &real.b) {
            Ok(of) => PairStatus::Duplicate { of: of.to_string() },
            Err(_) => PairStatus::Unnumbered,
        }
    };
    EnumEntry { index: index.clone(), real, status }
}

/// Decode indices `0..n` in order.
pub fn enumerate(n: u64) -> Vec<EnumEntry> {
    (0..n).map(|i| enumerate_one(&BigUint::from(i))).collect()
}
