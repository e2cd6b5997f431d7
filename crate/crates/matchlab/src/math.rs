//! Exact arithmetic helpers: overflow-checked binomial coefficients and
//! big-rational shorthands. No floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational number used for every weight, weight sum and
/// inequality audit in this crate.
pub type Rational = BigRational;

/// Exact binomial coefficient, zero when `r > n`.
///
/// The running product is always itself a binomial coefficient, so every
/// intermediate division is exact. Panics on u128 overflow, which is far
/// outside the parameter ranges this crate accepts.
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc
            .checked_mul((n - i) as u128)
            .expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

pub fn rat_u128(v: u128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// C(n, r) as a rational.
pub fn rat_binom(n: u64, r: u64) -> Rational {
    rat_u128(binomial(n, r))
}

/// Render as `p/q` (or just `p` for integers), the exchange format for
/// all rational values in reports.
pub fn rat_string(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn is_zero(v: &Rational) -> bool {
    v.is_zero()
}

pub fn is_nonneg(v: &Rational) -> bool {
    !v.is_negative()
}
