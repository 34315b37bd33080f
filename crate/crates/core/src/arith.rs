//! Exact integer and rational arithmetic shared by every other module.
//!
//! Everything downstream (Betti numbers, composition entries, probabilities,
//! expected values) is exact: arbitrary-precision integers and rationals in
//! lowest terms. Floating point appears only in the Monte Carlo estimator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number, stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Binomial coefficient C(n, k) as an exact integer.
///
/// Total over all integer k: returns 0 for k < 0 and k > n, so sums with
/// out-of-range indices vanish term by term instead of erroring.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = BigInt::one();
    // Multiplicative form; each intermediate division is exact because
    // result holds C(n, i+1) after step i.
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Builds the normalized fraction num/den in lowest terms with positive
/// denominator.
pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num.into(), den))
}

/// Renders a rational as `num/den`, or just `num` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num/den` or a bare integer `num` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let malformed = || Error::MalformedRational(s.to_string());
    match s.split_once('/') {
        None => {
            let num: BigInt = s.parse().map_err(|_| malformed())?;
            Ok(Rational::from_integer(num))
        }
        Some((num, den)) => {
            let num: BigInt = num.parse().map_err(|_| malformed())?;
            let den: BigInt = den.parse().map_err(|_| malformed())?;
            rational(num, den)
        }
    }
}

/// r^e for a nonnegative exponent; 0^0 = 1.
pub fn rational_pow(r: &Rational, e: u32) -> Rational {
    Rational::new(r.numer().pow(e), r.denom().pow(e))
}

/// 1 + r + r^2 + ... + r^(k-1); the empty sum (k = 0) is 0.
///
/// Used wherever a formula contains (1 - r^k)/(1 - r) so that r = 1 needs no
/// special case.
pub fn geometric_sum(r: &Rational, k: usize) -> Rational {
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    for _ in 0..k {
        sum += &power;
        power *= r;
    }
    sum
}

/// Convenience constructor for small rationals in tests and tables.
pub fn ratio(num: i64, den: i64) -> Rational {
    rational(num, den).expect("nonzero denominator")
}

pub(crate) fn is_nonnegative(x: &BigInt) -> bool {
    !x.is_negative()
}
