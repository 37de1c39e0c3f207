//! Exact rational helpers: correctly rounded conversion to `f64` and a
//! decimal reference value of π.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// π to 50 decimal places.
pub const PI_DECIMAL: &str = "3.14159265358979323846264338327950288419716939937510";

/// [`PI_DECIMAL`] as an exact rational `digits / 10^50`.
pub fn pi_reference() -> BigRational {
    let (int, frac) = PI_DECIMAL.split_once('.').expect("decimal point");
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let scale = num_traits::pow(BigInt::from(10u32), frac.len());
    BigRational::new(digits, scale)
}

/// `numerator / denominator` rounded to the nearest `f64`, ties to even.
///
/// Intended for values in the normal `f64` range.
pub fn ratio_to_f64(numerator: &BigUint, denominator: &BigUint) -> f64 {
    assert!(!denominator.is_zero(), "zero denominator");
    if numerator.is_zero() {
        return 0.0;
    }
    // Scale so that the integer quotient carries 55 or 56 significant bits.
    let shift = 55 - (numerator.bits() as i64 - denominator.bits() as i64);
    let (num, den) = if shift >= 0 {
        (numerator << shift as usize, denominator.clone())
    } else {
        (numerator.clone(), denominator << (-shift) as usize)
    };
    let (quotient, remainder) = num.div_rem(&den);

    let extra = quotient.bits() - 53;
    let mut mantissa = (&quotient >> extra as usize)
        .to_u64()
        .expect("53-bit mantissa");
    let dropped = (&quotient & ((BigUint::one() << extra as usize) - 1u32))
        .to_u64()
        .expect("dropped bits fit");
    let half = 1u64 << (extra - 1);
    let sticky = !remainder.is_zero();
    if dropped > half || (dropped == half && (sticky || mantissa & 1 == 1)) {
        mantissa += 1;
    }
    scale_by_power_of_two(mantissa as f64, extra as i64 - shift)
}

/// Signed [`ratio_to_f64`] for a [`BigRational`].
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let magnitude = ratio_to_f64(r.numer().magnitude(), r.denom().magnitude());
    let negative = (r.numer().sign() == Sign::Minus) != (r.denom().sign() == Sign::Minus);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

fn scale_by_power_of_two(x: f64, exp: i64) -> f64 {
    // Split so each factor stays a normal power of two.
    let mut x = x;
    let mut e = exp;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}
