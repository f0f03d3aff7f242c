//! Helpers for exact rational scalars: canonical "p/q" text form, factorials
//! and binomials, and conversions used by the JSON layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Parses a rational from canonical text: an integer string or "p/q".
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::MalformedRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((num, den)) => {
            let p: BigInt = num.trim().parse().map_err(|_| bad())?;
            let q: BigInt = den.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Formats a rational canonically: reduced, denominator positive, "p" when
/// the denominator is 1 and "p/q" otherwise. `BigRational` keeps values
/// reduced with positive denominators, so this is a bit-exact round trip
/// with [`parse_rational`].
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// alpha! = alpha_1! * ... * alpha_n!
pub fn multi_factorial(alpha: &[u32]) -> BigInt {
    alpha.iter().map(|&a| factorial(a)).product()
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn big_rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lossy conversion for the numeric search; exact values at desk scale fit
/// comfortably in an f64.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64()
        .unwrap_or_else(|| x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN))
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via the continued-fraction convergents.
pub fn rationalize(x: f64, max_den: u64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    if max_den == 0 {
        return None;
    }
    let negative = x < 0.0;
    let mut v = x.abs();
    // Convergents h_k / k_k of the continued fraction of |x|.
    let (mut h0, mut h1) = (BigInt::one(), BigInt::from(v.floor() as i64));
    let (mut k0, mut k1) = (BigInt::zero(), BigInt::one());
    v -= v.floor();
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        if v.abs() < 1e-15 {
            break;
        }
        v = 1.0 / v;
        let a = v.floor();
        if a >= 9.2e18 {
            break;
        }
        let a_int = BigInt::from(a as i64);
        let h2 = &a_int * &h1 + &h0;
        let k2 = &a_int * &k1 + &k0;
        if k2 > bound {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        v -= a;
    }
    let mut r = BigRational::new(h1, k1);
    if negative {
        r = -r;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "1/2", "-3/4", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/0", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "{s} should not parse");
        }
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(multi_factorial(&[2, 1, 0]), BigInt::from(2));
        assert_eq!(binomial(3, 1), BigInt::from(3));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        let r = rationalize(0.5, 10).unwrap();
        assert_eq!(r, big_rational(1, 2));
        let r = rationalize(-1.0, 10).unwrap();
        assert_eq!(r, int_rational(-1));
        let r = rationalize(2.0 / 3.0, 1000).unwrap();
        assert_eq!(r, big_rational(2, 3));
    }
}
