//! Exact combinatorial arithmetic: big-integer binomials and rational helpers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - k + 1 + i;
        acc /= i + 1; // exact: C(n-k+i+1, i+1) is an integer
    }
    acc
}

/// `sum_{i=0}^{min(k,m)} C(m, i)` — the growth-function cap for a family of
/// VC-dimension `k` traced on an `m`-element set.
pub fn sauer_shelah_bound(m: u64, k: u64) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 0..=k.min(m) {
        acc += binomial(m, i);
    }
    acc
}

/// Parses a rational from either `p/q` or decimal (`0.75`) notation.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |msg: &str| Error::InvalidParameter(format!("cannot parse rational {s:?}: {msg}"));
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("empty"));
    }
    let negative = int_part.starts_with('-');
    let digits: String = int_part
        .trim_start_matches(['-', '+'])
        .chars()
        .chain(frac_part.chars())
        .collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad("expected digits"));
    }
    let mut num: BigInt = digits.parse().map_err(|_| bad("bad digits"))?;
    if negative {
        num = -num;
    }
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(num, den))
}

/// Float projection that stays finite for numerators/denominators far beyond
/// `f64` range (shifts both sides down to ~80 significant bits first).
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let shift = num.bits().max(den.bits()).saturating_sub(80);
    let n = (num >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// `ceil(r)` for a nonnegative rational, as a big integer.
pub fn ceil_ratio(r: &BigRational) -> BigUint {
    assert!(!r.is_negative());
    r.ceil().to_integer().to_biguint().expect("nonnegative")
}

pub fn biguint_to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::ResourceLimit(format!("value {v} exceeds u64 range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(54, 3), BigUint::from(24804u32));
        // C(60,30) exceeds u32 but not exactness
        assert_eq!(
            binomial(60, 30).to_string(),
            "118264581564861424"
        );
    }

    #[test]
    fn growth_cap_values() {
        assert_eq!(sauer_shelah_bound(5, 2), BigUint::from(16u32));
        assert_eq!(sauer_shelah_bound(7, 0), BigUint::one());
        assert_eq!(sauer_shelah_bound(36, 1), BigUint::from(37u32));
        // k >= m saturates at 2^m
        assert_eq!(sauer_shelah_bound(4, 9), BigUint::from(16u32));
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!(parse_ratio("3/4").unwrap(), parse_ratio("0.75").unwrap());
        assert_eq!(parse_ratio("0.5").unwrap(), parse_ratio("1/2").unwrap());
        assert_eq!(ratio_to_f64(&parse_ratio("0.999").unwrap()), 0.999);
        assert!(parse_ratio("x").is_err());
        assert!(parse_ratio("1/0").is_err());
    }

    #[test]
    fn f64_projection_of_huge_ratio() {
        let num = BigInt::from(3u32) * BigInt::from(10u32).pow(400);
        let den = BigInt::from(4u32) * BigInt::from(10u32).pow(400);
        let r = BigRational::new(num, den);
        assert!((ratio_to_f64(&r) - 0.75).abs() < 1e-12);
    }
}
