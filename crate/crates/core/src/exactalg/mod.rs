//! Exact arithmetic substrate.
//!
//! Everything here is exact: big rationals, sparse polynomials in `q` and
//! `t`, dense polynomials in `q`, truncated multivariate polynomials in two
//! alphabets, and the cyclotomic quotient rings `Q[q]/Phi_d(q)` used to
//! evaluate at roots of unity.

mod cyclo;
mod multipoly;
mod qtpoly;
mod unipoly;

pub use cyclo::{cyclo_reduce, cyclotomic_poly, CycloElem};
pub use multipoly::MultiPoly;
pub use qtpoly::{q_factorial, q_int, q_pochhammer, QTPoly};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn big_rat(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Parses `"a"` or `"a/b"` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Möbius function.
pub fn mobius(d: u64) -> i64 {
    assert!(d >= 1, "mobius is defined for d >= 1");
    let mut n = d;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Binomial coefficient; zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `gcd(n, 0) = n`, `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn mobius_sums_vanish() {
        for n in 2..60u64 {
            let s: i64 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(ratio(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(gcd(6, 0), 6);
        assert_eq!(gcd(0, 4), 4);
        assert_eq!(euler_phi(12), 4);
    }
}
