use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{rat, Rat, UniPoly};

/// Sparse polynomial in `q` and `t` with rational coefficients.
///
/// Terms are keyed by `(q exponent, t exponent)` in a sorted map and zero
/// coefficients are never stored, so derived equality is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// `c * q^a * t^b`.
    pub fn monomial(a: u32, b: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    /// Builds from `(q exp, t exp, coeff)` triples, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    /// Embeds a polynomial in `q`.
    pub fn from_q_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rat> {
        &self.terms
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `q -> q^d`, `t -> t^d`.
    pub fn dilate(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a * d, b * d), c.clone()))
                .collect(),
        }
    }

    /// Sets `q = 1`, leaving a polynomial in `t` alone.
    pub fn at_q_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(_, b), c)| ((0, b), c.clone())))
    }

    /// Sets `t = 0`.
    pub fn at_t_zero(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `t^m`, as a polynomial in `q`.
    pub fn t_coeff(&self, m: u32) -> UniPoly {
        let top = self
            .terms
            .keys()
            .filter(|(_, b)| *b == m)
            .map(|(a, _)| *a as usize)
            .max();
        let Some(top) = top else {
            return UniPoly::zero();
        };
        let mut coeffs = vec![Rat::zero(); top + 1];
        for (&(a, b), c) in &self.terms {
            if b == m {
                coeffs[a as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Keeps only monomials whose `q` exponent is `residue` mod `modulus`.
    pub fn filter_q_residue(&self, modulus: u32, residue: u32) -> Self {
        assert!(modulus >= 1);
        let residue = residue % modulus;
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((a, _), _)| a % modulus == residue)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, q: &Rat, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * num_traits::pow(q.clone(), a as usize) * num_traits::pow(t.clone(), b as usize);
        }
        acc
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, b)| *b).max()
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, _)| *a).max()
    }

    /// Drops every monomial with `q` exponent above `cap`.
    pub fn truncate_q(&self, cap: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((a, _), _)| *a <= cap)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Exact division by a polynomial in `q`, or `None` if it leaves a remainder.
    pub fn div_exact_q(&self, divisor: &UniPoly) -> Option<Self> {
        let mut out = Self::zero();
        let tdeg = match self.max_t_degree() {
            Some(d) => d,
            None => return Some(Self::zero()),
        };
        for b in 0..=tdeg {
            let slice = self.t_coeff(b);
            if slice.is_zero() {
                continue;
            }
            let quot = slice.div_exact(divisor)?;
            for (a, c) in quot.coeffs().iter().enumerate() {
                out.add_term((a as u32, b), c.clone());
            }
        }
        Some(out)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.denom().is_one() && !c.is_negative())
    }
}

impl Add<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QTPoly {
    type Output = QTPoly;
    fn add(mut self, rhs: QTPoly) -> QTPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Sub<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: QTPoly) -> QTPoly {
        &self * &rhs
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

fn monomial_name(a: u32, b: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    match (a, b) {
        (0, 0) => String::new(),
        (_, 0) => part("q", a),
        (0, _) => part("t", b),
        _ => format!("{}*{}", part("q", a), part("t", b)),
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let name = monomial_name(a, b);
            if name.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}*{name}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct JsonTerm {
    q: u32,
    t: u32,
    value: String,
}

/// Serializes as `[{"q": a, "t": b, "value": "c"}, ...]` in term order, with
/// each coefficient an exact rational string.
impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(&(q, t), c)| JsonTerm {
            q,
            t,
            value: c.to_string(),
        }))
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: u32) -> QTPoly {
    QTPoly::from_terms((0..n).map(|k| ((k, 0), Rat::one())))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `(q;q)_n = (1 - q)(1 - q^2)...(1 - q^n)`.
pub fn q_pochhammer(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, k| {
        let factor = QTPoly::from_terms([((0, 0), Rat::one()), ((k, 0), -Rat::one())]);
        &acc * &factor
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly_from(coeffs: &[(u32, u32, i64)]) -> QTPoly {
        QTPoly::from_terms(coeffs.iter().map(|&(a, b, c)| ((a, b), rat(c))))
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1), QTPoly::one());
        assert_eq!(q_int(3), poly_from(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)]));
        assert_eq!(q_int(0), QTPoly::zero());
    }

    #[test]
    fn q_pochhammer_two() {
        // (1 - q)(1 - q^2) = 1 - q - q^2 + q^3
        assert_eq!(
            q_pochhammer(2),
            poly_from(&[(0, 0, 1), (1, 0, -1), (2, 0, -1), (3, 0, 1)])
        );
    }

    #[test]
    fn pochhammer_is_factorial_times_power() {
        let one_minus_q = poly_from(&[(0, 0, 1), (1, 0, -1)]);
        for n in 0..=20 {
            assert_eq!(q_pochhammer(n), &one_minus_q.pow(n) * &q_factorial(n), "n = {n}");
        }
    }

    #[test]
    fn display_order() {
        let p = poly_from(&[(1, 2, 1), (0, 0, 1), (1, 1, 1), (0, 1, 1)]);
        assert_eq!(p.to_string(), "1 + t + q*t + q*t^2");
        assert_eq!(poly_from(&[(2, 0, -3)]).to_string(), "-3*q^2");
    }

    #[test]
    fn exact_q_division() {
        let num = &q_factorial(3) * &QTPoly::t();
        let quot = num.div_exact_q(&UniPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(&quot * &QTPoly::from_q_poly(&UniPoly::from_ints(&[1, 1])), num);
        assert!(QTPoly::q().div_exact_q(&UniPoly::from_ints(&[1, 1])).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = QTPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..6), 0..6).prop_map(|v| poly_from(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &QTPoly::one(), a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn dilation_is_a_ring_map(a in arb_poly(), b in arb_poly(), d in 1u32..4) {
            prop_assert_eq!((&a * &b).dilate(d), &a.dilate(d) * &b.dilate(d));
        }
    }
}
