use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{divisors, Rat, UniPoly};

static CYCLOTOMIC: OnceLock<Mutex<HashMap<u32, Arc<UniPoly>>>> = OnceLock::new();

/// The `d`-th cyclotomic polynomial `Phi_d(q)`.
///
/// Computed as `(q^d - 1) / prod_{e | d, e < d} Phi_e(q)` with exact
/// division, and memoized.
pub fn cyclotomic_poly(d: u32) -> Arc<UniPoly> {
    assert!(d >= 1, "cyclotomic polynomials are indexed by d >= 1");
    let cache = CYCLOTOMIC.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut num = UniPoly::monomial(Rat::one(), d as usize);
    num = &num - &UniPoly::one();
    for e in divisors(d as u64) {
        let e = e as u32;
        if e == d {
            continue;
        }
        num = num
            .div_exact(&cyclotomic_poly(e))
            .expect("Phi_e divides q^d - 1 for e | d");
    }
    let p = Arc::new(num);
    cache.lock().unwrap().entry(d).or_insert(p).clone()
}

/// An element of `Q[q] / Phi_d(q)`, i.e. of the `d`-th cyclotomic field with
/// `q` standing for a primitive `d`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    modulus: u32,
    rep: UniPoly,
}

/// Reduces `p` modulo `Phi_d`.
pub fn cyclo_reduce(p: &UniPoly, d: u32) -> CycloElem {
    let (_, rem) = p.div_rem(&cyclotomic_poly(d));
    CycloElem { modulus: d, rep: rem }
}

impl CycloElem {
    pub fn zero(d: u32) -> Self {
        Self { modulus: d, rep: UniPoly::zero() }
    }

    pub fn one(d: u32) -> Self {
        Self::from_rat(d, Rat::one())
    }

    pub fn from_rat(d: u32, c: Rat) -> Self {
        cyclo_reduce(&UniPoly::constant(c), d)
    }

    /// `omega_d^k` for any integer `k`.
    pub fn root_power(d: u32, k: i64) -> Self {
        let e = k.rem_euclid(d as i64) as usize;
        cyclo_reduce(&UniPoly::monomial(Rat::one(), e), d)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Reduced representative, of degree below `phi(d)`.
    pub fn rep(&self) -> &UniPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.rep.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self { modulus: self.modulus, rep: self.rep.scale(c) }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.modulus), |acc, _| &acc * self)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed cyclotomic moduli");
    }
}

impl Add<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.check(rhs);
        CycloElem { modulus: self.modulus, rep: &self.rep + &rhs.rep }
    }
}

impl Sub<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.check(rhs);
        CycloElem { modulus: self.modulus, rep: &self.rep - &rhs.rep }
    }
}

impl Mul<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        self.check(rhs);
        cyclo_reduce(&(&self.rep * &rhs.rep), self.modulus)
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { modulus: self.modulus, rep: -&self.rep }
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.degree().unwrap_or(0) == 0 {
            write!(f, "{}", self.rep)
        } else {
            write!(f, "[{}] mod Phi_{}", self.rep, self.modulus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{euler_phi, rat};

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), UniPoly::from_ints(&[1, 1]));
        assert_eq!(*cyclotomic_poly(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(4), UniPoly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn degrees_are_totients() {
        for d in 1..=30u32 {
            assert_eq!(cyclotomic_poly(d).degree(), Some(euler_phi(d as u64) as usize));
        }
    }

    #[test]
    fn reductions() {
        assert_eq!(cyclo_reduce(&UniPoly::from_ints(&[0, 0, 1]), 2).as_rational(), Some(rat(1)));
        assert!(cyclo_reduce(&UniPoly::from_ints(&[1, 1, 1, 1]), 4).is_zero());
        assert_eq!(cyclo_reduce(&UniPoly::from_ints(&[0, 1]), 1).as_rational(), Some(rat(1)));
        assert_eq!(CycloElem::root_power(4, 2).as_rational(), Some(rat(-1)));
        assert_eq!(CycloElem::root_power(4, -1), CycloElem::root_power(4, 3));
    }

    #[test]
    fn phi_and_power_identities() {
        for d in 1..=30u32 {
            assert!(cyclo_reduce(&cyclotomic_poly(d), d).is_zero(), "Phi_{d} mod itself");
            let qd = cyclo_reduce(&UniPoly::monomial(Rat::one(), d as usize), d);
            assert_eq!(qd, CycloElem::one(d), "q^{d} = 1");
            // rational constants reduce to degree-0 representatives
            let c = CycloElem::from_rat(d, rat(7));
            assert_eq!(c.rep().degree(), Some(0));
        }
    }

    #[test]
    fn primitive_root_sums_are_mobius() {
        use crate::exactalg::{gcd, mobius};
        for d in 1..=24u32 {
            let mut acc = CycloElem::zero(d);
            for k in 1..=d {
                if gcd(k as u64, d as u64) == 1 {
                    acc = &acc + &CycloElem::root_power(d, k as i64);
                }
            }
            assert_eq!(acc.as_rational(), Some(rat(mobius(d as u64))), "d = {d}");
        }
    }
}
