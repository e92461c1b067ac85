//! Class functions on the cyclic group `C_r = <π_r>`, their inductions to
//! `S_r`, and the subset-rotation character.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{big_rat, binom, gcd, rat, CycloElem, Rat};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, ClassFunctionSn, SymFunc};

/// Largest `n + m` accepted by [`chi_cyc_oracle`].
pub const CYC_ORACLE_MAX: u32 = 16;
/// Largest order accepted by [`induce_oracle`].
pub const INDUCE_ORACLE_MAX: u32 = 7;

/// Values `χ(π_r^k)` for `k = 1..=r`, each in `Q(ω_r)`; the identity is
/// the last entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicClassFunction {
    order: u32,
    values: Vec<CycloElem>,
}

impl CyclicClassFunction {
    pub fn new(order: u32, values: Vec<CycloElem>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("cyclic group order must be positive".into()));
        }
        if values.len() != order as usize {
            return Err(Error::Domain(format!(
                "a class function on C_{order} needs {order} values, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.modulus() != order) {
            return Err(Error::Domain(format!(
                "value {v} lives in Q(ω_{}), not Q(ω_{order})",
                v.modulus()
            )));
        }
        Ok(Self { order, values })
    }

    fn from_fn(order: u32, f: impl Fn(u32) -> CycloElem) -> Self {
        Self { order, values: (1..=order).map(f).collect() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `χ(π^k)`, with `k` taken mod `r`.
    pub fn value(&self, k: i64) -> &CycloElem {
        let idx = (k - 1).rem_euclid(self.order as i64) as usize;
        &self.values[idx]
    }

    pub fn values(&self) -> &[CycloElem] {
        &self.values
    }
}

impl fmt::Display for CyclicClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "C_{}[{}]", self.order, vals.join(", "))
    }
}

/// The linear character `π^k ↦ ω_r^{k0·k}`.
pub fn chi_power(r: u32, k0: i64) -> Result<CyclicClassFunction> {
    if r == 0 {
        return Err(Error::Domain("cyclic group order must be positive".into()));
    }
    Ok(CyclicClassFunction::from_fn(r, |k| {
        CycloElem::root_power(r, k0.rem_euclid(r as i64) * k as i64)
    }))
}

/// Permutation character of `π_{n+m}` on `m`-subsets of `[n+m]`, by the
/// fixed-point count `C((n+m)/d, m/d)` when `d | m`, `d` the order of `π^k`.
pub fn chi_cyc(n: u32, m: u32) -> Result<CyclicClassFunction> {
    let r = n + m;
    if r == 0 {
        return Err(Error::Domain("χ^cyc needs (n,m) ≠ (0,0)".into()));
    }
    Ok(CyclicClassFunction::from_fn(r, |k| {
        let d = r / gcd(k as u64, r as u64) as u32;
        let fixed = if m.is_multiple_of(d) {
            big_rat(binom((r / d) as i64, (m / d) as i64))
        } else {
            Rat::zero()
        };
        CycloElem::from_rat(r, fixed)
    }))
}

/// [`chi_cyc`] by counting fixed subsets directly.
pub fn chi_cyc_oracle(n: u32, m: u32) -> Result<CyclicClassFunction> {
    let r = n + m;
    if r == 0 {
        return Err(Error::Domain("χ^cyc needs (n,m) ≠ (0,0)".into()));
    }
    if r > CYC_ORACLE_MAX {
        return Err(Error::Resource(format!(
            "subset enumeration is capped at n+m <= {CYC_ORACLE_MAX}"
        )));
    }
    let full = (1u32 << r) - 1;
    let rotate = |s: u32, k: u32| ((s << k) | (s >> (r - k))) & full;
    Ok(CyclicClassFunction::from_fn(r, |k| {
        let k = k % r;
        let fixed = (0..=full)
            .filter(|s| s.count_ones() == m && (k == 0 || rotate(*s, k) == *s))
            .count();
        CycloElem::from_rat(r, rat(fixed as i64))
    }))
}

/// Tensor product of characters.
pub fn pointwise_product(
    a: &CyclicClassFunction,
    b: &CyclicClassFunction,
) -> Result<CyclicClassFunction> {
    if a.order != b.order {
        return Err(Error::Domain(format!(
            "cannot multiply class functions on C_{} and C_{}",
            a.order, b.order
        )));
    }
    Ok(CyclicClassFunction {
        order: a.order,
        values: a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect(),
    })
}

/// Frobenius characteristic of `χ↑_{C_r}^{S_r}`:
/// `(1/r) Σ_{d|r} (Σ_{gcd(k,r)=r/d} χ(π^k)) p_d^{r/d}`.
pub fn induce_frobenius(chi: &CyclicClassFunction) -> Result<SymFunc> {
    let r = chi.order;
    let mut sums: Vec<CycloElem> = vec![CycloElem::zero(r); r as usize + 1];
    for k in 1..=r {
        let d = r / gcd(k as u64, r as u64) as u32;
        sums[d as usize] = &sums[d as usize] + chi.value(k as i64);
    }
    let mut terms = Vec::new();
    for (d, s) in sums.iter().enumerate().skip(1) {
        if s.is_zero() {
            continue;
        }
        let d = d as u32;
        let value = s.as_rational().ok_or_else(|| {
            Error::Internal(format!(
                "sum of χ over elements of order {d} in C_{r} is irrational: {s}"
            ))
        })?;
        terms.push((Partition::rectangle(d, r / d), value / rat(r as i64)));
    }
    Ok(SymFunc::from_rational_terms(Basis::P, terms))
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A permutation of `0..r` with cycle type `mu`, cycles on consecutive points.
fn representative(mu: &Partition) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(mu.size() as usize);
    let mut start = 0;
    for &part in mu.parts() {
        let part = part as usize;
        for i in 0..part {
            sigma.push(start + (i + 1) % part);
        }
        start += part;
    }
    sigma
}

/// Induced character values from `(1/r) Σ_{x ∈ S_r, x⁻¹σx ∈ C_r} χ(x⁻¹σx)`,
/// summing over all of `S_r` for one `σ` per cycle type.
pub fn induce_oracle(chi: &CyclicClassFunction) -> Result<ClassFunctionSn> {
    let r = chi.order;
    if r > INDUCE_ORACLE_MAX {
        return Err(Error::Resource(format!(
            "literal induction is capped at r <= {INDUCE_ORACLE_MAX}"
        )));
    }
    let n = r as usize;
    let mut values = std::collections::BTreeMap::new();
    for mu in partitions_of(r) {
        let sigma = representative(&mu);
        let mut total = CycloElem::zero(r);
        let mut x: Vec<usize> = (0..n).collect();
        let mut x_inv = vec![0; n];
        loop {
            for (i, &xi) in x.iter().enumerate() {
                x_inv[xi] = i;
            }
            // y = x⁻¹ σ x is π^k iff y(i) = i + k mod r for every i
            let y = |i: usize| x_inv[sigma[x[i]]];
            let k = y(0);
            if (0..n).all(|i| y(i) == (i + k) % n) {
                total = &total + chi.value(k as i64);
            }
            if !next_permutation(&mut x) {
                break;
            }
        }
        let value = total.as_rational().ok_or_else(|| {
            Error::Internal(format!("induced character at {mu} is irrational: {total}"))
        })?;
        values.insert(mu, value / rat(r as i64));
    }
    ClassFunctionSn::new(r, values)
}

/// `ch(χ^cyc ⊗ χ^e)↑` with `e = 1` for odd `m` and `e = m/2 + 1` for even `m`.
pub fn super_klyachko_char(n: u32, m: u32) -> Result<SymFunc> {
    let r = n + m;
    let cyc = chi_cyc(n, m)?;
    let e = if m % 2 == 1 { 1 } else { m / 2 + 1 };
    induce_frobenius(&pointwise_product(&cyc, &chi_power(r, e as i64)?)?)
}

/// The trivial character of `C_r`.
pub fn trivial(r: u32) -> Result<CyclicClassFunction> {
    chi_power(r, 0)
}

impl CyclicClassFunction {
    /// True when every value is `1`.
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.as_rational().is_some_and(|c| c.is_one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::superlie::super_brandt_char;
    use crate::symfunc::frobenius_characteristic;

    fn c(r: u32, v: i64) -> CycloElem {
        CycloElem::from_rat(r, rat(v))
    }

    #[test]
    fn power_characters() {
        let sign = chi_power(2, 1).unwrap();
        assert_eq!(sign.values(), &[c(2, -1), c(2, 1)]);
        assert!(chi_power(5, 0).unwrap().is_trivial());
        assert_eq!(chi_power(4, 1).unwrap().value(2), &c(4, -1));
        assert_eq!(chi_power(4, 5).unwrap(), chi_power(4, 1).unwrap());
        assert_eq!(chi_power(4, -1).unwrap(), chi_power(4, 3).unwrap());
        assert!(chi_power(0, 1).is_err());
    }

    #[test]
    fn subset_rotation_character() {
        let x = chi_cyc(2, 2).unwrap();
        assert_eq!(x.value(2), &c(4, 2));
        assert_eq!(x.value(4), &c(4, 6));
        assert_eq!(x.value(1), &c(4, 0));
        assert_eq!(chi_cyc(3, 1).unwrap().value(1), &c(4, 0));
        assert!(chi_cyc(5, 0).unwrap().is_trivial());
        assert!(chi_cyc(0, 0).is_err());
    }

    #[test]
    fn subset_rotation_matches_enumeration() {
        for r in 1..=10 {
            for m in 0..=r {
                assert_eq!(chi_cyc(r - m, m).unwrap(), chi_cyc_oracle(r - m, m).unwrap());
            }
        }
        assert!(chi_cyc_oracle(2, 2).unwrap().value(1).is_zero());
        assert!(chi_cyc_oracle(10, 7).is_err());
    }

    #[test]
    fn products() {
        let x = chi_cyc(2, 2).unwrap();
        assert_eq!(pointwise_product(&chi_power(4, 0).unwrap(), &x).unwrap(), x);
        let sq = pointwise_product(&chi_power(4, 1).unwrap(), &chi_power(4, 1).unwrap()).unwrap();
        assert_eq!(sq, chi_power(4, 2).unwrap());
        assert_eq!(sq.value(1), &c(4, -1));
        let mixed = pointwise_product(&x, &chi_power(4, 2).unwrap()).unwrap();
        assert_eq!(mixed.value(2), &c(4, 2));
        assert!(pointwise_product(&x, &chi_power(3, 0).unwrap()).is_err());
    }

    #[test]
    fn induction_small() {
        assert!(induce_frobenius(&chi_power(2, 1).unwrap()).unwrap().equals(&SymFunc::e(2)));
        assert!(induce_frobenius(&chi_power(2, 0).unwrap()).unwrap().equals(&SymFunc::h(2)));
        let e2 = induce_frobenius(&chi_power(2, 1).unwrap()).unwrap();
        assert_eq!(e2.coeff(&"(2)".parse().unwrap()).as_constant(), Some(ratio(-1, 2)));
    }

    #[test]
    fn irrational_inner_sum_is_reported() {
        let w = CycloElem::root_power(3, 1);
        let bad = CyclicClassFunction::new(3, vec![w, c(3, 0), c(3, 1)]).unwrap();
        assert!(matches!(induce_frobenius(&bad), Err(Error::Internal(_))));
        let wrong_mod = CyclicClassFunction::new(3, vec![c(2, 1), c(3, 1), c(3, 1)]);
        assert!(wrong_mod.is_err());
    }

    #[test]
    fn klyachko_classical() {
        for n in 1..=8 {
            assert_eq!(
                induce_frobenius(&chi_power(n, 1).unwrap()).unwrap(),
                super_brandt_char(n, 0).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn klyachko_super() {
        for r in 1..=8 {
            for m in 0..=r {
                assert_eq!(
                    super_klyachko_char(r - m, m).unwrap(),
                    super_brandt_char(r - m, m).unwrap(),
                    "({},{m})",
                    r - m
                );
            }
        }
        assert_eq!(super_klyachko_char(1, 1).unwrap(), SymFunc::p("(1,1)".parse().unwrap()));
    }

    #[test]
    fn induction_matches_literal_formula() {
        for r in 1..=6 {
            for k in 0..r {
                let chi = chi_power(r, k as i64).unwrap();
                let via_oracle = frobenius_characteristic(&induce_oracle(&chi).unwrap());
                assert_eq!(via_oracle, induce_frobenius(&chi).unwrap(), "r={r} k={k}");
            }
        }
        let one = induce_oracle(&chi_power(1, 0).unwrap()).unwrap();
        assert_eq!(one.value(&Partition::row(1)), Some(&rat(1)));
        assert!(induce_oracle(&chi_power(8, 0).unwrap()).is_err());
    }

    #[test]
    fn induction_depends_on_gcd_only() {
        for r in 1..=8u32 {
            for a in 0..r {
                for b in 0..r {
                    if gcd(a as u64, r as u64) == gcd(b as u64, r as u64) {
                        assert_eq!(
                            induce_frobenius(&chi_power(r, a as i64).unwrap()).unwrap(),
                            induce_frobenius(&chi_power(r, b as i64).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn permutations_are_enumerated_once() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(representative(&"(2,1)".parse().unwrap()), vec![1, 0, 2]);
    }
}
