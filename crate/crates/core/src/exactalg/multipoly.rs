use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use super::Rat;

/// Polynomial in `x_1..x_N, y_1..y_M` truncated at a total degree cap.
///
/// Exponent vectors have length `N + M` (x-variables first). Products drop
/// every term whose total degree exceeds the cap; comparisons in this crate
/// are always made one degree at a time below the cap, so the truncation is
/// never observable in a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    n_x: usize,
    n_y: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(n_x: usize, n_y: usize, cap: u32) -> Self {
        Self { n_x, n_y, cap, terms: BTreeMap::new() }
    }

    pub fn constant(n_x: usize, n_y: usize, cap: u32, c: Rat) -> Self {
        let mut p = Self::zero(n_x, n_y, cap);
        p.add_term(vec![0; n_x + n_y], c);
        p
    }

    pub fn one(n_x: usize, n_y: usize, cap: u32) -> Self {
        Self::constant(n_x, n_y, cap, Rat::one())
    }

    /// `c * x^e` for an exponent vector `e` (ignored if above the cap).
    pub fn monomial(n_x: usize, n_y: usize, cap: u32, exps: Vec<u32>, c: Rat) -> Self {
        let mut p = Self::zero(n_x, n_y, cap);
        p.add_term(exps, c);
        p
    }

    /// `x_1^k + ... + x_N^k`.
    pub fn power_sum_x(n_x: usize, n_y: usize, cap: u32, k: u32) -> Self {
        let mut p = Self::zero(n_x, n_y, cap);
        for i in 0..n_x {
            let mut e = vec![0; n_x + n_y];
            e[i] = k;
            p.add_term(e, Rat::one());
        }
        p
    }

    /// `y_1^k + ... + y_M^k`.
    pub fn power_sum_y(n_x: usize, n_y: usize, cap: u32, k: u32) -> Self {
        let mut p = Self::zero(n_x, n_y, cap);
        for j in 0..n_y {
            let mut e = vec![0; n_x + n_y];
            e[n_x + j] = k;
            p.add_term(e, Rat::one());
        }
        p
    }

    pub fn n_x(&self) -> usize {
        self.n_x
    }

    pub fn n_y(&self) -> usize {
        self.n_y
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.n_x + self.n_y, "exponent vector length");
        if c.is_zero() || exps.iter().sum::<u32>() > self.cap {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.n_x, self.n_y, self.cap);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n_x, self.n_y, self.cap), |acc, _| &acc * self)
    }

    /// Value at `x_i = y_j = 1`.
    pub fn eval_ones(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// Evaluates with the y-variables set equal to the first `M` x-variables
    /// (requires `M <= N`), returning a polynomial in x alone.
    pub fn identify_y_with_x(&self) -> Self {
        assert!(self.n_y <= self.n_x);
        let mut out = Self::zero(self.n_x, 0, self.cap);
        for (e, c) in &self.terms {
            let mut f = e[..self.n_x].to_vec();
            for j in 0..self.n_y {
                f[j] += e[self.n_x + j];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// The homogeneous component of the given total degree.
    pub fn homogeneous(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.n_x, self.n_y, self.cap);
        out.terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        out
    }

    /// Same polynomial with a different cap (terms above the new cap are dropped).
    pub fn with_cap(&self, cap: u32) -> Self {
        let mut out = Self::zero(self.n_x, self.n_y, cap);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn check(&self, other: &Self) {
        assert_eq!((self.n_x, self.n_y), (other.n_x, other.n_y), "variable counts differ");
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let mut out = self.with_cap(self.cap.min(rhs.cap));
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &rhs.scale(&-Rat::one())
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let cap = self.cap.min(rhs.cap);
        let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &rhs.terms {
                if d1 + e2.iter().sum::<u32>() > cap {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { n_x: self.n_x, n_y: self.n_y, cap, terms: acc }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = if k < self.n_x {
                    format!("x{}", k + 1)
                } else {
                    format!("y{}", k - self.n_x + 1)
                };
                factors.push(if p == 1 { name } else { format!("{name}^{p}") });
            }
            let mono = factors.join("*");
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}
