//! Symmetric functions in two alphabets `x` and `y`, in the basis
//! `p_λ(x) p_μ(y)`.
//!
//! `p_d(-y)` is never stored: it is rewritten as `(-1)^d p_d(y)` on
//! construction (see [`BiSymFunc::p_neg_y`]).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::One;
use serde::{Serialize, Serializer};

use super::{index_label, pleth_sum, rational_coeff, render_terms, Basis, PowerSumAlgebra, SymFunc};
use crate::error::Result;
use crate::exactalg::{MultiPoly, QTPoly, Rat};
use crate::partition::Partition;

type Key = (Partition, Partition);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiSymFunc {
    terms: BTreeMap<Key, QTPoly>,
}

impl BiSymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Partition::empty())
    }

    /// `p_λ(x) p_μ(y)`.
    pub fn monomial(x: Partition, y: Partition) -> Self {
        Self::from_terms([((x, y), QTPoly::one())])
    }

    pub fn px(lambda: Partition) -> Self {
        Self::monomial(lambda, Partition::empty())
    }

    pub fn py(mu: Partition) -> Self {
        Self::monomial(Partition::empty(), mu)
    }

    /// `p_d(-y)^e`, normalized to `(-1)^{de} p_d(y)^e`.
    pub fn p_neg_y(d: u32, e: u32) -> Self {
        let f = Self::py(Partition::rectangle(d, e));
        if (d * e) % 2 == 1 {
            f.scale_rat(&-Rat::one())
        } else {
            f
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Key, QTPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// Embeds a one-alphabet function in the `x` alphabet.
    pub fn from_x(f: &SymFunc) -> Self {
        Self::from_terms(
            f.to_p()
                .terms()
                .iter()
                .map(|(l, c)| ((l.clone(), Partition::empty()), c.clone())),
        )
    }

    /// Embeds a one-alphabet function in the `y` alphabet.
    pub fn from_y(f: &SymFunc) -> Self {
        Self::from_terms(
            f.to_p()
                .terms()
                .iter()
                .map(|(l, c)| ((Partition::empty(), l.clone()), c.clone())),
        )
    }

    pub fn add_term(&mut self, key: Key, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Key, QTPoly> {
        &self.terms
    }

    pub fn coeff(&self, x: &Partition, y: &Partition) -> QTPoly {
        self.terms
            .get(&(x.clone(), y.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QTPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))))
    }

    pub fn bi_multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term((a.union(c), b.union(d)), &(x * y));
            }
        }
        out
    }

    /// `p_d[p_λ(x) p_μ(y)] = p_{dλ}(x) p_{dμ}(y)`, coefficients dilated.
    pub fn bi_plethysm_p(&self, d: u32) -> Self {
        assert!(d >= 1, "plethysm index must be positive");
        Self::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((a.scaled(d), b.scaled(d)), c.dilate(d))),
        )
    }

    /// Sets `y = x`.
    pub fn diagonal(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::P,
            self.terms.iter().map(|((a, b), c)| (a.union(b), c.clone())),
        )
    }

    /// Value with `p_k(x) -> Σ_{i≤N} x_i^k`, `p_k(y) -> Σ_{j≤M} y_j^k`.
    pub fn bi_expand_truncated(&self, n_x: usize, n_y: usize) -> Result<MultiPoly> {
        let cap = self
            .terms
            .keys()
            .map(|(a, b)| a.size() + b.size())
            .max()
            .unwrap_or(0);
        let mut px: HashMap<u32, MultiPoly> = HashMap::new();
        let mut py: HashMap<u32, MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(n_x, n_y, cap);
        for ((a, b), c) in &self.terms {
            let mut term = MultiPoly::constant(n_x, n_y, cap, rational_coeff(c)?);
            for &k in a.parts() {
                let f = px.entry(k).or_insert_with(|| MultiPoly::power_sum_x(n_x, n_y, cap, k));
                term = &term * f;
            }
            for &k in b.parts() {
                let f = py.entry(k).or_insert_with(|| MultiPoly::power_sum_y(n_x, n_y, cap, k));
                term = &term * f;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Coefficients in the basis `s_λ(x) s_μ(y)`.
    pub fn bi_schur_expand(&self) -> BiSchurExpansion {
        let mut memo: HashMap<Partition, SymFunc> = HashMap::new();
        let mut schur = |l: &Partition| {
            memo.entry(l.clone())
                .or_insert_with(|| SymFunc::p(l.clone()).to_basis(Basis::S))
                .clone()
        };
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let (sa, sb) = (schur(a), schur(b));
            for (la, ca) in sa.terms() {
                for (lb, cb) in sb.terms() {
                    out.add_term((la.clone(), lb.clone()), &(&(c * ca) * cb));
                }
            }
        }
        let nonneg_integral = out.terms.values().all(QTPoly::is_nonneg_integral);
        BiSchurExpansion { coeffs: out.terms, nonneg_integral }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("symmetric functions serialize")
    }
}

/// `h_a[f]` for a two-alphabet `f`.
pub fn bi_h_pleth(a: u32, f: &BiSymFunc) -> BiSymFunc {
    pleth_sum(a, f, false)
}

/// `e_a[f]` for a two-alphabet `f`.
pub fn bi_e_pleth(a: u32, f: &BiSymFunc) -> BiSymFunc {
    pleth_sum(a, f, true)
}

impl PowerSumAlgebra for BiSymFunc {
    fn unit() -> Self {
        Self::one()
    }

    fn zero_element() -> Self {
        Self::zero()
    }

    fn add_scaled(&mut self, other: &Self, c: &Rat) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &v.scale(c));
        }
    }

    fn times(&self, other: &Self) -> Self {
        self.bi_multiply(other)
    }

    fn pleth(&self, d: u32) -> Self {
        self.bi_plethysm_p(d)
    }
}

/// Coefficients of a two-alphabet function in `s_λ(x) s_μ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSchurExpansion {
    coeffs: BTreeMap<Key, QTPoly>,
    nonneg_integral: bool,
}

impl BiSchurExpansion {
    pub fn coeffs(&self) -> &BTreeMap<Key, QTPoly> {
        &self.coeffs
    }

    pub fn is_nonneg_integral(&self) -> bool {
        self.nonneg_integral
    }
}

impl fmt::Display for BiSchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.coeffs.iter().map(|((a, b), c)| (pair_name("s", a, b), c))))
    }
}

fn pair_name(sym: &str, a: &Partition, b: &Partition) -> String {
    let mut name = String::new();
    if !a.is_empty() {
        name.push_str(&format!("{sym}_{}(x)", index_label(a)));
    }
    if !b.is_empty() {
        name.push_str(&format!("{sym}_{}(y)", index_label(b)));
    }
    name
}

impl fmt::Display for BiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|((a, b), c)| (pair_name("p", a, b), c))))
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    x: &'a Partition,
    y: &'a Partition,
    coeff: &'a QTPoly,
}

/// `{"terms": [{"x": "(1)", "y": "(1)", "coeff": [...]}, ...]}`, indexing
/// `p_x(x) p_y(y)`.
impl Serialize for BiSymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|((x, y), coeff)| JsonTerm { x, y, coeff })
            .collect();
        let mut st = s.serialize_struct("BiSymFunc", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Add<&BiSymFunc> for &BiSymFunc {
    type Output = BiSymFunc;
    fn add(self, rhs: &BiSymFunc) -> BiSymFunc {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Sub<&BiSymFunc> for &BiSymFunc {
    type Output = BiSymFunc;
    fn sub(self, rhs: &BiSymFunc) -> BiSymFunc {
        self + &rhs.scale_rat(&-Rat::one())
    }
}

impl Mul<&BiSymFunc> for &BiSymFunc {
    type Output = BiSymFunc;
    fn mul(self, rhs: &BiSymFunc) -> BiSymFunc {
        self.bi_multiply(rhs)
    }
}
