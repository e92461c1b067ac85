//! Symmetric functions with coefficients in `Q[q, t]`.
//!
//! The power-sum basis is canonical: products, plethysm and specialization
//! all happen on `p`-expansions, and `s`, `h`, `e`, `m` are conversion layers
//! driven by per-degree transition matrices.
//!
//! Plethysm acts on coefficients by `q -> q^d`, `t -> t^d`. This is the usual
//! λ-ring convention; the identities checked in this crate only ever
//! plethysm functions with rational coefficients.

pub mod bisym;
pub mod chartable;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{big_rat, rat, MultiPoly, QTPoly, Rat};
use crate::partition::{partitions_of, Partition};

pub use bisym::{bi_e_pleth, bi_h_pleth, BiSchurExpansion, BiSymFunc};
pub use chartable::{
    cached_char_table_sizes, char_table, clear_char_tables, install_char_table, mn_character,
    CharTable,
};

/// A basis of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    P,
    S,
    H,
    E,
    M,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::S, Basis::H, Basis::E, Basis::M];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::S => "s",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.symbol() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Change of basis between `b` and `p` in one degree. Indices follow
/// [`partitions_of`] order: `to_p[i][j]` is the coefficient of `p_{μ_j}` in
/// `b_{λ_i}` and `from_p[j][i]` that of `b_{λ_i}` in `p_{μ_j}`.
struct Transition {
    to_p: Vec<Vec<Rat>>,
    from_p: Vec<Vec<Rat>>,
}

type TransitionCache = Mutex<HashMap<(Basis, u32), Arc<Transition>>>;

static TRANSITIONS: OnceLock<TransitionCache> = OnceLock::new();

fn transition(basis: Basis, n: u32) -> Arc<Transition> {
    let cache = TRANSITIONS.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let fresh = Arc::new(build_transition(basis, n));
    cache.lock().unwrap().entry((basis, n)).or_insert(fresh).clone()
}

/// Drops every memoized character table and transition matrix.
pub fn clear_caches() {
    clear_char_tables();
    if let Some(cache) = TRANSITIONS.get() {
        cache.lock().unwrap().clear();
    }
}

fn build_transition(basis: Basis, n: u32) -> Transition {
    let parts = partitions_of(n);
    let k = parts.len();
    let identity = || {
        (0..k)
            .map(|i| (0..k).map(|j| rat((i == j) as i64)).collect())
            .collect::<Vec<Vec<Rat>>>()
    };
    match basis {
        Basis::P => Transition { to_p: identity(), from_p: identity() },
        Basis::S => {
            let table = char_table(n);
            let to_p = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| big_rat(table.at(i, j).into()) / big_rat(parts[j].z()))
                        .collect()
                })
                .collect();
            let from_p = (0..k)
                .map(|j| (0..k).map(|i| rat(table.at(i, j))).collect())
                .collect();
            Transition { to_p, from_p }
        }
        Basis::H | Basis::E => {
            let signed = basis == Basis::E;
            let to_p: Vec<Vec<Rat>> = parts
                .iter()
                .map(|l| {
                    let expansion = l.parts().iter().fold(
                        BTreeMap::from([(Partition::empty(), Rat::one())]),
                        |acc, &a| multiply_rational(&acc, &complete_or_elementary(a, signed)),
                    );
                    parts
                        .iter()
                        .map(|m| expansion.get(m).cloned().unwrap_or_else(Rat::zero))
                        .collect()
                })
                .collect();
            let from_p = invert(&to_p);
            Transition { to_p, from_p }
        }
        Basis::M => {
            let from_p: Vec<Vec<Rat>> = parts
                .iter()
                .map(|mu| parts.iter().map(|l| rat(monomial_count(mu, l) as i64)).collect())
                .collect();
            let to_p = invert(&from_p);
            Transition { to_p, from_p }
        }
    }
}

/// `h_a` (or `e_a` when `signed`) in the power-sum basis, rational coefficients.
fn complete_or_elementary(a: u32, signed: bool) -> BTreeMap<Partition, Rat> {
    partitions_of(a)
        .into_iter()
        .map(|mu| {
            let mut c = Rat::one() / big_rat(mu.z());
            if signed && mu.sign() < 0 {
                c = -c;
            }
            (mu, c)
        })
        .collect()
}

fn multiply_rational(
    f: &BTreeMap<Partition, Rat>,
    g: &BTreeMap<Partition, Rat>,
) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (a, x) in f {
        for (b, y) in g {
            *out.entry(a.union(b)).or_insert_with(Rat::zero) += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `x^λ` in `p_μ`: the number of ways to send each part of
/// `μ` to a row of `λ` so that row `i` receives total `λ_i`.
fn monomial_count(mu: &Partition, lambda: &Partition) -> u64 {
    fn rec(parts: &[u32], room: &mut [u32]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= first {
                room[i] -= first;
                total += rec(rest, room);
                room[i] += first;
            }
        }
        total
    }
    rec(mu.parts(), &mut lambda.parts().to_vec())
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
///
/// Every matrix passed here is a change of basis, hence invertible.
fn invert(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let k = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| rat((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrices are invertible");
        m.swap(col, pivot);
        let inv = Rat::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[k..].to_vec()).collect()
}

/// A finite linear combination of basis elements with `Q[q, t]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QTPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::basis_element(Basis::P, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, QTPoly::one())])
    }

    pub fn p(lambda: Partition) -> Self {
        Self::basis_element(Basis::P, lambda)
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    /// `h_a`, or `1` when `a = 0`.
    pub fn h(a: u32) -> Self {
        Self::basis_element(Basis::H, Partition::row(a))
    }

    /// `e_a`, or `1` when `a = 0`.
    pub fn e(a: u32) -> Self {
        Self::basis_element(Basis::E, Partition::row(a))
    }

    /// `p_k^e`.
    pub fn p_power(k: u32, e: u32) -> Self {
        Self::p(Partition::rectangle(k, e))
    }

    /// Sums duplicate partitions and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Partition, QTPoly)>>(basis: Basis, terms: I) -> Self {
        let mut out = Self::zero(basis);
        for (l, c) in terms {
            out.add_term(l, &c);
        }
        out
    }

    pub fn from_rational_terms<I: IntoIterator<Item = (Partition, Rat)>>(basis: Basis, terms: I) -> Self {
        Self::from_terms(basis, terms.into_iter().map(|(l, c)| (l, QTPoly::constant(c))))
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QTPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, or `None` when zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn homogeneous_part(&self, n: u32) -> Self {
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &QTPoly) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v.scale(c))))
    }

    /// Applies `g` to every coefficient.
    pub fn map_coeffs(&self, g: impl Fn(&QTPoly) -> QTPoly) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), g(v))))
    }

    /// The same function expanded in the power-sum basis.
    pub fn to_p(&self) -> Self {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = Self::zero(Basis::P);
        for (lambda, c) in &self.terms {
            let n = lambda.size();
            let parts = partitions_of(n);
            let tr = transition(self.basis, n);
            let i = parts.binary_search(lambda).expect("partition of n");
            for (j, mu) in parts.iter().enumerate() {
                if !tr.to_p[i][j].is_zero() {
                    out.add_term(mu.clone(), &c.scale(&tr.to_p[i][j]));
                }
            }
        }
        out
    }

    /// The same function expanded in `target`.
    pub fn to_basis(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_p();
        if target == Basis::P {
            return p;
        }
        let mut out = Self::zero(target);
        for (mu, c) in &p.terms {
            let n = mu.size();
            let parts = partitions_of(n);
            let tr = transition(target, n);
            let j = parts.binary_search(mu).expect("partition of n");
            for (i, lambda) in parts.iter().enumerate() {
                if !tr.from_p[j][i].is_zero() {
                    out.add_term(lambda.clone(), &c.scale(&tr.from_p[j][i]));
                }
            }
        }
        out
    }

    /// Semantic equality across bases.
    pub fn equals(&self, other: &Self) -> bool {
        self.to_p() == other.to_p()
    }

    /// Value with `p_k -> x_1^k + ... + x_N^k`. Coefficients must be rational.
    pub fn expand_truncated(&self, n_vars: usize) -> Result<MultiPoly> {
        let p = self.to_p();
        let cap = p.max_degree().unwrap_or(0);
        let mut powers: HashMap<u32, MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(n_vars, 0, cap);
        for (lambda, c) in &p.terms {
            let c = rational_coeff(c)?;
            let mut term = MultiPoly::constant(n_vars, 0, cap, c);
            for &k in lambda.parts() {
                let pk = powers
                    .entry(k)
                    .or_insert_with(|| MultiPoly::power_sum_x(n_vars, 0, cap, k));
                term = &term * pk;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Plethysm `p_d[f]`.
    pub fn plethysm_p(&self, d: u32) -> Self {
        assert!(d >= 1, "plethysm index must be positive");
        let p = self.to_p();
        Self::from_terms(
            Basis::P,
            p.terms.iter().map(|(l, c)| (l.scaled(d), c.dilate(d))),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("symmetric functions serialize")
    }
}

pub(crate) fn rational_coeff(c: &QTPoly) -> Result<Rat> {
    c.as_constant()
        .ok_or_else(|| Error::Domain(format!("coefficient {c} is not a rational constant")))
}

pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let (f, g) = (f.to_p(), g.to_p());
    let mut out = SymFunc::zero(Basis::P);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), &(x * y));
        }
    }
    out
}

pub fn p_to_s(f: &SymFunc) -> SymFunc {
    f.to_basis(Basis::S)
}

pub fn s_to_p(f: &SymFunc) -> SymFunc {
    f.to_p()
}

pub fn plethysm_p(d: u32, f: &SymFunc) -> SymFunc {
    f.plethysm_p(d)
}

pub fn expand_truncated(f: &SymFunc, n_vars: usize) -> Result<MultiPoly> {
    f.expand_truncated(n_vars)
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &rhs.to_basis(self.basis).terms {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &rhs.scale_rat(&-Rat::one())
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        multiply(self, rhs)
    }
}

/// Ring operations shared by the one- and two-alphabet power-sum algebras,
/// enough to evaluate `h_a[f]` and `e_a[f]` generically.
pub(crate) trait PowerSumAlgebra: Clone {
    fn unit() -> Self;
    fn zero_element() -> Self;
    fn add_scaled(&mut self, other: &Self, c: &Rat);
    fn times(&self, other: &Self) -> Self;
    fn pleth(&self, d: u32) -> Self;
}

impl PowerSumAlgebra for SymFunc {
    fn unit() -> Self {
        SymFunc::one()
    }

    fn zero_element() -> Self {
        SymFunc::zero(Basis::P)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rat) {
        for (l, v) in &other.to_p().terms {
            self.add_term(l.clone(), &v.scale(c));
        }
    }

    fn times(&self, other: &Self) -> Self {
        multiply(self, other)
    }

    fn pleth(&self, d: u32) -> Self {
        self.plethysm_p(d)
    }
}

/// `Σ_{μ ⊢ a} ε_μ z_μ^{-1} Π_j p_{μ_j}[f]`, with `ε_μ = 1` for `h_a` and
/// the sign of cycle type `μ` for `e_a`.
pub(crate) fn pleth_sum<A: PowerSumAlgebra>(a: u32, f: &A, signed: bool) -> A {
    let plethysms: Vec<A> = (0..=a)
        .map(|d| if d == 0 { A::unit() } else { f.pleth(d) })
        .collect();
    let mut out = A::zero_element();
    for mu in partitions_of(a) {
        let mut c = Rat::one() / big_rat(mu.z());
        if signed && mu.sign() < 0 {
            c = -c;
        }
        let product = mu
            .parts()
            .iter()
            .fold(A::unit(), |acc, &k| acc.times(&plethysms[k as usize]));
        out.add_scaled(&product, &c);
    }
    out
}

/// `h_a[f]` in the power-sum basis.
pub fn h_pleth(a: u32, f: &SymFunc) -> SymFunc {
    pleth_sum(a, &f.to_p(), false)
}

/// `e_a[f]` in the power-sum basis.
pub fn e_pleth(a: u32, f: &SymFunc) -> SymFunc {
    pleth_sum(a, &f.to_p(), true)
}

/// A class function of `S_n`, by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionSn {
    n: u32,
    values: BTreeMap<Partition, Rat>,
}

impl ClassFunctionSn {
    /// Requires a value at every cycle type of `n` and nothing else.
    pub fn new(n: u32, values: BTreeMap<Partition, Rat>) -> Result<Self> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|l| !values.contains_key(l)) {
            return Err(Error::Domain(format!(
                "a class function of S_{n} needs exactly one value per cycle type"
            )));
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: u32, f: impl Fn(&Partition) -> Rat) -> Self {
        Self {
            n,
            values: partitions_of(n).into_iter().map(|l| {
                let v = f(&l);
                (l, v)
            }).collect(),
        }
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let n = lambda.size();
        let table = char_table(n);
        let i = table.index_of(lambda).expect("partition of n");
        Self::from_fn(n, |mu| rat(table.at(i, table.index_of(mu).expect("partition of n"))))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> Option<&Rat> {
        self.values.get(mu)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rat> {
        &self.values
    }
}

/// `Σ_μ χ(μ) z_μ^{-1} p_μ`.
pub fn frobenius_characteristic(chi: &ClassFunctionSn) -> SymFunc {
    SymFunc::from_rational_terms(
        Basis::P,
        chi.values
            .iter()
            .map(|(mu, v)| (mu.clone(), v / big_rat(mu.z()))),
    )
}

/// Schur coefficients of a symmetric function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, QTPoly>,
    nonneg_integral: bool,
}

impl SchurExpansion {
    pub fn coeffs(&self) -> &BTreeMap<Partition, QTPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QTPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Whether every coefficient is a polynomial with nonnegative integer coefficients.
    pub fn is_nonneg_integral(&self) -> bool {
        self.nonneg_integral
    }

    pub fn to_symfunc(&self) -> SymFunc {
        SymFunc::from_terms(Basis::S, self.coeffs.clone())
    }
}

pub fn schur_expand(f: &SymFunc) -> SchurExpansion {
    let s = f.to_basis(Basis::S);
    let nonneg_integral = s.terms.values().all(QTPoly::is_nonneg_integral);
    SchurExpansion { coeffs: s.terms, nonneg_integral }
}

/// Compact index: `2`, `{21}`, `{10,2}`, `{}`.
pub(crate) fn index_label(lambda: &Partition) -> String {
    let parts = lambda.parts();
    if parts.len() == 1 && parts[0] < 10 {
        return parts[0].to_string();
    }
    let sep = if parts.iter().all(|&p| p < 10) { "" } else { "," };
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(sep))
}

/// Renders `c_1*b_1 + c_2*b_2 - ...` with rational constants inline and
/// other coefficients parenthesized.
pub(crate) fn render_terms<'a>(items: impl IntoIterator<Item = (String, &'a QTPoly)>) -> String {
    let mut out = String::new();
    for (name, c) in items {
        let (negative, coeff) = match c.as_constant() {
            Some(r) => {
                let body = if r.abs().is_one() { String::new() } else { r.abs().to_string() };
                (r.is_negative(), body)
            }
            None => (false, format!("({c})")),
        };
        let piece = match (coeff.is_empty(), name.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => name,
            (false, true) => coeff,
            (false, false) => format!("{coeff}*{name}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        f.write_str(&render_terms(self.terms.iter().map(|(l, c)| {
            let name = if l.is_empty() { String::new() } else { format!("{sym}_{}", index_label(l)) };
            (name, c)
        })))
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    partition: &'a Partition,
    coeff: &'a QTPoly,
}

/// `{"basis": "s", "terms": [{"partition": "(2,1)", "coeff": [...]}, ...]}`.
impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", &self.basis)?;
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(partition, coeff)| JsonTerm { partition, coeff })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use proptest::prelude::*;

    fn l(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> SymFunc {
        SymFunc::p(l(s))
    }

    fn s(x: &str) -> SymFunc {
        SymFunc::s(l(x))
    }

    fn rational(basis: Basis, items: &[(&str, Rat)]) -> SymFunc {
        SymFunc::from_rational_terms(basis, items.iter().map(|(x, c)| (l(x), c.clone())))
    }

    #[test]
    fn power_sum_square_in_schur() {
        assert_eq!(p_to_s(&p("(1,1)")), &s("(2)") + &s("(1,1)"));
        assert_eq!(p_to_s(&p("(1,1)")).to_string(), "s_2 + s_{11}");
    }

    #[test]
    fn lie_three_is_s21() {
        let f = rational(Basis::P, &[("(1,1,1)", ratio(1, 3)), ("(3)", ratio(-1, 3))]);
        assert_eq!(p_to_s(&f), s("(2,1)"));
    }

    #[test]
    fn schur_round_trip() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let f = SymFunc::s(lam.clone());
                assert_eq!(p_to_s(&s_to_p(&f)), f, "{lam}");
            }
        }
    }

    #[test]
    fn every_basis_round_trips() {
        for basis in Basis::ALL {
            for n in 0..=6 {
                for lam in partitions_of(n) {
                    let f = SymFunc::basis_element(basis, lam.clone());
                    assert_eq!(f.to_p().to_basis(basis), f, "{basis}_{lam}");
                }
            }
        }
    }

    #[test]
    fn classical_transitions() {
        // h_2 = s_2, e_2 = s_11, m_11 = e_2, m_2 = p_2, h_1^2 = s_2 + s_11
        assert_eq!(SymFunc::h(2).to_basis(Basis::S), s("(2)"));
        assert_eq!(SymFunc::e(2).to_basis(Basis::S), s("(1,1)"));
        assert_eq!(
            SymFunc::basis_element(Basis::M, l("(1,1)")).to_basis(Basis::E),
            SymFunc::e(2)
        );
        assert_eq!(SymFunc::basis_element(Basis::M, l("(2)")).to_p(), p("(2)"));
        assert_eq!(
            SymFunc::basis_element(Basis::H, l("(1,1)")).to_basis(Basis::S),
            &s("(2)") + &s("(1,1)")
        );
        // s_21 = m_21 + 2 m_111
        assert_eq!(
            s("(2,1)").to_basis(Basis::M),
            rational(Basis::M, &[("(2,1)", rat(1)), ("(1,1,1)", rat(2))])
        );
    }

    #[test]
    fn products() {
        assert_eq!(multiply(&p("(2)"), &p("(1)")), p("(2,1)"));
        let f = &s("(2,1)") + &p("(3)");
        assert_eq!(multiply(&f, &SymFunc::one()), f.to_p());
        // h_2 h_2 = s_4 + s_31 + s_22
        let hh = multiply(&SymFunc::h(2), &SymFunc::h(2));
        assert_eq!(p_to_s(&hh), &(&s("(4)") + &s("(3,1)")) + &s("(2,2)"));
        // s_1 s_21 = s_31 + s_22 + s_211
        let prod = multiply(&s("(1)"), &s("(2,1)"));
        assert_eq!(p_to_s(&prod), &(&s("(3,1)") + &s("(2,2)")) + &s("(2,1,1)"));
    }

    #[test]
    fn frobenius_of_small_characters() {
        let triv = ClassFunctionSn::from_fn(2, |_| rat(1));
        assert!(frobenius_characteristic(&triv).equals(&SymFunc::h(2)));
        let sign = ClassFunctionSn::from_fn(2, |mu| rat(mu.sign()));
        assert!(frobenius_characteristic(&sign).equals(&SymFunc::e(2)));
        let regular = ClassFunctionSn::from_fn(3, |mu| {
            if *mu == Partition::column(3) { rat(6) } else { rat(0) }
        });
        assert_eq!(frobenius_characteristic(&regular), p("(1,1,1)"));
        assert!(ClassFunctionSn::new(2, BTreeMap::new()).is_err());
    }

    #[test]
    fn frobenius_of_irreducibles_is_schur() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let chi = ClassFunctionSn::irreducible(&lam);
                assert_eq!(p_to_s(&frobenius_characteristic(&chi)), SymFunc::s(lam));
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        let f = &s("(2,1)") + &p("(3)");
        assert_eq!(plethysm_p(1, &f), f.to_p());
        assert_eq!(plethysm_p(2, &p("(1)")), p("(2)"));
        let e2 = SymFunc::e(2);
        assert_eq!(
            plethysm_p(2, &e2),
            rational(Basis::P, &[("(2,2)", ratio(1, 2)), ("(4)", ratio(-1, 2))])
        );
        let qt = SymFunc::from_terms(Basis::P, [(l("(1)"), &QTPoly::q() + &QTPoly::t())]);
        let dilated = SymFunc::from_terms(
            Basis::P,
            [(l("(2)"), &QTPoly::q().pow(2) + &QTPoly::t().pow(2))],
        );
        assert_eq!(plethysm_p(2, &qt), dilated);
    }

    #[test]
    fn inner_plethysms() {
        let h2e2 = h_pleth(2, &SymFunc::e(2));
        assert_eq!(p_to_s(&h2e2), &s("(2,2)") + &s("(1,1,1,1)"));
        let h2h2 = h_pleth(2, &SymFunc::h(2));
        assert_eq!(p_to_s(&h2h2), &s("(4)") + &s("(2,2)"));
        assert_eq!(h_pleth(0, &s("(3)")), SymFunc::one());
        assert_eq!(e_pleth(0, &s("(3)")), SymFunc::one());
    }

    #[test]
    fn plethysm_with_p1_is_identity() {
        for a in 0..=8 {
            assert_eq!(h_pleth(a, &p("(1)")), SymFunc::h(a).to_p(), "h_{a}");
            assert_eq!(e_pleth(a, &p("(1)")), SymFunc::e(a).to_p(), "e_{a}");
        }
    }

    /// Schur polynomial by summing monomials over semistandard tableaux.
    fn ssyt_schur(lam: &Partition, n_vars: usize) -> MultiPoly {
        let cells: Vec<(usize, usize)> = lam.cells().collect();
        let cap = lam.size();
        let mut out = MultiPoly::zero(n_vars, 0, cap);
        let mut filling = vec![vec![0usize; lam.parts().first().copied().unwrap_or(0) as usize]; lam.len()];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            filling: &mut Vec<Vec<usize>>,
            n_vars: usize,
            out: &mut MultiPoly,
        ) {
            if idx == cells.len() {
                let mut e = vec![0u32; n_vars];
                for &(r, c) in cells {
                    e[filling[r - 1][c - 1]] += 1;
                }
                out.add_term(e, rat(1));
                return;
            }
            let (r, c) = cells[idx];
            let lo_row = if c > 1 { filling[r - 1][c - 2] } else { 0 };
            let lo_col = if r > 1 { filling[r - 2][c - 1] + 1 } else { 0 };
            for v in lo_row.max(lo_col)..n_vars {
                filling[r - 1][c - 1] = v;
                rec(idx + 1, cells, filling, n_vars, out);
            }
        }
        rec(0, &cells, &mut filling, n_vars, &mut out);
        out
    }

    #[test]
    fn truncated_expansions() {
        let p2 = p("(2)").expand_truncated(2).unwrap();
        assert_eq!(p2.to_string(), "x1^2 + x2^2");
        assert!(s("(1,1)").expand_truncated(1).unwrap().is_zero());
        let s21 = s("(2,1)").expand_truncated(2).unwrap();
        assert_eq!(s21.terms(), ssyt_schur(&l("(2,1)"), 2).terms());
        let with_t = SymFunc::from_terms(Basis::P, [(l("(1)"), QTPoly::t())]);
        assert!(with_t.expand_truncated(2).is_err());
    }

    #[test]
    fn truncation_vanishes_exactly_beyond_length() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for vars in 1..=4 {
                    let e = SymFunc::s(lam.clone()).expand_truncated(vars).unwrap();
                    assert_eq!(e.is_zero(), lam.len() > vars, "{lam} in {vars} variables");
                    if n <= 5 && vars <= 3 {
                        assert_eq!(e.terms(), ssyt_schur(&lam, vars).terms(), "{lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn schur_expansion_flags() {
        let e2 = schur_expand(&SymFunc::e(2));
        assert_eq!(e2.coeffs().len(), 1);
        assert_eq!(e2.coeff(&l("(1,1)")), QTPoly::one());
        assert!(e2.is_nonneg_integral());
        assert!(!schur_expand(&p("(2)")).is_nonneg_integral());
    }

    #[test]
    fn json_shape() {
        let f = rational(Basis::P, &[("(1,1)", ratio(1, 2)), ("(2)", ratio(-1, 2))]);
        let v = f.to_json();
        assert_eq!(v["basis"], "p");
        assert_eq!(v["terms"][0]["partition"], "(2)");
        assert_eq!(v["terms"][0]["coeff"][0]["value"], "-1/2");
        assert_eq!(v["terms"][1]["coeff"][0]["q"], 0);
    }

    #[test]
    fn display() {
        let f = rational(Basis::P, &[("(1,1)", ratio(1, 2)), ("(2)", ratio(-1, 2))]);
        assert_eq!(f.to_string(), "-1/2*p_2 + 1/2*p_{11}");
        assert_eq!(SymFunc::one().to_string(), "1");
        assert_eq!(SymFunc::zero(Basis::S).to_string(), "0");
        let g = SymFunc::from_terms(Basis::S, [(l("(2)"), &QTPoly::one() + &QTPoly::t())]);
        assert_eq!(g.to_string(), "(1 + t)*s_2");
    }

    fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
        prop::collection::vec((0usize..5, -3i64..4), 0..4).prop_map(|items| {
            let parts = partitions_of(4);
            SymFunc::from_rational_terms(
                Basis::P,
                items.into_iter().map(|(i, c)| (parts[i].clone(), rat(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn conversions_are_linear(f in arb_symfunc(), g in arb_symfunc()) {
            let sum = &f + &g;
            prop_assert_eq!(p_to_s(&sum), &p_to_s(&f) + &p_to_s(&g));
        }

        #[test]
        fn product_is_commutative(f in arb_symfunc(), g in arb_symfunc()) {
            prop_assert_eq!(multiply(&f, &g), multiply(&g, &f));
        }
    }
}
