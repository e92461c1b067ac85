//! Characters of the free Lie superalgebra on `V_0 ⊕ V_1` and of the higher
//! super Lie modules built from it.
//!
//! Bidegree `(n, m)` means `n` letters from the even space `V_0` (alphabet
//! `x`) and `m` letters from the odd space `V_1` (alphabet `y`).
//!
//! The divisor sums run over `d` dividing both `n` and `m`, with
//! `gcd(n, 0) = n`; at `m = 0` this is the classical Lie character and at
//! `n = 0` it is an `h`-type character.
//!
//! Formal characters live in the ring for infinitely many variables, so
//! `e_a[f]` is never truncated by dimension; vanishing exterior powers
//! appear only after [`BiSymFunc::bi_expand_truncated`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{big_rat, binom, divisors, gcd, mobius, rat, QTPoly, Rat};
use crate::partition::Partition;
use crate::report::{first_map_discrepancy, params, CheckReport};
use crate::symfunc::{bi_e_pleth, bi_h_pleth, Basis, BiSymFunc, SymFunc};

/// Common divisors of `n` and `m`, with `gcd(n, 0) = n`.
fn common_divisors(n: u32, m: u32) -> Vec<u32> {
    divisors(gcd(n as u64, m as u64))
        .into_iter()
        .map(|d| d as u32)
        .collect()
}

fn check_bidegree(n: u32, m: u32) -> Result<()> {
    if n == 0 && m == 0 {
        return Err(Error::Domain("bidegree (0,0) has no Lie component".into()));
    }
    Ok(())
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(1/(n+m)) (-1)^{m+m/d} μ(d) C((n+m)/d, m/d)` for one divisor `d`.
fn brandt_coefficient(n: u32, m: u32, d: u32, sign_exponent: u32) -> Rat {
    let c = binom(((n + m) / d) as i64, (m / d) as i64);
    big_rat(c) * rat(sign(sign_exponent) * mobius(d as u64)) / rat((n + m) as i64)
}

/// Character of the `(n, m)` component under the diagonal `GL(N)` action.
pub fn super_brandt_char(n: u32, m: u32) -> Result<SymFunc> {
    check_bidegree(n, m)?;
    Ok(SymFunc::from_rational_terms(
        Basis::P,
        common_divisors(n, m).into_iter().map(|d| {
            (
                Partition::rectangle(d, (n + m) / d),
                brandt_coefficient(n, m, d, m + m / d),
            )
        }),
    ))
}

/// Character of the `(n, m)` component under `GL(V_0) × GL(V_1)`.
pub fn super_bi_brandt_char(n: u32, m: u32) -> Result<BiSymFunc> {
    check_bidegree(n, m)?;
    let mut out = BiSymFunc::zero();
    for d in common_divisors(n, m) {
        let term = BiSymFunc::px(Partition::rectangle(d, n / d))
            .bi_multiply(&BiSymFunc::p_neg_y(d, m / d))
            .scale_rat(&brandt_coefficient(n, m, d, m / d));
        out = &out + &term;
    }
    Ok(out)
}

/// `dim` of the `(n, m)` component when `V_0 = V_1 = C^N`.
pub fn super_witt_dim(n: u32, m: u32, n_vars: u64) -> Result<BigInt> {
    check_bidegree(n, m)?;
    let total = common_divisors(n, m).into_iter().fold(Rat::zero(), |acc, d| {
        acc + brandt_coefficient(n, m, d, m + m / d)
            * big_rat(num_traits::pow(BigInt::from(n_vars), ((n + m) / d) as usize))
    });
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "super Witt dimension ({n},{m},{n_vars}) evaluated to non-integer {total}"
        )));
    }
    Ok(total.to_integer())
}

/// Keeps the monomials `q^a t^b` with `keep(a, b)`.
fn truncate_qt(f: &BiSymFunc, keep: &impl Fn(u32, u32) -> bool) -> BiSymFunc {
    BiSymFunc::from_terms(f.terms().iter().map(|(k, c)| {
        let kept = QTPoly::from_terms(
            c.terms()
                .iter()
                .filter(|((a, b), _)| keep(*a, *b))
                .map(|(e, v)| (*e, v.clone())),
        );
        (k.clone(), kept)
    }))
}

/// Coefficients of `q^n t^m` in
/// `-Σ_d μ(d)/d · ln(1 - (q^d p_d(x) - t^d p_d(-y)))`,
/// expanded with `ln(1-u) = -Σ_s u^s / s`, for `n <= max_n`, `m <= max_m`.
pub fn petrogradsky_series(max_n: u32, max_m: u32) -> BTreeMap<(u32, u32), BiSymFunc> {
    series_where(max_n + max_m, |a, b| a <= max_n && b <= max_m)
}

/// As [`petrogradsky_series`], for every `(n, m)` with `n + m <= max_total`.
pub fn petrogradsky_series_total(max_total: u32) -> BTreeMap<(u32, u32), BiSymFunc> {
    series_where(max_total, |a, b| a + b <= max_total)
}

/// The series on a down-closed set of bidegrees `keep` inside `n + m <= max_total`.
fn series_where(max_total: u32, keep: impl Fn(u32, u32) -> bool) -> BTreeMap<(u32, u32), BiSymFunc> {
    let mut series = BiSymFunc::zero();
    for d in 1..=max_total {
        let mu = mobius(d as u64);
        if mu == 0 {
            continue;
        }
        let qd = QTPoly::monomial(d, 0, Rat::one());
        let td = QTPoly::monomial(0, d, -Rat::one());
        let u = &BiSymFunc::px(Partition::row(d)).scale(&qd)
            + &BiSymFunc::p_neg_y(d, 1).scale(&td);
        let mut power = BiSymFunc::one();
        for s in 1..=max_total / d {
            power = truncate_qt(&power.bi_multiply(&u), &keep);
            if power.is_zero() {
                break;
            }
            series = &series + &power.scale_rat(&(rat(mu) / rat((d * s) as i64)));
        }
    }
    let mut out: BTreeMap<(u32, u32), BiSymFunc> = BTreeMap::new();
    for ((x, y), c) in series.terms() {
        for (&(a, b), v) in c.terms() {
            out.entry((a, b))
                .or_default()
                .add_term((x.clone(), y.clone()), &QTPoly::constant(v.clone()));
        }
    }
    out.retain(|_, f| !f.is_zero());
    out
}

/// `Γ_j^a(f)`: symmetric power `h_a[f]` for even `j`, exterior power
/// `e_a[f]` for odd `j`.
pub fn gamma_char(j: u32, a: u32, f: &BiSymFunc) -> BiSymFunc {
    if j.is_multiple_of(2) {
        bi_h_pleth(a, f)
    } else {
        bi_e_pleth(a, f)
    }
}

/// A finitely supported matrix `A = (a_{i,j})` of positive multiplicities
/// with `a_{0,0} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SupportMatrix {
    entries: BTreeMap<(u32, u32), u32>,
}

impl SupportMatrix {
    /// Accepts `(i, j, a)` triples; zero multiplicities are dropped and
    /// repeated cells are summed.
    pub fn new(triples: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, j, a) in triples {
            if a == 0 {
                continue;
            }
            if (i, j) == (0, 0) {
                return Err(Error::Domain("a support matrix has a_{0,0} = 0".into()));
            }
            *entries.entry((i, j)).or_insert(0) += a;
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `(Σ i a_{i,j}, Σ j a_{i,j})`.
    pub fn bidegree(&self) -> (u32, u32) {
        self.entries
            .iter()
            .fold((0, 0), |(n, m), (&(i, j), &a)| (n + i * a, m + j * a))
    }

    pub fn triples(&self) -> Vec<[u32; 3]> {
        self.entries.iter().map(|(&(i, j), &a)| [i, j, a]).collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("support matrix: {e}")))
    }
}

impl fmt::Display for SupportMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|(&(i, j), &a)| format!("a[{i},{j}]={a}"))
            .collect();
        write!(f, "{{{}}}", cells.join(", "))
    }
}

/// `[[i, j, a], ...]` in cell order.
impl Serialize for SupportMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SupportMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<[u32; 3]>::deserialize(d)?;
        Self::new(triples.into_iter().map(|[i, j, a]| (i, j, a))).map_err(D::Error::custom)
    }
}

/// `Π_{(i,j)} Γ_j^{a_{i,j}}(L_{i,j})`.
pub fn super_lie_module_char(a: &SupportMatrix) -> Result<BiSymFunc> {
    let mut out = BiSymFunc::one();
    for (&(i, j), &mult) in a.entries() {
        let factor = gamma_char(j, mult, &super_bi_brandt_char(i, j)?);
        out = out.bi_multiply(&factor);
    }
    Ok(out)
}

/// All support matrices of bidegree `(n, m)`, sorted by their triple lists.
pub fn enumerate_bidegree_matrices(n: u32, m: u32) -> Result<Vec<SupportMatrix>> {
    check_bidegree(n, m)?;
    let cells: Vec<(u32, u32)> = (0..=n)
        .flat_map(|i| (0..=m).map(move |j| (i, j)))
        .filter(|&c| c != (0, 0))
        .collect();
    fn rec(
        cells: &[(u32, u32)],
        n: u32,
        m: u32,
        chosen: &mut Vec<(u32, u32, u32)>,
        out: &mut Vec<SupportMatrix>,
    ) {
        if n == 0 && m == 0 {
            out.push(SupportMatrix::new(chosen.iter().copied()).expect("no (0,0) cell"));
            return;
        }
        let Some((&(i, j), rest)) = cells.split_first() else {
            return;
        };
        let mut a = 0;
        loop {
            if a > 0 {
                chosen.push((i, j, a));
            }
            rec(rest, n - i * a, m - j * a, chosen, out);
            if a > 0 {
                chosen.pop();
            }
            a += 1;
            if i * a > n || j * a > m {
                break;
            }
        }
    }
    let mut out = Vec::new();
    rec(&cells, n, m, &mut Vec::new(), &mut out);
    out.sort_by_key(SupportMatrix::triples);
    Ok(out)
}

/// Checks `Σ_A ch L_A = C(n+m, m) p_1(x)^n p_1(y)^m` over all `A` of
/// bidegree `(n, m)`. Failing reports carry both sides in the Schur basis.
pub fn thrall_sum_check(n: u32, m: u32) -> CheckReport {
    CheckReport::guard("thrall", params([("n", n), ("m", m)]), |ps| {
        let mut lhs = BiSymFunc::zero();
        for a in enumerate_bidegree_matrices(n, m)? {
            lhs = &lhs + &super_lie_module_char(&a)?;
        }
        let rhs = BiSymFunc::monomial(Partition::column(n), Partition::column(m))
            .scale_rat(&big_rat(binom((n + m) as i64, m as i64)));
        if lhs == rhs {
            return Ok(CheckReport::pass("thrall", ps));
        }
        let (ls, rs) = (lhs.bi_schur_expand(), rhs.bi_schur_expand());
        let at = first_map_discrepancy(ls.coeffs(), rs.coeffs()).unwrap_or_default();
        Ok(CheckReport::fail("thrall", ps, ls.to_string(), rs.to_string(), at))
    })
}

/// Largest `n + m` accepted by [`brute_force_lie_dim`].
pub const BRUTE_FORCE_MAX_DEGREE: u32 = 6;
/// Largest `N` or `M` accepted by [`brute_force_lie_dim`].
pub const BRUTE_FORCE_MAX_VARS: u32 = 3;

/// A tensor: words over the letters `0..N` (even) and `N..N+M` (odd).
type Tensor = BTreeMap<Vec<u8>, Rat>;

/// `[u, v] = uv - (-1)^{|u||v|} vu` on homogeneous tensors of the given parities.
fn super_bracket(u: &Tensor, pu: bool, v: &Tensor, pv: bool) -> Tensor {
    let swap_sign = if pu && pv { Rat::one() } else { -Rat::one() };
    let mut out = Tensor::new();
    for (a, x) in u {
        for (b, y) in v {
            let xy = x * y;
            let mut ab = a.clone();
            ab.extend_from_slice(b);
            *out.entry(ab).or_insert_with(Rat::zero) += &xy;
            let mut ba = b.clone();
            ba.extend_from_slice(a);
            *out.entry(ba).or_insert_with(Rat::zero) += xy * &swap_sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Incremental row echelon form over `Q`; each stored row's smallest word
/// is its pivot and no two rows share a pivot.
#[derive(Default)]
struct Echelon {
    rows: Vec<Tensor>,
    pivots: HashMap<Vec<u8>, usize>,
}

impl Echelon {
    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: Tensor) -> bool {
        while let Some(k) = v.keys().find(|k| self.pivots.contains_key(*k)).cloned() {
            let row = &self.rows[self.pivots[&k]];
            let c = v[&k].clone();
            for (w, x) in row {
                let slot = v.entry(w.clone()).or_insert_with(Rat::zero);
                *slot -= &c * x;
                if slot.is_zero() {
                    v.remove(w);
                }
            }
        }
        let Some((pivot, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Rat::one() / lead;
        for c in v.values_mut() {
            *c *= &inv;
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(v);
        true
    }
}

/// Letter multiplicities of a homogeneous tensor.
fn content(word: &[u8], letters: usize) -> Vec<u8> {
    let mut c = vec![0u8; letters];
    for &l in word {
        c[l as usize] += 1;
    }
    c
}

/// Dimension of the `(n, m)` component of the free Lie superalgebra on
/// `N` even and `M` odd generators, by rank of brackets in the tensor
/// algebra.
///
/// The component of bidegree `(a, b)` is spanned by `[u, v]` with `u`, `v`
/// ranging over bases of lower components whose bidegrees sum to `(a, b)`;
/// by bilinearity this is the span of all full bracketings. Bases are kept
/// separately for each letter content since brackets preserve it.
pub fn brute_force_lie_dim(n: u32, m: u32, n_even: u32, n_odd: u32) -> Result<u64> {
    check_bidegree(n, m)?;
    if n + m > BRUTE_FORCE_MAX_DEGREE || n_even > BRUTE_FORCE_MAX_VARS || n_odd > BRUTE_FORCE_MAX_VARS {
        return Err(Error::Resource(format!(
            "brute-force bracket rank is capped at n+m <= {BRUTE_FORCE_MAX_DEGREE} and N, M <= {BRUTE_FORCE_MAX_VARS}"
        )));
    }
    let letters = (n_even + n_odd) as usize;
    // basis[(a, b)] = independent tensors of bidegree (a, b)
    let mut basis: BTreeMap<(u32, u32), Vec<Tensor>> = BTreeMap::new();
    let generator = |l: u32| Tensor::from([(vec![l as u8], Rat::one())]);
    basis.insert((1, 0), (0..n_even).map(generator).collect());
    basis.insert((0, 1), (n_even..n_even + n_odd).map(generator).collect());
    for total in 2..=n + m {
        for a in 0..=total.min(n) {
            let b = total - a;
            if b > m {
                continue;
            }
            let mut blocks: BTreeMap<Vec<u8>, Echelon> = BTreeMap::new();
            for (&(a1, b1), left) in basis.range(..) {
                let (Some(a2), Some(b2)) = (a.checked_sub(a1), b.checked_sub(b1)) else {
                    continue;
                };
                if (a1, b1) > (a2, b2) {
                    continue;
                }
                let Some(right) = basis.get(&(a2, b2)) else {
                    continue;
                };
                for u in left {
                    for v in right {
                        let w = super_bracket(u, b1 % 2 == 1, v, b2 % 2 == 1);
                        if let Some(first) = w.keys().next() {
                            let key = content(first, letters);
                            blocks.entry(key).or_default().insert(w);
                        }
                    }
                }
            }
            let rows: Vec<Tensor> = blocks.into_values().flat_map(|e| e.rows).collect();
            basis.insert((a, b), rows);
        }
    }
    Ok(basis.get(&(n, m)).map_or(0, Vec::len) as u64)
}

/// Value of a one-alphabet character at `x_1 = ... = x_N = 1`.
pub fn specialize_at_ones(f: &SymFunc, n_vars: usize) -> Result<BigInt> {
    let value = f.expand_truncated(n_vars)?.eval_ones();
    if !value.is_integer() {
        return Err(Error::Internal(format!("character value {value} is not an integer")));
    }
    Ok(value.to_integer())
}

/// `super_witt_dim` as a machine integer, for callers that need one.
pub fn super_witt_dim_u64(n: u32, m: u32, n_vars: u64) -> Result<u64> {
    super_witt_dim(n, m, n_vars)?
        .to_u64()
        .ok_or_else(|| Error::Resource("dimension exceeds 64 bits".into()))
}
