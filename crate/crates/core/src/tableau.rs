//! Standard and super standard Young tableaux and their descent statistics.
//!
//! A super tableau is stored as its projection `T+` together with the set
//! `Neg` of entries carrying a bar; every pair `(T, S)` with `S ⊆ [n]` is a
//! valid super tableau, so `SYT_±(λ)` is the product `SYT(λ) × 2^[n]`.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactalg::{factorial, rat, QTPoly};
use crate::par;
use crate::partition::Partition;

/// Default cap on the number of `(T, S)` pairs a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Largest `n` a [`SmallSet`] can hold.
pub const MAX_N: u32 = 63;

/// A subset of `{1, ..., 63}` as a bitmask; bit `i` stands for `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SmallSet(u64);

impl SmallSet {
    pub const EMPTY: Self = Self(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits & !1)
    }

    /// `{1, ..., n}`.
    pub fn interval(n: u32) -> Self {
        Self::from_bits(((1u128 << (n + 1)) - 1) as u64)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: u32) -> bool {
        (1..=MAX_N).contains(&i) && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: u32) {
        assert!((1..=MAX_N).contains(&i), "element {i} out of range");
        self.0 |= 1 << i;
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Sum of the elements.
    pub fn sum(self) -> u32 {
        self.iter().sum()
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        (1..=MAX_N).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<u32> for SmallSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Relative descent set of `(D, S)` inside `[n-1]`:
/// `i` with `i ∈ D, i+1 ∉ S` or `i ∉ D, i ∈ S`.
pub fn relative_descents(d: SmallSet, s: SmallSet, n: u32) -> SmallSet {
    let (d, s) = (d.0, s.0);
    let rel = (d & !(s >> 1)) | (!d & s);
    SmallSet::from_bits(rel & window(n))
}

/// Bits `1..n-1`.
fn window(n: u32) -> u64 {
    if n <= 1 {
        0
    } else {
        ((1u64 << n) - 1) & !1
    }
}

pub fn relative_maj(d: SmallSet, s: SmallSet, n: u32) -> u32 {
    relative_descents(d, s, n).sum()
}

pub fn relative_comaj(d: SmallSet, s: SmallSet, n: u32) -> u32 {
    let rel = relative_descents(d, s, n);
    n * rel.len() - rel.sum()
}

/// A standard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    /// Validates shape, bijectivity onto `[n]` and strict row/column growth.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::Domain("tableau rows must weakly decrease in length".into()))?;
        let n = shape.size();
        if n > MAX_N {
            return Err(Error::Domain(format!("tableaux are limited to n <= {MAX_N}")));
        }
        let mut seen = vec![false; n as usize + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || std::mem::replace(&mut seen[e as usize], true) {
                return Err(Error::Domain(format!("entries must be a permutation of 1..={n}")));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if c > 0 && row[c - 1] >= e {
                    return Err(Error::Domain(format!("row {} is not increasing", r + 1)));
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::Domain(format!("column {} is not increasing", c + 1)));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// `row_of()[e]` is the 0-based row holding `e` (index 0 unused).
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() as usize + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                out[e as usize] = r;
            }
        }
        out
    }

    /// `{ i : i+1 sits in a strictly lower row than i }`.
    pub fn descent_set(&self) -> SmallSet {
        let row = self.row_of();
        (1..self.size())
            .filter(|&i| row[i as usize + 1] > row[i as usize])
            .collect()
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().sum()
    }

    pub fn comaj(&self) -> u32 {
        let d = self.descent_set();
        self.size() * d.len() - d.sum()
    }

    /// The row tableau `1 2 ... n`.
    pub fn row_tableau(n: u32) -> Self {
        Self::new(vec![(1..=n).collect()]).expect("row tableau is standard")
    }

    /// The column tableau with entries `1..n` top to bottom.
    pub fn column_tableau(n: u32) -> Self {
        Self::new((1..=n).map(|i| vec![i]).collect()).expect("column tableau is standard")
    }
}

pub fn descent_set(t: &StandardTableau) -> SmallSet {
    t.descent_set()
}

/// A standard super tableau, stored as `(T+, Neg)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperTableau {
    plus: StandardTableau,
    neg: SmallSet,
}

impl SuperTableau {
    pub fn new(plus: StandardTableau, neg: SmallSet) -> Result<Self> {
        if neg.iter().any(|i| i > plus.size()) {
            return Err(Error::Domain(format!("Neg {neg} is not a subset of [{}]", plus.size())));
        }
        Ok(Self { plus, neg })
    }

    pub fn plus_part(&self) -> &StandardTableau {
        &self.plus
    }

    pub fn neg(&self) -> SmallSet {
        self.neg
    }

    pub fn size(&self) -> u32 {
        self.plus.size()
    }

    /// Super descents via the projection:
    /// `i ∈ Des(T+), i+1 ∉ Neg` or `i ∉ Des(T+), i ∈ Neg`.
    pub fn super_descent_set(&self) -> SmallSet {
        relative_descents(self.plus.descent_set(), self.neg, self.size())
    }

    /// Super descents read directly off the filling: `i+1` unbarred and in a
    /// strictly lower row, or `i` barred and `i+1` not strictly lower.
    pub fn super_descent_set_direct(&self) -> SmallSet {
        let row = self.plus.row_of();
        (1..self.size())
            .filter(|&i| {
                let lower = row[i as usize + 1] > row[i as usize];
                (!self.neg.contains(i + 1) && lower) || (self.neg.contains(i) && !lower)
            })
            .collect()
    }

    pub fn super_maj(&self) -> u32 {
        relative_maj(self.plus.descent_set(), self.neg, self.size())
    }

    pub fn super_comaj(&self) -> u32 {
        relative_comaj(self.plus.descent_set(), self.neg, self.size())
    }

    pub fn negg(&self) -> u32 {
        self.neg.len()
    }
}

impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .plus
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| if self.neg.contains(e) { format!("-{e}") } else { e.to_string() })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = SuperTableau { plus: self.clone(), neg: SmallSet::EMPTY };
        write!(f, "{plain}")
    }
}

impl FromStr for SuperTableau {
    type Err = Error;

    /// Parses `"1,-3,4,6/-2,5/-7"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut neg = SmallSet::EMPTY;
        let mut rows = Vec::new();
        for row in s.trim().split('/') {
            let mut entries = Vec::new();
            for tok in row.split(',') {
                let tok = tok.trim();
                let (barred, digits) = match tok.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, tok),
                };
                let e: u32 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?;
                if barred {
                    if !(1..=MAX_N).contains(&e) {
                        return Err(Error::Parse(format!("bad tableau entry {tok:?}")));
                    }
                    neg.insert(e);
                }
                entries.push(e);
            }
            rows.push(entries);
        }
        let plus = StandardTableau::new(rows).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(plus, neg).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: SuperTableau = s.parse()?;
        if !t.neg.is_empty() {
            return Err(Error::Parse("standard tableaux have no negated entries".into()));
        }
        Ok(t.plus)
    }
}

/// `n! / prod h(r,c)`.
pub fn syt_count(lambda: &Partition) -> u128 {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(num_bigint::BigInt::from(1), |acc, h| acc * h);
    (factorial(lambda.size() as u64) / hooks)
        .to_u128()
        .unwrap_or(u128::MAX)
}

/// All SYT of shape `λ`, in the order obtained by placing `1, 2, ..., n`
/// into the topmost available corner first.
pub fn syt_enumerate(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[u32],
        next: u32,
        n: u32,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau {
                shape: Partition::new(shape.to_vec()).expect("valid shape"),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = (len as u32) < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                rec(shape, next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(lambda.parts(), 1, lambda.size(), &mut rows, &mut out);
    out
}

/// Which major index a statistic table records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajKind {
    Maj,
    Comaj,
}

/// Joint distribution of `(maj, negg)` over `SYT_±(λ)`:
/// `table[a][b] = |{𝒯 : stat(𝒯) = a, negg(𝒯) = b}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatTable {
    n: u32,
    counts: Vec<Vec<u64>>,
}

impl StatTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn count(&self, stat: u32, negg: u32) -> u64 {
        self.counts
            .get(stat as usize)
            .and_then(|row| row.get(negg as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Number of tableaux with `stat ≡ residue (mod modulus)` and the given `negg`.
    pub fn count_residue(&self, modulus: u32, residue: u32, negg: u32) -> u64 {
        assert!(modulus >= 1);
        self.counts
            .iter()
            .enumerate()
            .filter(|(a, _)| *a as u32 % modulus == residue % modulus)
            .map(|(_, row)| row.get(negg as usize).copied().unwrap_or(0))
            .sum()
    }

    pub fn to_qt_poly(&self) -> QTPoly {
        QTPoly::from_terms(self.counts.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(move |(b, &c)| ((a as u32, b as u32), rat(c as i64)))
        }))
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, row) in other.counts.into_iter().enumerate() {
            for (b, c) in row.into_iter().enumerate() {
                self.counts[a][b] += c;
            }
        }
        self
    }
}

fn check_budget(lambda: &Partition, budget: u64) -> Result<()> {
    if lambda.size() > MAX_N {
        return Err(Error::Resource(format!("n = {} exceeds {MAX_N}", lambda.size())));
    }
    let needed = syt_count(lambda).saturating_mul(1u128 << lambda.size().min(127));
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

/// Tabulates `(stat, negg)` over all `(T, S)` pairs, in parallel over `T`.
pub fn stat_table(lambda: &Partition, kind: MajKind, budget: u64) -> Result<StatTable> {
    check_budget(lambda, budget)?;
    let n = lambda.size();
    let max_stat = (n * n.saturating_sub(1) / 2) as usize;
    let empty = StatTable { n, counts: vec![vec![0; n as usize + 1]; max_stat + 1] };
    let descents: Vec<SmallSet> = syt_enumerate(lambda).iter().map(|t| t.descent_set()).collect();
    let table = par::map_reduce(
        &descents,
        empty.clone(),
        |&d| {
            let mut local = empty.clone();
            for s in 0..(1u64 << n) {
                let s = SmallSet::from_bits(s << 1);
                let stat = match kind {
                    MajKind::Maj => relative_maj(d, s, n),
                    MajKind::Comaj => relative_comaj(d, s, n),
                };
                local.counts[stat as usize][s.len() as usize] += 1;
            }
            local
        },
        StatTable::merge,
    );
    Ok(table)
}

/// `Σ_{𝒯 ∈ SYT_±(λ)} q^{maj(𝒯)} t^{negg(𝒯)}` under the default budget.
pub fn maj_neg_generating_poly(lambda: &Partition) -> Result<QTPoly> {
    maj_neg_generating_poly_with_budget(lambda, DEFAULT_BUDGET)
}

pub fn maj_neg_generating_poly_with_budget(lambda: &Partition, budget: u64) -> Result<QTPoly> {
    Ok(stat_table(lambda, MajKind::Maj, budget)?.to_qt_poly())
}

/// `Σ_{𝒯 ∈ SYT_±(λ)} q^{comaj(𝒯)} t^{negg(𝒯)}`.
pub fn comaj_neg_generating_poly(lambda: &Partition) -> Result<QTPoly> {
    Ok(stat_table(lambda, MajKind::Comaj, DEFAULT_BUDGET)?.to_qt_poly())
}

/// `|{𝒯 ∈ SYT_±(λ) : maj(𝒯) ≡ residue (mod modulus), negg(𝒯) = negg}|`.
pub fn count_super_tableaux(
    lambda: &Partition,
    modulus: u32,
    residue: u32,
    negg: u32,
) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::Domain("modulus must be at least 1".into()));
    }
    Ok(stat_table(lambda, MajKind::Maj, DEFAULT_BUDGET)?.count_residue(modulus, residue, negg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    fn set(items: &[u32]) -> SmallSet {
        items.iter().copied().collect()
    }

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn example_tableau() -> StandardTableau {
        "1,3,4,6/2,5/7".parse().unwrap()
    }

    #[test]
    fn syt_counts() {
        assert_eq!(syt_enumerate(&lam("(1)")).len(), 1);
        assert_eq!(syt_enumerate(&lam("(2,1)")).len(), 2);
        assert_eq!(syt_enumerate(&lam("(4,2,1)")).len(), 35);
        assert_eq!(syt_enumerate(&Partition::empty()).len(), 1);
    }

    #[test]
    fn syt_count_times_hooks_is_factorial() {
        for n in 0..=10 {
            for l in partitions_of(n) {
                let ts = syt_enumerate(&l);
                let hooks: u128 = l.hook_lengths().iter().map(|&h| h as u128).product();
                assert_eq!(ts.len() as u128 * hooks, (1..=n as u128).product::<u128>(), "{l}");
                assert_eq!(ts.len() as u128, syt_count(&l));
            }
        }
    }

    #[test]
    fn enumerated_tableaux_are_valid_and_distinct() {
        let ts = syt_enumerate(&lam("(3,2,1)"));
        let unique: std::collections::HashSet<_> = ts.iter().collect();
        assert_eq!(unique.len(), ts.len());
        for t in ts {
            assert_eq!(StandardTableau::new(t.rows().to_vec()).unwrap(), t);
        }
    }

    #[test]
    fn classical_descents() {
        let t = example_tableau();
        assert_eq!(t.descent_set(), set(&[1, 4, 6]));
        assert_eq!(t.maj(), 11);
        assert_eq!(StandardTableau::row_tableau(5).descent_set(), SmallSet::EMPTY);
        assert_eq!(StandardTableau::row_tableau(5).maj(), 0);
        let col = StandardTableau::column_tableau(3);
        assert_eq!(col.descent_set(), set(&[1, 2]));
        assert_eq!((col.maj(), col.comaj()), (3, 3));
    }

    #[test]
    fn super_descents_of_the_worked_example() {
        let st: SuperTableau = "1,-3,4,6/-2,5/-7".parse().unwrap();
        assert_eq!(st.plus_part(), &example_tableau());
        assert_eq!(st.neg(), set(&[2, 3, 7]));
        assert_eq!(st.super_descent_set(), set(&[2, 3, 4]));
        assert_eq!(st.super_descent_set_direct(), set(&[2, 3, 4]));
        assert_eq!(st.super_maj(), 9);
        assert_eq!(st.negg(), 3);
        assert_eq!(st.to_string(), "1,-3,4,6/-2,5/-7");
    }

    #[test]
    fn small_super_examples() {
        let two = SuperTableau::new(StandardTableau::row_tableau(2), set(&[1])).unwrap();
        assert_eq!(two.super_descent_set(), set(&[1]));
        let one = SuperTableau::new(StandardTableau::row_tableau(1), set(&[1])).unwrap();
        assert_eq!((one.super_maj(), one.negg()), (0, 1));
        let plain = SuperTableau::new(example_tableau(), SmallSet::EMPTY).unwrap();
        assert_eq!(plain.super_maj(), example_tableau().maj());
    }

    #[test]
    fn relative_statistics() {
        assert_eq!(relative_maj(set(&[1, 4, 6]), set(&[2, 3, 7]), 7), 9);
        assert_eq!(relative_maj(set(&[1, 4, 6]), SmallSet::EMPTY, 7), 11);
        assert_eq!(relative_maj(SmallSet::EMPTY, SmallSet::interval(3), 3), 3);
        assert_eq!(relative_comaj(SmallSet::EMPTY, SmallSet::interval(3), 3), 3);
    }

    #[test]
    fn two_super_descent_definitions_agree() {
        for n in 0..=7 {
            for l in partitions_of(n) {
                for t in syt_enumerate(&l) {
                    let plain = SuperTableau::new(t.clone(), SmallSet::EMPTY).unwrap();
                    assert_eq!(plain.super_descent_set(), t.descent_set());
                    if n <= 6 {
                        for s in 0..(1u64 << n) {
                            let st = SuperTableau::new(t.clone(), SmallSet::from_bits(s << 1))
                                .unwrap();
                            assert_eq!(st.super_descent_set(), st.super_descent_set_direct());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(maj_neg_generating_poly(&lam("(1)")).unwrap().to_string(), "1 + t");
        assert_eq!(
            maj_neg_generating_poly(&lam("(2)")).unwrap().to_string(),
            "1 + t + q*t + q*t^2"
        );
        // (1+t)(q+t)
        assert_eq!(
            maj_neg_generating_poly(&lam("(1,1)")).unwrap().to_string(),
            "t + t^2 + q + q*t"
        );
    }

    #[test]
    fn maj_and_comaj_equidistribute() {
        for n in 0..=7 {
            for l in partitions_of(n) {
                assert_eq!(
                    maj_neg_generating_poly(&l).unwrap(),
                    comaj_neg_generating_poly(&l).unwrap(),
                    "{l}"
                );
            }
        }
    }

    #[test]
    fn specializations_of_the_generating_polynomial() {
        for n in 0..=6 {
            for l in partitions_of(n) {
                let gf = maj_neg_generating_poly(&l).unwrap();
                let classical = QTPoly::from_terms(
                    syt_enumerate(&l).iter().map(|t| ((t.maj(), 0), rat(1))),
                );
                assert_eq!(gf.at_t_zero(), classical, "{l}");
                assert_eq!(
                    gf.eval(&rat(1), &rat(1)),
                    rat((1i64 << n) * syt_count(&l) as i64)
                );
            }
        }
    }

    #[test]
    fn residue_counts() {
        assert_eq!(count_super_tableaux(&lam("(2,1)"), 3, 1, 0).unwrap(), 1);
        assert_eq!(count_super_tableaux(&lam("(4)"), 4, 0, 0).unwrap(), 1);
        // (1,1): T = column; S with |S| = 1: {1} gives maj 0, {2} gives maj 1
        assert_eq!(count_super_tableaux(&lam("(1,1)"), 2, 1, 1).unwrap(), 1);
        assert!(count_super_tableaux(&lam("(1)"), 0, 0, 0).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let err = maj_neg_generating_poly_with_budget(&lam("(3,2,1)"), 100).unwrap_err();
        assert!(matches!(err, Error::Budget { needed: 1024, budget: 100 }));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let l = lam("(4,2,1)");
        let a = maj_neg_generating_poly(&l).unwrap();
        let b = par::sequential(|| maj_neg_generating_poly(&l).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors() {
        assert!("1,3/2,2".parse::<SuperTableau>().is_err());
        assert!("2,1".parse::<SuperTableau>().is_err());
        assert!("1/2,3".parse::<SuperTableau>().is_err());
        assert!("1,x".parse::<SuperTableau>().is_err());
        assert!("1,-2".parse::<StandardTableau>().is_err());
    }

    proptest! {
        #[test]
        fn relative_descents_match_definition(d in 0u64..64, s in 0u64..128) {
            let n = 6;
            let d = SmallSet::from_bits(d << 1) ;
            let d = SmallSet::from_bits(d.bits() & window(n));
            let s = SmallSet::from_bits(s << 1);
            let direct: SmallSet = (1..n)
                .filter(|&i| (d.contains(i) && !s.contains(i + 1)) || (!d.contains(i) && s.contains(i)))
                .collect();
            prop_assert_eq!(relative_descents(d, s, n), direct);
        }

        #[test]
        fn render_parse_roundtrip(idx in 0usize..35, s in 0u64..128) {
            let t = syt_enumerate(&lam("(4,2,1)"))[idx].clone();
            let st = SuperTableau::new(t, SmallSet::from_bits(s << 1)).unwrap();
            prop_assert_eq!(st.to_string().parse::<SuperTableau>().unwrap(), st);
        }
    }
}
