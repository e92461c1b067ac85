//! Irreducible characters of `S_n` by Murnaghan–Nakayama, with a
//! process-wide memo of whole character tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// `χ^λ(μ)` by removing border strips of length `μ_1, μ_2, ...` in turn.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Domain(format!(
            "character χ^{lambda} evaluated on cycle type {mu} of a different size"
        )));
    }
    Ok(mn_rec(lambda.parts(), mu.parts(), &mut Memo::new()))
}

fn mn_rec(lambda: &[u32], mu: &[u32], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Beta-numbers: strictly decreasing bead positions.
    let len = lambda.len();
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character table of `S_n`: `values[i][j] = χ^{λ_i}(μ_j)` with both
/// indices running over [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: u32,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn compute(n: u32) -> Self {
        let partitions = partitions_of(n);
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_rec(l.parts(), m.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self { n, partitions, values }
    }

    /// Rebuilds a table from `(λ, μ, value)` rows; every pair must appear once.
    pub fn from_rows(n: u32, rows: impl IntoIterator<Item = (Partition, Partition, i64)>) -> Result<Self> {
        let partitions = partitions_of(n);
        let index: HashMap<&Partition, usize> =
            partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let k = partitions.len();
        let mut values = vec![vec![None; k]; k];
        for (l, m, v) in rows {
            let (Some(&i), Some(&j)) = (index.get(&l), index.get(&m)) else {
                return Err(Error::Parse(format!("row ({l}, {m}) is not indexed by partitions of {n}")));
            };
            if values[i][j].replace(v).is_some() {
                return Err(Error::Parse(format!("duplicate row ({l}, {m})")));
            }
        }
        let values = values
            .into_iter()
            .map(|row| row.into_iter().collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse(format!("character table of S_{n} is incomplete")))?;
        Ok(Self { n, partitions, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.binary_search(lambda).ok()
    }

    /// `χ^{λ_i}(μ_j)` by index.
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    /// All `(λ, μ, χ^λ(μ))` in row-major partition order.
    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &Partition, i64)> + '_ {
        self.partitions.iter().enumerate().flat_map(move |(i, l)| {
            self.partitions
                .iter()
                .enumerate()
                .map(move |(j, m)| (l, m, self.values[i][j]))
        })
    }
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();

fn tables() -> &'static RwLock<HashMap<u32, Arc<CharTable>>> {
    TABLES.get_or_init(Default::default)
}

/// The character table of `S_n`, computed once per process.
pub fn char_table(n: u32) -> Arc<CharTable> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return t.clone();
    }
    let fresh = Arc::new(CharTable::compute(n));
    tables().write().unwrap().entry(n).or_insert(fresh).clone()
}

/// Seeds the memo with a table loaded from elsewhere (e.g. a disk cache).
pub fn install_char_table(table: CharTable) {
    tables().write().unwrap().insert(table.n, Arc::new(table));
}

/// Sizes `n` whose tables are currently memoized, ascending.
pub fn cached_char_table_sizes() -> Vec<u32> {
    let mut sizes: Vec<u32> = tables().read().unwrap().keys().copied().collect();
    sizes.sort_unstable();
    sizes
}

pub fn clear_char_tables() {
    tables().write().unwrap().clear();
}
