//! On-disk cache of `S_n` character tables.
//!
//! One JSON Lines file: a header `{format_version, max_n, digest}` followed by
//! `[λ, μ, χ^λ(μ)]` rows for every `n ≤ max_n` in partition order. The digest
//! is the SHA-256 of the row lines joined by `\n`. Writes go through a
//! temporary file in the same directory and are renamed into place.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use superlie::partition::Partition;
use superlie::symfunc::{char_table, install_char_table, CharTable};
use superlie::Error;

pub const FORMAT_VERSION: u32 = 1;
pub const FILE_NAME: &str = "char_tables.jsonl";
/// Largest `n` accepted by `cache warm`; `S_16` has 231 classes.
pub const MAX_WARM_N: u32 = 16;
/// Size rebuilt when a corrupt file has no readable header.
pub const FALLBACK_MAX_N: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub format_version: u32,
    pub max_n: u32,
    pub digest: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache i/o failed: {0}")]
    Io(#[from] io::Error),
    #[error("cache file is corrupt: {0}")]
    Corrupt(String),
}

/// `$SUPERLIE_CACHE_DIR`, else the user cache directory, else none.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("SUPERLIE_CACHE_DIR") {
        return Some(PathBuf::from(dir));
    }
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(xdg).join("superlie"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("superlie"))
}

pub fn cache_path() -> Option<PathBuf> {
    cache_dir().map(|d| d.join(FILE_NAME))
}

fn row_line(l: &Partition, m: &Partition, v: i64) -> String {
    serde_json::to_string(&(l.to_string(), m.to_string(), v)).expect("rows serialize")
}

fn digest_of(lines: &[String]) -> String {
    hex::encode(Sha256::digest(lines.join("\n").as_bytes()))
}

/// Serialized form of the tables for `1..=max_n`.
pub fn encode(tables: &[&CharTable], max_n: u32) -> String {
    let lines: Vec<String> = tables
        .iter()
        .flat_map(|t| t.rows().map(|(l, m, v)| row_line(l, m, v)))
        .collect();
    let header = Header { format_version: FORMAT_VERSION, max_n, digest: digest_of(&lines) };
    let mut out = serde_json::to_string(&header).expect("header serializes");
    for line in &lines {
        out.push('\n');
        out.push_str(line);
    }
    out.push('\n');
    out
}

/// Parses and integrity-checks a cache file.
pub fn decode(text: &str) -> Result<(Header, Vec<CharTable>), CacheError> {
    let mut lines = text.lines();
    let header: Header = serde_json::from_str(lines.next().unwrap_or(""))
        .map_err(|e| CacheError::Corrupt(format!("unreadable header: {e}")))?;
    if header.format_version != FORMAT_VERSION {
        return Err(CacheError::Corrupt(format!(
            "format version {} (expected {FORMAT_VERSION})",
            header.format_version
        )));
    }
    if header.max_n > MAX_WARM_N {
        return Err(CacheError::Corrupt(format!("max_n {} exceeds {MAX_WARM_N}", header.max_n)));
    }
    let rows: Vec<String> = lines.map(str::to_owned).collect();
    if digest_of(&rows) != header.digest {
        return Err(CacheError::Corrupt("content digest mismatch".into()));
    }
    let mut by_n: Vec<Vec<(Partition, Partition, i64)>> = vec![Vec::new(); header.max_n as usize + 1];
    for row in &rows {
        let (l, m, v): (String, String, i64) =
            serde_json::from_str(row).map_err(|e| CacheError::Corrupt(format!("bad row {row:?}: {e}")))?;
        let parse = |s: &str| s.parse::<Partition>().map_err(|e: Error| CacheError::Corrupt(e.to_string()));
        let (l, m) = (parse(&l)?, parse(&m)?);
        let n = l.size();
        let slot = by_n
            .get_mut(n as usize)
            .filter(|_| n >= 1)
            .ok_or_else(|| CacheError::Corrupt(format!("row for S_{n} outside 1..={}", header.max_n)))?;
        slot.push((l, m, v));
    }
    let tables = (1..=header.max_n)
        .map(|n| {
            CharTable::from_rows(n, std::mem::take(&mut by_n[n as usize]))
                .map_err(|e| CacheError::Corrupt(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((header, tables))
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), CacheError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CacheError::Io(e.error))?;
    Ok(())
}

/// Computes (or reuses memoized) tables for `1..=max_n` and persists them.
pub fn warm(path: &Path, max_n: u32) -> Result<Header, CacheError> {
    let tables: Vec<_> = (1..=max_n).map(char_table).collect();
    let refs: Vec<&CharTable> = tables.iter().map(|t| t.as_ref()).collect();
    let text = encode(&refs, max_n);
    write_atomic(path, &text)?;
    let header = text.lines().next().expect("header line");
    Ok(serde_json::from_str(header).expect("header round-trips"))
}

/// Header `max_n` when at least the header parses, for rebuilding.
fn salvage_max_n(text: &str) -> u32 {
    text.lines()
        .next()
        .and_then(|l| serde_json::from_str::<serde_json::Value>(l).ok())
        .and_then(|v| v.get("max_n")?.as_u64())
        .and_then(|n| u32::try_from(n).ok())
        .filter(|n| (1..=MAX_WARM_N).contains(n))
        .unwrap_or(FALLBACK_MAX_N)
}

/// Installs the cached tables into the process memo. A corrupt file is
/// rebuilt with a warning on stderr; a missing file is left alone.
pub fn load(path: &Path) -> Option<Header> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
        Err(e) => {
            eprintln!("warning: cannot read character table cache {}: {e}", path.display());
            return None;
        }
    };
    match decode(&text) {
        Ok((header, tables)) => {
            tables.into_iter().for_each(install_char_table);
            Some(header)
        }
        Err(e) => {
            let max_n = salvage_max_n(&text);
            eprintln!(
                "warning: {e} ({}); rebuilding character tables up to n = {max_n}",
                path.display()
            );
            match warm(path, max_n) {
                Ok(header) => Some(header),
                Err(e) => {
                    eprintln!("warning: rebuilding the cache failed: {e}");
                    None
                }
            }
        }
    }
}

/// Removes the cache file; `Ok(false)` if there was none.
pub fn clear(path: &Path) -> Result<bool, CacheError> {
    match fs::remove_file(path) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn encoded(max_n: u32) -> String {
        let tables: Vec<_> = (1..=max_n).map(CharTable::compute).collect();
        encode(&tables.iter().collect::<Vec<_>>(), max_n)
    }

    #[test]
    fn round_trip_preserves_tables() {
        let (header, tables) = decode(&encoded(5)).unwrap();
        assert_eq!(header.max_n, 5);
        assert_eq!(header.format_version, FORMAT_VERSION);
        for (n, t) in (1..=5).zip(&tables) {
            assert_eq!(*t, CharTable::compute(n));
        }
    }

    #[test]
    fn trivial_character_row_is_all_ones() {
        let (_, tables) = decode(&encoded(8)).unwrap();
        let t = &tables[7];
        let trivial: Partition = "(8)".parse().unwrap();
        assert!(t.partitions().iter().all(|mu| t.get(&trivial, mu) == Some(1)));
    }

    #[test]
    fn tampered_rows_fail_the_digest() {
        let text = encoded(3).replacen(",2]", ",3]", 1);
        assert!(matches!(decode(&text), Err(CacheError::Corrupt(m)) if m.contains("digest")));
    }

    #[test]
    fn wrong_version_is_rejected() {
        let text = encoded(2).replacen("\"format_version\":1", "\"format_version\":99", 1);
        assert!(decode(&text).is_err());
    }

    #[test]
    fn salvage_falls_back_on_garbage() {
        assert_eq!(salvage_max_n("not json"), FALLBACK_MAX_N);
        assert_eq!(salvage_max_n("{\"max_n\":5}\nxx"), 5);
    }

    #[test]
    fn encoding_is_deterministic() {
        assert_eq!(encoded(6), encoded(6));
    }
}
