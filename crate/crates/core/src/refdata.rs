//! Integer reference sequences in b-file form.
//!
//! A b-file lists one term per line as `index value`; blank lines and lines
//! starting with `#` are ignored. Snapshots of the allowlisted sequences are
//! compiled into the library. [`fetch_sequence`] looks for a cached copy,
//! then (with the `fetch` feature and network enabled) downloads one, and
//! otherwise falls back to the snapshot. Any copy that disagrees with the
//! snapshot on a shared index is rejected.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::ExactInt;

/// Sequences this crate knows how to check against.
pub const ALLOWLIST: [&str; 6] = ["A003239", "A002995", "A241926", "A047996", "A007595", "A003441"];

/// Setting this variable to anything but `0` or the empty string disables
/// network access in [`fetch_sequence`].
pub const OFFLINE_ENV: &str = "ANNULAR_OFFLINE";

/// Overrides the cache directory used by [`fetch_sequence`].
pub const CACHE_ENV: &str = "ANNULAR_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Bundled,
    Fetched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceSequence {
    pub id: String,
    /// Index of the first term.
    pub offset: i64,
    pub values: Vec<ExactInt>,
    pub source: Source,
}

impl ReferenceSequence {
    pub fn get(&self, index: i64) -> Option<&ExactInt> {
        let i = usize::try_from(index.checked_sub(self.offset)?).ok()?;
        self.values.get(i)
    }

    /// Last index covered.
    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    /// Fail if `other` disagrees with `self` on any index both contain.
    pub fn check_overlap(&self, other: &ReferenceSequence) -> Result<usize> {
        let lo = self.offset.max(other.offset);
        let hi = self.last_index().min(other.last_index());
        for i in lo..=hi {
            let (a, b) = (self.get(i).expect("in range"), other.get(i).expect("in range"));
            if a != b {
                return Err(Error::Reference(format!(
                    "{} disagrees at index {i}: {a} ({:?}) vs {b} ({:?})",
                    self.id, self.source, other.source
                )));
            }
        }
        Ok((hi - lo + 1).max(0) as usize)
    }

    pub fn to_bfile(&self) -> String {
        let mut out = format!("# {}\n", self.id);
        for (i, v) in self.values.iter().enumerate() {
            out += &format!("{} {v}\n", self.offset + i as i64);
        }
        out
    }
}

/// Parse b-file text. Indices must be consecutive.
pub fn parse_bfile(id: &str, text: &str, source: Source) -> Result<ReferenceSequence> {
    let bad = |line: usize, why: &str| Error::Reference(format!("{id} b-file line {line}: {why}"));
    let mut offset = None;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(lineno, "expected `index value`"));
        };
        let index: i64 = index.parse().map_err(|_| bad(lineno, "bad index"))?;
        let value = ExactInt::from_str(value).map_err(|_| bad(lineno, "bad value"))?;
        let start = *offset.get_or_insert(index);
        if index != start + values.len() as i64 {
            return Err(bad(lineno, "indices are not consecutive"));
        }
        values.push(value);
    }
    let offset = offset.ok_or_else(|| Error::Reference(format!("{id} b-file has no terms")))?;
    Ok(ReferenceSequence { id: id.to_string(), offset, values, source })
}

fn check_allowed(id: &str) -> Result<()> {
    if ALLOWLIST.contains(&id) {
        Ok(())
    } else {
        Err(Error::Reference(format!("{id} is not in the allowlist {ALLOWLIST:?}")))
    }
}

fn bundled_text(id: &str) -> Option<&'static str> {
    match id {
        "A002995" => Some(include_str!("../data/b002995.txt")),
        "A003239" => Some(include_str!("../data/b003239.txt")),
        "A003441" => Some(include_str!("../data/b003441.txt")),
        "A007595" => Some(include_str!("../data/b007595.txt")),
        "A047996" => Some(include_str!("../data/b047996.txt")),
        _ => None,
    }
}

/// The snapshot compiled into the library.
pub fn bundled(id: &str) -> Result<ReferenceSequence> {
    check_allowed(id)?;
    let text = bundled_text(id).ok_or_else(|| Error::Reference(format!("no bundled snapshot of {id}")))?;
    parse_bfile(id, text, Source::Bundled)
}

#[derive(Clone, Debug)]
pub struct FetchOptions {
    pub cache_dir: PathBuf,
    pub allow_network: bool,
}

impl FetchOptions {
    /// Options taken from the environment.
    pub fn from_env() -> Self {
        let cache_dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("annular")))
            .or_else(|| std::env::var_os("HOME").map(|d| PathBuf::from(d).join(".cache").join("annular")))
            .unwrap_or_else(|| std::env::temp_dir().join("annular"));
        let offline = std::env::var(OFFLINE_ENV).is_ok_and(|v| !v.is_empty() && v != "0");
        Self { cache_dir, allow_network: !offline }
    }
}

#[derive(Clone, Debug)]
pub struct Fetched {
    pub sequence: ReferenceSequence,
    /// Set when the download failed and the snapshot was used instead.
    pub warning: Option<String>,
}

fn cache_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("b{}.txt", &id[1..]))
}

#[cfg(feature = "fetch")]
fn download(id: &str) -> Result<String> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let fail = |e: reqwest::Error| Error::Reference(format!("download of {url} failed: {e}"));
    let response = reqwest::blocking::Client::builder()
        .timeout(std::time::Duration::from_secs(20))
        .build()
        .map_err(fail)?
        .get(&url)
        .send()
        .and_then(|r| r.error_for_status())
        .map_err(fail)?;
    response.text().map_err(fail)
}

#[cfg(not(feature = "fetch"))]
fn download(_id: &str) -> Result<String> {
    Err(Error::Reference("built without the `fetch` feature".into()))
}

/// Reference sequence by id: cached copy, then download, then snapshot.
pub fn fetch_sequence(id: &str, options: &FetchOptions) -> Result<Fetched> {
    check_allowed(id)?;
    let snapshot = bundled(id).ok();
    let agree = |seq: &ReferenceSequence| match &snapshot {
        Some(s) => s.check_overlap(seq).map(|_| ()),
        None => Ok(()),
    };

    let cached = cache_path(&options.cache_dir, id);
    if let Ok(text) = fs::read_to_string(&cached) {
        let seq = parse_bfile(id, &text, Source::Fetched)?;
        agree(&seq)?;
        return Ok(Fetched { sequence: seq, warning: None });
    }

    let failure = if options.allow_network {
        match download(id).and_then(|text| parse_bfile(id, &text, Source::Fetched).map(|s| (text, s))) {
            Ok((text, seq)) => {
                agree(&seq)?;
                if fs::create_dir_all(&options.cache_dir).is_ok() {
                    let _ = fs::write(&cached, text);
                }
                return Ok(Fetched { sequence: seq, warning: None });
            }
            Err(e) => e.to_string(),
        }
    } else {
        format!("network disabled by {OFFLINE_ENV}")
    };

    match snapshot {
        Some(sequence) => Ok(Fetched {
            sequence,
            warning: Some(format!("{failure}; using the bundled snapshot of {id}")),
        }),
        None => Err(Error::Reference(format!("{failure}; no bundled snapshot of {id}"))),
    }
}
