//! Classification records and their append-only JSON-lines cache.

use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, to_num_den};
use crate::triangles::{RationalTriangle, Witness};
use crate::tunnell::{CongruenceStatus, KernelRow, TunnellCounts};

pub const CACHE_ENV: &str = "CONGRUENT_CACHE";

/// One classified `n`, as printed and cached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RecordRepr", try_from = "RecordRepr")]
pub struct ResultRecord {
    pub counts: TunnellCounts,
    pub l_bullet: i64,
    pub status: CongruenceStatus,
    /// Unix seconds.
    pub computed_at: u64,
    pub witness_bound: u64,
}

impl ResultRecord {
    pub fn new(row: KernelRow, witness_bound: u64, computed_at: u64) -> Self {
        ResultRecord {
            counts: row.counts,
            l_bullet: row.l_bullet,
            status: row.status,
            computed_at,
            witness_bound,
        }
    }

    pub fn n(&self) -> u64 {
        self.counts.n
    }

    pub fn witness(&self) -> Option<&RationalTriangle> {
        self.status.witness().map(|w| &w.triangle)
    }

    /// One JSON object with keys in sorted order, matching every other JSON line the CLI writes.
    pub fn to_json_line(&self) -> String {
        let v = serde_json::to_value(self).expect("records always serialize");
        serde_json::to_string(&v).expect("values always serialize")
    }
}

pub fn now_unix() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

#[derive(Serialize, Deserialize)]
struct CountsRepr {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

#[derive(Serialize, Deserialize)]
struct WitnessRepr {
    kappa: u64,
    l: u64,
    m: u64,
    q: String,
    a: String,
    b: String,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct RecordRepr {
    n: u64,
    counts: CountsRepr,
    l_bullet: i64,
    status: String,
    witness: Option<WitnessRepr>,
    computed_at: u64,
    witness_bound: u64,
}

impl From<ResultRecord> for RecordRepr {
    fn from(r: ResultRecord) -> Self {
        let witness = r.status.witness().map(|w| WitnessRepr {
            kappa: w.kappa,
            l: w.l,
            m: w.m,
            q: to_num_den(&w.triangle.q),
            a: to_num_den(&w.triangle.a),
            b: to_num_den(&w.triangle.b),
            c: to_num_den(&w.triangle.c),
        });
        RecordRepr {
            n: r.counts.n,
            counts: CountsRepr {
                a: r.counts.a,
                b: r.counts.b,
                c: r.counts.c,
                d: r.counts.d,
            },
            l_bullet: r.l_bullet,
            status: r.status.code().to_string(),
            witness,
            computed_at: r.computed_at,
            witness_bound: r.witness_bound,
        }
    }
}

impl TryFrom<RecordRepr> for ResultRecord {
    type Error = String;

    fn try_from(r: RecordRepr) -> Result<Self, String> {
        let counts = TunnellCounts {
            n: r.n,
            a: r.counts.a,
            b: r.counts.b,
            c: r.counts.c,
            d: r.counts.d,
        };
        if counts.l_bullet() != r.l_bullet {
            return Err(format!("l_bullet {} inconsistent with counts", r.l_bullet));
        }
        let status = match (r.status.as_str(), r.witness) {
            ("not_congruent", None) => CongruenceStatus::NotCongruent,
            ("tunnell_positive_unverified", None) => CongruenceStatus::TunnellPositiveUnverified,
            ("congruent_witnessed", Some(w)) => {
                let p = |s: &str| parse_rational(s).map_err(|e| e.to_string());
                let triangle = RationalTriangle::new(p(&w.q)?, p(&w.a)?, p(&w.b)?, p(&w.c)?)
                    .map_err(|e| e.to_string())?;
                CongruenceStatus::CongruentWitnessed(Witness {
                    kappa: w.kappa,
                    l: w.l,
                    m: w.m,
                    triangle,
                })
            }
            (s, w) => {
                return Err(format!(
                    "status {s:?} {} a witness",
                    if w.is_some() { "does not allow" } else { "requires" }
                ))
            }
        };
        Ok(ResultRecord {
            counts,
            l_bullet: r.l_bullet,
            status,
            computed_at: r.computed_at,
            witness_bound: r.witness_bound,
        })
    }
}

/// Append-only JSON-lines store of [`ResultRecord`]s.
#[derive(Debug, Clone)]
pub struct Cache {
    path: PathBuf,
}

/// Records read back from a cache file, plus one message per skipped line.
#[derive(Debug, Default)]
pub struct CacheContents {
    pub records: Vec<ResultRecord>,
    pub warnings: Vec<String>,
}

impl Cache {
    pub fn at(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    /// `$CONGRUENT_CACHE`, else `$XDG_CACHE_HOME/congruent/results.jsonl`, else
    /// `~/.cache/congruent/results.jsonl`, else a file in the temp directory.
    pub fn from_env() -> Self {
        if let Some(p) = std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()) {
            return Cache::at(p);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|p| !p.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        Cache::at(base.join("congruent").join("results.jsonl"))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> io::Result<CacheContents> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(CacheContents::default()),
            Err(e) => return Err(e),
        };
        let mut out = CacheContents::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<ResultRecord>(line) {
                Ok(r) => out.records.push(r),
                Err(e) => out.warnings.push(format!(
                    "{}:{}: skipping corrupt cache line ({e})",
                    self.path.display(),
                    i + 1
                )),
            }
        }
        Ok(out)
    }

    /// Latest record for `n` computed with a bound at least `witness_bound`.
    pub fn get(&self, n: u64, witness_bound: u64) -> io::Result<(Option<ResultRecord>, Vec<String>)> {
        let contents = self.load()?;
        let hit = contents
            .records
            .into_iter()
            .rev()
            .find(|r| r.n() == n && r.witness_bound >= witness_bound);
        Ok((hit, contents.warnings))
    }

    pub fn put(&self, record: &ResultRecord) -> io::Result<()> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut line = record.to_json_line();
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())
    }
}
