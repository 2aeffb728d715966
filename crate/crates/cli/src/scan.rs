//! Range scans over primes `p ≡ 1 (mod 14)` or `p ≡ 1 (mod 49)`.

use std::time::Instant;

use cyclotomy49_core::artiad::{classify, classify_via_x, Classification, Kind};
use cyclotomy49_core::congruence::{verify_prime, PrimeVerification, SepticData};
use cyclotomy49_core::prime_field::primes_one_mod;
use cyclotomy49_core::FieldCtx;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const EXTENSION_STEP: u64 = 20_000;
pub const EXTENSION_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub min: u64,
    pub max: u64,
    pub modulus: u64,
    pub all_n: bool,
    pub jobs: usize,
    pub extend_to_artiad: bool,
    pub output: String,
    pub format: Format,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min > self.max {
            return Err(CliError::Usage(format!("min {} exceeds max {}", self.min, self.max)));
        }
        if self.modulus != 14 && self.modulus != 49 {
            return Err(CliError::Usage(format!("modulus must be 14 or 49, got {}", self.modulus)));
        }
        if self.jobs == 0 {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn ns(&self) -> Vec<u32> {
        if self.all_n {
            (1..=48).collect()
        } else {
            vec![1]
        }
    }
}

/// One visited prime. `verification` is present for `p ≡ 1 (mod 49)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub p: u64,
    pub gamma: u64,
    pub classification: Classification,
    pub verification: Option<PrimeVerification>,
}

impl ScanEntry {
    pub fn mismatches(&self) -> usize {
        self.verification.as_ref().map_or(0, |v| v.certificates.iter().filter(|c| !c.matched).count())
    }

    /// Failed required checks, prefixed with `p`.
    pub fn flags(&self) -> Vec<String> {
        let mut out = Vec::new();
        match &self.verification {
            Some(v) => {
                out.extend(v.discrepancies.iter().map(|d| format!("{}: {d}", self.p)));
                for c in &v.certificates {
                    if !c.matched {
                        out.push(format!("{}: J(1,{})_49 residue mismatch", self.p, c.n));
                    }
                    out.extend(c.discrepancies.iter().map(|d| format!("{} n={}: {d}", self.p, c.n)));
                }
            }
            None => out.extend(
                cyclotomy49_core::artiad::required_failures(&self.classification)
                    .into_iter()
                    .map(|d| format!("{}: {d}", self.p)),
            ),
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub searched_to: u64,
    pub first_artiad: Option<ScanEntry>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub primes: usize,
    pub ordinary: usize,
    pub artiad: usize,
    pub hyperartiad: usize,
    pub certificates: usize,
    pub mismatches: usize,
    pub discrepancies: Vec<String>,
    pub first_artiad: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub entries: Vec<ScanEntry>,
    pub summary: Summary,
    pub extension: Option<Extension>,
    pub version: String,
    pub runtime_ms: u64,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.summary.mismatches == 0 && self.summary.discrepancies.is_empty()
    }
}

pub fn scan_entry(p: u64, modulus: u64, ns: &[u32]) -> Result<ScanEntry> {
    if p % 49 == 1 {
        let v = verify_prime(p, None, ns)?;
        return Ok(ScanEntry {
            p,
            gamma: v.gamma,
            classification: v.classification.clone(),
            verification: Some(v),
        });
    }
    debug_assert_eq!(modulus, 14);
    let c = classify(p, None)?;
    Ok(ScanEntry { p, gamma: c.gamma, classification: c, verification: None })
}

fn summarize(entries: &[ScanEntry]) -> Summary {
    let mut s = Summary { primes: entries.len(), ..Default::default() };
    for e in entries {
        match e.classification.kind {
            Kind::Ordinary => s.ordinary += 1,
            Kind::Artiad => s.artiad += 1,
            Kind::Hyperartiad => s.hyperartiad += 1,
        }
        if let Some(v) = &e.verification {
            s.certificates += v.certificates.len();
        }
        s.mismatches += e.mismatches();
        s.discrepancies.extend(e.flags());
    }
    s.first_artiad = entries.iter().find(|e| e.classification.kind.is_artiad()).map(|e| e.p);
    s
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

/// Smallest artiad prime `≡ 1 (mod modulus)` in `[from, to]`, searched in
/// windows of [`EXTENSION_STEP`].
pub fn find_first_artiad(from: u64, to: u64, modulus: u64, jobs: usize) -> Result<(Option<u64>, u64)> {
    let pool = pool(jobs)?;
    let mut lo = from;
    while lo <= to {
        let hi = (lo + EXTENSION_STEP - 1).min(to);
        let primes: Vec<u64> = primes_one_mod(lo, hi, modulus).collect();
        let hits = pool.install(|| {
            primes
                .par_iter()
                .map(|&p| {
                    let sep = SepticData::new(&FieldCtx::new(p)?)?;
                    Ok(classify_via_x(&sep.sol).then_some(p))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        if let Some(p) = hits.into_iter().flatten().min() {
            return Ok((Some(p), hi));
        }
        lo = hi + 1;
    }
    Ok((None, to))
}

pub fn run_scan(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let start = Instant::now();
    let ns = config.ns();
    let primes: Vec<u64> = primes_one_mod(config.min, config.max, config.modulus).collect();
    let mut entries = pool(config.jobs)?.install(|| {
        primes.par_iter().map(|&p| scan_entry(p, config.modulus, &ns)).collect::<Result<Vec<_>>>()
    })?;
    entries.sort_by_key(|e| e.p);
    let mut summary = summarize(&entries);

    let extension = if config.extend_to_artiad && summary.first_artiad.is_none() {
        let (found, searched_to) =
            find_first_artiad(config.max + 1, EXTENSION_LIMIT, config.modulus, config.jobs)?;
        let first_artiad = found.map(|p| scan_entry(p, config.modulus, &ns)).transpose()?;
        if let Some(e) = &first_artiad {
            summary.mismatches += e.mismatches();
            summary.discrepancies.extend(e.flags());
        }
        Some(Extension { searched_to, first_artiad })
    } else {
        None
    };

    Ok(ScanReport {
        config: config.clone(),
        entries,
        summary,
        extension,
        version: env!("CARGO_PKG_VERSION").to_string(),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
