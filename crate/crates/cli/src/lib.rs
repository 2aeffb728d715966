//! Command-line front end for `cyclotomy49-core`: single-prime
//! verification and classification, parallel range scans and JSON/CSV
//! reports.

pub mod error;
pub mod output;
pub mod scan;

use cyclotomy49_core::ring::ReductionTable;
use cyclotomy49_core::selftest::{self, SelftestReport};
use cyclotomy49_core::{CycInt, Order};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub use error::{CliError, Result};

pub const SELFTEST_SEED: u64 = 0x0049_0007;
pub const SELFTEST_PAIRS: usize = 100;

/// `count` pairs of order-49 elements with coefficients in `[-10^6, 10^6]`.
pub fn random_pairs(seed: u64, count: usize) -> Vec<(CycInt, CycInt)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let one = |rng: &mut StdRng| {
        let v = (0..49).map(|_| rng.gen_range(-1_000_000i64..=1_000_000)).collect();
        CycInt::from_redundant(Order::FortyNine, v).expect("49 coefficients")
    };
    (0..count).map(|_| (one(&mut rng), one(&mut rng))).collect()
}

/// Runs the startup checks; `inject_fault` perturbs one binomial entry of
/// the reduction table first.
pub fn run_selftest(inject_fault: bool) -> Result<SelftestReport> {
    let mut table = ReductionTable::STANDARD.clone();
    if inject_fault {
        table.rows[5][2] = (table.rows[5][2] + 1) % 7;
    }
    Ok(selftest::run(&table, &random_pairs(SELFTEST_SEED, SELFTEST_PAIRS))?)
}
