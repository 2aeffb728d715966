//! Startup algebra checks for the reduction map and the character sums.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomy::elementary_properties;
use crate::ring::{CycInt, Order, ReductionTable};
use crate::{FieldCtx, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: String::from(name), passed, detail });
    }
}

// Product in F_7[t], no truncation.
fn poly_mul7(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % 7;
        }
    }
    out
}

fn one_plus_t_pow(k: usize) -> Vec<u8> {
    (0..k).fold(vec![1u8], |acc, _| poly_mul7(&acc, &[1, 1]))
}

/// Runs every check against `table`; `samples` are pairs of order-49
/// elements used for the homomorphism check.
pub fn run(table: &ReductionTable, samples: &[(CycInt, CycInt)]) -> Result<SelftestReport> {
    let mut rep = SelftestReport::default();

    let mut phi = vec![0u8; 43];
    for m in 0..7 {
        for (slot, c) in phi.iter_mut().zip(one_plus_t_pow(7 * m)) {
            *slot = (*slot + c) % 7;
        }
    }
    let mut t42 = vec![0u8; 43];
    t42[42] = 1;
    rep.push("Φ_49(1 + t) ≡ t^42 (mod 7)", phi == t42, String::new());

    let bad_rows: Vec<usize> = (0..49)
        .filter(|&k| {
            let want = one_plus_t_pow(k);
            (0..42).any(|i| table.rows[k][i] != want.get(i).copied().unwrap_or(0))
        })
        .collect();
    rep.push("table rows are (1 + t)^k mod 7", bad_rows.is_empty(), format!("bad rows {bad_rows:?}"));

    let mut raw_phi = vec![0i64; 49];
    (0..7).for_each(|m| raw_phi[7 * m] = 1);
    let img = table.image(&raw_phi);
    rep.push("image of Φ_49(ζ) vanishes", img.iter().all(|&c| c == 0), String::new());

    let seven = CycInt::constant(Order::FortyNine, 7).residue_with(table)?;
    rep.push("residue of 7 vanishes", seven.0 == [0; 8], format!("{seven:?}"));

    let mut hom_failures = 0usize;
    for (a, b) in samples {
        let ra = a.residue_with(table)?;
        let rb = b.residue_with(table)?;
        let sum = a.checked_add(b)?.residue_with(table)?;
        let prod = a.checked_mul(b)?.residue_with(table)?;
        if sum != ra + rb || prod != ra * rb {
            hom_failures += 1;
        }
    }
    rep.push(
        "residue map is a ring homomorphism",
        hom_failures == 0,
        format!("{hom_failures} of {} sample pairs fail", samples.len()),
    );

    let el = elementary_properties(&FieldCtx::new(29)?, Order::Seven)?;
    rep.push("Jacobi-sum properties at p = 29", el.passed(), format!("{:?}", el.failures));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples() -> Vec<(CycInt, CycInt)> {
        (0..20i64)
            .map(|s| {
                let a = (0..49).map(|k| (k * 31 + s * 17) % 23 - 11).collect();
                let b = (0..49).map(|k| (k * k + 5 * s) % 19 - 9).collect();
                (
                    CycInt::from_redundant(Order::FortyNine, a).unwrap(),
                    CycInt::from_redundant(Order::FortyNine, b).unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn standard_table_passes() {
        let rep = run(&ReductionTable::STANDARD, &samples()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.checks.len(), 6);
    }

    #[test]
    fn corrupted_table_fails() {
        let mut t = ReductionTable::STANDARD.clone();
        t.rows[3][1] = (t.rows[3][1] + 1) % 7;
        let rep = run(&t, &samples()).unwrap();
        assert!(!rep.passed());
        assert!(rep.checks.iter().any(|c| c.name.contains("homomorphism") && !c.passed));
    }
}
