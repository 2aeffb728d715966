//! The determining congruence of `J(1,n)_49` modulo `(1 - ζ)^8`.
//!
//! For `gcd(7, n) = 1`, write `n = 7d + n'`; then
//!
//! ```text
//! J(1,n)_49 ≡ -1 + Σ_{i=3}^{7} c_{i,n} (ζ - 1)^i   (mod (1 - ζ)^8)
//! c_{i,n} = Σ_{u=i}^{6} C(u,i) B(u,n')_7            (3 ≤ i ≤ 6)
//! c_{7,n} = S(n) = Σ_{t,j<7} t·B(7t + j, n)_49
//! ```
//!
//! and `J(1,n)_49 ≡ -1` when `7 | n`. Congruences are compared in
//! `F_7[t]/(t^8)` via [`CycInt::residue_mod_t8`].
//!
//! `S(n) mod 7` is also computed from order-7 cyclotomic numbers with
//! floor-sum weights (`s_floor_sum`), and for `n = 1` the coefficients have
//! closed forms in the Leonard–Williams sextuple. Both printed and corrected
//! closed forms are evaluated; see [`ClosedForms`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::artiad::{self, Classification, Kind};
use crate::cyclotomy::{
    cyclotomic_numbers, dickson_hurwitz, elementary_properties, jacobi_from_cyc, jacobi_sum, jacobi_via_dh,
    symmetry_orbit, CycNumTable, DHTable, ElementaryReport,
};
use crate::lw::{self, DiophantineReport, LWSolution, TUDecomp, TableReconstruction};
use crate::prime_field::is_prime;
use crate::ring::{CycInt, Order, Residue8};
use crate::{Error, FieldCtx, Result};

type Q = Ratio<i128>;

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `c_{i,n}` for `i = 1..=6` (index `i - 1`); `None` when `7 | n`.
///
/// Only `i ≥ 3` enters the congruence; `c_{1,n}`, `c_{2,n}` are kept for the
/// artiad criteria.
pub fn coeffs_by_definition(dh7: &DHTable, n: u32) -> Result<Option<[i64; 6]>> {
    if dh7.order != Order::Seven {
        return Err(Error::input("coefficients need the order-7 Dickson–Hurwitz table"));
    }
    if dh7.f() % 2 != 0 {
        return Err(Error::Unsupported(format!("f = {} is odd", dh7.f())));
    }
    if n % 7 == 0 {
        return Ok(None);
    }
    let np = (n % 7) as i64;
    let mut c = [0i64; 6];
    for (slot, i) in c.iter_mut().zip(1..=6u32) {
        *slot = (i..=6).map(|u| binom(u, i) * dh7.get(u as i64, np)).sum();
    }
    Ok(Some(c))
}

/// `S(n) = Σ_{t=0}^{6} Σ_{j=0}^{6} t·B(7t + j, n)_49`.
pub fn s_direct(dh49: &DHTable, n: u32) -> Result<i64> {
    if dh49.order != Order::FortyNine {
        return Err(Error::input("S(n) needs the order-49 Dickson–Hurwitz table"));
    }
    Ok((0..7i64)
        .flat_map(|t| (0..7i64).map(move |j| (t, j)))
        .map(|(t, j)| t * dh49.get(7 * t + j, n as i64))
        .sum())
}

/// `λ_h(n') = ⌊n'h/7⌋ + ⌊-h(n'+1)/7⌋`.
pub fn lambda_h(np: i64, h: i64) -> i64 {
    (np * h).div_euclid(7) + (-h * (np + 1)).div_euclid(7)
}

/// The six-floor weight `λ_{h,k}(n')` attached to the class of `(h,k)_7`.
pub fn lambda_hk(np: i64, h: i64, k: i64) -> i64 {
    let m = np + 1;
    [h + np * k, k + np * h, np * k - h * m, np * h - k * m, k - h * m, h - k * m]
        .iter()
        .map(|v| v.div_euclid(7))
        .sum()
}

/// Representatives of the five six-element classes of `(h,k)_7` with
/// `h, k, h - k ≢ 0`, smallest first.
pub fn class_representatives() -> Vec<(i64, i64)> {
    let mut seen = [[false; 7]; 7];
    let mut reps = Vec::new();
    for h in 1..7i64 {
        for k in 1..7i64 {
            if h == k || seen[h as usize][k as usize] {
                continue;
            }
            for (a, b) in symmetry_orbit(7, h, k) {
                seen[a][b] = true;
            }
            reps.push((h, k));
        }
    }
    reps
}

/// `S(n) mod 7` from order-7 cyclotomic numbers:
/// `Σ_h λ_h (h,0)_7 + Σ_classes λ_{h,k} (h,k)_7`. Zero when `7 | n`.
pub fn s_floor_sum(cyc7: &CycNumTable, n: u32) -> Result<u8> {
    if cyc7.order != Order::Seven {
        return Err(Error::input("floor-sum S(n) needs the order-7 table"));
    }
    if n % 7 == 0 {
        return Ok(0);
    }
    let np = (n % 7) as i64;
    let mut acc: i64 = (1..7).map(|h| lambda_h(np, h) * cyc7.get(h, 0)).sum();
    acc +=
        class_representatives().into_iter().map(|(h, k)| lambda_hk(np, h, k) * cyc7.get(h, k)).sum::<i64>();
    Ok(acc.rem_euclid(7) as u8)
}

/// Coefficients of the congruence for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "case", rename_all = "snake_case"))]
pub enum CoeffSet {
    /// `7 | n`: the congruence is `J ≡ -1`.
    Degenerate { n: u32 },
    Coprime {
        n: u32,
        n_prime: u32,
        /// `c_{1,n} ..= c_{6,n}`.
        c: [i64; 6],
        /// `S(n)`, exact.
        s: i64,
        /// `c_{7,n} = S(n) mod 7`.
        c7: u8,
    },
}

impl CoeffSet {
    pub fn build(dh7: &DHTable, dh49: &DHTable, n: u32) -> Result<Self> {
        Ok(match coeffs_by_definition(dh7, n)? {
            None => CoeffSet::Degenerate { n },
            Some(c) => {
                let s = s_direct(dh49, n)?;
                CoeffSet::Coprime { n, n_prime: n % 7, c, s, c7: s.rem_euclid(7) as u8 }
            }
        })
    }

    pub fn n(&self) -> u32 {
        match *self {
            CoeffSet::Degenerate { n } | CoeffSet::Coprime { n, .. } => n,
        }
    }
}

/// `-1 + Σ_{i=3}^{7} c_i t^i` in `F_7[t]/(t^8)`; `-1` in the degenerate case.
pub fn predicted_residue(coeffs: &CoeffSet) -> Residue8 {
    match coeffs {
        CoeffSet::Degenerate { .. } => Residue8::MINUS_ONE,
        CoeffSet::Coprime { c, c7, .. } => {
            Residue8::from_ints([-1, 0, 0, c[2], c[3], c[4], c[5], *c7 as i64])
        }
    }
}

/// An exact rational, serialized as `[numerator, denominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(into = "[i64; 2]", try_from = "[i64; 2]"))]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    fn from_ratio(r: Q) -> Result<Self> {
        let num = i64::try_from(*r.numer()).map_err(|_| Error::Overflow)?;
        let den = i64::try_from(*r.denom()).map_err(|_| Error::Overflow)?;
        Ok(Frac { num, den })
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }

    /// Residue mod 7, defined when `7 ∤ den`.
    pub fn mod7(&self) -> Option<u8> {
        let d = self.den.rem_euclid(7);
        if d == 0 {
            return None;
        }
        let inv = (1..7).find(|i| i * d % 7 == 1)?;
        Some((self.num.rem_euclid(7) * inv % 7) as u8)
    }
}

impl From<Frac> for [i64; 2] {
    fn from(f: Frac) -> Self {
        [f.num, f.den]
    }
}

impl TryFrom<[i64; 2]> for Frac {
    type Error = Error;
    fn try_from([num, den]: [i64; 2]) -> Result<Self> {
        if den <= 0 {
            return Err(Error::input("denominator must be positive"));
        }
        Frac::from_ratio(Q::new(num as i128, den as i128))
    }
}

/// One closed-form row `c_{i,1}` compared with the definition.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClosedFormRow {
    pub i: u8,
    pub definition: i64,
    pub printed: Frac,
    pub printed_exact: bool,
    pub printed_mod7: bool,
    pub corrected: Frac,
    pub corrected_exact: bool,
    pub corrected_mod7: bool,
}

/// The `c_{7,1}` closed form compared with `S(1) mod 7`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeventhClosedForm {
    pub s_mod7: u8,
    pub printed: Frac,
    /// Printed value reduced mod 7 directly (false when `7 | den`).
    pub printed_mod7: bool,
    /// `28 c_7 ≡ R (mod 49)` reading, `R = -12p + 2x1 + 24 + 10x2 + 6x3 - 5x4 + 7x5`.
    pub printed_mod49_reading: bool,
    /// `(-(6p - x1 - 12) + 5x2 + 3x3 + x4) / 14`.
    pub corrected: Frac,
    pub corrected_mod7: bool,
}

/// Dickson–Hurwitz row `84 B(i,1)_7` in the sextuple, printed and corrected.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DHRow {
    pub i: u8,
    pub table: i64,
    pub printed_matches: bool,
    pub corrected_matches: bool,
}

/// Closed-form evaluations for `n = 1` in the Leonard–Williams sextuple.
///
/// The printed forms of rows 3, 4, 6, of `c_{7,1}` and of the `B(6,1)`
/// row do not agree with the definitions; the corrected forms do. Both are
/// evaluated so each certificate shows the outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClosedForms {
    pub dh_rows: Vec<DHRow>,
    pub rows: Vec<ClosedFormRow>,
    pub c7: SeventhClosedForm,
}

impl ClosedForms {
    /// The corrected forms agree with the definitional coefficients
    /// (`i = 3..=6` exactly and mod 7; `c_7` mod 7) and the corrected
    /// Dickson–Hurwitz rows reproduce the table.
    pub fn corrected_consistent(&self) -> bool {
        self.rows.iter().filter(|r| r.i >= 3).all(|r| r.corrected_exact && r.corrected_mod7)
            && self.c7.corrected_mod7
            && self.dh_rows.iter().all(|r| r.corrected_matches)
    }
}

/// `(6p - x1 - 12)`, which is always divisible by 7.
pub fn six_p_term(sol: &LWSolution, p: u64) -> i64 {
    6 * p as i64 - sol.x[0] - 12
}

pub fn closed_forms(sol: &LWSolution, p: u64, dh7: &DHTable, def: &[i64; 6], s1: i64) -> Result<ClosedForms> {
    let [x1, x2, x3, x4, x5, x6] = sol.x.map(|v| Q::from_integer(v as i128));
    let r = |a: i128, b: i128| Q::new(a, b);
    let int = |a: i64| Q::from_integer(a as i128);
    let pq = int(p as i64);
    let half_n = (int(6) * pq - x1 - int(12)) / int(2);
    let two = int(2);

    let lin_a = (x4 + int(3) * x3 + int(5) * x2) / two;
    let printed = [
        half_n - lin_a,
        r(5, 3) * half_n - int(3) * lin_a + (int(28) * x5 + int(42) * x6) / int(6),
        r(5, 3) * half_n - int(3) * (int(3) * x4 + int(10) * x3 + int(20) * x2) / two
            + (int(105) * x6 + int(70) * x5) / int(6),
        half_n - (x4 - int(5) * x3 - int(15) * x2) / two + (int(35) * x6 + int(21) * x5) / two,
        r(2, 6) * half_n - (x3 + int(6) * x2) / two + (int(105) * x6 + int(49) * x5) / int(12),
        r(2, 42) * half_n - (int(9) * x3 + int(14) * x2) / int(28) + (int(21) * x6 + int(7) * x5) / int(12),
    ];
    let mut corrected = printed;
    corrected[2] = r(5, 3) * half_n - (int(3) * x4 + int(10) * x3 + int(20) * x2) / two
        + (int(105) * x6 + int(70) * x5) / int(6);
    corrected[3] = half_n - (x4 + int(5) * x3 + int(15) * x2) / two + (int(35) * x6 + int(21) * x5) / two;
    corrected[5] = r(2, 42) * half_n - x2 / two + (int(21) * x6 + int(7) * x5) / int(12);

    let mut rows = Vec::with_capacity(6);
    for i in 0..6 {
        let d = int(def[i]);
        let pf = Frac::from_ratio(printed[i])?;
        let cf = Frac::from_ratio(corrected[i])?;
        let dm = def[i].rem_euclid(7) as u8;
        rows.push(ClosedFormRow {
            i: i as u8 + 1,
            definition: def[i],
            printed: pf,
            printed_exact: printed[i] == d,
            printed_mod7: pf.mod7() == Some(dm),
            corrected: cf,
            corrected_exact: corrected[i] == d,
            corrected_mod7: cf.mod7() == Some(dm),
        });
    }

    let s_mod7 = s1.rem_euclid(7) as u8;
    let c7_printed = -r(2, 14) * half_n
        + r(2, 14) * (int(3) * x3 + int(5) * x2) / two
        + (int(7) * x5 - int(5) * x4) / int(28);
    let c7_corrected = -r(2, 14) * half_n + r(2, 14) * (int(3) * x3 + int(5) * x2) / two + x4 / int(14);
    let [y1, y2, y3, y4, y5, _] = sol.x;
    let big_r = -12 * p as i64 + 2 * y1 + 24 + 10 * y2 + 6 * y3 - 5 * y4 + 7 * y5;
    let printed_mod49_reading = big_r % 7 == 0 && (4 * s1 - big_r / 7).rem_euclid(7) == 0;
    let c7p = Frac::from_ratio(c7_printed)?;
    let c7c = Frac::from_ratio(c7_corrected)?;
    let c7 = SeventhClosedForm {
        s_mod7,
        printed: c7p,
        printed_mod7: c7p.mod7() == Some(s_mod7),
        printed_mod49_reading,
        corrected: c7c,
        corrected_mod7: c7c.mod7() == Some(s_mod7),
    };

    let [z1, z2, z3, z4, z5, z6] = sol.x;
    let base = 12 * p as i64 - 24;
    let mut lhs = [
        12 * z1,
        -2 * z1 + 42 * z2 + 49 * z5 + 147 * z6,
        -2 * z1 + 42 * z3 + 49 * z5 - 147 * z6,
        -2 * z1 + 42 * z4 - 98 * z5,
        -2 * z1 - 42 * z4 - 98 * z5,
        -2 * z1 - 42 * z3 + 49 * z5 - 147 * z6,
        -2 * z1 - 42 * z3 + 49 * z5 + 147 * z6,
    ];
    let printed_dh = lhs;
    lhs[6] = -2 * z1 - 42 * z2 + 49 * z5 + 147 * z6;
    let dh_rows = (0..7)
        .map(|i| {
            let table = dh7.get(i as i64, 1);
            DHRow {
                i: i as u8,
                table,
                printed_matches: printed_dh[i] + base == 84 * table,
                corrected_matches: lhs[i] + base == 84 * table,
            }
        })
        .collect();

    Ok(ClosedForms { dh_rows, rows, c7 })
}

/// Agreement of the three routes to `J(1,n)_49`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JacobiPaths {
    pub direct_vs_cyclotomic: bool,
    pub direct_vs_dickson_hurwitz: bool,
}

/// The two (three for `n = 1`) routes to `S(n) mod 7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SPaths {
    pub direct: i64,
    pub direct_mod7: u8,
    pub floor_sum_mod7: u8,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoeffReport {
    pub definition: CoeffSet,
    pub closed_form: Option<ClosedForms>,
    pub s_paths: SPaths,
}

/// Verification record for one `(p, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CongruenceCert {
    pub p: u64,
    pub gamma: u64,
    pub n: u32,
    pub predicted: Residue8,
    pub actual: Residue8,
    #[cfg_attr(feature = "serde", serde(rename = "match"))]
    pub matched: bool,
    pub coeffs: CoeffReport,
    pub jacobi_paths: JacobiPaths,
    pub lw: LWSolution,
    pub tu: [i64; 2],
    pub classification: Kind,
    pub discrepancies: Vec<String>,
}

/// Everything computed for one prime `p ≡ 1 (mod 49)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeVerification {
    pub p: u64,
    pub gamma: u64,
    pub lw: LWSolution,
    pub tu: TUDecomp,
    pub diophantine: DiophantineReport,
    pub reconstruction: TableReconstruction,
    pub elementary_e7: ElementaryReport,
    pub classification: Classification,
    pub certificates: Vec<CongruenceCert>,
    /// Failures of required prime-level checks.
    pub discrepancies: Vec<String>,
}

impl PrimeVerification {
    pub fn all_matched(&self) -> bool {
        self.certificates.iter().all(|c| c.matched)
    }

    /// No mismatch and no required check failed.
    pub fn passed(&self) -> bool {
        self.all_matched()
            && self.discrepancies.is_empty()
            && self.certificates.iter().all(|c| c.discrepancies.is_empty())
    }
}

/// Order-7 data shared by the congruence pipeline and the classifier.
#[derive(Debug, Clone)]
pub struct SepticData {
    pub cyc7: CycNumTable,
    pub dh7: DHTable,
    pub sol: LWSolution,
    pub tu: TUDecomp,
}

impl SepticData {
    pub fn new(ctx: &FieldCtx) -> Result<Self> {
        let cyc7 = cyclotomic_numbers(ctx, Order::Seven)?;
        let dh7 = dickson_hurwitz(&cyc7);
        let sol = lw::lw_from_tables(&dh7)?;
        let tu = lw::tu_decompose(ctx.p())?;
        Ok(SepticData { cyc7, dh7, sol, tu })
    }
}

/// Order-49 data for `p ≡ 1 (mod 49)`.
#[derive(Debug, Clone)]
pub struct FortyNineData {
    pub cyc49: CycNumTable,
    pub dh49: DHTable,
}

impl FortyNineData {
    pub fn new(ctx: &FieldCtx) -> Result<Self> {
        let cyc49 = cyclotomic_numbers(ctx, Order::FortyNine)?;
        let dh49 = dickson_hurwitz(&cyc49);
        Ok(FortyNineData { cyc49, dh49 })
    }
}

fn require_prime_one_mod(p: u64, m: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    if p % m != 1 {
        return Err(Error::input(format!("{p} ≢ 1 (mod {m})")));
    }
    Ok(())
}

/// Runs the full pipeline for `p ≡ 1 (mod 49)` and every `n` in `ns`.
pub fn verify_prime(p: u64, gamma: Option<u64>, ns: &[u32]) -> Result<PrimeVerification> {
    require_prime_one_mod(p, 49)?;
    if let Some(&bad) = ns.iter().find(|&&n| n == 0 || n > 48) {
        return Err(Error::input(format!("n = {bad} outside 1..=48")));
    }
    let ctx = match gamma {
        Some(g) => FieldCtx::with_generator(p, g)?,
        None => FieldCtx::new(p)?,
    };
    let sep = SepticData::new(&ctx)?;
    let big = FortyNineData::new(&ctx)?;
    let mut discrepancies = Vec::new();
    let mut note = |ok: bool, msg: &str| {
        if !ok {
            discrepancies.push(String::from(msg));
        }
    };

    let dioph = lw::verify_diophantine(&sep.sol, p);
    note(dioph.norm, "sextuple violates the norm equation");
    note(dioph.aux1, "sextuple violates the first auxiliary equation");
    note(sep.sol.congruence_conditions(), "x1 ≢ 1 (mod 7) or x5 ± 3x6 odd");
    match lw::orbit(&sep.sol) {
        Ok(orb) => note(orb.iter().all(|s| s.satisfies_norm(p)), "orbit member off the norm surface"),
        Err(_) => note(false, "orbit map produced a half-integer"),
    }
    let reconstruction = lw::reconstruct_cyc7(&sep.sol, sep.tu, &sep.cyc7)?;
    note(reconstruction.table_matches, "order-7 table not reproduced from (x, t, u)");
    note(reconstruction.t_matches_decomposition, "t recovered from (0,0)_7 disagrees with p = t² + 7u²");
    note(sep.cyc7.symmetry_violations().is_empty(), "order-7 table breaks the six-fold symmetry");
    note(big.cyc49.symmetry_violations().is_empty(), "order-49 table breaks the six-fold symmetry");
    note(sep.dh7.identity_failures().is_empty(), "order-7 Dickson–Hurwitz identities fail");
    note(big.dh49.identity_failures().is_empty(), "order-49 Dickson–Hurwitz identities fail");
    let elementary_e7 = elementary_properties(&ctx, Order::Seven)?;
    note(elementary_e7.passed(), "elementary Jacobi-sum properties fail for e = 7");

    let j11 = jacobi_sum(&ctx, Order::FortyNine, 1, 1)?;
    let classification = artiad::classify_parts(&ctx, &sep, Some((&big, &j11)))?;
    for msg in artiad::required_failures(&classification) {
        discrepancies.push(msg);
    }

    let mut certificates = Vec::with_capacity(ns.len());
    for &n in ns {
        let direct = if n == 1 { j11.clone() } else { jacobi_sum(&ctx, Order::FortyNine, 1, n as i64)? };
        certificates.push(certificate(&ctx, &sep, &big, &direct, n, classification.kind)?);
    }
    Ok(PrimeVerification {
        p,
        gamma: ctx.gamma(),
        lw: sep.sol,
        tu: sep.tu,
        diophantine: dioph,
        reconstruction,
        elementary_e7,
        classification,
        certificates,
        discrepancies,
    })
}

fn certificate(
    ctx: &FieldCtx,
    sep: &SepticData,
    big: &FortyNineData,
    direct: &CycInt,
    n: u32,
    kind: Kind,
) -> Result<CongruenceCert> {
    let mut discrepancies = Vec::new();
    let coeffs = CoeffSet::build(&sep.dh7, &big.dh49, n)?;
    let s = s_direct(&big.dh49, n)?;
    let floor_sum = s_floor_sum(&sep.cyc7, n)?;
    let s_paths = SPaths {
        direct: s,
        direct_mod7: s.rem_euclid(7) as u8,
        floor_sum_mod7: floor_sum,
        agree: s.rem_euclid(7) as u8 == floor_sum,
    };
    if !s_paths.agree {
        discrepancies.push(format!("S({n}) ≢ floor-sum value (mod 7)"));
    }
    let closed_form = match (&coeffs, n) {
        (CoeffSet::Coprime { c, .. }, 1) => {
            let cf = closed_forms(&sep.sol, ctx.p(), &sep.dh7, c, s)?;
            if !cf.corrected_consistent() {
                discrepancies.push(String::from("corrected closed forms disagree with the definition"));
            }
            Some(cf)
        }
        _ => None,
    };
    let jacobi_paths = JacobiPaths {
        direct_vs_cyclotomic: jacobi_from_cyc(&big.cyc49, 1, n as i64)? == *direct,
        direct_vs_dickson_hurwitz: jacobi_via_dh(&big.dh49, n as i64)? == *direct,
    };
    if !(jacobi_paths.direct_vs_cyclotomic && jacobi_paths.direct_vs_dickson_hurwitz) {
        discrepancies.push(format!("J(1,{n})_49 routes disagree"));
    }
    let actual = direct.residue_mod_t8()?;
    if actual.0[0] != 6 {
        discrepancies.push(format!("J(1,{n})_49 ≢ -1 (mod 1 - ζ)"));
    }
    let predicted = predicted_residue(&coeffs);
    Ok(CongruenceCert {
        p: ctx.p(),
        gamma: ctx.gamma(),
        n,
        predicted,
        actual,
        matched: predicted == actual,
        coeffs: CoeffReport { definition: coeffs, closed_form, s_paths },
        jacobi_paths,
        lw: sep.sol,
        tu: sep.tu.to_array(),
        classification: kind,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dh7(p: u64) -> DHTable {
        dickson_hurwitz(&cyclotomic_numbers(&FieldCtx::new(p).unwrap(), Order::Seven).unwrap())
    }

    #[test]
    fn definition_examples() {
        let dh = dh7(197);
        let c = coeffs_by_definition(&dh, 1).unwrap().unwrap();
        assert_eq!(c[5], dh.get(6, 1));
        assert_eq!(c[2], dh.get(3, 1) + 4 * dh.get(4, 1) + 10 * dh.get(5, 1) + 20 * dh.get(6, 1));
        assert_eq!(c, [609, 1022, 1012, 603, 203, 30]);
        assert_eq!(coeffs_by_definition(&dh, 14).unwrap(), None);
        let c9 = coeffs_by_definition(&dh, 9).unwrap().unwrap();
        assert_eq!(c9[5], dh.get(6, 2));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_h(1, 1), -1);
        assert_eq!(class_representatives(), [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4)]);
    }

    #[test]
    fn lambda_is_a_class_function() {
        for np in 1..7 {
            for (h, k) in class_representatives() {
                let w = lambda_hk(np, h, k);
                for (a, b) in symmetry_orbit(7, h, k) {
                    assert_eq!(lambda_hk(np, a as i64, b as i64), w, "n' = {np}, ({h},{k}) ~ ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn predicted_examples() {
        let zero = CoeffSet::Coprime { n: 1, n_prime: 1, c: [0; 6], s: 0, c7: 0 };
        assert_eq!(predicted_residue(&zero), Residue8::MINUS_ONE);
        assert_eq!(predicted_residue(&CoeffSet::Degenerate { n: 7 }), Residue8::MINUS_ONE);
        let c3 = CoeffSet::Coprime { n: 1, n_prime: 1, c: [0, 0, 1, 0, 0, 0], s: 0, c7: 0 };
        assert_eq!(predicted_residue(&c3), Residue8([6, 0, 0, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn frac_mod7() {
        assert_eq!(Frac { num: 3, den: 2 }.mod7(), Some(5));
        assert_eq!(Frac { num: -1, den: 1 }.mod7(), Some(6));
        assert_eq!(Frac { num: 1, den: 14 }.mod7(), None);
    }

    #[test]
    fn verify_197() {
        let v = verify_prime(197, None, &[1, 7]).unwrap();
        assert!(v.passed(), "{:?}", v.discrepancies);
        assert_eq!(v.certificates[1].actual, Residue8::MINUS_ONE);
        let cf = v.certificates[0].coeffs.closed_form.as_ref().unwrap();
        assert!(cf.corrected_consistent());
        // rows 1, 2, 5 hold as printed; 3, 4, 6 only after correction
        let printed: Vec<bool> = cf.rows.iter().map(|r| r.printed_exact).collect();
        assert_eq!(printed, [true, true, false, false, true, false]);
        assert!(!cf.dh_rows[6].printed_matches);
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(matches!(verify_prime(196, None, &[1]), Err(Error::Input(_))));
        assert!(matches!(verify_prime(29, None, &[1]), Err(Error::Input(_))));
        assert!(matches!(verify_prime(197, None, &[49]), Err(Error::Input(_))));
        assert!(matches!(verify_prime(197, Some(4), &[1]), Err(Error::Input(_))));
    }
}
