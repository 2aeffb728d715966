//! Septic artiad and hyperartiad primes.
//!
//! A prime `p = 14s + 1` is artiad when every root of `x³ + x² - 2x - 1`
//! modulo `p` is a seventh power, equivalently `x2 ≡ x3 ≡ x4 ≡ 0 (mod 7)` in
//! the Leonard–Williams sextuple. It is hyperartiad when in addition 7 is a
//! seventh power.
//!
//! [`classify`] decides the kind from the sextuple and the intrinsic
//! residuosity of 7, and records every other criterion as evidence. For
//! `p ≡ 1 (mod 49)` this includes the coefficient conditions on `c_{i,1}` and
//! the simplified congruences for `J(1,1)_49`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::congruence::{coeffs_by_definition, s_direct, six_p_term, FortyNineData, SepticData};
use crate::cyclotomy::{jacobi_sum, CycNumTable};
use crate::lw::LWSolution;
use crate::prime_field::{is_prime, pow_mod};
use crate::ring::{CycInt, Order, Residue8};
use crate::{Error, FieldCtx, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Kind {
    Ordinary,
    Artiad,
    Hyperartiad,
}

impl Kind {
    pub fn is_artiad(self) -> bool {
        self != Kind::Ordinary
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Artiad => "artiad",
            Kind::Hyperartiad => "hyperartiad",
        }
    }
}

/// `x2 ≡ x3 ≡ x4 ≡ 0 (mod 7)`.
pub fn classify_via_x(sol: &LWSolution) -> bool {
    sol.x[1..4].iter().all(|v| v % 7 == 0)
}

/// Roots of `x³ + x² - 2x - 1` modulo `p`, by full scan.
pub fn cubic_roots(p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| {
            let x2 = x * x % p;
            let x3 = x2 * x % p;
            (x3 + x2 + 2 * (p - x) + (p - 1)) % p == 0
        })
        .collect()
}

/// Whether all three roots of the cubic are seventh powers.
pub fn classify_via_cubic(ctx: &FieldCtx) -> Result<bool> {
    let p = ctx.p();
    let roots = cubic_roots(p);
    if roots.len() != 3 {
        return Err(Error::invariant(format!("cubic has {} roots mod {p}", roots.len())));
    }
    let prod = roots.iter().fold(1u64, |acc, &r| acc * r % p);
    if prod != 1 {
        return Err(Error::invariant(format!("root product {prod} ≠ 1 mod {p}")));
    }
    roots.iter().try_fold(true, |all, &r| Ok(all && ctx.is_seventh_power_residue(r as i64)?))
}

/// `ind_γ 7 mod 7` from `(p-1)/2 - Σ_h h·(h,0)_7`.
pub fn ind7_muskat(cyc7: &CycNumTable) -> u8 {
    let s: i64 = (0..7).map(|h| h * cyc7.get(h, 0)).sum();
    (((cyc7.p as i64 - 1) / 2 - s).rem_euclid(7)) as u8
}

/// `28·ind_γ 7 ≡ x2 - 19x3 - 18x4 (mod 49)` with the full integer index.
pub fn ind7_mod49_relation(sol: &LWSolution, ctx: &FieldCtx) -> Result<bool> {
    let ind = ctx.index_of(7)? as i128;
    let [_, x2, x3, x4, _, _] = sol.x.map(|v| v as i128);
    Ok((28 * ind - (x2 - 19 * x3 - 18 * x4)).rem_euclid(49) == 0)
}

/// The three coefficient conditions characterizing artiad primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoeffConditions {
    /// `c_{1,1} ≡ ... ≡ c_{5,1} ≡ 0 (mod 7)`.
    pub low_vanish: bool,
    /// `12 c_{6,1} ≡ (4/7)(6p - x1 - 12)/2 = 2(6p - x1 - 12)/7 (mod 7)`.
    pub sixth: bool,
    /// `4 c_{7,1} - 4 ind_γ 7 ≡ -12 c_{6,1} + x5 (mod 7)`.
    pub seventh: bool,
    /// The seventh condition without the index term.
    pub seventh_without_index: bool,
}

impl CoeffConditions {
    pub fn artiad(&self) -> bool {
        self.low_vanish && self.sixth && self.seventh
    }

    pub fn hyperartiad(&self) -> bool {
        self.low_vanish && self.sixth && self.seventh_without_index
    }
}

/// `c` is `c_{1,1}..=c_{6,1}`, `c7 = S(1) mod 7`, `ind7` the index of 7.
pub fn coeff_conditions(
    c: &[i64; 6],
    c7: i64,
    sol: &LWSolution,
    ind7: i64,
    p: u64,
) -> Result<CoeffConditions> {
    let n = six_p_term(sol, p);
    if n % 7 != 0 {
        return Err(Error::invariant(format!("(6p - x1 - 12)/2 = {n}/2 is not divisible by 7")));
    }
    let m7 = |v: i64| v.rem_euclid(7);
    let rhs7 = -12 * c[5] + sol.x[4];
    Ok(CoeffConditions {
        low_vanish: c[..5].iter().all(|&v| m7(v) == 0),
        sixth: m7(12 * c[5] - 2 * (n / 7)) == 0,
        seventh: m7(4 * c7 - 4 * ind7 - rhs7) == 0,
        seventh_without_index: m7(4 * c7 - rhs7) == 0,
    })
}

/// The simplified forms of `J(1,1)_49 mod (1 - ζ)^8` compared with the
/// actual residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SimplifiedCongruence {
    pub actual: Residue8,
    /// `-1 + c6 t^6 + (-3c6 + ind_γ 7 + 2x5) t^7`.
    pub artiad_form: Residue8,
    /// `-1 + c6 t^6 + (-3c6 + 2x5) t^7`.
    pub hyperartiad_form: Residue8,
    /// `-1 + c6 t^6 + (-3c6 + ind_γ 7 + (4x2 + x3 - 2x4)/7) t^7`, defined
    /// when the division is exact.
    pub corrected_artiad_form: Option<Residue8>,
    /// `t^3, t^4, t^5` coefficients of the actual residue vanish.
    pub middle_vanishes: bool,
    /// Artiad form matches exactly when artiad, and the hyperartiad form
    /// exactly when hyperartiad.
    pub consistent: bool,
    /// Same with the corrected artiad form.
    pub corrected_consistent: bool,
}

pub fn simplified_congruence(
    actual: Residue8,
    c6: i64,
    ind7: i64,
    sol: &LWSolution,
    kind: Kind,
) -> SimplifiedCongruence {
    let [_, x2, x3, x4, x5, _] = sol.x;
    let form = |t7: i64| Residue8::from_ints([-1, 0, 0, 0, 0, 0, c6, t7]);
    let artiad_form = form(-3 * c6 + ind7 + 2 * x5);
    let hyperartiad_form = form(-3 * c6 + 2 * x5);
    let w = 4 * x2 + x3 - 2 * x4;
    let corrected_artiad_form = (w % 7 == 0).then(|| form(-3 * c6 + ind7 + w / 7));
    let hyper = kind == Kind::Hyperartiad;
    let hyper_ok = (hyperartiad_form == actual) == hyper;
    SimplifiedCongruence {
        actual,
        artiad_form,
        hyperartiad_form,
        corrected_artiad_form,
        middle_vanishes: actual.0[3..6] == [0, 0, 0],
        consistent: (artiad_form == actual) == kind.is_artiad() && hyper_ok,
        corrected_consistent: (corrected_artiad_form == Some(actual)) == kind.is_artiad() && hyper_ok,
    }
}

/// Per-criterion outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Evidence {
    pub via_x: bool,
    pub via_cubic: bool,
    /// `ind_γ 7 mod 7` by discrete logarithm.
    pub ind7: u8,
    pub ind7_zero: bool,
    /// `ind_γ 7 mod 7` from order-7 cyclotomic numbers.
    pub ind7_from_cyclotomy: u8,
    pub ind7_mod49_relation: bool,
    /// Present when `p ≡ 1 (mod 49)`.
    pub coeff_conditions: Option<CoeffConditions>,
    /// The coefficient conditions agree with the artiad verdict.
    pub artiad_conditions: Option<bool>,
    /// The index-free coefficient conditions agree with the hyperartiad verdict.
    pub hyperartiad_conditions: Option<bool>,
    pub simplified_congruence: Option<SimplifiedCongruence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub p: u64,
    pub gamma: u64,
    pub kind: Kind,
    pub evidence: Evidence,
}

/// Messages for every criterion that disagrees with the verdict.
pub fn required_failures(cls: &Classification) -> Vec<String> {
    let ev = &cls.evidence;
    let mut out = Vec::new();
    let mut check = |ok: bool, msg: &str| {
        if !ok {
            out.push(String::from(msg));
        }
    };
    check(ev.via_x == ev.via_cubic, "sextuple and cubic-root criteria disagree");
    check(ev.ind7 == ev.ind7_from_cyclotomy, "ind_γ 7 from cyclotomic numbers differs from the discrete log");
    check(ev.ind7_mod49_relation, "28·ind_γ 7 ≢ x2 - 19x3 - 18x4 (mod 49)");
    check(ev.artiad_conditions != Some(false), "coefficient conditions disagree with the artiad verdict");
    check(
        ev.hyperartiad_conditions != Some(false),
        "index-free coefficient conditions disagree with the hyperartiad verdict",
    );
    if let Some(sc) = &ev.simplified_congruence {
        check(sc.consistent, "simplified congruence for J(1,1)_49 disagrees with the verdict");
        check(
            !cls.kind.is_artiad() || sc.middle_vanishes,
            "t^3..t^5 coefficients of J(1,1)_49 do not vanish",
        );
    }
    out
}

/// Classification from precomputed data; `big` carries the order-49 tables
/// and `J(1,1)_49` when `p ≡ 1 (mod 49)`.
pub fn classify_parts(
    ctx: &FieldCtx,
    sep: &SepticData,
    big: Option<(&FortyNineData, &CycInt)>,
) -> Result<Classification> {
    let p = ctx.p();
    let via_x = classify_via_x(&sep.sol);
    let ind7_full = ctx.index_of(7)? as i64;
    let ind7 = ind7_full.rem_euclid(7) as u8;
    let kind = match (via_x, ind7 == 0) {
        (false, _) => Kind::Ordinary,
        (true, false) => Kind::Artiad,
        (true, true) => Kind::Hyperartiad,
    };
    let mut evidence = Evidence {
        via_x,
        via_cubic: classify_via_cubic(ctx)?,
        ind7,
        ind7_zero: ind7 == 0,
        ind7_from_cyclotomy: ind7_muskat(&sep.cyc7),
        ind7_mod49_relation: ind7_mod49_relation(&sep.sol, ctx)?,
        coeff_conditions: None,
        artiad_conditions: None,
        hyperartiad_conditions: None,
        simplified_congruence: None,
    };
    if let Some((data, j11)) = big {
        let c = coeffs_by_definition(&sep.dh7, 1)?
            .ok_or_else(|| Error::invariant("n = 1 gave the degenerate case"))?;
        let c7 = s_direct(&data.dh49, 1)?.rem_euclid(7);
        let cond = coeff_conditions(&c, c7, &sep.sol, ind7 as i64, p)?;
        evidence.artiad_conditions = Some(cond.artiad() == kind.is_artiad());
        evidence.hyperartiad_conditions = Some(cond.hyperartiad() == (kind == Kind::Hyperartiad));
        evidence.coeff_conditions = Some(cond);
        let actual = j11.residue_mod_t8()?;
        evidence.simplified_congruence =
            Some(simplified_congruence(actual, c[5], ind7 as i64, &sep.sol, kind));
    }
    Ok(Classification { p, gamma: ctx.gamma(), kind, evidence })
}

/// Classifies `p ≡ 1 (mod 14)`; adds the order-49 evidence when
/// `p ≡ 1 (mod 49)`.
pub fn classify(p: u64, gamma: Option<u64>) -> Result<Classification> {
    if !is_prime(p) || p % 14 != 1 {
        return Err(Error::input(format!("{p} is not a prime ≡ 1 (mod 14)")));
    }
    let ctx = match gamma {
        Some(g) => FieldCtx::with_generator(p, g)?,
        None => FieldCtx::new(p)?,
    };
    let sep = SepticData::new(&ctx)?;
    if p % 49 == 1 {
        let big = FortyNineData::new(&ctx)?;
        let j11 = jacobi_sum(&ctx, Order::FortyNine, 1, 1)?;
        classify_parts(&ctx, &sep, Some((&big, &j11)))
    } else {
        classify_parts(&ctx, &sep, None)
    }
}

/// Whether 7 is a seventh power mod `p`, independent of any generator.
pub fn seven_is_seventh_power(p: u64) -> bool {
    pow_mod(7, (p - 1) / 7, p) == 1
}
