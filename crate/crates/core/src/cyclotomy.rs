//! Cyclotomic numbers, Jacobi sums and Dickson–Hurwitz sums of order `e`.
//!
//! Conventions: `χ(γ^k) = ζ^k` and `χ^i(0) = 0` for every `i`, including
//! `i ≡ 0`. Two Jacobi sums are provided:
//!
//! * [`jacobi_sum`]: `J(i,j) = Σ_v χ^i(v) χ^j(1 + v)`
//! * [`jacobi_sum_variant`]: `J(χ^i, χ^j) = Σ_v χ^i(v) χ^j(1 - v)`
//!
//! related by `J(i,j) = χ^i(-1) J(χ^i, χ^j)`.
//!
//! `J(a,b)` can be obtained three ways (direct sum, from the cyclotomic
//! numbers, from the Dickson–Hurwitz sums when `b = 1` or `a = 1`); all three
//! are public so that certificates can compare them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{CycInt, Order};
use crate::{Error, FieldCtx, Result};

/// Exponent of `ζ` in `χ^i(a) χ^j(b)`, or `None` when the product vanishes
/// (`a ≡ 0` or `b ≡ 0`, whatever `i`, `j`).
///
/// This is the one place that encodes `χ^i(0) = 0`.
#[inline]
fn char_pair_exponent(ctx: &FieldCtx, e: u64, i: u64, a: u64, j: u64, b: u64) -> Option<usize> {
    let p = ctx.p();
    let (a, b) = (a % p, b % p);
    if a == 0 || b == 0 {
        return None;
    }
    let ia = ctx.ind_raw(a as usize) as u64 % e;
    let jb = ctx.ind_raw(b as usize) as u64 % e;
    Some(((i * ia + j * jb) % e) as usize)
}

fn reduce_index(x: i64, e: usize) -> u64 {
    x.rem_euclid(e as i64) as u64
}

/// `J(i,j)_e = Σ_v χ^i(v) χ^j(1 + v)`.
pub fn jacobi_sum(ctx: &FieldCtx, order: Order, i: i64, j: i64) -> Result<CycInt> {
    let e = order.e();
    ctx.f(e as u64)?;
    let (i, j) = (reduce_index(i, e), reduce_index(j, e));
    let mut raw = vec![0i64; e];
    for v in 1..ctx.p() {
        if let Some(k) = char_pair_exponent(ctx, e as u64, i, v, j, v + 1) {
            raw[k] += 1;
        }
    }
    CycInt::from_redundant(order, raw)
}

/// `J(χ^i, χ^j)_e = Σ_v χ^i(v) χ^j(1 - v)`.
pub fn jacobi_sum_variant(ctx: &FieldCtx, order: Order, i: i64, j: i64) -> Result<CycInt> {
    let e = order.e();
    ctx.f(e as u64)?;
    let (i, j) = (reduce_index(i, e), reduce_index(j, e));
    let p = ctx.p();
    let mut raw = vec![0i64; e];
    for v in 1..p {
        if let Some(k) = char_pair_exponent(ctx, e as u64, i, v, j, p + 1 - v) {
            raw[k] += 1;
        }
    }
    CycInt::from_redundant(order, raw)
}

/// `χ^i(-1)` as an element of `Z[ζ_e]`.
pub fn chi_minus_one(ctx: &FieldCtx, order: Order, i: i64) -> Result<CycInt> {
    let ind = ctx.index_of(-1)? as i64;
    Ok(CycInt::zeta_pow(order, i.rem_euclid(order.e() as i64) * ind))
}

/// The six index pairs identified by the symmetries of cyclotomic numbers
/// when `f` is even: `(i,j) = (j,i) = (i-j,-j) = (j-i,-i) = (-i,j-i) = (-j,i-j)`.
pub fn symmetry_orbit(e: usize, i: i64, j: i64) -> [(usize, usize); 6] {
    let r = |x: i64| x.rem_euclid(e as i64) as usize;
    [(r(i), r(j)), (r(j), r(i)), (r(i - j), r(-j)), (r(j - i), r(-i)), (r(-i), r(j - i)), (r(-j), r(i - j))]
}

/// The `e × e` cyclotomic numbers `(i,j)_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycNumTable {
    pub order: Order,
    pub p: u64,
    pub gamma: u64,
    counts: Vec<Vec<i64>>,
}

impl CycNumTable {
    pub fn from_counts(order: Order, p: u64, gamma: u64, counts: Vec<Vec<i64>>) -> Result<Self> {
        let e = order.e();
        if counts.len() != e || counts.iter().any(|r| r.len() != e) {
            return Err(Error::input(format!("cyclotomic table must be {e}×{e}")));
        }
        Ok(CycNumTable { order, p, gamma, counts })
    }

    pub fn e(&self) -> usize {
        self.order.e()
    }

    /// `(i,j)_e` with indices taken mod `e`.
    pub fn get(&self, i: i64, j: i64) -> i64 {
        let e = self.e() as i64;
        self.counts[i.rem_euclid(e) as usize][j.rem_euclid(e) as usize]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.counts
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().flatten().sum()
    }

    /// Cells violating the six-fold symmetry (only meaningful for even `f`).
    pub fn symmetry_violations(&self) -> Vec<(usize, usize)> {
        let e = self.e();
        let mut bad = Vec::new();
        for i in 0..e {
            for j in 0..e {
                let v = self.counts[i][j];
                if symmetry_orbit(e, i as i64, j as i64).iter().any(|&(a, b)| self.counts[a][b] != v) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }
}

/// `(i,j)_e = #{v : ind v ≡ i, ind(v+1) ≡ j (mod e)}` by one pass over `F_p`.
pub fn cyclotomic_numbers(ctx: &FieldCtx, order: Order) -> Result<CycNumTable> {
    let e = order.e();
    ctx.f(e as u64)?;
    let mut counts = vec![vec![0i64; e]; e];
    let p = ctx.p() as usize;
    for v in 1..p - 1 {
        let i = ctx.ind_raw(v) as usize % e;
        let j = ctx.ind_raw(v + 1) as usize % e;
        counts[i][j] += 1;
    }
    Ok(CycNumTable { order, p: ctx.p(), gamma: ctx.gamma(), counts })
}

/// `J(a,b)_e = Σ_{i,j} (i,j)_e ζ^{ai + bj}`.
pub fn jacobi_from_cyc(cyc: &CycNumTable, a: i64, b: i64) -> Result<CycInt> {
    let e = cyc.e();
    let (a, b) = (reduce_index(a, e) as usize, reduce_index(b, e) as usize);
    let mut raw = vec![0i64; e];
    for (i, row) in cyc.counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            raw[(a * i + b * j) % e] += c;
        }
    }
    CycInt::from_redundant(cyc.order, raw)
}

/// All `J(i,j)_e` from the cyclotomic numbers, indexed `[i][j]`.
pub fn all_jacobi_from_cyc(cyc: &CycNumTable) -> Result<Vec<Vec<CycInt>>> {
    let e = cyc.e() as i64;
    (0..e).map(|i| (0..e).map(|j| jacobi_from_cyc(cyc, i, j)).collect()).collect()
}

/// All `J(i,j)_e` by direct character sums, indexed `[i][j]`.
pub fn all_jacobi_direct(ctx: &FieldCtx, order: Order) -> Result<Vec<Vec<CycInt>>> {
    let e = order.e() as i64;
    (0..e).map(|i| (0..e).map(|j| jacobi_sum(ctx, order, i, j)).collect()).collect()
}

/// Inverse transform: `(a,b)_e = e^{-2} Σ_{i,j} ζ^{-(ai+bj)} J(i,j)_e`.
///
/// The sum must collapse to a rational integer divisible by `e^2`; anything
/// else is reported as an identity violation.
pub fn cyc_from_jacobi(all_j: &[Vec<CycInt>], a: i64, b: i64) -> Result<i64> {
    let e = all_j.len();
    let order = Order::from_e(e as u64)?;
    let mut raw = vec![0i64; e];
    for (i, row) in all_j.iter().enumerate() {
        for (j, jac) in row.iter().enumerate() {
            let shift =
                (e - (a.rem_euclid(e as i64) as usize * i + b.rem_euclid(e as i64) as usize * j) % e) % e;
            for (k, &c) in jac.coeffs().iter().enumerate() {
                let slot = &mut raw[(k + shift) % e];
                *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
    }
    let total = CycInt::from_redundant(order, raw)?;
    let e2 = (e * e) as i64;
    match total.as_integer() {
        Some(n) if n % e2 == 0 => Ok(n / e2),
        _ => Err(Error::invariant(format!(
            "Σ ζ^-(ai+bj) J(i,j) at ({a},{b}) is {total:?}, not a multiple of {e2}"
        ))),
    }
}

/// Dickson–Hurwitz sums `B(i,j)_e = Σ_h (h, i - jh)_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DHTable {
    pub order: Order,
    pub p: u64,
    pub gamma: u64,
    b: Vec<Vec<i64>>,
}

impl DHTable {
    pub fn e(&self) -> usize {
        self.order.e()
    }

    pub fn get(&self, i: i64, j: i64) -> i64 {
        let e = self.e() as i64;
        self.b[i.rem_euclid(e) as usize][j.rem_euclid(e) as usize]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn f(&self) -> u64 {
        (self.p - 1) / self.e() as u64
    }

    /// Failures of `B(i,j) = B(i,-1-j)`, the `B(i,0)` values and the column
    /// sums `Σ_i B(i,j) = p - 2`.
    pub fn identity_failures(&self) -> Vec<String> {
        let e = self.e() as i64;
        let f = self.f() as i64;
        let mut out = Vec::new();
        for i in 0..e {
            for j in 0..e {
                if self.get(i, j) != self.get(i, -1 - j) {
                    out.push(format!("B({i},{j}) ≠ B({i},{})", (-1 - j).rem_euclid(e)));
                }
            }
            let want = if i == 0 { f - 1 } else { f };
            if self.get(i, 0) != want {
                out.push(format!("B({i},0) = {} ≠ {want}", self.get(i, 0)));
            }
        }
        for j in 0..e {
            let s: i64 = (0..e).map(|i| self.get(i, j)).sum();
            if s != self.p as i64 - 2 {
                out.push(format!("Σ_i B(i,{j}) = {s} ≠ p - 2"));
            }
        }
        out
    }
}

pub fn dickson_hurwitz(cyc: &CycNumTable) -> DHTable {
    let e = cyc.e() as i64;
    let b = (0..e).map(|i| (0..e).map(|j| (0..e).map(|h| cyc.get(h, i - j * h)).sum()).collect()).collect();
    DHTable { order: cyc.order, p: cyc.p, gamma: cyc.gamma, b }
}

/// `J(1,j)_e = Σ_i B(i,j)_e ζ^i`, valid when `f` is even.
pub fn jacobi_via_dh(dh: &DHTable, j: i64) -> Result<CycInt> {
    if dh.f() % 2 != 0 {
        return Err(Error::Unsupported(format!("f = {} is odd", dh.f())));
    }
    let raw = (0..dh.e() as i64).map(|i| dh.get(i, j)).collect();
    CycInt::from_redundant(dh.order, raw)
}

/// Outcome of the elementary Jacobi-sum properties over all index pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ElementaryReport {
    pub pairs: usize,
    pub modulus_checked: usize,
    pub failures: Vec<String>,
}

impl ElementaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every `(i,j)`:
///
/// 1. `J(χ^0, χ^0) = p - 2`;
/// 2. exactly one index `≡ 0` gives `-1`;
/// 3. `i ≢ 0`, `i + j ≡ 0` gives `-χ^i(-1)`;
/// 4. `J(χ^i,χ^j) = J(χ^j,χ^i) = χ^i(-1) J(χ^{-i-j}, χ^i)`;
/// 5. `J · σ_{-1}(J) = p` when `e ∤ i, j, i + j`;
///
/// plus the convention link `J(i,j) = χ^i(-1) J(χ^i,χ^j)` and, for even
/// `f`, the six-way equality `J(i,j) = J(j,i) = J(-i-j,j) = ...`.
pub fn elementary_properties(ctx: &FieldCtx, order: Order) -> Result<ElementaryReport> {
    let e = order.e() as i64;
    let f = ctx.f(e as u64)?;
    let p = ctx.p() as i64;
    let variant: Vec<Vec<CycInt>> = (0..e)
        .map(|i| (0..e).map(|j| jacobi_sum_variant(ctx, order, i, j)).collect())
        .collect::<Result<_>>()?;
    let plain = all_jacobi_direct(ctx, order)?;
    let chi_m1: Vec<CycInt> = (0..e).map(|i| chi_minus_one(ctx, order, i)).collect::<Result<_>>()?;
    let v = |i: i64, j: i64| &variant[i.rem_euclid(e) as usize][j.rem_euclid(e) as usize];
    let jj = |i: i64, j: i64| &plain[i.rem_euclid(e) as usize][j.rem_euclid(e) as usize];

    let mut failures = Vec::new();
    let mut modulus_checked = 0;
    let mut fail = |ok: bool, msg: String| {
        if !ok {
            failures.push(msg);
        }
    };
    for i in 0..e {
        for j in 0..e {
            let vij = v(i, j);
            let ci = &chi_m1[i as usize];
            match (i == 0, j == 0) {
                (true, true) => {
                    fail(vij.as_integer() == Some(p - 2), format!("trivial pair: J(χ^0,χ^0) = {vij:?}"))
                }
                (true, false) | (false, true) => {
                    fail(vij.as_integer() == Some(-1), format!("one trivial index: J(χ^{i},χ^{j}) = {vij:?}"))
                }
                _ => {}
            }
            if i != 0 && (i + j) % e == 0 {
                fail(*vij == ci.checked_neg()?, format!("opposite indices: J(χ^{i},χ^{j}) = {vij:?}"));
            }
            fail(vij == v(j, i), format!("reflection: J(χ^{i},χ^{j}) ≠ J(χ^{j},χ^{i})"));
            fail(
                *vij == ci.checked_mul(v(-i - j, i))?,
                format!("reflection: J(χ^{i},χ^{j}) ≠ χ^{i}(-1) J(χ^{},χ^{i})", (-i - j).rem_euclid(e)),
            );
            if i != 0 && j != 0 && (i + j) % e != 0 {
                let norm = vij.checked_mul(&vij.apply_automorphism(-1)?)?;
                fail(norm.as_integer() == Some(p), format!("modulus: |J(χ^{i},χ^{j})|² = {norm:?}"));
                modulus_checked += 1;
            }
            fail(*jj(i, j) == ci.checked_mul(vij)?, format!("J({i},{j}) ≠ χ^{i}(-1) J(χ^{i},χ^{j})"));
            if f % 2 == 0 {
                let x = jj(i, j);
                let k = -i - j;
                let same = [jj(j, i), jj(k, j), jj(j, k), jj(k, i), jj(i, k)];
                fail(same.iter().all(|y| *y == x), format!("six-way equality at J({i},{j})"));
            }
        }
    }
    Ok(ElementaryReport { pairs: (e * e) as usize, modulus_checked, failures })
}
