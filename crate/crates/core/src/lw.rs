//! The Leonard–Williams parametrization of order-7 cyclotomy.
//!
//! For `p ≡ 1 (mod 7)` the sextuple `(x1, ..., x6)` satisfies
//! `72p = 2x1² + 42(x2² + x3² + x4²) + 343(x5² + 3x6²)`, and together with
//! `p = t² + 7u²` it determines every cyclotomic number of order 7.
//!
//! The sextuple is never searched for: it is read off the coefficients of
//! `J(1,1)_7` computed from the γ-attached tables, so it is the solution
//! matched to the chosen generator.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomy::{symmetry_orbit, CycNumTable, DHTable};
use crate::ring::Order;
use crate::{Error, Result};

/// `p = t² + 7u²` with `t ≡ 1 (mod 7)` and `u > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TUDecomp {
    pub t: i64,
    pub u: i64,
}

impl TUDecomp {
    pub fn to_array(self) -> [i64; 2] {
        [self.t, self.u]
    }
}

fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

pub fn tu_decompose(p: u64) -> Result<TUDecomp> {
    if p % 7 != 1 {
        return Err(Error::input(format!("{p} ≢ 1 (mod 7)")));
    }
    let mut u = 1u64;
    while 7 * u * u < p {
        let r = p - 7 * u * u;
        let s = isqrt(r);
        if s * s == r {
            let s = s as i64;
            let t = if s.rem_euclid(7) == 1 { s } else { -s };
            if t.rem_euclid(7) == 1 {
                return Ok(TUDecomp { t, u: u as i64 });
            }
        }
        u += 1;
    }
    Err(Error::invariant(format!("no representation {p} = t² + 7u² found")))
}

/// A solution `(x1, ..., x6)`; `x[0]` is `x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct LWSolution {
    pub x: [i64; 6],
}

impl LWSolution {
    pub fn new(x: [i64; 6]) -> Self {
        LWSolution { x }
    }

    /// `72p = 2x1² + 42(x2² + x3² + x4²) + 343(x5² + 3x6²)`.
    pub fn satisfies_norm(&self, p: u64) -> bool {
        let [x1, x2, x3, x4, x5, x6] = self.x.map(|v| v as i128);
        72 * p as i128 == 2 * x1 * x1 + 42 * (x2 * x2 + x3 * x3 + x4 * x4) + 343 * (x5 * x5 + 3 * x6 * x6)
    }

    /// `x1 ≡ 1 (mod 7)` and `x5 ± 3x6` even.
    pub fn congruence_conditions(&self) -> bool {
        let [x1, _, _, _, x5, x6] = self.x;
        x1.rem_euclid(7) == 1 && (x5 + 3 * x6) % 2 == 0 && (x5 - 3 * x6) % 2 == 0
    }
}

fn halve(v: i64) -> Result<i64> {
    if v % 2 != 0 {
        return Err(Error::invariant(format!("half-integer {v}/2 in orbit map")));
    }
    Ok(v / 2)
}

/// `[X1 = sol, X2, ..., X6]`, the images of `sol` under `ζ ↦ ζ^k` for
/// `k = 1, 4, 5, 2, 3, 6` acting on `J(1,1)_7`. In particular
/// `X2 = (x1, x3, -x4, -x2, -(x5 + 3x6)/2, (x5 - x6)/2)`.
pub fn orbit(sol: &LWSolution) -> Result<[LWSolution; 6]> {
    let [x1, x2, x3, x4, x5, x6] = sol.x;
    let a = halve(-(x5 + 3 * x6))?;
    let b = halve(x5 - x6)?;
    let c = halve(-(x5 - 3 * x6))?;
    let d = halve(-(x5 + x6))?;
    Ok([
        *sol,
        LWSolution::new([x1, x3, -x4, -x2, a, b]),
        LWSolution::new([x1, x4, -x2, x3, c, d]),
        LWSolution::new([x1, -x4, x2, -x3, c, d]),
        LWSolution::new([x1, -x3, x4, x2, a, b]),
        LWSolution::new([x1, -x2, -x3, -x4, x5, x6]),
    ])
}

/// `(-6t, ±2u, ±2u, ∓2u, 0, 0)`.
pub fn trivial_solutions(tu: TUDecomp) -> [LWSolution; 2] {
    let (t, u) = (tu.t, tu.u);
    [
        LWSolution::new([-6 * t, 2 * u, 2 * u, -2 * u, 0, 0]),
        LWSolution::new([-6 * t, -2 * u, -2 * u, 2 * u, 0, 0]),
    ]
}

/// Extracts the sextuple from the order-7 Dickson–Hurwitz table through the
/// coefficients `c_i = B(i,1) - B(0,1)` of `J(1,1)_7`:
/// `x2 = c1 - c6`, `x3 = c2 - c5`, `x4 = c3 - c4`, `x1 = -Σ c_i`,
/// `28 x5 = -(12(c3 + c4) + 4x1)`, `7 x6 = c1 + c6 - c2 - c5`.
pub fn lw_from_tables(dh7: &DHTable) -> Result<LWSolution> {
    if dh7.order != Order::Seven {
        return Err(Error::input("Leonard–Williams extraction needs the order-7 table"));
    }
    if dh7.f() % 2 != 0 {
        return Err(Error::Unsupported(format!("f = {} is odd", dh7.f())));
    }
    let c: Vec<i64> = (0..7).map(|i| dh7.get(i, 1) - dh7.get(0, 1)).collect();
    let x1 = -c[1..].iter().sum::<i64>();
    let x2 = c[1] - c[6];
    let x3 = c[2] - c[5];
    let x4 = c[3] - c[4];
    let n5 = -(12 * (c[3] + c[4]) + 4 * x1);
    let n6 = c[1] + c[6] - c[2] - c[5];
    if n5 % 28 != 0 || n6 % 7 != 0 {
        return Err(Error::invariant(format!(
            "non-exact division extracting x5, x6 (28 ∤ {n5} or 7 ∤ {n6})"
        )));
    }
    Ok(LWSolution::new([x1, x2, x3, x4, n5 / 28, n6 / 7]))
}

/// Outcomes of the three Diophantine equations. Only `norm` is structural;
/// the auxiliary quadratics are recorded as evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiophantineReport {
    pub norm: bool,
    pub aux1: bool,
    /// Second auxiliary equation as printed (leading term `12x5²`).
    pub aux2_printed: bool,
    /// Second auxiliary equation with the leading term read as `12x2²`.
    pub aux2_x2_reading: bool,
}

pub fn verify_diophantine(sol: &LWSolution, p: u64) -> DiophantineReport {
    let [x1, x2, x3, x4, x5, x6] = sol.x.map(|v| v as i128);
    let aux1 = 12 * x2 * x2 - 12 * x4 * x4 + 147 * x5 * x5 - 441 * x6 * x6 + 56 * x1 * x6 + 24 * x2 * x3
        - 24 * x2 * x4
        + 48 * x3 * x4
        + 98 * x5 * x6;
    let aux2_tail = -12 * x4 * x4 + 49 * x5 * x5 - 147 * x6 * x6
        + 28 * x1 * x5
        + 28 * x1 * x6
        + 48 * x2 * x3
        + 24 * x3 * x4
        + 490 * x5 * x6;
    DiophantineReport {
        norm: sol.satisfies_norm(p),
        aux1: aux1 == 0,
        aux2_printed: 12 * x5 * x5 + aux2_tail == 0,
        aux2_x2_reading: 12 * x2 * x2 + aux2_tail == 0,
    }
}

/// Which reading of the `588(0,1)` row to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row01 {
    /// As printed: `... + 147x4 + 147x6`.
    Printed,
    /// `... + 147x5 + 147x6`, the reading that reproduces the direct table.
    Corrected,
}

/// The twelve class representatives with their numerator and denominator.
pub fn representative_rows(
    sol: &LWSolution,
    t: i64,
    u: i64,
    p: u64,
    row01: Row01,
) -> [((i64, i64), i64, i64); 12] {
    let [x1, x2, x3, x4, x5, x6] = sol.x;
    let p = p as i64;
    let base0 = 12 * p - 72 + 24 * t - 6 * x1;
    let base1 = 12 * p + 12;
    let r01_tail = match row01 {
        Row01::Printed => 147 * x4,
        Row01::Corrected => 147 * x5,
    };
    [
        ((0, 0), p - 20 - 12 * t + 3 * x1, 49),
        ((0, 1), base0 + 168 * u + 84 * x2 - 42 * x3 + r01_tail + 147 * x6, 588),
        ((0, 2), base0 + 168 * u + 84 * x3 + 42 * x4 - 294 * x6, 588),
        ((0, 3), base0 - 168 * u + 42 * x2 + 84 * x4 - 147 * x5 + 147 * x6, 588),
        ((0, 4), base0 + 168 * u - 42 * x2 - 84 * x4 - 147 * x5 + 147 * x6, 588),
        ((0, 5), base0 - 168 * u - 84 * x3 - 42 * x4 - 294 * x6, 588),
        ((0, 6), base0 - 168 * u - 84 * x2 + 42 * x3 + 147 * x5 + 147 * x6, 588),
        ((1, 2), base1 + 24 * t + 8 * x1 - 196 * x5, 588),
        ((1, 3), base1 - 60 * t - 84 * u - 6 * x1 + 42 * x2 + 42 * x3 - 42 * x4, 588),
        ((1, 4), base1 + 24 * t + 8 * x1 + 98 * x5 - 294 * x6, 588),
        ((1, 5), base1 - 60 * t + 84 * u - 6 * x1 - 42 * x2 - 42 * x3 + 42 * x4, 588),
        ((2, 4), base1 + 24 * t + 8 * x1 + 98 * x5 + 294 * x6, 588),
    ]
}

/// Builds the full order-7 table from the twelve representatives and the
/// six-fold symmetry.
pub fn cyc7_from_lw(
    sol: &LWSolution,
    t: i64,
    u: i64,
    p: u64,
    gamma: u64,
    row01: Row01,
) -> Result<CycNumTable> {
    let mut cells = vec![vec![None::<i64>; 7]; 7];
    for ((i, j), num, den) in representative_rows(sol, t, u, p, row01) {
        if num % den != 0 {
            return Err(Error::invariant(format!("{den}({i},{j}) = {num} is not divisible by {den}")));
        }
        let v = num / den;
        for (a, b) in symmetry_orbit(7, i, j) {
            match cells[a][b] {
                Some(w) if w != v => {
                    return Err(Error::invariant(format!("conflicting values for ({a},{b})")))
                }
                _ => cells[a][b] = Some(v),
            }
        }
    }
    let counts = cells
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<i64>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::invariant("twelve representatives do not cover the table"))?;
    CycNumTable::from_counts(Order::Seven, p, gamma, counts)
}

/// Comparison of the sextuple reconstruction with the direct table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TableReconstruction {
    /// `t = (p - 20 + 3x1 - 49(0,0)_7) / 12`, if exact.
    pub t_from_table: Option<i64>,
    pub t_matches_decomposition: bool,
    /// The signed `u` under which every cell matches, if any.
    pub u_signed: Option<i64>,
    pub table_matches: bool,
    /// Whether the printed `(0,1)` row gives the direct value under `u_signed`.
    pub printed_row01_matches: bool,
}

pub fn reconstruct_cyc7(sol: &LWSolution, tu: TUDecomp, direct: &CycNumTable) -> Result<TableReconstruction> {
    if direct.order != Order::Seven {
        return Err(Error::input("reconstruction needs the order-7 table"));
    }
    let p = direct.p;
    let t_num = p as i64 - 20 + 3 * sol.x[0] - 49 * direct.get(0, 0);
    let t_from_table = (t_num % 12 == 0).then_some(t_num / 12);
    let u_signed = [tu.u, -tu.u].into_iter().find(|&u| {
        cyc7_from_lw(sol, tu.t, u, p, direct.gamma, Row01::Corrected)
            .map(|tab| tab.rows() == direct.rows())
            .unwrap_or(false)
    });
    let printed_row01_matches = u_signed.is_some_and(|u| {
        let (_, num, den) = representative_rows(sol, tu.t, u, p, Row01::Printed)[1];
        num % den == 0 && num / den == direct.get(0, 1)
    });
    Ok(TableReconstruction {
        t_from_table,
        t_matches_decomposition: t_from_table == Some(tu.t),
        u_signed,
        table_matches: u_signed.is_some(),
        printed_row01_matches,
    })
}
