//! Exact arithmetic in `Z[ζ_e]` for `e ∈ {7, 49}` and the reduction
//! `Z[ζ_49] → F_7[t]/(t^8)`, `ζ ↦ 1 + t`.
//!
//! Elements are stored as length-`e` coefficient vectors in canonical form:
//! coefficients at exponents `≥ φ(e)` are always zero. The reduction uses
//! `Φ_e(ζ) = Σ_{m<7} ζ^{m·e/7} = 0`.
//!
//! The map to `F_7[t]/(t^8)` is a ring homomorphism because
//! `Φ_49(1 + t) ≡ t^42 (mod 7)` and `7 ∈ (1 - ζ)^42`; the identity is
//! re-checked by [`crate::selftest`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Cyclotomic order supported by the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Order {
    Seven,
    FortyNine,
}

impl Order {
    pub const fn e(self) -> usize {
        match self {
            Order::Seven => 7,
            Order::FortyNine => 49,
        }
    }

    pub const fn phi(self) -> usize {
        self.e() - self.e() / 7
    }

    pub fn from_e(e: u64) -> Result<Self> {
        match e {
            7 => Ok(Order::Seven),
            49 => Ok(Order::FortyNine),
            _ => Err(Error::input(format!("cyclotomic order {e} not supported (7 or 49)"))),
        }
    }
}

/// An element of `Z[ζ_e]`, always canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(into = "Vec<i64>", try_from = "Vec<i64>"))]
pub struct CycInt {
    order: Order,
    coeffs: Vec<i64>,
}

fn canonicalize(order: Order, c: &mut [i64]) -> Result<()> {
    let step = order.e() / 7;
    let phi = order.phi();
    for k in (phi..order.e()).rev() {
        let v = core::mem::take(&mut c[k]);
        if v == 0 {
            continue;
        }
        let r = k - phi;
        for m in 0..6 {
            let slot = &mut c[r + m * step];
            *slot = slot.checked_sub(v).ok_or(Error::Overflow)?;
        }
    }
    Ok(())
}

impl CycInt {
    pub fn zero(order: Order) -> Self {
        CycInt { order, coeffs: vec![0; order.e()] }
    }

    pub fn constant(order: Order, c: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    pub fn one(order: Order) -> Self {
        Self::constant(order, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(order: Order, k: i64) -> Self {
        let mut raw = vec![0; order.e()];
        raw[k.rem_euclid(order.e() as i64) as usize] = 1;
        // a single unit coefficient cannot overflow
        Self::from_redundant(order, raw).expect("unit coefficient")
    }

    /// Builds an element from a redundant length-`e` vector, where
    /// `coeffs[k]` multiplies `ζ^k` for every `k < e`.
    pub fn from_redundant(order: Order, mut coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != order.e() {
            return Err(Error::input(format!("expected {} coefficients, got {}", order.e(), coeffs.len())));
        }
        canonicalize(order, &mut coeffs)?;
        Ok(CycInt { order, coeffs })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// Canonical coefficients (length `e`, zero from `φ(e)` on).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(n)` if the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::input(format!(
                "mismatched cyclotomic orders {} and {}",
                self.order.e(),
                other.order.e()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycInt { order: self.order, coeffs })
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs =
            self.coeffs.iter().map(|a| a.checked_neg().ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
        Ok(CycInt { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycInt { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let e = self.order.e();
        let mut acc = vec![0i64; e];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in other.coeffs.iter().enumerate().filter(|(_, b)| **b != 0) {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                let slot = &mut acc[(i + j) % e];
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Self::from_redundant(self.order, acc)
    }

    /// Multiplication by `ζ^k`.
    pub fn mul_zeta_pow(&self, k: i64) -> Result<Self> {
        let e = self.order.e();
        let shift = k.rem_euclid(e as i64) as usize;
        let mut raw = vec![0; e];
        for (i, &c) in self.coeffs.iter().enumerate() {
            raw[(i + shift) % e] = c;
        }
        Self::from_redundant(self.order, raw)
    }

    /// The Galois automorphism `σ_s: ζ ↦ ζ^s`.
    pub fn apply_automorphism(&self, s: i64) -> Result<Self> {
        let e = self.order.e() as i64;
        if s.rem_euclid(7) == 0 {
            return Err(Error::input(format!("gcd({s}, {e}) ≠ 1")));
        }
        let mut raw = vec![0; e as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            raw[(s * k as i64).rem_euclid(e) as usize] = c;
        }
        Self::from_redundant(self.order, raw)
    }

    /// Image under `ζ ↦ 1 + t` in `F_7[t]/(t^8)`.
    pub fn residue_mod_t8(&self) -> Result<Residue8> {
        self.residue_with(&ReductionTable::STANDARD)
    }

    /// Same as [`CycInt::residue_mod_t8`] with an explicit reduction table.
    pub fn residue_with(&self, table: &ReductionTable) -> Result<Residue8> {
        self.require_49()?;
        let img = table.image(&self.coeffs);
        let mut r = [0u8; 8];
        r.copy_from_slice(&img[..8]);
        Ok(Residue8(r))
    }

    /// The `(1 - ζ)`-adic valuation, `None` for zero.
    pub fn valuation(&self) -> Result<Option<u32>> {
        self.require_49()?;
        if self.is_zero() {
            return Ok(None);
        }
        let mut coeffs = self.coeffs.clone();
        let mut base = 0u32;
        loop {
            let img = ReductionTable::STANDARD.image(&coeffs);
            if let Some(i) = img.iter().position(|&c| c != 0) {
                return Ok(Some(base + i as u32));
            }
            // Z[ζ]/(7) ≅ F_7[t]/(t^42): a vanishing image means 7 divides every
            // power-basis coefficient, and (7) = (1 - ζ)^42.
            debug_assert!(coeffs.iter().all(|c| c % 7 == 0));
            coeffs.iter_mut().for_each(|c| *c /= 7);
            base += 42;
        }
    }

    fn require_49(&self) -> Result<()> {
        if self.order != Order::FortyNine {
            return Err(Error::input("reduction mod (1 - ζ) is defined here for e = 49 only"));
        }
        Ok(())
    }
}

impl From<CycInt> for Vec<i64> {
    fn from(a: CycInt) -> Self {
        a.coeffs
    }
}

impl TryFrom<Vec<i64>> for CycInt {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        let order = Order::from_e(v.len() as u64)?;
        CycInt::from_redundant(order, v)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}·ζ^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (e = {})", self.order.e())
    }
}

/// `(ζ^k ↦ (1 + t)^k)` modulo 7, truncated at `t^42`: binomials
/// `C(k, i) mod 7` for `k < 49`, `i < 42`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTable {
    pub rows: [[u8; 42]; 49],
}

impl ReductionTable {
    pub const STANDARD: ReductionTable = ReductionTable::pascal();

    const fn pascal() -> Self {
        let mut rows = [[0u8; 42]; 49];
        rows[0][0] = 1;
        let mut k = 1;
        while k < 49 {
            rows[k][0] = 1;
            let mut i = 1;
            while i < 42 {
                rows[k][i] = (rows[k - 1][i] + rows[k - 1][i - 1]) % 7;
                i += 1;
            }
            k += 1;
        }
        ReductionTable { rows }
    }

    pub(crate) fn image(&self, coeffs: &[i64]) -> [u8; 42] {
        let mut acc = [0i64; 42];
        for (k, &c) in coeffs.iter().enumerate() {
            let c = c.rem_euclid(7);
            if c == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.rows[k].iter()) {
                *slot += c * b as i64;
            }
        }
        acc.map(|a| (a % 7) as u8)
    }
}

/// An element of `F_7[t]/(t^8)`; entry `i` is the coefficient of `t^i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Residue8(pub [u8; 8]);

impl Residue8 {
    pub const MINUS_ONE: Residue8 = Residue8([6, 0, 0, 0, 0, 0, 0, 0]);

    /// Reduces arbitrary integer coefficients mod 7.
    pub fn from_ints(c: [i64; 8]) -> Self {
        Residue8(c.map(|x| x.rem_euclid(7) as u8))
    }

    pub fn coeffs(&self) -> [u8; 8] {
        self.0
    }
}

impl Add for Residue8 {
    type Output = Residue8;
    fn add(self, o: Residue8) -> Residue8 {
        Residue8(core::array::from_fn(|i| (self.0[i] + o.0[i]) % 7))
    }
}

impl Neg for Residue8 {
    type Output = Residue8;
    fn neg(self) -> Residue8 {
        Residue8(self.0.map(|c| (7 - c) % 7))
    }
}

impl Sub for Residue8 {
    type Output = Residue8;
    fn sub(self, o: Residue8) -> Residue8 {
        self + (-o)
    }
}

impl Mul for Residue8 {
    type Output = Residue8;
    fn mul(self, o: Residue8) -> Residue8 {
        let mut r = [0u32; 8];
        for i in 0..8 {
            for j in 0..8 - i {
                r[i + j] += self.0[i] as u32 * o.0[j] as u32;
            }
        }
        Residue8(r.map(|c| (c % 7) as u8))
    }
}

impl fmt::Debug for Residue8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: Order = Order::FortyNine;

    fn z(k: i64) -> CycInt {
        CycInt::zeta_pow(E, k)
    }

    fn phi49() -> CycInt {
        (0..7).fold(CycInt::zero(E), |acc, m| {
            let mut raw = acc.coeffs.clone();
            raw[7 * m] += 1;
            CycInt::from_redundant(E, raw).unwrap()
        })
    }

    #[test]
    fn small_products() {
        let one_plus = CycInt::one(E).checked_add(&z(1)).unwrap();
        let sq = one_plus.checked_mul(&one_plus).unwrap();
        let mut want = vec![0; 49];
        want[..3].copy_from_slice(&[1, 2, 1]);
        assert_eq!(sq.coeffs(), &want[..]);
        assert!(one_plus.checked_add(&one_plus.checked_neg().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_polynomial_vanishes() {
        assert!(phi49().is_zero());
        let raw7 = vec![1; 7];
        assert!(CycInt::from_redundant(Order::Seven, raw7).unwrap().is_zero());
        // ζ^42 rewrites into lower powers
        let z42 = z(42);
        assert_eq!(z42.coeffs()[0], -1);
        assert_eq!(z42.coeffs()[35], -1);
        assert!(z42.coeffs()[42..].iter().all(|&c| c == 0));
    }

    #[test]
    fn mismatched_orders_and_overflow() {
        let a = CycInt::one(E);
        let b = CycInt::one(Order::Seven);
        assert!(matches!(a.checked_add(&b), Err(Error::Input(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Input(_))));
        let big = CycInt::constant(E, i64::MAX);
        assert_eq!(big.checked_add(&a), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&CycInt::constant(E, 2)), Err(Error::Overflow));
        assert_eq!(CycInt::constant(E, i64::MIN).checked_neg(), Err(Error::Overflow));
        assert!(CycInt::from_redundant(E, vec![0; 7]).is_err());
    }

    #[test]
    fn automorphisms() {
        let a = CycInt::from_redundant(E, (0..49).map(|k| (k * k % 11) - 5).collect()).unwrap();
        assert_eq!(a.apply_automorphism(1).unwrap(), a);
        assert_eq!(z(1).apply_automorphism(-1).unwrap(), z(48));
        let s2s4 = a.apply_automorphism(4).unwrap().apply_automorphism(2).unwrap();
        assert_eq!(s2s4, a.apply_automorphism(8).unwrap());
        assert!(a.apply_automorphism(14).is_err());
        assert!(a.apply_automorphism(0).is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(CycInt::constant(E, -1).residue_mod_t8().unwrap(), Residue8::MINUS_ONE);
        assert_eq!(z(1).residue_mod_t8().unwrap(), Residue8([1, 1, 0, 0, 0, 0, 0, 0]));
        let zm1 = z(1).checked_sub(&CycInt::one(E)).unwrap();
        let mut p = CycInt::one(E);
        for _ in 0..8 {
            p = p.checked_mul(&zm1).unwrap();
        }
        assert_eq!(p.residue_mod_t8().unwrap(), Residue8::default());
        assert_eq!(CycInt::constant(E, 7).residue_mod_t8().unwrap(), Residue8::default());
        assert!(CycInt::one(Order::Seven).residue_mod_t8().is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(CycInt::zero(E).valuation().unwrap(), None);
        let zm1 = z(1).checked_sub(&CycInt::one(E)).unwrap();
        assert_eq!(zm1.valuation().unwrap(), Some(1));
        assert_eq!(CycInt::constant(E, 7).valuation().unwrap(), Some(42));
        assert_eq!(CycInt::constant(E, 49).valuation().unwrap(), Some(84));
        let mut p = CycInt::one(E);
        for _ in 0..10 {
            p = p.checked_mul(&zm1).unwrap();
        }
        assert_eq!(p.valuation().unwrap(), Some(10));
        assert_eq!(p.checked_scale(7).unwrap().valuation().unwrap(), Some(52));
    }

    #[test]
    fn residue_ring_arithmetic() {
        let t = Residue8([0, 1, 0, 0, 0, 0, 0, 0]);
        let mut acc = Residue8([1, 0, 0, 0, 0, 0, 0, 0]);
        for _ in 0..8 {
            acc = acc * t;
        }
        assert_eq!(acc, Residue8::default());
        assert_eq!(Residue8::MINUS_ONE + Residue8([1, 0, 0, 0, 0, 0, 0, 0]), Residue8::default());
        assert_eq!(Residue8::from_ints([-1, 8, 0, 0, 0, 0, 0, -7]), Residue8([6, 1, 0, 0, 0, 0, 0, 0]));
    }
}
