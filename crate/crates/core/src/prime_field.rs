//! Prime field context: primality, primitive roots and the index table.
//!
//! The index table `ind` is the discrete logarithm to base `γ` for every
//! nonzero residue. It is the only source of multiplicative characters in the
//! crate: `χ(a) = ζ^{ind(a)}`.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest prime for which a full index table is built.
pub const MAX_TABLE_PRIME: u64 = 100_000_000;

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the base set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::input(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Whether `g` generates `F_p^*`. Assumes `p` is prime.
pub fn is_primitive_root(g: u64, p: u64) -> bool {
    let g = g % p;
    if g == 0 {
        return false;
    }
    distinct_prime_factors(p - 1).into_iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1)
}

/// Smallest primitive root modulo the odd prime `p`.
pub fn find_generator(p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    let factors = distinct_prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or_else(|| Error::invariant(format!("no primitive root found for {p}")))
}

/// Primes `p` in `[min, max]` with `p ≡ 1 (mod modulus)`, ascending.
pub fn primes_one_mod(min: u64, max: u64, modulus: u64) -> impl Iterator<Item = u64> {
    let start = if min <= 1 { 1 } else { min + (modulus - (min - 1) % modulus) % modulus };
    (start..=max).step_by(modulus as usize).filter(|&p| is_prime(p))
}

/// Immutable context for one prime: `p`, the generator `γ` and the full
/// index table. Safe to share read-only between threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    gamma: u64,
    // ind[a] for a in 1..p; ind[0] is unused.
    ind: Vec<u32>,
}

impl FieldCtx {
    /// Context with the smallest primitive root.
    pub fn new(p: u64) -> Result<Self> {
        let g = find_generator(p)?;
        Self::with_generator(p, g)
    }

    /// Context with an explicit generator; fails if `gamma` is not a
    /// primitive root.
    pub fn with_generator(p: u64, gamma: u64) -> Result<Self> {
        check_odd_prime(p)?;
        if p > MAX_TABLE_PRIME {
            return Err(Error::input(format!("p = {p} exceeds the index-table limit {MAX_TABLE_PRIME}")));
        }
        if gamma < 2 || gamma >= p {
            return Err(Error::input(format!("generator {gamma} outside [2, {}]", p - 1)));
        }
        let len = p as usize;
        let mut ind: Vec<u32> = Vec::new();
        ind.try_reserve_exact(len)
            .map_err(|_| Error::input(format!("cannot allocate index table for p = {p}")))?;
        ind.resize(len, u32::MAX);
        let mut x = 1u64;
        for k in 0..(p - 1) {
            if ind[x as usize] != u32::MAX {
                return Err(Error::input(format!("{gamma} is not a primitive root mod {p} (order {k})")));
            }
            ind[x as usize] = k as u32;
            x = mul_mod(x, gamma, p);
        }
        Ok(FieldCtx { p, gamma, ind })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    /// `ind_γ(a)` in `[0, p-2]`.
    pub fn index_of(&self, a: i64) -> Result<u64> {
        let r = a.rem_euclid(self.p as i64) as usize;
        if r == 0 {
            return Err(Error::domain("index of 0 is undefined"));
        }
        Ok(self.ind[r] as u64)
    }

    /// Index of a residue already reduced into `[1, p-1]`. Hot path for
    /// character sums; callers guarantee the range.
    #[inline]
    pub(crate) fn ind_raw(&self, a: usize) -> u32 {
        self.ind[a]
    }

    /// `f = (p - 1) / e`.
    pub fn f(&self, e: u64) -> Result<u64> {
        if e == 0 || (self.p - 1) % e != 0 {
            return Err(Error::input(format!("{e} does not divide p - 1 = {}", self.p - 1)));
        }
        Ok((self.p - 1) / e)
    }

    /// Whether `a` is a seventh power in `F_p^*`, i.e. `ind(a) ≡ 0 (mod 7)`.
    pub fn is_seventh_power_residue(&self, a: i64) -> Result<bool> {
        self.f(7)?;
        Ok(self.index_of(a)? % 7 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: u64, p: u64) -> u64 {
        let mut x = g % p;
        let mut k = 1;
        while x != 1 {
            x = x * g % p;
            k += 1;
        }
        k
    }

    #[test]
    fn smallest_generators_match_exhaustive_order() {
        for p in [7u64, 29, 197, 491, 883] {
            let brute = (2..p).find(|&g| order(g, p) == p - 1).unwrap();
            assert_eq!(find_generator(p).unwrap(), brute, "p = {p}");
        }
        assert_eq!(find_generator(7).unwrap(), 3);
        assert_eq!(find_generator(29).unwrap(), 2);
        assert_eq!(find_generator(197).unwrap(), 2);
    }

    #[test]
    fn composite_and_even_rejected() {
        assert!(matches!(find_generator(196), Err(Error::Input(_))));
        assert!(matches!(find_generator(2), Err(Error::Input(_))));
        assert!(matches!(FieldCtx::new(1), Err(Error::Input(_))));
        assert!(!is_prime(561) && !is_prime(3_215_031_751));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn index_table_for_seven() {
        let ctx = FieldCtx::with_generator(7, 3).unwrap();
        let got: Vec<u64> = (1..7).map(|a| ctx.index_of(a).unwrap()).collect();
        assert_eq!(got, [0, 2, 1, 4, 5, 3]);
        assert_eq!(ctx.index_of(2).unwrap(), 2);
        assert_eq!(ctx.index_of(-1).unwrap(), 3);
        assert!(matches!(ctx.index_of(0), Err(Error::Domain(_))));
        assert!(matches!(ctx.index_of(14), Err(Error::Domain(_))));
    }

    #[test]
    fn non_primitive_generator_rejected() {
        // 2 has order 3 mod 7
        assert!(matches!(FieldCtx::with_generator(7, 2), Err(Error::Input(_))));
        assert!(matches!(FieldCtx::with_generator(29, 1), Err(Error::Input(_))));
        assert!(matches!(FieldCtx::with_generator(29, 29), Err(Error::Input(_))));
    }

    #[test]
    fn index_table_is_bijective_with_expected_landmarks() {
        for p in [29u64, 197, 491] {
            let ctx = FieldCtx::new(p).unwrap();
            let mut seen: Vec<u64> = (1..p as i64).map(|a| ctx.index_of(a).unwrap()).collect();
            seen.sort_unstable();
            assert!(seen.iter().copied().eq(0..p - 1));
            assert_eq!(ctx.index_of(1).unwrap(), 0);
            assert_eq!(ctx.index_of(ctx.gamma() as i64).unwrap(), 1);
            assert_eq!(ctx.index_of(p as i64 - 1).unwrap(), (p - 1) / 2);
        }
    }

    #[test]
    fn f_values() {
        let ctx = FieldCtx::new(197).unwrap();
        assert_eq!(ctx.f(49).unwrap(), 4);
        assert_eq!(ctx.f(7).unwrap(), 28);
        assert!(ctx.f(5).is_err());
    }

    #[test]
    fn seventh_powers() {
        let ctx = FieldCtx::new(197).unwrap();
        assert!(ctx.is_seventh_power_residue(1).unwrap());
        assert!(!ctx.is_seventh_power_residue(ctx.gamma() as i64).unwrap());
        for b in [2i64, 3, 50, 196] {
            let a = pow_mod(b as u64, 7, 197) as i64;
            assert!(ctx.is_seventh_power_residue(a).unwrap());
        }
        assert!(FieldCtx::new(31).unwrap().is_seventh_power_residue(2).is_err());
    }

    #[test]
    fn prime_listing_against_sieve() {
        let max = 2000usize;
        let mut composite = alloc::vec![false; max + 1];
        for i in 2..=max {
            if !composite[i] {
                let mut j = i * i;
                while j <= max {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        let sieve: Vec<u64> = (2..=max).filter(|&i| !composite[i] && i % 49 == 1).map(|i| i as u64).collect();
        let listed: Vec<u64> = primes_one_mod(2, 2000, 49).collect();
        assert_eq!(listed, sieve);
        assert_eq!(listed, [197, 491, 883, 1373, 1471, 1667]);
        assert_eq!(primes_one_mod(198, 491, 49).collect::<Vec<_>>(), [491]);
        assert_eq!(primes_one_mod(500, 400, 49).count(), 0);
    }
}
