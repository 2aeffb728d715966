//! Exact cyclotomy over prime fields.
//!
//! The crate computes Jacobi sums, cyclotomic numbers and Dickson–Hurwitz sums
//! of orders 7 and 49 over `F_p`, and checks the determining congruence of
//! `J(1,n)_49` modulo `(1 - ζ)^8` together with the artiad / hyperartiad
//! characterizations of septic primes. Every quantity is computed along at
//! least two independent routes so that each certificate carries its own
//! cross-checks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod artiad;
pub mod congruence;
pub mod cyclotomy;
mod error;
pub mod lw;
pub mod prime_field;
pub mod ring;
pub mod selftest;

pub use error::{Error, Result};
pub use prime_field::FieldCtx;
pub use ring::{CycInt, Order, Residue8};
