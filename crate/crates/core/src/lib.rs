//! Exact arithmetic for congruences of central binomial coefficients,
//! Catalan numbers and Lucas sequences modulo prime powers.
//!
//! The crate is organized in layers:
//!
//! * [`modmath`] — word-sized modular arithmetic, quadratic-character
//!   symbols, primality.
//! * [`primes`] — prime enumeration (segmented sieve).
//! * [`padicstream`] — streaming computation of `C(2k, k+d) mod p^e`
//!   through a scaled `(unit, valuation)` representation that makes
//!   division by `p`-divisible integers exact.
//! * [`lucas`] — Lucas sequences `u_n(A, B)`, `v_n(A, B)` by fast
//!   doubling, Lucas quotients, Wall–Sun–Sun scanning.
//! * [`sums`] — weighted central-binomial/Catalan sums, residue-class
//!   tables, and the closed forms they are compared against.
//! * [`oracle`] — a deliberately naive big-integer reference used for
//!   differential testing; shares no code with the fast paths.
//! * [`verify`] — the claim catalog: one checker per congruence family,
//!   each producing [`verify::CongruenceReport`]s from two independent
//!   code paths.

pub mod error;
pub mod lucas;
pub mod modmath;
pub mod oracle;
pub mod padicstream;
pub mod primes;
pub mod sums;
pub mod verify;

pub use error::MathError;
