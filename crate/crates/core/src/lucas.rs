//! Lucas sequences `u_n(A, B)`, `v_n(A, B)` modulo arbitrary moduli via
//! fast doubling, Lucas quotients, and Wall–Sun–Sun scanning.
//!
//! The doubling ladder tracks `(u_n, u_{n+1})` and never divides by 2, so
//! it works for every modulus including even ones:
//!
//! ```text
//! u_{2n}   = u_n * (2*u_{n+1} - A*u_n)
//! u_{2n+1} = u_{n+1}^2 - B*u_n^2
//! v_n      = 2*u_{n+1} - A*u_n
//! ```

use crate::error::MathError;
use crate::modmath::{jacobi, mulmod, reduce_signed, Residue};
use crate::primes::SegmentedSieve;

/// Coefficients of `u_{n+1} = A*u_n - B*u_{n-1}` (seeds 0, 1) and
/// `v_{n+1} = A*v_n - B*v_{n-1}` (seeds 2, A), with the discriminant
/// `Δ = A^2 - 4B` cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LucasParams {
    a: i64,
    b: i64,
    delta: i128,
}

impl LucasParams {
    /// `B` must be nonzero.
    pub fn new(a: i64, b: i64) -> Result<Self, MathError> {
        if b == 0 {
            return Err(MathError::ParameterOutOfRange("Lucas parameter B must be nonzero"));
        }
        Ok(LucasParams { a, b, delta: (a as i128) * (a as i128) - 4 * (b as i128) })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `A^2 - 4B`.
    pub fn delta(&self) -> i128 {
        self.delta
    }

    /// The discriminant reduced into a signed word, for Jacobi symbols.
    pub fn delta_mod(&self, m: u64) -> i64 {
        (self.delta.rem_euclid(m as i128)) as i64
    }
}

/// A pair `(u_n, v_n)` modulo a common modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LucasPair {
    pub u: Residue,
    pub v: Residue,
    pub n: u64,
}

/// `(u_n, v_n) mod modulus` in O(log n) multiplications.
pub fn lucas_pair(params: &LucasParams, n: u64, modulus: u64) -> LucasPair {
    let m = modulus;
    let a = reduce_signed(params.a, m);
    let b = reduce_signed(params.b, m);
    // (uk, uk1) = (u_k, u_{k+1}), walking the bits of n from the top.
    let mut uk: u64 = 0;
    let mut uk1: u64 = 1 % m;
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        let t = (2 * uk1 % m + m - mulmod(a, uk, m)) % m; // v_k
        let u2k = mulmod(uk, t, m);
        let u2k1 = (mulmod(uk1, uk1, m) + m - mulmod(b, mulmod(uk, uk, m), m)) % m;
        if (n >> i) & 1 == 0 {
            uk = u2k;
            uk1 = u2k1;
        } else {
            let u2k2 = (mulmod(a, u2k1, m) + m - mulmod(b, u2k, m)) % m;
            uk = u2k1;
            uk1 = u2k2;
        }
    }
    let v = (2 * uk1 % m + m - mulmod(a, uk, m)) % m;
    LucasPair { u: Residue::new(uk, m), v: Residue::new(v, m), n }
}

/// `u_n mod modulus`.
pub fn lucas_u(params: &LucasParams, n: u64, modulus: u64) -> Residue {
    lucas_pair(params, n, modulus).u
}

/// `v_n mod modulus`.
pub fn lucas_v(params: &LucasParams, n: u64, modulus: u64) -> Residue {
    lucas_pair(params, n, modulus).v
}

/// The Lucas quotient `u_{p-(Δ/p)}(A, B) / p mod p` for an odd prime `p`
/// not dividing `B`.
///
/// `p | u_{p-(Δ/p)}` is a theorem under these hypotheses, so a
/// non-divisible value fails loudly instead of being truncated.
pub fn lucas_quotient(params: &LucasParams, p: u64) -> Result<Residue, MathError> {
    if p == 2 {
        return Err(MathError::ParameterOutOfRange("Lucas quotients need an odd prime"));
    }
    if reduce_signed(params.b, p) == 0 {
        return Err(MathError::ParameterOutOfRange("Lucas quotients need p not dividing B"));
    }
    let j = jacobi(params.delta_mod(p), p)?;
    let index = (p as i64 - j as i64) as u64;
    let p2 = p * p;
    let n = lucas_u(params, index, p2).value();
    if n % p != 0 {
        return Err(MathError::DivisibilityViolation { p, index, value: n });
    }
    // n = p * t with t < p, so t is already the quotient mod p.
    Ok(Residue::new(n / p, p))
}

/// Guard for [`wall_sun_sun_scan`].
pub const WALL_SUN_SUN_LIMIT: u64 = 10_000_000;

/// Whether `p > 5` is a Wall–Sun–Sun prime, i.e. `p^2 | F_{p-(p/5)}`.
pub fn is_wall_sun_sun(p: u64) -> bool {
    let fib = LucasParams::new(1, -1).expect("B = -1 is nonzero");
    matches!(lucas_quotient(&fib, p), Ok(q) if q.value() == 0)
}

/// All Wall–Sun–Sun primes `5 < p <= limit`. No such prime is known; a
/// nonempty result would be news.
pub fn wall_sun_sun_scan(limit: u64) -> Result<Vec<u64>, MathError> {
    if limit > WALL_SUN_SUN_LIMIT {
        return Err(MathError::ParameterOutOfRange("Wall–Sun–Sun scan limit exceeds guard"));
    }
    Ok(SegmentedSieve::new(limit).filter(|&p| p > 5 && is_wall_sun_sun(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmath::mod_pow;

    fn naive_pair(params: &LucasParams, n: u64, m: u64) -> (u64, u64) {
        let a = reduce_signed(params.a, m);
        let b = reduce_signed(params.b, m);
        let (mut u0, mut u1) = (0u64, 1 % m);
        let (mut v0, mut v1) = (2 % m, a);
        for _ in 0..n {
            let u2 = (mulmod(a, u1, m) + m - mulmod(b, u0, m)) % m;
            let v2 = (mulmod(a, v1, m) + m - mulmod(b, v0, m)) % m;
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        (u0, v0)
    }

    #[test]
    fn seeds_and_small_indices() {
        let m = 1_000_000;
        let fib = LucasParams::new(1, -1).unwrap();
        let p = lucas_pair(&fib, 0, m);
        assert_eq!((p.u.value(), p.v.value()), (0, 2));
        let p = lucas_pair(&fib, 8, m);
        assert_eq!((p.u.value(), p.v.value()), (21, 47)); // F_8, L_8

        // Δ = 0 case: u_n(2,1) = n
        assert_eq!(lucas_u(&LucasParams::new(2, 1).unwrap(), 7, m).value(), 7);

        // period-6 sequence 0,1,-1,0,1,-1 for (A,B) = (-1,1)
        assert_eq!(lucas_u(&LucasParams::new(-1, 1).unwrap(), 6, m).value(), 0);
    }

    #[test]
    fn u_at_index_examples() {
        // u_8(3,1) = F_16 = 987 ≡ 7 (mod 49)
        assert_eq!(lucas_u(&LucasParams::new(3, 1).unwrap(), 8, 49).value(), 7);
        assert_eq!(lucas_u(&LucasParams::new(2, 1).unwrap(), 5, 25).value(), 5);
        assert_eq!(lucas_u(&LucasParams::new(4, 7).unwrap(), 0, 100).value(), 0);
    }

    #[test]
    fn doubling_matches_naive_recurrence() {
        let cases = [
            (1i64, -1i64, 1_000_003u64),
            (3, 1, 49),
            (-1, 1, 31),
            (2, 1, 625),
            (5, -3, 1 << 20), // even modulus
            (-4, 9, 243),
            (7, 12, 2),
        ];
        for (a, b, m) in cases {
            let params = LucasParams::new(a, b).unwrap();
            for n in 0..200 {
                let fast = lucas_pair(&params, n, m);
                let (u, v) = naive_pair(&params, n, m);
                assert_eq!((fast.u.value(), fast.v.value()), (u, v), "(A,B,M,n)=({a},{b},{m},{n})");
            }
        }
    }

    #[test]
    fn pair_identity_v2_minus_delta_u2() {
        // v_n^2 - Δ u_n^2 ≡ 4 B^n
        for (a, b) in [(1i64, -1i64), (3, 2), (-5, 7), (2, 1)] {
            let params = LucasParams::new(a, b).unwrap();
            let m = 1_000_003u64;
            for n in [0u64, 1, 2, 17, 100, 12345] {
                let pair = lucas_pair(&params, n, m);
                let d = reduce_signed(params.delta_mod(m), m);
                let lhs = (mulmod(pair.v.value(), pair.v.value(), m) + m
                    - mulmod(d, mulmod(pair.u.value(), pair.u.value(), m), m))
                    % m;
                let rhs = mulmod(4, mod_pow(b, n, m).value(), m);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let fib = LucasParams::new(1, -1).unwrap();
        assert_eq!(lucas_quotient(&fib, 7).unwrap().value(), 3); // F_8/7 = 3
        assert_eq!(lucas_quotient(&LucasParams::new(2, 1).unwrap(), 5).unwrap().value(), 1);
        assert_eq!(lucas_quotient(&LucasParams::new(-1, 1).unwrap(), 5).unwrap().value(), 0);
    }

    #[test]
    fn quotient_rejects_bad_parameters() {
        let fib = LucasParams::new(1, -1).unwrap();
        assert!(lucas_quotient(&fib, 2).is_err());
        assert!(lucas_quotient(&LucasParams::new(1, 5).unwrap(), 5).is_err());
    }

    #[test]
    fn wall_sun_sun_small_ranges() {
        assert_eq!(wall_sun_sun_scan(4).unwrap(), Vec::<u64>::new());
        assert_eq!(wall_sun_sun_scan(7).unwrap(), Vec::<u64>::new());
        assert_eq!(wall_sun_sun_scan(1_000).unwrap(), Vec::<u64>::new());
        assert!(wall_sun_sun_scan(WALL_SUN_SUN_LIMIT + 1).is_err());
    }
}
