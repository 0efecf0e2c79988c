//! Arbitrary-precision reference implementations used for differential
//! testing and fixture generation.
//!
//! Everything here is deliberately naive — exact binomials by the
//! multiplicative formula, Lucas values by the three-term recurrence,
//! sums reduced late — and shares no code with the streaming fast paths,
//! so agreement between the two is meaningful evidence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;
use crate::lucas::LucasParams;
use crate::modmath::{mod_inv, mulmod, PrimePower};

/// Guard for [`exact_binomial`].
pub const BINOMIAL_GUARD: u64 = 100_000;

/// `C(n, k)` exactly; `0` when `k < 0` or `k > n`.
pub fn exact_binomial(n: u64, k: i64) -> BigInt {
    assert!(n <= BINOMIAL_GUARD, "binomial row exceeds guard");
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// The Catalan number `C(2k, k) / (k + 1)` exactly.
pub fn exact_catalan(k: u64) -> BigInt {
    exact_binomial(2 * k, k as i64) - exact_binomial(2 * k, k as i64 + 1)
}

/// `(u_n, v_n)` exactly by naive iteration.
pub fn exact_lucas(params: &LucasParams, n: u64) -> (BigInt, BigInt) {
    assert!(n <= 10_000, "exact Lucas index exceeds guard");
    let a = BigInt::from(params.a());
    let b = BigInt::from(params.b());
    let (mut u0, mut u1) = (BigInt::zero(), BigInt::one());
    let (mut v0, mut v1) = (BigInt::from(2), a.clone());
    for _ in 0..n {
        let u2 = &a * &u1 - &b * &u0;
        let v2 = &a * &v1 - &b * &v0;
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    (u0, v0)
}

/// Reduce a signed big integer into `0..m`.
pub fn big_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// `sum_{k=0}^{p^a-1} C(2k, k+d) * inv(m)^k mod modulus`, with every
/// binomial carried as an exact integer and reduced late.
pub fn exact_sum_mod(pp: &PrimePower, m: i64, d: u8, modulus: u64) -> Result<u64, MathError> {
    let n = pp.value();
    assert!(n <= BINOMIAL_GUARD, "sum range exceeds the slow-path guard");
    let inv_m = mod_inv(m, modulus)?.value();
    let mut weight = 1 % modulus;
    let mut acc: u64 = 0;
    let mut binom = BigInt::one(); // C(2k, k)
    for k in 0..n {
        let term = if d == 0 {
            big_mod(&binom, modulus)
        } else {
            // C(2k, k+1) = C(2k, k) * k / (k+1), always an exact integer
            big_mod(&(&binom * BigInt::from(k) / BigInt::from(k + 1)), modulus)
        };
        acc = (acc + mulmod(term, weight, modulus)) % modulus;
        weight = mulmod(weight, inv_m, modulus);
        binom = binom * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 1);
    }
    Ok(acc)
}

/// The p-adic valuation of an exact integer; `None` for zero.
pub fn big_valuation(x: &BigInt, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut x = x.abs();
    while (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    Some(v)
}

/// Kummer's carry count: the number of carries when adding `a + b` in
/// base `p`, which equals `v_p(C(a+b, a))`.
pub fn kummer_carries(mut a: u64, mut b: u64, p: u64) -> u32 {
    let mut carries = 0;
    let mut carry = 0;
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = if s >= p { 1 } else { 0 };
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    carries
}

/// Versioned fixture table of reference values, emitted by the CLI
/// `fixtures` command and replayed by the regression suite.
///
/// Format: one record per line, whitespace-separated, `#` for comments.
pub fn fixture_table() -> String {
    let mut out = String::from("# ccl fixtures v1\n");
    for (n, k) in [(0u64, 0i64), (2, 1), (6, 3), (10, 5), (17, 8), (40, 20), (6, 7), (5, -1)] {
        out.push_str(&format!("binomial {n} {k} {}\n", exact_binomial(n, k)));
    }
    for k in [0u64, 1, 2, 3, 4, 8, 12] {
        out.push_str(&format!("catalan {k} {}\n", exact_catalan(k)));
    }
    for (a, b, n) in [(1i64, -1i64, 10u64), (1, -1, 25), (3, 1, 8), (-1, 1, 7), (2, 1, 9), (4, 4, 6)] {
        let params = LucasParams::new(a, b).expect("nonzero B");
        let (u, v) = exact_lucas(&params, n);
        out.push_str(&format!("lucas {a} {b} {n} {u} {v}\n"));
    }
    for (p, a, m, d) in [(5u64, 1u32, 1i64, 0u8), (3, 1, 1, 1), (3, 1, 1, 0), (5, 1, 2, 0), (7, 1, 5, 0), (3, 2, -1, 1)] {
        let pp = PrimePower::new(p, a).expect("prime");
        let modulus = p * p;
        let s = exact_sum_mod(&pp, m, d, modulus).expect("m coprime to p");
        out.push_str(&format!("sum {p} {a} {m} {d} {modulus} {s}\n"));
    }
    out
}
