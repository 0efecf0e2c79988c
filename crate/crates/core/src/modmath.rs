//! Word-sized exact modular arithmetic and quadratic-character symbols.
//!
//! Moduli are capped at 2^62 so every product of two reduced values fits
//! in a `u128` intermediate with no wraparound.

use crate::error::MathError;

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = 1 << 62;

/// `a * b mod m` with an exact double-width intermediate.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Canonicalize a signed integer into `0..m`.
#[inline]
pub fn reduce_signed(x: i64, m: u64) -> u64 {
    debug_assert!(m <= MAX_MODULUS && m >= 1);
    x.rem_euclid(m as i64) as u64
}

/// An integer reduced modulo an explicit modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduce `value` into `0..modulus`. Panics if `modulus` is 0 or above 2^62.
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1 && modulus <= MAX_MODULUS, "modulus out of range");
        Residue { value: value % modulus, modulus }
    }

    /// Canonicalize a possibly negative integer.
    pub fn from_int(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1 && modulus <= MAX_MODULUS, "modulus out of range");
        Residue { value: reduce_signed(value, modulus), modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue::new(self.value + rhs.value, self.modulus)
    }

    pub fn sub(&self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue::new(self.value + self.modulus - rhs.value, self.modulus)
    }

    pub fn mul(&self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue { value: mulmod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }

    pub fn neg(&self) -> Residue {
        Residue::new(self.modulus - self.value, self.modulus)
    }

    pub fn pow(&self, exp: u64) -> Residue {
        mod_pow(self.value as i64, exp, self.modulus)
    }

    pub fn inv(&self) -> Result<Residue, MathError> {
        mod_inv(self.value as i64, self.modulus)
    }
}

/// `base^exp mod modulus` by square-and-multiply. `exp = 0` gives `1 mod modulus`.
pub fn mod_pow(base: i64, exp: u64, modulus: u64) -> Residue {
    assert!(modulus >= 1 && modulus <= MAX_MODULUS, "modulus out of range");
    let mut b = reduce_signed(base, modulus);
    let mut e = exp;
    let mut acc = 1 % modulus;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, modulus);
        }
        b = mulmod(b, b, modulus);
        e >>= 1;
    }
    Residue { value: acc, modulus }
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0, x0, y0)
}

/// Multiplicative inverse of `a` modulo `modulus`.
pub fn mod_inv(a: i64, modulus: u64) -> Result<Residue, MathError> {
    assert!(modulus >= 1 && modulus <= MAX_MODULUS, "modulus out of range");
    let ar = reduce_signed(a, modulus);
    let (g, x, _) = extended_gcd(ar as i128, modulus as i128);
    if g != 1 {
        return Err(MathError::NotInvertible { value: ar, modulus, gcd: g.unsigned_abs() as u64 });
    }
    Ok(Residue { value: x.rem_euclid(modulus as i128) as u64, modulus })
}

/// Jacobi symbol `(a/n)` for odd positive `n`, with `(a/1) = 1` for every `a`.
pub fn jacobi(a: i64, n: u64) -> Result<i32, MathError> {
    if n == 0 || n % 2 == 0 {
        return Err(MathError::BadJacobiDenominator(n));
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Jacobi symbol with a prime-power denominator: `(a/p^e) = (a/p)^e`,
/// and `(a/p^0) = (a/1) = 1`.
pub fn jacobi_pow(a: i64, p: u64, e: u32) -> Result<i32, MathError> {
    if e == 0 {
        return Ok(1);
    }
    let j = jacobi(a, p)?;
    Ok(if e % 2 == 0 { j * j } else { j })
}

/// Deterministic Miller–Rabin, valid for every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This base set is a proven witness set below 3.3 * 10^24.
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a as i64, d, n).value();
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Guard for streaming loop bounds: `p^a` stays below 2^31 so `p^{2a}` is a
/// valid modulus and one pass over `0..p^a` is tractable.
pub const PRIME_POWER_GUARD: u64 = 1 << 31;

/// A prime `p` together with an exponent `a` and the precomputed value `p^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    p: u64,
    a: u32,
    value: u64,
}

impl PrimePower {
    /// Checked construction: `p` must pass the deterministic primality test
    /// and `p^a` must stay below the loop-bound guard.
    pub fn new(p: u64, a: u32) -> Result<Self, MathError> {
        let pp = Self::new_unguarded(p, a)?;
        if pp.value > PRIME_POWER_GUARD {
            return Err(MathError::PrimePowerTooLarge { p, a });
        }
        Ok(pp)
    }

    /// Construction without the loop-bound guard, for reference-path use
    /// where `p^a` only bounds a big-integer computation.
    pub fn new_unguarded(p: u64, a: u32) -> Result<Self, MathError> {
        if !is_prime(p) {
            return Err(MathError::NotPrime(p));
        }
        let mut value: u64 = 1;
        for _ in 0..a {
            value = value
                .checked_mul(p)
                .filter(|&v| v <= MAX_MODULUS)
                .ok_or(MathError::PrimePowerTooLarge { p, a })?;
        }
        Ok(PrimePower { p, a, value })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    /// `p^a`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `p^2`, the working modulus of most congruences here.
    pub fn p_squared(&self) -> u64 {
        self.p * self.p
    }

    /// `p^e` for an explicit exponent, checked against the modulus cap.
    pub fn pow(&self, e: u32) -> Result<u64, MathError> {
        let mut value: u64 = 1;
        for _ in 0..e {
            value = value
                .checked_mul(self.p)
                .filter(|&v| v <= MAX_MODULUS)
                .ok_or(MathError::PrimePowerTooLarge { p: self.p, a: e })?;
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_pow_basics() {
        assert_eq!(mod_pow(2, 0, 25).value(), 1);
        assert_eq!(mod_pow(2, 4, 25).value(), 16);
        // 13^2 = 169 ≡ 19, 19^2 = 361 ≡ 11 (mod 25)
        assert_eq!(mod_pow(13, 4, 25).value(), 11);
        assert_eq!(mod_pow(-1, 3, 7).value(), 6);
    }

    #[test]
    fn mod_inv_basics() {
        assert_eq!(mod_inv(1, 7).unwrap().value(), 1);
        assert_eq!(mod_inv(2, 25).unwrap().value(), 13);
        assert_eq!(
            mod_inv(3, 9),
            Err(MathError::NotInvertible { value: 3, modulus: 9, gcd: 3 })
        );
    }

    #[test]
    fn jacobi_basics() {
        assert_eq!(jacobi(5, 1).unwrap(), 1);
        assert_eq!(jacobi(0, 1).unwrap(), 1);
        assert_eq!(jacobi(-3, 5).unwrap(), -1);
        assert_eq!(jacobi(6, 3).unwrap(), 0);
        assert_eq!(jacobi(7, 3).unwrap(), 1);
        assert!(jacobi(1, 4).is_err());
        assert!(jacobi(1, 0).is_err());
    }

    #[test]
    fn jacobi_prime_power_denominator() {
        assert_eq!(jacobi_pow(2, 5, 0).unwrap(), 1);
        assert_eq!(jacobi_pow(2, 5, 1).unwrap(), -1);
        assert_eq!(jacobi_pow(2, 5, 2).unwrap(), 1);
        assert_eq!(jacobi_pow(10, 5, 3).unwrap(), 0);
    }

    #[test]
    fn euler_criterion_on_small_primes() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 1..p {
                let j = jacobi(a as i64, p).unwrap();
                let e = mod_pow(a as i64, (p - 1) / 2, p).value();
                let expected = if j == 1 { 1 } else { p - 1 };
                assert_eq!(e, expected, "Euler criterion failed at ({a}/{p})");
            }
        }
    }

    #[test]
    fn primality_small_and_carmichael() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael
        assert!(!is_prime(1_373_653));
        assert!(is_prime(1_000_003));
        assert!(is_prime((1 << 61) - 1)); // Mersenne prime
    }

    #[test]
    fn prime_power_construction() {
        let pp = PrimePower::new(5, 2).unwrap();
        assert_eq!(pp.value(), 25);
        assert_eq!(pp.p_squared(), 25);
        assert_eq!(PrimePower::new(5, 0).unwrap().value(), 1);
        assert_eq!(PrimePower::new(6, 1), Err(MathError::NotPrime(6)));
        assert!(PrimePower::new(2, 40).is_err());
        assert!(PrimePower::new_unguarded(2, 40).is_ok());
    }

    #[test]
    fn residue_sign_canonicalization() {
        assert_eq!(Residue::from_int(-1, 25).value(), 24);
        assert_eq!(Residue::from_int(-26, 25).value(), 24);
        assert_eq!(Residue::from_int(50, 25).value(), 0);
    }
}
