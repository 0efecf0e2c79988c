//! Streaming exact computation of `C(2k, k+d) mod p^e` for consecutive `k`
//! without factorials.
//!
//! The term-to-term recurrence `C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)`
//! divides by integers that `p` may divide, so terms are carried as a
//! [`PadicScaled`] pair `(unit, valuation)` where division is exact.

use crate::error::MathError;
use crate::modmath::{self, mod_inv, mulmod, PrimePower, Residue};

/// A number stored as `p^val * unit` with `unit` coprime to `p` and kept
/// modulo `p^e`, plus a distinguished zero. Multiplication adds valuations
/// and multiplies units; division subtracts and multiplies by the unit
/// inverse. No rounding concept exists.
///
/// Valuations are tracked exactly rather than saturated at `e`: a later
/// division by `k+1 = p^t` can pull a valuation back below `e`, so a
/// saturated counter would under-report it. The counter is bounded by
/// `log_p` of the largest integer ever multiplied in, so exactness is free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicScaled {
    p: u64,
    e: u32,
    pe: u64,
    unit: u64,
    val: u32,
    zero: bool,
}

/// Strip all factors of `p` from `n`, returning `(n / p^v, v)`.
#[inline]
fn strip(mut n: u64, p: u64) -> (u64, u32) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (n, v)
}

impl PadicScaled {
    /// The distinguished zero.
    pub fn zero(p: u64, e: u32) -> Self {
        let pe = pow_checked(p, e);
        PadicScaled { p, e, pe, unit: 1 % pe, val: 0, zero: true }
    }

    pub fn one(p: u64, e: u32) -> Self {
        let pe = pow_checked(p, e);
        PadicScaled { p, e, pe, unit: 1 % pe, val: 0, zero: false }
    }

    /// Decompose an integer as `p^val * unit`. Zero maps to the
    /// distinguished zero.
    pub fn from_int(n: i64, p: u64, e: u32) -> Self {
        if n == 0 {
            return Self::zero(p, e);
        }
        let pe = pow_checked(p, e);
        let (u, v) = strip(n.unsigned_abs(), p);
        let mut unit = u % pe;
        if n < 0 {
            unit = (pe - unit) % pe;
        }
        PadicScaled { p, e, pe, unit, val: v, zero: false }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn valuation(&self) -> Option<u32> {
        if self.zero {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    /// The represented value modulo `p^e`; zero whenever `val >= e`.
    pub fn reduce(&self) -> u64 {
        if self.zero || self.val >= self.e {
            return 0;
        }
        let mut scale = 1u64;
        for _ in 0..self.val {
            scale *= self.p;
        }
        mulmod(scale % self.pe, self.unit, self.pe)
    }

    /// Multiply by an integer.
    pub fn mul_int(&self, t: u64) -> Self {
        if self.zero || t == 0 {
            return Self::zero(self.p, self.e);
        }
        let (u, v) = strip(t, self.p);
        PadicScaled {
            unit: mulmod(self.unit, u % self.pe, self.pe),
            val: self.val + v,
            ..*self
        }
    }

    /// Divide exactly by a nonzero integer. Panics if the quotient would
    /// have negative valuation, which the binomial recurrences never
    /// produce.
    pub fn div_int(&self, t: u64) -> Self {
        assert!(t != 0, "division by zero");
        if self.zero {
            return *self;
        }
        let (u, v) = strip(t, self.p);
        assert!(self.val >= v, "negative valuation in exact division");
        let inv = mod_inv((u % self.pe) as i64, self.pe)
            .expect("stripped divisor is coprime to p")
            .value();
        PadicScaled { unit: mulmod(self.unit, inv, self.pe), val: self.val - v, ..*self }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.p, self.e), (rhs.p, rhs.e));
        if self.zero || rhs.zero {
            return Self::zero(self.p, self.e);
        }
        PadicScaled {
            unit: mulmod(self.unit, rhs.unit, self.pe),
            val: self.val + rhs.val,
            ..*self
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.p, self.e), (rhs.p, rhs.e));
        assert!(!rhs.zero, "division by zero");
        if self.zero {
            return *self;
        }
        assert!(self.val >= rhs.val, "negative valuation in exact division");
        let inv = mod_inv(rhs.unit as i64, self.pe).expect("unit is invertible").value();
        PadicScaled { unit: mulmod(self.unit, inv, self.pe), val: self.val - rhs.val, ..*self }
    }
}

fn pow_checked(p: u64, e: u32) -> u64 {
    let mut v: u64 = 1;
    for _ in 0..e {
        v = v
            .checked_mul(p)
            .filter(|&x| x <= modmath::MAX_MODULUS)
            .expect("p^e exceeds the modulus cap");
    }
    v
}

/// Convenience wrapper matching the operation contract.
pub fn padic_from_int(n: i64, p: u64, e: u32) -> PadicScaled {
    PadicScaled::from_int(n, p, e)
}

/// Streams `C(2k, k+d) mod p^e` for `k = 0, 1, ..., limit-1`.
#[derive(Debug, Clone)]
pub struct BinomStream {
    d: u8,
    limit: u64,
    k: u64,
    state: PadicScaled,
}

impl BinomStream {
    /// Stream bounded at `p^a` terms.
    pub fn new(pp: &PrimePower, d: u8, e: u32) -> Result<Self, MathError> {
        Self::with_limit(pp.p(), pp.value(), d, e)
    }

    /// Stream with an explicit term count, used by the residue-class
    /// sweeps that snapshot at several powers of `p` in one pass.
    pub fn with_limit(p: u64, limit: u64, d: u8, e: u32) -> Result<Self, MathError> {
        if !modmath::is_prime(p) {
            return Err(MathError::NotPrime(p));
        }
        if d > 1 {
            return Err(MathError::ParameterOutOfRange("column shift d must be 0 or 1"));
        }
        if e == 0 {
            return Err(MathError::ParameterOutOfRange("precision e must be at least 1"));
        }
        Ok(BinomStream { d, limit, k: 0, state: PadicScaled::one(p, e) })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `p^e`, the modulus of emitted residues.
    pub fn modulus(&self) -> u64 {
        self.state.pe
    }

    /// Emit `C(2k, k+d) mod p^e` for the current `k`, then advance.
    pub fn next_central(&mut self) -> Result<Residue, MathError> {
        let d = self.d;
        let (c0, c1) = self.next_padic()?;
        let v = if d == 0 { c0.reduce() } else { c1.reduce() };
        Ok(Residue::new(v, self.state.pe))
    }

    /// Emit both columns as residues, then advance.
    pub fn next_pair(&mut self) -> Result<(u64, u64), MathError> {
        let (c0, c1) = self.next_padic()?;
        Ok((c0.reduce(), c1.reduce()))
    }

    /// Emit `(C(2k,k), C(2k,k+1))` in scaled form, then advance.
    pub fn next_padic(&mut self) -> Result<(PadicScaled, PadicScaled), MathError> {
        if self.k >= self.limit {
            return Err(MathError::StreamExhausted);
        }
        let k = self.k;
        let c0 = self.state;
        // C(2k, k+1) = C(2k, k) * k / (k+1); the k = 0 factor makes C(0, 1) = 0.
        let c1 = c0.mul_int(k).div_int(k + 1);
        self.advance();
        Ok((c0, c1))
    }

    fn advance(&mut self) {
        let k = self.k;
        self.state = self.state.mul_int(2 * (2 * k + 1)).div_int(k + 1);
        self.k += 1;
    }
}

/// `C(2p^a - 1, p^a - 1) mod p^2`, computed as `C(2n, n) / 2` at `n = p^a`
/// through the stream. Equals `1` for odd `p` and `1 + p` for `p = 2`.
pub fn wolstenholme_check(pp: &PrimePower) -> Result<Residue, MathError> {
    let n = pp.value();
    let mut stream = BinomStream::with_limit(pp.p(), n + 1, 0, 2)?;
    let mut last = PadicScaled::one(pp.p(), 2);
    for _ in 0..=n {
        let (c0, _) = stream.next_padic()?;
        last = c0;
    }
    Ok(Residue::new(last.div_int(2).reduce(), pp.p_squared()))
}

/// Streams the `C(3k, k+t)` family for `t = -1, 0, 1`, used for sums of
/// order-2 Catalan numbers. The ratio between consecutive `C(3k, k)` is
/// `3(3k+1)(3k+2) / (2(2k+1)(k+1))`.
#[derive(Debug, Clone)]
pub struct Binom3kStream {
    limit: u64,
    k: u64,
    state: PadicScaled,
}

impl Binom3kStream {
    pub fn new(p: u64, limit: u64, e: u32) -> Result<Self, MathError> {
        if !modmath::is_prime(p) {
            return Err(MathError::NotPrime(p));
        }
        if e == 0 {
            return Err(MathError::ParameterOutOfRange("precision e must be at least 1"));
        }
        Ok(Binom3kStream { limit, k: 0, state: PadicScaled::one(p, e) })
    }

    /// Emit `(C(3k,k-1), C(3k,k), C(3k,k+1)) mod p^e`, then advance.
    pub fn next_triple(&mut self) -> Result<(u64, u64, u64), MathError> {
        if self.k >= self.limit {
            return Err(MathError::StreamExhausted);
        }
        let k = self.k;
        let center = self.state;
        // C(3k, k-1) = C(3k, k) * k / (2k+1); C(3k, k+1) = C(3k, k) * 2k / (k+1).
        let lo = center.mul_int(k).div_int(2 * k + 1);
        let hi = center.mul_int(2 * k).div_int(k + 1);
        self.state = self.state.mul_int(3 * (3 * k + 1) * (3 * k + 2)).div_int(2 * (2 * k + 1) * (k + 1));
        self.k += 1;
        Ok((lo.reduce(), center.reduce(), hi.reduce()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_int_examples() {
        let x = padic_from_int(20, 5, 2);
        assert_eq!(x.valuation(), Some(1));
        assert_eq!(x.unit(), 4);
        assert_eq!(x.reduce(), 20 % 25);

        let z = padic_from_int(0, 7, 2);
        assert!(z.is_zero());
        assert_eq!(z.reduce(), 0);

        // 252 = 2^2 * 3^2 * 7
        let y = padic_from_int(252, 3, 2);
        assert_eq!(y.valuation(), Some(2));
        assert_eq!(y.unit(), 28 % 9);
        assert_eq!(y.reduce(), 0);
    }

    #[test]
    fn negative_from_int() {
        let x = padic_from_int(-20, 5, 2);
        assert_eq!(x.reduce(), (25 - 20) % 25);
    }

    #[test]
    fn stream_small_central_values() {
        let pp = PrimePower::new(5, 1).unwrap();
        let mut s = BinomStream::new(&pp, 0, 2).unwrap();
        let values: Vec<u64> = (0..5).map(|_| s.next_central().unwrap().value()).collect();
        // C(0,0), C(2,1), C(4,2), C(6,3), C(8,4) mod 25
        assert_eq!(values, vec![1, 2, 6, 20, 70 % 25]);
        assert_eq!(s.next_central(), Err(MathError::StreamExhausted));
    }

    #[test]
    fn stream_shifted_column() {
        let pp = PrimePower::new(5, 1).unwrap();
        let mut s = BinomStream::new(&pp, 1, 2).unwrap();
        let values: Vec<u64> = (0..5).map(|_| s.next_central().unwrap().value()).collect();
        // C(0,1), C(2,2), C(4,3), C(6,4), C(8,5) mod 25
        assert_eq!(values, vec![0, 1, 4, 15, 56 % 25]);
    }

    #[test]
    fn stream_hits_zero_residue() {
        // C(10,5) = 252 ≡ 0 (mod 9)
        let pp = PrimePower::new(3, 2).unwrap();
        let mut s = BinomStream::new(&pp, 0, 2).unwrap();
        let mut last = 0;
        for _ in 0..6 {
            last = s.next_central().unwrap().value();
        }
        assert_eq!(last, 0);
    }

    #[test]
    fn valuation_recovers_after_deep_division() {
        // v_3(C(28,14)) = 3 then v_3(C(30,15)) = 2: the valuation must come
        // back down exactly even though it exceeded the precision.
        let pp = PrimePower::new(3, 2).unwrap();
        let mut s = BinomStream::with_limit(3, 20, 0, 2).unwrap();
        let mut vals = Vec::new();
        for _ in 0..16 {
            let (c0, _) = s.next_padic().unwrap();
            vals.push(c0.valuation().unwrap());
        }
        assert_eq!(vals[14], 3);
        assert_eq!(vals[15], 2);
    }

    #[test]
    fn wolstenholme_examples() {
        let w = wolstenholme_check(&PrimePower::new(5, 1).unwrap()).unwrap();
        assert_eq!(w.value(), 126 % 25); // C(9,4) = 126 ≡ 1
        assert_eq!(w.value(), 1);

        let w = wolstenholme_check(&PrimePower::new(3, 2).unwrap()).unwrap();
        assert_eq!(w.value(), 24310 % 9); // C(17,8) = 24310 ≡ 1
        assert_eq!(w.value(), 1);

        let w = wolstenholme_check(&PrimePower::new(2, 1).unwrap()).unwrap();
        assert_eq!(w.value(), 3); // C(3,1) = 3 ≡ 3 (mod 4)
    }

    #[test]
    fn triple_stream_small_values() {
        let mut s = Binom3kStream::new(5, 4, 2).unwrap();
        assert_eq!(s.next_triple().unwrap(), (0, 1, 0)); // k=0
        assert_eq!(s.next_triple().unwrap(), (1, 3, 3)); // C(3,0), C(3,1), C(3,2)
        assert_eq!(s.next_triple().unwrap(), (6 % 25, 15, 20 % 25)); // C(6,1..3)
        assert_eq!(s.next_triple().unwrap(), (9 * 4 % 25, 84 % 25, 126 % 25)); // C(9,2..4)
    }
}
