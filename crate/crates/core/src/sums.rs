//! Composite sums: weighted central-binomial and Catalan sums mod `p^2`,
//! residue-class tables mod `p-1`, the `R_p(r)` correction term, power
//! sums, higher-order Catalan numbers, and exact closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::MathError;
use crate::modmath::{self, mod_inv, mod_pow, mulmod, PrimePower, Residue};
use crate::oracle::{big_mod, exact_binomial};
use crate::padicstream::{Binom3kStream, BinomStream};

/// Guard for one-pass residue-class sweeps.
const SWEEP_GUARD: u64 = 1 << 26;

/// A weighted sum specification: `sum C(2k, k+d) / m^k` over `k < p^a`,
/// with `gcd(m, p) = 1` enforced at construction.
#[derive(Debug, Clone, Copy)]
pub struct SumSpec {
    pp: PrimePower,
    m: i64,
    d: u8,
}

impl SumSpec {
    pub fn new(pp: PrimePower, m: i64, d: u8) -> Result<Self, MathError> {
        if modmath::reduce_signed(m, pp.p()) == 0 {
            return Err(MathError::NotInvertible { value: 0, modulus: pp.p(), gcd: pp.p() });
        }
        if d > 1 {
            return Err(MathError::ParameterOutOfRange("column shift d must be 0 or 1"));
        }
        Ok(SumSpec { pp, m, d })
    }

    pub fn prime_power(&self) -> &PrimePower {
        &self.pp
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn d(&self) -> u8 {
        self.d
    }
}

/// `sum_{k=0}^{p^a-1} C(2k, k+d) * m^{-k} mod p^2` in one streaming pass.
pub fn sum_central_weighted(spec: &SumSpec) -> Result<Residue, MathError> {
    let p2 = spec.pp.p_squared();
    let inv_m = mod_inv(spec.m, p2)?.value();
    let mut stream = BinomStream::new(&spec.pp, spec.d, 2)?;
    let mut weight = 1 % p2;
    let mut acc = 0u64;
    for _ in 0..spec.pp.value() {
        let term = stream.next_central()?.value();
        acc = (acc + mulmod(term, weight, p2)) % p2;
        weight = mulmod(weight, inv_m, p2);
    }
    Ok(Residue::new(acc, p2))
}

/// `sum_{k=1}^{p^a-1} C_k * m^{-k} mod p^2`, with the Catalan number taken
/// as `C(2k,k) - C(2k,k+1)` from a single stream pass.
pub fn sum_catalan_weighted(pp: &PrimePower, m: i64) -> Result<Residue, MathError> {
    let p2 = pp.p_squared();
    let inv_m = mod_inv(m, p2)?.value();
    let mut stream = BinomStream::new(pp, 0, 2)?;
    stream.next_pair()?; // k = 0 excluded
    let mut weight = inv_m;
    let mut acc = 0u64;
    for _ in 1..pp.value() {
        let (c0, c1) = stream.next_pair()?;
        acc = (acc + mulmod((c0 + p2 - c1) % p2, weight, p2)) % p2;
        weight = mulmod(weight, inv_m, p2);
    }
    Ok(Residue::new(acc, p2))
}

/// `sum_{k=1}^{p^a-1} (C(2k,k)/2) * m^{-k} mod p^2`. Each half is the
/// integer `C(2k-1, k-1)`, which keeps the sum meaningful for `p = 2`
/// where multiplying the full sum by an inverse of 2 would not be.
pub fn sum_central_halved(pp: &PrimePower, m: i64) -> Result<Residue, MathError> {
    let p2 = pp.p_squared();
    let inv_m = mod_inv(m, p2)?.value();
    let mut stream = BinomStream::new(pp, 0, 2)?;
    stream.next_padic()?;
    let mut weight = inv_m;
    let mut acc = 0u64;
    for _ in 1..pp.value() {
        let (c0, _) = stream.next_padic()?;
        acc = (acc + mulmod(c0.div_int(2).reduce(), weight, p2)) % p2;
        weight = mulmod(weight, inv_m, p2);
    }
    Ok(Residue::new(acc, p2))
}

/// Which term family a residue-class table accumulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    BinomD0,
    BinomD1,
    Catalan,
}

impl TableKind {
    pub fn name(&self) -> &'static str {
        match self {
            TableKind::BinomD0 => "binom_d0",
            TableKind::BinomD1 => "binom_d1",
            TableKind::Catalan => "catalan",
        }
    }
}

/// Sums over `0 < k < p^a` with `k ≡ r (mod p-1)`, one cell per residue
/// class `r`, all modulo `p^2`. For `p = 2` there is a single class.
#[derive(Debug, Clone)]
pub struct ResidueClassTable {
    pp: PrimePower,
    kind: TableKind,
    modulus: u64,
    cells: Vec<u64>,
}

impl ResidueClassTable {
    pub fn prime_power(&self) -> &PrimePower {
        &self.pp
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    /// Cell for class `r`, reading `r` modulo the class count.
    pub fn cell(&self, r: u64) -> u64 {
        self.cells[(r % self.cells.len() as u64) as usize]
    }
}

fn class_count(p: u64) -> usize {
    (p - 1).max(1) as usize
}

/// Build all three tables for `p^a` in a single stream pass.
pub fn residue_class_tables(pp: &PrimePower) -> Result<[ResidueClassTable; 3], MathError> {
    let p2 = pp.p_squared();
    let len = class_count(pp.p());
    let mut d0 = vec![0u64; len];
    let mut d1 = vec![0u64; len];
    let mut cat = vec![0u64; len];
    let mut stream = BinomStream::new(pp, 0, 2)?;
    stream.next_pair()?; // k = 0 excluded
    for k in 1..pp.value() {
        let (c0, c1) = stream.next_pair()?;
        let r = (k % len as u64) as usize;
        d0[r] = (d0[r] + c0) % p2;
        d1[r] = (d1[r] + c1) % p2;
        cat[r] = (cat[r] + c0 + p2 - c1) % p2;
    }
    let mk = |kind, cells| ResidueClassTable { pp: *pp, kind, modulus: p2, cells };
    Ok([mk(TableKind::BinomD0, d0), mk(TableKind::BinomD1, d1), mk(TableKind::Catalan, cat)])
}

/// Single-kind table.
pub fn residue_class_table(pp: &PrimePower, kind: TableKind) -> Result<ResidueClassTable, MathError> {
    let [d0, d1, cat] = residue_class_tables(pp)?;
    Ok(match kind {
        TableKind::BinomD0 => d0,
        TableKind::BinomD1 => d1,
        TableKind::Catalan => cat,
    })
}

/// Residue-class sums recorded at every power boundary `b = 0..=b_hi`,
/// all modulo `p^e`. `table(kind, b)[r]` is the sum over
/// `0 < k < p^b, k ≡ r (mod p-1)`.
pub struct ClassSumSnapshots {
    modulus: u64,
    d0: Vec<Vec<u64>>,
    d1: Vec<Vec<u64>>,
    catalan: Vec<Vec<u64>>,
}

impl ClassSumSnapshots {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn classes(&self) -> usize {
        self.d0[0].len()
    }

    pub fn table(&self, kind: TableKind, b: u32) -> &[u64] {
        match kind {
            TableKind::BinomD0 => &self.d0[b as usize],
            TableKind::BinomD1 => &self.d1[b as usize],
            TableKind::Catalan => &self.catalan[b as usize],
        }
    }
}

/// One pass over `0 < k < p^{b_hi}` accumulating all three kinds and
/// snapshotting the tables at every power of `p`.
pub fn class_sum_snapshots(p: u64, b_hi: u32, e: u32) -> Result<ClassSumSnapshots, MathError> {
    let mut limit: u64 = 1;
    for _ in 0..b_hi {
        limit = limit
            .checked_mul(p)
            .filter(|&v| v <= SWEEP_GUARD)
            .ok_or(MathError::PrimePowerTooLarge { p, a: b_hi })?;
    }
    let mut stream = BinomStream::with_limit(p, limit.max(1), 0, e)?;
    let pe = stream.modulus();
    let len = class_count(p);
    let mut d0 = vec![0u64; len];
    let mut d1 = vec![0u64; len];
    let mut cat = vec![0u64; len];
    let mut snaps = ClassSumSnapshots {
        modulus: pe,
        d0: Vec::with_capacity(b_hi as usize + 1),
        d1: Vec::with_capacity(b_hi as usize + 1),
        catalan: Vec::with_capacity(b_hi as usize + 1),
    };
    stream.next_pair()?; // k = 0 excluded from every table
    let mut boundary = 1u64;
    for k in 1..limit {
        if k == boundary {
            snaps.d0.push(d0.clone());
            snaps.d1.push(d1.clone());
            snaps.catalan.push(cat.clone());
            boundary *= p;
        }
        let (c0, c1) = stream.next_pair()?;
        let r = (k % len as u64) as usize;
        d0[r] = (d0[r] + c0) % pe;
        d1[r] = (d1[r] + c1) % pe;
        cat[r] = (cat[r] + c0 + pe - c1) % pe;
    }
    while snaps.d0.len() <= b_hi as usize {
        snaps.d0.push(d0.clone());
        snaps.d1.push(d1.clone());
        snaps.catalan.push(cat.clone());
    }
    Ok(snaps)
}

/// The correction term
/// `R_p(r) = sum_{s=0}^{(p-1)/2-r} C(2r+2s, r+s) / ((2s+1) C(2s, s))`
/// for `0 < r <= (p-1)/2`, and `0` otherwise.
///
/// The sum is a `p`-integral rational but not always an integer
/// (`R_7(1) = 11/3`), so it is carried exactly and reduced on demand.
pub fn rp(p: u64, r: u64) -> Result<BigRational, MathError> {
    if p < 3 || p % 2 == 0 {
        return Err(MathError::ParameterOutOfRange("R_p needs an odd prime"));
    }
    if r < 1 || r > p {
        return Err(MathError::ParameterOutOfRange("R_p is defined for r in 1..=p"));
    }
    let half = (p - 1) / 2;
    if r > half {
        return Ok(BigRational::zero());
    }
    let mut total = BigRational::zero();
    for s in 0..=(half - r) {
        let num = exact_binomial(2 * r + 2 * s, (r + s) as i64);
        let den = BigInt::from(2 * s + 1) * exact_binomial(2 * s, s as i64);
        total += BigRational::new(num, den);
    }
    Ok(total)
}

/// `R_p(r)` reduced modulo a power of `p`. Fails loudly if the reduced
/// denominator shares a factor with the modulus, which would falsify the
/// `p`-integrality the congruences rely on.
pub fn rp_mod(p: u64, r: u64, modulus: u64) -> Result<u64, MathError> {
    let x = rp(p, r)?;
    let den = big_mod(x.denom(), modulus);
    let inv = mod_inv(den as i64, modulus).map_err(|_| MathError::NotPIntegral { p })?;
    Ok(mulmod(big_mod(x.numer(), modulus), inv.value(), modulus))
}

/// Right-hand side of the residue-class congruences, dispatching on the
/// parity of `a`:
///
/// * odd `a`, `r` in `1..=p-1`: `C(2r, r+d)` resp. `C_r`;
/// * even `a`: `4^r (1 + p/2 + r(2^{p-1}-1)) - p R_p(r)` for the central
///   column (`r` in `1..=p`), `4^r (1 + p/2 + (r+2)(2^{p-1}-1)) +
///   p (R_p(r) - R_p(r+1)/2)` for the shifted column, and
///   `4^r (2 - 2^p) - p (2 R_p(r) - R_p(r+1)/2)` for Catalan numbers
///   (`r` in `1..=p-1`), all modulo `p^2` with `x/2` read as `x * inv(2)`.
pub fn theorem12_rhs(p: u64, a: u32, r: u64, kind: TableKind) -> Result<Residue, MathError> {
    if p < 3 || !modmath::is_prime(p) {
        return Err(MathError::ParameterOutOfRange("residue-class clauses need an odd prime"));
    }
    let p2 = p * p;
    if a % 2 == 1 {
        if r < 1 || r > p - 1 {
            return Err(MathError::ParameterOutOfRange("odd-power clauses need r in 1..=p-1"));
        }
        let c0 = big_mod(&exact_binomial(2 * r, r as i64), p2);
        let c1 = big_mod(&exact_binomial(2 * r, r as i64 + 1), p2);
        let value = match kind {
            TableKind::BinomD0 => c0,
            TableKind::BinomD1 => c1,
            TableKind::Catalan => (c0 + p2 - c1) % p2,
        };
        return Ok(Residue::new(value, p2));
    }
    let inv2 = mod_inv(2, p2)?.value();
    let pow4r = mod_pow(4, r, p2).value();
    let fermat = (mod_pow(2, p - 1, p2).value() + p2 - 1) % p2; // 2^{p-1} - 1
    let half_p = mulmod(p, inv2, p2);
    let value = match kind {
        TableKind::BinomD0 => {
            if r < 1 || r > p {
                return Err(MathError::ParameterOutOfRange("central clause needs r in 1..=p"));
            }
            let inner = (1 + half_p + mulmod(r % p2, fermat, p2)) % p2;
            let base = mulmod(pow4r, inner, p2);
            (base + p2 - mulmod(p, rp_mod(p, r, p2)?, p2)) % p2
        }
        TableKind::BinomD1 => {
            if r < 1 || r > p - 1 {
                return Err(MathError::ParameterOutOfRange("shifted clause needs r in 1..=p-1"));
            }
            let inner = (1 + half_p + mulmod((r + 2) % p2, fermat, p2)) % p2;
            let base = mulmod(pow4r, inner, p2);
            let correction =
                (rp_mod(p, r, p2)? + p2 - mulmod(rp_mod(p, r + 1, p2)?, inv2, p2)) % p2;
            (base + mulmod(p, correction, p2)) % p2
        }
        TableKind::Catalan => {
            if r < 1 || r > p - 1 {
                return Err(MathError::ParameterOutOfRange("Catalan clause needs r in 1..=p-1"));
            }
            let base = mulmod(pow4r, (2 + p2 - mod_pow(2, p, p2).value()) % p2, p2);
            let correction = (mulmod(2, rp_mod(p, r, p2)?, p2) + p2
                - mulmod(rp_mod(p, r + 1, p2)?, inv2, p2))
                % p2;
            (base + p2 - mulmod(p, correction, p2)) % p2
        }
    };
    Ok(Residue::new(value, p2))
}

/// Both order-`h` Catalan numbers at index `k`, exactly, via the
/// subtraction forms that avoid any division:
/// `C_k^(h) = C((h+1)k, k) - h C((h+1)k, k-1)` and
/// `Cbar_k^(h) = h C((h+1)k, k) - C((h+1)k, k+1)`.
pub fn higher_catalan(h: u32, k: u64) -> (BigInt, BigInt) {
    assert!(h >= 1, "order must be positive");
    let n = (h as u64 + 1) * k;
    let center = exact_binomial(n, k as i64);
    let first = &center - BigInt::from(h) * exact_binomial(n, k as i64 - 1);
    let second = BigInt::from(h) * &center - exact_binomial(n, k as i64 + 1);
    (first, second)
}

/// `(sum C_k^(2), sum Cbar_k^(2)) mod p` over `0 < k < p^a` with
/// `k ≡ 0 (mod p-1)`, streamed through the `C(3k, k+t)` recurrence.
pub fn higher_catalan_residue_sums(pp: &PrimePower) -> Result<(Residue, Residue), MathError> {
    let p = pp.p();
    let limit = pp.value();
    if limit > SWEEP_GUARD {
        return Err(MathError::PrimePowerTooLarge { p, a: pp.exponent() });
    }
    let len = class_count(p) as u64;
    let mut stream = Binom3kStream::new(p, limit.max(1), 1)?;
    stream.next_triple()?; // k = 0 excluded
    let mut acc_c = 0u64;
    let mut acc_cbar = 0u64;
    for k in 1..limit {
        let (lo, center, hi) = stream.next_triple()?;
        if k % len == 0 {
            acc_c = (acc_c + center + 2 * p - 2 * lo % p) % p;
            acc_cbar = (acc_cbar + 2 * center % p + p - hi) % p;
        }
    }
    Ok((Residue::new(acc_c, p), Residue::new(acc_cbar, p)))
}

/// `sum_{t=1}^{p-1} t^{pk} mod p^2`: equals `p - 1` when `p-1 | k` and
/// `0` otherwise.
pub fn power_sum(p: u64, k: u64) -> Result<Residue, MathError> {
    if p < 3 || !modmath::is_prime(p) {
        return Err(MathError::ParameterOutOfRange("power sums need an odd prime"));
    }
    let p2 = p * p;
    let mut acc = 0u64;
    for t in 1..p {
        acc = (acc + mod_pow(t as i64, p * k, p2).value()) % p2;
    }
    Ok(Residue::new(acc, p2))
}

/// The closed form for quarter-weighted central binomials: returns
/// `(4^n sum_{k<=n} C(2k,k)/4^k, (2n+1) C(2n,n))` as exact integers;
/// the two components are equal.
pub fn quarter_sum_closed_form(n: u64) -> (BigInt, BigInt) {
    assert!(n <= 5_000, "closed-form index exceeds guard");
    let mut binom = BigInt::one(); // C(2k, k)
    let mut acc = BigInt::one();
    for k in 1..=n {
        binom = binom * BigInt::from(4 * k - 2) / BigInt::from(k);
        acc = acc * BigInt::from(4) + &binom;
    }
    (acc, BigInt::from(2 * n + 1) * binom)
}

/// The alternating convolution identity: returns the exact pair
/// `(sum_{k=0}^n C(m,k)(-4)^k C(2(n-k), n-k),
///   4^n prod_{k=1}^n (1 - (2m+1)/(2k)))`;
/// the two components are equal.
pub fn alternating_convolution_identity(m: u64, n: u64) -> (BigRational, BigRational) {
    assert!(m <= 60 && n <= 60, "identity grid exceeds guard");
    let mut lhs = BigInt::zero();
    let mut sign = BigInt::one(); // (-4)^k
    for k in 0..=n {
        lhs += exact_binomial(m, k as i64) * &sign * exact_binomial(2 * (n - k), (n - k) as i64);
        sign *= BigInt::from(-4);
    }
    let mut rhs = BigRational::from_integer(BigInt::from(4).pow(n as u32));
    for k in 1..=n {
        rhs *= BigRational::new(
            BigInt::from(2 * k as i64 - (2 * m as i64 + 1)),
            BigInt::from(2 * k),
        );
    }
    (BigRational::from_integer(lhs), rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u64, a: u32) -> PrimePower {
        PrimePower::new(p, a).unwrap()
    }

    #[test]
    fn weighted_sum_examples() {
        let s = sum_central_weighted(&SumSpec::new(pp(5, 1), 1, 0).unwrap()).unwrap();
        assert_eq!(s.value(), 24); // 1+2+6+20+70 = 99 ≡ 24 (mod 25)
        let s = sum_central_weighted(&SumSpec::new(pp(5, 1), 1, 1).unwrap()).unwrap();
        assert_eq!(s.value(), 1); // 0+1+4+15+56 = 76 ≡ 1
        let s = sum_central_weighted(&SumSpec::new(pp(7, 1), 5, 0).unwrap()).unwrap();
        assert_eq!(s.value(), 6);
        let s = sum_central_weighted(&SumSpec::new(pp(5, 1), 2, 0).unwrap()).unwrap();
        assert_eq!(s.value(), 1);
    }

    #[test]
    fn weighted_sum_rejects_shared_factor() {
        assert!(SumSpec::new(pp(5, 1), 10, 0).is_err());
        assert!(SumSpec::new(pp(5, 1), -5, 0).is_err());
    }

    #[test]
    fn catalan_sum_examples() {
        assert_eq!(sum_catalan_weighted(&pp(7, 1), 1).unwrap().value(), 0); // 196 ≡ 0 (mod 49)
        assert_eq!(sum_catalan_weighted(&pp(3, 1), 1).unwrap().value(), 3); // C_1 + C_2 = 3
        assert_eq!(sum_catalan_weighted(&pp(5, 1), 4).unwrap().value(), 5); // 2^5 - 2 ≡ 5
    }

    #[test]
    fn class_table_examples() {
        let t = residue_class_table(&pp(3, 2), TableKind::BinomD0).unwrap();
        assert_eq!(t.cell(1), 7); // 2+20+252+3432 = 3706 ≡ 7 (mod 9)
        let t = residue_class_table(&pp(3, 2), TableKind::Catalan).unwrap();
        assert_eq!(t.cell(0), 3); // C_2+C_4+C_6+C_8 = 1578 ≡ 3 (mod 9)

        // one k per class when a = 1
        let t = residue_class_table(&pp(5, 1), TableKind::BinomD0).unwrap();
        for r in 1..=4u64 {
            assert_eq!(t.cell(r), big_mod(&exact_binomial(2 * r, r as i64), 25));
        }
    }

    #[test]
    fn table_bucketing_conserves_total() {
        for (p, a) in [(3u64, 3u32), (5, 2), (7, 2), (2, 5)] {
            let t = residue_class_table(&pp(p, a), TableKind::BinomD0).unwrap();
            let total: u64 = t.cells().iter().fold(0, |acc, &c| (acc + c) % t.modulus());
            let mut want = 0u64;
            let mut stream = BinomStream::new(&pp(p, a), 0, 2).unwrap();
            stream.next_pair().unwrap();
            for _ in 1..pp(p, a).value() {
                let (c0, _) = stream.next_pair().unwrap();
                want = (want + c0) % t.modulus();
            }
            assert_eq!(total, want);
        }
    }

    #[test]
    fn snapshots_match_direct_tables() {
        let snaps = class_sum_snapshots(3, 4, 2).unwrap();
        for b in 1..=4u32 {
            let t = residue_class_tables(&pp(3, b)).unwrap();
            assert_eq!(snaps.table(TableKind::BinomD0, b), t[0].cells());
            assert_eq!(snaps.table(TableKind::BinomD1, b), t[1].cells());
            assert_eq!(snaps.table(TableKind::Catalan, b), t[2].cells());
        }
        assert_eq!(snaps.table(TableKind::Catalan, 0), &[0, 0]);
    }

    #[test]
    fn rp_examples() {
        assert_eq!(rp(5, 1).unwrap(), BigRational::from_integer(BigInt::from(3)));
        assert_eq!(rp(3, 2).unwrap(), BigRational::zero());
        assert_eq!(rp(7, 5).unwrap(), BigRational::zero());
        // R_p((p-1)/2) = C(p-1, (p-1)/2)
        for p in [5u64, 7, 11, 13] {
            let r = (p - 1) / 2;
            assert_eq!(
                rp(p, r).unwrap(),
                BigRational::from_integer(exact_binomial(p - 1, r as i64))
            );
        }
        // not an integer, but 3 is invertible mod 7
        assert_eq!(rp(7, 1).unwrap(), BigRational::new(BigInt::from(11), BigInt::from(3)));
        assert!(rp(7, 0).is_err());
        assert!(rp(7, 8).is_err());
    }

    #[test]
    fn rp_mod_handles_rational_values() {
        // 11/3 mod 49: inv(3) = 33, 11*33 = 363 ≡ 20
        assert_eq!(rp_mod(7, 1, 49).unwrap(), 20);
        assert_eq!(rp_mod(5, 1, 25).unwrap(), 3);
    }

    #[test]
    fn theorem12_rhs_examples() {
        let r = theorem12_rhs(3, 2, 1, TableKind::BinomD0).unwrap();
        assert_eq!(r.value(), 7);
        let r = theorem12_rhs(5, 1, 2, TableKind::BinomD0).unwrap();
        assert_eq!(r.value(), 6); // C(4,2)
        let r = theorem12_rhs(3, 2, 2, TableKind::Catalan).unwrap();
        assert_eq!(r.value(), (2i64 - 8).rem_euclid(9) as u64); // 4^2(2-2^3) ≡ 2-2^3 (mod 9)
        assert!(theorem12_rhs(5, 1, 5, TableKind::BinomD0).is_err());
        assert!(theorem12_rhs(5, 2, 5, TableKind::BinomD1).is_err());
    }

    #[test]
    fn higher_catalan_examples() {
        assert_eq!(higher_catalan(2, 2), (BigInt::from(3), BigInt::from(10)));
        assert_eq!(higher_catalan(1, 4), (BigInt::from(14), BigInt::from(14)));
        for h in 1..=4u32 {
            assert_eq!(higher_catalan(h, 0), (BigInt::one(), BigInt::from(h)));
        }
    }

    #[test]
    fn higher_catalan_sum_examples() {
        let (c, cbar) = higher_catalan_residue_sums(&pp(3, 1)).unwrap();
        assert_eq!((c.value(), cbar.value()), (0, 1)); // C_2^(2)=3, Cbar_2^(2)=10
        let (c, cbar) = higher_catalan_residue_sums(&pp(2, 1)).unwrap();
        assert_eq!((c.value(), cbar.value()), (1, 1)); // C_1^(2)=1, Cbar_1^(2)=3
        let (c, cbar) = higher_catalan_residue_sums(&pp(5, 1)).unwrap();
        assert_eq!((c.value(), cbar.value()), (0, 3)); // k=4: 55 ≡ 0, 198 ≡ 3
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(5, 0).unwrap().value(), 4);
        assert_eq!(power_sum(5, 4).unwrap().value(), 4);
        assert_eq!(power_sum(5, 1).unwrap().value(), 0); // 1+32+243+1024 = 1300
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(quarter_sum_closed_form(0), (BigInt::one(), BigInt::one()));
        let (lhs, rhs) = quarter_sum_closed_form(2);
        assert_eq!((lhs, rhs), (BigInt::from(30), BigInt::from(30)));
        let (lhs, rhs) = quarter_sum_closed_form(3);
        assert_eq!((lhs, rhs), (BigInt::from(140), BigInt::from(140)));
    }

    #[test]
    fn convolution_identity_examples() {
        let (lhs, rhs) = alternating_convolution_identity(0, 0);
        assert_eq!(lhs, BigRational::one());
        assert_eq!(rhs, BigRational::one());
        let (lhs, rhs) = alternating_convolution_identity(0, 2);
        assert_eq!(lhs, BigRational::from_integer(BigInt::from(6)));
        assert_eq!(rhs, lhs);
        let (lhs, rhs) = alternating_convolution_identity(1, 1);
        assert_eq!(lhs, BigRational::from_integer(BigInt::from(-2)));
        assert_eq!(rhs, lhs);
    }
}
