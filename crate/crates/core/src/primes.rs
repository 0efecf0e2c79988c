//! Prime enumeration via a segmented sieve.
//!
//! The long scans (Wall–Sun–Sun, composite counterexample search) iterate
//! over millions of candidates, so segments keep the working set small.

const SEGMENT_BITS: usize = 1 << 16;

/// Simple sieve of Eratosthenes, used for base primes and small limits.
pub fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Iterator over all primes `<= limit`, sieving one segment at a time.
pub struct SegmentedSieve {
    limit: u64,
    base: Vec<u64>,
    segment: Vec<bool>,
    seg_start: u64,
    cursor: usize,
    base_cursor: usize,
    in_base: bool,
}

impl SegmentedSieve {
    pub fn new(limit: u64) -> Self {
        let root = (limit as f64).sqrt() as u64 + 1;
        let base = simple_sieve(root);
        SegmentedSieve {
            limit,
            base,
            segment: Vec::new(),
            seg_start: 0,
            cursor: 0,
            base_cursor: 0,
            in_base: true,
        }
    }

    fn sieve_next_segment(&mut self) -> bool {
        let start = if self.seg_start == 0 {
            // first segment begins right after the base primes
            self.base.last().copied().unwrap_or(1) + 1
        } else {
            self.seg_start + SEGMENT_BITS as u64
        };
        if start > self.limit {
            return false;
        }
        let end = (start + SEGMENT_BITS as u64 - 1).min(self.limit);
        let len = (end - start + 1) as usize;
        self.segment.clear();
        self.segment.resize(len, true);
        for &p in &self.base {
            let first = start.div_ceil(p).max(p) * p;
            let mut j = first;
            while j <= end {
                self.segment[(j - start) as usize] = false;
                j += p;
            }
        }
        self.seg_start = start;
        self.cursor = 0;
        true
    }
}

impl Iterator for SegmentedSieve {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.in_base {
            if self.base_cursor < self.base.len() {
                let p = self.base[self.base_cursor];
                self.base_cursor += 1;
                if p <= self.limit {
                    return Some(p);
                }
            }
            self.in_base = false;
            if !self.sieve_next_segment() {
                return None;
            }
        }
        loop {
            while self.cursor < self.segment.len() {
                let i = self.cursor;
                self.cursor += 1;
                if self.segment[i] {
                    return Some(self.seg_start + i as u64);
                }
            }
            if !self.sieve_next_segment() {
                return None;
            }
        }
    }
}

/// All primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    SegmentedSieve::new(limit).collect()
}

/// All odd primes `<= limit`.
pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    SegmentedSieve::new(limit).filter(|&p| p != 2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmath::is_prime;

    #[test]
    fn agrees_with_simple_sieve() {
        assert_eq!(primes_up_to(1_000), simple_sieve(1_000));
        assert_eq!(primes_up_to(200_000), simple_sieve(200_000));
    }

    #[test]
    fn edge_limits() {
        assert!(primes_up_to(0).is_empty());
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(3), vec![2, 3]);
    }

    #[test]
    fn counts_match_pi() {
        assert_eq!(primes_up_to(10_000).len(), 1_229);
        assert_eq!(primes_up_to(100_000).len(), 9_592);
    }

    #[test]
    fn spot_check_against_miller_rabin() {
        let primes = primes_up_to(50_000);
        for &p in primes.iter().step_by(97) {
            assert!(is_prime(p));
        }
    }
}
