//! Deterministic primality testing and the shared descending stream of
//! 29-bit working primes.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::field::ModArithError;

/// Deterministic Miller-Rabin for `u64`. The base set {2,3,5,7,11,13,
/// 17,19,23,29,31,37} is known to be exact over the whole u64 range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

const UPPER: u32 = 1 << 29;
const LOWER: u32 = 1 << 28;

/// Shared descending stream of 29-bit primes, starting at the largest
/// prime below 2^29. The index-to-prime map is cached so every worker
/// agrees on prime identity by index, and draws advance an atomic
/// cursor.
pub struct PrimeStream {
    cache: Mutex<Vec<u32>>,
    cursor: AtomicUsize,
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream { cache: Mutex::new(Vec::new()), cursor: AtomicUsize::new(0) }
    }

    /// The prime at a fixed stream position (0 = largest prime < 2^29).
    pub fn prime_at(&self, index: usize) -> Result<u32, ModArithError> {
        let mut cache = self.cache.lock().unwrap();
        while cache.len() <= index {
            let mut candidate = match cache.last() {
                Some(&p) => p - 1,
                None => UPPER - 1,
            };
            while candidate > LOWER && !is_prime(candidate as u64) {
                candidate -= 1;
            }
            if candidate <= LOWER {
                return Err(ModArithError::StreamExhausted);
            }
            cache.push(candidate);
        }
        Ok(cache[index])
    }

    /// Draw the next unused prime; `(index, prime)`.
    pub fn draw(&self) -> Result<(usize, u32), ModArithError> {
        let index = self.cursor.fetch_add(1, Ordering::SeqCst);
        Ok((index, self.prime_at(index)?))
    }

    /// Number of primes drawn so far.
    pub fn drawn(&self) -> usize {
        self.cursor.load(Ordering::SeqCst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trial-division oracle, independent of the Miller-Rabin path.
    fn is_prime_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn first_prime_is_largest_below_2pow29() {
        let stream = PrimeStream::new();
        let first = stream.prime_at(0).unwrap();
        assert_eq!(first, 536870909);
        // cross-check against the trial-division oracle
        assert!(is_prime_trial(first as u64));
        for n in (first + 1)..UPPER {
            assert!(!is_prime_trial(n as u64));
        }
    }

    #[test]
    fn stream_is_strictly_decreasing_and_prime() {
        let stream = PrimeStream::new();
        let mut prev = UPPER;
        for i in 0..50 {
            let p = stream.prime_at(i).unwrap();
            assert!(p < prev);
            assert!(is_prime_trial(p as u64));
            assert!(p > LOWER);
            prev = p;
        }
    }

    #[test]
    fn draws_are_deterministic_by_index() {
        let a = PrimeStream::new();
        let b = PrimeStream::new();
        for _ in 0..10 {
            let (ia, pa) = a.draw().unwrap();
            let pb = b.prime_at(ia).unwrap();
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..2000u64 {
            assert_eq!(is_prime(n), is_prime_trial(n), "disagree at {n}");
        }
        for n in (536870912 - 2000)..536870912u64 {
            assert_eq!(is_prime(n), is_prime_trial(n), "disagree at {n}");
        }
    }
}
