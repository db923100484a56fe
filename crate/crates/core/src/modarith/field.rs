//! Arithmetic in F_p for word-sized primes. Elements are `u32` values
//! in `[0, p)`; products go through `u64`.

use crate::polyring::ring::{Field, Ring};

use super::primes::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Build a prime field. The modulus must pass a deterministic
    /// primality test; the working primes of a session are drawn from
    /// the 29-bit stream, but small primes are accepted for testing.
    pub fn new(p: u32) -> Result<Self, ModArithError> {
        if p < 2 || !is_prime(p as u64) {
            return Err(ModArithError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_u64(&self, a: u64) -> u32 {
        (a % self.p as u64) as u32
    }

    /// Map a signed integer into `[0, p)`.
    pub fn from_i64(&self, a: i64) -> u32 {
        let p = self.p as i64;
        (a.rem_euclid(p)) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        if s >= p { (s - p) as u32 } else { s as u32 }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm;
    /// `None` for zero.
    pub fn try_inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime so gcd must be 1");
        Some(t0.rem_euclid(self.p as i64) as u32)
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.try_inv(a).expect("inversion of zero")
    }
}

impl Ring for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u32) -> u32 {
        PrimeField::neg(self, *a)
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::mul(self, *a, *b)
    }
}

impl Field for PrimeField {
    fn try_inv(&self, a: &u32) -> Option<u32> {
        PrimeField::try_inv(self, *a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModArithError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("moduli are not coprime")]
    NonCoprimeModuli,
    #[error("prime stream exhausted below 2^28")]
    StreamExhausted,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(536870909).is_ok());
    }

    #[test]
    fn mul_identity_and_square() {
        let f7 = PrimeField::new(7).unwrap();
        for a in 0..7 {
            assert_eq!(f7.mul(a, 1), a);
        }
        // 5 * 5 = 25 = 4 mod 7
        assert_eq!(f7.mul(5, 5), 4);
    }

    #[test]
    fn inverse() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(2), 4); // 2*4 = 8 = 1 mod 7
        assert_eq!(f7.try_inv(0), None);
        for a in 1..7 {
            assert_eq!(f7.mul(a, f7.inv(a)), 1);
        }
    }

    #[test]
    fn field_axioms_spot_checks() {
        let f = PrimeField::new(65537).unwrap();
        let vals = [0u32, 1, 2, 17, 255, 65536, 12345];
        for &a in &vals {
            for &b in &vals {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &vals {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn from_signed() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.from_i64(-3), 4);
        assert_eq!(f7.from_i64(10), 3);
    }
}
