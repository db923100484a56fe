//! Scalar rational reconstruction: recover a bounded fraction from its
//! residue modulo a large integer via the half-extended Euclid walk.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::crt::inv_mod;
use super::field::PrimeField;

/// Reconstructed fractions are plain `num_rational` values: reduced,
/// positive denominator.
pub type Rational = BigRational;

/// Try to recover `a/b` with `a ≡ b·r (mod m)` from the residue `r`.
///
/// The extended Euclid walk over `(m, r)` is scanned from the first
/// remainder at or below `floor(sqrt(m/2))`; a row `(rem, t)` is
/// accepted when it yields a reduced fraction with denominator coprime
/// to `m` inside the uniqueness bound `2·|a|·b < m`. Failure is a
/// normal return: the caller merges more primes and retries.
pub fn rational_reconstruct(r: &BigUint, m: &BigUint) -> Option<Rational> {
    debug_assert!(r < m, "residue must be reduced modulo m");
    if m.is_one() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }

    let threshold = BigInt::from((m / 2u32).sqrt());
    let m_int = BigInt::from(m.clone());

    let mut r0 = m_int.clone();
    let mut r1 = BigInt::from(r.clone());
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();

    loop {
        if r1 <= threshold {
            if let Some(q) = accept(&r1, &t1, &m_int, m) {
                return Some(q);
            }
        }
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
}

fn accept(rem: &BigInt, t: &BigInt, m_int: &BigInt, m: &BigUint) -> Option<Rational> {
    if t.is_zero() {
        return None;
    }
    let num_abs = rem.abs();
    let den_abs = t.abs();
    // uniqueness-grade bound: 2 |a| b < m
    if BigInt::from(2) * &num_abs * &den_abs >= *m_int {
        return None;
    }
    if !num_abs.gcd(&den_abs).is_one() {
        return None;
    }
    let den_u = den_abs.to_biguint().unwrap();
    if !(den_u.gcd(m)).is_one() {
        return None;
    }
    let (num, den) = if t.is_negative() { (-rem.clone(), den_abs) } else { (rem.clone(), den_abs) };
    Some(BigRational::new_raw(num, den))
}

/// Map a rational into the residue ring modulo `m`: `a * b^{-1} mod m`.
/// `None` when the denominator shares a factor with `m`.
pub fn rational_to_residue(q: &Rational, m: &BigUint) -> Option<BigUint> {
    let den = q.denom().to_biguint().expect("denominator is positive");
    let inv = inv_mod(&den, m)?;
    let num_mod = bigint_mod(q.numer(), m);
    Some(num_mod * inv % m)
}

/// Map a rational into F_p. `None` when p divides the denominator.
pub fn rational_mod_p(q: &Rational, field: &PrimeField) -> Option<u32> {
    let p = BigUint::from(field.prime());
    let den = (q.denom().to_biguint().unwrap() % &p).to_u32().unwrap();
    let den_inv = field.try_inv(den)?;
    let num = bigint_mod(q.numer(), &p).to_u32().unwrap();
    Some(field.mul(num, den_inv))
}

fn bigint_mod(a: &BigInt, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    let r = a.mod_floor(&m_int);
    debug_assert_ne!(r.sign(), Sign::Minus);
    r.to_biguint().unwrap()
}
