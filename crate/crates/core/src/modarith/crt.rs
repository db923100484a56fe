//! Scalar Chinese remaindering and the per-prime batch merger used when
//! folding a fresh prime image into many accumulated residues at once.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::field::{ModArithError, PrimeField};

/// Merge `r1 mod m1` with `r2 mod m2` into the unique residue modulo
/// `m1 * m2`. The moduli must be coprime.
pub fn crt_pair(
    r1: &BigUint,
    m1: &BigUint,
    r2: &BigUint,
    m2: &BigUint,
) -> Result<(BigUint, BigUint), ModArithError> {
    debug_assert!(r1 < m1 && r2 < m2);
    let inv = inv_mod(m1, m2).ok_or(ModArithError::NonCoprimeModuli)?;
    let r1_mod_m2 = r1 % m2;
    let delta = if r2 >= &r1_mod_m2 { r2 - &r1_mod_m2 } else { m2 - &r1_mod_m2 + r2 };
    let delta = delta * inv % m2;
    Ok((r1 + m1 * delta, m1 * m2))
}

/// `a^{-1} mod m`, or `None` when `gcd(a, m) != 1`.
pub fn inv_mod(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a % m);
    let m = BigInt::from(m.clone());
    let eg = a.extended_gcd(&m);
    if !eg.gcd.is_one() {
        return None;
    }
    let x = eg.x.mod_floor(&m);
    debug_assert!(!x.is_negative());
    x.to_biguint()
}

/// Precomputed merger for combining many residues modulo `m1` with their
/// images modulo a fresh word-sized prime `p`: one big-integer
/// multiply-add per coefficient.
pub struct PrimeMerger {
    m1: BigUint,
    p: u32,
    inv_m1_mod_p: u32,
}

impl PrimeMerger {
    pub fn new(m1: &BigUint, p: u32) -> Result<Self, ModArithError> {
        let f = PrimeField::new(p)?;
        let m1_mod_p = (m1 % BigUint::from(p)).to_u32().expect("residue fits u32");
        let inv = f.try_inv(m1_mod_p).ok_or(ModArithError::NonCoprimeModuli)?;
        Ok(PrimeMerger { m1: m1.clone(), p, inv_m1_mod_p: inv })
    }

    /// The unique value modulo `m1 * p` congruent to `r1 mod m1` and to
    /// `r2 mod p`.
    pub fn merge(&self, r1: &BigUint, r2: u32) -> BigUint {
        debug_assert!(r2 < self.p);
        let p64 = self.p as u64;
        let r1_mod_p = (r1 % BigUint::from(self.p)).to_u64().unwrap();
        let delta = (r2 as u64 + p64 - r1_mod_p) % p64;
        let delta = (delta as u128 * self.inv_m1_mod_p as u128 % p64 as u128) as u64;
        r1 + &self.m1 * BigUint::from(delta)
    }

    pub fn combined_modulus(&self) -> BigUint {
        &self.m1 * BigUint::from(self.p)
    }
}
