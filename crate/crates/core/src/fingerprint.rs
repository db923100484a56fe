//! Stable identity hash for an input system, used to tie learning
//! records and checkpoint archives to the exact system they came from.

use num_bigint::Sign;
use sha2::{Digest, Sha256};

use crate::modarith::Rational;
use crate::polyring::Polynomial;

/// SHA-256 over a canonical encoding of the variable list and the
/// canonical-form generators. Whitespace or term-order differences in
/// the source text do not change the fingerprint; editing the system
/// does.
pub fn system_fingerprint(vars: &[String], system: &[Polynomial<Rational>]) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update((vars.len() as u32).to_le_bytes());
    for v in vars {
        h.update((v.len() as u32).to_le_bytes());
        h.update(v.as_bytes());
    }
    h.update((system.len() as u32).to_le_bytes());
    for p in system {
        h.update((p.num_terms() as u32).to_le_bytes());
        for (m, c) in p.terms() {
            h.update(m.exp_bytes());
            let (sign, mag) = c.numer().to_bytes_le();
            h.update([match sign {
                Sign::Minus => 2u8,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            }]);
            h.update((mag.len() as u32).to_le_bytes());
            h.update(&mag);
            let (_, den) = c.denom().to_bytes_le();
            h.update((den.len() as u32).to_le_bytes());
            h.update(&den);
        }
    }
    h.finalize().into()
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn from_hex(s: &str) -> Option<Vec<u8>> {
    if s.len() % 2 != 0 {
        return None;
    }
    (0..s.len() / 2).map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok()).collect()
}
