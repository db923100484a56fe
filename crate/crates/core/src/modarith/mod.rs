//! 29-bit prime fields, the descending prime stream, scalar Chinese
//! remaindering, and scalar rational reconstruction.

pub mod crt;
pub mod field;
pub mod primes;
pub mod ratrec;

pub use crt::{crt_pair, inv_mod, PrimeMerger};
pub use field::{ModArithError, PrimeField};
pub use primes::{is_prime, PrimeStream};
pub use ratrec::{rational_mod_p, rational_reconstruct, rational_to_residue, Rational};
