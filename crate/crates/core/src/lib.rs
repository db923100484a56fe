//! Groebner bases of polynomial ideals over the rationals by the
//! multi-modular method: F4 computations modulo a stream of 29-bit
//! primes, Chinese remaindering of the images, clustered rational
//! reconstruction with per-prime verification, learning/replay of the
//! F4 path, re-injection of reconstructed generators, and checkpointed
//! multi-stage sessions.

pub mod fingerprint;
pub mod modarith;
pub mod f4;
pub mod polyring;
pub mod reference;
pub mod systems;

pub use polyring::{Monomial, Polynomial};
