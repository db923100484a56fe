//! Sparse multivariate monomials with packed exponents and the graded
//! reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Hard cap on the ambient variable count. Exponents are packed one byte
/// each into a fixed-width array so monomials stay `Copy` and hashable
/// without heap traffic.
pub const MAX_VARS: usize = 16;

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = u8::MAX as u32;

/// A monomial: packed exponent vector plus cached total degree.
///
/// The variable count is fixed at construction; mixing monomials from
/// rings with different variable counts is a programming error and
/// asserts.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    nvars: u8,
    degree: u32,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    /// The unit monomial (all exponents zero).
    pub fn one(nvars: usize) -> Self {
        assert!(nvars >= 1 && nvars <= MAX_VARS, "variable count out of range");
        Monomial { nvars: nvars as u8, degree: 0, exps: [0; MAX_VARS] }
    }

    /// Build from an explicit exponent vector. Errors on length mismatch
    /// or per-variable exponent overflow.
    pub fn from_exps(nvars: usize, exps: &[u32]) -> Result<Self, MonomialError> {
        if nvars < 1 || nvars > MAX_VARS || exps.len() != nvars {
            return Err(MonomialError::VariableCount { expected: nvars, got: exps.len() });
        }
        let mut m = Monomial::one(nvars);
        let mut degree: u32 = 0;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(MonomialError::ExponentOverflow { var: i, exponent: e });
            }
            m.exps[i] = e as u8;
            degree += e;
        }
        m.degree = degree;
        Ok(m)
    }

    /// A single variable raised to a power.
    pub fn var_pow(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[var] = exp;
        Self::from_exps(nvars, &exps).expect("exponent overflow")
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, var: usize) -> u32 {
        debug_assert!(var < self.nvars());
        self.exps[var] as u32
    }

    pub fn exps(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps[..self.nvars()].iter().map(|&e| e as u32)
    }

    /// Raw packed exponent bytes; used by serializers and hashes.
    pub fn exp_bytes(&self) -> &[u8] {
        &self.exps[..self.nvars()]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Graded reverse lexicographic comparison: higher total degree wins;
    /// on ties the monomial with the smaller exponent in the last
    /// variable where they differ is the greater one.
    pub fn grevlex_cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Componentwise product. Exponent overflow is a hard error.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        let mut out = *self;
        for i in 0..self.nvars() {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            assert!(e <= MAX_EXPONENT, "exponent overflow in variable {i}");
            out.exps[i] = e as u8;
        }
        out.degree = self.degree + other.degree;
        out
    }

    /// Does `self` divide `other` componentwise?
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        if self.degree > other.degree {
            return false;
        }
        self.exps[..self.nvars()]
            .iter()
            .zip(&other.exps[..self.nvars()])
            .all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.nvars() {
            out.exps[i] = self.exps[i] - other.exps[i];
        }
        out.degree = self.degree - other.degree;
        Some(out)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        let mut out = *self;
        let mut degree = 0u32;
        for i in 0..self.nvars() {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            degree += out.exps[i] as u32;
        }
        out.degree = degree;
        out
    }

    /// True when the two monomials share no variable (their lcm is the
    /// plain product).
    pub fn coprime(&self, other: &Self) -> bool {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        self.exps[..self.nvars()]
            .iter()
            .zip(&other.exps[..self.nvars()])
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.nvars() {
            if self.exps[i] == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if self.exps[i] > 1 {
                write!(f, "^{}", self.exps[i])?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonomialError {
    #[error("exponent vector length {got} does not match variable count {expected}")]
    VariableCount { expected: usize, got: usize },
    #[error("exponent {exponent} for variable {var} exceeds the packed width")]
    ExponentOverflow { var: usize, exponent: u32 },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    #[test]
    fn grevlex_reflexive() {
        assert_eq!(m(&[2, 0]).grevlex_cmp(&m(&[2, 0])), Ordering::Equal);
    }

    #[test]
    fn grevlex_degree_tie_break() {
        // x^2 vs x*y with x > y: equal degree, x^2 has the smaller
        // exponent in the last differing variable (y), so it is greater.
        assert_eq!(m(&[2, 0]).grevlex_cmp(&m(&[1, 1])), Ordering::Greater);
        // x*z vs y^2 with x > y > z: both degree 2, x*z has the larger
        // exponent in z, so it is smaller.
        assert_eq!(m(&[1, 0, 1]).grevlex_cmp(&m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn grevlex_degree_first() {
        assert_eq!(m(&[3, 0]).grevlex_cmp(&m(&[1, 1])), Ordering::Greater);
        assert_eq!(m(&[0, 1]).grevlex_cmp(&m(&[2, 0])), Ordering::Less);
    }

    #[test]
    fn lcm_componentwise_max() {
        // lcm(x^2*y, y^3) = x^2*y^3
        assert_eq!(m(&[2, 1]).lcm(&m(&[0, 3])), m(&[2, 3]));
    }

    #[test]
    fn unit_divides_everything() {
        let one = Monomial::one(3);
        assert!(one.divides(&m(&[5, 0, 2])));
        assert!(one.divides(&one));
    }

    #[test]
    fn div_componentwise_difference() {
        // (x^2*y) / x = x*y
        assert_eq!(m(&[2, 1]).checked_div(&m(&[1, 0])), Some(m(&[1, 1])));
        // non-divisor
        assert_eq!(m(&[1, 0]).checked_div(&m(&[0, 1])), None);
    }

    #[test]
    fn exponent_overflow_is_hard_error() {
        assert!(Monomial::from_exps(2, &[300, 0]).is_err());
        let a = m(&[200, 0]);
        let b = m(&[100, 0]);
        let r = std::panic::catch_unwind(|| a.mul(&b));
        assert!(r.is_err());
    }

    #[test]
    fn degree_is_cached_sum() {
        let a = m(&[3, 1, 4]);
        assert_eq!(a.degree(), 8);
        assert_eq!(a.exps().sum::<u32>(), 8);
    }
}
