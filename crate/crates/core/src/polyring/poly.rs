//! Sparse polynomials in canonical form: terms strictly decreasing in
//! grevlex order, no zero coefficients, zero polynomial = empty list.

use std::cmp::Ordering;

use super::monomial::Monomial;
use super::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: u8,
    terms: Vec<(Monomial, C)>,
}

impl<C: Clone + PartialEq + std::fmt::Debug> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars: nvars as u8, terms: Vec::new() }
    }

    /// Canonicalize an arbitrary term list: sort decreasing, merge equal
    /// monomials, drop zeros.
    pub fn from_terms<R: Ring<Elem = C>>(
        nvars: usize,
        mut terms: Vec<(Monomial, C)>,
        ring: &R,
    ) -> Self {
        for (m, _) in &terms {
            assert_eq!(m.nvars(), nvars, "term from a different ring");
        }
        terms.sort_by(|a, b| b.0.grevlex_cmp(&a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = ring.add(lc, &c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !ring.is_zero(c));
        Polynomial { nvars: nvars as u8, terms: out }
    }

    /// Build directly from terms already strictly decreasing and zero
    /// free. Debug-asserted; used by hot paths that construct canonical
    /// data by design.
    pub fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grevlex_cmp(&w[1].0) == Ordering::Greater));
        Polynomial { nvars: nvars as u8, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading monomial. Panics on the zero polynomial.
    pub fn lm(&self) -> &Monomial {
        &self.terms.first().expect("zero polynomial has no leading monomial").0
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &C {
        &self.terms.first().expect("zero polynomial has no leading coefficient").1
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn add<R: Ring<Elem = C>>(&self, other: &Self, ring: &R) -> Self {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.grevlex_cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(&self.terms[i].1, &other.terms[j].1);
                    if !ring.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn neg<R: Ring<Elem = C>>(&self, ring: &R) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, ring.neg(c))).collect(),
        }
    }

    pub fn sub<R: Ring<Elem = C>>(&self, other: &Self, ring: &R) -> Self {
        self.add(&other.neg(ring), ring)
    }

    /// Multiply by a single term `(mono, coeff)`.
    pub fn mul_term<R: Ring<Elem = C>>(&self, mono: &Monomial, coeff: &C, ring: &R) -> Self {
        if ring.is_zero(coeff) {
            return Polynomial::zero(self.nvars());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), ring.mul(c, coeff)))
            .filter(|(_, c)| !ring.is_zero(c))
            .collect();
        // multiplying by a fixed monomial preserves the grevlex order
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn scale<R: Ring<Elem = C>>(&self, coeff: &C, ring: &R) -> Self {
        self.mul_term(&Monomial::one(self.nvars()), coeff, ring)
    }

    /// Divide through by the leading coefficient.
    pub fn make_monic<F: Field<Elem = C>>(&self, field: &F) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = field.inv(self.lc());
        self.scale(&inv, field)
    }

    pub fn is_monic<R: Ring<Elem = C>>(&self, ring: &R) -> bool {
        !self.is_zero() && *self.lc() == ring.one()
    }

    /// Map coefficients into another ring, dropping images of zero.
    /// Fails when the mapping itself fails for some coefficient.
    pub fn try_map_coeffs<D, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
        is_zero: impl Fn(&D) -> bool,
    ) -> Result<Polynomial<D>, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let d = f(c)?;
            if !is_zero(&d) {
                terms.push((*m, d));
            }
        }
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    /// Check canonical-form invariants; used by tests and debug asserts.
    pub fn is_canonical<R: Ring<Elem = C>>(&self, ring: &R) -> bool {
        self.terms.iter().all(|(m, c)| m.nvars() == self.nvars() && !ring.is_zero(c))
            && self
                .terms
                .windows(2)
                .all(|w| w[0].0.grevlex_cmp(&w[1].0) == Ordering::Greater)
    }
}

impl<C: std::fmt::Debug> std::fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{m:?}")?;
        }
        Ok(())
    }
}
