//! Slow reference Groebner engine used for differential testing of the
//! modular pipeline. Textbook Buchberger with the product and chain
//! criteria, one S-polynomial at a time; no batching, no matrices, no
//! learning. Shares only the polynomial substrate with the F4 path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polyring::monomial::Monomial;
use crate::polyring::poly::Polynomial;
use crate::polyring::reduce::{interreduce, normal_form};
use crate::polyring::ring::{Field, IntegerRing, RationalField};

/// Pending critical pairs maintained with the Gebauer-Moller filters and
/// selected by the sugar strategy (the plain lowest-degree strategy
/// suffers catastrophic coefficient swell over the rationals on systems
/// like cyclic6). Only leading monomials and sugar degrees matter here,
/// so the bookkeeping is shared by the field and the fraction-free
/// integer variants.
struct PairSet {
    pairs: Vec<(u32, u32, Monomial, u32)>,
}

impl PairSet {
    fn new() -> Self {
        PairSet { pairs: Vec::new() }
    }

    /// Install element `t` (its leading monomial is `lms[t]`): filter the
    /// new pairs by the product and chain criteria and prune old pairs
    /// whose lcm the new leading monomial strictly refines.
    fn update(&mut self, lms: &[Monomial], sugars: &[u32], alive: &[bool], t: usize) {
        let lt = lms[t];
        let cand: Vec<(u32, Monomial, bool)> = (0..t)
            .filter(|&i| alive[i])
            .map(|i| (i as u32, lms[i].lcm(&lt), lms[i].coprime(&lt)))
            .collect();

        let mut kept: Vec<(u32, Monomial, bool)> = Vec::new();
        for (pos, c) in cand.iter().enumerate() {
            let dominated = cand[pos + 1..]
                .iter()
                .any(|other| other.1.divides(&c.1))
                || kept.iter().any(|other| other.1.divides(&c.1));
            if c.2 || !dominated {
                kept.push(c.clone());
            }
        }

        // old-pair chain filter
        self.pairs.retain(|(i, j, lcm, _)| {
            !(lt.divides(lcm)
                && lms[*i as usize].lcm(&lt) != *lcm
                && lms[*j as usize].lcm(&lt) != *lcm)
        });

        // product criterion: coprime leading monomials never enter
        for (i, lcm, coprime) in kept {
            if !coprime {
                let sugar = pair_sugar(&lcm, lms, sugars, i as usize, t);
                self.pairs.push((i, t as u32, lcm, sugar));
            }
        }
    }

    /// Smallest pair by (sugar, lcm degree, lcm grevlex, indices).
    fn pop(&mut self) -> Option<(u32, u32, Monomial, u32)> {
        if self.pairs.is_empty() {
            return None;
        }
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.3.cmp(&b.3)
                    .then_with(|| a.2.degree().cmp(&b.2.degree()))
                    .then_with(|| a.2.grevlex_cmp(&b.2))
                    .then_with(|| (a.0, a.1).cmp(&(b.0, b.1)))
            })
            .map(|(i, _)| i)
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }
}

/// Sugar degree of a pair: the degree its S-polynomial would have if the
/// inputs had been homogenized.
fn pair_sugar(lcm: &Monomial, lms: &[Monomial], sugars: &[u32], i: usize, j: usize) -> u32 {
    let si = sugars[i] + lcm.degree() - lms[i].degree();
    let sj = sugars[j] + lcm.degree() - lms[j].degree();
    si.max(sj)
}

/// Reduced monic Groebner basis over an arbitrary coefficient field,
/// sorted by increasing grevlex leading monomial.
pub fn buchberger<F: Field>(
    system: &[Polynomial<F::Elem>],
    field: &F,
) -> Vec<Polynomial<F::Elem>> {
    let nvars = match system.iter().find(|p| !p.is_zero()) {
        Some(p) => p.nvars(),
        None => return Vec::new(),
    };

    let mut basis: Vec<Polynomial<F::Elem>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs = PairSet::new();

    let install = |f: Polynomial<F::Elem>,
                       sugar: u32,
                       basis: &mut Vec<Polynomial<F::Elem>>,
                       lms: &mut Vec<Monomial>,
                       sugars: &mut Vec<u32>,
                       alive: &mut Vec<bool>,
                       pairs: &mut PairSet| {
        let lm = *f.lm();
        lms.push(lm);
        sugars.push(sugar.max(lm.degree()));
        alive.push(true);
        let t = basis.len();
        basis.push(f);
        for i in 0..t {
            if alive[i] && lm.divides(&lms[i]) && lms[i] != lm {
                alive[i] = false;
            }
        }
        pairs.update(lms, sugars, alive, t);
    };

    for f in system {
        if f.is_zero() {
            continue;
        }
        let r = normal_form(f, &basis, field);
        if r.is_zero() {
            continue;
        }
        let r = r.make_monic(field);
        if r.is_nonzero_constant() {
            return vec![unit_poly(nvars, field)];
        }
        let sugar = f.lm().degree();
        install(r, sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
    }

    while let Some((i, j, lcm, sugar)) = pairs.pop() {
        let f = &basis[i as usize];
        let g = &basis[j as usize];
        let uf = lcm.checked_div(f.lm()).unwrap();
        let ug = lcm.checked_div(g.lm()).unwrap();
        let s = f
            .mul_term(&uf, &field.one(), field)
            .sub(&g.mul_term(&ug, &field.one(), field), field);
        let r = normal_form(&s, &basis, field);
        if r.is_zero() {
            continue;
        }
        let r = r.make_monic(field);
        if r.is_nonzero_constant() {
            return vec![unit_poly(nvars, field)];
        }
        install(r, sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
    }

    interreduce(basis, field)
}

fn unit_poly<F: Field>(nvars: usize, field: &F) -> Polynomial<F::Elem> {
    Polynomial::from_sorted_terms(nvars, vec![(Monomial::one(nvars), field.one())])
}

/// Reduced monic Groebner basis over the rationals, computed with
/// fraction-free integer arithmetic to keep coefficient growth in
/// check, then normalized to monic rationals at the end.
pub fn buchberger_rational(system: &[Polynomial<BigRational>]) -> Vec<Polynomial<BigRational>> {
    let nvars = match system.iter().find(|p| !p.is_zero()) {
        Some(p) => p.nvars(),
        None => return Vec::new(),
    };

    let mut basis: Vec<Polynomial<BigInt>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs = PairSet::new();

    let install = |f: Polynomial<BigInt>,
                       sugar: u32,
                       basis: &mut Vec<Polynomial<BigInt>>,
                       lms: &mut Vec<Monomial>,
                       sugars: &mut Vec<u32>,
                       alive: &mut Vec<bool>,
                       pairs: &mut PairSet| {
        let lm = *f.lm();
        lms.push(lm);
        sugars.push(sugar.max(lm.degree()));
        alive.push(true);
        let t = basis.len();
        basis.push(f);
        for i in 0..t {
            if alive[i] && lm.divides(&lms[i]) && lms[i] != lm {
                alive[i] = false;
            }
        }
        pairs.update(lms, sugars, alive, t);
    };

    for f in system {
        if f.is_zero() {
            continue;
        }
        let fi = clear_denominators(f);
        let r = int_normal_form(&fi, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_nonzero_constant() {
            return vec![unit_poly(nvars, &RationalField)];
        }
        let sugar = fi.lm().degree();
        install(r, sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
    }

    while let Some((i, j, lcm, sugar)) = pairs.pop() {
        let s = int_spoly(&basis[i as usize], &basis[j as usize], &lcm);
        let r = int_normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_nonzero_constant() {
            return vec![unit_poly(nvars, &RationalField)];
        }
        install(r, sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
    }

    let rational: Vec<Polynomial<BigRational>> = basis
        .into_iter()
        .map(|p| {
            p.try_map_coeffs::<BigRational, ()>(
                |c| Ok(BigRational::from_integer(c.clone())),
                |d| d.is_zero(),
            )
            .unwrap()
        })
        .collect();
    interreduce(rational, &RationalField)
}

/// Scale a rational polynomial to a primitive integer polynomial with a
/// positive leading coefficient.
pub fn clear_denominators(f: &Polynomial<BigRational>) -> Polynomial<BigInt> {
    if f.is_zero() {
        return Polynomial::zero(f.nvars());
    }
    let mut den_lcm = BigInt::one();
    for (_, c) in f.terms() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let terms: Vec<(Monomial, BigInt)> = f
        .terms()
        .iter()
        .map(|(m, c)| (*m, c.numer() * (&den_lcm / c.denom())))
        .collect();
    primitive_part(Polynomial::from_sorted_terms(f.nvars(), terms))
}

/// Strip the integer content and normalize the leading coefficient sign.
fn primitive_part(f: Polynomial<BigInt>) -> Polynomial<BigInt> {
    if f.is_zero() {
        return f;
    }
    let mut content = BigInt::zero();
    for (_, c) in f.terms() {
        content = content.gcd(c);
    }
    if f.lc().is_negative() {
        content = -content;
    }
    let terms = f.terms().iter().map(|(m, c)| (*m, c / &content)).collect();
    Polynomial::from_sorted_terms(f.nvars(), terms)
}

/// Fraction-free full normal form: pseudo-reduce every term of `f` by
/// the basis, cross-multiplying to stay in integer arithmetic, and
/// return the primitive part of the remainder. Work and remainder are
/// jointly content-stripped every few steps; without that the
/// cross-multiplications compound and coefficients explode on systems
/// like cyclic6.
fn int_normal_form(f: &Polynomial<BigInt>, basis: &[Polynomial<BigInt>]) -> Polynomial<BigInt> {
    let z = IntegerRing;
    let nvars = f.nvars();
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scaled_steps = 0u32;

    'outer: while let Some((m, c)) = work.leading().map(|(m, c)| (*m, c.clone())) {
        for g in basis {
            if let Some(u) = m.checked_div(g.lm()) {
                let gamma = c.gcd(g.lc());
                let scale_f = g.lc() / &gamma;
                let scale_g = &c / &gamma;
                if scale_f.is_one() {
                    work = work.sub(&g.mul_term(&u, &scale_g, &z), &z);
                } else {
                    work = work.scale(&scale_f, &z).sub(&g.mul_term(&u, &scale_g, &z), &z);
                    for (_, rc) in remainder.iter_mut() {
                        *rc = &*rc * &scale_f;
                    }
                    scaled_steps += 1;
                    if scaled_steps % 4 == 0 {
                        strip_joint_content(&mut work, &mut remainder);
                    }
                }
                continue 'outer;
            }
        }
        remainder.push((m, c));
        let rest = work.terms()[1..].to_vec();
        work = Polynomial::from_sorted_terms(nvars, rest);
    }

    primitive_part(Polynomial::from_sorted_terms(nvars, remainder))
}

/// Divide work and remainder by their common integer content.
fn strip_joint_content(work: &mut Polynomial<BigInt>, remainder: &mut Vec<(Monomial, BigInt)>) {
    let mut content = BigInt::zero();
    for (_, c) in work.terms() {
        content = content.gcd(c);
        if content.is_one() {
            return;
        }
    }
    for (_, c) in remainder.iter() {
        content = content.gcd(c);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() {
        return;
    }
    let terms = work.terms().iter().map(|(m, c)| (*m, c / &content)).collect();
    *work = Polynomial::from_sorted_terms(work.nvars(), terms);
    for (_, c) in remainder.iter_mut() {
        *c = &*c / &content;
    }
}

fn int_spoly(f: &Polynomial<BigInt>, g: &Polynomial<BigInt>, lcm: &Monomial) -> Polynomial<BigInt> {
    let z = IntegerRing;
    let gamma = f.lc().gcd(g.lc());
    let uf = lcm.checked_div(f.lm()).unwrap();
    let ug = lcm.checked_div(g.lm()).unwrap();
    let cf = g.lc() / &gamma;
    let cg = f.lc() / &gamma;
    primitive_part(f.mul_term(&uf, &cf, &z).sub(&g.mul_term(&ug, &cg, &z), &z))
}

/// Groebner-property certificate: every S-polynomial of `basis` has
/// normal form zero with respect to `basis`, and `basis` is
/// inter-reduced. The product criterion is applied, since coprime
/// leading monomials reduce to zero for any pair of polynomials.
pub fn is_reduced_groebner_basis<F: Field>(basis: &[Polynomial<F::Elem>], field: &F) -> bool {
    for (i, f) in basis.iter().enumerate() {
        if f.is_zero() || !f.is_monic(field) {
            return false;
        }
        // inter-reduced: no term divisible by another leading monomial
        for (j, g) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            if f.terms().iter().any(|(m, _)| g.lm().divides(m)) {
                return false;
            }
        }
    }
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            if f.lm().coprime(g.lm()) {
                continue;
            }
            let lcm = f.lm().lcm(g.lm());
            let uf = lcm.checked_div(f.lm()).unwrap();
            let ug = lcm.checked_div(g.lm()).unwrap();
            let s = f
                .mul_term(&uf, &field.one(), field)
                .sub(&g.mul_term(&ug, &field.one(), field), field);
            if !normal_form(&s, basis, field).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::field::PrimeField;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn single_generator() {
        let f7 = PrimeField::new(7).unwrap();
        let x = Polynomial::from_terms(2, vec![(m(&[1, 0]), 3u32)], &f7);
        let gb = buchberger(&[x], &f7);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].terms(), &[(m(&[1, 0]), 1)]);
    }

    #[test]
    fn textbook_two_generator_example() {
        // x^2 - y, xy - 1 over F_101: reduced grevlex basis
        // {x^2 - y, xy - 1, y^2 - x}
        let f = PrimeField::new(101).unwrap();
        let a = Polynomial::from_terms(2, vec![(m(&[2, 0]), 1u32), (m(&[0, 1]), 100)], &f);
        let b = Polynomial::from_terms(2, vec![(m(&[1, 1]), 1), (m(&[0, 0]), 100)], &f);
        let gb = buchberger(&[a, b], &f);
        assert_eq!(gb.len(), 3);
        assert!(is_reduced_groebner_basis(&gb, &f));
        // increasing grevlex order: y^2 < x*y < x^2
        let lms: Vec<Monomial> = gb.iter().map(|p| *p.lm()).collect();
        assert_eq!(lms, vec![m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn rational_engine_matches_field_engine_shape() {
        // same ideal over Q: x^2 - y, xy - 1
        let a = Polynomial::from_terms(
            2,
            vec![(m(&[2, 0]), q(1)), (m(&[0, 1]), q(-1))],
            &RationalField,
        );
        let b = Polynomial::from_terms(
            2,
            vec![(m(&[1, 1]), q(1)), (m(&[0, 0]), q(-1))],
            &RationalField,
        );
        let gb = buchberger_rational(&[a.clone(), b.clone()]);
        let gb_generic = buchberger(&[a, b], &RationalField);
        assert_eq!(gb, gb_generic);
        assert!(is_reduced_groebner_basis(&gb, &RationalField));
    }

    #[test]
    fn unit_ideal_collapses() {
        let f7 = PrimeField::new(7).unwrap();
        let a = Polynomial::from_terms(1, vec![(m(&[1]), 1u32)], &f7);
        let b = Polynomial::from_terms(1, vec![(m(&[1]), 1), (m(&[0]), 1)], &f7);
        let gb = buchberger(&[a, b], &f7);
        assert_eq!(gb.len(), 1);
        assert!(gb[0].is_nonzero_constant());
    }

    #[test]
    fn cyclic3_over_q() {
        // hand-checkable: reduced grevlex basis of cyclic3 is
        // {x0 + x1 + x2, x1^2 + x1*x2 + x2^2, x2^3 - 1}
        let sys = crate::systems::cyclic(3);
        let gb = buchberger_rational(&sys);
        assert_eq!(gb.len(), 3);
        assert_eq!(*gb[0].lm(), m(&[1, 0, 0]));
        assert_eq!(*gb[1].lm(), m(&[0, 2, 0]));
        assert_eq!(*gb[2].lm(), m(&[0, 0, 3]));
        assert_eq!(
            gb[1].terms(),
            &[(m(&[0, 2, 0]), q(1)), (m(&[0, 1, 1]), q(1)), (m(&[0, 0, 2]), q(1))]
        );
        assert_eq!(gb[2].terms(), &[(m(&[0, 0, 3]), q(1)), (m(&[0, 0, 0]), q(-1))]);
        assert!(is_reduced_groebner_basis(&gb, &RationalField));
    }
}
