//! Polynomial reduction: full normal forms and inter-reduction of a
//! basis whose leading monomials are pairwise non-divisible.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Field;

/// One recorded reduction step: which basis element was used, with what
/// monomial multiplier and coefficient factor.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep<C> {
    pub basis_index: usize,
    pub multiplier: Monomial,
    pub factor: C,
}

/// Full normal form of `f` with respect to `basis`: no term of the
/// result is divisible by any leading monomial of the basis. The
/// reducer for each step is the first (lowest index) basis element
/// whose leading monomial divides the term, so the result is
/// deterministic for a fixed basis order.
pub fn normal_form<F: Field>(
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    field: &F,
) -> Polynomial<F::Elem> {
    normal_form_traced(f, basis, field).0
}

/// Normal form together with the chain of reduction steps, so that
/// `f - remainder == sum(factor * multiplier * basis[idx])` can be
/// replayed and checked.
pub fn normal_form_traced<F: Field>(
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    field: &F,
) -> (Polynomial<F::Elem>, Vec<ReductionStep<F::Elem>>) {
    let nvars = f.nvars();
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut steps = Vec::new();

    'outer: while let Some((m, c)) = work.leading().map(|(m, c)| (*m, c.clone())) {
        for (idx, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if let Some(u) = m.checked_div(g.lm()) {
                let factor = field.div(&c, g.lc());
                let scaled = g.mul_term(&u, &factor, field);
                work = work.sub(&scaled, field);
                steps.push(ReductionStep { basis_index: idx, multiplier: u, factor });
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the remainder
        remainder.push((m, c));
        let rest = work.terms()[1..].to_vec();
        work = Polynomial::from_sorted_terms(nvars, rest);
    }

    (Polynomial::from_sorted_terms(nvars, remainder), steps)
}

/// Inter-reduce a generating set: repeatedly replace each element by its
/// full normal form with respect to the others until nothing changes,
/// dropping elements that reduce to zero, then make everything monic and
/// sort by increasing grevlex leading monomial. For a Groebner basis
/// input this yields the unique reduced basis; head-redundant elements
/// reduce away in the first sweep.
pub fn interreduce<F: Field>(
    elems: Vec<Polynomial<F::Elem>>,
    field: &F,
) -> Vec<Polynomial<F::Elem>> {
    let mut work: Vec<Polynomial<F::Elem>> =
        elems.into_iter().filter(|p| !p.is_zero()).map(|p| p.make_monic(field)).collect();
    work.sort_by(|a, b| a.lm().grevlex_cmp(b.lm()));

    loop {
        let mut changed = false;
        let mut i = 0;
        while i < work.len() {
            let current = work[i].clone();
            let others: Vec<Polynomial<F::Elem>> = work
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let reduced = normal_form(&current, &others, field);
            if reduced.is_zero() {
                work.remove(i);
                changed = true;
            } else {
                let reduced = reduced.make_monic(field);
                if reduced != current {
                    work[i] = reduced;
                    changed = true;
                }
                i += 1;
            }
        }
        if !changed {
            break;
        }
        work.sort_by(|a, b| a.lm().grevlex_cmp(b.lm()));
    }

    work
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::field::PrimeField;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    fn poly(f7: &PrimeField, terms: Vec<(Monomial, u32)>) -> Polynomial<u32> {
        Polynomial::from_terms(terms[0].0.nvars(), terms, f7)
    }

    #[test]
    fn self_reduction_is_zero() {
        let f7 = PrimeField::new(7).unwrap();
        let g = poly(&f7, vec![(m(&[2, 0]), 1), (m(&[0, 1]), 3)]);
        assert!(normal_form(&g, &[g.clone()], &f7).is_zero());
    }

    #[test]
    fn divisible_monomial_reduces_to_zero() {
        let f7 = PrimeField::new(7).unwrap();
        let x = poly(&f7, vec![(m(&[1]), 1)]);
        let x2 = poly(&f7, vec![(m(&[2]), 1)]);
        assert!(normal_form(&x2, &[x], &f7).is_zero());
    }

    #[test]
    fn single_step_reduction() {
        let f7 = PrimeField::new(7).unwrap();
        // normal_form(x^2 + y, {x^2 - y}) = 2y mod 7
        let f = poly(&f7, vec![(m(&[2, 0]), 1), (m(&[0, 1]), 1)]);
        let g = poly(&f7, vec![(m(&[2, 0]), 1), (m(&[0, 1]), 6)]);
        let r = normal_form(&f, &[g], &f7);
        assert_eq!(r.terms(), &[(m(&[0, 1]), 2)]);
    }

    #[test]
    fn trace_replays_to_f() {
        let f7 = PrimeField::new(7).unwrap();
        let f = poly(&f7, vec![(m(&[2, 1]), 3), (m(&[1, 1]), 2), (m(&[0, 0]), 5)]);
        let basis = vec![
            poly(&f7, vec![(m(&[1, 0]), 1), (m(&[0, 1]), 2)]),
            poly(&f7, vec![(m(&[0, 2]), 1), (m(&[0, 0]), 1)]),
        ];
        let (r, steps) = normal_form_traced(&f, &basis, &f7);
        // rebuild f = r + sum(factor * mult * g)
        let mut acc = r.clone();
        for s in &steps {
            let part = basis[s.basis_index].mul_term(&s.multiplier, &s.factor, &f7);
            acc = acc.add(&part, &f7);
        }
        assert_eq!(acc, f);
        // idempotence
        assert_eq!(normal_form(&r, &basis, &f7), r);
    }

    #[test]
    fn interreduce_splits_and_sorts() {
        let f7 = PrimeField::new(7).unwrap();
        // {x + y, x} -> {x, y}
        let a = poly(&f7, vec![(m(&[1, 0]), 1), (m(&[0, 1]), 1)]);
        let b = poly(&f7, vec![(m(&[1, 0]), 1)]);
        let red = interreduce(vec![a.clone(), b.clone()], &f7);
        assert_eq!(red.len(), 2);
        assert_eq!(red[0].terms(), &[(m(&[0, 1]), 1)]);
        assert_eq!(red[1].terms(), &[(m(&[1, 0]), 1)]);
        // permutation invariance and idempotence
        let red2 = interreduce(vec![b, a], &f7);
        assert_eq!(red, red2);
        assert_eq!(interreduce(red.clone(), &f7), red);
    }
}
