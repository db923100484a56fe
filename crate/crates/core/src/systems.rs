//! Builtin benchmark families.

use num_rational::BigRational;
use num_traits::One;

use crate::polyring::{Monomial, Polynomial, RationalField};

/// The cyclic-n system in n variables: for 1 <= k < n the k-th generator
/// is the sum over i of the product of k cyclically consecutive
/// variables starting at i; the last generator is the product of all
/// variables minus one. Variables are x0 > x1 > ... > x{n-1}.
pub fn cyclic(n: usize) -> Vec<Polynomial<BigRational>> {
    assert!(n >= 2, "cyclic-n needs at least two variables");
    let q = RationalField;
    let one: BigRational = One::one();
    let mut gens = Vec::with_capacity(n);
    for k in 1..n {
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut exps = vec![0u32; n];
            for j in 0..k {
                exps[(i + j) % n] += 1;
            }
            terms.push((Monomial::from_exps(n, &exps).unwrap(), one.clone()));
        }
        gens.push(Polynomial::from_terms(n, terms, &q));
    }
    let all = Monomial::from_exps(n, &vec![1u32; n]).unwrap();
    let unit = Monomial::one(n);
    gens.push(Polynomial::from_terms(
        n,
        vec![(all, one.clone()), (unit, -one)],
        &q,
    ));
    gens
}

/// Default variable names for the cyclic family: x0, x1, ...
pub fn cyclic_vars(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic3_matches_definition() {
        let sys = cyclic(3);
        assert_eq!(sys.len(), 3);
        // x0 + x1 + x2
        assert_eq!(sys[0].num_terms(), 3);
        assert!(sys[0].terms().iter().all(|(m, _)| m.degree() == 1));
        // x0*x1 + x1*x2 + x2*x0
        assert_eq!(sys[1].num_terms(), 3);
        assert!(sys[1].terms().iter().all(|(m, _)| m.degree() == 2));
        let m011 = Monomial::from_exps(3, &[0, 1, 1]).unwrap();
        assert!(sys[1].terms().iter().any(|(m, _)| *m == m011));
        // x0*x1*x2 - 1
        assert_eq!(sys[2].num_terms(), 2);
        assert_eq!(sys[2].lm().degree(), 3);
        assert!(sys[2].terms()[1].0.is_one());
    }

    #[test]
    fn generator_count_is_n() {
        for n in 2..=7 {
            assert_eq!(cyclic(n).len(), n);
        }
    }

    #[test]
    fn rejects_tiny_n() {
        assert!(std::panic::catch_unwind(|| cyclic(1)).is_err());
    }
}
