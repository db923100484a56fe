//! Symbolic preprocessing: close the monomial set of a batch under
//! reduction and pick one reducer multiple per reducible monomial.

use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use crate::polyring::{Monomial, Polynomial};

/// The column space of one elimination: monomials sorted in decreasing
/// grevlex order (column 0 = greatest) with a reverse index.
pub struct ColumnSpace {
    pub columns: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl ColumnSpace {
    pub fn from_columns(columns: Vec<Monomial>) -> Self {
        debug_assert!(columns.windows(2).all(|w| w[0].grevlex_cmp(&w[1]).is_gt()));
        let index = columns.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        ColumnSpace { columns, index }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn col_of(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }
}

/// Result of preprocessing: the closed, sorted monomial set and the
/// chosen reducer multiples as `(column, basis index)`; the multiplier
/// is recovered as `columns[column] / lm(basis[index])`.
pub struct Preprocessed {
    pub cols: ColumnSpace,
    pub reducers: Vec<(u32, u32)>,
}

/// Close the monomial set seeded by `seeds` (the monomials of the
/// batch's S-polynomial halves): every monomial divisible by some basis
/// leading monomial gets a reducer multiple, chosen as the first
/// divisor in order of increasing basis index, and the multiple's
/// monomials are enqueued in turn. Monomials are processed in
/// decreasing grevlex order so the column list comes out sorted.
pub fn symbolic_preprocess(
    seeds: impl IntoIterator<Item = Monomial>,
    basis: &[Polynomial<u32>],
    lms: &[Monomial],
) -> Preprocessed {
    let mut pending: BinaryHeap<Monomial> = BinaryHeap::new();
    let mut seen: HashMap<Monomial, ()> = HashMap::new();
    for m in seeds {
        if let Entry::Vacant(e) = seen.entry(m) {
            e.insert(());
            pending.push(m);
        }
    }

    let mut columns: Vec<Monomial> = Vec::new();
    let mut choices: Vec<(Monomial, u32)> = Vec::new();

    while let Some(m) = pending.pop() {
        columns.push(m);
        let reducer = lms.iter().position(|lm| lm.divides(&m));
        if let Some(idx) = reducer {
            choices.push((m, idx as u32));
            let u = m.checked_div(&lms[idx]).unwrap();
            // the multiple's head is m itself; enqueue its tail
            for (tm, _) in &basis[idx].terms()[1..] {
                let shifted = tm.mul(&u);
                if let Entry::Vacant(e) = seen.entry(shifted) {
                    e.insert(());
                    pending.push(shifted);
                }
            }
        }
    }

    let cols = ColumnSpace::from_columns(columns);
    let reducers = choices
        .into_iter()
        .map(|(m, idx)| (cols.col_of(&m).unwrap(), idx))
        .collect();
    Preprocessed { cols, reducers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::PrimeField;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    #[test]
    fn closure_on_single_reducer() {
        // basis {x}, seed row x^2 + y: monomial set {x^2, y}, reducer
        // x*x chosen for x^2, y irreducible
        let f7 = PrimeField::new(7).unwrap();
        let x = Polynomial::from_terms(2, vec![(m(&[1, 0]), 1u32)], &f7);
        let lms = vec![*x.lm()];
        let pre = symbolic_preprocess([m(&[2, 0]), m(&[0, 1])], &[x], &lms);
        assert_eq!(pre.cols.columns, vec![m(&[2, 0]), m(&[0, 1])]);
        assert_eq!(pre.reducers, vec![(0, 0)]);
    }

    #[test]
    fn empty_batch_gives_empty_sets() {
        let pre = symbolic_preprocess([], &[], &[]);
        assert!(pre.cols.is_empty());
        assert!(pre.reducers.is_empty());
    }

    #[test]
    fn transitive_closure_pulls_in_reducer_tails() {
        // basis {x^2 - y}: seed x^3 needs reducer x*(x^2 - y), whose
        // tail contributes the new monomial x*y
        let f7 = PrimeField::new(7).unwrap();
        let g = Polynomial::from_terms(2, vec![(m(&[2, 0]), 1u32), (m(&[0, 1]), 6)], &f7);
        let lms = vec![*g.lm()];
        let pre = symbolic_preprocess([m(&[3, 0])], &[g], &lms);
        assert_eq!(pre.cols.columns, vec![m(&[3, 0]), m(&[1, 1])]);
        // x^3 reducible, x*y not (x^2 does not divide x*y)
        assert_eq!(pre.reducers, vec![(0, 0)]);
    }

    #[test]
    fn oldest_divisor_wins() {
        let f7 = PrimeField::new(7).unwrap();
        let a = Polynomial::from_terms(2, vec![(m(&[1, 0]), 1u32)], &f7);
        let b = Polynomial::from_terms(2, vec![(m(&[1, 1]), 1u32)], &f7);
        let lms = vec![*a.lm(), *b.lm()];
        let pre = symbolic_preprocess([m(&[1, 1])], &[a, b], &lms);
        // both divide x*y; index 0 is chosen
        assert_eq!(pre.reducers, vec![(0, 0)]);
    }
}
