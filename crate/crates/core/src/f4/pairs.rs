//! Critical pair queue: Gebauer-Moller installation of new basis
//! elements and lowest-degree batch selection.

use crate::polyring::Monomial;

use super::engine::F4Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: u32,
    pub j: u32,
    pub lcm: Monomial,
}

impl CriticalPair {
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }
}

/// Pending S-pairs. `update` keeps the queue pruned with the product and
/// chain criteria; `select_batch` drains the lowest lcm degree.
#[derive(Default)]
pub struct PairQueue {
    pairs: Vec<CriticalPair>,
}

impl PairQueue {
    pub fn new() -> Self {
        PairQueue { pairs: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[CriticalPair] {
        &self.pairs
    }

    /// Install basis element `t`: form its pairs against the live
    /// elements, apply the coprime-lcm (product) criterion and the chain
    /// criterion to the candidates, prune older pairs whose lcm the new
    /// leading monomial strictly refines, and retire live elements whose
    /// leading monomial the new one strictly divides.
    ///
    /// `lms` holds the leading monomials of all basis elements including
    /// `t`; `alive[i]` is cleared here for retired elements. A new
    /// element whose leading monomial equals a live element's is an
    /// invariant violation.
    pub fn update(
        &mut self,
        lms: &[Monomial],
        alive: &mut [bool],
        t: usize,
    ) -> Result<(), F4Error> {
        let lt = lms[t];
        for i in 0..t {
            if alive[i] && lms[i] == lt {
                return Err(F4Error::DuplicateLeadingTerm);
            }
        }

        let cand: Vec<(u32, Monomial, bool)> = (0..t)
            .filter(|&i| alive[i])
            .map(|i| (i as u32, lms[i].lcm(&lt), lms[i].coprime(&lt)))
            .collect();

        // Gebauer-Moller candidate filter: a candidate survives when its
        // leading monomials are coprime (it will be dropped below by the
        // product criterion, but first it may dominate others) or when
        // no other candidate's lcm divides its lcm.
        let mut kept: Vec<(u32, Monomial, bool)> = Vec::new();
        for (pos, c) in cand.iter().enumerate() {
            let dominated = cand[pos + 1..].iter().any(|o| o.1.divides(&c.1))
                || kept.iter().any(|o| o.1.divides(&c.1));
            if c.2 || !dominated {
                kept.push(c.clone());
            }
        }

        // chain criterion on older pairs
        self.pairs.retain(|p| {
            !(lt.divides(&p.lcm)
                && lms[p.i as usize].lcm(&lt) != p.lcm
                && lms[p.j as usize].lcm(&lt) != p.lcm)
        });

        // product criterion: coprime-lcm candidates never enter the queue
        for (i, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(CriticalPair { i, j: t as u32, lcm });
            }
        }

        // retire strictly head-divisible older elements from pair
        // formation; they stay usable as reducers
        for i in 0..t {
            if alive[i] && lt.divides(&lms[i]) {
                alive[i] = false;
            }
        }

        Ok(())
    }

    /// All pairs of minimal lcm degree, truncated to at most `max_pairs`
    /// (0 = unlimited), with deterministic tie-breaking by lcm grevlex
    /// order and then the index pair. Selected pairs leave the queue.
    pub fn select_batch(&mut self, max_pairs: usize) -> Vec<CriticalPair> {
        let min_deg = match self.pairs.iter().map(|p| p.degree()).min() {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut batch: Vec<CriticalPair> = Vec::new();
        let mut rest: Vec<CriticalPair> = Vec::with_capacity(self.pairs.len());
        for p in self.pairs.drain(..) {
            if p.degree() == min_deg {
                batch.push(p);
            } else {
                rest.push(p);
            }
        }
        batch.sort_by(|a, b| {
            a.lcm.grevlex_cmp(&b.lcm).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        });
        if max_pairs > 0 && batch.len() > max_pairs {
            rest.extend(batch.split_off(max_pairs));
        }
        self.pairs = rest;
        batch
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    #[test]
    fn product_criterion_discards_coprime_pair() {
        // basis {x}, new element y: leading monomials coprime
        let mut q = PairQueue::new();
        let lms = vec![m(&[1, 0]), m(&[0, 1])];
        let mut alive = vec![true, true];
        q.update(&lms[..1], &mut alive[..1], 0).unwrap();
        q.update(&lms, &mut alive, 1).unwrap();
        assert!(q.is_empty());
    }

    #[test]
    fn chain_criterion_on_three_elements() {
        // basis {x^2, x*y} then new y^2:
        // candidates (x^2, y^2) lcm x^2y^2 and (x*y, y^2) lcm x*y^2;
        // x*y^2 divides x^2y^2, and x^2 vs y^2 are coprime, so only
        // (x*y, y^2) enters; the old pair (x^2, x*y) survives.
        let mut q = PairQueue::new();
        let lms = vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])];
        let mut alive = vec![true, true, true];
        q.update(&lms[..1], &mut alive[..1], 0).unwrap();
        q.update(&lms[..2], &mut alive[..2], 1).unwrap();
        assert_eq!(q.len(), 1);
        q.update(&lms, &mut alive, 2).unwrap();
        let mut got: Vec<(u32, u32)> = q.pairs().iter().map(|p| (p.i, p.j)).collect();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn equal_leading_term_is_rejected() {
        let mut q = PairQueue::new();
        let lms = vec![m(&[1, 1]), m(&[1, 1])];
        let mut alive = vec![true, true];
        q.update(&lms[..1], &mut alive[..1], 0).unwrap();
        assert!(matches!(
            q.update(&lms, &mut alive, 1),
            Err(F4Error::DuplicateLeadingTerm)
        ));
    }

    #[test]
    fn batch_selection_by_degree_with_truncation() {
        let mut q = PairQueue::new();
        q.pairs = vec![
            CriticalPair { i: 0, j: 1, lcm: m(&[2, 1]) },
            CriticalPair { i: 0, j: 2, lcm: m(&[1, 2]) },
            CriticalPair { i: 1, j: 2, lcm: m(&[4, 1]) },
        ];
        // degrees {3, 3, 5}: unlimited batch takes both degree-3 pairs
        let mut probe = PairQueue { pairs: q.pairs.clone() };
        let batch = probe.select_batch(0);
        assert_eq!(batch.len(), 2);
        assert_eq!(probe.len(), 1);
        // max_pairs = 1 takes the grevlex-smaller lcm: x*y^2 < x^2*y
        let batch = q.select_batch(1);
        assert_eq!(batch.len(), 1);
        assert_eq!(batch[0].lcm, m(&[1, 2]));
        assert_eq!(q.len(), 2);
    }

    #[test]
    fn repeated_batches_drain_in_nondecreasing_degree() {
        let mut q = PairQueue::new();
        q.pairs = vec![
            CriticalPair { i: 0, j: 1, lcm: m(&[1, 1]) },
            CriticalPair { i: 0, j: 2, lcm: m(&[3, 1]) },
            CriticalPair { i: 1, j: 2, lcm: m(&[0, 3]) },
            CriticalPair { i: 2, j: 3, lcm: m(&[2, 0]) },
        ];
        let mut last = 0;
        while !q.is_empty() {
            let batch = q.select_batch(0);
            assert!(!batch.is_empty());
            let d = batch[0].degree();
            assert!(d >= last);
            assert!(batch.iter().all(|p| p.degree() == d));
            last = d;
        }
    }
}
