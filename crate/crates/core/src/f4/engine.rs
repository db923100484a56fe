//! Reduced Groebner basis modulo a prime via batched S-pair reduction
//! with matrix elimination, in plain, record, or replay mode.

use crate::modarith::PrimeField;
use crate::polyring::reduce::{interreduce, normal_form};
use crate::polyring::{Monomial, Polynomial};

use super::learning::{BatchRecord, LearningRecord};
use super::matrix::echelonize;
use super::pairs::{CriticalPair, PairQueue};
use super::symbolic::{symbolic_preprocess, ColumnSpace, Preprocessed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Plain,
    Record,
    Replay,
}

/// One prime image of the reduced basis: monic, inter-reduced, sorted by
/// increasing grevlex leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularBasis {
    pub prime: u32,
    pub polys: Vec<Polynomial<u32>>,
}

impl ModularBasis {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| *p.lm()).collect()
    }

    pub fn term_count(&self) -> usize {
        self.polys.iter().map(|p| p.num_terms()).sum()
    }
}

#[derive(Clone, Debug, Default)]
pub struct EngineStats {
    pub batches: u64,
    pub pairs_selected: u64,
    pub zero_rows: u64,
    pub axpys: u64,
    /// Eliminations spent on rows whose pair is flagged zero in the
    /// learning record; replay must keep this at zero.
    pub zero_flagged_axpys: u64,
    pub peak_matrix_cells: u64,
}

pub struct F4Run {
    pub basis: ModularBasis,
    pub record: Option<LearningRecord>,
    pub stats: EngineStats,
}

#[derive(Debug, thiserror::Error)]
pub enum F4Error {
    #[error("unlucky prime: {0}")]
    UnluckyPrime(String),
    #[error("new basis element repeats an existing leading term")]
    DuplicateLeadingTerm,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// S-polynomial of two monic polynomials; the leading terms cancel.
pub fn spair(f: &Polynomial<u32>, g: &Polynomial<u32>, field: &PrimeField) -> Polynomial<u32> {
    debug_assert_eq!(*f.lc(), 1);
    debug_assert_eq!(*g.lc(), 1);
    let lcm = f.lm().lcm(g.lm());
    let uf = lcm.checked_div(f.lm()).unwrap();
    let ug = lcm.checked_div(g.lm()).unwrap();
    f.mul_term(&uf, &1, field).sub(&g.mul_term(&ug, &1, field), field)
}

/// Compute the reduced Groebner basis of `system` modulo the field
/// prime. In record mode the returned `LearningRecord` captures the
/// whole reduction path; in replay mode the recorded path is followed,
/// rows recorded as zero-reducing are skipped outright, and any
/// deviation of the leading-monomial skeleton reports the prime as
/// unlucky. `threads` is the worker-local budget for splitting the
/// matrix elimination.
pub fn gbasis_mod_p(
    system: &[Polynomial<u32>],
    field: &PrimeField,
    mode: Mode,
    learning: Option<&LearningRecord>,
    max_pairs: usize,
    threads: usize,
) -> Result<F4Run, F4Error> {
    let replay = match (mode, learning) {
        (Mode::Replay, Some(rec)) => Some(rec),
        (Mode::Replay, None) => {
            return Err(F4Error::InvalidInput("replay mode needs a learning record".into()))
        }
        _ => None,
    };

    let nvars = system
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.nvars())
        .ok_or_else(|| F4Error::InvalidInput("empty or all-zero system".into()))?;
    if let Some(rec) = replay {
        if rec.nvars as usize != nvars {
            return Err(F4Error::InvalidInput("learning record variable count mismatch".into()));
        }
    }

    let mut stats = EngineStats::default();
    let mut basis: Vec<Polynomial<u32>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut queue = PairQueue::new();
    let mut record = (mode == Mode::Record).then(|| LearningRecord {
        nvars: nvars as u8,
        ..Default::default()
    });

    let finish_trivial = |field: &PrimeField, stats: EngineStats, mut record: Option<LearningRecord>| {
        let one = Polynomial::from_sorted_terms(nvars, vec![(Monomial::one(nvars), 1u32)]);
        if let Some(rec) = record.as_mut() {
            rec.final_lms = vec![Monomial::one(nvars)];
        }
        Ok(F4Run {
            basis: ModularBasis { prime: field.prime(), polys: vec![one] },
            record,
            stats,
        })
    };

    // initial inter-reduction: insert the generators one at a time
    for f in system {
        if f.is_zero() {
            continue;
        }
        debug_assert_eq!(f.nvars(), nvars);
        let r = normal_form(f, &basis, field);
        if r.is_zero() {
            continue;
        }
        let r = r.make_monic(field);
        if r.is_nonzero_constant() {
            return finish_trivial(field, stats, record);
        }
        lms.push(*r.lm());
        alive.push(true);
        basis.push(r);
        queue.update(&lms, &mut alive, basis.len() - 1)?;
    }

    if let Some(rec) = record.as_mut() {
        rec.initial_lms = lms.clone();
    }
    if let Some(rec) = replay {
        if rec.initial_lms != lms {
            return Err(F4Error::UnluckyPrime(
                "initial leading monomials deviate from the record".into(),
            ));
        }
    }

    let mut batch_no = 0usize;
    while !queue.is_empty() {
        let batch = queue.select_batch(max_pairs);
        stats.batches += 1;
        stats.pairs_selected += batch.len() as u64;

        let recorded_batch = match replay {
            Some(rec) => Some(rec.batches.get(batch_no).ok_or_else(|| {
                F4Error::UnluckyPrime("more batches than the record".into())
            })?),
            None => None,
        };
        if let Some(rb) = recorded_batch {
            let got: Vec<(u32, u32)> = batch.iter().map(|p| (p.i, p.j)).collect();
            if got != rb.pairs {
                return Err(F4Error::UnluckyPrime(format!(
                    "batch {batch_no} selected pairs deviate from the record"
                )));
            }
        }

        // build S-polynomial rows; in replay, skip pairs flagged zero
        let active: Vec<&CriticalPair> = match recorded_batch {
            Some(rb) => batch
                .iter()
                .zip(&rb.zero_flags)
                .filter(|(_, &z)| !z)
                .map(|(p, _)| p)
                .collect(),
            None => batch.iter().collect(),
        };
        let srows: Vec<Polynomial<u32>> = active
            .iter()
            .map(|p| spair(&basis[p.i as usize], &basis[p.j as usize], field))
            .collect();

        let pre: Preprocessed = match recorded_batch {
            Some(rb) => Preprocessed {
                cols: ColumnSpace::from_columns(rb.columns.clone()),
                reducers: rb.reducers.clone(),
            },
            None => {
                let seeds = batch.iter().flat_map(|p| {
                    let f = &basis[p.i as usize];
                    let g = &basis[p.j as usize];
                    let uf = p.lcm.checked_div(f.lm()).unwrap();
                    let ug = p.lcm.checked_div(g.lm()).unwrap();
                    f.terms()
                        .iter()
                        .map(move |(m, _)| m.mul(&uf))
                        .chain(g.terms().iter().map(move |(m, _)| m.mul(&ug)))
                        .collect::<Vec<_>>()
                });
                symbolic_preprocess(seeds, &basis, &lms)
            }
        };

        let outcome = echelonize(&srows, &pre, &basis, field, threads, &mut stats.axpys);
        stats.peak_matrix_cells = stats.peak_matrix_cells.max(outcome.cells);
        stats.zero_rows += outcome.zero_flags.iter().filter(|&&z| z).count() as u64;

        // zero flags aligned with the full batch
        let full_flags: Vec<bool> = match recorded_batch {
            Some(rb) => {
                // replayed rows must not silently vanish
                let mut it = outcome.zero_flags.iter();
                let mut flags = Vec::with_capacity(batch.len());
                for &recorded_zero in &rb.zero_flags {
                    if recorded_zero {
                        flags.push(true);
                    } else {
                        let actually_zero = *it.next().expect("row count mismatch");
                        if actually_zero {
                            return Err(F4Error::UnluckyPrime(format!(
                                "batch {batch_no}: a recorded pivot row reduced to zero"
                            )));
                        }
                        flags.push(false);
                    }
                }
                flags
            }
            None => outcome.zero_flags.clone(),
        };

        if mode == Mode::Record {
            let mut row_axpys = outcome.row_axpys.iter();
            for (&flag, axpys) in full_flags.iter().zip(row_axpys.by_ref()) {
                if flag {
                    stats.zero_flagged_axpys += axpys;
                }
            }
        }

        // deterministic insertion order: increasing leading monomial
        let mut new_polys = outcome.new_polys;
        new_polys.sort_by(|a, b| a.lm().grevlex_cmp(b.lm()));
        if let Some(rb) = recorded_batch {
            let got: Vec<Monomial> = new_polys.iter().map(|p| *p.lm()).collect();
            if got != rb.new_lms {
                return Err(F4Error::UnluckyPrime(format!(
                    "batch {batch_no}: new leading monomials deviate from the record"
                )));
            }
        }
        if let Some(rec) = record.as_mut() {
            rec.batches.push(BatchRecord {
                pairs: batch.iter().map(|p| (p.i, p.j)).collect(),
                zero_flags: full_flags.clone(),
                columns: pre.cols.columns.clone(),
                reducers: pre.reducers.clone(),
                new_lms: new_polys.iter().map(|p| *p.lm()).collect(),
            });
        }

        for np in new_polys {
            if np.is_nonzero_constant() {
                return finish_trivial(field, stats, record);
            }
            lms.push(*np.lm());
            alive.push(true);
            basis.push(np);
            queue.update(&lms, &mut alive, basis.len() - 1)?;
        }
        batch_no += 1;
    }

    if let Some(rec) = replay {
        if batch_no != rec.batches.len() {
            return Err(F4Error::UnluckyPrime("fewer batches than the record".into()));
        }
    }

    let reduced = interreduce(basis, field);
    let final_lms: Vec<Monomial> = reduced.iter().map(|p| *p.lm()).collect();
    if let Some(rec) = record.as_mut() {
        rec.final_lms = final_lms.clone();
    }
    if let Some(rec) = replay {
        if rec.final_lms != final_lms {
            return Err(F4Error::UnluckyPrime(
                "final basis skeleton deviates from the record".into(),
            ));
        }
    }

    Ok(F4Run {
        basis: ModularBasis { prime: field.prime(), polys: reduced },
        record,
        stats,
    })
}

/// Inter-reduce a modular basis into canonical form: each element monic
/// and in normal form with respect to the others, sorted by increasing
/// grevlex leading monomial.
pub fn interreduce_basis(basis: ModularBasis, field: &PrimeField) -> ModularBasis {
    debug_assert_eq!(basis.prime, field.prime());
    ModularBasis { prime: basis.prime, polys: interreduce(basis.polys, field) }
}
