//! Batched row elimination over F_p. Reducer rows (monomial multiples of
//! basis elements, known pivots) come first; S-polynomial rows are
//! reduced against them and against each other with a dense 64-bit
//! accumulator per row and delayed modular reduction sized for 29-bit
//! moduli.

use crate::modarith::PrimeField;
use crate::polyring::{Monomial, Polynomial};

use super::symbolic::{ColumnSpace, Preprocessed};

/// Reduce an entry lazily only when further additions could overflow:
/// products are below 2^58 for 29-bit primes.
const OVERFLOW_GUARD: u64 = u64::MAX - ((1u64 << 29) * (1u64 << 29));

/// A sparse matrix row: strictly increasing column indices with nonzero
/// coefficients in `[1, p)`. Pivot rows are monic (coefficient 1 at the
/// first column).
#[derive(Clone, Debug)]
pub struct SparseRow {
    pub cols: Vec<u32>,
    pub coeffs: Vec<u32>,
}

impl SparseRow {
    fn pivot(&self) -> u32 {
        self.cols[0]
    }
}

pub struct EchelonOutcome {
    /// Fully reduced new polynomials in row-processing order.
    pub new_polys: Vec<Polynomial<u32>>,
    /// Per input S-row: did it reduce to zero?
    pub zero_flags: Vec<bool>,
    /// Per input S-row: eliminations performed on it.
    pub row_axpys: Vec<u64>,
    /// Matrix extent for memory reporting: rows x columns.
    pub cells: u64,
}

/// Convert a polynomial into a sparse row over the column space. Every
/// monomial of the polynomial must be a column.
fn to_row(p: &Polynomial<u32>, cols: &ColumnSpace) -> SparseRow {
    let mut row = SparseRow {
        cols: Vec::with_capacity(p.num_terms()),
        coeffs: Vec::with_capacity(p.num_terms()),
    };
    for (m, c) in p.terms() {
        row.cols.push(cols.col_of(m).expect("monomial missing from column space"));
        row.coeffs.push(*c);
    }
    debug_assert!(row.cols.windows(2).all(|w| w[0] < w[1]));
    row
}

/// Build the reducer rows named by preprocessing: `(column, basis idx)`
/// becomes the monic row `(columns[column] / lm(basis)) * basis`.
fn build_reducer_rows(
    pre: &Preprocessed,
    basis: &[Polynomial<u32>],
    field: &PrimeField,
) -> Vec<SparseRow> {
    pre.reducers
        .iter()
        .map(|&(col, idx)| {
            let g = &basis[idx as usize];
            debug_assert_eq!(*g.lc(), 1, "basis elements are monic");
            let u = pre.cols.columns[col as usize].checked_div(g.lm()).unwrap();
            let shifted = g.mul_term(&u, &1, field);
            let row = to_row(&shifted, &pre.cols);
            debug_assert_eq!(row.pivot(), col);
            row
        })
        .collect()
}

/// Eliminate the S-rows of one batch against the reducer rows and the
/// new rows discovered along the way. Returns the new polynomials (their
/// pivots are divisible by no basis leading monomial) and the zero-row
/// flags per S-row. Deterministic for a fixed S-row order regardless of
/// the worker-local thread count.
pub fn echelonize(
    srows: &[Polynomial<u32>],
    pre: &Preprocessed,
    basis: &[Polynomial<u32>],
    field: &PrimeField,
    threads: usize,
    axpy_counter: &mut u64,
) -> EchelonOutcome {
    let ncols = pre.cols.len();
    let reducer_rows = build_reducer_rows(pre, basis, field);

    // column -> reducer row
    let mut reducer_at: Vec<Option<u32>> = vec![None; ncols];
    for (i, r) in reducer_rows.iter().enumerate() {
        debug_assert!(reducer_at[r.pivot() as usize].is_none(), "one reducer per column");
        reducer_at[r.pivot() as usize] = Some(i as u32);
    }

    let cells = ((reducer_rows.len() + srows.len()) as u64) * ncols as u64;

    // phase 1: reduce every S-row against the reducer rows only; rows
    // are independent here, so this part may run on the worker's thread
    // allotment
    let semi: Vec<(SparseRow, u64)> = if threads > 1 && srows.len() > 1 {
        let chunk = srows.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = srows
                .chunks(chunk)
                .map(|part| {
                    let reducer_rows = &reducer_rows;
                    let reducer_at = &reducer_at;
                    let cols = &pre.cols;
                    scope.spawn(move || {
                        let mut dense = vec![0u64; ncols];
                        part.iter()
                            .map(|p| {
                                reduce_one(
                                    &to_row(p, cols),
                                    reducer_rows.as_slice(),
                                    reducer_at,
                                    &[],
                                    &[],
                                    &mut dense,
                                    field,
                                )
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("elimination worker panicked")).collect()
        })
    } else {
        let mut dense = vec![0u64; ncols];
        srows
            .iter()
            .map(|p| {
                reduce_one(&to_row(p, &pre.cols), &reducer_rows, &reducer_at, &[], &[], &mut dense, field)
            })
            .collect()
    };

    // phase 2: in fixed row order, finish each row against the new rows
    // found so far and collect pivots
    let mut new_rows: Vec<SparseRow> = Vec::new();
    let mut new_at: Vec<Option<u32>> = vec![None; ncols];
    let mut new_polys: Vec<Polynomial<u32>> = Vec::new();
    let mut zero_flags = Vec::with_capacity(srows.len());
    let mut row_axpys = Vec::with_capacity(srows.len());
    let mut dense = vec![0u64; ncols];

    for (row, axpys1) in semi {
        if row.cols.is_empty() {
            *axpy_counter += axpys1;
            zero_flags.push(true);
            row_axpys.push(axpys1);
            continue;
        }
        let (finished, axpys2) =
            reduce_one(&row, &reducer_rows, &reducer_at, &new_rows, &new_at, &mut dense, field);
        let total = axpys1 + axpys2;
        *axpy_counter += total;
        row_axpys.push(total);
        if finished.cols.is_empty() {
            zero_flags.push(true);
            continue;
        }
        zero_flags.push(false);
        // normalize monic
        let inv = field.inv(finished.coeffs[0]);
        let monic = SparseRow {
            cols: finished.cols.clone(),
            coeffs: finished.coeffs.iter().map(|&c| field.mul(c, inv)).collect(),
        };
        new_at[monic.pivot() as usize] = Some(new_rows.len() as u32);
        let terms: Vec<(Monomial, u32)> = monic
            .cols
            .iter()
            .zip(&monic.coeffs)
            .map(|(&c, &v)| (pre.cols.columns[c as usize], v))
            .collect();
        new_polys.push(Polynomial::from_sorted_terms(
            pre.cols.columns.first().map_or(1, |m| m.nvars()),
            terms,
        ));
        new_rows.push(monic);
    }

    EchelonOutcome { new_polys, zero_flags, row_axpys, cells }
}

/// Reduce one sparse row: scan columns left to right; eliminate every
/// entry that has a pivot row (reducer or new); keep the rest. Axpy
/// targets always lie strictly right of the eliminated column, so one
/// pass suffices, and the scan leaves the dense buffer all zero for
/// reuse. Returns the reduced sparse row and the number of
/// eliminations.
fn reduce_one(
    row: &SparseRow,
    reducer_rows: &[SparseRow],
    reducer_at: &[Option<u32>],
    new_rows: &[SparseRow],
    new_at: &[Option<u32>],
    dense: &mut [u64],
    field: &PrimeField,
) -> (SparseRow, u64) {
    if row.cols.is_empty() {
        return (SparseRow { cols: Vec::new(), coeffs: Vec::new() }, 0);
    }
    let p = field.prime() as u64;
    for (&c, &v) in row.cols.iter().zip(&row.coeffs) {
        dense[c as usize] = v as u64;
    }
    let mut axpys = 0u64;
    let mut out = SparseRow { cols: Vec::new(), coeffs: Vec::new() };

    for c in (row.cols[0] as usize)..dense.len() {
        let raw = dense[c];
        if raw == 0 {
            continue;
        }
        dense[c] = 0;
        let v = raw % p;
        if v == 0 {
            continue;
        }
        let pivot_row = reducer_at[c]
            .map(|i| &reducer_rows[i as usize])
            .or_else(|| new_at.get(c).and_then(|o| o.map(|i| &new_rows[i as usize])));
        match pivot_row {
            Some(r) => {
                axpys += 1;
                let mult = p - v;
                for (&rc, &rv) in r.cols[1..].iter().zip(&r.coeffs[1..]) {
                    let cell = &mut dense[rc as usize];
                    if *cell > OVERFLOW_GUARD {
                        *cell %= p;
                    }
                    *cell += mult * rv as u64;
                }
            }
            None => {
                out.cols.push(c as u32);
                out.coeffs.push(v as u32);
            }
        }
    }
    (out, axpys)
}
