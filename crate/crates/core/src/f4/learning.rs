//! Per-batch replay data recorded at the first prime: selected pairs,
//! zero-reduction flags, symbolic-preprocessing choices, and the
//! leading-monomial skeleton, with a compact versioned binary format.

use std::io::{self, Read, Write};

use crate::polyring::Monomial;

const MAGIC: &[u8; 8] = b"MGBLEARN";
const VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchRecord {
    /// Pairs selected for this batch, in selection order.
    pub pairs: Vec<(u32, u32)>,
    /// Flag per pair: did its S-polynomial reduce to zero?
    pub zero_flags: Vec<bool>,
    /// The closed monomial set, decreasing grevlex (column order).
    pub columns: Vec<Monomial>,
    /// Chosen reducer multiples as (column, basis index).
    pub reducers: Vec<(u32, u32)>,
    /// Leading monomials of the new polynomials, in insertion order.
    pub new_lms: Vec<Monomial>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LearningRecord {
    pub nvars: u8,
    /// Fingerprint of the input system this record belongs to; set by
    /// the session layer, zero when unused.
    pub system_hash: [u8; 32],
    /// Leading monomials after the initial inter-reduction of the input.
    pub initial_lms: Vec<Monomial>,
    pub batches: Vec<BatchRecord>,
    /// Leading-monomial skeleton of the final reduced basis.
    pub final_lms: Vec<Monomial>,
}

impl LearningRecord {
    pub fn zero_pair_count(&self) -> u64 {
        self.batches
            .iter()
            .map(|b| b.zero_flags.iter().filter(|&&z| z).count() as u64)
            .sum()
    }

    pub fn write_to(&self, w: &mut impl Write) -> io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&[self.nvars])?;
        w.write_all(&self.system_hash)?;
        write_monomials(w, &self.initial_lms)?;
        w.write_all(&(self.batches.len() as u32).to_le_bytes())?;
        for b in &self.batches {
            w.write_all(&(b.pairs.len() as u32).to_le_bytes())?;
            for &(i, j) in &b.pairs {
                w.write_all(&i.to_le_bytes())?;
                w.write_all(&j.to_le_bytes())?;
            }
            debug_assert_eq!(b.pairs.len(), b.zero_flags.len());
            for &z in &b.zero_flags {
                w.write_all(&[z as u8])?;
            }
            write_monomials(w, &b.columns)?;
            w.write_all(&(b.reducers.len() as u32).to_le_bytes())?;
            for &(c, g) in &b.reducers {
                w.write_all(&c.to_le_bytes())?;
                w.write_all(&g.to_le_bytes())?;
            }
            write_monomials(w, &b.new_lms)?;
        }
        write_monomials(w, &self.final_lms)?;
        Ok(())
    }

    pub fn read_from(r: &mut impl Read) -> Result<Self, LearningIoError> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(LearningIoError::BadMagic);
        }
        let version = read_u32(r)?;
        if version != VERSION {
            return Err(LearningIoError::VersionMismatch(version));
        }
        let mut nvars = [0u8; 1];
        r.read_exact(&mut nvars)?;
        let nvars = nvars[0];
        if nvars == 0 || nvars as usize > crate::polyring::MAX_VARS {
            return Err(LearningIoError::Malformed("variable count out of range"));
        }
        let mut system_hash = [0u8; 32];
        r.read_exact(&mut system_hash)?;
        let initial_lms = read_monomials(r, nvars)?;
        let nbatches = read_u32(r)? as usize;
        let mut batches = Vec::with_capacity(nbatches.min(1 << 20));
        for _ in 0..nbatches {
            let npairs = read_u32(r)? as usize;
            let mut pairs = Vec::with_capacity(npairs.min(1 << 20));
            for _ in 0..npairs {
                pairs.push((read_u32(r)?, read_u32(r)?));
            }
            let mut zero_flags = Vec::with_capacity(npairs);
            for _ in 0..npairs {
                let mut b = [0u8; 1];
                r.read_exact(&mut b)?;
                zero_flags.push(b[0] != 0);
            }
            let columns = read_monomials(r, nvars)?;
            let nred = read_u32(r)? as usize;
            let mut reducers = Vec::with_capacity(nred.min(1 << 20));
            for _ in 0..nred {
                reducers.push((read_u32(r)?, read_u32(r)?));
            }
            let new_lms = read_monomials(r, nvars)?;
            batches.push(BatchRecord { pairs, zero_flags, columns, reducers, new_lms });
        }
        let final_lms = read_monomials(r, nvars)?;
        Ok(LearningRecord { nvars, system_hash, initial_lms, batches, final_lms })
    }
}

fn write_monomials(w: &mut impl Write, ms: &[Monomial]) -> io::Result<()> {
    w.write_all(&(ms.len() as u32).to_le_bytes())?;
    for m in ms {
        w.write_all(m.exp_bytes())?;
    }
    Ok(())
}

fn read_monomials(r: &mut impl Read, nvars: u8) -> Result<Vec<Monomial>, LearningIoError> {
    let n = read_u32(r)? as usize;
    let mut out = Vec::with_capacity(n.min(1 << 22));
    let mut buf = vec![0u8; nvars as usize];
    for _ in 0..n {
        r.read_exact(&mut buf)?;
        let exps: Vec<u32> = buf.iter().map(|&b| b as u32).collect();
        out.push(
            Monomial::from_exps(nvars as usize, &exps)
                .map_err(|_| LearningIoError::Malformed("bad monomial"))?,
        );
    }
    Ok(out)
}

fn read_u32(r: &mut impl Read) -> Result<u32, LearningIoError> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

#[derive(Debug, thiserror::Error)]
pub enum LearningIoError {
    #[error("not a learning record (bad magic)")]
    BadMagic,
    #[error("unsupported learning record version {0}")]
    VersionMismatch(u32),
    #[error("malformed learning record: {0}")]
    Malformed(&'static str),
    #[error("truncated or unreadable learning record: {0}")]
    Io(#[from] io::Error),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.len(), exps).unwrap()
    }

    #[test]
    fn round_trip() {
        let rec = LearningRecord {
            nvars: 3,
            system_hash: [7u8; 32],
            initial_lms: vec![m(&[1, 0, 0]), m(&[0, 2, 0])],
            batches: vec![BatchRecord {
                pairs: vec![(0, 1), (1, 2)],
                zero_flags: vec![true, false],
                columns: vec![m(&[2, 1, 0]), m(&[1, 1, 0]), m(&[0, 0, 1])],
                reducers: vec![(0, 1), (1, 0)],
                new_lms: vec![m(&[0, 0, 1])],
            }],
            final_lms: vec![m(&[1, 0, 0]), m(&[0, 0, 1])],
        };
        let mut buf = Vec::new();
        rec.write_to(&mut buf).unwrap();
        let back = LearningRecord::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn rejects_truncation_and_bad_magic() {
        let rec = LearningRecord { nvars: 2, ..Default::default() };
        let mut buf = Vec::new();
        rec.write_to(&mut buf).unwrap();
        let cut = &buf[..buf.len() - 3];
        assert!(matches!(
            LearningRecord::read_from(&mut &cut[..]),
            Err(LearningIoError::Io(_))
        ));
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(matches!(
            LearningRecord::read_from(&mut bad.as_slice()),
            Err(LearningIoError::BadMagic)
        ));
        let mut wrong_version = buf;
        wrong_version[8] = 9;
        assert!(matches!(
            LearningRecord::read_from(&mut wrong_version.as_slice()),
            Err(LearningIoError::VersionMismatch(9))
        ));
    }
}
