//! F4-style Groebner basis engine modulo a prime with learning (record)
//! and replay modes.

pub mod engine;
pub mod learning;
pub mod matrix;
pub mod pairs;
pub mod symbolic;

pub use engine::{gbasis_mod_p, interreduce_basis, spair, EngineStats, F4Error, F4Run, Mode, ModularBasis};
pub use learning::{BatchRecord, LearningIoError, LearningRecord};
pub use pairs::{CriticalPair, PairQueue};
pub use symbolic::{symbolic_preprocess, ColumnSpace, Preprocessed};
