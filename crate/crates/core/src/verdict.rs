use crate::error::Result;
use crate::instrument::OpStats;
use crate::word::{Symbol, Word};

/// Outcome of feeding one value to a streaming validator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The prefix read so far is realisable. `alphabet` is the minimal
    /// alphabet size; `letter` is the witness letter assigned to the new
    /// position, when the engine fixes one online.
    Valid {
        alphabet: usize,
        letter: Option<Symbol>,
    },
    /// The value at this 1-based position cannot be extended to any word.
    Invalid { position: usize },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

/// Common surface of the three border-array validators.
pub trait PiValidator {
    /// Feeds the next array value.
    fn push(&mut self, value: i64) -> Result<Verdict>;

    /// Number of values accepted so far.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of the rejected value, if any.
    fn failed_at(&self) -> Option<usize>;

    fn alphabet_size(&self) -> usize;

    /// A word over a minimal alphabet whose border array is the accepted prefix.
    fn witness(&self) -> Result<Word>;

    fn ops(&self) -> &OpStats;

    /// Logical footprint of the engine state, in bits.
    fn memory_bits(&self) -> u64;
}

/// Feeds a whole stream, stopping at the first rejection.
pub fn run_all<V: PiValidator + ?Sized>(engine: &mut V, values: &[i64]) -> Result<Verdict> {
    let mut last = Verdict::Valid {
        alphabet: 0,
        letter: None,
    };
    for &v in values {
        last = engine.push(v)?;
        if !last.is_valid() {
            break;
        }
    }
    Ok(last)
}
