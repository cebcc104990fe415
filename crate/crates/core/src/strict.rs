//! Online validation of strict border arrays.
//!
//! The engine keeps the pointwise-largest border array consistent with the
//! strict values read so far. Everything before the last slope is fixed
//! and fed to an embedded [`OnlineValidator`]; the last slope is stored as
//! its start `i` and start value `base`, with `A[j] = base + (j - i)`.
//! Each new strict value may push `base` down through the candidate list
//! of `i` or close the slope where the strict value meets it.

use std::collections::VecDeque;

use crate::border::{BorderArray, StrictBorderArray};
use crate::error::{Error, Result};
use crate::instrument::OpStats;
use crate::online::OnlineValidator;
use crate::suffix::OnlineSuffixIndex;
use crate::verdict::{PiValidator, Verdict};
use crate::word::Word;

/// Positions of the last slope that can still answer a height query.
/// A later position `j'` dominates `j` when `A'[j'] - j' > A'[j] - j`.
#[derive(Clone, Debug, Default)]
pub struct DominanceList {
    list: VecDeque<(usize, i64)>,
    inserts: u64,
    removals: u64,
}

impl DominanceList {
    pub fn push(&mut self, j: usize, value: i64) {
        let key = value - j as i64;
        while matches!(self.list.back(), Some(&(_, k)) if k < key) {
            self.list.pop_back();
            self.removals += 1;
        }
        self.list.push_back((j, key));
        self.inserts += 1;
    }

    /// Drops every position before `i`.
    pub fn cut_before(&mut self, i: usize) {
        while matches!(self.list.front(), Some(&(j, _)) if j < i) {
            self.list.pop_front();
            self.removals += 1;
        }
    }

    pub fn head(&self) -> Option<usize> {
        self.list.front().map(|&(j, _)| j)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.list.iter().map(|&(j, _)| j)
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn inserts(&self) -> u64 {
        self.inserts
    }

    pub fn removals(&self) -> u64 {
        self.removals
    }
}

#[derive(Clone, Debug)]
pub struct SlopeValidator {
    // input, 1-based, input[0] = -1
    input: Vec<i64>,
    fixed: OnlineValidator,
    start: usize,
    base: usize,
    candidates: Vec<usize>,
    cand_idx: usize,
    dominance: DominanceList,
    suffixes: OnlineSuffixIndex,
    failed: Option<usize>,
    shadow: bool,
    ops: OpStats,
}

impl Default for SlopeValidator {
    fn default() -> Self {
        Self::new()
    }
}

impl SlopeValidator {
    pub fn new() -> Self {
        let mut fixed = OnlineValidator::new();
        fixed.push(0).expect("first value");
        SlopeValidator {
            input: vec![-1],
            fixed,
            start: 1,
            base: 0,
            candidates: vec![0],
            cand_idx: 0,
            dominance: DominanceList::default(),
            suffixes: OnlineSuffixIndex::new(),
            failed: None,
            shadow: false,
            ops: OpStats::default(),
        }
    }

    /// Re-checks every height and value query against a linear scan.
    /// Quadratic; meant for tests.
    pub fn with_shadow_checks(mut self) -> Self {
        self.shadow = true;
        self
    }

    fn n(&self) -> usize {
        self.input.len() - 1
    }

    /// Maximal border array consistent with the input, length `n + 1`.
    pub fn recovered_pi(&self) -> Result<BorderArray> {
        if let Some(position) = self.failed {
            return Err(Error::StateInvalid { position });
        }
        let mut a: Vec<usize> = self.fixed.values()[..self.start - 1].to_vec();
        a.extend((self.start..=self.n() + 1).map(|j| self.base + (j - self.start)));
        BorderArray::new(a)
    }

    /// First position of the last slope and its current value.
    pub fn last_slope(&self) -> (usize, usize) {
        (self.start, self.base)
    }

    pub fn committed(&self) -> &[usize] {
        &self.fixed.values()[..self.start - 1]
    }

    pub fn dominance(&self) -> &DominanceList {
        &self.dominance
    }

    /// All primitive steps: slope logic, suffix index and the embedded
    /// border-array validator.
    pub fn total_ops(&self) -> u64 {
        self.ops.total() + self.suffixes.steps() + self.fixed.ops().total()
    }

    fn slope_value(&self, j: usize) -> usize {
        self.base + (j - self.start)
    }

    fn reject(&mut self, position: usize) -> Verdict {
        self.failed = Some(position);
        self.ops.finish_push();
        Verdict::Invalid { position }
    }

    /// Smallest `j` in the slope with `A'[j] >= A[j]`, from the dominance head.
    fn height_query(&mut self) -> Option<usize> {
        self.ops.tick(1);
        let j = self
            .dominance
            .head()
            .filter(|&j| self.input[j] >= self.slope_value(j) as i64);
        if self.shadow {
            let naive =
                (self.start..=self.n()).find(|&j| self.input[j] >= self.slope_value(j) as i64);
            // the head may differ from the first hit only when it is already fatal
            match (j, naive) {
                (None, None) => {}
                (Some(h), Some(f)) if h == f || self.input[h] > self.slope_value(h) as i64 => {}
                other => panic!("height query mismatch: {other:?}"),
            }
        }
        j
    }

    fn naive_equal(&mut self, x: usize, y: usize, len: usize) -> bool {
        for t in 0..len {
            self.ops.tick(1);
            if self.input[x + t] != self.input[y + t] {
                return false;
            }
        }
        true
    }

    /// `A'[i..=n] == A'[base..=base+(n-i)]`, given that the same holds for
    /// `reference` in place of `base` on `[i..n-1]`.
    fn value_query(&mut self, reference: usize) -> bool {
        let n = self.n();
        let (i, base) = (self.start, self.base);
        let span = n - i;
        let l = reference - base;
        let answer = if l == 0 {
            self.ops.tick(1);
            self.input[n] == self.input[base + span]
        } else if l >= span {
            self.naive_equal(i, base, span + 1)
        } else {
            self.naive_equal(i, base, l)
                && {
                    self.ops.tick(1);
                    self.input[n] == self.input[base + span]
                }
                && self
                    .suffixes
                    .is_suffix_prefix_of_suffix(i, l, n - 1)
                    .expect("index covers 1..n-1")
        };
        if self.shadow {
            let naive = self.input[i..=n] == self.input[base..=base + span];
            assert_eq!(
                answer, naive,
                "value query mismatch at n={n}, i={i}, base={base}"
            );
        }
        answer
    }

    /// Feeds `A[from..=to]` to the embedded validator.
    fn feed(&mut self, from: usize, to: usize, first: usize) {
        for (k, j) in (from..=to).enumerate() {
            let v = self
                .fixed
                .push((first + k) as i64)
                .expect("fixed prefix is never rejected");
            assert!(v.is_valid(), "committed value at {j} rejected");
        }
    }

    fn commit(&mut self, j: usize) {
        let i = self.start;
        let fed = self.fixed.len();
        if fed < j {
            let from = fed + 1;
            self.feed(from, j, self.slope_value(from));
        }
        let next = self.slope_value(j) + 1;
        self.start = j + 1;
        self.dominance.cut_before(self.start);
        self.candidates = self.fixed.next_candidates();
        debug_assert_eq!(self.candidates[0], next);
        self.cand_idx = 1;
        self.base = self.candidates[1];
        self.ops.tick(1 + (j - i) as u64);
        self.fix_zero();
    }

    /// A zero start value is final, so its letter can be fixed now.
    fn fix_zero(&mut self) {
        if self.base == 0 && self.fixed.len() + 1 == self.start {
            self.feed(self.start, self.start, 0);
        }
    }

    fn adjust(&mut self, n: usize) -> Verdict {
        let mut reference = self.base;
        loop {
            self.ops.tick(1);
            if let Some(j) = self.height_query() {
                let aj = self.slope_value(j) as i64;
                if self.input[j] > aj {
                    return self.reject(n);
                }
                let (i, base) = (self.start, self.base);
                if !self.naive_equal(i, base, j - i) {
                    return self.reject(n);
                }
                reference += j + 1 - i;
                self.commit(j);
                continue;
            }
            if self.start > n || self.value_query(reference) {
                break;
            }
            if self.base == 0 {
                return self.reject(n);
            }
            self.cand_idx += 1;
            self.base = self.candidates[self.cand_idx];
            self.fix_zero();
        }
        self.ops.finish_push();
        Verdict::Valid {
            alphabet: self.fixed.alphabet_size(),
            letter: None,
        }
    }
}

impl PiValidator for SlopeValidator {
    fn push(&mut self, value: i64) -> Result<Verdict> {
        if let Some(position) = self.failed {
            return Err(Error::PushAfterFailure { position });
        }
        let n = self.n() + 1;
        self.ops.tick(1);
        if value < -1 || value >= n as i64 {
            return Ok(self.reject(n));
        }
        self.input.push(value);
        self.dominance.push(n, value);
        let verdict = self.adjust(n);
        self.suffixes.append(value);
        Ok(verdict)
    }

    fn len(&self) -> usize {
        self.n()
    }

    fn failed_at(&self) -> Option<usize> {
        self.failed
    }

    /// Letters needed by the fixed part of the recovered array, which
    /// includes position `n + 1` once its value is known to be zero.
    fn alphabet_size(&self) -> usize {
        self.fixed.alphabet_size()
    }

    /// A word of length `n + 1` whose strict border array starts with the input.
    fn witness(&self) -> Result<Word> {
        let pi = self.recovered_pi()?;
        let mut v = OnlineValidator::new();
        for &x in pi.values() {
            v.push(x as i64)?;
        }
        v.witness()
    }

    fn ops(&self) -> &OpStats {
        &self.ops
    }

    fn memory_bits(&self) -> u64 {
        self.input.len() as u64 * 64
            + self.fixed.memory_bits()
            + self.suffixes.memory_bits()
            + self.dominance.len() as u64 * 128
            + self.candidates.len() as u64 * 64
    }
}

/// Validates a stream of `g` values, `g[i] = A'[i-1] + 1`. The leading
/// `g[1] = 0` is implied and not part of the stream, so the stream's k-th
/// value is `g[k+1]`; positions in verdicts use `g` numbering.
#[derive(Clone, Debug, Default)]
pub struct GValidator {
    inner: SlopeValidator,
}

impl GValidator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn inner(&self) -> &SlopeValidator {
        &self.inner
    }

    pub fn push(&mut self, g: i64) -> Result<Verdict> {
        Ok(match self.inner.push(g - 1)? {
            Verdict::Invalid { position } => Verdict::Invalid {
                position: position + 1,
            },
            v => v,
        })
    }
}

impl PiValidator for GValidator {
    fn push(&mut self, value: i64) -> Result<Verdict> {
        GValidator::push(self, value)
    }

    fn len(&self) -> usize {
        self.inner.len()
    }

    fn failed_at(&self) -> Option<usize> {
        self.inner.failed_at().map(|p| p + 1)
    }

    fn alphabet_size(&self) -> usize {
        self.inner.alphabet_size()
    }

    fn witness(&self) -> Result<Word> {
        self.inner.witness()
    }

    fn ops(&self) -> &OpStats {
        self.inner.ops()
    }

    fn memory_bits(&self) -> u64 {
        self.inner.memory_bits()
    }
}

/// Runs a whole `g` stream (see [`GValidator`]).
pub fn validate_g(g: &[i64]) -> Result<Verdict> {
    let mut v = GValidator::new();
    let mut last = Verdict::Valid {
        alphabet: 1,
        letter: None,
    };
    for &x in g {
        last = v.push(x)?;
        if !last.is_valid() {
            break;
        }
    }
    Ok(last)
}

/// Maps a strict border array to the matching `g` stream (without `g[1]`).
pub fn strict_to_g(pp: &StrictBorderArray) -> Vec<i64> {
    pp.values().iter().map(|&x| x + 1).collect()
}
