//! Border-array validator with an O(n log log n)-bit footprint.
//!
//! Positions keep only a short record: the size class of their strict
//! failure link, the link's slot in a per-window block directory, which
//! ancestor (if any) their own value removed from the candidate set, and
//! their letter. The strict failure link values themselves live in shared
//! blocks, one per distinct link value per window. Each block holds the
//! strict-tree chain of its value, at most two entries per bit length, and
//! a flag per entry telling whether that entry is a candidate.
//!
//! Block layout for class `c` (`w = c + 1`): value (w bits), candidate
//! count (6 bits), then `2w` slots of `w + 1` bits (chain value, flag).
//! Chain value 0 marks an empty slot. Layout version 1.

use std::collections::{HashMap, VecDeque};

use crate::border::StrictBorderArray;
use crate::error::{Error, Result};
use crate::instrument::OpStats;
use crate::packed::{bit_length, PackedBits};
use crate::realtime::DEFAULT_N_MAX;
use crate::verdict::{PiValidator, Verdict};
use crate::word::{Symbol, Word};

pub const LAYOUT_VERSION: u32 = 1;

/// Blocks a single window may hold.
pub const WINDOW_CAP: usize = 48;

/// Classes up to this one share a single window for the whole stream.
const GLOBAL_CLASSES: u32 = 6;

pub const DEFAULT_COPY_BUDGET: usize = 32;

const COUNT_BITS: u32 = 6;
const CLASS_BITS: u32 = 6;
const DIR_BITS: u32 = 6;
const REM_BITS: u32 = 7;
const NO_CLASS: u64 = (1 << CLASS_BITS) - 1;
const NO_REM: u64 = (1 << REM_BITS) - 1;
const DIR_ENTRY_BITS: u64 = 32;
const PENDING_BITS: u64 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopyMode {
    /// Block bodies are written in full when a block is created.
    Eager,
    /// Block bodies are filled in the background, `budget` slots per push.
    Lazy { budget: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct BlockRef {
    class: u8,
    index: u32,
}

#[derive(Clone, Debug)]
struct Pending {
    value: u32,
    self_slot: u8,
    source: Option<BlockRef>,
    removed: Option<u8>,
    progress: u8,
    slots: u8,
    deadline: u64,
}

#[derive(Clone, Debug)]
struct ClassPool {
    width: u32,
    block_bits: u64,
    arena: PackedBits,
    count: u32,
    starts: Vec<u32>,
}

impl ClassPool {
    fn new(class: u32) -> Self {
        let width = class + 1;
        ClassPool {
            width,
            block_bits: (width + COUNT_BITS) as u64 + 2 * width as u64 * (width as u64 + 1),
            arena: PackedBits::new(),
            count: 0,
            starts: Vec::new(),
        }
    }

    fn base(&self, index: u32) -> u64 {
        index as u64 * self.block_bits
    }

    fn value(&self, index: u32) -> u64 {
        self.arena.get(self.base(index), self.width)
    }

    fn size(&self, index: u32) -> u64 {
        self.arena
            .get(self.base(index) + self.width as u64, COUNT_BITS)
    }

    fn slot_at(&self, index: u32, s: u32) -> u64 {
        self.base(index) + (self.width + COUNT_BITS) as u64 + s as u64 * (self.width as u64 + 1)
    }

    fn read_slot(&self, index: u32, s: u32) -> (u64, bool) {
        if s >= 2 * self.width {
            return (0, false);
        }
        let at = self.slot_at(index, s);
        let v = self.arena.get(at, self.width);
        let flag = self.arena.get(at + self.width as u64, 1) == 1;
        (v, flag)
    }

    fn write_slot(&mut self, index: u32, s: u32, value: u64, flag: bool) {
        let at = self.slot_at(index, s);
        self.arena.set(at, self.width, value);
        self.arena.set(at + self.width as u64, 1, flag as u64);
    }
}

#[derive(Clone, Copy, Debug)]
struct Record {
    class: Option<u32>,
    dir: u32,
    rem: Option<u32>,
    letter: Symbol,
}

/// Size class of a strict failure link value `v >= 1`.
fn class_of(v: u64) -> u32 {
    bit_length(v - 1)
}

fn window_of(class: u32, x: u64) -> u64 {
    if class <= GLOBAL_CLASSES {
        0
    } else {
        (x - 1) >> (class - 1)
    }
}

fn deadline_for(class: u32, x: u64) -> u64 {
    let k = class.max(GLOBAL_CLASSES + 1) - 1;
    (((x - 1) >> k) + 2) << k
}

#[derive(Clone, Debug)]
pub struct SuccinctValidator {
    n_max: usize,
    mode: CopyMode,
    letter_bits: u32,
    records: PackedBits,
    len: usize,
    last: u64,
    pools: Vec<ClassPool>,
    pending: HashMap<BlockRef, Pending>,
    queues: Vec<VecDeque<BlockRef>>,
    queued_mask: u64,
    max_alph: usize,
    failed: Option<usize>,
    ops: OpStats,
    max_chase: u32,
    max_window_fill: usize,
}

impl Default for SuccinctValidator {
    fn default() -> Self {
        Self::new()
    }
}

impl SuccinctValidator {
    pub fn new() -> Self {
        Self::with_options(DEFAULT_N_MAX, CopyMode::Eager).expect("default capacity fits")
    }

    pub fn lazy() -> Self {
        Self::with_options(
            DEFAULT_N_MAX,
            CopyMode::Lazy {
                budget: DEFAULT_COPY_BUDGET,
            },
        )
        .expect("default capacity fits")
    }

    pub fn with_options(n_max: usize, mode: CopyMode) -> Result<Self> {
        if n_max > 1 << 32 {
            return Err(Error::LengthTooLarge {
                len: n_max,
                cap: 1 << 32,
            });
        }
        let classes = bit_length(n_max.max(1) as u64) as usize + 1;
        let alphabet_bound = bit_length(n_max.max(1) as u64) as u64 + 2;
        Ok(SuccinctValidator {
            n_max,
            mode,
            letter_bits: bit_length(alphabet_bound),
            records: PackedBits::new(),
            len: 0,
            last: 0,
            pools: (0..classes as u32).map(ClassPool::new).collect(),
            pending: HashMap::new(),
            queues: vec![VecDeque::new(); classes],
            queued_mask: 0,
            max_alph: 0,
            failed: None,
            ops: OpStats::default(),
            max_chase: 0,
            max_window_fill: 0,
        })
    }

    pub fn mode(&self) -> CopyMode {
        self.mode
    }

    fn record_bits(&self) -> u64 {
        (CLASS_BITS + DIR_BITS + REM_BITS + self.letter_bits) as u64
    }

    fn record(&self, x: u64) -> Record {
        let mut at = (x - 1) * self.record_bits();
        let class = self.records.get(at, CLASS_BITS);
        at += CLASS_BITS as u64;
        let dir = self.records.get(at, DIR_BITS) as u32;
        at += DIR_BITS as u64;
        let rem = self.records.get(at, REM_BITS);
        at += REM_BITS as u64;
        let letter = self.records.get(at, self.letter_bits) as Symbol;
        Record {
            class: (class != NO_CLASS).then_some(class as u32),
            dir,
            rem: (rem != NO_REM).then_some(rem as u32),
            letter,
        }
    }

    fn append_record(&mut self, r: Record) {
        let bits = self.record_bits();
        let mut at = self.records.grow(bits);
        self.records
            .set(at, CLASS_BITS, r.class.map_or(NO_CLASS, |c| c as u64));
        at += CLASS_BITS as u64;
        self.records.set(at, DIR_BITS, r.dir as u64);
        at += DIR_BITS as u64;
        self.records
            .set(at, REM_BITS, r.rem.map_or(NO_REM, |s| s as u64));
        at += REM_BITS as u64;
        self.records.set(at, self.letter_bits, r.letter as u64);
    }

    /// Block of the strict failure link of `x`, if it has one.
    fn link_block(&self, x: u64) -> Option<BlockRef> {
        let r = self.record(x);
        let class = r.class?;
        let start = self.pools[class as usize].starts[window_of(class, x) as usize];
        Some(BlockRef {
            class: class as u8,
            index: start + r.dir,
        })
    }

    fn block_value(&self, b: BlockRef) -> u64 {
        self.pools[b.class as usize].value(b.index)
    }

    fn block_size(&self, b: BlockRef) -> u64 {
        self.pools[b.class as usize].size(b.index)
    }

    /// Strict failure link of position `x`.
    pub fn strict_link(&self, x: usize) -> Option<usize> {
        self.link_block(x as u64)
            .map(|b| self.block_value(b) as usize)
    }

    /// Chain slot of value `y`: two slots per bit length, the upper one
    /// taken when the next chain element has the same bit length.
    fn slot_of(&mut self, y: u64) -> u32 {
        let b = bit_length(y);
        let upper = match self.link_block(y) {
            Some(blk) => bit_length(self.block_value(blk)) == b,
            None => false,
        };
        self.ops.tick(2);
        2 * (b - 1) + upper as u32
    }

    /// Chain entry `s` of block `b`, resolving blocks whose body is not
    /// copied yet through their sources.
    fn entry(&mut self, mut b: BlockRef, s: u32) -> (u64, bool) {
        let mut removed = false;
        let mut chase = 0;
        loop {
            chase += 1;
            self.ops.tick(1);
            let step = self
                .pending
                .get(&b)
                .filter(|p| s >= p.progress as u32)
                .map(|p| (p.value, p.self_slot, p.removed, p.source));
            match step {
                Some((value, self_slot, rem, source)) => {
                    if s == self_slot as u32 {
                        self.note_chase(chase);
                        return (value as u64, !removed);
                    }
                    if rem == Some(s as u8) {
                        removed = true;
                    }
                    match source {
                        Some(src) => b = src,
                        None => {
                            self.note_chase(chase);
                            return (0, false);
                        }
                    }
                }
                None => {
                    self.note_chase(chase);
                    let (v, f) = self.pools[b.class as usize].read_slot(b.index, s);
                    return (v, f && !removed);
                }
            }
        }
    }

    fn note_chase(&mut self, chase: u32) {
        self.max_chase = self.max_chase.max(chase);
    }

    /// Finds or creates the block for link value `v` in the window of `x`.
    fn ensure_block(&mut self, x: u64, v: u64) -> Result<(u32, u32)> {
        let class = class_of(v);
        let window = window_of(class, x) as usize;
        let pool = &mut self.pools[class as usize];
        debug_assert!(window + 1 >= pool.starts.len());
        while pool.starts.len() <= window {
            pool.starts.push(pool.count);
        }
        let start = pool.starts[window];
        for i in start..pool.count {
            self.ops.tick(1);
            if pool.value(i) == v {
                return Ok((class, i - start));
            }
        }
        let fill = (pool.count - start) as usize;
        let cap = if class <= GLOBAL_CLASSES {
            usize::MAX
        } else {
            WINDOW_CAP
        };
        if fill >= cap {
            return Err(Error::WindowCapacity {
                class: class as usize,
                window,
                cap,
            });
        }
        self.max_window_fill = self.max_window_fill.max(fill + 1);

        let index = pool.count;
        pool.count += 1;
        let bits = pool.block_bits;
        let base = pool.arena.grow(bits);
        pool.arena.set(base, pool.width, v);
        let block = BlockRef {
            class: class as u8,
            index,
        };

        let source = self.link_block(v);
        let rem = self.record(v).rem;
        let size = 1 + source.map_or(0, |s| self.block_size(s)) - rem.is_some() as u64;
        let pool = &mut self.pools[class as usize];
        pool.arena.set(base + pool.width as u64, COUNT_BITS, size);
        let self_slot = self.slot_of(v);
        let pending = Pending {
            value: v as u32,
            self_slot: self_slot as u8,
            source,
            removed: rem.map(|s| s as u8),
            progress: 0,
            slots: (2 * bit_length(v)) as u8,
            deadline: deadline_for(class, x),
        };
        self.pending.insert(block, pending);
        match self.mode {
            CopyMode::Eager => while self.copy_step(block) {},
            CopyMode::Lazy { .. } => {
                self.queues[class as usize].push_back(block);
                self.queued_mask |= 1 << class;
            }
        }
        Ok((class, index - self.pools[class as usize].starts[window]))
    }

    /// Copies one slot of a pending block. Returns false once it is complete.
    fn copy_step(&mut self, block: BlockRef) -> bool {
        let Some(p) = self.pending.get(&block) else {
            return false;
        };
        let s = p.progress as u32;
        let (value, flag) = if s == p.self_slot as u32 {
            (p.value as u64, true)
        } else {
            let removed = p.removed == Some(s as u8);
            match p.source {
                Some(src) => {
                    let (v, f) = self.entry(src, s);
                    (v, f && !removed)
                }
                None => (0, false),
            }
        };
        self.pools[block.class as usize].write_slot(block.index, s, value, flag);
        self.ops.tick(1);
        let p = self.pending.get_mut(&block).expect("pending block");
        p.progress += 1;
        if p.progress >= p.slots {
            self.pending.remove(&block);
            return false;
        }
        true
    }

    fn run_scheduler(&mut self, x: u64) -> Result<()> {
        let CopyMode::Lazy { budget } = self.mode else {
            return Ok(());
        };
        let mut mask = self.queued_mask;
        while mask != 0 {
            let class = mask.trailing_zeros();
            mask &= mask - 1;
            if let Some(head) = self.queues[class as usize].front() {
                if self.pending[head].deadline <= x {
                    return Err(Error::CopyDeadline {
                        class: class as usize,
                        position: x as usize,
                    });
                }
            }
        }
        let mut left = budget;
        while left > 0 && self.queued_mask != 0 {
            let class = self.queued_mask.trailing_zeros() as usize;
            let head = *self.queues[class].front().expect("non-empty queue");
            if !self.copy_step(head) {
                self.queues[class].pop_front();
                if self.queues[class].is_empty() {
                    self.queued_mask &= !(1 << class);
                }
            }
            left -= 1;
        }
        Ok(())
    }

    fn reject(&mut self, position: usize) -> Verdict {
        self.failed = Some(position);
        self.ops.finish_push();
        Verdict::Invalid { position }
    }

    /// Candidate-set size of position `x`.
    fn set_size(&self, x: u64) -> u64 {
        let r = self.record(x);
        1 + self.link_block(x).map_or(0, |b| self.block_size(b)) - r.rem.is_some() as u64
    }

    /// Whether `a` (with `0 < a < f`) is a candidate at the child of `f`.
    fn accepts(&mut self, f: u64, a: u64) -> bool {
        let Some(block) = self.link_block(f) else {
            return false;
        };
        let s = self.slot_of(a);
        if self.record(f).rem == Some(s) {
            return false;
        }
        self.entry(block, s) == (a, true)
    }

    fn push_value(&mut self, x: u64, value: i64) -> Result<Verdict> {
        if value < 0 || value as u64 >= x {
            return Ok(self.reject(x as usize));
        }
        let a = value as u64;
        self.ops.tick(1);
        let record = if x == 1 {
            Record {
                class: None,
                dir: 0,
                rem: None,
                letter: 1,
            }
        } else {
            let f = self.last + 1;
            if a > 0 && a != f && !self.accepts(f, a) {
                return Ok(self.reject(x as usize));
            }
            let (link, rem) = if a == f {
                (
                    self.strict_link(f as usize).map(|v| v as u64),
                    self.record(f).rem,
                )
            } else {
                let rem = if a == 0 { None } else { Some(self.slot_of(a)) };
                (Some(f), rem)
            };
            let letter = if a == 0 {
                self.set_size(f) as Symbol + 1
            } else {
                self.record(a).letter
            };
            let (class, dir) = match link {
                Some(v) => {
                    let (c, d) = self.ensure_block(x, v)?;
                    (Some(c), d)
                }
                None => (None, 0),
            };
            Record {
                class,
                dir,
                rem,
                letter,
            }
        };
        self.append_record(record);
        self.len += 1;
        self.last = a;
        self.run_scheduler(x)?;
        let alph = self.set_size(x) as usize;
        self.max_alph = self.max_alph.max(alph);
        self.ops.finish_push();
        Ok(Verdict::Valid {
            alphabet: self.max_alph,
            letter: Some(record.letter),
        })
    }

    /// Longest chain of in-flight blocks walked by a single lookup.
    pub fn max_chase(&self) -> u32 {
        self.max_chase
    }

    /// Most blocks any window has held.
    pub fn max_window_fill(&self) -> usize {
        self.max_window_fill
    }

    /// Blocks whose body copy is still outstanding.
    pub fn in_flight(&self) -> usize {
        self.pending.len()
    }

    /// Heap bytes actually held, as opposed to the logical layout size.
    pub fn allocated_bytes(&self) -> u64 {
        let pools: u64 = self
            .pools
            .iter()
            .map(|p| p.arena.allocated_bytes() + p.starts.capacity() as u64 * 4)
            .sum();
        let pending =
            self.pending.capacity() as u64 * std::mem::size_of::<(BlockRef, Pending)>() as u64;
        let queues: u64 = self.queues.iter().map(|q| q.capacity() as u64 * 8).sum();
        self.records.allocated_bytes() + pools + pending + queues
    }
}

impl PiValidator for SuccinctValidator {
    fn push(&mut self, value: i64) -> Result<Verdict> {
        if let Some(position) = self.failed {
            return Err(Error::PushAfterFailure { position });
        }
        let x = self.len + 1;
        if x > self.n_max {
            return Err(Error::CapacityExceeded { n_max: self.n_max });
        }
        self.push_value(x as u64, value)
    }

    fn len(&self) -> usize {
        self.len
    }

    fn failed_at(&self) -> Option<usize> {
        self.failed
    }

    fn alphabet_size(&self) -> usize {
        self.max_alph
    }

    fn witness(&self) -> Result<Word> {
        if let Some(position) = self.failed {
            return Err(Error::StateInvalid { position });
        }
        Ok(Word::new(
            (1..=self.len as u64)
                .map(|x| self.record(x).letter)
                .collect(),
        ))
    }

    fn ops(&self) -> &OpStats {
        &self.ops
    }

    fn memory_bits(&self) -> u64 {
        let blocks: u64 = self
            .pools
            .iter()
            .map(|p| p.count as u64 * p.block_bits + p.starts.len() as u64 * DIR_ENTRY_BITS)
            .sum();
        let scheduler = 2 * 64 + self.pending.len() as u64 * PENDING_BITS;
        self.len as u64 * self.record_bits() + blocks + scheduler
    }
}

/// Largest number of distinct values from `[2^k, 2^(k+1))` inside any run of
/// `2^k` consecutive entries of `pp`, over all `k`.
pub fn window_distinct_check(pp: &StrictBorderArray) -> usize {
    let v = pp.values();
    let n = v.len();
    let mut best = 0;
    let mut k = 0;
    while (1usize << k) <= n.max(1) {
        let lo = 1i64 << k;
        let hi = lo << 1;
        let width = 1usize << k;
        let mut counts: HashMap<i64, u32> = HashMap::new();
        let in_range = |x: i64| x >= lo && x < hi;
        for i in 0..n {
            if in_range(v[i]) {
                *counts.entry(v[i]).or_default() += 1;
            }
            if i >= width && in_range(v[i - width]) {
                let c = counts.get_mut(&v[i - width]).expect("counted");
                *c -= 1;
                if *c == 0 {
                    counts.remove(&v[i - width]);
                }
            }
            best = best.max(counts.len());
        }
        k += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border::{compute_pi, pi_to_pi_prime};
    use crate::oracle::local_border_arrays;
    use crate::realtime::RealtimeValidator;
    use crate::verdict::run_all;
    use crate::word::Word;

    fn as_stream(v: &[usize]) -> Vec<i64> {
        v.iter().map(|&x| x as i64).collect()
    }

    #[test]
    fn figure_one() {
        let a = [0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0];
        for mut sc in [SuccinctValidator::new(), SuccinctValidator::lazy()] {
            assert!(run_all(&mut sc, &a).unwrap().is_valid());
            assert_eq!(sc.alphabet_size(), 3);
            assert_eq!(sc.witness().unwrap().to_string(), "aabaabaaabaac");
        }
        let mut sc = SuccinctValidator::new();
        assert_eq!(
            run_all(&mut sc, &[0, 1, 1]).unwrap(),
            Verdict::Invalid { position: 3 }
        );
    }

    #[test]
    fn agrees_with_realtime_exhaustively() {
        for n in 1..=9 {
            for arr in local_border_arrays(n) {
                let s = as_stream(&arr);
                let mut rt = RealtimeValidator::new();
                let expected = run_all(&mut rt, &s).unwrap();
                for mut sc in [SuccinctValidator::new(), SuccinctValidator::lazy()] {
                    assert_eq!(run_all(&mut sc, &s).unwrap(), expected, "{arr:?}");
                    if expected.is_valid() {
                        assert_eq!(sc.witness().unwrap(), rt.witness().unwrap());
                        for x in 1..=n {
                            assert_eq!(sc.strict_link(x), rt.strict_father(x));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unary_uses_no_blocks() {
        let mut sc = SuccinctValidator::new();
        for i in 0..5000 {
            assert!(sc.push(i).unwrap().is_valid());
        }
        assert_eq!(sc.max_window_fill(), 0);
        assert_eq!(sc.memory_bits(), 5000 * sc.record_bits() + 128);
    }

    #[test]
    fn window_check_small() {
        let pp = pi_to_pi_prime(&compute_pi(&Word::from_ascii("aaaaaaaa"))).unwrap();
        assert!(window_distinct_check(&pp) <= 2);
        let pp = pi_to_pi_prime(&compute_pi(&Word::from_ascii("abaababaabaab"))).unwrap();
        assert!(window_distinct_check(&pp) <= 48);
    }

    #[test]
    fn long_random_words_agree() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for sigma in [2u32, 3] {
            let letters: Vec<u32> = (0..30_000)
                .map(|i| {
                    if i % 97 < 80 {
                        1 + (i % 2) as u32
                    } else {
                        rng.gen_range(1..=sigma)
                    }
                })
                .collect();
            let pi = compute_pi(&Word::new(letters));
            let s = as_stream(pi.values());
            let mut rt = RealtimeValidator::new();
            assert!(run_all(&mut rt, &s).unwrap().is_valid());
            for mut sc in [SuccinctValidator::new(), SuccinctValidator::lazy()] {
                assert!(run_all(&mut sc, &s).unwrap().is_valid());
                assert_eq!(sc.alphabet_size(), rt.alphabet_size());
                assert!(sc.max_window_fill() <= WINDOW_CAP);
            }
            let mut bad = s.clone();
            bad[20_000] = (bad[19_999] + 1) / 2;
            let mut rt = RealtimeValidator::new();
            let expected = run_all(&mut rt, &bad).unwrap();
            let mut sc = SuccinctValidator::lazy();
            assert_eq!(run_all(&mut sc, &bad).unwrap(), expected);
        }
    }
}
