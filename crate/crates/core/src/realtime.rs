//! Constant-delay border-array validator.
//!
//! Each node keeps its depth in the failure tree, its depth in the strict
//! failure tree and a bit vector over strict depths. The first-occurrence
//! set of a node (see [`crate::online`]) holds exactly one position per
//! strict depth along its root path, and that position is the strict-tree
//! ancestor of the node at that depth. So membership of `a` reduces to one
//! level-ancestor query in the strict tree plus one bit test.

use crate::error::{Error, Result};
use crate::instrument::OpStats;
use crate::level_ancestor::LevelAncestorIndex;
use crate::verdict::{PiValidator, Verdict};
use crate::word::{Symbol, Word};

/// Default bound on stream length used to size the depth bit vectors.
pub const DEFAULT_N_MAX: usize = 1 << 32;

type Bits = u128;
const BITS_WIDTH: usize = Bits::BITS as usize;

/// Largest strict depth reachable by a stream of length `n_max`.
pub fn strict_depth_bound(n_max: usize) -> usize {
    let log = (usize::BITS - n_max.max(1).leading_zeros()) as usize;
    3 * log + 3
}

#[derive(Clone, Debug)]
pub struct RealtimeValidator {
    n_max: usize,
    // 1-based; index 0 is padding
    values: Vec<u32>,
    depth: Vec<u32>,
    strict_depth: Vec<u8>,
    strict_father: Vec<u32>,
    letters: Vec<Symbol>,
    bits: Vec<Bits>,
    strict_tree: LevelAncestorIndex,
    max_alph: usize,
    failed: Option<usize>,
    halving_violations: u64,
    ops: OpStats,
    la_ops: OpStats,
}

impl Default for RealtimeValidator {
    fn default() -> Self {
        Self::new()
    }
}

impl RealtimeValidator {
    pub fn new() -> Self {
        Self::with_capacity(DEFAULT_N_MAX).expect("default capacity fits")
    }

    pub fn with_capacity(n_max: usize) -> Result<Self> {
        let bound = strict_depth_bound(n_max);
        if bound >= BITS_WIDTH || n_max > u32::MAX as usize + 1 {
            return Err(Error::LengthTooLarge {
                len: n_max,
                cap: 1 << 32,
            });
        }
        Ok(RealtimeValidator {
            n_max,
            values: vec![0],
            depth: vec![0],
            strict_depth: vec![0],
            strict_father: vec![0],
            letters: vec![0],
            bits: vec![0],
            strict_tree: LevelAncestorIndex::new(bound),
            max_alph: 0,
            failed: None,
            halving_violations: 0,
            ops: OpStats::default(),
            la_ops: OpStats::default(),
        })
    }

    pub fn value(&self, p: usize) -> usize {
        self.values[p] as usize
    }

    /// Depth of node `p` in the failure tree (root has depth 1).
    pub fn depth(&self, p: usize) -> usize {
        self.depth[p] as usize
    }

    /// Depth of node `p` in the strict failure tree.
    pub fn strict_depth(&self, p: usize) -> usize {
        self.strict_depth[p] as usize
    }

    /// Strict failure link of `p`, `None` at strict roots.
    pub fn strict_father(&self, p: usize) -> Option<usize> {
        match self.strict_father[p] {
            0 => None,
            x => Some(x as usize),
        }
    }

    pub fn letter(&self, p: usize) -> Symbol {
        self.letters[p]
    }

    /// Number of halving-lemma violations seen; always zero on correct code.
    pub fn halving_violations(&self) -> u64 {
        self.halving_violations
    }

    /// Per-push cost of the level-ancestor index, kept apart from `ops`.
    pub fn la_ops(&self) -> &OpStats {
        &self.la_ops
    }

    /// Every value that would be accepted next, in descending order.
    pub fn next_candidates(&mut self) -> Vec<usize> {
        let n = self.len();
        if n == 0 {
            return vec![0];
        }
        let f = self.values[n] as usize + 1;
        let top = self.strict_depth[f] as usize;
        let mut out = Vec::with_capacity(self.bits[f].count_ones() as usize + 1);
        let mut bits = self.bits[f];
        while bits != 0 {
            let level = (Bits::BITS - 1 - bits.leading_zeros()) as usize;
            bits &= !(1 << level);
            out.push(
                self.strict_tree
                    .query(f, top - level)
                    .expect("level on the path"),
            );
        }
        out.push(0);
        out
    }

    fn reject(&mut self, position: usize) -> Verdict {
        self.failed = Some(position);
        self.ops.finish_push();
        self.la_ops.finish_push();
        Verdict::Invalid { position }
    }

    fn is_candidate(&mut self, f: usize, a: usize) -> bool {
        self.ops.tick(3);
        if a > f || self.strict_depth[a] > self.strict_depth[f] {
            return false;
        }
        if self.bits[f] >> self.strict_depth[a] & 1 == 0 {
            return false;
        }
        let before = self.strict_tree.steps();
        let delta = (self.strict_depth[f] - self.strict_depth[a]) as usize;
        let lands = self.strict_tree.query(f, delta);
        self.la_ops.tick(self.strict_tree.steps() - before);
        lands == Some(a)
    }

    fn check_halving(&mut self, p: usize) {
        let x1 = self.strict_father[p] as usize;
        if x1 == 0 {
            return;
        }
        let x3 = self.strict_father[self.strict_father[x1] as usize] as usize;
        self.ops.tick(2);
        if x3 != 0 && 2 * x3 >= x1 {
            self.halving_violations += 1;
        }
    }
}

impl PiValidator for RealtimeValidator {
    fn push(&mut self, value: i64) -> Result<Verdict> {
        if let Some(position) = self.failed {
            return Err(Error::PushAfterFailure { position });
        }
        let p = self.values.len();
        if p > self.n_max {
            return Err(Error::CapacityExceeded { n_max: self.n_max });
        }
        self.ops.tick(1);
        if value < 0 || value as u64 >= p as u64 {
            return Ok(self.reject(p));
        }
        let a = value as usize;

        let (d, sd, sf) = if p == 1 {
            (1, 1, 0)
        } else {
            let f = self.values[p - 1] as usize + 1;
            if a > 0 && a != f && !self.is_candidate(f, a) {
                return Ok(self.reject(p));
            }
            let sd = if a == f {
                self.strict_depth[f]
            } else {
                self.strict_depth[f] + 1
            };
            let sf = if a < f {
                f as u32
            } else {
                self.strict_father[f]
            };
            (self.depth[f] + 1, sd, sf)
        };
        assert!(
            (sd as usize) < BITS_WIDTH,
            "strict depth exceeds bit-vector width"
        );
        debug_assert!(sd as f64 <= 3.0 * (p as f64).log2() + 3.0);

        let (bits, letter) = if p == 1 {
            (1 << sd, 1)
        } else {
            let f = self.values[p - 1] as usize + 1;
            let inherited = self.bits[f];
            if a == 0 {
                (inherited | 1 << sd, inherited.count_ones() + 1)
            } else {
                let cleared = inherited & !(1 << self.strict_depth[a]);
                (cleared | 1 << sd, self.letters[a])
            }
        };
        self.ops.tick(4);

        self.values.push(a as u32);
        self.depth.push(d);
        self.strict_depth.push(sd);
        self.strict_father.push(sf);
        self.letters.push(letter);
        self.bits.push(bits);
        let before = self.strict_tree.steps();
        self.strict_tree
            .add_leaf(if sf == 0 { None } else { Some(sf as usize) });
        self.la_ops.tick(self.strict_tree.steps() - before);
        self.check_halving(p);

        self.max_alph = self.max_alph.max(bits.count_ones() as usize);
        self.ops.finish_push();
        self.la_ops.finish_push();
        Ok(Verdict::Valid {
            alphabet: self.max_alph,
            letter: Some(letter),
        })
    }

    fn len(&self) -> usize {
        self.values.len() - 1
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
        Ok(Word::new(self.letters[1..].to_vec()))
    }

    fn ops(&self) -> &OpStats {
        &self.ops
    }

    fn memory_bits(&self) -> u64 {
        let per_node = 32 * 4 + 8 + BITS_WIDTH as u64 + Symbol::BITS as u64;
        per_node * self.len() as u64 + self.strict_tree.memory_bits()
    }
}

/// Counts positions where the third strict failure link is not below half
/// of the first one. Works straight from a strict border array, where the
/// strict failure link of `i` is `pp[i-1] + 1`.
pub fn halving_violations(pp: &[i64]) -> usize {
    let link = |i: usize| -> usize {
        if i <= 1 {
            0
        } else {
            (pp[i - 2] + 1) as usize
        }
    };
    (1..=pp.len())
        .filter(|&i| {
            let x1 = link(i);
            let x3 = link(link(x1));
            x1 != 0 && x3 != 0 && 2 * x3 >= x1
        })
        .count()
}
