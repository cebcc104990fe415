//! Incremental level-ancestor index over a forest whose nodes arrive in
//! increasing order, each attached as a leaf.
//!
//! Backed by a power-of-two jump table. The number of table levels is
//! fixed from a declared depth bound, so add-leaf and query both cost
//! `levels` steps; for the strict failure forest that bound is logarithmic
//! in the declared maximum stream length.

#[derive(Clone, Debug)]
pub struct LevelAncestorIndex {
    levels: usize,
    // jump[k][v] = 2^k-th ancestor of v, 0 when it does not exist
    jump: Vec<Vec<u32>>,
    depth: Vec<u32>,
    steps: u64,
}

impl LevelAncestorIndex {
    /// Index for forests whose depth never exceeds `max_depth`.
    pub fn new(max_depth: usize) -> Self {
        let levels = (usize::BITS - max_depth.max(1).leading_zeros()) as usize;
        LevelAncestorIndex {
            levels,
            jump: vec![vec![0]; levels],
            depth: vec![0],
            steps: 0,
        }
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn len(&self) -> usize {
        self.depth.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Appends node `len() + 1` under `parent` (a root when `None`).
    /// Returns the new node's depth (roots have depth 1).
    pub fn add_leaf(&mut self, parent: Option<usize>) -> usize {
        let v = self.depth.len();
        let parent = parent.unwrap_or(0);
        debug_assert!(parent < v);
        let d = if parent == 0 {
            1
        } else {
            self.depth[parent] + 1
        };
        assert!(
            (d as usize) < (1usize << self.levels),
            "forest deeper than declared bound"
        );
        self.depth.push(d);
        let mut up = parent as u32;
        for k in 0..self.levels {
            self.jump[k].push(up);
            self.steps += 1;
            if up != 0 {
                up = self.jump[k][up as usize];
            }
        }
        d as usize
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v] as usize
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.jump[0][v] {
            0 => None,
            p => Some(p as usize),
        }
    }

    /// The ancestor `delta` levels above `v`; `Some(v)` for `delta == 0`.
    pub fn query(&mut self, v: usize, delta: usize) -> Option<usize> {
        if delta >= self.depth[v] as usize {
            return None;
        }
        let mut cur = v;
        let mut rest = delta;
        let mut k = 0;
        while rest > 0 {
            self.steps += 1;
            if rest & 1 == 1 {
                cur = self.jump[k][cur] as usize;
            }
            rest >>= 1;
            k += 1;
        }
        Some(cur)
    }

    /// Total table steps spent in add-leaf and query so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn memory_bits(&self) -> u64 {
        (self.levels as u64 + 1) * 32 * self.len() as u64
    }
}
