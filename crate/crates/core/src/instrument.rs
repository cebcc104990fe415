//! Primitive-operation counters used to measure per-push delay.

use std::collections::BTreeMap;

#[derive(Clone, Debug, Default)]
pub struct OpStats {
    current: u64,
    max: u64,
    total: u64,
    pushes: u64,
    histogram: BTreeMap<u64, u64>,
}

impl OpStats {
    #[inline]
    pub fn tick(&mut self, n: u64) {
        self.current += n;
    }

    /// Closes the accounting for one push.
    pub fn finish_push(&mut self) {
        self.max = self.max.max(self.current);
        self.total += self.current;
        self.pushes += 1;
        *self.histogram.entry(self.current).or_default() += 1;
        self.current = 0;
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn pushes(&self) -> u64 {
        self.pushes
    }

    /// Map from per-push op count to number of pushes with that count.
    pub fn histogram(&self) -> &BTreeMap<u64, u64> {
        &self.histogram
    }
}
