//! Per-length instrumentation table.

use std::fmt::Write as _;

use crate::border::pi_to_pi_prime;
use crate::error::Result;
use crate::harness::gen::{family_pi, Family, GenOptions};
use crate::harness::run::{run_stream, Engine, Kind, RunOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub valid: bool,
    pub max_delay_ops: u64,
    pub total_ops: u64,
    pub la_max_delay_ops: Option<u64>,
    pub memory_bits: u64,
}

impl BenchRow {
    pub fn ops_per_n_log_n(&self) -> f64 {
        self.total_ops as f64 / (self.n as f64 * (self.n as f64).log2())
    }

    pub fn bits_per_n_loglog_n(&self) -> f64 {
        self.memory_bits as f64 / (self.n as f64 * (self.n as f64).log2().log2())
    }
}

/// The stream an engine reads for a family: the border array itself, or
/// its strict counterpart for the slope engine.
pub fn family_stream(engine: Engine, family: Family, gen: &GenOptions) -> Result<Vec<i64>> {
    let pi = family_pi(family, gen)?;
    Ok(if engine == Engine::Slope {
        pi_to_pi_prime(&crate::border::BorderArray::new(pi)?)?.into_values()
    } else {
        pi.into_iter().map(|v| v as i64).collect()
    })
}

pub fn bench(
    engine: Engine,
    family: Family,
    ns: &[usize],
    gen: &GenOptions,
    opts: &RunOptions,
) -> Result<Vec<BenchRow>> {
    let kind = if engine == Engine::Slope {
        Kind::PiPrime
    } else {
        Kind::Pi
    };
    ns.iter()
        .map(|&n| {
            let stream = family_stream(engine, family, &GenOptions { n, ..*gen })?;
            let r = run_stream(kind, engine, &stream, opts)?;
            Ok(BenchRow {
                n,
                valid: r.is_valid(),
                max_delay_ops: r.max_delay_ops,
                total_ops: r.total_ops,
                la_max_delay_ops: r.la_max_delay_ops,
                memory_bits: r.memory_bits,
            })
        })
        .collect()
}

/// Fixed-column table, one row per length.
pub fn format_table(engine: Engine, family: Family, rows: &[BenchRow]) -> String {
    let mut s = format!(
        "{:<9} {:<16} {:>9} {:>6} {:>13} {:>14} {:>9} {:>14} {:>12} {:>12}\n",
        "engine",
        "family",
        "n",
        "valid",
        "max_delay_ops",
        "total_ops",
        "la_max",
        "memory_bits",
        "ops/nlogn",
        "bits/nloglogn"
    );
    for r in rows {
        let la = r
            .la_max_delay_ops
            .map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "{:<9} {:<16} {:>9} {:>6} {:>13} {:>14} {:>9} {:>14} {:>12.3} {:>12.3}",
            engine.name(),
            family.name(),
            r.n,
            r.valid,
            r.max_delay_ops,
            r.total_ops,
            la,
            r.memory_bits,
            r.ops_per_n_log_n(),
            r.bits_per_n_loglog_n()
        );
    }
    s
}
