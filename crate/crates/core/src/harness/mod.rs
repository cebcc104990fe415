//! Input generation, engine dispatch, reports and benchmarks shared by the
//! command-line tool, the examples and the tests.

pub mod bench;
pub mod gen;
pub mod input;
pub mod run;

pub use bench::{bench, format_table, BenchRow};
pub use gen::{Family, GenOptions, LowerBoundPair};
pub use run::{run_stream, AnyEngine, Engine, Kind, RunOptions, RunReport};
