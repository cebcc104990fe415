use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bordercheck::harness::gen::{family_pi, lowerbound_pair};
use bordercheck::harness::input::{format_integers, parse_integers, parse_word};
use bordercheck::harness::{
    bench, format_table, run_stream, Engine, Family, GenOptions, Kind, RunOptions,
};
use bordercheck::realtime::DEFAULT_N_MAX;
use bordercheck::{compute_pi, pi_to_pi_prime, BorderArray, Error};

#[derive(Parser)]
#[command(
    name = "bordercheck",
    version,
    about = "Compute and validate (strict) border arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the border array of a word, one value per line.
    Compute {
        #[arg(long, value_enum, default_value = "pi")]
        kind: KindArg,
        /// Read the word as whitespace-separated positive integers.
        #[arg(long)]
        symbols: bool,
        /// Word file, or "-" for stdin.
        input: String,
    },
    /// Stream an array through a validator.
    Validate(ValidateArgs),
    /// Generate an input family.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "pi")]
        kind: KindArg,
        /// Alphabet size for random_word.
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        #[arg(long, default_value_t = 0.5)]
        unary_bias: f64,
        /// Output path; lowerbound_pair writes PATH.0 and PATH.1.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an instrumentation table over n = 10^3, 10^4, ... up to --n-max.
    Bench {
        #[arg(long, value_enum)]
        engine: EngineArg,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 100_000)]
        n_max: usize,
        /// Explicit lengths, overriding --n-max.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        unary_bias: f64,
        #[arg(long)]
        lazy_copy: bool,
    },
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, value_enum, default_value = "pi")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "basic")]
    engine: EngineArg,
    /// Print the recovered border array (strict kinds).
    #[arg(long)]
    emit_pi: bool,
    /// Print a minimal-alphabet word (border arrays).
    #[arg(long)]
    emit_witness: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Show operation counts and memory in text output.
    #[arg(long)]
    instrument: bool,
    /// Succinct engine: copy blocks in the background.
    #[arg(long)]
    lazy_copy: bool,
    /// Longest stream the engine must support.
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    /// Array file, or "-" for stdin.
    input: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Pi,
    #[value(name = "pi_prime")]
    PiPrime,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Basic,
    Realtime,
    Succinct,
    Slope,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Unary,
    Fibonacci,
    #[value(name = "thue_morse")]
    ThueMorse,
    #[value(name = "random_word")]
    RandomWord,
    #[value(name = "random_valid_pi")]
    RandomValidPi,
    #[value(name = "lowerbound_pair")]
    LowerboundPair,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Kv,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Pi => Kind::Pi,
            KindArg::PiPrime => Kind::PiPrime,
            KindArg::G => Kind::G,
        }
    }
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Basic => Engine::Basic,
            EngineArg::Realtime => Engine::Realtime,
            EngineArg::Succinct => Engine::Succinct,
            EngineArg::Slope => Engine::Slope,
        }
    }
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Unary => Family::Unary,
            FamilyArg::Fibonacci => Family::Fibonacci,
            FamilyArg::ThueMorse => Family::ThueMorse,
            FamilyArg::RandomWord => Family::RandomWord,
            FamilyArg::RandomValidPi => Family::RandomValidPi,
            FamilyArg::LowerboundPair => Family::LowerboundPair,
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok(s)
}

fn write_output(path: &PathBuf, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn strict_stream(pi: Vec<usize>, kind: Kind) -> Result<Vec<i64>, Error> {
    let pp = pi_to_pi_prime(&BorderArray::new(pi)?)?.into_values();
    Ok(match kind {
        Kind::G => pp.into_iter().map(|v| v + 1).collect(),
        _ => pp,
    })
}

fn as_kind(pi: Vec<usize>, kind: Kind) -> Result<String, Error> {
    Ok(match kind {
        Kind::Pi => format_integers(&pi),
        _ => format_integers(&strict_stream(pi, kind)?),
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Compute {
            kind,
            symbols,
            input,
        } => {
            let word = parse_word(&read_input(&input)?, symbols).map_err(|e| e.to_string())?;
            let pi = compute_pi(&word).into_values();
            let out = match Kind::from(kind) {
                Kind::Pi => format_integers(&pi),
                k => as_kind(pi, k).map_err(|e| e.to_string())?,
            };
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate(a) => {
            let values = parse_integers(&read_input(&a.input)?).map_err(|e| e.to_string())?;
            let opts = RunOptions {
                lazy_copy: a.lazy_copy,
                n_max: a.n_max,
                emit_witness: a.emit_witness,
                emit_pi: a.emit_pi,
            };
            let report = run_stream(a.kind.into(), a.engine.into(), &values, &opts)
                .map_err(|e| e.to_string())?;
            match a.format {
                FormatArg::Kv => print!("{}", report.to_kv()),
                FormatArg::Text if a.instrument => print!("{}", report.to_text()),
                FormatArg::Text => {
                    let text = report.to_text();
                    print!(
                        "{}",
                        text.lines()
                            .filter(|l| !l.starts_with("ops:"))
                            .map(|l| format!("{l}\n"))
                            .collect::<String>()
                    );
                }
            }
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen {
            family,
            n,
            seed,
            kind,
            alphabet,
            unary_bias,
            out,
        } => {
            let kind = Kind::from(kind);
            let gen = GenOptions {
                n,
                seed,
                alphabet,
                unary_bias,
            };
            if matches!(family, FamilyArg::LowerboundPair) {
                let pair = lowerbound_pair(n, seed).map_err(|e| e.to_string())?;
                let texts = pair.arrays.map(|a| as_kind(a, kind));
                let [t0, t1] = texts;
                let (t0, t1) = (
                    t0.map_err(|e| e.to_string())?,
                    t1.map_err(|e| e.to_string())?,
                );
                match out {
                    Some(path) => {
                        let p0 = path.with_extension("0");
                        let p1 = path.with_extension("1");
                        write_output(&p0, &t0)?;
                        write_output(&p1, &t1)?;
                        let valid = if pair.valid == 0 { &p0 } else { &p1 };
                        println!("valid={}", valid.display());
                    }
                    None => {
                        println!("{}", t0.split_whitespace().collect::<Vec<_>>().join(" "));
                        println!("{}", t1.split_whitespace().collect::<Vec<_>>().join(" "));
                        eprintln!("valid={}", pair.valid);
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            let pi = family_pi(family.into(), &gen).map_err(|e| e.to_string())?;
            let text = as_kind(pi, kind).map_err(|e| e.to_string())?;
            match out {
                Some(path) => write_output(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            engine,
            family,
            n_max,
            n,
            seed,
            unary_bias,
            lazy_copy,
        } => {
            let ns = if n.is_empty() {
                std::iter::successors(Some(1000usize), |&x| Some(x * 10))
                    .take_while(|&x| x <= n_max)
                    .collect()
            } else {
                n
            };
            let gen = GenOptions {
                seed,
                unary_bias,
                ..GenOptions::default()
            };
            let opts = RunOptions {
                lazy_copy,
                ..RunOptions::default()
            };
            let rows =
                bench(engine.into(), family.into(), &ns, &gen, &opts).map_err(|e| e.to_string())?;
            print!("{}", format_table(engine.into(), family.into(), &rows));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("bordercheck: {msg}");
            ExitCode::from(2)
        }
    }
}
