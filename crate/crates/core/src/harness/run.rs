//! Streams an array through a chosen engine and summarises the run.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::online::OnlineValidator;
use crate::realtime::{RealtimeValidator, DEFAULT_N_MAX};
use crate::strict::{GValidator, SlopeValidator};
use crate::succinct::{CopyMode, SuccinctValidator, DEFAULT_COPY_BUDGET};
use crate::verdict::{PiValidator, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Pi,
    PiPrime,
    G,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Pi => "pi",
            Kind::PiPrime => "pi_prime",
            Kind::G => "g",
        }
    }

    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "pi" => Ok(Kind::Pi),
            "pi_prime" => Ok(Kind::PiPrime),
            "g" => Ok(Kind::G),
            _ => Err(Error::Usage(format!("unknown kind '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Basic,
    Realtime,
    Succinct,
    Slope,
}

impl Engine {
    pub const PI_ENGINES: [Engine; 3] = [Engine::Basic, Engine::Realtime, Engine::Succinct];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Basic => "basic",
            Engine::Realtime => "realtime",
            Engine::Succinct => "succinct",
            Engine::Slope => "slope",
        }
    }

    pub fn parse(s: &str) -> Result<Engine> {
        match s {
            "basic" => Ok(Engine::Basic),
            "realtime" => Ok(Engine::Realtime),
            "succinct" => Ok(Engine::Succinct),
            "slope" => Ok(Engine::Slope),
            _ => Err(Error::Usage(format!("unknown engine '{s}'"))),
        }
    }

    pub fn accepts_kind(self, kind: Kind) -> bool {
        (self == Engine::Slope) == (kind != Kind::Pi)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub lazy_copy: bool,
    pub n_max: usize,
    pub emit_witness: bool,
    pub emit_pi: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            lazy_copy: false,
            n_max: DEFAULT_N_MAX,
            emit_witness: false,
            emit_pi: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub kind: Kind,
    pub engine: Engine,
    /// `None` when valid, otherwise the rejected position.
    pub invalid_at: Option<usize>,
    pub n: usize,
    pub min_alphabet: usize,
    pub witness: Option<String>,
    pub recovered_pi: Option<Vec<usize>>,
    pub max_delay_ops: u64,
    pub total_ops: u64,
    pub la_max_delay_ops: Option<u64>,
    pub memory_bits: u64,
    pub wall_time: Duration,
}

impl RunReport {
    pub fn is_valid(&self) -> bool {
        self.invalid_at.is_none()
    }

    pub fn verdict_line(&self) -> String {
        match self.invalid_at {
            None => "verdict=valid".to_string(),
            Some(p) => format!("verdict=invalid@{p}"),
        }
    }

    /// Flat `key=value` lines, starting with `format=1`.
    pub fn to_kv(&self) -> String {
        let mut s = String::from("format=1\n");
        let _ = writeln!(s, "kind={}", self.kind.name());
        let _ = writeln!(s, "engine={}", self.engine.name());
        let _ = writeln!(s, "{}", self.verdict_line());
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "min_alphabet={}", self.min_alphabet);
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness={w}");
        }
        if let Some(pi) = &self.recovered_pi {
            let joined = pi
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(s, "recovered_pi={joined}");
        }
        let _ = writeln!(s, "max_delay_ops={}", self.max_delay_ops);
        let _ = writeln!(s, "total_ops={}", self.total_ops);
        if let Some(la) = self.la_max_delay_ops {
            let _ = writeln!(s, "la_max_delay_ops={la}");
        }
        let _ = writeln!(s, "memory_bits={}", self.memory_bits);
        let _ = writeln!(s, "wall_time_us={}", self.wall_time.as_micros());
        s
    }

    /// Short human-readable form.
    pub fn to_text(&self) -> String {
        let mut s = match self.invalid_at {
            None => format!("valid: n={} alphabet={}\n", self.n, self.min_alphabet),
            Some(p) => format!("invalid at position {p}\n"),
        };
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {w}");
        }
        if let Some(pi) = &self.recovered_pi {
            let joined = pi
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(s, "pi: {joined}");
        }
        let _ = writeln!(
            s,
            "ops: max {} per value, {} total; memory {} bits; {:.3} ms",
            self.max_delay_ops,
            self.total_ops,
            self.memory_bits,
            self.wall_time.as_secs_f64() * 1e3
        );
        s
    }

    pub fn parse_kv(text: &str) -> Result<RunReport> {
        let mut fields = std::collections::HashMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected key=value, got '{line}'"),
            })?;
            fields.insert(k.to_string(), (i + 1, v.to_string()));
        }
        let get = |k: &str| -> Result<&(usize, String)> {
            fields.get(k).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("missing field '{k}'"),
            })
        };
        let num = |k: &str| -> Result<u64> {
            let (line, v) = get(k)?;
            v.parse().map_err(|_| Error::Parse {
                line: *line,
                message: format!("bad number for '{k}': '{v}'"),
            })
        };
        if get("format")?.1 != "1" {
            return Err(Error::Parse {
                line: get("format")?.0,
                message: "unsupported report format".into(),
            });
        }
        let (vline, verdict) = get("verdict")?;
        let invalid_at = match verdict.as_str() {
            "valid" => None,
            v => Some(
                v.strip_prefix("invalid@")
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: *vline,
                        message: format!("bad verdict '{v}'"),
                    })?,
            ),
        };
        let recovered_pi = match fields.get("recovered_pi") {
            None => None,
            Some((line, v)) if v.is_empty() => {
                let _ = line;
                Some(Vec::new())
            }
            Some((line, v)) => Some(
                v.split(',')
                    .map(|t| {
                        t.parse().map_err(|_| Error::Parse {
                            line: *line,
                            message: format!("bad value '{t}'"),
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?,
            ),
        };
        Ok(RunReport {
            kind: Kind::parse(&get("kind")?.1)?,
            engine: Engine::parse(&get("engine")?.1)?,
            invalid_at,
            n: num("n")? as usize,
            min_alphabet: num("min_alphabet")? as usize,
            witness: fields.get("witness").map(|(_, w)| w.clone()),
            recovered_pi,
            max_delay_ops: num("max_delay_ops")?,
            total_ops: num("total_ops")?,
            la_max_delay_ops: if fields.contains_key("la_max_delay_ops") {
                Some(num("la_max_delay_ops")?)
            } else {
                None
            },
            memory_bits: num("memory_bits")?,
            wall_time: Duration::from_micros(num("wall_time_us")?),
        })
    }
}

/// One of the engines, chosen at runtime.
pub enum AnyEngine {
    Basic(OnlineValidator),
    Realtime(RealtimeValidator),
    Succinct(SuccinctValidator),
    Slope(SlopeValidator),
    G(GValidator),
}

impl AnyEngine {
    pub fn new(kind: Kind, engine: Engine, opts: &RunOptions) -> Result<AnyEngine> {
        if !engine.accepts_kind(kind) {
            return Err(Error::Usage(format!(
                "engine '{}' cannot read kind '{}'",
                engine.name(),
                kind.name()
            )));
        }
        Ok(match (kind, engine) {
            (_, Engine::Basic) => AnyEngine::Basic(OnlineValidator::new()),
            (_, Engine::Realtime) => {
                AnyEngine::Realtime(RealtimeValidator::with_capacity(opts.n_max)?)
            }
            (_, Engine::Succinct) => {
                let mode = if opts.lazy_copy {
                    CopyMode::Lazy {
                        budget: DEFAULT_COPY_BUDGET,
                    }
                } else {
                    CopyMode::Eager
                };
                AnyEngine::Succinct(SuccinctValidator::with_options(opts.n_max, mode)?)
            }
            (Kind::G, Engine::Slope) => AnyEngine::G(GValidator::new()),
            (_, Engine::Slope) => AnyEngine::Slope(SlopeValidator::new()),
        })
    }

    pub fn as_dyn(&mut self) -> &mut dyn PiValidator {
        match self {
            AnyEngine::Basic(e) => e,
            AnyEngine::Realtime(e) => e,
            AnyEngine::Succinct(e) => e,
            AnyEngine::Slope(e) => e,
            AnyEngine::G(e) => e,
        }
    }

    fn slope(&self) -> Option<&SlopeValidator> {
        match self {
            AnyEngine::Slope(e) => Some(e),
            AnyEngine::G(e) => Some(e.inner()),
            _ => None,
        }
    }

    /// Every primitive step, including helper structures.
    pub fn total_ops(&mut self) -> u64 {
        match self.slope() {
            Some(s) => s.total_ops(),
            None => self.as_dyn().ops().total(),
        }
    }

    /// Per-value maximum of level-ancestor work, for the real-time engine.
    pub fn la_max_delay_ops(&self) -> Option<u64> {
        match self {
            AnyEngine::Realtime(e) => Some(e.la_ops().max()),
            _ => None,
        }
    }

    /// Maximal border array behind a strict stream.
    pub fn recovered_pi(&self) -> Option<Result<Vec<usize>>> {
        self.slope()
            .map(|s| s.recovered_pi().map(|p| p.into_values()))
    }
}

/// Feeds `values` until the first rejection and reports.
pub fn run_stream(
    kind: Kind,
    engine: Engine,
    values: &[i64],
    opts: &RunOptions,
) -> Result<RunReport> {
    let mut any = AnyEngine::new(kind, engine, opts)?;
    let clock = Instant::now();
    let mut invalid_at = None;
    let mut n = 0;
    {
        let e = any.as_dyn();
        for &v in values {
            n += 1;
            if let Verdict::Invalid { position } = e.push(v)? {
                invalid_at = Some(position);
                break;
            }
        }
    }
    let wall_time = clock.elapsed();
    let valid = invalid_at.is_none();
    let recovered_pi = match any.recovered_pi() {
        Some(r) if opts.emit_pi && valid => Some(r?),
        _ => None,
    };
    let total_ops = any.total_ops();
    let la_max_delay_ops = any.la_max_delay_ops();
    let e = any.as_dyn();
    let witness = if opts.emit_witness && valid && kind == Kind::Pi {
        Some(e.witness()?.to_letters_string())
    } else {
        None
    };
    Ok(RunReport {
        kind,
        engine,
        invalid_at,
        n,
        min_alphabet: if valid { e.alphabet_size() } else { 0 },
        witness,
        recovered_pi,
        max_delay_ops: e.ops().max(),
        total_ops,
        la_max_delay_ops,
        memory_bits: e.memory_bits(),
        wall_time,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip() {
        let fig = [0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0];
        let opts = RunOptions {
            emit_witness: true,
            ..Default::default()
        };
        for engine in Engine::PI_ENGINES {
            let r = run_stream(Kind::Pi, engine, &fig, &opts).unwrap();
            assert_eq!(r.verdict_line(), "verdict=valid");
            assert_eq!(r.min_alphabet, 3);
            assert_eq!(r.witness.as_deref(), Some("aabaabaaabaac"));
            assert_eq!(RunReport::parse_kv(&r.to_kv()).unwrap().to_kv(), r.to_kv());
        }
        let r = run_stream(Kind::Pi, Engine::Basic, &[0, 1, 1], &opts).unwrap();
        assert_eq!(r.verdict_line(), "verdict=invalid@3");
        assert_eq!(
            RunReport::parse_kv(&r.to_kv()).unwrap(),
            RunReport {
                wall_time: Duration::from_micros(r.wall_time.as_micros() as u64),
                ..r
            }
        );

        let pp = [-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0];
        let opts = RunOptions {
            emit_pi: true,
            ..Default::default()
        };
        let r = run_stream(Kind::PiPrime, Engine::Slope, &pp, &opts).unwrap();
        assert!(r.is_valid());
        assert_eq!(
            &r.recovered_pi.as_ref().unwrap()[..13],
            &fig.map(|v| v as usize)
        );
        assert_eq!(
            RunReport::parse_kv(&r.to_kv()).unwrap().recovered_pi,
            r.recovered_pi
        );
        assert!(run_stream(Kind::Pi, Engine::Slope, &fig, &opts).is_err());
        assert!(run_stream(Kind::G, Engine::Basic, &fig, &opts).is_err());
        assert!(RunReport::parse_kv("format=2\n").is_err());
    }
}
