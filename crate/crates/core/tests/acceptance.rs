//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use bordercheck::harness::gen::{
    family_pi, fibonacci_word, lowerbound_pair, random_valid_pi, random_word, thue_morse_word,
    Family, GenOptions,
};
use bordercheck::oracle::{
    enumerate_valid_pi, for_each_canonical_word, local_border_arrays, min_alphabet_bruteforce,
    pi_prime_prefix_table,
};
use bordercheck::realtime::halving_violations;
use bordercheck::succinct::window_distinct_check;
use bordercheck::{
    compute_pi, naive_pi, naive_pi_prime, pi_prime_to_pi, pi_to_pi_prime, run_all, BorderArray,
    CopyMode, OnlineValidator, PiValidator, RealtimeValidator, SlopeValidator, StrictBorderArray,
    SuccinctValidator, Verdict, Word,
};

/// Per-value work bound for the real-time engine, measured once and frozen.
const REALTIME_MAX_OPS: u64 = 10;
/// Per-value level-ancestor work bound (jump table with 7 levels).
const REALTIME_MAX_LA_OPS: u64 = 16;
/// Total-work constant for the strict engine, in units of n log2 n.
const SLOPE_OPS_PER_N_LOG_N: f64 = 4.0;

type Outcome = Result<String, String>;

fn stream(a: &[usize]) -> Vec<i64> {
    a.iter().map(|&v| v as i64).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut words = 0u64;
    let mut bad = 0u64;
    let mut first = None;
    for len in 0..=12 {
        for_each_canonical_word(len, 4, |letters, _| {
            words += 1;
            let w = Word::new(letters.to_vec());
            let pi = compute_pi(&w);
            let ok = pi == naive_pi(&w)
                && pi_to_pi_prime(&pi)
                    .map(|p| p == naive_pi_prime(&w))
                    .unwrap_or(false);
            if !ok {
                bad += 1;
                first.get_or_insert_with(|| w.to_string());
            }
        });
    }
    ensure(bad == 0, || format!("{bad} mismatches, first on {first:?}"))?;
    Ok(format!("{words} canonical words, 0 mismatches"))
}

fn criterion_2() -> Outcome {
    let mut arrays = 0u64;
    let mut bad = 0u64;
    for len in 0..=12 {
        for_each_canonical_word(len, 4, |_, pi| {
            arrays += 1;
            let pi = BorderArray::new(pi.to_vec()).expect("border array");
            let back = pi_prime_to_pi(&pi_to_pi_prime(&pi).expect("valid"));
            if back != pi {
                bad += 1;
            }
        });
    }
    ensure(bad == 0, || {
        format!("{bad} arrays changed by the round trip")
    })?;
    Ok(format!("{arrays} arrays, 0 mismatches"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0u64;
    let mut accepted = 0u64;
    for n in 1..=10 {
        let valid: BTreeSet<Vec<usize>> = enumerate_valid_pi(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|a| a.into_values())
            .collect();
        for arr in local_border_arrays(n) {
            checked += 1;
            let s = stream(&arr);
            let mut engines: Vec<(&str, Box<dyn PiValidator>)> = vec![
                ("basic", Box::new(OnlineValidator::new())),
                ("realtime", Box::new(RealtimeValidator::new())),
                ("succinct", Box::new(SuccinctValidator::new())),
                ("succinct-lazy", Box::new(SuccinctValidator::lazy())),
            ];
            let mut verdicts = Vec::new();
            for (name, e) in engines.iter_mut() {
                let v =
                    run_all(e.as_mut(), &s).map_err(|err| format!("{name} on {arr:?}: {err}"))?;
                verdicts.push(v);
            }
            ensure(verdicts.iter().all(|v| *v == verdicts[0]), || {
                format!("engines disagree on {arr:?}: {verdicts:?}")
            })?;
            let is_valid = valid.contains(&arr);
            ensure(verdicts[0].is_valid() == is_valid, || {
                format!(
                    "{arr:?}: verdict {:?}, oracle valid={is_valid}",
                    verdicts[0]
                )
            })?;
            if is_valid {
                accepted += 1;
                let alph = min_alphabet_bruteforce(&arr)
                    .map_err(|e| e.to_string())?
                    .expect("realisable");
                for (name, e) in &engines {
                    let w = e.witness().map_err(|err| err.to_string())?;
                    ensure(compute_pi(&w).values() == arr.as_slice(), || {
                        format!("{name} witness {w} wrong for {arr:?}")
                    })?;
                    ensure(
                        e.alphabet_size() == alph && w.alphabet_size() == alph,
                        || {
                            format!(
                                "{name} alphabet {} (witness {}), oracle {alph}, for {arr:?}",
                                e.alphabet_size(),
                                w.alphabet_size()
                            )
                        },
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{checked} arrays ({accepted} valid), engines and oracle agree"
    ))
}

fn criterion_4() -> Outcome {
    const K: usize = 9;
    let tables: Vec<_> = (0..=K)
        .map(pi_prime_prefix_table)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut accepted = vec![0usize; K + 1];
    let mut stack = vec![(
        SlopeValidator::new().with_shadow_checks(),
        Vec::<i64>::new(),
    )];
    while let Some((engine, prefix)) = stack.pop() {
        let k = prefix.len();
        let key = StrictBorderArray::new(prefix.clone()).map_err(|e| e.to_string())?;
        let w = tables[k]
            .get(&key)
            .ok_or_else(|| format!("accepted {prefix:?}, oracle has no witness"))?;
        accepted[k] += 1;
        let rec = engine.recovered_pi().map_err(|e| e.to_string())?;
        ensure(rec.values() == w.max_pi.as_slice(), || {
            format!(
                "{prefix:?}: recovered {:?}, max {:?}",
                rec.values(),
                w.max_pi
            )
        })?;
        for pi in &w.pis {
            ensure(rec.values().iter().zip(pi).all(|(a, b)| a >= b), || {
                format!("{prefix:?}: {:?} not above {pi:?}", rec.values())
            })?;
        }
        let back = pi_to_pi_prime(&rec).map_err(|e| e.to_string())?;
        ensure(back.values()[..k] == prefix[..], || {
            format!(
                "{prefix:?}: recovered array maps back to {:?}",
                back.values()
            )
        })?;
        if k == K {
            continue;
        }
        for x in -1..K as i64 {
            let mut next = engine.clone();
            if next.push(x).map_err(|e| e.to_string())?.is_valid() {
                let mut p = prefix.clone();
                p.push(x);
                stack.push((next, p));
            }
        }
    }
    for k in 0..=K {
        ensure(accepted[k] == tables[k].len(), || {
            format!(
                "k={k}: accepted {}, oracle {}",
                accepted[k],
                tables[k].len()
            )
        })?;
    }
    Ok(format!(
        "accepted prefixes per k = {accepted:?}, all match the oracle"
    ))
}

fn criterion_5() -> Outcome {
    let mut positions = 0usize;
    let mut violations = 0u64;
    for n in 1..=10 {
        for arr in enumerate_valid_pi(n).map_err(|e| e.to_string())? {
            let mut rt = RealtimeValidator::new();
            run_all(&mut rt, &stream(arr.values())).map_err(|e| e.to_string())?;
            violations += rt.halving_violations();
            violations +=
                halving_violations(pi_to_pi_prime(&arr).map_err(|e| e.to_string())?.values())
                    as u64;
            positions += n;
        }
    }
    let n = 100_000;
    let inputs = [
        compute_pi(&random_word(n, 2, 17)).into_values(),
        compute_pi(&random_word(n, 3, 18)).into_values(),
        compute_pi(&fibonacci_word(n)).into_values(),
        random_valid_pi(n, 19, 0.5),
        random_valid_pi(n, 20, 0.9),
    ];
    for pi in inputs {
        let mut rt = RealtimeValidator::new();
        run_all(&mut rt, &stream(&pi)).map_err(|e| e.to_string())?;
        violations += rt.halving_violations();
        violations += halving_violations(
            pi_to_pi_prime(&BorderArray::new(pi).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .values(),
        ) as u64;
        positions += n;
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{positions} positions checked, 0 violations"))
}

fn criterion_6() -> Outcome {
    let n = 100_000;
    let words = [
        ("random binary", random_word(n, 2, 23)),
        ("fibonacci", fibonacci_word(n)),
        ("thue_morse", thue_morse_word(n)),
    ];
    let mut report = Vec::new();
    for (name, w) in words {
        let m = window_distinct_check(&pi_to_pi_prime(&compute_pi(&w)).map_err(|e| e.to_string())?);
        ensure(m <= 48, || {
            format!("{name}: {m} distinct values in one window")
        })?;
        report.push(format!("{name} {m}"));
    }
    Ok(format!("observed max per window: {}", report.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut worst = 0;
    let mut worst_la = 0;
    for family in [Family::Unary, Family::Fibonacci, Family::RandomValidPi] {
        for n in [1_000, 10_000, 100_000, 1_000_000] {
            let pi = family_pi(
                family,
                &GenOptions {
                    n,
                    seed: 29,
                    ..GenOptions::default()
                },
            )
            .map_err(|e| e.to_string())?;
            let mut rt = RealtimeValidator::new();
            let v = run_all(&mut rt, &stream(&pi)).map_err(|e| e.to_string())?;
            ensure(v.is_valid(), || format!("{} n={n} rejected", family.name()))?;
            let (ops, la) = (rt.ops().max(), rt.la_ops().max());
            ensure(ops <= REALTIME_MAX_OPS, || {
                format!(
                    "{} n={n}: {ops} ops in one push > {REALTIME_MAX_OPS}",
                    family.name()
                )
            })?;
            ensure(la <= REALTIME_MAX_LA_OPS, || {
                format!(
                    "{} n={n}: {la} LA steps > {REALTIME_MAX_LA_OPS}",
                    family.name()
                )
            })?;
            worst = worst.max(ops);
            worst_la = worst_la.max(la);
        }
    }
    Ok(format!("max ops per push {worst} <= C={REALTIME_MAX_OPS}; LA steps per push {worst_la} <= {REALTIME_MAX_LA_OPS} (reported separately)"))
}

fn criterion_8() -> Outcome {
    let mut ratios = Vec::new();
    for n in [100_000usize, 1_000_000] {
        let pi = random_valid_pi(n, 31, 0.5);
        let s = stream(&pi);
        let mut basic = OnlineValidator::new();
        let mut eager = SuccinctValidator::new();
        let mut lazy = SuccinctValidator::with_options(
            1 << 32,
            CopyMode::Lazy {
                budget: bordercheck::succinct::DEFAULT_COPY_BUDGET,
            },
        )
        .map_err(|e| e.to_string())?;
        for (name, e) in [
            ("basic", &mut basic as &mut dyn PiValidator),
            ("eager", &mut eager),
            ("lazy", &mut lazy),
        ] {
            let v = run_all(e, &s).map_err(|err| format!("{name} n={n}: {err}"))?;
            ensure(v.is_valid(), || {
                format!("{name} rejected a valid array at n={n}")
            })?;
        }
        let bits = eager.memory_bits();
        ensure(lazy.memory_bits() >= bits, || {
            "lazy footprint below eager".into()
        })?;
        let ratio = bits as f64 / (n as f64 * (n as f64).log2().log2());
        ensure(4 * bits <= basic.memory_bits(), || {
            format!("n={n}: {bits} bits vs basic {}", basic.memory_bits())
        })?;
        ratios.push((n, ratio, bits, basic.memory_bits(), lazy.max_chase()));
    }
    let (a, b) = (ratios[0].1, ratios[1].1);
    let spread = (a - b).abs() / a.min(b);
    ensure(spread < 0.25, || {
        format!(
            "bits/(n loglog n) {a:.2} vs {b:.2} differ by {:.0}%",
            spread * 100.0
        )
    })?;
    let rows: Vec<String> = ratios
        .iter()
        .map(|(n, r, bits, basic, chase)| {
            format!("n={n}: {r:.2} bits/(n loglog n), {bits} vs basic {basic}, lazy chase {chase}")
        })
        .collect();
    Ok(format!(
        "{}; spread {:.1}%; no copy-deadline misses",
        rows.join("; "),
        spread * 100.0
    ))
}

fn criterion_9() -> Outcome {
    let mut rows = Vec::new();
    for n in [10_000usize, 100_000] {
        let pi = random_valid_pi(n, 37, 0.5);
        let pp = pi_to_pi_prime(&BorderArray::new(pi.clone()).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let mut slope = SlopeValidator::new();
        let v = run_all(&mut slope, pp.values()).map_err(|e| e.to_string())?;
        ensure(v.is_valid(), || format!("n={n}: rejected {v:?}"))?;
        ensure(
            slope.recovered_pi().map_err(|e| e.to_string())?.values()[..n] == pi[..],
            || format!("n={n}: recovered array differs"),
        )?;
        let c = slope.total_ops() as f64 / (n as f64 * (n as f64).log2());
        ensure(c <= SLOPE_OPS_PER_N_LOG_N, || {
            format!("n={n}: {c:.3} n log n ops > {SLOPE_OPS_PER_N_LOG_N}")
        })?;
        let d = slope.dominance();
        ensure(d.inserts() + d.removals() <= 2 * n as u64, || {
            format!("n={n}: dominance {} + {}", d.inserts(), d.removals())
        })?;
        rows.push(format!(
            "n={n}: {c:.3} n log2 n ops, dominance {}",
            d.inserts() + d.removals()
        ));
    }
    Ok(format!("{} (c={SLOPE_OPS_PER_N_LOG_N})", rows.join("; ")))
}

fn criterion_10() -> Outcome {
    let mut pairs = 0;
    for seed in 0..100u64 {
        let n = 8 + (seed as usize * 37) % 193;
        let pair = lowerbound_pair(n, seed).map_err(|e| e.to_string())?;
        for (k, arr) in pair.arrays.iter().enumerate() {
            let s = stream(arr);
            let engines: [Box<dyn PiValidator>; 4] = [
                Box::new(OnlineValidator::new()),
                Box::new(RealtimeValidator::new()),
                Box::new(SuccinctValidator::new()),
                Box::new(SuccinctValidator::lazy()),
            ];
            for mut e in engines {
                let v = run_all(e.as_mut(), &s).map_err(|err| err.to_string())?;
                ensure(v.is_valid() == (k == pair.valid), || {
                    format!(
                        "seed {seed} n={n} member {k}: {v:?}, declared valid {}",
                        pair.valid
                    )
                })?;
                if let Verdict::Invalid { position } = v {
                    ensure(position > n / 2, || {
                        format!("seed {seed}: rejected inside the differing half at {position}")
                    })?;
                }
            }
        }
        pairs += 1;
    }
    Ok(format!(
        "{pairs} pairs, every engine accepts exactly the declared member"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle equality", criterion_1),
        ("bijection", criterion_2),
        ("pi validator exactness", criterion_3),
        ("strict validator exactness", criterion_4),
        ("halving lemma", criterion_5),
        ("window lemma", criterion_6),
        ("constant delay", criterion_7),
        ("succinct memory scaling", criterion_8),
        ("strict time bound", criterion_9),
        ("lower-bound pairs", criterion_10),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criterion_list(&criteria) {
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| name.contains(f.as_str()) || *f == (i + 1).to_string())
        {
            continue;
        }
        let clock = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = clock.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}

fn criterion_list<'a>(
    c: &'a [(&'a str, fn() -> Outcome); 10],
) -> impl Iterator<Item = (usize, (&'a str, fn() -> Outcome))> + 'a {
    c.iter().copied().enumerate()
}
