//! Input families for tests, benchmarks and the `gen` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::border::compute_pi;
use crate::error::{Error, Result};
use crate::online::OnlineValidator;
use crate::realtime::RealtimeValidator;
use crate::verdict::{run_all, PiValidator};
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Unary,
    Fibonacci,
    ThueMorse,
    RandomWord,
    RandomValidPi,
    LowerboundPair,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Unary,
        Family::Fibonacci,
        Family::ThueMorse,
        Family::RandomWord,
        Family::RandomValidPi,
        Family::LowerboundPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Unary => "unary",
            Family::Fibonacci => "fibonacci",
            Family::ThueMorse => "thue_morse",
            Family::RandomWord => "random_word",
            Family::RandomValidPi => "random_valid_pi",
            Family::LowerboundPair => "lowerbound_pair",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub n: usize,
    pub seed: u64,
    /// Alphabet size for `random_word`.
    pub alphabet: u32,
    /// Probability of extending the current border in `random_valid_pi`.
    pub unary_bias: f64,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            n: 16,
            seed: 0,
            alphabet: 2,
            unary_bias: 0.5,
        }
    }
}

pub fn unary_word(n: usize) -> Word {
    Word::new(vec![1; n])
}

/// Prefix of the infinite Fibonacci word `abaababaabaab...`.
pub fn fibonacci_word(n: usize) -> Word {
    let (mut a, mut b): (Vec<Symbol>, Vec<Symbol>) = (vec![1], vec![1, 2]);
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = b;
        b = next;
    }
    b.truncate(n);
    if n == 1 {
        b = vec![1];
    }
    Word::new(b)
}

/// Prefix of the Thue-Morse word `abbabaab...`.
pub fn thue_morse_word(n: usize) -> Word {
    Word::new((0..n).map(|i| 1 + (i.count_ones() % 2)).collect())
}

pub fn random_word(n: usize, alphabet: u32, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Word::new((0..n).map(|_| rng.gen_range(1..=alphabet.max(1))).collect())
}

/// A valid border array built by picking each value from the live
/// candidate set: the border extension with probability `unary_bias`,
/// otherwise uniformly among all candidates.
pub fn random_valid_pi(n: usize, seed: u64, unary_bias: f64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut engine = RealtimeValidator::new();
    random_valid_extension(&mut engine, n, &mut rng, unary_bias)
}

fn random_valid_extension(
    engine: &mut RealtimeValidator,
    n: usize,
    rng: &mut ChaCha8Rng,
    unary_bias: f64,
) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let cand = engine.next_candidates();
        let v = if rng.gen_bool(unary_bias.clamp(0.0, 1.0)) {
            cand[0]
        } else {
            cand[rng.gen_range(0..cand.len())]
        };
        let verdict = engine.push(v as i64).expect("fresh engine");
        debug_assert!(verdict.is_valid());
        out.push(v);
    }
    out
}

/// Border arrays of the given words family, or the sampled array.
pub fn family_pi(family: Family, opts: &GenOptions) -> Result<Vec<usize>> {
    Ok(match family {
        Family::Unary => compute_pi(&unary_word(opts.n)).into_values(),
        Family::Fibonacci => compute_pi(&fibonacci_word(opts.n)).into_values(),
        Family::ThueMorse => compute_pi(&thue_morse_word(opts.n)).into_values(),
        Family::RandomWord => {
            compute_pi(&random_word(opts.n, opts.alphabet, opts.seed)).into_values()
        }
        Family::RandomValidPi => random_valid_pi(opts.n, opts.seed, opts.unary_bias),
        Family::LowerboundPair => {
            let pair = lowerbound_pair(opts.n, opts.seed)?;
            pair.arrays[pair.valid].clone()
        }
    })
}

/// Two arrays of equal length that agree from position `n/2 + 1` on and of
/// which exactly one is a border array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundPair {
    pub arrays: [Vec<usize>; 2],
    /// Index into `arrays` of the valid member.
    pub valid: usize,
    /// Position in the first half where the two prefixes first differ.
    pub split: usize,
}

/// Builds a pair following the streaming lower-bound argument: two valid
/// prefixes of length `h = n/2` that differ at `i` (`p1[i] < p2[i]`),
/// both followed by `0, 1, ..., i, p2[i] + 1` and zeros up to length `n`.
/// The shared tail accepts `p2[i] + 1` only after `p2`, which holds when
/// `p2[i+1] != p2[i] + 1`; `i` is chosen so that this is the case.
pub fn lowerbound_pair(n: usize, seed: u64) -> Result<LowerBoundPair> {
    if n < 8 {
        return Err(Error::Usage(format!(
            "lowerbound_pair needs n >= 8, got {n}"
        )));
    }
    let h = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let p2 = {
            let mut e = RealtimeValidator::new();
            random_valid_extension(&mut e, h, &mut rng, 0.7)
        };
        let at = |j: usize| if j <= h { p2[j - 1] } else { 0 };
        let splits: Vec<usize> = (2..=h.min(n - h - 2))
            .filter(|&i| at(i) >= 1 && at(i + 1) != at(i) + 1)
            .collect();
        if splits.is_empty() {
            continue;
        }
        let i = splits[rng.gen_range(0..splits.len())];

        let mut e = RealtimeValidator::new();
        for &v in &p2[..i - 1] {
            e.push(v as i64)?;
        }
        let lower: Vec<usize> = e
            .next_candidates()
            .into_iter()
            .filter(|&c| c < p2[i - 1])
            .collect();
        let v = lower[rng.gen_range(0..lower.len())];
        e.push(v as i64)?;
        let mut p1 = p2[..i - 1].to_vec();
        p1.push(v);
        p1.extend(random_valid_extension(&mut e, h - i, &mut rng, 0.7));

        let mut tail: Vec<usize> = (0..=i).collect();
        tail.push(p2[i - 1] + 1);
        tail.resize(n - h, 0);
        let a1 = [p1, tail.clone()].concat();
        let a2 = [p2, tail].concat();

        let ok1 = accepts(&a1)?;
        let ok2 = accepts(&a2)?;
        if ok1 == ok2 {
            continue;
        }
        let swap = rng.gen_bool(0.5);
        let valid = usize::from(ok1 == swap);
        let arrays = if swap { [a2, a1] } else { [a1, a2] };
        debug_assert!(accepts(&arrays[valid])?);
        return Ok(LowerBoundPair {
            arrays,
            valid,
            split: i,
        });
    }
    Err(Error::Usage(format!(
        "could not build a lower-bound pair for n={n}"
    )))
}

fn accepts(a: &[usize]) -> Result<bool> {
    let s: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    let mut v = OnlineValidator::new();
    Ok(run_all(&mut v, &s)?.is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(fibonacci_word(13).to_string(), "abaababaabaab");
        assert_eq!(thue_morse_word(8).to_string(), "abbabaab");
        assert_eq!(compute_pi(&unary_word(5)).values(), &[0, 1, 2, 3, 4]);
        assert_eq!(fibonacci_word(1).len(), 1);
        assert_eq!(random_word(50, 3, 9), random_word(50, 3, 9));
    }

    #[test]
    fn random_valid_is_valid_and_deterministic() {
        for bias in [0.0, 0.5, 0.95] {
            let a = random_valid_pi(3000, 7, bias);
            assert!(accepts(&a).unwrap());
            assert_eq!(a, random_valid_pi(3000, 7, bias));
        }
    }

    #[test]
    fn pairs_have_one_valid_member() {
        for seed in 0..50 {
            for n in [8, 20, 101, 200] {
                let p = lowerbound_pair(n, seed).unwrap();
                assert_eq!(p.arrays[0].len(), n);
                assert_eq!(p.arrays[1].len(), n);
                assert!(accepts(&p.arrays[p.valid]).unwrap());
                assert!(!accepts(&p.arrays[1 - p.valid]).unwrap());
                assert_eq!(p.arrays[0][n / 2..], p.arrays[1][n / 2..]);
            }
        }
        assert!(lowerbound_pair(7, 0).is_err());
    }
}
