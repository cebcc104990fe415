//! Text input: whitespace-separated integers, or words.

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Parses signed decimal integers separated by any whitespace.
pub fn parse_integers(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            let v = tok.parse::<i64>().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("not an integer: '{tok}'"),
            })?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Reads a word either as ASCII letters (whitespace ignored) or, with
/// `symbols`, as whitespace-separated positive integers.
pub fn parse_word(text: &str, symbols: bool) -> Result<Word> {
    if symbols {
        let mut out = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            for tok in line.split_whitespace() {
                let v = tok
                    .parse::<Symbol>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Parse {
                        line: lineno + 1,
                        message: format!("not a positive symbol: '{tok}'"),
                    })?;
                out.push(v);
            }
        }
        return Ok(Word::new(out));
    }
    let mut letters = String::new();
    for (lineno, line) in text.lines().enumerate() {
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            if !c.is_ascii_alphabetic() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("unexpected character '{c}'"),
                });
            }
            letters.push(c);
        }
    }
    Ok(Word::from_ascii(&letters))
}

pub fn format_integers<T: ToString>(values: &[T]) -> String {
    let mut s = values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    if !values.is_empty() {
        s.push('\n');
    }
    s
}
