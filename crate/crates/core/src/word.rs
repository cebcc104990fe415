//! Words over small integer alphabets.

use std::fmt;

/// A symbol. Symbols are compared only for equality, so any injective
/// renaming of a word leaves its failure functions unchanged.
pub type Symbol = u32;

/// A finite word over integer symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(letters: Vec<Symbol>) -> Self {
        Word(letters)
    }

    /// Maps `a` to 1, `b` to 2, and so on. Any other byte maps to its
    /// code point so that mixed input still round-trips through equality.
    pub fn from_ascii(text: &str) -> Self {
        Word(
            text.bytes()
                .map(|b| match b {
                    b'a'..=b'z' => Symbol::from(b - b'a') + 1,
                    b'A'..=b'Z' => Symbol::from(b - b'A') + 27,
                    _ => Symbol::from(b) + 1000,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Symbol> {
        self.0
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        let mut seen: Vec<Symbol> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// True when symbols first appear in the order 1, 2, 3, ...
    pub fn is_canonical(&self) -> bool {
        let mut next = 1;
        for &c in &self.0 {
            if c == next {
                next += 1;
            } else if c == 0 || c > next {
                return false;
            }
        }
        true
    }

    /// Renames symbols by order of first occurrence.
    pub fn canonicalize(&self) -> Word {
        let mut map: Vec<(Symbol, Symbol)> = Vec::new();
        let letters = self
            .0
            .iter()
            .map(|&c| match map.iter().find(|(from, _)| *from == c) {
                Some(&(_, to)) => to,
                None => {
                    let to = map.len() as Symbol + 1;
                    map.push((c, to));
                    to
                }
            })
            .collect();
        Word(letters)
    }

    /// Renders symbols 1..=26 as `a..z`; anything larger falls back to
    /// bracketed integers.
    pub fn to_letters_string(&self) -> String {
        let mut out = String::with_capacity(self.0.len());
        for &c in &self.0 {
            if (1..=26).contains(&c) {
                out.push((b'a' + (c - 1) as u8) as char);
            } else {
                out.push_str(&format!("[{c}]"));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters_string())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_codec() {
        let w = Word::from_ascii("abca");
        assert_eq!(w.letters(), &[1, 2, 3, 1]);
        assert_eq!(w.to_string(), "abca");
        assert_eq!(w.alphabet_size(), 3);
    }

    #[test]
    fn canonical_form() {
        assert!(Word::new(vec![1, 1, 2, 1, 3]).is_canonical());
        assert!(!Word::new(vec![2, 1]).is_canonical());
        assert!(!Word::new(vec![1, 3]).is_canonical());
        assert_eq!(
            Word::new(vec![7, 7, 4, 7, 9]).canonicalize().letters(),
            &[1, 1, 2, 1, 3]
        );
    }
}
