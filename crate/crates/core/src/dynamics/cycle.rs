use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::ParseError;

/// One period `(b0, ..., b{n-1})` of a periodic orbit.
///
/// Equality and hashing are up to cyclic rotation; use [`Cycle::word`] when
/// the phase matters.
#[derive(Clone)]
pub struct Cycle {
    word: Vec<i64>,
}

impl Cycle {
    /// Panics on an empty word.
    pub fn new(word: Vec<i64>) -> Cycle {
        assert!(!word.is_empty(), "a cycle word has at least one entry");
        Cycle { word }
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `i`, with cyclic indexing.
    pub fn at(&self, i: usize) -> i64 {
        self.word[i % self.word.len()]
    }

    pub fn reversed(&self) -> Cycle {
        Cycle { word: self.word.iter().rev().copied().collect() }
    }

    pub fn max_abs(&self) -> i64 {
        self.word.iter().map(|b| b.abs()).max().unwrap_or(0)
    }

    /// The lexicographically least rotation (Booth's algorithm).
    pub fn canonical(&self) -> Vec<i64> {
        let w = &self.word;
        let n = w.len();
        let mut f: Vec<isize> = vec![-1; 2 * n];
        let mut k = 0usize;
        for j in 1..2 * n {
            let sj = w[j % n];
            let mut i = f[j - k - 1];
            while i != -1 && sj != w[(k + i as usize + 1) % n] {
                if sj < w[(k + i as usize + 1) % n] {
                    k = j - i as usize - 1;
                }
                i = f[i as usize];
            }
            if sj != w[(k + (i + 1) as usize) % n] {
                // i == -1 here
                if sj < w[k % n] {
                    k = j;
                }
                f[j - k] = -1;
            } else {
                f[j - k] = i + 1;
            }
        }
        (0..n).map(|t| w[(k + t) % n]).collect()
    }

    /// Positions `i` such that `(b_i, b_{i+1})` equals the given pair.
    pub fn pair_positions(&self, x: i64, y: i64) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.at(i) == x && self.at(i + 1) == y)
    }

    pub fn contains_pair(&self, x: i64, y: i64) -> bool {
        self.pair_positions(x, y).next().is_some()
    }

    /// The rotation starting at position `i`.
    pub fn rotated(&self, i: usize) -> Cycle {
        let n = self.len();
        Cycle { word: (0..n).map(|t| self.word[(i + t) % n]).collect() }
    }

    pub fn is_cyclic_palindrome(&self) -> bool {
        self.reversed() == *self
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && (self.word == other.word || self.canonical() == other.canonical())
    }
}

impl Eq for Cycle {}

impl Hash for Cycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `b0,b1,...` with optional surrounding parentheses.
impl FromStr for Cycle {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Word(s.to_string());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let word =
            inner.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        if word.is_empty() {
            return Err(bad());
        }
        Ok(Cycle::new(word))
    }
}
