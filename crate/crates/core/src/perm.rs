//! Permutations in one-line notation with the statistics and pattern
//! machinery the rest of the crate is built on.
//!
//! A [`Permutation`] of size `n` stores the word `p(1) p(2) ... p(n)`, a
//! rearrangement of `1..=n`. Words are immutable; every operation returns a
//! new value.

use std::fmt;

use crate::{Error, Result};

/// Largest supported permutation size (entries are stored as `u8`).
pub const MAX_SIZE: usize = 255;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// The derived `Ord` is lexicographic on the word, which is the tie-break
/// order used everywhere a deterministic listing is required.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that the word
    /// is a rearrangement of `1..=n` with `n >= 1`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::NotAPermutation("empty word".into()));
        }
        let n = word.len();
        if n > MAX_SIZE {
            return Err(Error::SizeUnsupported {
                size: n,
                max: MAX_SIZE,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!(
                    "entry {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::NotAPermutation(format!("duplicate entry {v}")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// The identity permutation of size `n` (`n >= 1`).
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_SIZE).contains(&n), "size out of range");
        Self {
            word: (1..=n as u8).collect(),
        }
    }

    /// Parses one-line notation: either a contiguous digit string (each digit
    /// one entry, so only valid when every entry is at most 9) or
    /// comma-separated integers.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::MalformedText(text.into()));
        }
        let entries: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::MalformedText(text.into()))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::MalformedText(text.into()))
                })
                .collect::<Result<_>>()?
        };
        if entries.iter().any(|&v| v > MAX_SIZE) {
            return Err(Error::SizeUnsupported {
                size: entries.len(),
                max: MAX_SIZE,
            });
        }
        Self::new(entries.into_iter().map(|v| v as u8).collect())
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// The one-line word.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The image `p(i)` of a 1-based position.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length: the number of inversions, pairs `i < j` with
    /// `p(i) > p(j)`.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Absolute length: size minus the number of disjoint cycles (fixed
    /// points count as 1-cycles).
    pub fn absolute_length(&self) -> usize {
        self.size() - self.cycles().len()
    }

    /// Disjoint cycle decomposition on positions. Each cycle is listed in
    /// orbit order starting from its minimum position; cycles are sorted by
    /// minimum element. The cycles partition `{1..n}`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cycle.push(i);
                i = self.at(i);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Left multiplication by the transposition `t = (a b)`: swaps the values
    /// `a` and `b` wherever they occur in the word. Applying the same `t`
    /// twice returns the original permutation.
    pub fn apply_transposition(&self, t: Transposition) -> Result<Self> {
        if t.b() > self.size() {
            return Err(Error::TranspositionOutOfRange {
                a: t.a(),
                b: t.b(),
                size: self.size(),
            });
        }
        Ok(self.swap_values(t.a, t.b))
    }

    /// Crate-internal fast path for transpositions known to fit.
    pub(crate) fn apply_unchecked(&self, t: Transposition) -> Self {
        self.swap_values(t.a, t.b)
    }

    /// Infallible value swap for transpositions already known to fit.
    pub(crate) fn swap_values(&self, a: u8, b: u8) -> Self {
        debug_assert!(a < b && (b as usize) <= self.size());
        let word = self
            .word
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Self { word }
    }

    /// All permutations of size `n` in lexicographic order of their words.
    pub fn all(n: usize) -> AllPermutations {
        assert!((1..=MAX_SIZE).contains(&n), "size out of range");
        AllPermutations {
            next: Some((1..=n as u8).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    /// One-line notation: a digit string for sizes up to 9, comma-separated
    /// beyond (the same formats [`Permutation::parse`] accepts).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Lexicographic iterator over all of `S_n`.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        self.next = next_word(&mut succ).then_some(succ);
        Some(Permutation { word })
    }
}

/// In-place step to the next word in lexicographic order; false at the end.
fn next_word(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// A 2-cycle `(a b)` with `1 <= a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transposition {
    a: u8,
    b: u8,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a >= b || b > MAX_SIZE {
            return Err(Error::InvalidTransposition { a, b });
        }
        Ok(Self {
            a: a as u8,
            b: b as u8,
        })
    }

    pub fn a(&self) -> usize {
        self.a as usize
    }

    pub fn b(&self) -> usize {
        self.b as usize
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// All transpositions `(a b)` with `b <= n`, in lexicographic order.
pub fn all_transpositions(n: usize) -> impl Iterator<Item = Transposition> {
    debug_assert!(n <= MAX_SIZE);
    (1..=n as u8).flat_map(move |a| (a + 1..=n as u8).map(move |b| Transposition { a, b }))
}

/// A strictly increasing tuple of 1-based positions witnessing a pattern
/// occurrence in a target permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Embedding {
    indices: Vec<usize>,
}

impl Embedding {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices[0] == 0 {
            return Err(Error::InvalidEmbedding("indices must start at 1".into()));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidEmbedding(
                "indices must be strictly increasing".into(),
            ));
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every embedding of `pattern` in `target`, in lexicographic order of the
/// index tuple. An empty list means the target avoids the pattern.
pub fn embeddings(pattern: &Permutation, target: &Permutation) -> Result<Vec<Embedding>> {
    let k = pattern.size();
    let n = target.size();
    if k > n {
        return Err(Error::PatternTooLarge {
            pattern: k,
            target: n,
        });
    }
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    search_embeddings(pattern.word(), target.word(), &mut chosen, 0, &mut |c| {
        found.push(Embedding {
            indices: c.iter().map(|&i| i + 1).collect(),
        });
        true
    });
    Ok(found)
}

/// True iff `target` contains `pattern`: some subsequence of the target has
/// the same relative order as the pattern. A pattern larger than the target
/// is never contained.
pub fn contains_pattern(pattern: &Permutation, target: &Permutation) -> bool {
    if pattern.size() > target.size() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.size());
    !search_embeddings(pattern.word(), target.word(), &mut chosen, 0, &mut |_| {
        false
    })
}

/// True iff `target` contains none of the listed patterns.
pub fn avoids_all(target: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|p| !contains_pattern(p, target))
}

/// Depth-first search over positions with pruning on relative order.
/// `emit` is called with each complete 0-based index tuple; returning false
/// aborts the search. The function returns true if the search ran to
/// completion.
fn search_embeddings(
    pattern: &[u8],
    target: &[u8],
    chosen: &mut Vec<usize>,
    start: usize,
    emit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let d = chosen.len();
    if d == pattern.len() {
        return emit(chosen);
    }
    let remaining = pattern.len() - d;
    for i in start..=target.len() - remaining {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(a, &pos)| (target[pos] < target[i]) == (pattern[a] < pattern[d]));
        if consistent {
            chosen.push(i);
            let keep_going = search_embeddings(pattern, target, chosen, i + 1, emit);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
    }
    true
}

/// The pattern realized by `target` at the given 1-based positions: the
/// subsequence standardized to a permutation of `1..=k`.
pub fn subsequence_pattern(target: &Permutation, positions: &[usize]) -> Permutation {
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    let values: Vec<u8> = positions.iter().map(|&i| target.word()[i - 1]).collect();
    let mut sorted = values.clone();
    sorted.sort_unstable();
    let word = values
        .iter()
        .map(|v| (sorted.binary_search(v).unwrap() + 1) as u8)
        .collect();
    Permutation { word }
}
