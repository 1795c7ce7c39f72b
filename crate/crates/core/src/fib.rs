//! Occurrence counting of a short pattern inside the strings
//! `F0 = "A"`, `F1 = "B"`, `Fn = F(n-1) + F(n-2)`.
//!
//! Three counters are provided. [`count_occurrences`] is the fast one: it
//! builds the first strings long enough to hold two copies of the pattern,
//! reduces them to [`OccurrenceSummary`] values and then composes summaries
//! instead of strings. [`stream_count`] walks the derivation with a sliding
//! window and [`build_explicit`] + [`scan_count`] materializes the string;
//! both are kept as oracles and are capped to stay at desk scale.
//!
//! Occurrences may overlap: `AA` occurs three times in `AAAA`.

use thiserror::Error;

pub const MAX_PATTERN_LEN: usize = 20;
pub const MAX_INDEX: u32 = 50;
pub const DEFAULT_EXPLICIT_CAP: u32 = 40;
pub const DEFAULT_STREAM_CAP: u32 = 35;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibError {
    #[error("pattern length {0} is outside 1..={MAX_PATTERN_LEN}")]
    PatternLength(usize),
    #[error("pattern must be printable ASCII")]
    PatternNotPrintable,
    #[error("index {0} is outside 0..={MAX_INDEX}")]
    IndexOutOfRange(u32),
    #[error("{mode} mode is capped at n = {cap} (requested n = {n})")]
    CapExceeded {
        mode: &'static str,
        n: u32,
        cap: u32,
    },
    #[error("empty pattern")]
    EmptyPattern,
    #[error("junction fragment of length {len} exceeds pattern length minus one ({limit})")]
    JunctionTooLong { len: usize, limit: usize },
    #[error("text of length {len} is shorter than twice the pattern length ({needed})")]
    TextTooShort { len: usize, needed: usize },
    #[error("summary is not saturated: prefix {prefix} / suffix {suffix}, expected {expected}")]
    Unsaturated {
        prefix: usize,
        suffix: usize,
        expected: usize,
    },
}

/// A validated pattern/index pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibQuery {
    pattern: String,
    index: u32,
}

impl FibQuery {
    pub fn new(pattern: impl Into<String>, index: u32) -> Result<Self, FibError> {
        let pattern = pattern.into();
        if pattern.is_empty() || pattern.len() > MAX_PATTERN_LEN {
            return Err(FibError::PatternLength(pattern.chars().count()));
        }
        if !pattern.bytes().all(|b| b == b' ' || b.is_ascii_graphic()) {
            return Err(FibError::PatternNotPrintable);
        }
        if index > MAX_INDEX {
            return Err(FibError::IndexOutOfRange(index));
        }
        Ok(FibQuery { pattern, index })
    }

    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

/// `|F_n|`, which is the Fibonacci number `Fib(n + 1)`.
pub fn fib_len(n: u32) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

// Uncapped builder for the bootstrap; callers keep n small.
fn fib_string(n: u32) -> String {
    let (mut older, mut newer) = (String::from("A"), String::from("B"));
    if n == 0 {
        return older;
    }
    for _ in 1..n {
        let next = newer.clone() + &older;
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

/// Materializes `F_n`, refusing indices above [`DEFAULT_EXPLICIT_CAP`].
pub fn build_explicit(n: u32) -> Result<String, FibError> {
    build_explicit_capped(n, DEFAULT_EXPLICIT_CAP)
}

pub fn build_explicit_capped(n: u32, cap: u32) -> Result<String, FibError> {
    if n > cap {
        return Err(FibError::CapExceeded {
            mode: "explicit",
            n,
            cap,
        });
    }
    Ok(fib_string(n))
}

/// Number of start positions where `pattern` matches `text`, overlaps included.
pub fn scan_count(text: &str, pattern: &str) -> Result<u64, FibError> {
    if pattern.is_empty() {
        return Err(FibError::EmptyPattern);
    }
    let count = text
        .as_bytes()
        .windows(pattern.len())
        .filter(|w| *w == pattern.as_bytes())
        .count();
    Ok(count as u64)
}

/// Walks the derivation tree of `F_n` left to right, emitting one letter at
/// each base case into a window holding the last `|S|` letters.
pub fn stream_count(query: &FibQuery) -> Result<u64, FibError> {
    stream_count_capped(query, DEFAULT_STREAM_CAP)
}

pub fn stream_count_capped(query: &FibQuery, cap: u32) -> Result<u64, FibError> {
    if query.index > cap {
        return Err(FibError::CapExceeded {
            mode: "stream",
            n: query.index,
            cap,
        });
    }
    let mut walker = StreamWalker {
        pattern: query.pattern.as_bytes(),
        window: Vec::with_capacity(query.pattern.len() + 1),
        count: 0,
    };
    walker.walk(query.index);
    Ok(walker.count)
}

struct StreamWalker<'a> {
    pattern: &'a [u8],
    window: Vec<u8>,
    count: u64,
}

impl StreamWalker<'_> {
    fn walk(&mut self, n: u32) {
        match n {
            0 => self.push(b'A'),
            1 => self.push(b'B'),
            _ => {
                self.walk(n - 1);
                self.walk(n - 2);
            }
        }
    }

    fn push(&mut self, letter: u8) {
        self.window.push(letter);
        if self.window.len() > self.pattern.len() {
            self.window.remove(0);
        }
        if self.window == self.pattern {
            self.count += 1;
        }
    }
}

/// Counts matches of `pattern` in `left_suffix + right_prefix` that take at
/// least one letter from each side.
pub fn junction_count(
    left_suffix: &str,
    right_prefix: &str,
    pattern: &str,
) -> Result<u64, FibError> {
    if pattern.is_empty() {
        return Err(FibError::EmptyPattern);
    }
    let limit = pattern.len() - 1;
    for side in [left_suffix, right_prefix] {
        if side.len() > limit {
            return Err(FibError::JunctionTooLong {
                len: side.len(),
                limit,
            });
        }
    }
    let seam = left_suffix.len();
    let joined = [left_suffix.as_bytes(), right_prefix.as_bytes()].concat();
    let count = joined
        .windows(pattern.len())
        .enumerate()
        .filter(|&(start, w)| start < seam && start + w.len() > seam && w == pattern.as_bytes())
        .count();
    Ok(count as u64)
}

/// Stand-in for a long string when counting one pattern: its first and last
/// `|S| - 1` letters and the number of occurrences inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccurrenceSummary {
    pub prefix: String,
    pub count: u64,
    pub suffix: String,
}

impl OccurrenceSummary {
    /// Whether both ends hold exactly `|S| - 1` letters for this pattern.
    pub fn is_saturated(&self, pattern: &str) -> bool {
        let edge = pattern.len().saturating_sub(1);
        self.prefix.len() == edge && self.suffix.len() == edge
    }

    fn check_saturated(&self, pattern: &str) -> Result<(), FibError> {
        if self.is_saturated(pattern) {
            Ok(())
        } else {
            Err(FibError::Unsaturated {
                prefix: self.prefix.len(),
                suffix: self.suffix.len(),
                expected: pattern.len().saturating_sub(1),
            })
        }
    }
}

/// Summarizes `text`, which must be at least twice as long as the pattern so
/// that prefix and suffix are full and do not overlap.
pub fn summary_of_string(text: &str, pattern: &str) -> Result<OccurrenceSummary, FibError> {
    if pattern.is_empty() {
        return Err(FibError::EmptyPattern);
    }
    let needed = 2 * pattern.len();
    if text.len() < needed {
        return Err(FibError::TextTooShort {
            len: text.len(),
            needed,
        });
    }
    let edge = pattern.len() - 1;
    Ok(OccurrenceSummary {
        prefix: text[..edge].to_owned(),
        count: scan_count(text, pattern)?,
        suffix: text[text.len() - edge..].to_owned(),
    })
}

/// Summary of the concatenation of the strings behind `left` and `right`.
pub fn summary_concat(
    left: &OccurrenceSummary,
    right: &OccurrenceSummary,
    pattern: &str,
) -> Result<OccurrenceSummary, FibError> {
    if pattern.is_empty() {
        return Err(FibError::EmptyPattern);
    }
    left.check_saturated(pattern)?;
    right.check_saturated(pattern)?;
    let seam = junction_count(&left.suffix, &right.prefix, pattern)?;
    Ok(OccurrenceSummary {
        prefix: left.prefix.clone(),
        count: left.count + right.count + seam,
        suffix: right.suffix.clone(),
    })
}

/// Smallest `k` with `|F_k| >= 2 * pattern_len`.
pub fn bootstrap_index(pattern_len: usize) -> u32 {
    let needed = 2 * pattern_len as u64;
    (0..).find(|&k| fib_len(k) >= needed).unwrap()
}

/// Occurrences of the query pattern in `F_n`, for every legal query.
pub fn count_occurrences(query: &FibQuery) -> Result<u64, FibError> {
    let pattern = query.pattern();
    let n = query.index();
    let k = bootstrap_index(pattern.len());
    if n < k {
        return scan_count(&fib_string(n), pattern);
    }
    let mut older = summary_of_string(&fib_string(k), pattern)?;
    if n == k {
        return Ok(older.count);
    }
    let mut newer = summary_of_string(&fib_string(k + 1), pattern)?;
    for _ in k + 2..=n {
        let next = summary_concat(&newer, &older, pattern)?;
        older = std::mem::replace(&mut newer, next);
    }
    Ok(newer.count)
}

/// Counting backend, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountMode {
    #[default]
    Algebraic,
    Stream,
    Naive,
}

impl CountMode {
    pub fn count(self, query: &FibQuery) -> Result<u64, FibError> {
        match self {
            CountMode::Algebraic => count_occurrences(query),
            CountMode::Stream => stream_count(query),
            CountMode::Naive => scan_count(&build_explicit(query.index())?, query.pattern()),
        }
    }
}
