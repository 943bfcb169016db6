//! Integer partitions: enumeration, block form, the n(λ) invariant,
//! dominance order, box removal and hook dimensions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// A partition: weakly decreasing sequence of positive integers.
///
/// The empty partition is allowed and denotes ∅. Parts are stored
/// normalized, without trailing zeros; operations that need zero-padded
/// indexing pad on the fly via [`Partition::part`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// One block `a^m` of a partition written as `(a_1^{m_1}, ..., a_h^{m_h})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    /// Part value `a_i`.
    pub value: usize,
    /// Multiplicity `m_i`.
    pub mult: usize,
}

impl Partition {
    /// Builds a partition from a weakly decreasing list of parts.
    /// Trailing zeros are stripped; panics if the list increases anywhere
    /// or contains a zero before a nonzero entry.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        assert!(!parts.contains(&0), "zero part before a nonzero part");
        Partition { parts }
    }

    /// The empty partition ∅.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The parts, without trailing zeros.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero-padded beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for ∅.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// n(λ) = Σ (i−1)·λ_i over 1-based i.
    pub fn n_invariant(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i * p)
            .sum()
    }

    /// True iff every part is even. ∅ counts as even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// Number of odd parts.
    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// The conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.len();
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.parts[..rows].iter().filter(|&&p| p >= j).count());
        }
        Partition { parts: t }
    }

    /// Groups equal parts into blocks `(a_1^{m_1}, ..., a_h^{m_h})`,
    /// values strictly decreasing.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out: Vec<Block> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some(b) if b.value == p => b.mult += 1,
                _ => out.push(Block { value: p, mult: 1 }),
            }
        }
        out
    }

    /// Rebuilds a partition from block form. Inverse of [`Partition::blocks`].
    pub fn from_blocks(blocks: &[Block]) -> Partition {
        let mut parts = Vec::new();
        for b in blocks {
            parts.extend(std::iter::repeat(b.value).take(b.mult));
        }
        Partition::new(parts)
    }

    /// Componentwise ν + 2μ, zero-padded. Returns `None` when the sum is
    /// not weakly decreasing (μ is not admissible for this ν).
    pub fn add_twice(&self, mu: &Partition) -> Option<Partition> {
        let rows = self.parts.len().max(mu.parts.len());
        let mut sum = Vec::with_capacity(rows);
        for i in 1..=rows {
            sum.push(self.part(i) + 2 * mu.part(i));
        }
        if sum.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(sum))
    }

    /// All partitions obtained by removing one corner box.
    /// Panics on ∅, which has no boxes.
    pub fn box_removals(&self) -> Vec<Partition> {
        assert!(!self.is_empty(), "no box to remove from the empty partition");
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            // a corner: strictly longer than the row below (or the last row)
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts));
            }
        }
        out
    }

    /// Dimension of the symmetric-group irreducible labeled by this
    /// partition, by the hook length formula. Exact; panics if the result
    /// exceeds `u128`.
    pub fn hook_dimension(&self) -> u128 {
        let n = self.size();
        let mut numerator = BigUint::one();
        for k in 1..=n {
            numerator *= BigUint::from(k);
        }
        let conj = self.conjugate();
        let mut denominator = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let hook = (row - j) + (conj.part(j) - (i + 1)) + 1;
                denominator *= BigUint::from(hook);
            }
        }
        let dim = numerator / denominator;
        dim.to_u128().expect("hook dimension exceeds u128")
    }
}

/// All partitions of `m` in reverse lexicographic order, so `(m)` comes
/// first and `(1^m)` last. `p(0) = 1` via the empty partition.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(m, m, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for next in (1..=remaining.min(max_part)).rev() {
        stack.push(next);
        descend(remaining - next, next, stack, out);
        stack.pop();
    }
}

/// Dominance order: μ ⊴ λ iff every prefix sum of μ is ≤ that of λ.
/// Only defined for equal sizes; panics otherwise.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    assert_eq!(
        mu.size(),
        lambda.size(),
        "dominance compares partitions of equal size"
    );
    let rows = mu.len().max(lambda.len());
    let (mut acc_mu, mut acc_la) = (0usize, 0usize);
    for i in 1..=rows {
        acc_mu += mu.part(i);
        acc_la += lambda.part(i);
        if acc_mu > acc_la {
            return false;
        }
    }
    true
}

impl fmt::Display for Partition {
    /// Bracketed comma-separated parts: `[4,2,2,1]`; ∅ prints as `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error produced when partition or label text does not parse.
/// `position` is the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at byte {position}")]
pub struct ParseLabelError {
    pub message: String,
    pub position: usize,
}

impl ParseLabelError {
    pub fn new(message: impl Into<String>, position: usize) -> Self {
        ParseLabelError {
            message: message.into(),
            position,
        }
    }
}

/// Parses `[4,2,2,1]` (or `[]`) starting at byte `start` of `text`.
/// On success returns the partition and the byte offset one past `]`.
pub(crate) fn parse_partition_at(
    text: &str,
    start: usize,
) -> Result<(Partition, usize), ParseLabelError> {
    let bytes = text.as_bytes();
    if bytes.get(start) != Some(&b'[') {
        return Err(ParseLabelError::new("expected '['", start));
    }
    let mut pos = start + 1;
    let mut parts = Vec::new();
    if bytes.get(pos) == Some(&b']') {
        return Ok((Partition::empty(), pos + 1));
    }
    loop {
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digits_start {
            return Err(ParseLabelError::new("expected a part (digits)", pos));
        }
        let value: usize = text[digits_start..pos]
            .parse()
            .map_err(|_| ParseLabelError::new("part out of range", digits_start))?;
        if value == 0 {
            return Err(ParseLabelError::new("parts must be positive", digits_start));
        }
        if let Some(&prev) = parts.last() {
            if value > prev {
                return Err(ParseLabelError::new(
                    "parts must be weakly decreasing",
                    digits_start,
                ));
            }
        }
        parts.push(value);
        match bytes.get(pos) {
            Some(&b',') => pos += 1,
            Some(&b']') => return Ok((Partition { parts }, pos + 1)),
            _ => return Err(ParseLabelError::new("expected ',' or ']'", pos)),
        }
    }
}

impl FromStr for Partition {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (partition, end) = parse_partition_at(s, 0)?;
        if end != s.len() {
            return Err(ParseLabelError::new("trailing input after ']'", end));
        }
        Ok(partition)
    }
}
