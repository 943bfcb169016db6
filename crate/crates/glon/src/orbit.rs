//! H-orbits on the unipotent part of the symmetric space GL_N/O_N
//! (H = SO_N), the local systems living on them, and their text labels.
//!
//! Orbits are Jordan types λ ⊢ N; an orbit carries a ± tag exactly when λ
//! is an even partition (then the single GL-orbit splits into two
//! H-orbits). Equivariant simple local systems are characters of the
//! component group of the centralizer, encoded as one sign per distinct
//! part value with the sign at the largest odd value forced to +.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::{enumerate_partitions, ParseLabelError, Partition};

/// Ambient-group bookkeeping for a fixed N: H = SO_N acting on the
/// unipotent part of GL_N/O_N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupContext {
    n_ambient: usize,
}

impl GroupContext {
    pub fn new(n_ambient: usize) -> Self {
        GroupContext { n_ambient }
    }

    /// N, the size of the ambient GL_N.
    pub fn ambient(&self) -> usize {
        self.n_ambient
    }

    /// Rank floor n = ⌊N/2⌋.
    pub fn rank(&self) -> usize {
        self.n_ambient / 2
    }

    /// dim H = dim SO_N = N(N−1)/2.
    pub fn dim_h(&self) -> usize {
        self.n_ambient * self.n_ambient.saturating_sub(1) / 2
    }

    /// Number of positive roots of SO_N: n² for odd N, n²−n for even N.
    pub fn nu_h(&self) -> usize {
        let n = self.rank();
        if self.n_ambient % 2 == 1 {
            n * n
        } else {
            n * n - n
        }
    }
}

/// Which of the two H-orbits inside a split GL-orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Split {
    Plus,
    Minus,
}

impl Split {
    pub fn as_char(self) -> char {
        match self {
            Split::Plus => '+',
            Split::Minus => '-',
        }
    }
}

/// A single sign, one slot of a τ-symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// True iff orbits of type λ carry a ± tag: λ even (∅ included).
pub fn requires_split(lambda: &Partition) -> bool {
    lambda.is_even()
}

/// Label of one H-orbit: a Jordan type plus the ± tag when the type is
/// an even partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    lambda: Partition,
    split: Option<Split>,
}

impl OrbitLabel {
    /// Panics unless the tag is present exactly when λ is even.
    pub fn new(lambda: Partition, split: Option<Split>) -> Self {
        assert_eq!(
            split.is_some(),
            requires_split(&lambda),
            "split tag must be present iff the partition is even: {}",
            lambda
        );
        OrbitLabel { lambda, split }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn split(&self) -> Option<Split> {
        self.split
    }

    /// Size of the ambient N (the size of λ).
    pub fn ambient(&self) -> usize {
        self.lambda.size()
    }

    /// dim O_λ = dim H − n(λ).
    pub fn dimension(&self) -> usize {
        orbit_dimension(GroupContext::new(self.ambient()), &self.lambda)
    }
}

/// dim O_λ = dim H − n(λ) for λ ⊢ N. Panics on size mismatch.
pub fn orbit_dimension(ctx: GroupContext, lambda: &Partition) -> usize {
    assert_eq!(lambda.size(), ctx.ambient(), "partition size must equal N");
    ctx.dim_h() - lambda.n_invariant()
}

/// Component group orders for the centralizer of a nilpotent of Jordan
/// type λ, inside the full orthogonal group and inside SO_N. Both are
/// elementary abelian 2-groups; h is the number of distinct part values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentGroups {
    /// Number of blocks of λ.
    pub h: usize,
    /// Order of the component group over the orthogonal group: 2^h.
    pub orthogonal_order: u64,
    /// Order over SO_N: 2^h when λ is even, 2^{h−1} otherwise.
    pub special_orthogonal_order: u64,
}

/// Panics on ∅ (a nilpotent needs at least one Jordan block).
pub fn component_groups(lambda: &Partition) -> ComponentGroups {
    assert!(!lambda.is_empty(), "component groups need a nonempty type");
    let h = lambda.blocks().len();
    ComponentGroups {
        h,
        orthogonal_order: 1u64 << h,
        special_orthogonal_order: if lambda.is_even() {
            1u64 << h
        } else {
            1u64 << (h - 1)
        },
    }
}

/// A τ-symbol: one sign per block of the underlying partition, with the
/// sign at the largest odd part value forced to +. Characters of the
/// SO_N-centralizer component group are exactly these symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    /// Validates `signs` against λ; panics when the count differs from
    /// the block count or the largest-odd-value sign is not +.
    pub fn new(lambda: &Partition, signs: Vec<Sign>) -> Self {
        if let Err(e) = Self::check(lambda, &signs) {
            panic!("invalid sign vector for {}: {}", lambda, e);
        }
        SignVector { signs }
    }

    /// The empty symbol, only valid over ∅.
    pub fn empty() -> Self {
        SignVector { signs: Vec::new() }
    }

    fn check(lambda: &Partition, signs: &[Sign]) -> Result<(), String> {
        let blocks = lambda.blocks();
        if signs.len() != blocks.len() {
            return Err(format!(
                "expected {} signs (one per distinct part), got {}",
                blocks.len(),
                signs.len()
            ));
        }
        if let Some(i) = blocks.iter().position(|b| b.value % 2 == 1) {
            if signs[i] != Sign::Plus {
                return Err("sign at the largest odd part must be +".into());
            }
        }
        Ok(())
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Sign of block `i` (0-based).
    pub fn block_sign(&self, i: usize) -> Sign {
        self.signs[i]
    }
}

/// All τ-symbols valid over λ; the free blocks run + before −, first
/// block varying slowest. |result| equals the SO_N component-group order
/// (and is 1 for ∅).
pub fn valid_sign_vectors(lambda: &Partition) -> Vec<SignVector> {
    let blocks = lambda.blocks();
    let forced = blocks.iter().position(|b| b.value % 2 == 1);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(blocks.len());
    fill_signs(&blocks, forced, 0, &mut current, &mut out);
    out
}

fn fill_signs(
    blocks: &[crate::partition::Block],
    forced: Option<usize>,
    i: usize,
    current: &mut Vec<Sign>,
    out: &mut Vec<SignVector>,
) {
    if i == blocks.len() {
        out.push(SignVector {
            signs: current.clone(),
        });
        return;
    }
    let choices: &[Sign] = if forced == Some(i) {
        &[Sign::Plus]
    } else {
        &[Sign::Plus, Sign::Minus]
    };
    for &s in choices {
        current.push(s);
        fill_signs(blocks, forced, i + 1, current, out);
        current.pop();
    }
}

/// An element of Ψ_N: an H-orbit together with a local system on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairLabel {
    orbit: OrbitLabel,
    tau: SignVector,
}

impl PairLabel {
    /// Panics when τ is not valid over the orbit's partition.
    pub fn new(orbit: OrbitLabel, tau: SignVector) -> Self {
        if let Err(e) = SignVector::check(orbit.lambda(), tau.signs()) {
            panic!("invalid pair label {};...: {}", orbit, e);
        }
        PairLabel { orbit, tau }
    }

    pub fn orbit(&self) -> &OrbitLabel {
        &self.orbit
    }

    pub fn lambda(&self) -> &Partition {
        self.orbit.lambda()
    }

    pub fn split(&self) -> Option<Split> {
        self.orbit.split()
    }

    pub fn tau(&self) -> &SignVector {
        &self.tau
    }

    /// Sign attached to the part value `v`, if λ has such a part.
    pub fn sign_of_value(&self, v: usize) -> Option<Sign> {
        let blocks = self.lambda().blocks();
        blocks
            .iter()
            .position(|b| b.value == v)
            .map(|i| self.tau.block_sign(i))
    }

    /// Row-indexed sign τ_i (1-based); rows past the last part read +,
    /// matching the zero-part convention.
    pub fn sign_of_row(&self, i: usize) -> Sign {
        assert!(i >= 1, "rows are 1-indexed");
        let blocks = self.lambda().blocks();
        let mut row = 0;
        for (b, block) in blocks.iter().enumerate() {
            row += block.mult;
            if i <= row {
                return self.tau.block_sign(b);
            }
        }
        Sign::Plus
    }
}

/// All H-orbit labels for the given N, partitions in reverse-lexicographic
/// order, a split pair ordered +, −.
pub fn enumerate_orbits(n_ambient: usize) -> Vec<OrbitLabel> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n_ambient) {
        if requires_split(&lambda) {
            out.push(OrbitLabel::new(lambda.clone(), Some(Split::Plus)));
            out.push(OrbitLabel::new(lambda, Some(Split::Minus)));
        } else {
            out.push(OrbitLabel::new(lambda, None));
        }
    }
    out
}

/// All of Ψ_N: every orbit label paired with every valid τ-symbol.
pub fn enumerate_pairs(n_ambient: usize) -> Vec<PairLabel> {
    let mut out = Vec::new();
    for orbit in enumerate_orbits(n_ambient) {
        for tau in valid_sign_vectors(orbit.lambda()) {
            out.push(PairLabel {
                orbit: orbit.clone(),
                tau,
            });
        }
    }
    out
}

impl fmt::Display for OrbitLabel {
    /// `[4,2,1]` or, with a split tag, `[2,2]+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if let Some(s) = self.split {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Display for PairLabel {
    /// `orbit ";" signs`, e.g. `[4,2,1];--+` or `[2,2]+;-` or `[]+;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.orbit, self.tau)
    }
}

/// Formats a pair label in the shared text grammar.
pub fn format_label(pair: &PairLabel) -> String {
    pair.to_string()
}

/// Parses a pair label: `orbit ";" signs` with `orbit = "[" parts? "]"
/// split?`. Reports syntax and semantic violations with byte positions.
pub fn parse_label(text: &str) -> Result<PairLabel, ParseLabelError> {
    let (pair, end) = parse_label_at(text, 0)?;
    if end != text.len() {
        return Err(ParseLabelError::new("trailing input after label", end));
    }
    Ok(pair)
}

/// Parses a pair label starting at `start`; returns the label and the
/// offset one past it. Signs end at the first non-sign character.
pub(crate) fn parse_label_at(
    text: &str,
    start: usize,
) -> Result<(PairLabel, usize), ParseLabelError> {
    let bytes = text.as_bytes();
    let (lambda, mut pos) = crate::partition::parse_partition_at(text, start)?;
    let split = match bytes.get(pos) {
        Some(&b'+') => {
            pos += 1;
            Some(Split::Plus)
        }
        Some(&b'-') => {
            pos += 1;
            Some(Split::Minus)
        }
        _ => None,
    };
    let split_pos = pos - 1;
    if split.is_some() && !requires_split(&lambda) {
        return Err(ParseLabelError::new(
            "split tag is only allowed on even partitions",
            split_pos,
        ));
    }
    if split.is_none() && requires_split(&lambda) {
        return Err(ParseLabelError::new(
            "even partition requires a split tag (+ or -)",
            pos,
        ));
    }
    if bytes.get(pos) != Some(&b';') {
        return Err(ParseLabelError::new("expected ';'", pos));
    }
    pos += 1;
    let signs_start = pos;
    let mut signs = Vec::new();
    while let Some(&c) = bytes.get(pos) {
        match c {
            b'+' => signs.push(Sign::Plus),
            b'-' => signs.push(Sign::Minus),
            _ => break,
        }
        pos += 1;
    }
    let blocks = lambda.blocks();
    if signs.len() != blocks.len() {
        return Err(ParseLabelError::new(
            format!(
                "expected {} signs (one per distinct part), got {}",
                blocks.len(),
                signs.len()
            ),
            signs_start,
        ));
    }
    if let Some(i) = blocks.iter().position(|b| b.value % 2 == 1) {
        if signs[i] != Sign::Plus {
            return Err(ParseLabelError::new(
                "sign at the largest odd part must be +",
                signs_start + i,
            ));
        }
    }
    Ok((
        PairLabel {
            orbit: OrbitLabel { lambda, split },
            tau: SignVector { signs },
        },
        pos,
    ))
}

impl FromStr for PairLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_label(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PairLabelJson {
    lambda: Vec<usize>,
    split: Option<String>,
    tau: Vec<i8>,
}

impl Serialize for PairLabel {
    /// `{"lambda":[4,2,1],"split":null,"tau":[-1,-1,1]}`
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PairLabelJson {
            lambda: self.lambda().parts().to_vec(),
            split: self.split().map(|s| s.as_char().to_string()),
            tau: self.tau.signs().iter().map(|s| s.as_i8()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PairLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PairLabelJson::deserialize(deserializer)?;
        if raw.lambda.windows(2).any(|w| w[0] < w[1]) || raw.lambda.contains(&0) {
            return Err(D::Error::custom("lambda must be weakly decreasing and positive"));
        }
        let lambda = Partition::new(raw.lambda);
        let split = match raw.split.as_deref() {
            None => None,
            Some("+") => Some(Split::Plus),
            Some("-") => Some(Split::Minus),
            Some(other) => return Err(D::Error::custom(format!("bad split tag {:?}", other))),
        };
        if split.is_some() != requires_split(&lambda) {
            return Err(D::Error::custom(
                "split tag must be present exactly for even partitions",
            ));
        }
        let mut signs = Vec::with_capacity(raw.tau.len());
        for v in raw.tau {
            signs.push(match v {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                other => return Err(D::Error::custom(format!("bad sign {}", other))),
            });
        }
        SignVector::check(&lambda, &signs).map_err(D::Error::custom)?;
        Ok(PairLabel {
            orbit: OrbitLabel { lambda, split },
            tau: SignVector { signs },
        })
    }
}
