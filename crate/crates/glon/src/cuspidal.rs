//! Cuspidality, cuspidal series data, the map Γ and cuspidal support.
//!
//! A pair (λ, τ) is cuspidal when consecutive row gaps are at most 2 and
//! every gap of exactly 2 flips the sign (rows past the last part read
//! value 0 with sign +). Every pair has a unique cuspidal support: strip
//! 2 from a row wherever the cuspidality test fails until it holds, then
//! read off μ row-wise. Γ is the inverse map μ ↦ (ν + 2μ, σ).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::orbit::{
    enumerate_pairs, requires_split, OrbitLabel, PairLabel, Sign, SignVector, Split,
};
use crate::partition::{ParseLabelError, Partition};

/// True iff (λ, τ) supports no proper parabolic restriction:
/// row gaps λ_i − λ_{i+1} ≤ 2 everywhere, with τ_i ≠ τ_{i+1} whenever the
/// gap is exactly 2 (zero-padded; the sign of a zero row is +).
pub fn is_cuspidal(pair: &PairLabel) -> bool {
    let lambda = pair.lambda();
    for i in 1..=lambda.len() {
        let gap = lambda.part(i) - lambda.part(i + 1);
        if gap > 2 {
            return false;
        }
        if gap == 2 && pair.sign_of_row(i) == pair.sign_of_row(i + 1) {
            return false;
        }
    }
    true
}

/// The cuspidal subset Ψ^{(0)}_N of Ψ_N, in enumeration order.
pub fn enumerate_cuspidal(n_ambient: usize) -> Vec<PairLabel> {
    enumerate_pairs(n_ambient)
        .into_iter()
        .filter(is_cuspidal)
        .collect()
}

/// A series datum: a cuspidal pair (ν, σ) over N₀, the support of every
/// pair in its series. The fiber over it inside Ψ_N is indexed by
/// partitions of a = (N − N₀)/2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuspidalDatum {
    pair: PairLabel,
}

impl CuspidalDatum {
    /// Panics unless (ν, σ) is cuspidal.
    pub fn new(pair: PairLabel) -> Self {
        assert!(is_cuspidal(&pair), "series datum must be cuspidal: {}", pair);
        CuspidalDatum { pair }
    }

    /// N₀, the size of ν.
    pub fn n0(&self) -> usize {
        self.pair.lambda().size()
    }

    /// The underlying cuspidal pair (ν, σ).
    pub fn pair(&self) -> &PairLabel {
        &self.pair
    }

    pub fn nu(&self) -> &Partition {
        self.pair.lambda()
    }

    pub fn sigma(&self) -> &SignVector {
        self.pair.tau()
    }

    pub fn split(&self) -> Option<Split> {
        self.pair.split()
    }

    /// a = (N − N₀)/2 for an ambient N. Panics when N − N₀ is odd or
    /// negative.
    pub fn fiber_size_parameter(&self, n_ambient: usize) -> usize {
        let n0 = self.n0();
        assert!(
            n_ambient >= n0 && (n_ambient - n0) % 2 == 0,
            "N = {} is not reachable from N0 = {}",
            n_ambient,
            n0
        );
        (n_ambient - n0) / 2
    }
}

/// All series data C_N: every cuspidal pair over N₀ = N mod 2, …, N−2, N.
/// Ordered by ascending N₀, so the series with the largest symmetric
/// group come first and the cuspidal pairs of Ψ_N itself come last;
/// cuspidal enumeration order within one N₀.
pub fn enumerate_series(n_ambient: usize) -> Vec<CuspidalDatum> {
    let mut out = Vec::new();
    let mut n0 = n_ambient % 2;
    while n0 <= n_ambient {
        for pair in enumerate_cuspidal(n0) {
            out.push(CuspidalDatum { pair });
        }
        n0 += 2;
    }
    out
}

/// Why a candidate μ fails to label an element of a series.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("ν + 2μ is not weakly decreasing")]
    NonMonotone,
    #[error("sign re-indexing conflict: {0}")]
    SignConflict(String),
}

/// Γ_ξ(μ): the element (ν + 2μ, σ) of the series of `c`, with σ carried
/// row-wise onto the new partition and the split tag copied verbatim.
///
/// Bijectivity of the correspondence says this never fails for genuine
/// partitions μ; the error channel reports a violation instead of
/// normalizing one away.
pub fn gamma(c: &CuspidalDatum, mu: &Partition) -> Result<PairLabel, GammaError> {
    let nu = c.nu();
    let lambda = nu.add_twice(mu).ok_or(GammaError::NonMonotone)?;
    let mut block_signs = Vec::new();
    let mut row = 1;
    for block in lambda.blocks() {
        let sign = c.pair.sign_of_row(row);
        for offset in 1..block.mult {
            if c.pair.sign_of_row(row + offset) != sign {
                return Err(GammaError::SignConflict(format!(
                    "rows {} and {} merge into one block of {} with opposite signs",
                    row,
                    row + offset,
                    lambda
                )));
            }
        }
        block_signs.push(sign);
        row += block.mult;
    }
    let split = c.split();
    debug_assert_eq!(split.is_some(), requires_split(&lambda));
    Ok(PairLabel::new(
        OrbitLabel::new(lambda.clone(), split),
        SignVector::new(&lambda, block_signs),
    ))
}

/// Rows-with-signs working form used while stripping.
#[derive(Clone)]
struct RowForm {
    rows: Vec<usize>,
    signs: Vec<Sign>,
    split: Option<Split>,
}

impl RowForm {
    fn of(pair: &PairLabel) -> Self {
        let rows = pair.lambda().parts().to_vec();
        let signs = (1..=rows.len()).map(|i| pair.sign_of_row(i)).collect();
        RowForm {
            rows,
            signs,
            split: pair.split(),
        }
    }

    fn row(&self, i: usize) -> usize {
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    fn sign(&self, i: usize) -> Sign {
        self.signs.get(i - 1).copied().unwrap_or(Sign::Plus)
    }

    /// 1-based indices of rows where a strip is admissible: the last row
    /// of each block whose gap to the next row is > 2, or exactly 2 with
    /// equal signs.
    fn admissible_rows(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 1..=self.rows.len() {
            let here = self.row(i);
            let next = self.row(i + 1);
            if here == next {
                continue; // not the last row of its block
            }
            let gap = here - next;
            if gap > 2 || (gap == 2 && self.sign(i) == self.sign(i + 1)) {
                out.push(i);
            }
        }
        out
    }

    fn strip(&mut self, i: usize) {
        self.rows[i - 1] -= 2;
        if self.rows[i - 1] == 0 {
            // only the final row can reach zero; drop it
            debug_assert_eq!(i, self.rows.len());
            self.rows.pop();
            self.signs.pop();
        }
    }

    fn to_pair(&self) -> PairLabel {
        let lambda = Partition::new(self.rows.clone());
        let mut block_signs = Vec::new();
        let mut row = 0;
        for block in lambda.blocks() {
            let sign = self.signs[row];
            debug_assert!(self.signs[row..row + block.mult].iter().all(|&s| s == sign));
            block_signs.push(sign);
            row += block.mult;
        }
        PairLabel::new(
            OrbitLabel::new(lambda.clone(), self.split),
            SignVector::new(&lambda, block_signs),
        )
    }
}

/// The cuspidal support of a pair: strips 2 from the first admissible
/// row until the pair is cuspidal, then reads μ off as (λ_i − ν_i)/2.
/// The result satisfies gamma(c, μ) = p.
pub fn cuspidal_support(pair: &PairLabel) -> (CuspidalDatum, Partition) {
    let mut form = RowForm::of(pair);
    loop {
        let strips = form.admissible_rows();
        match strips.first() {
            None => break,
            Some(&i) => form.strip(i),
        }
    }
    let support = form.to_pair();
    let mu = read_mu(pair.lambda(), support.lambda());
    (CuspidalDatum::new(support), mu)
}

fn read_mu(lambda: &Partition, nu: &Partition) -> Partition {
    let mut mu = Vec::new();
    for i in 1..=lambda.len() {
        let diff = lambda.part(i) - nu.part(i);
        assert!(diff % 2 == 0, "support differs from λ by an odd amount");
        mu.push(diff / 2);
    }
    Partition::new(mu)
}

/// Every outcome of the stripping process over every admissible order.
/// A singleton result certifies order-independence for this pair.
pub fn cuspidal_support_all_orders(pair: &PairLabel) -> Vec<(CuspidalDatum, Partition)> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![RowForm::of(pair)];
    let mut outcomes = Vec::new();
    while let Some(form) = stack.pop() {
        let strips = form.admissible_rows();
        if strips.is_empty() {
            let support = form.to_pair();
            let key = support.to_string();
            if seen.insert(key) {
                let mu = read_mu(pair.lambda(), support.lambda());
                outcomes.push((CuspidalDatum::new(support), mu));
            }
            continue;
        }
        for i in strips {
            let mut next = form.clone();
            next.strip(i);
            stack.push(next);
        }
    }
    outcomes
}

/// The partition of Ψ_N into series fibers, keyed in enumerate_series
/// order. Every pair lands in exactly one fiber.
pub fn series_partition(n_ambient: usize) -> Vec<(CuspidalDatum, Vec<PairLabel>)> {
    let series = enumerate_series(n_ambient);
    let mut fibers: Vec<(CuspidalDatum, Vec<PairLabel>)> =
        series.into_iter().map(|c| (c, Vec::new())).collect();
    for pair in enumerate_pairs(n_ambient) {
        let (c, _mu) = cuspidal_support(&pair);
        let slot = fibers
            .iter_mut()
            .find(|(datum, _)| *datum == c)
            .unwrap_or_else(|| panic!("support {} missing from series list", c.pair()));
        slot.1.push(pair);
    }
    fibers
}

impl fmt::Display for CuspidalDatum {
    /// `N0=<int> nu=<orbit> sigma=<signs>`, e.g. `N0=5 nu=[2,2,1] sigma=-+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N0={} nu={} sigma={}",
            self.n0(),
            self.pair.orbit(),
            self.pair.tau()
        )
    }
}

impl FromStr for CuspidalDatum {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rest = s
            .strip_prefix("N0=")
            .ok_or_else(|| ParseLabelError::new("expected 'N0='", 0))?;
        let digits = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(ParseLabelError::new("expected digits after 'N0='", 3));
        }
        let n0: usize = rest[..digits]
            .parse()
            .map_err(|_| ParseLabelError::new("N0 out of range", 3))?;
        let mut pos = 3 + digits;
        let tail = &s[pos..];
        let tail = tail
            .strip_prefix(" nu=")
            .ok_or_else(|| ParseLabelError::new("expected ' nu='", pos))?;
        pos += 4;
        // reuse the pair grammar by rewriting `<orbit> sigma=<signs>` as
        // `<orbit>;<signs>`
        let sigma_at = tail
            .find(" sigma=")
            .ok_or_else(|| ParseLabelError::new("expected ' sigma='", s.len()))?;
        let rewritten = format!("{};{}", &tail[..sigma_at], &tail[sigma_at + 7..]);
        let pair = crate::orbit::parse_label(&rewritten).map_err(|e| {
            // positions in the rewritten text map back only approximately
            ParseLabelError::new(e.message, pos + e.position.min(sigma_at))
        })?;
        if pair.lambda().size() != n0 {
            return Err(ParseLabelError::new(
                format!("N0={} but nu has size {}", n0, pair.lambda().size()),
                3,
            ));
        }
        if !is_cuspidal(&pair) {
            return Err(ParseLabelError::new("(nu, sigma) is not cuspidal", pos));
        }
        Ok(CuspidalDatum { pair })
    }
}

#[derive(Serialize, Deserialize)]
struct OrbitJson {
    lambda: Vec<usize>,
    split: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    n0: usize,
    nu: OrbitJson,
    sigma: Vec<i8>,
}

impl Serialize for CuspidalDatum {
    /// `{"n0":5,"nu":{"lambda":[2,2,1],"split":null},"sigma":[-1,1]}`
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            n0: self.n0(),
            nu: OrbitJson {
                lambda: self.nu().parts().to_vec(),
                split: self.split().map(|s| s.as_char().to_string()),
            },
            sigma: self.sigma().signs().iter().map(|s| s.as_i8()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CuspidalDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        let mut tau = Vec::new();
        for v in raw.sigma {
            tau.push(v);
        }
        let pair_json = serde_json::json!({
            "lambda": raw.nu.lambda,
            "split": raw.nu.split,
            "tau": tau,
        });
        let pair: PairLabel =
            serde_json::from_value(pair_json).map_err(|e| D::Error::custom(e.to_string()))?;
        if pair.lambda().size() != raw.n0 {
            return Err(D::Error::custom("n0 does not match the size of nu"));
        }
        if !is_cuspidal(&pair) {
            return Err(D::Error::custom("(nu, sigma) is not cuspidal"));
        }
        Ok(CuspidalDatum { pair })
    }
}
