//! Restriction to the maximal Levi `M_H`, isomorphic to `GL_1 x SO_{N-2}`.
//!
//! Dropping the ambient size by two moves a pair label over `N` to pair
//! labels over `N - 2`. On orbits this is governed by two local moves on
//! the block form of the Jordan type: shortening one row by two boxes, or
//! shortening two equal rows by one box each. The geometry behind the
//! moves contributes a variety `Y_{u,v}` whose dimension reaches the
//! threshold `s` exactly in the separated one-row case, and in that case a
//! pairing set `D` of sign-vector pairs carries the multiplicities.
//!
//! The headline consistency check, [`branching_consistency`], confirms
//! that these multiplicities reproduce classical symmetric-group branching
//! (box removal) series by series.

use num_rational::Rational64;

use crate::cuspidal::{gamma, CuspidalDatum};
use crate::orbit::{PairLabel, Sign};
use crate::partition::Partition;

/// Which local move carries one Jordan type to the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcedureKind {
    /// One row `a_i` shrinks to `a_i - 2`, landing strictly below the
    /// next-shorter block (`a_{i+1} <= a_i - 2`).
    APrime,
    /// One row `a_i` shrinks to `a_i - 2`, crossing the next-shorter block
    /// (`a_{i+1} = a_i - 1`).
    ADoublePrime,
    /// Two rows `a_i` shrink to `a_i - 1` each; needs `m_i >= 2`.
    B,
}

/// A local move applied at one block of the larger Jordan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Procedure {
    pub kind: ProcedureKind,
    /// 1-based index into the block form of the larger partition.
    pub block: usize,
}

/// Dimension data of `Y_{u,v}` for one procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YDimension {
    /// Actual dimension of `Y_{u,v}`.
    pub dim_y: usize,
    /// Upper bound `s`; a half-integer, exceeded by no component.
    pub s: Rational64,
    /// Whether `dim_y` attains `s`, which happens exactly for `APrime`.
    pub full: bool,
}

fn with_rows_replaced(parts: &[usize], value: usize, count: usize, new_value: usize) -> Partition {
    let mut out: Vec<usize> = Vec::with_capacity(parts.len() + count);
    let mut dropped = 0;
    for &p in parts {
        if p == value && dropped < count {
            dropped += 1;
        } else {
            out.push(p);
        }
    }
    debug_assert_eq!(dropped, count);
    if new_value > 0 {
        out.extend(std::iter::repeat(new_value).take(count));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(out)
}

/// All local moves carrying `lambda` to `lambda_prime`.
///
/// At most one move exists for any pair of types; the sequence is empty
/// when the smaller type is not reachable. Panics unless the sizes differ
/// by exactly two.
pub fn procedures(lambda: &Partition, lambda_prime: &Partition) -> Vec<Procedure> {
    assert_eq!(
        lambda.size(),
        lambda_prime.size() + 2,
        "target must be two boxes smaller"
    );
    let blocks = lambda.blocks();
    let mut found = Vec::new();
    for (idx, b) in blocks.iter().enumerate() {
        let next_value = blocks.get(idx + 1).map_or(0, |nb| nb.value);
        if b.value >= 2
            && with_rows_replaced(lambda.parts(), b.value, 1, b.value - 2) == *lambda_prime
        {
            let kind = if next_value <= b.value - 2 {
                ProcedureKind::APrime
            } else {
                ProcedureKind::ADoublePrime
            };
            found.push(Procedure { kind, block: idx + 1 });
        }
        if b.mult >= 2
            && with_rows_replaced(lambda.parts(), b.value, 2, b.value - 1) == *lambda_prime
        {
            found.push(Procedure { kind: ProcedureKind::B, block: idx + 1 });
        }
    }
    found
}

/// Dimension of `Y_{u,v}` and the bound `s` for one procedure.
///
/// The dimension counts flags through the moved rows: the number of rows
/// at least as long as the moved one, less one (one-row moves) or two
/// (two-row moves). The bound is half the gap between the centralizer
/// dimensions `n(lambda)` and `n(lambda') + 1`, shifted by the half
/// contributed by the parabolic; it collapses to half the drop of the
/// `n`-invariant, and is attained exactly by the separated one-row move.
///
/// Panics unless `proc` is among `procedures(lambda, lambda_prime)`.
pub fn y_dimension(lambda: &Partition, lambda_prime: &Partition, proc: Procedure) -> YDimension {
    assert!(
        procedures(lambda, lambda_prime).contains(&proc),
        "procedure does not carry {lambda} to {lambda_prime}"
    );
    let mult_sum: usize = lambda.blocks()[..proc.block].iter().map(|b| b.mult).sum();
    let dim_y = match proc.kind {
        ProcedureKind::APrime | ProcedureKind::ADoublePrime => mult_sum - 1,
        ProcedureKind::B => mult_sum - 2,
    };
    let drop = lambda.n_invariant() as i64 - lambda_prime.n_invariant() as i64;
    let s = Rational64::new(drop, 2);
    YDimension { dim_y, s, full: Rational64::from_integer(dim_y as i64) == s }
}

/// Membership in the pairing set `D` attached to a separated one-row move.
///
/// The block of the moved row is `block` (1-based in the larger type).
/// Every untouched block keeps its sign: blocks are matched by part value,
/// which is unambiguous because distinct blocks have distinct values. The
/// moved row's sign must reappear at its landing value, with a vanished
/// row (`a_i = 2`) landing on the all-plus zero rows. The sign of the
/// smaller type at any remaining block of value `a_i` is unconstrained.
///
/// Panics unless the types are related by `APrime` at `block`.
pub fn d_member(pair: &PairLabel, pair_prime: &PairLabel, block: usize) -> bool {
    let lambda = pair.lambda();
    let lambda_prime = pair_prime.lambda();
    assert!(
        procedures(lambda, lambda_prime)
            .contains(&Procedure { kind: ProcedureKind::APrime, block }),
        "pairs are not related by the separated one-row move at block {block}"
    );
    let moved_value = lambda.blocks()[block - 1].value;
    for b in lambda.blocks() {
        if b.value == moved_value {
            continue;
        }
        let kept = pair_prime
            .sign_of_value(b.value)
            .expect("unmoved block survives in the smaller type");
        if pair.sign_of_value(b.value) != Some(kept) {
            return false;
        }
    }
    let moved_sign = pair.sign_of_value(moved_value).expect("moved block exists");
    let landing_sign = if moved_value == 2 {
        Sign::Plus
    } else {
        pair_prime
            .sign_of_value(moved_value - 2)
            .expect("landing block exists in the smaller type")
    };
    moved_sign == landing_sign
}

/// Multiplicity of `pair_prime` in the sign-carrying part of the
/// restriction of `pair`; always `0` or `1`.
///
/// Nonzero exactly when a separated one-row move relates the types, split
/// tags agree whenever both types carry one, and the signs pair up in `D`.
pub fn epsilon_multiplicity(pair: &PairLabel, pair_prime: &PairLabel) -> usize {
    let lambda = pair.lambda();
    let lambda_prime = pair_prime.lambda();
    if lambda.size() != lambda_prime.size() + 2 {
        return 0;
    }
    let a_prime = procedures(lambda, lambda_prime)
        .into_iter()
        .find(|p| p.kind == ProcedureKind::APrime);
    let Some(proc) = a_prime else { return 0 };
    if let (Some(t), Some(t_prime)) = (pair.split(), pair_prime.split()) {
        if t != t_prime {
            return 0;
        }
    }
    usize::from(d_member(pair, pair_prime, proc.block))
}

/// Checks one instance of the branching rule inside the series of `c`:
/// the multiplicity computed through sign combinatorics must equal the
/// box-removal multiplicity of symmetric-group restriction.
///
/// Panics when the two sides disagree, and otherwise returns `true`.
/// `mu` must have size `(n_ambient - N0) / 2` and `mu_prime` one box less.
pub fn branching_consistency(
    c: &CuspidalDatum,
    mu: &Partition,
    mu_prime: &Partition,
    n_ambient: usize,
) -> bool {
    let a = c.fiber_size_parameter(n_ambient);
    assert_eq!(mu.size(), a, "mu must index the fiber over the series");
    assert_eq!(mu_prime.size() + 1, a, "mu_prime must be one box smaller");
    let pair = gamma(c, mu).expect("fiber partitions always induce");
    let pair_prime = gamma(c, mu_prime).expect("fiber partitions always induce");
    let by_boxes = usize::from(mu.box_removals().contains(mu_prime));
    let by_signs = epsilon_multiplicity(&pair, &pair_prime);
    assert_eq!(
        by_boxes, by_signs,
        "branching mismatch for {c} at mu={mu}, mu'={mu_prime}"
    );
    by_boxes == by_signs
}
