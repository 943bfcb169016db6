//! The generalized Springer correspondence as an explicit table.
//!
//! For each cuspidal series `c` with support size `N0` inside ambient size
//! `N`, the fiber over `c` is indexed by partitions of `a = (N - N0) / 2`,
//! which label irreducible representations of the symmetric group `S_a`.
//! The map from `(c, mu)` to a pair label is [`gamma`]; a
//! [`CorrespondenceRow`] records one such triple, and
//! [`correspondence_table`] lists the whole of `Psi_N` this way.
//!
//! Tables for `N = 2..=7` are checked against embedded fixture files by
//! [`verify_appendix`], which reports any deviating rows.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cuspidal::{enumerate_series, gamma, CuspidalDatum};
use crate::orbit::{OrbitLabel, PairLabel};
use crate::partition::{enumerate_partitions, Partition};

/// One row of the correspondence table: the pair `gamma(c, mu)` together
/// with the series `c` and fiber coordinate `mu` it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceRow {
    /// Element of `Psi_N`.
    pub pair: PairLabel,
    /// Cuspidal series the pair belongs to.
    pub series: CuspidalDatum,
    /// Partition of `(N - N0) / 2` indexing the pair within its series.
    pub mu: Partition,
}

impl CorrespondenceRow {
    /// Tab-separated `pair series mu` line, the on-disk fixture format.
    pub fn tsv_line(&self) -> String {
        format!("{}\t{}\t{}", self.pair, self.series, self.mu)
    }
}

impl fmt::Display for CorrespondenceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tsv_line())
    }
}

impl Serialize for CorrespondenceRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CorrespondenceRow", 3)?;
        s.serialize_field("pair", &self.pair)?;
        s.serialize_field("series", &self.series)?;
        s.serialize_field("mu", self.mu.parts())?;
        s.end()
    }
}

/// Full correspondence table for ambient size `n_ambient`.
///
/// Rows are grouped by series, in [`enumerate_series`] order (support size
/// ascending, so the cuspidal pairs themselves come last); within a series
/// the fiber partitions run in [`enumerate_partitions`] order.
pub fn correspondence_table(n_ambient: usize) -> Vec<CorrespondenceRow> {
    let mut rows = Vec::new();
    for series in enumerate_series(n_ambient) {
        let a = series.fiber_size_parameter(n_ambient);
        for mu in enumerate_partitions(a) {
            let pair = gamma(&series, &mu)
                .expect("fiber partitions always induce to valid pairs");
            rows.push(CorrespondenceRow { pair, series: series.clone(), mu });
        }
    }
    rows
}

/// Orbit underlying `gamma(c, mu)`, computed directly from the row sums
/// `nu_i + 2 mu_i` without touching signs.
///
/// Panics if `mu` does not stay weakly decreasing after the addition, which
/// cannot happen when `nu` is a genuine partition.
pub fn induced_orbit(series: &CuspidalDatum, mu: &Partition) -> OrbitLabel {
    let lambda = series
        .nu()
        .add_twice(mu)
        .expect("row sums of two partitions stay weakly decreasing");
    OrbitLabel::new(lambda, series.split())
}

/// Pair attached to the trivial representation of `S_a` inside the series:
/// the fiber coordinate is the one-row partition `(a)`.
pub fn unit_rep_orbit(series: &CuspidalDatum, n_ambient: usize) -> PairLabel {
    let a = series.fiber_size_parameter(n_ambient);
    let mu = if a == 0 { Partition::empty() } else { Partition::new(vec![a]) };
    gamma(series, &mu).expect("one-row fibers always induce")
}

/// Pair attached to the sign representation of `S_a` inside the series:
/// the fiber coordinate is the one-column partition `(1^a)`.
pub fn sign_rep_orbit(series: &CuspidalDatum, n_ambient: usize) -> PairLabel {
    let a = series.fiber_size_parameter(n_ambient);
    let mu = Partition::new(vec![1; a]);
    gamma(series, &mu).expect("one-column fibers always induce")
}

/// Outcome of checking a computed table against its embedded fixture.
#[derive(Debug, Clone)]
pub struct AppendixCheck {
    /// Ambient size the check ran for.
    pub n_ambient: usize,
    /// Number of rows in the fixture.
    pub expected: usize,
    /// Number of rows computed.
    pub computed: usize,
    /// One line per deviation; empty when the table reproduces the fixture.
    pub diffs: Vec<String>,
}

impl AppendixCheck {
    /// True when the computed table matches the fixture row for row.
    pub fn is_clean(&self) -> bool {
        self.diffs.is_empty()
    }
}

impl fmt::Display for AppendixCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            write!(f, "N={}: {} rows, all match", self.n_ambient, self.expected)
        } else {
            writeln!(
                f,
                "N={}: {} fixture rows, {} computed, {} diffs",
                self.n_ambient,
                self.expected,
                self.computed,
                self.diffs.len()
            )?;
            for line in &self.diffs {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

fn appendix_fixture(n_ambient: usize) -> &'static str {
    match n_ambient {
        2 => include_str!("appendix/n2.tsv"),
        3 => include_str!("appendix/n3.tsv"),
        4 => include_str!("appendix/n4.tsv"),
        5 => include_str!("appendix/n5.tsv"),
        6 => include_str!("appendix/n6.tsv"),
        7 => include_str!("appendix/n7.tsv"),
        _ => panic!("appendix fixtures cover ambient sizes 2 through 7"),
    }
}

/// Rows of the embedded fixture table for `n_ambient` in `2..=7`.
///
/// Panics on other sizes, and on a malformed fixture (which would be a
/// packaging defect, not a runtime condition).
pub fn appendix_rows(n_ambient: usize) -> Vec<CorrespondenceRow> {
    let text = appendix_fixture(n_ambient);
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let mut fields = line.split('\t');
            let mut next = || {
                fields
                    .next()
                    .unwrap_or_else(|| panic!("fixture N={n_ambient} row {}: short line", i + 1))
            };
            let pair: PairLabel = next()
                .parse()
                .unwrap_or_else(|e| panic!("fixture N={n_ambient} row {}: {e}", i + 1));
            let series: CuspidalDatum = next()
                .parse()
                .unwrap_or_else(|e| panic!("fixture N={n_ambient} row {}: {e}", i + 1));
            let mu: Partition = next()
                .parse()
                .unwrap_or_else(|e| panic!("fixture N={n_ambient} row {}: {e}", i + 1));
            assert!(
                fields.next().is_none(),
                "fixture N={n_ambient} row {}: trailing field",
                i + 1
            );
            CorrespondenceRow { pair, series, mu }
        })
        .collect()
}

/// Recompute the table for `n_ambient` in `2..=7` and diff it against the
/// embedded fixture. Order matters: the fixture is stored in table order.
pub fn verify_appendix(n_ambient: usize) -> AppendixCheck {
    let expected = appendix_rows(n_ambient);
    let computed = correspondence_table(n_ambient);
    let mut diffs = Vec::new();
    let common = expected.len().min(computed.len());
    for i in 0..common {
        if expected[i] != computed[i] {
            diffs.push(format!(
                "row {}: computed `{}`, fixture `{}`",
                i + 1,
                computed[i].tsv_line(),
                expected[i].tsv_line()
            ));
        }
    }
    for (i, row) in expected.iter().enumerate().skip(common) {
        diffs.push(format!("row {}: missing from computed table: `{}`", i + 1, row.tsv_line()));
    }
    for (i, row) in computed.iter().enumerate().skip(common) {
        diffs.push(format!("row {}: not in fixture: `{}`", i + 1, row.tsv_line()));
    }
    AppendixCheck {
        n_ambient,
        expected: expected.len(),
        computed: computed.len(),
        diffs,
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::cuspidal::enumerate_cuspidal;
    use crate::orbit::{enumerate_pairs, GroupContext};
    use crate::partition::dominance_leq;

    fn pair(text: &str) -> PairLabel {
        text.parse().unwrap()
    }

    fn series(text: &str) -> CuspidalDatum {
        text.parse().unwrap()
    }

    #[test]
    fn small_tables_have_expected_shape() {
        assert_eq!(correspondence_table(0).len(), 2);
        assert_eq!(correspondence_table(1).len(), 1);

        let table = correspondence_table(3);
        assert_eq!(table.len(), 4);
        assert_eq!(table[0].pair, pair("[3];+"));
        assert_eq!(table[0].series, series("N0=1 nu=[1] sigma=+"));
        assert_eq!(table[0].mu, Partition::new(vec![1]));
        assert!(table[1..].iter().all(|row| row.mu.is_empty()));
    }

    #[test]
    fn specific_rows_match_known_images() {
        let table = correspondence_table(7);
        let row = table
            .iter()
            .find(|r| r.pair == pair("[5,2];++"))
            .unwrap();
        assert_eq!(row.series, series("N0=1 nu=[1] sigma=+"));
        assert_eq!(row.mu, Partition::new(vec![2, 1]));

        let table = correspondence_table(4);
        let row = table
            .iter()
            .find(|r| r.pair == pair("[4]-;-"))
            .unwrap();
        assert_eq!(row.series, series("N0=2 nu=[2]- sigma=-"));
        assert_eq!(row.mu, Partition::new(vec![1]));
    }

    #[test]
    fn appendix_fixtures_all_verify() {
        for n in 2..=7 {
            let check = verify_appendix(n);
            assert!(check.is_clean(), "N={n}:\n{check}");
        }
    }

    #[test]
    fn fixture_row_counts_match_appendix() {
        let counts: Vec<usize> = (2..=7).map(|n| appendix_rows(n).len()).collect();
        assert_eq!(counts, [5, 4, 13, 12, 32, 32]);
    }

    #[test]
    fn table_is_a_bijection_onto_all_pairs() {
        for n in 0..=8 {
            let table = correspondence_table(n);
            let seen: BTreeSet<String> =
                table.iter().map(|row| row.pair.to_string()).collect();
            assert_eq!(seen.len(), table.len(), "collision at N={n}");
            let all: BTreeSet<String> =
                enumerate_pairs(n).iter().map(|p| p.to_string()).collect();
            assert_eq!(seen, all, "not onto at N={n}");
        }
    }

    #[test]
    fn fiber_sizes_sum_by_series() {
        for n in 0..=8 {
            let total: usize = enumerate_series(n)
                .iter()
                .map(|c| {
                    let a = c.fiber_size_parameter(n);
                    enumerate_partitions(a).len()
                })
                .sum();
            assert_eq!(total, correspondence_table(n).len());
        }
        let cuspidal_counts: Vec<usize> =
            (0..=8).map(|n| enumerate_cuspidal(n).len()).collect();
        for n in 0..=8usize {
            let by_formula: usize = (0..=n / 2)
                .map(|a| enumerate_partitions(a).len() * cuspidal_counts[n - 2 * a])
                .sum();
            assert_eq!(by_formula, correspondence_table(n).len(), "N={n}");
        }
    }

    #[test]
    fn hook_dimensions_square_to_fiber_group_order() {
        for n in 0..=8 {
            for c in enumerate_series(n) {
                let a = c.fiber_size_parameter(n);
                let factorial: u128 = (1..=a as u128).product();
                let sum: u128 = enumerate_partitions(a)
                    .iter()
                    .map(|mu| {
                        let d = mu.hook_dimension();
                        d * d
                    })
                    .sum();
                assert_eq!(sum, factorial, "N={n} series {c}");
            }
        }
    }

    #[test]
    fn induced_orbit_agrees_with_gamma() {
        for n in 0..=8 {
            for row in correspondence_table(n) {
                assert_eq!(induced_orbit(&row.series, &row.mu), *row.pair.orbit());
            }
        }
    }

    #[test]
    fn unit_rep_lands_on_top_orbit_of_series() {
        for n in 0..=10 {
            let ctx = GroupContext::new(n);
            for c in enumerate_series(n) {
                let top = unit_rep_orbit(&c, n);
                assert_eq!(
                    top.orbit().dimension(),
                    ctx.dim_h() - c.nu().n_invariant(),
                    "N={n} series {c}"
                );
                for i in 1..=c.nu().len() {
                    assert_eq!(
                        top.sign_of_row(i),
                        c.pair().sign_of_row(i),
                        "N={n} series {c} row {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_and_sign_reps_for_one_series() {
        let c = series("N0=1 nu=[1] sigma=+");
        assert_eq!(unit_rep_orbit(&c, 7), pair("[7];+"));
        assert_eq!(sign_rep_orbit(&c, 7), pair("[3,2,2];++"));
        let c = series("N0=0 nu=[]- sigma=");
        assert_eq!(unit_rep_orbit(&c, 6), pair("[6]-;+"));
        assert_eq!(sign_rep_orbit(&c, 6), pair("[2,2,2]-;+"));
    }

    #[test]
    fn n_invariant_splits_over_series_and_fiber() {
        for n in 0..=10 {
            for row in correspondence_table(n) {
                let lambda = row.pair.orbit().lambda();
                assert_eq!(
                    lambda.n_invariant(),
                    row.series.nu().n_invariant() + 2 * row.mu.n_invariant()
                );
            }
        }
    }

    #[test]
    fn dominance_on_fibers_reverses_orbit_closure_order() {
        for n in 0..=10 {
            for c in enumerate_series(n) {
                let a = c.fiber_size_parameter(n);
                let fibers = enumerate_partitions(a);
                for mu1 in &fibers {
                    for mu2 in &fibers {
                        if dominance_leq(mu1, mu2) {
                            let o1 = induced_orbit(&c, mu1);
                            let o2 = induced_orbit(&c, mu2);
                            assert!(
                                o1.lambda().n_invariant() >= o2.lambda().n_invariant()
                            );
                            assert!(o1.dimension() <= o2.dimension());
                        }
                    }
                }
            }
        }
    }
}
