//! Generating-function counts: the partition function, the two signed
//! partition counts `q_1`, `q_2`, the closed form for the number of
//! cuspidal pairs, and the global count identity over all series.
//!
//! All series arithmetic is exact over big integers, truncated at an
//! explicit degree.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cuspidal::enumerate_cuspidal;
use crate::orbit::enumerate_pairs;

/// Default truncation degree for the Euler products.
pub const DEFAULT_TRUNCATION: usize = 64;

/// A power series truncated at an explicit degree, with exact
/// nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigUint>,
}

impl PowerSeries {
    /// The constant series `1`, truncated at `degree`.
    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); degree + 1];
        coeffs[0] = BigUint::one();
        PowerSeries { coeffs }
    }

    /// Truncation degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero beyond the truncation degree.
    pub fn coeff(&self, n: usize) -> BigUint {
        self.coeffs.get(n).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Multiplies by `1 + c t^k` in place, truncating.
    fn mul_binomial(&mut self, k: usize, c: u32) {
        let d = self.degree();
        for n in (k..=d).rev() {
            let add = &self.coeffs[n - k] * c;
            self.coeffs[n] += add;
        }
    }

    /// Multiplies by `(1 - t^k)^{-1} = 1 + t^k + t^{2k} + ...` in place,
    /// truncating.
    fn mul_geometric(&mut self, k: usize) {
        let d = self.degree();
        for n in k..=d {
            let add = self.coeffs[n - k].clone();
            self.coeffs[n] += add;
        }
    }
}

/// `prod (1 - t^i)^{-1}` to the given degree: the partition function.
pub fn partition_series(degree: usize) -> PowerSeries {
    let mut s = PowerSeries::one(degree);
    for i in 1..=degree {
        s.mul_geometric(i);
    }
    s
}

/// `prod (1 + t^i)^2` to the given degree.
pub fn q1_series(degree: usize) -> PowerSeries {
    let mut s = PowerSeries::one(degree);
    for i in 1..=degree {
        s.mul_binomial(i, 1);
        s.mul_binomial(i, 1);
    }
    s
}

/// `prod (1 + t^{2i})` to the given degree.
pub fn q2_series(degree: usize) -> PowerSeries {
    let mut s = PowerSeries::one(degree);
    let mut k = 2;
    while k <= degree {
        s.mul_binomial(k, 1);
        k += 2;
    }
    s
}

fn coeff_at(series: fn(usize) -> PowerSeries, m: usize) -> u128 {
    let degree = m.max(DEFAULT_TRUNCATION);
    series(degree)
        .coeff(m)
        .to_u128()
        .expect("count exceeds 128 bits")
}

/// Number of partitions of `m`.
pub fn partition_count(m: usize) -> u128 {
    coeff_at(partition_series, m)
}

/// Coefficient `q_1(m)` of `prod (1 + t^i)^2`.
pub fn q1(m: usize) -> u128 {
    coeff_at(q1_series, m)
}

/// Coefficient `q_2(m)` of `prod (1 + t^{2i})`.
pub fn q2(m: usize) -> u128 {
    coeff_at(q2_series, m)
}

/// Closed form for the number of cuspidal pairs of ambient size
/// `n_ambient`: `q_1(N)/2` for odd `N`, `q_1(N)/2 + 3 q_2(N)/2` for even
/// `N`. The same expression also reproduces the degenerate sizes
/// (`N = 0` gives 2, `N = 1` gives 1).
pub fn cuspidal_count(n_ambient: usize) -> u128 {
    let numerator = if n_ambient % 2 == 0 {
        q1(n_ambient) + 3 * q2(n_ambient)
    } else {
        q1(n_ambient)
    };
    assert_eq!(numerator % 2, 0, "count formula must be integral");
    numerator / 2
}

/// One line of the counting table for the `count` frontend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountRow {
    pub n_ambient: usize,
    /// Directly enumerated `|Psi_N|`.
    pub pair_count: usize,
    /// Directly enumerated number of cuspidal pairs.
    pub cuspidal_direct: usize,
    /// Closed-form cuspidal count.
    pub cuspidal_formula: u128,
    /// Whether the formula and the global identity both agree with the
    /// enumerations.
    pub consistent: bool,
}

/// Direct pair counts split by underlying type: `(x', x'')` with `x'`
/// counting pairs whose type is not an even partition and `x''` those
/// whose type is even (each even type appears with both split tags).
pub fn pair_counts_by_parity(n_ambient: usize) -> (usize, usize) {
    let mut not_even = 0;
    let mut even = 0;
    for pair in enumerate_pairs(n_ambient) {
        if pair.lambda().is_even() {
            even += 1;
        } else {
            not_even += 1;
        }
    }
    (not_even, even)
}

/// Convolution `sum_{0 <= a <= N/2} p(a) f(N - 2a)`.
pub fn partition_convolution(f: fn(usize) -> u128, n_ambient: usize) -> u128 {
    (0..=n_ambient / 2)
        .map(|a| partition_count(a) * f(n_ambient - 2 * a))
        .sum()
}

/// Both sides of the weighted count of all signed types: doubled
/// non-even pairs plus half the even pairs against the `q_1`
/// convolution.
pub fn weighted_count_identity(n_ambient: usize) -> (u128, u128) {
    let (x_prime, x_double) = pair_counts_by_parity(n_ambient);
    assert_eq!(x_double % 2, 0, "split tags double every even type");
    let lhs = 2 * x_prime as u128 + (x_double / 2) as u128;
    (lhs, partition_convolution(q1, n_ambient))
}

/// Both sides of the even-type count: half the even pairs against the
/// `q_2` convolution.
pub fn even_count_identity(n_ambient: usize) -> (u128, u128) {
    let (_, x_double) = pair_counts_by_parity(n_ambient);
    assert_eq!(x_double % 2, 0, "split tags double every even type");
    ((x_double / 2) as u128, partition_convolution(q2, n_ambient))
}

/// Whether `|Psi_N|` equals the sum of `p(a) |Psi0_{N-2a}|` over all
/// series supports, both sides enumerated directly.
pub fn total_count_identity(n_ambient: usize) -> bool {
    let direct = enumerate_pairs(n_ambient).len() as u128;
    let by_series: u128 = (0..=n_ambient / 2)
        .map(|a| partition_count(a) * enumerate_cuspidal(n_ambient - 2 * a).len() as u128)
        .sum();
    direct == by_series
}

/// Builds the counting table row for one ambient size.
pub fn count_row(n_ambient: usize) -> CountRow {
    let pair_count = enumerate_pairs(n_ambient).len();
    let cuspidal_direct = enumerate_cuspidal(n_ambient).len();
    let cuspidal_formula = cuspidal_count(n_ambient);
    let consistent =
        cuspidal_formula == cuspidal_direct as u128 && total_count_identity(n_ambient);
    CountRow { n_ambient, pair_count, cuspidal_direct, cuspidal_formula, consistent }
}
