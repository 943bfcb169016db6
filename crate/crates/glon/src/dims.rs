//! Closed-form dimension arithmetic for theta-stable Levi data, together
//! with the signed-permutation counts controlling parabolic dimension
//! bounds.
//!
//! Everything half-integral is an exact rational; nothing here floats.

use num_rational::Rational64;
use rand::Rng;

use crate::orbit::GroupContext;

/// Unipotent-radical dimension `nu_H` of the theta-fixed Borel for
/// ambient size `n_ambient`.
pub fn nu_h(n_ambient: usize) -> usize {
    GroupContext::new(n_ambient).nu_h()
}

/// Shape of a theta-stable Levi `(GL_1)^a x GL_{N0}` inside `GL_N`:
/// `a` single boxes split off an inner ambient size `N0` of the same
/// parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeviShape {
    n_ambient: usize,
    n0: usize,
}

impl LeviShape {
    /// Builds a shape; `n0` must not exceed `n_ambient` and must share
    /// its parity.
    pub fn new(n_ambient: usize, n0: usize) -> Self {
        assert!(n0 <= n_ambient, "inner size exceeds ambient size");
        assert_eq!((n_ambient - n0) % 2, 0, "sizes must share parity");
        LeviShape { n_ambient, n0 }
    }

    /// Ambient size `N`.
    pub fn ambient(&self) -> usize {
        self.n_ambient
    }

    /// Inner ambient size `N0`.
    pub fn inner(&self) -> usize {
        self.n0
    }

    /// Number of split-off boxes `a = (N - N0) / 2`.
    pub fn a(&self) -> usize {
        (self.n_ambient - self.n0) / 2
    }

    /// Parabolic defect `Delta_P = a`.
    pub fn delta_p(&self) -> usize {
        self.a()
    }

    /// `nu_H` of the inner group; the `(GL_1)^a` factor contributes no
    /// unipotent directions.
    pub fn nu_levi(&self) -> usize {
        nu_h(self.n0)
    }
}

/// Dimension of the unipotent part of the attached variety `X`:
/// `2 nu_H - 2 nu_{L_H} + dim O_L + Delta_P`.
pub fn dim_x_uni(shape: LeviShape, dim_o_l: usize) -> usize {
    2 * nu_h(shape.ambient()) - 2 * shape.nu_levi() + dim_o_l + shape.delta_p()
}

/// Defect `d_O = (nu_H - dim O / 2) - (nu_{L_H} - dim O_L / 2) + Delta_P / 2`
/// of an orbit against the Levi orbit beneath it; zero exactly on the
/// orbits the induced complex lives on.
pub fn d_o(shape: LeviShape, dim_o: usize, dim_o_l: usize) -> Rational64 {
    let two = Rational64::from_integer(2);
    let ambient = Rational64::from_integer(nu_h(shape.ambient()) as i64)
        - Rational64::from_integer(dim_o as i64) / two;
    let levi = Rational64::from_integer(shape.nu_levi() as i64)
        - Rational64::from_integer(dim_o_l as i64) / two;
    ambient - levi + Rational64::from_integer(shape.delta_p() as i64) / two
}

/// The half-gap pattern `(x - y)/2 + Delta_P/2` shared by the bound `s`
/// (from centralizer dimensions) and the defect `delta` (from orbit
/// dimensions).
pub fn half_gap(x: i64, y: i64, delta_p: usize) -> Rational64 {
    Rational64::new(x - y, 2) + Rational64::new(delta_p as i64, 2)
}

/// Dimension bound data for the variety `Y_{u,v}` over a Levi shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SDelta {
    /// `s = (dim Z_H(u) - dim Z_{L_H}(v))/2 + Delta_P/2`.
    pub s: Rational64,
    /// `delta = (dim O - dim O_L)/2 + Delta_P/2`.
    pub delta: Rational64,
}

/// Computes `s` and `delta` from the centralizer dimensions, recovering
/// the orbit dimensions through the group dimensions of the shape. The
/// centralizer of the Levi point is taken inside the whole Levi, so it
/// includes the `a`-dimensional torus factor.
pub fn s_and_delta(shape: LeviShape, dim_z_h_u: usize, dim_z_l_v: usize) -> SDelta {
    let delta_p = shape.delta_p();
    let dim_h = GroupContext::new(shape.ambient()).dim_h();
    let dim_l_h = shape.a() + GroupContext::new(shape.inner()).dim_h();
    let dim_o = dim_h as i64 - dim_z_h_u as i64;
    let dim_o_l = dim_l_h as i64 - dim_z_l_v as i64;
    SDelta {
        s: half_gap(dim_z_h_u as i64, dim_z_l_v as i64, delta_p),
        delta: half_gap(dim_o, dim_o_l, delta_p),
    }
}

/// Dimension `d_0 = 2 nu_H - nu_{L_H} - nu_{L'_H} + (dim O_L + dim O_{L'})/2
/// + (Delta_P + Delta_{P'})/2` of the double variety over two Levi data.
#[allow(clippy::too_many_arguments)]
pub fn d0(
    nu_h_ambient: usize,
    nu_l: usize,
    nu_l_prime: usize,
    dim_o_l: usize,
    dim_o_l_prime: usize,
    delta_p: usize,
    delta_p_prime: usize,
) -> Rational64 {
    Rational64::from_integer(2 * nu_h_ambient as i64 - nu_l as i64 - nu_l_prime as i64)
        + Rational64::new(dim_o_l as i64 + dim_o_l_prime as i64, 2)
        + Rational64::new(delta_p as i64 + delta_p_prime as i64, 2)
}

/// A signed permutation of `{1..n}`: a permutation together with a sign
/// on each letter, the Weyl group of type `B_n`/`C_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    /// Builds a signed permutation from the images of `1..=n`; entry `j`
    /// holds `w(j)`, a nonzero integer whose absolute values form a
    /// permutation.
    pub fn new(images: Vec<i64>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let abs = v.unsigned_abs() as usize;
            assert!(v != 0 && abs <= n, "image out of range");
            assert!(!seen[abs], "repeated letter");
            seen[abs] = true;
        }
        SignedPermutation { images }
    }

    /// The identity on `n` letters.
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i64).collect() }
    }

    /// The sign flip of every letter.
    pub fn negation(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i64).map(|i| -i).collect() }
    }

    /// Number of letters.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(j)` for `j` in `1..=n`.
    pub fn image(&self, j: usize) -> i64 {
        self.images[j - 1]
    }

    /// The `j` with `w(j) = i`, if the preimage of `i` is positive.
    pub fn positive_preimage(&self, i: usize) -> Option<usize> {
        self.images.iter().position(|&v| v == i as i64).map(|p| p + 1)
    }

    /// How many letters change sign; even counts form the index-two
    /// subgroup relevant for even ambient sizes.
    pub fn sign_change_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }
}

/// Uniformly random signed permutation on `n` letters from the given
/// generator.
pub fn random_signed_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SignedPermutation {
    let mut letters: Vec<i64> = (1..=n as i64).collect();
    for j in (1..n).rev() {
        letters.swap(j, rng.gen_range(0..=j));
    }
    for v in &mut letters {
        if rng.gen_bool(0.5) {
            *v = -*v;
        }
    }
    SignedPermutation { images: letters }
}

/// `b_w`: how many of the first `n - n0` letters have a positive preimage
/// among the first `n - n0` positions.
pub fn b_w(w: &SignedPermutation, n0: usize) -> usize {
    let k = w.n() - n0;
    (1..=k)
        .filter(|&i| matches!(w.positive_preimage(i), Some(j) if j <= k))
        .count()
}

/// `Delta_Q(w)`: how many of the last `n0` letters have a positive
/// preimage among the first `n - n0` positions.
pub fn delta_q_w(w: &SignedPermutation, n0: usize) -> usize {
    let k = w.n() - n0;
    (k + 1..=w.n())
        .filter(|&i| matches!(w.positive_preimage(i), Some(j) if j <= k))
        .count()
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::cuspidal::enumerate_series;
    use crate::correspondence::unit_rep_orbit;
    use crate::orbit::GroupContext;

    #[test]
    fn nu_h_small_sizes() {
        assert_eq!(nu_h(7), 9);
        assert_eq!(nu_h(6), 6);
        assert_eq!(nu_h(3), 1);
        assert_eq!(nu_h(2), 0);
        assert_eq!(nu_h(0), 0);
    }

    #[test]
    fn shape_arithmetic() {
        let shape = LeviShape::new(7, 3);
        assert_eq!(shape.a(), 2);
        assert_eq!(shape.delta_p(), 2);
        assert_eq!(shape.nu_levi(), 1);
    }

    #[test]
    fn dim_x_uni_examples() {
        assert_eq!(dim_x_uni(LeviShape::new(3, 1), 0), 3);
        assert_eq!(dim_x_uni(LeviShape::new(5, 3), 2), 9);
        assert_eq!(dim_x_uni(LeviShape::new(2, 0), 0), 1);
    }

    #[test]
    fn d_o_examples() {
        assert_eq!(
            d_o(LeviShape::new(5, 1), 8, 0),
            Rational64::from_integer(1)
        );
        assert_eq!(d_o(LeviShape::new(4, 4), 6, 6), Rational64::from_integer(0));
    }

    #[test]
    fn s_matches_half_gap_examples() {
        assert_eq!(half_gap(0, 1, 1), Rational64::from_integer(0));
        assert_eq!(half_gap(3, 3, 0), Rational64::from_integer(0));
        assert_eq!(half_gap(4, 2, 2), Rational64::from_integer(2));
    }

    #[test]
    fn s_and_delta_reproduces_restriction_bound() {
        use crate::partition::enumerate_partitions;
        use crate::restriction::{procedures, y_dimension};
        for n in 2..=10usize {
            let shape = LeviShape::new(n, n - 2);
            for lambda in enumerate_partitions(n) {
                for lambda_prime in enumerate_partitions(n - 2) {
                    for proc in procedures(&lambda, &lambda_prime) {
                        let d = y_dimension(&lambda, &lambda_prime, proc);
                        let sd = s_and_delta(
                            shape,
                            lambda.n_invariant(),
                            lambda_prime.n_invariant() + 1,
                        );
                        assert_eq!(sd.s, d.s, "{lambda} -> {lambda_prime}");
                    }
                }
            }
        }
    }

    #[test]
    fn open_orbit_has_expected_dimension_and_zero_defect() {
        for n in 0..=10 {
            for c in enumerate_series(n) {
                let shape = LeviShape::new(n, c.n0());
                let inner = GroupContext::new(c.n0());
                let dim_o_l = inner.dim_h() - c.nu().n_invariant();
                let open = unit_rep_orbit(&c, n);
                assert_eq!(
                    dim_x_uni(shape, dim_o_l),
                    open.orbit().dimension(),
                    "N={n} {c}"
                );
                assert_eq!(
                    d_o(shape, open.orbit().dimension(), dim_o_l),
                    Rational64::from_integer(0),
                    "N={n} {c}"
                );
            }
        }
    }

    #[test]
    fn d0_collapses_to_dim_x_uni_for_equal_levis() {
        for n in 0..=10 {
            for c in enumerate_series(n) {
                let shape = LeviShape::new(n, c.n0());
                let inner = GroupContext::new(c.n0());
                let dim_o_l = inner.dim_h() - c.nu().n_invariant();
                let sym = d0(
                    nu_h(n),
                    shape.nu_levi(),
                    shape.nu_levi(),
                    dim_o_l,
                    dim_o_l,
                    shape.delta_p(),
                    shape.delta_p(),
                );
                assert_eq!(
                    sym,
                    Rational64::from_integer(dim_x_uni(shape, dim_o_l) as i64)
                );
            }
        }
        assert_eq!(d0(5, 0, 0, 0, 0, 0, 0), Rational64::from_integer(10));
    }

    #[test]
    fn signed_permutation_counts() {
        let id = SignedPermutation::identity(4);
        assert_eq!(b_w(&id, 2), 2);
        assert_eq!(delta_q_w(&id, 2), 0);

        let neg = SignedPermutation::negation(5);
        for n0 in 0..=5 {
            assert_eq!(b_w(&neg, n0), 0);
            assert_eq!(delta_q_w(&neg, n0), 0);
        }

        let w = SignedPermutation::new(vec![3, 2, 1]);
        assert_eq!(b_w(&w, 1), 1);
        assert_eq!(delta_q_w(&w, 1), 1);
    }

    #[test]
    fn identity_attains_the_bound() {
        for n in 0..=8 {
            let id = SignedPermutation::identity(n);
            for n0 in 0..=n {
                assert_eq!(b_w(&id, n0), n - n0);
                assert_eq!(delta_q_w(&id, n0), 0);
            }
        }
    }

    #[test]
    fn defect_bound_holds_on_random_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(90531);
        let mut equality_full = 0usize;
        let mut equality_even = 0usize;
        for trial in 0..10_000 {
            let n = 1 + trial % 8;
            let w = random_signed_permutation(n, &mut rng);
            let even = w.sign_change_count() % 2 == 0;
            for n0 in 0..n {
                let delta_p = n - n0;
                let b = b_w(&w, n0);
                let dq = delta_q_w(&w, n0);
                assert!(dq + b <= delta_p, "{w:?} n0={n0}");
                if dq + b == delta_p {
                    equality_full += 1;
                    if even {
                        equality_even += 1;
                    }
                }
            }
        }
        assert!(equality_full > 0);
        assert!(equality_even > 0);
    }
}
