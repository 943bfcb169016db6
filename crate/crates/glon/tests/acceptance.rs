//! Acceptance sweep: one test per top-level guarantee, each printing a
//! single summary line and enforcing its runtime budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use glon::{
    b_w, branching_consistency, centralizer_dims, correspondence_table, cuspidal_count,
    cuspidal_support, cuspidal_support_all_orders, d_o, delta_q_w, dim_x_uni, enumerate_cuspidal,
    enumerate_pairs, enumerate_partitions, enumerate_series, epsilon_multiplicity, form_matrix,
    gamma, is_self_adjoint, jordan_type, nilpotent_representative, normal_basis, orbit_dimension,
    partition_count, random_signed_permutation, requires_split, unit_rep_orbit, verify_appendix,
    GroupContext, LeviShape, OrbitLabel, Split,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn finish(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("{name}: PASS ({elapsed:.2?}, budget {budget:.2?})");
    assert!(elapsed < budget, "{name} exceeded its budget: {elapsed:.2?}");
}

#[test]
fn appendix_tables_reproduce_exactly() {
    let start = Instant::now();
    let expected_rows = [5usize, 4, 13, 12, 32, 32];
    for (n, rows) in (2..=7).zip(expected_rows) {
        let check = verify_appendix(n);
        assert!(check.is_clean(), "table {n} differs: {:?}", check.diffs);
        assert_eq!(check.expected, rows);
        assert_eq!(check.computed, rows);
    }
    finish("appendix reproduction", start, Duration::from_secs(1));
}

#[test]
fn cuspidal_counts_match_closed_form() {
    let start = Instant::now();
    let listed = [1usize, 3, 3, 6, 7, 14, 16];
    for (n, count) in (1..=7).zip(listed) {
        assert_eq!(enumerate_cuspidal(n).len(), count, "count at N={n}");
    }
    for n in 2..=24 {
        let direct = enumerate_cuspidal(n).len() as u128;
        assert_eq!(direct, cuspidal_count(n), "closed form at N={n}");
    }
    finish("cuspidal counts", start, Duration::from_secs(5));
}

#[test]
fn correspondence_is_a_bijection_with_counted_fibers() {
    let start = Instant::now();
    let appendix_sizes = [5usize, 4, 13, 12, 32, 32];
    for n in 0..=12 {
        let table = correspondence_table(n);
        let pairs = enumerate_pairs(n);
        let image: BTreeSet<String> = table.iter().map(|r| r.pair.to_string()).collect();
        assert_eq!(image.len(), table.len(), "duplicate image at N={n}");
        assert_eq!(table.len(), pairs.len(), "size mismatch at N={n}");
        let domain: BTreeSet<String> = pairs.iter().map(ToString::to_string).collect();
        assert_eq!(image, domain, "image differs from pair set at N={n}");
        let convolved: u128 = enumerate_series(n)
            .iter()
            .map(|c| {
                let a = (n - c.n0()) / 2;
                partition_count(a)
            })
            .sum();
        assert_eq!(convolved, pairs.len() as u128, "fiber count at N={n}");
        if (2..=7).contains(&n) {
            assert_eq!(pairs.len(), appendix_sizes[n - 2]);
        }
    }
    finish("series bijection", start, Duration::from_secs(10));
}

#[test]
fn branching_matches_box_removal() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 2..=10 {
        for c in enumerate_series(n) {
            let a = (n - c.n0()) / 2;
            if a == 0 {
                continue;
            }
            for mu in enumerate_partitions(a) {
                for mu_prime in enumerate_partitions(a - 1) {
                    assert!(branching_consistency(&c, &mu, &mu_prime, n));
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 400, "sweep size drifted");
    finish("branching consistency", start, Duration::from_secs(60));
}

#[test]
fn matrix_oracle_certifies_representatives() {
    let start = Instant::now();
    for n in 0..=8 {
        let ctx = form_matrix(n);
        let dim_h = GroupContext::new(n).dim_h();
        for lambda in enumerate_partitions(n) {
            let splits: Vec<Option<Split>> = if requires_split(&lambda) {
                vec![Some(Split::Plus), Some(Split::Minus)]
            } else {
                vec![None]
            };
            for split in splits {
                let x = nilpotent_representative(n, &lambda, split);
                assert!(is_self_adjoint(&x, &ctx), "self-adjoint {lambda}");
                assert_eq!(jordan_type(&x).unwrap(), lambda);
                let expected = lambda.n_invariant();
                let dims = centralizer_dims(&x, &ctx);
                assert_eq!(dims, (expected, expected + n), "centralizer {lambda}");
                assert_eq!(
                    dims.0 + orbit_dimension(GroupContext::new(n), &lambda),
                    dim_h
                );
                let nb = normal_basis(&x, &ctx);
                assert_eq!(nb.chain_lengths(), lambda.parts());
                assert_eq!(nb.gram(&ctx), nb.expected_gram(), "gram {lambda}");
                assert!(nb.has_unit_constants(), "constants {lambda}");
                if lambda.odd_part_count() <= 1 {
                    assert!(nb.has_unit_form(), "unit form {lambda}");
                }
            }
        }
    }
    finish("matrix oracle", start, Duration::from_secs(120));
}

#[test]
fn dimension_formulas_cohere() {
    let start = Instant::now();
    for n in 0..=10 {
        let dim_h = GroupContext::new(n).dim_h();
        for c in enumerate_series(n) {
            let shape = LeviShape::new(n, c.n0());
            let dim_nu = OrbitLabel::new(c.nu().clone(), c.split()).dimension();
            let open = unit_rep_orbit(&c, n);
            let dim_open = open.orbit().dimension();
            assert_eq!(d_o(shape, dim_open, dim_nu), 0.into(), "open defect {c}");
            let x_uni = dim_x_uni(shape, dim_nu);
            assert_eq!(x_uni, dim_open, "uniform dimension {c}");
            assert_eq!(x_uni, dim_h - c.nu().n_invariant(), "closed form {c}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(424242);
    let mut equality_seen = false;
    for trial in 0..10_000 {
        let n = 1 + trial % 8;
        let w = random_signed_permutation(n, &mut rng);
        for n0 in (n % 2..=n).step_by(2) {
            let k = n - n0;
            let bound = k as i64 - b_w(&w, n0) as i64;
            let delta_q = delta_q_w(&w, n0) as i64;
            assert!(delta_q <= bound, "bound violated for {w:?} at n0={n0}");
            if k > 0 && delta_q == bound {
                equality_seen = true;
            }
        }
    }
    assert!(equality_seen, "the parabolic bound should be attained");
    finish("dimension formulas", start, Duration::from_secs(10));
}

#[test]
fn round_trips_and_order_independence() {
    let start = Instant::now();
    for n in 0..=12 {
        for c in enumerate_series(n) {
            let a = (n - c.n0()) / 2;
            for mu in enumerate_partitions(a) {
                let pair = gamma(&c, &mu).expect("series map is total on fibers");
                let (c_back, mu_back) = cuspidal_support(&pair);
                assert_eq!((&c_back, &mu_back), (&c, &mu), "support of image at N={n}");
            }
        }
        for pair in enumerate_pairs(n) {
            let (c, mu) = cuspidal_support(&pair);
            assert_eq!(gamma(&c, &mu).unwrap(), pair, "image of support at N={n}");
        }
    }
    for n in 0..=9 {
        for pair in enumerate_pairs(n) {
            let canonical = cuspidal_support(&pair);
            for other in cuspidal_support_all_orders(&pair) {
                assert_eq!(other, canonical, "stripping order at N={n}");
            }
        }
    }
    finish("round trips", start, Duration::from_secs(30));
}

#[test]
fn restriction_multiplicities_are_boolean_with_hook_row_sums() {
    let start = Instant::now();
    for n in 2..=9 {
        let smaller = enumerate_pairs(n - 2);
        for pair in enumerate_pairs(n) {
            for q in &smaller {
                assert!(epsilon_multiplicity(&pair, q) <= 1, "multiplicity {pair} -> {q}");
            }
            let (c, mu) = cuspidal_support(&pair);
            if c.n0() == n || mu.size() == 0 {
                continue;
            }
            let weighted: u128 = enumerate_partitions(mu.size() - 1)
                .iter()
                .map(|mu_prime| {
                    let q = gamma(&c, mu_prime).unwrap();
                    mu_prime.hook_dimension() * epsilon_multiplicity(&pair, &q) as u128
                })
                .sum();
            assert_eq!(weighted, mu.hook_dimension(), "row sum at {pair}");
        }
    }
    finish("restriction row sums", start, Duration::from_secs(30));
}
