//! Property tests for the textual and JSON label grammars and for the
//! series/support inverse pair on randomly drawn inputs.

use glon::{
    cuspidal_support, enumerate_partitions, enumerate_pairs, enumerate_series, gamma,
    CuspidalDatum, PairLabel, Partition,
};
use proptest::prelude::*;

fn partitions() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=9, 0..=8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

fn pairs() -> impl Strategy<Value = PairLabel> {
    (0usize..=10, any::<prop::sample::Index>()).prop_map(|(n, index)| {
        let all = enumerate_pairs(n);
        all[index.index(all.len())].clone()
    })
}

fn series_with_fiber() -> impl Strategy<Value = (CuspidalDatum, Partition, usize)> {
    (0usize..=10, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(
        |(n, pick_c, pick_mu)| {
            let all = enumerate_series(n);
            let c = all[pick_c.index(all.len())].clone();
            let fibers = enumerate_partitions((n - c.n0()) / 2);
            let mu = fibers[pick_mu.index(fibers.len())].clone();
            (c, mu, n)
        },
    )
}

proptest! {
    #[test]
    fn partition_text_round_trips(p in partitions()) {
        let rendered = p.to_string();
        prop_assert_eq!(rendered.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn pair_text_round_trips(pair in pairs()) {
        let rendered = pair.to_string();
        prop_assert_eq!(rendered.parse::<PairLabel>().unwrap(), pair);
    }

    #[test]
    fn pair_json_round_trips(pair in pairs()) {
        let encoded = serde_json::to_string(&pair).unwrap();
        prop_assert_eq!(serde_json::from_str::<PairLabel>(&encoded).unwrap(), pair);
    }

    #[test]
    fn series_text_round_trips((c, _, _) in series_with_fiber()) {
        let rendered = c.to_string();
        prop_assert_eq!(rendered.parse::<CuspidalDatum>().unwrap(), c);
    }

    #[test]
    fn series_json_round_trips((c, _, _) in series_with_fiber()) {
        let encoded = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<CuspidalDatum>(&encoded).unwrap(), c);
    }

    #[test]
    fn support_inverts_series_map((c, mu, _n) in series_with_fiber()) {
        let pair = gamma(&c, &mu).unwrap();
        let (c_back, mu_back) = cuspidal_support(&pair);
        prop_assert_eq!(c_back, c);
        prop_assert_eq!(mu_back, mu);
    }

    #[test]
    fn series_map_inverts_support(pair in pairs()) {
        let (c, mu) = cuspidal_support(&pair);
        prop_assert_eq!(gamma(&c, &mu).unwrap(), pair);
    }
}
