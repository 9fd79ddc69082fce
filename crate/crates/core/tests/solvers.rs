mod common;

use common::brute_regrets;
use knash::solvers::{recursive_lift_anchored, staircase_weights, Relaxed};
use knash::*;

#[test]
fn staircase_bound_holds_for_any_anchor_choice() {
    for k in 2..=4 {
        let n: usize = 3;
        let anchor_sets: Vec<Vec<usize>> = (0..n.pow((k - 1) as u32))
            .map(|m| (0..k - 1).map(|d| (m / n.pow(d as u32)) % n).collect())
            .collect();
        for seed in 0..5 {
            let g = gen_wta(k, n, Seed(seed)).unwrap();
            for anchors in &anchor_sets {
                let (profile, trace) = staircase(&g, Some(anchors)).unwrap();
                assert_eq!(&trace.anchors, anchors);
                let eps = regret_report(&g, &profile).unwrap().epsilon;
                assert!(eps <= 1.0 - 1.0 / k as f64 + 1e-9);
            }
        }
    }
}

#[test]
fn staircase_per_player_regret_stays_under_decomposition() {
    // Anchor mass plus response mass times the chance an earlier player
    // leaves its anchor; the product telescopes to 1 - 1/k for every player.
    for k in 2..=5 {
        for i in 0..k {
            let (a, r) = staircase_weights(k, i);
            let stay: f64 = (0..i).map(|j| staircase_weights(k, j).0).product();
            let bound = a + r * (1.0 - stay);
            assert!((bound - (1.0 - 1.0 / k as f64)).abs() < 1e-12, "k={k} i={i}");
        }
        for seed in 0..20 {
            let g = gen_uniform_payoffs(k, 3, Seed(seed)).unwrap();
            let (profile, _) = staircase(&g, None).unwrap();
            let report = regret_report(&g, &profile).unwrap();
            for p in &report.players {
                assert!(p.regret <= 1.0 - 1.0 / k as f64 + 1e-9);
            }
        }
    }
}

#[test]
fn staircase_trace_reconstructs_profile() {
    let g = gen_uniform_payoffs(4, 5, Seed(21)).unwrap();
    let (profile, trace) = staircase(&g, Some(&[4, 2, 0])).unwrap();
    for i in 0..4 {
        assert_eq!(&trace.mixture(i, 5).unwrap(), profile.strategy(i));
        let support = profile.strategy(i).support_size();
        if i < 3 && trace.anchors[i] == trace.responses[i] {
            assert_eq!(support, 1);
        }
        assert!(support <= 2);
    }
    // The last player's response is a best response to the anchors alone.
    let anchors_only = MixedProfile::pure(5, &[4, 2, 0, 0]).unwrap();
    assert_eq!(best_response(&g, &anchors_only, 3).unwrap().0, trace.responses[3]);
}

#[test]
fn staircase_matches_oracle_regrets() {
    for seed in 0..10 {
        let g = gen_wta(3, 3, Seed(seed)).unwrap();
        let (profile, _) = staircase(&g, None).unwrap();
        let (_, eps) = brute_regrets(&g, &profile);
        assert!((regret_report(&g, &profile).unwrap().epsilon - eps).abs() < 1e-12);
    }
}

#[test]
fn delta_recursion_identity() {
    for eps in [0.0, 0.1, 0.3393, 0.36392, 0.5, 0.9, 1.0] {
        for k in 3..=10 {
            let prev = delta_bound(k - 1, eps).unwrap();
            let cur = delta_bound(k, eps).unwrap();
            assert!((cur - 1.0 / (2.0 - prev)).abs() < 1e-12, "k={k} eps={eps}");
        }
    }
}

#[test]
fn lift_bound_with_anchor_override() {
    let base = dmp_two_player();
    for k in 3..=5 {
        for seed in 0..10 {
            let g = gen_wta(k, 3, Seed(seed)).unwrap();
            for anchor in 0..3 {
                let profile = recursive_lift_anchored(&g, &base, anchor).unwrap();
                let eps = regret_report(&g, &profile).unwrap().epsilon;
                assert!(eps <= delta_bound(k, 0.5).unwrap() + 1e-9);
                // Each level adds at most two strategies for its anchored player.
                assert!(profile.total_support() <= 2 * k);
            }
        }
    }
}

#[test]
fn lift_with_relaxed_base() {
    let base = Relaxed::new(dmp_two_player(), 0.75).unwrap();
    for seed in 0..20 {
        let g = gen_uniform_payoffs(4, 3, Seed(seed)).unwrap();
        let profile = recursive_lift(&g, &base).unwrap();
        let eps = regret_report(&g, &profile).unwrap().epsilon;
        assert!(eps <= delta_bound(4, 0.75).unwrap() + 1e-9);
    }
}

#[test]
fn lift_rejects_bad_anchor_and_small_games() {
    let base = dmp_two_player();
    let g = gen_wta(3, 2, Seed(0)).unwrap();
    assert!(recursive_lift_anchored(&g, &base, 2).is_err());
    let single = Game::new(1, 2, vec![0.0, 1.0]).unwrap();
    assert!(recursive_lift(&single, &base).is_err());
}
