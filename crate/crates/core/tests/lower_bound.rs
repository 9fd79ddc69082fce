mod common;

use common::{random_strategy_on, rng};
use knash::lower_bound::{count_support_sets_of_size, failure_probability_bound};
use knash::*;
use rand::Rng;

/// Counts support tuples by brute force over per-player bitmasks.
fn brute_count(k: usize, n: usize, budget: usize) -> usize {
    let masks = (1usize << n) - 1;
    let mut count = 0;
    let total = masks.pow(k as u32);
    for m in 0..total {
        let mut rest = m;
        let mut size = 0;
        for _ in 0..k {
            size += ((rest % masks) + 1).count_ones() as usize;
            rest /= masks;
        }
        if size <= budget {
            count += 1;
        }
    }
    count
}

fn binomial(n: usize, r: usize) -> u128 {
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[test]
fn enumeration_is_complete_and_unique() {
    for (k, n) in [(1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (2, 5)] {
        for budget in k..=k * n {
            let sets: Vec<SupportSet> = enumerate_support_sets(k, n, budget).unwrap().collect();
            assert_eq!(sets.len(), brute_count(k, n, budget), "k={k} n={n} t={budget}");
            let unique: std::collections::HashSet<_> = sets.iter().cloned().collect();
            assert_eq!(unique.len(), sets.len());
            let by_formula: u128 = (k..=budget).map(|t| count_support_sets_of_size(k, n, t)).sum();
            assert_eq!(by_formula, sets.len() as u128);
            for t in k..=budget {
                let exact = sets.iter().filter(|s| s.total_size() == t).count() as u128;
                assert!(exact <= binomial(k * n, t));
            }
            assert!(sets.iter().all(|s| s.total_size() <= budget && s.total_size() >= k));
        }
    }
}

#[test]
fn winners_pay_one_against_any_profile_inside_support() {
    let mut r = rng(3);
    for seed in 0..10 {
        let g = gen_wta(3, 6, Seed(seed)).unwrap();
        for support in enumerate_support_sets(3, 6, 4).unwrap().step_by(7) {
            for p in 0..3 {
                let Some(w) = universal_winner_check(&g, &support, p).unwrap() else {
                    continue;
                };
                for _ in 0..5 {
                    let profile = MixedProfile::new(
                        (0..3).map(|q| random_strategy_on(&mut r, 6, support.player(q))).collect(),
                    );
                    let v = deviation_payoff(&g, &profile, p, w).unwrap();
                    assert!((v - 1.0).abs() < 1e-12, "{v}");
                }
            }
        }
    }
}

/// Random profile whose total support is at most `budget`.
fn bounded_profile(r: &mut impl Rng, k: usize, n: usize, budget: usize) -> MixedProfile {
    let mut sizes = vec![1; k];
    for _ in 0..r.gen_range(0..=budget - k) {
        let p = r.gen_range(0..k);
        if sizes[p] < n {
            sizes[p] += 1;
        }
    }
    MixedProfile::new(
        sizes
            .iter()
            .map(|&c| {
                let mut pool: Vec<usize> = (0..n).collect();
                let mut chosen = Vec::with_capacity(c);
                for _ in 0..c {
                    chosen.push(pool.swap_remove(r.gen_range(0..pool.len())));
                }
                chosen.sort();
                random_strategy_on(r, n, &chosen)
            })
            .collect(),
    )
}

#[test]
fn certified_games_force_large_regret() {
    let mut r = rng(11);
    let mut certified = 0;
    for seed in 0..10 {
        let g = gen_wta(3, 40, Seed(seed)).unwrap();
        let result = certify_lower_bound(&g, 3, &CertifyOptions::default()).unwrap();
        if !result.certified {
            continue;
        }
        certified += 1;
        for _ in 0..100 {
            let prof = bounded_profile(&mut r, 3, 40, 3);
            let report = regret_report(&g, &prof).unwrap();
            assert!(report.epsilon >= result.epsilon_floor() - 1e-9);
            let min = report.players.iter().map(|p| p.expected_payoff).fold(f64::INFINITY, f64::min);
            assert!(min <= 1.0 / 3.0 + 1e-12);
        }
    }
    assert!(certified > 0);
}

#[test]
fn tiny_games_rarely_certify_at_full_support() {
    let certified = (0..20)
        .filter(|&s| {
            let g = gen_wta(2, 2, Seed(s)).unwrap();
            certify_lower_bound(&g, 4, &CertifyOptions::default()).unwrap().certified
        })
        .count();
    assert_eq!(certified, 0);
}

#[test]
fn union_bound_shrinks_with_n() {
    let small = failure_probability_bound(2, 64, 2);
    let large = failure_probability_bound(2, 256, 2);
    assert!(large < small);
    assert!(large < 1e-20);
}

#[test]
fn miss_probability_is_below_exp_sqrt_n() {
    for n in [4usize, 16, 100, 1000, 1 << 16] {
        let tail = knash::lower_bound::miss_all_ln(n, 0.5);
        assert!(tail <= -(n as f64).sqrt());
    }
}
