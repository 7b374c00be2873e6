mod common;

use common::walks::{all_specs, brute_force_period};
use cyclowalk::period::{block_orders, check_walk_necessary};
use cyclowalk::{
    block_order, build_blocks, build_full, certify_infinite, walk_period, BlockOrder, PeriodResult,
    DEFAULT_T_MAX,
};

fn proper_divisors(t: u64) -> Vec<u64> {
    (1..t).filter(|d| t.is_multiple_of(*d)).collect()
}

#[test]
fn finite_periods_are_minimal() {
    for (name, spec) in all_specs(2..=8) {
        if let PeriodResult::Finite(t) = walk_period(&spec, DEFAULT_T_MAX).unwrap() {
            let u = build_full(&spec).unwrap();
            assert!(u.pow(t).is_identity(), "{name}: U^{t} != I");
            for d in proper_divisors(t) {
                assert!(!u.pow(d).is_identity(), "{name}: U^{d} = I with T = {t}");
            }
        }
    }
}

#[test]
fn block_decision_matches_full_matrix() {
    for (name, spec) in all_specs(2..=6) {
        let brute = brute_force_period(&spec, 64);
        let decided = match walk_period(&spec, 64).unwrap() {
            PeriodResult::Finite(t) => Some(t),
            _ => None,
        };
        assert_eq!(decided, brute, "{name}");
    }
}

#[test]
fn certified_blocks_have_no_small_order() {
    for (name, spec) in all_specs(2..=10) {
        if let Some(cert) = certify_infinite(&spec).unwrap() {
            assert!(cert.verify_for(&spec).unwrap(), "{name}");
            let block = &build_blocks(&spec).unwrap()[cert.k];
            assert_eq!(
                block_order(block, 4096),
                BlockOrder::UnknownUpTo(4096),
                "{name}: certified block k={} has a finite order",
                cert.k
            );
        }
    }
}

#[test]
fn certificates_and_periods_exclude_each_other() {
    for (name, spec) in all_specs(2..=12) {
        let orders = block_orders(&spec, 64).unwrap();
        let all_finite = orders.iter().all(|o| o.finite().is_some());
        let cert = certify_infinite(&spec).unwrap();
        assert!(!(all_finite && cert.is_some()), "{name}");
    }
}

#[test]
fn realised_periods_pass_the_coin_condition() {
    let mut seen = 0;
    for (name, spec) in all_specs(2..=12) {
        if let PeriodResult::Finite(t) = walk_period(&spec, DEFAULT_T_MAX).unwrap() {
            seen += 1;
            assert!(
                check_walk_necessary(&spec, t).unwrap().passes,
                "{name} T={t}"
            );
        }
    }
    assert_eq!(seen, 4);
}
