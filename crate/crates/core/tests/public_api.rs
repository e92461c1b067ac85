//! Cross-module properties exercised through the public API only.

use num_bigint::BigInt;
use superlie::cyclic::super_klyachko_char;
use superlie::par;
use superlie::partition::{partitions_of, Partition};
use superlie::superlie::{super_bi_brandt_char, super_brandt_char, super_witt_dim, thrall_sum_check};
use superlie::tableau::{count_super_tableaux, syt_count};
use superlie::verify::{run_suite, Profile, Suite, SuiteBounds};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn classical_witt_numbers_on_two_generators() {
    let expected = [2, 1, 2, 3, 6, 9, 18, 30];
    for (n, want) in (1..).zip(expected) {
        assert_eq!(super_witt_dim(n, 0, 2).unwrap(), BigInt::from(want), "n = {n}");
    }
}

#[test]
fn bi_character_restricts_to_the_diagonal_character() {
    for total in 1..=6 {
        for m in 0..=total {
            let bi = super_bi_brandt_char(total - m, m).unwrap();
            let diag = super_brandt_char(total - m, m).unwrap();
            assert!(bi.diagonal().equals(&diag), "(n, m) = ({}, {m})", total - m);
        }
    }
}

#[test]
fn klyachko_induction_matches_brandt() {
    for total in 1..=7 {
        for m in 0..=total {
            let induced = super_klyachko_char(total - m, m).unwrap();
            let brandt = super_brandt_char(total - m, m).unwrap();
            assert!(induced.equals(&brandt), "(n, m) = ({}, {m})", total - m);
        }
    }
}

#[test]
fn thrall_sums_hold_in_low_degree() {
    for total in 1..=3 {
        for m in 0..=total {
            assert!(thrall_sum_check(total - m, m).is_pass());
        }
    }
}

#[test]
fn tableau_counts_over_all_residues_are_binomial_multiples() {
    for n in 1..=6u32 {
        for lambda in partitions_of(n) {
            let f = syt_count(&lambda) as u64;
            for negg in 0..=n {
                let total: u64 = (0..3).map(|s| count_super_tableaux(&lambda, 3, s, negg).unwrap()).sum();
                assert_eq!(total, binomial(n as u64, negg as u64) * f, "{lambda} negg {negg}");
            }
        }
    }
}

#[test]
fn sequential_fallback_agrees_with_parallel() {
    for suite in [Suite::Hook, Suite::Symmetry, Suite::Kw] {
        let bounds = SuiteBounds::resolve(suite, Profile::Quick, None, None).unwrap();
        let parallel = run_suite(suite, bounds).unwrap();
        let sequential = par::sequential(|| run_suite(suite, bounds).unwrap());
        assert_eq!(parallel, sequential, "{suite}");
    }
}

#[test]
fn suite_sizes_above_the_cap_are_refused() {
    for suite in Suite::CONCRETE {
        assert!(SuiteBounds::resolve(suite, Profile::Full, Some(suite.max_size() + 1), None).is_err());
    }
}

#[test]
fn partitions_parse_from_their_display() {
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            let back: Partition = lambda.to_string().parse().unwrap();
            assert_eq!(back, lambda);
        }
    }
}
