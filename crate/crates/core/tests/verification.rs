use gpdim_core::recognition::{verify_tables, GoodListCheck};
use gpdim_core::resolving::{verify_upper, verify_witnesses};
use gpdim_core::*;

#[test]
fn closed_forms_match_bfs_beyond_threshold() {
    let ns: Vec<usize> = (38..=90).filter(|n| (2..=5).contains(&(n % 6))).collect();
    for check in verify_formulas(&ns, Domain::Checked).unwrap() {
        assert!(check.passed(), "n = {}: {:?}", check.n(), &check.mismatches[..check.mismatches.len().min(3)]);
        assert_eq!(check.pairs_checked, 4 * check.n() * check.n());
    }
}

#[test]
fn closed_forms_below_threshold_are_unchecked_only() {
    assert!(verify_formulas_for(20, Domain::Checked).is_err());
    let check = verify_formulas_for(20, Domain::Unchecked).unwrap();
    assert!(!check.class.in_claimed_domain());
}

#[test]
fn tables_and_good_lists_for_k_6_to_12() {
    for k in 6..=12 {
        for r in Residue::ALL {
            let n = ResidueClass::from_parts(r, k).n();
            let o = bfs_oracle(n, 3).unwrap();
            let t = verify_tables(&o, Domain::Checked).unwrap();
            assert!(t.passed(), "n = {n}: {:?}", t.mismatches);
            for g in GoodListCheck::run(&o, Domain::Checked).unwrap() {
                assert!(g.passed(), "n = {n} {}", g.vertex);
            }
        }
    }
}

#[test]
fn upper_bound_for_k_6_to_20() {
    for k in 6..=20 {
        let o = bfs_oracle(6 * k + 2, 3).unwrap();
        let u = verify_upper(&o, Domain::Checked).unwrap();
        assert!(u.passed(), "k = {k}");
        assert!(u.coordinate_gaps.is_subset(&[-2, 0, 2].into()));
    }
}

#[test]
fn witness_pairs_for_k_6_to_8() {
    for k in 6..=8 {
        for r in [Residue::R3, Residue::R4, Residue::R5] {
            let o = bfs_oracle(ResidueClass::from_parts(r, k).n(), 3).unwrap();
            let w = verify_witnesses(&o, Domain::Checked).unwrap();
            assert!(w.passed(), "k = {k} {r:?}: {:?}", w.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn best_oracle_agrees_with_bfs() {
    for (n, m) in [(38, 3), (41, 3), (42, 3), (30, 4)] {
        assert!(best_oracle(n, m).unwrap().same_distances(&bfs_oracle(n, m).unwrap()));
    }
}
