use std::fs;
use std::path::PathBuf;

use asmval::golden::{GoldenFile, TailConstants};
use asmval_core::analytic::DEFAULT_FOURIER_TERMS;
use asmval_core::Prime;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/tail_constants.json")
}

fn load() -> GoldenFile {
    serde_json::from_str(&fs::read_to_string(golden_path()).unwrap()).unwrap()
}

/// Rewrites the golden file: `cargo test -p asmval --test golden_constants -- --ignored`.
#[test]
#[ignore]
fn regenerate() {
    let golden = GoldenFile::measure(&PRIMES, DEFAULT_FOURIER_TERMS, 100, 10_000).unwrap();
    let mut text = serde_json::to_string_pretty(&golden).unwrap();
    text.push('\n');
    fs::write(golden_path(), text).unwrap();
}

#[test]
fn stored_constants_match_a_fresh_fit() {
    let golden = load();
    assert_eq!(golden.fourier_terms, DEFAULT_FOURIER_TERMS);
    for &pv in &[2u64, 3, 7] {
        let stored = &golden.entry(pv).unwrap().tail;
        let fresh = TailConstants::measure(Prime::new(pv).unwrap()).unwrap();
        assert_eq!(stored.fit_order, fresh.fit_order);
        assert!((stored.phi_constant / fresh.phi_constant - 1.0).abs() < 1e-9);
        match (stored.psi_constant, fresh.psi_constant) {
            (Some(a), Some(b)) => assert!((a / b - 1.0).abs() < 1e-9),
            (None, None) => {}
            other => panic!("psi constants differ: {other:?}"),
        }
    }
}

#[test]
fn stored_bounds_are_consistent() {
    let golden = load();
    assert_eq!(golden.entries.len(), PRIMES.len());
    for e in &golden.entries {
        let bound = e.tail.envelope().phi_bound(golden.fourier_terms);
        assert!((bound / e.phi_bound - 1.0).abs() < 1e-12);
        assert_eq!(e.residual_scale.is_none(), e.tail.prime == 3);
        assert_eq!(e.tail.psi_constant.is_none(), e.tail.prime == 3);
    }
    // order 10^-2 for the base-3 envelope
    let p3 = golden.entry(3).unwrap().phi_bound;
    assert!(p3 > 1e-3 && p3 < 1e-1, "{p3}");
}
