#![no_main]

use dalpha::graph::graph6::parse_graph6_bytes;
use dalpha::spectra::Alpha;
use dalpha::verify::{GraphAnalysis, Verdict};
use libfuzzer_sys::fuzz_target;

// First byte picks α, the rest is one graph6 line.
fuzz_target!(|data: &[u8]| {
    let Some((&a, rest)) = data.split_first() else {
        return;
    };
    let Ok(g) = parse_graph6_bytes(rest) else {
        return;
    };
    let Ok(analysis) = GraphAnalysis::new(&g) else {
        return;
    };
    let alpha = Alpha::new(f64::from(a) / 256.0).unwrap();
    let inv = analysis.proof_invariants(alpha).unwrap();
    assert!(inv.all_passed(), "{inv:?}");
    if let Ok(check) = analysis.check_bound(alpha, 1e-9) {
        assert_ne!(check.verdict, Verdict::Violation, "{check:?}");
        assert!(check.is_consistent(), "{check:?}");
    }
});
