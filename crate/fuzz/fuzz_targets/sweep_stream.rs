#![no_main]

use dalpha::spectra::Alpha;
use dalpha::verify::{sweep, SweepOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let opts = SweepOptions::new(vec![Alpha::ZERO, Alpha::HALF], 1e-9);
    if let Ok(report) = sweep(data, &opts) {
        assert!(report.graphs_connected <= report.graphs_total);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
    }
});
