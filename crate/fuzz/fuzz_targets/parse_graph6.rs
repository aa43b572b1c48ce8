#![no_main]

use dalpha::graph::graph6::parse_graph6_bytes;
use dalpha::graph::{parse_graph6, to_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    match parse_graph6_bytes(data) {
        Ok(g) => {
            let s = to_graph6(&g).expect("decoded graphs re-encode");
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
        Err(e) => assert!(e.offset().map_or(true, |off| off <= data.len())),
    }
});
