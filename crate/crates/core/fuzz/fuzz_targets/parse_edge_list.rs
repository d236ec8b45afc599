#![no_main]

use hypercube::io::{parse_edge_list, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        let again = parse_edge_list(&write_edge_list(&g)).expect("round trip");
        assert_eq!(again.n(), g.n());
        assert_eq!(again.edges().len(), g.edges().len());
    }
});
