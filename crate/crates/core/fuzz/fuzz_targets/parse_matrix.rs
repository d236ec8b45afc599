#![no_main]

use hypercube::io::{parse_matrix, write_matrix_parts};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(raw) = parse_matrix(text) {
        // anything accepted must survive a write/parse round trip
        let again = parse_matrix(&write_matrix_parts(raw.matrix(), raw.threshold())).expect("round trip");
        assert_eq!(again.dim(), raw.dim());
    }
});
