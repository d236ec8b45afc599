#![no_main]

use hypercube::io::parse_patterns;
use hypercube::synthesis::PatternSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(patterns) = parse_patterns(text) {
        let n = patterns[0].len();
        let _ = PatternSet::new(patterns, n);
    }
});
