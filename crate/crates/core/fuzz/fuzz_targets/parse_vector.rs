#![no_main]

use hypercube::geometry::{induced_hamming, quantize, Rounding};
use hypercube::io::parse_vector;
use hypercube::spectral::ZeroAs;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_vector(text) {
        let _ = quantize(&v, Rounding::Floor);
        let _ = quantize(&v, Rounding::Round);
        let _ = induced_hamming(&v, &v, ZeroAs::Plus);
    }
});
