#![no_main]

use hypercube::dynamics::UpdatePolicy;
use hypercube::graphcut::graph_to_network;
use hypercube::io::{parse_input, Input};
use hypercube::quadform::canonicalize;
use hypercube::spectral::spectral_solve;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let net = match parse_input(text, None) {
        Ok(Input::Matrix(raw)) => canonicalize(&raw).network,
        Ok(Input::Graph(g)) => graph_to_network(&g),
        Err(_) => return,
    };
    if net.dim() <= 12 {
        let _ = spectral_solve(&net, &UpdatePolicy::default());
    }
});
