#![no_main]

use libfuzzer_sys::fuzz_target;
use stanley_critical::{build_canonical, parse_spec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_spec(text) {
        assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        if spec.ms().iter().all(|m| m.degree() <= 16) {
            assert_eq!(build_canonical(&spec).unwrap().num_generators(), spec.t());
        }
    }
});
