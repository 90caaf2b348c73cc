#![no_main]

use libfuzzer_sys::fuzz_target;
use stanley_critical::{format_monomial, parse_monomial};

// The first byte picks the number of variables.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = usize::from(n % 9);
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(m) = parse_monomial(text, n) {
        assert_eq!(m.n(), n);
        assert_eq!(parse_monomial(&format_monomial(&m), n).unwrap(), m);
    }
});
