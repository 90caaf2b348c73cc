#![no_main]

use libfuzzer_sys::fuzz_target;
use stanley_critical::{format_monomial, parse_monomial, Monomial};

fuzz_target!(|exps: Vec<u16>| {
    let exps: Vec<u32> = exps.into_iter().take(64).map(u32::from).collect();
    let m = Monomial::new(exps);
    let text = format_monomial(&m);
    assert_eq!(parse_monomial(&text, m.n()).unwrap(), m);
});
