#![no_main]

use libfuzzer_sys::fuzz_target;
use stanley_critical::parse_ideal;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ideal) = parse_ideal(text) {
        let gens = ideal.generators();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                assert!(i == j || !a.divides(b));
            }
        }
        assert_eq!(parse_ideal(&ideal.to_string()).unwrap(), ideal);
    }
});
