#![no_main]

use libfuzzer_sys::fuzz_target;
use stanley_critical::parse_ideal_json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ideal) = parse_ideal_json(text) {
        let json = serde_json::to_string(&ideal).unwrap();
        assert_eq!(parse_ideal_json(&json).unwrap(), ideal);
    }
});
