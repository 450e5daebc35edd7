#![no_main]

use libfuzzer_sys::fuzz_target;
use rjpascal::IdentityReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(report) = IdentityReport::from_json(text) else {
        return;
    };
    let s = serde_json::to_string(&report).unwrap();
    let again = IdentityReport::from_json(&s).unwrap();
    assert_eq!(serde_json::to_string(&again).unwrap(), s);
});
