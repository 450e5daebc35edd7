#![no_main]

use libfuzzer_sys::fuzz_target;
use rjpascal::IntMatrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(m) = IntMatrix::from_csv(text) else {
        return;
    };
    assert_eq!(IntMatrix::from_csv(&m.to_csv()).unwrap(), m);
});
