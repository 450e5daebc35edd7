#![no_main]

use libfuzzer_sys::fuzz_target;
use rjpascal::RingElem;

fuzz_target!(|data: &[u8]| {
    let Ok(u) = serde_json::from_slice::<RingElem>(data) else {
        return;
    };
    let s = serde_json::to_string(&u).unwrap();
    assert_eq!(serde_json::from_str::<RingElem>(&s).unwrap(), u);
    let _ = u.pretty();
});
