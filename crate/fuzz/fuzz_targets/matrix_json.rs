#![no_main]

use libfuzzer_sys::fuzz_target;
use rjpascal::{IntMatrix, RingMatrix};

fuzz_target!(|data: &[u8]| {
    if let Ok(m) = serde_json::from_slice::<IntMatrix>(data) {
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
        assert_eq!(IntMatrix::from_csv(&m.to_csv()).unwrap(), m);
    }
    if let Ok(m) = serde_json::from_slice::<RingMatrix>(data) {
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<RingMatrix>(&s).unwrap(), m);
    }
});
