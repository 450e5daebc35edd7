#![no_main]

use libfuzzer_sys::fuzz_target;
use rjpascal::decimal::parse_decimal;
use rjpascal::{IdentityId, ParamRange, XMode};

// Command-line value parsers: range, x mode, identity name, decimal.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = text.parse::<ParamRange>() {
        assert!(r.lo <= r.hi);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<ParamRange>(&json).unwrap(), r);
    }
    if let Ok(x) = text.parse::<XMode>() {
        assert_eq!(x.to_string().parse::<XMode>().unwrap(), x);
    }
    if let Ok(id) = text.parse::<IdentityId>() {
        assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
    }
    if let Ok(d) = parse_decimal(text) {
        assert_eq!(parse_decimal(&d.to_string()).unwrap(), d);
    }
});
