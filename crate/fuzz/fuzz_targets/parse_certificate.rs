#![no_main]

use libfuzzer_sys::fuzz_target;
use sgcolor::exact::Certificate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Certificate::parse(text) {
        let back = Certificate::parse(&c.to_text()).expect("written certificate parses");
        assert_eq!(back, c);
    }
});
