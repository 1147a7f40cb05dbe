#![no_main]

use libfuzzer_sys::fuzz_target;
use sgcolor::Coloring;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Coloring::parse(text) {
        let out = f.to_text();
        let back = Coloring::parse(&out).expect("written coloring parses");
        assert_eq!(back, f);
        assert_eq!(back.to_text(), out);
    }
});
