#![no_main]

use libfuzzer_sys::fuzz_target;
use sgcolor::SignedGraph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = SignedGraph::parse(text) {
        let out = g.to_text();
        let back = SignedGraph::parse(&out).expect("written graph parses");
        assert_eq!(back, g);
        assert_eq!(back.to_text(), out);
    }
});
