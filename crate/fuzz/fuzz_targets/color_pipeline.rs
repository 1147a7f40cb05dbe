#![no_main]

// Any parsed subcubic graph is either colored with a verified (5,3)-coloring
// or is a copy of (K4,-) in some component.
use libfuzzer_sys::fuzz_target;
use sgcolor::color::verify;
use sgcolor::construct::color_53;
use sgcolor::{DemandMap, SignedGraph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = SignedGraph::parse(text) else { return };
    if g.n() > 64 || !g.is_subcubic() {
        return;
    }
    match color_53(&g).expect("subcubic input") {
        Some(f) => assert!(verify(&g, &f, &DemandMap::constant(g.n(), 3)).is_ok()),
        None => {
            let k4 = sgcolor::generate::k4_minus();
            assert!(g.components().iter().any(|c| {
                let h = g.induced(c).0;
                h.same_underlying(&k4) && h.switching_equivalent(&k4).unwrap()
            }));
        }
    }
});
