#![no_main]

use libfuzzer_sys::fuzz_target;
use rp2conf::catalog::Catalog;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Catalog::parse(text) {
        for e in &c.entries {
            assert_eq!(e.points.len(), e.kind.arity());
        }
    }
});
