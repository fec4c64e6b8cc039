#![no_main]

use libfuzzer_sys::fuzz_target;
use rp2conf::pointfile::{format_point_file, parse_point_file};

// Parsing never panics, and accepted files survive a write and re-read.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(points) = parse_point_file(text) {
        let again = parse_point_file(&format_point_file(&points)).expect("formatted file parses");
        assert_eq!(again, points);
    }
});
