#![no_main]

use libfuzzer_sys::fuzz_target;
use rp2conf::golden::parse_table;
use rp2conf::walls::parse_wall_names;

const TABLES: [&str; 9] = [
    "conic_pencils",
    "cubic_pencils",
    "six_lists",
    "quadruples",
    "line_walls",
    "conic_walls",
    "coconic_triples",
    "line_conic_walls",
    "refined_walls",
];

// The first byte picks the table; the rest is its text.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    match TABLES.get(pick as usize) {
        Some(name) => {
            let _ = parse_table(name, text);
        }
        None => {
            let _ = parse_wall_names(text);
        }
    }
});
