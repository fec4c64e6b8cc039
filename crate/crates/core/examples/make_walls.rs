//! Crosses every tabulated line-wall from the catalog and prints the wall
//! name table binding each name to its canonical code.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rp2conf::adjacency::{cross_wall, WallSpec};
use rp2conf::catalog::Catalog;
use rp2conf::golden::Golden;
use rp2conf::walls::{format_canonical, format_sequence, WallDescriptor};

fn main() {
    let t0 = Instant::now();
    let cat = Catalog::shipped();
    let mut names: BTreeMap<u8, BTreeSet<Vec<u8>>> = BTreeMap::new();
    let mut bad = 0;
    for (k, row) in Golden::load().line_walls.iter().enumerate() {
        let e = cat.seven(&row.arrangement).expect("arrangement in catalog");
        match cross_wall(&e.points, WallSpec::Line(row.triple), k as u64) {
            Ok(c) => {
                let WallDescriptor::Line(l) = &c.descriptor else { panic!() };
                let ok = c.after.name() == row.across.compact() && c.before.name() == row.class.compact();
                if !ok {
                    bad += 1;
                }
                println!(
                    "{} {:?} W{} -> {} got {} | {} | {}",
                    row.arrangement,
                    row.triple,
                    row.wall,
                    row.across.compact(),
                    c.after,
                    format_sequence(&l.sequence),
                    if ok { "ok" } else { "MISMATCH" }
                );
                names.entry(row.wall).or_default().insert(l.canonical.clone());
            }
            Err(err) => {
                bad += 1;
                println!("{} {:?} error {err}", row.arrangement, row.triple);
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut table = String::new();
    for (w, codes) in &names {
        if codes.len() != 1 {
            println!("W{w} has {} codes", codes.len());
        }
        for c in codes {
            if !seen.insert(c.clone()) {
                println!("code reused by W{w}");
            }
            table.push_str(&format!("W{w} | {}\n", format_canonical(c, 4)));
        }
    }
    println!("{bad} mismatches, {} names, {:?}", names.len(), t0.elapsed());
    print!("{table}");
}
