//! Which aligned triples bound a chamber.
//!
//! For six points the answer is read off a reference arrangement of the same
//! class through a canonical relabeling. For seven points a triple `lnm`
//! bounds the chamber exactly when it bounds the chamber of each of the four
//! six-point subsets that contain it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::Vec3;
use crate::classify::{six_canonical, Fingerprint, SixClass};
use crate::crossing::reach_line_wall;
use crate::pencil::SixPointData;
use crate::projective::combinations;

/// A six-point arrangement with its bounding triples, as indices `0..6`.
#[derive(Clone, Debug)]
pub struct SixReference {
    pub class: SixClass,
    pub fingerprint: Fingerprint,
    order: Vec<usize>,
    pub triples: Vec<[usize; 3]>,
}

impl SixReference {
    pub fn new(class: SixClass, data: &SixPointData, triples: Vec<[usize; 3]>) -> Self {
        let (fingerprint, order) = six_canonical(data);
        SixReference { class, fingerprint, order, triples }
    }
}

/// Triples reachable from `pts` without meeting any other degeneracy,
/// found by exact search. A miss within the budget counts as not bounding.
pub fn search_line_walls(pts: &[Vec3], seed: u64, rounds: usize) -> Vec<[usize; 3]> {
    combinations(pts.len(), 3)
        .into_iter()
        .filter_map(|t| {
            let triple = [t[0], t[1], t[2]];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            reach_line_wall(pts, triple, &mut rng, rounds).map(|_| triple)
        })
        .collect()
}

/// Bounding triples of any six-point arrangement given references for all
/// four classes. Returns `None` if no reference matches the fingerprint.
pub fn six_line_walls(data: &SixPointData, refs: &[SixReference]) -> Option<(SixClass, Vec<[usize; 3]>)> {
    let (fp, order) = six_canonical(data);
    let r = refs.iter().find(|r| r.fingerprint == fp)?;
    // reference index r.order[k] corresponds to data index order[k]
    let mut map = [0usize; 6];
    for k in 0..6 {
        map[r.order[k]] = order[k];
    }
    let mut out: Vec<[usize; 3]> = r
        .triples
        .iter()
        .map(|t| {
            let mut u = t.map(|i| map[i]);
            u.sort_unstable();
            u
        })
        .collect();
    out.sort_unstable();
    Some((r.class, out))
}

/// Four-occurrence rule over the six-point subsets of seven points.
/// `subs[p]` is the data of all points but `p`, with labels `p' + 1`.
pub fn seven_line_walls(subs: &[SixPointData], refs: &[SixReference]) -> Option<Vec<[usize; 3]>> {
    let counts = subset_counts(subs, refs, 7)?;
    Some(combinations(7, 3).into_iter().map(|t| [t[0], t[1], t[2]]).filter(|t| counts[tri_index(t)] == 4).collect())
}

/// Triples `n m 7` bounding a configuration whose points `1..6` are
/// coconic, from the six generic subsets containing point 7.
/// `subs[p]` for `p < 6` is the data of all points but `p`.
pub fn coconic_line_walls(subs: &[SixPointData], refs: &[SixReference]) -> Option<Vec<[usize; 3]>> {
    let counts = subset_counts(subs, refs, 6)?;
    Some(combinations(6, 2).into_iter().map(|t| [t[0], t[1], 6]).filter(|t| counts[tri_index(t)] == 4).collect())
}

fn tri_index(t: &[usize; 3]) -> usize {
    t[0] * 49 + t[1] * 7 + t[2]
}

fn subset_counts(subs: &[SixPointData], refs: &[SixReference], n: usize) -> Option<Vec<u8>> {
    let mut counts = vec![0u8; 343];
    for (p, d) in subs.iter().enumerate().take(n) {
        let idx: Vec<usize> = (0..7).filter(|&i| i != p).collect();
        let (_, ts) = six_line_walls(d, refs)?;
        for t in ts {
            let mut u = t.map(|i| idx[i]);
            u.sort_unstable();
            counts[tri_index(&u)] += 1;
        }
    }
    Some(counts)
}
