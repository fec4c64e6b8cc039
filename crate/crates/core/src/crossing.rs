//! Exact straight-line motions of one point and the degeneracies they meet.
//!
//! A path `p(t) = (1-t)P + tT` meets the line through `a, b` where a linear
//! polynomial vanishes, and the conic through five other points where a
//! quadratic in Bernstein form vanishes. Both are decided by exact signs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{add, cross, dot, scale, sgn, Vec3};
use crate::projective::{conic_through_five_raw, ConicForm};

/// A single degeneracy of a point set, as a bitmask of point indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    /// Three points on a line.
    Line(u8),
    /// Six points on a conic.
    Conic(u8),
}

impl Event {
    pub fn mask(self) -> u8 {
        match self {
            Event::Line(m) | Event::Conic(m) => m,
        }
    }

    /// Indices of the points involved, ascending.
    pub fn indices(self) -> Vec<usize> {
        (0..8).filter(|i| self.mask() >> i & 1 == 1).collect()
    }
}

pub fn mask_of(idx: &[usize]) -> u8 {
    idx.iter().fold(0u8, |m, &i| m | 1 << i)
}

/// Every degeneracy of a point set (indices from 0).
pub fn events(pts: &[Vec3]) -> Vec<Event> {
    let n = pts.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let l = cross(&pts[i], &pts[j]);
            for k in j + 1..n {
                if dot(&l, &pts[k]).is_zero() {
                    out.push(Event::Line(mask_of(&[i, j, k])));
                }
            }
        }
    }
    if n >= 6 {
        for six in crate::projective::combinations(n, 6) {
            let c = conic_through_five_raw(&pts[six[0]], &pts[six[1]], &pts[six[2]], &pts[six[3]], &pts[six[4]]);
            let five_degenerate = c.coefficients().iter().all(Zero::is_zero);
            if five_degenerate || c.eval(&pts[six[5]]).is_zero() {
                // a collinear triple inside the six makes the bracket form a
                // line pair; that case is a line event, not a conic one
                if !has_collinear(pts, &six) {
                    out.push(Event::Conic(mask_of(&six)));
                }
            }
        }
    }
    out
}

fn has_collinear(pts: &[Vec3], idx: &[usize]) -> bool {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            for c in b + 1..idx.len() {
                if crate::arith::det3(&pts[idx[a]], &pts[idx[b]], &pts[idx[c]]).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Conditions that can change when point `i` moves.
pub struct MoverFrame {
    i: usize,
    p: Vec3,
    lines: Vec<(u8, Vec3)>,
    conics: Vec<(u8, ConicForm)>,
}

impl MoverFrame {
    pub fn new(pts: &[Vec3], i: usize) -> Self {
        let n = pts.len();
        let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
        let mut lines = Vec::new();
        for (x, &a) in others.iter().enumerate() {
            for &b in &others[x + 1..] {
                lines.push((mask_of(&[i, a, b]), cross(&pts[a], &pts[b])));
            }
        }
        let mut conics = Vec::new();
        if n >= 6 {
            for five in crate::projective::combinations(others.len(), 5) {
                let idx: Vec<usize> = five.iter().map(|&k| others[k]).collect();
                let c = conic_through_five_raw(&pts[idx[0]], &pts[idx[1]], &pts[idx[2]], &pts[idx[3]], &pts[idx[4]]);
                let mut all = idx.clone();
                all.push(i);
                conics.push((mask_of(&all), c));
            }
        }
        MoverFrame { i, p: pts[i].clone(), lines, conics }
    }

    pub fn index(&self) -> usize {
        self.i
    }

    /// Degeneracies met at `t = 1` by the path to `q`, or `None` if any
    /// condition vanishes for `t` in `(0, 1)`, or at `t = 0` other than `start`.
    pub fn path(&self, q: &Vec3, start: Option<Event>) -> Option<Vec<Event>> {
        let mut at_end = Vec::new();
        for (m, l) in &self.lines {
            let d0 = sgn(&dot(l, &self.p));
            let d1 = sgn(&dot(l, q));
            let ev = Event::Line(*m);
            if d0 == 0 && start != Some(ev) {
                return None;
            }
            if d0 == 0 && d1 == 0 {
                return None;
            }
            if d0 * d1 < 0 {
                return None;
            }
            if d1 == 0 {
                at_end.push(ev);
            }
        }
        for (m, c) in &self.conics {
            let coef_zero = c.coefficients().iter().all(Zero::is_zero);
            if coef_zero {
                continue;
            }
            let a = c.eval(&self.p);
            let b = c.polar2(&self.p, q);
            let e = c.eval(q);
            let ev = Event::Conic(*m);
            if a.is_zero() && start != Some(ev) {
                return None;
            }
            if bernstein_root_inside(&a, &b, &e) {
                return None;
            }
            if e.is_zero() {
                at_end.push(ev);
            }
        }
        Some(at_end)
    }
}

/// Whether `a(1-t)² + b t(1-t) + c t²` vanishes for some `t` in `(0, 1)`,
/// or identically.
fn bernstein_root_inside(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    // u = t / (1 - t) maps (0, 1) onto (0, ∞): g(u) = a + b u + c u²
    let (sa, sb, sc) = (sgn(a), sgn(b), sgn(c));
    match (sa, sc) {
        (0, 0) => sb == 0,
        (0, _) => sb != 0 && sb == -sc,
        (_, 0) => sb != 0 && sb == -sa,
        _ if sa != sc => true,
        _ => sb == -sa && b * b - BigInt::from(4) * a * c >= BigInt::zero(),
    }
}

/// Largest absolute coordinate.
pub(crate) fn height(v: &Vec3) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap()
}

/// `v` rescaled and rounded so that its height is about `2^bits`.
pub(crate) fn rounded(v: &Vec3, bits: u32) -> Vec3 {
    let h = height(v);
    let target = BigInt::from(1) << bits;
    v.clone().map(|x| x * &target / &h)
}

pub(crate) fn random_vec(rng: &mut ChaCha8Rng, bits: u32) -> Vec3 {
    let r = 1i64 << bits;
    std::array::from_fn(|_| BigInt::from(rng.gen_range(-r..=r)))
}

pub(crate) const WORK_BITS: u32 = 24;

/// One random move of a random point that meets no degeneracy at all.
/// Returns whether a move was made.
pub fn random_clean_step(pts: &mut [Vec3], rng: &mut ChaCha8Rng, tries: usize) -> bool {
    let n = pts.len();
    for _ in 0..tries {
        let i = rng.gen_range(0..n);
        let frame = MoverFrame::new(pts, i);
        for _ in 0..4 {
            let k = rng.gen_range(2..14);
            let mut q = add(&rounded(&pts[i], WORK_BITS), &random_vec(rng, WORK_BITS - k));
            if rng.gen_bool(0.5) {
                // both lifts of the target give different paths
                q = q.map(|x| -x);
            }
            if q.iter().all(Zero::is_zero) {
                continue;
            }
            if let Some(ev) = frame.path(&q, None) {
                if ev.is_empty() {
                    pts[i] = crate::arith::primitive(q);
                    return true;
                }
            }
        }
    }
    false
}

/// Candidate targets on the line through `a` and `b`.
fn line_targets(pts: &[Vec3], i: usize, a: usize, b: usize, rng: &mut ChaCha8Rng) -> Vec<Vec3> {
    let (pa, pb) = (rounded(&pts[a], WORK_BITS), rounded(&pts[b], WORK_BITS));
    let lab = cross(&pts[a], &pts[b]);
    let mut out = Vec::new();
    // projections of the mover along lines through the other points
    for (k, x) in pts.iter().enumerate() {
        if k == i || k == a || k == b {
            continue;
        }
        let through = cross(&pts[i], x);
        out.push(cross(&through, &lab));
    }
    let coords: [Vec3; 4] = [
        crate::arith::vec3(1, 0, 0),
        crate::arith::vec3(0, 1, 0),
        crate::arith::vec3(0, 0, 1),
        crate::arith::vec3(1, 1, 1),
    ];
    for x in &coords {
        out.push(cross(&cross(&pts[i], x), &lab));
    }
    for _ in 0..12 {
        let l = BigInt::from(rng.gen_range(-9i64..=9));
        let m = BigInt::from(rng.gen_range(-9i64..=9));
        if l.is_zero() && m.is_zero() {
            continue;
        }
        out.push(add(&scale(&l, &pa), &scale(&m, &pb)));
    }
    out.retain(|v| !v.iter().all(Zero::is_zero));
    out
}

/// Moves points without meeting any degeneracy until the three points of
/// `triple` become collinear and nothing else degenerates. Returns the wall
/// state and the index of the point that moved last.
pub fn reach_line_wall(
    start: &[Vec3],
    triple: [usize; 3],
    rng: &mut ChaCha8Rng,
    rounds: usize,
) -> Option<(Vec<Vec3>, usize)> {
    let want = vec![Event::Line(mask_of(&triple))];
    let mut pts = start.to_vec();
    for round in 0..rounds {
        for r in 0..3 {
            let i = triple[(r + round) % 3];
            let a = triple[(r + round + 1) % 3];
            let b = triple[(r + round + 2) % 3];
            let frame = MoverFrame::new(&pts, i);
            for q in line_targets(&pts, i, a, b, rng) {
                for q in [q.clone(), q.map(|x| -x)] {
                    if frame.path(&q, None).as_ref() == Some(&want) {
                        pts[i] = crate::arith::primitive(q);
                        return Some((pts, i));
                    }
                }
            }
        }
        for _ in 0..3 {
            random_clean_step(&mut pts, rng, 20);
        }
    }
    None
}

/// Pushes `mover` off the degeneracy `ev` of a wall state to the side where
/// the sign of `side_fn` equals `side`, meeting nothing else on the way.
pub fn leave_wall(wall: &[Vec3], mover: usize, ev: Event, dir: &Vec3) -> Option<Vec<Vec3>> {
    let frame = MoverFrame::new(wall, mover);
    let p = &wall[mover];
    let mut k = 1u32;
    while k < 400 {
        let q = add(&scale(&(BigInt::from(1) << k), p), dir);
        if let Some(end) = frame.path(&q, Some(ev)) {
            if end.is_empty() {
                let mut out = wall.to_vec();
                out[mover] = crate::arith::primitive(q);
                return Some(out);
            }
        }
        k += 3;
    }
    None
}

/// Directions off the line through `a, b`: one on each side.
pub fn line_sides(wall: &[Vec3], a: usize, b: usize) -> (Vec3, Vec3) {
    let l = cross(&wall[a], &wall[b]);
    let h = height(&wall[a]).max(height(&wall[b]));
    // a coordinate vector off the line, scaled to the working height
    let k = (0..3).find(|&k| !l[k].is_zero()).unwrap();
    let mut e: Vec3 = crate::arith::vec3(0, 0, 0);
    e[k] = h;
    let s = sgn(&dot(&l, &e));
    let plus = if s > 0 { e.clone() } else { e.clone().map(|x| -x) };
    let minus = plus.clone().map(|x| -x);
    (plus, minus)
}

/// Sign of `det(p_i, p_a, p_b)` after orienting the pair.
pub fn line_sign(pts: &[Vec3], i: usize, a: usize, b: usize) -> i8 {
    sgn(&dot(&cross(&pts[a], &pts[b]), &pts[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::vec3;
    use rand::SeedableRng;

    #[test]
    fn bernstein_cases() {
        let b = |x: i64| BigInt::from(x);
        // (1-t)² - ... with roots inside
        assert!(bernstein_root_inside(&b(1), &b(0), &b(-1)));
        assert!(!bernstein_root_inside(&b(1), &b(1), &b(1)));
        // g(u) = 1 - 3u + u² has positive roots
        assert!(bernstein_root_inside(&b(1), &b(-3), &b(1)));
        // g(u) = 1 - u + u² has none
        assert!(!bernstein_root_inside(&b(1), &b(-1), &b(1)));
        // tangency counts
        assert!(bernstein_root_inside(&b(1), &b(-2), &b(1)));
        assert!(!bernstein_root_inside(&b(0), &b(1), &b(1)));
        assert!(bernstein_root_inside(&b(0), &b(-1), &b(1)));
    }

    #[test]
    fn bernstein_matches_sampling() {
        for a in -3i64..=3 {
            for m in -6i64..=6 {
                for c in -3i64..=3 {
                    let got = bernstein_root_inside(&BigInt::from(a), &BigInt::from(m), &BigInt::from(c));
                    // dense rational sampling plus the exact double root
                    let f = |t: f64| a as f64 * (1.0 - t).powi(2) + m as f64 * t * (1.0 - t) + c as f64 * t * t;
                    let mut sign_change = false;
                    let mut zero = a == 0 && m == 0 && c == 0;
                    let mut prev = f(1e-9);
                    for s in 1..20000 {
                        let v = f(s as f64 / 20000.0);
                        if v == 0.0 {
                            zero = true;
                        }
                        if v * prev < 0.0 {
                            sign_change = true;
                        }
                        prev = v;
                    }
                    let disc = m * m - 4 * a * c;
                    let double_inside = disc == 0 && a != 0 && a * m < 0;
                    assert_eq!(got, sign_change || zero || double_inside, "a={a} m={m} c={c}");
                }
            }
        }
    }

    #[test]
    fn path_stops_at_line() {
        let pts = vec![vec3(0, 0, 1), vec3(4, 0, 1), vec3(2, 3, 1), vec3(1, -5, 1)];
        let f = MoverFrame::new(&pts, 3);
        // move 3 up to y = 0 between 0 and 1: reaches line (0, 1, 3)
        let ev = f.path(&vec3(1, 0, 1), None).unwrap();
        assert_eq!(ev, vec![Event::Line(mask_of(&[0, 1, 3]))]);
        // moving across it is rejected
        assert!(f.path(&vec3(1, 1, 1), None).is_none());
    }

    #[test]
    fn random_steps_keep_events_empty() {
        let mut pts =
            vec![vec3(0, 0, 1), vec3(7, 1, 3), vec3(-2, 5, 1), vec3(3, -4, 2), vec3(1, 9, -4), vec3(-6, -1, 5)];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            random_clean_step(&mut pts, &mut rng, 20);
            assert!(events(&pts).is_empty());
        }
    }
}
