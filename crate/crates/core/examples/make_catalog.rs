//! Builds the shipped catalog of representatives.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rp2conf::admissible::{coconic_line_walls, search_line_walls, seven_line_walls, six_line_walls, SixReference};
use rp2conf::arith::{add, cross, neg, scale, vec3, Vec3};
use rp2conf::classify::{six_data, SixClass};
use rp2conf::crossing::{events, mask_of, Event, MoverFrame};
use rp2conf::golden::Golden;
use rp2conf::pencil::SixPointData;
use rp2conf::projective::ProjectivePoint;

fn circle(p: i64, q: i64) -> Vec3 {
    vec3(q * q - p * p, 2 * p * q, q * q + p * p)
}

fn refs() -> Vec<SixReference> {
    let base: Vec<Vec3> = [(-3, 1), (0, 1), (3, 1), (-1, 1), (1, 1)].iter().map(|&(p, q)| circle(p, q)).collect();
    let ones = [
        (SixClass::Alpha, vec3(3, 0, -8)),
        (SixClass::Beta, vec3(5, 5, 8)),
        (SixClass::Gamma, vec3(2, 1, -4)),
        (SixClass::Delta, vec3(3, 2, 8)),
    ];
    ones.iter()
        .map(|(c, p1)| {
            let mut v = vec![p1.clone()];
            v.extend(base.iter().cloned());
            let ps: Vec<ProjectivePoint> = v.iter().map(|x| ProjectivePoint::from_vec(x.clone()).unwrap()).collect();
            let d = six_data(&ps).unwrap();
            let t = search_line_walls(&v, 7, 60);
            SixReference::new(*c, &d, t)
        })
        .collect()
}

fn subs_of(pts: &[Vec3], n: usize) -> Option<Vec<SixPointData>> {
    (0..n)
        .map(|p| {
            let idx: Vec<usize> = (0..7).filter(|&i| i != p).collect();
            let sp: [&Vec3; 6] = std::array::from_fn(|k| &pts[idx[k]]);
            let labels: [u8; 6] = std::array::from_fn(|k| idx[k] as u8 + 1);
            SixPointData::compute(&sp, labels).ok()
        })
        .collect()
}

fn displaced(pts: &[Vec3], outward: bool) -> Option<Vec<Vec3>> {
    let frame = MoverFrame::new(pts, 5);
    let ev = Event::Conic(mask_of(&[0, 1, 2, 3, 4, 5]));
    let p = &pts[5];
    for k in 2..60 {
        let n = BigInt::from(1) << k;
        let f = if outward { &n + 1 } else { &n - 1 };
        let q = [&p[0] * &f, &p[1] * &f, &p[2] * &n];
        if frame.path(&q, Some(ev)) == Some(vec![]) {
            let mut out = pts.to_vec();
            out[5] = q;
            return Some(out);
        }
    }
    None
}

fn names(ts: &[[usize; 3]]) -> BTreeSet<String> {
    ts.iter().map(|t| format!("{}{}{}", t[0] + 1, t[1] + 1, t[2] + 1)).collect()
}

fn fmt_pts(out: &mut String, pts: &[Vec3]) {
    for p in pts {
        let p = rp2conf::arith::primitive(p.clone());
        out.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
    }
}

fn tri_str(ts: &[[usize; 3]]) -> String {
    names(ts).into_iter().collect::<Vec<_>>().join(" ")
}

fn main() {
    let g = Golden::load();
    let mut out =
        String::from("# rp2conf catalog v1\n# kind name [class] [| line-wall triples], then one point per line\n\n");
    // six-point zones: node 1 in zone X, points 2..6 on a circle
    let base: Vec<Vec3> = [(-3, 1), (0, 1), (3, 1), (-1, 1), (1, 1)].iter().map(|&(p, q)| circle(p, q)).collect();
    let zones = [
        ('A', vec3(3, 0, -8)),
        ('B', vec3(5, 5, 8)),
        ('C', vec3(2, 1, -4)),
        ('D', vec3(3, 2, 8)),
        ('E', vec3(32, 19, -8)),
        ('F', vec3(19, 17, 8)),
        ('G', vec3(9, 13, -8)),
    ];
    let classes = [SixClass::Alpha, SixClass::Beta, SixClass::Gamma, SixClass::Delta];
    for (k, c) in classes.iter().enumerate() {
        let mut v = vec![zones[k].1.clone()];
        v.extend(base.iter().cloned());
        let t = search_line_walls(&v, 7, 60);
        eprintln!("six {}", c.name());
        out.push_str(&format!("six {} | {}\n", c.name(), tri_str(&t)));
        fmt_pts(&mut out, &v);
    }
    out.push('\n');
    for (z, p) in &zones {
        let mut v = vec![p.clone()];
        v.extend(base.iter().cloned());
        out.push_str(&format!("zone {z}\n"));
        fmt_pts(&mut out, &v);
    }
    out.push('\n');
    let refs = refs();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut coconic: Vec<(char, Vec<Vec3>)> = Vec::new();
    for row in &g.coconic_triples {
        let want: BTreeSet<String> = row.triples.iter().map(|t| format!("{}{}{}", t[0], t[1], t[2])).collect();
        let arr = format!("({},6)", row.letter);
        let want6: BTreeSet<String> = g
            .line_walls
            .iter()
            .filter(|r| r.arrangement == arr)
            .map(|r| format!("{}{}{}", r.triple[0], r.triple[1], r.triple[2]))
            .collect();
        loop {
            let mut ts: Vec<i64> = Vec::new();
            while ts.len() < 6 {
                let t = rng.gen_range(-60..=60);
                if !ts.contains(&t) {
                    ts.push(t);
                }
            }
            ts.sort();
            let mut pts: Vec<Vec3> = ts.iter().map(|&t| rp2conf::arith::primitive(circle(t, 16))).collect();
            let p7 = if rng.gen_bool(0.3) {
                vec3(rng.gen_range(-200..=200), rng.gen_range(-200..=200), 64)
            } else {
                let a = rng.gen_range(0..6);
                let b = rng.gen_range(0..6);
                let c = rng.gen_range(0..6);
                let d = rng.gen_range(0..6);
                if a == b || c == d {
                    continue;
                }
                let mut x = cross(&cross(&pts[a], &pts[b]), &cross(&pts[c], &pts[d]));
                if x[2].sign() == num_bigint::Sign::NoSign {
                    continue;
                }
                if x[2].sign() == num_bigint::Sign::Minus {
                    x = neg(&x);
                }
                let k: u32 = rng.gen_range(6..14);
                let off = vec3(rng.gen_range(-100..=100), rng.gen_range(-100..=100), 0);
                add(&scale(&(BigInt::from(100) << k), &x), &scale(&x[2], &off))
            };
            pts.push(rp2conf::arith::primitive(p7));
            if events(&pts) != vec![Event::Conic(mask_of(&[0, 1, 2, 3, 4, 5]))] {
                continue;
            }
            let Some(subs) = subs_of(&pts, 6) else { continue };
            let Some(tr) = coconic_line_walls(&subs, &refs) else { continue };
            if names(&tr) != want {
                continue;
            }
            let Some(o) = displaced(&pts, true) else { continue };
            let Some(s7) = subs_of(&o, 7) else { continue };
            let Some(t7) = seven_line_walls(&s7, &refs) else { continue };
            if !want6.is_empty() && names(&t7) != want6 {
                continue;
            }
            eprintln!("found {}", row.letter);
            coconic.push((row.letter, pts));
            break;
        }
    }
    for (l, pts) in &coconic {
        out.push_str(&format!("coconic {l}\n"));
        fmt_pts(&mut out, pts);
    }
    out.push('\n');
    let perms = rp2conf::classify::permutations(7);
    for q in &g.quadruples {
        let name = &q.arrangement;
        let pts: Vec<Vec3> = if name.starts_with('(') {
            let letter = name.chars().nth(1).unwrap();
            let mut c = coconic.iter().find(|(l, _)| *l == letter).unwrap().1.clone();
            if name.contains('\'') {
                let s = [5usize, 4, 3, 2, 1, 0, 6];
                let mut c2 = c.clone();
                for i in 0..7 {
                    c2[s[i]] = c[i].clone();
                }
                c = c2;
            }
            displaced(&c, true).unwrap()
        } else {
            let want: BTreeSet<String> = g
                .line_walls
                .iter()
                .filter(|r| &r.arrangement == name)
                .map(|r| format!("{}{}{}", r.triple[0], r.triple[1], r.triple[2]))
                .collect();
            'outer: loop {
                let pts: Vec<Vec3> = (0..7)
                    .map(|_| vec3(rng.gen_range(-50..=50), rng.gen_range(-50..=50), rng.gen_range(-50..=50)))
                    .collect();
                if pts.iter().any(rp2conf::arith::is_zero) || !events(&pts).is_empty() {
                    continue;
                }
                let Some(s7) = subs_of(&pts, 7) else { continue };
                let mut qq = [0u8; 4];
                for d in &s7 {
                    qq[six_line_walls(d, &refs).unwrap().0.index()] += 1;
                }
                if qq != q.class.quadruple.0 {
                    continue;
                }
                let t7 = seven_line_walls(&s7, &refs).unwrap();
                for p in &perms {
                    let mapped: BTreeSet<String> = t7
                        .iter()
                        .map(|t| {
                            let mut u = t.map(|i| p[i] + 1);
                            u.sort();
                            format!("{}{}{}", u[0], u[1], u[2])
                        })
                        .collect();
                    if mapped.is_superset(&want) {
                        let mut o = vec![pts[0].clone(); 7];
                        for i in 0..7 {
                            o[p[i]] = pts[i].clone();
                        }
                        break 'outer o;
                    }
                }
            }
        };
        out.push_str(&format!("seven {} {}\n", name, q.class.compact()));
        fmt_pts(&mut out, &pts);
    }
    print!("{out}");
}
