//! Acceptance suite: one pass/fail line per criterion. Runs without the libtest
//! harness so the lines print in order with their timings.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rp2conf::adjacency::{adjacency_graph, cross_wall, refined_census, CameraClass, Stratification, WallKey, WallSpec};
use rp2conf::arith::{det3, mat_vec, Vec3};
use rp2conf::catalog::{displace_sixth, mirror_hexagon, Catalog};
use rp2conf::census::{census, non_realizable_diagrams, CensusKind, RunConfig};
use rp2conf::classify::{seven_class, seven_data, seven_fingerprint, six_fingerprint, Fingerprint, SixClass};
use rp2conf::cyclic::{rp1_cyclic_order, CyclicWord};
use rp2conf::golden::Golden;
use rp2conf::pencil::combinatorial_pencil;
use rp2conf::projective::{collinear, cremona_transform, pencil_direction, Label, ProjectivePoint};
use rp2conf::tables;
use rp2conf::walls::{conic_wall_class, wall_names, WallDescriptor};

const SEED: u64 = 1;

type Check = Result<String, String>;
type Criterion = fn() -> Check;
/// Class, line-walls by far class, conic-walls.
type Expectation = (SixClass, &'static [(&'static str, usize)], usize);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn table_ok(r: rp2conf::Result<tables::TableReport>) -> Result<usize, String> {
    let r = r.map_err(err)?;
    match r.diffs.first() {
        None => Ok(r.rows),
        Some(d) => Err(format!("{}: {} differences, first {d}", r.name, r.diffs.len())),
    }
}

fn seven_rep(name: &str) -> Result<Vec<ProjectivePoint>, String> {
    Catalog::shipped().seven(name).map(|e| e.points.clone()).ok_or(format!("no representative {name}"))
}

fn coconic(letter: char) -> Vec<ProjectivePoint> {
    Catalog::shipped().coconic(letter).expect("coconic entry").points.clone()
}

fn c1_cubic_pencils() -> Check {
    let rows = table_ok(tables::cubic_pencils())?;
    ensure(rows == 7, format!("{rows} rows"))?;
    Ok("7 zones reproduced".into())
}

fn c2_conic_pencils() -> Check {
    let rows = table_ok(tables::conic_pencils())?;
    ensure(rows == 7, format!("{rows} rows"))?;
    Ok("7 zones reproduced, pullbacks agree".into())
}

fn c3_six_points() -> Check {
    let rows = table_ok(tables::six_lists())?;
    ensure(rows == 28, format!("{rows} rows"))?;
    let cfg = RunConfig { seed: SEED, samples: 10_000, bound: 50, jobs: 0 };
    let r = census(CensusKind::Six, &cfg).map_err(err)?;
    ensure(r.unknown == 0 && r.histogram.len() == 4, format!("census found {:?}", r.histogram))?;
    Ok(format!("24 pencils reproduced, census {:?}", r.histogram))
}

fn c4_six_adjacency() -> Check {
    let expected: [Expectation; 4] = [
        (SixClass::Beta, &[("δ", 3)], 1),
        (SixClass::Delta, &[("β", 2), ("γ", 4)], 0),
        (SixClass::Gamma, &[("δ", 6), ("α", 1)], 0),
        (SixClass::Alpha, &[("γ", 10)], 0),
    ];
    let triples: Vec<[Label; 3]> =
        (1..=6).flat_map(|a| (a + 1..=6).flat_map(move |b| (b + 1..=6).map(move |c| [a, b, c]))).collect();
    let mut notes = Vec::new();
    for (class, lines, conics) in expected {
        let pts = &Catalog::shipped().six(class).points;
        let found: Vec<Option<CameraClass>> =
            triples.par_iter().map(|t| cross_wall(pts, WallSpec::Line(*t), SEED).ok().map(|c| c.after)).collect();
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for c in found.into_iter().flatten() {
            *hist.entry(c.name()).or_default() += 1;
        }
        let want: BTreeMap<String, usize> = lines.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        ensure(hist == want, format!("{}: line-walls to {hist:?}", class.greek()))?;
        let conic = cross_wall(pts, WallSpec::Conic([1, 2, 3, 4, 5, 6]), SEED);
        let n = usize::from(conic.is_ok());
        ensure(n == conics, format!("{}: {n} conic-walls", class.greek()))?;
        if let Ok(c) = conic {
            ensure(
                c.after == CameraClass::Six(class),
                format!("conic-wall from {} leads to {}", class.greek(), c.after),
            )?;
        }
        notes.push(format!("{} {}+{}", class.greek(), conics, lines.iter().map(|x| x.1).sum::<usize>()));
    }
    Ok(notes.join(", "))
}

fn c5_seven_points() -> Check {
    let rows = table_ok(tables::quadruples())?;
    ensure(rows == 14, format!("{rows} rows"))?;
    let cat = Catalog::shipped();
    let fps: BTreeSet<Fingerprint> = cat
        .of_kind(rp2conf::catalog::EntryKind::Seven)
        .map(|e| seven_fingerprint(&e.points))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(fps.len() == 14, format!("{} distinct fingerprints", fps.len()))?;

    let fp = |pts: &[ProjectivePoint]| seven_fingerprint(pts).map_err(err);
    let moved = |l: char, out: bool| displace_sixth(&coconic(l), out).map_err(err);
    let mut pairs: Vec<(String, Vec<ProjectivePoint>, Vec<ProjectivePoint>)> = Vec::new();
    for l in ['A', 'B', 'I', 'J', 'K'] {
        pairs.push((format!("({l},6)~({l},6')"), moved(l, true)?, moved(l, false)?));
    }
    pairs.push(("(D,6)~(D,6')".into(), moved('D', true)?, moved('D', false)?));
    pairs.push(("(D,6)~(G,6')".into(), moved('D', true)?, moved('G', false)?));
    pairs.push(("(E,6)~(E,6')".into(), moved('E', true)?, moved('E', false)?));
    pairs.push(("(E,6)~(F,6)".into(), moved('E', true)?, moved('F', true)?));
    pairs.push(("(E,6)~(F,6')".into(), moved('E', true)?, moved('F', false)?));
    pairs.push(("(C,6)~(H,6')".into(), moved('C', true)?, moved('H', false)?));
    let c_prime = displace_sixth(&mirror_hexagon(&coconic('C')), true).map_err(err)?;
    pairs.push(("(C',6)~(C,6')".into(), c_prime, moved('C', false)?));
    for (name, a, b) in &pairs {
        ensure(fp(a)? == fp(b)?, format!("{name} fails"))?;
    }
    ensure(fp(&moved('D', true)?)? != fp(&moved('G', true)?)?, "(D,6) and (G,6) coincide")?;
    ensure(fp(&moved('C', true)?)? != fp(&moved('C', false)?)?, "(C,6) and (C,6') coincide")?;

    let known: BTreeSet<String> = cat
        .of_kind(rp2conf::catalog::EntryKind::Seven)
        .map(|e| e.class.expect("seven entries carry a class").compact())
        .collect();
    let cfg = RunConfig { seed: SEED, samples: 10_000, bound: 50, jobs: 0 };
    let r = census(CensusKind::Seven, &cfg).map_err(err)?;
    let seen: BTreeSet<String> = r.histogram.keys().cloned().collect();
    ensure(r.unknown == 0 && seen.is_subset(&known), format!("census found {:?}", r.histogram))?;
    Ok(format!("14 fingerprints, {} identifications, census {} classes", pairs.len(), seen.len()))
}

fn c6_coconic() -> Check {
    let mut invariants = BTreeSet::new();
    for l in 'A'..='K' {
        let pts = coconic(l);
        let w = conic_wall_class(&pts).map_err(err)?;
        ensure(w.letter == l, format!("construction {l} classified as {}", w.letter))?;
        let out = seven_class(&displace_sixth(&pts, true).map_err(err)?).map_err(err)?;
        let inn = seven_class(&displace_sixth(&pts, false).map_err(err)?).map_err(err)?;
        let sides: BTreeSet<String> = [out.compact(), inn.compact()].into();
        let triples = rp2conf::adjacency::coconic_admissible_triples(&pts).map_err(err)?;
        invariants.insert((w.diagram.to_string(), sides, triples.len()));
    }
    ensure(invariants.len() == 11, format!("{} distinct invariant tuples", invariants.len()))?;
    let forbidden = non_realizable_diagrams();
    let cfg = RunConfig { seed: SEED, samples: 10_000, bound: 50, jobs: 0 };
    let r = census(CensusKind::Coconic, &cfg).map_err(err)?;
    ensure(r.excluded_diagrams == 0 && r.unknown == 0, format!("census found {:?}", r.histogram))?;
    Ok(format!("11 distinct classes, {} forbidden diagrams absent, census {:?}", forbidden.len(), r.histogram))
}

fn c7_walls() -> Check {
    let rows = &Golden::load().line_walls;
    let crossings: Vec<_> = rows
        .par_iter()
        .enumerate()
        .map(|(k, row)| -> Result<_, String> {
            let pts = seven_rep(&row.arrangement)?;
            cross_wall(&pts, WallSpec::Line(row.triple), SEED + k as u64)
                .map_err(|e| format!("{} {:?}: {e}", row.arrangement, row.triple))
        })
        .collect();
    let mut naming: BTreeMap<Vec<u8>, u8> = BTreeMap::new();
    for (row, c) in rows.iter().zip(crossings) {
        let c = c?;
        let where_ = format!("{} {:?}", row.arrangement, row.triple);
        ensure(c.before == CameraClass::Seven(row.class), format!("{where_}: starts at {}", c.before))?;
        ensure(c.after == CameraClass::Seven(row.across), format!("{where_}: ends at {}", c.after))?;
        let WallDescriptor::Line(l) = c.descriptor else { return Err(format!("{where_}: not a line-wall")) };
        let prev = naming.insert(l.canonical.clone(), row.wall);
        ensure(
            prev.is_none() || prev == Some(row.wall),
            format!("{where_}: wall named both W{} and W{}", row.wall, prev.unwrap_or(0)),
        )?;
    }
    let names: BTreeSet<u8> = naming.values().copied().collect();
    ensure(names.len() == naming.len(), "two wall shapes share a name")?;
    ensure(names == (1..=27).collect(), format!("wall names {names:?}"))?;
    let conic_rows = table_ok(tables::conic_walls(SEED))?;
    let (seq, name) = tables::anchor_sequence(SEED).map_err(err)?;
    ensure(seq == "4, 5, 17, 6, 27, {37,12}, 13, 23", format!("anchor sequence {seq}"))?;
    Ok(format!("{} line-wall rows, 27 names in bijection, {conic_rows} conic-wall rows, anchor {name}", rows.len()))
}

fn c8_graphs() -> Check {
    let g7 = adjacency_graph(7, Stratification::LinesOnly, SEED).map_err(err)?;
    let walls7: BTreeSet<&WallKey> = g7.edges.iter().map(|e| &e.key).collect();
    ensure(
        g7.vertices.len() == 11 && walls7.len() == 27,
        format!("level 7: {} vertices, {} walls", g7.vertices.len(), walls7.len()),
    )?;
    let g6 = adjacency_graph(6, Stratification::LinesOnly, SEED).map_err(err)?;
    let walls6: BTreeSet<&WallKey> = g6.edges.iter().map(|e| &e.key).collect();
    ensure(
        g6.vertices.len() == 4 && walls6.len() == 3,
        format!("level 6: {} vertices, {} walls", g6.vertices.len(), walls6.len()),
    )?;
    let g6c = adjacency_graph(6, Stratification::LinesAndConics, SEED).map_err(err)?;
    let extra: Vec<_> = g6c.edges.difference(&g6.edges).collect();
    let beta = CameraClass::Six(SixClass::Beta);
    ensure(
        extra.len() == 1 && extra[0].a == beta && extra[0].b == beta && g6c.vertices == g6.vertices,
        format!("conics add {extra:?}"),
    )?;
    Ok("11 vertices and 27 walls; 4 vertices and 3 walls; one conic-wall at beta".into())
}

fn c9_refined() -> Check {
    let census = refined_census(SEED).map_err(err)?;
    let mut per_wall: BTreeMap<u8, usize> = BTreeMap::new();
    for code in census.values() {
        let (n, _) = wall_names().iter().find(|(_, c)| c == code).ok_or("refined wall of unnamed shape")?;
        *per_wall.entry(*n).or_default() += 1;
    }
    let tabulated: BTreeSet<u8> = Golden::load().refined_walls.iter().map(|r| r.wall).collect();
    let admitting: usize = tabulated.iter().map(|w| per_wall.get(w).copied().unwrap_or(0)).sum();
    let rest: Vec<usize> = per_wall.iter().filter(|(w, _)| !tabulated.contains(w)).map(|(_, n)| *n).collect();
    ensure(per_wall.len() == 27, format!("{} line-walls met", per_wall.len()))?;
    ensure(
        tabulated.len() == 11 && admitting == 22,
        format!("{} conic-admitting walls split into {admitting}", tabulated.len()),
    )?;
    ensure(rest.len() == 16 && rest.iter().all(|&n| n == 1), format!("other walls split as {rest:?}"))?;
    for (w, n) in [(4, 3), (16, 3), (12, 2), (21, 2), (22, 1)] {
        ensure(per_wall.get(&w) == Some(&n), format!("W{w} splits into {:?}", per_wall.get(&w)))?;
    }
    let rows = table_ok(tables::refined_walls(SEED))?;
    ensure(census.len() == 38, format!("{} refined walls", census.len()))?;
    Ok(format!("38 = {admitting} + {}, {rows} table rows", rest.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> [Vec3; 3] {
    loop {
        let m: [Vec3; 3] = std::array::from_fn(|_| std::array::from_fn(|_| BigInt::from(rng.gen_range(-5..=5))));
        if det3(&m[0], &m[1], &m[2]) != BigInt::from(0) {
            return m;
        }
    }
}

fn apply(m: &[Vec3; 3], pts: &[ProjectivePoint]) -> Vec<ProjectivePoint> {
    pts.iter().map(|p| ProjectivePoint::from_vec(mat_vec(m, p.coords())).expect("invertible")).collect()
}

fn permute(pts: &[ProjectivePoint], perm: &[usize]) -> Vec<ProjectivePoint> {
    perm.iter().map(|&i| pts[i].clone()).collect()
}

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> ProjectivePoint {
    loop {
        let v = [rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)];
        if let Ok(p) = ProjectivePoint::from_ints(v[0], v[1], v[2]) {
            return p;
        }
    }
}

fn line_pencil_word(pts: &[ProjectivePoint], node: usize) -> CyclicWord {
    let others: Vec<usize> = (0..pts.len()).filter(|&i| i != node).collect();
    let params: Vec<_> = others.iter().map(|&i| pencil_direction(pts[node].coords(), pts[i].coords())).collect();
    let order = rp1_cyclic_order(&params).expect("distinct directions");
    CyclicWord::new(&order.iter().map(|&k| others[k] as Label + 1).collect::<Vec<_>>()).expect("distinct labels")
}

fn c10_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cat = Catalog::shipped();
    let sixes: Vec<Vec<ProjectivePoint>> = [SixClass::Beta, SixClass::Delta, SixClass::Gamma, SixClass::Alpha]
        .iter()
        .map(|c| cat.six(*c).points.clone())
        .collect();
    let sevens: Vec<Vec<ProjectivePoint>> =
        cat.of_kind(rp2conf::catalog::EntryKind::Seven).map(|e| e.points.clone()).collect();
    let six_fp: Vec<Fingerprint> = sixes.iter().map(|p| six_fingerprint(p)).collect::<Result<_, _>>().map_err(err)?;
    let seven_fp: Vec<Fingerprint> =
        sevens.iter().map(|p| seven_fingerprint(p)).collect::<Result<_, _>>().map_err(err)?;

    // projective invariance
    let maps: Vec<[Vec3; 3]> = (0..100).map(|_| random_matrix(&mut rng)).collect();
    maps.par_iter().enumerate().try_for_each(|(k, m)| -> Result<(), String> {
        for (p, f) in sixes.iter().zip(&six_fp) {
            ensure(
                six_fingerprint(&apply(m, p)).map_err(err)? == *f,
                format!("map {k} changes a six-point fingerprint"),
            )?;
        }
        let i = k % sevens.len();
        ensure(
            seven_fingerprint(&apply(m, &sevens[i])).map_err(err)? == seven_fp[i],
            format!("map {k} changes a seven-point fingerprint"),
        )
    })?;

    // relabeling invariance
    let perms6 = rp2conf::classify::permutations(6);
    ensure(perms6.len() == 720, "permutation count")?;
    sixes.par_iter().zip(&six_fp).try_for_each(|(p, f)| -> Result<(), String> {
        for perm in &perms6 {
            ensure(
                six_fingerprint(&permute(p, perm)).map_err(err)? == *f,
                format!("relabeling {perm:?} changes a six-point fingerprint"),
            )?;
        }
        Ok(())
    })?;
    let perms7: Vec<(usize, Vec<usize>)> = (0..500)
        .map(|k| {
            let mut v: Vec<usize> = (0..7).collect();
            v.shuffle(&mut rng);
            (k % sevens.len(), v)
        })
        .collect();
    perms7.par_iter().try_for_each(|(i, perm)| -> Result<(), String> {
        let q = permute(&sevens[*i], perm);
        ensure(
            seven_fingerprint(&q).map_err(err)? == seven_fp[*i],
            format!("relabeling {perm:?} changes a seven-point fingerprint"),
        )?;
        ensure(seven_class(&q) == seven_class(&sevens[*i]), "relabeling changes a class")
    })?;

    // scale invariance
    for (i, p) in sevens.iter().enumerate() {
        let scaled: Vec<ProjectivePoint> = p
            .iter()
            .map(|q| {
                let k = BigInt::from(rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 });
                let v: Vec3 = std::array::from_fn(|j| &q.coords()[j] * &k);
                ProjectivePoint::from_vec(v).expect("nonzero")
            })
            .collect();
        ensure(scaled == *p, "scaling changes a point")?;
        ensure(seven_fingerprint(&scaled).map_err(err)? == seven_fp[i], "scaling changes a fingerprint")?;
    }

    // quadratic transformation is an involution
    let mut cremona = 0;
    while cremona < 200 {
        let base = [random_point(&mut rng, 9), random_point(&mut rng, 9), random_point(&mut rng, 9)];
        let p = random_point(&mut rng, 20);
        if collinear(&base[0], &base[1], &base[2])
            || collinear(&base[0], &base[1], &p)
            || collinear(&base[0], &base[2], &p)
            || collinear(&base[1], &base[2], &p)
        {
            continue;
        }
        let q = cremona_transform(&base, &p).map_err(err)?;
        ensure(
            cremona_transform(&base, &q).map_err(err)? == p,
            format!("quadratic transformation not an involution at {p}"),
        )?;
        cremona += 1;
    }

    // every reducible member orders the points as the lines through the node do
    let mut samples: Vec<Vec<ProjectivePoint>> = sixes.clone();
    let mut srng = rp2conf::census::sample_rng(SEED, 0);
    samples.extend((0..200).map(|_| rp2conf::census::generic_sample(6, 50, &mut srng).0));
    samples.par_iter().try_for_each(|pts| -> Result<(), String> {
        for node in 0..6 {
            let pencil = combinatorial_pencil(pts, node as Label + 1).map_err(err)?;
            let lines = line_pencil_word(pts, node);
            for m in pencil.members() {
                let on_conic = m.conic.restrict(|l| l != m.node);
                let on_lines = lines.restrict(|l| l != m.m);
                ensure(on_conic == on_lines, format!("member {m} disagrees with the line pencil {lines}"))?;
            }
        }
        Ok(())
    })?;

    // a line-wall changes four sub-configurations and three cubics
    let rows = &Golden::load().line_walls;
    rows.par_iter().enumerate().try_for_each(|(k, row)| -> Result<(), String> {
        let c = cross_wall(&seven_rep(&row.arrangement)?, WallSpec::Line(row.triple), SEED + k as u64).map_err(err)?;
        let a = seven_data(&c.near).map_err(err)?;
        let b = seven_data(&c.far).map_err(err)?;
        let t: Vec<usize> = row.triple.iter().map(|&l| l as usize - 1).collect();
        for p in 0..7 {
            let changed = a.sub_fingerprints[p] != b.sub_fingerprints[p];
            ensure(
                changed == !t.contains(&p),
                format!("{} {:?}: sub-configuration without {} changed={changed}", row.arrangement, row.triple, p + 1),
            )?;
            let changed = a.descriptors[p] != b.descriptors[p];
            ensure(
                changed == t.contains(&p),
                format!("{} {:?}: cubic at {} changed={changed}", row.arrangement, row.triple, p + 1),
            )?;
        }
        Ok(())
    })?;

    Ok(format!(
        "100 maps, 720 and 500 relabelings, scaling, 200 quadratic involutions, {} pencil samples, {} crossings",
        samples.len(),
        rows.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("seven pencils of cubics", c1_cubic_pencils),
        ("seven pencils of conics and pullbacks", c2_conic_pencils),
        ("four six-point configurations", c3_six_points),
        ("six-point adjacencies", c4_six_adjacency),
        ("fourteen seven-point configurations", c5_seven_points),
        ("eleven coconic configurations", c6_coconic),
        ("line-wall and conic-wall adjacencies", c7_walls),
        ("chamber and wall counts", c8_graphs),
        ("38 refined line-walls", c9_refined),
        ("property suites", c10_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1} s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
