//! Reproducible random censuses. Sample `i` draws from its own stream of a
//! generator seeded by `seed`, so results do not depend on thread count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{det3, mat_vec, Vec3};
use crate::classify::{seven_class, seven_fingerprint, six_class, six_fingerprint};
use crate::crossing::events;
use crate::error::{Error, Result};
use crate::projective::ProjectivePoint;
use crate::walls::{admissible_diagrams, all_unmarked_diagrams, conic_diagram, conic_wall_class, Degeneracy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    /// Coordinates are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 1, samples: 1000, bound: 50, jobs: 0 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::Parse { line: 0, msg: "samples must be at least 1".into() });
        }
        if self.bound < 2 {
            return Err(Error::Parse { line: 0, msg: "bound must be at least 2".into() });
        }
        Ok(())
    }
}

/// What each sample is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusKind {
    Six,
    Seven,
    /// Six points on a conic and a free seventh point.
    Coconic,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub samples: usize,
    /// Class name to count.
    pub histogram: BTreeMap<String, usize>,
    /// Samples matching no known class.
    pub unknown: usize,
    /// Draws rejected for degeneracy before a usable sample was found.
    pub rejected: usize,
    /// Coconic samples whose conic-diagram is outside the realizable set.
    pub excluded_diagrams: usize,
}

impl CensusReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "samples {}\nclasses {}\nunknown {}\nrejected {}\n",
            self.samples,
            self.histogram.len(),
            self.unknown,
            self.rejected
        );
        if self.excluded_diagrams > 0 {
            s.push_str(&format!("excluded diagrams {}\n", self.excluded_diagrams));
        }
        for (k, v) in &self.histogram {
            s.push_str(&format!("{k} {v}\n"));
        }
        s
    }
}

/// Generator for sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

fn random_vec(rng: &mut ChaCha8Rng, bound: i64) -> Vec3 {
    loop {
        let v: Vec3 = std::array::from_fn(|_| BigInt::from(rng.gen_range(-bound..=bound)));
        if !crate::arith::is_zero(&v) {
            return v;
        }
    }
}

fn points(v: Vec<Vec3>) -> Vec<ProjectivePoint> {
    v.into_iter().map(|x| ProjectivePoint::from_vec(x).expect("nonzero")).collect()
}

/// Generic points drawn by rejection; returns them with the rejection count.
pub fn generic_sample(n: usize, bound: i64, rng: &mut ChaCha8Rng) -> (Vec<ProjectivePoint>, usize) {
    let mut rejected = 0;
    loop {
        let v: Vec<Vec3> = (0..n).map(|_| random_vec(rng, bound)).collect();
        if events(&v).is_empty() {
            return (points(v), rejected);
        }
        rejected += 1;
    }
}

/// Six points on a random conic, labeled `1..6`, and a seventh point off
/// it, such that nothing else degenerates.
pub fn coconic_sample(bound: i64, rng: &mut ChaCha8Rng) -> (Vec<ProjectivePoint>, usize) {
    let mut rejected = 0;
    loop {
        let m: [Vec3; 3] = std::array::from_fn(|_| random_vec(rng, 3));
        if det3(&m[0], &m[1], &m[2]) == BigInt::from(0) {
            rejected += 1;
            continue;
        }
        let mut v: Vec<Vec3> = (0..6)
            .map(|_| {
                let p = BigInt::from(rng.gen_range(-bound..=bound));
                let q = BigInt::from(rng.gen_range(1..=bound));
                let circle: Vec3 = [&q * &q - &p * &p, BigInt::from(2) * &p * &q, &q * &q + &p * &p];
                crate::arith::primitive(mat_vec(&m, &circle))
            })
            .collect();
        v.push(random_vec(rng, bound));
        let pts = points(v);
        if crate::walls::degeneracy_detect(&pts) == Degeneracy::CoconicSextuple([1, 2, 3, 4, 5, 6]) {
            return (pts, rejected);
        }
        rejected += 1;
    }
}

enum Outcome {
    Class(String),
    Unknown(String),
    Excluded(String),
}

fn run_one(kind: CensusKind, cfg: &RunConfig, index: u64) -> (Outcome, usize) {
    let mut rng = sample_rng(cfg.seed, index);
    match kind {
        CensusKind::Six => {
            let (p, rej) = generic_sample(6, cfg.bound, &mut rng);
            let o = match six_class(&p) {
                Ok(c) => Outcome::Class(c.greek().to_string()),
                Err(_) => Outcome::Unknown(six_fingerprint(&p).map(|f| f.hex()).unwrap_or_default()),
            };
            (o, rej)
        }
        CensusKind::Seven => {
            let (p, rej) = generic_sample(7, cfg.bound, &mut rng);
            let o = match seven_class(&p) {
                Ok(c) => Outcome::Class(c.compact()),
                Err(_) => Outcome::Unknown(seven_fingerprint(&p).map(|f| f.hex()).unwrap_or_default()),
            };
            (o, rej)
        }
        CensusKind::Coconic => {
            let (p, rej) = coconic_sample(cfg.bound, &mut rng);
            let o = match conic_wall_class(&p) {
                Ok(c) => Outcome::Class(c.letter.to_string()),
                Err(Error::NonRealizableDiagram) => {
                    Outcome::Excluded(conic_diagram(&p).map(|d| d.0.to_string()).unwrap_or_default())
                }
                Err(_) => Outcome::Unknown(conic_diagram(&p).map(|d| d.0.to_string()).unwrap_or_default()),
            };
            (o, rej)
        }
    }
}

/// Runs a census; the report is identical for any thread count.
pub fn census(kind: CensusKind, cfg: &RunConfig) -> Result<CensusReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    let outcomes: Vec<(Outcome, usize)> =
        pool.install(|| (0..cfg.samples as u64).into_par_iter().map(|i| run_one(kind, cfg, i)).collect());
    let mut r = CensusReport { samples: cfg.samples, ..Default::default() };
    for (o, rej) in outcomes {
        r.rejected += rej;
        match o {
            Outcome::Class(c) => *r.histogram.entry(c).or_default() += 1,
            Outcome::Unknown(f) => {
                r.unknown += 1;
                *r.histogram.entry(format!("unknown {f}")).or_default() += 1;
            }
            Outcome::Excluded(d) => {
                r.excluded_diagrams += 1;
                *r.histogram.entry(format!("excluded {d}")).or_default() += 1;
            }
        }
    }
    Ok(r)
}

/// The unmarked conic-diagrams no configuration realizes.
pub fn non_realizable_diagrams() -> Vec<Vec<u8>> {
    let (i, o) = admissible_diagrams();
    all_unmarked_diagrams().into_iter().filter(|d| !i.contains(d) && !o.contains(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_of_order() {
        let a: Vec<u64> = (0..4).map(|i| sample_rng(7, i).gen()).collect();
        let b: Vec<u64> = (0..4).rev().map(|i| sample_rng(7, i).gen()).collect();
        assert_eq!(a, b.into_iter().rev().collect::<Vec<_>>());
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn census_is_deterministic_across_thread_counts() {
        let c1 = RunConfig { seed: 3, samples: 40, bound: 20, jobs: 1 };
        let c4 = RunConfig { jobs: 4, ..c1 };
        assert_eq!(census(CensusKind::Six, &c1).unwrap(), census(CensusKind::Six, &c4).unwrap());
    }

    #[test]
    fn coconic_samples_are_on_one_wall() {
        let mut rng = sample_rng(5, 0);
        for _ in 0..5 {
            let (p, _) = coconic_sample(30, &mut rng);
            assert!(conic_wall_class(&p).is_ok());
        }
    }

    #[test]
    fn four_non_realizable_shapes() {
        assert_eq!(non_realizable_diagrams().len(), 4);
    }

    #[test]
    fn bad_config_rejected() {
        assert!(RunConfig { samples: 0, ..Default::default() }.validate().is_err());
        assert!(RunConfig { bound: 1, ..Default::default() }.validate().is_err());
    }
}
