//! Cyclic sequences up to rotation and reversal, and cyclic order on the
//! real projective line.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Lexicographically minimal rotation over both orientations.
pub fn dihedral_min<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    let mut best: Option<Vec<T>> = None;
    for rev in [false, true] {
        for start in 0..n.max(1) {
            let cand: Vec<T> = (0..n)
                .map(|i| {
                    let k = if rev { (start + n - i) % n } else { (start + i) % n };
                    seq[k].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// All `2n` rotations/reversals of a sequence.
pub fn dihedral_variants<T: Clone>(seq: &[T]) -> Vec<Vec<T>> {
    let n = seq.len();
    let mut out = Vec::with_capacity(2 * n);
    for rev in [false, true] {
        for start in 0..n {
            out.push(
                (0..n)
                    .map(|i| {
                        let k = if rev { (start + n - i) % n } else { (start + i) % n };
                        seq[k].clone()
                    })
                    .collect(),
            );
        }
    }
    out
}

/// Canonical form of a cyclic sequence of distinct small labels: start at
/// the minimum and walk towards the smaller neighbour.
pub fn canonical_distinct(seq: &[u8]) -> Vec<u8> {
    let n = seq.len();
    if n < 3 {
        let mut v = seq.to_vec();
        v.sort_unstable();
        return v;
    }
    let (start, _) = seq.iter().enumerate().min_by_key(|(_, x)| **x).unwrap();
    let fwd = seq[(start + 1) % n];
    let bwd = seq[(start + n - 1) % n];
    (0..n).map(|i| if fwd <= bwd { seq[(start + i) % n] } else { seq[(start + n - i) % n] }).collect()
}

/// A sequence of distinct point labels up to rotation and reversal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<u8>);

impl CyclicWord {
    pub fn new(labels: &[u8]) -> Result<Self> {
        let mut seen = 0u64;
        for &l in labels {
            if l >= 64 || seen & (1 << l) != 0 {
                return Err(Error::BadLabel(l));
            }
            seen |= 1 << l;
        }
        Ok(CyclicWord(canonical_distinct(labels)))
    }

    /// Parses a compact word such as `25364`.
    pub fn parse(s: &str) -> Result<Self> {
        let labels: Option<Vec<u8>> = s.trim().chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        let labels = labels.ok_or(Error::Parse { line: 0, msg: format!("bad word {s:?}") })?;
        CyclicWord::new(&labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: u8) -> bool {
        self.0.contains(&l)
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> CyclicWord {
        let v: Vec<u8> = self.0.iter().map(|&l| f(l)).collect();
        CyclicWord(canonical_distinct(&v))
    }

    /// Restriction to the labels satisfying `keep`, in the induced cyclic order.
    pub fn restrict(&self, keep: impl Fn(u8) -> bool) -> CyclicWord {
        let v: Vec<u8> = self.0.iter().copied().filter(|&l| keep(l)).collect();
        CyclicWord(canonical_distinct(&v))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A point `(a:b)` of the real projective line.
#[derive(Clone, Debug)]
pub struct Rp1 {
    pub a: BigInt,
    pub b: BigInt,
}

impl Rp1 {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        // b >= 0, and (1:0)-type points get a > 0
        if b.is_negative() || (b.is_zero() && a.is_negative()) {
            Rp1 { a: -a, b: -b }
        } else {
            Rp1 { a, b }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn same(&self, o: &Rp1) -> bool {
        (&self.a * &o.b - &o.a * &self.b).is_zero()
    }

    /// Linear order on the affine parameter `a/b`, with infinity last.
    pub fn cmp_affine(&self, o: &Rp1) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, true) => Equal,
            (true, false) => Greater,
            (false, true) => Less,
            (false, false) => (&self.a * &o.b).cmp(&(&o.a * &self.b)),
        }
    }
}

/// Indices sorted along the projective line, i.e. one reading of the
/// cyclic order. Returns the first pair of coincident parameters on failure.
pub fn rp1_cyclic_order(params: &[Rp1]) -> std::result::Result<Vec<usize>, (usize, usize)> {
    let mut idx: Vec<usize> = (0..params.len()).collect();
    idx.sort_by(|&i, &j| params[i].cmp_affine(&params[j]));
    for w in idx.windows(2) {
        if params[w[0]].same(&params[w[1]]) {
            return Err((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_identifies_rotation_and_reversal() {
        let a = CyclicWord::parse("25364").unwrap();
        assert_eq!(a, CyclicWord::parse("53642").unwrap());
        assert_eq!(a, CyclicWord::parse("46352").unwrap());
        assert_ne!(a, CyclicWord::parse("23564").unwrap());
        assert_eq!(a.labels(), &[2, 4, 6, 3, 5]);
    }

    #[test]
    fn three_letter_words_all_equal() {
        assert_eq!(CyclicWord::new(&[3, 1, 2]).unwrap(), CyclicWord::new(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn repeated_label_rejected() {
        assert!(CyclicWord::new(&[1, 2, 1]).is_err());
    }

    #[test]
    fn canonical_distinct_matches_dihedral_min() {
        let perms = [[4u8, 1, 3, 0, 2], [2, 0, 1, 4, 3], [0, 4, 3, 2, 1]];
        for p in perms {
            assert_eq!(canonical_distinct(&p), dihedral_min(&p));
        }
    }

    #[test]
    fn rp1_sorting_puts_infinity_last() {
        let ps = vec![
            Rp1::new(BigInt::from(1), BigInt::from(0)),
            Rp1::new(BigInt::from(-3), BigInt::from(-1)),
            Rp1::new(BigInt::from(-1), BigInt::from(2)),
        ];
        assert_eq!(rp1_cyclic_order(&ps).unwrap(), vec![2, 1, 0]);
        let dup = vec![Rp1::new(BigInt::from(2), BigInt::from(4)), Rp1::new(BigInt::from(-1), BigInt::from(-2))];
        assert_eq!(rp1_cyclic_order(&dup), Err((0, 1)));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn dihedral_min_ignores_rotation_and_reversal(v in proptest::collection::vec(0u8..6, 1..9), r in 0usize..9, flip: bool) {
            let mut w = v.clone();
            w.rotate_left(r % v.len());
            if flip {
                w.reverse();
            }
            prop_assert_eq!(dihedral_min(&w), dihedral_min(&v));
        }

        #[test]
        fn words_match_up_to_symmetry(perm in Just((1u8..=7).collect::<Vec<_>>()).prop_shuffle(), r in 0usize..7) {
            let mut w = perm.clone();
            w.rotate_left(r);
            w.reverse();
            prop_assert_eq!(CyclicWord::new(&w).unwrap(), CyclicWord::new(&perm).unwrap());
        }
    }
}
