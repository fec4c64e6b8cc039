//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::remove_content;

/// Determinant by Bareiss elimination.
pub fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Row reduction keeping every row primitive. Returns the pivot columns;
/// rows `0..pivots.len()` of `m` are reduced so that each pivot column has a
/// single nonzero entry.
fn reduce(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        remove_content(&mut m[r]);
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let g = m[i][c].gcd(&m[r][c]);
            let a = &m[r][c] / &g;
            let b = &m[i][c] / &g;
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            remove_content(&mut m[i]);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    reduce(&mut m).len()
}

/// Integer basis of the right null space.
pub fn nullspace(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let pivots = reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let l = pivots.iter().enumerate().fold(BigInt::one(), |acc, (r, &c)| acc.lcm(&m[r][c]));
        let mut v = vec![BigInt::zero(); cols];
        v[f] = l.clone();
        for (r, &c) in pivots.iter().enumerate() {
            // m[r][c] * v[c] + m[r][f] * v[f] = 0
            v[c] = -(&m[r][f] * &l) / &m[r][c];
        }
        remove_content(&mut v);
        out.push(v);
    }
    out
}
