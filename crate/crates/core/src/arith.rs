//! Integer vector helpers shared by the projective kernel.
//!
//! Homogeneous objects are stored as primitive integer vectors; every
//! rational input is cleared of denominators on construction, so the
//! predicates below never divide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, canonical (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

pub type Vec3 = [BigInt; 3];

pub fn vec3(a: i64, b: i64, c: i64) -> Vec3 {
    [BigInt::from(a), BigInt::from(b), BigInt::from(c)]
}

pub fn dot(a: &Vec3, b: &Vec3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> BigInt {
    dot(a, &cross(b, c))
}

pub fn is_zero(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn scale(k: &BigInt, a: &Vec3) -> Vec3 {
    [k * &a[0], k * &a[1], k * &a[2]]
}

pub fn neg(a: &Vec3) -> Vec3 {
    [-&a[0], -&a[1], -&a[2]]
}

/// `ka * a + kb * b`.
pub fn lin2(ka: &BigInt, a: &Vec3, kb: &BigInt, b: &Vec3) -> Vec3 {
    [ka * &a[0] + kb * &b[0], ka * &a[1] + kb * &b[1], ka * &a[2] + kb * &b[2]]
}

/// Two vectors are projectively equal iff their cross product vanishes.
pub fn proj_eq(a: &Vec3, b: &Vec3) -> bool {
    is_zero(&cross(a, b))
}

pub fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for x in it {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide by the content and make the first nonzero entry positive.
pub fn primitive<const N: usize>(mut v: [BigInt; N]) -> [BigInt; N] {
    let g = gcd_all(v.iter());
    if g.is_zero() {
        return v;
    }
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if flip {
            *x = -&*x;
        }
    }
    v
}

/// Divide by the content only, keeping the sign.
pub fn remove_content(v: &mut [BigInt]) {
    let g = gcd_all(v.iter());
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Clear denominators of a rational vector.
pub fn integer_vector<const N: usize>(v: &[Rational; N]) -> [BigInt; N] {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: [BigInt; N] = std::array::from_fn(|_| BigInt::zero());
    for (o, x) in out.iter_mut().zip(v) {
        *o = x.numer() * (&l / x.denom());
    }
    out
}

/// Sign as -1, 0, 1.
pub fn sgn(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of a rational.
pub fn sgn_q(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `adj(M)` where `M` has columns `a, b, c`; `adj(M) * M = det(M) * I`.
pub fn adjugate_of_columns(a: &Vec3, b: &Vec3, c: &Vec3) -> [Vec3; 3] {
    // rows of adj(M) are the cross products of pairs of columns
    [cross(b, c), cross(c, a), cross(a, b)]
}

/// `rows * v` for a matrix given by rows.
pub fn mat_vec(rows: &[Vec3; 3], v: &Vec3) -> Vec3 {
    [dot(&rows[0], v), dot(&rows[1], v), dot(&rows[2], v)]
}

/// `[a b c] * v`, the matrix given by columns.
pub fn cols_vec(a: &Vec3, b: &Vec3, c: &Vec3, v: &Vec3) -> Vec3 {
    [
        &a[0] * &v[0] + &b[0] * &v[1] + &c[0] * &v[2],
        &a[1] * &v[0] + &b[1] * &v[1] + &c[1] * &v[2],
        &a[2] * &v[0] + &b[2] * &v[1] + &c[2] * &v[2],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_normalizes_sign_and_content() {
        assert_eq!(primitive(vec3(-4, 6, 0)), vec3(2, -3, 0));
        assert_eq!(primitive(vec3(0, 0, -7)), vec3(0, 0, 1));
    }

    #[test]
    fn adjugate_inverts() {
        let (a, b, c) = (vec3(1, 2, 0), vec3(0, 1, 3), vec3(2, 0, 1));
        let adj = adjugate_of_columns(&a, &b, &c);
        let d = det3(&a, &b, &c);
        for (i, col) in [a, b, c].iter().enumerate() {
            let r = mat_vec(&adj, col);
            for (j, x) in r.iter().enumerate() {
                let want = if i == j { d.clone() } else { BigInt::zero() };
                assert_eq!(*x, want);
            }
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn primitive_is_scale_free(v in proptest::array::uniform3(-1000i64..1000), k in -50i64..50) {
            prop_assume!(k != 0 && v != [0, 0, 0]);
            let a = vec3(v[0], v[1], v[2]);
            let b = scale(&BigInt::from(k), &a);
            prop_assert_eq!(primitive(b), primitive(a));
        }

        #[test]
        fn cross_is_orthogonal(a in proptest::array::uniform3(-99i64..99), b in proptest::array::uniform3(-99i64..99)) {
            let (a, b) = (vec3(a[0], a[1], a[2]), vec3(b[0], b[1], b[2]));
            let c = cross(&a, &b);
            prop_assert!(dot(&a, &c).is_zero() && dot(&b, &c).is_zero());
        }
    }
}
