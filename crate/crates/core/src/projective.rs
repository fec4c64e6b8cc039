//! Exact projective plane: points, lines, conics and the predicates the
//! classification is built from.
//!
//! Everything is stored as primitive integer vectors, so equality of
//! objects is equality up to a nonzero rational scalar.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, cross, det3, dot, integer_vector, primitive, sgn, Rational, Vec3};
use crate::cyclic::{rp1_cyclic_order, CyclicWord, Rp1};
use crate::error::{Error, Result};
use crate::linalg;

/// Point label; points are numbered from 1 in input order.
pub type Label = u8;

macro_rules! homogeneous {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
        pub struct $name {
            c: Vec3,
        }

        impl $name {
            pub fn new(x0: Rational, x1: Rational, x2: Rational) -> Result<Self> {
                Self::from_vec(integer_vector(&[x0, x1, x2]))
            }

            pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Result<Self> {
                Self::from_vec(arith::vec3(x0, x1, x2))
            }

            pub fn from_vec(v: Vec3) -> Result<Self> {
                if arith::is_zero(&v) {
                    return Err(Error::ZeroVector);
                }
                Ok($name { c: primitive(v) })
            }

            /// Primitive integer representative.
            pub fn coords(&self) -> &Vec3 {
                &self.c
            }

            pub fn to_rationals(&self) -> [Rational; 3] {
                std::array::from_fn(|i| Rational::from_integer(self.c[i].clone()))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}:{}:{})", self.c[0], self.c[1], self.c[2])
            }
        }
    };
}

homogeneous!(ProjectivePoint);
homogeneous!(ProjectiveLine);

impl ProjectivePoint {
    pub fn lies_on(&self, l: &ProjectiveLine) -> bool {
        dot(&self.c, &l.c).is_zero()
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    /// Three integers or rationals separated by whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse { line: 0, msg: format!("expected 3 coordinates, got {}", parts.len()) });
        }
        let mut q = Vec::with_capacity(3);
        for p in parts {
            q.push(parse_rational(p)?);
        }
        let [a, b, c]: [Rational; 3] = q.try_into().unwrap();
        ProjectivePoint::new(a, b, c)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse { line: 0, msg: format!("bad rational {s:?}") };
    // `BigInt::from_str` would accept `+`-prefixed or empty pieces inconsistently
    let ok = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.len() <= 4096 && t.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            if !ok(n) || !ok(d) || d.starts_with('-') {
                return Err(bad());
            }
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            if !ok(s) {
                return Err(bad());
            }
            Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
        }
    }
}

pub fn collinear(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> bool {
    det3(&p.c, &q.c, &r.c).is_zero()
}

pub fn line_through(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectiveLine> {
    ProjectiveLine::from_vec(cross(&p.c, &q.c)).map_err(|_| Error::IdenticalInputs)
}

pub fn meet(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<ProjectivePoint> {
    ProjectivePoint::from_vec(cross(&l1.c, &l2.c)).map_err(|_| Error::IdenticalInputs)
}

/// Position of a point relative to a signature-normalized conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Interior,
    On,
    Exterior,
}

impl Side {
    pub fn from_sign(s: i8) -> Side {
        match s {
            -1 => Side::Interior,
            0 => Side::On,
            _ => Side::Exterior,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Side::Interior => '<',
            Side::On => '=',
            Side::Exterior => '>',
        }
    }
}

/// Ternary quadratic form
/// `c0 x0² + c1 x1² + c2 x2² + c3 x0x1 + c4 x0x2 + c5 x1x2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicForm {
    coef: [BigInt; 6],
    normalized: bool,
}

impl ConicForm {
    pub fn from_coefficients(coef: [BigInt; 6]) -> Self {
        ConicForm { coef, normalized: false }
    }

    /// Product of two linear forms.
    pub fn from_line_pair(a: &Vec3, b: &Vec3) -> Self {
        ConicForm::from_coefficients(line_product(a, b))
    }

    pub fn coefficients(&self) -> &[BigInt; 6] {
        &self.coef
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn eval(&self, p: &Vec3) -> BigInt {
        let c = &self.coef;
        let [x, y, z] = p;
        &c[0] * x * x + &c[1] * y * y + &c[2] * z * z + &c[3] * x * y + &c[4] * x * z + &c[5] * y * z
    }

    /// `2 B(p, q)` for the symmetric bilinear form with `B(p, p) = Q(p)`.
    pub fn polar2(&self, p: &Vec3, q: &Vec3) -> BigInt {
        dot(&self.gradient(p), q)
    }

    /// Gradient, i.e. `2 M p` for the symmetric matrix `M`.
    pub fn gradient(&self, p: &Vec3) -> Vec3 {
        let c = &self.coef;
        let [x, y, z] = p;
        [
            BigInt::from(2) * &c[0] * x + &c[3] * y + &c[4] * z,
            &c[3] * x + BigInt::from(2) * &c[1] * y + &c[5] * z,
            &c[4] * x + &c[5] * y + BigInt::from(2) * &c[2] * z,
        ]
    }

    /// `det(2M) = 8 det(M)`.
    pub fn det2(&self) -> BigInt {
        let c = &self.coef;
        let two = BigInt::from(2);
        let rows = [
            [&two * &c[0], c[3].clone(), c[4].clone()],
            [c[3].clone(), &two * &c[1], c[5].clone()],
            [c[4].clone(), c[5].clone(), &two * &c[2]],
        ];
        det3(&rows[0], &rows[1], &rows[2])
    }

    /// Primitive representative with `det < 0`.
    pub fn normalize(&self) -> Result<ConicForm> {
        let d = self.det2();
        if d.is_zero() {
            return Err(Error::DegenerateConic);
        }
        let mut coef = primitive(self.coef.clone());
        // primitive() fixes the sign of the leading coefficient; the
        // determinant sign is what we actually want to pin
        let d = ConicForm::from_coefficients(coef.clone()).det2();
        if d.is_positive() {
            coef = coef.map(|x| -x);
        }
        Ok(ConicForm { coef, normalized: true })
    }
}

impl fmt::Display for ConicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coef;
        write!(f, "[{} {} {} {} {} {}]", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

/// Coefficients of `(a·x)(b·x)`.
pub fn line_product(a: &Vec3, b: &Vec3) -> [BigInt; 6] {
    [
        &a[0] * &b[0],
        &a[1] * &b[1],
        &a[2] * &b[2],
        &a[0] * &b[1] + &a[1] * &b[0],
        &a[0] * &b[2] + &a[2] * &b[0],
        &a[1] * &b[2] + &a[2] * &b[1],
    ]
}

/// Degree-2 monomials in the coefficient order of [`ConicForm`].
pub fn conic_monomials(p: &Vec3) -> [BigInt; 6] {
    let [x, y, z] = p;
    [x * x, y * y, z * z, x * y, x * z, y * z]
}

/// Conic through five points in general position, signature-normalized.
///
/// Uses the bracket identity `[12x][34x][135][245] - [13x][24x][125][345]`.
pub fn conic_through_five(points: &[ProjectivePoint]) -> Result<ConicForm> {
    if points.len() != 5 {
        return Err(Error::WrongArity { expected: "5", got: points.len() });
    }
    let p: Vec<&Vec3> = points.iter().map(|q| &q.c).collect();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                if det3(p[i], p[j], p[k]).is_zero() {
                    return Err(Error::DegenerateConic);
                }
            }
        }
    }
    conic_through_five_raw(p[0], p[1], p[2], p[3], p[4]).normalize()
}

/// Bracket form without genericity checks or normalization.
pub fn conic_through_five_raw(p1: &Vec3, p2: &Vec3, p3: &Vec3, p4: &Vec3, p5: &Vec3) -> ConicForm {
    let a = det3(p1, p3, p5) * det3(p2, p4, p5);
    let b = det3(p1, p2, p5) * det3(p3, p4, p5);
    let t1 = line_product(&cross(p1, p2), &cross(p3, p4));
    let t2 = line_product(&cross(p1, p3), &cross(p2, p4));
    let coef: [BigInt; 6] = std::array::from_fn(|i| &a * &t1[i] - &b * &t2[i]);
    ConicForm::from_coefficients(coef)
}

pub fn conic_side(c: &ConicForm, p: &ProjectivePoint) -> Result<Side> {
    if !c.normalized {
        return Err(Error::NotNormalized);
    }
    Ok(Side::from_sign(sgn(&c.eval(&p.c))))
}

/// Pencil coordinate of `p` among the lines through `center`.
pub fn pencil_direction(center: &Vec3, p: &Vec3) -> Rp1 {
    let k = (0..3).find(|&k| !center[k].is_zero()).unwrap();
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    Rp1::new(&p[i] * &center[k] - &center[i] * &p[k], &p[j] * &center[k] - &center[j] * &p[k])
}

/// Labels of `points` in the cyclic order of the lines joining them to `center`.
pub fn cyclic_order_in_line_pencil(
    center: &ProjectivePoint,
    points: &[(Label, ProjectivePoint)],
) -> Result<CyclicWord> {
    let mut params = Vec::with_capacity(points.len());
    for (l, p) in points {
        if p == center {
            return Err(Error::CoincidentWithCenter(*l));
        }
        params.push(pencil_direction(&center.c, &p.c));
    }
    let order = rp1_cyclic_order(&params).map_err(|(i, j)| Error::SharedDirection(points[i].0, points[j].0))?;
    CyclicWord::new(&order.iter().map(|&i| points[i].0).collect::<Vec<_>>())
}

/// Labels in the order they occur along the conic, computed by projecting
/// the conic from the first point onto its pencil of lines.
pub fn cyclic_order_on_conic(c: &ConicForm, points: &[(Label, ProjectivePoint)]) -> Result<CyclicWord> {
    if points.len() < 3 {
        return Err(Error::WrongArity { expected: ">= 3", got: points.len() });
    }
    for (l, p) in points {
        if !c.eval(&p.c).is_zero() {
            return Err(Error::PointNotOnConic(*l));
        }
    }
    let vecs: Vec<&Vec3> = points.iter().map(|(_, p)| &p.c).collect();
    let labels: Vec<Label> = points.iter().map(|(l, _)| *l).collect();
    cyclic_order_on_conic_raw(c, &vecs, &labels)
}

pub(crate) fn cyclic_order_on_conic_raw(c: &ConicForm, pts: &[&Vec3], labels: &[Label]) -> Result<CyclicWord> {
    let center = pts[0];
    let tangent = c.gradient(center);
    if arith::is_zero(&tangent) {
        return Err(Error::DegenerateConic);
    }
    // a second point on the tangent line
    let on_tangent = cross(&tangent, center);
    let mut params = Vec::with_capacity(pts.len());
    params.push(pencil_direction(center, &on_tangent));
    for p in &pts[1..] {
        params.push(pencil_direction(center, p));
    }
    let order = rp1_cyclic_order(&params).map_err(|(i, j)| Error::SharedDirection(labels[i], labels[j]))?;
    CyclicWord::new(&order.iter().map(|&i| labels[i]).collect::<Vec<_>>())
}

/// Quadratic transformation with the given base triangle: in coordinates
/// where the base points are the standard frame it is
/// `(x0:x1:x2) -> (x1x2 : x0x2 : x0x1)`.
pub fn cremona_transform(base: &[ProjectivePoint; 3], p: &ProjectivePoint) -> Result<ProjectivePoint> {
    let (a, b, c) = (&base[0].c, &base[1].c, &base[2].c);
    if det3(a, b, c).is_zero() {
        return Err(Error::CollinearBase);
    }
    if base.iter().any(|q| q == p) {
        return Err(Error::BasePointInput);
    }
    let y = cremona_frame(base, &p.c);
    ProjectivePoint::from_vec(arith::cols_vec(a, b, c, &y)).map_err(|_| Error::BasePointInput)
}

/// Image of `p` in frame coordinates (base points at the standard frame).
pub(crate) fn cremona_frame(base: &[ProjectivePoint; 3], p: &Vec3) -> Vec3 {
    let adj = arith::adjugate_of_columns(&base[0].c, &base[1].c, &base[2].c);
    let y = arith::mat_vec(&adj, p);
    [&y[1] * &y[2], &y[0] * &y[2], &y[0] * &y[1]]
}

/// First line of a fixed candidate list that avoids every point.
pub fn find_chart_line(points: &[ProjectivePoint]) -> ProjectiveLine {
    for cand in chart_candidates() {
        if points.iter().all(|p| !dot(&cand, &p.c).is_zero()) {
            return ProjectiveLine::from_vec(cand).unwrap();
        }
    }
    unreachable!("finitely many points cannot meet every candidate line")
}

/// Coordinate lines, then `a0x0+a1x1+a2x2` with growing integer height.
fn chart_candidates() -> impl Iterator<Item = Vec3> {
    let coord = (0..3).map(|i| {
        let mut v = arith::vec3(0, 0, 0);
        v[2 - i] = BigInt::one();
        v
    });
    let rest = (1i64..).flat_map(|h| {
        let mut v = Vec::new();
        for a in -h..=h {
            for b in -h..=h {
                for c in 1..=h {
                    if a.abs().max(b.abs()).max(c) == h {
                        v.push(arith::vec3(a, b, c));
                    }
                }
            }
        }
        v
    });
    coord.chain(rest)
}

/// Orientation of three points in the affine chart complementary to `chart`.
fn chart_orientation(chart: &Vec3, p: &Vec3, q: &Vec3, r: &Vec3) -> i8 {
    sgn(&det3(p, q, r)) * sgn(&dot(chart, p)) * sgn(&dot(chart, q)) * sgn(&dot(chart, r))
}

/// Convex position of the points in the affine chart missing `chart`.
pub fn convex_position_in_chart(points: &[ProjectivePoint], chart: &ProjectiveLine) -> Result<bool> {
    for (i, p) in points.iter().enumerate() {
        if dot(&chart.c, &p.c).is_zero() {
            return Err(Error::ChartThroughPoint(i as Label + 1));
        }
    }
    let v: Vec<&Vec3> = points.iter().map(|p| &p.c).collect();
    let h = &chart.c;
    let n = v.len();
    for d in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let o = chart_orientation(h, v[a], v[b], v[c]);
                    if o == 0 {
                        continue;
                    }
                    let inside = chart_orientation(h, v[a], v[b], v[d]) == o
                        && chart_orientation(h, v[b], v[c], v[d]) == o
                        && chart_orientation(h, v[c], v[a], v[d]) == o;
                    if inside {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Convex position in some affine chart. One chart line is tried near every
/// vertex `ij` of the dual arrangement, in each of the four adjacent cells.
pub fn convex_position_projective(points: &[ProjectivePoint]) -> bool {
    let n = points.len();
    let v: Vec<&Vec3> = points.iter().map(|p| &p.c).collect();
    for i in 0..n {
        for j in i + 1..n {
            let base = cross(v[i], v[j]);
            // directions separating p_i and p_j from the line
            let gi = cross(v[j], &arith::add(v[i], &arith::vec3(1, 2, 3)));
            let gj = cross(v[i], &arith::add(v[j], &arith::vec3(3, 1, 2)));
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut eps_den = BigInt::from(4);
                    for _ in 0..80 {
                        let cand = arith::add(
                            &arith::scale(&eps_den, &base),
                            &arith::add(&arith::scale(&BigInt::from(si), &gi), &arith::scale(&BigInt::from(sj), &gj)),
                        );
                        let keeps = (0..n).all(|k| {
                            let now = sgn(&dot(&cand, v[k]));
                            now != 0 && (k == i || k == j || now == sgn(&dot(&base, v[k])) * sgn(&eps_den))
                        });
                        if keeps {
                            let chart = ProjectiveLine::from_vec(cand).unwrap();
                            if convex_position_in_chart(points, &chart).unwrap_or(false) {
                                return true;
                            }
                            break;
                        }
                        eps_den *= 2;
                    }
                }
            }
        }
    }
    false
}

/// Degeneracies of a point set: collinear triples and coconic sextuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericityReport {
    pub collinear_triples: Vec<[Label; 3]>,
    pub coconic_sextuples: Vec<[Label; 6]>,
    pub fully_generic: bool,
}

/// Exhaustive genericity test; sextuples by the rank of the 6×6
/// interpolation matrix.
pub fn genericity_report(points: &[ProjectivePoint]) -> GenericityReport {
    let n = points.len();
    let mut rep = GenericityReport::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&points[i], &points[j], &points[k]) {
                    rep.collinear_triples.push([i as u8 + 1, j as u8 + 1, k as u8 + 1]);
                }
            }
        }
    }
    for six in combinations(n, 6) {
        let m: Vec<Vec<BigInt>> = six.iter().map(|&i| conic_monomials(&points[i].c).to_vec()).collect();
        if linalg::det(m).is_zero() {
            let mut s = [0u8; 6];
            for (o, &i) in s.iter_mut().zip(&six) {
                *o = i as u8 + 1;
            }
            rep.coconic_sextuples.push(s);
        }
    }
    rep.fully_generic = rep.collinear_triples.is_empty() && rep.coconic_sextuples.is_empty();
    rep
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(a, b, c).unwrap()
    }

    fn labeled(ps: &[ProjectivePoint]) -> Vec<(Label, ProjectivePoint)> {
        ps.iter().enumerate().map(|(i, p)| (i as u8 + 1, p.clone())).collect()
    }

    fn unit_circle() -> ConicForm {
        ConicForm::from_coefficients(
            arith::vec3(1, 1, -1).into_iter().chain(arith::vec3(0, 0, 0)).collect::<Vec<_>>().try_into().unwrap(),
        )
        .normalize()
        .unwrap()
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, 1, 0)));
        assert!(!collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1)));
        assert!(collinear(&pt(1, 2, 1), &pt(2, 3, 1), &pt(3, 4, 1)));
    }

    #[test]
    fn joins_and_meets() {
        assert_eq!(line_through(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ProjectiveLine::from_ints(0, 0, 1).unwrap());
        let l1 = ProjectiveLine::from_ints(1, 0, 0).unwrap();
        let l2 = ProjectiveLine::from_ints(0, 1, 0).unwrap();
        assert_eq!(meet(&l1, &l2).unwrap(), pt(0, 0, 1));
        assert_eq!(line_through(&pt(1, 0, 1), &pt(0, 1, 1)).unwrap(), ProjectiveLine::from_ints(1, 1, -1).unwrap());
        assert_eq!(line_through(&pt(1, 2, 3), &pt(-2, -4, -6)), Err(Error::IdenticalInputs));
    }

    #[test]
    fn scaling_is_invisible() {
        let p = ProjectivePoint::new(
            Rational::new(BigInt::from(-1), BigInt::from(2)),
            Rational::from_integer(BigInt::from(3)),
            Rational::new(BigInt::from(5), BigInt::from(4)),
        )
        .unwrap();
        assert_eq!(p, pt(2, -12, -5));
    }

    #[test]
    fn unit_circle_conic() {
        let ps = [pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)];
        let c = conic_through_five(&ps).unwrap();
        assert_eq!(c, unit_circle());
        assert!(c.det2().is_negative());
        assert_eq!(conic_side(&c, &pt(0, 0, 1)).unwrap(), Side::Interior);
        assert_eq!(conic_side(&c, &pt(1, 0, 0)).unwrap(), Side::Exterior);
        assert_eq!(conic_side(&c, &pt(1, 0, 1)).unwrap(), Side::On);
    }

    #[test]
    fn conic_through_lattice_points() {
        // three of these lie on x1 = x2: the interpolating form is the line pair
        let ps = [pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1), pt(2, 1, 1)];
        assert_eq!(conic_through_five(&ps), Err(Error::DegenerateConic));
        let m: Vec<Vec<BigInt>> = ps.iter().map(|p| conic_monomials(p.coords()).to_vec()).collect();
        let ns = linalg::nullspace(m, 6);
        assert_eq!(ns.len(), 1);
        let pair = ConicForm::from_line_pair(&arith::vec3(0, 1, 0), &arith::vec3(0, 1, -1));
        assert_eq!(primitive(ns[0].clone().try_into().unwrap()), primitive(pair.coefficients().clone()));

        let ps = [pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1), pt(2, 3, 1)];
        let c = conic_through_five(&ps).unwrap();
        for p in &ps {
            assert_eq!(conic_side(&c, p).unwrap(), Side::On);
        }
        // cross-check against the 5×6 interpolation null space
        let m: Vec<Vec<BigInt>> = ps.iter().map(|p| conic_monomials(p.coords()).to_vec()).collect();
        let ns = linalg::nullspace(m, 6);
        assert_eq!(ns.len(), 1);
        let other = ConicForm::from_coefficients(ns[0].clone().try_into().unwrap()).normalize().unwrap();
        assert_eq!(other, c);
    }

    #[test]
    fn degenerate_five() {
        let ps = [pt(1, 0, 1), pt(1, 0, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)];
        assert_eq!(conic_through_five(&ps), Err(Error::DegenerateConic));
        let ps = [pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1), pt(0, 1, 1), pt(1, 5, 1)];
        assert_eq!(conic_through_five(&ps), Err(Error::DegenerateConic));
    }

    #[test]
    fn unnormalized_side_rejected() {
        let c = ConicForm::from_coefficients(unit_circle().coefficients().clone());
        assert_eq!(conic_side(&c, &pt(0, 0, 1)), Err(Error::NotNormalized));
    }

    #[test]
    fn order_on_unit_circle() {
        let c = unit_circle();
        let ps = [pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1)];
        assert_eq!(cyclic_order_on_conic(&c, &labeled(&ps)).unwrap(), CyclicWord::new(&[1, 2, 3, 4]).unwrap());
        let scrambled = [pt(-1, 0, 1), pt(1, 0, 1), pt(0, -1, 1), pt(0, 1, 1)];
        assert_eq!(cyclic_order_on_conic(&c, &labeled(&scrambled)).unwrap(), CyclicWord::new(&[1, 3, 2, 4]).unwrap());
    }

    #[test]
    fn order_on_conic_matches_angle_sort() {
        // angular oracle: (3:4:5) sits at about 53 degrees
        let c = unit_circle();
        let ps = [pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)];
        let w = cyclic_order_on_conic(&c, &labeled(&ps)).unwrap();
        assert_eq!(w, CyclicWord::new(&[1, 5, 2, 3, 4]).unwrap());
        let mut rev = labeled(&ps);
        rev.reverse();
        assert_eq!(cyclic_order_on_conic(&c, &rev).unwrap(), w);
    }

    #[test]
    fn point_off_conic() {
        let ps = [pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1)];
        assert_eq!(cyclic_order_on_conic(&unit_circle(), &labeled(&ps)), Err(Error::PointNotOnConic(3)));
    }

    #[test]
    fn line_pencil_order() {
        let ps = [pt(1, 0, 1), pt(1, 1, 1), pt(0, 1, 1), pt(-1, 1, 1)];
        let w = cyclic_order_in_line_pencil(&pt(0, 0, 1), &labeled(&ps)).unwrap();
        assert_eq!(w, CyclicWord::new(&[1, 2, 3, 4]).unwrap());
        let shared = [pt(1, 1, 1), pt(2, 2, 1)];
        assert_eq!(cyclic_order_in_line_pencil(&pt(0, 0, 1), &labeled(&shared)), Err(Error::SharedDirection(1, 2)));
        assert_eq!(
            cyclic_order_in_line_pencil(&pt(0, 0, 1), &labeled(&[pt(0, 0, 3)])),
            Err(Error::CoincidentWithCenter(1))
        );
    }

    #[test]
    fn cremona_examples() {
        let base = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        assert_eq!(cremona_transform(&base, &pt(1, 1, 1)).unwrap(), pt(1, 1, 1));
        assert_eq!(cremona_transform(&base, &pt(1, 2, 3)).unwrap(), pt(6, 3, 2));
        let p = pt(5, 7, 11);
        let once = cremona_transform(&base, &p).unwrap();
        assert_eq!(cremona_transform(&base, &once).unwrap(), p);
        assert_eq!(cremona_transform(&base, &pt(0, 2, 0)), Err(Error::BasePointInput));
        let flat = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)];
        assert_eq!(cremona_transform(&flat, &p), Err(Error::CollinearBase));
    }

    #[test]
    fn convexity_in_charts() {
        let inf = ProjectiveLine::from_ints(0, 0, 1).unwrap();
        // rational points near a regular pentagon
        let pent = [pt(1, 0, 1), pt(3, 10, 10), pt(-8, 6, 10), pt(-8, -6, 10), pt(3, -10, 10)];
        assert!(convex_position_in_chart(&pent, &inf).unwrap());
        let tri = [pt(0, 0, 1), pt(4, 0, 1), pt(0, 4, 1), pt(1, 1, 1)];
        assert!(!convex_position_in_chart(&tri, &inf).unwrap());
        assert_eq!(convex_position_in_chart(&[pt(1, 0, 0)], &inf), Err(Error::ChartThroughPoint(1)));
        // six unit-circle points; the chart is a shifted copy of x2 = 0
        let six = [pt(1, 0, 1), pt(3, 4, 5), pt(0, 1, 1), pt(-4, 3, 5), pt(-1, 0, 1), pt(0, -1, 1)];
        let chart = ProjectiveLine::from_ints(0, 1, 3).unwrap();
        assert!(convex_position_in_chart(&six, &chart).unwrap());
        assert!(convex_position_projective(&tri));
    }

    #[test]
    fn chart_line_avoids_points() {
        let ps = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)];
        let l = find_chart_line(&ps);
        assert!(ps.iter().all(|p| !p.lies_on(&l)));
    }

    #[test]
    fn genericity_examples() {
        let ps = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3), pt(2, 5, 7)];
        let r = genericity_report(&ps);
        assert!(r.collinear_triples.is_empty());
        assert!(r.fully_generic);
        let ps = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(1, 2, 3)];
        assert_eq!(genericity_report(&ps).collinear_triples, vec![[1, 2, 3]]);
        let circle = [pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5), pt(4, 3, 5)];
        let r = genericity_report(&circle);
        assert_eq!(r.coconic_sextuples, vec![[1, 2, 3, 4, 5, 6]]);
        assert!(!r.fully_generic);
    }
}
