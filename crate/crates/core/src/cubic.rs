//! Ternary cubics and the topology of a nodal cubic through labeled points.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{self, cross, dot, sgn, Vec3};
use crate::cyclic::{dihedral_min, CyclicWord};
use crate::error::{Error, Result};
use crate::linalg;
use crate::projective::{cyclic_order_in_line_pencil, ConicForm, Label, ProjectivePoint};

/// Exponents of the cubic monomials, in coefficient order.
pub const CUBIC_EXPONENTS: [[u8; 3]; 10] =
    [[3, 0, 0], [0, 3, 0], [0, 0, 3], [2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [1, 0, 2], [0, 1, 2], [1, 1, 1]];

const CONIC_EXPONENTS: [[u8; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

fn cubic_index(e: [u8; 3]) -> usize {
    CUBIC_EXPONENTS.iter().position(|x| *x == e).unwrap()
}

fn pow(x: &BigInt, e: u8) -> BigInt {
    num_traits::pow(x.clone(), e as usize)
}

/// Values of the ten cubic monomials at `p`.
pub fn cubic_monomials(p: &Vec3) -> [BigInt; 10] {
    std::array::from_fn(|k| {
        let e = CUBIC_EXPONENTS[k];
        pow(&p[0], e[0]) * pow(&p[1], e[1]) * pow(&p[2], e[2])
    })
}

/// Values at `p` of the partial derivative along `x_i` of each monomial.
pub fn cubic_monomial_partials(p: &Vec3, i: usize) -> [BigInt; 10] {
    std::array::from_fn(|k| {
        let mut e = CUBIC_EXPONENTS[k];
        if e[i] == 0 {
            return BigInt::zero();
        }
        let c = BigInt::from(e[i]);
        e[i] -= 1;
        c * pow(&p[0], e[0]) * pow(&p[1], e[1]) * pow(&p[2], e[2])
    })
}

/// Ternary cubic form, coefficients in [`CUBIC_EXPONENTS`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicForm {
    coef: [BigInt; 10],
}

impl CubicForm {
    pub fn new(coef: [BigInt; 10]) -> Result<Self> {
        if coef.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(CubicForm { coef })
    }

    pub fn coefficients(&self) -> &[BigInt; 10] {
        &self.coef
    }

    /// Primitive representative with positive leading coefficient.
    pub fn primitive(&self) -> CubicForm {
        CubicForm { coef: arith::primitive(self.coef.clone()) }
    }

    pub fn eval(&self, p: &Vec3) -> BigInt {
        self.coef.iter().zip(cubic_monomials(p)).map(|(c, m)| c * m).sum()
    }

    pub fn gradient(&self, p: &Vec3) -> Vec3 {
        std::array::from_fn(|i| self.coef.iter().zip(cubic_monomial_partials(p, i)).map(|(c, m)| c * m).sum())
    }

    /// `line · conic`.
    pub fn product(line: &Vec3, conic: &ConicForm) -> CubicForm {
        let mut coef: [BigInt; 10] = std::array::from_fn(|_| BigInt::zero());
        for (i, l) in line.iter().enumerate() {
            for (ce, c) in CONIC_EXPONENTS.iter().zip(conic.coefficients()) {
                let mut e = *ce;
                e[i] += 1;
                coef[cubic_index(e)] += l * c;
            }
        }
        CubicForm { coef }
    }

    /// `a·self + b·other`.
    pub fn combine(a: &BigInt, f: &CubicForm, b: &BigInt, g: &CubicForm) -> CubicForm {
        CubicForm { coef: std::array::from_fn(|k| a * &f.coef[k] + b * &g.coef[k]) }
    }

    pub fn proportional(&self, other: &CubicForm) -> bool {
        self.primitive().coef == other.primitive().coef
            || self.primitive().coef == other.primitive().coef.clone().map(|x| -x)
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coef.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The unique cubic through seven points that is singular at `points[node]`,
/// by the null space of the 9×10 linear system.
pub fn seven_point_nodal_cubic(points: &[ProjectivePoint], node: usize) -> Result<CubicForm> {
    if points.len() != 7 {
        return Err(Error::WrongArity { expected: "7", got: points.len() });
    }
    if node >= 7 {
        return Err(Error::BadLabel(node as u8 + 1));
    }
    let n = points[node].coords();
    let mut rows: Vec<Vec<BigInt>> = points.iter().map(|p| cubic_monomials(p.coords()).to_vec()).collect();
    rows.extend(node_partial_rows(n));
    let ns = linalg::nullspace(rows, 10);
    if ns.len() != 1 {
        return Err(Error::UnexpectedRank { expected: 1, got: ns.len() });
    }
    CubicForm::new(ns[0].clone().try_into().unwrap()).map(|c| c.primitive())
}

/// Two independent singularity conditions at `n`; the third follows from
/// the Euler relation because the coordinate left out is nonzero.
pub(crate) fn node_partial_rows(n: &Vec3) -> Vec<Vec<BigInt>> {
    let k = (0..3).rev().find(|&k| !n[k].is_zero()).unwrap();
    (0..3).filter(|&i| i != k).map(|i| cubic_monomial_partials(n, i).to_vec()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Crunode,
    Acnode,
}

/// Topological type of a nodal cubic with labeled points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NodalCubicDescriptor {
    pub node: Label,
    pub kind: NodeKind,
    /// Labels in the order of the lines through the node.
    pub order: CyclicWord,
    /// Labels on the loop, sorted; empty for an acnode.
    pub loop_set: Vec<Label>,
}

impl NodalCubicDescriptor {
    /// The cyclic sequence of `(label, on loop)` after relabeling, in
    /// canonical dihedral form.
    pub fn encode(&self, f: impl Fn(Label) -> Label) -> Vec<u8> {
        let toks: Vec<u8> =
            self.order.labels().iter().map(|&l| f(l) * 2 + u8::from(self.loop_set.contains(&l))).collect();
        let mut out = vec![u8::from(self.kind == NodeKind::Crunode)];
        out.extend(dihedral_min(&toks));
        out
    }
}

impl fmt::Display for NodalCubicDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            NodeKind::Crunode => "crunode",
            NodeKind::Acnode => "acnode",
        };
        write!(f, "node {} {} order {}", self.node, kind, self.order)?;
        if !self.loop_set.is_empty() {
            let s: String = self.loop_set.iter().map(|l| l.to_string()).collect();
            write!(f, " loop {s}")?;
        }
        Ok(())
    }
}

/// Binary form `sum c[k] u^(d-k) v^k`.
type Binary = Vec<BigInt>;

fn eval_binary(f: &Binary, u: &BigInt, v: &BigInt) -> BigInt {
    let d = f.len() - 1;
    f.iter().enumerate().map(|(k, c)| c * pow(u, (d - k) as u8) * pow(v, k as u8)).sum()
}

/// Univariate polynomial in `t`, ascending coefficients.
fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f(a + t b)` as a polynomial in `t`.
fn substitute(f: &Binary, a: (&BigInt, &BigInt), b: (&BigInt, &BigInt)) -> Vec<BigInt> {
    let d = f.len() - 1;
    let u = [a.0.clone(), b.0.clone()];
    let v = [a.1.clone(), b.1.clone()];
    let mut out = vec![BigInt::zero(); d + 1];
    for (k, c) in f.iter().enumerate() {
        let mut term = vec![c.clone()];
        for _ in 0..d - k {
            term = poly_mul(&term, &u);
        }
        for _ in 0..k {
            term = poly_mul(&term, &v);
        }
        for (o, x) in out.iter_mut().zip(term) {
            *o += x;
        }
    }
    out
}

/// Sign of `x + y·√d` for `d > 0`.
fn sign_with_root(x: &BigInt, y: &BigInt, d: &BigInt) -> i8 {
    let (sx, sy) = (sgn(x), sgn(y));
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // opposite signs: compare magnitudes
    match (x * x).cmp(&(y * y * d)) {
        std::cmp::Ordering::Greater => sx,
        std::cmp::Ordering::Less => sy,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Whether the cubic `f3` has an odd number of roots, with multiplicity,
/// strictly between the two real roots of the quadratic `f2`
/// (ascending coefficients, exact degrees).
fn odd_between_roots(f3: &[BigInt], f2: &[BigInt]) -> Result<bool> {
    let (g, b, a) = (&f2[0], &f2[1], &f2[2]);
    // a² f3 = q f2 + (r1 t + r0), from pseudo-division
    let c3 = &f3[3];
    let c2 = &f3[2];
    // f3 = (c3/a) t f2 + rest1, rest1 = (c2 - c3 b/a) t² + (c1 - c3 g/a) t + c0
    let s2 = c2 * a - c3 * b; // times a
    let s1 = &f3[1] * a - c3 * g;
    let s0 = &f3[0] * a;
    // a·rest1 = s2 t² + s1 t + s0; subtract (s2/a) f2
    let r1 = &s1 * a - &s2 * b;
    let r0 = &s0 * a - &s2 * g;
    let disc = b * b - BigInt::from(4) * a * g;
    // root = (-b ± √disc) / 2a; value ∝ r1(-b ± √disc) + 2a r0, over 2a
    let x = -(&r1 * b) + BigInt::from(2) * a * &r0;
    let lo = sign_with_root(&x, &(-&r1), &disc);
    let hi = sign_with_root(&x, &r1, &disc);
    if lo == 0 || hi == 0 {
        return Err(Error::Reducible);
    }
    Ok(lo != hi)
}

/// Descriptor of `cubic` (singular at `node`) through the labeled points.
pub fn nodal_cubic_descriptor(
    cubic: &CubicForm,
    node: (Label, &ProjectivePoint),
    others: &[(Label, ProjectivePoint)],
) -> Result<NodalCubicDescriptor> {
    let n = node.1.coords();
    if !cubic.eval(n).is_zero() || !arith::is_zero(&cubic.gradient(n)) {
        return Err(Error::NotSingularAtNode);
    }
    for (l, p) in others {
        if !cubic.eval(p.coords()).is_zero() {
            return Err(Error::PointOffCubic(*l));
        }
    }
    // basis (N, e_i, e_j) with N_k != 0, matching `pencil_direction`
    let k = (0..3).find(|&k| !n[k].is_zero()).unwrap();
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let e = |u: i64, v: i64| {
        let mut w = arith::vec3(0, 0, 0);
        w[i] = BigInt::from(u);
        w[j] = BigInt::from(v);
        w
    };
    // F(xN + w) = x·F2(w) + F3(w)
    let f2 = |w: &Vec3| dot(n, &cubic.gradient(w));
    let q_a = f2(&e(1, 0));
    let q_c = f2(&e(0, 1));
    let q_b = f2(&e(1, 1)) - &q_a - &q_c;
    let g2: Binary = vec![q_a, q_b, q_c];
    let c30 = cubic.eval(&e(1, 0));
    let c03 = cubic.eval(&e(0, 1));
    let s = cubic.eval(&e(1, 1));
    let d = cubic.eval(&e(1, -1));
    let c12: BigInt = (&s + &d - BigInt::from(2) * &c30) / 2;
    let c21 = &s - &c30 - &c03 - &c12;
    let g3: Binary = vec![c30, c21, c12, c03];

    let disc = &g2[1] * &g2[1] - BigInt::from(4) * &g2[0] * &g2[2];
    let order = cyclic_order_in_line_pencil(node.1, others)?;
    let dir = |p: &Vec3| {
        let dp = crate::projective::pencil_direction(n, p);
        sgn(&eval_binary(&g2, &dp.a, &dp.b))
    };
    if disc.is_zero() {
        return Err(Error::Cusp);
    }
    if disc.is_negative() {
        return Ok(NodalCubicDescriptor { node: node.0, kind: NodeKind::Acnode, order, loop_set: vec![] });
    }
    // direction b avoiding both forms' roots becomes t = ∞
    let mut pick = None;
    'outer: for h in 1i64.. {
        for bu in -h..=h {
            for bv in [h, -h] {
                let (bu, bv) = (BigInt::from(bu), BigInt::from(bv));
                if !eval_binary(&g2, &bu, &bv).is_zero() && !eval_binary(&g3, &bu, &bv).is_zero() {
                    pick = Some((bu, bv));
                    break 'outer;
                }
            }
        }
    }
    let (bu, bv) = pick.unwrap();
    let (au, av) = if bv.is_zero() { (BigInt::zero(), BigInt::from(1)) } else { (BigInt::from(1), BigInt::zero()) };
    let p2 = substitute(&g2, (&au, &av), (&bu, &bv));
    let p3 = substitute(&g3, (&au, &av), (&bu, &bv));
    let inf_sign = sgn(&eval_binary(&g2, &bu, &bv));
    let bounded_odd = odd_between_roots(&p3, &p2)?;
    // the loop is traced over the arc meeting a chart line evenly often
    let loop_sign = if bounded_odd { inf_sign } else { -inf_sign };
    let mut loop_set = Vec::new();
    for (l, p) in others {
        let s = dir(p.coords());
        if s == 0 {
            return Err(Error::Cusp);
        }
        if s == loop_sign {
            loop_set.push(*l);
        }
    }
    loop_set.sort_unstable();
    let kind = if loop_set.is_empty() { NodeKind::Acnode } else { NodeKind::Crunode };
    Ok(NodalCubicDescriptor { node: node.0, kind, order, loop_set })
}

/// Cubic through seven points, singular at `points[node]`, from two
/// reducible members of a six-point pencil.
pub(crate) fn seven_point_nodal_cubic_fast(
    points: &[&Vec3],
    node: usize,
    conic_without: impl Fn(usize, usize) -> ConicForm,
) -> CubicForm {
    // pencil based at everything except `q`, members through q
    let q = (0..points.len()).find(|&i| i != node).unwrap();
    let mut ms = (0..points.len()).filter(|&i| i != node && i != q);
    let (m0, m1) = (ms.next().unwrap(), ms.next().unwrap());
    let n = points[node];
    let c0 = CubicForm::product(&cross(n, points[m0]), &conic_without(q, m0));
    let c1 = CubicForm::product(&cross(n, points[m1]), &conic_without(q, m1));
    let x = points[q];
    let (v0, v1) = (c0.eval(x), c1.eval(x));
    CubicForm::combine(&v1, &c0, &(-v0), &c1).primitive()
}
