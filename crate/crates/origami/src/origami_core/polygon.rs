//! Rasterizing a lattice polygon with translation-paired sides into an origami.
//!
//! Squares are the preimages of the unit square of R²/Z². Each one is labeled by
//! the sample point (x+a, y+b) of P it contains, where (a, b) is a small generic
//! offset, so the square's lower-left corner is the lattice point (x, y).

use super::perm::Perm;
use super::surface::Origami;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use num_traits::Zero;
use std::collections::HashMap;

const OFF_A: (i64, i64) = (1, 10007);
const OFF_B: (i64, i64) = (1, 10009);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Sigma,
    Zeta,
}

/// One term `coeff · (σ or ζ)_square` of an edge chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeTerm {
    pub kind: EdgeKind,
    pub square: usize,
    pub coeff: i64,
}

#[derive(Clone, Debug)]
pub struct PolygonOrigami {
    pub vertices: Vec<(i64, i64)>,
    pub origami: Origami,
    /// Lower-left lattice corner (in P's coordinates) of each square.
    pub corners: Vec<(i64, i64)>,
    lookup: HashMap<(i64, i64), usize>,
}

type Pt = (Q, Q);

fn cross(a: Pt, b: Pt) -> Q {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: Pt, b: Pt) -> Pt {
    (a.0 - b.0, a.1 - b.1)
}

fn qp(p: (i64, i64)) -> Pt {
    (q(p.0), q(p.1))
}

fn offset() -> Pt {
    (Q::new(OFF_A.0 as i128, OFF_A.1 as i128), Q::new(OFF_B.0 as i128, OFF_B.1 as i128))
}

fn segments_touch(p1: (i64, i64), p2: (i64, i64), p3: (i64, i64), p4: (i64, i64)) -> bool {
    let o =
        |a: (i64, i64), b: (i64, i64), c: (i64, i64)| ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum();
    let on = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
        c.0 >= a.0.min(b.0) && c.0 <= a.0.max(b.0) && c.1 >= a.1.min(b.1) && c.1 <= a.1.max(b.1)
    };
    let (d1, d2, d3, d4) = (o(p3, p4, p1), o(p3, p4, p2), o(p1, p2, p3), o(p1, p2, p4));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on(p3, p4, p1))
        || (d2 == 0 && on(p3, p4, p2))
        || (d3 == 0 && on(p1, p2, p3))
        || (d4 == 0 && on(p1, p2, p4))
}

fn is_simple(v: &[(i64, i64)]) -> bool {
    let n = v.len();
    for i in 0..n {
        if v[i] == v[(i + 1) % n] {
            return false;
        }
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (a, b, c, d) = (v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]);
            if adjacent {
                // adjacent sides may only share their common endpoint
                let shared = if j == i + 1 { b } else { a };
                let other_i = if j == i + 1 { a } else { b };
                let other_j = if j == i + 1 { d } else { c };
                let col = (b.0 - a.0) * (d.1 - c.1) - (b.1 - a.1) * (d.0 - c.0) == 0;
                if col {
                    // collinear adjacent sides must not fold back
                    let u = (other_i.0 - shared.0, other_i.1 - shared.1);
                    let w = (other_j.0 - shared.0, other_j.1 - shared.1);
                    if u.0 * w.0 + u.1 * w.1 > 0 {
                        return false;
                    }
                }
            } else if segments_touch(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

impl PolygonOrigami {
    pub fn new(vertices: &[(i64, i64)]) -> Result<Self> {
        let n = vertices.len();
        if n < 4 || n % 2 == 1 {
            return Err(Error::UnpairedSides);
        }
        if !is_simple(vertices) {
            return Err(Error::NotSimple);
        }
        let half = n / 2;
        for i in 0..half {
            let v = side_vec(vertices, i);
            let w = side_vec(vertices, i + half);
            if v.0 != -w.0 || v.1 != -w.1 {
                return Err(Error::UnpairedSides);
            }
        }
        let mut poly = PolygonOrigami {
            vertices: vertices.to_vec(),
            origami: Origami::torus(),
            corners: Vec::new(),
            lookup: HashMap::new(),
        };
        let (xmin, xmax) = (vertices.iter().map(|p| p.0).min().unwrap(), vertices.iter().map(|p| p.0).max().unwrap());
        let (ymin, ymax) = (vertices.iter().map(|p| p.1).min().unwrap(), vertices.iter().map(|p| p.1).max().unwrap());
        let off = offset();
        let mut corners = Vec::new();
        for y in ymin..ymax {
            for x in xmin..xmax {
                if poly.inside((q(x) + off.0, q(y) + off.1)) {
                    corners.push((x, y));
                }
            }
        }
        let area2: i64 = (0..n)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum();
        if corners.len() as i64 != area2.abs() / 2 {
            return Err(Error::NotSimple);
        }
        poly.lookup = corners.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        poly.corners = corners;
        let count = poly.corners.len();
        let mut r = Vec::with_capacity(count);
        let mut u = Vec::with_capacity(count);
        for &(x, y) in &poly.corners {
            let p = (q(x) + off.0, q(y) + off.1);
            r.push(poly.locate(poly.walk(p, (q(1), q(0))))?);
            u.push(poly.locate(poly.walk(p, (q(0), q(1))))?);
        }
        let (r, u) = (Perm::new(r)?, Perm::new(u)?);
        poly.origami = Origami::new(r, u)?;
        Ok(poly)
    }

    fn side(&self, i: usize) -> (Pt, Pt) {
        let n = self.vertices.len();
        (qp(self.vertices[i % n]), qp(self.vertices[(i + 1) % n]))
    }

    /// Even-odd test; `p` must not lie on the boundary.
    fn inside(&self, p: Pt) -> bool {
        let n = self.vertices.len();
        let mut c = false;
        for i in 0..n {
            let (a, b) = self.side(i);
            if (a.1 > p.1) != (b.1 > p.1) {
                let x = a.0 + (p.1 - a.1) * (b.0 - a.0) / (b.1 - a.1);
                if p.0 < x {
                    c = !c;
                }
            }
        }
        c
    }

    fn on_boundary(&self, p: Pt) -> bool {
        (0..self.vertices.len()).any(|i| {
            let (a, b) = self.side(i);
            cross(sub(b, a), sub(p, a)).is_zero()
                && p.0 >= a.0.min(b.0)
                && p.0 <= a.0.max(b.0)
                && p.1 >= a.1.min(b.1)
                && p.1 <= a.1.max(b.1)
        })
    }

    /// Follows the straight path p → p + d inside the surface, crossing paired sides.
    fn walk(&self, mut p: Pt, d: Pt) -> Pt {
        let n = self.vertices.len();
        let mut rem = Q::from_integer(1);
        let mut skip = usize::MAX;
        loop {
            let mut best: Option<(Q, usize)> = None;
            for i in 0..n {
                if i == skip {
                    continue;
                }
                let (a, b) = self.side(i);
                let e = sub(b, a);
                let den = cross(d, e);
                if den.is_zero() {
                    continue;
                }
                let ap = sub(a, p);
                let lam = cross(ap, e) / den;
                let s = cross(ap, d) / den;
                if lam > Q::zero()
                    && lam < rem
                    && s >= Q::zero()
                    && s <= q(1)
                    && best.as_ref().is_none_or(|(l, _)| lam < *l)
                {
                    best = Some((lam, i));
                }
            }
            match best {
                None => return (p.0 + d.0 * rem, p.1 + d.1 * rem),
                Some((lam, i)) => {
                    let j = (i + n / 2) % n;
                    let t = sub(qp(self.vertices[(j + 1) % n]), qp(self.vertices[i]));
                    p = (p.0 + d.0 * lam + t.0, p.1 + d.1 * lam + t.1);
                    rem -= lam;
                    skip = j;
                }
            }
        }
    }

    fn locate(&self, p: Pt) -> Result<usize> {
        let off = offset();
        let (x, y) = (p.0 - off.0, p.1 - off.1);
        if !x.is_integer() || !y.is_integer() {
            return Err(Error::NotSimple);
        }
        let key = (x.to_integer() as i64, y.to_integer() as i64);
        self.lookup.get(&key).copied().ok_or(Error::NotSimple)
    }

    /// Square whose bottom edge is the unit edge (x,y)→(x+1,y) of closed P.
    fn sigma_square(&self, x: i64, y: i64) -> Result<usize> {
        let off = offset();
        let mid = q(x) + Q::new(1, 2);
        let above = (mid, q(y) + off.1);
        if self.inside(above) {
            let e = self.walk(above, (off.0 - Q::new(1, 2), q(0)));
            return self.locate(e);
        }
        let delta = Q::new(1, 1000);
        let below = (mid, q(y) - delta);
        if self.on_boundary(below) || !self.inside(below) {
            return Err(Error::NotSimple);
        }
        let p = self.walk(below, (q(0), delta + off.1));
        let e = self.walk(p, (off.0 - Q::new(1, 2), q(0)));
        self.locate(e)
    }

    /// Square whose left edge is the unit edge (x,y)→(x,y+1) of closed P.
    fn zeta_square(&self, x: i64, y: i64) -> Result<usize> {
        let off = offset();
        let mid = q(y) + Q::new(1, 2);
        let right = (q(x) + off.0, mid);
        if self.inside(right) {
            let e = self.walk(right, (q(0), off.1 - Q::new(1, 2)));
            return self.locate(e);
        }
        let delta = Q::new(1, 1000);
        let left = (q(x) - delta, mid);
        if self.on_boundary(left) || !self.inside(left) {
            return Err(Error::NotSimple);
        }
        let p = self.walk(left, (delta + off.0, q(0)));
        let e = self.walk(p, (q(0), off.1 - Q::new(1, 2)));
        self.locate(e)
    }

    fn in_closed(&self, p: Pt) -> bool {
        self.on_boundary(p) || self.inside(p)
    }

    /// Edge terms of the relative class of side `i`, realized by a lattice
    /// staircase inside closed P with the same endpoints.
    pub fn side_class(&self, i: usize) -> Result<Vec<EdgeTerm>> {
        let n = self.vertices.len();
        let a = self.vertices[i % n];
        let b = self.vertices[(i + 1) % n];
        for path in candidate_staircases(a, b) {
            let ok = path.windows(2).all(|w| {
                let m = (Q::new((w[0].0 + w[1].0) as i128, 2), Q::new((w[0].1 + w[1].1) as i128, 2));
                self.in_closed(m)
            }) && path.iter().all(|&p| self.in_closed(qp(p)));
            if !ok {
                continue;
            }
            let mut terms = Vec::new();
            for w in path.windows(2) {
                let (p0, p1) = (w[0], w[1]);
                let t = if p1.1 == p0.1 {
                    let x = p0.0.min(p1.0);
                    EdgeTerm { kind: EdgeKind::Sigma, square: self.sigma_square(x, p0.1)?, coeff: p1.0 - p0.0 }
                } else {
                    let y = p0.1.min(p1.1);
                    EdgeTerm { kind: EdgeKind::Zeta, square: self.zeta_square(p0.0, y)?, coeff: p1.1 - p0.1 }
                };
                terms.push(t);
            }
            return Ok(terms);
        }
        Err(Error::NotSimple)
    }
}

fn side_vec(v: &[(i64, i64)], i: usize) -> (i64, i64) {
    let n = v.len();
    let (a, b) = (v[i % n], v[(i + 1) % n]);
    (b.0 - a.0, b.1 - a.1)
}

/// Monotone unit-step lattice paths from a to b: the two L-shapes and the two
/// staircases hugging the segment from either side.
fn candidate_staircases(a: (i64, i64), b: (i64, i64)) -> Vec<Vec<(i64, i64)>> {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let (sx, sy) = (dx.signum(), dy.signum());
    let mut out = Vec::new();
    let l_shape = |x_first: bool| {
        let mut p = a;
        let mut path = vec![p];
        let mut step = |horizontal: bool, path: &mut Vec<(i64, i64)>| {
            let k = if horizontal { dx.abs() } else { dy.abs() };
            for _ in 0..k {
                if horizontal {
                    p.0 += sx;
                } else {
                    p.1 += sy;
                }
                path.push(p);
            }
        };
        step(x_first, &mut path);
        step(!x_first, &mut path);
        path
    };
    for side in [1i64, -1] {
        let mut p = a;
        let mut path = vec![p];
        while p != b {
            let cand_x = (p.0 + sx, p.1);
            let cand_y = (p.0, p.1 + sy);
            let c = |r: (i64, i64)| dx * (r.1 - a.1) - dy * (r.0 - a.0);
            let ok_x = p.0 != b.0 && side * c(cand_x) >= 0;
            let ok_y = p.1 != b.1 && side * c(cand_y) >= 0;
            p = match (ok_x, ok_y) {
                (true, true) => {
                    if (c(cand_x)).abs() <= (c(cand_y)).abs() {
                        cand_x
                    } else {
                        cand_y
                    }
                }
                (true, false) => cand_x,
                (false, true) => cand_y,
                (false, false) => break,
            };
            path.push(p);
        }
        if p == b {
            out.push(path);
        }
    }
    out.push(l_shape(true));
    out.push(l_shape(false));
    out
}

pub fn polygon_to_origami(vertices: &[(i64, i64)]) -> Result<Origami> {
    Ok(PolygonOrigami::new(vertices)?.origami)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_is_torus() {
        let o = polygon_to_origami(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(o, Origami::torus());
    }

    #[test]
    fn rectangle_two_by_one() {
        let o = polygon_to_origami(&[(0, 0), (2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(o.n, 2);
        assert_eq!(o.genus(), 1);
    }

    #[test]
    fn bad_polygons() {
        assert_eq!(polygon_to_origami(&[(0, 0), (2, 0), (1, 1), (0, 1)]), Err(Error::UnpairedSides));
        assert_eq!(polygon_to_origami(&[(0, 0), (1, 1), (1, 0), (0, 1)]), Err(Error::NotSimple));
    }

    #[test]
    fn staircases_end_at_target() {
        for (a, b) in [((0, 0), (1, 2)), ((3, 3), (4, 2)), ((5, 1), (4, -1)), ((2, 3), (3, 3))] {
            for p in candidate_staircases(a, b) {
                assert_eq!(*p.last().unwrap(), b);
                assert_eq!(p[0], a);
            }
        }
    }
}
