use super::{EdgeChain, Homology};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Q};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// A 1-chain on the dual graph: `h[x]` runs from the centre of x to the
/// centre of r x, `v[x]` from the centre of x to the centre of u x.
struct DualChain {
    h: Vec<Q>,
    v: Vec<Q>,
}

impl Homology {
    /// Adds c times the counter-clockwise dual path around the common lower-left
    /// vertex, from the centre of `from` to the centre of `to`.
    fn rotate(&self, d: &mut DualChain, from: usize, to: usize, c: Q) {
        let o = &self.origami;
        let mut g = from;
        while g != to {
            let a = self.r_inv.apply(g);
            let b = self.u_inv.apply(a);
            let e = o.r.apply(b);
            d.h[a] -= c;
            d.v[b] -= c;
            d.h[b] += c;
            d.v[e] += c;
            g = o.u.apply(e);
        }
    }

    /// Pushes an edge chain off the vertices into the dual graph.
    fn push_off(&self, b: &EdgeChain) -> DualChain {
        let o = &self.origami;
        let n = o.n;
        let mut d = DualChain { h: vec![Q::zero(); n], v: vec![Q::zero(); n] };
        let base = |g: usize| self.classes[self.vertex_of[g]].cycle[0];
        for g in 0..n {
            let s = b.sigma[g];
            if !s.is_zero() {
                let rg = o.r.apply(g);
                self.rotate(&mut d, base(g), g, s);
                d.h[g] += s;
                self.rotate(&mut d, rg, base(rg), s);
            }
            let z = b.zeta[g];
            if !z.is_zero() {
                let ug = o.u.apply(g);
                self.rotate(&mut d, base(g), g, z);
                d.v[g] += z;
                self.rotate(&mut d, ug, base(ug), z);
            }
        }
        d
    }

    /// Algebraic intersection of absolute classes, with ⟨rightward, upward⟩ = +1.
    pub fn intersection(&self, a: &EdgeChain, b: &EdgeChain) -> Result<Q> {
        if !self.is_absolute(a) || !self.is_absolute(b) {
            return Err(Error::NotAbsolute);
        }
        let o = &self.origami;
        let d = self.push_off(b);
        let mut total = Q::zero();
        for x in 0..o.n {
            total += a.sigma[o.u.apply(x)] * d.v[x];
            total -= a.zeta[o.r.apply(x)] * d.h[x];
        }
        Ok(total)
    }

    pub fn gram(&self, basis: &[EdgeChain]) -> Result<Mat> {
        let k = basis.len();
        let mut m = Mat::zeros(k, k);
        for i in 0..k {
            for j in i + 1..k {
                let x = self.intersection(&basis[i], &basis[j])?;
                m.set(i, j, x);
                m.set(j, i, -x);
            }
        }
        Ok(m)
    }

    /// Pairing of a cylinder core with `c`. The core runs at mid-height of the
    /// row (horizontal) or column (vertical) through `square`, rightward or upward.
    pub fn transversal_pairing(&self, dir: Direction, square: usize, c: &EdgeChain) -> Q {
        let o = &self.origami;
        let (p, coeffs, sign) = match dir {
            Direction::Horizontal => (&o.r, &c.zeta, Q::from_integer(1)),
            Direction::Vertical => (&o.u, &c.sigma, Q::from_integer(-1)),
        };
        let mut total = Q::zero();
        let mut g = square;
        loop {
            total += coeffs[g];
            g = p.apply(g);
            if g == square {
                break;
            }
        }
        total * sign
    }
}
