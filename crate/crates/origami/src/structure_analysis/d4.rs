//! Root systems of type D4 inside a 4-dimensional invariant subspace, their
//! Weyl and automorphism groups, and the triality quotient.

use std::collections::HashSet;

use super::group::{finite_closure, FiniteMatrixGroup};
use crate::error::{Error, Result};
use crate::homology::{EdgeChain, Homology, Subspace};
use crate::linalg::{q, qr, Mat, Q};
use crate::origami_core::Perm;
use num_traits::{One, Signed, Zero};

/// All matrices act on coordinates of the ambient 4-dimensional subspace.
#[derive(Clone, Debug)]
pub struct RootSystemD4 {
    pub roots: Vec<Vec<Q>>,
    /// ε_1..ε_4 with roots = {±ε_a ± ε_b}.
    pub frame: Vec<Vec<Q>>,
    /// α_1 = ε_1−ε_2, α_2 = ε_2−ε_3, α_3 = ε_3−ε_4, α_4 = ε_3+ε_4.
    pub simple: Vec<Vec<Q>>,
    pub weyl: FiniteMatrixGroup,
    pub aut: FiniteMatrixGroup,
    weyl_inverses: Vec<Mat>,
    /// Columns are the frame vectors.
    frame_matrix: Mat,
    frame_inverse: Mat,
}

fn add(a: &[Q], b: &[Q], s: i64) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y * q(s)).collect()
}

fn half(v: Vec<Q>) -> Vec<Q> {
    v.into_iter().map(|x| x * qr(1, 2)).collect()
}

fn root_set(frame: &[Vec<Q>]) -> HashSet<Vec<Q>> {
    let mut out = HashSet::new();
    for a in 0..4 {
        for b in a + 1..4 {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let v: Vec<Q> = frame[a].iter().zip(&frame[b]).map(|(x, y)| x * q(sa) + y * q(sb)).collect();
                out.insert(v);
            }
        }
    }
    out
}

/// Signed permutation matrices with an even number of sign changes (order
/// 192) are generated by these three in frame coordinates, together with the
/// diagram automorphisms for A(R).
fn frame_generators() -> (Vec<Mat>, Vec<Mat>) {
    let perm_mat = |p: [usize; 4], signs: [i64; 4]| {
        let mut m = Mat::zeros(4, 4);
        for (j, &i) in p.iter().enumerate() {
            m.set(i, j, q(signs[j]));
        }
        m
    };
    let swap12 = perm_mat([1, 0, 2, 3], [1; 4]);
    let cycle = perm_mat([1, 2, 3, 0], [1; 4]);
    let flip34 = perm_mat([0, 1, 3, 2], [1, 1, -1, -1]);
    // Swapping α_3 and α_4: ε_4 ↦ −ε_4.
    let diag34 = perm_mat([0, 1, 2, 3], [1, 1, 1, -1]);
    // Swapping α_1 and α_3, fixing α_2 and α_4: the matrix with all entries ±1/2.
    let h = qr(1, 2);
    let diag13 = Mat::from_rows(&[vec![h, h, h, -h], vec![h, h, -h, h], vec![h, -h, h, h], vec![-h, h, h, h]]);
    (vec![swap12, cycle, flip34], vec![diag34, diag13])
}

impl RootSystemD4 {
    /// Validates `frame` against `roots` and builds the groups.
    pub fn with_frame(roots: Vec<Vec<Q>>, frame: Vec<Vec<Q>>) -> Result<Self> {
        let set: HashSet<Vec<Q>> = roots.iter().cloned().collect();
        if set.len() != 24 || roots.len() != 24 {
            return Err(Error::NotD4(format!("expected 24 distinct vectors, got {}", set.len())));
        }
        if frame.len() != 4 || root_set(&frame) != set {
            return Err(Error::NotD4("frame does not produce the root set".into()));
        }
        let f = Mat::from_cols(&frame);
        let finv = f.inverse().ok_or_else(|| Error::NotD4("frame is degenerate".into()))?;
        let to_ambient = |m: &Mat| f.mul(m).mul(&finv);
        let (w_gens, d_gens) = frame_generators();
        let w_amb: Vec<Mat> = w_gens.iter().map(to_ambient).collect();
        let mut a_amb = w_amb.clone();
        a_amb.extend(d_gens.iter().map(to_ambient));
        let weyl = finite_closure(&w_amb, 10_000).finite().expect("Weyl group of D4 is finite");
        let aut = finite_closure(&a_amb, 10_000).finite().expect("A(D4) is finite");
        let simple = vec![
            add(&frame[0], &frame[1], -1),
            add(&frame[1], &frame[2], -1),
            add(&frame[2], &frame[3], -1),
            add(&frame[2], &frame[3], 1),
        ];
        let weyl_inverses = weyl.elements.iter().map(|w| w.inverse().expect("invertible")).collect();
        let r = RootSystemD4 { roots, frame, simple, weyl, aut, weyl_inverses, frame_matrix: f, frame_inverse: finv };
        if !r.aut.elements.iter().all(|m| r.preserves_roots(m)) {
            return Err(Error::NotD4("generated automorphisms do not preserve the roots".into()));
        }
        Ok(r)
    }

    pub fn preserves_roots(&self, m: &Mat) -> bool {
        let set: HashSet<&Vec<Q>> = self.roots.iter().collect();
        self.roots.iter().all(|r| set.contains(&m.mul_vec(r)))
    }

    pub fn in_weyl(&self, m: &Mat) -> bool {
        self.weyl.contains(m)
    }

    pub fn in_aut(&self, m: &Mat) -> bool {
        self.aut.contains(m)
    }

    /// The matrix in frame coordinates.
    pub fn to_frame(&self, m: &Mat) -> Mat {
        self.frame_inverse.mul(m).mul(&self.frame_matrix)
    }

    /// Orthogonal reflection in α for the scalar product making the frame orthonormal.
    pub fn reflection(&self, alpha: &[Q]) -> Mat {
        let a = self.frame_inverse.mul_vec(alpha);
        let mut m = Mat::identity(4);
        let norm: Q = a.iter().map(|x| x * x).fold(Q::zero(), |s, x| s + x);
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, m.get(i, j) - q(2) * a[i] * a[j] / norm);
            }
        }
        self.frame_matrix.mul(&m).mul(&self.frame_inverse)
    }

    /// Permutation of the labels {1, 3, 4} (as a permutation of 0..3 on the
    /// positions of α_1, α_3, α_4) of the coset a·W(R).
    pub fn triality_image(&self, a: &Mat) -> Result<Perm> {
        if !self.preserves_roots(a) {
            return Err(Error::NotInAut);
        }
        let outer = [&self.simple[0], &self.simple[2], &self.simple[3]];
        for winv in &self.weyl_inverses {
            let b = winv.mul(a);
            if b.mul_vec(&self.simple[1]) != self.simple[1] {
                continue;
            }
            let imgs: Vec<Vec<Q>> = outer.iter().map(|x| b.mul_vec(x)).collect();
            let pos: Option<Vec<usize>> = imgs.iter().map(|y| outer.iter().position(|x| *x == y)).collect();
            if let Some(p) = pos {
                return Perm::new(p).map_err(|_| Error::NotInAut);
            }
        }
        Err(Error::NotInAut)
    }
}

/// Label of position 0, 1, 2 in `triality_image`.
pub const TRIALITY_LABELS: [usize; 3] = [1, 3, 4];

/// Coordinates (in `v`) of the chains, deduplicated in order.
pub fn coordinate_set(h: &Homology, v: &Subspace, chains: &[EdgeChain]) -> Result<Vec<Vec<Q>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in chains {
        let x = v.coordinates(h, c).ok_or(Error::NotInvariant)?;
        if seen.insert(x.clone()) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Searches for a frame: ε_1 ± ε_2 and ε_3 ± ε_4 are pairs of roots. After
/// relabeling and re-signing, any frame has the first vector as ε_1 + ε_2.
pub fn detect_d4(roots: Vec<Vec<Q>>) -> Result<RootSystemD4> {
    let set: HashSet<Vec<Q>> = roots.iter().cloned().collect();
    if set.len() != 24 {
        return Err(Error::NotD4(format!("expected 24 distinct vectors, got {}", set.len())));
    }
    if roots.iter().any(|r| r.len() != 4) {
        return Err(Error::NotD4("vectors must live in a 4-dimensional space".into()));
    }
    let n = roots.len();
    {
        let i = 0;
        for j in 0..n {
            if i == j || add(&roots[i], &roots[j], 1).iter().all(|x| x.is_zero()) {
                continue;
            }
            let e1 = half(add(&roots[i], &roots[j], 1));
            let e2 = half(add(&roots[i], &roots[j], -1));
            for k in 0..n {
                for l in 0..n {
                    if k == l || add(&roots[k], &roots[l], 1).iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let e3 = half(add(&roots[k], &roots[l], 1));
                    let e4 = half(add(&roots[k], &roots[l], -1));
                    let frame = vec![e1.clone(), e2.clone(), e3, e4];
                    if Mat::from_cols(&frame).det().is_zero() {
                        continue;
                    }
                    if root_set(&frame) == set {
                        return RootSystemD4::with_frame(roots, frame);
                    }
                }
            }
        }
    }
    Err(Error::NotD4("no frame found".into()))
}

/// Orbit of `seeds` under the group, in coordinates.
pub fn orbit(g: &FiniteMatrixGroup, seeds: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in seeds {
        for m in &g.elements {
            let y = m.mul_vec(s);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
    }
    out
}

/// Whether `m` is a signed permutation in frame coordinates (a sanity view
/// on W(R) membership that does not use the enumerated group).
pub fn is_even_signed_permutation(m: &Mat) -> bool {
    let mut negs = 0;
    for j in 0..m.cols {
        let col = m.col(j);
        let nz: Vec<&Q> = col.iter().filter(|x| !x.is_zero()).collect();
        if nz.len() != 1 || !nz[0].abs().is_one() {
            return false;
        }
        if nz[0].is_negative() {
            negs += 1;
        }
    }
    negs % 2 == 0
}
