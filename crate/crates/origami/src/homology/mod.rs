//! Relative homology H1(M, Σ') of an origami, Σ' being all vertices, presented
//! by the 2n edge generators modulo the square relations.

mod chain;
mod intersection;
pub mod named;

pub use chain::{holonomy, EdgeChain};
pub use intersection::Direction;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, q, Mat, RowSpace, Q};
use crate::origami_core::{Origami, Perm, VertexClass};
use num_traits::Zero;

/// Cached presentation of the homology of one origami.
///
/// Quotient coordinates are the coefficients on the non-pivot columns of the
/// reduced relation matrix. Since that matrix is totally unimodular the
/// reduction keeps integer chains integral.
#[derive(Clone, Debug)]
pub struct Homology {
    pub origami: Origami,
    relations: RowSpace,
    free: Vec<usize>,
    vertex_of: Vec<usize>,
    classes: Vec<VertexClass>,
    r_inv: Perm,
    u_inv: Perm,
}

/// □_g = σ_g + ζ_{r g} − ζ_g − σ_{u g}.
pub fn square_relation(o: &Origami, g: usize) -> EdgeChain {
    let mut c = EdgeChain::zero(o.n);
    c.sigma[g] += q(1);
    c.zeta[o.r.apply(g)] += q(1);
    c.zeta[g] -= q(1);
    c.sigma[o.u.apply(g)] -= q(1);
    c
}

/// Basis of n − 1 relations (the last square is dropped since Σ □_g = 0).
pub fn relation_lattice(o: &Origami) -> Vec<EdgeChain> {
    (0..o.n.saturating_sub(1)).map(|g| square_relation(o, g)).collect()
}

impl Homology {
    pub fn new(o: &Origami) -> Self {
        let n = o.n;
        let rows: Vec<Vec<Q>> = relation_lattice(o).iter().map(|c| c.to_vec()).collect();
        let relations = RowSpace::new(2 * n, &rows);
        let free = (0..2 * n).filter(|c| !relations.ech.pivots.contains(c)).collect();
        Homology {
            origami: o.clone(),
            relations,
            free,
            vertex_of: o.vertex_of_square(),
            classes: o.vertex_classes(),
            r_inv: o.r.inverse(),
            u_inv: o.u.inverse(),
        }
    }

    pub fn n(&self) -> usize {
        self.origami.n
    }

    pub fn rank(&self) -> usize {
        self.relations.dim()
    }

    /// Dimension of H1(M, Σ').
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn vertex_classes(&self) -> &[VertexClass] {
        &self.classes
    }

    pub fn vertex_of_square(&self) -> &[usize] {
        &self.vertex_of
    }

    pub fn singular_marks(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&k| self.classes[k].is_singular()).collect()
    }

    pub fn canonical_form(&self, c: &EdgeChain) -> EdgeChain {
        EdgeChain::from_vec(&self.relations.reduce(&c.to_vec()))
    }

    pub fn canonical_vec(&self, v: &[Q]) -> Vec<Q> {
        self.relations.reduce(v)
    }

    pub fn equivalent(&self, a: &EdgeChain, b: &EdgeChain) -> bool {
        self.is_null(&(a - b))
    }

    pub fn is_null(&self, c: &EdgeChain) -> bool {
        self.relations.contains(&c.to_vec())
    }

    /// Coordinates of the class of `c` on the free generators.
    pub fn coords(&self, c: &EdgeChain) -> Vec<Q> {
        self.coords_of_vec(&c.to_vec())
    }

    pub fn coords_of_vec(&self, v: &[Q]) -> Vec<Q> {
        let red = self.relations.reduce(v);
        self.free.iter().map(|&f| red[f]).collect()
    }

    pub fn from_coords(&self, x: &[Q]) -> EdgeChain {
        let mut v = vec![Q::zero(); 2 * self.n()];
        for (&f, a) in self.free.iter().zip(x) {
            v[f] = *a;
        }
        EdgeChain::from_vec(&v)
    }

    /// Projection onto canonical forms as a 2n × 2n matrix.
    pub fn projector(&self) -> Mat {
        let n2 = 2 * self.n();
        let cols: Vec<Vec<Q>> = (0..n2)
            .map(|j| {
                let mut e = vec![Q::zero(); n2];
                e[j] = q(1);
                self.relations.reduce(&e)
            })
            .collect();
        Mat::from_cols(&cols)
    }

    /// Coefficients over `vertex_classes()`.
    pub fn boundary(&self, c: &EdgeChain) -> Vec<Q> {
        let o = &self.origami;
        let mut b = vec![Q::zero(); self.classes.len()];
        for g in 0..o.n {
            let (s, z) = (c.sigma[g], c.zeta[g]);
            if !s.is_zero() {
                b[self.vertex_of[o.r.apply(g)]] += s;
                b[self.vertex_of[g]] -= s;
            }
            if !z.is_zero() {
                b[self.vertex_of[o.u.apply(g)]] += z;
                b[self.vertex_of[g]] -= z;
            }
        }
        b
    }

    pub fn is_absolute(&self, c: &EdgeChain) -> bool {
        is_zero_vec(&self.boundary(c))
    }

    /// Boundary map in quotient coordinates, one row per vertex class.
    fn boundary_matrix(&self) -> Mat {
        let cols: Vec<Vec<Q>> = (0..self.dim())
            .map(|k| {
                let mut x = vec![Q::zero(); self.dim()];
                x[k] = q(1);
                self.boundary(&self.from_coords(&x))
            })
            .collect();
        if cols.is_empty() {
            return Mat::zeros(self.classes.len(), 0);
        }
        Mat::from_cols(&cols)
    }

    fn holonomy_rows(&self) -> [Vec<Q>; 2] {
        let mut hs = Vec::new();
        let mut hz = Vec::new();
        for k in 0..self.dim() {
            let mut x = vec![Q::zero(); self.dim()];
            x[k] = q(1);
            let (a, b) = self.from_coords(&x).holonomy();
            hs.push(a);
            hz.push(b);
        }
        [hs, hz]
    }

    fn kernel_subspace(&self, rows: Vec<Vec<Q>>) -> Subspace {
        let d = self.dim();
        let basis: Vec<Vec<Q>> = if rows.is_empty() {
            (0..d)
                .map(|k| {
                    let mut x = vec![Q::zero(); d];
                    x[k] = q(1);
                    x
                })
                .collect()
        } else {
            Mat::from_rows(&rows).kernel()
        };
        let chains: Vec<EdgeChain> = basis.iter().map(|x| self.from_coords(x)).collect();
        Subspace::new(self, chains)
    }

    /// Classes whose boundary is supported on `marks` (indices into `vertex_classes()`).
    pub fn marked_subspace(&self, marks: &[usize]) -> Subspace {
        let b = self.boundary_matrix();
        let rows = (0..self.classes.len()).filter(|k| !marks.contains(k)).map(|k| b.row(k).to_vec()).collect();
        self.kernel_subspace(rows)
    }

    /// H1(M, Σ) with Σ the singular vertices.
    pub fn relative_subspace(&self) -> Subspace {
        self.marked_subspace(&self.singular_marks())
    }

    /// ker ∂ = H1(M). The basis is a Z-basis of the integral classes.
    pub fn absolute_subspace(&self) -> Subspace {
        self.marked_subspace(&[])
    }

    pub fn standard_splitting(&self) -> StandardSplitting {
        let n = self.n();
        let sigma = EdgeChain { sigma: vec![q(1); n], zeta: vec![Q::zero(); n] };
        let zeta = EdgeChain { sigma: vec![Q::zero(); n], zeta: vec![q(1); n] };
        let b = self.boundary_matrix();
        let [hs, hz] = self.holonomy_rows();
        let mut abs_rows: Vec<Vec<Q>> = b.to_rows();
        abs_rows.push(hs.clone());
        abs_rows.push(hz.clone());
        let marks = self.singular_marks();
        let mut rel_rows: Vec<Vec<Q>> =
            (0..self.classes.len()).filter(|k| !marks.contains(k)).map(|k| b.row(k).to_vec()).collect();
        rel_rows.push(hs);
        rel_rows.push(hz);
        StandardSplitting {
            sigma,
            zeta,
            h1_0_abs: self.kernel_subspace(abs_rows),
            h1_0_rel: self.kernel_subspace(rel_rows),
        }
    }

    pub fn subspace(&self, chains: Vec<EdgeChain>) -> Subspace {
        Subspace::new(self, chains)
    }

    pub fn named_subspace(&self, names: Vec<String>, chains: Vec<EdgeChain>) -> Result<Subspace> {
        let s = Subspace::new(self, chains);
        if s.dim() != s.basis.len() {
            return Err(Error::NotInvariant);
        }
        Ok(Subspace { names, ..s })
    }
}

#[derive(Clone, Debug)]
pub struct StandardSplitting {
    pub sigma: EdgeChain,
    pub zeta: EdgeChain,
    pub h1_0_abs: Subspace,
    pub h1_0_rel: Subspace,
}

/// A subspace of H1(M, Σ'), tracked in quotient coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    /// Optional labels for the basis vectors; empty for anonymous subspaces.
    pub names: Vec<String>,
    /// Canonical forms of the basis vectors.
    pub basis: Vec<EdgeChain>,
    coords: Vec<Vec<Q>>,
    span: RowSpace,
}

impl Subspace {
    /// Span of `chains`; dependent vectors are dropped from the basis.
    pub fn new(h: &Homology, chains: Vec<EdgeChain>) -> Self {
        let d = h.dim();
        let mut span = RowSpace::new(d, &[]);
        let mut basis = Vec::new();
        let mut coords = Vec::new();
        for c in chains {
            let x = h.coords(&c);
            if span.contains(&x) {
                continue;
            }
            coords.push(x);
            span = RowSpace::new(d, &coords);
            basis.push(h.canonical_form(&c));
        }
        Subspace { names: Vec::new(), basis, coords, span }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, h: &Homology, c: &EdgeChain) -> bool {
        self.span.contains(&h.coords(c))
    }

    /// Coefficients of `c` in the basis, if `c` lies in the span.
    pub fn coordinates(&self, h: &Homology, c: &EdgeChain) -> Option<Vec<Q>> {
        if self.basis.is_empty() {
            return h.is_null(c).then(Vec::new);
        }
        Mat::from_cols(&self.coords).solve(&h.coords(c))
    }

    pub fn coords_in_quotient(&self) -> &[Vec<Q>] {
        &self.coords
    }

    pub fn contains_subspace(&self, h: &Homology, o: &Subspace) -> bool {
        o.basis.iter().all(|c| self.contains(h, c))
    }
}

/// True iff the subspaces are independent (their dimensions add up in the sum).
pub fn is_direct_sum(h: &Homology, parts: &[&Subspace]) -> bool {
    let all: Vec<EdgeChain> = parts.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    let total = all.len();
    Subspace::new(h, all).dim() == total
}
