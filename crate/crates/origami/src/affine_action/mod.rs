//! Affine diffeomorphisms of an origami acting on H1(M, Σ').

use crate::error::{Error, Result};
use crate::homology::{EdgeChain, Homology, Subspace};
use crate::linalg::{q, Mat, Q};
use crate::origami_core::{sl2z_word, Letter, Origami, Perm, Sl2z};
use crate::par::Exec;
use num_traits::Zero;

/// Chain map from `source` to `target = letter · source`.
#[derive(Clone, Debug)]
pub struct EdgeSubstitution {
    pub letter: Letter,
    pub source: Origami,
    pub target: Origami,
    /// Images of σ_0..σ_{n−1}, ζ_0..ζ_{n−1}.
    pub images: Vec<EdgeChain>,
}

/// Pushes a chain vector (σ then ζ) along one letter, reading indices on `o`.
pub fn substitute(letter: Letter, o: &Origami, v: &[Q]) -> Vec<Q> {
    let n = o.n;
    let (vs, vz) = v.split_at(n);
    let mut out = vec![Q::zero(); 2 * n];
    let inv = match letter {
        Letter::TInv => Some(o.r.inverse()),
        Letter::SInv => Some(o.u.inverse()),
        _ => None,
    };
    for g in 0..n {
        let (s, z) = (vs[g], vz[g]);
        match letter {
            Letter::T => {
                out[g] += s;
                if !z.is_zero() {
                    out[g] += z;
                    out[n + o.r.apply(g)] += z;
                }
            }
            Letter::TInv => {
                out[g] += s;
                if !z.is_zero() {
                    let h = inv.as_ref().unwrap().apply(g);
                    out[n + h] += z;
                    out[h] -= z;
                }
            }
            Letter::S => {
                out[n + g] += z;
                if !s.is_zero() {
                    out[n + g] += s;
                    out[o.u.apply(g)] += s;
                }
            }
            Letter::SInv => {
                out[n + g] += z;
                if !s.is_zero() {
                    let h = inv.as_ref().unwrap().apply(g);
                    out[h] += s;
                    out[n + h] -= s;
                }
            }
        }
    }
    out
}

pub fn elementary_substitution(letter: Letter, o: &Origami) -> EdgeSubstitution {
    let n = o.n;
    let images = (0..2 * n)
        .map(|j| {
            let mut e = vec![Q::zero(); 2 * n];
            e[j] = q(1);
            EdgeChain::from_vec(&substitute(letter, o, &e))
        })
        .collect();
    EdgeSubstitution { letter, source: o.clone(), target: o.act(letter), images }
}

impl EdgeSubstitution {
    pub fn apply(&self, c: &EdgeChain) -> EdgeChain {
        EdgeChain::from_vec(&substitute(self.letter, &self.source, &c.to_vec()))
    }
}

/// How to close the orbit walk back onto the original labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ClosingChoice {
    /// Fix the base square if possible, else the lexicographically least isomorphism.
    #[default]
    Canonical,
    /// Position in the sorted list of isomorphisms.
    Index(usize),
    /// The isomorphism sending the base square to the given square.
    MapBaseTo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLift {
    pub origami: Origami,
    pub linear_part: Sl2z,
    /// The germ of the eastward ray at the lower-left corner of square g is
    /// sent to the ray of direction `linear_part·(1,0)`, measured counter-clockwise
    /// from the eastward ray at the lower-left corner of `relabeling(g)`.
    pub relabeling: Perm,
    /// 2n × 2n matrix whose columns are canonical forms of generator images.
    pub matrix: Mat,
    pub marked_fix: bool,
}

fn relabel(phi: &Perm, v: &[Q]) -> Vec<Q> {
    let n = phi.len();
    let mut out = vec![Q::zero(); 2 * n];
    for g in 0..n {
        out[phi.apply(g)] = v[g];
        out[n + phi.apply(g)] = v[n + g];
    }
    out
}

/// Position of a nonzero direction on [0, 2π), compared exactly.
fn arg_lt(v: (i64, i64), w: (i64, i64)) -> bool {
    let half = |(a, c): (i64, i64)| if c > 0 || (c == 0 && a > 0) { 0 } else { 1 };
    let (hv, hw) = (half(v), half(w));
    if hv != hw {
        return hv < hw;
    }
    (v.0 as i128) * (w.1 as i128) - (v.1 as i128) * (w.0 as i128) > 0
}

/// Relabeling of outer ∘ inner; `o` is the surface both maps land on.
fn compose_relabel(o: &Origami, outer: (&Perm, &Sl2z), inner: (&Perm, &Sl2z)) -> Perm {
    let phi = outer.0.compose(inner.0);
    let e_outer = outer.1.apply((1, 0));
    let e_total = outer.1.mul(inner.1).apply((1, 0));
    if arg_lt(e_total, e_outer) {
        o.commutator().compose(&phi)
    } else {
        phi
    }
}

fn base_fixed(o: &Origami, phi: &Perm) -> bool {
    let v = o.vertex_of_square();
    v[phi.apply(o.base)] == v[o.base]
}

/// Isomorphisms from M·O back to O, sorted.
pub fn closing_candidates(o: &Origami, m: &Sl2z) -> Vec<Perm> {
    o.act_matrix(m).isomorphisms(o)
}

fn choose(o: &Origami, isos: &[Perm], closing: ClosingChoice) -> Result<Perm> {
    match closing {
        ClosingChoice::Canonical => Ok(isos.iter().find(|p| p.apply(o.base) == o.base).unwrap_or(&isos[0]).clone()),
        ClosingChoice::Index(k) => isos.get(k).cloned().ok_or(Error::BadClosingChoice(k)),
        ClosingChoice::MapBaseTo(s) => {
            isos.iter().find(|p| p.apply(o.base) == s).cloned().ok_or(Error::BadClosingChoice(s))
        }
    }
}

/// Lift of a Veech group element, composed from elementary substitutions.
pub fn lift(h: &Homology, m: &Sl2z, closing: ClosingChoice) -> Result<AffineLift> {
    let o = &h.origami;
    let letters = sl2z_word(m).full_letters();
    let n = o.n;
    let mut cols: Vec<Vec<Q>> = (0..2 * n)
        .map(|j| {
            let mut e = vec![Q::zero(); 2 * n];
            e[j] = q(1);
            e
        })
        .collect();
    let mut cur = o.clone();
    let mut germ = Perm::identity(n);
    let mut lin = Sl2z::ID;
    for &l in letters.iter().rev() {
        for c in cols.iter_mut() {
            *c = substitute(l, &cur, c);
        }
        cur = cur.act(l);
        // S⁻¹ sends the eastward ray to the south-east quadrant, a full turn back
        let step = if l == Letter::SInv { cur.commutator().inverse() } else { Perm::identity(n) };
        germ = compose_relabel(&cur, (&step, &l.matrix()), (&germ, &lin));
        lin = l.matrix().mul(&lin);
    }
    let isos = cur.isomorphisms(o);
    if isos.is_empty() {
        return Err(Error::NotInVeechGroup);
    }
    let phi = choose(o, &isos, closing)?;
    let relabeling = phi.compose(&germ);
    let cols: Vec<Vec<Q>> = cols.iter().map(|c| h.canonical_vec(&relabel(&phi, c))).collect();
    Ok(AffineLift {
        origami: o.clone(),
        linear_part: *m,
        marked_fix: base_fixed(o, &phi),
        relabeling,
        matrix: Mat::from_cols(&cols),
    })
}

/// Every lift of `m`, one per closing isomorphism.
pub fn all_lifts(h: &Homology, m: &Sl2z) -> Result<Vec<AffineLift>> {
    let k = closing_candidates(&h.origami, m).len();
    if k == 0 {
        return Err(Error::NotInVeechGroup);
    }
    (0..k).map(|i| lift(h, m, ClosingChoice::Index(i))).collect()
}

/// Lifts a batch of matrices; output order matches input order.
pub fn lift_many(h: &Homology, ms: &[Sl2z], closing: ClosingChoice, exec: Exec) -> Vec<Result<AffineLift>> {
    exec.map(ms, |m| lift(h, m, closing))
}

pub fn automorphism_lift(h: &Homology, a: &Perm) -> Result<AffineLift> {
    let o = &h.origami;
    if a.len() != o.n || a.compose(&o.r) != o.r.compose(a) || a.compose(&o.u) != o.u.compose(a) {
        return Err(Error::NotAutomorphism);
    }
    let n = o.n;
    let cols: Vec<Vec<Q>> = (0..2 * n)
        .map(|j| {
            let mut e = vec![Q::zero(); 2 * n];
            e[j] = q(1);
            h.canonical_vec(&relabel(a, &e))
        })
        .collect();
    Ok(AffineLift {
        origami: o.clone(),
        linear_part: Sl2z::ID,
        marked_fix: base_fixed(o, a),
        relabeling: a.clone(),
        matrix: Mat::from_cols(&cols),
    })
}

impl AffineLift {
    pub fn identity(h: &Homology) -> AffineLift {
        automorphism_lift(h, &Perm::identity(h.n())).expect("identity is an automorphism")
    }

    pub fn apply(&self, c: &EdgeChain) -> EdgeChain {
        EdgeChain::from_vec(&self.matrix.mul_vec(&c.to_vec()))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &AffineLift) -> Result<AffineLift> {
        if self.origami != other.origami {
            return Err(Error::Mismatch);
        }
        let relabeling = compose_relabel(
            &self.origami,
            (&self.relabeling, &self.linear_part),
            (&other.relabeling, &other.linear_part),
        );
        Ok(AffineLift {
            origami: self.origami.clone(),
            linear_part: self.linear_part.mul(&other.linear_part),
            marked_fix: base_fixed(&self.origami, &relabeling),
            relabeling,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// The action on quotient coordinates of H1(M, Σ').
    pub fn quotient_matrix(&self, h: &Homology) -> Mat {
        let d = h.dim();
        let cols: Vec<Vec<Q>> = (0..d)
            .map(|k| {
                let mut x = vec![Q::zero(); d];
                x[k] = q(1);
                h.coords(&self.apply(&h.from_coords(&x)))
            })
            .collect();
        Mat::from_cols(&cols)
    }

    pub fn inverse(&self, h: &Homology) -> AffineLift {
        let qinv = self.quotient_matrix(h).inverse().expect("affine lifts are invertible");
        let n = h.n();
        let cols: Vec<Vec<Q>> = (0..2 * n)
            .map(|j| {
                let mut e = vec![Q::zero(); 2 * n];
                e[j] = q(1);
                h.from_coords(&qinv.mul_vec(&h.coords_of_vec(&e))).to_vec()
            })
            .collect();
        AffineLift {
            origami: self.origami.clone(),
            linear_part: self.linear_part.inv(),
            marked_fix: self.marked_fix,
            relabeling: self.inverse_relabel(),
            matrix: Mat::from_cols(&cols),
        }
    }

    fn inverse_relabel(&self) -> Perm {
        let inv = self.relabeling.inverse();
        if self.linear_part.apply((1, 0)).1 == 0 && self.linear_part.apply((1, 0)).0 > 0 {
            inv
        } else {
            inv.compose(&self.origami.commutator().inverse())
        }
    }

    pub fn pow(&self, h: &Homology, k: u64) -> AffineLift {
        let mut acc = AffineLift::identity(h);
        for _ in 0..k {
            acc = acc.compose(self).expect("same surface");
        }
        acc
    }

    /// Equality of the relabeling and of the homology action.
    pub fn same_action(&self, other: &AffineLift) -> bool {
        self.relabeling == other.relabeling && self.matrix == other.matrix
    }

    pub fn is_identity(&self, h: &Homology) -> bool {
        self.same_action(&AffineLift::identity(h))
    }

    pub fn power_order(&self, h: &Homology, cap: u64) -> Result<u64> {
        let id = AffineLift::identity(h);
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.same_action(&id) {
                return Ok(k);
            }
            acc = acc.compose(self)?;
        }
        Err(Error::OrderExceedsCap(cap))
    }

    /// Induced permutation of `h.vertex_classes()`.
    pub fn vertex_permutation(&self, h: &Homology) -> Perm {
        let v = h.vertex_of_square();
        Perm::from_fn(h.vertex_classes().len(), |k| v[self.relabeling.apply(h.vertex_classes()[k].cycle[0])])
    }

    /// Matrix of the restriction to `v`, in the basis of `v`.
    pub fn matrix_on(&self, h: &Homology, v: &Subspace) -> Result<Mat> {
        let k = v.dim();
        let mut m = Mat::zeros(k, k);
        for (j, b) in v.basis.iter().enumerate() {
            let x = v.coordinates(h, &self.apply(b)).ok_or(Error::NotInvariant)?;
            for (i, c) in x.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }
}
