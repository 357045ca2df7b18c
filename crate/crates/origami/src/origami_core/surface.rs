use super::perm::Perm;
use super::sl2z::{sl2z_word, Letter, Sl2z};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// A square-tiled surface: `r` sends a square to its right neighbour, `u` to
/// the one above.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Origami {
    pub n: usize,
    pub r: Perm,
    pub u: Perm,
    #[serde(default)]
    pub base: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    /// Squares whose lower-left corner is this vertex, in commutator order.
    pub cycle: Vec<usize>,
}

impl VertexClass {
    pub fn multiplicity(&self) -> usize {
        self.cycle.len()
    }

    pub fn zero_order(&self) -> usize {
        self.cycle.len() - 1
    }

    pub fn is_singular(&self) -> bool {
        self.cycle.len() > 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// Orders of the zeros, descending.
    pub zero_orders: Vec<usize>,
    pub genus: usize,
}

impl Origami {
    pub fn new(r: Perm, u: Perm) -> Result<Self> {
        Self::with_base(r, u, 0)
    }

    pub fn with_base(r: Perm, u: Perm, base: usize) -> Result<Self> {
        let n = r.len();
        if n == 0 || u.len() != n {
            return Err(Error::NotPermutation(format!("sizes {} and {}", r.len(), u.len())));
        }
        if base >= n {
            return Err(Error::NotPermutation(format!("base square {base} out of range")));
        }
        let o = Origami { n, r, u, base };
        if !o.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(o)
    }

    /// Validating constructor from raw image arrays.
    pub fn from_images(r: Vec<usize>, u: Vec<usize>) -> Result<Self> {
        Origami::new(Perm::new(r)?, Perm::new(u)?)
    }

    pub fn torus() -> Self {
        Origami { n: 1, r: Perm::identity(1), u: Perm::identity(1), base: 0 }
    }

    /// Re-validates a deserialized value.
    pub fn validated(self) -> Result<Self> {
        let r = Perm::new(self.r.images().to_vec())?;
        let u = Perm::new(self.u.images().to_vec())?;
        if r.len() != self.n {
            return Err(Error::NotPermutation(format!("n = {} but r has {} entries", self.n, r.len())));
        }
        Origami::with_base(r, u, self.base)
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [self.r.apply(x), self.u.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// u∘r∘u⁻¹∘r⁻¹, whose cycles are the vertex classes.
    pub fn commutator(&self) -> Perm {
        self.u.compose(&self.r).compose(&self.u.inverse()).compose(&self.r.inverse())
    }

    pub fn vertex_classes(&self) -> Vec<VertexClass> {
        self.commutator().cycles().into_iter().map(|cycle| VertexClass { cycle }).collect()
    }

    /// Index into `vertex_classes()` of each square's lower-left corner.
    pub fn vertex_of_square(&self) -> Vec<usize> {
        let mut v = vec![0; self.n];
        for (i, c) in self.vertex_classes().iter().enumerate() {
            for &g in &c.cycle {
                v[g] = i;
            }
        }
        v
    }

    pub fn stratum(&self) -> Stratum {
        let mut zero_orders: Vec<usize> =
            self.vertex_classes().iter().map(|c| c.zero_order()).filter(|&k| k > 0).collect();
        zero_orders.sort_unstable_by(|a, b| b.cmp(a));
        let total: usize = zero_orders.iter().sum();
        Stratum { genus: total / 2 + 1, zero_orders }
    }

    pub fn genus(&self) -> usize {
        self.stratum().genus
    }

    pub fn act(&self, letter: Letter) -> Origami {
        let (r, u) = match letter {
            Letter::T => (self.r.clone(), self.u.compose(&self.r.inverse())),
            Letter::TInv => (self.r.clone(), self.u.compose(&self.r)),
            Letter::S => (self.r.compose(&self.u.inverse()), self.u.clone()),
            Letter::SInv => (self.r.compose(&self.u), self.u.clone()),
        };
        Origami { n: self.n, r, u, base: self.base }
    }

    /// Applies the letters right to left, so the result is (L1 … Lk)·O.
    pub fn act_letters(&self, letters: &[Letter]) -> Origami {
        letters.iter().rev().fold(self.clone(), |o, &l| o.act(l))
    }

    pub fn act_matrix(&self, m: &Sl2z) -> Origami {
        self.act_letters(&sl2z_word(m).full_letters())
    }

    /// Relabeling φ with φ∘r1 = r2∘φ, φ∘u1 = u2∘φ and φ(0) = t, if any.
    fn iso_from(&self, other: &Origami, t: usize) -> Option<Perm> {
        let n = self.n;
        let mut phi = vec![usize::MAX; n];
        phi[0] = t;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let y = phi[x];
            for (a, b) in [(self.r.apply(x), other.r.apply(y)), (self.u.apply(x), other.u.apply(y))] {
                if phi[a] == usize::MAX {
                    phi[a] = b;
                    queue.push_back(a);
                } else if phi[a] != b {
                    return None;
                }
            }
        }
        Perm::new(phi).ok()
    }

    /// All isomorphisms self → other, sorted lexicographically by image array.
    pub fn isomorphisms(&self, other: &Origami) -> Vec<Perm> {
        if self.n != other.n {
            return Vec::new();
        }
        let mut out: Vec<Perm> = (0..self.n).filter_map(|t| self.iso_from(other, t)).collect();
        out.sort();
        out
    }

    pub fn automorphisms(&self) -> Vec<Perm> {
        self.isomorphisms(self)
    }

    pub fn is_isomorphic(&self, other: &Origami) -> bool {
        self.n == other.n && self.canonical_key() == other.canonical_key()
    }

    /// Minimal (r, u) encoding over breadth-first relabelings from every start square.
    pub fn canonical_key(&self) -> Vec<u32> {
        let n = self.n;
        let mut best: Option<Vec<u32>> = None;
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            label.iter_mut().for_each(|x| *x = u32::MAX);
            order.clear();
            label[s] = 0;
            order.push(s);
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for y in [self.r.apply(x), self.u.apply(x)] {
                    if label[y] == u32::MAX {
                        label[y] = order.len() as u32;
                        order.push(y);
                    }
                }
            }
            let mut key = Vec::with_capacity(2 * n);
            key.extend(order.iter().map(|&x| label[self.r.apply(x)]));
            key.extend(order.iter().map(|&x| label[self.u.apply(x)]));
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }

    /// The origami rebuilt from its canonical key (labels 0..n in canonical order).
    pub fn canonical(&self) -> Origami {
        let key = self.canonical_key();
        let n = self.n;
        let r = Perm::new(key[..n].iter().map(|&x| x as usize).collect()).unwrap();
        let u = Perm::new(key[n..].iter().map(|&x| x as usize).collect()).unwrap();
        Origami { n, r, u, base: 0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_has_one_regular_vertex() {
        let t = Origami::torus();
        let v = t.vertex_classes();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].multiplicity(), 1);
        assert_eq!(t.genus(), 1);
        assert_eq!(t.act(Letter::T), t);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let r = Perm::new(vec![1, 0, 3, 2]).unwrap();
        let u = Perm::identity(4);
        assert_eq!(Origami::new(r, u), Err(Error::NotTransitive));
    }

    #[test]
    fn letters_invert() {
        let o = Origami::from_images(vec![1, 2, 0, 4, 3], vec![3, 4, 2, 0, 1]).unwrap();
        for l in [Letter::S, Letter::T] {
            assert_eq!(o.act(l).act(l.inverse()), o);
            assert_eq!(o.act(l.inverse()).act(l), o);
        }
    }

    #[test]
    fn canonical_key_is_label_invariant() {
        let o = Origami::from_images(vec![1, 2, 0, 4, 3], vec![3, 4, 2, 0, 1]).unwrap();
        let p = Perm::new(vec![4, 2, 0, 3, 1]).unwrap();
        let pi = p.inverse();
        let r2 = p.compose(&o.r).compose(&pi);
        let u2 = p.compose(&o.u).compose(&pi);
        let o2 = Origami::new(r2, u2).unwrap();
        assert_eq!(o.canonical_key(), o2.canonical_key());
        let isos = o.isomorphisms(&o2);
        assert!(isos.contains(&p));
        assert_eq!(isos.len(), o.automorphisms().len());
    }
}
