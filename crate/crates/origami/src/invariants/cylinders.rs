//! Cylinder decompositions in rational directions.

use crate::affine_action::substitute;
use crate::error::Result;
use crate::homology::EdgeChain;
use crate::linalg::Q;
use crate::origami_core::{normalizer, sl2z_word, Letter, Origami, Sl2z};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    /// r-cycles of the normalized origami, bottom to top.
    pub rows: Vec<Vec<usize>>,
    pub width: usize,
    pub height: usize,
    /// width / height
    pub modulus: Q,
    /// Sum of σ over the bottom row, carried back to the original origami.
    pub core: EdgeChain,
}

/// A direction sent to the horizontal by `normalizer`, together with the
/// chain maps between the original and the normalized origami.
#[derive(Clone, Debug)]
pub struct CylinderDecomposition {
    pub direction: (i64, i64),
    pub normalizer: Sl2z,
    pub normalized: Origami,
    pub cylinders: Vec<Cylinder>,
    letters: Vec<Letter>,
    /// stages[0] is the original origami, stages[i + 1] = letter · stages[i].
    stages: Vec<Origami>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl CylinderDecomposition {
    pub fn new(o: &Origami, direction: (i64, i64)) -> Result<Self> {
        let nm = normalizer(direction.0, direction.1)?;
        let letters = sl2z_word(&nm).full_letters();
        let mut stages = vec![o.clone()];
        for &l in letters.iter().rev() {
            let next = stages.last().expect("nonempty").act(l);
            stages.push(next);
        }
        let normalized = stages.last().expect("nonempty").clone();
        let mut d =
            CylinderDecomposition { direction, normalizer: nm, normalized, cylinders: Vec::new(), letters, stages };
        d.cylinders = d.horizontal_cylinders();
        Ok(d)
    }

    /// Pushes a chain on the original origami to the normalized one.
    pub fn forward(&self, c: &EdgeChain) -> EdgeChain {
        let mut v = c.to_vec();
        for (i, &l) in self.letters.iter().rev().enumerate() {
            v = substitute(l, &self.stages[i], &v);
        }
        EdgeChain::from_vec(&v)
    }

    /// Inverse of `forward`.
    pub fn back(&self, c: &EdgeChain) -> EdgeChain {
        let k = self.letters.len();
        let mut v = c.to_vec();
        for (j, &l) in self.letters.iter().enumerate() {
            v = substitute(l.inverse(), &self.stages[k - j], &v);
        }
        EdgeChain::from_vec(&v)
    }

    /// ⟨core_i, c⟩: signed count of vertical edges of `c` crossed by the
    /// bottom row of cylinder i on the normalized origami.
    pub fn pairing(&self, i: usize, c: &EdgeChain) -> Q {
        let f = self.forward(c);
        self.cylinders[i].rows[0].iter().map(|&g| f.zeta[g]).sum()
    }

    fn horizontal_cylinders(&self) -> Vec<Cylinder> {
        let o = &self.normalized;
        let rows = o.r.cycles();
        let mut row_of = vec![0; o.n];
        for (i, r) in rows.iter().enumerate() {
            for &g in r {
                row_of[g] = i;
            }
        }
        let classes = o.vertex_classes();
        let vertex = o.vertex_of_square();
        let regular = |g: usize| !classes[vertex[g]].is_singular();
        // above[i]: the row glued on top of row i across a circle of regular vertices
        let above: Vec<Option<usize>> =
            rows.iter().map(|r| r.iter().all(|&g| regular(o.u.apply(g))).then(|| row_of[o.u.apply(r[0])])).collect();
        let mut parent: Vec<usize> = (0..rows.len()).collect();
        for (i, a) in above.iter().enumerate() {
            if let Some(j) = *a {
                let (x, y) = (find(&mut parent, i), find(&mut parent, j));
                parent[x] = y;
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of = vec![usize::MAX; rows.len()];
        for i in 0..rows.len() {
            let root = find(&mut parent, i);
            if group_of[root] == usize::MAX {
                group_of[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of[root]].push(i);
        }
        groups
            .into_iter()
            .map(|members| {
                let has_below = |i: usize| members.iter().any(|&j| above[j] == Some(i));
                let bottom = members.iter().copied().find(|&i| !has_below(i)).unwrap_or(members[0]);
                let mut order = vec![bottom];
                let mut cur = bottom;
                while let Some(next) = above[cur] {
                    if next == bottom {
                        break;
                    }
                    order.push(next);
                    cur = next;
                }
                let width = rows[bottom].len();
                let height = order.len();
                let mut core = EdgeChain::zero(o.n);
                for &g in &rows[bottom] {
                    core.sigma[g] += Q::from_integer(1);
                }
                Cylinder {
                    rows: order.iter().map(|&i| rows[i].clone()).collect(),
                    width,
                    height,
                    modulus: Q::new(width as i128, height as i128),
                    core: self.back(&core),
                }
            })
            .collect()
    }
}

/// Cylinders in the primitive direction (p, q).
pub fn cylinders(o: &Origami, direction: (i64, i64)) -> Result<Vec<Cylinder>> {
    Ok(CylinderDecomposition::new(o, direction)?.cylinders)
}
