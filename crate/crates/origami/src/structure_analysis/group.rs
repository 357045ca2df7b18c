//! Finite matrix groups by breadth-first closure.

use std::collections::HashMap;

use crate::linalg::{q_to_f64, Mat, Q};
use crate::par::Exec;
use num_traits::{Signed, Zero};

/// A finite group of exact rational matrices. Element 0 is the identity; every
/// element remembers the generator word (indices into `generators`, applied
/// left to right as a product g_{w0}·g_{w1}·…) that first reached it.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    pub generators: Vec<Mat>,
    pub elements: Vec<Mat>,
    pub words: Vec<Vec<usize>>,
    index: HashMap<Mat, usize>,
}

#[derive(Clone, Debug)]
pub enum Closure {
    Finite(FiniteMatrixGroup),
    /// The closure passed `cap`; `witness` is a generator word whose powers
    /// keep doubling in norm.
    Unbounded {
        explored: usize,
        witness: Option<Vec<usize>>,
    },
}

impl Closure {
    pub fn finite(self) -> Option<FiniteMatrixGroup> {
        match self {
            Closure::Finite(g) => Some(g),
            Closure::Unbounded { .. } => None,
        }
    }
}

pub fn finite_closure(gens: &[Mat], cap: usize) -> Closure {
    finite_closure_with(gens, cap, Exec::default())
}

pub fn finite_closure_with(gens: &[Mat], cap: usize, exec: Exec) -> Closure {
    assert!(!gens.is_empty(), "need at least one generator");
    let d = gens[0].rows;
    let mut elements = vec![Mat::identity(d)];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::new();
    index.insert(Mat::identity(d), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let products: Vec<Vec<Mat>> = exec.map(&frontier, |&e| gens.iter().map(|g| elements[e].mul(g)).collect());
        let mut next = Vec::new();
        for (&e, row) in frontier.iter().zip(products) {
            for (k, m) in row.into_iter().enumerate() {
                if index.contains_key(&m) {
                    continue;
                }
                let mut w = words[e].clone();
                w.push(k);
                index.insert(m.clone(), elements.len());
                next.push(elements.len());
                elements.push(m);
                words.push(w);
                if elements.len() > cap {
                    let witness = find_witness(&elements, &words, exec);
                    return Closure::Unbounded { explored: elements.len(), witness };
                }
            }
        }
        frontier = next;
    }
    Closure::Finite(FiniteMatrixGroup { generators: gens.to_vec(), elements, words, index })
}

/// Max absolute row sum.
pub fn inf_norm(m: &Mat) -> Q {
    (0..m.rows).map(|i| m.row(i).iter().fold(Q::zero(), |s, x| s + x.abs())).max().unwrap_or_else(Q::zero)
}

fn inf_norm_f64(m: &[f64], d: usize) -> f64 {
    (0..d).map(|i| m[i * d..(i + 1) * d].iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

fn mul_f64(a: &[f64], b: &[f64], d: usize) -> Vec<f64> {
    let mut out = vec![0.0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x != 0.0 {
                for j in 0..d {
                    out[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    out
}

/// Sustained norm growth of M^(2^k), rescaled at every squaring.
pub fn powers_grow(m: &Mat) -> bool {
    let d = m.rows;
    let mut a = m.to_f64();
    let n0 = inf_norm_f64(&a, d);
    if n0 == 0.0 {
        return false;
    }
    a.iter_mut().for_each(|x| *x /= n0);
    let mut logs = vec![n0.ln()];
    for _ in 0..12 {
        let sq = mul_f64(&a, &a, d);
        let n = inf_norm_f64(&sq, d);
        if n == 0.0 {
            return false;
        }
        logs.push(2.0 * logs.last().unwrap() + n.ln());
        a = sq.iter().map(|x| x / n).collect();
    }
    logs[12] - logs[0] > 4.0 && logs.windows(2).skip(6).all(|w| w[1] - w[0] > 0.4)
}

fn find_witness(elements: &[Mat], words: &[Vec<usize>], exec: Exec) -> Option<Vec<usize>> {
    let probe: Vec<usize> = (1..elements.len().min(2000)).collect();
    let hits = exec.map(&probe, |&i| powers_grow(&elements[i]));
    probe.iter().zip(hits).find(|(_, h)| *h).map(|(&i, _)| words[i].clone())
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Subgroup of elements satisfying `keep` (the caller guarantees closure).
    pub fn filter(&self, keep: impl Fn(&Mat) -> bool) -> FiniteMatrixGroup {
        let mut elements = Vec::new();
        let mut words = Vec::new();
        let mut index = HashMap::new();
        for (m, w) in self.elements.iter().zip(&self.words) {
            if keep(m) {
                index.insert(m.clone(), elements.len());
                elements.push(m.clone());
                words.push(w.clone());
            }
        }
        FiniteMatrixGroup { generators: self.generators.clone(), elements, words, index }
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| self.elements.iter().all(|b| self.contains(&a.mul(b))))
    }

    pub fn element_order(&self, m: &Mat) -> usize {
        let mut acc = m.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.mul(m);
            k += 1;
        }
        k
    }

    pub fn involutions(&self) -> Vec<&Mat> {
        self.elements.iter().filter(|m| !m.is_identity() && m.mul(m).is_identity()).collect()
    }

    pub fn max_norm(&self) -> Q {
        self.elements.iter().map(inf_norm).max().unwrap_or_else(Q::zero)
    }

    pub fn max_norm_f64(&self) -> f64 {
        q_to_f64(&self.max_norm())
    }
}

/// Elements g of `g` with gᵀ·Ω·g = Ω.
pub fn symplectic_subgroup(g: &FiniteMatrixGroup, gram: &Mat) -> FiniteMatrixGroup {
    g.filter(|m| &m.transpose().mul(gram).mul(m) == gram)
}
