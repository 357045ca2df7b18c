use super::sl2z::{sl2z_word, Letter, Sl2z};
use super::surface::Origami;
use crate::par::Exec;
use std::collections::HashMap;

/// Orbit of an origami under S and T, nodes being isomorphism classes.
///
/// Node 0 is the input. `s_edge[k]` and `t_edge[k]` are the nodes of S·O_k and T·O_k.
#[derive(Clone, Debug)]
pub struct VeechGroup {
    pub orbit: Vec<Origami>,
    pub s_edge: Vec<usize>,
    pub t_edge: Vec<usize>,
    s_inv: Vec<usize>,
    t_inv: Vec<usize>,
}

pub fn veech_group(o: &Origami) -> VeechGroup {
    veech_group_with(o, Exec::default())
}

pub fn veech_group_with(o: &Origami, exec: Exec) -> VeechGroup {
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut orbit = vec![o.clone()];
    index.insert(o.canonical_key(), 0);
    let mut s_edge = vec![usize::MAX];
    let mut t_edge = vec![usize::MAX];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let nodes: Vec<Origami> = frontier.iter().map(|&k| orbit[k].clone()).collect();
        let succ = exec.map(&nodes, |x| {
            let s = x.act(Letter::S);
            let t = x.act(Letter::T);
            let (ks, kt) = (s.canonical_key(), t.canonical_key());
            [(s, ks), (t, kt)]
        });
        let mut next = Vec::new();
        for (&k, pair) in frontier.iter().zip(succ) {
            for (slot, (x, key)) in pair.into_iter().enumerate() {
                let id = *index.entry(key).or_insert_with(|| {
                    orbit.push(x);
                    s_edge.push(usize::MAX);
                    t_edge.push(usize::MAX);
                    next.push(orbit.len() - 1);
                    orbit.len() - 1
                });
                if slot == 0 {
                    s_edge[k] = id;
                } else {
                    t_edge[k] = id;
                }
            }
        }
        frontier = next;
    }
    let invert = |e: &[usize]| {
        let mut inv = vec![0; e.len()];
        for (i, &j) in e.iter().enumerate() {
            inv[j] = i;
        }
        inv
    };
    let s_inv = invert(&s_edge);
    let t_inv = invert(&t_edge);
    VeechGroup { orbit, s_edge, t_edge, s_inv, t_inv }
}

impl VeechGroup {
    pub fn index(&self) -> usize {
        self.orbit.len()
    }

    fn step(&self, node: usize, l: Letter) -> usize {
        match l {
            Letter::S => self.s_edge[node],
            Letter::T => self.t_edge[node],
            Letter::SInv => self.s_inv[node],
            Letter::TInv => self.t_inv[node],
        }
    }

    /// Node reached by M·O, applying the letters of the word right to left.
    pub fn walk(&self, letters: &[Letter]) -> usize {
        letters.iter().rev().fold(0, |node, &l| self.step(node, l))
    }

    pub fn contains(&self, m: &Sl2z) -> bool {
        self.walk(&sl2z_word(m).full_letters()) == 0
    }
}
