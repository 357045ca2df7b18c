//! Principal congruence subgroups: Reidemeister–Schreier generators from the
//! coset graph of SL(2, Z/N), and the kernel-versus-Γ(N) accounting.

use std::collections::HashMap;

use super::group::{finite_closure, Closure, FiniteMatrixGroup};
use crate::affine_action::{all_lifts, AffineLift};
use crate::error::{Error, Result};
use crate::homology::Homology;
use crate::linalg::Mat;
use crate::origami_core::{veech_group, Letter, Sl2z, Word};

type Residue = [i64; 4];

fn reduce(m: &Sl2z, n: i64) -> Residue {
    m.reduce_mod(n)
}

fn mul_res(a: &Residue, b: &Residue, n: i64) -> Residue {
    [
        (a[0] * b[0] + a[1] * b[2]).rem_euclid(n),
        (a[0] * b[1] + a[1] * b[3]).rem_euclid(n),
        (a[2] * b[0] + a[3] * b[2]).rem_euclid(n),
        (a[2] * b[1] + a[3] * b[3]).rem_euclid(n),
    ]
}

/// The Schreier coset graph of Γ(N) for right multiplication by S and T,
/// with a BFS spanning tree.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub level: i64,
    pub cosets: Vec<Residue>,
    index: HashMap<Residue, usize>,
    /// `next[v][0]` is v·S, `next[v][1]` is v·T.
    pub next: Vec<[usize; 2]>,
    /// Transversal word (positive letters) reaching each coset from the identity.
    pub transversal: Vec<Vec<Letter>>,
    /// Generator labels (coset, letter index) of the non-tree edges.
    pub schreier_edges: Vec<(usize, usize)>,
}

const LETTERS: [Letter; 2] = [Letter::S, Letter::T];

impl CosetGraph {
    pub fn new(level: i64) -> Self {
        assert!(level >= 2, "level must be at least 2");
        let gens = LETTERS.map(|l| reduce(&l.matrix(), level));
        let id = reduce(&Sl2z::ID, level);
        let mut cosets = vec![id];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut transversal = vec![Vec::new()];
        let mut parent_edge: Vec<Option<(usize, usize)>> = vec![None];
        let mut k = 0;
        while k < cosets.len() {
            for (li, g) in gens.iter().enumerate() {
                let y = mul_res(&cosets[k], g, level);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                    e.insert(cosets.len());
                    cosets.push(y);
                    let mut w = transversal[k].clone();
                    w.push(LETTERS[li]);
                    transversal.push(w);
                    parent_edge.push(Some((k, li)));
                }
            }
            k += 1;
        }
        let next: Vec<[usize; 2]> = cosets.iter().map(|c| gens.map(|g| index[&mul_res(c, &g, level)])).collect();
        let mut schreier_edges = Vec::new();
        for v in 0..cosets.len() {
            for li in 0..2 {
                let target = next[v][li];
                if parent_edge[target] != Some((v, li)) {
                    schreier_edges.push((v, li));
                }
            }
        }
        CosetGraph { level, cosets, index, next, transversal, schreier_edges }
    }

    pub fn index_of(&self, m: &Sl2z) -> usize {
        self.index[&reduce(m, self.level)]
    }

    fn generator_word(&self, v: usize, li: usize) -> Word {
        let mut letters = self.transversal[v].clone();
        letters.push(LETTERS[li]);
        let back = Word::new(self.transversal[self.next[v][li]].clone()).inverse();
        letters.extend(back.letters);
        Word::new(letters).free_reduce()
    }

    /// Reidemeister–Schreier generators, one per non-tree edge.
    pub fn generators(&self) -> Vec<Word> {
        self.schreier_edges.iter().map(|&(v, li)| self.generator_word(v, li)).collect()
    }

    /// Rewrites a word representing an element of Γ(N) as a product of the
    /// generators: (generator index, ±1) factors in order. None if the word
    /// is not in Γ(N).
    pub fn rewrite(&self, w: &Word) -> Option<Vec<(usize, i8)>> {
        let pos: HashMap<(usize, usize), usize> =
            self.schreier_edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut v = 0usize;
        let mut out = Vec::new();
        for l in w.full_letters() {
            let (li, inverse) = match l {
                Letter::S => (0, false),
                Letter::T => (1, false),
                Letter::SInv => (0, true),
                Letter::TInv => (1, true),
            };
            if inverse {
                let u = (0..self.cosets.len()).find(|&u| self.next[u][li] == v)?;
                if let Some(&g) = pos.get(&(u, li)) {
                    out.push((g, -1));
                }
                v = u;
            } else {
                if let Some(&g) = pos.get(&(v, li)) {
                    out.push((g, 1));
                }
                v = self.next[v][li];
            }
        }
        (v == 0).then_some(out)
    }
}

/// Generators of Γ(N) as words in S and T.
pub fn congruence_generators(level: i64) -> Vec<Word> {
    CosetGraph::new(level).generators()
}

/// |SL(2, Z/N)| by enumeration of the coset graph.
pub fn sl2_mod_order(level: i64) -> usize {
    CosetGraph::new(level).cosets.len()
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub level: i64,
    pub image_order: usize,
    pub automorphisms_in_kernel: usize,
    pub automorphism_count: usize,
    pub veech_index: usize,
    pub coset_count: usize,
    /// For each Γ(N) generator: its word and whether some lift acts trivially.
    pub witnesses: Vec<(Word, bool)>,
    pub accounting_holds: bool,
    pub holds: bool,
}

/// Decides whether the kernel of `action` maps onto Γ(N): every Γ(N)
/// generator has a lift in the kernel, and
/// |image| · |Aut ∩ kernel| · [SL(2,Z) : Veech] = |Aut| · |SL(2, Z/N)|.
pub fn kernel_is_congruence(
    h: &Homology,
    generators: &[AffineLift],
    automorphisms: &[AffineLift],
    action: &(dyn Fn(&AffineLift) -> Result<Mat> + Sync),
    level: i64,
    cap: usize,
) -> Result<KernelReport> {
    let mats = generators.iter().map(action).collect::<Result<Vec<_>>>()?;
    let image: FiniteMatrixGroup = match finite_closure(&mats, cap) {
        Closure::Finite(g) => g,
        Closure::Unbounded { .. } => return Err(Error::ActionNotFinite),
    };
    let trivial = |l: &AffineLift| -> Result<bool> { Ok(action(l)?.is_identity()) };
    let mut automorphisms_in_kernel = 0;
    for a in automorphisms {
        if trivial(a)? {
            automorphisms_in_kernel += 1;
        }
    }
    let mut witnesses = Vec::new();
    for w in congruence_generators(level) {
        let mut ok = false;
        for l in all_lifts(h, &w.eval())? {
            if trivial(&l)? {
                ok = true;
                break;
            }
        }
        witnesses.push((w, ok));
    }
    let veech_index = veech_group(&h.origami).index();
    let coset_count = sl2_mod_order(level);
    let accounting_holds = image.order() * automorphisms_in_kernel * veech_index == automorphisms.len() * coset_count;
    let holds = accounting_holds && witnesses.iter().all(|(_, ok)| *ok);
    Ok(KernelReport {
        level,
        image_order: image.order(),
        automorphisms_in_kernel,
        automorphism_count: automorphisms.len(),
        veech_index,
        coset_count,
        witnesses,
        accounting_holds,
        holds,
    })
}

/// Block-diagonal action on several invariant subspaces.
pub fn block_action<'a>(
    h: &'a Homology,
    spaces: &'a [&'a crate::homology::Subspace],
) -> impl Fn(&AffineLift) -> Result<Mat> + Sync + 'a {
    move |l: &AffineLift| {
        let blocks = spaces.iter().map(|v| l.matrix_on(h, v)).collect::<Result<Vec<_>>>()?;
        let d: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Mat::zeros(d, d);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        Ok(m)
    }
}
