//! Spin parity through the quadratic form of the index.

use super::index::{index_parity, simple_loops, walk_chain};
use crate::error::{Error, Result};
use crate::homology::{EdgeChain, Homology};
use crate::linalg::{Mat, Q};
use serde::Serialize;

/// Integral change of basis C with Cᵀ G C block diagonal in [[0, 1], [−1, 0]].
///
/// Errors with `NotUnimodular` unless G is integral, antisymmetric and of
/// determinant ±1.
pub fn symplectic_basis(gram: &Mat) -> Result<Mat> {
    let d = gram.rows;
    if gram.cols != d {
        return Err(Error::NotUnimodular);
    }
    let mut g = vec![vec![0i128; d]; d];
    for i in 0..d {
        for j in 0..d {
            let x = gram.get(i, j);
            if !x.is_integer() || x != -gram.get(j, i) {
                return Err(Error::NotUnimodular);
            }
            g[i][j] = x.to_integer();
        }
    }
    // columns of c are the current basis vectors
    let mut c: Vec<Vec<i128>> = (0..d).map(|j| (0..d).map(|i| i128::from(i == j)).collect()).collect();
    let omega = |x: &[i128], y: &[i128]| -> i128 {
        let mut s = 0;
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                s += x[i] * g[i][j] * y[j];
            }
        }
        s
    };
    let mut p = 0;
    while p < d {
        loop {
            let mut best: Option<(i128, usize, usize)> = None;
            for i in p..d {
                for j in i + 1..d {
                    let w = omega(&c[i], &c[j]).abs();
                    if w != 0 && best.is_none_or(|b| w < b.0) {
                        best = Some((w, i, j));
                    }
                }
            }
            let (_, i, j) = best.ok_or(Error::NotUnimodular)?;
            c.swap(p, i);
            c.swap(p + 1, j);
            let dd = omega(&c[p], &c[p + 1]);
            let mut clean = true;
            for l in p + 2..d {
                let a = omega(&c[p], &c[l]);
                let k = a.div_euclid(dd);
                if k != 0 {
                    for t in 0..d {
                        c[l][t] -= k * c[p + 1][t];
                    }
                }
                let b = omega(&c[p + 1], &c[l]);
                let k = b.div_euclid(dd);
                if k != 0 {
                    for t in 0..d {
                        c[l][t] += k * c[p][t];
                    }
                }
                if omega(&c[p], &c[l]) != 0 || omega(&c[p + 1], &c[l]) != 0 {
                    clean = false;
                }
            }
            if clean {
                if dd.abs() != 1 {
                    return Err(Error::NotUnimodular);
                }
                if dd == -1 {
                    c.swap(p, p + 1);
                }
                break;
            }
        }
        p += 2;
    }
    let cols: Vec<Vec<Q>> = c.iter().map(|col| col.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    if cols.is_empty() {
        return Ok(Mat::zeros(0, 0));
    }
    Ok(Mat::from_cols(&cols))
}

fn require_even_zeros(h: &Homology) -> Result<()> {
    if h.vertex_classes().iter().any(|v| v.zero_order() % 2 == 1) {
        return Err(Error::OddOrderZeros);
    }
    Ok(())
}

/// q(x) = Σ (ind ℓ_i + 1) + Σ_{i<j} ⟨ℓ_i, ℓ_j⟩ mod 2 over simple loops ℓ_i
/// whose sum is x.
pub fn quadratic_form(h: &Homology, c: &EdgeChain) -> Result<u8> {
    require_even_zeros(h)?;
    let o = &h.origami;
    if !h.is_absolute(c) {
        return Err(Error::NotAbsolute);
    }
    let loops = simple_loops(o, c)?;
    let chains: Vec<EdgeChain> = loops.iter().map(|l| walk_chain(o.n, l)).collect();
    let mut total: i128 = 0;
    for l in &loops {
        total += i128::from(index_parity(o, l)?) + 1;
    }
    for i in 0..chains.len() {
        for j in i + 1..chains.len() {
            total += h.intersection(&chains[i], &chains[j])?.to_integer();
        }
    }
    Ok(total.rem_euclid(2) as u8)
}

/// Index parity of any curve in the class: q(x) + 1 mod 2.
pub fn class_index_parity(h: &Homology, c: &EdgeChain) -> Result<u8> {
    Ok((quadratic_form(h, c)? + 1) % 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinResult {
    pub parity: Parity,
    /// Symplectic pairs (α_i, β_i).
    pub basis: Vec<(EdgeChain, EdgeChain)>,
    /// Index parities of α_i and β_i.
    pub indices: Vec<(u8, u8)>,
}

pub fn spin_parity(h: &Homology) -> Result<SpinResult> {
    require_even_zeros(h)?;
    spin_parity_with_basis(h, &h.absolute_subspace().basis)
}

/// Spin parity computed from a Z-basis of H1(M).
pub fn spin_parity_with_basis(h: &Homology, basis: &[EdgeChain]) -> Result<SpinResult> {
    require_even_zeros(h)?;
    let gram = h.gram(basis)?;
    let c = symplectic_basis(&gram)?;
    let n = h.n();
    let new: Vec<EdgeChain> = (0..basis.len())
        .map(|j| basis.iter().enumerate().fold(EdgeChain::zero(n), |acc, (i, b)| acc + b.scale(c.get(i, j))))
        .collect();
    let mut pairs = Vec::new();
    let mut indices = Vec::new();
    let mut phi = 0u8;
    for k in 0..new.len() / 2 {
        let (a, b) = (new[2 * k].clone(), new[2 * k + 1].clone());
        let ia = class_index_parity(h, &a)?;
        let ib = class_index_parity(h, &b)?;
        phi ^= ((ia + 1) % 2) & ((ib + 1) % 2);
        pairs.push((a, b));
        indices.push((ia, ib));
    }
    let parity = if phi == 0 { Parity::Even } else { Parity::Odd };
    Ok(SpinResult { parity, basis: pairs, indices })
}
