//! Invariant supplements of H1(M) inside the classes with marked boundary.
//!
//! Given representatives r_i of H_m / H1(M) and a basis a_l of H1(M), look
//! for corrections s_i = r_i + Σ_l x_{i,l} a_l whose span is preserved by
//! every probe. Writing g r_i = Σ_ℓ c_{iℓ} a_ℓ + Σ_j P_{ji} r_j and
//! g a_l = Σ_ℓ y_{lℓ} a_ℓ, invariance is the linear system
//!
//!   Σ_l x_{i,l} y_{lℓ} − Σ_j P_{ji} x_{j,ℓ} = −c_{iℓ}
//!
//! for every probe, representative i and component ℓ.

use crate::affine_action::AffineLift;
use crate::error::{Error, Result};
use crate::homology::{EdgeChain, Homology, Subspace};
use crate::linalg::{is_zero_vec, Q};
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct Equation {
    /// Index into the probe list.
    pub probe: usize,
    pub representative: usize,
    /// Which a_ℓ component the row balances.
    pub component: usize,
    /// Coefficient of x_{i,l} at position i·dim H1(M) + l.
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

/// A row of the reduced system.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

/// Weights on the original equations summing to 0 = value ≠ 0.
#[derive(Clone, Debug)]
pub struct Inconsistency {
    pub weights: Vec<Q>,
    pub value: Q,
}

#[derive(Clone, Debug)]
pub struct SupplementCertificate {
    pub feasible: bool,
    pub representatives: Vec<EdgeChain>,
    pub correction_basis: Vec<EdgeChain>,
    pub unknowns: usize,
    pub equations: Vec<Equation>,
    /// Pivot rows of the reduced system followed by its inconsistent rows.
    pub eliminated: Vec<Reduced>,
    /// The corrected representatives; empty when infeasible.
    pub section: Vec<EdgeChain>,
    pub inconsistency: Option<Inconsistency>,
}

pub fn invariant_supplement(h: &Homology, marks: &[usize], probes: &[AffineLift]) -> Result<SupplementCertificate> {
    invariant_supplement_with(h, marks, probes, None, None)
}

fn default_representatives(h: &Homology, hm: &Subspace, abs: &Subspace) -> Vec<EdgeChain> {
    let mut kept: Vec<EdgeChain> = abs.basis.clone();
    let mut reps = Vec::new();
    for b in &hm.basis {
        let mut trial = kept.clone();
        trial.push(b.clone());
        if h.subspace(trial.clone()).dim() == trial.len() {
            kept = trial;
            reps.push(b.clone());
        }
    }
    reps
}

/// Like `invariant_supplement` with explicit representatives of H_m / H1(M)
/// and an explicit basis of H1(M) for the corrections.
pub fn invariant_supplement_with(
    h: &Homology,
    marks: &[usize],
    probes: &[AffineLift],
    representatives: Option<&[EdgeChain]>,
    correction_basis: Option<&[EdgeChain]>,
) -> Result<SupplementCertificate> {
    for p in probes {
        let perm = p.vertex_permutation(h);
        if marks.iter().any(|&m| !marks.contains(&perm.apply(m))) {
            return Err(Error::ProbeMovesMarks);
        }
    }
    let hm = h.marked_subspace(marks);
    let abs = h.absolute_subspace();
    let corr: Vec<EdgeChain> = correction_basis.map_or_else(|| abs.basis.clone(), <[EdgeChain]>::to_vec);
    let reps: Vec<EdgeChain> =
        representatives.map_or_else(|| default_representatives(h, &hm, &abs), <[EdgeChain]>::to_vec);
    let (da, nr) = (corr.len(), reps.len());
    if da != abs.dim() || corr.iter().any(|c| !abs.contains(h, c)) || h.subspace(corr.clone()).dim() != da {
        return Err(Error::NotInvariant);
    }
    let mut all = corr.clone();
    all.extend(reps.iter().cloned());
    if nr + da != hm.dim() || reps.iter().any(|r| !hm.contains(h, r)) || h.subspace(all.clone()).dim() != hm.dim() {
        return Err(Error::NotInvariant);
    }
    let frame = h.subspace(all);
    let coords = |c: &EdgeChain| frame.coordinates(h, c).ok_or(Error::NotInvariant);

    let unknowns = nr * da;
    let mut equations = Vec::new();
    for (pi, g) in probes.iter().enumerate() {
        let y: Vec<Vec<Q>> = corr
            .iter()
            .map(|a| {
                let x = coords(&g.apply(a))?;
                if !is_zero_vec(&x[da..]) {
                    return Err(Error::Internal("probe does not preserve H1(M)".into()));
                }
                Ok(x[..da].to_vec())
            })
            .collect::<Result<_>>()?;
        let images: Vec<Vec<Q>> = reps.iter().map(|r| coords(&g.apply(r))).collect::<Result<_>>()?;
        for (i, gi) in images.iter().enumerate() {
            for comp in 0..da {
                let mut coeffs = vec![Q::zero(); unknowns];
                for (l, yl) in y.iter().enumerate() {
                    coeffs[i * da + l] += yl[comp];
                }
                // P_{ji} is the r_j coefficient of g r_i
                for j in 0..nr {
                    coeffs[j * da + comp] -= gi[da + j];
                }
                equations.push(Equation { probe: pi, representative: i, component: comp, coeffs, rhs: -gi[comp] });
            }
        }
    }

    let m = equations.len();
    let mut rows: Vec<Vec<Q>> = equations
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let mut r = e.coeffs.clone();
            r.push(e.rhs);
            r.extend((0..m).map(|t| if t == k { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let mut is_pivot = vec![false; m];
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..unknowns {
        let Some(pr) = (0..m).find(|&r| !is_pivot[r] && !rows[r][col].is_zero()) else {
            continue;
        };
        let inv = Q::one() / rows[pr][col];
        for x in rows[pr].iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pr && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        is_pivot[pr] = true;
        pivots.push((pr, col));
    }

    let reduced = |r: &Vec<Q>| Reduced { coeffs: r[..unknowns].to_vec(), rhs: r[unknowns] };
    let mut eliminated: Vec<Reduced> = pivots.iter().map(|&(r, _)| reduced(&rows[r])).collect();
    let bad: Vec<usize> = (0..m).filter(|&r| !is_pivot[r] && !rows[r][unknowns].is_zero()).collect();
    eliminated.extend(bad.iter().map(|&r| reduced(&rows[r])));
    let inconsistency =
        bad.first().map(|&r| Inconsistency { weights: rows[r][unknowns + 1..].to_vec(), value: rows[r][unknowns] });

    let feasible = inconsistency.is_none();
    let section = if feasible {
        let mut x = vec![Q::zero(); unknowns];
        for &(r, col) in &pivots {
            x[col] = rows[r][unknowns];
        }
        reps.iter()
            .enumerate()
            .map(|(i, r)| corr.iter().enumerate().fold(r.clone(), |acc, (l, a)| acc + a.scale(x[i * da + l])))
            .collect()
    } else {
        Vec::new()
    };
    Ok(SupplementCertificate {
        feasible,
        representatives: reps,
        correction_basis: corr,
        unknowns,
        equations,
        eliminated,
        section,
        inconsistency,
    })
}
