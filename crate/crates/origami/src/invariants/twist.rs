//! Parabolic multitwists along cylinder decompositions.

use super::cylinders::{Cylinder, CylinderDecomposition};
use crate::affine_action::{all_lifts, AffineLift};
use crate::error::{Error, Result};
use crate::homology::{EdgeChain, Homology};
use crate::linalg::{gcd_i128, lcm_i128, Mat, Q};
use crate::origami_core::Sl2z;

#[derive(Clone, Debug)]
pub struct MultiTwist {
    pub direction: (i64, i64),
    /// Least integer multiple of every modulus.
    pub k: i64,
    /// N⁻¹ · [[1, k], [0, 1]] · N, with N the direction normalizer.
    pub linear_part: Sl2z,
    pub cylinders: Vec<Cylinder>,
    /// k / modulus for each cylinder.
    pub twist_counts: Vec<i64>,
    /// θ ↦ θ + Σ n_c ⟨core_c, θ⟩ core_c on the basis of `relative_subspace()`.
    pub formula: Mat,
    /// The lift of `linear_part` acting by `formula`.
    pub lift: AffineLift,
    decomposition: CylinderDecomposition,
}

/// lcm of positive rationals, rounded up to the least integer multiple.
fn integer_lcm(moduli: &[Q]) -> i64 {
    let num = moduli.iter().fold(1i128, |acc, m| lcm_i128(acc, *m.numer()));
    let den = moduli.iter().fold(0i128, |acc, m| gcd_i128(acc, *m.denom()));
    // num/den reduced; its least integer multiple is the numerator
    (num / gcd_i128(num, den)) as i64
}

pub fn multitwist(h: &Homology, direction: (i64, i64)) -> Result<MultiTwist> {
    let d = CylinderDecomposition::new(&h.origami, direction)?;
    let moduli: Vec<Q> = d.cylinders.iter().map(|c| c.modulus).collect();
    let k = integer_lcm(&moduli);
    let twist_counts: Vec<i64> = d
        .cylinders
        .iter()
        .map(|c| {
            let n = Q::from_integer(k as i128) / c.modulus;
            debug_assert!(n.is_integer());
            n.to_integer() as i64
        })
        .collect();
    let nm = d.normalizer;
    let linear_part = nm.inv().mul(&Sl2z::T.pow(k)).mul(&nm);

    let rel = h.relative_subspace();
    let mut t = MultiTwist {
        direction,
        k,
        linear_part,
        cylinders: d.cylinders.clone(),
        twist_counts,
        formula: Mat::zeros(rel.dim(), rel.dim()),
        lift: AffineLift::identity(h),
        decomposition: d,
    };
    for (j, b) in rel.basis.iter().enumerate() {
        let x =
            rel.coordinates(h, &t.apply_formula(b)).ok_or_else(|| Error::Internal("twist leaves H1(M, Σ)".into()))?;
        for (i, c) in x.into_iter().enumerate() {
            t.formula.set(i, j, c);
        }
    }
    let lifts = all_lifts(h, &linear_part)?;
    let mut found = None;
    for l in lifts {
        if l.matrix_on(h, &rel)? == t.formula {
            found = Some(l);
            break;
        }
    }
    t.lift = found.ok_or_else(|| Error::Internal("no lift acts by the twist formula".into()))?;
    Ok(t)
}

impl MultiTwist {
    /// The twist formula on a chain. Meaningful for classes whose boundary
    /// sits on singular vertices.
    pub fn apply_formula(&self, c: &EdgeChain) -> EdgeChain {
        let mut out = c.clone();
        for (i, (cyl, &n)) in self.cylinders.iter().zip(&self.twist_counts).enumerate() {
            let x = self.decomposition.pairing(i, c) * Q::from_integer(n as i128);
            out = out + cyl.core.scale(x);
        }
        out
    }
}
