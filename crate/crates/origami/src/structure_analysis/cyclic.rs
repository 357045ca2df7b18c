//! The q-family: the cyclic action on H_τ and the ρ-blocks of the action on H̆.

use super::cyclotomic::{Cyclo, CycloBlock};
use crate::affine_action::AffineLift;
use crate::error::{Error, Result};
use crate::homology::named::orn::Classes;
use crate::homology::{EdgeChain, Homology, Subspace};
use crate::linalg::{Mat, Q};
use num_traits::Zero;

/// Matrix on H_τ of τ_i ↦ −τ_{i+(q+1)/2}, in the basis τ_0..τ_{q−2}.
pub fn tau_generator(h: &Homology, qn: usize) -> Result<Mat> {
    let c = Classes::new(qn);
    let v = h.subspace(c.taus());
    let shift = (qn as i64 + 1) / 2;
    let k = v.dim();
    let mut m = Mat::zeros(k, k);
    for j in 0..k {
        let y = v.coordinates(h, &-c.tau(j as i64 + shift)).ok_or(Error::NotInvariant)?;
        for (i, val) in y.into_iter().enumerate() {
            m.set(i, j, val);
        }
    }
    Ok(m)
}

/// The exponent k ∈ [0, 2q) with lift|H_τ = G^k, G the generator above.
pub fn tau_character(h: &Homology, qn: usize, lift: &AffineLift) -> Result<usize> {
    let c = Classes::new(qn);
    let v = h.subspace(c.taus());
    let m = lift.matrix_on(h, &v)?;
    let g = tau_generator(h, qn)?;
    let mut acc = Mat::identity(v.dim());
    for k in 0..2 * qn {
        if acc == m {
            return Ok(k);
        }
        acc = g.mul(&acc);
    }
    Err(Error::NotInCyclicImage)
}

/// Expresses `x ∈ H̆` over the spanning set σ̆_0..σ̆_{q−1}, ζ̆_0..ζ̆_{q−1}
/// with zero coefficient on σ̆_{q−1} and ζ̆_{q−1}.
fn breve_coeffs(h: &Homology, c: &Classes, v: &Subspace, x: &EdgeChain) -> Result<(Vec<Q>, Vec<Q>)> {
    let qn = c.q;
    let y = v.coordinates(h, x).ok_or(Error::NotInvariant)?;
    let mut s = vec![Q::zero(); qn];
    let mut z = vec![Q::zero(); qn];
    // The basis kept by Subspace::new is σ̆_0..σ̆_{q−2}, ζ̆_0..ζ̆_{q−2}.
    s[..qn - 1].copy_from_slice(&y[..qn - 1]);
    z[..qn - 1].copy_from_slice(&y[qn - 1..]);
    Ok((s, z))
}

/// Block of the lift on (σ̆(ρ), ζ̆(ρ)), σ̆(ρ) = Σ ρ^{−i} σ̆_i, with ρ the
/// generic character x ∈ Q[x]/(x^q − 1). Entries are normalized to have no
/// trivial-character component.
pub fn breve_blocks(h: &Homology, qn: usize, lift: &AffineLift) -> Result<CycloBlock> {
    let c = Classes::new(qn);
    let v = h.subspace(c.breves());
    if v.dim() != 2 * qn - 2 {
        return Err(Error::WrongSurface("H_breve has the wrong dimension".into()));
    }
    let poly = |coeffs: &[Q]| Cyclo::from_coeffs(coeffs.to_vec()).nontrivial_part();
    let (ss, sz) = breve_coeffs(h, &c, &v, &lift.apply(&c.sigma_breve(0)))?;
    let (zs, zz) = breve_coeffs(h, &c, &v, &lift.apply(&c.zeta_breve(0)))?;
    // Equivariance check: the image of σ̆_j, ζ̆_j is the index shift by j.
    for j in 1..qn as i64 {
        for (src, (cs, cz)) in [(c.sigma_breve(j), (&ss, &sz)), (c.zeta_breve(j), (&zs, &zz))] {
            let want = (0..qn as i64).fold(EdgeChain::zero(h.n()), |acc, i| {
                acc + c.sigma_breve(i + j).scale(cs[i as usize]) + c.zeta_breve(i + j).scale(cz[i as usize])
            });
            if !h.equivalent(&lift.apply(&src), &want) {
                return Err(Error::NotInvariant);
            }
        }
    }
    Ok(CycloBlock([[poly(&ss), poly(&zs)], [poly(&sz), poly(&zz)]]))
}

/// Σ over nontrivial ρ of the block trace; equals the trace on H̆.
pub fn block_trace_sum(b: &CycloBlock) -> Q {
    let t = b.trace();
    // Σ_{ρ≠1} f(ρ) = q·f_0 − f(1) for f = Σ f_k x^k; f has no trivial part so f(1) = 0.
    t.coeffs[0] * Q::from_integer(t.modulus() as i128) - t.at_one()
}
