//! The invariant splittings of relative homology for the two catalog families.

use crate::affine_action::{automorphism_lift, lift, AffineLift, ClosingChoice};
use crate::error::{Error, Result};
use crate::homology::named::{ew, orn};
use crate::homology::{is_direct_sum, EdgeChain, Homology, Subspace};
use crate::linalg::q;
use crate::origami_core::catalog::{eierlegende_wollmilchsau, ew_automorphism, orn_automorphism, ornithorynque};
use crate::origami_core::{Quat, Sl2z};

#[derive(Clone, Debug)]
pub struct NamedSpace {
    pub name: String,
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub surface: String,
    pub spaces: Vec<NamedSpace>,
    pub classes: Vec<(String, EdgeChain)>,
    pub direct_sum: bool,
    pub spans_all: bool,
    /// Every space is preserved by every generator lift.
    pub invariant: bool,
    /// Named identities that must hold in homology.
    pub identities: Vec<(String, bool)>,
}

impl DecompositionReport {
    pub fn space(&self, name: &str) -> Option<&Subspace> {
        self.spaces.iter().find(|s| s.name == name).map(|s| &s.space)
    }

    pub fn class(&self, name: &str) -> Option<&EdgeChain> {
        self.classes.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn all_hold(&self) -> bool {
        self.direct_sum && self.spans_all && self.invariant && self.identities.iter().all(|(_, ok)| *ok)
    }
}

/// Lifts of S, T and of the automorphisms i, j (canonical closing).
pub fn ew_generators(h: &Homology) -> Result<Vec<AffineLift>> {
    Ok(vec![
        lift(h, &Sl2z::S, ClosingChoice::Canonical)?,
        lift(h, &Sl2z::T, ClosingChoice::Canonical)?,
        automorphism_lift(h, &ew_automorphism(Quat::I))?,
        automorphism_lift(h, &ew_automorphism(Quat::J))?,
    ])
}

/// The eight automorphism lifts of the quaternion origami, in `Quat::all()` order.
pub fn ew_automorphism_lifts(h: &Homology) -> Result<Vec<AffineLift>> {
    Quat::all().map(|g| automorphism_lift(h, &ew_automorphism(g))).collect()
}

/// S̃, T̃ for q = 3 and S̃², T̃², J̃ for q ≥ 5, followed by the rotation by 1.
pub fn orn_generators(h: &Homology, q: usize) -> Result<Vec<AffineLift>> {
    let mats = if q == 3 { vec![Sl2z::S, Sl2z::T] } else { vec![Sl2z::S.pow(2), Sl2z::T.pow(2), Sl2z::J] };
    let mut out = mats.iter().map(|m| lift(h, m, ClosingChoice::Canonical)).collect::<Result<Vec<_>>>()?;
    out.push(automorphism_lift(h, &orn_automorphism(q, 1))?);
    Ok(out)
}

pub fn orn_automorphism_lifts(h: &Homology, q: usize) -> Result<Vec<AffineLift>> {
    (0..q as i64).map(|g| automorphism_lift(h, &orn_automorphism(q, g))).collect()
}

fn finish(
    h: &Homology,
    surface: String,
    spaces: Vec<NamedSpace>,
    classes: Vec<(String, EdgeChain)>,
    gens: &[AffineLift],
    identities: Vec<(String, bool)>,
) -> DecompositionReport {
    let parts: Vec<&Subspace> = spaces.iter().map(|s| &s.space).collect();
    let total: usize = parts.iter().map(|s| s.dim()).sum();
    // H1(M, Σ) with Σ the singular vertices; regular vertices are not marked.
    let target = h.marked_subspace(&h.singular_marks());
    let invariant = spaces.iter().all(|s| gens.iter().all(|g| g.matrix_on(h, &s.space).is_ok()));
    DecompositionReport {
        surface,
        direct_sum: is_direct_sum(h, &parts),
        spans_all: total == target.dim() && parts.iter().all(|p| target.contains_subspace(h, p)),
        spaces,
        classes,
        invariant,
        identities,
    }
}

fn named(h: &Homology, name: &str, chains: Vec<EdgeChain>) -> NamedSpace {
    NamedSpace { name: name.into(), space: h.subspace(chains) }
}

pub fn decompose_ew(h: &Homology) -> Result<DecompositionReport> {
    if h.origami != eierlegende_wollmilchsau() {
        return Err(Error::WrongSurface("expected the catalog eierlegende-wollmilchsau".into()));
    }
    let n = h.n();
    let sigma = EdgeChain { sigma: vec![q(1); n], zeta: vec![q(0); n] };
    let zeta = EdgeChain { sigma: sigma.zeta.clone(), zeta: sigma.sigma.clone() };
    let mut classes = vec![
        ("sigma".to_string(), sigma.clone()),
        ("zeta".to_string(), zeta.clone()),
        ("w_i".to_string(), ew::w_i()),
        ("w_j".to_string(), ew::w_j()),
        ("w_k".to_string(), ew::w_k()),
    ];
    for g in Quat::all() {
        classes.push((format!("sigma_hat_{}", g.name()), ew::sigma_hat(g)));
        classes.push((format!("zeta_hat_{}", g.name()), ew::zeta_hat(g)));
        classes.push((format!("epsilon_{}", g.name()), ew::epsilon(g)));
    }
    for g in [Quat::ONE, Quat::I, Quat::J, Quat::K] {
        classes.push((format!("w_hat_{}", g.name()), ew::w_hat(g)));
    }
    let spaces = vec![
        named(h, "H1_st", vec![sigma, zeta]),
        named(h, "H_rel", vec![ew::w_i(), ew::w_j(), ew::w_k()]),
        named(h, "H1_0", ew::frame()),
    ];
    let relation = [1i64, -1, 1, -1]
        .iter()
        .zip([Quat::ONE, Quat::I, Quat::J, Quat::K])
        .fold(EdgeChain::zero(n), |acc, (c, g)| acc + (ew::zeta(g) + ew::zeta(g.neg())).scale(q(*c)));
    let identities = vec![
        (
            "epsilon_{-g} = -epsilon_g".to_string(),
            Quat::all().all(|g| h.equivalent(&ew::epsilon(g.neg()), &-ew::epsilon(g))),
        ),
        (
            "w_hat(1) = w_i + w_j + w_k".to_string(),
            h.equivalent(&ew::w_hat(Quat::ONE), &(ew::w_i() + ew::w_j() + ew::w_k())),
        ),
        (
            "zeta_1 + zeta_-1 + zeta_j + zeta_-j - zeta_i - zeta_-i - zeta_k - zeta_-k = 0".to_string(),
            h.is_null(&relation),
        ),
    ];
    let mut gens = ew_generators(h)?;
    gens.extend(ew_automorphism_lifts(h)?);
    Ok(finish(h, "eierlegende-wollmilchsau".into(), spaces, classes, &gens, identities))
}

pub fn decompose_orn(h: &Homology, q: usize) -> Result<DecompositionReport> {
    if q < 3 || q.is_multiple_of(2) || ornithorynque(q as i64).ok().as_ref() != Some(&h.origami) {
        return Err(Error::WrongSurface(format!("expected the catalog ornithorynque with q = {q}")));
    }
    let c = orn::Classes::new(q);
    let qi = q as i64;
    let mut classes = vec![
        ("sigma".to_string(), c.sigma_total()),
        ("zeta".to_string(), c.zeta_total()),
        ("sigma_flat".to_string(), c.sigma_flat()),
        ("zeta_flat".to_string(), c.zeta_flat()),
    ];
    for i in 0..qi {
        for (name, x) in [
            ("a", c.a(i)),
            ("a'", c.a_p(i)),
            ("b", c.b(i)),
            ("b'", c.b_p(i)),
            ("tau", c.tau(i)),
            ("sigma_breve", c.sigma_breve(i)),
            ("zeta_breve", c.zeta_breve(i)),
        ] {
            classes.push((format!("{name}_{i}"), x));
        }
    }
    let spaces = vec![
        named(h, "H1_st", vec![c.sigma_total(), c.zeta_total()]),
        named(h, "H_rel", vec![c.sigma_flat(), c.zeta_flat()]),
        named(h, "H_tau", c.taus()),
        named(h, "H_breve", c.breves()),
    ];
    let n = h.n();
    let sum_of = |f: &dyn Fn(i64) -> EdgeChain| (0..qi).fold(EdgeChain::zero(n), |acc, i| acc + f(i));
    let identities = vec![
        ("sum tau_i = 0".to_string(), h.is_null(&sum_of(&|i| c.tau(i)))),
        ("sum sigma_breve_i = 0".to_string(), h.is_null(&sum_of(&|i| c.sigma_breve(i)))),
        ("sum zeta_breve_i = 0".to_string(), h.is_null(&sum_of(&|i| c.zeta_breve(i)))),
        (
            "a_i - a'_{i-1} + b_{i-1} - b'_i = 0".to_string(),
            (0..qi).all(|i| h.is_null(&(c.a(i) - c.a_p(i - 1) + c.b(i - 1) - c.b_p(i)))),
        ),
        ("dim H_tau = q - 1".to_string(), spaces[2].space.dim() == q - 1),
        ("dim H_breve = 2q - 2".to_string(), spaces[3].space.dim() == 2 * q - 2),
    ];
    let mut gens = orn_generators(h, q)?;
    gens.extend(orn_automorphism_lifts(h, q)?);
    Ok(finish(h, format!("ornithorynque(q={q})"), spaces, classes, &gens, identities))
}
