//! One function per subcommand; each returns a report or an error.

use crate::input::{parse_probe, CliError, Kind, Surface};
use crate::report::{chain_json, mat_json, q_json, sl2_json, Report};
use origami::affine_action::{automorphism_lift, lift, AffineLift, ClosingChoice};
use origami::homology::named::spin_basis;
use origami::homology::{Homology, Subspace};
use origami::invariants::{invariant_supplement, multitwist, spin_parity, Cylinder, CylinderDecomposition};
use origami::linalg::Mat;
use origami::par::Exec;
use origami::structure_analysis::decompose::{
    ew_automorphism_lifts, ew_generators, orn_automorphism_lifts, orn_generators,
};
use origami::structure_analysis::{
    block_action, cocycle_growth, decompose_ew, decompose_orn, finite_closure_with, kernel_is_congruence,
    symplectic_subgroup, Closure, DecompositionReport,
};
use origami::{sl2z_word, veech_group, Error, Perm, Sl2z};
use serde_json::{json, Value};

pub fn surface_input(rep: &mut Report, s: &Surface) {
    rep.input("surface", s.label.clone());
    rep.input("n", s.origami.n);
}

fn wrong_surface(what: &str) -> CliError {
    CliError::Lib(Error::WrongSurface(format!("{what} needs the catalog eierlegende-wollmilchsau or ornithorynque")))
}

pub fn generators(h: &Homology, kind: Kind) -> Result<Vec<AffineLift>, CliError> {
    match kind {
        Kind::Ew => Ok(ew_generators(h)?),
        Kind::Orn(q) => Ok(orn_generators(h, q)?),
        _ => Err(wrong_surface("this command")),
    }
}

pub fn automorphisms(h: &Homology, kind: Kind) -> Result<Vec<AffineLift>, CliError> {
    match kind {
        Kind::Ew => Ok(ew_automorphism_lifts(h)?),
        Kind::Orn(q) => Ok(orn_automorphism_lifts(h, q)?),
        _ => Err(wrong_surface("this command")),
    }
}

pub fn decomposition(h: &Homology, kind: Kind) -> Result<DecompositionReport, CliError> {
    match kind {
        Kind::Ew => Ok(decompose_ew(h)?),
        Kind::Orn(q) => Ok(decompose_orn(h, q)?),
        _ => Err(wrong_surface("decompose")),
    }
}

/// Resolves subspace names: short aliases for the decomposition pieces plus
/// the generic `absolute`, `relative` and `spin` (q = 3 only).
pub fn subspace(h: &Homology, kind: Kind, name: &str) -> Result<Subspace, CliError> {
    let piece = match name {
        "absolute" => return Ok(h.absolute_subspace()),
        "relative" => return Ok(h.relative_subspace()),
        "h1_0_abs" => return Ok(h.standard_splitting().h1_0_abs),
        "h1_0_rel" => return Ok(h.standard_splitting().h1_0_rel),
        "spin" if kind == Kind::Orn(3) => return Ok(h.subspace(spin_basis::basis())),
        "H0" | "H1_0" => "H1_0",
        "Hbreve" | "H_breve" => "H_breve",
        "Hrel" | "H_rel" => "H_rel",
        "Htau" | "H_tau" => "H_tau",
        "Hst" | "H1_st" => "H1_st",
        other => return Err(CliError::Usage(format!("unknown subspace `{other}`"))),
    };
    let d = decomposition(h, kind)?;
    d.space(piece).cloned().ok_or_else(|| CliError::Usage(format!("`{name}` is not defined on this surface")))
}

fn cylinder_json(c: &Cylinder) -> Value {
    json!({
        "width": c.width,
        "height": c.height,
        "modulus": q_json(&c.modulus),
        "rows": c.rows,
        "core": chain_json(&c.core),
    })
}

fn int_gram_det(g: &Mat) -> Value {
    q_json(&g.det())
}

pub fn info(s: &Surface) -> Result<Report, CliError> {
    let o = &s.origami;
    let mut rep = Report::new("info");
    surface_input(&mut rep, s);
    let st = o.stratum();
    let classes = o.vertex_classes();
    rep.put("genus", st.genus)
        .put("stratum", st.zero_orders.clone())
        .put("vertices", classes.len())
        .put("cone_multiplicities", classes.iter().map(|c| c.multiplicity()).collect::<Vec<_>>())
        .put("automorphisms", o.automorphisms().len())
        .put("veech_index", veech_group(o).index())
        .put("r", o.r.images().to_vec())
        .put("u", o.u.images().to_vec())
        .put("base", o.base);
    Ok(rep)
}

pub fn veech(s: &Surface, matrix: Option<Sl2z>) -> Result<Report, CliError> {
    let v = veech_group(&s.origami);
    let mut rep = Report::new("veech");
    surface_input(&mut rep, s);
    rep.put("index", v.index());
    if let Some(m) = matrix {
        rep.input("matrix", sl2_json(&m));
        rep.put("word", sl2z_word(&m).to_string_compact())
            .put("mod_2", m.reduce_mod(2).to_vec())
            .put("member", v.contains(&m));
    }
    Ok(rep)
}

pub fn homology(s: &Surface) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let abs = h.absolute_subspace();
    let gram = h.gram(&abs.basis)?;
    let mut rep = Report::new("homology");
    surface_input(&mut rep, s);
    rep.put("dim_relative", h.dim())
        .put("dim_absolute", abs.dim())
        .put("dim_marked_relative", h.relative_subspace().dim())
        .put("singular_marks", h.singular_marks())
        .put("absolute_basis", abs.basis.iter().map(chain_json).collect::<Value>())
        .put("gram", mat_json(&gram))
        .put("gram_det", int_gram_det(&gram));
    Ok(rep)
}

pub fn action(
    s: &Surface,
    matrix: Sl2z,
    closing: Option<usize>,
    aut: Option<Perm>,
    basis: &str,
) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let choice = closing.map_or(ClosingChoice::Canonical, ClosingChoice::Index);
    let mut l = lift(&h, &matrix, choice)?;
    let mut rep = Report::new("action");
    surface_input(&mut rep, s);
    rep.input("matrix", sl2_json(&matrix)).input("basis", basis);
    if let Some(p) = aut {
        rep.input("aut", p.images().to_vec());
        l = automorphism_lift(&h, &p)?.compose(&l)?;
    }
    let v = subspace(&h, s.kind, basis)?;
    let m = l.matrix_on(&h, &v)?;
    rep.put("linear_part", sl2_json(&l.linear_part))
        .put("relabeling", l.relabeling.images().to_vec())
        .put("dim", v.dim())
        .put("matrix", mat_json(&m));
    Ok(rep)
}

pub fn decompose(s: &Surface) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let d = decomposition(&h, s.kind)?;
    let mut rep = Report::new("decompose");
    surface_input(&mut rep, s);
    rep.put("spaces", d.spaces.iter().map(|sp| json!({"name": sp.name, "dim": sp.space.dim()})).collect::<Value>());
    rep.check("direct sum", d.direct_sum, "pieces are independent");
    rep.check("spans", d.spans_all, "pieces span relative homology");
    rep.check("invariant", d.invariant, "every generator lift preserves every piece");
    for (name, ok) in &d.identities {
        rep.check(name, *ok, "identity in homology");
    }
    Ok(rep)
}

pub fn group(s: &Surface, space: &str, full: bool, cap: usize) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let v = subspace(&h, s.kind, space)?;
    let gens = generators(&h, s.kind)?;
    let mats = gens.iter().map(|l| l.matrix_on(&h, &v)).collect::<origami::Result<Vec<_>>>()?;
    let mut rep = Report::new("group");
    surface_input(&mut rep, s);
    rep.input("subspace", space).input("cap", cap);
    rep.put("dim", v.dim());
    match finite_closure_with(&mats, cap, Exec::default()) {
        Closure::Finite(g) => {
            rep.put("finite", true).put("order", g.order());
            if full {
                let gram = h.gram(&v.basis)?;
                rep.put("involutions", g.involutions().len())
                    .put("max_norm", q_json(&g.max_norm()))
                    .put("symplectic_order", symplectic_subgroup(&g, &gram).order())
                    .put("generators", g.generators.iter().map(mat_json).collect::<Value>());
            }
        }
        Closure::Unbounded { explored, witness } => {
            rep.put("finite", false).put("explored", explored).put("witness", witness);
        }
    }
    Ok(rep)
}

pub fn default_level(kind: Kind) -> i64 {
    match kind {
        Kind::Orn(3) => 3,
        _ => 4,
    }
}

pub fn congruence(s: &Surface, level: Option<i64>, spaces: &[String], cap: usize) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let level = level.unwrap_or_else(|| default_level(s.kind));
    let names: Vec<String> = if spaces.is_empty() {
        match s.kind {
            Kind::Ew => vec!["H0".into(), "Hrel".into()],
            _ => vec!["Hbreve".into()],
        }
    } else {
        spaces.to_vec()
    };
    let subs = names.iter().map(|n| subspace(&h, s.kind, n)).collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Subspace> = subs.iter().collect();
    let act = block_action(&h, &refs);
    let gens = generators(&h, s.kind)?;
    let auts = automorphisms(&h, s.kind)?;
    let k = kernel_is_congruence(&h, &gens, &auts, &act, level, cap)?;
    let mut rep = Report::new("congruence");
    surface_input(&mut rep, s);
    rep.input("level", level).input("subspaces", names.clone());
    rep.put("image_order", k.image_order)
        .put("automorphisms_in_kernel", k.automorphisms_in_kernel)
        .put("automorphism_count", k.automorphism_count)
        .put("veech_index", k.veech_index)
        .put("sl2_mod_level_order", k.coset_count)
        .put(
            "witnesses",
            k.witnesses.iter().map(|(w, ok)| json!({"word": w.to_string_compact(), "trivial": ok})).collect::<Value>(),
        );
    rep.check("accounting", k.accounting_holds, "|image|·|Aut ∩ ker|·index = |Aut|·|SL(2,Z/N)|");
    rep.check(
        "generators in kernel",
        k.witnesses.iter().all(|(_, ok)| *ok),
        format!("{} Γ({level}) generators", k.witnesses.len()),
    );
    Ok(rep)
}

pub fn growth(s: &Surface, space: &str, len: usize, trials: usize, seed: u64) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let v = subspace(&h, s.kind, space)?;
    let gens = generators(&h, s.kind)?;
    let mut mats = gens.iter().map(|l| l.matrix_on(&h, &v)).collect::<origami::Result<Vec<_>>>()?;
    let inverses: Vec<Mat> = mats.iter().map(|m| m.inverse().expect("lifts are invertible")).collect();
    mats.extend(inverses);
    let g = cocycle_growth(&mats, len, trials, seed, Exec::default());
    let mut rep = Report::new("growth");
    surface_input(&mut rep, s);
    rep.input("subspace", space).input("len", len).input("trials", trials).input("seed", seed);
    rep.put("max_norm", format!("{:.6e}", g.max_norm))
        .put("max_log_norm", format!("{:.6}", g.max_log_norm))
        .put("growth_rate", format!("{:.6}", g.growth_rate));
    Ok(rep)
}

pub fn cylinders_cmd(s: &Surface, dir: (i64, i64)) -> Result<Report, CliError> {
    let d = CylinderDecomposition::new(&s.origami, dir)?;
    let mut rep = Report::new("cylinders");
    surface_input(&mut rep, s);
    rep.input("dir", vec![dir.0, dir.1]);
    rep.put("normalizer", sl2_json(&d.normalizer))
        .put("count", d.cylinders.len())
        .put("cylinders", d.cylinders.iter().map(cylinder_json).collect::<Value>());
    Ok(rep)
}

pub fn twist(s: &Surface, dir: (i64, i64)) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let t = multitwist(&h, dir)?;
    let mut rep = Report::new("twist");
    surface_input(&mut rep, s);
    rep.input("dir", vec![dir.0, dir.1]);
    rep.put("k", t.k)
        .put("linear_part", sl2_json(&t.linear_part))
        .put("twist_counts", t.twist_counts.clone())
        .put("cylinders", t.cylinders.iter().map(cylinder_json).collect::<Value>())
        .put("formula", mat_json(&t.formula))
        .put("relabeling", t.lift.relabeling.images().to_vec());
    Ok(rep)
}

pub fn spin(s: &Surface) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let r = spin_parity(&h)?;
    let mut rep = Report::new("spin");
    surface_input(&mut rep, s);
    rep.put("parity", serde_json::to_value(r.parity).expect("serializable"))
        .put("indices", r.indices.iter().map(|(a, b)| vec![*a, *b]).collect::<Vec<_>>())
        .put(
            "basis",
            r.basis.iter().map(|(a, b)| json!({"alpha": chain_json(a), "beta": chain_json(b)})).collect::<Value>(),
        );
    Ok(rep)
}

pub fn supplement(s: &Surface, probes: &str) -> Result<Report, CliError> {
    let h = Homology::new(&s.origami);
    let dirs = probes.split(',').map(parse_probe).collect::<Result<Vec<_>, _>>()?;
    let lifts = dirs.iter().map(|&d| multitwist(&h, d).map(|t| t.lift)).collect::<origami::Result<Vec<_>>>()?;
    let cert = invariant_supplement(&h, &h.singular_marks(), &lifts)?;
    let mut rep = Report::new("supplement");
    surface_input(&mut rep, s);
    rep.input("probes", probes);
    let row = |coeffs: &[origami::linalg::Q], rhs: &origami::linalg::Q| json!({"coeffs": coeffs.iter().map(q_json).collect::<Value>(), "rhs": q_json(rhs)});
    rep.put("feasible", cert.feasible)
        .put("unknowns", cert.unknowns)
        .put("representatives", cert.representatives.iter().map(chain_json).collect::<Value>())
        .put("correction_basis", cert.correction_basis.iter().map(chain_json).collect::<Value>())
        .put("equations", cert.equations.iter().map(|e| row(&e.coeffs, &e.rhs)).collect::<Value>())
        .put("eliminated", cert.eliminated.iter().map(|e| row(&e.coeffs, &e.rhs)).collect::<Value>())
        .put("section", cert.section.iter().map(chain_json).collect::<Value>());
    if let Some(inc) = &cert.inconsistency {
        rep.put(
            "inconsistency",
            json!({"weights": inc.weights.iter().map(q_json).collect::<Value>(), "value": q_json(&inc.value)}),
        );
    }
    Ok(rep)
}
