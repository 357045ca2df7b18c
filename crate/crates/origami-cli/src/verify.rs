//! Verification suites run by `origami verify ...`. Each check records its
//! measured value; the command fails if any check fails.

use crate::commands::{automorphisms, decomposition, generators};
use crate::input::{CliError, Kind};
use crate::report::Report;
use origami::affine_action::AffineLift;
use origami::catalog::{appendix_b, eierlegende_wollmilchsau, ornithorynque};
use origami::homology::named::{decagon, ew, orn::Classes, spin_basis};
use origami::homology::{EdgeChain, Homology, Subspace};
use origami::invariants::{class_index_parity, cylinders, invariant_supplement_with, multitwist, spin_parity, Parity};
use origami::linalg::{q, qr, Mat, Q};
use origami::structure_analysis::d4::coordinate_set;
use origami::structure_analysis::{
    block_action, finite_closure, kernel_is_congruence, symplectic_subgroup, tau_character, FiniteMatrixGroup,
    RootSystemD4,
};
use origami::{veech_group, Error, Perm, Sl2z};
use std::collections::HashMap;

type Res<T> = Result<T, CliError>;

fn mats_on(h: &Homology, lifts: &[AffineLift], v: &Subspace) -> Res<Vec<Mat>> {
    Ok(lifts.iter().map(|l| l.matrix_on(h, v)).collect::<origami::Result<Vec<_>>>()?)
}

fn closure(mats: &[Mat], cap: usize) -> Res<FiniteMatrixGroup> {
    finite_closure(mats, cap).finite().ok_or(CliError::Lib(Error::ActionNotFinite))
}

fn root_system(h: &Homology, v: &Subspace, chains: &[EdgeChain], frame: &[EdgeChain]) -> Res<RootSystemD4> {
    let roots = coordinate_set(h, v, chains)?;
    let frame = frame
        .iter()
        .map(|e| v.coordinates(h, e).ok_or_else(|| CliError::Failed("frame vector outside the subspace".into())))
        .collect::<Res<Vec<_>>>()?;
    Ok(RootSystemD4::with_frame(roots, frame)?)
}

fn triality_images(r: &RootSystemD4, g: &FiniteMatrixGroup) -> Res<Vec<Perm>> {
    let mut v = g.elements.iter().map(|m| r.triality_image(m)).collect::<origami::Result<Vec<_>>>()?;
    v.sort_by_key(|p| p.images().to_vec());
    v.dedup();
    Ok(v)
}

/// Order of the image on `v` and the number of distinct permutations of the
/// singular vertices, after checking the two determine each other.
fn relative_vs_vertices(h: &Homology, gens: &[AffineLift], v: &Subspace) -> Res<(usize, usize, bool)> {
    let g = closure(&mats_on(h, gens, v)?, 10_000)?;
    let marks = h.singular_marks();
    let perms: Vec<Perm> = gens.iter().map(|l| l.vertex_permutation(h)).collect();
    let mut by_perm: HashMap<Vec<usize>, &Mat> = HashMap::new();
    let mut by_mat: HashMap<&Mat, Vec<usize>> = HashMap::new();
    let mut consistent = true;
    for (m, w) in g.elements.iter().zip(&g.words) {
        let p = w.iter().fold(Perm::identity(perms[0].len()), |acc, &i| acc.compose(&perms[i]));
        let on: Vec<usize> = marks.iter().map(|&k| p.apply(k)).collect();
        consistent &= *by_perm.entry(on.clone()).or_insert(m) == m;
        consistent &= *by_mat.entry(m).or_insert_with(|| on.clone()) == on;
    }
    Ok((g.order(), by_perm.len(), consistent))
}

fn ew_roots(frame: &[EdgeChain]) -> Vec<EdgeChain> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            for (x, y) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(frame[a].scale(q(x)) + frame[b].scale(q(y)));
            }
        }
    }
    out
}

fn outer_transposition(a: usize, b: usize) -> Perm {
    let pos = |x| [1, 3, 4].iter().position(|&y| y == x).expect("outer node");
    let mut p = vec![0, 1, 2];
    p.swap(pos(a), pos(b));
    Perm::new(p).expect("permutation")
}

pub fn theorem_a() -> Res<Report> {
    let mut rep = Report::new("verify theorem-a");
    rep.input("surface", "eierlegende-wollmilchsau");
    let h = Homology::new(&eierlegende_wollmilchsau());
    let gens = generators(&h, Kind::Ew)?;
    let auts = automorphisms(&h, Kind::Ew)?;
    let d = decomposition(&h, Kind::Ew)?;
    rep.check("decomposition", d.all_hold(), "H1_st ⊕ H_rel ⊕ H1_0, invariant");
    let v = h.subspace(ew::frame());
    let g = closure(&mats_on(&h, &gens, &v)?, 10_000)?;
    rep.check("image order", g.order() == 96, format!("{} (expected 96)", g.order()));

    let r = root_system(&h, &v, &ew_roots(&ew::frame()), &ew::frame())?;
    let inter = g.filter(|m| r.in_weyl(m));
    let symp = symplectic_subgroup(&r.weyl, &h.gram(&v.basis)?);
    let same = symp.order() == inter.order() && inter.elements.iter().all(|m| symp.contains(m));
    rep.check(
        "image ∩ W(R)",
        inter.order() == 16 && same,
        format!("{} elements, symplectic part of W(R) has {}", inter.order(), symp.order()),
    );

    let (s, t) = (&gens[0], &gens[1]);
    let x = s.compose(&t.inverse(&h))?.compose(s)?;
    let z = |l: &AffineLift| l.matrix_on(&h, &v);
    let outside = !r.in_weyl(&z(s)?) && !r.in_weyl(&z(t)?);
    let inside = [s.pow(&h, 2), t.pow(&h, 2), x.pow(&h, 2)].iter().map(z).collect::<origami::Result<Vec<_>>>()?;
    rep.check(
        "Weyl membership",
        outside && inside.iter().all(|m| r.in_weyl(m)),
        "S, T outside; S², T², (ST⁻¹S)² inside",
    );
    let ts = r.triality_image(&z(s)?)?;
    let tt = r.triality_image(&z(t)?)?;
    let tri = triality_images(&r, &g)?;
    rep.check(
        "triality",
        ts == outer_transposition(1, 4) && tt == outer_transposition(1, 3) && tri.len() == 6,
        format!("S ↦ {ts:?}, T ↦ {tt:?}, image of size {}", tri.len()),
    );

    let hrel = d.space("H_rel").cloned().ok_or_else(|| CliError::Failed("no H_rel".into()))?;
    let spaces = [&v, &hrel];
    let act = block_action(&h, &spaces);
    let k = kernel_is_congruence(&h, &gens, &auts, &act, 4, 100_000)?;
    rep.check(
        "Γ(4) kernel",
        k.holds && k.image_order == 384 && k.automorphisms_in_kernel == 1,
        format!(
            "image {}, Aut ∩ ker {}, {} generators trivial",
            k.image_order,
            k.automorphisms_in_kernel,
            k.witnesses.iter().filter(|w| w.1).count()
        ),
    );
    let (order, perms, consistent) = relative_vs_vertices(&h, &gens, &hrel)?;
    rep.check(
        "H_rel",
        order == 24 && perms == 24 && consistent,
        format!("image order {order}, {perms} permutations of the 4 zeros"),
    );
    rep.put("image_order", g.order()).put("weyl_part", inter.order()).put("kernel_image_order", k.image_order);
    Ok(rep)
}

fn q3_roots(c: &Classes) -> Vec<EdgeChain> {
    let mut out = Vec::new();
    for i in 0..3 {
        for x in [
            c.sigma_breve(i),
            c.zeta_breve(i),
            c.sigma_breve(i) + c.zeta_breve(i - 1),
            c.sigma_breve(i) - c.zeta_breve(i + 1),
        ] {
            out.push(x.clone());
            out.push(-x);
        }
    }
    out
}

fn theorem_b3(rep: &mut Report) -> Res<()> {
    let h = Homology::new(&ornithorynque(3)?);
    let c = Classes::new(3);
    let gens = generators(&h, Kind::Orn(3))?;
    let auts = automorphisms(&h, Kind::Orn(3))?;
    let d = decomposition(&h, Kind::Orn(3))?;
    rep.check("decomposition", d.all_hold(), "H1_st ⊕ H_rel ⊕ H_tau ⊕ H_breve, invariant");
    let v = h.subspace(c.breves());
    let g = closure(&mats_on(&h, &gens, &v)?, 10_000)?;
    rep.check("image order", g.order() == 72, format!("{} (expected 72)", g.order()));
    let r = root_system(&h, &v, &q3_roots(&c), &c.breve_frame())?;
    let inter = g.filter(|m| r.in_weyl(m));
    rep.check(
        "image ∩ W(R)",
        inter.order() == 24 && inter.involutions().len() == 1,
        format!("order {}, {} involutions", inter.order(), inter.involutions().len()),
    );
    let tri = triality_images(&r, &g)?;
    rep.check("triality", tri.len() == 3 && tri.iter().all(|p| p.order() != 2), format!("image of size {}", tri.len()));
    let spaces = [&v];
    let act = block_action(&h, &spaces);
    let k = kernel_is_congruence(&h, &gens, &auts, &act, 3, 100_000)?;
    rep.check("Γ(3) kernel", k.holds, format!("image {}, {} generators", k.image_order, k.witnesses.len()));
    let taus = gens.iter().map(|l| tau_character(&h, 3, l)).collect::<origami::Result<Vec<_>>>()?;
    let aut_taus = auts.iter().map(|l| tau_character(&h, 3, l)).collect::<origami::Result<Vec<_>>>()?;
    let aut_ok = aut_taus.iter().enumerate().all(|(g, &t)| t == (2 * g) % 6);
    rep.check(
        "H_tau character",
        taus[0] == 5 && taus[1] == 1 && aut_ok,
        format!("S ↦ {}, T ↦ {}, automorphisms ↦ {aut_taus:?} in Z/6", taus[0], taus[1]),
    );
    let hrel = d.space("H_rel").cloned().ok_or_else(|| CliError::Failed("no H_rel".into()))?;
    let (order, perms, consistent) = relative_vs_vertices(&h, &gens, &hrel)?;
    rep.check(
        "H_rel",
        order == 6 && perms == 6 && consistent,
        format!("image order {order}, {perms} permutations of the 3 zeros"),
    );
    Ok(())
}

fn theorem_b_general(rep: &mut Report, qn: usize) -> Res<()> {
    let h = Homology::new(&ornithorynque(qn as i64)?);
    let gens = generators(&h, Kind::Orn(qn))?;
    let d = decomposition(&h, Kind::Orn(qn))?;
    rep.check("decomposition", d.all_hold(), "H1_st ⊕ H_rel ⊕ H_tau ⊕ H_breve, invariant");
    let idx = veech_group(&h.origami).index();
    rep.check("Veech index", idx == 3, format!("{idx}"));
    let taus = gens.iter().map(|l| tau_character(&h, qn, l)).collect::<origami::Result<Vec<_>>>()?;
    rep.check("H_tau character", true, format!("generators ↦ {taus:?} in Z/{}", 2 * qn));
    let breve = d.space("H_breve").cloned().ok_or_else(|| CliError::Failed("no H_breve".into()))?;
    let infinite = finite_closure(&mats_on(&h, &gens, &breve)?, 5_000).finite().is_none();
    rep.check("H_breve image infinite", infinite, "closure exceeds the cap with a growing witness");
    let hrel = d.space("H_rel").cloned().ok_or_else(|| CliError::Failed("no H_rel".into()))?;
    let (order, perms, consistent) = relative_vs_vertices(&h, &gens, &hrel)?;
    rep.check("H_rel", consistent, format!("image order {order}, {perms} permutations of the zeros"));
    Ok(())
}

pub fn theorem_b(qn: usize) -> Res<Report> {
    let mut rep = Report::new("verify theorem-b");
    rep.input("q", qn);
    if qn == 3 {
        theorem_b3(&mut rep)?;
    } else {
        theorem_b_general(&mut rep, qn)?;
    }
    Ok(rep)
}

const SPIN_TABLE: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, -1, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, -1, 0, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0, 0, 0, -1],
    [0, -1, 0, 0, 0, 0, 0, 1],
    [0, 0, -1, -1, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, -1, 0, 0],
];

pub fn appendix_a() -> Res<Report> {
    let mut rep = Report::new("verify appendix-a");
    rep.input("surface", "ornithorynque(q=3)");
    let h = Homology::new(&ornithorynque(3)?);
    let b = spin_basis::basis();
    let g = h.gram(&b)?;
    let want = Mat::from_int_rows(&SPIN_TABLE.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let diffs =
        (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|&(i, j)| g.get(i, j) != want.get(i, j)).count();
    rep.check("intersection table", diffs == 0, format!("{diffs} of 64 entries differ"));

    let pairs = spin_basis::symplectic();
    let flat: Vec<EdgeChain> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
    let gs = h.gram(&flat)?;
    let symplectic = (0..flat.len()).all(|i| {
        (0..flat.len()).all(|j| {
            let e = if j == i + 1 && i % 2 == 0 {
                1
            } else if i == j + 1 && j % 2 == 0 {
                -1
            } else {
                0
            };
            gs.get(i, j) == q(e)
        })
    });
    rep.check("symplectic basis", symplectic, "α_4, β_4 complete a symplectic basis");
    let idx = flat.iter().map(|c| class_index_parity(&h, c)).collect::<origami::Result<Vec<_>>>()?;
    rep.check("indices", idx.iter().all(|&i| i == 0), format!("ind mod 2 = {idx:?}"));
    let s = spin_parity(&h)?;
    rep.check("parity", s.parity == Parity::Even, format!("{:?}", s.parity));
    let ew = spin_parity(&Homology::new(&eierlegende_wollmilchsau()));
    rep.check("EW has no spin parity", matches!(ew, Err(Error::OddOrderZeros)), "zeros of odd order are rejected");
    Ok(rep)
}

fn widths(o: &origami::Origami, dir: (i64, i64)) -> Res<Vec<(usize, usize)>> {
    let mut v: Vec<(usize, usize)> = cylinders(o, dir)?.iter().map(|c| (c.width, c.height)).collect();
    v.sort();
    Ok(v)
}

pub fn appendix_b_suite() -> Res<Report> {
    let mut rep = Report::new("verify appendix-b");
    rep.input("surface", "appendix-b");
    let o = appendix_b();
    let h = Homology::new(&o);
    for (name, dir, want) in [
        ("vertical cylinders", (0, 1), vec![(3, 1), (5, 1), (8, 1)]),
        ("horizontal cylinders", (1, 0), vec![(4, 1), (12, 1)]),
        ("slope-1 cylinders", (1, 1), vec![(4, 1), (6, 2)]),
    ] {
        let got = widths(&o, dir)?;
        rep.check(name, got == want, format!("(width, height) {got:?}"));
    }
    let vert = multitwist(&h, (0, 1))?;
    let hor = multitwist(&h, (1, 0))?;
    let diag = multitwist(&h, (1, 1))?;
    let m = |a, b, c, d| Sl2z::new(a, b, c, d);
    let a_vert = vert.lift.inverse(&h);
    rep.check(
        "linear parts",
        a_vert.linear_part == m(1, 0, 120, 1)?
            && hor.linear_part == m(1, 12, 0, 1)?
            && diag.linear_part == m(-11, 12, -12, 13)?,
        format!("{}, {}, {} (vertical inverted)", a_vert.linear_part, hor.linear_part, diag.linear_part),
    );

    let zs = decagon::zeta_star()?;
    let z0 = decagon::zeta0()?;
    let z1 = decagon::zeta1()?;
    let zero = EdgeChain::zero(o.n);
    let dd = z1.clone() - z0.scale(q(2));
    let table: [(&AffineLift, &EdgeChain, EdgeChain); 9] = [
        (&a_vert, &zs, z0.scale(q(5))),
        (&a_vert, &z0, zero.clone()),
        (&a_vert, &z1, z0.scale(q(24))),
        (&hor.lift, &zs, z1.scale(q(-1))),
        (&hor.lift, &z0, z1.scale(q(6))),
        (&hor.lift, &z1, zero.clone()),
        (&diag.lift, &zs, zero),
        (&diag.lift, &z0, dd.scale(qr(2, 3))),
        (&diag.lift, &z1, dd.scale(qr(4, 3))),
    ];
    let bad = table.iter().filter(|(a, x, want)| !h.equivalent(&(a.apply(x) - (*x).clone()), want)).count();
    rep.check("twist action", bad == 0, format!("{bad} of 9 values differ"));

    let split = h.standard_splitting();
    let corr = vec![z0, z1, split.sigma, split.zeta];
    let probes = vec![vert.lift.clone(), hor.lift.clone(), diag.lift.clone()];
    let cert = invariant_supplement_with(&h, &h.singular_marks(), &probes, Some(&[zs]), Some(&corr))?;
    let forced: Vec<(usize, Q)> = cert
        .eliminated
        .iter()
        .filter_map(|e| {
            let nz: Vec<usize> = (0..e.coeffs.len()).filter(|&i| e.coeffs[i] != q(0)).collect();
            (nz.len() == 1 && e.coeffs[nz[0]] == q(1)).then(|| (nz[0], e.rhs))
        })
        .collect();
    let pinned = forced.contains(&(0, qr(1, 6))) && forced.contains(&(1, qr(-5, 24)));
    rep.check(
        "no invariant supplement",
        !cert.feasible && cert.inconsistency.is_some() && pinned,
        format!("s_0 = 1/6, s_1 = -5/24 forced; s_0 + 2 s_1 = {} ≠ 0", qr(1, 6) + q(2) * qr(-5, 24)),
    );
    Ok(rep)
}
