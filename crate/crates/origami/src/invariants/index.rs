//! Turning numbers of closed edge walks, read off the ribbon structure.
//!
//! Around a vertex of multiplicity m the 4m edge-ends are ordered
//! counter-clockwise as E_g, N_g, W_g, S_g, E_{c g}, … where g runs through
//! the commutator cycle c = u r u⁻¹ r⁻¹ of the vertex. E_g and N_g start σ_g
//! and ζ_g, W_g ends σ_{r⁻¹ g}, S_g ends ζ_{r u⁻¹ r⁻¹ g}.

use crate::error::{Error, Result};
use crate::homology::EdgeChain;
use crate::linalg::q;
use crate::origami_core::{EdgeKind, Origami};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkStep {
    pub kind: EdgeKind,
    pub square: usize,
    /// Along the edge orientation (rightward for σ, upward for ζ).
    pub forward: bool,
}

impl WalkStep {
    pub fn sigma(g: usize) -> Self {
        WalkStep { kind: EdgeKind::Sigma, square: g, forward: true }
    }

    pub fn zeta(g: usize) -> Self {
        WalkStep { kind: EdgeKind::Zeta, square: g, forward: true }
    }

    pub fn rev(self) -> Self {
        WalkStep { forward: !self.forward, ..self }
    }

    /// Square whose lower-left corner is the head of the edge.
    fn head(&self, o: &Origami) -> usize {
        match self.kind {
            EdgeKind::Sigma => o.r.apply(self.square),
            EdgeKind::Zeta => o.u.apply(self.square),
        }
    }

    /// A square whose lower-left corner is where the step starts.
    pub fn start_square(&self, o: &Origami) -> usize {
        if self.forward {
            self.square
        } else {
            self.head(o)
        }
    }

    pub fn end_square(&self, o: &Origami) -> usize {
        if self.forward {
            self.head(o)
        } else {
            self.square
        }
    }
}

/// Which way each passage goes around its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Turning {
    #[default]
    Ccw,
    Cw,
}

pub fn walk_chain(n: usize, walk: &[WalkStep]) -> EdgeChain {
    let mut c = EdgeChain::zero(n);
    for s in walk {
        let x = if s.forward { q(1) } else { q(-1) };
        match s.kind {
            EdgeKind::Sigma => c.sigma[s.square] += x,
            EdgeKind::Zeta => c.zeta[s.square] += x,
        }
    }
    c
}

struct Rays {
    vertex: Vec<usize>,
    pos: Vec<usize>,
    mult: Vec<usize>,
}

impl Rays {
    fn new(o: &Origami) -> Self {
        let classes = o.vertex_classes();
        let mut vertex = vec![0; o.n];
        let mut pos = vec![0; o.n];
        for (k, c) in classes.iter().enumerate() {
            for (i, &g) in c.cycle.iter().enumerate() {
                vertex[g] = k;
                pos[g] = i;
            }
        }
        Rays { vertex, pos, mult: classes.iter().map(|c| c.multiplicity()).collect() }
    }

    /// (vertex, position among the 4m edge-ends).
    fn at(&self, g: usize, offset: usize) -> (usize, usize) {
        (self.vertex[g], 4 * self.pos[g] + offset)
    }

    fn zeta_end(o: &Origami, h: usize) -> usize {
        o.r.apply(o.u.apply(o.r.inverse().apply(h)))
    }

    fn outgoing(&self, o: &Origami, s: &WalkStep) -> (usize, usize) {
        match (s.kind, s.forward) {
            (EdgeKind::Sigma, true) => self.at(s.square, 0),
            (EdgeKind::Sigma, false) => self.at(o.r.apply(s.square), 2),
            (EdgeKind::Zeta, true) => self.at(s.square, 1),
            (EdgeKind::Zeta, false) => self.at(Self::zeta_end(o, s.square), 3),
        }
    }

    fn incoming(&self, o: &Origami, s: &WalkStep) -> (usize, usize) {
        self.outgoing(o, &s.rev())
    }
}

/// Total turning of the walk pushed off its vertices, in full turns.
///
/// A passage sweeping t quarter-sectors counter-clockwise from the
/// reversed incoming edge-end to the outgoing one turns by tπ/2 − π; going
/// clockwise instead turns by π − (4m − t)π/2.
pub fn turning_number(o: &Origami, walk: &[WalkStep], turning: Turning) -> Result<i64> {
    if walk.is_empty() {
        return Err(Error::NotClosed);
    }
    let rays = Rays::new(o);
    let mut quarters: i64 = 0;
    for (i, s) in walk.iter().enumerate() {
        let next = &walk[(i + 1) % walk.len()];
        let (v_in, p_in) = rays.incoming(o, s);
        let (v_out, p_out) = rays.outgoing(o, next);
        if v_in != v_out {
            return Err(Error::NotClosed);
        }
        let m4 = 4 * rays.mult[v_in] as i64;
        let t = (p_out as i64 - p_in as i64).rem_euclid(m4);
        if t == 0 {
            return Err(Error::Backtrack);
        }
        quarters += match turning {
            Turning::Ccw => t - 2,
            Turning::Cw => t + 2 - m4,
        };
    }
    if quarters % 4 != 0 {
        return Err(Error::Internal(format!("turning of {quarters} quarter turns")));
    }
    Ok(quarters / 4)
}

fn check_odd_multiplicities(o: &Origami) -> Result<()> {
    if o.vertex_classes().iter().any(|c| c.multiplicity() % 2 == 0) {
        return Err(Error::EvenConeMultiplicity);
    }
    Ok(())
}

/// ind mod 2, counter-clockwise convention.
pub fn index_parity(o: &Origami, walk: &[WalkStep]) -> Result<u8> {
    index_parity_with(o, walk, Turning::Ccw)
}

pub fn index_parity_with(o: &Origami, walk: &[WalkStep], turning: Turning) -> Result<u8> {
    check_odd_multiplicities(o)?;
    Ok(turning_number(o, walk, turning)?.rem_euclid(2) as u8)
}

/// Splits an integral cycle into closed walks that visit each vertex at most
/// once. The walk always leaves along the lowest-numbered available edge
/// (σ_g is edge g, ζ_g is edge n + g) and a loop is cut off as soon as a
/// vertex repeats.
pub fn simple_loops(o: &Origami, c: &EdgeChain) -> Result<Vec<Vec<WalkStep>>> {
    let n = o.n;
    let vertex = o.vertex_of_square();
    let mut avail = vec![0i64; 2 * n];
    let mut steps = Vec::with_capacity(2 * n);
    for g in 0..n {
        for (k, (coef, kind)) in [(c.sigma[g], EdgeKind::Sigma), (c.zeta[g], EdgeKind::Zeta)].into_iter().enumerate() {
            if !coef.is_integer() {
                return Err(Error::NotAbsolute);
            }
            let x = coef.to_integer() as i64;
            avail[k * n + g] = x.abs();
            steps.push((k * n + g, WalkStep { kind, square: g, forward: x >= 0 }));
        }
    }
    steps.sort_by_key(|s| s.0);
    let step_of: Vec<WalkStep> = steps.into_iter().map(|s| s.1).collect();
    let start = |e: usize| vertex[step_of[e].start_square(o)];
    let end = |e: usize| vertex[step_of[e].end_square(o)];
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); vertex.iter().max().map_or(0, |m| m + 1)];
    for e in 0..2 * n {
        if avail[e] > 0 {
            out_edges[start(e)].push(e);
        }
    }

    let mut loops = Vec::new();
    while let Some(first) = (0..2 * n).find(|&e| avail[e] > 0) {
        let mut path: Vec<WalkStep> = Vec::new();
        let mut verts = vec![start(first)];
        loop {
            let cur = *verts.last().expect("nonempty");
            let e = *out_edges[cur].iter().find(|&&e| avail[e] > 0).ok_or(Error::NotAbsolute)?;
            avail[e] -= 1;
            path.push(step_of[e]);
            let next = end(e);
            if let Some(p) = verts.iter().position(|&v| v == next) {
                loops.push(path.split_off(p));
                verts.truncate(p + 1);
                if path.is_empty() {
                    break;
                }
            } else {
                verts.push(next);
            }
        }
    }
    Ok(loops)
}
