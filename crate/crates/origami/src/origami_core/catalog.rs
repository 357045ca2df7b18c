//! Built-in surfaces with pinned square labels.
//!
//! Eierlegende Wollmilchsau: square `e + 4·s` is the quaternion ±e with
//! e ∈ {1, i, j, k} → 0..3 and s = 1 for the negative sign. So 0..8 reads
//! 1, i, j, k, −1, −i, −j, −k. r(g) = g·i, u(g) = g·j.
//!
//! Ornithorynque(q): square `4i + 2μ + ν` is (i, μ, ν) ∈ Z/q × Z/2 × Z/2.
//!
//! Decagon origami: squares are ordered by their lower-left lattice corner,
//! bottom row first, left to right.

use super::perm::Perm;
use super::polygon::{EdgeKind, EdgeTerm, PolygonOrigami};
use super::surface::Origami;
use crate::error::{Error, Result};

pub const EW_NAME: &str = "eierlegende-wollmilchsau";
pub const ORN_NAME: &str = "ornithorynque";
pub const APPB_NAME: &str = "appendix-b";

pub const DECAGON: [(i64, i64); 10] =
    [(0, 0), (1, 2), (2, 3), (3, 3), (4, 2), (5, 1), (4, -1), (3, -2), (2, -2), (1, -1)];

/// A unit quaternion ±1, ±i, ±j, ±k encoded as `e + 4·neg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat(pub usize);

#[allow(clippy::should_implement_trait)]
impl Quat {
    pub const ONE: Quat = Quat(0);
    pub const I: Quat = Quat(1);
    pub const J: Quat = Quat(2);
    pub const K: Quat = Quat(3);
    pub const MINUS_ONE: Quat = Quat(4);

    pub fn all() -> impl Iterator<Item = Quat> {
        (0..8).map(Quat)
    }

    pub fn neg(self) -> Quat {
        Quat((self.0 + 4) % 8)
    }

    pub fn unit(self) -> usize {
        self.0 % 4
    }

    pub fn is_negative(self) -> bool {
        self.0 >= 4
    }

    pub fn mul(self, o: Quat) -> Quat {
        // (sign, unit) of e_a · e_b for units 1, i, j, k
        const TABLE: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let (neg, e) = TABLE[self.unit()][o.unit()];
        let neg = neg ^ self.is_negative() ^ o.is_negative();
        Quat(e + if neg { 4 } else { 0 })
    }

    pub fn name(self) -> String {
        let u = ["1", "i", "j", "k"][self.unit()];
        if self.is_negative() {
            format!("-{u}")
        } else {
            u.to_string()
        }
    }

    pub fn parse(s: &str) -> Option<Quat> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let e = ["1", "i", "j", "k"].iter().position(|&x| x == body)?;
        Some(Quat(e + if neg { 4 } else { 0 }))
    }
}

pub fn eierlegende_wollmilchsau() -> Origami {
    let r = Perm::from_fn(8, |g| Quat(g).mul(Quat::I).0);
    let u = Perm::from_fn(8, |g| Quat(g).mul(Quat::J).0);
    Origami::new(r, u).expect("quaternion origami is transitive")
}

/// Automorphism of the quaternion origami given by left multiplication by h.
pub fn ew_automorphism(h: Quat) -> Perm {
    Perm::from_fn(8, |g| h.mul(Quat(g)).0)
}

pub fn orn_square(q: usize, i: i64, mu: usize, nu: usize) -> usize {
    let i = i.rem_euclid(q as i64) as usize;
    4 * i + 2 * (mu % 2) + (nu % 2)
}

pub fn orn_coords(idx: usize) -> (usize, usize, usize) {
    (idx / 4, (idx / 2) % 2, idx % 2)
}

pub fn ornithorynque(q: i64) -> Result<Origami> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::EvenQ(q));
    }
    let qu = q as usize;
    let n = 4 * qu;
    let r = Perm::from_fn(n, |s| {
        let (i, mu, nu) = orn_coords(s);
        let i = i as i64;
        let di = match (mu, nu) {
            (1, _) => 0,
            (0, 0) => 1,
            _ => -1,
        };
        orn_square(qu, i + di, mu + 1, nu)
    });
    let u = Perm::from_fn(n, |s| {
        let (i, mu, nu) = orn_coords(s);
        let i = i as i64;
        let di = match (mu, nu) {
            (_, 1) => 0,
            (1, 0) => 1,
            _ => -1,
        };
        orn_square(qu, i + di, mu, nu + 1)
    });
    Origami::new(r, u)
}

/// Automorphism i ↦ i + g of the q-family.
pub fn orn_automorphism(q: usize, g: i64) -> Perm {
    Perm::from_fn(4 * q, |s| {
        let (i, mu, nu) = orn_coords(s);
        orn_square(q, i as i64 + g, mu, nu)
    })
}

pub fn appendix_b_polygon() -> PolygonOrigami {
    PolygonOrigami::new(&DECAGON).expect("decagon is a valid polygon")
}

pub fn appendix_b() -> Origami {
    appendix_b_polygon().origami
}

/// Named edge: `symbol` is realized by `terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictEntry {
    pub symbol: String,
    pub terms: Vec<EdgeTerm>,
}

fn single(symbol: String, kind: EdgeKind, square: usize) -> DictEntry {
    DictEntry { symbol, terms: vec![EdgeTerm { kind, square, coeff: 1 }] }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub origami: Origami,
    pub dictionary: Vec<DictEntry>,
}

pub fn catalog(name: &str, q: Option<i64>) -> Result<CatalogEntry> {
    match name {
        EW_NAME => {
            let mut dictionary = Vec::new();
            for g in Quat::all() {
                dictionary.push(single(format!("sigma_{}", g.name()), EdgeKind::Sigma, g.0));
            }
            for g in Quat::all() {
                dictionary.push(single(format!("zeta_{}", g.name()), EdgeKind::Zeta, g.0));
            }
            Ok(CatalogEntry { name: name.into(), origami: eierlegende_wollmilchsau(), dictionary })
        }
        ORN_NAME => {
            let qv = q.unwrap_or(3);
            let origami = ornithorynque(qv)?;
            let qu = qv as usize;
            let mut dictionary = Vec::new();
            for (sym, kind, mu, nu) in [
                ("sigma", EdgeKind::Sigma, 1, 1),
                ("sigma'", EdgeKind::Sigma, 0, 1),
                ("zeta", EdgeKind::Zeta, 1, 1),
                ("zeta'", EdgeKind::Zeta, 1, 0),
            ] {
                for i in 0..qu {
                    dictionary.push(single(format!("{sym}_{i}"), kind, orn_square(qu, i as i64, mu, nu)));
                }
            }
            Ok(CatalogEntry { name: name.into(), origami, dictionary })
        }
        APPB_NAME => {
            let poly = appendix_b_polygon();
            let mut dictionary = Vec::new();
            for (k, label) in ["a", "b", "c", "d", "e"].iter().enumerate() {
                dictionary.push(DictEntry { symbol: format!("zeta_{label}"), terms: poly.side_class(k)? });
            }
            Ok(CatalogEntry { name: name.into(), origami: poly.origami, dictionary })
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        assert_eq!(Quat::I.mul(Quat::J), Quat::K);
        assert_eq!(Quat::J.mul(Quat::I), Quat::K.neg());
        for g in Quat::all() {
            assert_eq!(g.mul(Quat::ONE), g);
            assert_eq!(Quat::parse(&g.name()), Some(g));
        }
        for a in Quat::all() {
            for b in Quat::all() {
                for c in Quat::all() {
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn ornithorynque_rejects_even_q() {
        assert_eq!(ornithorynque(4).unwrap_err(), Error::EvenQ(4));
        assert!(matches!(catalog("nope", None), Err(Error::UnknownName(_))));
    }
}
