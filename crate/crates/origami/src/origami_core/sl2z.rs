//! SL(2,Z) matrices, the generators S, T and the pinned word decomposition.
//!
//! S = [[1,0],[1,1]] and T = [[1,1],[0,1]].

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2z {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl fmt::Debug for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Sl2z {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::NotSl2z);
        }
        Ok(Sl2z { a, b, c, d })
    }

    pub const fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2z { a, b, c, d }
    }

    pub const ID: Sl2z = Sl2z::raw(1, 0, 0, 1);
    pub const NEG_ID: Sl2z = Sl2z::raw(-1, 0, 0, -1);
    pub const S: Sl2z = Sl2z::raw(1, 0, 1, 1);
    pub const T: Sl2z = Sl2z::raw(1, 1, 0, 1);
    pub const J: Sl2z = Sl2z::raw(0, -1, 1, 0);

    pub fn mul(&self, o: &Sl2z) -> Sl2z {
        Sl2z {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inv(&self) -> Sl2z {
        Sl2z { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn neg(&self) -> Sl2z {
        Sl2z { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn pow(&self, e: i64) -> Sl2z {
        let base = if e < 0 { self.inv() } else { *self };
        (0..e.unsigned_abs()).fold(Sl2z::ID, |acc, _| acc.mul(&base))
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    /// Entries reduced into `0..n`.
    pub fn reduce_mod(&self, n: i64) -> [i64; 4] {
        [self.a.rem_euclid(n), self.b.rem_euclid(n), self.c.rem_euclid(n), self.d.rem_euclid(n)]
    }

    pub fn is_congruent_to_id(&self, n: i64) -> bool {
        self.reduce_mod(n) == Sl2z::ID.reduce_mod(n)
    }

    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        (self.a * v.0 + self.b * v.1, self.c * v.0 + self.d * v.1)
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Letter {
    S,
    SInv,
    T,
    TInv,
}

impl Letter {
    pub fn matrix(self) -> Sl2z {
        match self {
            Letter::S => Sl2z::S,
            Letter::SInv => Sl2z::S.inv(),
            Letter::T => Sl2z::T,
            Letter::TInv => Sl2z::T.inv(),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::S => "S",
            Letter::SInv => "S^-1",
            Letter::T => "T",
            Letter::TInv => "T^-1",
        }
    }
}

/// The fixed word T⁻¹ S T⁻¹ for J; its square represents −Id.
pub const J_WORD: [Letter; 3] = [Letter::TInv, Letter::S, Letter::TInv];

/// A word in S, T and their inverses, with a sign: the matrix is `sign · L1 L2 … Lk`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub negate: bool,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters, negate: false }
    }

    pub fn sign(&self) -> i64 {
        if self.negate {
            -1
        } else {
            1
        }
    }

    pub fn eval(&self) -> Sl2z {
        let m = self.letters.iter().fold(Sl2z::ID, |acc, l| acc.mul(&l.matrix()));
        if self.negate {
            m.neg()
        } else {
            m
        }
    }

    /// Letters realizing the matrix exactly, with −Id spelled out as (T⁻¹ S T⁻¹)².
    pub fn full_letters(&self) -> Vec<Letter> {
        let mut out = self.letters.clone();
        if self.negate {
            out.extend_from_slice(&J_WORD);
            out.extend_from_slice(&J_WORD);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect(), negate: self.negate }
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        Word { letters, negate: self.negate ^ o.negate }.free_reduce()
    }

    pub fn free_reduce(mut self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.drain(..) {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out, negate: self.negate }
    }

    pub fn power(letter: Letter, k: usize) -> Word {
        Word::new(vec![letter; k])
    }

    pub fn to_string_compact(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let (base, sgn) = match l {
                Letter::S => ("S", 1),
                Letter::SInv => ("S", -1),
                Letter::T => ("T", 1),
                Letter::TInv => ("T", -1),
            };
            let e = sgn * (j - i) as i64;
            parts.push(if e == 1 { base.to_string() } else { format!("{base}^{e}") });
            i = j;
        }
        let body = if parts.is_empty() { "Id".to_string() } else { parts.join(" ") };
        if self.negate {
            format!("-({body})")
        } else {
            body
        }
    }
}

fn push_power(out: &mut Vec<Letter>, pos: Letter, e: i64) {
    let l = if e >= 0 { pos } else { pos.inverse() };
    out.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
}

/// Euclidean decomposition on the first column.
///
/// Left multiplications by powers of S and T reduce (a, c) to (±1, 0); the
/// remainder is ±T^t. Reading the inverses back gives the word.
pub fn sl2z_word(m: &Sl2z) -> Word {
    let (mut a, mut b, mut c, mut d) = (m.a, m.b, m.c, m.d);
    // applied[i] = (letter, exponent) with the running matrix E_k … E_1 M
    let mut applied: Vec<(Letter, i64)> = Vec::new();
    while c != 0 {
        if a == 0 {
            // c = ±1 here; T^c brings a to c² = 1
            let k = c;
            a += k * c;
            b += k * d;
            applied.push((Letter::T, k));
        } else if c.abs() >= a.abs() {
            let qt = c / a;
            c -= qt * a;
            d -= qt * b;
            applied.push((Letter::S, -qt));
        } else {
            let qt = a / c;
            a -= qt * c;
            b -= qt * d;
            applied.push((Letter::T, -qt));
        }
    }
    debug_assert!(a == d && (a == 1 || a == -1));
    let s = a;
    let mut letters = Vec::new();
    for &(l, e) in &applied {
        push_power(&mut letters, l, -e);
    }
    push_power(&mut letters, Letter::T, s * b);
    Word { letters, negate: s == -1 }.free_reduce()
}

/// Primitive-vector normalization: N with N·(p,q) = (1,0).
pub fn normalizer(p: i64, qd: i64) -> Result<Sl2z> {
    let (g, x, y) = crate::linalg::ext_gcd(p as i128, qd as i128);
    if g != 1 {
        return Err(Error::BadDirection);
    }
    // p·x + q·y = 1; N⁻¹ = [[p, -y],[q, x]]
    let (x, y) = (x as i64, y as i64);
    let ninv = Sl2z::new(p, -y, qd, x)?;
    Ok(ninv.inv())
}
