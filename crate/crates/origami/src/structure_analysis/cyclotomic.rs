//! Exact arithmetic in Q[x]/(x^m − 1) and its cyclotomic quotients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::{fmt_q, q, Q};
use num_traits::{One, Zero};

/// An element of Q[x]/(x^m − 1), stored by its m coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    pub coeffs: Vec<Q>,
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_poly())
    }
}

impl Cyclo {
    pub fn zero(m: usize) -> Self {
        Cyclo { coeffs: vec![Q::zero(); m] }
    }

    pub fn constant(m: usize, c: Q) -> Self {
        let mut z = Cyclo::zero(m);
        z.coeffs[0] = c;
        z
    }

    /// x^k, k taken mod m.
    pub fn monomial(m: usize, k: i64) -> Self {
        let mut z = Cyclo::zero(m);
        z.coeffs[k.rem_euclid(m as i64) as usize] = Q::one();
        z
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        Cyclo { coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: Q) -> Self {
        Cyclo { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// x ↦ x⁻¹; complex conjugation at every root of unity.
    pub fn conj(&self) -> Self {
        let m = self.modulus();
        Cyclo { coeffs: (0..m).map(|k| self.coeffs[(m - k) % m]).collect() }
    }

    /// Remove the component at the trivial character: multiply by 1 − e_0,
    /// with e_0 = (1 + x + … + x^{m−1})/m.
    pub fn nontrivial_part(&self) -> Self {
        let m = self.modulus();
        let mean = self.coeffs.iter().fold(Q::zero(), |s, c| s + c) / Q::from_integer(m as i128);
        Cyclo { coeffs: self.coeffs.iter().map(|c| c - mean).collect() }
    }

    /// Equality after discarding the trivial-character component.
    pub fn eq_nontrivial(&self, other: &Cyclo) -> bool {
        (self - other).nontrivial_part().is_zero()
    }

    /// Value at x = 1 (the trivial character).
    pub fn at_one(&self) -> Q {
        self.coeffs.iter().fold(Q::zero(), |s, c| s + c)
    }

    /// Remainder modulo the d-th cyclotomic polynomial, d | m.
    pub fn reduce_mod_cyclotomic(&self, d: usize) -> Vec<Q> {
        poly_rem(&self.coeffs, &cyclotomic_poly(d))
    }

    /// The value in Q(ζ_m) is rational; returns it when so.
    pub fn as_rational_at_primitive(&self) -> Option<Q> {
        let r = self.reduce_mod_cyclotomic(self.modulus());
        if r.iter().skip(1).all(|c| c.is_zero()) {
            Some(r.first().copied().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }

    pub fn to_string_poly(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_q(c),
                _ => format!("{}*x^{}", fmt_q(c), k),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        Cyclo { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        Cyclo { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        let m = self.modulus();
        let mut out = Cyclo::zero(m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out.coeffs[(i + j) % m] += a * b;
            }
        }
        out
    }
}

/// Coefficients (lowest degree first) of the d-th cyclotomic polynomial.
pub fn cyclotomic_poly(d: usize) -> Vec<Q> {
    let mut p = vec![-Q::one()];
    p.resize(d + 1, Q::zero());
    p[d] = Q::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = poly_div(&p, &cyclotomic_poly(e));
        }
    }
    p
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = *b.last().unwrap();
    if r.len() <= db {
        return (vec![Q::zero()], r);
    }
    let mut quo = vec![Q::zero(); r.len() - db];
    for k in (0..quo.len()).rev() {
        let c = r[k + db] / lead;
        quo[k] = c;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= c * bi;
        }
    }
    r.truncate(db.max(1));
    (quo, trim(r))
}

fn poly_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    poly_divmod(a, b).0
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    poly_divmod(a, b).1
}

/// 2 × 2 matrix over the group ring; column j is the image of the j-th basis
/// vector (σ̆(ρ), ζ̆(ρ)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloBlock(pub [[Cyclo; 2]; 2]);

impl CycloBlock {
    pub fn trace(&self) -> Cyclo {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Cyclo {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }

    pub fn eq_nontrivial(&self, other: &CycloBlock) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.0[i][j].eq_nontrivial(&other.0[i][j])))
    }

    pub fn from_int_poly(m: usize, entries: [[&[(i64, i64)]; 2]; 2]) -> Self {
        let mk = |terms: &[(i64, i64)]| {
            terms.iter().fold(Cyclo::zero(m), |acc, (c, k)| &acc + &Cyclo::monomial(m, *k).scale(q(*c)))
        };
        CycloBlock([[mk(entries[0][0]), mk(entries[0][1])], [mk(entries[1][0]), mk(entries[1][1])]])
    }
}
