use crate::linalg::{fmt_q, parse_q, q, Q};
use crate::origami_core::{EdgeKind, EdgeTerm};
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, Mul, Neg, Sub};

/// Rational combination of the edge generators σ_g (bottom of g, rightward)
/// and ζ_g (left of g, upward).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeChain {
    pub sigma: Vec<Q>,
    pub zeta: Vec<Q>,
}

impl EdgeChain {
    pub fn zero(n: usize) -> Self {
        EdgeChain { sigma: vec![Q::zero(); n], zeta: vec![Q::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(n: usize, g: usize) -> Self {
        let mut c = EdgeChain::zero(n);
        c.sigma[g] = q(1);
        c
    }

    pub fn zeta(n: usize, g: usize) -> Self {
        let mut c = EdgeChain::zero(n);
        c.zeta[g] = q(1);
        c
    }

    pub fn edge(n: usize, kind: EdgeKind, g: usize) -> Self {
        match kind {
            EdgeKind::Sigma => EdgeChain::sigma(n, g),
            EdgeKind::Zeta => EdgeChain::zeta(n, g),
        }
    }

    pub fn from_terms(n: usize, terms: &[EdgeTerm]) -> Self {
        let mut c = EdgeChain::zero(n);
        for t in terms {
            match t.kind {
                EdgeKind::Sigma => c.sigma[t.square] += q(t.coeff),
                EdgeKind::Zeta => c.zeta[t.square] += q(t.coeff),
            }
        }
        c
    }

    /// Coordinates σ_0..σ_{n−1}, ζ_0..ζ_{n−1}.
    pub fn to_vec(&self) -> Vec<Q> {
        let mut v = self.sigma.clone();
        v.extend_from_slice(&self.zeta);
        v
    }

    pub fn from_vec(v: &[Q]) -> Self {
        let n = v.len() / 2;
        EdgeChain { sigma: v[..n].to_vec(), zeta: v[n..].to_vec() }
    }

    pub fn from_ints(sigma: &[i64], zeta: &[i64]) -> Self {
        EdgeChain { sigma: sigma.iter().map(|&x| q(x)).collect(), zeta: zeta.iter().map(|&x| q(x)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.sigma.iter().chain(&self.zeta).all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.sigma.iter().chain(&self.zeta).all(|x| x.is_integer())
    }

    pub fn scale(&self, c: Q) -> Self {
        EdgeChain { sigma: self.sigma.iter().map(|x| x * c).collect(), zeta: self.zeta.iter().map(|x| x * c).collect() }
    }

    /// Sum of all σ and of all ζ coefficients: the period of ω along the chain.
    pub fn holonomy(&self) -> (Q, Q) {
        (self.sigma.iter().sum(), self.zeta.iter().sum())
    }
}

impl Add for &EdgeChain {
    type Output = EdgeChain;
    fn add(self, o: &EdgeChain) -> EdgeChain {
        EdgeChain {
            sigma: self.sigma.iter().zip(&o.sigma).map(|(a, b)| a + b).collect(),
            zeta: self.zeta.iter().zip(&o.zeta).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &EdgeChain {
    type Output = EdgeChain;
    fn sub(self, o: &EdgeChain) -> EdgeChain {
        EdgeChain {
            sigma: self.sigma.iter().zip(&o.sigma).map(|(a, b)| a - b).collect(),
            zeta: self.zeta.iter().zip(&o.zeta).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for EdgeChain {
    type Output = EdgeChain;
    fn add(self, o: EdgeChain) -> EdgeChain {
        &self + &o
    }
}

impl Sub for EdgeChain {
    type Output = EdgeChain;
    fn sub(self, o: EdgeChain) -> EdgeChain {
        &self - &o
    }
}

impl Neg for EdgeChain {
    type Output = EdgeChain;
    fn neg(self) -> EdgeChain {
        self.scale(q(-1))
    }
}

impl Mul<&EdgeChain> for Q {
    type Output = EdgeChain;
    fn mul(self, c: &EdgeChain) -> EdgeChain {
        c.scale(self)
    }
}

pub fn holonomy(c: &EdgeChain) -> (Q, Q) {
    c.holonomy()
}

#[derive(Serialize, Deserialize)]
struct ChainJson {
    sigma: Vec<String>,
    zeta: Vec<String>,
}

impl Serialize for EdgeChain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ChainJson { sigma: self.sigma.iter().map(fmt_q).collect(), zeta: self.zeta.iter().map(fmt_q).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeChain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ChainJson::deserialize(d)?;
        if j.sigma.len() != j.zeta.len() {
            return Err(D::Error::custom("sigma and zeta lengths differ"));
        }
        let parse = |v: &[String]| -> Result<Vec<Q>, D::Error> {
            v.iter().map(|s| parse_q(s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`")))).collect()
        };
        Ok(EdgeChain { sigma: parse(&j.sigma)?, zeta: parse(&j.zeta)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qr;

    #[test]
    fn json_uses_rational_strings() {
        let mut c = EdgeChain::zero(2);
        c.sigma[0] = qr(1, 2);
        c.zeta[1] = q(-3);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"sigma":["1/2","0"],"zeta":["0","-3"]}"#);
        let back: EdgeChain = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
