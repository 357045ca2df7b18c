//! Named classes on the catalog surfaces, built from their edge dictionaries.

use super::EdgeChain;
use crate::error::Result;
use crate::linalg::{q, Q};
use crate::origami_core::catalog::{appendix_b_polygon, orn_square, Quat};

fn sum(n: usize, terms: &[(i64, EdgeChain)]) -> EdgeChain {
    terms.iter().fold(EdgeChain::zero(n), |acc, (c, x)| acc + x.scale(q(*c)))
}

/// Classes on the quaternion origami (8 squares).
pub mod ew {
    use super::*;

    const N: usize = 8;

    pub fn sigma(g: Quat) -> EdgeChain {
        EdgeChain::sigma(N, g.0)
    }

    pub fn zeta(g: Quat) -> EdgeChain {
        EdgeChain::zeta(N, g.0)
    }

    pub fn sigma_hat(g: Quat) -> EdgeChain {
        sigma(g) - sigma(g.neg())
    }

    pub fn zeta_hat(g: Quat) -> EdgeChain {
        zeta(g) - zeta(g.neg())
    }

    pub fn epsilon(g: Quat) -> EdgeChain {
        sigma_hat(g) - sigma_hat(g.mul(Quat::J))
    }

    fn signed_sum(plus: [usize; 2], zeta_edges: bool) -> EdgeChain {
        let mut c = EdgeChain::zero(N);
        for g in Quat::all() {
            let s = if plus.contains(&g.unit()) { q(1) } else { q(-1) };
            if zeta_edges {
                c.zeta[g.0] += s;
            } else {
                c.sigma[g.0] += s;
            }
        }
        c
    }

    pub fn w_i() -> EdgeChain {
        signed_sum([0, 1], true)
    }

    pub fn w_j() -> EdgeChain {
        signed_sum([0, 2], false)
    }

    pub fn w_k() -> EdgeChain {
        signed_sum([0, 3], true)
    }

    /// ŵ(v̄) for v ∈ {1, i, j, k}.
    pub fn w_hat(v: Quat) -> EdgeChain {
        let (a, b, c) = match v.unit() {
            0 => (1, 1, 1),
            1 => (1, -1, -1),
            2 => (-1, 1, -1),
            _ => (-1, -1, 1),
        };
        sum(N, &[(a, w_i()), (b, w_j()), (c, w_k())])
    }

    /// ε_1, ε_i, ε_j, ε_k.
    pub fn frame() -> Vec<EdgeChain> {
        [Quat::ONE, Quat::I, Quat::J, Quat::K].into_iter().map(epsilon).collect()
    }
}

/// Classes on the q-family (4q squares), indices taken mod q.
pub mod orn {
    use super::*;

    #[derive(Clone, Copy, Debug)]
    pub struct Classes {
        pub q: usize,
    }

    impl Classes {
        pub fn new(q: usize) -> Self {
            Classes { q }
        }

        fn n(&self) -> usize {
            4 * self.q
        }

        fn sq(&self, i: i64, mu: usize, nu: usize) -> usize {
            orn_square(self.q, i, mu, nu)
        }

        pub fn sigma(&self, i: i64) -> EdgeChain {
            EdgeChain::sigma(self.n(), self.sq(i, 1, 1))
        }

        pub fn sigma_p(&self, i: i64) -> EdgeChain {
            EdgeChain::sigma(self.n(), self.sq(i, 0, 1))
        }

        pub fn zeta(&self, i: i64) -> EdgeChain {
            EdgeChain::zeta(self.n(), self.sq(i, 1, 1))
        }

        pub fn zeta_p(&self, i: i64) -> EdgeChain {
            EdgeChain::zeta(self.n(), self.sq(i, 1, 0))
        }

        pub fn a(&self, i: i64) -> EdgeChain {
            self.sigma(i) - self.sigma(i + 1)
        }

        pub fn a_p(&self, i: i64) -> EdgeChain {
            self.sigma_p(i) - self.sigma_p(i + 1)
        }

        pub fn b(&self, i: i64) -> EdgeChain {
            self.zeta(i) - self.zeta(i + 1)
        }

        pub fn b_p(&self, i: i64) -> EdgeChain {
            self.zeta_p(i) - self.zeta_p(i + 1)
        }

        pub fn tau(&self, i: i64) -> EdgeChain {
            self.a(i) - self.a_p(i - 1)
        }

        pub fn gamma(&self, i: i64) -> EdgeChain {
            self.sigma(i) + self.sigma_p(i - 1)
        }

        pub fn delta(&self, i: i64) -> EdgeChain {
            self.zeta(i) + self.zeta_p(i + 1)
        }

        pub fn sigma_breve(&self, i: i64) -> EdgeChain {
            self.gamma(i) - self.gamma(i + 1)
        }

        pub fn zeta_breve(&self, i: i64) -> EdgeChain {
            self.delta(i - 1) - self.delta(i)
        }

        pub fn sigma_total(&self) -> EdgeChain {
            let n = self.n();
            EdgeChain { sigma: vec![q(1); n], zeta: vec![q(0); n] }
        }

        pub fn zeta_total(&self) -> EdgeChain {
            let n = self.n();
            EdgeChain { sigma: vec![q(0); n], zeta: vec![q(1); n] }
        }

        pub fn sigma_flat(&self) -> EdgeChain {
            (0..self.q as i64).fold(EdgeChain::zero(self.n()), |acc, i| acc + self.sigma(i) - self.sigma_p(i))
        }

        pub fn zeta_flat(&self) -> EdgeChain {
            (0..self.q as i64).fold(EdgeChain::zero(self.n()), |acc, i| acc + self.zeta(i) - self.zeta_p(i))
        }

        pub fn taus(&self) -> Vec<EdgeChain> {
            (0..self.q as i64).map(|i| self.tau(i)).collect()
        }

        /// σ̆_0..σ̆_{q−1} followed by ζ̆_0..ζ̆_{q−1}.
        pub fn breves(&self) -> Vec<EdgeChain> {
            let qi = self.q as i64;
            (0..qi).map(|i| self.sigma_breve(i)).chain((0..qi).map(|i| self.zeta_breve(i))).collect()
        }

        /// ε(1,0), ε(1,1), ε(1,2), ε(0,1) on the q = 3 surface.
        pub fn breve_frame(&self) -> Vec<EdgeChain> {
            let h = crate::linalg::qr(1, 2);
            let (s, z) = (|i| self.sigma_breve(i), |i| self.zeta_breve(i));
            vec![
                (z(0) - s(2) - z(1)).scale(h),
                (-(s(2) + z(2))).scale(h),
                (z(2) - s(2)).scale(h),
                (s(1) - s(0) - z(2)).scale(h),
            ]
        }
    }
}

/// The integral basis α_1, α_2, α_3, α, β_1, β_2, β_3, β on the q = 3 surface,
/// and the symplectic completion α_4, β_4.
pub mod spin_basis {
    use super::orn::Classes;
    use super::*;

    pub const NAMES: [&str; 8] = ["alpha1", "alpha2", "alpha3", "alpha", "beta1", "beta2", "beta3", "beta"];

    pub fn basis() -> Vec<EdgeChain> {
        let c = Classes::new(3);
        vec![
            c.sigma(1) + c.sigma_p(1),
            c.sigma(2) + c.sigma_p(2),
            c.sigma(0) + c.sigma_p(0),
            c.sigma(2) + c.sigma_p(0),
            c.zeta(0) + c.zeta_p(0),
            c.zeta(1) + c.zeta_p(1),
            c.zeta(2) + c.zeta_p(2),
            c.zeta(1) + c.zeta_p(0),
        ]
    }

    /// (α_1, β_1), …, (α_4, β_4).
    pub fn symplectic() -> Vec<(EdgeChain, EdgeChain)> {
        let b = basis();
        let (a1, a2, a3, al, b1, b2, b3, be) = (&b[0], &b[1], &b[2], &b[3], &b[4], &b[5], &b[6], &b[7]);
        let a4 = sum(12, &[(1, al.clone()), (-1, a3.clone()), (1, b2.clone()), (-1, b3.clone())]);
        let b4 = sum(12, &[(1, be.clone()), (-1, a1.clone()), (1, a2.clone()), (-1, b1.clone())]);
        vec![(a1.clone(), b1.clone()), (a2.clone(), b2.clone()), (a3.clone(), b3.clone()), (a4, b4)]
    }
}

/// Side classes on the decagon surface.
pub mod decagon {
    use super::*;

    /// ζ_a..ζ_e for k = 0..4.
    pub fn side(k: usize) -> Result<EdgeChain> {
        let p = appendix_b_polygon();
        Ok(EdgeChain::from_terms(p.origami.n, &p.side_class(k)?))
    }

    pub fn sides() -> Result<[EdgeChain; 5]> {
        Ok([side(0)?, side(1)?, side(2)?, side(3)?, side(4)?])
    }

    fn combo(c: [i64; 5]) -> Result<EdgeChain> {
        let s = sides()?;
        let n = s[0].n();
        Ok(c.iter().zip(s.iter()).fold(EdgeChain::zero(n), |acc, (k, x)| acc + x.scale(Q::from_integer(*k as i128))))
    }

    /// ζ_0 = 2(ζ_a − ζ_e) − 3(ζ_b − ζ_d).
    pub fn zeta0() -> Result<EdgeChain> {
        combo([2, -3, 0, 3, -2])
    }

    /// ζ_1 = ζ_a − 3ζ_c + 2ζ_e.
    pub fn zeta1() -> Result<EdgeChain> {
        combo([1, 0, -3, 0, 2])
    }

    /// ζ* = ζ_e − ζ_d.
    pub fn zeta_star() -> Result<EdgeChain> {
        combo([0, 0, 0, -1, 1])
    }

    /// Integer combination of the sides with coefficients on (ζ_a, …, ζ_e).
    pub fn combination(c: [i64; 5]) -> Result<EdgeChain> {
        combo(c)
    }
}
