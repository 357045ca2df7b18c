//! Norm growth of random products and of powers, in floating point with
//! renormalization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Mat;
use crate::par::Exec;

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    /// Largest ∞-norm of a prefix product over all trials (may be +∞ when the
    /// log exceeds the f64 range; see `max_log_norm`).
    pub max_norm: f64,
    pub max_log_norm: f64,
    /// Mean over trials of (log‖P_L‖ − log‖P_{L/2}‖)/(L/2).
    pub growth_rate: f64,
    pub trials: usize,
    pub length: usize,
}

struct Product {
    d: usize,
    m: Vec<f64>,
    log_scale: f64,
}

impl Product {
    fn new(d: usize) -> Self {
        let mut m = vec![0.0; d * d];
        for i in 0..d {
            m[i * d + i] = 1.0;
        }
        Product { d, m, log_scale: 0.0 }
    }

    /// self ← a · self
    fn left_mul(&mut self, a: &[f64]) {
        let d = self.d;
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = a[i * d + k];
                if x != 0.0 {
                    for j in 0..d {
                        out[i * d + j] += x * self.m[k * d + j];
                    }
                }
            }
        }
        self.m = out;
        let n = self.norm();
        if !(1e-100..=1e100).contains(&n) {
            self.m.iter_mut().for_each(|x| *x /= n);
            self.log_scale += n.ln();
        }
    }

    fn norm(&self) -> f64 {
        let d = self.d;
        (0..d).map(|i| self.m[i * d..(i + 1) * d].iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    fn log_norm(&self) -> f64 {
        self.norm().ln() + self.log_scale
    }
}

fn trial(mats: &[Vec<f64>], d: usize, length: usize, seed: u64, stream: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut p = Product::new(d);
    let mut max_log = p.log_norm();
    let mut mid = 0.0;
    for step in 1..=length {
        let k = rng.gen_range(0..mats.len());
        p.left_mul(&mats[k]);
        max_log = max_log.max(p.log_norm());
        if step == length / 2 {
            mid = p.log_norm();
        }
    }
    let half = (length - length / 2).max(1) as f64;
    (max_log, (p.log_norm() - mid) / half)
}

/// Random words of the given length in `mats`, `trials` times. Trial t uses
/// ChaCha8 stream t of `seed`, so the report does not depend on `exec`.
pub fn cocycle_growth(mats: &[Mat], length: usize, trials: usize, seed: u64, exec: Exec) -> GrowthReport {
    assert!(!mats.is_empty());
    let d = mats[0].rows;
    let fm: Vec<Vec<f64>> = mats.iter().map(|m| m.to_f64()).collect();
    let res = exec.map_range(trials, |t| trial(&fm, d, length, seed, t as u64));
    let max_log_norm = res.iter().map(|r| r.0).fold(f64::NEG_INFINITY, f64::max);
    let growth_rate = res.iter().map(|r| r.1).sum::<f64>() / trials.max(1) as f64;
    GrowthReport { max_norm: max_log_norm.exp(), max_log_norm, growth_rate, trials, length }
}

/// (log‖M^L‖ − log‖M^{L/2}‖)/(L/2): the log of the spectral radius, up to an
/// error that decays with the spectral gap.
pub fn power_growth_rate(m: &Mat, length: usize) -> f64 {
    let fm = m.to_f64();
    let mut p = Product::new(m.rows);
    let mut mid = 0.0;
    for step in 1..=length {
        p.left_mul(&fm);
        if step == length / 2 {
            mid = p.log_norm();
        }
    }
    (p.log_norm() - mid) / (length - length / 2).max(1) as f64
}

/// log((t + √(t² − 4))/2): log of the larger eigenvalue of a hyperbolic
/// element of SL(2, R) with trace t.
pub fn hyperbolic_rate(t: f64) -> f64 {
    ((t.abs() + (t * t - 4.0).sqrt()) / 2.0).ln()
}
