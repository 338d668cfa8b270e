//! Rank-one SIC-POVMs from Weyl-Heisenberg orbits, and a numerical search
//! for fiducial vectors by frame-potential minimization.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{MeasurementScheme, Povm, Variant};
use crate::error::{Error, Result};
use crate::operator::matrix::{inner, normalize, vector_norm};
use crate::operator::random::gaussian_vector;
use crate::operator::{ComplexMatrix, HermitianOperator};
use crate::rng::{derive_seed, stream_rng};

pub const MIN_SEARCH_DIM: usize = 2;
pub const MAX_SEARCH_DIM: usize = 8;
/// Success threshold on `|potential - target|`.
pub const SEARCH_SUCCESS_TOL: f64 = 1e-8;
const GRADIENT_TOL: f64 = 1e-10;

/// Embedded fiducial vectors for `d = 2, 3`.
pub fn embedded_fiducial(d: usize) -> Option<Vec<Complex64>> {
    match d {
        2 => {
            // Bloch vector (1, 1, 1) / sqrt(3)
            let theta = (1.0 / 3f64.sqrt()).acos();
            Some(vec![
                Complex64::new((theta / 2.0).cos(), 0.0),
                Complex64::from_polar((theta / 2.0).sin(), PI / 4.0),
            ])
        }
        3 => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            Some(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ])
        }
        _ => None,
    }
}

/// `X^p Z^q |v>` with `X|k> = |k+1>` and `Z|k> = omega^k |k>`.
pub fn displace(v: &[Complex64], p: usize, q: usize) -> Vec<Complex64> {
    let d = v.len();
    let mut out = vec![Complex64::new(0.0, 0.0); d];
    for k in 0..d {
        let phase = Complex64::from_polar(1.0, 2.0 * PI * ((q * k) % d) as f64 / d as f64);
        out[(k + p) % d] = phase * v[k];
    }
    out
}

/// The `d^2` vectors `D_{p,q} |fiducial>`, ordered by `p * d + q`.
pub fn weyl_heisenberg_orbit(fiducial: &[Complex64]) -> Vec<Vec<Complex64>> {
    let d = fiducial.len();
    let mut unit = fiducial.to_vec();
    normalize(&mut unit);
    (0..d)
        .flat_map(|p| (0..d).map(move |q| (p, q)))
        .map(|(p, q)| displace(&unit, p, q))
        .collect()
}

/// Frame potential `sum_{j,k} |<phi_j|phi_k>|^4` of a vector family.
pub fn frame_potential(vectors: &[Vec<Complex64>]) -> f64 {
    vectors
        .iter()
        .map(|u| vectors.iter().map(|v| inner(u, v).norm_sqr().powi(2)).sum::<f64>())
        .sum()
}

/// Minimum of the frame potential over `d^2` unit vectors, attained exactly
/// by SIC sets: `2 d^3 / (d + 1)`.
pub fn sic_frame_potential_target(d: usize) -> f64 {
    let d = d as f64;
    2.0 * d.powi(3) / (d + 1.0)
}

/// SIC-POVM `N_j = |phi_j><phi_j| / d` from the orbit of `fiducial`.
pub fn sic_from_fiducial(fiducial: &[Complex64]) -> Result<MeasurementScheme> {
    let d = fiducial.len();
    let elements = weyl_heisenberg_orbit(fiducial)
        .iter()
        .map(|v| HermitianOperator::symmetrize(&ComplexMatrix::projector(v).scale(1.0 / d as f64)))
        .collect();
    let povm = Povm::new(elements, "sic")?;
    MeasurementScheme::new(Variant::SicPovm, vec![povm], None, None)
}

/// SIC-POVM for `d in {2, 3}` from the embedded fiducials.
pub fn build_sic_povm(d: usize) -> Result<MeasurementScheme> {
    let fiducial = embedded_fiducial(d).ok_or_else(|| {
        Error::Unsupported(format!(
            "no embedded SIC fiducial for d = {d}; search one with optimize_sic_fiducial"
        ))
    })?;
    sic_from_fiducial(&fiducial)
}

/// Outcome of a fiducial search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiducialSearch {
    pub dim: usize,
    pub fiducial: Vec<Complex64>,
    pub potential: f64,
    pub target: f64,
    pub success: bool,
    /// Index of the restart that produced the best vector.
    pub best_restart: usize,
    pub iterations: usize,
}

/// Search settings: projected gradient descent with random restarts.
#[derive(Clone, Debug)]
pub struct SicSearch {
    pub dim: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub restarts: usize,
}

impl SicSearch {
    pub fn new(dim: usize, seed: u64, max_iters: usize) -> Self {
        Self {
            dim,
            seed,
            max_iters,
            restarts: 16,
        }
    }

    pub fn restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts.max(1);
        self
    }

    pub fn run(&self) -> Result<FiducialSearch> {
        let d = self.dim;
        if !(MIN_SEARCH_DIM..=MAX_SEARCH_DIM).contains(&d) {
            return Err(Error::Unsupported(format!(
                "fiducial search supports {MIN_SEARCH_DIM} <= d <= {MAX_SEARCH_DIM}, got {d}"
            )));
        }
        let target = sic_frame_potential_target(d);
        let runs: Vec<(Vec<Complex64>, f64, usize)> = (0..self.restarts)
            .into_par_iter()
            .map(|r| {
                let mut rng = stream_rng(derive_seed(self.seed, r as u64), 0);
                let start = gaussian_vector(d, &mut rng);
                let (phi, _, iters) = descend(start, self.max_iters, target);
                let (phi, merit) = polish(phi);
                (phi, merit, iters)
            })
            .collect();
        let (best_restart, (fiducial, _, iterations)) = runs
            .into_iter()
            .enumerate()
            .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
            .expect("at least one restart");
        let potential = (d * d) as f64 * reduced_potential(&fiducial).0;
        Ok(FiducialSearch {
            dim: d,
            fiducial,
            potential,
            target,
            success: (potential - target).abs() <= SEARCH_SUCCESS_TOL,
            best_restart,
            iterations,
        })
    }
}

/// Searches a SIC fiducial; `success = false` reports the best vector found.
pub fn optimize_sic_fiducial(d: usize, seed: u64, max_iters: usize) -> Result<FiducialSearch> {
    SicSearch::new(d, seed, max_iters).run()
}

/// Reduced potential `f = sum_{p,q} |<phi|D_pq|phi>|^4` and its gradient
/// with respect to `conj(phi)`, for a unit vector `phi`.
///
/// By covariance the full orbit potential equals `d^2 f`.
fn reduced_potential(phi: &[Complex64]) -> (f64, Vec<Complex64>) {
    let d = phi.len();
    let mut value = 0.0;
    let mut grad = vec![Complex64::new(0.0, 0.0); d];
    for p in 0..d {
        for q in 0..d {
            let dphi = displace(phi, p, q);
            let g = inner(phi, &dphi);
            let g2 = g.norm_sqr();
            value += g2 * g2;
            if g2 == 0.0 {
                continue;
            }
            // D^dagger phi = Z^{-q} X^{-p} phi
            let mut adj = vec![Complex64::new(0.0, 0.0); d];
            for k in 0..d {
                let src = phi[(k + p) % d];
                let phase = Complex64::from_polar(1.0, -2.0 * PI * ((q * k) % d) as f64 / d as f64);
                adj[k] = phase * src;
            }
            let coeff = 2.0 * g2;
            for k in 0..d {
                grad[k] += coeff * (g.conj() * dphi[k] + g * adj[k]);
            }
        }
    }
    (value, grad)
}

fn descend(mut phi: Vec<Complex64>, max_iters: usize, target: f64) -> (Vec<Complex64>, f64, usize) {
    normalize(&mut phi);
    let d = phi.len();
    let scale = (d * d) as f64;
    let (mut value, mut grad) = reduced_potential(&phi);
    let mut step = 0.1;
    let mut iters = 0;
    while iters < max_iters {
        iters += 1;
        // project onto the tangent space of the unit sphere
        let radial = inner(&phi, &grad).re;
        let tangent: Vec<Complex64> = grad.iter().zip(&phi).map(|(g, x)| g - x * radial).collect();
        if vector_norm(&tangent) < GRADIENT_TOL || (scale * value - target).abs() < 1e-14 {
            break;
        }
        loop {
            let mut trial: Vec<Complex64> =
                phi.iter().zip(&tangent).map(|(x, g)| x - g * step).collect();
            normalize(&mut trial);
            let (v, g) = reduced_potential(&trial);
            if v < value {
                phi = trial;
                value = v;
                grad = g;
                step *= 1.5;
                break;
            }
            step *= 0.5;
            if step < 1e-18 {
                return (phi, value, iters);
            }
        }
    }
    (phi, value, iters)
}

/// Residuals `|<phi|D_pq|phi>|^2 - 1/(d+1)` over `(p, q) != (0, 0)`.
///
/// For a unit vector their squares sum to `f - f_min`, so they vanish
/// exactly on SIC fiducials.
fn overlap_residuals(phi: &[Complex64]) -> Vec<(f64, Vec<Complex64>)> {
    let d = phi.len();
    let target = 1.0 / (d + 1) as f64;
    let mut out = Vec::with_capacity(d * d - 1);
    for p in 0..d {
        for q in 0..d {
            if p == 0 && q == 0 {
                continue;
            }
            let dphi = displace(phi, p, q);
            let g = inner(phi, &dphi);
            let mut adj = vec![Complex64::new(0.0, 0.0); d];
            for k in 0..d {
                let phase = Complex64::from_polar(1.0, -2.0 * PI * ((q * k) % d) as f64 / d as f64);
                adj[k] = phase * phi[(k + p) % d];
            }
            // d|g|^2 / d conj(phi)
            let w = (0..d).map(|k| g.conj() * dphi[k] + g * adj[k]).collect();
            out.push((g.norm_sqr() - target, w));
        }
    }
    out
}

/// Levenberg-Marquardt refinement of the overlap residuals on the unit sphere.
/// Returns the refined vector and its residual merit `sum r^2`, which never
/// increases.
fn polish(mut phi: Vec<Complex64>) -> (Vec<Complex64>, f64) {
    let d = phi.len();
    let n = 2 * d;
    let mut res = overlap_residuals(&phi);
    let mut merit = residual_merit(&res);
    let mut mu = 1e-6;
    for _ in 0..POLISH_STEPS {
        let x: Vec<f64> = phi.iter().flat_map(|z| [z.re, z.im]).collect();
        // rows of the real Jacobian, projected off the radial direction
        let rows: Vec<(f64, Vec<f64>)> = res
            .iter()
            .map(|(r, w)| {
                let mut row: Vec<f64> = w.iter().flat_map(|z| [2.0 * z.re, 2.0 * z.im]).collect();
                let radial: f64 = row.iter().zip(&x).map(|(a, b)| a * b).sum();
                row.iter_mut().zip(&x).for_each(|(a, b)| *a -= radial * b);
                (*r, row)
            })
            .collect();
        let mut jtj = vec![vec![0.0; n]; n];
        let mut jtr = vec![0.0; n];
        for (r, row) in &rows {
            for i in 0..n {
                jtr[i] += row[i] * r;
                for j in 0..n {
                    jtj[i][j] += row[i] * row[j];
                }
            }
        }
        let mut improved = false;
        while mu < 1e6 {
            let Some(step) = solve_damped(&jtj, &jtr, mu) else { break };
            let mut trial: Vec<Complex64> = (0..d)
                .map(|k| phi[k] - Complex64::new(step[2 * k], step[2 * k + 1]))
                .collect();
            normalize(&mut trial);
            let trial_res = overlap_residuals(&trial);
            let m = residual_merit(&trial_res);
            if m < merit {
                phi = trial;
                res = trial_res;
                merit = m;
                mu = (mu * 0.1).max(1e-15);
                improved = true;
                break;
            }
            mu *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (phi, merit)
}

fn residual_merit(res: &[(f64, Vec<Complex64>)]) -> f64 {
    res.iter().map(|(r, _)| r * r).sum()
}

const POLISH_STEPS: usize = 50;

/// Solves `(A + mu I) s = b` for symmetric positive semidefinite `A`.
fn solve_damped(a: &[Vec<f64>], b: &[f64], mu: f64) -> Option<Vec<f64>> {
    let n = b.len();
    let m = ComplexMatrix::from_fn(n, |i, j| Complex64::new(a[i][j] + if i == j { mu } else { 0.0 }, 0.0));
    let e = crate::operator::eigen::jacobi(&m).ok()?;
    let mut s = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n {
        let v = e.vector(k);
        let coeff = (0..n).map(|i| v[i].conj() * b[i]).sum::<Complex64>() / e.values[k];
        for i in 0..n {
            s[i] += coeff * v[i];
        }
    }
    Some(s.iter().map(|z| z.re).collect())
}
