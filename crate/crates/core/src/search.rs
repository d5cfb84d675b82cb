//! Random-restart energy minimization for equilateral configurations.
//!
//! The objective is `E(X) = sum_{i<j} (D_ij - 1)^2` with
//! `D_ij = ||x_i - x_j||_p^p`. Working with `p`-th powers keeps the objective
//! `C^1` for every `p > 1`, including at coincident points. `E` vanishes
//! exactly on configurations with all pairwise distances equal to 1.
//!
//! Restart `r` draws its initial points from a ChaCha8 stream keyed by the
//! base seed with stream number `r`, so restarts are independent of each
//! other and of the order in which they run.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::lp_core::{abs_pow, pow_dist};
use crate::verify::{check_equilateral, EquilateralReport};
use crate::{Error, LpSpace, Point, PointSet, Result};

/// A configuration counts as found only below this energy...
pub const DISCOVERY_ENERGY: f64 = 1e-12;
/// ...and when its actual distances agree to this relative tolerance.
pub const DISCOVERY_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub space: LpSpace,
    pub n: usize,
    pub restarts: usize,
    pub max_iters: usize,
    /// Sufficient-decrease constant of the Armijo condition.
    pub armijo: f64,
    /// Step shrink factor during backtracking.
    pub shrink: f64,
    /// Trial step of the first iteration.
    pub initial_step: f64,
    pub seed: u64,
    /// Stop a restart once the energy drops below this value.
    pub energy_threshold: f64,
    /// Stop a restart when the energy falls by less than `stall_ratio` (relative)
    /// over `stall_window` accepted steps. A window of 0 disables the check.
    pub stall_window: usize,
    pub stall_ratio: f64,
}

impl SearchConfig {
    pub fn new(space: LpSpace, n: usize, restarts: usize, seed: u64) -> Self {
        Self {
            space,
            n,
            restarts,
            max_iters: 20_000,
            armijo: 1e-4,
            shrink: 0.5,
            initial_step: 0.05,
            seed,
            energy_threshold: 1e-20,
            stall_window: 1000,
            stall_ratio: 1e-4,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewPoints { min: 2, found: self.n });
        }
        if self.restarts == 0 {
            return Err(Error::Validation("restarts must be at least 1".into()));
        }
        if !(self.armijo > 0.0 && self.armijo < 1.0) {
            return Err(Error::Validation(format!("armijo constant {} not in (0, 1)", self.armijo)));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(Error::Validation(format!("shrink factor {} not in (0, 1)", self.shrink)));
        }
        if !(self.initial_step > 0.0) {
            return Err(Error::Validation("initial step must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RestartSummary {
    pub restart: usize,
    pub energy: f64,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best_points: PointSet,
    pub best_energy: f64,
    pub restart_index: usize,
    pub iterations_used: usize,
    /// Verifier report at [`DISCOVERY_TOL`]; `None` when the best
    /// configuration has coincident points.
    pub verifier_report: Option<EquilateralReport>,
    /// Energy below [`DISCOVERY_ENERGY`] and the verifier passes.
    pub discovery: bool,
    pub log: Vec<RestartSummary>,
}

/// Flat coordinates: point `i`, coordinate `c` at `i * d + c`.
fn energy_flat(x: &[f64], n: usize, d: usize, p: f64) -> f64 {
    let mut e = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let dij = pow_dist(&x[i * d..(i + 1) * d], &x[j * d..(j + 1) * d], p);
            e += (dij - 1.0) * (dij - 1.0);
        }
    }
    e
}

fn gradient_flat(x: &[f64], n: usize, d: usize, p: f64, grad: &mut [f64]) {
    grad.iter_mut().for_each(|g| *g = 0.0);
    for i in 0..n {
        for j in (i + 1)..n {
            let (xi, xj) = (&x[i * d..(i + 1) * d], &x[j * d..(j + 1) * d]);
            let w = 2.0 * (pow_dist(xi, xj, p) - 1.0) * p;
            for c in 0..d {
                let t = xi[c] - xj[c];
                let g = w * abs_pow(t, p - 1.0) * t.signum();
                grad[i * d + c] += g;
                grad[j * d + c] -= g;
            }
        }
    }
}

fn flatten(set: &PointSet) -> Vec<f64> {
    set.points().iter().flat_map(|x| x.iter().copied()).collect()
}

/// `sum_{i<j} (||x_i - x_j||_p^p - 1)^2`.
pub fn energy(set: &PointSet) -> Result<f64> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints { min: 2, found: set.len() });
    }
    Ok(energy_flat(&flatten(set), set.len(), set.dim(), set.p()))
}

/// Gradient of [`energy`], point-major: entry `i * d + c` is `dE/dx_{i,c}`.
pub fn energy_gradient(set: &PointSet) -> Vec<f64> {
    let (n, d) = (set.len(), set.dim());
    let mut grad = vec![0.0; n * d];
    gradient_flat(&flatten(set), n, d, set.p(), &mut grad);
    grad
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

struct Descent {
    x: Vec<f64>,
    energy: f64,
    iterations: usize,
}

/// Steepest descent with Armijo backtracking. The trial step is the
/// Barzilai-Borwein step from the previous iteration when it is positive;
/// every accepted step decreases the energy.
fn descend(cfg: &SearchConfig, mut x: Vec<f64>) -> Descent {
    let (n, d, p) = (cfg.n, cfg.space.dim(), cfg.space.p());
    let mut e = energy_flat(&x, n, d, p);
    let mut g = vec![0.0; n * d];
    gradient_flat(&x, n, d, p, &mut g);
    let mut trial = vec![0.0; n * d];
    let mut g_new = vec![0.0; n * d];
    let mut step = cfg.initial_step;
    let mut iterations = 0;
    let mut checkpoint = e;

    while iterations < cfg.max_iters && e >= cfg.energy_threshold {
        let g2: f64 = g.iter().map(|v| v * v).sum();
        if g2 == 0.0 {
            break;
        }
        let mut alpha = step;
        let accepted = loop {
            for ((t, xi), gi) in trial.iter_mut().zip(&x).zip(&g) {
                *t = xi - alpha * gi;
            }
            let e_trial = energy_flat(&trial, n, d, p);
            if e_trial <= e - cfg.armijo * alpha * g2 {
                break Some(e_trial);
            }
            alpha *= cfg.shrink;
            if alpha < 1e-30 {
                break None;
            }
        };
        let Some(e_trial) = accepted else { break };
        iterations += 1;

        gradient_flat(&trial, n, d, p, &mut g_new);
        let mut ss = 0.0;
        let mut sy = 0.0;
        for c in 0..n * d {
            let s = trial[c] - x[c];
            ss += s * s;
            sy += s * (g_new[c] - g[c]);
        }
        step = if sy > 0.0 { ss / sy } else { 2.0 * alpha };
        std::mem::swap(&mut x, &mut trial);
        std::mem::swap(&mut g, &mut g_new);
        e = e_trial;

        if cfg.stall_window > 0 && iterations % cfg.stall_window == 0 {
            if checkpoint - e < cfg.stall_ratio * checkpoint {
                break;
            }
            checkpoint = e;
        }
    }
    Descent { x, energy: e, iterations }
}

fn run_restart(cfg: &SearchConfig, restart: usize) -> Descent {
    let mut rng = restart_rng(cfg.seed, restart);
    let x0: Vec<f64> = (0..cfg.n * cfg.space.dim())
        .map(|_| rng.gen_range(-1.0..=1.0))
        .collect();
    descend(cfg, x0)
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let runs: Vec<Descent> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(cfg, r))
        .collect();

    let log: Vec<RestartSummary> = runs
        .iter()
        .enumerate()
        .map(|(restart, run)| RestartSummary {
            restart,
            energy: run.energy,
            iterations: run.iterations,
        })
        .collect();
    // min energy, ties to the lowest restart index
    let (best_idx, best) = runs
        .iter()
        .enumerate()
        .min_by(|(ia, a), (ib, b)| a.energy.total_cmp(&b.energy).then(ia.cmp(ib)))
        .expect("at least one restart");

    let d = cfg.space.dim();
    let points = best.x.chunks(d).map(|c| Point::new(c.to_vec())).collect();
    let best_points = PointSet::new(cfg.space, points, None)?;
    let best_energy = energy(&best_points)?;
    let verifier_report = check_equilateral(&best_points, DISCOVERY_TOL, false).ok();
    let discovery = best_energy < DISCOVERY_ENERGY && verifier_report.as_ref().is_some_and(|r| r.pass);
    Ok(SearchResult {
        best_points,
        best_energy,
        restart_index: best_idx,
        iterations_used: best.iterations,
        verifier_report,
        discovery,
        log,
    })
}
