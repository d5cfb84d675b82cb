//! Numerical checks of the equilateral and unit-sphere properties.

use rayon::prelude::*;
use serde::Serialize;

use crate::lp_core::{dist_p, norm_p};
use crate::{Error, PointSet, Result};

/// Pairs closer than this are reported as coincident.
pub const DUPLICATE_TOL: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquilateralReport {
    pub n: usize,
    pub min_dist: f64,
    pub max_dist: f64,
    /// `(max_dist - min_dist) / min_dist`.
    pub max_rel_dev: f64,
    /// Mean pairwise distance.
    pub scale_estimate: f64,
    /// `max_i | ||x_i||_p - 1 |`, when requested.
    pub sphere_max_dev: Option<f64>,
    /// `|scale_estimate - claimed| / claimed`, when the set carries a claim.
    pub claimed_scale_rel_dev: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Pairwise `l_p` distances. Rows are evaluated in parallel; each entry is
/// computed by the same sequential sum, so the result does not depend on the
/// thread count.
pub fn distance_matrix(set: &PointSet) -> Result<Vec<Vec<f64>>> {
    let n = set.len();
    if n < 2 {
        return Err(Error::TooFewPoints { min: 2, found: n });
    }
    let p = set.p();
    let pts = set.points();
    Ok((0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    // evaluate each unordered pair in a fixed orientation
                    match i.cmp(&j) {
                        std::cmp::Ordering::Equal => 0.0,
                        std::cmp::Ordering::Less => dist_p(&pts[i], &pts[j], p),
                        std::cmp::Ordering::Greater => dist_p(&pts[j], &pts[i], p),
                    }
                })
                .collect()
        })
        .collect())
}

pub fn check_equilateral(set: &PointSet, tol: f64, check_sphere: bool) -> Result<EquilateralReport> {
    if !(tol > 0.0) {
        return Err(Error::Validation(format!("tolerance must be positive, got {tol}")));
    }
    let dm = distance_matrix(set)?;
    let n = set.len();
    let mut min_dist = f64::INFINITY;
    let mut max_dist = 0.0f64;
    let mut total = 0.0;
    for (i, row) in dm.iter().enumerate() {
        for (j, &d) in row.iter().enumerate().skip(i + 1) {
            if d < DUPLICATE_TOL {
                return Err(Error::Degenerate { i, j });
            }
            min_dist = min_dist.min(d);
            max_dist = max_dist.max(d);
            total += d;
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    let scale_estimate = (total / pairs).clamp(min_dist, max_dist);
    let max_rel_dev = (max_dist - min_dist) / min_dist;

    let p = set.p();
    let sphere_max_dev = check_sphere.then(|| {
        set.points()
            .iter()
            .map(|x| (norm_p(x, p) - 1.0).abs())
            .fold(0.0, f64::max)
    });
    let claimed_scale_rel_dev = set
        .claimed_scale()
        .map(|c| (scale_estimate - c).abs() / c);

    let pass = max_rel_dev <= tol && sphere_max_dev.is_none_or(|dev| dev <= tol);
    Ok(EquilateralReport {
        n,
        min_dist,
        max_dist,
        max_rel_dev,
        scale_estimate,
        sphere_max_dev,
        claimed_scale_rel_dev,
        tolerance: tol,
        pass,
    })
}
