//! Planar unit vectors `u`, `v` in `l_p^2` (`1 < p < 2`) with
//! `||u + v||_p = ||u - v||_p = lambda` for any `lambda` in
//! `[2^(1-1/p), 2^(1/p)]`.
//!
//! The search is restricted to `u(s) = (s, (1 - s^p)^(1/p))` and its quarter
//! turn `v = (-u_2, u_1)`, for which both sums share the value
//! `(|s - y|^p + (s + y)^p)^(1/p)` with `y = (1 - s^p)^(1/p)`. Bisection in `s`
//! over `[2^(-1/p), 1]` then hits the target; only the sign change at the
//! endpoints is used, not monotonicity.

use serde::Serialize;

use crate::lp_core::{abs_pow, check_exponent};
use crate::{Error, Point, Result};

const MAX_BISECTIONS: usize = 200;
const RESIDUAL_TOL: f64 = 1e-13;
/// Inputs this close to an endpoint get the closed-form endpoint pair.
const ENDPOINT_TIE: f64 = 1e-14;
/// Relative slack on the admissible interval for values produced by
/// rounding in upstream formulas.
pub(crate) const RANGE_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadSolution {
    pub p: f64,
    pub lambda: f64,
    pub u: Point,
    pub v: Point,
    pub s: f64,
}

fn check_planar_exponent(p: f64) -> Result<()> {
    check_exponent(p)?;
    if p >= 2.0 {
        return Err(Error::OutOfRange {
            what: "p",
            value: p,
            lo: 1.0,
            hi: 2.0,
        });
    }
    Ok(())
}

/// `[2^(1-1/p), 2^(1/p)]`.
pub fn lambda_interval(p: f64) -> (f64, f64) {
    (2f64.powf(1.0 - 1.0 / p), 2f64.powf(1.0 / p))
}

/// `[2^(-1/p), 1]`.
pub fn s_interval(p: f64) -> (f64, f64) {
    (2f64.powf(-1.0 / p), 1.0)
}

fn second_coord(s: f64, p: f64) -> f64 {
    let rest = 1.0 - abs_pow(s, p);
    if rest <= 0.0 {
        0.0
    } else {
        rest.powf(1.0 / p)
    }
}

fn lambda_unchecked(s: f64, p: f64) -> f64 {
    let y = second_coord(s, p);
    (abs_pow(s - y, p) + abs_pow(s + y, p)).powf(1.0 / p)
}

/// `||u(s) + v(s)||_p` for the quarter-turn pair at parameter `s`.
pub fn lambda_of(s: f64, p: f64) -> Result<f64> {
    check_planar_exponent(p)?;
    let (lo, hi) = s_interval(p);
    if !(s >= lo * (1.0 - RANGE_SLACK) && s <= hi) {
        return Err(Error::OutOfRange {
            what: "s",
            value: s,
            lo,
            hi,
        });
    }
    Ok(lambda_unchecked(s, p))
}

fn pair_at(s: f64, p: f64) -> (Point, Point) {
    let y = second_coord(s, p);
    (Point::new(vec![s, y]), Point::new(vec![-y, s]))
}

pub fn solve(p: f64, lambda: f64) -> Result<QuadSolution> {
    check_planar_exponent(p)?;
    let (lam_lo, lam_hi) = lambda_interval(p);
    if !(lambda >= lam_lo * (1.0 - RANGE_SLACK) && lambda <= lam_hi * (1.0 + RANGE_SLACK)) {
        return Err(Error::OutOfRange {
            what: "lambda",
            value: lambda,
            lo: lam_lo,
            hi: lam_hi,
        });
    }

    if lambda >= lam_hi - ENDPOINT_TIE {
        return Ok(QuadSolution {
            p,
            lambda,
            u: Point::new(vec![1.0, 0.0]),
            v: Point::new(vec![0.0, 1.0]),
            s: 1.0,
        });
    }
    if lambda <= lam_lo + ENDPOINT_TIE {
        let c = 0.5f64.powf(1.0 / p);
        return Ok(QuadSolution {
            p,
            lambda,
            u: Point::new(vec![c, c]),
            v: Point::new(vec![-c, c]),
            s: c,
        });
    }

    // g(lo) < 0 < g(hi)
    let g = |s: f64| lambda_unchecked(s, p) - lambda;
    let (mut lo, mut hi) = s_interval(p);
    let mut best = (lo, g(lo).abs());
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid);
        if gm.abs() < best.1 {
            best = (mid, gm.abs());
        }
        if gm.abs() < RESIDUAL_TOL {
            break;
        }
        if gm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = best.0;
    let (u, v) = pair_at(s, p);
    Ok(QuadSolution { p, lambda, u, v, s })
}
