//! Equilateral-set constructions.
//!
//! Every construction returns its points at the scale it naturally produces:
//! `2^(1/p)` for the simplex, the Hadamard lift and block compositions, and
//! `2` for the six-point set in `l_p^4`. Use [`crate::lp_core::scale_set`] to
//! move to another scale.

use serde::Serialize;

use crate::bounds::k_of_p;
use crate::hadamard::{normalize_first_column, reduced_rows, sylvester, HadamardMatrix};
use crate::lp_core::{abs_pow, check_exponent, kronecker};
use crate::quadsolve::{self, RANGE_SLACK};
use crate::verify::check_equilateral;
use crate::{Error, LpSpace, Point, PointSet, Result};

/// Tolerance used when validating a user-supplied base for [`compose`].
pub const BASE_TOL: f64 = 1e-9;

/// `t <= 0` with `|1 - t|^p + (d - 1)|t|^p = 2`.
///
/// The left side is strictly decreasing on `t <= 0`, equals `1` at `t = 0` and
/// exceeds `2` at `t = -1`, so the root is unique and bracketed by `[-1, 0]`.
pub fn simplex_multiplier(p: f64, d: usize) -> Result<f64> {
    check_exponent(p)?;
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    if d == 1 {
        return Ok(1.0 - 2f64.powf(1.0 / p));
    }
    let f = |t: f64| abs_pow(1.0 - t, p) + (d - 1) as f64 * abs_pow(t, p) - 2.0;
    let (mut lo, mut hi) = (-1.0f64, 0.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if f(lo).abs() < f(hi).abs() { lo } else { hi })
}

/// `{e_1, ..., e_d, t (1, ..., 1)}`, a `2^(1/p)`-equilateral set of `d + 1` points.
pub fn standard_simplex(p: f64, d: usize) -> Result<PointSet> {
    let t = simplex_multiplier(p, d)?;
    let space = LpSpace::new(p, d)?;
    let mut points: Vec<Point> = (0..d).map(|i| Point::basis(d, i)).collect();
    points.push(Point::new(vec![t; d]));
    PointSet::new(space, points, Some(2f64.powf(1.0 / p)))
}

/// Parameters of the Hadamard lift for order `k` at exponent `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Prop2Params {
    pub k: usize,
    pub p: f64,
    /// Side length of the planar quadrilateral fed to the Lemma-style solver.
    pub lambda: f64,
    /// Magnitude of the leading coordinate.
    pub mu: f64,
}

/// Admissible exponents for the lift of order `k`:
/// `[2 + log2(1 - 1/k), 2 + log2(1 - 1/(2k))]`.
pub fn prop2_interval(k: usize) -> (f64, f64) {
    let k = k as f64;
    (2.0 + (1.0 - 1.0 / k).log2(), 2.0 + (1.0 - 0.5 / k).log2())
}

impl Prop2Params {
    pub fn new(p: f64, k: usize) -> Result<Self> {
        check_exponent(p)?;
        if k < 2 || !k.is_multiple_of(2) {
            return Err(Error::HadamardOrder(k));
        }
        let (lo, hi) = prop2_interval(k);
        if !(p >= lo - RANGE_SLACK && p <= hi + RANGE_SLACK) {
            return Err(Error::OutOfRange {
                what: "p",
                value: p,
                lo: lo.max(1.0),
                hi,
            });
        }
        let kf = k as f64;
        let ratio = ((3.0 - 2f64.powf(p - 1.0)) * kf - 2.0) / (2.0 * (kf - 1.0));
        let lambda = 2.0 * ratio.max(0.0).powf(1.0 / p);
        let mu_p = (2f64.powf(p - 2.0) - 1.0) * kf + 1.0;
        let mu = mu_p.max(0.0).powf(1.0 / p);
        Ok(Self { k, p, lambda, mu })
    }

    /// `||u_i||_p^p = 2^(p-2) k` for every raw lifted point.
    pub fn raw_norm_pow(&self) -> f64 {
        2f64.powf(self.p - 2.0) * self.k as f64
    }
}

/// Lifted points before normalization: `u_i = (mu, w_i ⊗ u)` and
/// `v_i = (-mu, w_i ⊗ v)`.
pub fn prop2_raw(p: f64, h: &HadamardMatrix) -> Result<(Prop2Params, Vec<Point>)> {
    let params = Prop2Params::new(p, h.order())?;
    let w = reduced_rows(&normalize_first_column(h)?)?;
    let planar = quadsolve::solve(p, params.lambda)?;
    let k = params.k;
    let mut points = Vec::with_capacity(2 * k);
    for (lead, planar_vec) in [(params.mu, &planar.u), (-params.mu, &planar.v)] {
        for i in 0..k {
            let mut coords = Vec::with_capacity(2 * k - 1);
            coords.push(lead);
            coords.extend(kronecker(&w.row_f64(i), planar_vec));
            points.push(Point::new(coords));
        }
    }
    Ok((params, points))
}

/// `2k` unit vectors in `l_p^(2k-1)` with common distance `2^(1/p)`.
pub fn prop2_lift(p: f64, h: &HadamardMatrix) -> Result<PointSet> {
    let (params, raw) = prop2_raw(p, h)?;
    let c = params.raw_norm_pow().powf(-1.0 / p);
    let points = raw.iter().map(|x| x.scaled(c)).collect();
    let space = LpSpace::new(p, 2 * params.k - 1)?;
    PointSet::new(space, points, Some(2f64.powf(1.0 / p)))
}

/// Block decomposition `d = k m + r` used by [`compose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionPlan {
    pub k: usize,
    pub d: usize,
    pub m: usize,
    pub r: usize,
}

impl CompositionPlan {
    pub fn new(k: usize, d: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDimension(k));
        }
        if d < k {
            return Err(Error::DimensionTooSmall { d, min: k });
        }
        Ok(Self { k, d, m: d / k, r: d % k })
    }

    pub fn cardinality(&self) -> usize {
        self.m * (self.k + 1) + self.r
    }
}

/// Copies of a `(k+1)`-point unit `2^(1/p)`-equilateral base in `l_p^k` placed
/// in consecutive coordinate blocks `[i k, (i+1) k)`, followed by the
/// standard unit vectors of the remaining `r` coordinates.
pub fn compose(base: &PointSet, d: usize) -> Result<PointSet> {
    let k = base.dim();
    let p = base.p();
    if base.len() != k + 1 {
        return Err(Error::Validation(format!(
            "base must have k + 1 = {} points in l_p^{k}, got {}",
            k + 1,
            base.len()
        )));
    }
    let report = check_equilateral(base, BASE_TOL, true)?;
    if !report.pass {
        return Err(Error::Validation(format!(
            "base is not a unit equilateral set (relative spread {:.3e}, sphere deviation {:.3e})",
            report.max_rel_dev,
            report.sphere_max_dev.unwrap_or(0.0)
        )));
    }
    let target = 2f64.powf(1.0 / p);
    if ((report.scale_estimate - target) / target).abs() > BASE_TOL {
        return Err(Error::Validation(format!(
            "base distance {} differs from 2^(1/p) = {target}",
            report.scale_estimate
        )));
    }

    let plan = CompositionPlan::new(k, d)?;
    let mut points = Vec::with_capacity(plan.cardinality());
    for block in 0..plan.m {
        let offset = block * k;
        for x in base.points() {
            let mut coords = vec![0.0; d];
            coords[offset..offset + k].copy_from_slice(x);
            points.push(Point::new(coords));
        }
    }
    for j in (plan.m * k)..d {
        points.push(Point::basis(d, j));
    }
    PointSet::new(LpSpace::new(p, d)?, points, Some(target))
}

/// `floor(2^(k+1) d / (2^(k+1) - 1))` points in `l_p^d` for `1 < p < 2`, where
/// `k = k_of_p(p)`: Sylvester matrix of order `2^k`, lifted, then composed.
pub fn theorem2(p: f64, d: usize) -> Result<PointSet> {
    let k = k_of_p(p)?;
    let block = (1usize << (k + 1)) - 1;
    if d < block {
        return Err(Error::DimensionTooSmall { d, min: block });
    }
    let h = sylvester(k)?;
    let base = prop2_lift(p, &h)?;
    compose(&base, d)
}

/// Upper end of the exponent range for the six-point set: `log2(5/2)`.
pub fn theorem3_max_p() -> f64 {
    2.5f64.log2()
}

/// `{(mu, ±u, 0), (-mu, ±v, 0), (0, 0, 0, ±1)}` in `l_p^4`, all distances 2.
pub fn theorem3(p: f64) -> Result<PointSet> {
    check_exponent(p)?;
    let hi = theorem3_max_p();
    if p > hi + RANGE_SLACK {
        return Err(Error::OutOfRange {
            what: "p",
            value: p,
            lo: 1.0,
            hi,
        });
    }
    let lambda = 2.0 * (3.0 - 2f64.powf(p)).max(0.0).powf(1.0 / p);
    let mu = (2f64.powf(p) - 2.0).max(0.0).powf(1.0 / p);
    let planar = quadsolve::solve(p, lambda)?;
    let (u, v) = (&planar.u, &planar.v);
    let points = vec![
        Point::new(vec![mu, u[0], u[1], 0.0]),
        Point::new(vec![mu, -u[0], -u[1], 0.0]),
        Point::new(vec![-mu, v[0], v[1], 0.0]),
        Point::new(vec![-mu, -v[0], -v[1], 0.0]),
        Point::new(vec![0.0, 0.0, 0.0, 1.0]),
        Point::new(vec![0.0, 0.0, 0.0, -1.0]),
    ];
    PointSet::new(LpSpace::new(p, 4)?, points, Some(2.0))
}
