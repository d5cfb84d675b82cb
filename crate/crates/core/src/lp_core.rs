//! `l_p` vector arithmetic: norms, distances, Kronecker products and point sets.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Coordinates above this magnitude trigger max-rescaling in [`lp_norm`].
const OVERFLOW_GUARD: f64 = 1e100;

/// The normed space `l_p^dim` with `1 < p < inf`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpSpace {
    p: f64,
    dim: usize,
}

impl LpSpace {
    pub fn new(p: f64, dim: usize) -> Result<Self> {
        check_exponent(p)?;
        if dim == 0 {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(Self { p, dim })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_exponent(p: f64) -> Result<()> {
    if p.is_finite() && p > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent(p))
    }
}

/// A point of `R^d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim])
    }

    /// The `i`-th standard basis vector of `R^dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = vec![0.0; dim];
        x[i] = 1.0;
        Self(x)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.iter().map(|x| c * x).collect())
    }
}

impl Deref for Point {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for Point {
    fn from(coords: Vec<f64>) -> Self {
        Self(coords)
    }
}

/// Points living in one [`LpSpace`], with an optional claimed common distance.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    space: LpSpace,
    points: Vec<Point>,
    claimed_scale: Option<f64>,
}

impl PointSet {
    pub fn new(space: LpSpace, points: Vec<Point>, claimed_scale: Option<f64>) -> Result<Self> {
        for x in &points {
            space.check(x)?;
        }
        if let Some(c) = claimed_scale {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::NonPositiveScale(c));
            }
        }
        Ok(Self {
            space,
            points,
            claimed_scale,
        })
    }

    pub fn space(&self) -> LpSpace {
        self.space
    }

    pub fn p(&self) -> f64 {
        self.space.p
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn claimed_scale(&self) -> Option<f64> {
        self.claimed_scale
    }

    /// Same coordinates viewed under another exponent.
    pub fn with_exponent(&self, p: f64) -> Result<Self> {
        let space = LpSpace::new(p, self.space.dim)?;
        Ok(Self {
            space,
            points: self.points.clone(),
            claimed_scale: self.claimed_scale,
        })
    }

    pub fn with_claimed_scale(mut self, claimed_scale: Option<f64>) -> Self {
        self.claimed_scale = claimed_scale;
        self
    }
}

/// `|t|^p`, computed as `exp(p ln|t|)` with an exact zero at `t = 0`.
#[inline]
pub fn abs_pow(t: f64, p: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        (p * t.abs().ln()).exp()
    }
}

/// `sum_i |x_i|^p` without the outer root.
pub fn pow_sum(x: &[f64], p: f64) -> f64 {
    x.iter().map(|&t| abs_pow(t, p)).sum()
}

/// `||x - y||_p^p`.
pub fn pow_dist(x: &[f64], y: &[f64], p: f64) -> f64 {
    x.iter().zip(y).map(|(&a, &b)| abs_pow(a - b, p)).sum()
}

/// Unchecked `||x||_p`; callers guarantee `p > 1`.
pub(crate) fn norm_p(x: &[f64], p: f64) -> f64 {
    let max = x.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if max > OVERFLOW_GUARD {
        let s: f64 = x.iter().map(|&t| abs_pow(t / max, p)).sum();
        return max * s.powf(1.0 / p);
    }
    pow_sum(x, p).powf(1.0 / p)
}

pub(crate) fn dist_p(x: &[f64], y: &[f64], p: f64) -> f64 {
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    norm_p(&diff, p)
}

/// `||x||_p = (sum_i |x_i|^p)^(1/p)`.
pub fn lp_norm(x: &[f64], space: &LpSpace) -> Result<f64> {
    space.check(x)?;
    Ok(norm_p(x, space.p))
}

/// `||x - y||_p`.
pub fn lp_dist(x: &[f64], y: &[f64], space: &LpSpace) -> Result<f64> {
    space.check(x)?;
    space.check(y)?;
    Ok(dist_p(x, y, space.p))
}

/// `a ⊗ b = (a_1 b, a_2 b, ..., a_m b)`.
pub fn kronecker(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter()
        .flat_map(|&ai| b.iter().map(move |&bj| ai * bj))
        .collect()
}

/// Multiplies every coordinate (and the claimed scale) by `c > 0`.
pub fn scale_set(set: &PointSet, c: f64) -> Result<PointSet> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::NonPositiveScale(c));
    }
    Ok(PointSet {
        space: set.space,
        points: set.points.iter().map(|x| x.scaled(c)).collect(),
        claimed_scale: set.claimed_scale.map(|s| s * c),
    })
}
