//! Rank certificate for the even-`p` upper bound.
//!
//! For a 1-equilateral set `S` in `l_p^d` with `p` even, every
//! `P_a(x) = -1 + ||x - a||_p^p` lies in the span of the monomial basis
//!
//! ```text
//! [1; x_1 .. x_1^(p-1); x_2 .. x_2^(p-1); ...; x_d .. x_d^(p-1); sum_i x_i^p]
//! ```
//!
//! of dimension `(p-1) d + 2`. If `{P_a} ∪ {1} ∪ {x_i^m : m <= k}` (with
//! `k = p/2` for `p ≡ 0 mod 4`, `p/2 - 1` otherwise) has full row rank, then
//! `|S| + 1 + k d <= (p-1) d + 2`. The certificate checks that rank with an
//! SVD for one concrete set.

use nalgebra::DMatrix;
use serde::{Serialize, Serializer};

use crate::lp_core::{pow_sum, scale_set};
use crate::verify::{check_equilateral, DUPLICATE_TOL};
use crate::{Error, Point, PointSet, Result};

/// Relative threshold on singular values.
pub const DEFAULT_SVD_TOL: f64 = 1e-8;
/// The rescaled set must be equilateral to this relative tolerance.
pub const EQUILATERAL_TOL: f64 = 1e-8;

/// Exact even integer `p >= 4`.
fn even_exponent(p: f64) -> Result<u32> {
    if p.fract() == 0.0 && (4.0..=64.0).contains(&p) && (p as u32).is_multiple_of(2) {
        Ok(p as u32)
    } else {
        Err(Error::Validation(format!(
            "certificate needs an even integer exponent p >= 4, got {p}"
        )))
    }
}

/// Number of low-degree monomials per coordinate included in the family.
pub fn family_degree(p: u32) -> u32 {
    if p.is_multiple_of(4) {
        p / 2
    } else {
        p / 2 - 1
    }
}

pub fn ambient_dim(p: u32, d: usize) -> usize {
    (p as usize - 1) * d + 2
}

/// Coefficients of `P_a` over the monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffVector {
    pub constant: f64,
    pub power_sum_coeff: f64,
    /// `mono[i][m - 1]` is the coefficient of `x_i^m`, `1 <= m <= p - 1`.
    pub mono: Vec<Vec<f64>>,
}

impl PolyCoeffVector {
    /// Flattened in basis order; length `(p-1) d + 2`.
    pub fn flatten(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(2 + self.mono.iter().map(Vec::len).sum::<usize>());
        v.push(self.constant);
        for row in &self.mono {
            v.extend_from_slice(row);
        }
        v.push(self.power_sum_coeff);
        v
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

pub fn pa_coefficients(a: &[f64], p: f64) -> Result<PolyCoeffVector> {
    let pe = even_exponent(p)?;
    let mono = a
        .iter()
        .map(|&ai| {
            (1..pe)
                .map(|m| binomial(pe, m) * (-ai).powi((pe - m) as i32))
                .collect()
        })
        .collect();
    Ok(PolyCoeffVector {
        constant: -1.0 + pow_sum(a, p),
        power_sum_coeff: 1.0,
        mono,
    })
}

/// Values of the basis monomials at `x`, in basis order.
pub fn monomial_values(x: &[f64], p: u32) -> Vec<f64> {
    let mut v = vec![1.0];
    for &xi in x {
        v.extend((1..p).map(|m| xi.powi(m as i32)));
    }
    v.push(x.iter().map(|xi| xi.powi(p as i32)).sum());
    v
}

/// Family matrix of a set together with the rescaled points it was built from.
#[derive(Clone, Debug)]
pub struct Family {
    pub matrix: DMatrix<f64>,
    /// Points after rescaling to unit common distance.
    pub points: Vec<Point>,
    pub k_used: u32,
}

/// Rescales to common distance 1, checks the equilateral hypothesis, and
/// stacks the coefficient rows `P_a`, `1`, `x_i^m` (`m <= k`).
///
/// Coincident points are ignored by the equilateral check but still
/// contribute their (identical) rows, so a repeated point yields a
/// rank-deficient family instead of an error.
pub fn family(set: &PointSet, p: f64) -> Result<Family> {
    let pe = even_exponent(p)?;
    let set = set.with_exponent(p)?;
    let d = set.dim();

    let mut distinct: Vec<Point> = Vec::new();
    for x in set.points() {
        if !distinct.iter().any(|y| crate::lp_core::dist_p(x, y, p) < DUPLICATE_TOL) {
            distinct.push(x.clone());
        }
    }
    let distinct = PointSet::new(set.space(), distinct, None)?;
    let report = check_equilateral(&distinct, EQUILATERAL_TOL, false)?;
    if !report.pass {
        return Err(Error::Validation(format!(
            "set is not equilateral (relative spread {:.3e} > {EQUILATERAL_TOL:e})",
            report.max_rel_dev
        )));
    }
    let unit = scale_set(&set, 1.0 / report.scale_estimate)?;

    let k = family_degree(pe);
    let cols = ambient_dim(pe, d);
    let rows = unit.len() + 1 + k as usize * d;
    let mut matrix = DMatrix::zeros(rows, cols);
    for (r, a) in unit.points().iter().enumerate() {
        for (c, v) in pa_coefficients(a, p)?.flatten().into_iter().enumerate() {
            matrix[(r, c)] = v;
        }
    }
    let mut r = unit.len();
    matrix[(r, 0)] = 1.0;
    r += 1;
    for i in 0..d {
        for m in 1..=k as usize {
            matrix[(r, 1 + i * (pe as usize - 1) + (m - 1))] = 1.0;
            r += 1;
        }
    }
    Ok(Family {
        matrix,
        points: unit.into_points(),
        k_used: k,
    })
}

pub fn family_matrix(set: &PointSet, p: f64) -> Result<DMatrix<f64>> {
    family(set, p).map(|f| f.matrix)
}

fn serialize_gap<S: Serializer>(gap: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if gap.is_finite() {
        s.serialize_f64(*gap)
    } else {
        s.serialize_str("inf")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankCertificate {
    pub p: u32,
    pub d: usize,
    pub set_size: usize,
    /// `|S| + 1 + k d`.
    pub family_size: usize,
    /// `(p - 1) d + 2`.
    pub ambient_dim: usize,
    pub numerical_rank: usize,
    pub k_used: u32,
    /// `sigma_rank / sigma_(rank+1)`, infinite when no singular value is cut.
    #[serde(serialize_with = "serialize_gap")]
    pub singular_value_gap: f64,
    pub svd_tol: f64,
    /// Singular values in decreasing order.
    pub singular_values: Vec<f64>,
    /// `(p - 1) d + 1 - k d`: the size bound a certified family implies.
    pub implied_bound: usize,
    pub certified: bool,
}

pub fn certify_rank(set: &PointSet, p: f64, svd_tol: f64) -> Result<RankCertificate> {
    if !(svd_tol > 0.0) {
        return Err(Error::Validation(format!("svd tolerance must be positive, got {svd_tol}")));
    }
    let fam = family(set, p)?;
    let pe = p as u32;
    let d = set.dim();
    let (rows, cols) = fam.matrix.shape();

    let mut sv: Vec<f64> = fam.matrix.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let sigma_max = sv.first().copied().unwrap_or(0.0);
    let rank = sv.iter().filter(|&&s| s > svd_tol * sigma_max).count();
    let gap = match (rank, sv.get(rank)) {
        (0, _) => 0.0,
        (_, None) => f64::INFINITY,
        (r, Some(&next)) => sv[r - 1] / next,
    };
    let k = fam.k_used as usize;
    Ok(RankCertificate {
        p: pe,
        d,
        set_size: set.len(),
        family_size: rows,
        ambient_dim: cols,
        numerical_rank: rank,
        k_used: fam.k_used,
        singular_value_gap: gap,
        svd_tol,
        singular_values: sv,
        implied_bound: cols - 1 - k * d,
        certified: rank == rows && rows <= cols,
    })
}
