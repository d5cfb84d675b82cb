//! Known explicit bounds on `e(l_p^d)`, the largest equilateral set in `l_p^d`.

use std::fmt;

use serde::Serialize;

use crate::construct::theorem3_max_p;
use crate::lp_core::check_exponent;
use crate::{Error, Result};

/// Exponents within this distance of 4 (but not equal to it) get a note about
/// the unquantified neighbourhood where `e = d + 1` persists.
const NEAR_FOUR: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Simplex,
    Theorem2,
    Theorem3,
    ExactDim1,
    ExactDim2,
    ExactP2,
    Theorem1,
    Galvin,
    Petty,
}

impl BoundSource {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Simplex => "simplex",
            Self::Theorem2 => "theorem2",
            Self::Theorem3 => "theorem3",
            Self::ExactDim1 => "exact_dim1",
            Self::ExactDim2 => "exact_dim2",
            Self::ExactP2 => "exact_p2",
            Self::Theorem1 => "theorem1",
            Self::Galvin => "galvin",
            Self::Petty => "petty",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u64,
    pub source: BoundSource,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub p: f64,
    pub d: usize,
    pub lower_bounds: Vec<Bound>,
    pub upper_bounds: Vec<Bound>,
    pub best_lower: u64,
    pub best_upper: u64,
    pub exact: bool,
    /// The common value when `exact`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn lower(&self, source: BoundSource) -> Option<u64> {
        self.lower_bounds.iter().find(|b| b.source == source).map(|b| b.value)
    }

    pub fn upper(&self, source: BoundSource) -> Option<u64> {
        self.upper_bounds.iter().find(|b| b.source == source).map(|b| b.value)
    }

    /// Plain-text table, one bound per line.
    pub fn to_table(&self) -> String {
        let mut out = format!("e(l_p^d) bounds for p = {}, d = {}\n", self.p, self.d);
        out.push_str(&format!("{:<8}{:<14}{}\n", "kind", "source", "value"));
        for b in &self.lower_bounds {
            out.push_str(&format!("{:<8}{:<14}{}\n", "lower", b.source, b.value));
        }
        for b in &self.upper_bounds {
            out.push_str(&format!("{:<8}{:<14}{}\n", "upper", b.source, b.value));
        }
        match self.value {
            Some(v) => out.push_str(&format!("exact value: {v}\n")),
            None => out.push_str(&format!("{} <= e <= {}\n", self.best_lower, self.best_upper)),
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Block parameter `k = ceil(log2(1 / (1 - 2^(p-2)))) - 1` for `1 < p < 2`.
///
/// `log2(...)` is snapped to the nearest integer when within `1e-9` of it, so
/// exponents like `log2(3)` that sit exactly on an interval boundary land on
/// the intended side despite rounding in `2^(p-2)`.
pub fn k_of_p(p: f64) -> Result<u32> {
    check_exponent(p)?;
    if p >= 2.0 {
        return Err(Error::OutOfRange {
            what: "p",
            value: p,
            lo: 1.0,
            hi: 2.0,
        });
    }
    let x = -(1.0 - 2f64.powf(p - 2.0)).log2();
    let snapped = if (x - x.round()).abs() < 1e-9 { x.round() } else { x };
    Ok((snapped.ceil() as i64 - 1).max(1) as u32)
}

/// `floor(2^(k+1) d / (2^(k+1) - 1)) = d + floor(d / (2^(k+1) - 1))`.
pub fn theorem2_value(k: u32, d: usize) -> u64 {
    let block = (1u64 << (k + 1)) - 1;
    d as u64 + d as u64 / block
}

/// Returns `p / 2` as an integer when `p` is exactly an even integer.
fn even_integer(p: f64) -> Option<u64> {
    if p.fract() == 0.0 && (2.0..1e15).contains(&p) && (p as u64).is_multiple_of(2) {
        Some(p as u64 / 2)
    } else {
        None
    }
}

pub fn report(p: f64, d: usize) -> Result<BoundsReport> {
    check_exponent(p)?;
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    let du = d as u64;
    let mut lower = vec![Bound { value: du + 1, source: BoundSource::Simplex }];
    let mut upper = Vec::new();
    let mut notes = Vec::new();

    if p < 2.0 {
        let k = k_of_p(p)?;
        let block = (1usize << (k + 1)) - 1;
        if d >= block {
            lower.push(Bound { value: theorem2_value(k, d), source: BoundSource::Theorem2 });
        }
    }
    if d == 4 && p <= theorem3_max_p() {
        lower.push(Bound { value: 6, source: BoundSource::Theorem3 });
    }

    if d == 1 {
        upper.push(Bound { value: 2, source: BoundSource::ExactDim1 });
    }
    if d == 2 {
        lower.push(Bound { value: 3, source: BoundSource::ExactDim2 });
        upper.push(Bound { value: 3, source: BoundSource::ExactDim2 });
    }
    if p == 2.0 {
        lower.push(Bound { value: du + 1, source: BoundSource::ExactP2 });
        upper.push(Bound { value: du + 1, source: BoundSource::ExactP2 });
    }
    if let Some(half) = even_integer(p) {
        if half >= 2 {
            let bound = if half % 2 == 0 { (half - 1) * du + 1 } else { half * du + 1 };
            upper.push(Bound { value: bound, source: BoundSource::Theorem1 });
        }
        upper.push(Bound { value: 1 + (2 * half - 1) * du, source: BoundSource::Galvin });
    }
    if d >= 2 {
        if d <= 64 {
            let petty = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
            upper.push(Bound { value: petty, source: BoundSource::Petty });
        } else {
            notes.push(format!("Petty: e < 2^{d}, beyond 64-bit range; omitted from the table"));
        }
    }

    notes.push(
        "Smyth: e < c p d^((p+1)/(p-1)) for an unspecified constant c > 0; not evaluated".into(),
    );
    notes.push(
        "Alon-Pudlak: e < c_p d^((2p+2)/(2p-1)) for an unspecified c_p > 0; not evaluated".into(),
    );
    if p.fract() == 0.0 && even_integer(p).is_none() && p < 1e15 {
        notes.push("Alon-Pudlak (odd integer p): e <= c_p d log d for an unspecified c_p; not evaluated".into());
    }
    if p != 4.0 && (p - 4.0).abs() <= NEAR_FOUR {
        notes.push(
            "e = d + 1 holds on some neighbourhood of p = 4 whose size is not quantified; status at this p unknown"
                .into(),
        );
    }

    let best_lower = lower.iter().map(|b| b.value).max().unwrap_or(du + 1);
    let best_upper = upper.iter().map(|b| b.value).min().unwrap_or(u64::MAX);
    let exact = best_lower == best_upper;
    Ok(BoundsReport {
        p,
        d,
        lower_bounds: lower,
        upper_bounds: upper,
        best_lower,
        best_upper,
        exact,
        value: exact.then_some(best_lower),
        notes,
    })
}
