//! Exact ±1 Hadamard matrices.
//!
//! Entries are stored as `i8`. The defining identity `H Hᵀ = k I` is checked
//! exactly: rows are packed into bit words and each inner product is
//! `k - 2 * popcount(row_i xor row_j)`.

use std::fmt::Write as _;

use crate::{Error, Result};

/// Largest Sylvester exponent accepted by [`sylvester`] (order 16384).
pub const MAX_SYLVESTER_EXPONENT: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    /// Builds a matrix from rows and validates `H Hᵀ = k I`.
    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Validation("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Validation(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&e| e != 1 && e != -1) {
                return Err(Error::Validation(format!("row {i} contains entry {bad}")));
            }
            entries.extend_from_slice(row);
        }
        let h = Self { order, entries };
        h.validate()?;
        Ok(h)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.order)
    }

    /// Every row as bit words, bit set where the entry is `-1`.
    fn packed_rows(&self) -> Vec<Vec<u64>> {
        let words = self.order.div_ceil(64);
        self.rows()
            .map(|row| {
                let mut packed = vec![0u64; words];
                for (j, &e) in row.iter().enumerate() {
                    if e < 0 {
                        packed[j / 64] |= 1 << (j % 64);
                    }
                }
                packed
            })
            .collect()
    }

    /// Exact `H Hᵀ` as integers.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let packed = self.packed_rows();
        let k = self.order as i64;
        let mut g = vec![vec![0i64; self.order]; self.order];
        for i in 0..self.order {
            for j in i..self.order {
                let differ: u32 = packed[i]
                    .iter()
                    .zip(&packed[j])
                    .map(|(a, b)| (a ^ b).count_ones())
                    .sum();
                let dot = k - 2 * differ as i64;
                g[i][j] = dot;
                g[j][i] = dot;
            }
        }
        g
    }

    /// Checks `H Hᵀ = k I` exactly.
    pub fn validate(&self) -> Result<()> {
        let packed = self.packed_rows();
        let k = self.order as u32;
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                let differ: u32 = packed[i]
                    .iter()
                    .zip(&packed[j])
                    .map(|(a, b)| (a ^ b).count_ones())
                    .sum();
                if 2 * differ != k {
                    return Err(Error::Validation(format!(
                        "rows {i} and {j} are not orthogonal (inner product {})",
                        k as i64 - 2 * differ as i64
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.order).all(|i| self.entry(i, 0) == 1)
    }

    /// Negates row `i`. Row negation preserves the Hadamard property.
    pub fn negate_row(&mut self, i: usize) {
        let k = self.order;
        for e in &mut self.entries[i * k..(i + 1) * k] {
            *e = -*e;
        }
    }

    /// Parses the text format: `order k` followed by `k` rows of `k`
    /// whitespace-separated `+1`/`-1` entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing 'order k' header".into()))?;
        let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["order", k] => k
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad order '{k}': {e}")))?,
            _ => return Err(Error::Parse(format!("expected 'order k', got '{header}'"))),
        };
        let mut rows = Vec::with_capacity(order);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|tok| match tok {
                    "1" | "+1" => Ok(1i8),
                    "-1" => Ok(-1i8),
                    other => Err(Error::Parse(format!("bad entry '{other}'"))),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != order {
            return Err(Error::Parse(format!(
                "header declares order {order} but {} rows follow",
                rows.len()
            )));
        }
        Self::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for row in self.rows() {
            let line: Vec<&str> = row.iter().map(|&e| if e > 0 { "+1" } else { "-1" }).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Sylvester's matrix of order `2^n`: `H_0 = [1]`,
/// `H_{n+1} = [[H_n, H_n], [H_n, -H_n]]`.
pub fn sylvester(n: u32) -> Result<HadamardMatrix> {
    if n > MAX_SYLVESTER_EXPONENT {
        return Err(Error::HadamardTooLarge {
            n,
            max: MAX_SYLVESTER_EXPONENT,
        });
    }
    let order = 1usize << n;
    // Entry (i, j) is (-1)^popcount(i & j).
    let entries = (0..order * order)
        .map(|idx| {
            let (i, j) = (idx / order, idx % order);
            if (i & j).count_ones() % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(HadamardMatrix { order, entries })
}

/// Negates every row whose first entry is `-1`.
pub fn normalize_first_column(h: &HadamardMatrix) -> Result<HadamardMatrix> {
    h.validate()?;
    let mut out = h.clone();
    for i in 0..out.order {
        if out.entry(i, 0) < 0 {
            out.negate_row(i);
        }
    }
    Ok(out)
}

/// The rows `w_1, ..., w_k` of a normalized Hadamard matrix after deleting its
/// first column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRows {
    order: usize,
    rows: Vec<Vec<i8>>,
}

impl ReducedRows {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Row `i` as floats, for use in Kronecker products.
    pub fn row_f64(&self, i: usize) -> Vec<f64> {
        self.rows[i].iter().map(|&e| f64::from(e)).collect()
    }
}

pub fn reduced_rows(h: &HadamardMatrix) -> Result<ReducedRows> {
    if !h.is_normalized() {
        return Err(Error::Validation(
            "Hadamard matrix first column is not all +1".into(),
        ));
    }
    Ok(ReducedRows {
        order: h.order,
        rows: h.rows().map(|row| row[1..].to_vec()).collect(),
    })
}
