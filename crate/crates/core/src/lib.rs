//! Equilateral point sets in `l_p^d`.
//!
//! The crate builds provably equilateral sets (simplex, Hadamard lift, block
//! composition and the four-dimensional six-point set), checks them
//! numerically, certifies the even-`p` upper bound through a polynomial rank
//! argument, tabulates the known bounds on the maximum equilateral-set size,
//! and searches for new configurations by energy minimization.
//!
//! ```
//! use equilex::construct;
//! use equilex::verify::check_equilateral;
//!
//! let p = 3f64.ln() / 2f64.ln();
//! let set = construct::theorem2(p, 6).unwrap();
//! assert_eq!(set.len(), 8);
//! let report = check_equilateral(&set, 1e-9, true).unwrap();
//! assert!(report.pass);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bounds;
pub mod certify;
pub mod construct;
pub mod document;
mod error;
pub mod hadamard;
pub mod lp_core;
pub mod quadsolve;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use lp_core::{LpSpace, Point, PointSet};
