//! The scalar type carried on edges.
//!
//! Everything downstream of the parser is generic over [`Weight`]. Ordering
//! must be total and arithmetic exact, so floating-point types are not
//! admitted: `i32`, `i64`, `i128` and `num_rational::Ratio<i64>` all qualify.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::Num;

/// An exact, totally ordered edge weight.
///
/// The type must be wide enough to hold the sum of any `n - 1` edge weights
/// of the graphs it is used with.
pub trait Weight: Num + Copy + Ord + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Weight for T where T: Num + Copy + Ord + Hash + Debug + Display + Send + Sync + 'static {}

/// Sums weights, starting from zero.
pub fn total<W: Weight>(weights: impl IntoIterator<Item = W>) -> W {
    weights.into_iter().fold(W::zero(), |acc, w| acc + w)
}
