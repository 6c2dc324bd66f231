//! Exact Steiner distances and Steiner k-Wiener indices, with recognition of
//! modular, median and block graphs and closed forms for Fibonacci and Lucas
//! cubes.

pub mod blocks;
pub mod count;
pub mod error;
pub mod families;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metric;
pub mod random;
pub mod steiner;
pub mod structure;
pub mod subset;

pub use count::{binomial, BigCount, ExactRatio};
pub use error::{Error, Result};
pub use generators::{make_family, Family, FamilySpec};
pub use graph::{cartesian_product, Graph};
pub use metric::{all_pairs_distances, average_distance, wiener_index, DistMatrix};
pub use subset::VertexSubset;
