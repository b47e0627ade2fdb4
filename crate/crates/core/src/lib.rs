//! Graphical designs on regular graphs.
//!
//! A proper vertex subset `W` of a connected `d`-regular graph is a graphical
//! design of order `k` when its indicator `1_W` is a linear combination of the
//! constant function and `k` other eigenfunctions of the normalized adjacency
//! operator. Order-1 designs are *extremal*. This crate computes design orders
//! from a dense eigendecomposition, certifies extremal designs that arise from
//! sharp Hoffman and Cheeger bounds, provides exact small-instance oracles for
//! the independence ratio and the Cheeger constant, generates the standard
//! families (complete graphs, hypercubes, Kneser and derangement graphs) and
//! builds weak and cartesian products.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, fixtures and
//! the command-line front end live in the `graphdesign` crate.
//!
//! ```
//! use graphdesign_core::{design, families, spectral::GraphSpectrum};
//!
//! let kneser = families::kneser(6, 2).unwrap();
//! let star = families::kneser_star(6, 2, 1).unwrap();
//! let spectrum = GraphSpectrum::compute(&kneser.graph, 1e-7).unwrap();
//! let report = design::design_order(&spectrum, &star, 1e-8).unwrap();
//! assert_eq!(report.order, 1);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod design;
mod error;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod products;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
