#![no_std]

extern crate alloc;

pub mod edge_list;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod oracles;
pub mod patterns;
pub mod rational;
pub mod recognition;
pub mod twosat;
pub mod vertex_set;
pub mod weights;

pub use graph::{Graph, GraphError};
pub use rational::Rational;
pub use vertex_set::VertexSet;
