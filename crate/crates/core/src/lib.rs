//! Seeded graph sampling.
//!
//! Every sampler sits behind [`sampler::sample`], which validates the input
//! graph, resolves the requested size and runs the method with a
//! [`rng::RandomSource`] seeded from the [`sampler::SamplerSpec`]. Sampled
//! graphs keep the ids of the input graph.

pub mod cli;
pub mod edge;
pub mod error;
pub mod exploration;
pub mod graph;
pub mod node;
pub mod rng;
pub mod sampler;
pub mod stats;

pub use error::{Error, Result, ValidationError, ValidationKind};
pub use graph::{Graph, NodeId, Subgraph};
pub use rng::RandomSource;
pub use sampler::{sample, Method, SampleResult, SamplerSpec, TargetSize};
