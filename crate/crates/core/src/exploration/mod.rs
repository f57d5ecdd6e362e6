//! Exploration samplers: searches, walks, the walker frontier and
//! loop-erased (Wilson) spanning-tree growth.

mod frontier;
pub mod search;
pub mod walk;
mod wilson;

pub use frontier::{frontier, frontier_edges, pick_walker};
pub use walk::StuckGuard;
pub use wilson::loop_erased;
