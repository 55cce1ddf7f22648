//! Connectivity analysis of directed graphs under single-arc failures.
//!
//! * [`connectivity`]: strongly connected components and twinless strongly
//!   connected components (TSCCs), where a pair of vertices must be joined in
//!   both directions without using both arcs of an antiparallel pair.
//! * [`cuts`]: strong bridges and twinless bridges.
//! * [`blocks`]: 2-edge blocks and 2-edge-twinless blocks, the maximal vertex
//!   sets that stay together (in one SCC, resp. one TSCC) after deleting any
//!   single arc.
//! * [`testkit`]: definition-level oracles and seeded graph generators.
//!
//! ```
//! use twinless_core::{blocks, fixtures};
//!
//! let g = fixtures::g_fig1();
//! let tetb = blocks::two_edge_twinless_blocks(&g);
//! assert_eq!(tetb.labeled(&g), [["2", "5"], ["12", "18"]]);
//! ```

pub mod blocks;
pub mod connectivity;
pub mod cuts;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod graph;
pub mod partition;
pub mod testkit;

pub use blocks::{BlockSet, RefineMode, SeparationMatrix, TetbMethod};
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Arc, ArcId, Digraph, ParseMode, TwinPair, UndirectedGraph, VertexId};
pub use partition::Partition;
