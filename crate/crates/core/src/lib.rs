//! Edge-colored complete and complete bipartite graphs: rainbow pattern
//! detection, largest k-connected monochromatic and two-colored subgraphs,
//! Gallai colorings, the structure of rainbow-K1,3-free bipartite colorings,
//! monochromatic paths and cycles, and generators for the extremal
//! colorings, together with a registry of checkable claims about them.

pub mod bipartite;
pub mod claims;
pub mod connectivity;
pub mod construct;
mod embed;
pub mod error;
pub mod gallai;
pub mod graph;
pub mod host;
pub mod io;
pub mod oracle;
pub mod par;
pub mod paths;
pub mod pattern;
pub mod rainbow;
pub mod verdict;

pub use connectivity::Mode;
pub use construct::{ConstructionId, ConstructionSpec, DegreeSequence};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use host::{ColorId, ColorMask, ColoredBipartite, ColoredComplete, ColoredHost, Host};
pub use par::Parallelism;
pub use pattern::{parse_pattern, CatalogId, Pattern};
pub use rainbow::Embedding;
pub use verdict::Check;
