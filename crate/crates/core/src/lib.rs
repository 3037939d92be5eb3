//! Distance-regular digraphs: regularity predicates, constructions, exact
//! connectivity with minimum-cut enumeration, and a verification harness.

mod bits;
pub mod connectivity;
pub mod constructions;
pub mod digraph;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod harness;
pub mod iso;
pub mod regularity;
mod rowsearch;
pub mod srd_search;

pub use digraph::{Digraph, Direction, DistanceMatrix};
pub use error::{GraphError, Result};
