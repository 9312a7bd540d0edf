//! Shortest path systems, patches, necklaces and the cut graph of a
//! necklace, for graphs embedded in a surface of Euler genus `g >= 1`.
//!
//! Embeddings are assumed polyhedral; this is not checked.

mod cut;
mod fibres;
mod necklace;
mod patch;
pub mod report;
mod sps;

pub use cut::{cut_graph, subgraph_components, NecklaceCut};
pub use fibres::{fibres, minimal_simplifying_patch, region, regional_graph, subpatches, Fibres, Region};
pub use necklace::{
    balanced_offsets, build_necklace, exhaustive_reducing_necklace, find_reducing_necklace, verify_necklace,
    ArtVertex, Bead, Necklace,
};
pub use patch::{internal_graph, is_patch, is_simplifying, lies_in_disk, nonplanar_component, Patch};
pub use sps::{canonical_sps, Sps};
