//! Graphs embedded in surfaces, encoded as signed rotation systems.

mod cycles;
mod embedding;
mod faces;
mod genus;
pub mod json;
mod planarity;
pub mod standard;
mod surgery;

pub use cycles::{cycles_of_length, shortest_noncontractible_cycle, shortest_noncontractible_cycles};
pub use embedding::EmbeddedGraph;
pub use faces::{embedding_euler_genus, face_table, trace_faces, Face, FaceTable};
pub use genus::{
    genus_at_most, girth, graph_euler_genus, graph_euler_genus_with, minimum_genus_embedding,
    reduce_for_genus, GenusConfig,
};
pub use planarity::{biconnected_planar_faces, blocks, is_planar, planar_embedding};
pub use surgery::{cut_along_cycle, cycle_edges, is_contractible, CutPiece, CutResult};
