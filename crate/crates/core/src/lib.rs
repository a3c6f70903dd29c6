//! Two-page book embeddings of nicely planar graphs.
//!
//! A book embedding places a graph's vertices on a line (the spine) and each
//! edge inside one half-plane page so that same-page edges never cross. The
//! book thickness (pagenumber) of a graph is the fewest pages over all spine
//! orders; it equals the maximum over the graph's blocks, one page suffices
//! exactly for outerplanar graphs, and two suffice exactly for subhamiltonian
//! graphs.
//!
//! This crate builds two-page embeddings constructively for planar graphs in
//! which every triangle bounds a face (per block: no separating triangles):
//! embed the block in the plane, augment it to a 3-connected plane graph
//! without separating triangles, stellate the nontriangular faces into a
//! triangulation, take a Hamiltonian cycle of the result, restrict its order
//! to the original vertices, and 2-color the chord conflicts. Every step is
//! checked by an independent layout verifier, and an exact brute-force
//! pagenumber oracle covers desk-scale cross-checks. Arbitrary planar graphs
//! are handled up to homeomorphism by subdividing each edge once.

pub mod augment;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hamiltonian;
pub mod io;
pub mod layout;
pub mod planar;
pub mod rotation;

pub use augment::{
    enumerate_triangles, is_nicely_planar_block, lemma1_augment, rollback, separating_triangles,
    stellate, AddedVertex, AugmentationTrace, Provenance,
};
pub use connectivity::{
    blocks_and_cutpoints, is_k_connected, merge_layouts, separating_pairs, BlockCutTree, BlockData,
};
pub use error::{Error, Result};
pub use generators::{contract_subdivision, extended_x_tree, grid, subdivide, x_tree, SubdivisionMap};
pub use graph::Graph;
pub use hamiltonian::{
    hamiltonian_cycle, hamiltonian_cycle_with_budget, spine_order, subhamiltonian_completion,
    CyclicOrder, HamiltonianCycle, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
pub use layout::{
    assign_pages, conflict_graph, homeomorphic_two_page, pagenumber_oracle, two_page_embed,
    two_page_embed_with_stats, verify_layout, BookLayout, HomeomorphicLayout, PipelineStats,
    Violation, ORACLE_DEFAULT_CAP,
};
pub use planar::{faces, is_outerplanar, outerplanar_order, planar_embed};
pub use rotation::{validate_embedding, FaceSet, RotationSystem};
