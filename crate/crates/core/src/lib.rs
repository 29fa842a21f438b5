//! Diamond-colored distributive lattices, the move-minimizing puzzles they
//! solve, and exact checks that they are splitting posets for type B and C
//! Weyl bialternants.

pub mod catalan;
pub mod digraph;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod minuscule;
pub mod poly;
pub mod poset;
pub mod puzzle;
pub mod symplectic;
pub mod verify;
pub mod weyl;

pub use digraph::{Color, ColoredDigraph, Edge, Vertex};
pub use error::{Error, Result};
pub use lattice::{is_diamond_colored, is_topographically_balanced, rank_function, DiamondLattice, LatticeKind};
pub use poset::{ideals_lattice, OrderIdeal, VertexColoredPoset};
pub use puzzle::{Direction, Orientation, PathCertificate, Via, Walk};
