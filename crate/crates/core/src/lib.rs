//! Catalan families and the bijections between them: full binary trees, Dyck
//! paths, staircase Young diagrams (with and without gaps), 213-avoiding
//! permutations and torsion classes of the type A ball triangle, together with
//! the Tamari lattice on trees.
//!
//! Every family converts to and from [`BinaryTree`]; see [`family`] for the
//! conversion graph and [`verify`] for the exhaustive property suites.

pub mod ball;
pub mod baseball;
pub mod bookshelf;
pub mod catalan;
pub mod dyck;
pub mod error;
pub mod family;
pub mod json;
pub mod path;
pub mod perm;
pub mod render;
pub mod tamari;
pub mod torsion;
pub mod tree;
pub mod verify;
pub mod young;

pub use ball::{all_balls, BallSet, Interval, TorsionPair};
pub use baseball::{
    classify_balls, perm_to_tree, tree_to_perm, wire_routes, BallKind, Passage, WireRoute,
};
pub use bookshelf::{
    bookshelf, bookshelf_gapped, gapped_to_tree, inverse_bookshelf, min_tree_size, push_gaps,
    shelves, Shelf,
};
pub use catalan::{catalan, catalan_u64};
pub use dyck::{dyck_to_tree, dyck_to_young, tree_to_dyck, young_to_dyck};
pub use error::{Error, Result};
pub use family::{convert, convert_direct, enumerate, CatalanObject, Family};
pub use json::{from_json, to_json, Document};
pub use path::{enumerate_dyck, DyckPath, Step};
pub use perm::{enumerate_perms213, find_213, is_213_avoiding, Permutation213};
pub use tamari::{
    build_lattice, count_maximal_chains, covers_of, is_lattice, verify_order_reversing, TamariPoset,
};
pub use torsion::{
    complete_torsion_local, decompose, enumerate_torsion, hom_nonzero, is_torsion_class,
    is_torsion_pair, torsion_generate, torsion_to_gapped_young, torsion_to_tree, tree_to_torsion,
    Decomposition,
};
pub use tree::{enumerate_trees, node_coordinates, BinaryTree, TreeCoordinate};
pub use young::{enumerate_young, GappedYoungDiagram, YoungDiagram};
