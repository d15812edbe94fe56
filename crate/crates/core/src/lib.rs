// Index loops read better than iterator chains in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod deformation;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod sets;
pub mod symmetry;
pub mod triangulation;
