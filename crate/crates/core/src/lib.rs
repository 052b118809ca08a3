//! Exact power series, Riordan arrays and the triangle inversion operator,
//! with the Fibonacci and Catalan-Fibonacci polynomial families, Hankel
//! transforms, and brute-force lattice path and tiling counts to check them.

pub mod exact;
pub mod series;
pub mod triangles;
pub mod families;
pub mod hankel;
pub mod paths;
pub mod gfparse;
pub mod verify;
pub mod cli;
