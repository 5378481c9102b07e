//! Exact combinatorics of the classical root lattices `A_n`, `C_n`, `D_n`.
//!
//! Everything here is integer arithmetic: growth functions counted by
//! breadth-first search over the monoid Cayley graph, lattice points counted
//! in polytope dilates, h*-polynomials extracted from Ehrhart data, closed-form
//! coordinator polynomials, the staircase triangulation of the boundary of the
//! `A_n` root polytope, and the generating-function pipeline that assembles
//! `D_n`/`C_n` h-polynomials from hypersimplex and cross-polytope face counts.
//!
//! Each quantity is computed by at least two independent routes (closed form
//! vs. enumeration, or sum formula vs. rational-series expansion) and the
//! [`verify`] module cross-checks them all.

pub mod cli;
pub mod comb;
pub mod coordinator;
pub mod dn_series;
pub mod lattices;
pub mod matrix;
pub mod polyalg;
pub mod staircase;
pub mod verify;

pub use lattices::{FamilyKind, LatticeFamily};
pub use polyalg::{BiSeries, BivPoly, FVector, Poly};
