//! Exact minimum-rank solver for simple graphs.
//!
//! The minimum rank `mr(G)` of a graph `G` on `n` vertices is the smallest
//! rank attained by a real symmetric matrix whose off-diagonal entry `(i, j)`
//! is nonzero exactly when `ij` is an edge of `G` (diagonal entries are
//! unconstrained).  This crate decides `mr(G)` exactly:
//!
//! * [`graph`] — graph6/edge-list parsing, connectivity, zero forcing,
//!   and a closed-form tree solver used as a cross-check.
//! * [`linalg`] — exact rational matrices, fraction-free rank, and witness
//!   pattern checks.
//! * [`poly`] — sparse multivariate polynomials over the rationals with
//!   grevlex/lex monomial orders.
//! * [`groebner`] — Buchberger's algorithm with reduced-basis output and an
//!   ideal-triviality test.
//! * [`minors`] — symbolic pattern matrices and exact k-minor enumeration.
//! * [`solver`] — the minimum-rank driver: minor systems plus Rabinowitsch
//!   equations decide complex solvability level by level, and seeded random
//!   rational witnesses certify the real case.
//! * [`cli`] — the `minrank` command-line interface.

pub mod cli;
pub mod graph;
pub mod groebner;
pub mod linalg;
pub mod minors;
pub mod poly;
pub mod solver;
