// SPDX-License-Identifier: Apache-2.0

//! Coarse-geometric invariants of unweighted graphs and sampled metric spaces.
//!
//! Everything here is pure computation over in-memory data and builds without
//! `std`; file formats and the command-line front end live in the `coarse`
//! crate.
//!
//! - [`graph`]: graphs, exact hop distances, geodesic enumeration, generators.
//! - [`hyperbolicity`]: four-point δ and the thin-triangle constant.
//! - [`cheeger`]: combinatorial Cheeger ratios over windows, profiles and the
//!   Dirichlet bottom eigenvalue.
//! - [`nets`]: point clouds, r-approximations, ε-nets and quasi-isometry fits.
//! - [`boundary`]: finite-depth boundary at infinity, visual metric and the
//!   uniform-perfectness scan.
//! - [`pole`]: ray hulls, pole margins and the pole/Cheeger bound.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod boundary;
pub mod cheeger;
pub mod graph;
pub mod hyperbolicity;
pub mod nets;
pub mod pole;
pub mod rng;

mod halfint;

pub use halfint::HalfInt;

/// Exact nonnegative rational used for Cheeger ratios and derived bounds.
pub type Rational = num_rational::Ratio<u64>;
