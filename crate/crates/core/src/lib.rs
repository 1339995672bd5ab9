//! Critical transmission radii of random geometric graphs on unit-area
//! convex regions.
//!
//! The crate covers both sides of the problem:
//!
//! * the predicted side ([`asymptotics`]): the shape offset `xi`, the radius
//!   `r_n` at which `Pr{rho <= r_n}` tends to `exp(-e^{-c})`, and numerical
//!   evaluation of the integral that drives that limit;
//! * the empirical side ([`sampling`], [`rgg`], [`montecarlo`]): seeded point
//!   processes, exact critical radii `rho(delta >= k)` and `rho(kappa >= k)`,
//!   and a replicated-trial harness comparing the two.
//!
//! [`geometry`] supplies the exact planar kernel both sides share.
//!
//! Edges use a closed threshold: points `p`, `q` are adjacent at radius `r`
//! iff `|p - q| <= r`. Critical radii are therefore realized pairwise
//! distances rather than infima.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod rgg;
pub mod sampling;

pub use error::{Error, Result};
pub use geometry::{ConvexRegion, Point, RegionKind};
