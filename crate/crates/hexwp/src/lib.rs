//! Weil-Petersson Poisson geometry of bordered hyperbolic surfaces in
//! arc-length coordinates.
//!
//! A surface is a gluing of right-angled hexagons along oriented arcs
//! ([`surface`]). Arc lengths determine every hexagon and boundary length
//! ([`metrics`]); from those, [`wp_poisson`] assembles the Poisson bivector,
//! [`limits`] holds the piecewise-linear and decorated limit structures, and
//! [`twist`] implements the twist-derivative calculus in the half-plane
//! ([`hyptrig`]).

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hyptrig;
pub mod limits;
pub mod metrics;
pub mod surface;
pub mod twist;
pub mod wp_poisson;

pub use error::{Error, Result};
