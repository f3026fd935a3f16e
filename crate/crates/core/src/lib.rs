//! Straightest discrete geodesics on an integer spacetime lattice.
//!
//! A trajectory is built one point at a time: given two consecutive points,
//! the next one is the lattice cell that locally minimises a deviation
//! function measuring how far the path bends away from "straight ahead".
//! With the deviation induced by a metric this reproduces relativistic
//! orbits, including the perihelion advance in a Schwarzschild field.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, configuration
//! and the command line live in `geodesic-cli`.
//!
//! Modules:
//! - [`point`], [`metric`]: lattice/continuous points, tensors, the field trait.
//! - [`geometry`]: proper intervals, the three-point length and deviations.
//! - [`metrics`]: Schwarzschild (2+1) and Minkowski fields.
//! - [`solver`]: predictor + neighbourhood descent, runs and audits.
//! - [`continuum`]: Christoffel symbols and an RK4 geodesic integrator.
//! - [`orbit`]: apsis detection and perihelion-shift measurements.

#![no_std]
// `!(x > 0.0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

pub mod continuum;
pub mod error;
pub mod geometry;
mod math;
pub mod metric;
pub mod metrics;
pub mod orbit;
pub mod point;
pub mod solver;

pub use error::{GeodesicError, Result};
pub use geometry::{Axes, Deviation, DistanceDeviation};
pub use metric::{MetricField, MetricTensor};
pub use metrics::{Minkowski, Schwarzschild};
pub use point::{ContinuousPoint, Displacement, LatticePoint};
pub use solver::{Predictor, SolverConfig, Trajectory};
