//! Concrete metric fields.

use alloc::format;
use alloc::string::String;

use crate::error::{GeodesicError, Result};
use crate::math;
use crate::metric::{MetricField, MetricTensor};
use crate::point::ContinuousPoint;

/// Relative finite-difference step used for Schwarzschild derivatives.
pub const SCHWARZSCHILD_RELATIVE_STEP: f64 = 1e-4;

/// Schwarzschild geometry in the equatorial plane, 2+1 dimensions.
///
/// Coordinates are `(t, x, y)` with `r = sqrt(x^2 + y^2)`; the spatial block is
/// the Schwarzschild radial/angular line element written in Cartesian form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schwarzschild {
    m: f64,
}

impl Schwarzschild {
    /// `m` is the Schwarzschild radius `2GM/c^2` in cm.
    pub fn new(m: f64) -> Result<Self> {
        if m > 0.0 && m.is_finite() {
            Ok(Self { m })
        } else {
            Err(GeodesicError::InvalidParameter("schwarzschild radius must be positive and finite"))
        }
    }

    pub fn radius(&self) -> f64 {
        self.m
    }
}

pub(crate) fn schwarzschild_entries(m: f64, x: f64, y: f64) -> Result<[[f64; 3]; 3]> {
    let r = math::hypot(x, y);
    if !(r > m) || r == 0.0 {
        return Err(GeodesicError::MetricSingularity { r, m });
    }
    let r2 = r * r;
    let rm = r * (r - m);
    let gtt = 1.0 - m / r;
    let gxx = -(x * x) / rm - (y * y) / r2;
    let gxy = -(m * x * y) / (r2 * (r - m));
    let gyy = -(x * x) / r2 - (y * y) / rm;
    Ok([[gtt, 0.0, 0.0], [0.0, gxx, gxy], [0.0, gxy, gyy]])
}

impl MetricField<3> for Schwarzschild {
    fn metric_at(&self, p: &ContinuousPoint<3>) -> Result<MetricTensor<3>> {
        schwarzschild_entries(self.m, p.coords[1], p.coords[2]).map(MetricTensor::from_upper)
    }

    fn is_defined_at(&self, p: &ContinuousPoint<3>) -> bool {
        math::hypot(p.coords[1], p.coords[2]) > self.m
    }

    fn derivative_step(&self, p: &ContinuousPoint<3>) -> f64 {
        SCHWARZSCHILD_RELATIVE_STEP * p.spatial_radius()
    }

    fn describe(&self) -> String {
        format!("schwarzschild(m={})", self.m)
    }
}

/// Flat spacetime `diag(1, -1, ..., -1)` in `D - 1` spatial dimensions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Minkowski<const D: usize>;

impl<const D: usize> MetricField<D> for Minkowski<D> {
    fn metric_at(&self, _p: &ContinuousPoint<D>) -> Result<MetricTensor<D>> {
        Ok(MetricTensor::minkowski())
    }

    fn is_defined_at(&self, _p: &ContinuousPoint<D>) -> bool {
        true
    }

    fn describe(&self) -> String {
        format!("minkowski(n={})", D - 1)
    }
}
