//! Proper intervals, the three-point length and the deviation functions built on it.
//!
//! The deviation of a path `E, F, G` is the squared gradient of
//! `l(E, F, G) = d(E, F) + d(F, G)` with respect to the middle point `F`,
//! estimated by central differences. A path goes "straight ahead" when moving
//! `F` in no direction shortens it.

use crate::error::{GeodesicError, Result};
use crate::math;
use crate::metric::{MetricField, MetricTensor};
use crate::point::{ContinuousPoint, LatticePoint};

/// Default probe fraction for [`deviation_continuous`].
pub const DEFAULT_ETA: f64 = 1e-6;

/// Which middle-point directions enter the deviation sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Axes {
    /// Time and all spatial axes.
    #[default]
    All,
    /// Spatial axes only.
    Spatial,
}

impl Axes {
    #[inline]
    pub fn range<const D: usize>(self) -> core::ops::Range<usize> {
        match self {
            Axes::All => 0..D,
            Axes::Spatial => 1..D,
        }
    }
}

/// `sqrt(EF^T g EF)` with `g` supplied by the caller (normally `g(E)`).
///
/// Lightlike separations give 0; spacelike ones fail with `SpacelikeStep`.
pub fn proper_interval<const D: usize>(
    g: &MetricTensor<D>,
    e: &ContinuousPoint<D>,
    f: &ContinuousPoint<D>,
) -> Result<f64> {
    let q = g.quadratic(&(*f - *e));
    if q < 0.0 {
        return Err(GeodesicError::SpacelikeStep { quadratic_form: q });
    }
    Ok(math::sqrt(q))
}

/// Distance with the metric taken at the first endpoint.
#[inline]
pub fn distance<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    p: &ContinuousPoint<D>,
    q: &ContinuousPoint<D>,
) -> Result<f64> {
    proper_interval(&field.metric_at(p)?, p, q)
}

/// `l(E, F, G) = d(E, F) + d(F, G)`.
pub fn three_point_length<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    e: &ContinuousPoint<D>,
    f: &ContinuousPoint<D>,
    g: &ContinuousPoint<D>,
) -> Result<f64> {
    Ok(distance(field, e, f)? + distance(field, f, g)?)
}

/// Central difference `(l(E, F-, G) - l(E, F+, G)) / divisor`.
///
/// The two segments are differenced separately before summing, which keeps
/// the cancellation at the scale of one segment rather than the whole path.
#[allow(clippy::too_many_arguments)]
fn probe_difference<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    g_e: &MetricTensor<D>,
    e: &ContinuousPoint<D>,
    minus: &ContinuousPoint<D>,
    plus: &ContinuousPoint<D>,
    g: &ContinuousPoint<D>,
    axis: usize,
    divisor: f64,
) -> Result<f64> {
    let wrap = |positive: bool| {
        move |err: GeodesicError| GeodesicError::ProbeFailed {
            axis,
            positive,
            source: alloc::boxed::Box::new(err),
        }
    };
    let first_minus = proper_interval(g_e, e, minus).map_err(wrap(false))?;
    let second_minus = distance(field, minus, g).map_err(wrap(false))?;
    let first_plus = proper_interval(g_e, e, plus).map_err(wrap(true))?;
    let second_plus = distance(field, plus, g).map_err(wrap(true))?;
    Ok(((first_minus - first_plus) + (second_minus - second_plus)) / divisor)
}

/// Finite-difference deviation on the lattice: probes move `F` by one cell.
///
/// `delta` is the cell size in cm. The sum is over `axes` of
/// `((l(E, F - e_mu, G) - l(E, F + e_mu, G)) / 2)^2`.
pub fn deviation_discrete<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    delta: f64,
    e: &LatticePoint<D>,
    f: &LatticePoint<D>,
    g: &LatticePoint<D>,
    axes: Axes,
) -> Result<f64> {
    if e == f && f == g {
        // a path that goes nowhere does not bend
        return Ok(0.0);
    }
    let ec = e.to_continuous(delta);
    let gc = g.to_continuous(delta);
    let g_e = field.metric_at(&ec)?;
    let mut sum = 0.0;
    for axis in axes.range::<D>() {
        let minus = f.offset(axis, -1).to_continuous(delta);
        let plus = f.offset(axis, 1).to_continuous(delta);
        let diff = probe_difference(field, &g_e, &ec, &minus, &plus, &gc, axis, 2.0)?;
        sum += diff * diff;
    }
    Ok(sum)
}

/// Deviation in continuous space with an explicit probe step `h` (cm).
///
/// Each partial derivative is `(l(E, F - h e_mu, G) - l(E, F + h e_mu, G)) / (2h)`.
pub fn deviation_with_step<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    e: &ContinuousPoint<D>,
    f: &ContinuousPoint<D>,
    g: &ContinuousPoint<D>,
    h: f64,
    axes: Axes,
) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(GeodesicError::InvalidParameter("probe step must be positive and finite"));
    }
    let g_e = field.metric_at(e)?;
    let mut sum = 0.0;
    for axis in axes.range::<D>() {
        let minus = f.offset(axis, -h);
        let plus = f.offset(axis, h);
        let diff = probe_difference(field, &g_e, e, &minus, &plus, g, axis, 2.0 * h)?;
        sum += diff * diff;
    }
    Ok(sum)
}

/// Deviation in continuous space with the probe step tied to the path length:
/// `h = eta * l(E, F, G)`. This keeps the differences well above round-off
/// however fine the lattice is.
pub fn deviation_continuous<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    e: &ContinuousPoint<D>,
    f: &ContinuousPoint<D>,
    g: &ContinuousPoint<D>,
    eta: f64,
    axes: Axes,
) -> Result<f64> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(GeodesicError::InvalidParameter("eta must lie in (0, 1)"));
    }
    let l = three_point_length(field, e, f, g)?;
    if l == 0.0 {
        return Err(GeodesicError::ZeroLength);
    }
    deviation_with_step(field, e, f, g, eta * l, axes)
}

/// A deviation function on lattice triples.
///
/// The solver only ever talks to this trait, so any non-negative function of
/// three points can drive it.
pub trait Deviation<const D: usize>: Sync {
    fn deviation(&self, e: &LatticePoint<D>, f: &LatticePoint<D>, g: &LatticePoint<D>) -> Result<f64>;
}

impl<const D: usize, W: Deviation<D> + ?Sized> Deviation<D> for &W {
    fn deviation(&self, e: &LatticePoint<D>, f: &LatticePoint<D>, g: &LatticePoint<D>) -> Result<f64> {
        (**self).deviation(e, f, g)
    }
}

/// The deviation induced by a metric field, evaluated with [`deviation_discrete`].
#[derive(Debug, Clone, Copy)]
pub struct DistanceDeviation<M> {
    pub field: M,
    pub delta: f64,
    pub axes: Axes,
}

impl<M> DistanceDeviation<M> {
    pub fn new(field: M, delta: f64, axes: Axes) -> Self {
        Self { field, delta, axes }
    }
}

impl<const D: usize, M: MetricField<D>> Deviation<D> for DistanceDeviation<M> {
    fn deviation(&self, e: &LatticePoint<D>, f: &LatticePoint<D>, g: &LatticePoint<D>) -> Result<f64> {
        deviation_discrete(&self.field, self.delta, e, f, g, self.axes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{Minkowski, Schwarzschild};

    fn cp(c: [f64; 3]) -> ContinuousPoint<3> {
        ContinuousPoint::new(c).unwrap()
    }

    #[test]
    fn flat_interval() {
        let g = MetricTensor::<3>::minkowski();
        let d = proper_interval(&g, &cp([0.0, 0.0, 0.0]), &cp([5.0, 3.0, 0.0])).unwrap();
        assert_eq!(d, 4.0);
        let p = cp([1.0, 2.0, 3.0]);
        assert_eq!(proper_interval(&g, &p, &p).unwrap(), 0.0);
    }

    #[test]
    fn lightlike_is_zero_and_spacelike_is_an_error() {
        let g = MetricTensor::<3>::minkowski();
        assert_eq!(proper_interval(&g, &cp([0.0; 3]), &cp([5.0, 3.0, 4.0])).unwrap(), 0.0);
        let err = proper_interval(&g, &cp([0.0; 3]), &cp([1.0, 3.0, 0.0])).unwrap_err();
        assert_eq!(err, GeodesicError::SpacelikeStep { quadratic_form: -8.0 });
    }

    #[test]
    fn schwarzschild_interval_at_start() {
        // g(E) = diag(0.997, -1/(1 - 0.003), -1); the x step is zero, so
        // q = 0.997e14 - 4e10 exactly in real arithmetic.
        let s = Schwarzschild::new(3e5).unwrap();
        let d = distance(&s, &cp([0.0, 1e8, 0.0]), &cp([1e7, 1e8, 2e5])).unwrap();
        let want = 99_660_000_000_000.0f64.sqrt();
        assert!((d - want).abs() <= 1e-15 * want);
        assert!((d - 9.983e6).abs() < 1e3);
    }

    #[test]
    fn three_point_length_flat() {
        let m = Minkowski::<3>;
        let l = three_point_length(&m, &cp([0.0; 3]), &cp([1.0, 0.0, 0.0]), &cp([2.0, 0.0, 0.0]));
        assert_eq!(l.unwrap(), 2.0);
        let p = cp([4.0, 1.0, 1.0]);
        assert_eq!(three_point_length(&m, &p, &p, &p).unwrap(), 0.0);
    }

    #[test]
    fn three_point_length_singular() {
        let s = Schwarzschild::new(10.0).unwrap();
        let err = three_point_length(&s, &cp([0.0, 100.0, 0.0]), &cp([200.0, 5.0, 0.0]), &cp([400.0, 100.0, 0.0]));
        assert!(matches!(err, Err(GeodesicError::MetricSingularity { .. })));
    }

    #[test]
    fn straight_flat_triples_have_zero_deviation() {
        let m = Minkowski::<3>;
        for k in 2..20 {
            let e = LatticePoint::new([0, 0, 0]);
            let f = LatticePoint::new([k, 0, 0]);
            let g = LatticePoint::new([2 * k, 0, 0]);
            assert_eq!(deviation_discrete(&m, 1.0, &e, &f, &g, Axes::All).unwrap(), 0.0);
        }
        let p = LatticePoint::new([0, 0, 0]);
        assert_eq!(deviation_discrete(&m, 1.0, &p, &p, &p, Axes::Spatial).unwrap(), 0.0);
    }

    #[test]
    fn probe_failures_name_the_probe() {
        let m = Minkowski::<3>;
        // F - e_1 sits 2 cells from E in 1 tick: spacelike
        let e = LatticePoint::new([0, 0, 0]);
        let f = LatticePoint::new([1, 1, 0]);
        let g = LatticePoint::new([2, 2, 0]);
        let err = deviation_discrete(&m, 1.0, &e, &f, &g, Axes::All).unwrap_err();
        assert!(err.is_spacelike());
        assert!(matches!(err, GeodesicError::ProbeFailed { .. }));
    }

    #[test]
    fn continuous_deviation_rejects_degenerate_input() {
        let m = Minkowski::<3>;
        let p = cp([0.0; 3]);
        assert_eq!(deviation_continuous(&m, &p, &p, &p, 1e-6, Axes::All), Err(GeodesicError::ZeroLength));
        assert!(deviation_continuous(&m, &p, &p, &p, 0.0, Axes::All).is_err());
    }
}
