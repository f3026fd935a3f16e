//! Continuum reference: Christoffel symbols from finite-differenced metrics,
//! the first-order velocity update and a classical RK4 integrator for
//! `d^2x/ds^2 = -Gamma^l_{mn} dx^m/ds dx^n/ds`.
//!
//! This path shares nothing with the lattice solver except the metric field,
//! which is what makes it useful as a cross-check.

use alloc::vec::Vec;

use crate::error::{GeodesicError, Result};
use crate::math;
use crate::metric::MetricField;
use crate::point::{ContinuousPoint, Displacement};

/// Default bound on `|v^T g v - 1|` before integration gives up.
pub const DEFAULT_DRIFT_TOLERANCE: f64 = 1e-6;

/// `partials[l][m][n] = d g_{mn} / d x^l`.
pub type MetricPartials<const D: usize> = [[[f64; D]; D]; D];

/// Central-difference metric derivatives with step `h` cm along every axis.
pub fn metric_partials<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    p: &ContinuousPoint<D>,
    h: f64,
) -> Result<MetricPartials<D>> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(GeodesicError::InvalidParameter("derivative step must be positive and finite"));
    }
    let mut out = [[[0.0; D]; D]; D];
    for (axis, slot) in out.iter_mut().enumerate() {
        let plus = field.metric_at(&p.offset(axis, h))?;
        let minus = field.metric_at(&p.offset(axis, -h))?;
        for m in 0..D {
            for n in 0..D {
                slot[m][n] = (plus.get(m, n) - minus.get(m, n)) / (2.0 * h);
            }
        }
    }
    Ok(out)
}

/// `Gamma^l_{mn}` at one point, stored symmetric in the lower indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChristoffelSymbols<const D: usize> {
    gamma: [[[f64; D]; D]; D],
}

impl<const D: usize> ChristoffelSymbols<D> {
    #[inline]
    pub fn get(&self, l: usize, m: usize, n: usize) -> f64 {
        self.gamma[l][m][n]
    }

    pub fn components(&self) -> &[[[f64; D]; D]; D] {
        &self.gamma
    }

    /// `Gamma^l_{mn} v^m v^n` for every `l`.
    pub fn contract(&self, v: &Displacement<D>) -> Displacement<D> {
        let mut out = [0.0; D];
        for (l, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for m in 0..D {
                for n in 0..D {
                    acc += self.gamma[l][m][n] * v.components[m] * v.components[n];
                }
            }
            *slot = acc;
        }
        Displacement::new(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.gamma.iter().flatten().flatten().fold(0.0, |m, &x| f64::max(m, math::abs(x)))
    }
}

/// Christoffel symbols of the second kind from the metric and its partials.
pub fn christoffel_from_partials<const D: usize>(
    inverse: &[[f64; D]; D],
    partials: &MetricPartials<D>,
) -> ChristoffelSymbols<D> {
    let mut gamma = [[[0.0; D]; D]; D];
    for l in 0..D {
        for m in 0..D {
            for n in m..D {
                let mut acc = 0.0;
                for k in 0..D {
                    acc += inverse[l][k] * (partials[m][k][n] + partials[n][k][m] - partials[k][m][n]);
                }
                gamma[l][m][n] = 0.5 * acc;
                gamma[l][n][m] = 0.5 * acc;
            }
        }
    }
    ChristoffelSymbols { gamma }
}

/// Christoffel symbols at `p`; `h = None` uses the field's own derivative step.
pub fn christoffel<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    p: &ContinuousPoint<D>,
    h: Option<f64>,
) -> Result<ChristoffelSymbols<D>> {
    let h = h.unwrap_or_else(|| field.derivative_step(p));
    let inverse = field.metric_at(p)?.inverse()?;
    let partials = metric_partials(field, p, h)?;
    Ok(christoffel_from_partials(&inverse, &partials))
}

/// Position and proper-time velocity `dx/ds`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseState<const D: usize> {
    pub x: ContinuousPoint<D>,
    pub v: Displacement<D>,
}

impl<const D: usize> PhaseState<D> {
    /// Scales a coordinate velocity (any positive multiple of `dx/dt`) to unit
    /// proper-time normalisation at `x`.
    pub fn normalized<M: MetricField<D> + ?Sized>(
        field: &M,
        x: ContinuousPoint<D>,
        direction: Displacement<D>,
    ) -> Result<Self> {
        let q = field.metric_at(&x)?.quadratic(&direction);
        if !(q > 0.0) {
            return Err(GeodesicError::SpacelikeStep { quadratic_form: q });
        }
        Ok(Self { x, v: direction.scale(1.0 / math::sqrt(q)) })
    }

    /// `v^T g(x) v - 1`.
    pub fn norm_error<M: MetricField<D> + ?Sized>(&self, field: &M) -> Result<f64> {
        Ok(field.metric_at(&self.x)?.quadratic(&self.v) - 1.0)
    }
}

/// One first-order update: `v' = v - eps Gamma(v, v)`, then `x' = x + eps v'`.
pub fn step_t1<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    state: &PhaseState<D>,
    eps: f64,
    h: Option<f64>,
) -> Result<PhaseState<D>> {
    if !(eps >= 0.0) {
        return Err(GeodesicError::InvalidParameter("step must be non-negative"));
    }
    if eps == 0.0 {
        return Ok(*state);
    }
    let accel = christoffel(field, &state.x, h)?.contract(&state.v);
    let v = state.v - accel.scale(eps);
    Ok(PhaseState { x: state.x + v.scale(eps), v })
}

fn acceleration<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    x: &ContinuousPoint<D>,
    v: &Displacement<D>,
    h: Option<f64>,
) -> Result<Displacement<D>> {
    Ok(christoffel(field, x, h)?.contract(v).scale(-1.0))
}

/// One classical fourth-order Runge-Kutta step of length `ds`.
pub fn rk4_step<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    state: &PhaseState<D>,
    ds: f64,
    h: Option<f64>,
) -> Result<PhaseState<D>> {
    let (x0, v0) = (state.x, state.v);
    let k1x = v0;
    let k1v = acceleration(field, &x0, &v0, h)?;
    let x1 = x0 + k1x.scale(ds / 2.0);
    let v1 = v0 + k1v.scale(ds / 2.0);
    let k2x = v1;
    let k2v = acceleration(field, &x1, &v1, h)?;
    let x2 = x0 + k2x.scale(ds / 2.0);
    let v2 = v0 + k2v.scale(ds / 2.0);
    let k3x = v2;
    let k3v = acceleration(field, &x2, &v2, h)?;
    let x3 = x0 + k3x.scale(ds);
    let v3 = v0 + k3v.scale(ds);
    let k4x = v3;
    let k4v = acceleration(field, &x3, &v3, h)?;
    let dx = (k1x + k2x.scale(2.0) + k3x.scale(2.0) + k4x).scale(ds / 6.0);
    let dv = (k1v + k2v.scale(2.0) + k3v.scale(2.0) + k4v).scale(ds / 6.0);
    Ok(PhaseState { x: x0 + dx, v: v0 + dv })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeConfig {
    /// Proper-time step in cm.
    pub ds: f64,
    pub drift_tolerance: f64,
    /// Finite-difference step for the metric; `None` defers to the field.
    pub h: Option<f64>,
}

impl OdeConfig {
    pub fn new(ds: f64) -> Self {
        Self { ds, drift_tolerance: DEFAULT_DRIFT_TOLERANCE, h: None }
    }

    fn validate(&self) -> Result<()> {
        if !(self.ds > 0.0) || !self.ds.is_finite() {
            return Err(GeodesicError::InvalidParameter("ds must be positive and finite"));
        }
        if !(self.drift_tolerance > 0.0) {
            return Err(GeodesicError::InvalidParameter("drift tolerance must be positive"));
        }
        Ok(())
    }
}

/// A state tagged with its proper time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeSample<const D: usize> {
    pub s: f64,
    pub state: PhaseState<D>,
}

fn check_drift<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    state: &PhaseState<D>,
    s: f64,
    tolerance: f64,
) -> Result<()> {
    let drift = state.norm_error(field)?;
    if !(math::abs(drift) <= tolerance) {
        return Err(GeodesicError::NormDrift { drift, tolerance, s });
    }
    Ok(())
}

/// Integrates from `state0` over proper time `total_s`, returning the state
/// after every step (the start included). The last step is shortened so the
/// run ends exactly at `total_s`.
pub fn integrate_geodesic_ode<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    state0: PhaseState<D>,
    total_s: f64,
    cfg: &OdeConfig,
) -> Result<Vec<OdeSample<D>>> {
    cfg.validate()?;
    if !(total_s >= 0.0) {
        return Err(GeodesicError::InvalidParameter("total proper time must be non-negative"));
    }
    check_drift(field, &state0, 0.0, cfg.drift_tolerance)?;
    let mut out = Vec::new();
    out.push(OdeSample { s: 0.0, state: state0 });
    let mut state = state0;
    let mut k = 0u64;
    loop {
        let s = k as f64 * cfg.ds;
        if s >= total_s {
            break;
        }
        let step = f64::min(cfg.ds, total_s - s);
        state = rk4_step(field, &state, step, cfg.h)?;
        k += 1;
        let s_next = f64::min(k as f64 * cfg.ds, total_s);
        check_drift(field, &state, s_next, cfg.drift_tolerance)?;
        out.push(OdeSample { s: s_next, state });
    }
    Ok(out)
}

/// Cubic Hermite interpolation of one coordinate and its derivative.
fn hermite(u: f64, len: f64, x0: f64, x1: f64, d0: f64, d1: f64) -> (f64, f64) {
    let u2 = u * u;
    let u3 = u2 * u;
    let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    let h10 = u3 - 2.0 * u2 + u;
    let h01 = -2.0 * u3 + 3.0 * u2;
    let h11 = u3 - u2;
    let value = h00 * x0 + h10 * len * d0 + h01 * x1 + h11 * len * d1;
    let slope = ((6.0 * u2 - 6.0 * u) * x0
        + (3.0 * u2 - 4.0 * u + 1.0) * len * d0
        + (-6.0 * u2 + 6.0 * u) * x1
        + (3.0 * u2 - 2.0 * u) * len * d1)
        / len;
    (value, slope)
}

fn interpolate<const D: usize>(a: &OdeSample<D>, b: &OdeSample<D>, s: f64) -> OdeSample<D> {
    let len = b.s - a.s;
    let u = (s - a.s) / len;
    let mut x = [0.0; D];
    let mut v = [0.0; D];
    for i in 0..D {
        let (xi, vi) = hermite(u, len, a.state.x.coords[i], b.state.x.coords[i], a.state.v.components[i], b.state.v.components[i]);
        x[i] = xi;
        v[i] = vi;
    }
    OdeSample { s, state: PhaseState { x: ContinuousPoint { coords: x }, v: Displacement::new(v) } }
}

/// Integrates until coordinate time reaches each entry of `times` (ascending)
/// and returns the interpolated state there.
///
/// Between RK4 steps the trajectory is a cubic Hermite spline in `s`; the
/// crossing `t(s) = T` is located by bisection, which is safe because `dt/ds > 0`
/// for timelike motion.
pub fn integrate_to_times<const D: usize, M: MetricField<D> + ?Sized>(
    field: &M,
    state0: PhaseState<D>,
    times: &[f64],
    cfg: &OdeConfig,
) -> Result<Vec<OdeSample<D>>> {
    cfg.validate()?;
    check_drift(field, &state0, 0.0, cfg.drift_tolerance)?;
    if times.windows(2).any(|w| !(w[0] <= w[1])) {
        return Err(GeodesicError::InvalidParameter("sample times must be ascending"));
    }
    let mut out = Vec::with_capacity(times.len());
    let mut prev = OdeSample { s: 0.0, state: state0 };
    let mut next = prev;
    let mut k = 0u64;
    for &target in times {
        if target < state0.x.time() {
            return Err(GeodesicError::InvalidParameter("sample time precedes the start"));
        }
        while next.state.x.time() < target {
            prev = next;
            let state = rk4_step(field, &prev.state, cfg.ds, cfg.h)?;
            k += 1;
            let s = k as f64 * cfg.ds;
            check_drift(field, &state, s, cfg.drift_tolerance)?;
            next = OdeSample { s, state };
        }
        if next.state.x.time() == target || next.s == prev.s {
            out.push(next);
            continue;
        }
        let (mut lo, mut hi) = (prev.s, next.s);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if interpolate(&prev, &next, mid).state.x.time() < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut sample = interpolate(&prev, &next, 0.5 * (lo + hi));
        // pin the time coordinate to the requested timeline exactly
        sample.state.x.coords[0] = target;
        out.push(sample);
    }
    Ok(out)
}
