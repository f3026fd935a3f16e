//! Orbit post-processing in the plane: radius/angle series, apsides and
//! perihelion-shift figures.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{GeodesicError, Result};
use crate::math;
use crate::solver::Trajectory;

/// One trajectory point in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub r: f64,
    /// Polar angle in degrees, `(-180, 180]`; `None` at the origin.
    pub angle: Option<f64>,
    /// Coordinate speed in units of c.
    pub speed: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApsisKind {
    Perihelion,
    Aphelion,
}

impl ApsisKind {
    pub fn name(self) -> &'static str {
        match self {
            ApsisKind::Perihelion => "Perihelion",
            ApsisKind::Aphelion => "Aphelion",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApsisEvent {
    pub kind: ApsisKind,
    pub index: usize,
    pub sample: OrbitSample,
}

fn polar_angle_deg(x: f64, y: f64) -> Option<f64> {
    if x == 0.0 && y == 0.0 {
        return None;
    }
    let deg = math::atan2(y, x).to_degrees();
    // atan2 gives [-pi, pi]; fold -180 onto 180
    Some(if deg <= -180.0 { deg + 360.0 } else { deg })
}

/// Samples from `(t, x, y)` triples in cm.
///
/// Speed is the Euclidean displacement to the next sample over the elapsed
/// time; the last sample reuses the preceding displacement.
pub fn orbit_series_from_positions(positions: &[(f64, f64, f64)]) -> Result<Vec<OrbitSample>> {
    if positions.len() < 2 {
        return Err(GeodesicError::InvalidParameter("orbit series needs at least two points"));
    }
    let speed = |a: &(f64, f64, f64), b: &(f64, f64, f64)| math::hypot(b.1 - a.1, b.2 - a.2) / (b.0 - a.0);
    let last = positions.len() - 1;
    Ok(positions
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let v = if i < last { speed(p, &positions[i + 1]) } else { speed(&positions[i - 1], p) };
            OrbitSample { t: p.0, x: p.1, y: p.2, r: math::hypot(p.1, p.2), angle: polar_angle_deg(p.1, p.2), speed: v }
        })
        .collect())
}

/// Samples for a 2+1 lattice trajectory, scaled by the cell size.
pub fn orbit_series(traj: &Trajectory<3>) -> Result<Vec<OrbitSample>> {
    let positions: Vec<(f64, f64, f64)> = traj
        .points
        .iter()
        .map(|p| {
            let c = p.to_continuous(traj.delta);
            (c.coords[0], c.coords[1], c.coords[2])
        })
        .collect();
    orbit_series_from_positions(&positions)
}

/// Strict local extrema of `r`. Plateaus produce no event.
pub fn detect_apsides(series: &[OrbitSample]) -> Vec<ApsisEvent> {
    series
        .windows(3)
        .enumerate()
        .filter_map(|(k, w)| {
            let (before, here, after) = (w[0].r, w[1].r, w[2].r);
            let kind = if here < before && here < after {
                ApsisKind::Perihelion
            } else if here > before && here > after {
                ApsisKind::Aphelion
            } else {
                return None;
            };
            Some(ApsisEvent { kind, index: k + 1, sample: w[1] })
        })
        .collect()
}

/// Weak-field perihelion advance per revolution in degrees,
/// `(3/2) pi m (1/a + 1/p)` for aphelion `a` and perihelion `p`.
pub fn theoretical_shift(m: f64, aphelion: f64, perihelion: f64) -> Result<f64> {
    if !(aphelion > 0.0 && perihelion > 0.0) {
        return Err(GeodesicError::InvalidParameter("apsis distances must be positive"));
    }
    Ok((1.5 * PI * m * (1.0 / aphelion + 1.0 / perihelion)).to_degrees())
}

/// Wraps an angle difference into `(-180, 180]` degrees.
pub fn unwrap_degrees(diff: f64) -> f64 {
    let mut d = diff % 360.0;
    if d > 180.0 {
        d -= 360.0;
    } else if d <= -180.0 {
        d += 360.0;
    }
    d
}

/// Angle advance between consecutive apsides of the same kind.
///
/// Each entry carries the kind and the index of the later apsis.
pub fn observed_shift(apsides: &[ApsisEvent]) -> Result<Vec<(ApsisKind, usize, f64)>> {
    let mut out = Vec::new();
    for kind in [ApsisKind::Perihelion, ApsisKind::Aphelion] {
        let mut previous: Option<f64> = None;
        for ev in apsides.iter().filter(|e| e.kind == kind) {
            let Some(angle) = ev.sample.angle else { continue };
            if let Some(prev) = previous {
                out.push((kind, ev.index, unwrap_degrees(angle - prev)));
            }
            previous = Some(angle);
        }
    }
    if out.is_empty() {
        return Err(GeodesicError::InsufficientApsides);
    }
    out.sort_by_key(|&(_, index, _)| index);
    Ok(out)
}
