//! Lattice gradient descent for straightest discrete geodesics.
//!
//! Given two points `E_{i-1}, E_i`, the next point is found on the time slot
//! `t_i + a` by starting from a predicted cell `C` and repeatedly moving to
//! the best of its `3^n` spatial neighbours until no neighbour improves the
//! deviation. The result satisfies the local-minimum condition
//! `w(E_{i-1}, E_i, G) >= w(E_{i-1}, E_i, E_{i+1})` for every spatial
//! neighbour `G` of `E_{i+1}`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{GeodesicError, Result};
use crate::geometry::{Axes, Deviation, DistanceDeviation};
use crate::metric::MetricField;
use crate::point::LatticePoint;

pub const DEFAULT_MAX_DESCENT_ITERS: u64 = 1_000_000;

/// Slack allowed when re-checking the local-minimum condition after the fact.
pub const AUDIT_TOLERANCE: f64 = 1e-12;

/// How the first guess for the next point is extrapolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Predictor {
    /// `C = A_i + S_i + R_i`.
    #[default]
    ConstantAcceleration,
    /// `C = A_i + S_i`.
    ConstantVelocity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Timeline multiplier: consecutive points are `a` cells apart in time.
    pub a: i64,
    /// Cell size in cm.
    pub delta: f64,
    pub axes: Axes,
    pub max_descent_iters: u64,
    pub velocity_bound_check: bool,
    pub predictor: Predictor,
}

impl SolverConfig {
    pub fn new(a: i64, delta: f64) -> Self {
        Self {
            a,
            delta,
            axes: Axes::All,
            max_descent_iters: DEFAULT_MAX_DESCENT_ITERS,
            velocity_bound_check: true,
            predictor: Predictor::ConstantAcceleration,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.a < 1 {
            return Err(GeodesicError::InvalidParameter("timeline multiplier a must be >= 1"));
        }
        if self.max_descent_iters < 1 {
            return Err(GeodesicError::InvalidParameter("max_descent_iters must be >= 1"));
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(GeodesicError::InvalidParameter("cell size must be positive and finite"));
        }
        Ok(())
    }

    /// Time step in cm.
    pub fn tau(&self) -> f64 {
        self.a as f64 * self.delta
    }
}

/// Bookkeeping for one computed point `A_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord<const D: usize> {
    /// Index of the point in the trajectory.
    pub index: usize,
    /// `S_i = A_i - A_{i-1}` (the time component is always `a`).
    pub velocity: [i64; D],
    /// `R_i = S_i - S_{i-1}`; zero when `S_{i-1}` is unknown.
    pub acceleration: [i64; D],
    /// First guess handed to the descent.
    pub predicted: LatticePoint<D>,
    pub descent_iterations: u64,
    pub final_deviation: f64,
    /// Neighbours skipped because a probe segment was spacelike.
    pub excluded_neighbors: u64,
}

/// Result of one descent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Descent<const D: usize> {
    pub point: LatticePoint<D>,
    pub moves: u64,
    pub deviation: f64,
    pub excluded_neighbors: u64,
}

/// A step whose spatial displacement exceeded the light-cone bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityBoundViolation {
    pub index: usize,
    /// Euclidean spatial displacement, in cells.
    pub displacement: f64,
    /// Allowed displacement (`a`), in cells.
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<const D: usize> {
    pub points: Vec<LatticePoint<D>>,
    pub delta: f64,
    pub a: i64,
    pub metric: String,
    /// One record per computed point, starting at index 2.
    pub records: Vec<StepRecord<D>>,
    pub velocity_violations: Vec<VelocityBoundViolation>,
}

impl<const D: usize> Trajectory<D> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Record for point `index`, if it was computed by descent.
    pub fn record(&self, index: usize) -> Option<&StepRecord<D>> {
        index.checked_sub(2).and_then(|k| self.records.get(k))
    }
}

/// Spatial offsets of the `3^n` cube in lexicographic order, centre excluded.
fn neighbor_offsets<const D: usize>() -> Vec<[i64; D]> {
    let n = D - 1;
    let count = 3usize.pow(n as u32);
    let mut out = Vec::with_capacity(count - 1);
    for code in 0..count {
        let mut off = [0i64; D];
        let mut rest = code;
        for axis in (1..D).rev() {
            off[axis] = (rest % 3) as i64 - 1;
            rest /= 3;
        }
        if off.iter().any(|&c| c != 0) {
            out.push(off);
        }
    }
    out
}

/// Deviation with spacelike candidates mapped to `+inf`.
fn evaluate<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    e: &LatticePoint<D>,
    f: &LatticePoint<D>,
    g: &LatticePoint<D>,
    excluded: &mut u64,
) -> Result<f64> {
    match w.deviation(e, f, g) {
        Ok(v) => Ok(v),
        Err(err) if err.is_spacelike() => {
            *excluded += 1;
            Ok(f64::INFINITY)
        }
        Err(err) => Err(err),
    }
}

/// Steepest-neighbour descent from `start`, calling `on_move` with every
/// accepted point (the start included) and its deviation.
///
/// Ties among neighbours go to the lexicographically smallest coordinates; a
/// neighbour that only ties the current point does not move it.
pub fn descend<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    e: &LatticePoint<D>,
    f: &LatticePoint<D>,
    start: LatticePoint<D>,
    max_moves: u64,
    mut on_move: impl FnMut(&LatticePoint<D>, f64),
) -> Result<Descent<D>> {
    let offsets = neighbor_offsets::<D>();
    let mut excluded = 0u64;
    let mut current = start;
    let mut current_w = evaluate(w, e, f, &current, &mut excluded)?;
    on_move(&current, current_w);
    let mut moves = 0u64;
    // values of the previous block; consecutive blocks overlap
    let mut seen: Vec<(LatticePoint<D>, f64)> = Vec::with_capacity(offsets.len() + 1);
    let mut block: Vec<(LatticePoint<D>, f64)> = Vec::with_capacity(offsets.len() + 1);
    loop {
        let mut best: Option<(LatticePoint<D>, f64)> = None;
        block.clear();
        block.push((current, current_w));
        for off in &offsets {
            let cand = current.shifted(off);
            let value = match seen.iter().find(|(p, _)| *p == cand) {
                Some(&(_, v)) => v,
                None => evaluate(w, e, f, &cand, &mut excluded)?,
            };
            block.push((cand, value));
            if best.is_none_or(|(_, b)| value < b) {
                best = Some((cand, value));
            }
        }
        core::mem::swap(&mut seen, &mut block);
        match best {
            Some((cand, value)) if value < current_w => {
                if moves == max_moves {
                    return Err(GeodesicError::DescentBudgetExceeded { max_iters: max_moves });
                }
                debug_assert!(value < current_w);
                current = cand;
                current_w = value;
                moves += 1;
                on_move(&current, current_w);
            }
            _ => break,
        }
    }
    if current_w.is_infinite() {
        return Err(GeodesicError::NoTimelikeCandidate);
    }
    Ok(Descent { point: current, moves, deviation: current_w, excluded_neighbors: excluded })
}

/// Descends from `c` to a cell that no spatial neighbour improves on.
pub fn local_minimize<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    e: &LatticePoint<D>,
    f: &LatticePoint<D>,
    c: LatticePoint<D>,
    cfg: &SolverConfig,
) -> Result<Descent<D>> {
    descend(w, e, f, c, cfg.max_descent_iters, |_, _| {})
}

/// The predicted first guess for the point after `history`.
pub fn predict<const D: usize>(history: &[LatticePoint<D>], cfg: &SolverConfig) -> Result<LatticePoint<D>> {
    let n = history.len();
    if n < 2 {
        return Err(GeodesicError::InvalidParameter("prediction needs two prior points"));
    }
    let current = history[n - 1];
    let velocity = current.diff(&history[n - 2]);
    let mut step = velocity;
    if cfg.predictor == Predictor::ConstantAcceleration && n >= 3 {
        let previous = history[n - 2].diff(&history[n - 3]);
        for k in 1..D {
            step[k] += velocity[k] - previous[k];
        }
    }
    step[0] = cfg.a;
    Ok(current.shifted(&step))
}

/// Computes the point following `history` (at least two points).
pub fn next_point<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    history: &[LatticePoint<D>],
    cfg: &SolverConfig,
) -> Result<(LatticePoint<D>, StepRecord<D>)> {
    let c = predict(history, cfg)?;
    let n = history.len();
    let e = &history[n - 2];
    let f = &history[n - 1];
    let found = local_minimize(w, e, f, c, cfg)?;
    let velocity = found.point.diff(f);
    let before = f.diff(e);
    let mut acceleration = [0i64; D];
    for k in 1..D {
        acceleration[k] = velocity[k] - before[k];
    }
    let record = StepRecord {
        index: n,
        velocity,
        acceleration,
        predicted: c,
        descent_iterations: found.moves,
        final_deviation: found.deviation,
        excluded_neighbors: found.excluded_neighbors,
    };
    Ok((found.point, record))
}

fn check_bound<const D: usize>(
    index: usize,
    from: &LatticePoint<D>,
    to: &LatticePoint<D>,
    a: i64,
    out: &mut Vec<VelocityBoundViolation>,
) {
    let displacement = to.spatial_distance(from);
    if displacement > a as f64 {
        out.push(VelocityBoundViolation { index, displacement, bound: a as f64 });
    }
}

/// Runs `steps` descents from `E_0, E_1` with an arbitrary deviation function.
pub fn run_with_deviation<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    metric: String,
    e0: LatticePoint<D>,
    e1: LatticePoint<D>,
    steps: usize,
    cfg: &SolverConfig,
) -> Result<Trajectory<D>> {
    cfg.validate()?;
    if e0.time() != 0 || e1.time() != cfg.a {
        return Err(GeodesicError::InvalidParameter("starting points must sit at times 0 and a"));
    }
    let mut points = Vec::with_capacity(steps + 2);
    points.push(e0);
    points.push(e1);
    let mut records = Vec::with_capacity(steps);
    let mut velocity_violations = Vec::new();
    if cfg.velocity_bound_check {
        check_bound(1, &e0, &e1, cfg.a, &mut velocity_violations);
    }
    for _ in 0..steps {
        let index = points.len();
        let (next, record) = next_point(w, &points, cfg)
            .map_err(|err| GeodesicError::StepFailed { step: index, source: Box::new(err) })?;
        if cfg.velocity_bound_check {
            check_bound(index, &points[index - 1], &next, cfg.a, &mut velocity_violations);
        }
        points.push(next);
        records.push(record);
    }
    Ok(Trajectory { points, delta: cfg.delta, a: cfg.a, metric, records, velocity_violations })
}

/// Discrete geodesic of the distance-induced deviation of `field`.
pub fn run_geodesic<const D: usize, M: MetricField<D>>(
    field: &M,
    e0: LatticePoint<D>,
    e1: LatticePoint<D>,
    steps: usize,
    cfg: &SolverConfig,
) -> Result<Trajectory<D>> {
    let w = DistanceDeviation::new(field, cfg.delta, cfg.axes);
    run_with_deviation(&w, field.describe(), e0, e1, steps, cfg)
}

/// Lattice start points from a physical position (cm) and velocity (fraction of c).
///
/// `position_cm` and `velocity_c` hold the spatial components only.
pub fn initial_points<const D: usize>(
    position_cm: &[f64],
    velocity_c: &[f64],
    delta: f64,
    a: i64,
) -> Result<(LatticePoint<D>, LatticePoint<D>)> {
    if position_cm.len() != D - 1 || velocity_c.len() != D - 1 {
        return Err(GeodesicError::InvalidParameter("position and velocity need n components"));
    }
    if a < 1 {
        return Err(GeodesicError::InvalidParameter("timeline multiplier a must be >= 1"));
    }
    let speed_sq: f64 = velocity_c.iter().map(|v| v * v).sum();
    if !(speed_sq < 1.0) {
        return Err(GeodesicError::InvalidParameter("initial speed must be below c"));
    }
    let mut start = [0.0; D];
    start[1..].copy_from_slice(position_cm);
    let e0 = LatticePoint::from_physical(start, delta)?;
    let mut step = [0.0; D];
    step[0] = a as f64;
    for (slot, v) in step[1..].iter_mut().zip(velocity_c) {
        *slot = v * a as f64;
    }
    let step = LatticePoint::<D>::from_physical(step, 1.0)?;
    let mut coords = e0.coords;
    for (c, s) in coords.iter_mut().zip(step.coords.iter()) {
        *c = c
            .checked_add(*s)
            .ok_or(GeodesicError::RangeOverflow { value: *c as f64 + *s as f64 })?;
    }
    Ok((e0, LatticePoint::new(coords)))
}

/// `(2a + 1)^n`: how many per-step velocities fit in the light cone box.
pub fn count_velocity_states(a: u64, n: u32) -> BigUint {
    (BigUint::from(a) * 2u32 + 1u32).pow(n)
}

/// A point that fails the local-minimum condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditViolation<const D: usize> {
    pub index: usize,
    pub neighbor: LatticePoint<D>,
    pub neighbor_deviation: f64,
    pub chosen_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AuditReport<const D: usize> {
    pub checked: usize,
    pub violations: Vec<AuditViolation<D>>,
}

/// Re-checks every point from index 2 onwards against all its spatial neighbours.
pub fn audit_local_minima<const D: usize, W: Deviation<D> + ?Sized>(
    w: &W,
    points: &[LatticePoint<D>],
    tolerance: f64,
) -> Result<AuditReport<D>> {
    let offsets = neighbor_offsets::<D>();
    let mut report = AuditReport { checked: 0, violations: Vec::new() };
    let mut scratch = 0u64;
    for i in 2..points.len() {
        let (e, f, g) = (&points[i - 2], &points[i - 1], &points[i]);
        let chosen = evaluate(w, e, f, g, &mut scratch)?;
        for off in &offsets {
            let neighbor = g.shifted(off);
            let value = evaluate(w, e, f, &neighbor, &mut scratch)?;
            if value < chosen - tolerance {
                report.violations.push(AuditViolation {
                    index: i,
                    neighbor,
                    neighbor_deviation: value,
                    chosen_deviation: chosen,
                });
            }
        }
        report.checked += 1;
    }
    Ok(report)
}

/// Largest spatial step of the trajectory in cells, mostly for diagnostics.
pub fn max_spatial_step<const D: usize>(points: &[LatticePoint<D>]) -> f64 {
    points.windows(2).map(|p| p[1].spatial_distance(&p[0])).fold(0.0, f64::max)
}
