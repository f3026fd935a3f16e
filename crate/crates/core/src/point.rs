//! Spacetime points. Index 0 is always time; the rest are spatial.
//!
//! Lattice coordinates are counted in cells of size `delta` centimetres.
//! Continuous coordinates are centimetres with `c = 1`, so time is in cm too.

use core::ops::{Add, Index, Sub};

use crate::error::{GeodesicError, Result};
use crate::math;

/// A point of the integer lattice `Z x Z^n` with `D = n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint<const D: usize> {
    pub coords: [i64; D],
}

impl<const D: usize> LatticePoint<D> {
    pub const fn new(coords: [i64; D]) -> Self {
        Self { coords }
    }

    /// Rounds each physical coordinate (cm) to the nearest cell, half away from zero.
    pub fn from_physical(coords: [f64; D], delta: f64) -> Result<Self> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(GeodesicError::InvalidParameter("cell size must be positive and finite"));
        }
        let mut out = [0i64; D];
        for (slot, &x) in out.iter_mut().zip(coords.iter()) {
            *slot = to_index(x / delta)?;
        }
        Ok(Self { coords: out })
    }

    #[inline]
    pub fn time(&self) -> i64 {
        self.coords[0]
    }

    /// Physical position in cm.
    #[inline]
    pub fn to_continuous(&self, delta: f64) -> ContinuousPoint<D> {
        ContinuousPoint { coords: self.coords.map(|c| c as f64 * delta) }
    }

    /// Same point shifted by `k` cells along `axis`.
    #[inline]
    pub fn offset(&self, axis: usize, k: i64) -> Self {
        let mut coords = self.coords;
        coords[axis] += k;
        Self { coords }
    }

    /// Componentwise difference `self - other`.
    #[inline]
    pub fn diff(&self, other: &Self) -> [i64; D] {
        let mut d = [0i64; D];
        for (i, slot) in d.iter_mut().enumerate() {
            *slot = self.coords[i] - other.coords[i];
        }
        d
    }

    /// Componentwise sum with a step vector.
    #[inline]
    pub fn shifted(&self, step: &[i64; D]) -> Self {
        let mut coords = self.coords;
        for (c, s) in coords.iter_mut().zip(step.iter()) {
            *c += *s;
        }
        Self { coords }
    }

    /// Euclidean norm of the spatial part of `self - other`, in cells.
    pub fn spatial_distance(&self, other: &Self) -> f64 {
        let d = self.diff(other);
        let sq: f64 = d[1..].iter().map(|&c| (c as f64) * (c as f64)).sum();
        math::sqrt(sq)
    }
}

impl<const D: usize> Index<usize> for LatticePoint<D> {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords[i]
    }
}

fn to_index(x: f64) -> Result<i64> {
    let r = math::round(x);
    // i64::MAX is not representable; 2^63 is the first float past the range
    const BOUND: f64 = 9_223_372_036_854_775_808.0;
    if !(-BOUND..BOUND).contains(&r) {
        return Err(GeodesicError::RangeOverflow { value: x });
    }
    Ok(r as i64)
}

/// A point of `Z x R^n` or `R^(n+1)`, in centimetres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousPoint<const D: usize> {
    pub coords: [f64; D],
}

impl<const D: usize> ContinuousPoint<D> {
    pub fn new(coords: [f64; D]) -> Result<Self> {
        if coords.iter().all(|c| c.is_finite()) {
            Ok(Self { coords })
        } else {
            Err(GeodesicError::InvalidParameter("point coordinates must be finite"))
        }
    }

    #[inline]
    pub fn time(&self) -> f64 {
        self.coords[0]
    }

    /// Same point moved by `h` cm along `axis`.
    #[inline]
    pub fn offset(&self, axis: usize, h: f64) -> Self {
        let mut coords = self.coords;
        coords[axis] += h;
        Self { coords }
    }

    /// Euclidean radius of the spatial part.
    pub fn spatial_radius(&self) -> f64 {
        let sq: f64 = self.coords[1..].iter().map(|c| c * c).sum();
        math::sqrt(sq)
    }
}

impl<const D: usize> Index<usize> for ContinuousPoint<D> {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl<const D: usize> Sub for ContinuousPoint<D> {
    type Output = Displacement<D>;
    fn sub(self, rhs: Self) -> Displacement<D> {
        let mut components = [0.0; D];
        for (i, c) in components.iter_mut().enumerate() {
            *c = self.coords[i] - rhs.coords[i];
        }
        Displacement { components }
    }
}

impl<const D: usize> Add<Displacement<D>> for ContinuousPoint<D> {
    type Output = ContinuousPoint<D>;
    fn add(self, rhs: Displacement<D>) -> Self {
        let mut coords = self.coords;
        for (c, d) in coords.iter_mut().zip(rhs.components.iter()) {
            *c += *d;
        }
        Self { coords }
    }
}

/// A spacetime vector: a segment `EF`, or a tangent `dx/ds`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Displacement<const D: usize> {
    pub components: [f64; D],
}

impl<const D: usize> Displacement<D> {
    pub const fn new(components: [f64; D]) -> Self {
        Self { components }
    }

    pub const fn zero() -> Self {
        Self { components: [0.0; D] }
    }

    pub fn scale(&self, k: f64) -> Self {
        Self { components: self.components.map(|c| c * k) }
    }

    pub fn spatial_norm(&self) -> f64 {
        let sq: f64 = self.components[1..].iter().map(|c| c * c).sum();
        math::sqrt(sq)
    }
}

impl<const D: usize> Index<usize> for Displacement<D> {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.components[i]
    }
}

impl<const D: usize> Add for Displacement<D> {
    type Output = Displacement<D>;
    fn add(self, rhs: Self) -> Self {
        let mut components = self.components;
        for (c, d) in components.iter_mut().zip(rhs.components.iter()) {
            *c += *d;
        }
        Self { components }
    }
}

impl<const D: usize> Sub for Displacement<D> {
    type Output = Displacement<D>;
    fn sub(self, rhs: Self) -> Self {
        let mut components = self.components;
        for (c, d) in components.iter_mut().zip(rhs.components.iter()) {
            *c -= *d;
        }
        Self { components }
    }
}
