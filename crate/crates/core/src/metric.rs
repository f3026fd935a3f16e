//! Metric tensors and the field abstraction that produces them.

use alloc::string::String;

use crate::error::{GeodesicError, Result};
use crate::math;
use crate::point::{ContinuousPoint, Displacement};

/// Symmetric `D x D` metric, signature `(+, -, ..., -)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor<const D: usize> {
    entries: [[f64; D]; D],
}

impl<const D: usize> MetricTensor<D> {
    /// Builds a tensor from its upper triangle; the lower triangle is mirrored
    /// so that symmetry holds bit-for-bit.
    pub fn from_upper(entries: [[f64; D]; D]) -> Self {
        let mut e = entries;
        for i in 0..D {
            for j in 0..i {
                e[i][j] = e[j][i];
            }
        }
        Self { entries: e }
    }

    /// Accepts a full matrix, rejecting it unless it is exactly symmetric.
    pub fn try_from_entries(entries: [[f64; D]; D]) -> Result<Self> {
        for i in 0..D {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(GeodesicError::InvalidParameter("metric tensor must be symmetric"));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn diagonal(diag: [f64; D]) -> Self {
        let mut entries = [[0.0; D]; D];
        for i in 0..D {
            entries[i][i] = diag[i];
        }
        Self { entries }
    }

    /// `diag(1, -1, ..., -1)`.
    pub fn minkowski() -> Self {
        let mut diag = [-1.0; D];
        diag[0] = 1.0;
        Self::diagonal(diag)
    }

    #[inline]
    pub fn entries(&self) -> &[[f64; D]; D] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    /// `u^T g v`.
    pub fn bilinear(&self, u: &Displacement<D>, v: &Displacement<D>) -> f64 {
        let mut acc = 0.0;
        for i in 0..D {
            let mut row = 0.0;
            for j in 0..D {
                row += self.entries[i][j] * v.components[j];
            }
            acc += u.components[i] * row;
        }
        acc
    }

    /// `v^T g v`.
    #[inline]
    pub fn quadratic(&self, v: &Displacement<D>) -> f64 {
        self.bilinear(v, v)
    }

    /// `g v` as a covector.
    pub fn lower(&self, v: &Displacement<D>) -> [f64; D] {
        let mut out = [0.0; D];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (0..D).map(|j| self.entries[i][j] * v.components[j]).sum();
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    ///
    /// Fails when a pivot falls below `1e-12` times the largest entry.
    pub fn inverse(&self) -> Result<[[f64; D]; D]> {
        let scale = self
            .entries
            .iter()
            .flat_map(|row| row.iter())
            .fold(0.0f64, |m, &x| m.max(math::abs(x)));
        if scale == 0.0 {
            return Err(GeodesicError::SingularMetricInversion { pivot: 0.0 });
        }
        let mut a = self.entries;
        let mut inv = [[0.0; D]; D];
        for (i, row) in inv.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        for col in 0..D {
            let mut best = col;
            for r in col + 1..D {
                if math::abs(a[r][col]) > math::abs(a[best][col]) {
                    best = r;
                }
            }
            let pivot = a[best][col];
            if math::abs(pivot) <= 1e-12 * scale {
                return Err(GeodesicError::SingularMetricInversion { pivot });
            }
            a.swap(col, best);
            inv.swap(col, best);
            for j in 0..D {
                a[col][j] /= pivot;
                inv[col][j] /= pivot;
            }
            for r in 0..D {
                if r != col {
                    let f = a[r][col];
                    if f != 0.0 {
                        for j in 0..D {
                            a[r][j] -= f * a[col][j];
                            inv[r][j] -= f * inv[col][j];
                        }
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let mut a = self.entries;
        let mut det = 1.0;
        for col in 0..D {
            let mut best = col;
            for r in col + 1..D {
                if math::abs(a[r][col]) > math::abs(a[best][col]) {
                    best = r;
                }
            }
            if a[best][col] == 0.0 {
                return 0.0;
            }
            if best != col {
                a.swap(col, best);
                det = -det;
            }
            det *= a[col][col];
            for r in col + 1..D {
                let f = a[r][col] / a[col][col];
                for j in col..D {
                    a[r][j] -= f * a[col][j];
                }
            }
        }
        det
    }
}

/// A position-dependent metric.
///
/// Implementations must be pure: the same point always yields the same tensor.
pub trait MetricField<const D: usize>: Sync {
    /// The tensor at `p`, or `MetricSingularity` outside the domain.
    fn metric_at(&self, p: &ContinuousPoint<D>) -> Result<MetricTensor<D>>;

    /// Whether `metric_at` is defined at `p`.
    fn is_defined_at(&self, p: &ContinuousPoint<D>) -> bool {
        self.metric_at(p).is_ok()
    }

    /// Finite-difference step (cm) suited to this field near `p`.
    fn derivative_step(&self, _p: &ContinuousPoint<D>) -> f64 {
        1.0
    }

    /// Short human-readable description, e.g. `schwarzschild(m=300000)`.
    fn describe(&self) -> String;
}

impl<const D: usize, F: MetricField<D> + ?Sized> MetricField<D> for &F {
    fn metric_at(&self, p: &ContinuousPoint<D>) -> Result<MetricTensor<D>> {
        (**self).metric_at(p)
    }
    fn is_defined_at(&self, p: &ContinuousPoint<D>) -> bool {
        (**self).is_defined_at(p)
    }
    fn derivative_step(&self, p: &ContinuousPoint<D>) -> f64 {
        (**self).derivative_step(p)
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_upper_mirrors_exactly() {
        let g = MetricTensor::from_upper([[1.0, 0.3, 0.1], [9.0, -2.0, 0.7], [9.0, 9.0, -3.0]]);
        assert_eq!(g.get(1, 0), 0.3);
        assert_eq!(g.get(2, 1), 0.7);
        assert!(MetricTensor::try_from_entries([[1.0, 0.5], [0.4, -1.0]]).is_err());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let g = MetricTensor::from_upper([[0.9, 0.0, 0.0], [0.0, -1.2, -0.05], [0.0, 0.0, -1.01]]);
        let inv = g.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p: f64 = (0..3).map(|k| g.get(i, k) * inv[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((p - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn singular_matrix_is_reported() {
        let g = MetricTensor::from_upper([[1.0, 1.0], [0.0, 1.0]]);
        assert!(matches!(g.inverse(), Err(GeodesicError::SingularMetricInversion { .. })));
        assert_eq!(g.determinant(), 0.0);
    }

    #[test]
    fn minkowski_quadratic_form() {
        let g = MetricTensor::<3>::minkowski();
        assert_eq!(g.quadratic(&Displacement::new([5.0, 3.0, 0.0])), 16.0);
        assert_eq!(g.determinant(), 1.0);
    }
}
