//! Regular 4D sample lattices `(t, x, y, z)` and their difference stencils.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const AXES: [&str; 4] = ["t", "x", "y", "z"];

/// Row-major lattice with the time axis slowest. An axis of extent 1 is
/// static: derivatives along it vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct Lattice {
    pub extent: [usize; 4],
    pub spacing: [f64; 4],
    pub periodic: [bool; 4],
}

impl Lattice {
    pub fn new(extent: [usize; 4], spacing: [f64; 4], periodic: [bool; 4]) -> Result<Self> {
        if extent.contains(&0) {
            return Err(Error::Grid(format!(
                "extent must be positive, got {extent:?}"
            )));
        }
        if spacing.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
            return Err(Error::Grid(format!(
                "spacing must be positive, got {spacing:?}"
            )));
        }
        Ok(Self {
            extent,
            spacing,
            periodic,
        })
    }

    /// Spatial lattice `(x, y, z)` with a static time axis.
    pub fn spatial(extent: [usize; 3], spacing: [f64; 3], periodic: bool) -> Result<Self> {
        Self::new(
            [1, extent[0], extent[1], extent[2]],
            [1.0, spacing[0], spacing[1], spacing[2]],
            [false, periodic, periodic, periodic],
        )
    }

    pub fn len(&self) -> usize {
        self.extent.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn strides(&self) -> [usize; 4] {
        let e = self.extent;
        [e[1] * e[2] * e[3], e[2] * e[3], e[3], 1]
    }

    pub fn coords(&self, idx: usize) -> [usize; 4] {
        let s = self.strides();
        std::array::from_fn(|a| (idx / s[a]) % self.extent[a])
    }

    pub fn position(&self, idx: usize) -> [f64; 4] {
        let c = self.coords(idx);
        std::array::from_fn(|a| c[a] as f64 * self.spacing[a])
    }

    pub fn sample(&self, f: impl Fn([f64; 4]) -> Complex64 + Sync) -> Vec<Complex64> {
        (0..self.len())
            .into_par_iter()
            .map(|i| f(self.position(i)))
            .collect()
    }

    /// Whether `∂/∂x^axis` is evaluated (false for static axes).
    pub fn is_dynamic(&self, axis: usize) -> bool {
        self.extent[axis] > 1
    }

    /// Second-order difference along one axis: central in the interior,
    /// wrapped on periodic axes, one-sided three-point at open ends.
    pub fn derivative(&self, f: &[Complex64], axis: usize) -> Result<Vec<Complex64>> {
        if f.len() != self.len() {
            return Err(Error::Grid(format!(
                "array of {} samples on a lattice of {}",
                f.len(),
                self.len()
            )));
        }
        let n = self.extent[axis];
        if n == 1 {
            return Ok(vec![Complex64::new(0.0, 0.0); f.len()]);
        }
        if n < 3 {
            return Err(Error::Grid(format!(
                "axis {} needs at least 3 samples, has {n}",
                AXES[axis]
            )));
        }
        let stride = self.strides()[axis];
        let inv = 1.0 / (2.0 * self.spacing[axis]);
        let periodic = self.periodic[axis];
        Ok((0..f.len())
            .into_par_iter()
            .map(|i| {
                let c = (i / stride) % n;
                let at = |k: usize| f[i - c * stride + k * stride];
                let d = if periodic {
                    at((c + 1) % n) - at((c + n - 1) % n)
                } else if c == 0 {
                    -3.0 * at(0) + 4.0 * at(1) - at(2)
                } else if c == n - 1 {
                    3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)
                } else {
                    at(c + 1) - at(c - 1)
                };
                d * inv
            })
            .collect())
    }
}

pub fn max_norm(f: &[Complex64]) -> f64 {
    f.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
