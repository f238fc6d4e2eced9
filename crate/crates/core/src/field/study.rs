//! Refinement studies: residual max-norms of analytic modes on a sequence
//! of lattices, with observed convergence orders.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::em::{field_spinor, field_spinor_conjugate, maxwell_residuals};
use super::lattice::{max_norm, Lattice};
use super::plane::{
    composite_partner, fit_composite, observed_orders, plane_wave_em, CompositeFit, DhNullMode,
    Helicity, PlaneWaveSpec, WeylPlaneWave,
};
use super::spinor::{
    dh_residual, split_field, weyl_residual, weyl_residual_arrays, CMatrix, Chirality, MatrixField,
};
use crate::error::{Error, Result};
use crate::matrix::{null_mode_from, DhSpinor, GammaBasis};

/// Residuals below this are treated as exactly zero and carry no order.
pub const EXACT_ZERO: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StudyRow {
    pub points: usize,
    pub h: f64,
    pub residuals: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Study {
    pub labels: Vec<String>,
    pub rows: Vec<StudyRow>,
}

impl Study {
    /// Orders between consecutive rows per label; `None` where either
    /// residual is exactly zero.
    pub fn orders(&self) -> Vec<Vec<Option<f64>>> {
        (0..self.labels.len())
            .map(|c| {
                let h: Vec<f64> = self.rows.iter().map(|r| r.h).collect();
                let e: Vec<f64> = self.rows.iter().map(|r| r.residuals[c]).collect();
                observed_orders(&h, &e)
                    .into_iter()
                    .enumerate()
                    .map(|(i, o)| (e[i] > EXACT_ZERO && e[i + 1] > EXACT_ZERO).then_some(o))
                    .collect()
            })
            .collect()
    }

    /// Whether every label either stays exactly zero or converges with the
    /// expected order within `tol` at every refinement.
    pub fn converges(&self, order: f64, tol: f64) -> bool {
        let orders = self.orders();
        orders.iter().enumerate().all(|(c, os)| {
            let all_zero = self.rows.iter().all(|r| r.residuals[c] <= EXACT_ZERO);
            all_zero
                || (!os.is_empty()
                    && os
                        .iter()
                        .all(|o| o.is_some_and(|o| (o - order).abs() <= tol)))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "labels": self.labels, "rows": self.rows, "orders": self.orders() })
    }
}

/// Unit periodic cube with `n` points per side and a short open time axis
/// of `n/4 + 1` samples, spaced so the temporal phase step matches a unit
/// spatial one.
pub fn periodic_cube(n: usize, omega_over_2pi: f64) -> Result<Lattice> {
    let h = 1.0 / n as f64;
    let ht = h / omega_over_2pi;
    Lattice::new(
        [n / 4 + 1, n, n, n],
        [ht, h, h, h],
        [false, true, true, true],
    )
}

/// Maxwell residuals of a circular plane wave with `k = 2π·n` on periodic cubes.
pub fn maxwell_study(direction: [i64; 3], helicity: Helicity, levels: &[usize]) -> Result<Study> {
    let k = direction.map(|x| 2.0 * PI * x as f64);
    let spec = PlaneWaveSpec::circular(k, helicity, Complex64::new(1.0, 0.0))?;
    let mut rows = Vec::new();
    for &n in levels {
        let lattice = periodic_cube(n, spec.omega / (2.0 * PI))?;
        let s = maxwell_residuals(&plane_wave_em(&spec, &lattice)?)?.summary();
        rows.push(StudyRow {
            points: n,
            h: 1.0 / n as f64,
            residuals: s.as_array().to_vec(),
        });
    }
    Ok(Study {
        labels: super::em::MAXWELL_LABELS
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows,
    })
}

fn psi_labels() -> Vec<String> {
    let mut v = vec!["dh".to_string()];
    v.extend((1..=8).map(|i| format!("psi{i}")));
    v
}

fn dh_and_weyl(phi: &MatrixField) -> Result<Vec<f64>> {
    let mut out = vec![dh_residual(phi, 0.0)?.max_norm()];
    for (j, psi) in split_field(phi)?.iter().enumerate() {
        let r = weyl_residual_arrays(&phi.lattice, [&psi[0], &psi[1]], Chirality::of_psi(j))?;
        out.push(max_norm(&r[0]).max(max_norm(&r[1])));
    }
    Ok(out)
}

/// Massless Dirac–Hestenes residual of an exact null mode and the Weyl
/// residuals of its eight split spinors, on periodic cubes.
pub fn dh_study(omega: i64, direction: [i64; 3], levels: &[usize]) -> Result<Study> {
    let mode = DhNullMode::new(omega, direction, 2.0 * PI)?;
    let mut rows = Vec::new();
    for &n in levels {
        let phi = mode.sample(&periodic_cube(n, omega as f64)?);
        rows.push(StudyRow {
            points: n,
            h: 1.0 / n as f64,
            residuals: dh_and_weyl(&phi)?,
        });
    }
    Ok(Study {
        labels: psi_labels(),
        rows,
    })
}

/// Null mode for an arbitrary real wavevector via `(1 + γ₀ k̂·Γ)B`.
fn closed_form_mode(k: [f64; 3]) -> Result<DhNullMode> {
    let omega = k.iter().map(|x| x * x).sum::<f64>().sqrt();
    if omega == 0.0 {
        return Err(Error::PlaneWave("|k| = 0 has no massless mode".into()));
    }
    let n = k.map(|x| x / omega);
    let a = null_mode_from(
        &n,
        &DhSpinor::from_array([1.0, 0.5, 0.0, -0.25, 0.3, 0.0, 0.7, 0.1]),
    )?;
    let b = null_mode_from(
        &n,
        &DhSpinor::from_array([0.0, -0.75, 1.0, 0.5, 0.0, 0.2, -0.4, 0.6]),
    )?;
    Ok(DhNullMode {
        k,
        omega,
        a: a.matrix(),
        b: b.matrix(),
    })
}

/// The command-line study: open boxes of `4·2^l + 1` points per axis with
/// spacing `h/2^l`, evaluating the Maxwell residuals of the plane wave, the
/// Weyl residual of the matching mode and the Dirac–Hestenes residual.
pub fn wave_study(k: [f64; 3], helicity: Helicity, h: f64, refine: usize) -> Result<Study> {
    if refine == 0 {
        return Err(Error::Grid("refine must be at least 1".into()));
    }
    let spec = PlaneWaveSpec::circular(k, helicity, Complex64::new(1.0, 0.0))?;
    let chirality = match helicity {
        Helicity::Plus => Chirality::Minus,
        Helicity::Minus => Chirality::Plus,
    };
    let weyl = WeylPlaneWave::new(k, chirality)?;
    let mode = closed_form_mode(k)?;
    let mut rows = Vec::new();
    for level in 0..refine {
        let n = 4 * (1 << level) + 1;
        let step = h / (1 << level) as f64;
        let lattice = Lattice::new([n; 4], [step; 4], [false; 4])?;
        let mut residuals = maxwell_residuals(&plane_wave_em(&spec, &lattice)?)?
            .summary()
            .as_array()
            .to_vec();
        let w = weyl_residual(&weyl.sample(&lattice)?, &["xi0", "xi1"], chirality)?;
        residuals.push(max_norm(&w[0]).max(max_norm(&w[1])));
        residuals.push(dh_residual(&mode.sample(&lattice), 0.0)?.max_norm());
        rows.push(StudyRow {
            points: n,
            h: step,
            residuals,
        });
    }
    let mut labels: Vec<String> = super::em::MAXWELL_LABELS
        .iter()
        .map(|s| s.to_string())
        .collect();
    labels.push("weyl".into());
    labels.push("dh".into());
    Ok(Study { labels, rows })
}

/// Compares the field spinor of a circular plane wave with `ξ ⊗ ξ` of its
/// half-momentum Weyl partner at `samples` pseudo-random spacetime points.
pub fn composite_check(k: [f64; 3], helicity: Helicity, samples: usize) -> Result<CompositeFit> {
    let spec = PlaneWaveSpec::circular(k, helicity, Complex64::new(0.8, -0.3))?;
    let partner = composite_partner(&spec, helicity)?;
    let (mut spinors, mut xis) = (Vec::new(), Vec::new());
    for j in 0..samples {
        let t = j as f64;
        let p = [
            0.37 * t,
            (1.3 * t).sin(),
            (0.7 * t).cos() * 2.0,
            0.11 * t * t % 3.0,
        ];
        let f = spec.rs_at(&p);
        spinors.push(match helicity {
            Helicity::Plus => field_spinor(&f),
            Helicity::Minus => field_spinor_conjugate(&f),
        });
        xis.push(partner.at(&p));
    }
    Ok(fit_composite(&spinors, &xis))
}

/// A field of the γ basis images, used to probe operator identities.
pub fn probe_field(lattice: &Lattice) -> MatrixField {
    let g = GammaBasis::shared();
    let g0 = CMatrix::from_exact(&g.gamma[0]);
    let g5 = CMatrix::from_exact(&g.gamma5);
    MatrixField::from_fn(lattice.clone(), move |p| {
        let a = Complex64::new((2.0 * PI * p[1]).sin(), (2.0 * PI * (p[2] + p[0])).cos());
        let b = Complex64::new((2.0 * PI * p[3]).cos(), 0.5);
        &g0.scale(&a) + &g5.scale(&b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_aligned_maxwell_study() {
        let s = maxwell_study([0, 0, 1], Helicity::Plus, &[8, 16]).unwrap();
        let o = s.orders();
        // divergence terms vanish identically along an axis
        assert!(o[0].iter().all(Option::is_none));
        assert!(s.rows.iter().all(|r| r.residuals[0] <= EXACT_ZERO));
        assert!(o[1][0].unwrap() > 1.5);
    }

    #[test]
    fn wave_single_level_has_no_orders() {
        let s = wave_study([0.0, 0.0, 1.0], Helicity::Plus, 0.25, 1).unwrap();
        assert_eq!(s.rows.len(), 1);
        assert!(s.orders().iter().all(Vec::is_empty));
        assert!(wave_study([0.0; 3], Helicity::Plus, 0.25, 2).is_err());
        assert!(wave_study([0.0, 0.0, 1.0], Helicity::Plus, 0.25, 0).is_err());
    }

    #[test]
    fn composite_fits_both_helicities() {
        for h in [Helicity::Plus, Helicity::Minus] {
            let fit = composite_check([1.0, 2.0, -2.0], h, 10).unwrap();
            assert!(fit.max_relative_deviation < 1e-10, "{fit:?}");
            assert!(fit.constant.norm() > 1e-3);
        }
    }

    #[test]
    fn study_orders_are_about_two() {
        let s = dh_study(3, [1, 2, 2], &[8, 16]).unwrap();
        for os in s.orders() {
            if let Some(o) = os[0] {
                assert!((o - 2.0).abs() < 0.6, "{o}");
            }
        }
    }
}
