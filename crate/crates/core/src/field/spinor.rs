//! Weyl and Dirac–Hestenes residuals on sampled spinor fields.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::FieldGrid;
use super::lattice::{max_norm, Lattice};
use crate::error::{Error, Result};
use crate::matrix::{gamma21, helicity_projectors, DhSpinor, GammaBasis, Matrix, SplitOperators};

pub type CMatrix = Matrix<Complex64>;

/// Sign in `(∂₀ ∓ σ·∂)ξ`: `Plus` is the equation of `ψ₁..ψ₄`, `Minus`
/// that of `ψ₅..ψ₈`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    fn sign(self) -> f64 {
        match self {
            Chirality::Plus => -1.0,
            Chirality::Minus => 1.0,
        }
    }

    pub fn of_psi(index: usize) -> Self {
        if index < 4 {
            Chirality::Plus
        } else {
            Chirality::Minus
        }
    }
}

/// `(∂₀ ∓ σ·∂)ξ` for the two named components of a 2-spinor field.
pub fn weyl_residual(
    grid: &FieldGrid,
    names: &[&str],
    chirality: Chirality,
) -> Result<[Vec<Complex64>; 2]> {
    let [n0, n1] = names else {
        return Err(Error::Grid(format!(
            "a Weyl spinor has 2 components, got {}",
            names.len()
        )));
    };
    let [x0, x1] = grid.require([*n0, *n1])?;
    weyl_residual_arrays(&grid.lattice, [x0, x1], chirality)
}

pub fn weyl_residual_arrays(
    lattice: &Lattice,
    xi: [&[Complex64]; 2],
    chirality: Chirality,
) -> Result<[Vec<Complex64>; 2]> {
    let i = Complex64::new(0.0, 1.0);
    let d = |c: usize, axis: usize| lattice.derivative(xi[c], axis);
    let (d00, d01, d02, d03) = (d(0, 0)?, d(0, 1)?, d(0, 2)?, d(0, 3)?);
    let (d10, d11, d12, d13) = (d(1, 0)?, d(1, 1)?, d(1, 2)?, d(1, 3)?);
    let s = chirality.sign();
    let upper = (0..lattice.len())
        .map(|k| d00[k] + s * (d11[k] - i * d12[k] + d03[k]))
        .collect();
    let lower = (0..lattice.len())
        .map(|k| d10[k] + s * (d01[k] + i * d02[k] - d13[k]))
        .collect();
    Ok([upper, lower])
}

/// A 4×4 complex matrix at every lattice point, stored entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixField {
    pub lattice: Lattice,
    entries: Vec<Vec<Complex64>>,
}

impl MatrixField {
    pub fn from_points(lattice: Lattice, points: &[CMatrix]) -> Result<Self> {
        if points.len() != lattice.len() || points.iter().any(|m| (m.rows(), m.cols()) != (4, 4)) {
            return Err(Error::Grid(
                "expected one 4x4 matrix per lattice point".into(),
            ));
        }
        let entries = (0..16)
            .map(|e| points.iter().map(|m| *m.get(e / 4, e % 4)).collect())
            .collect();
        Ok(Self { lattice, entries })
    }

    pub fn from_fn(lattice: Lattice, f: impl Fn([f64; 4]) -> CMatrix + Sync) -> Self {
        let points: Vec<CMatrix> = (0..lattice.len())
            .into_par_iter()
            .map(|i| f(lattice.position(i)))
            .collect();
        Self::from_points(lattice, &points).expect("matrices sized by construction")
    }

    pub fn at(&self, idx: usize) -> CMatrix {
        CMatrix::from_fn(4, 4, |r, c| self.entries[4 * r + c][idx])
    }

    pub fn points(&self) -> Vec<CMatrix> {
        (0..self.lattice.len())
            .into_par_iter()
            .map(|i| self.at(i))
            .collect()
    }

    /// Applies `f` at every point.
    pub fn map(&self, f: impl Fn(&CMatrix) -> CMatrix + Sync + Send) -> Self {
        let points: Vec<CMatrix> = self.points().par_iter().map(f).collect();
        Self::from_points(self.lattice.clone(), &points).expect("same lattice")
    }

    pub fn derivative(&self, axis: usize) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| self.lattice.derivative(e, axis))
            .collect::<Result<_>>()?;
        Ok(Self {
            lattice: self.lattice.clone(),
            entries,
        })
    }

    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|e| max_norm(e)).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| (x - y).norm())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

fn basis_f64() -> (Vec<CMatrix>, CMatrix) {
    let g = GammaBasis::shared();
    (
        g.gamma.iter().map(CMatrix::from_exact).collect(),
        CMatrix::from_exact(&g.gamma[0]),
    )
}

/// `D X = γ₀∂₀X + Γ₁∂₁X + Γ₂∂₂X + Γ₃∂₃X`.
pub fn dirac_apply(x: &MatrixField) -> Result<MatrixField> {
    let (gammas, _) = basis_f64();
    let derivs: Vec<Vec<CMatrix>> = (0..4)
        .map(|mu| {
            if x.lattice.is_dynamic(mu) {
                x.derivative(mu).map(|d| d.points())
            } else {
                Ok(Vec::new())
            }
        })
        .collect::<Result<_>>()?;
    let points: Vec<CMatrix> = (0..x.lattice.len())
        .into_par_iter()
        .map(|i| {
            (0..4)
                .filter(|&mu| !derivs[mu].is_empty())
                .fold(CMatrix::zeros(4, 4), |acc, mu| {
                    &acc + &(&gammas[mu] * &derivs[mu][i])
                })
        })
        .collect();
    MatrixField::from_points(x.lattice.clone(), &points)
}

/// `D φ γ₂γ₁ − m φ γ₀` for a field of Dirac–Hestenes matrices.
pub fn dh_residual(phi: &MatrixField, mass: f64) -> Result<MatrixField> {
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(Error::Grid(format!(
            "mass must be non-negative, got {mass}"
        )));
    }
    let points = phi.points();
    if points
        .par_iter()
        .any(|m| DhSpinor::<f64>::from_matrix(m).is_err())
    {
        return Err(Error::NotDiracHestenesForm);
    }
    let g21 = gamma21::<f64>();
    let (_, g0) = basis_f64();
    let d = dirac_apply(phi)?;
    let m = Complex64::new(mass, 0.0);
    let out: Vec<CMatrix> = (0..phi.lattice.len())
        .into_par_iter()
        .map(|i| &(&d.at(i) * &g21) - &(&points[i] * &g0).scale(&m))
        .collect();
    MatrixField::from_points(phi.lattice.clone(), &out)
}

/// `max ‖D(P±X) − P∓D(X)‖` over the lattice and both signs.
pub fn chirality_identity_defect(x: &MatrixField) -> Result<f64> {
    let (p, m) = helicity_projectors();
    let (p, m) = (CMatrix::from_exact(&p), CMatrix::from_exact(&m));
    let dx = dirac_apply(x)?;
    let mut worst: f64 = 0.0;
    for (a, b) in [(&p, &m), (&m, &p)] {
        let lhs = dirac_apply(&x.map(|v| a * v))?;
        let rhs = dx.map(|v| b * v);
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    Ok(worst)
}

/// The eight Weyl spinor fields `ψ₁..ψ₈` of a Dirac–Hestenes field.
pub fn split_field(phi: &MatrixField) -> Result<[[Vec<Complex64>; 2]; 8]> {
    let ops = SplitOperators::<f64>::new();
    let splits = phi
        .points()
        .par_iter()
        .map(|m| ops.split(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(std::array::from_fn(|k| {
        std::array::from_fn(|r| splits.iter().map(|s| s.psi[k][r]).collect())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DhSpinor;

    fn lattice() -> Lattice {
        Lattice::new([4, 5, 5, 5], [0.1, 0.2, 0.2, 0.2], [false; 4]).unwrap()
    }

    #[test]
    fn constant_spinor_has_zero_weyl_residual() {
        let mut g = FieldGrid::new(lattice());
        g.insert_fn("xi0", |_| Complex64::new(1.0, 2.0)).unwrap();
        g.insert_fn("xi1", |_| Complex64::new(-0.5, 0.0)).unwrap();
        for c in [Chirality::Plus, Chirality::Minus] {
            let r = weyl_residual(&g, &["xi0", "xi1"], c).unwrap();
            assert_eq!(max_norm(&r[0]).max(max_norm(&r[1])), 0.0);
        }
        assert!(weyl_residual(&g, &["xi0"], Chirality::Plus).is_err());
    }

    #[test]
    fn linear_spinor_residual_matches_hand_expansion() {
        // ξ = (t + x, iy) has σ·∂ξ = (1, 1) and ∂₀ξ = (1, 0)
        let mut g = FieldGrid::new(lattice());
        g.insert_fn("a", |p| Complex64::new(p[0] + p[1], 0.0))
            .unwrap();
        g.insert_fn("b", |p| Complex64::new(0.0, p[2])).unwrap();
        let r = weyl_residual(&g, &["a", "b"], Chirality::Plus).unwrap();
        assert!(r[0].iter().all(|z| z.norm() < 1e-12));
        assert!(r[1]
            .iter()
            .all(|z| (z - Complex64::new(-1.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn constant_dh_field_is_a_solution() {
        let s = DhSpinor::<f64>::from_array([1.0, 0.5, -0.25, 2.0, 0.0, 1.5, -1.0, 0.75]);
        let f = MatrixField::from_fn(lattice(), move |_| s.matrix());
        assert_eq!(dh_residual(&f, 0.0).unwrap().max_norm(), 0.0);
        assert!(dh_residual(&f, -1.0).is_err());
        let bad = MatrixField::from_fn(lattice(), |_| {
            CMatrix::from_exact(&GammaBasis::new().gamma[1])
        });
        assert_eq!(
            dh_residual(&bad, 0.0).unwrap_err(),
            Error::NotDiracHestenesForm
        );
    }

    #[test]
    fn massive_term_on_constant_field() {
        let s = DhSpinor::<f64>::from_array([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let f = MatrixField::from_fn(lattice(), move |_| s.matrix());
        let r = dh_residual(&f, 2.0).unwrap();
        // −m·I·γ₀ = −2γ₀
        assert!((r.max_norm() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn chirality_identity_on_arbitrary_field() {
        let f = MatrixField::from_fn(lattice(), |p| {
            CMatrix::from_fn(4, 4, |r, c| {
                Complex64::new(
                    (p[0] + r as f64 * p[1]).sin(),
                    (c as f64 * p[2] - p[3]).cos(),
                )
            })
        });
        assert!(chirality_identity_defect(&f).unwrap() < 1e-12);
    }
}
