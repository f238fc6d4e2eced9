//! Electromagnetic fields from sampled potentials, the first-order
//! Maxwell residuals and the Riemann–Silberstein vector.

use num_complex::Complex64;
use serde::Serialize;

use super::grid::FieldGrid;
use super::lattice::{max_norm, Lattice};
use crate::error::{Error, Result};

fn zip3(
    a: &[Complex64],
    b: &[Complex64],
    f: impl Fn(Complex64, Complex64) -> Complex64,
) -> Vec<Complex64> {
    a.iter().zip(b).map(|(x, y)| f(*x, *y)).collect()
}

fn add(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    zip3(a, b, |x, y| x + y)
}

fn sub(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    zip3(a, b, |x, y| x - y)
}

/// `curl V` with `V = (names[0], names[1], names[2])`.
fn curl(grid: &FieldGrid, names: [&str; 3]) -> Result<[Vec<Complex64>; 3]> {
    grid.require(names)?;
    let d = |c: usize, axis: usize| grid.derivative(names[c], axis);
    Ok([
        sub(&d(2, 2)?, &d(1, 3)?),
        sub(&d(0, 3)?, &d(2, 1)?),
        sub(&d(1, 1)?, &d(0, 2)?),
    ])
}

fn div(grid: &FieldGrid, names: [&str; 3]) -> Result<Vec<Complex64>> {
    grid.require(names)?;
    let mut out = grid.derivative(names[0], 1)?;
    out = add(&out, &grid.derivative(names[1], 2)?);
    Ok(add(&out, &grid.derivative(names[2], 3)?))
}

/// `Eⁱ = ∂⁰Aⁱ + ∂ⁱA⁰`, `H = curl A` and the Lorentz scalar
/// `L = ∂⁰A⁰ + div A`, as components `E1..E3`, `H1..H3`, `L`.
pub fn em_from_potential(grid: &FieldGrid) -> Result<FieldGrid> {
    grid.require(["A0", "A1", "A2", "A3"])?;
    let mut out = FieldGrid::new(grid.lattice.clone());
    for i in 1..=3 {
        let a_i = format!("A{i}");
        out.insert(
            &format!("E{i}"),
            add(&grid.derivative(&a_i, 0)?, &grid.derivative("A0", i)?),
        )?;
    }
    let h = curl(grid, ["A1", "A2", "A3"])?;
    for (i, c) in h.into_iter().enumerate() {
        out.insert(&format!("H{}", i + 1), c)?;
    }
    out.insert(
        "L",
        add(&grid.derivative("A0", 0)?, &div(grid, ["A1", "A2", "A3"])?),
    )?;
    Ok(out)
}

/// Residual fields of `div E = ρ`, `curl H − ∂⁰E = j`, `curl E + ∂⁰H = 0`
/// and `div H = 0`. Absent `rho`/`j1..j3` are taken as zero.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxwellResiduals {
    pub div_e: Vec<Complex64>,
    pub curl_h: [Vec<Complex64>; 3],
    pub curl_e: [Vec<Complex64>; 3],
    pub div_h: Vec<Complex64>,
}

/// Max-norm of each residual; the curl entries take the worst component.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MaxwellSummary {
    #[serde(rename = "divE")]
    pub div_e: f64,
    #[serde(rename = "curlH")]
    pub curl_h: f64,
    #[serde(rename = "curlE")]
    pub curl_e: f64,
    #[serde(rename = "divH")]
    pub div_h: f64,
}

impl MaxwellSummary {
    pub fn max(&self) -> f64 {
        self.div_e.max(self.curl_h).max(self.curl_e).max(self.div_h)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.div_e, self.curl_h, self.curl_e, self.div_h]
    }
}

pub const MAXWELL_LABELS: [&str; 4] = ["divE", "curlH", "curlE", "divH"];

pub fn maxwell_residuals(grid: &FieldGrid) -> Result<MaxwellResiduals> {
    grid.require(["E1", "E2", "E3", "H1", "H2", "H3"])?;
    let div_e = sub(&div(grid, ["E1", "E2", "E3"])?, &grid.get_or_zero("rho"));
    let ch = curl(grid, ["H1", "H2", "H3"])?;
    let ce = curl(grid, ["E1", "E2", "E3"])?;
    let mut curl_h: [Vec<Complex64>; 3] = Default::default();
    let mut curl_e: [Vec<Complex64>; 3] = Default::default();
    for i in 0..3 {
        let n = i + 1;
        curl_h[i] = sub(
            &sub(&ch[i], &grid.derivative(&format!("E{n}"), 0)?),
            &grid.get_or_zero(&format!("j{n}")),
        );
        curl_e[i] = add(&ce[i], &grid.derivative(&format!("H{n}"), 0)?);
    }
    let div_h = div(grid, ["H1", "H2", "H3"])?;
    Ok(MaxwellResiduals {
        div_e,
        curl_h,
        curl_e,
        div_h,
    })
}

impl MaxwellResiduals {
    pub fn summary(&self) -> MaxwellSummary {
        let worst = |v: &[Vec<Complex64>; 3]| v.iter().map(|c| max_norm(c)).fold(0.0, f64::max);
        MaxwellSummary {
            div_e: max_norm(&self.div_e),
            curl_h: worst(&self.curl_h),
            curl_e: worst(&self.curl_e),
            div_h: max_norm(&self.div_h),
        }
    }

    pub fn to_grid(&self, lattice: &Lattice) -> Result<FieldGrid> {
        let mut g = FieldGrid::new(lattice.clone());
        g.insert("divE", self.div_e.clone())?;
        for i in 0..3 {
            g.insert(&format!("curlH{}", i + 1), self.curl_h[i].clone())?;
        }
        for i in 0..3 {
            g.insert(&format!("curlE{}", i + 1), self.curl_e[i].clone())?;
        }
        g.insert("divH", self.div_h.clone())?;
        Ok(g)
    }
}

/// `F = E + iH` sampled on a lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct RsField {
    pub lattice: Lattice,
    pub f: [Vec<Complex64>; 3],
}

pub fn riemann_silberstein(grid: &FieldGrid) -> Result<RsField> {
    let [e1, e2, e3, h1, h2, h3] = grid.require(["E1", "E2", "E3", "H1", "H2", "H3"])?;
    let i = Complex64::new(0.0, 1.0);
    let f = [(e1, h1), (e2, h2), (e3, h3)].map(|(e, h)| zip3(e, h, |a, b| a + i * b));
    Ok(RsField {
        lattice: grid.lattice.clone(),
        f,
    })
}

impl RsField {
    pub fn new(lattice: Lattice, f: [Vec<Complex64>; 3]) -> Result<Self> {
        if f.iter().any(|c| c.len() != lattice.len()) {
            return Err(Error::Grid("RS components do not match the lattice".into()));
        }
        Ok(Self { lattice, f })
    }

    /// `E = Re F`, `H = Im F`.
    pub fn to_em(&self) -> Result<FieldGrid> {
        let mut g = FieldGrid::new(self.lattice.clone());
        for (i, c) in self.f.iter().enumerate() {
            g.insert(
                &format!("E{}", i + 1),
                c.iter().map(|z| Complex64::new(z.re, 0.0)).collect(),
            )?;
        }
        for (i, c) in self.f.iter().enumerate() {
            g.insert(
                &format!("H{}", i + 1),
                c.iter().map(|z| Complex64::new(z.im, 0.0)).collect(),
            )?;
        }
        Ok(g)
    }

    /// `E + iH ↦ E − iH`, the reversion image.
    pub fn conjugated(&self) -> Self {
        Self {
            lattice: self.lattice.clone(),
            f: self
                .f
                .clone()
                .map(|c| c.into_iter().map(|z| z.conj()).collect()),
        }
    }

    pub fn at(&self, idx: usize) -> [Complex64; 3] {
        [self.f[0][idx], self.f[1][idx], self.f[2][idx]]
    }
}

/// Column spinor `(0, F₁, F₂, F₃)` carried by the minimal left ideal.
pub fn field_spinor<C: Clone + num_traits::Zero>(f: &[C; 3]) -> [C; 4] {
    [C::zero(), f[0].clone(), f[1].clone(), f[2].clone()]
}

/// The reversed spinor `(0, F₁*, F₂*, F₃*)`.
pub fn field_spinor_conjugate(f: &[Complex64; 3]) -> [Complex64; 4] {
    field_spinor(&f.map(|z| z.conj()))
}
