//! Analytic massless plane waves used as ground truth for the stencils.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::grid::FieldGrid;
use super::lattice::Lattice;
use super::spinor::{CMatrix, Chirality, MatrixField};
use crate::algebra::coeff::rational;
use crate::error::{Error, Result};
use crate::matrix::{null_kernel, sym_spintensor, DhSpinor};

type V3 = [f64; 3];

fn dot(a: &V3, b: &V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalized(a: &V3) -> V3 {
    let n = dot(a, a).sqrt();
    a.map(|x| x / n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Helicity {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "+1" => Ok(Helicity::Plus),
            "-" | "minus" | "-1" => Ok(Helicity::Minus),
            _ => Err(Error::Parse(format!("helicity must be + or -, got {s:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Helicity::Plus => "+",
            Helicity::Minus => "-",
        }
    }
}

/// Right-handed frame `(e₁, e₂)` transverse to `k` with `e₁ × e₂ = k̂`;
/// along `z` it is `(x̂, ŷ)`.
pub fn transverse_frame(k: &V3) -> Result<(V3, V3)> {
    if dot(k, k) == 0.0 || k.iter().any(|x| !x.is_finite()) {
        return Err(Error::PlaneWave(
            "wavevector must be nonzero and finite".into(),
        ));
    }
    let n = normalized(k);
    let reference = if n[1].abs() > 0.9 {
        [0.0, 0.0, 1.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let e1 = normalized(&cross(&reference, &n));
    let e2 = cross(&n, &e1);
    Ok((e1, e2))
}

/// Circular polarization `(e₁ + i h e₂)/√2`.
pub fn circular_polarization(k: &V3, helicity: Helicity) -> Result<[Complex64; 3]> {
    let (e1, e2) = transverse_frame(k)?;
    let h = helicity.sign();
    Ok(std::array::from_fn(|i| {
        Complex64::new(e1[i], h * e2[i]) * FRAC_1_SQRT_2
    }))
}

/// A massless plane wave `Re(a ε e^{i(k·x − ωt)})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveSpec {
    pub k: V3,
    pub omega: f64,
    pub amplitude: Complex64,
    pub polarization: [Complex64; 3],
    pub helicity: Option<Helicity>,
}

impl PlaneWaveSpec {
    /// Circularly polarized wave with `ω = |k|`.
    pub fn circular(k: V3, helicity: Helicity, amplitude: Complex64) -> Result<Self> {
        let polarization = circular_polarization(&k, helicity)?;
        Ok(Self {
            k,
            omega: dot(&k, &k).sqrt(),
            amplitude,
            polarization,
            helicity: Some(helicity),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let k2 = dot(&self.k, &self.k);
        if k2 == 0.0 {
            return Err(Error::PlaneWave("|k| = 0 has no massless mode".into()));
        }
        if (self.omega * self.omega - k2).abs() > 1e-12 * k2 {
            return Err(Error::PlaneWave(format!(
                "omega^2 = {} differs from k.k = {k2}",
                self.omega * self.omega
            )));
        }
        let along: Complex64 = (0..3).map(|i| self.polarization[i] * self.k[i]).sum();
        let size = self
            .polarization
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if along.norm() > 1e-12 * size * k2.sqrt() {
            return Err(Error::PlaneWave(
                "polarization is not transverse to k".into(),
            ));
        }
        Ok(())
    }

    pub fn phase(&self, p: &[f64; 4]) -> f64 {
        self.k[0] * p[1] + self.k[1] * p[2] + self.k[2] * p[3] - self.omega * p[0]
    }

    /// `E(x)` and `H(x) = k̂ × E(x)` at a point.
    pub fn em_at(&self, p: &[f64; 4]) -> (V3, V3) {
        let z = self.amplitude * Complex64::from_polar(1.0, self.phase(p));
        let e: V3 = std::array::from_fn(|i| (z * self.polarization[i]).re);
        (e, cross(&normalized(&self.k), &e))
    }

    /// Complex `F = E + iH` at a point.
    pub fn rs_at(&self, p: &[f64; 4]) -> [Complex64; 3] {
        let (e, h) = self.em_at(p);
        std::array::from_fn(|i| Complex64::new(e[i], h[i]))
    }
}

/// Samples `E1..E3`, `H1..H3` of a validated wave.
pub fn plane_wave_em(spec: &PlaneWaveSpec, lattice: &Lattice) -> Result<FieldGrid> {
    spec.validate()?;
    let mut g = FieldGrid::new(lattice.clone());
    for i in 0..3 {
        g.insert_fn(&format!("E{}", i + 1), |p| {
            Complex64::new(spec.em_at(&p).0[i], 0.0)
        })?;
    }
    for i in 0..3 {
        g.insert_fn(&format!("H{}", i + 1), |p| {
            Complex64::new(spec.em_at(&p).1[i], 0.0)
        })?;
    }
    Ok(g)
}

/// Unit eigenvector of `σ·n̂` with eigenvalue `sign`.
pub fn helicity_eigenspinor(n: &V3, sign: f64) -> [Complex64; 2] {
    let n = normalized(n);
    let i = Complex64::new(0.0, 1.0);
    // columns of (1 + s σ·n̂)/2
    let cols = [
        [
            Complex64::new(1.0 + sign * n[2], 0.0),
            sign * (n[0] + i * n[1]),
        ],
        [
            sign * (n[0] - i * n[1]),
            Complex64::new(1.0 - sign * n[2], 0.0),
        ],
    ];
    let norm = |c: &[Complex64; 2]| (c[0].norm_sqr() + c[1].norm_sqr()).sqrt();
    let best = if norm(&cols[0]) >= norm(&cols[1]) {
        cols[0]
    } else {
        cols[1]
    };
    let s = norm(&best);
    [best[0] / s, best[1] / s]
}

/// `ξ = u e^{i(k·x − ωt)}` solving `(∂₀ ∓ σ·∂)ξ = 0`. Chirality `Plus`
/// needs `σ·k̂u = −u`, `Minus` needs `σ·k̂u = +u`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylPlaneWave {
    pub k: V3,
    pub omega: f64,
    pub u: [Complex64; 2],
}

impl WeylPlaneWave {
    pub fn new(k: V3, chirality: Chirality) -> Result<Self> {
        if dot(&k, &k) == 0.0 {
            return Err(Error::PlaneWave("|k| = 0 has no massless mode".into()));
        }
        let sign = match chirality {
            Chirality::Plus => -1.0,
            Chirality::Minus => 1.0,
        };
        Ok(Self {
            k,
            omega: dot(&k, &k).sqrt(),
            u: helicity_eigenspinor(&k, sign),
        })
    }

    pub fn at(&self, p: &[f64; 4]) -> [Complex64; 2] {
        let theta = self.k[0] * p[1] + self.k[1] * p[2] + self.k[2] * p[3] - self.omega * p[0];
        let z = Complex64::from_polar(1.0, theta);
        [self.u[0] * z, self.u[1] * z]
    }

    pub fn sample(&self, lattice: &Lattice) -> Result<FieldGrid> {
        let mut g = FieldGrid::new(lattice.clone());
        g.insert_fn("xi0", |p| self.at(&p)[0])?;
        g.insert_fn("xi1", |p| self.at(&p)[1])?;
        Ok(g)
    }
}

/// `φ(x) = A cos θ + B sin θ` with `A`, `B` from the exact kernel of the
/// momentum symbol for an integer null direction `(ω; n)`, scaled so that
/// the physical wavevector is `scale·n`.
#[derive(Clone, Debug)]
pub struct DhNullMode {
    pub k: V3,
    pub omega: f64,
    pub a: CMatrix,
    pub b: CMatrix,
}

impl DhNullMode {
    pub fn new(omega: i64, n: [i64; 3], scale: f64) -> Result<Self> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::PlaneWave("scale must be positive".into()));
        }
        let q = |x: i64| rational(x, 1);
        let basis = null_kernel(&q(omega), &n.map(q))?;
        let to_f64 = |s: &DhSpinor<BigRational>| {
            DhSpinor::<f64>::from_array(s.to_array().map(|r| r.to_f64().unwrap_or(f64::NAN)))
        };
        let combine = |w: [f64; 4]| {
            let arrays: Vec<[f64; 8]> = basis.iter().map(|s| to_f64(s).to_array()).collect();
            DhSpinor::from_array(std::array::from_fn(|i| {
                (0..4).map(|j| w[j] * arrays[j][i]).sum()
            }))
            .matrix()
        };
        Ok(Self {
            k: n.map(|x| x as f64 * scale),
            omega: omega as f64 * scale,
            a: combine([1.0, 0.5, 0.0, -0.25]),
            b: combine([0.0, -0.75, 1.0, 0.5]),
        })
    }

    pub fn at(&self, p: &[f64; 4]) -> CMatrix {
        let theta = self.k[0] * p[1] + self.k[1] * p[2] + self.k[2] * p[3] - self.omega * p[0];
        let (c, s) = (
            Complex64::new(theta.cos(), 0.0),
            Complex64::new(theta.sin(), 0.0),
        );
        &self.a.scale(&c) + &self.b.scale(&s)
    }

    pub fn sample(&self, lattice: &Lattice) -> MatrixField {
        MatrixField::from_fn(lattice.clone(), |p| self.at(&p))
    }
}

/// Outcome of comparing a photon field spinor with `ξ ⊗ ξ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CompositeFit {
    pub constant: Complex64,
    pub max_relative_deviation: f64,
}

/// Fits `spinor ≈ c·(0, RS(ξ⊗ξ))` over sampled points by least squares
/// and reports the worst relative deviation.
pub fn fit_composite(spinors: &[[Complex64; 4]], xis: &[[Complex64; 2]]) -> CompositeFit {
    let pairs: Vec<([Complex64; 4], [Complex64; 4])> = spinors
        .iter()
        .zip(xis)
        .map(|(s, xi)| {
            let f = sym_spintensor(xi, xi).to_rs_vector();
            (*s, [Complex64::new(0.0, 0.0), f[0], f[1], f[2]])
        })
        .collect();
    let (mut num, mut den) = (Complex64::new(0.0, 0.0), 0.0);
    for (s, t) in &pairs {
        for i in 0..4 {
            num += t[i].conj() * s[i];
            den += t[i].norm_sqr();
        }
    }
    let constant = if den > 0.0 {
        num / den
    } else {
        Complex64::new(0.0, 0.0)
    };
    let max_relative_deviation = pairs
        .iter()
        .map(|(s, t)| {
            let scale = s
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max)
                .max(f64::MIN_POSITIVE);
            (0..4)
                .map(|i| (s[i] - constant * t[i]).norm())
                .fold(0.0, f64::max)
                / scale
        })
        .fold(0.0, f64::max);
    CompositeFit {
        constant,
        max_relative_deviation,
    }
}

/// The Weyl mode paired with an electromagnetic helicity. Positive
/// helicity lives in `F = E + iH` and pairs with the `Minus` chirality
/// spinor `u e^{iθ/2}`; negative helicity lives in `F* = E − iH` and pairs
/// with the `Plus` chirality spinor.
pub fn composite_partner(spec: &PlaneWaveSpec, helicity: Helicity) -> Result<WeylPlaneWave> {
    let half = spec.k.map(|x| x / 2.0);
    WeylPlaneWave::new(
        half,
        match helicity {
            Helicity::Plus => Chirality::Minus,
            Helicity::Minus => Chirality::Plus,
        },
    )
}

/// Observed order `log(e₁/e₂)/log(h₁/h₂)` between consecutive levels.
pub fn observed_orders(h: &[f64], err: &[f64]) -> Vec<f64> {
    h.windows(2)
        .zip(err.windows(2))
        .map(|(hw, ew)| (ew[0] / ew[1]).ln() / (hw[0] / hw[1]).ln())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::em::maxwell_residuals;
    use crate::field::spinor::{dh_residual, weyl_residual};
    use std::f64::consts::PI;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn polarization_along_z() {
        let p = circular_polarization(&[0.0, 0.0, 1.0], Helicity::Plus).unwrap();
        assert!((p[0] - one() * FRAC_1_SQRT_2).norm() < 1e-15);
        assert!((p[1] - Complex64::new(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
        let m = circular_polarization(&[0.0, 0.0, 1.0], Helicity::Minus).unwrap();
        assert!((m[1] - Complex64::new(0.0, -FRAC_1_SQRT_2)).norm() < 1e-15);
    }

    #[test]
    fn frames_are_right_handed_for_any_direction() {
        for k in [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [1.0, 2.0, 2.0],
            [-3.0, 0.5, 0.1],
            [0.0, 0.0, -2.0],
        ] {
            let (e1, e2) = transverse_frame(&k).unwrap();
            let n = normalized(&k);
            let c = cross(&e1, &e2);
            assert!((0..3).all(|i| (c[i] - n[i]).abs() < 1e-12), "{k:?}");
            assert!(dot(&e1, &n).abs() < 1e-12 && dot(&e2, &n).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(PlaneWaveSpec::circular([0.0; 3], Helicity::Plus, one()).is_err());
        let mut s = PlaneWaveSpec::circular([0.0, 0.0, 1.0], Helicity::Plus, one()).unwrap();
        s.omega = 2.0;
        assert!(s.validate().is_err());
        let mut s = PlaneWaveSpec::circular([0.0, 0.0, 1.0], Helicity::Plus, one()).unwrap();
        s.polarization = [one() * 0.0, one() * 0.0, one()];
        assert!(s.validate().is_err());
    }

    #[test]
    fn zero_amplitude_gives_zero_fields() {
        let s = PlaneWaveSpec::circular([0.0, 0.0, 1.0], Helicity::Minus, Complex64::new(0.0, 0.0))
            .unwrap();
        let l = Lattice::new([3, 3, 3, 3], [0.1; 4], [false; 4]).unwrap();
        let g = plane_wave_em(&s, &l).unwrap();
        assert!(g
            .names()
            .all(|n| g.get(n).unwrap().iter().all(|z| z.norm() == 0.0)));
    }

    #[test]
    fn rs_vector_carries_one_helicity() {
        let s = PlaneWaveSpec::circular([1.0, 2.0, 2.0], Helicity::Plus, Complex64::new(0.3, 0.4))
            .unwrap();
        let p = [0.2, 0.1, -0.3, 0.7];
        let f = s.rs_at(&p);
        let z = s.amplitude * Complex64::from_polar(1.0, s.phase(&p));
        for i in 0..3 {
            assert!((f[i] - z * s.polarization[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn periodic_wave_residuals_are_small() {
        let n = 16;
        let h = 1.0 / n as f64;
        let k = [0.0, 0.0, 2.0 * PI];
        let l = Lattice::new([5, 1, 1, n], [h, 1.0, 1.0, h], [false, false, false, true]).unwrap();
        let s = PlaneWaveSpec::circular(k, Helicity::Plus, one()).unwrap();
        let r = maxwell_residuals(&plane_wave_em(&s, &l).unwrap())
            .unwrap()
            .summary();
        assert!(r.max() < 0.1 * 2.0 * PI, "{r:?}");
        assert!(r.div_e < 1e-12 && r.div_h < 1e-12);
    }

    #[test]
    fn weyl_wave_chirality() {
        let n = 16;
        let h = 1.0 / n as f64;
        let l = Lattice::new([5, 1, 1, n], [h, 1.0, 1.0, h], [false, false, false, true]).unwrap();
        let k = [0.0, 0.0, 2.0 * PI];
        let right = WeylPlaneWave::new(k, Chirality::Plus).unwrap();
        let g = right.sample(&l).unwrap();
        let good = weyl_residual(&g, &["xi0", "xi1"], Chirality::Plus).unwrap();
        let bad = weyl_residual(&g, &["xi0", "xi1"], Chirality::Minus).unwrap();
        let norm =
            |r: &[Vec<Complex64>; 2]| r.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(norm(&good) < 0.2 * 2.0 * PI);
        // wrong chirality leaves a residual near 2ω|u|
        assert!((norm(&bad) - 2.0 * 2.0 * PI).abs() < 0.1 * 2.0 * 2.0 * PI);
    }

    #[test]
    fn null_mode_is_nearly_annihilated() {
        let n = 16;
        let h = 1.0 / n as f64;
        let mode = DhNullMode::new(3, [1, 2, 2], 2.0 * PI).unwrap();
        let l = Lattice::new([3, n, n, n], [h / 3.0, h, h, h], [false, true, true, true]).unwrap();
        let phi = mode.sample(&l);
        let r = dh_residual(&phi, 0.0).unwrap().max_norm();
        assert!(r < 0.2 * mode.omega * phi.max_norm(), "{r}");
    }

    #[test]
    fn orders() {
        let o = observed_orders(&[0.1, 0.05], &[4.0, 1.0]);
        assert!((o[0] - 2.0).abs() < 1e-12);
    }
}
