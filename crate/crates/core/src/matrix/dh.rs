//! Dirac–Hestenes spinors: the even element
//! `a⁰ + a⁰¹γ₀₁ + a⁰²γ₀₂ + a⁰³γ₀₃ + a¹²γ₁₂ + a¹³γ₁₃ + a²³γ₂₃ + a⁰¹²³γ₀₁₂₃`
//! of `Cl(1,3)` and its closed 4×4 matrix form.

use num_complex::Complex;
use num_rational::BigRational;
use rand::Rng;

use super::gamma::{helicity_projectors, GammaBasis};
use super::mat::{Matrix, ReprReal};
use crate::algebra::coeff::{exact_ratio, rational};
use crate::algebra::{Blade, Multivector, Signature};
use crate::error::{Error, Result};

/// Eight real coefficients of the even subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct DhSpinor<R = BigRational> {
    pub a0: R,
    pub a01: R,
    pub a02: R,
    pub a03: R,
    pub a12: R,
    pub a13: R,
    pub a23: R,
    pub a0123: R,
}

/// Blade of each coefficient in `Cl(1,3)` (generator 1 is `γ₀`).
pub const DH_BLADES: [&[usize]; 8] = [
    &[],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[2, 3],
    &[2, 4],
    &[3, 4],
    &[1, 2, 3, 4],
];

impl<R: ReprReal> DhSpinor<R> {
    pub fn from_array(a: [R; 8]) -> Self {
        let [a0, a01, a02, a03, a12, a13, a23, a0123] = a;
        Self {
            a0,
            a01,
            a02,
            a03,
            a12,
            a13,
            a23,
            a0123,
        }
    }

    pub fn to_array(&self) -> [R; 8] {
        [
            self.a0.clone(),
            self.a01.clone(),
            self.a02.clone(),
            self.a03.clone(),
            self.a12.clone(),
            self.a13.clone(),
            self.a23.clone(),
            self.a0123.clone(),
        ]
    }

    /// `φ₁ = a⁰ − ia¹²`, `φ₂ = −a¹³ − ia²³`, `φ₃ = a⁰³ − ia⁰¹²³`, `φ₄ = a⁰¹ + ia⁰²`.
    pub fn phi(&self) -> [Complex<R>; 4] {
        [
            Complex::new(self.a0.clone(), -self.a12.clone()),
            Complex::new(-self.a13.clone(), -self.a23.clone()),
            Complex::new(self.a03.clone(), -self.a0123.clone()),
            Complex::new(self.a01.clone(), self.a02.clone()),
        ]
    }

    pub fn from_phi(phi: &[Complex<R>; 4]) -> Self {
        Self {
            a0: phi[0].re.clone(),
            a12: -phi[0].im.clone(),
            a13: -phi[1].re.clone(),
            a23: -phi[1].im.clone(),
            a03: phi[2].re.clone(),
            a0123: -phi[2].im.clone(),
            a01: phi[3].re.clone(),
            a02: phi[3].im.clone(),
        }
    }

    /// Reads `φ₁..φ₄` off the first column and rejects matrices that do
    /// not have the closed Dirac–Hestenes shape.
    pub fn from_matrix(m: &Matrix<Complex<R>>) -> Result<Self> {
        if (m.rows(), m.cols()) != (4, 4) {
            return Err(Error::NotDiracHestenesForm);
        }
        let phi = [
            m.get(0, 0).clone(),
            m.get(1, 0).clone(),
            m.get(2, 0).clone(),
            m.get(3, 0).clone(),
        ];
        if !dh_matrix_from_phi(&phi).approx_eq(m) {
            return Err(Error::NotDiracHestenesForm);
        }
        Ok(Self::from_phi(&phi))
    }

    pub fn matrix(&self) -> Matrix<Complex<R>> {
        dh_matrix_from_phi(&self.phi())
    }
}

/// Closed form:
/// ```text
/// φ₁  −φ₂* φ₃   φ₄*
/// φ₂   φ₁* φ₄  −φ₃*
/// φ₃   φ₄* φ₁  −φ₂*
/// φ₄  −φ₃* φ₂   φ₁*
/// ```
pub fn dh_matrix_from_phi<R: ReprReal>(phi: &[Complex<R>; 4]) -> Matrix<Complex<R>> {
    let [p1, p2, p3, p4] = phi.clone();
    let c = |z: &Complex<R>| z.conj();
    let rows = vec![
        vec![p1.clone(), -c(&p2), p3.clone(), c(&p4)],
        vec![p2.clone(), c(&p1), p4.clone(), -c(&p3)],
        vec![p3.clone(), c(&p4), p1.clone(), -c(&p2)],
        vec![p4, -c(&p3), p2, c(&p1)],
    ];
    Matrix::from_rows(rows).expect("4x4")
}

pub fn dh_matrix<R: ReprReal>(s: &DhSpinor<R>) -> Matrix<Complex<R>> {
    s.matrix()
}

/// The even multivector in `Cl(1,3)` with the spinor's coefficients.
pub fn dh_multivector(s: &DhSpinor) -> Multivector {
    let terms = DH_BLADES.iter().zip(s.to_array()).map(|(ix, a)| {
        (
            Blade::from_indices(ix).expect("ascending"),
            exact_ratio(a, rational(0, 1)),
        )
    });
    Multivector::from_terms(Signature::spacetime(), terms).expect("blades fit")
}

pub fn random_dh<G: Rng>(rng: &mut G) -> DhSpinor {
    DhSpinor::from_array(std::array::from_fn(|_| {
        rational(rng.gen_range(-5..=5), rng.gen_range(1..=4))
    }))
}

/// `φ± = P±·φ·γ₂γ₁` and the eight 2-spinors read off their upper rows.
#[derive(Clone, Debug, PartialEq)]
pub struct HelicitySplit<R = BigRational> {
    pub plus: Matrix<Complex<R>>,
    pub minus: Matrix<Complex<R>>,
    pub psi: [[Complex<R>; 2]; 8],
}

/// `γ₂γ₁` over any representation field.
pub fn gamma21<R: ReprReal>() -> Matrix<Complex<R>> {
    Matrix::from_exact(&GammaBasis::shared().pair(2, 1))
}

pub fn helicity_split<R: ReprReal>(phi: &Matrix<Complex<R>>) -> Result<HelicitySplit<R>> {
    let (p, m) = helicity_projectors();
    SplitOperators {
        plus: Matrix::from_exact(&p),
        minus: Matrix::from_exact(&m),
        g21: gamma21(),
    }
    .split(phi)
}

/// `P₊`, `P₋` and `γ₂γ₁` over one field, for splitting many samples.
#[derive(Clone, Debug)]
pub struct SplitOperators<R> {
    pub plus: Matrix<Complex<R>>,
    pub minus: Matrix<Complex<R>>,
    pub g21: Matrix<Complex<R>>,
}

impl<R: ReprReal> SplitOperators<R> {
    pub fn new() -> Self {
        let (p, m) = helicity_projectors();
        Self {
            plus: Matrix::from_exact(&p),
            minus: Matrix::from_exact(&m),
            g21: gamma21(),
        }
    }

    pub fn split(&self, phi: &Matrix<Complex<R>>) -> Result<HelicitySplit<R>> {
        DhSpinor::from_matrix(phi)?;
        let right = phi.try_mul(&self.g21)?;
        let plus = self.plus.try_mul(&right)?;
        let minus = self.minus.try_mul(&right)?;
        let psi = std::array::from_fn(|k| {
            let src = if k < 4 { &plus } else { &minus };
            [src.get(0, k % 4).clone(), src.get(1, k % 4).clone()]
        });
        Ok(HelicitySplit { plus, minus, psi })
    }
}

impl<R: ReprReal> Default for SplitOperators<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// `ψ₁..ψ₈` written directly in terms of `φ₁..φ₄`.
pub fn psi_formulas<R: ReprReal>(phi: &[Complex<R>; 4]) -> [[Complex<R>; 2]; 8] {
    let [p1, p2, p3, p4] = phi.clone();
    let c = |z: &Complex<R>| z.conj();
    let half_i = Complex::new(R::zero(), R::half());
    let s = |a: Complex<R>, b: Complex<R>| [half_i.clone() * a, half_i.clone() * b];
    [
        s(p1.clone() - p3.clone(), p2.clone() - p4.clone()),
        s(c(&p2) + c(&p4), -c(&p1) - c(&p3)),
        s(p3.clone() - p1.clone(), p4.clone() - p2.clone()),
        s(-c(&p4) - c(&p2), c(&p3) + c(&p1)),
        s(p1.clone() + p3.clone(), p2.clone() + p4.clone()),
        s(c(&p2) - c(&p4), -c(&p1) + c(&p3)),
        s(p3.clone() + p1.clone(), p4.clone() + p2.clone()),
        s(-c(&p4) + c(&p2), c(&p3) - c(&p1)),
    ]
}

/// The full `φ±` displays entry by entry, `sign = +1` for `φ⁺`.
pub fn split_formula<R: ReprReal>(phi: &[Complex<R>; 4], sign: i64) -> Matrix<Complex<R>> {
    let [p1, p2, p3, p4] = phi.clone();
    let c = |z: &Complex<R>| z.conj();
    let u = Complex::new(R::from_i64(sign), R::zero());
    let rows = vec![
        vec![
            p1.clone() - u.clone() * p3.clone(),
            c(&p2) + u.clone() * c(&p4),
            p3.clone() - u.clone() * p1.clone(),
            -c(&p4) - u.clone() * c(&p2),
        ],
        vec![
            p2.clone() - u.clone() * p4.clone(),
            -c(&p1) - u.clone() * c(&p3),
            p4.clone() - u.clone() * p2.clone(),
            c(&p3) + u.clone() * c(&p1),
        ],
        vec![
            -u.clone() * p1.clone() + p3.clone(),
            -u.clone() * c(&p2) - c(&p4),
            -u.clone() * p3.clone() + p1.clone(),
            u.clone() * c(&p4) + c(&p2),
        ],
        vec![
            -u.clone() * p2.clone() + p4.clone(),
            u.clone() * c(&p1) + c(&p3),
            -u.clone() * p4 + p2,
            -u * c(&p3) - c(&p1),
        ],
    ];
    Matrix::from_rows(rows)
        .expect("4x4")
        .scale(&Complex::new(R::zero(), R::half()))
}
