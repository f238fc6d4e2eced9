//! Symmetric rank-2 spintensors and their Riemann–Silberstein vectors.

use super::mat::ReprReal;
use num_complex::Complex;

/// Components `f⁰⁰, f⁰¹ = f¹⁰, f¹¹`; `dotted` marks the conjugate space.
#[derive(Clone, Debug, PartialEq)]
pub struct SymSpintensor<R> {
    pub f00: Complex<R>,
    pub f01: Complex<R>,
    pub f11: Complex<R>,
    pub dotted: bool,
}

fn symmetric<R: ReprReal>(
    xi: &[Complex<R>; 2],
    eta: &[Complex<R>; 2],
    dotted: bool,
) -> SymSpintensor<R> {
    let half = Complex::new(R::half(), R::zero());
    SymSpintensor {
        f00: xi[0].clone() * eta[0].clone(),
        f01: half * (xi[0].clone() * eta[1].clone() + xi[1].clone() * eta[0].clone()),
        f11: xi[1].clone() * eta[1].clone(),
        dotted,
    }
}

/// Symmetrized tensor product of two undotted spinors.
pub fn sym_spintensor<R: ReprReal>(
    xi: &[Complex<R>; 2],
    eta: &[Complex<R>; 2],
) -> SymSpintensor<R> {
    symmetric(xi, eta, false)
}

/// The same product on the dotted (conjugate) spinspace.
pub fn sym_spintensor_dotted<R: ReprReal>(
    xi: &[Complex<R>; 2],
    eta: &[Complex<R>; 2],
) -> SymSpintensor<R> {
    symmetric(xi, eta, true)
}

impl<R: ReprReal> SymSpintensor<R> {
    /// `F₁ = (f⁰⁰ − f¹¹)/2`, `F₂ = i(f⁰⁰ + f¹¹)/2`, `F₃ = −f⁰¹`.
    ///
    /// Under `ξ ↦ Uξ` for `U ∈ SU(2)` this vector rotates by the matching
    /// `SO(3)` element, so `u⊗u` for `σ·n̂u = ±u` lands on the circular
    /// polarization `(e₁ ± ie₂)` of the frame with `e₁ × e₂ = n̂`.
    pub fn to_rs_vector(&self) -> [Complex<R>; 3] {
        let half = Complex::new(R::half(), R::zero());
        let i_half = Complex::new(R::zero(), R::half());
        [
            half * (self.f00.clone() - self.f11.clone()),
            i_half * (self.f00.clone() + self.f11.clone()),
            -self.f01.clone(),
        ]
    }

    pub fn from_rs_vector(f: &[Complex<R>; 3], dotted: bool) -> Self {
        let i = Complex::new(R::zero(), R::one());
        let [f1, f2, f3] = f.clone();
        Self {
            f00: f1.clone() - i.clone() * f2.clone(),
            f01: -f3,
            f11: -(f1 + i * f2),
            dotted,
        }
    }
}
