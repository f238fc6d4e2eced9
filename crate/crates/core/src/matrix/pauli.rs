//! Pauli matrices and the representation of `C₂ ≅ Cl(3,0)`.

use num_complex::Complex;

use super::mat::{Matrix, ReprReal};
use crate::algebra::coeff::exact;
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};

/// `σ₁, σ₂, σ₃` (1-based).
pub fn sigma(i: usize) -> Matrix {
    let z = || exact(0, 0);
    let rows = match i {
        1 => vec![vec![z(), exact(1, 0)], vec![exact(1, 0), z()]],
        2 => vec![vec![z(), exact(0, -1)], vec![exact(0, 1), z()]],
        3 => vec![vec![exact(1, 0), z()], vec![z(), exact(-1, 0)]],
        _ => panic!("Pauli index must be 1, 2 or 3"),
    };
    Matrix::from_rows(rows).expect("2x2")
}

/// `σ·v` for a complex 3-vector.
pub fn sigma_dot<R: ReprReal>(v: &[Complex<R>; 3]) -> Matrix<Complex<R>> {
    let mut out = Matrix::zeros(2, 2);
    for (i, c) in v.iter().enumerate() {
        out = &out + &Matrix::from_exact(&sigma(i + 1)).scale(c);
    }
    out
}

/// Image of each blade as the ordered product of generator images.
pub(crate) fn represent(x: &Multivector, images: &[Matrix]) -> Matrix {
    let n = images[0].rows();
    let mut out = Matrix::zeros(n, n);
    for (b, c) in x.terms() {
        let m = b
            .indices()
            .iter()
            .fold(Matrix::identity(n), |acc, &i| &acc * &images[i - 1]);
        out = &out + &m.scale(c);
    }
    out
}

/// `e_i ↦ σ_i` on `C₂`, `C₃` or `Cl(3,0)`. On `C₃` this kills `λ₊`.
pub fn pauli_rep(x: &Multivector) -> Result<Matrix> {
    let sig = x.signature();
    let ok = sig == Signature::pauli()
        || sig == Signature::complex(2).expect("fits")
        || sig == Signature::complex(3).expect("fits");
    if !ok {
        return Err(Error::WrongAlgebra {
            expected: "C2, C3 or Cl(3,0)",
            got: sig,
        });
    }
    let images: Vec<Matrix> = (1..=sig.dim()).map(sigma).collect();
    Ok(represent(x, &images))
}
