use serde::Serialize;

use crate::algebra::coeff::{exact, rational};
use crate::algebra::{ExactComplex, Multivector, Signature};
use crate::error::{Error, Result};
use num_complex::Complex;

/// Scalar factor making `(εω)² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Epsilon {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "i")]
    I,
}

impl Epsilon {
    pub fn value(self) -> ExactComplex {
        match self {
            Epsilon::One => exact(1, 0),
            Epsilon::I => exact(0, 1),
        }
    }

    pub fn inverse(self) -> ExactComplex {
        match self {
            Epsilon::One => exact(1, 0),
            Epsilon::I => exact(0, -1),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Epsilon::One => "1",
            Epsilon::I => "i",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        }
    }

    pub(crate) fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

/// `ε = 1` for `n = 2k+1` with `k` even, `ε = i` for `k` odd.
pub fn epsilon_for(n: usize) -> Result<Epsilon> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    Ok(if (n / 2).is_multiple_of(2) {
        Epsilon::One
    } else {
        Epsilon::I
    })
}

/// Central idempotents `λ± = (1 ± εω)/2` of `C_n`, stored plus-first.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentPair {
    pub n: usize,
    pub epsilon: Epsilon,
    pub lambda_plus: Multivector,
    pub lambda_minus: Multivector,
}

/// Outcome of checking the idempotent laws under exact arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentLaws {
    pub plus_idempotent: bool,
    pub minus_idempotent: bool,
    pub plus_minus_annihilate: bool,
    pub minus_plus_annihilate: bool,
    pub partition_of_unity: bool,
    pub central: bool,
}

impl IdempotentLaws {
    pub fn all(&self) -> bool {
        self.plus_idempotent
            && self.minus_idempotent
            && self.plus_minus_annihilate
            && self.minus_plus_annihilate
            && self.partition_of_unity
            && self.central
    }
}

pub fn central_idempotents(n: usize) -> Result<IdempotentPair> {
    let epsilon = epsilon_for(n)?;
    let sig = Signature::complex(n)?;
    let half = Complex::new(rational(1, 2), rational(0, 1));
    let one = Multivector::one(sig);
    let eps_omega = Multivector::volume_element(sig).try_scale(&epsilon.value())?;
    let lambda_plus = (&one + &eps_omega).try_scale(&half)?;
    let lambda_minus = (&one - &eps_omega).try_scale(&half)?;
    Ok(IdempotentPair {
        n,
        epsilon,
        lambda_plus,
        lambda_minus,
    })
}

impl IdempotentPair {
    pub fn signature(&self) -> Signature {
        self.lambda_plus.signature()
    }

    pub fn get(&self, side: Side) -> &Multivector {
        match side {
            Side::Plus => &self.lambda_plus,
            Side::Minus => &self.lambda_minus,
        }
    }

    pub fn verify(&self) -> IdempotentLaws {
        let (p, m) = (&self.lambda_plus, &self.lambda_minus);
        let sig = self.signature();
        let central = (1..=sig.dim()).all(|i| {
            let g = Multivector::generator(sig, i).expect("generator in range");
            p.commutator(&g).map(|c| c.is_zero()).unwrap_or(false)
                && m.commutator(&g).map(|c| c.is_zero()).unwrap_or(false)
        });
        IdempotentLaws {
            plus_idempotent: &(p * p) == p,
            minus_idempotent: &(m * m) == m,
            plus_minus_annihilate: (p * m).is_zero(),
            minus_plus_annihilate: (m * p).is_zero(),
            partition_of_unity: (p + m) == Multivector::one(sig),
            central,
        }
    }

    /// Whether coefficient conjugation exchanges `λ+` and `λ-`.
    pub fn conjugation_swaps(&self) -> bool {
        self.lambda_plus.pseudo_conjugate() == self.lambda_minus
            && self.lambda_minus.pseudo_conjugate() == self.lambda_plus
    }

    /// Whether coefficient conjugation fixes both idempotents.
    pub fn conjugation_fixes(&self) -> bool {
        self.lambda_plus.pseudo_conjugate() == self.lambda_plus
            && self.lambda_minus.pseudo_conjugate() == self.lambda_minus
    }
}

/// `λ±·φ`.
pub fn project(phi: &Multivector, side: Side) -> Result<Multivector> {
    let sig = phi.signature();
    if !sig.complexified || sig.dim() % 2 == 0 {
        return Err(Error::WrongAlgebra {
            expected: "an odd complexified algebra",
            got: sig,
        });
    }
    let pair = central_idempotents(sig.dim())?;
    pair.get(side).geometric_product(phi)
}
