//! Three-dimensional elements written as `Σ (u_i + ω v_i) e_i` with
//! `e_0 = 1` and `ω = e1e2e3`.
//!
//! Uses `ω e1 = e2e3`, `ω e2 = e3e1`, `ω e3 = e1e2`, `ω e0 = e1e2e3`.

use super::blade::Blade;
use super::coeff::Coefficient;
use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};

/// Blade paired with `ω e_i` together with the sign relating the cyclic
/// orientation to the canonical ascending blade.
pub(crate) const OMEGA_PARTNER: [(u16, i8); 4] = [
    (0b111, 1),  // ω e0 = e123
    (0b110, 1),  // ω e1 = e23
    (0b101, -1), // ω e2 = e31 = -e13
    (0b011, 1),  // ω e3 = e12
];

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaPairs<C> {
    /// `(u_i, v_i)` for `i = 0..3`.
    pub pairs: [(C, C); 4],
}

impl<C: Coefficient> OmegaPairs<C> {
    pub fn from_multivector(x: &Multivector<C>) -> Result<Self> {
        if x.signature().dim() != 3 {
            return Err(Error::WrongAlgebra {
                expected: "a 3-generator algebra",
                got: x.signature(),
            });
        }
        let pairs = std::array::from_fn(|i| {
            let u = x.coefficient(Blade::from_mask(if i == 0 { 0 } else { 1 << (i - 1) }));
            let (mask, sign) = OMEGA_PARTNER[i];
            let v = x.coefficient(Blade::from_mask(mask)).signed(sign);
            (u, v)
        });
        Ok(Self { pairs })
    }

    pub fn to_multivector(&self, signature: Signature) -> Result<Multivector<C>> {
        if signature.dim() != 3 {
            return Err(Error::WrongAlgebra {
                expected: "a 3-generator algebra",
                got: signature,
            });
        }
        let mut terms = Vec::with_capacity(8);
        for (i, (u, v)) in self.pairs.iter().enumerate() {
            let mask = if i == 0 { 0 } else { 1 << (i - 1) };
            terms.push((Blade::from_mask(mask), u.clone()));
            let (pm, sign) = OMEGA_PARTNER[i];
            terms.push((Blade::from_mask(pm), v.signed(sign)));
        }
        Multivector::from_terms(signature, terms)
    }

    /// Reversion acts as `(u + ω v) ↦ (u - ω v)` on every pair.
    pub fn reversion(&self) -> Self {
        Self {
            pairs: self.pairs.clone().map(|(u, v)| (u, v.negate())),
        }
    }
}
