use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of generators; blade keys fit in a `u16` bitmask.
pub const MAX_GENERATORS: usize = 16;

/// Algebra descriptor: `p` generators squaring to +1 followed by `q`
/// generators squaring to -1.
///
/// Complexified algebras `C_n` use `(n, 0)` with `complexified = true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: u8,
    pub q: u8,
    #[serde(rename = "complex")]
    pub complexified: bool,
}

impl Signature {
    pub fn new(p: usize, q: usize, complexified: bool) -> Result<Self> {
        if p + q > MAX_GENERATORS {
            return Err(Error::DimensionTooLarge(p + q));
        }
        if complexified && q != 0 {
            // complexified algebras normalize every generator square to +1
            return Err(Error::Parse(format!(
                "complexified signature must have q = 0, got q = {q}"
            )));
        }
        Ok(Self {
            p: p as u8,
            q: q as u8,
            complexified,
        })
    }

    /// `C_n`.
    pub fn complex(n: usize) -> Result<Self> {
        Self::new(n, 0, true)
    }

    /// Real `Cl(p,q)`.
    pub fn real(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, false)
    }

    /// Space-time algebra `Cl(1,3)`: generator 1 is `γ₀`, generators 2..4 are `γ₁..γ₃`.
    pub fn spacetime() -> Self {
        Self {
            p: 1,
            q: 3,
            complexified: false,
        }
    }

    /// `Cl(3,0)`, the Pauli algebra.
    pub fn pauli() -> Self {
        Self {
            p: 3,
            q: 0,
            complexified: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.p as usize + self.q as usize
    }

    /// Bitmask of generators squaring to -1.
    pub fn negative_mask(&self) -> u16 {
        let all = if self.dim() == 16 {
            u16::MAX
        } else {
            (1u16 << self.dim()) - 1
        };
        let pos = if self.p == 16 {
            u16::MAX
        } else {
            (1u16 << self.p) - 1
        };
        all & !pos
    }

    pub fn blade_count(&self) -> usize {
        1usize << self.dim()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complexified {
            write!(f, "C{}", self.p)
        } else {
            write!(f, "Cl({},{})", self.p, self.q)
        }
    }
}
