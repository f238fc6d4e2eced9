use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::blade::Blade;
use super::coeff::{Coefficient, ExactComplex};
use super::signature::Signature;
use crate::error::{Error, Result};

/// Sparse element of a Clifford algebra: canonical blades mapped to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector<C = ExactComplex> {
    signature: Signature,
    terms: BTreeMap<Blade, C>,
}

impl<C: Coefficient> Multivector<C> {
    pub fn zero(signature: Signature) -> Self {
        Self {
            signature,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(signature: Signature, c: C) -> Self {
        Self::from_terms(signature, [(Blade::SCALAR, c)]).expect("scalar blade always fits")
    }

    pub fn one(signature: Signature) -> Self {
        Self::scalar(signature, C::one())
    }

    /// Generator `e_i` with unit coefficient (1-based).
    pub fn generator(signature: Signature, i: usize) -> Result<Self> {
        if i == 0 || i > signature.dim() {
            return Err(Error::InvalidBlade {
                indices: vec![i],
                dim: signature.dim(),
            });
        }
        Self::from_terms(signature, [(Blade::generator(i)?, C::one())])
    }

    pub fn blade(signature: Signature, blade: Blade, c: C) -> Result<Self> {
        Self::from_terms(signature, [(blade, c)])
    }

    /// Collects terms, summing repeated blades and dropping zeros.
    pub fn from_terms(
        signature: Signature,
        terms: impl IntoIterator<Item = (Blade, C)>,
    ) -> Result<Self> {
        let mut out = Self::zero(signature);
        for (b, c) in terms {
            if !b.fits(&signature) {
                return Err(Error::InvalidBlade {
                    indices: b.indices(),
                    dim: signature.dim(),
                });
            }
            out.accumulate(b, c);
        }
        Ok(out)
    }

    /// The volume element `e1 e2 … e_n`.
    pub fn volume_element(signature: Signature) -> Self {
        let mask = if signature.dim() == 16 {
            u16::MAX
        } else {
            (1u16 << signature.dim()) - 1
        };
        Self::from_terms(signature, [(Blade::from_mask(mask), C::one())]).expect("top blade fits")
    }

    fn accumulate(&mut self, b: Blade, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                let s = existing.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the blade named by 1-based indices.
    pub fn coefficient_of(&self, indices: &[usize]) -> Result<C> {
        Ok(self.coefficient(Blade::from_indices(indices)?))
    }

    fn check_signature(&self, other: &Self) -> Result<()> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch {
                left: self.signature,
                right: other.signature,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_signature(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        self.map_coefficients(|_, c| c.negate())
    }

    /// Multiplies every coefficient by `c` on the left.
    pub fn try_scale(&self, c: &C) -> Result<Self> {
        let mut out = Self::zero(self.signature);
        for (b, x) in &self.terms {
            out.accumulate(*b, c.try_mul(x)?);
        }
        Ok(out)
    }

    /// Bilinear, associative geometric product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_signature(other)?;
        let sig = self.signature;
        let mut out = Self::zero(sig);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (sign, blade) = ba.product(*bb, &sig);
                let c = ca.try_mul(cb)?;
                out.accumulate(blade, c.signed(sign));
            }
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.geometric_product(other)?
            .try_sub(&other.geometric_product(self)?)
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(Blade, &C) -> C) -> Self {
        let mut out = Self::zero(self.signature);
        for (b, c) in &self.terms {
            out.accumulate(*b, f(*b, c));
        }
        out
    }

    /// Grade-k parts scaled by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.map_coefficients(|b, c| c.signed(b.reversion_sign()))
    }

    /// Grade-k parts scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_coefficients(|b, c| c.signed(b.involution_sign()))
    }

    /// Reversion composed with grade involution.
    pub fn clifford_conjugate(&self) -> Self {
        self.map_coefficients(|b, c| c.signed(b.reversion_sign() * b.involution_sign()))
    }

    /// Conjugates every coefficient, leaving blades fixed.
    pub fn pseudo_conjugate(&self) -> Self {
        self.map_coefficients(|_, c| c.conjugate())
    }

    pub fn grade_project(&self, k: usize) -> Self {
        let terms = self.terms.iter().filter(|(b, _)| b.grade() == k);
        Self {
            signature: self.signature,
            terms: terms.map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// Drops every term of grade `k`.
    pub fn without_grade(&self, k: usize) -> Self {
        let terms = self.terms.iter().filter(|(b, _)| b.grade() != k);
        Self {
            signature: self.signature,
            terms: terms.map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    /// Grades carrying at least one nonzero term.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// Same coefficients reinterpreted in another algebra of equal or
    /// larger dimension.
    pub fn with_signature(&self, signature: Signature) -> Result<Self> {
        Self::from_terms(signature, self.terms.iter().map(|(b, c)| (*b, c.clone())))
    }
}

impl fmt::Display for Multivector<ExactComplex> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            let c = super::coeff::display_exact(c);
            let c = match (n, c.strip_prefix('-')) {
                (0, _) => c,
                (_, Some(rest)) => {
                    write!(f, " - ")?;
                    rest.to_string()
                }
                (_, None) => {
                    write!(f, " + ")?;
                    c
                }
            };
            if *b == Blade::SCALAR {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{b}")?;
            }
        }
        Ok(())
    }
}

// Operator sugar. These panic on signature mismatch or when the ring
// refuses a product; the `try_*` / `geometric_product` forms return errors.

impl<C: Coefficient> Mul for &Multivector<C> {
    type Output = Multivector<C>;
    fn mul(self, rhs: Self) -> Multivector<C> {
        self.geometric_product(rhs).expect("geometric product")
    }
}

impl<C: Coefficient> Add for &Multivector<C> {
    type Output = Multivector<C>;
    fn add(self, rhs: Self) -> Multivector<C> {
        self.try_add(rhs).expect("multivector addition")
    }
}

impl<C: Coefficient> Sub for &Multivector<C> {
    type Output = Multivector<C>;
    fn sub(self, rhs: Self) -> Multivector<C> {
        self.try_sub(rhs).expect("multivector subtraction")
    }
}

impl<C: Coefficient> Neg for &Multivector<C> {
    type Output = Multivector<C>;
    fn neg(self) -> Multivector<C> {
        self.negated()
    }
}
