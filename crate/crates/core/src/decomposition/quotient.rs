//! Quotient map from the ideals `λ±C_{2k+1}` onto `C_{2k}`.

use super::idempotent::{central_idempotents, Side};
use crate::algebra::{Blade, Coefficient, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::exact_rank;

fn odd_dim(x: &Multivector) -> Result<usize> {
    let sig = x.signature();
    if !sig.complexified || sig.dim() % 2 == 0 {
        return Err(Error::WrongAlgebra {
            expected: "an odd complexified algebra",
            got: sig,
        });
    }
    Ok(sig.dim())
}

/// Image of the top generator `e_{2k+1}` inside the chosen ideal, where
/// `εω = ±1` gives `e_{2k+1} = ±ε⁻¹ (e1…e_{2k})⁻¹`.
pub fn top_generator_image(n: usize, side: Side) -> Result<Multivector> {
    let pair = central_idempotents(n)?;
    let low = Signature::complex(n - 1)?;
    // every generator squares to +1, so the inverse of the volume element is its reverse
    let vol_inv = Multivector::volume_element(low).reversion();
    let factor = pair.epsilon.inverse() * crate::algebra::coeff::exact(side.sign(), 0);
    vol_inv.try_scale(&factor)
}

/// The surjective homomorphism `C_{2k+1} → C_{2k}` that sends `εω` to `±1`.
/// Applied to elements of the ideal it is the isomorphism onto `C_{2k}`.
fn homomorphism(x: &Multivector, side: Side) -> Result<Multivector> {
    let n = odd_dim(x)?;
    let low = Signature::complex(n - 1)?;
    let top = top_generator_image(n, side)?;
    let top_bit = 1u16 << (n - 1);
    let mut out = Multivector::zero(low);
    for (b, c) in x.terms() {
        let rest = Multivector::blade(low, Blade::from_mask(b.mask() & !top_bit), c.clone())?;
        let image = if b.mask() & top_bit != 0 {
            &rest * &top
        } else {
            rest
        };
        out = &out + &image;
    }
    Ok(out)
}

/// Maps an element of `λ±C_{2k+1}` onto `C_{2k}`.
pub fn quotient_map(x: &Multivector, side: Side) -> Result<Multivector> {
    let n = odd_dim(x)?;
    let lambda = central_idempotents(n)?;
    if &lambda.get(side).geometric_product(x)? != x {
        return Err(Error::NotInIdeal {
            side: side.as_str(),
        });
    }
    homomorphism(x, side)
}

/// Inverse of [`quotient_map`]: `y ↦ λ±·y` with `y` read inside `C_{2k+1}`.
pub fn lift(y: &Multivector, n: usize, side: Side) -> Result<Multivector> {
    let sig = Signature::complex(n)?;
    if y.signature() != Signature::complex(n - 1)? {
        return Err(Error::WrongAlgebra {
            expected: "C_{n-1}",
            got: y.signature(),
        });
    }
    let lambda = central_idempotents(n)?;
    lambda.get(side).geometric_product(&y.with_signature(sig)?)
}

/// Both quotient images of an arbitrary element: `(π₊(λ₊x), π₋(λ₋x))`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnionPair {
    pub plus: Multivector,
    pub minus: Multivector,
}

pub fn split_union(x: &Multivector) -> Result<UnionPair> {
    let n = odd_dim(x)?;
    let lambda = central_idempotents(n)?;
    Ok(UnionPair {
        plus: quotient_map(&lambda.lambda_plus.geometric_product(x)?, Side::Plus)?,
        minus: quotient_map(&lambda.lambda_minus.geometric_product(x)?, Side::Minus)?,
    })
}

/// Rank of the quotient images of `{λ± e_B}` over all blades `B` of `C_n`.
pub fn quotient_image_rank(n: usize, side: Side) -> Result<usize> {
    let sig = Signature::complex(n)?;
    let low = Signature::complex(n - 1)?;
    let lambda = central_idempotents(n)?;
    let low_blades = Blade::all(&low);
    let mut rows = Vec::new();
    for b in Blade::all(&sig) {
        let basis = Multivector::blade(sig, b, Coefficient::one())?;
        let img = quotient_map(&lambda.get(side).geometric_product(&basis)?, side)?;
        rows.push(
            low_blades
                .iter()
                .map(|lb| img.coefficient(*lb))
                .collect::<Vec<_>>(),
        );
    }
    Ok(exact_rank(rows))
}
