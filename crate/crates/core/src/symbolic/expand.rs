//! First-order operator expansions in `Cl(3,0)` with `e0` read as the unit.

use super::formal::FormalSum;
use super::token::Token;
use crate::algebra::{Blade, Coefficient, Multivector, OmegaPairs, Signature};
use crate::error::{Error, Result};

type FormalMv = Multivector<FormalSum>;

fn vector_with(coeffs: [FormalSum; 4]) -> FormalMv {
    let terms = coeffs.into_iter().enumerate().map(|(i, c)| {
        (
            if i == 0 {
                Blade::SCALAR
            } else {
                Blade::from_mask(1 << (i - 1))
            },
            c,
        )
    });
    Multivector::from_terms(Signature::pauli(), terms).expect("Cl(3,0) blades")
}

/// `∂⁰ + ∂¹e1 + ∂²e2 + ∂³e3`.
pub fn nabla() -> FormalMv {
    vector_with(std::array::from_fn(|mu| FormalSum::nabla(mu as u8)))
}

/// `X⁰ + X¹e1 + X²e2 + X³e3` for a four-component field symbol.
pub fn four_vector(symbol: &str) -> FormalMv {
    vector_with(std::array::from_fn(|mu| {
        FormalSum::token(Token::field(symbol, mu as u8))
    }))
}

/// Full expansion of `∇X` with coefficients `∂^μ X^ν`.
pub fn nabla_product(symbol: &str) -> FormalMv {
    nabla()
        .geometric_product(&four_vector(symbol))
        .expect("operator-times-field products only")
}

/// `F = Σ (E^i + ω H^i) e_i`.
pub fn field_strength() -> FormalMv {
    let mut pairs: [(FormalSum, FormalSum); 4] = Default::default();
    for i in 1..4u8 {
        pairs[i as usize] = (
            FormalSum::token(Token::field("E", i)),
            FormalSum::token(Token::field("H", i)),
        );
    }
    OmegaPairs { pairs }
        .to_multivector(Signature::pauli())
        .expect("Cl(3,0)")
}

/// `∇F`: scalar `div E`, vector parts `-((curl H)^i - ∂⁰E^i)`, bivector parts
/// `(curl E)^i + ∂⁰H^i`, pseudoscalar `div H`.
pub fn nabla_f_product() -> FormalMv {
    nabla()
        .geometric_product(&field_strength())
        .expect("operator-times-field products only")
}

/// Removes the scalar (Lorentz-condition) part.
pub fn impose_lorentz_condition(x: &FormalMv) -> FormalMv {
    x.without_grade(0)
}

/// Rewrites bivector terms through `ω e_i = e_j e_k`, giving `Σ (E^i + ω H^i) e_i`.
///
/// Pair 0 holds the pseudoscalar part as `ω·v₀`; it is zero for `∇A`.
pub fn riemann_silberstein_form(x: &FormalMv) -> Result<OmegaPairs<FormalSum>> {
    if !x.coefficient(Blade::SCALAR).is_zero() {
        return Err(Error::LorentzConditionNotImposed);
    }
    OmegaPairs::from_multivector(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(x: &FormalMv, idx: &[usize]) -> String {
        x.coefficient_of(idx).unwrap().render()
    }

    fn sum(s: &str) -> FormalSum {
        FormalSum::parse_unit_sum(s).unwrap()
    }

    #[test]
    fn nabla_a_groups() {
        let x = nabla_product("A");
        assert_eq!(coeff(&x, &[]), "d0A0 + d1A1 + d2A2 + d3A3");
        assert_eq!(coeff(&x, &[1]), "d0A1 + d1A0");
        assert_eq!(coeff(&x, &[2]), "d0A2 + d2A0");
        assert_eq!(coeff(&x, &[3]), "d0A3 + d3A0");
        assert_eq!(coeff(&x, &[2, 3]), "d2A3 - d3A2");
        // e3e1 = -e1e3
        assert_eq!(
            x.coefficient_of(&[1, 3]).unwrap().negate(),
            sum("d3A1 - d1A3")
        );
        assert_eq!(coeff(&x, &[1, 2]), "d1A2 - d2A1");
        assert_eq!(coeff(&x, &[1, 2, 3]), "0");
        assert_eq!(x.len(), 7);
    }

    #[test]
    fn nabla_f_groups() {
        let x = nabla_f_product();
        assert_eq!(coeff(&x, &[]), "d1E1 + d2E2 + d3E3");
        assert_eq!(coeff(&x, &[1, 2, 3]), "d1H1 + d2H2 + d3H3");
        assert_eq!(
            x.coefficient_of(&[2, 3]).unwrap(),
            sum("d0H1 + d2E3 - d3E2")
        );
        assert_eq!(
            x.coefficient_of(&[1, 3]).unwrap().negate(),
            sum("d0H2 + d3E1 - d1E3")
        );
        assert_eq!(
            x.coefficient_of(&[1, 2]).unwrap(),
            sum("d0H3 + d1E2 - d2E1")
        );
        // -((curl H)^1 - d0E1)
        assert_eq!(x.coefficient_of(&[1]).unwrap(), sum("d3H2 - d2H3 + d0E1"));
        assert_eq!(x.coefficient_of(&[2]).unwrap(), sum("d1H3 - d3H1 + d0E2"));
        assert_eq!(x.coefficient_of(&[3]).unwrap(), sum("d2H1 - d1H2 + d0E3"));
    }

    #[test]
    fn rs_form_moves_h_onto_omega() {
        let x = impose_lorentz_condition(&nabla_product("A"));
        let rs = riemann_silberstein_form(&x).unwrap();
        assert_eq!(rs.pairs[1].0, sum("d0A1 + d1A0"));
        assert_eq!(rs.pairs[1].1, sum("d2A3 - d3A2"));
        assert_eq!(rs.pairs[2].1, sum("d3A1 - d1A3"));
        assert_eq!(rs.pairs[3].1, sum("d1A2 - d2A1"));
        assert!(rs.pairs[0].0.is_zero() && rs.pairs[0].1.is_zero());
        assert_eq!(rs.to_multivector(Signature::pauli()).unwrap(), x);
    }

    #[test]
    fn rs_form_requires_lorentz_condition() {
        assert_eq!(
            riemann_silberstein_form(&nabla_product("A")).unwrap_err(),
            Error::LorentzConditionNotImposed
        );
        let zero = Multivector::<FormalSum>::zero(Signature::pauli());
        let rs = riemann_silberstein_form(&zero).unwrap();
        assert!(rs.to_multivector(Signature::pauli()).unwrap().is_zero());
    }

    #[test]
    fn reversion_flips_only_h_tokens() {
        let x = impose_lorentz_condition(&nabla_product("A"));
        let rs = riemann_silberstein_form(&x).unwrap();
        let rev = riemann_silberstein_form(&x.reversion()).unwrap();
        for i in 1..4 {
            assert_eq!(rev.pairs[i].0, rs.pairs[i].0);
            assert_eq!(rev.pairs[i].1, rs.pairs[i].1.negate());
        }
        assert_eq!(rev, rs.reversion());
    }
}
