//! Seeded random exact elements for property checks.

use num_complex::Complex;
use rand::Rng;

use super::blade::Blade;
use super::coeff::{rational, ExactComplex};
use super::multivector::Multivector;
use super::signature::Signature;

/// Small Gaussian rational with numerators in `-3..=3` and denominators in `1..=3`.
pub fn random_exact<R: Rng>(rng: &mut R, with_imaginary: bool) -> ExactComplex {
    let re = rational(rng.gen_range(-3..=3), rng.gen_range(1..=3));
    let im = if with_imaginary {
        rational(rng.gen_range(-3..=3), rng.gen_range(1..=3))
    } else {
        rational(0, 1)
    };
    Complex::new(re, im)
}

/// Random element where each blade is present with probability `density`.
pub fn random_multivector<R: Rng>(
    rng: &mut R,
    sig: Signature,
    density: f64,
) -> Multivector<ExactComplex> {
    let complex = sig.complexified;
    let terms: Vec<_> = Blade::all(&sig)
        .into_iter()
        .filter_map(|b| {
            rng.gen_bool(density)
                .then(|| (b, random_exact(rng, complex)))
        })
        .collect();
    Multivector::from_terms(sig, terms).expect("blades from the algebra fit")
}

/// Random element supported on even-grade blades only.
pub fn random_even<R: Rng>(rng: &mut R, sig: Signature) -> Multivector<ExactComplex> {
    random_multivector(rng, sig, 1.0).map_coefficients(|b, c| {
        if b.grade() % 2 == 0 {
            c.clone()
        } else {
            Complex::new(rational(0, 1), rational(0, 1))
        }
    })
}
