//! The γ-matrix basis of `Cl(1,3)`, chirality projectors, the primitive
//! idempotent `e₄₁` and the embedding `Cl(3,0) → Cl⁺(1,3)`.

use std::sync::OnceLock;

use super::mat::Matrix;
use super::pauli::{represent, sigma};
use crate::algebra::coeff::{exact, exact_ratio, rational};
use crate::algebra::{Blade, Coefficient, ExactComplex, Multivector, Signature};
use crate::error::{Error, Result};

/// `γ₀ = diag(I, −I)`, `Γᵢ = [[0, σᵢ], [−σᵢ, 0]]` and `γ₅ = −iγ₀Γ₁Γ₂Γ₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaBasis {
    pub gamma: [Matrix; 4],
    pub gamma5: Matrix,
}

fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    Matrix::from_fn(4, 4, |i, j| {
        let m = match (i < 2, j < 2) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % 2, j % 2).clone()
    })
}

static SHARED: OnceLock<GammaBasis> = OnceLock::new();

impl GammaBasis {
    /// A process-wide instance, built on first use.
    pub fn shared() -> &'static GammaBasis {
        SHARED.get_or_init(GammaBasis::new)
    }

    pub fn new() -> Self {
        let i2 = Matrix::identity(2);
        let z = Matrix::zeros(2, 2);
        let g0 = block(&i2, &z, &z, &-&i2);
        let gi = |k| {
            let s = sigma(k);
            block(&z, &s, &-&s, &z)
        };
        let gamma = [g0, gi(1), gi(2), gi(3)];
        let product = gamma.iter().fold(Matrix::identity(4), |acc, g| &acc * g);
        let gamma5 = product.scale(&exact(0, -1));
        Self { gamma, gamma5 }
    }

    /// `γ_μ γ_ν` for `μ, ν ∈ 0..4`.
    pub fn pair(&self, mu: usize, nu: usize) -> Matrix {
        &self.gamma[mu] * &self.gamma[nu]
    }

    /// Every `{γ_μ, γ_ν} = 2η_{μν}I` with `η = diag(1,−1,−1,−1)`.
    pub fn anticommutation_holds(&self) -> bool {
        (0..4).all(|mu| {
            (mu..4).all(|nu| {
                let eta = match (mu, nu) {
                    (0, 0) => 2,
                    (a, b) if a == b => -2,
                    _ => 0,
                };
                self.gamma[mu].anticommutator(&self.gamma[nu]).expect("4x4")
                    == Matrix::identity(4).scale(&exact(eta, 0))
            })
        })
    }
}

impl Default for GammaBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Representation on `Cl(1,3)` (generator 1 is `γ₀`, generators 2..4 are
/// `Γ₁..Γ₃`) or on `C₄`, where all generators square to `+1` and
/// `e_{j+1} ↦ iΓ_j`.
pub fn gamma_rep(x: &Multivector) -> Result<Matrix> {
    let sig = x.signature();
    let g = GammaBasis::shared();
    let images: Vec<Matrix> = if sig == Signature::spacetime() {
        g.gamma.to_vec()
    } else if sig == Signature::complex(4)? {
        let i = exact(0, 1);
        vec![
            g.gamma[0].clone(),
            g.gamma[1].scale(&i),
            g.gamma[2].scale(&i),
            g.gamma[3].scale(&i),
        ]
    } else {
        return Err(Error::WrongAlgebra {
            expected: "Cl(1,3) or C4",
            got: sig,
        });
    };
    Ok(represent(x, &images))
}

/// `P± = (1 ± γ₅)/2`.
pub fn helicity_projectors() -> (Matrix, Matrix) {
    let g5 = GammaBasis::shared().gamma5.clone();
    let half = exact_ratio(rational(1, 2), rational(0, 1));
    let id = Matrix::identity(4);
    ((&id + &g5).scale(&half), (&id - &g5).scale(&half))
}

/// `e₄₁ = ½(1 + γ₀)·½(1 + iγ₁γ₂)`.
pub fn primitive_idempotent_e41() -> Matrix {
    let g = GammaBasis::shared();
    let half = exact_ratio(rational(1, 2), rational(0, 1));
    let id = Matrix::identity(4);
    let a = (&id + &g.gamma[0]).scale(&half);
    let b = (&id + &g.pair(1, 2).scale(&exact(0, 1))).scale(&half);
    &a * &b
}

/// The first column of `φ·e₄₁`, which is the only column that survives.
pub fn left_ideal_project(phi: &Matrix) -> Result<Vec<ExactComplex>> {
    Ok(phi.try_mul(&primitive_idempotent_e41())?.column(0))
}

/// `F₁γ₀₁ + F₂γ₀₂ + F₃γ₀₃`.
pub fn rs_matrix(f: &[ExactComplex; 3]) -> Matrix {
    let g = GammaBasis::shared();
    (0..3).fold(Matrix::zeros(4, 4), |acc, i| {
        &acc + &g.pair(0, i + 1).scale(&f[i])
    })
}

/// Relates a field spinor `(0, F₁, F₂, F₃)` to the column that
/// `rs_matrix(F)·e₄₁` actually produces, `(0, 0, F₃, F₁ + iF₂)`.
pub fn ideal_column_of_field_spinor(s: &[ExactComplex; 4]) -> Vec<ExactComplex> {
    let f1_plus = s[1].plus(&(exact(0, 1) * s[2].clone()));
    vec![exact(0, 0), exact(0, 0), s[3].clone(), f1_plus]
}

/// `e_i ↦ γ₀γ_i` from `Cl(3,0)` into the even part of `Cl(1,3)`.
pub fn even_embedding(x: &Multivector) -> Result<Multivector> {
    if x.signature() != Signature::pauli() {
        return Err(Error::WrongAlgebra {
            expected: "Cl(3,0)",
            got: x.signature(),
        });
    }
    let st = Signature::spacetime();
    let images: Vec<Multivector> = (1..=3)
        .map(|i| {
            Multivector::blade(
                st,
                Blade::from_indices(&[1, i + 1]).expect("ascending"),
                exact(1, 0),
            )
            .expect("fits")
        })
        .collect();
    let mut out = Multivector::zero(st);
    for (b, c) in x.terms() {
        let m = b
            .indices()
            .iter()
            .fold(Multivector::one(st), |acc, &i| &acc * &images[i - 1]);
        out = &out + &m.try_scale(c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::random::random_multivector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn st_blade(ix: &[usize]) -> Multivector {
        Multivector::blade(
            Signature::spacetime(),
            Blade::from_indices(ix).unwrap(),
            exact(1, 0),
        )
        .unwrap()
    }

    #[test]
    fn gamma0_is_block_diagonal() {
        let g = GammaBasis::new();
        assert_eq!(
            g.gamma[0],
            Matrix::diagonal(vec![exact(1, 0), exact(1, 0), exact(-1, 0), exact(-1, 0)])
        );
        assert_eq!(gamma_rep(&st_blade(&[1])).unwrap(), g.gamma[0]);
    }

    #[test]
    fn clifford_relations() {
        let g = GammaBasis::new();
        assert!(g.anticommutation_holds());
        assert!(g.gamma[1].anticommutator(&g.gamma[2]).unwrap().is_zero());
        assert_eq!(&g.gamma5 * &g.gamma5, Matrix::identity(4));
        for mu in 0..4 {
            assert!(g.gamma5.anticommutator(&g.gamma[mu]).unwrap().is_zero());
        }
    }

    #[test]
    fn gamma_rep_is_multiplicative_on_all_blade_pairs() {
        for sig in [Signature::spacetime(), Signature::complex(4).unwrap()] {
            let blades = Blade::all(&sig);
            for a in &blades {
                for b in &blades {
                    let x = Multivector::blade(sig, *a, exact(1, 0)).unwrap();
                    let y = Multivector::blade(sig, *b, exact(1, 0)).unwrap();
                    assert_eq!(
                        gamma_rep(&(&x * &y)).unwrap(),
                        &gamma_rep(&x).unwrap() * &gamma_rep(&y).unwrap()
                    );
                }
            }
            let images: Vec<Vec<ExactComplex>> = blades
                .iter()
                .map(|b| {
                    gamma_rep(&Multivector::blade(sig, *b, exact(1, 0)).unwrap())
                        .unwrap()
                        .row_vecs()
                        .concat()
                })
                .collect();
            assert_eq!(super::super::mat::exact_rank(images), 16);
        }
        assert!(gamma_rep(&Multivector::one(Signature::pauli())).is_err());
    }

    #[test]
    fn projectors() {
        let (p, m) = helicity_projectors();
        assert_eq!(&p + &m, Matrix::identity(4));
        assert!((&p * &m).is_zero());
        assert_eq!(&p * &p, p);
        assert_eq!(&m * &m, m);
        assert_eq!(p.rank(), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn e41_is_rank_one_idempotent() {
        let e = primitive_idempotent_e41();
        assert_eq!(&e * &e, e);
        assert_eq!(e.rank(), 1);
        assert_eq!(e.trace(), exact(1, 0));
        assert_eq!(
            left_ideal_project(&Matrix::identity(4)).unwrap(),
            e.column(0)
        );
    }

    #[test]
    fn field_matrix_layout() {
        let f = [exact(1, 0), exact(0, 2), exact(3, 0)];
        let m = rs_matrix(&f);
        let f1_plus = exact(1, 0) + exact(0, 1) * exact(0, 2);
        let f1_minus = exact(1, 0) - exact(0, 1) * exact(0, 2);
        assert_eq!(m.get(0, 2), &f[2]);
        assert_eq!(m.get(0, 3), &f1_minus);
        assert_eq!(m.get(1, 2), &f1_plus);
        assert_eq!(m.get(1, 3), &-f[2].clone());
        assert_eq!(m.get(2, 1), &f1_minus);
        assert_eq!(m.get(3, 0), &f1_plus);
        assert!(m.get(0, 0).is_zero() && m.get(2, 2).is_zero());
        let col = left_ideal_project(&m).unwrap();
        assert_eq!(col, vec![exact(0, 0), exact(0, 0), f[2].clone(), f1_plus]);
        assert_eq!(
            ideal_column_of_field_spinor(&[exact(0, 0), f[0].clone(), f[1].clone(), f[2].clone()]),
            col
        );
    }

    #[test]
    fn embedding_is_a_homomorphism_into_the_even_part() {
        let e = |i| Multivector::generator(Signature::pauli(), i).unwrap();
        assert_eq!(even_embedding(&e(1)).unwrap(), st_blade(&[1, 2]));
        let g01 = st_blade(&[1, 2]);
        assert_eq!(&g01 * &g01, Multivector::one(Signature::spacetime()));
        assert_eq!(
            even_embedding(&(&e(1) * &e(2))).unwrap(),
            &even_embedding(&e(1)).unwrap() * &even_embedding(&e(2)).unwrap()
        );
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let x = random_multivector(&mut rng, Signature::pauli(), 0.8);
            let y = random_multivector(&mut rng, Signature::pauli(), 0.8);
            let ex = even_embedding(&x).unwrap();
            assert!(ex.is_even());
            assert_eq!(
                even_embedding(&(&x * &y)).unwrap(),
                &ex * &even_embedding(&y).unwrap()
            );
        }
    }

    #[test]
    fn projectors_cover_central_idempotents() {
        // ω = e1e2e3 maps to -γ0γ1γ2γ3, so i·ω lands on γ5
        let omega = Multivector::volume_element(Signature::pauli());
        let image = gamma_rep(&even_embedding(&omega).unwrap())
            .unwrap()
            .scale(&exact(0, 1));
        assert_eq!(image, GammaBasis::new().gamma5);
        let half = exact_ratio(rational(1, 2), rational(0, 1));
        let (p, m) = helicity_projectors();
        let one = Matrix::identity(4);
        assert_eq!((&one + &image).scale(&half), p);
        assert_eq!((&one - &image).scale(&half), m);
    }
}
