//! Null-momentum modes of the massless Dirac–Hestenes operator.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use super::dh::DhSpinor;
use super::gamma::GammaBasis;
use super::mat::{exact_rank, rational_nullspace, Matrix, ReprReal};
use crate::algebra::coeff::{exact_ratio, rational};
use crate::algebra::ExactComplex;
use crate::error::{Error, Result};

/// Momentum symbol `K = ωγ₀ − kᵢΓᵢ`; a plane wave `A·f(k·x − ωt)`
/// solves the massless equation exactly when `K·A = 0`.
pub fn momentum_symbol<R: ReprReal>(omega: &R, k: &[R; 3]) -> Matrix<Complex<R>> {
    let g = GammaBasis::new();
    let re = |r: &R| Complex::new(r.clone(), R::zero());
    let mut out = Matrix::from_exact(&g.gamma[0]).scale(&re(omega));
    for i in 0..3 {
        out = &out - &Matrix::from_exact(&g.gamma[i + 1]).scale(&re(&k[i]));
    }
    out
}

fn check_null(omega: &BigRational, k: &[BigRational; 3]) -> Result<()> {
    let k2 = k.iter().fold(BigRational::zero(), |a, x| a + x * x);
    if omega.is_zero() {
        return Err(Error::PlaneWave(
            "zero frequency has no massless mode".into(),
        ));
    }
    if omega * omega != k2 {
        return Err(Error::PlaneWave("momentum is not null".into()));
    }
    Ok(())
}

/// Exact basis of `{A in Dirac–Hestenes form : K·A = 0}` over the reals.
pub fn null_kernel(omega: &BigRational, k: &[BigRational; 3]) -> Result<Vec<DhSpinor>> {
    check_null(omega, k)?;
    let kmat = momentum_symbol(omega, k);
    // columns of the real-linear map a ↦ K·dh(a), split into re/im parts
    let columns: Vec<Vec<BigRational>> = (0..8)
        .map(|c| {
            let s = DhSpinor::from_array(std::array::from_fn(|i| rational((i == c) as i64, 1)));
            let img = &kmat * &s.matrix();
            let flat = img.row_vecs().concat();
            flat.iter()
                .flat_map(|z| [z.re.clone(), z.im.clone()])
                .collect()
        })
        .collect();
    let rows: Vec<Vec<BigRational>> = (0..32)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    Ok(rational_nullspace(rows, 8)
        .into_iter()
        .map(|v| DhSpinor::from_array(v.try_into().expect("8 entries")))
        .collect())
}

/// Closed-form kernel element `(1 + γ₀ n̂·Γ)·B` for any Dirac–Hestenes `B`.
pub fn null_mode_from<R: ReprReal>(
    unit_direction: &[R; 3],
    b: &DhSpinor<R>,
) -> Result<DhSpinor<R>> {
    let g = GammaBasis::new();
    let mut n_gamma = Matrix::<Complex<R>>::zeros(4, 4);
    for i in 0..3 {
        n_gamma = &n_gamma
            + &Matrix::from_exact(&g.gamma[i + 1])
                .scale(&Complex::new(unit_direction[i].clone(), R::zero()));
    }
    let op = &Matrix::identity(4) + &(&Matrix::from_exact(&g.gamma[0]) * &n_gamma);
    DhSpinor::from_matrix(&(&op * &b.matrix()))
}

/// Whether the exact kernel and the closed-form construction span the
/// same space for the given null momentum.
pub fn kernel_routes_agree(omega: &BigRational, k: &[BigRational; 3]) -> Result<bool> {
    let basis = null_kernel(omega, k)?;
    let n_hat: [BigRational; 3] = std::array::from_fn(|i| &k[i] / omega);
    let flat = |s: &DhSpinor| {
        s.to_array()
            .into_iter()
            .map(|a| exact_ratio(a, rational(0, 1)))
            .collect::<Vec<ExactComplex>>()
    };
    let mut closed = Vec::new();
    for c in 0..8 {
        let b = DhSpinor::from_array(std::array::from_fn(|i| rational((i == c) as i64, 1)));
        closed.push(flat(&null_mode_from(&n_hat, &b)?));
    }
    let kernel: Vec<_> = basis.iter().map(flat).collect();
    let r_kernel = exact_rank(kernel.clone());
    let r_closed = exact_rank(closed.clone());
    let r_union = exact_rank(kernel.into_iter().chain(closed).collect());
    Ok(r_kernel == r_closed && r_union == r_kernel)
}
