//! Seeded invariant suites with a JSON pass/fail report.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::coeff::{exact, exact_ratio, rational};
use crate::algebra::random::{random_even, random_multivector};
use crate::algebra::{Multivector, Signature};
use crate::decomposition::{central_idempotents, project, quotient_map, Side};
use crate::error::{Error, Result};
use crate::field::{
    chirality_identity_defect, composite_check, dh_study, maxwell_residuals, maxwell_study,
    probe_field, FieldGrid, Helicity, Lattice, Study,
};
use crate::matrix::{
    dh_matrix, dh_multivector, even_embedding, gamma_rep, helicity_projectors, left_ideal_project,
    pauli_rep, primitive_idempotent_e41, random_dh, GammaBasis, Matrix,
};

pub const DEFAULT_SEED: u64 = 20_141_203;
pub const SEED_ENV: &str = "HELICITY_ALGEBRA_SEED";

pub const SUITES: [&str; 4] = ["all", "algebra", "rep", "field"];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Seed from the environment, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV} must be a u64, got {s:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

struct Runner {
    rng: ChaCha8Rng,
    checks: Vec<CheckResult>,
}

impl Runner {
    fn record(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail,
        });
    }
}

pub fn run_suite(suite: &str, seed: u64) -> Result<Report> {
    let mut r = Runner {
        rng: ChaCha8Rng::seed_from_u64(seed),
        checks: Vec::new(),
    };
    match suite {
        "algebra" => algebra(&mut r),
        "rep" => rep(&mut r),
        "field" => field(&mut r),
        "all" => {
            algebra(&mut r);
            rep(&mut r);
            field(&mut r);
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown suite {other:?}; expected one of {SUITES:?}"
            )))
        }
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    let failed = r.checks.len() - passed;
    Ok(Report {
        suite: suite.into(),
        seed,
        checks: r.checks,
        passed,
        failed,
    })
}

fn algebra_signatures() -> Vec<Signature> {
    let mut v: Vec<_> = (2..=5)
        .map(|n| Signature::complex(n).expect("small n"))
        .collect();
    v.push(Signature::pauli());
    v.push(Signature::spacetime());
    v.push(Signature::real(4, 1).expect("small"));
    v
}

fn algebra(r: &mut Runner) {
    const DRAWS: usize = 20;
    for sig in algebra_signatures() {
        let mut ok = true;
        let mut inv = true;
        for _ in 0..DRAWS {
            let x = random_multivector(&mut r.rng, sig, 0.5);
            let y = random_multivector(&mut r.rng, sig, 0.5);
            let z = random_multivector(&mut r.rng, sig, 0.5);
            ok &= &(&x * &y) * &z == &x * &(&y * &z);
            let xy = &x * &y;
            inv &= xy.reversion() == &y.reversion() * &x.reversion()
                && xy.grade_involution() == &x.grade_involution() * &y.grade_involution()
                && xy.clifford_conjugate() == &y.clifford_conjugate() * &x.clifford_conjugate()
                && x.reversion().reversion() == x
                && x.grade_involution().grade_involution() == x
                && x.pseudo_conjugate().pseudo_conjugate() == x
                && xy.pseudo_conjugate() == &x.pseudo_conjugate() * &y.pseudo_conjugate();
        }
        r.record(
            &format!("associativity/{sig}"),
            Ok((ok, format!("{DRAWS} triples"))),
        );
        r.record(
            &format!("involutions/{sig}"),
            Ok((inv, format!("{DRAWS} pairs"))),
        );
    }
    r.record(
        "volume-square",
        (|| {
            let mut ok = true;
            for n in 1..=9 {
                let sig = Signature::complex(n)?;
                let w = Multivector::volume_element(sig);
                let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
                ok &= &w * &w == Multivector::scalar(sig, exact(sign, 0));
            }
            Ok((ok, "n = 1..9".into()))
        })(),
    );
    for n in [3, 5, 7, 9] {
        r.record(
            &format!("idempotents/n={n}"),
            (|| {
                let pair = central_idempotents(n)?;
                let laws = pair.verify();
                let swap = n % 4 == 3;
                let conj = if swap {
                    pair.conjugation_swaps()
                } else {
                    pair.conjugation_fixes()
                };
                Ok((
                    laws.all() && conj,
                    format!("epsilon = {}, swap = {swap}", pair.epsilon.as_str()),
                ))
            })(),
        );
    }
    for n in [3, 5] {
        let rng = &mut r.rng;
        let outcome = (|| {
            let sig = Signature::complex(n)?;
            let mut ok = true;
            for _ in 0..25 {
                for side in [Side::Plus, Side::Minus] {
                    let x = project(&random_multivector(rng, sig, 0.4), side)?;
                    let y = project(&random_multivector(rng, sig, 0.4), side)?;
                    ok &= quotient_map(&(&x * &y), side)?
                        == &quotient_map(&x, side)? * &quotient_map(&y, side)?;
                }
            }
            Ok((ok, "25 pairs per side".into()))
        })();
        r.record(&format!("quotient-homomorphism/n={n}"), outcome);
    }
}

fn rep(r: &mut Runner) {
    const DRAWS: usize = 100;
    let rng = &mut r.rng;
    let outcome = (|| {
        let mut ok = true;
        for _ in 0..DRAWS {
            let s = random_dh(rng);
            ok &= dh_matrix(&s) == gamma_rep(&dh_multivector(&s))?;
        }
        Ok((ok, format!("{DRAWS} draws")))
    })();
    r.record("dh-matrix-equals-gamma-rep", outcome);

    let g = GammaBasis::new();
    let g5_ok = &g.gamma5 * &g.gamma5 == Matrix::identity(4);
    r.record(
        "gamma-anticommutation",
        Ok((
            g.anticommutation_holds() && g5_ok,
            "10 relations, g5^2 = 1".into(),
        )),
    );

    let e = primitive_idempotent_e41();
    let e_ok = &e * &e == e && e.rank() == 1 && e.trace() == exact(1, 0);
    r.record(
        "e41-primitive",
        Ok((e_ok, "idempotent, rank 1, trace 1".into())),
    );

    let rng = &mut r.rng;
    let outcome = (|| {
        let mut ok = true;
        for _ in 0..DRAWS {
            let phi = dh_matrix(&random_dh(rng));
            let pe = &phi * &e;
            let nonzero = (0..4)
                .filter(|&j| pe.column(j).iter().any(|c| *c != exact(0, 0)))
                .count();
            ok &= nonzero <= 1 && pe.column(0) == left_ideal_project(&phi)?;
        }
        Ok((ok, format!("{DRAWS} draws")))
    })();
    r.record("minimal-left-ideal", outcome);

    r.record(
        "helicity-projector-covering",
        (|| {
            let image = gamma_rep(&even_embedding(&Multivector::volume_element(
                Signature::pauli(),
            ))?)?
            .scale(&exact(0, 1));
            let half = exact_ratio(rational(1, 2), rational(0, 1));
            let (p, m) = helicity_projectors();
            let one = Matrix::identity(4);
            let ok = (&one + &image).scale(&half) == p && (&one - &image).scale(&half) == m;
            Ok((ok, "(1 +- i omega)/2 -> P+-".into()))
        })(),
    );

    let rng = &mut r.rng;
    let outcome = (|| {
        let mut ok = true;
        for _ in 0..DRAWS {
            let x = random_multivector(rng, Signature::pauli(), 0.6);
            let y = random_even(rng, Signature::spacetime());
            ok &= pauli_rep(&(&x * &x))? == &pauli_rep(&x)? * &pauli_rep(&x)?;
            ok &= gamma_rep(&(&y * &y))? == &gamma_rep(&y)? * &gamma_rep(&y)?;
        }
        Ok((ok, format!("{DRAWS} draws")))
    })();
    r.record("representations-multiplicative", outcome);
}

fn ratio_window(study: &Study) -> (bool, String) {
    let mut ok = true;
    let mut ratios = Vec::new();
    for c in 0..study.labels.len() {
        let e: Vec<f64> = study.rows.iter().map(|r| r.residuals[c]).collect();
        if e.iter().all(|&x| x <= crate::field::EXACT_ZERO) {
            continue;
        }
        for w in e.windows(2) {
            let q = w[0] / w[1];
            ok &= (3.2..=4.8).contains(&q);
            ratios.push(q);
        }
    }
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0, f64::max);
    (
        ok && !ratios.is_empty(),
        format!("ratios in [{lo:.3}, {hi:.3}]"),
    )
}

fn field(r: &mut Runner) {
    let levels = [8, 16, 32];
    for (dir, h) in [
        ([0, 0, 1], Helicity::Plus),
        ([1, 2, 2], Helicity::Plus),
        ([2, -2, 1], Helicity::Minus),
    ] {
        r.record(
            &format!("maxwell-convergence/{dir:?}/{}", h.as_str()),
            maxwell_study(dir, h, &levels).map(|s| ratio_window(&s)),
        );
    }
    r.record(
        "dh-weyl-convergence/3;[1, 2, 2]",
        dh_study(3, [1, 2, 2], &levels).map(|s| ratio_window(&s)),
    );
    r.record(
        "constant-field-exact-zero",
        (|| {
            let lattice = Lattice::new([3, 4, 4, 4], [0.1; 4], [false, true, true, true])?;
            let mut grid = FieldGrid::new(lattice);
            for (i, name) in ["E1", "E2", "E3", "H1", "H2", "H3"].iter().enumerate() {
                grid.insert_fn(name, |_| num_complex::Complex64::new(i as f64 - 2.0, 0.5))?;
            }
            let m = maxwell_residuals(&grid)?.summary().max();
            Ok((m < 1e-10, format!("max residual {m:e}")))
        })(),
    );
    r.record(
        "chirality-identity",
        (|| {
            let lattice = Lattice::new(
                [5, 8, 8, 8],
                [0.05, 0.125, 0.125, 0.125],
                [false, true, true, true],
            )?;
            let d = chirality_identity_defect(&probe_field(&lattice))?;
            Ok((d < 1e-10, format!("defect {d:e}")))
        })(),
    );
    for h in [Helicity::Plus, Helicity::Minus] {
        r.record(
            &format!("composite-photon/{}", h.as_str()),
            composite_check([1.0, 2.0, -2.0], h, 16).map(|f| {
                (
                    f.max_relative_deviation < 1e-10,
                    format!("max relative deviation {:e}", f.max_relative_deviation),
                )
            }),
        );
    }
}

/// Runs a suite and returns the report along with the elapsed seconds.
pub fn timed_suite(suite: &str, seed: u64) -> Result<(Report, f64)> {
    let t = Instant::now();
    let report = run_suite(suite, seed)?;
    Ok((report, t.elapsed().as_secs_f64()))
}
