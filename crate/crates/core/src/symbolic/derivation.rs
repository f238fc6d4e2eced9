//! Labeled coefficient groups of the symbolic expansions.

use serde::Serialize;

use super::expand::{nabla_f_product, nabla_product};
use super::formal::{FormalSum, FormalTermJson};
use super::token::Token;
use crate::algebra::{Blade, Coefficient, Multivector};
use crate::error::{Error, Result};
use crate::matrix::{gamma21, helicity_projectors, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub struct Group {
    pub label: String,
    /// Blade written in the conventional orientation (`e0` is the unit,
    /// `e3e1` rather than `e1e3`).
    pub blade: String,
    pub value: FormalSum,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    pub target: String,
    pub header: String,
    pub groups: Vec<Group>,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    label: &'a str,
    blade: &'a str,
    text: String,
    terms: Vec<FormalTermJson>,
}

#[derive(Serialize)]
struct DerivationJson<'a> {
    target: &'a str,
    header: &'a str,
    groups: Vec<GroupJson<'a>>,
}

impl Derivation {
    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.header);
        for g in &self.groups {
            out.push_str(&format!(
                "{:<16}{:<9}{}\n",
                g.label,
                g.blade,
                g.value.render()
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = DerivationJson {
            target: &self.target,
            header: &self.header,
            groups: self
                .groups
                .iter()
                .map(|g| GroupJson {
                    label: &g.label,
                    blade: &g.blade,
                    text: g.value.render(),
                    terms: g.value.to_json(),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("derivation serializes")
    }
}

/// Blades of `Cl(3,0)` in the conventional orientation with their sign
/// relative to the canonical ascending blade.
const ORIENTED: [(&str, u16, i8); 8] = [
    ("e0", 0b000, 1),
    ("e0e1", 0b001, 1),
    ("e0e2", 0b010, 1),
    ("e0e3", 0b100, 1),
    ("e2e3", 0b110, 1),
    ("e3e1", 0b101, -1),
    ("e1e2", 0b011, 1),
    ("e1e2e3", 0b111, 1),
];

fn grouped(x: &Multivector<FormalSum>, labels: [&str; 8], vector_names: [&str; 4]) -> Vec<Group> {
    ORIENTED
        .iter()
        .zip(labels)
        .enumerate()
        .map(|(n, (&(name, mask, sign), label))| {
            let blade = if (1..4).contains(&n) {
                vector_names[n]
            } else {
                name
            };
            Group {
                label: label.to_string(),
                blade: blade.to_string(),
                value: x.coefficient(Blade::from_mask(mask)).signed(sign),
            }
        })
        .collect()
}

/// `∇A` grouped into the Lorentz scalar, `E^i` and `H^i`.
pub fn derive_nabla_a() -> Derivation {
    let x = nabla_product("A");
    Derivation {
        target: "nabla-a".into(),
        header: "nabla A = (d0 e0 + d1 e1 + d2 e2 + d3 e3)(A0 e0 + A1 e1 + A2 e2 + A3 e3)".into(),
        groups: grouped(
            &x,
            [
                "Lorentz",
                "E1",
                "E2",
                "E3",
                "H1",
                "H2",
                "H3",
                "pseudoscalar",
            ],
            ["e0", "e0e1", "e0e2", "e0e3"],
        ),
    }
}

/// `∇F` grouped into the four Maxwell left-hand sides.
pub fn derive_nabla_f() -> Derivation {
    let x = nabla_f_product();
    Derivation {
        target: "nabla-f".into(),
        header: "nabla F = (d0 e0 + d1 e1 + d2 e2 + d3 e3)((E1 + w H1) e1 + (E2 + w H2) e2 + (E3 + w H3) e3)".into(),
        groups: grouped(
            &x,
            [
                "divE",
                "-(curlH-d0E)1",
                "-(curlH-d0E)2",
                "-(curlH-d0E)3",
                "curlE+d0H1",
                "curlE+d0H2",
                "curlE+d0H3",
                "divH",
            ],
            ["e0", "e1", "e2", "e3"],
        ),
    }
}

/// The closed Dirac–Hestenes matrix with `φᵢ` and `φᵢ*` as formal tokens.
fn formal_dh_matrix() -> Matrix<FormalSum> {
    let p = |i| FormalSum::token(Token::field("phi", i));
    let c = |i| FormalSum::token(Token::field("phibar", i));
    Matrix::from_rows(vec![
        vec![p(1), c(2).negate(), p(3), c(4)],
        vec![p(2), c(1), p(4), c(3).negate()],
        vec![p(3), c(4), p(1), c(2).negate()],
        vec![p(4), c(3).negate(), p(2), c(1)],
    ])
    .expect("4x4")
}

/// `ψ₁..ψ₈` read off `P±·φ·γ₂γ₁` with `φ` kept symbolic.
pub fn derive_weyl_split() -> Derivation {
    let constant = |m: &Matrix| m.map(|c| FormalSum::constant(c.clone()));
    let right = &formal_dh_matrix() * &constant(&gamma21());
    let (p, m) = helicity_projectors();
    let halves = [&constant(&p) * &right, &constant(&m) * &right];
    let mut groups = Vec::new();
    for k in 0..8 {
        let src = &halves[k / 4];
        for r in 0..2 {
            groups.push(Group {
                label: format!("psi{}", k + 1),
                blade: r.to_string(),
                value: src.get(r, k % 4).clone(),
            });
        }
    }
    Derivation {
        target: "weyl-split".into(),
        header: "phi+- = (1 +- g5)/2 phi g2 g1; psi1..psi4 from phi+, psi5..psi8 from phi-".into(),
        groups,
    }
}

/// Dispatches on the target name used by the command line.
pub fn derive(target: &str) -> Result<Derivation> {
    match target {
        "nabla-a" => Ok(derive_nabla_a()),
        "nabla-f" => Ok(derive_nabla_f()),
        "weyl-split" => Ok(derive_weyl_split()),
        other => Err(Error::Parse(format!("unknown derivation target {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nabla_a_has_eight_groups() {
        let d = derive_nabla_a();
        assert_eq!(d.groups.len(), 8);
        assert_eq!(d.groups[0].label, "Lorentz");
        assert_eq!(d.groups[0].value.render(), "d0A0 + d1A1 + d2A2 + d3A3");
        assert_eq!(d.groups[4].value.render(), "d2A3 - d3A2");
        assert_eq!(d.groups[5].value.render(), "-d1A3 + d3A1");
        assert_eq!(d.groups[7].value.render(), "0");
    }

    #[test]
    fn nabla_f_groups_are_maxwell_sides() {
        let d = derive_nabla_f();
        let labels: Vec<&str> = d.groups.iter().map(|g| g.label.as_str()).collect();
        assert!(labels.contains(&"divH"));
        assert_eq!(d.groups[0].value.render(), "d1E1 + d2E2 + d3E3");
        assert_eq!(d.groups[7].value.render(), "d1H1 + d2H2 + d3H3");
        assert_eq!(d.groups[4].value.render(), "d0H1 + d2E3 - d3E2");
    }

    #[test]
    fn weyl_split_matches_psi_formulas() {
        let d = derive_weyl_split();
        assert_eq!(d.groups.len(), 16);
        let text = |n: usize| d.groups[n].value.render();
        assert_eq!(text(0), "i/2*phi1 - i/2*phi3");
        assert_eq!(text(1), "i/2*phi2 - i/2*phi4");
        assert_eq!(text(2), "i/2*phibar2 + i/2*phibar4");
        assert_eq!(text(3), "-i/2*phibar1 - i/2*phibar3");
        assert_eq!(text(8), "i/2*phi1 + i/2*phi3");
        assert_eq!(text(15), "-i/2*phibar1 + i/2*phibar3");
    }

    #[test]
    fn unknown_target() {
        assert!(derive("nabla-x").is_err());
        assert_eq!(derive("nabla-a").unwrap(), derive_nabla_a());
    }

    #[test]
    fn json_carries_text_and_terms() {
        let j = derive_nabla_a().to_json();
        assert_eq!(j["groups"][1]["label"], "E1");
        assert_eq!(j["groups"][1]["text"], "d0A1 + d1A0");
        assert_eq!(j["groups"][1]["terms"][0]["token"]["c"], 1);
    }
}
