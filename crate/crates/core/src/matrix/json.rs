//! Row-major JSON form of exact matrices.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::gamma::gamma_rep;
use super::mat::Matrix;
use super::pauli::pauli_rep;
use crate::algebra::coeff::format_rational;
use crate::algebra::Multivector;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    Pauli,
    Gamma,
}

impl BasisTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisTag::Pauli => "pauli",
            BasisTag::Gamma => "gamma",
        }
    }
}

/// A representation image together with the basis that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    pub basis: BasisTag,
    pub entries: Matrix,
}

impl MatrixRep {
    pub fn of(x: &Multivector, basis: BasisTag) -> Result<Self> {
        let entries = match basis {
            BasisTag::Pauli => pauli_rep(x)?,
            BasisTag::Gamma => gamma_rep(x)?,
        };
        Ok(Self { basis, entries })
    }

    pub fn to_json(&self) -> Value {
        json!({ "basis": self.basis.as_str(), "matrix": matrix_json(&self.entries) })
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.row_vecs()
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| json!({ "re": format_rational(&c.re), "im": format_rational(&c.im) })).collect()))
            .collect(),
    )
}
