//! JSON multivector format with exact `"num/den"` rationals.

use serde::{Deserialize, Serialize};

use super::blade::Blade;
use super::coeff::{format_rational, parse_rational, ExactComplex};
use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub blade: Vec<usize>,
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultivectorJson {
    pub signature: Signature,
    pub terms: Vec<TermJson>,
}

impl From<&Multivector<ExactComplex>> for MultivectorJson {
    fn from(x: &Multivector<ExactComplex>) -> Self {
        let terms = x
            .terms()
            .map(|(b, c)| TermJson {
                blade: b.indices(),
                re: format_rational(&c.re),
                im: format_rational(&c.im),
            })
            .collect();
        Self {
            signature: x.signature(),
            terms,
        }
    }
}

impl MultivectorJson {
    pub fn to_multivector(&self) -> Result<Multivector<ExactComplex>> {
        let sig = Signature::new(
            self.signature.p as usize,
            self.signature.q as usize,
            self.signature.complexified,
        )?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = ExactComplex::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
            terms.push((Blade::from_indices(&t.blade)?, c));
        }
        Multivector::from_terms(sig, terms)
    }
}

pub fn to_json(x: &Multivector<ExactComplex>) -> serde_json::Value {
    serde_json::to_value(MultivectorJson::from(x)).expect("multivector serializes")
}

pub fn from_json_str(s: &str) -> Result<Multivector<ExactComplex>> {
    let j: MultivectorJson = serde_json::from_str(s)?;
    j.to_multivector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::exact;

    #[test]
    fn parses_documented_format() {
        let s = r#"{"signature":{"p":3,"q":0,"complex":true},
                    "terms":[{"blade":[],"re":"1/2","im":"0/1"},
                             {"blade":[1,2,3],"re":"0/1","im":"1/2"}]}"#;
        let x = from_json_str(s).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(
            x.coefficient_of(&[1, 2, 3]).unwrap().im,
            crate::algebra::coeff::rational(1, 2)
        );
        let back = to_json(&x);
        assert_eq!(back["terms"][1]["im"], "1/2");
        assert_eq!(back["signature"]["complex"], true);
    }

    #[test]
    fn e0_maps_to_scalar() {
        let s = r#"{"signature":{"p":3,"q":0,"complex":false},
                    "terms":[{"blade":[0],"re":"2","im":"0"},{"blade":[0,1],"re":"1","im":"0"}]}"#;
        let x = from_json_str(s).unwrap();
        assert_eq!(x.coefficient_of(&[]).unwrap(), exact(2, 0));
        assert_eq!(x.coefficient_of(&[1]).unwrap(), exact(1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        let s = r#"{"signature":{"p":2,"q":0,"complex":true},"terms":[{"blade":[3],"re":"1","im":"0"}]}"#;
        assert!(from_json_str(s).is_err());
        let s = r#"{"signature":{"p":2,"q":0,"complex":true},"terms":[{"blade":[1],"re":"1/0","im":"0"}]}"#;
        assert!(from_json_str(s).is_err());
    }
}
