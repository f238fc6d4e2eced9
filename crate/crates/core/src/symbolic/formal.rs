use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::token::{Atom, Token};
use crate::algebra::coeff::{display_exact, exact, format_rational, Coefficient, ExactComplex};
use crate::error::Result;

/// Finite linear combination of atoms with exact complex coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FormalSum {
    terms: BTreeMap<Atom, ExactComplex>,
}

impl FormalSum {
    pub fn atom(atom: Atom, c: ExactComplex) -> Self {
        let mut s = Self::default();
        s.accumulate(atom, c);
        s
    }

    pub fn token(t: Token) -> Self {
        Self::atom(Atom::Token(t), exact(1, 0))
    }

    pub fn constant(c: ExactComplex) -> Self {
        Self::atom(Atom::Unit, c)
    }

    pub fn nabla(mu: u8) -> Self {
        Self::atom(Atom::Nabla(mu), exact(1, 0))
    }

    /// Parses a sum like `d0A1 + d1A0` or `d2A3 - d3A2` (unit coefficients only).
    pub fn parse_unit_sum(s: &str) -> Result<Self> {
        let mut out = Self::default();
        let normalized = s.replace(" - ", " + -");
        for part in normalized.split(" + ") {
            let part = part.trim();
            if part == "0" {
                continue;
            }
            let (sign, tok) = match part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, part),
            };
            out.accumulate(Atom::Token(Token::parse(tok)?), exact(sign, 0));
        }
        Ok(out)
    }

    fn accumulate(&mut self, atom: Atom, c: ExactComplex) {
        if Coefficient::is_zero(&c) {
            return;
        }
        let entry = self
            .terms
            .entry(atom.clone())
            .or_insert_with(|| exact(0, 0));
        *entry = entry.plus(&c);
        if Coefficient::is_zero(entry) {
            self.terms.remove(&atom);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, atom: &Atom) -> ExactComplex {
        self.terms.get(atom).cloned().unwrap_or_else(|| exact(0, 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let mut out = Self::default();
        for (a, x) in &self.terms {
            out.accumulate(a.clone(), c.clone() * x.clone());
        }
        out
    }

    /// Tokens carrying the given field symbol.
    pub fn symbols(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self
            .terms
            .keys()
            .filter_map(|a| match a {
                Atom::Token(t) => Some(t.symbol.as_str()),
                _ => None,
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Deterministic text form: terms in atom order, unit coefficients elided.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (atom, c)) in self.terms.iter().enumerate() {
            let coeff = display_exact(c);
            let (negative, mag) = match coeff.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, coeff),
            };
            match (n, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            match atom {
                Atom::Unit => out.push_str(&mag),
                _ if mag == "1" => out.push_str(&atom.to_string()),
                _ => out.push_str(&format!("{mag}*{atom}")),
            }
        }
        out
    }

    pub fn to_json(&self) -> Vec<FormalTermJson> {
        self.terms
            .iter()
            .map(|(a, c)| FormalTermJson {
                token: match a {
                    Atom::Unit => None,
                    Atom::Nabla(mu) => Some(TokenJson {
                        d: Some(*mu),
                        sym: None,
                        c: None,
                    }),
                    Atom::Token(t) => Some(TokenJson {
                        d: t.derivative,
                        sym: Some(t.symbol.clone()),
                        c: Some(t.component),
                    }),
                },
                re: format_rational(&c.re),
                im: format_rational(&c.im),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TokenJson {
    pub d: Option<u8>,
    pub sym: Option<String>,
    pub c: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormalTermJson {
    pub token: Option<TokenJson>,
    pub re: String,
    pub im: String,
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Coefficient for FormalSum {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(exact(1, 0))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.accumulate(a.clone(), c.clone());
        }
        out
    }
    fn negate(&self) -> Self {
        self.scale(&exact(-1, 0))
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.accumulate(a.try_mul(b)?, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }
    fn conjugate(&self) -> Self {
        let mut out = Self::default();
        for (a, c) in &self.terms {
            out.accumulate(a.clone(), c.conj());
        }
        out
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(exact(n, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rational;
    use num_complex::Complex;

    #[test]
    fn render_signs_and_coefficients() {
        let s = FormalSum::parse_unit_sum("d2A3 - d3A2").unwrap();
        assert_eq!(s.render(), "d2A3 - d3A2");
        let s = FormalSum::parse_unit_sum("-d1A3 + d3A1").unwrap();
        assert_eq!(s.render(), "-d1A3 + d3A1");
        let half_i = Complex::new(rational(0, 1), rational(1, 2));
        let t = FormalSum::token(Token::field("phi", 1)).scale(&half_i);
        assert_eq!(t.render(), "i/2*phi1");
        assert_eq!(FormalSum::default().render(), "0");
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let x = FormalSum::parse_unit_sum("d0A1 + d1A0").unwrap();
        assert_eq!(FormalSum::one().try_mul(&x).unwrap(), x);
        assert_eq!(x.try_mul(&FormalSum::one()).unwrap(), x);
    }

    #[test]
    fn token_products_are_rejected() {
        let a = FormalSum::token(Token::field("A", 0));
        assert!(a.try_mul(&a).is_err());
        let d = FormalSum::nabla(0);
        assert_eq!(d.try_mul(&a).unwrap().render(), "d0A0");
    }

    #[test]
    fn json_shape() {
        let s = FormalSum::token(Token::derivative(0, "A", 1));
        let j = serde_json::to_value(s.to_json()).unwrap();
        assert_eq!(j[0]["token"]["d"], 0);
        assert_eq!(j[0]["token"]["sym"], "A");
        assert_eq!(j[0]["token"]["c"], 1);
        assert_eq!(j[0]["re"], "1/1");
        assert_eq!(j[0]["im"], "0/1");
    }
}
