use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field component, optionally differentiated once: `∂^μ X^ν`.
///
/// Ordered by derivative index, then component index, then symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Token {
    #[serde(rename = "d")]
    pub derivative: Option<u8>,
    #[serde(rename = "c")]
    pub component: u8,
    #[serde(rename = "sym")]
    pub symbol: String,
}

impl Token {
    pub fn field(symbol: &str, component: u8) -> Self {
        Self {
            derivative: None,
            component,
            symbol: symbol.to_string(),
        }
    }

    pub fn derivative(mu: u8, symbol: &str, component: u8) -> Self {
        Self {
            derivative: Some(mu),
            component,
            symbol: symbol.to_string(),
        }
    }

    /// Parses `d<μ><Sym><ν>` or `<Sym><ν>`, e.g. `d0A1`, `E3`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid token {s:?}"));
        let (derivative, rest) = match s.strip_prefix('d') {
            Some(r) if r.starts_with(|c: char| c.is_ascii_digit()) => {
                let mu = r[..1].parse::<u8>().map_err(|_| bad())?;
                (Some(mu), &r[1..])
            }
            _ => (None, s),
        };
        let split = rest.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (sym, comp) = rest.split_at(split);
        if sym.is_empty() || derivative.is_some_and(|m| m > 3) {
            return Err(bad());
        }
        let component = comp.parse::<u8>().map_err(|_| bad())?;
        Ok(Self {
            derivative,
            component,
            symbol: sym.to_string(),
        })
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(mu) = self.derivative {
            write!(f, "d{mu}")?;
        }
        write!(f, "{}{}", self.symbol, self.component)
    }
}

/// Basis element of the formal ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// The multiplicative unit.
    Unit,
    /// The bare derivative operator `∂^μ`, waiting for a field on its right.
    Nabla(u8),
    Token(Token),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Unit => write!(f, "1"),
            Atom::Nabla(mu) => write!(f, "d{mu}"),
            Atom::Token(t) => t.fmt(f),
        }
    }
}

impl Atom {
    pub(crate) fn try_mul(&self, rhs: &Atom) -> Result<Atom> {
        match (self, rhs) {
            (Atom::Unit, x) | (x, Atom::Unit) => Ok(x.clone()),
            (Atom::Nabla(mu), Atom::Token(t)) if t.derivative.is_none() => Ok(Atom::Token(Token {
                derivative: Some(*mu),
                ..t.clone()
            })),
            (a, b) => Err(Error::UnsupportedProduct(format!("{a} * {b}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        for s in ["d0A1", "A3", "d3H2", "rho0", "j2"] {
            assert_eq!(Token::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Token::parse("d2A3").unwrap(), Token::derivative(2, "A", 3));
        assert!(Token::parse("d").is_err());
        assert!(Token::parse("d5A1").is_err());
        assert!(Token::parse("A").is_err());
    }

    #[test]
    fn ordering_is_derivative_then_component() {
        let mut v = [
            Token::derivative(1, "A", 0),
            Token::derivative(0, "A", 1),
            Token::derivative(0, "A", 0),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, ["d0A0", "d0A1", "d1A0"]);
    }

    #[test]
    fn only_first_order_products() {
        let a = Atom::Token(Token::field("A", 1));
        let d = Atom::Nabla(2);
        assert_eq!(
            d.try_mul(&a).unwrap(),
            Atom::Token(Token::derivative(2, "A", 1))
        );
        assert!(a.try_mul(&d).is_err());
        assert!(a.try_mul(&a).is_err());
        let da = d.try_mul(&a).unwrap();
        assert!(Atom::Nabla(0).try_mul(&da).is_err());
    }
}
