use serde::Serialize;

/// Class tag attached to `p - q (mod 8)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RealClassTag {
    /// `p - q ≡ 0, 2`
    Real,
    /// `p - q ≡ 4, 6`
    Quaternionic,
    /// `p - q ≡ 1, 5`
    Quotient,
    /// `p - q ≡ 3, 7`
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealClass {
    pub residue: u8,
    pub tag: RealClassTag,
}

pub fn classify_real(p: usize, q: usize) -> RealClass {
    let residue = (p as i64 - q as i64).rem_euclid(8) as u8;
    let tag = match residue {
        0 | 2 => RealClassTag::Real,
        4 | 6 => RealClassTag::Quaternionic,
        1 | 5 => RealClassTag::Quotient,
        _ => RealClassTag::Other,
    };
    RealClass { residue, tag }
}

impl RealClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RealClassTag::Real => "real",
            RealClassTag::Quaternionic => "quaternionic",
            RealClassTag::Quotient => "quotient",
            RealClassTag::Other => "other",
        }
    }
}
