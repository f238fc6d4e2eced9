//! Basis blades as generator bitmasks.
//!
//! Bit `i` set means generator `e_{i+1}` is present; the empty mask is the
//! scalar unit (written `e0` in I/O).

use std::cmp::Ordering;
use std::fmt;

use super::signature::{Signature, MAX_GENERATORS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_mask(mask: u16) -> Self {
        Blade(mask)
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(i: usize) -> Result<Self> {
        if i == 0 || i > MAX_GENERATORS {
            return Err(Error::InvalidBlade {
                indices: vec![i],
                dim: MAX_GENERATORS,
            });
        }
        Ok(Blade(1 << (i - 1)))
    }

    /// Builds a blade from strictly ascending 1-based indices. A leading
    /// `0` denotes the scalar unit and is dropped, so `[0, 1]` is `e1`.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let bad = || Error::InvalidBlade {
            indices: indices.to_vec(),
            dim: MAX_GENERATORS,
        };
        let rest = match indices.first() {
            Some(0) => &indices[1..],
            _ => indices,
        };
        let mut mask = 0u16;
        let mut last = 0usize;
        for &i in rest {
            if i <= last || i > MAX_GENERATORS {
                return Err(bad());
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Ok(Blade(mask))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..MAX_GENERATORS)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, generator: usize) -> bool {
        (1..=MAX_GENERATORS).contains(&generator) && self.0 & (1 << (generator - 1)) != 0
    }

    pub fn fits(self, sig: &Signature) -> bool {
        sig.dim() == 16 || self.0 >> sig.dim() == 0
    }

    /// Geometric product of two basis blades: `(sign, blade)`.
    ///
    /// The sign is the parity of generator pairs that must be transposed to
    /// bring the concatenation into ascending order, times the squares of
    /// all shared negative generators.
    #[inline]
    pub fn product(self, rhs: Blade, sig: &Signature) -> (i8, Blade) {
        let mut swaps = 0u32;
        let mut a = self.0 >> 1;
        while a != 0 {
            swaps += (a & rhs.0).count_ones();
            a >>= 1;
        }
        swaps += (self.0 & rhs.0 & sig.negative_mask()).count_ones();
        let sign = if swaps & 1 == 0 { 1 } else { -1 };
        (sign, Blade(self.0 ^ rhs.0))
    }

    /// Sign picked up by reversion: `(-1)^{k(k-1)/2}`.
    pub fn reversion_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn involution_sign(self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All blades of an algebra in canonical (grade, lexicographic) order.
    pub fn all(sig: &Signature) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..sig.blade_count()).map(|m| Blade(m as u16)).collect();
        v.sort();
        v
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the ascending index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        let idx = self.indices();
        let wide = idx.iter().any(|&i| i >= 10);
        for (n, i) in idx.iter().enumerate() {
            if wide && n > 0 {
                write!(f, "_")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    #[test]
    fn from_indices_rejects_unsorted() {
        assert!(Blade::from_indices(&[2, 1]).is_err());
        assert!(Blade::from_indices(&[1, 1]).is_err());
        assert!(Blade::from_indices(&[17]).is_err());
    }

    #[test]
    fn e0_is_the_unit() {
        assert_eq!(b(&[0]), Blade::SCALAR);
        assert_eq!(b(&[0, 1]), b(&[1]));
    }

    #[test]
    fn ordering_is_grade_then_lex() {
        let sig = Signature::complex(3).unwrap();
        let names: Vec<String> = Blade::all(&sig).iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]);
    }

    #[test]
    fn product_signs() {
        let sig = Signature::real(3, 0).unwrap();
        assert_eq!(b(&[1]).product(b(&[1]), &sig), (1, Blade::SCALAR));
        assert_eq!(b(&[2]).product(b(&[1]), &sig), (-1, b(&[1, 2])));
        // ω e1 = e2 e3
        assert_eq!(b(&[1, 2, 3]).product(b(&[1]), &sig), (1, b(&[2, 3])));
        let sta = Signature::spacetime();
        assert_eq!(b(&[2]).product(b(&[2]), &sta), (-1, Blade::SCALAR));
    }

    #[test]
    fn reversion_signs_by_grade() {
        let signs: Vec<i8> = (0..6)
            .map(|k| Blade::from_mask((1u16 << k) - 1).reversion_sign())
            .collect();
        assert_eq!(signs, [1, 1, -1, -1, 1, 1]);
    }
}
