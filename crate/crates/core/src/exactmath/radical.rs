use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::Rational;
use crate::{Error, Result};

/// Splits `n` into `coefficient² · radicand` with a squarefree radicand.
pub fn radical_simplify(n: u64) -> (u64, u64) {
    assert!(n >= 1, "radical_simplify needs n >= 1");
    let mut rest = n;
    let mut coefficient = 1u64;
    let mut radicand = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut exponent = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                exponent += 1;
            }
            coefficient *= p.pow(exponent / 2);
            if exponent % 2 == 1 {
                radicand *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever is left is 1 or a prime appearing once
    radicand *= rest;
    (coefficient, radicand)
}

/// `rational_part + Σ coefficient·√radicand` with distinct, ascending,
/// squarefree radicands greater than one and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalSum {
    rational_part: Rational,
    terms: Vec<(Rational, u64)>,
}

impl RadicalSum {
    pub fn rational(r: Rational) -> Self {
        RadicalSum {
            rational_part: r,
            terms: Vec::new(),
        }
    }

    /// `√n`, simplified.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return RadicalSum::default();
        }
        let (c, r) = radical_simplify(n);
        let c = Rational::from_integer(c as i64);
        if r == 1 {
            RadicalSum::rational(c)
        } else {
            RadicalSum {
                rational_part: Rational::ZERO,
                terms: alloc::vec![(c, r)],
            }
        }
    }

    /// Builds a sum from arbitrary `(coefficient, n)` pairs, simplifying each
    /// radical and merging like terms.
    pub fn from_parts(rational_part: Rational, terms: &[(Rational, u64)]) -> Result<Self> {
        let mut sum = RadicalSum::rational(rational_part);
        for &(coef, n) in terms {
            if n == 0 {
                return Err(Error::invalid("radicand must be positive"));
            }
            sum = sum.checked_add(&RadicalSum::sqrt(n).scale(coef)?)?;
        }
        Ok(sum)
    }

    pub fn rational_part(&self) -> Rational {
        self.rational_part
    }

    pub fn terms(&self) -> &[(Rational, u64)] {
        &self.terms
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: Rational) -> Result<Self> {
        if k.is_zero() {
            return Ok(RadicalSum::default());
        }
        let terms = self
            .terms
            .iter()
            .map(|&(c, r)| Ok((c.checked_mul(k)?, r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RadicalSum {
            rational_part: self.rational_part.checked_mul(k)?,
            terms,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut terms: Vec<(Rational, u64)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let next = match (self.terms.get(i), other.terms.get(j)) {
                (Some(&a), Some(&b)) if a.1 == b.1 => {
                    i += 1;
                    j += 1;
                    (a.0.checked_add(b.0)?, a.1)
                }
                (Some(&a), Some(&b)) if a.1 < b.1 => {
                    i += 1;
                    a
                }
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (_, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            if !next.0.is_zero() {
                terms.push(next);
            }
        }
        Ok(RadicalSum {
            rational_part: self.rational_part.checked_add(other.rational_part)?,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(Rational::from_integer(-1))?)
    }

    /// Floating evaluation.
    pub fn value(&self) -> f64 {
        self.terms
            .iter()
            .fold(self.rational_part.to_f64(), |acc, &(c, r)| {
                acc + c.to_f64() * libm::sqrt(r as f64)
            })
    }

    /// Display pieces in reading order: the rational part (omitted when zero
    /// and radicals are present) followed by each radical term.
    pub fn pieces(&self) -> Vec<RadicalPiece> {
        let mut out = Vec::new();
        if !self.rational_part.is_zero() || self.terms.is_empty() {
            out.push(RadicalPiece {
                coefficient: self.rational_part,
                radicand: None,
            });
        }
        for &(c, r) in &self.terms {
            out.push(RadicalPiece {
                coefficient: c,
                radicand: Some(r),
            });
        }
        out
    }

    /// Plain-text spelling, e.g. `13 + sqrt(13)` or `2sqrt(2)`.
    pub fn to_ascii(&self) -> String {
        self.spell(|n| format!("sqrt({n})"))
    }

    /// Spelling with the radical sign, e.g. `13 + √13`.
    pub fn to_unicode(&self) -> String {
        self.spell(|n| format!("\u{221a}{n}"))
    }

    fn spell(&self, radical: impl Fn(u64) -> String) -> String {
        let mut s = String::new();
        for (i, piece) in self.pieces().iter().enumerate() {
            let c = piece.coefficient;
            let negative = c.signum() < 0;
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs().unwrap_or(c);
            match piece.radicand {
                None => s.push_str(&format!("{mag}")),
                Some(n) => {
                    if mag != Rational::ONE {
                        if mag.is_integer() {
                            s.push_str(&format!("{mag}"));
                        } else {
                            s.push_str(&format!("({mag})"));
                        }
                    }
                    s.push_str(&radical(n));
                }
            }
        }
        s
    }
}

/// One summand of a [`RadicalSum`] as it is displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalPiece {
    pub coefficient: Rational,
    pub radicand: Option<u64>,
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

pub fn radical_sum_value(s: &RadicalSum) -> f64 {
    s.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_squarefree(n: u64) -> bool {
        (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
    }

    #[test]
    fn simplify_examples() {
        assert_eq!(radical_simplify(13), (1, 13));
        assert_eq!(radical_simplify(8), (2, 2));
        assert_eq!(radical_simplify(36), (6, 1));
        assert_eq!(radical_simplify(1), (1, 1));
        assert_eq!(radical_simplify(72), (6, 2));
    }

    #[test]
    fn simplify_exhaustive_desk_scale() {
        for n in 1..=1_000_000u64 {
            let (c, r) = radical_simplify(n);
            assert_eq!(c * c * r, n, "n = {n}");
        }
        for n in 1..=20_000u64 {
            assert!(is_squarefree(radical_simplify(n).1), "n = {n}");
        }
    }

    #[test]
    fn value_examples() {
        // 13 + sqrt(13) = 16.605551275463989... (computed with mpmath at 30 digits)
        let s = RadicalSum::from_parts(Rational::from_integer(13), &[(Rational::ONE, 13)]).unwrap();
        assert!((radical_sum_value(&s) - 16.605_551_275_463_989).abs() < 1e-12);
        let s = RadicalSum::rational(Rational::from_integer(15));
        assert_eq!(radical_sum_value(&s), 15.0);
        // 2*sqrt(2) = 2.8284271247461900976...
        let s = RadicalSum::from_parts(Rational::ZERO, &[(Rational::from_integer(2), 2)]).unwrap();
        assert!((radical_sum_value(&s) - 2.828_427_124_746_19).abs() < 1e-12);
    }

    #[test]
    fn like_terms_merge_and_sort() {
        let s = RadicalSum::from_parts(
            Rational::from_integer(1),
            &[(Rational::ONE, 13), (Rational::ONE, 8), (Rational::ONE, 52), (Rational::ONE, 9)],
        )
        .unwrap();
        // 1 + sqrt13 + 2sqrt2 + 2sqrt13 + 3
        assert_eq!(s.rational_part(), Rational::from_integer(4));
        assert_eq!(
            s.terms(),
            &[(Rational::from_integer(2), 2), (Rational::from_integer(3), 13)]
        );
        let zero = s.checked_sub(&s).unwrap();
        assert_eq!(zero, RadicalSum::default());
    }

    #[test]
    fn spelling() {
        let s = RadicalSum::from_parts(Rational::from_integer(13), &[(Rational::ONE, 13)]).unwrap();
        assert_eq!(s.to_ascii(), "13 + sqrt(13)");
        assert_eq!(s.to_unicode(), "13 + \u{221a}13");
        assert_eq!(RadicalSum::sqrt(8).to_ascii(), "2sqrt(2)");
        assert_eq!(RadicalSum::rational(Rational::from_integer(15)).to_ascii(), "15");
        let s = RadicalSum::from_parts(
            Rational::from_integer(-1),
            &[(Rational::from_integer(-1), 5), (Rational::new(1, 2).unwrap(), 3)],
        )
        .unwrap();
        assert_eq!(s.to_ascii(), "-1 + (1/2)sqrt(3) - sqrt(5)");
    }
}
