use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Rational;
use crate::{Error, Result};

/// Integer polynomial of degree at most two, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<i64>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped so the leading coefficient is
    /// nonzero (the zero polynomial has no coefficients).
    pub fn new(mut coefficients: Vec<i64>) -> Result<Self> {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        if coefficients.len() > 3 {
            return Err(Error::invalid("degree above 2 is not supported"));
        }
        Ok(IntPolynomial { coefficients })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coefficients.get(degree).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: Rational) -> Result<Rational> {
        self.coefficients
            .iter()
            .rev()
            .try_fold(Rational::ZERO, |acc, &c| {
                acc.checked_mul(x)?.checked_add(Rational::from_integer(c))
            })
    }

    /// Conventional spelling in `var`, highest degree first:
    /// `x^2 - 5x + 6`, `2x^2 - 6x - 8`, `-x^2 + 1`.
    pub fn to_text(&self, var: char) -> String {
        let mut s = String::new();
        for (degree, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            if mag != 1 || degree == 0 {
                s.push_str(&format!("{mag}"));
            }
            match degree {
                0 => {}
                1 => s.push(var),
                d => s.push_str(&format!("{var}^{d}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// `lead·(x − r1)(x − r2)`; every coefficient must come out an integer.
pub fn quadratic_from_roots(r1: Rational, r2: Rational, lead: i64) -> Result<IntPolynomial> {
    if lead == 0 {
        return Err(Error::invalid("leading coefficient must be nonzero"));
    }
    let lead_r = Rational::from_integer(lead);
    let b = r1.checked_add(r2)?.checked_mul(lead_r)?.checked_neg()?;
    let c = r1.checked_mul(r2)?.checked_mul(lead_r)?;
    if !b.is_integer() || !c.is_integer() {
        return Err(Error::invalid(format!(
            "{lead}(x - {r1})(x - {r2}) does not have integer coefficients"
        )));
    }
    IntPolynomial::new(alloc::vec![c.numer(), b.numer(), lead])
}
