use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// `coefficient · Π symbol^exponent`, symbols kept in written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: i64,
    pub vars: Vec<(char, u32)>,
}

impl Monomial {
    pub fn eval(&self, point: &[(char, i64)]) -> Result<i128> {
        let mut acc = self.coefficient as i128;
        for &(sym, exp) in &self.vars {
            let v = point
                .iter()
                .find(|(s, _)| *s == sym)
                .map(|&(_, v)| v as i128)
                .ok_or_else(|| Error::invalid(format!("no value for symbol `{sym}`")))?;
            for _ in 0..exp {
                acc = acc.checked_mul(v).ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }

    fn write_unsigned(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag = self.coefficient.unsigned_abs();
        if mag != 1 || self.vars.is_empty() {
            write!(f, "{mag}")?;
        }
        for &(sym, exp) in &self.vars {
            if exp == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A sum of monomials in a specific written order, e.g. `b^2 + 2ba + a^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialForm(pub Vec<Monomial>);

impl MonomialForm {
    pub fn eval(&self, point: &[(char, i64)]) -> Result<i128> {
        self.0.iter().try_fold(0i128, |acc, m| {
            acc.checked_add(m.eval(point)?).ok_or(Error::Overflow)
        })
    }
}

impl fmt::Display for MonomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            match (i, m.coefficient < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            m.write_unsigned(f)?;
        }
        if self.0.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialForm {
    type Err = Error;

    /// Parses the caret notation written by [`MonomialForm`]'s `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::invalid(format!("cannot read {s:?} as a polynomial: {why}"));
        let mut terms = Vec::new();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if m < p => (&rest[..m], Some((true, &rest[m + 3..]))),
                (Some(p), _) => (&rest[..p], Some((false, &rest[p + 3..]))),
                (None, Some(m)) => (&rest[..m], Some((true, &rest[m + 3..]))),
                (None, None) => (rest, None),
            };
            terms.push(parse_monomial(term, negative).ok_or_else(|| bad("bad term"))?);
            match next {
                Some((neg, r)) => {
                    negative = neg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(MonomialForm(terms))
    }
}

fn parse_monomial(term: &str, negative: bool) -> Option<Monomial> {
    let bytes = term.as_bytes();
    let digits = bytes.iter().take_while(|b| b.is_ascii_digit()).count();
    let coefficient: i64 = if digits == 0 {
        1
    } else {
        term[..digits].parse().ok()?
    };
    let mut vars = Vec::new();
    let mut i = digits;
    while i < bytes.len() {
        let sym = bytes[i] as char;
        if !sym.is_ascii_alphabetic() {
            return None;
        }
        i += 1;
        let mut exp = 1u32;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            let n = bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
            if n == 0 {
                return None;
            }
            exp = term[i..i + n].parse().ok()?;
            i += n;
        }
        vars.push((sym, exp));
    }
    if digits == 0 && vars.is_empty() {
        return None;
    }
    Some(Monomial {
        coefficient: if negative { -coefficient } else { coefficient },
        vars,
    })
}

/// Every way of writing the expansion of `(first + second)^2` by reordering
/// the three monomials and writing the cross term either way round: twelve
/// strings, starting with the alphabetical form `a^2 + 2ab + b^2`.
pub fn enumerate_expansion_forms(first: char, second: char) -> Result<Vec<String>> {
    if first == second {
        return Err(Error::invalid("binomial square needs two distinct symbols"));
    }
    if !first.is_ascii_lowercase() || !second.is_ascii_lowercase() {
        return Err(Error::invalid("symbols must be lowercase ASCII letters"));
    }
    let (p, q) = if first < second {
        (first, second)
    } else {
        (second, first)
    };
    let square = |s: char| Monomial {
        coefficient: 1,
        vars: alloc::vec![(s, 2)],
    };
    let cross = |s: char, t: char| Monomial {
        coefficient: 2,
        vars: alloc::vec![(s, 1), (t, 1)],
    };
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out: Vec<String> = Vec::with_capacity(12);
    for order in ORDERS {
        for cross_term in [cross(p, q), cross(q, p)] {
            let pieces = [square(p), cross_term, square(q)];
            let form = MonomialForm(order.iter().map(|&i| pieces[i].clone()).collect());
            let s = format!("{form}");
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}
