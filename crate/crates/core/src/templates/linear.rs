use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{retry, Answer, Bounds, GeneratedItem, ItemData, Question};
use crate::exactmath::{decimal_forms, gcd_i64, lcm_i64, rational_equivalents, Rational};
use crate::stats_sim::RngStream;
use crate::{Error, Result};

pub const VARIABLES: [char; 6] = ['x', 'y', 'z', 'e', 't', 'w'];

const INT_STEM: &str = "Solve for the value of {v} that makes the following equation true.";
const RATIONAL_NOTE: &str = "Enter your answer as a rational number.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Term {
    Variable(Rational),
    Constant(Rational),
}

impl Term {
    fn coefficient(&self) -> Rational {
        match *self {
            Term::Variable(c) | Term::Constant(c) => c,
        }
    }

    fn value_at(&self, v: Rational) -> Result<Rational> {
        match *self {
            Term::Variable(c) => c.checked_mul(v),
            Term::Constant(c) => Ok(c),
        }
    }

    /// Unsigned spelling: `17z`, `z`, `2x/3`, `x/3`, `842`, `3/4`.
    fn magnitude_text(&self, var: char) -> String {
        let c = self.coefficient();
        let (num, den) = (c.numer().unsigned_abs(), c.denom());
        match self {
            Term::Variable(_) => {
                let mut s = String::new();
                if num != 1 {
                    s.push_str(&format!("{num}"));
                }
                s.push(var);
                if den != 1 {
                    s.push_str(&format!("/{den}"));
                }
                s
            }
            Term::Constant(_) => {
                if den == 1 {
                    format!("{num}")
                } else {
                    format!("{num}/{den}")
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A linear equation in one variable, terms kept in written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEquation {
    variable: char,
    left: Vec<Term>,
    right: Vec<Term>,
}

impl LinearEquation {
    /// Both sides nonempty, no zero terms, and a nonzero net variable
    /// coefficient so the solution is unique.
    pub fn new(variable: char, left: Vec<Term>, right: Vec<Term>) -> Result<Self> {
        if !variable.is_ascii_lowercase() {
            return Err(Error::invalid("variable must be a lowercase letter"));
        }
        if left.is_empty() || right.is_empty() {
            return Err(Error::invalid("both sides of the equation need a term"));
        }
        if left.iter().chain(&right).any(|t| t.coefficient().is_zero()) {
            return Err(Error::invalid("zero terms are not written"));
        }
        let eq = LinearEquation {
            variable,
            left,
            right,
        };
        if eq.net_variable_coefficient()?.is_zero() {
            return Err(Error::invalid("variable cancels; no unique solution"));
        }
        Ok(eq)
    }

    pub fn variable(&self) -> char {
        self.variable
    }

    pub fn left(&self) -> &[Term] {
        &self.left
    }

    pub fn right(&self) -> &[Term] {
        &self.right
    }

    fn side_sum(terms: &[Term], pick: impl Fn(&Term) -> Option<Rational>) -> Result<Rational> {
        terms
            .iter()
            .filter_map(pick)
            .try_fold(Rational::ZERO, Rational::checked_add)
    }

    fn net_variable_coefficient(&self) -> Result<Rational> {
        let var = |t: &Term| match *t {
            Term::Variable(c) => Some(c),
            Term::Constant(_) => None,
        };
        Self::side_sum(&self.left, var)?.checked_sub(Self::side_sum(&self.right, var)?)
    }

    fn net_constant(&self) -> Result<Rational> {
        let constant = |t: &Term| match *t {
            Term::Constant(c) => Some(c),
            Term::Variable(_) => None,
        };
        Self::side_sum(&self.right, constant)?.checked_sub(Self::side_sum(&self.left, constant)?)
    }

    /// The unique solution, exactly.
    pub fn solve(&self) -> Result<Rational> {
        self.net_constant()?.checked_div(self.net_variable_coefficient()?)
    }

    /// Values of the left and right sides at `v`.
    pub fn sides_at(&self, v: Rational) -> Result<(Rational, Rational)> {
        let eval = |terms: &[Term]| {
            terms
                .iter()
                .try_fold(Rational::ZERO, |acc, t| acc.checked_add(t.value_at(v)?))
        };
        Ok((eval(&self.left)?, eval(&self.right)?))
    }

    pub fn is_solution(&self, v: Rational) -> Result<bool> {
        let (l, r) = self.sides_at(v)?;
        Ok(l == r)
    }

    /// All denominators appearing in the coefficients.
    pub fn denominators(&self) -> Vec<i64> {
        self.left
            .iter()
            .chain(&self.right)
            .map(|t| t.coefficient().denom())
            .filter(|&d| d > 1)
            .collect()
    }

    /// Written form, e.g. `17z + 842 = -5z - 16` or `4y/3 = -5/3`.
    pub fn to_text(&self) -> String {
        let side = |terms: &[Term]| {
            let mut s = String::new();
            for (i, t) in terms.iter().enumerate() {
                let negative = t.coefficient().signum() < 0;
                match (i, negative) {
                    (0, true) => s.push('-'),
                    (0, false) => {}
                    (_, true) => s.push_str(" - "),
                    (_, false) => s.push_str(" + "),
                }
                s.push_str(&t.magnitude_text(self.variable));
            }
            s
        };
        format!("{} = {}", side(&self.left), side(&self.right))
    }

    /// Reads the form written by [`LinearEquation::to_text`].
    pub fn parse(text: &str, variable: char) -> Result<Self> {
        let (l, r) = text
            .split_once(" = ")
            .ok_or_else(|| Error::invalid(format!("no ` = ` in {text:?}")))?;
        if r.contains(" = ") {
            return Err(Error::invalid(format!("more than one ` = ` in {text:?}")));
        }
        LinearEquation::new(
            variable,
            parse_side(l, variable)?,
            parse_side(r, variable)?,
        )
    }
}

fn parse_side(s: &str, var: char) -> Result<Vec<Term>> {
    let mut terms = Vec::new();
    let (mut negative, mut rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    loop {
        let next = match (rest.find(" + "), rest.find(" - ")) {
            (Some(p), Some(m)) if m < p => Some((m, true)),
            (Some(p), _) => Some((p, false)),
            (None, Some(m)) => Some((m, true)),
            (None, None) => None,
        };
        let token = next.map_or(rest, |(i, _)| &rest[..i]);
        terms.push(parse_term(token, var, negative)?);
        match next {
            Some((i, neg)) => {
                negative = neg;
                rest = &rest[i + 3..];
            }
            None => break,
        }
    }
    Ok(terms)
}

fn parse_term(token: &str, var: char, negative: bool) -> Result<Term> {
    let bad = || Error::invalid(format!("cannot read term {token:?}"));
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (body, den) = match token.split_once('/') {
        Some((b, d)) if digits(d) => (b, d.parse::<i64>().map_err(|_| bad())?),
        Some(_) => return Err(bad()),
        None => (token, 1),
    };
    let (num_text, is_var) = match body.strip_suffix(var) {
        Some(n) => (n, true),
        None => (body, false),
    };
    let num = if num_text.is_empty() && is_var {
        1
    } else if digits(num_text) {
        num_text.parse::<i64>().map_err(|_| bad())?
    } else {
        return Err(bad());
    };
    let c = Rational::new(if negative { -num } else { num }, den)?;
    Ok(if is_var {
        Term::Variable(c)
    } else {
        Term::Constant(c)
    })
}

/// Fills in the constant at `side[index]` so that `solution` solves the
/// equation: the solution-first construction. The slot's current value is
/// ignored.
pub fn solve_for_constant(
    variable: char,
    mut left: Vec<Term>,
    mut right: Vec<Term>,
    side: Side,
    index: usize,
    solution: Rational,
) -> Result<LinearEquation> {
    let slot = match side {
        Side::Left => left.get_mut(index),
        Side::Right => right.get_mut(index),
    }
    .ok_or_else(|| Error::invalid("constant slot index out of range"))?;
    if !matches!(slot, Term::Constant(_)) {
        return Err(Error::invalid("slot to solve for must be a constant term"));
    }
    *slot = Term::Constant(Rational::ZERO);
    let probe = LinearEquation {
        variable,
        left: left.clone(),
        right: right.clone(),
    };
    let (l, r) = probe.sides_at(solution)?;
    let value = match side {
        Side::Right => l.checked_sub(r)?,
        Side::Left => r.checked_sub(l)?,
    };
    match side {
        Side::Left => left[index] = Term::Constant(value),
        Side::Right => right[index] = Term::Constant(value),
    }
    LinearEquation::new(variable, left, right)
}

/// Ratio of the product of the denominators to their least common multiple:
/// the extra factor a student picks up clearing fractions with the product.
pub fn alternate_multiplier(eq: &LinearEquation) -> Result<u64> {
    let dens = eq.denominators();
    let mut product = 1i64;
    let mut lcm = 1i64;
    for d in dens {
        product = product.checked_mul(d).ok_or(Error::Overflow)?;
        lcm = lcm_i64(lcm, d)?;
    }
    Ok((product / lcm) as u64)
}

fn stem(variable: char, rational: bool) -> String {
    let mut s = INT_STEM.replace("{v}", &variable.to_string());
    if rational {
        s.push('\n');
        s.push_str(RATIONAL_NOTE);
    }
    s
}

/// Fill-in question for an equation with an integer solution; the accepted
/// spellings are the integer with up to two trailing decimal zeros.
pub fn linear_int_question(eq: &LinearEquation, title: String) -> Result<Question> {
    let solution = eq.solve()?;
    if !solution.is_integer() {
        return Err(Error::invalid(format!("solution {solution} is not an integer")));
    }
    Ok(Question {
        title,
        stem: stem(eq.variable(), false),
        display: Some(eq.to_text()),
        answer: Answer::FillIn {
            label: eq.variable().to_string(),
            accepted: decimal_forms(solution.numer()).into(),
        },
        asset: None,
    })
}

/// Fill-in question asking for a rational answer; accepts the reduced
/// fraction and the form obtained by clearing denominators with their
/// product instead of their least common multiple.
pub fn linear_rat_question(eq: &LinearEquation, title: String) -> Result<Question> {
    let solution = eq.solve()?;
    let k = alternate_multiplier(eq)?;
    Ok(Question {
        title,
        stem: stem(eq.variable(), true),
        display: Some(eq.to_text()),
        answer: Answer::FillIn {
            label: eq.variable().to_string(),
            accepted: rational_equivalents(solution, &[1, k])?,
        },
        asset: None,
    })
}

/// Integer coefficients, integer solution. The solution is drawn first and
/// the last right-hand constant is solved for. Layouts:
/// `av + b = cv + d`, `b + av = cv + d`, `av + b = cv + d + ev`.
pub fn gen_linear_int_int(stream: &mut RngStream, bounds: &Bounds, title: String) -> Result<GeneratedItem> {
    let eq = retry("LinEqIntCffIntSol", || {
        let variable = stream.choose(&VARIABLES);
        let solution = stream.int_inclusive(-bounds.lin_solution, bounds.lin_solution);
        let layout = stream.int_inclusive(0, 2);
        let int = |n: i64| Rational::from_integer(n);
        let a = Term::Variable(int(stream.nonzero_int(bounds.lin_coef)));
        let b = Term::Constant(int(stream.nonzero_int(bounds.lin_const)));
        let c = Term::Variable(int(stream.nonzero_int(bounds.lin_coef)));
        let d = Term::Constant(Rational::ZERO);
        let (left, right) = match layout {
            0 => (alloc::vec![a, b], alloc::vec![c, d]),
            1 => (alloc::vec![b, a], alloc::vec![c, d]),
            _ => {
                let e = Term::Variable(int(stream.nonzero_int(bounds.lin_coef)));
                (alloc::vec![a, b], alloc::vec![c, d, e])
            }
        };
        let eq = match solve_for_constant(variable, left, right, Side::Right, 1, int(solution)) {
            Ok(eq) => eq,
            Err(Error::InvalidInput(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let d = eq.right()[1].coefficient();
        Ok((d.numer().abs() <= bounds.lin_const).then_some(eq))
    })?;
    Ok(GeneratedItem {
        question: linear_int_question(&eq, title)?,
        assets: Vec::new(),
        data: ItemData::Linear(eq),
    })
}

/// `a·v/b = c/d` with single-digit fractions in lowest terms and a
/// non-integer solution.
pub fn gen_linear_rat_rat(stream: &mut RngStream, bounds: &Bounds, title: String) -> Result<GeneratedItem> {
    let eq = retry("LinEqRatCffRatAns", || {
        let variable = stream.choose(&VARIABLES);
        let a = stream.nonzero_int(bounds.rat_numer);
        let b = stream.int_inclusive(2, bounds.rat_denom);
        let c = stream.nonzero_int(bounds.rat_numer);
        let d = stream.int_inclusive(2, bounds.rat_denom);
        if gcd_i64(a, b) != 1 || gcd_i64(c, d) != 1 {
            return Ok(None);
        }
        let eq = LinearEquation::new(
            variable,
            alloc::vec![Term::Variable(Rational::new(a, b)?)],
            alloc::vec![Term::Constant(Rational::new(c, d)?)],
        )?;
        Ok((!eq.solve()?.is_integer()).then_some(eq))
    })?;
    Ok(GeneratedItem {
        question: linear_rat_question(&eq, title)?,
        assets: Vec::new(),
        data: ItemData::Linear(eq),
    })
}
