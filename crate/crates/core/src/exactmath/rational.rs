use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator. Every value of this type is reduced; unreduced spellings only
/// exist as strings (see [`rational_equivalents`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u128(a.unsigned_abs() as u128, b.unsigned_abs() as u128) as i64
}

pub(crate) fn lcm_i64(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let g = gcd_i64(a, b);
    (a / g).abs().checked_mul(b.abs()).ok_or(Error::Overflow)
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Reduces `num/den`. Fails on a zero denominator or when the reduced
    /// value does not fit in 64 bits.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        if num == 0 {
            d = 1;
        }
        Ok(Rational {
            num: i64::try_from(n).map_err(|_| Error::Overflow)?,
            den: i64::try_from(d).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Self::from_i128(num, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        Self::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.num == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::from_i128(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn abs(self) -> Result<Self> {
        if self.num < 0 {
            self.checked_neg()
        } else {
            Ok(self)
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Fixed-point decimal string rounded half away from zero, computed
    /// exactly. `places = 2` gives the two-decimal display used in answer keys.
    pub fn to_fixed(self, places: u32) -> Result<String> {
        let scale = 10i128.checked_pow(places).ok_or(Error::Overflow)?;
        let scaled = self.num as i128 * scale;
        let den = self.den as i128;
        let q = scaled.abs() / den;
        let r = scaled.abs() % den;
        let mag = if 2 * r >= den { q + 1 } else { q };
        Ok(format_scaled(scaled < 0 && mag != 0, mag as u128, places))
    }
}

/// Writes `mag / 10^places` with exactly `places` decimals.
pub(crate) fn format_scaled(negative: bool, mag: u128, places: u32) -> String {
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{mag}");
    }
    let scale = 10u128.pow(places);
    format!(
        "{sign}{}.{:0width$}",
        mag / scale,
        mag % scale,
        width = places as usize
    )
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `p`, `p/q` (unreduced allowed) and terminating decimals such as
/// `-4.`, `-4.00` or `.5`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("not a rational number: {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = parse_signed_digits(p).ok_or_else(bad)?;
            let q: i64 = parse_signed_digits(q).ok_or_else(bad)?;
            return Rational::new(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let (negative, int) = match int.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int),
            };
            if (int.is_empty() && frac.is_empty())
                || !int.bytes().all(|b| b.is_ascii_digit())
                || !frac.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(bad());
            }
            let digits = [int, frac].concat();
            let mag: i128 = if digits.is_empty() {
                0
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let scale = 10i128
                .checked_pow(frac.len() as u32)
                .ok_or(Error::Overflow)?;
            return Rational::from_i128(if negative { -mag } else { mag }, scale);
        }
        parse_signed_digits(s)
            .map(Rational::from_integer)
            .ok_or_else(bad)
    }
}

fn parse_signed_digits(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn rational_reduce(num: i64, den: i64) -> Result<Rational> {
    Rational::new(num, den)
}

/// Spellings `p·k/q·k` of a reduced rational for each multiplier `k`, in
/// multiplier order with duplicates removed. The first multiplier must be 1
/// so the reduced form leads the list.
pub fn rational_equivalents(r: Rational, multipliers: &[u64]) -> Result<Vec<String>> {
    match multipliers.first() {
        None => return Err(Error::invalid("multiplier list is empty")),
        Some(&1) => {}
        Some(_) => return Err(Error::invalid("first multiplier must be 1")),
    }
    let mut out: Vec<String> = Vec::with_capacity(multipliers.len());
    for &k in multipliers {
        if k == 0 {
            return Err(Error::invalid("multipliers must be positive"));
        }
        let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
        let s = if k == 1 {
            r.to_string()
        } else {
            let p = r.numer().checked_mul(k).ok_or(Error::Overflow)?;
            let q = r.denom().checked_mul(k).ok_or(Error::Overflow)?;
            format!("{p}/{q}")
        };
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

/// The four accepted spellings of an integer answer: `k`, `k.`, `k.0`, `k.00`.
pub fn decimal_forms(value: i64) -> [String; 4] {
    [
        format!("{value}"),
        format!("{value}."),
        format!("{value}.0"),
        format!("{value}.00"),
    ]
}
