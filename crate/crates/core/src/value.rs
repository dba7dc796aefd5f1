//! Exact possibility degrees.
//!
//! Every degree in the checker is a rational number in `[0, 1]`. The only
//! operations ever applied are `min`, `max` and `1 - x`, so the set of
//! rationals is closed under all of them and equality is exact.

use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

/// A possibility degree: an exact rational in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PossValue(Ratio<u64>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValueError {
    #[error("malformed number {0:?}")]
    Malformed(alloc::string::String),
    #[error("value {0:?} outside [0,1]")]
    OutOfRange(alloc::string::String),
    #[error("value {0:?} has more precision than supported")]
    TooPrecise(alloc::string::String),
}

// 10^18 still fits in u64 with headroom for the numerator.
const MAX_FRACTION_DIGITS: usize = 18;

impl PossValue {
    pub const ZERO: PossValue = PossValue(Ratio::new_raw(0, 1));
    pub const ONE: PossValue = PossValue(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, rejecting anything outside `[0, 1]`.
    pub fn new(numer: u64, denom: u64) -> Result<Self, ValueError> {
        if denom == 0 || numer > denom {
            return Err(ValueError::OutOfRange(alloc::format!("{numer}/{denom}")));
        }
        Ok(PossValue(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    #[inline]
    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// `1 - self`, exact.
    #[inline]
    pub fn complement(self) -> Self {
        let d = *self.0.denom();
        PossValue(Ratio::new_raw(d - *self.0.numer(), d))
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    pub fn is_one(&self) -> bool {
        self.0.numer() == self.0.denom()
    }

    /// True for 0 and 1.
    pub fn is_crisp(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Number of decimal digits after the point if the value has a
    /// terminating decimal expansion.
    fn terminating_digits(&self) -> Option<u32> {
        let mut d = *self.0.denom();
        let (mut twos, mut fives) = (0u32, 0u32);
        while d.is_multiple_of(2) {
            d /= 2;
            twos += 1;
        }
        while d.is_multiple_of(5) {
            d /= 5;
            fives += 1;
        }
        (d == 1).then_some(twos.max(fives))
    }
}

impl Default for PossValue {
    fn default() -> Self {
        PossValue::ZERO
    }
}

impl From<bool> for PossValue {
    fn from(b: bool) -> Self {
        if b {
            PossValue::ONE
        } else {
            PossValue::ZERO
        }
    }
}

/// Shortest exact decimal when the expansion terminates, `num/den` otherwise.
impl fmt::Display for PossValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (*self.0.numer() as u128, *self.0.denom() as u128);
        if d == 1 {
            return write!(f, "{n}");
        }
        match self.terminating_digits() {
            Some(digits) if digits as usize <= 36 => {
                let scale = 10u128.pow(digits);
                let scaled = n * (scale / d);
                let mut frac = alloc::format!("{:0width$}", scaled, width = digits as usize);
                while frac.ends_with('0') {
                    frac.pop();
                }
                write!(f, "0.{frac}")
            }
            _ => write!(f, "{n}/{d}"),
        }
    }
}

impl fmt::Debug for PossValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"0.25"`, `"1"`, `".5"`, `"1.000"` or `"3/7"`.
impl FromStr for PossValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let malformed = || ValueError::Malformed(text.into());
        if let Some((num, den)) = text.split_once('/') {
            let num: u64 = parse_digits(num.trim()).ok_or_else(malformed)?;
            let den: u64 = parse_digits(den.trim()).ok_or_else(malformed)?;
            if den == 0 {
                return Err(malformed());
            }
            if num > den {
                return Err(ValueError::OutOfRange(text.into()));
            }
            return Ok(PossValue(Ratio::new(num, den)));
        }

        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        let int_value: u64 = if int_part.is_empty() {
            0
        } else {
            parse_digits(int_part).ok_or_else(malformed)?
        };
        if !frac_part.is_empty() && !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let frac_trimmed = frac_part.trim_end_matches('0');
        if int_value > 1 || (int_value == 1 && !frac_trimmed.is_empty()) {
            return Err(ValueError::OutOfRange(text.into()));
        }
        if int_value == 1 {
            return Ok(PossValue::ONE);
        }
        if frac_trimmed.len() > MAX_FRACTION_DIGITS {
            return Err(ValueError::TooPrecise(text.into()));
        }
        let denom = 10u64.pow(frac_trimmed.len() as u32);
        let numer = if frac_trimmed.is_empty() {
            0
        } else {
            frac_trimmed.parse::<u64>().map_err(|_| malformed())?
        };
        let g = numer.gcd(&denom);
        Ok(PossValue(Ratio::new_raw(numer / g, denom / g)))
    }
}

fn parse_digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a literal known to be valid. Panics otherwise; meant for
/// constants and tests.
pub fn pv(s: &str) -> PossValue {
    s.parse().unwrap_or_else(|e| panic!("bad possibility literal {s:?}: {e}"))
}
