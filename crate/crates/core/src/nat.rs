//! Lunar natural numbers.
//!
//! A [`LunarNat`] is a digit vector in a fixed base, least-significant digit
//! first, with no high zero digits. Zero is the empty vector. Read as the
//! coefficient vector of a polynomial over `{0, .., B-1}`, lunar addition is
//! the coefficientwise `max` and lunar multiplication is the polynomial
//! product with `max` for sums and `min` for products. There are no carries.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Serialize, Serializer};

use crate::error::{LunarError, Result};

/// Largest base accepted by the text format (digits `0-9` then `a-z`).
pub const MAX_TEXT_BASE: u32 = 36;

/// A natural number under lunar arithmetic in base `base`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LunarNat {
    base: u32,
    digits: Vec<u32>,
}

fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        return Err(LunarError::InvalidBase(base));
    }
    Ok(())
}

fn check_same_base(a: &LunarNat, b: &LunarNat) -> Result<()> {
    if a.base != b.base {
        return Err(LunarError::BaseMismatch(a.base, b.base));
    }
    Ok(())
}

impl LunarNat {
    /// Builds a value from least-significant-first digits, dropping high zeros.
    pub fn from_digits(base: u32, mut digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(LunarError::DigitOutOfRange { digit, base });
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Ok(Self { base, digits })
    }

    /// Builds a value from most-significant-first digits.
    pub fn from_digits_msf(base: u32, digits: &[u32]) -> Result<Self> {
        Self::from_digits(base, digits.iter().rev().copied().collect())
    }

    /// Digits are already validated and normalized by the caller.
    pub(crate) fn from_raw(base: u32, mut digits: Vec<u32>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Self { base, digits }
    }

    pub fn zero(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(Self {
            base,
            digits: Vec::new(),
        })
    }

    /// The multiplicative identity: the single digit `base - 1`.
    pub fn identity(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(Self {
            base,
            digits: vec![base - 1],
        })
    }

    /// A single-digit value.
    pub fn single(base: u32, digit: u32) -> Result<Self> {
        Self::from_digits(base, vec![digit])
    }

    /// Parses a most-significant-first digit string (`0-9`, then `a-z`,
    /// case-insensitive). Leading zeros are accepted and stripped.
    pub fn parse(text: &str, base: u32) -> Result<Self> {
        if !(2..=MAX_TEXT_BASE).contains(&base) {
            return Err(LunarError::InvalidBase(base));
        }
        if text.is_empty() {
            return Err(LunarError::EmptyInput);
        }
        let mut digits = Vec::with_capacity(text.len());
        for ch in text.chars().rev() {
            match ch.to_digit(36) {
                Some(d) if d < base => digits.push(d),
                _ => return Err(LunarError::InvalidDigit { ch, base }),
            }
        }
        Ok(Self::from_raw(base, digits))
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of digits; zero has length 0.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.digits.len() == 1 && self.digits[0] == self.base - 1
    }

    /// Digit at 0-based position `i` from the right; 0 past the end.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Digit string, most significant first. Zero formats as `"0"`.
    ///
    /// Bases above 36 have no single-character digits, so each digit is
    /// written in decimal and separated by `:`.
    pub fn to_digit_string(&self) -> String {
        if self.digits.is_empty() {
            return "0".to_string();
        }
        if self.base <= MAX_TEXT_BASE {
            self.digits
                .iter()
                .rev()
                .map(|&d| char::from_digit(d, 36).expect("digit below base"))
                .collect()
        } else {
            self.digits
                .iter()
                .rev()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(":")
        }
    }

    /// Appends `width` zero digits on the right (positional shift).
    pub fn shift(&self, width: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut digits = vec![0; width];
        digits.extend_from_slice(&self.digits);
        Self {
            base: self.base,
            digits,
        }
    }

    /// Lunar sum: digitwise maximum.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same_base(self, other)?;
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut digits = long.digits.clone();
        for (d, &s) in digits.iter_mut().zip(&short.digits) {
            *d = (*d).max(s);
        }
        Ok(Self {
            base: self.base,
            digits,
        })
    }

    /// Lunar product: `digit k = max over i + j = k of min(a_i, b_j)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same_base(self, other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self {
                base: self.base,
                digits: Vec::new(),
            });
        }
        let mut digits = vec![0; self.len() + other.len() - 1];
        for (i, &a) in self.digits.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.digits.iter().enumerate() {
                let p = a.min(b);
                if p > digits[i + j] {
                    digits[i + j] = p;
                }
            }
        }
        // Top digit is min of two nonzero digits, so no normalization needed.
        Ok(Self {
            base: self.base,
            digits,
        })
    }

    /// `self` multiplied by itself `n` times; `a^0` is the identity.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self {
            base: self.base,
            digits: vec![self.base - 1],
        };
        if n == 0 {
            return acc;
        }
        acc = self.clone();
        for _ in 1..n {
            acc = &acc * self;
        }
        acc
    }

    /// True when digits never decrease reading most to least significant.
    pub fn is_nondecreasing(&self) -> bool {
        self.digits.windows(2).all(|w| w[1] <= w[0])
    }

    /// Closed-form power of a number with non-decreasing digits: every digit
    /// except the last is repeated `n` times, e.g. `1134448^3 =
    /// 1111113334444444448`. Agrees with [`LunarNat::pow`].
    pub fn pow_nondecreasing(&self, n: u32) -> Result<Self> {
        if !self.is_nondecreasing() {
            return Err(LunarError::NotNondecreasing);
        }
        if n == 0 {
            return Ok(self.pow(0));
        }
        let Some((&last, rest)) = self.digits.split_first() else {
            return Ok(self.clone());
        };
        let mut digits = Vec::with_capacity(1 + rest.len() * n as usize);
        digits.push(last);
        for &d in rest {
            digits.extend(std::iter::repeat_n(d, n as usize));
        }
        Ok(Self {
            base: self.base,
            digits,
        })
    }

    /// `self` dominates `other` when each digit of `self` is at least the
    /// corresponding digit of `other`; equivalently `self + other = self`.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        check_same_base(self, other)?;
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.digits.iter().zip(&self.digits).all(|(o, s)| o <= s)
    }

    /// Canonical total order: shorter first, then lexicographic from the
    /// most significant digit. This is the order behind every "smallest"
    /// in the crate.
    pub fn compare_length_lex(&self, other: &Self) -> Result<Ordering> {
        check_same_base(self, other)?;
        Ok(self.cmp(other))
    }
}

impl Ord for LunarNat {
    /// Base first, then [`LunarNat::compare_length_lex`].
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl PartialOrd for LunarNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LunarNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digit_string())
    }
}

impl fmt::Debug for LunarNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.to_digit_string(), self.base)
    }
}

impl Serialize for LunarNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_digit_string())
    }
}

// Operator forms panic on a base mismatch; use `try_add` / `try_mul` for
// values of unknown provenance.

impl Add for &LunarNat {
    type Output = LunarNat;

    fn add(self, rhs: &LunarNat) -> LunarNat {
        self.try_add(rhs).expect("lunar add across bases")
    }
}

impl Add for LunarNat {
    type Output = LunarNat;

    fn add(self, rhs: LunarNat) -> LunarNat {
        &self + &rhs
    }
}

impl Mul for &LunarNat {
    type Output = LunarNat;

    fn mul(self, rhs: &LunarNat) -> LunarNat {
        self.try_mul(rhs).expect("lunar mul across bases")
    }
}

impl Mul for LunarNat {
    type Output = LunarNat;

    fn mul(self, rhs: LunarNat) -> LunarNat {
        &self * &rhs
    }
}

/// Lunar sum of an iterator of same-base values; zero when empty.
pub fn lunar_sum<'a, I>(base: u32, values: I) -> Result<LunarNat>
where
    I: IntoIterator<Item = &'a LunarNat>,
{
    values
        .into_iter()
        .try_fold(LunarNat::zero(base)?, |acc, v| acc.try_add(v))
}
