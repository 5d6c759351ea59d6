//! Binomial parity and truncated polynomial arithmetic over GF(2).
//!
//! Everything here works in `GF(2)[x]/(x^T)`. Coefficients are packed into
//! `u64` words, bit `j` of the sequence being the coefficient of `x^j`.
//! Addition is XOR, multiplication is carry-less, and anything at or above
//! the truncation `T` is dropped.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

/// Parity of an integer, usually a binomial coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn from_bit(bit: bool) -> Parity {
        if bit {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of `binom(n, r)` by Lucas' theorem: odd iff every binary digit of
/// `r` is at most the matching digit of `n`. `r > n` gives zero, hence even.
pub fn binom_parity(n: u64, r: u64) -> Parity {
    Parity::from_bit(r <= n && r & n == r)
}

/// Parity of the `x^j` coefficient of `(1 + x)^(-q)`, which is
/// `binom(q + j - 1, q - 1)` up to sign.
pub fn geometric_inverse_coefficient(q: u64, j: u64) -> Parity {
    if q == 0 {
        // (1 + x)^0 = 1
        return Parity::from_bit(j == 0);
    }
    binom_parity(q + j - 1, q - 1)
}

/// An element of `GF(2)[x]/(x^T)`.
///
/// The truncation travels with the value. Binary operations on values with
/// different truncations are rejected instead of being silently re-truncated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedGF2Poly {
    words: Vec<u64>,
    truncation: usize,
}

fn word_count(truncation: usize) -> usize {
    truncation.div_ceil(WORD_BITS)
}

/// Spreads the 32 bits of `v` to the even bit positions of a `u64`.
fn spread_bits(v: u32) -> u64 {
    let mut x = v as u64;
    x = (x | (x << 16)) & 0x0000_ffff_0000_ffff;
    x = (x | (x << 8)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// `dst ^= src << shift`, dropping whatever falls off the end of `dst`.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let word_shift = shift / WORD_BITS;
    let bit_shift = shift % WORD_BITS;
    for (i, &w) in src.iter().enumerate() {
        let d = i + word_shift;
        if d >= dst.len() {
            break;
        }
        if bit_shift == 0 {
            dst[d] ^= w;
        } else {
            dst[d] ^= w << bit_shift;
            if d + 1 < dst.len() {
                dst[d + 1] ^= w >> (WORD_BITS - bit_shift);
            }
        }
    }
}

impl TruncatedGF2Poly {
    /// The zero polynomial. Panics if `truncation == 0`.
    pub fn zero(truncation: usize) -> Self {
        assert!(truncation >= 1, "truncation must be positive");
        TruncatedGF2Poly {
            words: vec![0; word_count(truncation)],
            truncation,
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(0, truncation)
    }

    /// `x^exponent`, which is zero once `exponent >= truncation`.
    pub fn monomial(exponent: usize, truncation: usize) -> Self {
        Self::from_exponents([exponent], truncation)
    }

    /// `1 + x`.
    pub fn one_plus_x(truncation: usize) -> Self {
        Self::from_exponents([0, 1], truncation)
    }

    /// Sum of `x^e` over the given exponents. Repeated exponents cancel in
    /// pairs; exponents at or past the truncation vanish.
    pub fn from_exponents<I>(exponents: I, truncation: usize) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut p = Self::zero(truncation);
        for e in exponents {
            if e < truncation {
                p.words[e / WORD_BITS] ^= 1 << (e % WORD_BITS);
            }
        }
        p
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, exponent: usize) -> bool {
        exponent < self.truncation
            && (self.words[exponent / WORD_BITS] >> (exponent % WORD_BITS)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// A unit of the truncated ring is exactly a polynomial with constant term 1.
    pub fn is_unit(&self) -> bool {
        self.coeff(0)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear_from(&mut self, exponent: usize) {
        if exponent >= self.truncation {
            return;
        }
        let first = exponent / WORD_BITS;
        let bit = exponent % WORD_BITS;
        self.words[first] &= (1u64 << bit).wrapping_sub(1);
        for w in &mut self.words[first + 1..] {
            *w = 0;
        }
    }

    fn mask_top(&mut self) {
        let t = self.truncation;
        self.clear_from(t);
        let used = t % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    fn check_truncation(&self, other: &Self) -> Result<()> {
        if self.truncation == other.truncation {
            Ok(())
        } else {
            Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_truncation(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(TruncatedGF2Poly {
            words,
            truncation: self.truncation,
        })
    }

    /// Carry-less product, discarding exponents at or beyond the truncation.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_truncation(other)?;
        let mut out = Self::zero(self.truncation);
        // Iterate over the sparser side.
        let (sparse, dense) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        for e in sparse.exponents() {
            xor_shifted(&mut out.words, &dense.words, e);
        }
        out.mask_top();
        Ok(out)
    }

    /// `self^2`. In characteristic 2 this just moves bit `j` to bit `2j`.
    pub fn square(&self) -> Self {
        let mut out = Self::zero(self.truncation);
        for (i, &w) in self.words.iter().enumerate() {
            let lo = 2 * i;
            if lo >= out.words.len() {
                break;
            }
            out.words[lo] = spread_bits(w as u32);
            if lo + 1 < out.words.len() {
                out.words[lo + 1] = spread_bits((w >> 32) as u32);
            }
        }
        out.mask_top();
        out
    }

    /// Multiplicative inverse by Newton iteration. Over GF(2) the update
    /// `b <- b(2 - ab)` becomes `b <- a b^2`, doubling the correct precision
    /// each round.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit);
        }
        let t = self.truncation;
        let mut b = Self::one(t);
        let mut precision = 1;
        while precision < t {
            precision = (2 * precision).min(t);
            let mut a = self.clone();
            a.clear_from(precision);
            b = a.try_mul(&b.square())?;
            b.clear_from(precision);
        }
        Ok(b)
    }

    /// `self^exponent`. Negative exponents go through [`Self::inverse`], so they
    /// need a unit.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        Ok(base.pow_unsigned(exponent.unsigned_abs()))
    }

    fn pow_unsigned(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.truncation);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same truncation");
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
                if base.is_zero() {
                    // A nilpotent base has died; only the unit part can survive.
                    break;
                }
            }
        }
        if e > 0 {
            return Self::zero(self.truncation);
        }
        result
    }

    /// Terms labelled by cohomological degree when `x` sits in degree
    /// `x_degree`: pairs `(exponent, exponent * x_degree)`.
    pub fn graded_terms(&self, x_degree: u64) -> Vec<(usize, u64)> {
        self.exponents().map(|e| (e, e as u64 * x_degree)).collect()
    }
}

impl fmt::Display for TruncatedGF2Poly {
    /// Ascending exponents, `1 + x + x^5`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, e) in self.exponents().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedGF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod x^{})", self, self.truncation)
    }
}

impl Serialize for TruncatedGF2Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TruncatedGF2Poly", 3)?;
        s.serialize_field("text", &self.to_string())?;
        s.serialize_field("exponents", &self.exponents().collect::<Vec<_>>())?;
        s.serialize_field("truncation", &self.truncation)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(exps: &[usize], t: usize) -> TruncatedGF2Poly {
        TruncatedGF2Poly::from_exponents(exps.iter().copied(), t)
    }

    /// Row-by-row Pascal triangle mod 2, kept local so it shares nothing with
    /// the Lucas test.
    fn pascal_rows(max: usize) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![true]];
        for n in 1..=max {
            let prev = &rows[n - 1];
            let mut row = vec![true; n + 1];
            for r in 1..n {
                row[r] = prev[r - 1] ^ prev[r];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binom_parity_examples() {
        assert_eq!(binom_parity(0, 0), Parity::Odd);
        assert_eq!(binom_parity(4, 2), Parity::Even);
        assert_eq!(binom_parity(14, 8), Parity::Odd);
        assert_eq!(binom_parity(3, 5), Parity::Even);
    }

    #[test]
    fn binom_parity_matches_pascal_up_to_64() {
        let rows = pascal_rows(64);
        for n in 0..=64u64 {
            for r in 0..=70u64 {
                let expected = rows[n as usize].get(r as usize).copied().unwrap_or(false);
                assert_eq!(binom_parity(n, r).is_odd(), expected, "binom({n},{r})");
            }
        }
    }

    #[test]
    fn mul_examples() {
        let a = poly(&[0, 1], 4);
        assert_eq!(a.try_mul(&a).unwrap(), poly(&[0, 2], 4));
        let a = poly(&[0, 1], 2);
        assert_eq!(a.try_mul(&a).unwrap(), poly(&[0], 2));
        let a = poly(&[0, 1, 3], 8);
        let b = poly(&[0, 2], 8);
        assert_eq!(a.try_mul(&b).unwrap(), poly(&[0, 1, 2, 5], 8));
    }

    #[test]
    fn mismatched_truncations_are_rejected() {
        let a = poly(&[0], 4);
        let b = poly(&[0], 5);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::TruncationMismatch { left: 4, right: 5 })
        );
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn pow_examples() {
        let a = TruncatedGF2Poly::one_plus_x(4);
        assert_eq!(a.pow(10).unwrap(), poly(&[0, 2], 4));
        assert_eq!(a.pow(0).unwrap(), poly(&[0], 4));
        // binom(9 + j, 9) for j = 0..3 is 1, 10, 55, 220
        assert_eq!(a.pow(-10).unwrap(), poly(&[0, 2], 4));
        assert_eq!(poly(&[1], 4).pow(-1), Err(Error::NonUnit));
        assert_eq!(poly(&[1], 4).pow(4).unwrap(), poly(&[], 4));
        assert_eq!(poly(&[1], 4).pow(3).unwrap(), poly(&[3], 4));
        assert_eq!(poly(&[1, 2], 200).pow(1000).unwrap(), poly(&[], 200));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(poly(&[0], 7).inverse().unwrap(), poly(&[0], 7));
        assert_eq!(
            TruncatedGF2Poly::one_plus_x(5).inverse().unwrap(),
            poly(&[0, 1, 2, 3, 4], 5)
        );
        let a = TruncatedGF2Poly::one_plus_x(4).pow(10).unwrap();
        assert_eq!(
            a.inverse().unwrap(),
            TruncatedGF2Poly::one_plus_x(4).pow(-10).unwrap()
        );
        assert_eq!(poly(&[2, 3], 9).inverse(), Err(Error::NonUnit));
        assert_eq!(poly(&[], 9).inverse(), Err(Error::NonUnit));
    }

    #[test]
    fn inverse_across_word_boundaries() {
        for t in [1, 63, 64, 65, 127, 128, 129, 300] {
            let a = TruncatedGF2Poly::one_plus_x(t);
            let inv = a.inverse().unwrap();
            assert_eq!(inv, TruncatedGF2Poly::from_exponents(0..t, t), "T={t}");
            assert_eq!(a.try_mul(&inv).unwrap(), TruncatedGF2Poly::one(t));
        }
    }

    #[test]
    fn geometric_coefficient_examples() {
        assert_eq!(geometric_inverse_coefficient(10, 2), Parity::Odd);
        assert_eq!(geometric_inverse_coefficient(16, 1), Parity::Even);
        for q in 0..50 {
            assert_eq!(geometric_inverse_coefficient(q, 0), Parity::Odd);
        }
        assert_eq!(geometric_inverse_coefficient(0, 3), Parity::Even);
    }

    #[test]
    fn geometric_coefficient_matches_inverse_power() {
        let t = 128;
        for q in 1..=100u64 {
            let inv = TruncatedGF2Poly::one_plus_x(t).pow(-(q as i64)).unwrap();
            for j in 0..t {
                assert_eq!(
                    geometric_inverse_coefficient(q, j as u64).is_odd(),
                    inv.coeff(j),
                    "q={q} j={j}"
                );
            }
        }
    }

    #[test]
    fn display_and_degree() {
        assert_eq!(poly(&[0, 2, 5], 8).to_string(), "1 + x^2 + x^5");
        assert_eq!(poly(&[1], 8).to_string(), "x");
        assert_eq!(poly(&[], 8).to_string(), "0");
        assert_eq!(poly(&[0, 2, 70], 100).degree(), Some(70));
        assert_eq!(poly(&[], 100).degree(), None);
        assert_eq!(poly(&[9], 9), poly(&[], 9));
        assert_eq!(poly(&[2, 2], 9), poly(&[], 9));
    }

    #[test]
    fn graded_terms_double_for_degree_two() {
        assert_eq!(poly(&[0, 1], 3).graded_terms(2), vec![(0, 0), (1, 2)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn unit(max_t: usize) -> impl Strategy<Value = TruncatedGF2Poly> {
            (1..=max_t).prop_flat_map(|t| {
                prop::collection::vec(any::<bool>(), t).prop_map(move |bits| {
                    let exps = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i);
                    let mut p = TruncatedGF2Poly::from_exponents(exps, t);
                    if !p.is_unit() {
                        p = p.try_add(&TruncatedGF2Poly::one(t)).unwrap();
                    }
                    p
                })
            })
        }

        proptest! {
            #[test]
            fn unit_times_inverse_is_one(a in unit(256)) {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(a.try_mul(&inv).unwrap(), TruncatedGF2Poly::one(a.truncation()));
            }

            #[test]
            fn pow_is_additive_in_exponent(a in unit(96), e1 in -50i64..=50, e2 in -50i64..=50) {
                let lhs = a.pow(e1 + e2).unwrap();
                let rhs = a.pow(e1).unwrap().try_mul(&a.pow(e2).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn square_is_frobenius(a in unit(300)) {
                let t = a.truncation();
                let sq = a.pow(2).unwrap();
                let expected = TruncatedGF2Poly::from_exponents(a.exponents().map(|e| 2 * e), t);
                prop_assert_eq!(sq, expected);
            }

            #[test]
            fn mul_matches_schoolbook(a in unit(150), seed in any::<u64>()) {
                let t = a.truncation();
                let b = TruncatedGF2Poly::from_exponents(
                    (0..t).filter(|i| (seed.rotate_left(*i as u32 % 64) >> 3) & 1 == 1),
                    t,
                );
                let mut naive = vec![false; t];
                for i in 0..t {
                    for j in 0..t - i {
                        naive[i + j] ^= a.coeff(i) && b.coeff(j);
                    }
                }
                let expected = TruncatedGF2Poly::from_exponents(
                    naive.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i),
                    t,
                );
                prop_assert_eq!(a.try_mul(&b).unwrap(), expected);
            }
        }
    }
}
