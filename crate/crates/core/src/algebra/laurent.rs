use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational};
use crate::{Error, Result};

/// Integer Laurent polynomial in `s = t^{1/2}`.
///
/// Stored densely from the lowest exponent; both ends are trimmed so the
/// representation of every value is unique.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * s^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(1, 1)
    }

    /// `s^{-1}`.
    pub fn s_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// Builds `sum_k coeffs[k] * s^(low + k)`.
    pub fn from_coeffs(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().map(|(k, c)| (k, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Image under `s -> s^{-1}`.
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// True when the polynomial is invariant under `s -> s^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reflect()
    }

    /// Exact value at a nonzero rational `s0`.
    pub fn eval(&self, s0: &Rational) -> Result<Rational> {
        if s0.is_zero() {
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s0 + Rational::from_integer(c.clone());
        }
        Ok(acc * pow_signed(s0, self.low))
    }

    /// Sum of the coefficients, i.e. the value at `s = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient `self / other` in `Z[s, s^{-1}]`, or `None` when
    /// `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &other.coeffs;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        let lead = d.last().unwrap();
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            q[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - other.low, q))
    }

    /// Rewrites a palindromic polynomial as `P(y)` with `y = s + s^{-1}`.
    pub fn to_symmetric(&self) -> Result<IntPoly> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let mut rest = self.clone();
        let mut out: Vec<BigInt> = Vec::new();
        let y = LaurentPoly::s() + LaurentPoly::s_inv();
        while let Some(k) = rest.max_exp() {
            debug_assert!(k >= 0);
            let c = rest.coeff(k);
            let k = k as usize;
            if out.len() <= k {
                out.resize(k + 1, BigInt::zero());
            }
            out[k] += &c;
            let mut power = LaurentPoly::one();
            for _ in 0..k {
                power = &power * &y;
            }
            rest = &rest - &power.scale(&c);
        }
        Ok(IntPoly::new(out))
    }

    /// Conway-style representative: centred exponents, and `value_at_one`
    /// positive when nonzero, otherwise the top coefficient positive.
    ///
    /// Returns the normalized polynomial together with the sign and shift
    /// that were removed, so that `self = sign * s^shift * normalized`.
    pub fn normalize_unit(&self) -> (LaurentPoly, i32, i32) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (Self::zero(), 1, 0);
        };
        // lo + hi is even for every Alexander-type polynomial; odd sums are
        // centred as far as an integral shift allows.
        let shift = (lo + hi).div_euclid(2);
        let centred = self.shift(-shift);
        let at_one = centred.value_at_one();
        let negative = if at_one.is_zero() {
            centred.coeffs.last().unwrap().is_negative()
        } else {
            at_one.is_negative()
        };
        if negative {
            (-centred, -1, shift)
        } else {
            (centred, 1, shift)
        }
    }

    /// Human form in `t = s^2`, descending exponents, e.g. `-t + 3 - t^-1`.
    pub fn to_t_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let exp = if k % 2 == 0 {
                alloc::format!("{}", k / 2)
            } else {
                alloc::format!("{}/2", k)
            };
            let mag = c.abs();
            let body = match (exp.as_str(), mag.is_one()) {
                ("0", _) => alloc::format!("{mag}"),
                ("1", true) => String::from("t"),
                ("1", false) => alloc::format!("{mag}*t"),
                (e, true) => alloc::format!("t^{e}"),
                (e, false) => alloc::format!("{mag}*t^{e}"),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

pub(crate) fn pow_signed(x: &Rational, k: i32) -> Rational {
    let mut base = if k < 0 { x.recip() } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Sparse text form `coef*s^k`, ascending exponents, terms joined by ` + `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*s^{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.terms().chain(rhs.terms()) {
            coeffs[(k - lo) as usize] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn trims_and_compares() {
        let p = LaurentPoly::from_coeffs(-3, vec![0.into(), 1.into(), 0.into(), 2.into(), 0.into()]);
        assert_eq!(p, lp(&[(-2, 1), (0, 2)]));
        assert_eq!(p.min_exp(), Some(-2));
        assert_eq!(p.max_exp(), Some(0));
        assert!(lp(&[(3, 1), (3, -1)]).is_zero());
    }

    #[test]
    fn product_and_exact_division() {
        let a = lp(&[(-1, 1), (1, 1)]);
        let b = lp(&[(-2, 1), (0, -1), (2, 1)]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&lp(&[(0, 2)])), None);
    }

    #[test]
    fn evaluation() {
        let q = LaurentPoly::s() - LaurentPoly::s_inv();
        assert_eq!(q.eval(&Rational::one()).unwrap(), Rational::zero());
        assert_eq!(q.eval(&Rational::zero()), Err(Error::ZeroEvaluation));
        let half = Rational::new(1.into(), 2.into());
        // 1/2 - 2
        assert_eq!(q.eval(&half).unwrap(), Rational::new((-3).into(), 2.into()));
    }

    #[test]
    fn symmetric_form_of_trefoil_alexander() {
        // t - 1 + t^-1 = y^2 - 3
        let d = lp(&[(-2, 1), (0, -1), (2, 1)]);
        assert_eq!(d.to_symmetric().unwrap(), IntPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(lp(&[(1, 1)]).to_symmetric(), Err(Error::NotPalindromic));
    }

    #[test]
    fn t_string() {
        let fig8 = lp(&[(-2, -1), (0, 3), (2, -1)]);
        assert_eq!(fig8.to_t_string(), "-t + 3 - t^-1");
        assert_eq!(lp(&[(4, 2), (0, 1)]).to_t_string(), "2*t^2 + 1");
        assert_eq!(lp(&[(1, 1), (-1, -1)]).to_t_string(), "t^1/2 - t^-1/2");
        assert_eq!(fig8.to_string(), "-1*s^-2 + 3*s^0 + -1*s^2");
    }

    #[test]
    fn normalization_removes_sign_and_shift() {
        let d = lp(&[(-2, 1), (0, -1), (2, 1)]);
        let raw = -d.shift(4);
        let (n, sign, shift) = raw.normalize_unit();
        assert_eq!(n, d);
        assert_eq!((sign, shift), (-1, 4));
    }
}
