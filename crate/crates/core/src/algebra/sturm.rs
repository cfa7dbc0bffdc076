//! Real-root counting for integer polynomials: Sturm chains and squarefree
//! decomposition, both carried out over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<Rational>);

impl RatPoly {
    fn from_int(p: &IntPoly) -> Self {
        RatPoly(p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn derivative(&self) -> Self {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trim()
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(lc) => RatPoly(self.0.into_iter().map(|c| c / &lc).collect()),
            None => self,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Self, k: usize| p.0.get(k).cloned().unwrap_or_else(Rational::zero);
        RatPoly((0..n).map(|k| get(self, k) - get(other, k)).collect()).trim()
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let lead = d.0.last().unwrap();
        let mut q = vec![Rational::zero(); rem.len() - d.0.len() + 1];
        for i in (0..q.len()).rev() {
            let c = &rem[i + d.0.len() - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            q[i] = c;
        }
        rem.truncate(d.0.len() - 1);
        (RatPoly(q).trim(), RatPoly(rem).trim())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Primitive integer polynomial with positive leading coefficient.
    fn to_primitive(&self) -> IntPoly {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        if ints.last().is_some_and(Signed::is_negative) {
            ints.iter_mut().for_each(|c| *c = -c.clone());
        }
        IntPoly::new(ints)
    }
}

fn sign_changes(chain: &[RatPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
    }
    chain.pop();
    chain
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    let rp = RatPoly::from_int(p);
    if rp.degree() == 0 {
        return Ok(0);
    }
    // Work with the squarefree part so that the chain ends in a constant.
    let sqf = rp.div_rem(&rp.gcd(&rp.derivative())).0;
    let chain = sturm_chain(&sqf);
    let va = sign_changes(&chain, a);
    let vb = sign_changes(&chain, b);
    Ok(va - vb)
}

/// Squarefree decomposition `p = c * prod f_k^k` (Yun), returning the
/// primitive factors `f_k` of positive degree with their multiplicities.
pub fn squarefree_mults(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = RatPoly::from_int(p);
    let mut out = Vec::new();
    if f.degree() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut k = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        let b_next = b.div_rem(&a).0;
        let c_next = d.div_rem(&a).0;
        if a.degree() > 0 {
            out.push((a.to_primitive(), k));
        }
        d = c_next.sub(&b_next.derivative());
        b = b_next;
        k += 1;
    }
    Ok(out)
}

/// Number of real roots of `p` in `(a, b)` counted with multiplicity.
pub fn roots_with_multiplicity(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize> {
    let mut total = 0;
    for (f, k) in squarefree_mults(p)? {
        let mut n = sturm_count(&f, a, b)?;
        if f.eval(b).is_zero() {
            n -= 1;
        }
        total += k * n;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn alexander_circle_roots() {
        // Trefoil y^2 - 3 has both roots in (-2, 2); figure-eight 5 - y^2
        // has none.
        let tref = IntPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(sturm_count(&tref, &q(-2, 1), &q(2, 1)), Ok(2));
        let fig8 = IntPoly::from_i64(&[5, 0, -1]);
        assert_eq!(sturm_count(&fig8, &q(-2, 1), &q(2, 1)), Ok(0));
    }

    #[test]
    fn half_open_interval() {
        let p = IntPoly::from_i64(&[-1, 1]); // root at 1
        assert_eq!(sturm_count(&p, &q(0, 1), &q(1, 1)), Ok(1));
        assert_eq!(sturm_count(&p, &q(1, 1), &q(2, 1)), Ok(0));
        assert_eq!(sturm_count(&p, &q(1, 1), &q(1, 1)), Err(Error::EmptyInterval));
        assert_eq!(sturm_count(&IntPoly::zero(), &q(0, 1), &q(1, 1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_examples() {
        let p = IntPoly::from_i64(&[1, -2, 1]); // (y - 1)^2
        assert_eq!(squarefree_mults(&p).unwrap(), vec![(IntPoly::from_i64(&[-1, 1]), 2)]);
        // 2 (y - 1)^2 (y + 2)^3 y
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[2, 1]);
        let p = IntPoly::constant(2) * a.clone() * a.clone() * b.clone() * b.clone() * b.clone() * IntPoly::u();
        let got = squarefree_mults(&p).unwrap();
        assert_eq!(got, vec![(IntPoly::u(), 1), (a, 2), (b, 3)]);
        assert_eq!(roots_with_multiplicity(&p, &q(-3, 1), &q(3, 1)), Ok(6));
        assert_eq!(roots_with_multiplicity(&p, &q(-2, 1), &q(1, 1)), Ok(1));
    }

    /// Oracle: product of `(den*y - num)` over distinct rational roots, so the
    /// true count is known; the grid test brackets each root by a sign change.
    fn brute_force_count(roots: &[(i64, i64)], a: &Rational, b: &Rational) -> usize {
        let mut distinct: Vec<Rational> = roots.iter().map(|&(n, d)| q(n, d)).collect();
        distinct.sort();
        distinct.dedup();
        distinct.iter().filter(|r| *r > a && *r <= b).count()
    }

    fn grid_sign_changes(p: &IntPoly, a: &Rational, b: &Rational, steps: i64) -> usize {
        let h = (b - a) / Rational::from_integer(steps.into());
        let mut prev = p.eval(&(a + &h / Rational::from_integer(7.into())));
        let mut count = 0;
        for k in 1..=steps {
            let x = a + &h * Rational::from_integer(k.into()) - &h / Rational::from_integer(11.into());
            let v = p.eval(&x);
            if (v.is_positive() && prev.is_negative()) || (v.is_negative() && prev.is_positive()) {
                count += 1;
            }
            prev = v;
        }
        count
    }

    proptest! {
        #[test]
        fn sturm_matches_sign_change_grid(roots in proptest::collection::vec((-8i64..=8, 1i64..=2), 1..5)) {
            // Simple, well-separated roots k/d with distinct values.
            let mut rs: Vec<(i64, i64)> = roots;
            rs.sort_by_key(|x| q(x.0, x.1));
            rs.dedup_by(|x, y| q(x.0, x.1) == q(y.0, y.1));
            let p = rs.iter().fold(IntPoly::constant(1), |acc, &(n, d)| acc * IntPoly::from_i64(&[-n, d]));
            let (a, b) = (q(-7, 2), q(13, 4));
            let got = sturm_count(&p, &a, &b).unwrap();
            prop_assert_eq!(got, brute_force_count(&rs, &a, &b));
            // Roots sit on a grid of spacing 1/2; 400 steps over width 6.75
            // isolate them, and no root lies on a sample.
            prop_assert_eq!(got, grid_sign_changes(&p, &a, &b, 400));
        }
    }
}
