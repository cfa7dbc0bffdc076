//! Seifert matrices of braid closures and the Levine-Tristram signature at
//! exact points of the unit circle.
//!
//! The closure of a braid bounds the surface made of one disk per strand
//! and one twisted band per crossing. Between two consecutive bands of the
//! same column runs a loop; these loops form a basis of first homology.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{det_poly_matrix, signature_hermitian_realified, LaurentPoly, Matrix, Rational};
use crate::diagram::Braid;
use crate::{Error, Result};

/// Basis loop: the column (generator index) and the word positions of its
/// two bands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Loop {
    pub column: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    pub entries: Matrix<i64>,
    pub genus: usize,
    pub strands: usize,
    pub crossings: usize,
    pub loops: Vec<Loop>,
}

impl SeifertMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    /// `det(A - A^T)`.
    pub fn intersection_det(&self) -> BigInt {
        let n = self.dim();
        let m = Matrix::from_fn(n, n, |i, j| LaurentPoly::constant(self.entries[(i, j)] - self.entries[(j, i)]));
        det_poly_matrix(&m).coeff(0)
    }
}

/// Seifert matrix `A[p][q] = lk(p^-, q)` of a knotted braid closure.
///
/// With `e` the sign of a band: a loop whose bands have signs `e1, e2`
/// links its own push-off `-(e1 + e2) / 2` times. Consecutive loops of one
/// column sharing a band of sign `e` give `(e + 1) / 2` above the diagonal
/// and `(e - 1) / 2` below it. A loop of column `i` and one of column
/// `i + 1` whose band intervals interleave give `+1` (left loop starting
/// first) or `-1` (right loop starting first) in the row of the left loop.
pub fn seifert_from_braid(braid: &Braid) -> Result<SeifertMatrix> {
    let comps = braid.component_count();
    if comps != 1 {
        return Err(Error::NotAKnot(comps));
    }
    let word = &braid.word;
    let mut loops = Vec::new();
    for col in 1..braid.strands {
        let occ: Vec<usize> = (0..word.len()).filter(|&p| word[p].unsigned_abs() as usize == col).collect();
        if occ.is_empty() {
            return Err(Error::EmptyColumn(col));
        }
        loops.extend(occ.windows(2).map(|w| Loop { column: col, lower: w[0], upper: w[1] }));
    }
    let eps = |p: usize| word[p].signum();
    let n = loops.len();
    let mut a: Matrix<i64> = Matrix::zeros(n, n);
    for (x, lx) in loops.iter().enumerate() {
        a[(x, x)] = -(eps(lx.lower) + eps(lx.upper)) / 2;
        for (y, ly) in loops.iter().enumerate() {
            if lx.column == ly.column && lx.upper == ly.lower {
                let e = eps(lx.upper);
                a[(x, y)] = (e + 1) / 2;
                a[(y, x)] = (e - 1) / 2;
            }
            if ly.column == lx.column + 1 {
                if lx.lower < ly.lower && ly.lower < lx.upper && lx.upper < ly.upper {
                    a[(x, y)] = 1;
                } else if ly.lower < lx.lower && lx.lower < ly.upper && ly.upper < lx.upper {
                    a[(x, y)] = -1;
                }
            }
        }
    }
    Ok(SeifertMatrix {
        entries: a,
        genus: n / 2,
        strands: braid.strands,
        crossings: word.len(),
        loops,
    })
}

/// `det(s A - s^{-1} A^T)` with `s = t^{1/2}`, normalized so its value at
/// `s = 1` is positive.
pub fn alexander_from_seifert(a: &SeifertMatrix) -> LaurentPoly {
    let n = a.dim();
    let m = Matrix::from_fn(n, n, |i, j| {
        let up = LaurentPoly::monomial(a.entries[(i, j)], 1);
        let down = LaurentPoly::monomial(a.entries[(j, i)], -1);
        &up - &down
    });
    let det = det_poly_matrix(&m);
    if det.value_at_one().is_negative() {
        -det
    } else {
        det
    }
}

/// A point of the unit circle given by its half angle: `x = cos_half` and
/// `omega = (cos_half + i sin_half)^2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CirclePoint {
    cos_half: Rational,
    sin_half: Rational,
}

impl CirclePoint {
    pub fn new(cos_half: Rational, sin_half: Rational) -> Result<Self> {
        if &cos_half * &cos_half + &sin_half * &sin_half != Rational::one() {
            return Err(Error::OffCircle);
        }
        Ok(CirclePoint { cos_half, sin_half })
    }

    /// The rational parametrization `((1 - u^2) / (1 + u^2), 2u / (1 + u^2))`.
    pub fn from_parameter(u: &Rational) -> Self {
        let one = Rational::one();
        let d = &one + u * u;
        CirclePoint {
            cos_half: (&one - u * u) / &d,
            sin_half: (u + u) / d,
        }
    }

    pub fn cos_half(&self) -> &Rational {
        &self.cos_half
    }

    pub fn sin_half(&self) -> &Rational {
        &self.sin_half
    }

    /// The Kashaev variable `x`, with `2x = omega^{1/2} + omega^{-1/2}`.
    pub fn x(&self) -> Rational {
        self.cos_half.clone()
    }

    /// Real and imaginary parts of `omega`.
    pub fn omega(&self) -> (Rational, Rational) {
        let c = &self.cos_half;
        let s = &self.sin_half;
        (c * c - s * s, (c * s) * Rational::from_integer(2.into()))
    }

    pub fn conjugate(&self) -> Self {
        CirclePoint { cos_half: self.cos_half.clone(), sin_half: -self.sin_half.clone() }
    }
}

/// Signature of `(1 - omega) A + (1 - conj omega) A^T`.
pub fn lt_signature(a: &SeifertMatrix, p: &CirclePoint) -> Result<i64> {
    let (re, im) = p.omega();
    if im.is_zero() && re.is_one() {
        return Err(Error::OmegaOne);
    }
    let n = a.dim();
    let one_minus = Rational::one() - re;
    let q = |v: i64| Rational::from_integer(v.into());
    let x = Matrix::from_fn(n, n, |i, j| &one_minus * q(a.entries[(i, j)] + a.entries[(j, i)]));
    let y = Matrix::from_fn(n, n, |i, j| &im * q(a.entries[(j, i)] - a.entries[(i, j)]));
    signature_hermitian_realified(&x, &y)
}

/// `count` points with parameters `k / (count + 1 - k)`, `k = 1..=count`,
/// ordered by decreasing `x`.
pub fn pythagorean_points(count: usize) -> Vec<CirclePoint> {
    (1..=count)
        .map(|k| CirclePoint::from_parameter(&Rational::new(BigInt::from(k), BigInt::from(count + 1 - k))))
        .collect()
}

/// Integer matrix helper for tests and callers holding plain rows.
pub fn seifert_from_rows(rows: &[&[i64]]) -> SeifertMatrix {
    let n = rows.len();
    SeifertMatrix {
        entries: Matrix::from_fn(n, n, |i, j| rows[i][j]),
        genus: n / 2,
        strands: 0,
        crossings: 0,
        loops: vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::diagram::parse_input;

    fn braid(text: &str) -> Braid {
        parse_input(text).unwrap().braid.unwrap()
    }

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn trefoil() {
        let a = seifert_from_braid(&braid("B 2: 1 1 1")).unwrap();
        assert_eq!(a.entries, Matrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap());
        assert_eq!(a.genus, 1);
        assert_eq!(alexander_from_seifert(&a), lp(&[(-2, 1), (0, -1), (2, 1)]));
        let minus_one = CirclePoint::new(ratio(0, 1), ratio(1, 1)).unwrap();
        assert_eq!(lt_signature(&a, &minus_one), Ok(-2));
        let near_one = CirclePoint::new(ratio(24, 25), ratio(7, 25)).unwrap();
        assert_eq!(lt_signature(&a, &near_one), Ok(0));
        let one = CirclePoint::new(ratio(1, 1), ratio(0, 1)).unwrap();
        assert_eq!(lt_signature(&a, &one), Err(Error::OmegaOne));
    }

    #[test]
    fn torus_and_figure_eight() {
        let a = seifert_from_braid(&braid("B 2: 1 1 1 1 1")).unwrap();
        assert_eq!((a.dim(), a.genus), (4, 2));
        assert_eq!(alexander_from_seifert(&a), lp(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]));
        let f = seifert_from_braid(&braid("B 3: 1 -2 1 -2")).unwrap();
        assert_eq!(alexander_from_seifert(&f), lp(&[(-2, -1), (0, 3), (2, -1)]));
        for p in pythagorean_points(16) {
            assert_eq!(lt_signature(&f, &p), Ok(0));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(seifert_from_braid(&braid("B 2: 1 1")), Err(Error::NotAKnot(2)));
        let b = Braid { strands: 3, word: vec![1, 1, 1] };
        assert_eq!(seifert_from_braid(&b), Err(Error::NotAKnot(2)));
        // An unused column splits the closure, so it is caught as a link.
        let b = Braid::new(4, vec![1, 2, 1, 2, 1]).unwrap();
        assert_eq!(seifert_from_braid(&b), Err(Error::NotAKnot(3)));
        assert_eq!(CirclePoint::new(ratio(1, 2), ratio(1, 2)), Err(Error::OffCircle));
        let empty = seifert_from_rows(&[]);
        assert_eq!(alexander_from_seifert(&empty), LaurentPoly::one());
    }

    #[test]
    fn parametrization() {
        let p = CirclePoint::from_parameter(&ratio(1, 1));
        assert_eq!(p.x(), ratio(0, 1));
        assert_eq!(p.omega(), (ratio(-1, 1), ratio(0, 1)));
        let p = CirclePoint::from_parameter(&ratio(1, 2));
        assert_eq!(p.x(), ratio(3, 5));
        assert_eq!(p.omega(), (ratio(-7, 25), ratio(24, 25)));
        let pts = pythagorean_points(9);
        assert_eq!(pts.len(), 9);
        for w in pts.windows(2) {
            assert!(w[0].x() > w[1].x());
        }
        for p in &pts {
            let (c, s) = (p.cos_half(), p.sin_half());
            assert_eq!(c * c + s * s, Rational::one());
        }
    }
}
