use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Matrix, Rational};
use crate::{Error, Result};

/// Exactly symmetric rational matrix, with a label per index (usually the
/// region it stands for).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRatMatrix {
    entries: Matrix<Rational>,
    labels: Vec<usize>,
}

/// Inertia data of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.nullity
    }
}

impl SymRatMatrix {
    /// Labels default to `0..n`.
    pub fn new(entries: Matrix<Rational>) -> Result<Self> {
        let labels = (0..entries.rows()).collect();
        Self::with_labels(entries, labels)
    }

    pub fn with_labels(entries: Matrix<Rational>, labels: Vec<usize>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Shape("symmetric matrix must be square"));
        }
        if labels.len() != entries.rows() {
            return Err(Error::Shape("one label per index"));
        }
        let n = entries.rows();
        for i in 0..n {
            for j in i + 1..n {
                if entries[(i, j)] != entries[(j, i)] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymRatMatrix { entries, labels })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("symmetric matrix must be square"));
        }
        Self::new(Matrix::from_fn(n, n, |i, j| Rational::from_integer(rows[i][j].into())))
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Matrix<Rational> {
        &self.entries
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Exact inertia by symmetric congruence reduction.
    ///
    /// A nonzero diagonal pivot is split off as a 1x1 block. When the
    /// remaining diagonal vanishes but some `a_ij` does not, the hyperbolic
    /// block `[[0, a], [a, 0]]` is split off, adding one positive and one
    /// negative square.
    pub fn inertia(&self) -> Inertia {
        let mut a: Vec<Vec<Rational>> = (0..self.dim()).map(|i| self.entries.row(i).to_vec()).collect();
        let mut out = Inertia { positive: 0, negative: 0, nullity: 0 };
        while !a.is_empty() {
            let n = a.len();
            if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
                let pivot = a[p][p].clone();
                if pivot.is_positive() {
                    out.positive += 1;
                } else {
                    out.negative += 1;
                }
                let col: Vec<Rational> = (0..n).map(|i| a[i][p].clone()).collect();
                for i in 0..n {
                    if i == p || col[i].is_zero() {
                        continue;
                    }
                    let f = &col[i] / &pivot;
                    for j in 0..n {
                        if j != p && !col[j].is_zero() {
                            let d = &f * &col[j];
                            a[i][j] -= d;
                        }
                    }
                }
                remove_index(&mut a, &[p]);
                continue;
            }
            let off = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
            match off {
                Some((p, q)) => {
                    // Schur complement of [[0, c], [c, 0]]: subtract
                    // (a_kp a_ql + a_kq a_pl) / c.
                    let c = a[p][q].clone();
                    out.positive += 1;
                    out.negative += 1;
                    let colp: Vec<Rational> = (0..n).map(|i| a[i][p].clone()).collect();
                    let colq: Vec<Rational> = (0..n).map(|i| a[i][q].clone()).collect();
                    for k in 0..n {
                        if k == p || k == q {
                            continue;
                        }
                        for l in 0..n {
                            if l == p || l == q {
                                continue;
                            }
                            let t = &colp[k] * &colq[l] + &colq[k] * &colp[l];
                            if !t.is_zero() {
                                a[k][l] -= t / &c;
                            }
                        }
                    }
                    remove_index(&mut a, &[p, q]);
                }
                None => {
                    out.nullity += n;
                    a.clear();
                }
            }
        }
        out
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }
}

fn remove_index(a: &mut Vec<Vec<Rational>>, idx: &[usize]) {
    let mut idx = idx.to_vec();
    idx.sort_unstable();
    for &i in idx.iter().rev() {
        a.remove(i);
        for row in a.iter_mut() {
            row.remove(i);
        }
    }
}

/// Signature of the Hermitian matrix `X + iY` (`X` symmetric, `Y`
/// antisymmetric), computed as half the signature of the real form
/// `[[X, -Y], [Y, X]]`.
pub fn signature_hermitian_realified(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Result<i64> {
    let n = x.rows();
    if !x.is_square() || !y.is_square() || y.rows() != n {
        return Err(Error::Shape("hermitian parts must be square and of equal size"));
    }
    for i in 0..n {
        for j in 0..n {
            if x[(i, j)] != x[(j, i)] || y[(i, j)] != -y[(j, i)].clone() {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let real = Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => x[(i, j)].clone(),
        (true, false) => -y[(i, j - n)].clone(),
        (false, true) => y[(i - n, j)].clone(),
        (false, false) => x[(i - n, j - n)].clone(),
    });
    let sig = SymRatMatrix::new(real)?.signature();
    if sig % 2 != 0 {
        return Err(Error::OddRealifiedSignature(sig));
    }
    Ok(sig / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| Rational::from_integer(rows[i][j].into()))
    }

    #[test]
    fn small_examples() {
        let d = SymRatMatrix::from_i64_rows(&[&[2, 0], &[0, -3]]).unwrap().inertia();
        assert_eq!((d.signature(), d.rank(), d.nullity), (0, 2, 0));
        let h = SymRatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap().inertia();
        assert_eq!((h.signature(), h.rank(), h.nullity), (0, 2, 0));
        let z = SymRatMatrix::from_i64_rows(&[&[0, 0], &[0, 0]]).unwrap().inertia();
        assert_eq!((z.signature(), z.rank(), z.nullity), (0, 0, 2));
        assert!(SymRatMatrix::from_i64_rows(&[]).unwrap().inertia().dim() == 0);
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(SymRatMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]), Err(Error::NotSymmetric));
    }

    #[test]
    fn trefoil_matrix_at_zero() {
        // The printed 5x5 trefoil matrix at x = 0; blocks [[3,3],[3,3]]
        // (eigenvalues 6, 0) and [[-2,1,1],[1,-2,1],[1,1,-2]] (0, -3, -3).
        let m = SymRatMatrix::from_i64_rows(&[
            &[3, 3, 0, 0, 0],
            &[3, 3, 0, 0, 0],
            &[0, 0, -2, 1, 1],
            &[0, 0, 1, -2, 1],
            &[0, 0, 1, 1, -2],
        ])
        .unwrap()
        .inertia();
        assert_eq!((m.signature(), m.rank(), m.nullity), (-1, 3, 2));
    }

    #[test]
    fn hermitian_examples() {
        let x = int_matrix(&[&[1, 0], &[0, -1]]);
        let y = int_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(signature_hermitian_realified(&x, &y), Ok(0));
        // 2 (A + A^T) for A = [[-1, 1], [0, -1]].
        let x = int_matrix(&[&[-4, 2], &[2, -4]]);
        assert_eq!(signature_hermitian_realified(&x, &y), Ok(-2));
        // [[0, i], [-i, 0]] has eigenvalues +-1.
        let y = int_matrix(&[&[0, 1], &[-1, 0]]);
        let x = int_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(signature_hermitian_realified(&x, &y), Ok(0));
        let bad = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature_hermitian_realified(&x, &bad), Err(Error::NotSymmetric));
    }

    fn small_sym() -> impl proptest::strategy::Strategy<Value = Vec<Vec<i64>>> {
        use proptest::prelude::*;
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                (0..n)
                    .map(|i| (0..n).map(|j| if i <= j { v[i * n + j] } else { v[j * n + i] }).collect())
                    .collect()
            })
        })
    }

    proptest::proptest! {
        #[test]
        fn congruence_invariance(rows in small_sym(), ops in proptest::collection::vec((0usize..5, 0usize..5, -2i64..=2), 0..6)) {
            let n = rows.len();
            let m = Matrix::from_fn(n, n, |i, j| Rational::from_integer(rows[i][j].into()));
            // P = product of elementary unimodular row additions.
            let mut p = Matrix::from_fn(n, n, |i, j| Rational::from_integer(i64::from(i == j).into()));
            for (a, b, c) in ops {
                let (a, b) = (a % n, b % n);
                if a == b { continue; }
                for j in 0..n {
                    let add = &p[(b, j)] * Rational::from_integer(c.into());
                    p[(a, j)] += add;
                }
            }
            let pt = p.transpose();
            let prod = |l: &Matrix<Rational>, r: &Matrix<Rational>| Matrix::from_fn(n, n, |i, j| {
                (0..n).fold(Rational::zero(), |acc, k| acc + &l[(i, k)] * &r[(k, j)])
            });
            let congruent = prod(&prod(&pt, &m), &p);
            let a = SymRatMatrix::new(m).unwrap().inertia();
            let b = SymRatMatrix::new(congruent).unwrap().inertia();
            proptest::prop_assert_eq!(a, b);
            proptest::prop_assert_eq!(a.rank() + a.nullity, n);
            proptest::prop_assert!(a.signature().unsigned_abs() as usize + a.nullity <= n);
        }
    }
}
