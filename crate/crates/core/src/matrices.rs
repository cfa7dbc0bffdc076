//! Region-indexed matrices of a diagram: Kashaev's matrix, Kauffman's
//! corner-label matrix, Goeritz matrices, and the operators relating them.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{det_poly_matrix, IntPoly, LaurentPoly, Matrix, Rational, SymRatMatrix};
use crate::diagram::{Colour, Diagram};
use crate::{Error, Result};

/// Kashaev's symmetric matrix over `Z[u]`, `u = 2x`, indexed by region id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KashaevMatrix {
    entries: Matrix<IntPoly>,
}

impl KashaevMatrix {
    pub fn entries(&self) -> &Matrix<IntPoly> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[(i, j)] == self.entries[(j, i)]))
    }

    /// Evaluation at a rational `x`.
    pub fn eval(&self, x: &Rational) -> SymRatMatrix {
        let m = self.entries.map(|p| p.eval_at_x(x));
        SymRatMatrix::new(m).expect("Kashaev matrix is symmetric")
    }

    /// Entrywise image under `u = s + s^{-1}`.
    pub fn to_laurent(&self) -> Matrix<LaurentPoly> {
        self.entries.map(IntPoly::substitute_u_to_s)
    }
}

/// Builds `tau_D` slot by slot: each crossing contributes, with its sign,
/// `2x^2 - 1` on the two `i`/`k` corners, `1` on the `j`/`l` corners and on
/// both opposite pairs, and `x` on every pair of neighbouring corners.
/// Corners landing in one region accumulate.
pub fn kashaev_matrix(d: &Diagram) -> Result<KashaevMatrix> {
    let r = d.region_count();
    // Twice the matrix, so all per-corner entries are integral in u.
    let mut twice: Matrix<IntPoly> = Matrix::zeros(r, r);
    let u = IntPoly::u();
    let diag_ik = &(&u * &u) - &IntPoly::constant(2);
    let two = IntPoly::constant(2);
    for c in 0..d.crossing_count() {
        let frame = d.corner_frame(c);
        let sgn = BigInt::from(d.crossings()[c].sign.value());
        for a in 0..4 {
            for b in 0..4 {
                let entry = if a == b {
                    if frame.ik.contains(&a) {
                        &diag_ik
                    } else {
                        &two
                    }
                } else if (a + 2) % 4 == b {
                    &two
                } else {
                    &u
                };
                let (ra, rb) = (frame.corners[a].region, frame.corners[b].region);
                twice[(ra, rb)] = &twice[(ra, rb)] + &entry.scale(&sgn);
            }
        }
    }
    let mut entries = Matrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            entries[(i, j)] = twice[(i, j)].halve().ok_or(Error::NotIntegral)?;
        }
    }
    Ok(KashaevMatrix { entries })
}

/// Kauffman's matrix: rows are crossings, columns regions, entry the sum of
/// corner labels the region receives at the crossing.
pub fn kauffman_matrix(d: &Diagram) -> Matrix<LaurentPoly> {
    let mut k: Matrix<LaurentPoly> = Matrix::zeros(d.crossing_count(), d.region_count());
    for c in 0..d.crossing_count() {
        let frame = d.corner_frame(c);
        for info in frame.corners {
            let label = LaurentPoly::monomial(1, info.label.exponent());
            k[(c, info.region)] = &k[(c, info.region)] + &label;
        }
    }
    k
}

/// Crossing signs in crossing order.
pub fn sign_diagonal(d: &Diagram) -> Vec<i64> {
    d.crossings().iter().map(|c| c.sign.value()).collect()
}

/// `K^T S K`, with `S` the diagonal matrix of crossing signs.
pub fn kauffman_product(d: &Diagram) -> Matrix<LaurentPoly> {
    let k = kauffman_matrix(d);
    let signs = sign_diagonal(d);
    let sk = Matrix::from_fn(k.rows(), k.cols(), |c, j| k[(c, j)].scale(&BigInt::from(signs[c])));
    k.transpose().mul_poly(&sk)
}

/// Exact entrywise comparison of `K^T S K` with `tau_D` under
/// `u = s + s^{-1}`.
pub fn factorization_check(d: &Diagram) -> Result<bool> {
    Ok(kauffman_product(d) == kashaev_matrix(d)?.to_laurent())
}

/// The two regions flanking edge 0 (left, right).
pub fn default_adjacent_pair(d: &Diagram) -> (usize, usize) {
    d.edge_sides(0).expect("every diagram has an edge")
}

/// Validates an adjacent pair, defaulting to the regions flanking edge 0.
pub fn adjacent_pair(d: &Diagram, pair: Option<(usize, usize)>) -> Result<(usize, usize)> {
    match pair {
        None => Ok(default_adjacent_pair(d)),
        Some((a, b)) => {
            let r = d.region_count();
            if a >= r {
                return Err(Error::InvalidRegion(a));
            }
            if b >= r {
                return Err(Error::InvalidRegion(b));
            }
            if !d.are_adjacent(a, b) {
                return Err(Error::NotAdjacent(a, b));
            }
            Ok((a, b))
        }
    }
}

/// Removes two adjacent regions from a region-indexed matrix: rows and
/// columns of a square region-by-region matrix, or columns of a
/// crossing-by-region matrix.
pub fn delete_adjacent_pair<T: Clone>(m: &Matrix<T>, d: &Diagram, pair: Option<(usize, usize)>) -> Result<Matrix<T>> {
    let (a, b) = adjacent_pair(d, pair)?;
    let r = d.region_count();
    if m.rows() == r && m.cols() == r {
        Ok(m.without_rows_cols(&[a, b]))
    } else if m.rows() == d.crossing_count() && m.cols() == r {
        Ok(m.without_cols(&[a, b]))
    } else {
        Err(Error::Shape("matrix is not indexed by the diagram's regions"))
    }
}

/// `det` of the reduced Kashaev matrix, as a Laurent polynomial in `s`.
pub fn reduced_kashaev_det(d: &Diagram, pair: Option<(usize, usize)>) -> Result<LaurentPoly> {
    let tau = kashaev_matrix(d)?.to_laurent();
    Ok(det_poly_matrix(&delete_adjacent_pair(&tau, d, pair)?))
}

/// `det` of the reduced Kauffman matrix.
pub fn reduced_kauffman_det(d: &Diagram, pair: Option<(usize, usize)>) -> Result<LaurentPoly> {
    let k = kauffman_matrix(d);
    Ok(det_poly_matrix(&delete_adjacent_pair(&k, d, pair)?))
}

/// Goeritz matrix of one colour with its Gordon-Litherland correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    pub colour: Colour,
    /// Integer matrix indexed by the regions of `colour` (labels = region ids).
    pub matrix: SymRatMatrix,
    /// Incidence sign per crossing.
    pub eta: Vec<i64>,
    /// Orientation type per crossing.
    pub t: Vec<i64>,
    /// Sum of `-eta` over crossings of orientation type `-1`.
    pub mu: i64,
}

impl GoeritzData {
    /// Gordon-Litherland signature `sign(G) - mu`.
    pub fn classical_signature(&self) -> i64 {
        self.matrix.signature() - self.mu
    }
}

pub fn goeritz(d: &Diagram, colour: Colour) -> GoeritzData {
    let regions = d.regions_of(colour);
    let mut index = vec![usize::MAX; d.region_count()];
    for (i, &r) in regions.iter().enumerate() {
        index[r] = i;
    }
    let n = regions.len();
    let mut g = vec![vec![0i64; n]; n];
    let mut eta = Vec::with_capacity(d.crossing_count());
    let mut t = Vec::with_capacity(d.crossing_count());
    for c in 0..d.crossing_count() {
        let e = d.eta(c, colour);
        eta.push(e);
        t.push(d.orientation_type(c, colour));
        let [k0, k1] = d.colour_corners(c, colour);
        let (i, j) = (index[d.region_of_corner(c, k0)], index[d.region_of_corner(c, k1)]);
        if i != j {
            g[i][j] += e;
            g[j][i] += e;
        }
    }
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -row.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, v)| v).sum::<i64>();
    }
    let mu = eta.iter().zip(&t).filter(|(_, &ti)| ti == -1).map(|(&e, _)| -e).sum();
    let m = Matrix::from_fn(n, n, |i, j| Rational::from_integer(g[i][j].into()));
    let matrix = SymRatMatrix::with_labels(m, regions).expect("Goeritz matrix is symmetric");
    GoeritzData { colour, matrix, eta, t, mu }
}

/// `tau_D[0]` split into its white and black diagonal blocks.
pub fn split_at_zero(tau: &KashaevMatrix, d: &Diagram) -> Result<(SymRatMatrix, SymRatMatrix)> {
    let at_zero = tau.eval(&Rational::zero());
    let white = d.regions_of(Colour::White);
    let black = d.regions_of(Colour::Black);
    for &w in &white {
        for &b in &black {
            if !at_zero.entries()[(w, b)].is_zero() {
                return Err(Error::CrossColourBlock);
            }
        }
    }
    let tw = SymRatMatrix::with_labels(at_zero.entries().select(&white, &white), white.clone())?;
    let tb = SymRatMatrix::with_labels(at_zero.entries().select(&black, &black), black.clone())?;
    Ok((tw, tb))
}
