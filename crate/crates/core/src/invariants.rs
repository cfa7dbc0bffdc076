//! Invariant pipelines built from the region matrices and the Seifert
//! oracle, and the checks comparing them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{roots_with_multiplicity, sturm_count, IntPoly, Inertia, LaurentPoly, Rational};
use crate::diagram::{Colour, Diagram};
use crate::matrices::{factorization_check, goeritz, kashaev_matrix, reduced_kashaev_det, reduced_kauffman_det, KashaevMatrix};
use crate::seifert::{alexander_from_seifert, lt_signature, CirclePoint, SeifertMatrix};
use crate::{Error, Result};

/// Alexander polynomial as `det` of the reduced Kauffman matrix, in its
/// centred representative with positive value at `s = 1` (positive top
/// coefficient when that value is zero).
pub fn alexander_kauffman(d: &Diagram) -> Result<LaurentPoly> {
    Ok(reduced_kauffman_det(d, None)?.normalize_unit().0)
}

/// `det` of the reduced Kashaev matrix after `u = s + s^{-1}`, with the
/// deleted pair defaulting to the regions flanking edge 0.
pub fn alexander_squared_kashaev(d: &Diagram, pair: Option<(usize, usize)>) -> Result<LaurentPoly> {
    reduced_kashaev_det(d, pair)
}

/// `Some(+-1)` when `square = +-delta^2`, otherwise `None`.
pub fn square_sign(square: &LaurentPoly, delta: &LaurentPoly) -> Option<i64> {
    let sq = delta * delta;
    if *square == sq {
        Some(1)
    } else if *square == -sq {
        Some(-1)
    } else {
        None
    }
}

/// True when `a = +-s^k b` for some `k`.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    a.normalize_unit().0 == b.normalize_unit().0
}

/// Gordon-Litherland signature computed for both colours; they must agree.
pub fn classical_signature_gl(d: &Diagram) -> Result<i64> {
    let white = goeritz(d, Colour::White).classical_signature();
    let black = goeritz(d, Colour::Black).classical_signature();
    if white != black {
        return Err(Error::ColourDisagreement { white, black });
    }
    Ok(white)
}

/// `sign(tau_D[x0]) - w(D)`.
pub fn kashaev_invariant(d: &Diagram, x0: &Rational) -> Result<i64> {
    Ok(kashaev_matrix(d)?.eval(x0).signature() - d.writhe())
}

/// Rewrites an Alexander polynomial in `y = s + s^{-1}` (so `y = 2x`).
///
/// Anti-palindromic inputs are first multiplied by `s - s^{-1}`, which only
/// adds roots at `y = +-2`.
pub fn alexander_y_form(delta: &LaurentPoly) -> Result<IntPoly> {
    if delta.is_zero() {
        return Err(Error::VanishingAlexander);
    }
    if delta.is_palindromic() {
        return delta.to_symmetric();
    }
    let odd = LaurentPoly::s() - LaurentPoly::s_inv();
    (delta * &odd).to_symmetric()
}

/// A bracket `(lo, hi)` of `x` values across which the signature changes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpBracket {
    pub lo: Rational,
    pub hi: Rational,
    /// `value(hi) - value(lo)`.
    pub change: i64,
    /// Distinct Alexander roots with `2x` in `(2 lo, 2 hi)`.
    pub distinct_roots: usize,
    /// Same, counted with multiplicity.
    pub roots_with_mult: usize,
}

impl JumpBracket {
    /// Each one-sided jump at a root is at most twice its multiplicity, so
    /// the change across the bracket is at most four times the root count.
    pub fn bound(&self) -> usize {
        4 * self.roots_with_mult
    }

    pub fn within_bound(&self) -> bool {
        self.change.unsigned_abs() as usize <= self.bound()
    }
}

/// The step function `x -> sign(tau_D[x])` sampled on a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    /// Ascending sample points with their signatures.
    pub samples: Vec<(Rational, i64)>,
    pub jumps: Vec<JumpBracket>,
    pub value_at_one: i64,
}

pub const DEFAULT_REFINE_DEPTH: usize = 20;

struct Profiler<'a> {
    tau: &'a KashaevMatrix,
    yform: Option<IntPoly>,
}

impl Profiler<'_> {
    fn value(&self, x: &Rational) -> i64 {
        self.tau.eval(x).signature()
    }

    fn is_root(&self, x: &Rational) -> bool {
        self.yform.as_ref().is_some_and(|p| p.eval_at_x(x).is_zero())
    }

    fn counts(&self, lo: &Rational, hi: &Rational) -> (usize, usize) {
        match &self.yform {
            None => (0, 0),
            Some(p) => {
                let two = Rational::from_integer(2.into());
                let (a, b) = (lo * &two, hi * &two);
                let mut distinct = sturm_count(p, &a, &b).unwrap_or(0);
                if p.eval(&b).is_zero() {
                    distinct -= 1;
                }
                (distinct, roots_with_multiplicity(p, &a, &b).unwrap_or(0))
            }
        }
    }

    /// A point strictly inside `(lo, hi)` that is not an Alexander root.
    fn split_point(&self, lo: &Rational, hi: &Rational) -> Rational {
        let width = hi - lo;
        for k in 2i64.. {
            for j in 1..k {
                let mid = lo + &width * Rational::new(BigInt::from(j), BigInt::from(k));
                if !self.is_root(&mid) {
                    return mid;
                }
            }
        }
        unreachable!("a nonzero polynomial has finitely many roots")
    }

    fn refine(&self, lo: Rational, vlo: i64, hi: Rational, vhi: i64, depth: usize, out: &mut Vec<JumpBracket>) {
        let (distinct, mult) = self.counts(&lo, &hi);
        if distinct <= 1 || depth == 0 {
            if vlo != vhi {
                out.push(JumpBracket { lo, hi, change: vhi - vlo, distinct_roots: distinct, roots_with_mult: mult });
            }
            return;
        }
        let mid = self.split_point(&lo, &hi);
        let vmid = self.value(&mid);
        self.refine(lo, vlo, mid.clone(), vmid, depth - 1, out);
        self.refine(mid, vmid, hi, vhi, depth - 1, out);
    }
}

/// Samples `sign(tau_D[x])` on `grid` (points outside `(-1, 1]` and
/// Alexander roots are dropped), then bisects every bracket whose value
/// changes until it holds at most one distinct root, up to `depth` halvings.
pub fn signature_profile(d: &Diagram, grid: &[Rational], depth: usize) -> Result<SignatureProfile> {
    let tau = kashaev_matrix(d)?;
    let yform = alexander_y_form(&alexander_kauffman(d)?).ok();
    let prof = Profiler { tau: &tau, yform };
    let one = Rational::one();
    let mut xs: Vec<Rational> = grid.iter().filter(|x| **x > -one.clone() && **x <= one && !prof.is_root(x)).cloned().collect();
    xs.sort();
    xs.dedup();
    let samples: Vec<(Rational, i64)> = xs.into_iter().map(|x| {
        let v = prof.value(&x);
        (x, v)
    }).collect();
    let mut jumps = Vec::new();
    for w in samples.windows(2) {
        prof.refine(w[0].0.clone(), w[0].1, w[1].0.clone(), w[1].1, depth, &mut jumps);
    }
    Ok(SignatureProfile { samples, jumps, value_at_one: prof.value(&one) })
}

/// Checks every jump bracket of the profile against the multiplicity bound.
pub fn jump_bound_check(d: &Diagram, grid: &[Rational]) -> Result<bool> {
    if alexander_kauffman(d)?.is_zero() {
        return Err(Error::VanishingAlexander);
    }
    let profile = signature_profile(d, grid, DEFAULT_REFINE_DEPTH)?;
    Ok(profile.jumps.iter().all(JumpBracket::within_bound))
}

/// `|sigma| == ` number of roots of the Alexander polynomial on the unit
/// circle (away from 1), counted with multiplicity.
pub fn applicability_from_parts(sigma: i64, delta: &LaurentPoly) -> Result<bool> {
    let p = alexander_y_form(delta)?;
    let two = Rational::from_integer(2.into());
    let roots = roots_with_multiplicity(&p, &-two.clone(), &two)?;
    Ok(sigma.unsigned_abs() as usize == roots)
}

/// Applicability of the definite-knot argument, from a Seifert matrix.
pub fn applicability_predicate(a: &SeifertMatrix) -> Result<bool> {
    let minus_one = CirclePoint::from_parameter(&Rational::one());
    let sigma = lt_signature(a, &minus_one)?;
    applicability_from_parts(sigma, &alexander_from_seifert(a))
}

/// Moves sample points off the Alexander roots: a point whose `x` is a root
/// is replaced by the nearest non-root parameter `u (1 + 1/(97 j))`.
pub fn avoid_roots(points: &[CirclePoint], delta: &LaurentPoly) -> Result<Vec<CirclePoint>> {
    let p = alexander_y_form(delta)?;
    let mut out = Vec::with_capacity(points.len());
    for pt in points {
        if !p.eval_at_x(&pt.x()).is_zero() {
            out.push(pt.clone());
            continue;
        }
        let u = parameter_of(pt);
        let mut j = 1i64;
        loop {
            let v = &u * (Rational::one() + Rational::new(BigInt::one(), BigInt::from(97 * j)));
            let q = CirclePoint::from_parameter(&v);
            if !p.eval_at_x(&q.x()).is_zero() {
                out.push(q);
                break;
            }
            j += 1;
        }
    }
    Ok(out)
}

/// The half-angle tangent `u` with `sin_half = 2u / (1 + u^2)`.
pub fn parameter_of(p: &CirclePoint) -> Rational {
    // u = sin_half / (1 + cos_half); cos_half = -1 would need u = infinity.
    let denom = Rational::one() + p.cos_half();
    if denom.is_zero() {
        return Rational::zero();
    }
    p.sin_half() / denom
}

/// Comparison of both sides of the signature conjecture at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub point: CirclePoint,
    pub kashaev: i64,
    pub oracle_2sigma: i64,
    pub nullity: usize,
    pub equal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanVerdict {
    /// The definite-knot theorem covers this knot.
    TheoremBacked,
    /// Agreement is recorded but no theorem covers it.
    Exploratory,
    /// No Seifert oracle was available.
    Skipped,
}

/// Outcome of every identity check on one diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub crossings: usize,
    pub writhe: i64,
    pub components: usize,
    pub factorization: bool,
    /// Kauffman-route Alexander polynomial.
    pub alexander: LaurentPoly,
    /// `det` of the reduced Kashaev matrix and the sign `e` with `det = e * Delta^2`.
    pub alexander_sq: LaurentPoly,
    pub alexander_sq_sign: Option<i64>,
    /// Seifert-route agreement, when an oracle is given: the two Alexander
    /// polynomials agree up to a unit, and `det = +-Delta_Seifert^2`.
    pub alexander_oracle: Option<bool>,
    pub kashaev_at_zero: i64,
    pub sigma_gl: Result<i64>,
    pub sigma_oracle: Option<i64>,
    pub classical: bool,
    pub incidence_signs: bool,
    pub writhe_split: bool,
    /// `sign(tau_D[1]) = w(D)`; knots only.
    pub at_one: Option<bool>,
    /// Nullity at least 2 everywhere, exactly 2 off the Alexander roots.
    pub nullity: bool,
    pub scan: Vec<ScanPoint>,
    pub applicability: Option<bool>,
    pub verdict: ScanVerdict,
}

impl ConjectureReport {
    pub fn scan_equal(&self) -> bool {
        self.scan.iter().all(|p| p.equal)
    }

    /// All theorem-backed checks hold. The scan counts only when it is
    /// theorem-backed.
    pub fn passed(&self) -> bool {
        self.factorization
            && self.alexander_sq_sign.is_some()
            && self.alexander_oracle != Some(false)
            && self.classical
            && self.incidence_signs
            && self.writhe_split
            && self.at_one != Some(false)
            && self.nullity
            && (self.verdict != ScanVerdict::TheoremBacked || self.scan_equal())
    }
}

/// Nullity condition at one point: at least 2, and exactly 2 when the
/// Alexander polynomial does not vanish there.
pub fn nullity_ok(inertia: &Inertia, yform: Option<&IntPoly>, x: &Rational) -> bool {
    let off_root = yform.is_some_and(|p| !p.eval_at_x(x).is_zero());
    inertia.nullity >= 2 && (!off_root || inertia.nullity == 2)
}

/// Runs every identity on `d`; with a Seifert matrix of the same knot also
/// compares both sides of the signature conjecture at the `grid` points.
pub fn conjecture_report(d: &Diagram, oracle: Option<&SeifertMatrix>, grid: &[CirclePoint]) -> Result<ConjectureReport> {
    let tau = kashaev_matrix(d)?;
    let w = d.writhe();
    let alexander = alexander_kauffman(d)?;
    let alexander_sq = alexander_squared_kashaev(d, None)?;
    let alexander_sq_sign = square_sign(&alexander_sq, &alexander);
    let yform = alexander_y_form(&alexander).ok();

    let kashaev_at_zero = tau.eval(&Rational::zero()).signature() - w;
    let sigma_gl = classical_signature_gl(d);
    let minus_one = CirclePoint::from_parameter(&Rational::one());
    let sigma_oracle = match oracle {
        Some(a) => Some(lt_signature(a, &minus_one)?),
        None => None,
    };
    let classical = match &sigma_gl {
        Ok(s) => kashaev_at_zero == 2 * s && sigma_oracle.is_none_or(|o| o == *s),
        Err(_) => false,
    };
    let alexander_oracle = oracle.map(|a| {
        let ds = alexander_from_seifert(a);
        equal_up_to_unit(&ds, &alexander) && square_sign(&alexander_sq, &ds.normalize_unit().0).is_some()
    });

    let mut incidence_signs = true;
    for c in 0..d.crossing_count() {
        for v in [Colour::White, Colour::Black] {
            incidence_signs &= d.eta(c, v) * d.orientation_type(c, v) == d.crossings()[c].sign.value();
        }
    }
    let writhe_split = goeritz(d, Colour::White).mu + goeritz(d, Colour::Black).mu == w;
    let at_one = d.is_knot().then(|| tau.eval(&Rational::one()).signature() == w);

    let mut nullity = true;
    for x in [Rational::zero(), Rational::one()] {
        nullity &= nullity_ok(&tau.eval(&x).inertia(), yform.as_ref(), &x);
    }
    let mut scan = Vec::new();
    let applicability = match oracle {
        Some(a) => Some(applicability_predicate(a)?),
        None => None,
    };
    for p in grid {
        let inertia = tau.eval(&p.x()).inertia();
        nullity &= nullity_ok(&inertia, yform.as_ref(), &p.x());
        if let Some(a) = oracle {
            let kashaev = inertia.signature() - w;
            let oracle_2sigma = 2 * lt_signature(a, p)?;
            scan.push(ScanPoint {
                point: p.clone(),
                kashaev,
                oracle_2sigma,
                nullity: inertia.nullity,
                equal: kashaev == oracle_2sigma,
            });
        }
    }
    let verdict = match applicability {
        None => ScanVerdict::Skipped,
        Some(true) => ScanVerdict::TheoremBacked,
        Some(false) => ScanVerdict::Exploratory,
    };
    Ok(ConjectureReport {
        crossings: d.crossing_count(),
        writhe: w,
        components: d.component_count(),
        factorization: factorization_check(d)?,
        alexander,
        alexander_sq,
        alexander_sq_sign,
        alexander_oracle,
        kashaev_at_zero,
        sigma_gl,
        sigma_oracle,
        classical,
        incidence_signs,
        writhe_split,
        at_one,
        nullity,
        scan,
        applicability,
        verdict,
    })
}

/// Grid of `x` values from sample points, for profiles.
pub fn grid_of(points: &[CirclePoint]) -> Vec<Rational> {
    points.iter().map(CirclePoint::x).collect()
}
