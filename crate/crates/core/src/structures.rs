//! Pointwise pseudo-Riemannian structure algebra: signatures, the
//! metric ↔ (conformal representative, volume density) factorization, and
//! the equivariant volume function.
//!
//! Everything upstream of an n-th root is exact. The root-bearing
//! operations are generic over [`RootScalar`]: instantiated at `Rat` they
//! succeed exactly when the root is a perfect power, instantiated at `f64`
//! they always succeed to within the documented 1e-12 tolerance.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{congruence_diagonalize, Matrix};
use crate::scalar::{Rat, RootScalar};
use crate::RatMatrix;

/// Sylvester signature of a nondegenerate symmetric matrix; `neg` is the
/// paper-side `q`, the count of minus signs in diag(−I_q, I_{n−q}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub neg: usize,
    pub pos: usize,
}

impl Signature {
    pub fn n(&self) -> usize {
        self.neg + self.pos
    }
}

/// Exact signature via congruence diagonalization; degenerate matrices
/// (any zero inertia) are rejected as non-metrics.
pub fn metric_signature(g: &RatMatrix) -> Result<Signature> {
    let (inertia, _) = congruence_diagonalize(g)?;
    if inertia.zero > 0 {
        return Err(Error::DegenerateMetric);
    }
    Ok(Signature {
        neg: inertia.negative,
        pos: inertia.positive,
    })
}

/// Validated pointwise metric: symmetric, nondegenerate, with its exact
/// signature attached.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricValue {
    g: RatMatrix,
    signature: Signature,
}

impl MetricValue {
    pub fn new(g: RatMatrix) -> Result<Self> {
        let signature = metric_signature(&g)?;
        Ok(MetricValue { g, signature })
    }

    /// Rejects the matrix if its inertia disagrees with the declared
    /// signature.
    pub fn with_declared_signature(g: RatMatrix, declared: Signature) -> Result<Self> {
        let m = Self::new(g)?;
        if m.signature != declared {
            return Err(Error::InvalidSignature {
                q: declared.neg,
                n: declared.n(),
            });
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.g
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }
}

/// Conformal representative: nondegenerate symmetric matrix regarded up to
/// a positive factor.
#[derive(Clone, Debug, PartialEq)]
pub struct ConformalRep {
    r: RatMatrix,
    signature: Signature,
}

impl ConformalRep {
    pub fn new(r: RatMatrix) -> Result<Self> {
        let signature = metric_signature(&r)?;
        Ok(ConformalRep { r, signature })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.r
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }
}

/// Pointwise volume density, stored through its square so the exact value
/// survives even when the square root does not exist rationally.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeDensity<T> {
    squared: T,
}

impl<T: RootScalar> VolumeDensity<T> {
    pub fn from_squared(squared: T) -> Result<Self> {
        if !squared.is_positive() {
            return Err(Error::NonpositiveVolume);
        }
        Ok(VolumeDensity { squared })
    }

    pub fn from_value(v: T) -> Result<Self> {
        if !v.is_positive() {
            return Err(Error::NonpositiveVolume);
        }
        Ok(VolumeDensity {
            squared: v.clone() * v,
        })
    }

    pub fn squared(&self) -> &T {
        &self.squared
    }

    /// The density itself, when representable in `T`.
    pub fn value(&self) -> Option<T> {
        self.squared.nth_root(2)
    }

    pub fn value_f64(&self) -> f64 {
        self.squared.to_f64().sqrt()
    }
}

/// Factors a nondegenerate symmetric `g` into a unit-|det| conformal
/// representative and a volume density: `rep = g / |det g|^{1/n}`,
/// `v² = |det g|`. Fails with [`Error::InexactRoot`] when the scale has no
/// exact representation in `T` (never for `f64`).
pub fn decompose_metric<T: RootScalar>(g: &Matrix<T>) -> Result<(Matrix<T>, VolumeDensity<T>)> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let det = g.det();
    if det.is_zero() {
        return Err(Error::DegenerateMetric);
    }
    let abs_det = det.abs();
    let vol = VolumeDensity::from_squared(abs_det.clone())?;
    let scale = abs_det
        .nth_root(n as u32)
        .ok_or_else(|| Error::InexactRoot(format!("|det g|^(1/{n})")))?;
    let rep = g.map(|x| x.clone() / scale.clone());
    Ok((rep, vol))
}

/// Rebuilds the unique metric in the conformal class of `rep` whose volume
/// density is `vol`: `g = (v² / |det rep|)^{1/n} · rep`. Independent of the
/// chosen representative.
pub fn recompose_metric<T: RootScalar>(
    rep: &Matrix<T>,
    vol: &VolumeDensity<T>,
) -> Result<Matrix<T>> {
    if !rep.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = rep.rows();
    let det = rep.det();
    if det.is_zero() {
        return Err(Error::DegenerateMetric);
    }
    let ratio = vol.squared().clone() / det.abs();
    let scale = ratio
        .nth_root(n as u32)
        .ok_or_else(|| Error::InexactRoot(format!("(v²/|det rep|)^(1/{n})")))?;
    Ok(rep.map(|x| x.clone() * scale.clone()))
}

/// Exact conformal comparison: the positive λ with `g2 = λ·g1`, or `None`.
pub fn conformal_equivalent(g1: &RatMatrix, g2: &RatMatrix) -> Option<Rat> {
    if g1.rows() != g2.rows() || g1.cols() != g2.cols() {
        return None;
    }
    let mut lambda: Option<Rat> = None;
    for i in 0..g1.rows() {
        for j in 0..g1.cols() {
            let a = g1.get(i, j);
            let b = g2.get(i, j);
            if a.is_zero() {
                if !b.is_zero() {
                    return None;
                }
            } else {
                let ratio = b.clone() / a.clone();
                match &lambda {
                    None => lambda = Some(ratio),
                    Some(l) if *l == ratio => {}
                    _ => return None,
                }
            }
        }
    }
    lambda.filter(Signed::is_positive)
}

/// The equivariant function value of a volume at a frame:
/// `f(l) = (v · |det l|)^{−1/n}`, computed as `(v² · det l²)^{−1/(2n)}`.
/// Satisfies `f(l·a) = |det a|^{−1/n} · f(l)`.
pub fn volume_equivariant_value<T: RootScalar>(
    vol: &VolumeDensity<T>,
    frame: &Matrix<T>,
) -> Result<T> {
    if !frame.is_square() {
        return Err(Error::DimensionMismatch("frame must be square".into()));
    }
    let n = frame.rows();
    let det = frame.det();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let radicand = vol.squared().clone() * det.clone() * det;
    let root = radicand
        .nth_root(2 * n as u32)
        .ok_or_else(|| Error::InexactRoot(format!("(v²·det²)^(1/{})", 2 * n)))?;
    Ok(T::one() / root)
}

/// Full decomposition of a validated metric: exact volume square always,
/// exact representative when `|det g|` is a perfect n-th power, float
/// representative always.
#[derive(Clone, Debug)]
pub struct MetricDecomposition {
    pub signature: Signature,
    pub v_squared: Rat,
    pub rep_exact: Option<RatMatrix>,
    pub rep: Matrix<f64>,
}

pub fn decompose_metric_full(m: &MetricValue) -> MetricDecomposition {
    let exact = decompose_metric::<Rat>(m.matrix());
    let v_squared = m.matrix().det().abs();
    let rep_exact = exact.ok().map(|(rep, _)| rep);
    let g64 = m.matrix().map(RootScalar::to_f64);
    let (rep, _) = decompose_metric::<f64>(&g64).expect("float leg always succeeds");
    MetricDecomposition {
        signature: m.signature(),
        v_squared,
        rep_exact,
        rep,
    }
}
