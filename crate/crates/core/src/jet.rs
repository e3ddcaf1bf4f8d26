//! Arithmetic of the first and second order jet groups.
//!
//! G²ₙ is the semidirect product G¹ₙ ⋉ S²ₙ with multiplication
//! `(a, s)(b, t) = (ab, b⁻¹s(b,b) + t)`; the inverse is forced by the group
//! axioms. First-order subgroup membership (SL±, O, CO, H) is decided
//! exactly over the rationals, and the SL±·CO factorization is exact
//! whenever the n-th root it needs is a perfect power.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat_nth_root, rat_to_f64, Rat, Scalar};
use crate::sym2::Sym2Tensor;
use crate::{RatMatrix, RatSym2};

/// Transport term of the jet-group multiplication:
/// `result^i_{jk} = Σ (b⁻¹)^i_l s^l_{mp} b^m_j b^p_k`.
///
/// This is a right action of G¹ₙ on S²ₙ.
pub fn sym2_transport<T: Scalar>(b: &Matrix<T>, s: &Sym2Tensor<T>) -> Result<Sym2Tensor<T>> {
    let n = s.n();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(
            "transport matrix dimension does not match tensor".into(),
        ));
    }
    let binv = b.inverse().ok_or(Error::Singular)?;
    let mut out = Sym2Tensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut acc = T::zero();
                for l in 0..n {
                    let bi = binv.get(i, l);
                    if bi.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        for p in 0..n {
                            let c = s.get(l, m, p);
                            if c.is_zero() {
                                continue;
                            }
                            acc = acc
                                + bi.clone()
                                    * c.clone()
                                    * b.get(m, j).clone()
                                    * b.get(p, k).clone();
                        }
                    }
                }
                out.set(i, j, k, acc);
            }
        }
    }
    Ok(out)
}

/// Element (a, s) of G²ₙ; `a` is invertible and the dimensions agree.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet2 {
    a: RatMatrix,
    s: RatSym2,
}

impl Jet2 {
    pub fn new(a: RatMatrix, s: RatSym2) -> Result<Self> {
        if !a.is_square() || a.rows() != s.n() {
            return Err(Error::DimensionMismatch(
                "jet linear part and symmetric part disagree".into(),
            ));
        }
        if a.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(Jet2 { a, s })
    }

    pub fn identity(n: usize) -> Self {
        Jet2 {
            a: Matrix::identity(n),
            s: Sym2Tensor::zeros(n),
        }
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn s(&self) -> &RatSym2 {
        &self.s
    }

    /// Group inverse `(a⁻¹, −a·s(a⁻¹,a⁻¹))`, computed rather than stored;
    /// `jet * jet.inverse()` is the identity exactly.
    pub fn inverse(&self) -> Jet2 {
        let ainv = self.a.inverse().expect("jet linear part is invertible");
        let transported = sym2_transport(&ainv, &self.s).expect("dimensions agree");
        Jet2 {
            a: ainv,
            s: -&transported,
        }
    }
}

impl<'a, 'b> std::ops::Mul<&'b Jet2> for &'a Jet2 {
    type Output = Jet2;

    /// `(a, s)(b, t) = (ab, b⁻¹s(b,b) + t)`.
    fn mul(self, rhs: &'b Jet2) -> Jet2 {
        assert_eq!(self.n(), rhs.n(), "jet dimension mismatch");
        let transported = sym2_transport(&rhs.a, &self.s).expect("rhs jet is invertible");
        Jet2 {
            a: &self.a * &rhs.a,
            s: &transported + &rhs.s,
        }
    }
}

/// The first-order subgroups of G¹ₙ named by the structure operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupTag {
    /// |det a| = 1.
    SlPm { n: usize },
    /// aᵗηa = η with η = diag(−I_q, I_{n−q}).
    O { q: usize, n: usize },
    /// aᵗηa = k·η for some k > 0.
    Co { q: usize, n: usize },
    /// Homotheties a = k·I, k > 0.
    H { n: usize },
    /// All invertible matrices.
    Gl { n: usize },
}

impl SubgroupTag {
    pub fn n(&self) -> usize {
        match *self {
            SubgroupTag::SlPm { n }
            | SubgroupTag::O { n, .. }
            | SubgroupTag::Co { n, .. }
            | SubgroupTag::H { n }
            | SubgroupTag::Gl { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SubgroupTag::O { q, n } | SubgroupTag::Co { q, n } if q > n => {
                Err(Error::InvalidSignature { q, n })
            }
            _ => Ok(()),
        }
    }
}

/// η = diag(−I_q, I_{n−q}); `q` counts the minus signs.
pub fn eta_matrix(q: usize, n: usize) -> RatMatrix {
    Matrix::from_fn(n, n, |i, j| {
        if i != j {
            Rat::zero()
        } else if i < q {
            -Rat::one()
        } else {
            Rat::one()
        }
    })
}

/// Membership verdict; the certificate carries the conformal factor `k`
/// for CO and H, and the determinant for SL± and GL.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub certificate: Option<Rat>,
}

impl Membership {
    fn no() -> Self {
        Membership {
            member: false,
            certificate: None,
        }
    }

    fn yes(certificate: Option<Rat>) -> Self {
        Membership {
            member: true,
            certificate,
        }
    }
}

/// Exact membership test of `a` in the tagged subgroup.
pub fn subgroup_member(a: &RatMatrix, tag: &SubgroupTag) -> Result<Membership> {
    tag.validate()?;
    let n = tag.n();
    if !a.is_square() || a.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, tag expects {n}x{n}",
            a.rows(),
            a.cols()
        )));
    }
    let det = a.det();
    if det.is_zero() {
        return Ok(Membership::no());
    }
    Ok(match tag {
        SubgroupTag::Gl { .. } => Membership::yes(Some(det)),
        SubgroupTag::SlPm { .. } => {
            if det.abs().is_one() {
                Membership::yes(Some(det))
            } else {
                Membership::no()
            }
        }
        SubgroupTag::O { q, n } => {
            let eta = eta_matrix(*q, *n);
            if &(&a.transpose() * &eta) * a == eta {
                Membership::yes(None)
            } else {
                Membership::no()
            }
        }
        SubgroupTag::Co { q, n } => {
            let eta = eta_matrix(*q, *n);
            let gram = &(&a.transpose() * &eta) * a;
            match conformal_factor(&gram, &eta) {
                Some(k) if k.is_positive() => Membership::yes(Some(k)),
                _ => Membership::no(),
            }
        }
        SubgroupTag::H { n } => {
            let k = a.get(0, 0).clone();
            if k.is_positive() && *a == Matrix::scalar(*n, k.clone()) {
                Membership::yes(Some(k))
            } else {
                Membership::no()
            }
        }
    })
}

/// `k` with `m = k·reference`, if any.
fn conformal_factor(m: &RatMatrix, reference: &RatMatrix) -> Option<Rat> {
    let n = reference.rows();
    let mut k: Option<Rat> = None;
    for i in 0..n {
        for j in 0..n {
            let r = reference.get(i, j);
            if r.is_zero() {
                if !m.get(i, j).is_zero() {
                    return None;
                }
            } else {
                let ratio = m.get(i, j).clone() / r.clone();
                match &k {
                    None => k = Some(ratio),
                    Some(existing) if *existing == ratio => {}
                    _ => return None,
                }
            }
        }
    }
    k
}

/// Factorization `a = s · c` with `c = |det a|^{1/n} · I ∈ Hₙ` and
/// `|det s| = 1`. The scale and `s` are exact when `|det a|` is a perfect
/// n-th power of a rational; the float legs are always populated.
#[derive(Clone, Debug)]
pub struct SlCoFactorization {
    pub scale: f64,
    pub scale_exact: Option<Rat>,
    pub s: Matrix<f64>,
    pub s_exact: Option<RatMatrix>,
}

pub fn factor_sl_co(a: &RatMatrix) -> Result<SlCoFactorization> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("expected a square matrix".into()));
    }
    let n = a.rows();
    let det = a.det();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let abs_det = det.abs();
    let scale_exact = rat_nth_root(&abs_det, n as u32);
    let scale = match &scale_exact {
        Some(r) => rat_to_f64(r),
        None => rat_to_f64(&abs_det).powf(1.0 / n as f64),
    };
    let s_exact = scale_exact
        .as_ref()
        .map(|r| a.map(|x| x.clone() / r.clone()));
    let s = a.map(|x| rat_to_f64(x) / scale);
    Ok(SlCoFactorization {
        scale,
        scale_exact,
        s,
        s_exact,
    })
}

/// Checks `a ∈ SL± ∩ CO(q, n−q)`. This agrees with O(q, n−q) membership,
/// the group identity behind the metric = conformal ∧ volume factorization.
pub fn sl_co_intersection_check(a: &RatMatrix, q: usize, n: usize) -> Result<bool> {
    let in_sl = subgroup_member(a, &SubgroupTag::SlPm { n })?.member;
    let in_co = subgroup_member(a, &SubgroupTag::Co { q, n })?.member;
    let in_o = subgroup_member(a, &SubgroupTag::O { q, n })?.member;
    assert_eq!(
        in_sl && in_co,
        in_o,
        "SL± ∩ CO must coincide with O at every rational point"
    );
    Ok(in_sl && in_co)
}
