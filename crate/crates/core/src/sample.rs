//! Seeded random generators for rational test data: matrices, subgroup
//! elements, metrics, tensors, polynomial fields. Deterministic for a fixed
//! RNG seed, which keeps sampled checks reproducible.

use num_traits::{One, Zero};
use rand::Rng;

use crate::jet::{eta_matrix, Jet2, SubgroupTag};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::prolong::{builtin_algebra, AlgebraSpec};
use crate::scalar::Rat;
use crate::sym2::{pair_count, Sym2Tensor};
use crate::{RatMatrix, RatPoly, RatSym2};

fn bigrat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Small rational with numerator in [−4, 4] and denominator in {1, 2, 3}.
pub fn small_rat(rng: &mut impl Rng) -> Rat {
    bigrat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn small_nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn small_positive_rat(rng: &mut impl Rng) -> Rat {
    bigrat(rng.gen_range(1..=4), rng.gen_range(1..=3))
}

pub fn point(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| small_rat(rng)).collect()
}

pub fn covector(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    point(rng, n)
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    Matrix::from_fn(rows, cols, |_, _| small_rat(rng))
}

/// Unit lower × diagonal × unit upper: invertible by construction, with
/// determinant the product of the diagonal entries.
pub fn invertible(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i > j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i < j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    let diag: Vec<Rat> = (0..n).map(|_| small_nonzero_rat(rng)).collect();
    &(&lower * &Matrix::diagonal(&diag)) * &upper
}

/// Invertible with |det| = 1: unit-triangular product times a ±1 diagonal.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let signs: Vec<Rat> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Rat::one()
            } else {
                -Rat::one()
            }
        })
        .collect();
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i > j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i < j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    &(&lower * &Matrix::diagonal(&signs)) * &upper
}

/// Unit-determinant matrix (product of unit triangulars).
pub fn special_linear(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i > j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if i < j {
            small_rat(rng)
        } else {
            Rat::zero()
        }
    });
    &lower * &upper
}

/// Rational element of O(q, n−q) via the Cayley transform of an η-skew
/// matrix, composed with a ±1 diagonal (also η-orthogonal).
pub fn orthogonal(rng: &mut impl Rng, q: usize, n: usize) -> RatMatrix {
    let o_alg = builtin_algebra(&AlgebraSpec::O { q, n }).expect("valid signature");
    loop {
        let mut a: RatMatrix = Matrix::zeros(n, n);
        for b in o_alg.basis() {
            a = &a + &b.scale(&small_rat(rng));
        }
        let id = Matrix::identity(n);
        let i_minus = &id - &a;
        if let Some(inv) = i_minus.inverse() {
            let cayley = &inv * &(&id + &a);
            let signs: Vec<Rat> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Rat::one()
                    } else {
                        -Rat::one()
                    }
                })
                .collect();
            let result = &cayley * &Matrix::diagonal(&signs);
            debug_assert_eq!(
                &(&result.transpose() * &eta_matrix(q, n)) * &result,
                eta_matrix(q, n)
            );
            return result;
        }
    }
}

/// Rational member of the tagged subgroup.
pub fn subgroup_element(rng: &mut impl Rng, tag: &SubgroupTag) -> RatMatrix {
    match *tag {
        SubgroupTag::Gl { n } => invertible(rng, n),
        SubgroupTag::SlPm { n } => unimodular(rng, n),
        SubgroupTag::O { q, n } => orthogonal(rng, q, n),
        SubgroupTag::Co { q, n } => {
            orthogonal(rng, q, n).scale(&small_positive_rat(rng))
        }
        SubgroupTag::H { n } => Matrix::scalar(n, small_positive_rat(rng)),
    }
}

pub fn sym2(rng: &mut impl Rng, n: usize) -> RatSym2 {
    let rows = (0..n)
        .map(|_| (0..pair_count(n)).map(|_| small_rat(rng)).collect())
        .collect();
    Sym2Tensor::from_rows(rows).expect("row shapes agree")
}

pub fn jet(rng: &mut impl Rng, n: usize) -> Jet2 {
    Jet2::new(invertible(rng, n), sym2(rng, n)).expect("invertible linear part")
}

/// Nondegenerate symmetric matrix `tᵗ·d·t` with `d` a ±small diagonal;
/// the signature is whatever the diagonal signs produce.
pub fn metric(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let d: Vec<Rat> = (0..n)
        .map(|_| {
            let v = small_positive_rat(rng);
            if rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        })
        .collect();
    let t = invertible(rng, n);
    &(&t.transpose() * &Matrix::diagonal(&d)) * &t
}

/// Metric whose |det| is the perfect n-th power uⁿ: `tᵗ·(u·diag(ε))·t` with
/// det t = 1. Decomposition and recomposition are exact on these.
pub fn metric_with_perfect_power_det(rng: &mut impl Rng, n: usize) -> (RatMatrix, Rat) {
    let u = small_positive_rat(rng);
    let signs: Vec<Rat> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                -u.clone()
            } else {
                u.clone()
            }
        })
        .collect();
    let t = special_linear(rng, n);
    let g = &(&t.transpose() * &Matrix::diagonal(&signs)) * &t;
    (g, u)
}

fn small_poly(rng: &mut impl Rng, nvars: usize) -> RatPoly {
    // constant + a couple of low-degree monomials
    let mut p = Polynomial::constant(nvars, small_rat(rng));
    for _ in 0..rng.gen_range(1..=2) {
        let mut exp = vec![0u32; nvars];
        exp[rng.gen_range(0..nvars)] += 1;
        if rng.gen_bool(0.4) {
            exp[rng.gen_range(0..nvars)] += 1;
        }
        p = p.add(&Polynomial::monomial(nvars, exp, small_rat(rng)).expect("length matches"));
    }
    p
}

/// Symmetric n×n array of polynomials `bᵗ·diag(εᵢ(cᵢ + qᵢ))·b` with constant
/// invertible `b`; nondegenerate away from the zero sets of the diagonal.
pub fn poly_metric_entries(rng: &mut impl Rng, n: usize) -> Vec<Vec<RatPoly>> {
    let b = invertible(rng, n);
    let diag: Vec<RatPoly> = (0..n)
        .map(|_| {
            let c = Polynomial::constant(n, small_positive_rat(rng));
            let q = small_poly(rng, n);
            let d = c.add(&q.mul(&q));
            if rng.gen_bool(0.5) {
                d.neg()
            } else {
                d
            }
        })
        .collect();
    let mut entries = vec![vec![Polynomial::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Polynomial::zero(n);
            for l in 0..n {
                let factor = b.get(l, i).clone() * b.get(l, j).clone();
                acc = acc.add(&diag[l].scale(&factor));
            }
            entries[i][j] = acc;
        }
    }
    entries
}

/// Polynomial of the form 1 + c + q² with c > 0, strictly positive at every
/// rational point.
pub fn positive_poly(rng: &mut impl Rng, nvars: usize) -> RatPoly {
    let q = small_poly(rng, nvars);
    Polynomial::constant(nvars, Rat::one() + small_positive_rat(rng)).add(&q.mul(&q))
}
