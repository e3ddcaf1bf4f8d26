//! Connection-level operations on polynomial charts, all exact: Levi-Civita
//! evaluation, the second-order transformation law, projective shifts and
//! their inversion, equiaffine selection from a volume, Weyl compatibility,
//! and the conformal–projective intersection solver.
//!
//! Field-level statements are checked pointwise at rational points; the
//! inverse metric is formed by adjugate over determinant so that nothing
//! here ever leaves the rational field.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::jet::{sym2_transport, Jet2};
use crate::matrix::{solve_linear, Matrix};
use crate::poly::Polynomial;
use crate::prolong::projective_tensor;
use crate::scalar::Rat;
use crate::sym2::{pair_count, pair_index, Sym2Tensor};
use crate::{RatMatrix, RatPoly, RatSym2};

/// Connection coefficients at a point: `Γ^i_{jk}`, symmetric in the lower
/// pair (torsion-free by representation).
pub type ConnectionValue = RatSym2;

/// Symmetric n×n array of polynomials on a chart, exactly differentiable.
#[derive(Clone)]
pub struct PolyMetricField {
    n: usize,
    entries: Vec<RatPoly>, // row-major n×n, symmetric
}

impl PolyMetricField {
    pub fn new(entries: Vec<Vec<RatPoly>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("metric field must be square".into()));
        }
        for row in &entries {
            for p in row {
                if p.nvars() != n {
                    return Err(Error::DimensionMismatch(
                        "metric entries must be polynomials in n chart coordinates".into(),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(PolyMetricField {
            n,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    pub fn constant(g: &RatMatrix) -> Result<Self> {
        let n = g.rows();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Polynomial::constant(n, g.get(i, j).clone()))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatPoly {
        &self.entries[i * self.n + j]
    }

    pub fn eval(&self, x: &[Rat]) -> Result<RatMatrix> {
        let n = self.n;
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.entry(i, j).eval(x)?);
            }
        }
        Ok(g)
    }

    /// Value and all first partials at a point: `(g(x), d)` with
    /// `d[l].get(i, j) = ∂_l g_{ij}(x)`.
    pub fn eval_with_partials(&self, x: &[Rat]) -> Result<(RatMatrix, Vec<RatMatrix>)> {
        let n = self.n;
        let mut g = Matrix::zeros(n, n);
        let mut d = vec![Matrix::zeros(n, n); n];
        for i in 0..n {
            for j in 0..n {
                let (value, grad) = self.entry(i, j).eval_with_grad(x)?;
                g.set(i, j, value);
                for (l, dl) in grad.into_iter().enumerate() {
                    d[l].set(i, j, dl);
                }
            }
        }
        Ok((g, d))
    }
}

/// Positive polynomial density on a chart.
#[derive(Clone)]
pub struct PolyVolumeField {
    n: usize,
    v: RatPoly,
}

impl PolyVolumeField {
    pub fn new(n: usize, v: RatPoly) -> Result<Self> {
        if v.nvars() != n {
            return Err(Error::DimensionMismatch(
                "volume polynomial must use n chart coordinates".into(),
            ));
        }
        Ok(PolyVolumeField { n, v })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value and gradient, rejecting nonpositive values.
    pub fn eval_with_grad(&self, x: &[Rat]) -> Result<(Rat, Vec<Rat>)> {
        let (value, grad) = self.v.eval_with_grad(x)?;
        if !value.is_positive() {
            return Err(Error::NonpositiveVolume);
        }
        Ok((value, grad))
    }
}

/// Packed array of polynomials, one per `(i, j ≤ k)` connection coefficient.
#[derive(Clone)]
pub struct PolyConnectionField {
    n: usize,
    entries: Vec<RatPoly>, // n * pair_count(n), i-major
}

impl PolyConnectionField {
    pub fn new(n: usize, entries: Vec<RatPoly>) -> Result<Self> {
        if entries.len() != n * pair_count(n) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} packed polynomial entries",
                n * pair_count(n)
            )));
        }
        if entries.iter().any(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch(
                "connection entries must use n chart coordinates".into(),
            ));
        }
        Ok(PolyConnectionField { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: &[Rat]) -> Result<ConnectionValue> {
        let mut values = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            values.push(p.eval(x)?);
        }
        Sym2Tensor::from_flat(self.n, values)
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &RatPoly {
        &self.entries[i * pair_count(self.n) + pair_index(self.n, j, k)]
    }
}

/// Evaluates a polynomial connection field at a point.
pub fn poly_connection_eval(field: &PolyConnectionField, x: &[Rat]) -> Result<ConnectionValue> {
    field.eval(x)
}

fn inverse_metric_at(g: &RatMatrix) -> Result<RatMatrix> {
    g.inverse_adjugate().ok_or(Error::DegenerateMetric)
}

/// Levi-Civita connection of `g` at `x` by the Christoffel formula
/// `Γ^i_{jk} = ½ g^{il} (∂_j g_{lk} + ∂_k g_{lj} − ∂_l g_{jk})`.
pub fn levi_civita_at(g: &PolyMetricField, x: &[Rat]) -> Result<ConnectionValue> {
    let n = g.n();
    let (gx, dg) = g.eval_with_partials(x)?;
    let ginv = inverse_metric_at(&gx)?;
    let half = Rat::new(1.into(), 2.into());
    let mut gamma = Sym2Tensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut acc = Rat::zero();
                for l in 0..n {
                    let term = dg[j].get(l, k).clone() + dg[k].get(l, j).clone()
                        - dg[l].get(j, k).clone();
                    acc += ginv.get(i, l).clone() * term;
                }
                gamma.set(i, j, k, half.clone() * acc);
            }
        }
    }
    Ok(gamma)
}

/// Covariant derivative of the metric:
/// `∇_k g_{ij} = ∂_k g_{ij} − Γ^l_{ki} g_{lj} − Γ^l_{kj} g_{il}`,
/// returned as one symmetric matrix per derivative index `k`.
pub fn metric_cov_deriv_at(
    gamma: &ConnectionValue,
    g: &PolyMetricField,
    x: &[Rat],
) -> Result<Vec<RatMatrix>> {
    let n = g.n();
    if gamma.n() != n {
        return Err(Error::DimensionMismatch(
            "connection and metric dimensions disagree".into(),
        ));
    }
    let (gx, dg) = g.eval_with_partials(x)?;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = dg[k].get(i, j).clone();
                for l in 0..n {
                    acc -= gamma.get(l, k, i).clone() * gx.get(l, j).clone();
                    acc -= gamma.get(l, k, j).clone() * gx.get(i, l).clone();
                }
                m.set(i, j, acc);
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// The second-order transformation law `Γ ↦ a⁻¹Γ(a,a) + s` for a jet
/// `(a, s)`. Transforming by j₁ then j₂ equals transforming by j₁·j₂.
pub fn connection_transform(gamma: &ConnectionValue, jet: &Jet2) -> Result<ConnectionValue> {
    if gamma.n() != jet.n() {
        return Err(Error::DimensionMismatch(
            "connection and jet dimensions disagree".into(),
        ));
    }
    let transported = sym2_transport(jet.a(), gamma)?;
    Ok(&transported + jet.s())
}

/// Extracts the covector of a projective difference: with `d = Γ₂ − Γ₁`,
/// the candidate is `μ_k = tr d / (n+1)`; returned only if `d` is exactly
/// `δ^i_j μ_k + μ_j δ^i_k`.
pub fn projective_difference(
    gamma1: &ConnectionValue,
    gamma2: &ConnectionValue,
) -> Result<Option<Vec<Rat>>> {
    if gamma1.n() != gamma2.n() {
        return Err(Error::DimensionMismatch(
            "connection dimensions disagree".into(),
        ));
    }
    let n = gamma1.n();
    let d = gamma2 - gamma1;
    let trace = d.lower_trace();
    let divisor = Rat::from_integer((n as i64 + 1).into());
    let mu: Vec<Rat> = trace.into_iter().map(|t| t / divisor.clone()).collect();
    if d == projective_tensor(&mu) {
        Ok(Some(mu))
    } else {
        Ok(None)
    }
}

/// Projective shift `Γ ↦ Γ + δ^i_j μ_k + δ^i_k μ_j`: same geodesics up to
/// reparametrization.
pub fn projective_shift(gamma: &ConnectionValue, mu: &[Rat]) -> Result<ConnectionValue> {
    if gamma.n() != mu.len() {
        return Err(Error::DimensionMismatch(
            "covector and connection dimensions disagree".into(),
        ));
    }
    Ok(gamma + &projective_tensor(mu))
}

/// Residual of volume parallelism: `residual_i = ∂_i v − v · Σ_k Γ^k_{ki}`;
/// zero iff the volume is parallel at `x`.
pub fn volume_parallel_residual(
    gamma: &ConnectionValue,
    vol: &PolyVolumeField,
    x: &[Rat],
) -> Result<Vec<Rat>> {
    if gamma.n() != vol.n() {
        return Err(Error::DimensionMismatch(
            "connection and volume dimensions disagree".into(),
        ));
    }
    let (value, grad) = vol.eval_with_grad(x)?;
    let trace = gamma.lower_trace();
    Ok(grad
        .into_iter()
        .zip(trace)
        .map(|(dv, t)| dv - value.clone() * t)
        .collect())
}

/// The unique projective shift of `Γ` making the volume parallel at `x`:
/// `μ_i = (∂_i v / v − Σ_k Γ^k_{ki}) / (n+1)`.
pub fn equiaffine_representative(
    gamma: &ConnectionValue,
    vol: &PolyVolumeField,
    x: &[Rat],
) -> Result<(ConnectionValue, Vec<Rat>)> {
    if gamma.n() != vol.n() {
        return Err(Error::DimensionMismatch(
            "connection and volume dimensions disagree".into(),
        ));
    }
    let n = gamma.n();
    let (value, grad) = vol.eval_with_grad(x)?;
    let trace = gamma.lower_trace();
    let divisor = Rat::from_integer((n as i64 + 1).into());
    let mu: Vec<Rat> = grad
        .into_iter()
        .zip(trace)
        .map(|(dv, t)| (dv / value.clone() - t) / divisor.clone())
        .collect();
    let shifted = projective_shift(gamma, &mu)?;
    Ok((shifted, mu))
}

/// Weyl connection of `(g, θ)` at `x`: Levi-Civita plus
/// `δ^i_j θ_k + δ^i_k θ_j − g_{jk} g^{is} θ_s`.
pub fn weyl_connection_at(
    g: &PolyMetricField,
    theta: &[Rat],
    x: &[Rat],
) -> Result<ConnectionValue> {
    let n = g.n();
    if theta.len() != n {
        return Err(Error::DimensionMismatch(
            "covector dimension disagrees with metric".into(),
        ));
    }
    let lc = levi_civita_at(g, x)?;
    let gx = g.eval(x)?;
    let ginv = inverse_metric_at(&gx)?;
    let raised: Vec<Rat> = (0..n)
        .map(|i| {
            (0..n).fold(Rat::zero(), |acc, s| {
                acc + ginv.get(i, s).clone() * theta[s].clone()
            })
        })
        .collect();
    let mut w = Sym2Tensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut v = Rat::zero();
                if i == j {
                    v += theta[k].clone();
                }
                if i == k {
                    v += theta[j].clone();
                }
                v -= gx.get(j, k).clone() * raised[i].clone();
                w.set(i, j, k, v);
            }
        }
    }
    Ok(&lc + &w)
}

/// Recovers the Weyl 1-form of a compatible connection: the candidate is
/// `θ_k = −(1/2n) Σ g^{ij} ∇_k g_{ij}`, accepted only if
/// `∇_k g_{ij} = −2 θ_k g_{ij}` holds exactly.
pub fn weyl_compatibility_check(
    gamma: &ConnectionValue,
    g: &PolyMetricField,
    x: &[Rat],
) -> Result<Option<Vec<Rat>>> {
    let n = g.n();
    let gx = g.eval(x)?;
    let ginv = inverse_metric_at(&gx)?;
    let nabla = metric_cov_deriv_at(gamma, g, x)?;
    let divisor = Rat::from_integer((2 * n as i64).into());
    let theta: Vec<Rat> = (0..n)
        .map(|k| {
            let mut acc = Rat::zero();
            for i in 0..n {
                for j in 0..n {
                    acc += ginv.get(i, j).clone() * nabla[k].get(i, j).clone();
                }
            }
            -acc / divisor.clone()
        })
        .collect();
    let two = Rat::from_integer(2.into());
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let expected = -(two.clone() * theta[k].clone() * gx.get(i, j).clone());
                if *nabla[k].get(i, j) != expected {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(theta))
}

/// Solves, exactly, for a pair (μ, θ) such that the projective shift of `Γ`
/// by μ is Weyl-compatible with `g` at `x` with 1-form θ:
/// `∇_k g_{ij} = μ_i g_{kj} + μ_j g_{ik} + 2(μ_k − θ_k) g_{ij}`.
/// Returns `None` when the linear system is inconsistent.
pub fn weyl_intersection_at(
    gamma: &ConnectionValue,
    g: &PolyMetricField,
    x: &[Rat],
) -> Result<Option<(Vec<Rat>, Vec<Rat>)>> {
    let n = g.n();
    let gx = g.eval(x)?;
    if gx.det().is_zero() {
        return Err(Error::DegenerateMetric);
    }
    let nabla = metric_cov_deriv_at(gamma, g, x)?;
    let two = Rat::from_integer(2.into());

    // unknowns: μ_0..μ_{n−1}, θ_0..θ_{n−1}
    let mut rows = Vec::with_capacity(n * pair_count(n));
    let mut rhs = Vec::with_capacity(n * pair_count(n));
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut row = vec![Rat::zero(); 2 * n];
                row[i] = row[i].clone() + gx.get(k, j).clone();
                row[j] = row[j].clone() + gx.get(i, k).clone();
                row[k] = row[k].clone() + two.clone() * gx.get(i, j).clone();
                row[n + k] = row[n + k].clone() - two.clone() * gx.get(i, j).clone();
                rows.push(row);
                rhs.push(nabla[k].get(i, j).clone());
            }
        }
    }
    let a = Matrix::from_rows(rows)?;
    Ok(solve_linear(&a, &rhs).map(|sol| {
        let mu = sol[..n].to_vec();
        let theta = sol[n..].to_vec();
        (mu, theta)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::eta_matrix;
    use crate::matrix::RowSpan;
    use crate::prolong::co1_basis_for_gram;
    use crate::scalar::{rat, rat_int};

    fn x_sq_metric() -> PolyMetricField {
        // g = diag(1 + (x⁰)², 1)
        let one = Polynomial::constant(2, rat_int(1));
        let x0 = Polynomial::variable(2, 0);
        PolyMetricField::new(vec![
            vec![one.add(&x0.mul(&x0)), Polynomial::zero(2)],
            vec![Polynomial::zero(2), one],
        ])
        .unwrap()
    }

    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn flat_metric_has_zero_connection() {
        let g = PolyMetricField::constant(&eta_matrix(1, 2)).unwrap();
        for x in [pt(&[0, 0]), pt(&[3, -2])] {
            assert!(levi_civita_at(&g, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn christoffel_formula_example() {
        // g = diag(1+(x⁰)², 1) at x⁰ = 1: Γ⁰₀₀ = ½·(1/2)·2 = 1/2, rest 0
        let gamma = levi_civita_at(&x_sq_metric(), &pt(&[1, 0])).unwrap();
        assert_eq!(*gamma.get(0, 0, 0), rat(1, 2));
        for (i, j, k) in [(0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 1)] {
            assert!(gamma.get(i, j, k).is_zero(), "Γ^{i}_{j}{k} should vanish");
        }

        // the relabeled metric diag(1, 1+(x¹)²) at x¹ = 1: Γ¹₁₁ = 1/2
        let one = Polynomial::constant(2, rat_int(1));
        let x1 = Polynomial::variable(2, 1);
        let g = PolyMetricField::new(vec![
            vec![one.clone(), Polynomial::zero(2)],
            vec![Polynomial::zero(2), one.add(&x1.mul(&x1))],
        ])
        .unwrap();
        let gamma = levi_civita_at(&g, &pt(&[0, 1])).unwrap();
        assert_eq!(*gamma.get(1, 1, 1), rat(1, 2));
    }

    #[test]
    fn levi_civita_is_metric_compatible() {
        let g = x_sq_metric();
        for x in [pt(&[1, 0]), pt(&[2, 3]), pt(&[-1, 5])] {
            let gamma = levi_civita_at(&g, &x).unwrap();
            let nabla = metric_cov_deriv_at(&gamma, &g, &x).unwrap();
            assert!(nabla.iter().all(Matrix::is_zero));
        }
    }

    #[test]
    fn bare_partials_when_connection_vanishes() {
        // Γ = 0: ∇₀g₀₀ = 2 at x⁰ = 1, everything else zero
        let nabla =
            metric_cov_deriv_at(&Sym2Tensor::zeros(2), &x_sq_metric(), &pt(&[1, 0])).unwrap();
        assert_eq!(*nabla[0].get(0, 0), rat_int(2));
        assert!(nabla[1].is_zero());
        assert!(nabla[0].get(0, 1).is_zero());
        assert!(nabla[0].get(1, 1).is_zero());
    }

    #[test]
    fn transform_examples() {
        let n = 2;
        // Γ = 0 taken through (I, s) gives s
        let s = Sym2Tensor::unit(n, 0, 1, 1);
        let jet = Jet2::new(Matrix::identity(n), s.clone()).unwrap();
        assert_eq!(
            connection_transform(&Sym2Tensor::zeros(n), &jet).unwrap(),
            s
        );

        // Γ⁰₀₀ = 1 through (2I, 0) doubles
        let gamma = Sym2Tensor::unit(n, 0, 0, 0);
        let jet = Jet2::new(Matrix::scalar(n, rat_int(2)), Sym2Tensor::zeros(n)).unwrap();
        assert_eq!(
            *connection_transform(&gamma, &jet).unwrap().get(0, 0, 0),
            rat_int(2)
        );

        // identity jet is the identity transform
        assert_eq!(
            connection_transform(&gamma, &Jet2::identity(n)).unwrap(),
            gamma
        );
    }

    #[test]
    fn projective_difference_and_shift() {
        let zero = Sym2Tensor::zeros(2);
        assert_eq!(
            projective_difference(&zero, &zero).unwrap(),
            Some(vec![rat_int(0), rat_int(0)])
        );

        let mu = vec![rat_int(1), rat_int(0)];
        let shifted = projective_shift(&zero, &mu).unwrap();
        assert_eq!(*shifted.get(0, 0, 0), rat_int(2));
        assert_eq!(*shifted.get(1, 0, 1), rat_int(1));
        assert_eq!(projective_difference(&zero, &shifted).unwrap(), Some(mu));

        // a bare d⁰₀₀ = 1 is not a projective tensor: trace gives μ₀ = 1/3
        // but reconstruction mismatches
        let d = Sym2Tensor::unit(2, 0, 0, 0);
        assert_eq!(projective_difference(&zero, &d).unwrap(), None);

        // shift by μ then −μ returns Γ
        let gamma = Sym2Tensor::unit(2, 1, 0, 1);
        let mu = vec![rat(2, 3), rat_int(-1)];
        let neg: Vec<Rat> = mu.iter().map(|m| -m.clone()).collect();
        let round = projective_shift(&projective_shift(&gamma, &mu).unwrap(), &neg).unwrap();
        assert_eq!(round, gamma);

        // μ = (0,1): Γ'¹₁₁ = 2, Γ'⁰₀₁ = 1
        let shifted = projective_shift(&Sym2Tensor::zeros(2), &[rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(*shifted.get(1, 1, 1), rat_int(2));
        assert_eq!(*shifted.get(0, 0, 1), rat_int(1));
    }

    #[test]
    fn volume_residual_and_equiaffine() {
        let n = 2;
        // v = 1 + x⁰ at the origin, Γ = 0: residual (1, 0)
        let v = PolyVolumeField::new(
            n,
            Polynomial::constant(n, rat_int(1)).add(&Polynomial::variable(n, 0)),
        )
        .unwrap();
        let zero = Sym2Tensor::zeros(n);
        let origin = pt(&[0, 0]);
        assert_eq!(
            volume_parallel_residual(&zero, &v, &origin).unwrap(),
            vec![rat_int(1), rat_int(0)]
        );

        // a connection whose trace balances the gradient has zero residual
        let mut balanced = Sym2Tensor::zeros(n);
        balanced.set(0, 0, 0, rat_int(1)); // Σ_k Γ^k_{k0} = 1
        assert_eq!(
            volume_parallel_residual(&balanced, &v, &origin).unwrap(),
            vec![rat_int(0), rat_int(0)]
        );

        // equiaffine selection: μ = (1/3, 0) and the residual vanishes
        let (shifted, mu) = equiaffine_representative(&zero, &v, &origin).unwrap();
        assert_eq!(mu, vec![rat(1, 3), rat_int(0)]);
        assert_eq!(
            shifted.lower_trace(),
            vec![rat_int(1), rat_int(0)] // equals ∂ ln v
        );
        assert!(volume_parallel_residual(&shifted, &v, &origin)
            .unwrap()
            .iter()
            .all(|r| r.is_zero()));

        // constant volume and Γ = 0: nothing moves
        let constant =
            PolyVolumeField::new(n, Polynomial::constant(n, rat_int(3))).unwrap();
        let (same, mu) = equiaffine_representative(&zero, &constant, &origin).unwrap();
        assert_eq!(same, zero);
        assert!(mu.iter().all(|m| m.is_zero()));
    }

    #[test]
    fn equiaffine_in_three_dimensions() {
        // n = 3, v = 1 + x¹ at the origin: μ = (0, 1/4, 0)
        let n = 3;
        let v = PolyVolumeField::new(
            n,
            Polynomial::constant(n, rat_int(1)).add(&Polynomial::variable(n, 1)),
        )
        .unwrap();
        let (_, mu) =
            equiaffine_representative(&Sym2Tensor::zeros(n), &v, &pt(&[0, 0, 0])).unwrap();
        assert_eq!(mu, vec![rat_int(0), rat(1, 4), rat_int(0)]);
    }

    #[test]
    fn weyl_connection_flat_examples() {
        let n = 2;
        let theta = vec![rat_int(1), rat_int(0)];
        // flat euclidean: Γ⁰₀₀ = 1, Γ⁰₁₁ = −1, Γ¹₀₁ = 1, rest 0
        let g = PolyMetricField::constant(&Matrix::identity(n)).unwrap();
        let w = weyl_connection_at(&g, &theta, &pt(&[0, 0])).unwrap();
        assert_eq!(*w.get(0, 0, 0), rat_int(1));
        assert_eq!(*w.get(0, 1, 1), rat_int(-1));
        assert_eq!(*w.get(1, 0, 1), rat_int(1));
        assert!(w.get(1, 1, 1).is_zero());
        assert!(w.get(1, 0, 0).is_zero());
        assert!(w.get(0, 0, 1).is_zero());

        // flat Lorentzian η: Γ⁰₀₀ = 1, Γ⁰₁₁ = 1, Γ¹₀₁ = 1
        let g = PolyMetricField::constant(&eta_matrix(1, n)).unwrap();
        let w = weyl_connection_at(&g, &theta, &pt(&[0, 0])).unwrap();
        assert_eq!(*w.get(0, 0, 0), rat_int(1));
        assert_eq!(*w.get(0, 1, 1), rat_int(1));
        assert_eq!(*w.get(1, 0, 1), rat_int(1));

        // θ = 0 is Levi-Civita
        let w0 = weyl_connection_at(&g, &[rat_int(0), rat_int(0)], &pt(&[0, 0])).unwrap();
        assert_eq!(w0, levi_civita_at(&g, &pt(&[0, 0])).unwrap());
    }

    #[test]
    fn weyl_check_recovers_theta() {
        let g = x_sq_metric();
        let x = pt(&[1, 2]);
        let lc = levi_civita_at(&g, &x).unwrap();
        assert_eq!(
            weyl_compatibility_check(&lc, &g, &x).unwrap(),
            Some(vec![rat_int(0), rat_int(0)])
        );

        let theta = vec![rat(2, 3), rat_int(-1)];
        let w = weyl_connection_at(&g, &theta, &x).unwrap();
        assert_eq!(weyl_compatibility_check(&w, &g, &x).unwrap(), Some(theta));

        // Γ = 0 against a non-conformally-flat direction: ∂g not ∝ g
        assert_eq!(
            weyl_compatibility_check(&Sym2Tensor::zeros(2), &g, &pt(&[1, 0])).unwrap(),
            None
        );
    }

    #[test]
    fn weyl_difference_lies_in_conformal_prolongation_span() {
        let g = x_sq_metric();
        let x = pt(&[2, -1]);
        let theta = vec![rat(1, 2), rat_int(3)];
        let w = weyl_connection_at(&g, &theta, &x).unwrap();
        let lc = levi_civita_at(&g, &x).unwrap();
        let diff = &w - &lc;
        let basis = co1_basis_for_gram(&g.eval(&x).unwrap()).unwrap();
        let span = RowSpan::from_vectors(
            2 * pair_count(2),
            &basis.iter().map(Sym2Tensor::flatten).collect::<Vec<_>>(),
        );
        assert!(span.contains(&diff.flatten()));
    }

    #[test]
    fn weyl_intersection_solves_constructed_instances() {
        let g = x_sq_metric();
        let x = pt(&[1, 1]);
        let lc = levi_civita_at(&g, &x).unwrap();

        // already compatible: (0, 0) is a solution
        let (mu, theta) = weyl_intersection_at(&lc, &g, &x).unwrap().unwrap();
        let shifted = projective_shift(&lc, &mu).unwrap();
        assert!(weyl_compatibility_check(&shifted, &g, &x).unwrap().is_some());
        assert!(mu.iter().all(|m| m.is_zero()));
        assert!(theta.iter().all(|t| t.is_zero()));

        // a projective shift away from Levi-Civita: solvable, and the
        // solver's shift restores compatibility
        let mu0 = vec![rat_int(2), rat(1, 3)];
        let moved = projective_shift(&lc, &mu0).unwrap();
        let (mu, _) = weyl_intersection_at(&moved, &g, &x).unwrap().unwrap();
        let repaired = projective_shift(&moved, &mu).unwrap();
        assert!(weyl_compatibility_check(&repaired, &g, &x)
            .unwrap()
            .is_some());

        // an off-span perturbation is detected as inconsistent
        let mut off = Sym2Tensor::zeros(2);
        off.set(0, 1, 1, rat_int(1));
        let bad = &lc + &off;
        assert!(weyl_intersection_at(&bad, &g, &x).unwrap().is_none());
    }

    #[test]
    fn poly_connection_field_evaluation() {
        let n = 2;
        let zero_field =
            PolyConnectionField::new(n, vec![Polynomial::zero(n); n * pair_count(n)]).unwrap();
        assert!(poly_connection_eval(&zero_field, &pt(&[1, 2]))
            .unwrap()
            .is_zero());

        // Γ⁰₀₀ = x¹: value 3 at (0, 3)
        let mut entries = vec![Polynomial::zero(n); n * pair_count(n)];
        entries[pair_index(n, 0, 0)] = Polynomial::variable(n, 1);
        let field = PolyConnectionField::new(n, entries).unwrap();
        let value = poly_connection_eval(&field, &pt(&[0, 3])).unwrap();
        assert_eq!(*value.get(0, 0, 0), rat_int(3));

        // constant fields evaluate identically everywhere
        let mut entries = vec![Polynomial::zero(n); n * pair_count(n)];
        entries[n * pair_count(n) - 1] = Polynomial::constant(n, rat(5, 7));
        let field = PolyConnectionField::new(n, entries).unwrap();
        assert_eq!(
            poly_connection_eval(&field, &pt(&[1, 2])).unwrap(),
            poly_connection_eval(&field, &pt(&[-3, 8])).unwrap()
        );
    }
}
