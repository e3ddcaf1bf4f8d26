//! Prolongations of matrix Lie algebras and finite-type classification.
//!
//! For a subalgebra 𝔤 ⊂ 𝔤𝔩(n), the k-th prolongation 𝔤ₖ is the space of
//! totally symmetric (k+1)-linear maps ℝⁿ×…×ℝⁿ → ℝⁿ whose contraction with
//! any k basis vectors is a matrix in 𝔤. Membership of a slice in 𝔤 is
//! encoded through an annihilator basis of 𝔤 inside the n²-dimensional
//! matrix space, so every prolongation is one exact nullspace computation.
//!
//! Elements are stored in packed totally-symmetric coordinates: one
//! coefficient per (upper index, multiset of lower indices), multisets
//! enumerated in lexicographic order. For arity 2 this coincides with the
//! `Sym2Tensor` pair packing.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::jet::{eta_matrix, sym2_transport, SubgroupTag};
use crate::matrix::{Matrix, RowSpan};
use crate::sample;
use crate::scalar::Rat;
use crate::sym2::Sym2Tensor;
use crate::{RatMatrix, RatSym2};

/// Enumeration of size-`size` multisets over `{0, …, n−1}` in lexicographic
/// order of their non-decreasing index tuples.
#[derive(Clone)]
pub struct MultisetIndexer {
    sets: Vec<Vec<usize>>,
    ranks: HashMap<Vec<usize>, usize>,
}

impl MultisetIndexer {
    pub fn new(n: usize, size: usize) -> Self {
        let mut sets = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == size {
                out.push(current.clone());
                return;
            }
            for i in start..n {
                current.push(i);
                rec(n, size, i, current, out);
                current.pop();
            }
        }
        rec(n, size, 0, &mut current, &mut sets);
        let ranks = sets
            .iter()
            .enumerate()
            .map(|(r, s)| (s.clone(), r))
            .collect();
        MultisetIndexer { sets, ranks }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, rank: usize) -> &[usize] {
        &self.sets[rank]
    }

    /// Rank of a multiset given as a sorted index tuple.
    pub fn rank(&self, sorted: &[usize]) -> usize {
        self.ranks[sorted]
    }
}

/// Totally symmetric multilinear map ℝⁿ×…×ℝⁿ → ℝⁿ in packed coordinates.
#[derive(Clone)]
pub struct SymMultiMap {
    n: usize,
    arity: usize,
    index: MultisetIndexer,
    coeffs: Vec<Rat>, // coeffs[i * index.len() + rank]
}

impl PartialEq for SymMultiMap {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arity == other.arity && self.coeffs == other.coeffs
    }
}

impl SymMultiMap {
    pub fn zeros(n: usize, arity: usize) -> Self {
        let index = MultisetIndexer::new(n, arity);
        let len = n * index.len();
        SymMultiMap {
            n,
            arity,
            index,
            coeffs: vec![Rat::zero(); len],
        }
    }

    pub fn from_coeffs(n: usize, arity: usize, coeffs: Vec<Rat>) -> Result<Self> {
        let index = MultisetIndexer::new(n, arity);
        if coeffs.len() != n * index.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} packed coefficients",
                n * index.len()
            )));
        }
        Ok(SymMultiMap {
            n,
            arity,
            index,
            coeffs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeff(&self, upper: usize, lower_sorted: &[usize]) -> &Rat {
        &self.coeffs[upper * self.index.len() + self.index.rank(lower_sorted)]
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.coeffs.clone()
    }

    /// Contraction with the multiset `beta` of k−… lower arguments, leaving
    /// the matrix `M_{il} = t^i_{beta ∪ {l}}`.
    pub fn slice(&self, beta: &[usize]) -> RatMatrix {
        assert_eq!(beta.len() + 1, self.arity);
        Matrix::from_fn(self.n, self.n, |i, l| {
            let mut idx: Vec<usize> = beta.to_vec();
            idx.push(l);
            idx.sort_unstable();
            self.coeff(i, &idx).clone()
        })
    }

    /// For arity 2, the same data as a `Sym2Tensor` (identical packing).
    pub fn to_sym2(&self) -> Option<RatSym2> {
        if self.arity != 2 {
            return None;
        }
        Sym2Tensor::from_flat(self.n, self.coeffs.clone()).ok()
    }

    pub fn from_sym2(s: &RatSym2) -> Self {
        SymMultiMap::from_coeffs(s.n(), 2, s.flatten()).expect("sym2 packing agrees")
    }
}

/// Linear subspace of n×n matrices spanned by an independent basis.
#[derive(Clone)]
pub struct LieSubalgebra {
    n: usize,
    name: String,
    basis: Vec<RatMatrix>,
}

impl LieSubalgebra {
    /// Builds from a basis, rejecting dependent generators. Commutator
    /// closure is *not* required here; builtin constructors verify it.
    pub fn new(n: usize, name: impl Into<String>, basis: Vec<RatMatrix>) -> Result<Self> {
        for b in &basis {
            if b.rows() != n || b.cols() != n {
                return Err(Error::DimensionMismatch(
                    "basis matrix dimension mismatch".into(),
                ));
            }
        }
        let alg = LieSubalgebra {
            n,
            name: name.into(),
            basis,
        };
        if alg.dim() > 0 && alg.stacked().rank() != alg.dim() {
            return Err(Error::DependentBasis);
        }
        Ok(alg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    fn stacked(&self) -> RatMatrix {
        Matrix::from_rows(self.basis.iter().map(|b| b.entries().to_vec()).collect())
            .expect("uniform basis dimensions")
    }

    pub fn span(&self) -> RowSpan<Rat> {
        let flat: Vec<Vec<Rat>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        RowSpan::from_vectors(self.n * self.n, &flat)
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.span().contains(m.entries())
    }

    /// Basis of linear functionals on 𝔤𝔩(n) vanishing on this subspace.
    pub fn annihilator(&self) -> Vec<Vec<Rat>> {
        if self.basis.is_empty() {
            return (0..self.n * self.n)
                .map(|i| {
                    let mut v = vec![Rat::zero(); self.n * self.n];
                    v[i] = Rat::one();
                    v
                })
                .collect();
        }
        self.stacked().nullspace()
    }

    pub fn is_commutator_closed(&self) -> bool {
        let span = self.span();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if !span.contains(a.commutator(b).entries()) {
                    return false;
                }
            }
        }
        true
    }
}

/// The algebras with builtin constructors.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraSpec {
    /// All of 𝔤𝔩(n).
    Gl { n: usize },
    /// Traceless matrices.
    Sl { n: usize },
    /// η-skew matrices, η = diag(−I_q, I_{n−q}).
    O { q: usize, n: usize },
    /// 𝔬 ⊕ span(I).
    Co { q: usize, n: usize },
    /// Endomorphisms preserving the line spanned by the first basis vector.
    GlW { n: usize },
    /// Trace-coupled subalgebra of the line stabilizer: M⁰₀ = c·tr M.
    GlWc { n: usize, c: Rat },
    /// Conformal symplectic algebra, n = 4 only.
    Csp,
    Custom {
        n: usize,
        name: String,
        basis: Vec<RatMatrix>,
    },
}

fn unit_matrix(n: usize, i: usize, j: usize) -> RatMatrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Rat::one());
    m
}

/// Constructs a named algebra. Builtin bases are verified to be closed
/// under the commutator at construction.
pub fn builtin_algebra(spec: &AlgebraSpec) -> Result<LieSubalgebra> {
    let check_sig = |q: usize, n: usize| {
        if q > n || n == 0 {
            Err(Error::InvalidSignature { q, n })
        } else {
            Ok(())
        }
    };
    let alg = match spec {
        AlgebraSpec::Gl { n } => {
            let mut basis = Vec::new();
            for i in 0..*n {
                for j in 0..*n {
                    basis.push(unit_matrix(*n, i, j));
                }
            }
            LieSubalgebra::new(*n, format!("gl({n})"), basis)?
        }
        AlgebraSpec::Sl { n } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidAlgebra("sl needs n ≥ 1".into()));
            }
            let mut basis = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(unit_matrix(n, i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                let mut m = unit_matrix(n, i, i);
                m.set(n - 1, n - 1, -Rat::one());
                basis.push(m);
            }
            LieSubalgebra::new(n, format!("sl({n})"), basis)?
        }
        AlgebraSpec::O { q, n } => {
            check_sig(*q, *n)?;
            let eta = eta_matrix(*q, *n);
            let mut basis = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    let skew = &unit_matrix(*n, i, j) - &unit_matrix(*n, j, i);
                    basis.push(&eta * &skew);
                }
            }
            LieSubalgebra::new(*n, format!("o({q},{})", n - q), basis)?
        }
        AlgebraSpec::Co { q, n } => {
            check_sig(*q, *n)?;
            let mut basis = builtin_algebra(&AlgebraSpec::O { q: *q, n: *n })?
                .basis()
                .to_vec();
            basis.push(Matrix::identity(*n));
            LieSubalgebra::new(*n, format!("co({q},{})", n - q), basis)?
        }
        AlgebraSpec::GlW { n } => {
            let n = *n;
            if n < 1 {
                return Err(Error::InvalidAlgebra("gl_W needs n ≥ 1".into()));
            }
            let mut basis = vec![unit_matrix(n, 0, 0)];
            for j in 1..n {
                for i in 0..n {
                    basis.push(unit_matrix(n, i, j));
                }
            }
            LieSubalgebra::new(n, format!("gl_W({n})"), basis)?
        }
        AlgebraSpec::GlWc { n, c } => {
            let parent = builtin_algebra(&AlgebraSpec::GlW { n: *n })?;
            // One linear condition on the parent coordinates:
            // (1 − c)·x_{E00} − c·Σ_{i≥1} x_{Eii} = 0.
            let row: Vec<Rat> = parent
                .basis()
                .iter()
                .map(|b| {
                    let m00 = b.get(0, 0).clone();
                    m00 - c.clone() * b.trace()
                })
                .collect();
            let constraint = Matrix::from_rows(vec![row])?;
            let basis = constraint
                .nullspace()
                .into_iter()
                .map(|coords| {
                    let mut m = Matrix::zeros(*n, *n);
                    for (x, b) in coords.iter().zip(parent.basis()) {
                        m = &m + &b.scale(x);
                    }
                    m
                })
                .collect();
            LieSubalgebra::new(*n, format!("gl_Wc({n};c={c})"), basis)?
        }
        AlgebraSpec::Csp => {
            let n = 4usize;
            // J = [[0, I2], [-I2, 0]]; solve MᵗJ + JM = λJ in (M, λ).
            let mut j_form: RatMatrix = Matrix::zeros(n, n);
            j_form.set(0, 2, Rat::one());
            j_form.set(1, 3, Rat::one());
            j_form.set(2, 0, -Rat::one());
            j_form.set(3, 1, -Rat::one());
            let cols = n * n + 1;
            let mut rows = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![Rat::zero(); cols];
                    for l in 0..n {
                        // (MᵗJ)_{rc} picks M_{lr}, (JM)_{rc} picks M_{lc}
                        row[l * n + r] = row[l * n + r].clone() + j_form.get(l, c).clone();
                        row[l * n + c] = row[l * n + c].clone() + j_form.get(r, l).clone();
                    }
                    row[n * n] = -j_form.get(r, c).clone();
                    rows.push(row);
                }
            }
            let basis = Matrix::from_rows(rows)?
                .nullspace()
                .into_iter()
                .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
                .collect();
            LieSubalgebra::new(n, "csp(2)".to_string(), basis)?
        }
        AlgebraSpec::Custom { n, name, basis } => {
            return LieSubalgebra::new(*n, name.clone(), basis.clone());
        }
    };
    if !alg.is_commutator_closed() {
        return Err(Error::InvalidAlgebra(format!(
            "{} basis is not closed under the commutator",
            alg.name()
        )));
    }
    Ok(alg)
}

/// A prolongation space 𝔤ₖ: packed totally symmetric (k+1)-linear maps.
#[derive(Clone)]
pub struct ProlongSpace {
    n: usize,
    degree: usize,
    basis: Vec<SymMultiMap>,
}

impl ProlongSpace {
    pub fn from_basis(n: usize, degree: usize, basis: Vec<SymMultiMap>) -> Self {
        assert!(basis.iter().all(|b| b.n() == n && b.arity() == degree + 1));
        ProlongSpace { n, degree, basis }
    }

    pub fn from_sym2_basis(n: usize, basis: Vec<RatSym2>) -> Self {
        ProlongSpace {
            n,
            degree: 1,
            basis: basis.iter().map(SymMultiMap::from_sym2).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SymMultiMap] {
        &self.basis
    }

    /// Degree-1 basis as symmetric bilinear maps.
    pub fn sym2_basis(&self) -> Option<Vec<RatSym2>> {
        self.basis.iter().map(SymMultiMap::to_sym2).collect()
    }

    pub fn span(&self) -> RowSpan<Rat> {
        let flat: Vec<Vec<Rat>> = self.basis.iter().map(SymMultiMap::flatten).collect();
        let cols = self
            .basis
            .first()
            .map(|b| b.flatten().len())
            .unwrap_or_else(|| {
                let idx = MultisetIndexer::new(self.n, self.degree + 1);
                self.n * idx.len()
            });
        RowSpan::from_vectors(cols, &flat)
    }
}

/// k-th prolongation by exact nullspace solving; `k = 1` is the classical
/// first prolongation S²ₙ ∩ L(ℝⁿ, 𝔤).
pub fn kth_prolongation(g: &LieSubalgebra, k: usize) -> Result<ProlongSpace> {
    if k == 0 {
        return Err(Error::InvalidAlgebra("prolongation degree must be ≥ 1".into()));
    }
    let n = g.n();
    let var_idx = MultisetIndexer::new(n, k + 1);
    let slice_idx = MultisetIndexer::new(n, k);
    let nvars = n * var_idx.len();
    let ann = g.annihilator();

    let mut rows = Vec::with_capacity(slice_idx.len() * ann.len());
    for b in 0..slice_idx.len() {
        let beta = slice_idx.get(b);
        for phi in &ann {
            let mut row = vec![Rat::zero(); nvars];
            for i in 0..n {
                for l in 0..n {
                    let w = &phi[i * n + l];
                    if w.is_zero() {
                        continue;
                    }
                    let mut idx: Vec<usize> = beta.to_vec();
                    idx.push(l);
                    idx.sort_unstable();
                    let col = i * var_idx.len() + var_idx.rank(&idx);
                    row[col] = row[col].clone() + w.clone();
                }
            }
            rows.push(row);
        }
    }

    let kernel = if rows.is_empty() {
        (0..nvars)
            .map(|i| {
                let mut v = vec![Rat::zero(); nvars];
                v[i] = Rat::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows)?.nullspace()
    };

    let basis = kernel
        .into_iter()
        .map(|v| SymMultiMap::from_coeffs(n, k + 1, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProlongSpace::from_basis(n, k, basis))
}

pub fn first_prolongation(g: &LieSubalgebra) -> Result<ProlongSpace> {
    kth_prolongation(g, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeVerdict {
    /// dim 𝔤ₖ = 0 at this k (and 𝔤_{k−1} ≠ 0 for k > 1).
    FiniteType(usize),
    /// All prolongations up to the bound are nonzero; only a lower bound
    /// on the type is certified.
    ExceedsBound(usize),
}

impl std::fmt::Display for TypeVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeVerdict::FiniteType(k) => write!(f, "finite-type-{k}"),
            TypeVerdict::ExceedsBound(k) => write!(f, "type > {k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TypeReport {
    pub dims: Vec<usize>,
    pub verdict: TypeVerdict,
}

/// Computes dim 𝔤₁, dim 𝔤₂, … until the first zero (finite type) or until
/// `k_max`. Once some 𝔤ₖ vanishes all later prolongations vanish, so
/// stopping at the first zero is sound.
pub fn finite_type_order(g: &LieSubalgebra, k_max: usize) -> Result<TypeReport> {
    if k_max == 0 {
        return Err(Error::InvalidAlgebra("k_max must be ≥ 1".into()));
    }
    let mut dims = Vec::new();
    for k in 1..=k_max {
        let dim = kth_prolongation(g, k)?.dim();
        dims.push(dim);
        if dim == 0 {
            return Ok(TypeReport {
                dims,
                verdict: TypeVerdict::FiniteType(k),
            });
        }
    }
    Ok(TypeReport {
        dims,
        verdict: TypeVerdict::ExceedsBound(k_max),
    })
}

/// Closed-form basis of the first prolongation of 𝔠𝔬(q, n−q) for the Gram
/// matrix `gram`: for μ the m-th dual basis vector,
/// `s^i_{jk} = δ^i_j μ_k + δ^i_k μ_j − g_{jk} (g⁻¹μ)^i`.
pub fn co1_basis_for_gram(gram: &RatMatrix) -> Result<Vec<RatSym2>> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let ginv = gram.inverse().ok_or(Error::DegenerateMetric)?;
    let mut out = Vec::with_capacity(n);
    for m in 0..n {
        let mut s = Sym2Tensor::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    let mut v = Rat::zero();
                    if i == j && m == k {
                        v += Rat::one();
                    }
                    if i == k && m == j {
                        v += Rat::one();
                    }
                    v -= gram.get(j, k).clone() * ginv.get(i, m).clone();
                    s.set(i, j, k, v);
                }
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// The displayed 𝔠𝔬₁ formula for η = diag(−I_q, I_{n−q}), as a degree-1
/// prolongation space of dimension n. Must coincide with the nullspace
/// computation `first_prolongation(co(q, n−q))`.
pub fn co1_formula_basis(q: usize, n: usize) -> Result<ProlongSpace> {
    if q > n || n == 0 {
        return Err(Error::InvalidSignature { q, n });
    }
    Ok(ProlongSpace::from_sym2_basis(
        n,
        co1_basis_for_gram(&eta_matrix(q, n))?,
    ))
}

/// The projective subspace 𝔭 ⊂ S²ₙ: `s^i_{jk} = δ^i_j μ_k + μ_j δ^i_k`
/// with μ over the dual basis; dimension n.
pub fn projective_subspace(n: usize) -> Result<ProlongSpace> {
    if n < 2 {
        return Err(Error::InvalidAlgebra("projective subspace needs n ≥ 2".into()));
    }
    let mut basis = Vec::with_capacity(n);
    for m in 0..n {
        let mut s = Sym2Tensor::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    let mut v = Rat::zero();
                    if i == j && m == k {
                        v += Rat::one();
                    }
                    if i == k && m == j {
                        v += Rat::one();
                    }
                    s.set(i, j, k, v);
                }
            }
        }
        basis.push(s);
    }
    Ok(ProlongSpace::from_sym2_basis(n, basis))
}

/// A single covector μ turned into its projective shift tensor
/// δ^i_j μ_k + μ_j δ^i_k.
pub fn projective_tensor(mu: &[Rat]) -> RatSym2 {
    let n = mu.len();
    let mut s = Sym2Tensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut v = Rat::zero();
                if i == j {
                    v += mu[k].clone();
                }
                if i == k {
                    v += mu[j].clone();
                }
                s.set(i, j, k, v);
            }
        }
    }
    s
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub ok: bool,
    pub samples: usize,
    pub failures: usize,
}

/// Verifies that G ⋊ 𝔤₁ closes inside G²ₙ: for sampled rational b ∈ G and
/// every basis element s ∈ 𝔤₁, the transported tensor b⁻¹s(b,b) stays in
/// span(𝔤₁).
pub fn semidirect_closure_check(
    tag: &SubgroupTag,
    g1: &ProlongSpace,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<ClosureReport> {
    tag.validate()?;
    if g1.degree() != 1 {
        return Err(Error::DimensionMismatch(
            "closure check needs a degree-1 prolongation space".into(),
        ));
    }
    if g1.n() != tag.n() {
        return Err(Error::DimensionMismatch(
            "group tag and prolongation dimension disagree".into(),
        ));
    }
    let sym_basis = g1.sym2_basis().expect("degree-1 space");
    let span = RowSpan::from_vectors(
        g1.n() * crate::sym2::pair_count(g1.n()),
        &sym_basis.iter().map(Sym2Tensor::flatten).collect::<Vec<_>>(),
    );
    let mut failures = 0;
    for _ in 0..samples {
        let b = sample::subgroup_element(rng, tag);
        for s in &sym_basis {
            let t = sym2_transport(&b, s)?;
            if !span.contains(&t.flatten()) {
                failures += 1;
            }
        }
    }
    Ok(ClosureReport {
        ok: failures == 0,
        samples,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn builtin_dimensions() {
        assert_eq!(builtin_algebra(&AlgebraSpec::Sl { n: 2 }).unwrap().dim(), 3);
        assert_eq!(builtin_algebra(&AlgebraSpec::Sl { n: 4 }).unwrap().dim(), 15);
        assert_eq!(
            builtin_algebra(&AlgebraSpec::O { q: 1, n: 4 }).unwrap().dim(),
            6
        );
        assert_eq!(
            builtin_algebra(&AlgebraSpec::Co { q: 1, n: 4 }).unwrap().dim(),
            7
        );
        assert_eq!(builtin_algebra(&AlgebraSpec::Gl { n: 3 }).unwrap().dim(), 9);
        assert_eq!(
            builtin_algebra(&AlgebraSpec::GlW { n: 3 }).unwrap().dim(),
            7
        );
        assert_eq!(
            builtin_algebra(&AlgebraSpec::GlWc {
                n: 3,
                c: rat(1, 2)
            })
            .unwrap()
            .dim(),
            6
        );
        assert_eq!(builtin_algebra(&AlgebraSpec::Csp).unwrap().dim(), 11);
    }

    #[test]
    fn o11_basis_is_eta_skew() {
        let alg = builtin_algebra(&AlgebraSpec::O { q: 1, n: 2 }).unwrap();
        assert_eq!(alg.dim(), 1);
        // η(E01 − E10) with η = diag(−1, 1) is [[0, -1], [-1, 0]]; the span
        // equals that of [[0,1],[1,0]] from solving Mᵗη + ηM = 0 by hand.
        let by_hand = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ])
        .unwrap();
        assert!(alg.contains(&by_hand));
    }

    #[test]
    fn commutator_closure_of_builtins() {
        for spec in [
            AlgebraSpec::Gl { n: 3 },
            AlgebraSpec::Sl { n: 3 },
            AlgebraSpec::O { q: 1, n: 3 },
            AlgebraSpec::Co { q: 2, n: 3 },
            AlgebraSpec::GlW { n: 3 },
            AlgebraSpec::GlWc {
                n: 3,
                c: rat(2, 3),
            },
            AlgebraSpec::Csp,
        ] {
            let alg = builtin_algebra(&spec).unwrap();
            assert!(alg.is_commutator_closed(), "{} not closed", alg.name());
        }
    }

    #[test]
    fn orthogonal_first_prolongation_vanishes() {
        let alg = builtin_algebra(&AlgebraSpec::O { q: 1, n: 2 }).unwrap();
        assert_eq!(first_prolongation(&alg).unwrap().dim(), 0);
    }

    #[test]
    fn conformal_first_prolongation_is_covector_space() {
        let alg = builtin_algebra(&AlgebraSpec::Co { q: 1, n: 4 }).unwrap();
        assert_eq!(first_prolongation(&alg).unwrap().dim(), 4);
    }

    #[test]
    fn sl_first_prolongation_dimension_and_trace() {
        // n²(n+1)/2 − n for n = 2: 6 − 2 = 4
        let alg = builtin_algebra(&AlgebraSpec::Sl { n: 2 }).unwrap();
        let p = first_prolongation(&alg).unwrap();
        assert_eq!(p.dim(), 4);
        for b in p.sym2_basis().unwrap() {
            assert!(b.lower_trace().iter().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn gl_first_prolongation_is_everything() {
        let alg = builtin_algebra(&AlgebraSpec::Gl { n: 3 }).unwrap();
        assert_eq!(first_prolongation(&alg).unwrap().dim(), 3 * 6);
    }

    #[test]
    fn gl2_second_prolongation_counts_symmetric_cubics() {
        // unconstrained totally symmetric trilinear maps: 2 · C(4,3) = 8
        let alg = builtin_algebra(&AlgebraSpec::Gl { n: 2 }).unwrap();
        assert_eq!(kth_prolongation(&alg, 2).unwrap().dim(), 8);
    }

    #[test]
    fn conformal_is_finite_type_two() {
        let alg = builtin_algebra(&AlgebraSpec::Co { q: 1, n: 3 }).unwrap();
        let report = finite_type_order(&alg, 4).unwrap();
        assert_eq!(report.dims, vec![3, 0]);
        assert_eq!(report.verdict, TypeVerdict::FiniteType(2));
        assert_eq!(report.verdict.to_string(), "finite-type-2");
    }

    #[test]
    fn orthogonal_is_finite_type_one() {
        let alg = builtin_algebra(&AlgebraSpec::O { q: 1, n: 3 }).unwrap();
        let report = finite_type_order(&alg, 4).unwrap();
        assert_eq!(report.verdict, TypeVerdict::FiniteType(1));
    }

    #[test]
    fn sl_type_exceeds_bound() {
        let alg = builtin_algebra(&AlgebraSpec::Sl { n: 3 }).unwrap();
        let report = finite_type_order(&alg, 3).unwrap();
        assert_eq!(report.verdict, TypeVerdict::ExceedsBound(3));
        assert_eq!(report.verdict.to_string(), "type > 3");
        assert!(report.dims.iter().all(|&d| d > 0));
    }

    #[test]
    fn co1_formula_example_entries() {
        // n=2, q=1, μ = e₀*: s⁰₀₀ = 1, s⁰₁₁ = 1, s¹₀₁ = 1, others 0
        let space = co1_formula_basis(1, 2).unwrap();
        let b0 = &space.sym2_basis().unwrap()[0];
        assert_eq!(*b0.get(0, 0, 0), rat_int(1));
        assert_eq!(*b0.get(0, 1, 1), rat_int(1));
        assert_eq!(*b0.get(1, 0, 1), rat_int(1));
        assert_eq!(*b0.get(1, 0, 0), rat_int(0));
        assert_eq!(*b0.get(1, 1, 1), rat_int(0));
        assert_eq!(*b0.get(0, 0, 1), rat_int(0));
    }

    #[test]
    fn co1_formula_matches_nullspace_span() {
        for (q, n) in [(1usize, 2usize), (1, 3), (0, 3), (1, 4), (2, 4)] {
            let alg = builtin_algebra(&AlgebraSpec::Co { q, n }).unwrap();
            let computed = first_prolongation(&alg).unwrap();
            let formula = co1_formula_basis(q, n).unwrap();
            assert_eq!(computed.dim(), n);
            assert!(computed.span().same_span(&formula.span()), "q={q} n={n}");
        }
    }

    #[test]
    fn projective_subspace_example_entries() {
        // n=2, μ = e₀*: s⁰₀₀ = 2, s¹₀₁ = 1, others 0
        let p = projective_subspace(2).unwrap();
        assert_eq!(p.dim(), 2);
        let b0 = &p.sym2_basis().unwrap()[0];
        assert_eq!(*b0.get(0, 0, 0), rat_int(2));
        assert_eq!(*b0.get(1, 0, 1), rat_int(1));
        assert_eq!(*b0.get(0, 1, 1), rat_int(0));
        assert_eq!(*b0.get(1, 1, 1), rat_int(0));
    }

    #[test]
    fn projective_meets_conformal_only_at_zero() {
        // joint nullspace of [P | −C]: kernel must be trivial
        for (q, n) in [(1usize, 2usize), (1, 3), (0, 4), (2, 4)] {
            let p = projective_subspace(n).unwrap();
            let c = co1_formula_basis(q, n).unwrap();
            let cols = p.dim() + c.dim();
            let rows = n * crate::sym2::pair_count(n);
            let mut m = Matrix::zeros(rows, cols);
            for (idx, b) in p.sym2_basis().unwrap().iter().enumerate() {
                for (r, v) in b.flatten().into_iter().enumerate() {
                    m.set(r, idx, v);
                }
            }
            for (idx, b) in c.sym2_basis().unwrap().iter().enumerate() {
                for (r, v) in b.flatten().into_iter().enumerate() {
                    m.set(r, p.dim() + idx, -v);
                }
            }
            assert!(m.nullspace().is_empty(), "q={q} n={n}");
        }
    }

    #[test]
    fn monotone_vanishing_after_first_zero() {
        let alg = builtin_algebra(&AlgebraSpec::O { q: 1, n: 3 }).unwrap();
        assert_eq!(kth_prolongation(&alg, 1).unwrap().dim(), 0);
        assert_eq!(kth_prolongation(&alg, 2).unwrap().dim(), 0);
        let co = builtin_algebra(&AlgebraSpec::Co { q: 1, n: 3 }).unwrap();
        assert_eq!(kth_prolongation(&co, 2).unwrap().dim(), 0);
        assert_eq!(kth_prolongation(&co, 3).unwrap().dim(), 0);
    }

    #[test]
    fn closure_check_for_conformal_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let tag = SubgroupTag::Co { q: 1, n: 2 };
        let g1 = co1_formula_basis(1, 2).unwrap();
        let report = semidirect_closure_check(&tag, &g1, 10, &mut rng).unwrap();
        assert!(report.ok);
    }

    #[test]
    fn closure_check_trivial_for_zero_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let tag = SubgroupTag::O { q: 1, n: 2 };
        let g1 = ProlongSpace::from_sym2_basis(2, Vec::new());
        let report = semidirect_closure_check(&tag, &g1, 5, &mut rng).unwrap();
        assert!(report.ok);
    }
}
