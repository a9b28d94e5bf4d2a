//! Coordinate semi-vector spaces over the nonnegative rationals.
//!
//! Three concrete carriers are provided: [`SemiVector`] for `[Q+]^n`,
//! [`SemiMatrix`] for `n x m` nonnegative matrices and [`SemiPolynomial`]
//! for polynomials with nonnegative coefficients. All three implement
//! [`SemiModule`], which is what [`audit_laws`] checks the semi-vector space
//! axioms against.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, UniqueSolve};
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semilinear::{ImageMembership, SemiLinearMap};

/// Default ceiling on the dimension handled by the exact decision
/// procedures (cone membership, coordinates).
pub const DEFAULT_DIMENSION_CAP: usize = 12;
/// No override may raise the cap above this.
pub const HARD_DIMENSION_CAP: usize = 16;

/// A vector of `[Q+]^n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<NonnegScalar>", into = "Vec<NonnegScalar>")]
pub struct SemiVector(Vec<NonnegScalar>);

impl TryFrom<Vec<NonnegScalar>> for SemiVector {
    type Error = Error;
    fn try_from(coords: Vec<NonnegScalar>) -> Result<Self> {
        SemiVector::new(coords)
    }
}

impl From<SemiVector> for Vec<NonnegScalar> {
    fn from(v: SemiVector) -> Self {
        v.0
    }
}

impl fmt::Debug for SemiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for SemiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl SemiVector {
    pub fn new(coords: Vec<NonnegScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("vector needs at least one coordinate"));
        }
        Ok(SemiVector(coords))
    }

    /// The zero vector `0_V` of `[Q+]^n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "dimension must be positive");
        SemiVector(vec![NonnegScalar::zero(); n])
    }

    /// The standard basis vector `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = NonnegScalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[NonnegScalar] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &NonnegScalar {
        &self.0[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NonnegScalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(NonnegScalar::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(SemiVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, lambda: &NonnegScalar) -> Self {
        SemiVector(self.0.iter().map(|x| lambda * x).collect())
    }

    /// `sum_i coeffs[i] * gens[i]`.
    pub fn combination(gens: &[SemiVector], coeffs: &[NonnegScalar]) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyInput("no generators"))?;
        if gens.len() != coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                found: coeffs.len(),
            });
        }
        let mut acc = SemiVector::zeros(first.dim());
        for (g, c) in gens.iter().zip(coeffs) {
            acc = acc.add(&g.scale(c))?;
        }
        Ok(acc)
    }

    /// Whether some `u` satisfies `self + u = 0_V`. In `[Q+]^n` only the
    /// zero vector qualifies, since coordinates cannot cancel.
    pub fn is_symmetrizable(&self) -> bool {
        self.is_zero()
    }
}

/// `[Q+]^n` is simple for every `n`: its only symmetrizable element is zero.
pub fn is_simple_space(_n: usize) -> bool {
    true
}

/// An `rows x cols` nonnegative matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<NonnegScalar>>", into = "Vec<Vec<NonnegScalar>>")]
pub struct SemiMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NonnegScalar>,
}

impl TryFrom<Vec<Vec<NonnegScalar>>> for SemiMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<NonnegScalar>>) -> Result<Self> {
        SemiMatrix::from_rows(rows)
    }
}

impl From<SemiMatrix> for Vec<Vec<NonnegScalar>> {
    fn from(m: SemiMatrix) -> Self {
        m.entries.chunks(m.cols).map(<[_]>::to_vec).collect()
    }
}

impl fmt::Debug for SemiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl SemiMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<NonnegScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(SemiMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<NonnegScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[SemiVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::EmptyInput("no columns"))?;
        let rows = first.dim();
        for c in columns {
            first.check_dim(c)?;
        }
        let cols = columns.len();
        let entries = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c.get(i).clone()))
            .collect();
        Self::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![NonnegScalar::zero(); rows * cols]).expect("positive dims")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = NonnegScalar::one();
        }
        m
    }

    pub fn diagonal(diag: &[NonnegScalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NonnegScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[NonnegScalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> SemiVector {
        SemiVector(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> SemiVector {
        SemiVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self::new(self.cols, self.rows, entries).expect("same size")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NonnegScalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, lambda: &NonnegScalar) -> Self {
        SemiMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| lambda * x).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SemiVector) -> Result<SemiVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(SemiVector(
            (0..self.rows)
                .map(|i| {
                    self.entries[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.iter())
                        .map(|(a, x)| a * x)
                        .sum()
                })
                .collect(),
        ))
    }

    /// The matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                entries.push((0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum());
            }
        }
        Self::new(self.rows, other.cols, entries)
    }

    /// Row-major flattening into `[Q+]^(rows*cols)`.
    pub fn flatten(&self) -> SemiVector {
        SemiVector(self.entries.clone())
    }

    pub fn from_flat(rows: usize, cols: usize, v: &SemiVector) -> Result<Self> {
        Self::new(rows, cols, v.coords().to_vec())
    }
}

/// A polynomial with nonnegative coefficients; `coeffs[k]` multiplies `x^k`.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(from = "Vec<NonnegScalar>", into = "Vec<NonnegScalar>")]
pub struct SemiPolynomial {
    coeffs: Vec<NonnegScalar>,
}

impl From<Vec<NonnegScalar>> for SemiPolynomial {
    fn from(coeffs: Vec<NonnegScalar>) -> Self {
        SemiPolynomial::new(coeffs)
    }
}

impl From<SemiPolynomial> for Vec<NonnegScalar> {
    fn from(p: SemiPolynomial) -> Self {
        p.coeffs
    }
}

impl SemiPolynomial {
    pub fn new(mut coeffs: Vec<NonnegScalar>) -> Self {
        while coeffs.last().is_some_and(NonnegScalar::is_zero) {
            coeffs.pop();
        }
        SemiPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        SemiPolynomial { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[NonnegScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = NonnegScalar::zero();
        SemiPolynomial::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn scale(&self, lambda: &NonnegScalar) -> Self {
        SemiPolynomial::new(self.coeffs.iter().map(|c| lambda * c).collect())
    }

    pub fn eval(&self, x: &NonnegScalar) -> NonnegScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(NonnegScalar::zero(), |acc, c| acc * x + c)
    }
}

/// A finite family of pairwise distinct vectors of one ambient dimension.
///
/// Construction only checks shape and distinctness; whether the family
/// gives unique coordinates is decided by [`coords`] (per vector) and
/// [`SemiBasis::is_independent`] (for its whole span).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "BasisRepr", into = "BasisRepr")]
pub struct SemiBasis {
    dim: usize,
    elements: Vec<SemiVector>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BasisRepr {
    Elements(Vec<SemiVector>),
    WithDim { dim: usize, elements: Vec<SemiVector> },
}

impl TryFrom<BasisRepr> for SemiBasis {
    type Error = Error;
    fn try_from(r: BasisRepr) -> Result<Self> {
        match r {
            BasisRepr::Elements(elements) => {
                let dim = elements
                    .first()
                    .map(SemiVector::dim)
                    .ok_or(Error::EmptyInput("basis without elements needs an explicit dim"))?;
                SemiBasis::new(dim, elements)
            }
            BasisRepr::WithDim { dim, elements } => SemiBasis::new(dim, elements),
        }
    }
}

impl From<SemiBasis> for BasisRepr {
    fn from(b: SemiBasis) -> Self {
        if b.elements.is_empty() {
            BasisRepr::WithDim { dim: b.dim, elements: b.elements }
        } else {
            BasisRepr::Elements(b.elements)
        }
    }
}

impl SemiBasis {
    pub fn new(dim: usize, elements: Vec<SemiVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput("ambient dimension must be positive"));
        }
        for e in &elements {
            if e.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.dim(),
                });
            }
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(Error::NotABasis(format!("element {i} repeats an earlier element")));
            }
        }
        Ok(SemiBasis { dim, elements })
    }

    pub fn from_elements(elements: Vec<SemiVector>) -> Result<Self> {
        let dim = elements
            .first()
            .map(SemiVector::dim)
            .ok_or(Error::EmptyInput("basis needs at least one element"))?;
        Self::new(dim, elements)
    }

    /// `{e_1, ..., e_n}`.
    pub fn standard(n: usize) -> Self {
        SemiBasis {
            dim: n,
            elements: (0..n).map(|i| SemiVector::unit(n, i)).collect(),
        }
    }

    pub fn empty(dim: usize) -> Self {
        SemiBasis { dim, elements: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SemiVector] {
        &self.elements
    }

    /// Columns are the basis elements.
    pub fn as_matrix(&self) -> Result<SemiMatrix> {
        SemiMatrix::from_columns(&self.elements)
    }

    /// The same family in a different order: element `k` of the result is
    /// element `order[k]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let elements = order
            .iter()
            .map(|&i| {
                self.elements
                    .get(i)
                    .cloned()
                    .ok_or(Error::InvalidParameter(format!("index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, elements)
    }

    /// True when the elements are linearly independent, which is exactly
    /// when every vector of their cone has unique nonnegative coordinates.
    pub fn is_independent(&self) -> bool {
        match self.as_matrix() {
            Ok(m) => exact::column_rank(&m) == self.elements.len(),
            Err(_) => true,
        }
    }
}

/// How [`coords`] established that the coordinates are unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniquenessCertificate {
    /// The basis vectors are linearly independent.
    Independent,
    /// The basis is dependent, but no nonzero direction keeps the
    /// coordinates nonnegative.
    NoFeasibleDirection,
    /// The zero vector has empty support.
    ZeroVector,
}

/// Nonnegative coordinates of a vector in a [`SemiBasis`]: only strictly
/// positive entries are listed, as `(index, coordinate)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coordinates {
    pub support: Vec<(usize, NonnegScalar)>,
    pub certificate: UniquenessCertificate,
}

impl Coordinates {
    /// The coordinate vector over all basis indices.
    pub fn dense(&self, len: usize) -> Vec<NonnegScalar> {
        let mut out = vec![NonnegScalar::zero(); len];
        for (i, c) in &self.support {
            out[*i] = c.clone();
        }
        out
    }
}

fn check_cap(found: usize, cap: usize) -> Result<()> {
    if found > cap {
        return Err(Error::DimensionCap { cap, found });
    }
    Ok(())
}

/// Unique nonnegative coordinates of `v` in `basis`.
///
/// ```
/// use semikit::semimodule::{coords, v, SemiBasis};
/// let basis = SemiBasis::from_elements(vec![v(&["1", "0"]), v(&["1", "1"])]).unwrap();
/// let c = coords(&v(&["2", "1"]), &basis).unwrap();
/// assert_eq!(c.dense(2), v(&["1", "1"]).coords());
/// ```
pub fn coords(v: &SemiVector, basis: &SemiBasis) -> Result<Coordinates> {
    coords_capped(v, basis, DEFAULT_DIMENSION_CAP)
}

pub fn coords_capped(v: &SemiVector, basis: &SemiBasis, cap: usize) -> Result<Coordinates> {
    if basis.is_empty() {
        return Err(Error::EmptyInput("basis has no elements"));
    }
    if v.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: v.dim(),
        });
    }
    if v.is_zero() {
        return Ok(Coordinates {
            support: Vec::new(),
            certificate: UniquenessCertificate::ZeroVector,
        });
    }
    check_cap(basis.len(), cap)?;
    let a = basis.as_matrix()?;
    let (x, certificate) = match exact::unique_nonneg_solve(&a, v) {
        UniqueSolve::None => return Err(Error::NotRepresentable),
        UniqueSolve::Multiple { first, second } => return Err(Error::NonUnique { first, second }),
        UniqueSolve::Unique { x, independent } => (
            x,
            if independent {
                UniquenessCertificate::Independent
            } else {
                UniquenessCertificate::NoFeasibleDirection
            },
        ),
    };
    let recombined = SemiVector::combination(basis.elements(), &x)?;
    assert_eq!(&recombined, v, "coordinates failed nonnegative re-verification");
    Ok(Coordinates {
        support: x
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect(),
        certificate,
    })
}

/// Result of [`subspace_check`].
#[derive(Debug, Clone, Serialize)]
pub struct SubspaceReport {
    pub generators: usize,
    pub samples: usize,
    pub contains_zero: bool,
    pub closed_under_addition: bool,
    pub closed_under_scaling: bool,
    pub probes: Vec<ProbeResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeResult {
    pub vector: SemiVector,
    pub member: bool,
    /// Nonnegative generator coefficients reproducing the probe.
    pub witness: Option<Vec<NonnegScalar>>,
}

impl SubspaceReport {
    pub fn closed(&self) -> bool {
        self.contains_zero && self.closed_under_addition && self.closed_under_scaling
    }
}

/// Audits the cone generated by `generators` as a semi-subspace: random
/// members are summed and scaled, and every result is re-decided exactly
/// for membership. `probes` are decided and reported individually.
pub fn subspace_check(
    generators: &[SemiVector],
    samples: usize,
    probes: &[SemiVector],
    sampler: &mut Sampler,
) -> Result<SubspaceReport> {
    let cone = SemiLinearMap::new(SemiMatrix::from_columns(generators)?);
    let k = generators.len();
    let member = |w: &SemiVector| -> Result<Option<Vec<NonnegScalar>>> {
        Ok(match cone.image_member(w)? {
            ImageMembership::Member { witness } => Some(witness.coords().to_vec()),
            ImageMembership::NotMember => None,
        })
    };
    let contains_zero = member(&SemiVector::zeros(cone.codomain_dim()))?.is_some();
    let mut closed_under_addition = true;
    let mut closed_under_scaling = true;
    for _ in 0..samples {
        let a = SemiVector::combination(generators, &sampler.scalars(k))?;
        let b = SemiVector::combination(generators, &sampler.scalars(k))?;
        let lambda = sampler.scalar();
        closed_under_addition &= member(&a.add(&b)?)?.is_some();
        closed_under_scaling &= member(&a.scale(&lambda))?.is_some();
    }
    let probes = probes
        .iter()
        .map(|p| {
            let witness = member(p)?;
            Ok(ProbeResult {
                vector: p.clone(),
                member: witness.is_some(),
                witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubspaceReport {
        generators: k,
        samples,
        contains_zero,
        closed_under_addition,
        closed_under_scaling,
        probes,
    })
}

/// A carrier with the two semi-vector space operations.
pub trait SemiModule: Clone + PartialEq + fmt::Debug {
    fn plus(&self, other: &Self) -> Result<Self>;
    fn times(&self, lambda: &NonnegScalar) -> Self;
    /// The zero element of the space `self` lives in.
    fn zero_like(&self) -> Self;
}

impl SemiModule for SemiVector {
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn times(&self, lambda: &NonnegScalar) -> Self {
        self.scale(lambda)
    }
    fn zero_like(&self) -> Self {
        SemiVector::zeros(self.dim())
    }
}

impl SemiModule for SemiMatrix {
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn times(&self, lambda: &NonnegScalar) -> Self {
        self.scale(lambda)
    }
    fn zero_like(&self) -> Self {
        SemiMatrix::zeros(self.rows, self.cols)
    }
}

impl SemiModule for SemiPolynomial {
    fn plus(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }
    fn times(&self, lambda: &NonnegScalar) -> Self {
        self.scale(lambda)
    }
    fn zero_like(&self) -> Self {
        SemiPolynomial::zero()
    }
}

/// The laws checked by [`audit_laws`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    Cancellation,
    ScalarDistributesOverVectorSum,
    VectorDistributesOverScalarSum,
    ScalarMultiplicationCompatible,
    UnitScalar,
    ZeroScalarAnnihilates,
}

impl Law {
    pub const ALL: [Law; 9] = [
        Law::AddAssociative,
        Law::AddCommutative,
        Law::AddIdentity,
        Law::Cancellation,
        Law::ScalarDistributesOverVectorSum,
        Law::VectorDistributesOverScalarSum,
        Law::ScalarMultiplicationCompatible,
        Law::UnitScalar,
        Law::ZeroScalarAnnihilates,
    ];
}

#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub law: Law,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.failures == 0)
    }
}

/// One sample for [`audit_laws`]: three elements and two scalars.
#[derive(Debug, Clone)]
pub struct LawSample<M> {
    pub u: M,
    pub v: M,
    pub w: M,
    pub alpha: NonnegScalar,
    pub beta: NonnegScalar,
}

/// Checks every semi-vector space law on each sample with exact equality.
pub fn audit_laws<M: SemiModule>(samples: &[LawSample<M>]) -> Result<LawReport> {
    let mut results: Vec<LawResult> = Law::ALL
        .iter()
        .map(|&law| LawResult {
            law,
            checked: 0,
            failures: 0,
            witness: None,
        })
        .collect();
    for s in samples {
        let LawSample { u, v, w, alpha, beta } = s;
        let checks: [(Law, bool); 9] = [
            (Law::AddAssociative, u.plus(&v.plus(w)?)? == u.plus(v)?.plus(w)?),
            (Law::AddCommutative, u.plus(v)? == v.plus(u)?),
            (Law::AddIdentity, u.plus(&u.zero_like())? == *u),
            // u + v = u + w must force v = w; the contrapositive is what can
            // be observed on a sample.
            (Law::Cancellation, (u.plus(v)? == u.plus(w)?) == (v == w)),
            (
                Law::ScalarDistributesOverVectorSum,
                u.plus(v)?.times(alpha) == u.times(alpha).plus(&v.times(alpha))?,
            ),
            (
                Law::VectorDistributesOverScalarSum,
                v.times(&(alpha + beta)) == v.times(alpha).plus(&v.times(beta))?,
            ),
            (
                Law::ScalarMultiplicationCompatible,
                v.times(&(alpha * beta)) == v.times(beta).times(alpha),
            ),
            (Law::UnitScalar, v.times(&NonnegScalar::one()) == *v),
            (Law::ZeroScalarAnnihilates, v.times(&NonnegScalar::zero()) == v.zero_like()),
        ];
        for (r, (_, ok)) in results.iter_mut().zip(checks) {
            r.checked += 1;
            if !ok {
                r.failures += 1;
                r.witness.get_or_insert_with(|| {
                    format!("u={u:?} v={v:?} w={w:?} alpha={alpha} beta={beta}")
                });
            }
        }
    }
    Ok(LawReport { results })
}

/// For nonzero `v`: `λ v = 0` forces `λ = 0`, and `α v = β v` forces
/// `α = β`. A quarter of the samples reuse `α` as `β`.
pub fn regularity_audit(n: usize, samples: usize, sampler: &mut Sampler) -> crate::derived::AxiomCheck {
    let mut c = crate::derived::AxiomCheck::new();
    for _ in 0..samples {
        let v = sampler.nonzero_vector(n);
        let alpha = sampler.scalar();
        let beta = if sampler.coin(0.25) { alpha.clone() } else { sampler.scalar() };
        let av = v.scale(&alpha);
        c.record(av.is_zero() == alpha.is_zero(), || format!("{alpha} * {v:?} = {av:?}"));
        c.record((av == v.scale(&beta)) == (alpha == beta), || format!("{alpha} * {v:?} = {beta} * {v:?}"));
    }
    c
}

/// Builds a vector from scalar literals; panics on bad input.
///
/// ```
/// use semikit::semimodule::v;
/// assert_eq!(v(&["1", "2"]).add(&v(&["3", "4"])).unwrap(), v(&["4", "6"]));
/// ```
pub fn v(literals: &[&str]) -> SemiVector {
    SemiVector::new(literals.iter().map(|s| crate::scalar::q(s)).collect()).expect("nonempty vector")
}

/// Builds a matrix from rows of scalar literals; panics on bad input.
pub fn m(rows: &[&[&str]]) -> SemiMatrix {
    SemiMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| crate::scalar::q(s)).collect())
            .collect(),
    )
    .expect("rectangular matrix")
}
