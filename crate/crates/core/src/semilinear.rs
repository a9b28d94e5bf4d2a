//! Semi-linear maps between coordinate semimodules.
//!
//! A [`SemiLinearMap`] `[Q+]^n -> [Q+]^m` is an `m x n` nonnegative matrix,
//! optionally tagged with the bases it is expressed in.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semimodule::{coords, SemiBasis, SemiMatrix, SemiVector, DEFAULT_DIMENSION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiLinearMap {
    matrix: SemiMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    domain_basis: Option<SemiBasis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    codomain_basis: Option<SemiBasis>,
}

/// Answer of [`SemiLinearMap::image_member`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ImageMembership {
    /// `T(witness) = w`, re-checked with nonnegative arithmetic.
    Member { witness: SemiVector },
    NotMember,
}

impl ImageMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ImageMembership::Member { .. })
    }
}

/// Answer of [`SemiLinearMap::injectivity_probe`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum InjectivityReport {
    /// One-dimensional domain: injective exactly when the kernel is trivial.
    Exact { injective: bool },
    /// Two distinct inputs with the same image.
    Collision { u: SemiVector, v: SemiVector, image: SemiVector },
    /// A probe, not a proof.
    NoCollisionFound { trials: usize },
}

impl SemiLinearMap {
    pub fn new(matrix: SemiMatrix) -> Self {
        SemiLinearMap {
            matrix,
            domain_basis: None,
            codomain_basis: None,
        }
    }

    /// Tags the matrix with the bases it was computed in.
    pub fn with_bases(matrix: SemiMatrix, domain: SemiBasis, codomain: SemiBasis) -> Result<Self> {
        if domain.dim() != matrix.cols() || codomain.dim() != matrix.rows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.cols(),
                found: domain.dim(),
            });
        }
        Ok(SemiLinearMap {
            matrix,
            domain_basis: Some(domain),
            codomain_basis: Some(codomain),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(SemiMatrix::identity(n))
    }

    /// The zero map `[Q+]^n -> [Q+]^m`.
    pub fn zero(m: usize, n: usize) -> Self {
        Self::new(SemiMatrix::zeros(m, n))
    }

    pub fn matrix(&self) -> &SemiMatrix {
        &self.matrix
    }

    pub fn domain_basis(&self) -> Option<&SemiBasis> {
        self.domain_basis.as_ref()
    }

    pub fn codomain_basis(&self) -> Option<&SemiBasis> {
        self.codomain_basis.as_ref()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &SemiVector) -> Result<SemiVector> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SemiLinearMap) -> Result<SemiLinearMap> {
        Ok(Self::new(self.matrix.mul(&inner.matrix)?))
    }

    /// Pointwise sum in `Hom(V, W)`.
    pub fn add(&self, other: &SemiLinearMap) -> Result<SemiLinearMap> {
        Ok(Self::new(self.matrix.add(&other.matrix)?))
    }

    /// Pointwise scalar multiple in `Hom(V, W)`.
    pub fn scale(&self, lambda: &NonnegScalar) -> SemiLinearMap {
        Self::new(self.matrix.scale(lambda))
    }

    /// Generators of `Ker(T)`. Entries are nonnegative, so `T v = 0` forces
    /// `v_j = 0` for every column `j` with a positive entry; the kernel is
    /// the cone of the standard vectors of the all-zero columns.
    pub fn kernel(&self) -> SemiBasis {
        let n = self.domain_dim();
        let elements = (0..n)
            .filter(|&j| self.matrix.column(j).is_zero())
            .map(|j| SemiVector::unit(n, j))
            .collect();
        SemiBasis::new(n, elements).expect("distinct unit vectors")
    }

    /// Decides whether `w = T(v)` for some `v >= 0`.
    ///
    /// ```
    /// use semikit::semilinear::SemiLinearMap;
    /// use semikit::semimodule::{m, v};
    /// let t = SemiLinearMap::new(m(&[&["1"], &["1"]]));
    /// assert!(!t.image_member(&v(&["1", "2"])).unwrap().is_member());
    /// ```
    pub fn image_member(&self, w: &SemiVector) -> Result<ImageMembership> {
        self.image_member_capped(w, DEFAULT_DIMENSION_CAP)
    }

    pub fn image_member_capped(&self, w: &SemiVector, cap: usize) -> Result<ImageMembership> {
        if w.dim() != self.codomain_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.codomain_dim(),
                found: w.dim(),
            });
        }
        if self.domain_dim() > cap {
            return Err(Error::DimensionCap {
                cap,
                found: self.domain_dim(),
            });
        }
        Ok(match exact::nonneg_solve(&self.matrix, w) {
            Some(x) => {
                let witness = SemiVector::new(x)?;
                assert_eq!(&self.apply(&witness)?, w, "image witness failed re-verification");
                ImageMembership::Member { witness }
            }
            None => ImageMembership::NotMember,
        })
    }

    /// Exact injectivity on `[Q+]^n`. Distinct `u, v >= 0` with `T u = T v`
    /// exist exactly when the signed kernel is nontrivial (split `d = u - v`
    /// into its positive and negative parts), so this is full column rank.
    pub fn is_injective(&self) -> bool {
        exact::column_rank(&self.matrix) == self.domain_dim()
    }

    /// Searches for distinct inputs with equal images. Structured candidates
    /// come first (a zero column, proportional columns), then `trials`
    /// random pairs on a small integer grid.
    pub fn injectivity_probe(&self, trials: usize, sampler: &mut Sampler) -> Result<InjectivityReport> {
        let n = self.domain_dim();
        if n == 1 {
            return Ok(InjectivityReport::Exact {
                injective: self.kernel().is_empty(),
            });
        }
        let collision = |u: SemiVector, v: SemiVector| -> Result<Option<InjectivityReport>> {
            let tu = self.apply(&u)?;
            if u != v && tu == self.apply(&v)? {
                Ok(Some(InjectivityReport::Collision { u, v, image: tu }))
            } else {
                Ok(None)
            }
        };
        for j in 0..n {
            let cj = self.matrix.column(j);
            if cj.is_zero() {
                if let Some(r) = collision(SemiVector::unit(n, j), SemiVector::zeros(n))? {
                    return Ok(r);
                }
                continue;
            }
            for k in 0..n {
                if k == j {
                    continue;
                }
                if let Some(ratio) = column_ratio(&cj, &self.matrix.column(k)) {
                    let lhs = SemiVector::unit(n, j);
                    let rhs = SemiVector::unit(n, k).scale(&ratio);
                    if let Some(r) = collision(lhs, rhs)? {
                        return Ok(r);
                    }
                }
            }
        }
        for _ in 0..trials {
            let u = SemiVector::new((0..n).map(|_| sampler.small_integer(3)).collect())?;
            let v = SemiVector::new((0..n).map(|_| sampler.small_integer(3)).collect())?;
            if let Some(r) = collision(u, v)? {
                return Ok(r);
            }
        }
        Ok(InjectivityReport::NoCollisionFound { trials })
    }
}

/// `r` with `a = r * b`, when `a` is a positive multiple of `b`.
fn column_ratio(a: &SemiVector, b: &SemiVector) -> Option<NonnegScalar> {
    let i = b.iter().position(|x| !x.is_zero())?;
    let r = a.get(i).checked_div(b.get(i)).ok()?;
    (!r.is_zero() && &b.scale(&r) == a).then_some(r)
}

/// The isomorphism between the cone of an independent family and
/// `[Q+]^k`: `forward` reads off coordinates, `inverse` is the matrix whose
/// columns are the basis vectors.
#[derive(Debug, Clone)]
pub struct CoordinateIso {
    basis: SemiBasis,
    inverse: SemiLinearMap,
}

impl CoordinateIso {
    pub fn basis(&self) -> &SemiBasis {
        &self.basis
    }

    /// `sum a_i b_i  ->  (a_1, ..., a_k)`; fails for vectors outside the cone.
    pub fn forward(&self, v: &SemiVector) -> Result<SemiVector> {
        SemiVector::new(coords(v, &self.basis)?.dense(self.basis.len()))
    }

    /// `(a_1, ..., a_k)  ->  sum a_i b_i`.
    pub fn inverse(&self) -> &SemiLinearMap {
        &self.inverse
    }

    /// `forward` as a nonnegative matrix, which exists exactly when the basis
    /// matrix has a nonnegative inverse (positive multiples of distinct
    /// standard vectors).
    pub fn forward_map(&self) -> Option<SemiLinearMap> {
        let m = self.inverse.matrix();
        if !m.is_square() {
            return None;
        }
        exact::nonneg_inverse(m).map(SemiLinearMap::new)
    }
}

/// Builds the coordinate isomorphism for an independent family.
pub fn coordinate_iso(basis: &SemiBasis) -> Result<CoordinateIso> {
    if basis.is_empty() {
        return Err(Error::NotABasis("empty family".into()));
    }
    if !basis.is_independent() {
        return Err(Error::NotABasis(
            "elements are linearly dependent, so some cone vector has two coordinate families".into(),
        ));
    }
    let k = basis.len();
    let matrix = basis.as_matrix()?;
    Ok(CoordinateIso {
        basis: basis.clone(),
        inverse: SemiLinearMap::with_bases(matrix, SemiBasis::standard(k), SemiBasis::standard(basis.dim()))?,
    })
}
