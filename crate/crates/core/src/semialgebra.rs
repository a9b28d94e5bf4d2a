//! The matrix semi-algebra `(M_n(Q+), +, ·, •)` with identity `I_n`:
//! homomorphisms, inverses, the left-regular embedding and Lie brackets.

use serde::{Deserialize, Serialize};

use crate::derived::AxiomCheck;
use crate::error::{Error, Result};
use crate::exact;
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semilinear::SemiLinearMap;
use crate::semimodule::{SemiMatrix, SemiVector};

fn require_square(m: &SemiMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

fn require_order(m: &SemiMatrix, n: usize) -> Result<()> {
    let k = require_square(m)?;
    if k != n {
        return Err(Error::OrderMismatch { left: n, right: k });
    }
    Ok(())
}

/// A permutation matrix times a positive diagonal: column `j` has the single
/// entry `diag[j]` in row `perm[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MonomialRepr", into = "MonomialRepr")]
pub struct Monomial {
    perm: Vec<usize>,
    diag: Vec<NonnegScalar>,
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    perm: Vec<usize>,
    diag: Vec<NonnegScalar>,
}

impl TryFrom<MonomialRepr> for Monomial {
    type Error = Error;

    fn try_from(r: MonomialRepr) -> Result<Self> {
        Monomial::new(r.perm, r.diag)
    }
}

impl From<Monomial> for MonomialRepr {
    fn from(m: Monomial) -> Self {
        MonomialRepr {
            perm: m.perm,
            diag: m.diag,
        }
    }
}

/// Checks that `perm` is a bijection of `0..n`.
pub fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotABijection(n));
        }
    }
    Ok(())
}

impl Monomial {
    pub fn new(perm: Vec<usize>, diag: Vec<NonnegScalar>) -> Result<Self> {
        check_permutation(&perm)?;
        if diag.len() != perm.len() {
            return Err(Error::DimensionMismatch {
                expected: perm.len(),
                found: diag.len(),
            });
        }
        if perm.is_empty() {
            return Err(Error::EmptyInput("monomial matrix of order 0"));
        }
        if diag.iter().any(NonnegScalar::is_zero) {
            return Err(Error::InvalidObject("monomial matrix needs a positive diagonal".into()));
        }
        Ok(Monomial { perm, diag })
    }

    pub fn diagonal(diag: Vec<NonnegScalar>) -> Result<Self> {
        Self::new((0..diag.len()).collect(), diag)
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![NonnegScalar::one(); n])
    }

    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        let perm = sampler.permutation(n);
        let diag = (0..n).map(|_| sampler.positive_scalar()).collect();
        Self::new(perm, diag).expect("random monomial")
    }

    pub fn order(&self) -> usize {
        self.perm.len()
    }

    pub fn matrix(&self) -> SemiMatrix {
        let n = self.order();
        let mut rows = vec![vec![NonnegScalar::zero(); n]; n];
        for (j, (&i, d)) in self.perm.iter().zip(&self.diag).enumerate() {
            rows[i][j] = d.clone();
        }
        SemiMatrix::from_rows(rows).expect("square")
    }

    /// The inverse, again monomial: entry `1/diag[j]` at `(j, perm[j])`.
    pub fn inverse(&self) -> Monomial {
        let n = self.order();
        let mut perm = vec![0; n];
        let mut diag = vec![NonnegScalar::zero(); n];
        for (j, (&i, d)) in self.perm.iter().zip(&self.diag).enumerate() {
            perm[i] = j;
            diag[i] = d.inv().expect("positive diagonal");
        }
        Monomial { perm, diag }
    }
}

/// A map between matrix semi-algebras, described by a recipe. Every recipe
/// is verified by [`hom_verify`], never trusted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraHom {
    Identity { order: usize },
    /// `x ↦ P x P⁻¹`.
    Conjugation { by: Monomial },
    /// Linear extension of the images of the matrix units `E_ij`, listed
    /// row-major: `h(x) = Σ x_ij images[i n + j]`.
    Table { order: usize, images: Vec<SemiMatrix> },
    /// `x ↦ (x_ij²)`: multiplicative on diagonals but not additive.
    EntrywiseSquare { order: usize },
    /// Applies the listed maps first to last.
    Composite { maps: Vec<AlgebraHom> },
}

impl AlgebraHom {
    pub fn domain_order(&self) -> usize {
        match self {
            AlgebraHom::Identity { order } | AlgebraHom::EntrywiseSquare { order } | AlgebraHom::Table { order, .. } => {
                *order
            }
            AlgebraHom::Conjugation { by } => by.order(),
            AlgebraHom::Composite { maps } => maps.first().map_or(0, AlgebraHom::domain_order),
        }
    }

    pub fn codomain_order(&self) -> usize {
        match self {
            AlgebraHom::Table { images, order } => images.first().map_or(*order, SemiMatrix::rows),
            AlgebraHom::Composite { maps } => maps.last().map_or(0, AlgebraHom::codomain_order),
            other => other.domain_order(),
        }
    }

    /// Shape checks for tables and composites.
    pub fn check(&self) -> Result<()> {
        match self {
            AlgebraHom::Table { order, images } => {
                if images.len() != order * order {
                    return Err(Error::DimensionMismatch {
                        expected: order * order,
                        found: images.len(),
                    });
                }
                let k = self.codomain_order();
                images.iter().try_for_each(|m| require_order(m, k))
            }
            AlgebraHom::Composite { maps } => {
                if maps.is_empty() {
                    return Err(Error::EmptyInput("composite homomorphism"));
                }
                for m in maps {
                    m.check()?;
                }
                for w in maps.windows(2) {
                    if w[0].codomain_order() != w[1].domain_order() {
                        return Err(Error::OrderMismatch {
                            left: w[0].codomain_order(),
                            right: w[1].domain_order(),
                        });
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn apply(&self, x: &SemiMatrix) -> Result<SemiMatrix> {
        require_order(x, self.domain_order())?;
        match self {
            AlgebraHom::Identity { .. } => Ok(x.clone()),
            AlgebraHom::Conjugation { by } => by.matrix().mul(x)?.mul(&by.inverse().matrix()),
            AlgebraHom::Table { order, images } => {
                let k = self.codomain_order();
                let mut acc = SemiMatrix::zeros(k, k);
                for (idx, img) in images.iter().enumerate() {
                    let c = x.get(idx / order, idx % order);
                    if !c.is_zero() {
                        acc = acc.add(&img.scale(c))?;
                    }
                }
                Ok(acc)
            }
            AlgebraHom::EntrywiseSquare { .. } => {
                let entries = x.entries().iter().map(|e| e * e).collect();
                SemiMatrix::new(x.rows(), x.cols(), entries)
            }
            AlgebraHom::Composite { maps } => maps.iter().try_fold(x.clone(), |acc, m| m.apply(&acc)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub additive: AxiomCheck,
    pub homogeneous: AxiomCheck,
    pub multiplicative: AxiomCheck,
    pub maps_zero: bool,
    /// `h(I) = I`, checked when requested.
    pub unital: Option<bool>,
}

impl HomReport {
    pub fn is_homomorphism(&self) -> bool {
        self.additive.valid
            && self.homogeneous.valid
            && self.multiplicative.valid
            && self.maps_zero
            && self.unital != Some(false)
    }
}

/// Checks `h(u + v) = h(u) + h(v)`, `h(λu) = λh(u)`, `h(u • v) = h(u) • h(v)`
/// on sampled pairs, and `h(0) = 0`. `check_unit` adds `h(I) = I`, which
/// holds for surjective homomorphisms.
pub fn hom_verify(h: &AlgebraHom, samples: usize, check_unit: bool, sampler: &mut Sampler) -> Result<HomReport> {
    h.check()?;
    let n = h.domain_order();
    let k = h.codomain_order();
    let mut report = HomReport {
        additive: AxiomCheck::new(),
        homogeneous: AxiomCheck::new(),
        multiplicative: AxiomCheck::new(),
        maps_zero: h.apply(&SemiMatrix::zeros(n, n))?.is_zero(),
        unital: None,
    };
    if check_unit {
        report.unital = Some(h.apply(&SemiMatrix::identity(n))? == SemiMatrix::identity(k));
    }
    for _ in 0..samples {
        let (u, v, lambda) = (sampler.matrix(n, n), sampler.matrix(n, n), sampler.scalar());
        let (hu, hv) = (h.apply(&u)?, h.apply(&v)?);
        let lhs = h.apply(&u.add(&v)?)?;
        let rhs = hu.add(&hv)?;
        report.additive.record(lhs == rhs, || format!("h({u:?} + {v:?}) = {lhs:?} != {rhs:?}"));
        let lhs = h.apply(&u.scale(&lambda))?;
        report
            .homogeneous
            .record(lhs == hu.scale(&lambda), || format!("h({lambda} {u:?}) != {lambda} h(u)"));
        let lhs = h.apply(&u.mul(&v)?)?;
        let rhs = hu.mul(&hv)?;
        report
            .multiplicative
            .record(lhs == rhs, || format!("h({u:?} • {v:?}) = {lhs:?} != {rhs:?}"));
    }
    Ok(report)
}

/// The inverse of `u` among nonnegative matrices: the unique `X >= 0` with
/// `u X = X u = I`.
pub fn inverse(u: &SemiMatrix) -> Result<SemiMatrix> {
    let n = require_square(u)?;
    let x = exact::nonneg_inverse(u).ok_or(Error::NotInvertible)?;
    let id = SemiMatrix::identity(n);
    assert!(u.mul(&x)? == id && x.mul(u)? == id, "inverse failed re-verification");
    Ok(x)
}

/// Whether every row and column has exactly one nonzero entry.
pub fn is_monomial(m: &SemiMatrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| m.row(i).iter().filter(|x| !x.is_zero()).count() == 1)
        && (0..m.cols()).all(|j| m.column(j).iter().filter(|x| !x.is_zero()).count() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseReport {
    pub u_inverse: SemiMatrix,
    pub v_inverse: SemiMatrix,
    /// `u` has full rank, so `u X = I` has exactly one solution.
    pub unique: bool,
    pub involution: bool,
    /// `(u • v)⁻¹ = v⁻¹ • u⁻¹`.
    pub anti_homomorphism: bool,
    pub monomial: bool,
}

impl InverseReport {
    pub fn holds(&self) -> bool {
        self.unique && self.involution && self.anti_homomorphism
    }
}

pub fn inverse_laws_audit(u: &SemiMatrix, v: &SemiMatrix) -> Result<InverseReport> {
    let n = require_square(u)?;
    require_order(v, n)?;
    let (ui, vi) = (inverse(u)?, inverse(v)?);
    let uv_inv = inverse(&u.mul(v)?)?;
    Ok(InverseReport {
        unique: exact::column_rank(u) == n,
        involution: inverse(&ui)? == *u,
        anti_homomorphism: uv_inv == vi.mul(&ui)?,
        monomial: is_monomial(u) && is_monomial(v),
        u_inverse: ui,
        v_inverse: vi,
    })
}

/// `v* : x ↦ v • x` on the row-major flattening of `M_n`, an `n² x n²`
/// matrix (the Kronecker product `v ⊗ I`).
///
/// ```
/// use semikit::semialgebra::left_regular_embed;
/// use semikit::semimodule::{m, SemiMatrix};
/// let v = m(&[&["2", "0"], &["0", "3"]]);
/// let h = left_regular_embed(&v).unwrap();
/// let image = h.apply(&SemiMatrix::identity(2).flatten()).unwrap();
/// assert_eq!(SemiMatrix::from_flat(2, 2, &image).unwrap(), v);
/// ```
pub fn left_regular_embed(v: &SemiMatrix) -> Result<SemiLinearMap> {
    let n = require_square(v)?;
    let mut entries = vec![NonnegScalar::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries[(i * n + k) * n * n + (j * n + k)] = v.get(i, j).clone();
            }
        }
    }
    Ok(SemiLinearMap::new(SemiMatrix::new(n * n, n * n, entries)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    pub additive: AxiomCheck,
    pub homogeneous: AxiomCheck,
    pub multiplicative: AxiomCheck,
    /// `h(u)(I) = u`, so `h` is injective.
    pub injective: AxiomCheck,
    pub preserves_identity: bool,
}

impl EmbedReport {
    pub fn holds(&self) -> bool {
        self.additive.valid
            && self.homogeneous.valid
            && self.multiplicative.valid
            && self.injective.valid
            && self.preserves_identity
    }
}

/// Audits `h = left_regular_embed` as an injective unital homomorphism
/// `M_n -> L(M_n, M_n)` on sampled pairs.
pub fn embed_audit(n: usize, samples: usize, sampler: &mut Sampler) -> Result<EmbedReport> {
    let id = SemiMatrix::identity(n);
    let mut report = EmbedReport {
        additive: AxiomCheck::new(),
        homogeneous: AxiomCheck::new(),
        multiplicative: AxiomCheck::new(),
        injective: AxiomCheck::new(),
        preserves_identity: left_regular_embed(&id)? == SemiLinearMap::identity(n * n),
    };
    for _ in 0..samples {
        let (u, v, lambda) = (sampler.matrix(n, n), sampler.matrix(n, n), sampler.scalar());
        let (hu, hv) = (left_regular_embed(&u)?, left_regular_embed(&v)?);
        report.additive.record(left_regular_embed(&u.add(&v)?)? == hu.add(&hv)?, || {
            format!("h(u + v) != h(u) + h(v) at u={u:?} v={v:?}")
        });
        report
            .homogeneous
            .record(left_regular_embed(&u.scale(&lambda))? == hu.scale(&lambda), || {
                format!("h({lambda} u) != {lambda} h(u) at u={u:?}")
            });
        report.multiplicative.record(left_regular_embed(&u.mul(&v)?)? == hu.compose(&hv)?, || {
            format!("h(u • v) != h(u) ∘ h(v) at u={u:?} v={v:?}")
        });
        let back = SemiMatrix::from_flat(n, n, &hu.apply(&id.flatten())?)?;
        report.injective.record(back == u, || format!("h(u)(I) = {back:?} != u = {u:?}"));
    }
    Ok(report)
}

/// A bilinear bracket on `[Q+]^n` given by structure constants:
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BracketRepr", into = "BracketRepr")]
pub struct BracketStructure {
    constants: Vec<Vec<Vec<NonnegScalar>>>,
}

#[derive(Serialize, Deserialize)]
struct BracketRepr {
    dim: usize,
    constants: Vec<Vec<Vec<NonnegScalar>>>,
}

impl TryFrom<BracketRepr> for BracketStructure {
    type Error = Error;

    fn try_from(r: BracketRepr) -> Result<Self> {
        let b = BracketStructure::new(r.constants)?;
        if b.dim() != r.dim {
            return Err(Error::DimensionMismatch {
                expected: r.dim,
                found: b.dim(),
            });
        }
        Ok(b)
    }
}

impl From<BracketStructure> for BracketRepr {
    fn from(b: BracketStructure) -> Self {
        BracketRepr {
            dim: b.dim(),
            constants: b.constants,
        }
    }
}

impl BracketStructure {
    pub fn new(constants: Vec<Vec<Vec<NonnegScalar>>>) -> Result<Self> {
        let n = constants.len();
        if n == 0 {
            return Err(Error::EmptyInput("bracket of dimension 0"));
        }
        for row in &constants {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(c) = row.iter().find(|c| c.len() != n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
        }
        Ok(BracketStructure { constants })
    }

    pub fn zero(n: usize) -> Self {
        BracketStructure {
            constants: vec![vec![vec![NonnegScalar::zero(); n]; n]; n],
        }
    }

    /// A bracket with the single nonzero constant `c[i][j][k] = value`.
    pub fn single(n: usize, i: usize, j: usize, k: usize, value: NonnegScalar) -> Self {
        let mut b = Self::zero(n);
        b.constants[i][j][k] = value;
        b
    }

    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        BracketStructure {
            constants: (0..n)
                .map(|_| (0..n).map(|_| sampler.scalars(n)).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.constants.len()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &NonnegScalar {
        &self.constants[i][j][k]
    }

    pub fn bracket(&self, u: &SemiVector, v: &SemiVector) -> Result<SemiVector> {
        let n = self.dim();
        for x in [u, v] {
            if x.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: x.dim(),
                });
            }
        }
        let mut out = vec![NonnegScalar::zero(); n];
        for i in 0..n {
            if u.get(i).is_zero() {
                continue;
            }
            for j in 0..n {
                let w = u.get(i) * v.get(j);
                if w.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &(&w * &self.constants[i][j][k]);
                }
            }
        }
        SemiVector::new(out)
    }

    /// `[u, [v, w]] + [w, [u, v]] + [v, [w, u]]`.
    pub fn jacobiator(&self, u: &SemiVector, v: &SemiVector, w: &SemiVector) -> Result<SemiVector> {
        self.bracket(u, &self.bracket(v, w)?)?
            .add(&self.bracket(w, &self.bracket(u, v)?)?)?
            .add(&self.bracket(v, &self.bracket(w, u)?)?)
    }

    fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !self.constants[i][j][k].is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LieVerdict {
    /// Every structure constant is zero.
    Abelian,
    /// `[v, v] != 0` at a basis vector or a sum of two basis vectors.
    AlternatingFails { v: SemiVector, bracket: SemiVector },
    /// The sampled `[v, v] = 0` check passed, yet a structure constant is
    /// nonzero: with nonnegative constants nothing can cancel, so the
    /// bracket of `e_i + e_j` exposes it.
    Contradiction {
        constant: (usize, usize, usize),
        v: SemiVector,
        bracket: SemiVector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieReport {
    pub alternating_sampled: AxiomCheck,
    pub jacobi_sampled: AxiomCheck,
    pub verdict: LieVerdict,
}

/// Samples `[v, v] = 0` and the Jacobi identity, then decides the bracket
/// exhaustively on `e_i` and `e_i + e_j`. Expanding bilinearly,
/// `[e_i + e_j, e_i + e_j] = c_ii + c_ij + c_ji + c_jj`, so an alternating
/// bracket with nonnegative constants is identically zero.
pub fn lie_audit(b: &BracketStructure, samples: usize, sampler: &mut Sampler) -> Result<LieReport> {
    let n = b.dim();
    let mut alternating_sampled = AxiomCheck::new();
    let mut jacobi_sampled = AxiomCheck::new();
    for _ in 0..samples {
        let (u, v, w) = (sampler.vector(n), sampler.vector(n), sampler.vector(n));
        let vv = b.bracket(&v, &v)?;
        alternating_sampled.record(vv.is_zero(), || format!("[{v}, {v}] = {vv}"));
        let j = b.jacobiator(&u, &v, &w)?;
        jacobi_sampled.record(j.is_zero(), || format!("jacobiator({u}, {v}, {w}) = {j}"));
    }
    let mut failure = None;
    'outer: for i in 0..n {
        for j in i..n {
            let mut v = SemiVector::unit(n, i);
            if j != i {
                v = v.add(&SemiVector::unit(n, j))?;
            }
            let vv = b.bracket(&v, &v)?;
            if !vv.is_zero() {
                failure = Some((v, vv));
                break 'outer;
            }
        }
    }
    let verdict = match failure {
        None => {
            assert!(b.first_nonzero().is_none(), "alternating bracket with a nonzero constant");
            LieVerdict::Abelian
        }
        Some((v, bracket)) if alternating_sampled.valid => LieVerdict::Contradiction {
            constant: b.first_nonzero().expect("nonzero bracket"),
            v,
            bracket,
        },
        Some((v, bracket)) => LieVerdict::AlternatingFails { v, bracket },
    };
    Ok(LieReport {
        alternating_sampled,
        jacobi_sampled,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::semimodule::{m, v};

    #[test]
    fn hom_examples() {
        let mut s = Sampler::new(1);
        let r = hom_verify(&AlgebraHom::Identity { order: 2 }, 20, true, &mut s).unwrap();
        assert!(r.is_homomorphism());
        let conj = AlgebraHom::Conjugation {
            by: Monomial::diagonal(vec![q("2"), q("3")]).unwrap(),
        };
        let r = hom_verify(&conj, 100, true, &mut s).unwrap();
        assert!(r.is_homomorphism());
        let sq = AlgebraHom::EntrywiseSquare { order: 2 };
        let r = hom_verify(&sq, 20, false, &mut s).unwrap();
        assert!(!r.additive.valid);
        let two_i = SemiMatrix::identity(2).scale(&q("2"));
        assert_eq!(sq.apply(&two_i).unwrap(), SemiMatrix::identity(2).scale(&q("4")));
    }

    #[test]
    fn table_hom_matches_conjugation() {
        let p = Monomial::new(vec![1, 0], vec![q("1"), q("5")]).unwrap();
        let conj = AlgebraHom::Conjugation { by: p };
        let images: Vec<SemiMatrix> = (0..4)
            .map(|idx| {
                let mut e = vec![q("0"); 4];
                e[idx] = q("1");
                conj.apply(&SemiMatrix::new(2, 2, e).unwrap()).unwrap()
            })
            .collect();
        let table = AlgebraHom::Table { order: 2, images };
        let x = m(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(table.apply(&x).unwrap(), conj.apply(&x).unwrap());
        let composite = AlgebraHom::Composite { maps: vec![table, conj] };
        assert!(hom_verify(&composite, 30, true, &mut Sampler::new(2)).unwrap().is_homomorphism());
    }

    #[test]
    fn order_mismatch() {
        let h = AlgebraHom::Composite {
            maps: vec![AlgebraHom::Identity { order: 2 }, AlgebraHom::Identity { order: 3 }],
        };
        assert!(matches!(hom_verify(&h, 1, false, &mut Sampler::new(0)), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        let d = m(&[&["2", "0"], &["0", "3"]]);
        assert_eq!(inverse(&d).unwrap(), m(&[&["1/2", "0"], &["0", "1/3"]]));
        let p = Monomial::permutation(vec![1, 2, 0]).unwrap().matrix();
        let r = Monomial::permutation(vec![0, 2, 1]).unwrap().matrix();
        let rep = inverse_laws_audit(&p, &r).unwrap();
        assert!(rep.holds() && rep.monomial);
        assert_eq!(inverse(&m(&[&["1", "1"], &["0", "1"]])), Err(Error::NotInvertible));
        let mono = Monomial::new(vec![2, 0, 1], vec![q("1/2"), q("3"), q("7")]).unwrap();
        assert_eq!(inverse(&mono.matrix()).unwrap(), mono.inverse().matrix());
    }

    #[test]
    fn monomial_validation() {
        assert_eq!(Monomial::permutation(vec![0, 0]), Err(Error::NotABijection(2)));
        assert!(Monomial::diagonal(vec![q("1"), q("0")]).is_err());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(left_regular_embed(&SemiMatrix::identity(3)).unwrap(), SemiLinearMap::identity(9));
        let r = embed_audit(2, 50, &mut Sampler::new(3)).unwrap();
        assert!(r.holds());
        assert!(matches!(left_regular_embed(&m(&[&["1", "2"]])), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn lie_examples() {
        let mut s = Sampler::new(4);
        let r = lie_audit(&BracketStructure::zero(3), 20, &mut s).unwrap();
        assert_eq!(r.verdict, LieVerdict::Abelian);
        let b = BracketStructure::single(2, 0, 1, 0, q("1"));
        let r = lie_audit(&b, 20, &mut s).unwrap();
        assert_eq!(
            r.verdict,
            LieVerdict::AlternatingFails { v: v(&["1", "1"]), bracket: v(&["1", "0"]) }
        );
        let r = lie_audit(&b, 0, &mut s).unwrap();
        assert!(matches!(r.verdict, LieVerdict::Contradiction { constant: (0, 1, 0), .. }));
    }
}
