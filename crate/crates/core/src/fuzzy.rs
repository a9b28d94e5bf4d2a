//! Fuzzy numbers by α-cuts, and the ordered space `Lₙ([0,1])` of sorted
//! vectors over the weak semi-field `([0,1], min{1, x+y}, ·)`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::derived::AxiomCheck;
use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semialgebra::check_permutation;

/// A signed rational endpoint, written `"-3/2"` in JSON.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Real(pub BigRational);

impl Real {
    pub fn from_integer(n: i64) -> Self {
        Real(BigRational::from_integer(n.into()))
    }

    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl From<&NonnegScalar> for Real {
    fn from(x: &NonnegScalar) -> Self {
        Real(x.as_rational().clone())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Real {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.strip_prefix('-') {
            Some(rest) => Ok(Real(-rest.parse::<NonnegScalar>()?.as_rational().clone())),
            None => Ok(Real::from(&t.parse::<NonnegScalar>()?)),
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match &v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            _ => return Err(serde::de::Error::custom("expected a rational string or number")),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The default grid `{0.1, 0.2, ..., 1}`.
pub fn default_levels() -> Vec<NonnegScalar> {
    (1..=10).map(|k| NonnegScalar::new(k, 10).expect("positive denominator")).collect()
}

/// A fuzzy number given by its α-cuts on a finite grid of levels.
///
/// Levels are strictly increasing in `(0, 1]` and end at `1`. Between grid
/// levels the cut is that of the next level up, so any level `α` in
/// `(0, 1]` has a well-defined cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FuzzyRepr", into = "FuzzyRepr")]
pub struct FuzzyNumber {
    levels: Vec<NonnegScalar>,
    intervals: Vec<(Real, Real)>,
}

#[derive(Serialize, Deserialize)]
struct FuzzyRepr {
    levels: Vec<NonnegScalar>,
    intervals: Vec<(Real, Real)>,
}

impl TryFrom<FuzzyRepr> for FuzzyNumber {
    type Error = Error;

    fn try_from(r: FuzzyRepr) -> Result<Self> {
        FuzzyNumber::new(r.levels, r.intervals)
    }
}

impl From<FuzzyNumber> for FuzzyRepr {
    fn from(x: FuzzyNumber) -> Self {
        FuzzyRepr {
            levels: x.levels,
            intervals: x.intervals,
        }
    }
}

impl FuzzyNumber {
    pub fn new(levels: Vec<NonnegScalar>, intervals: Vec<(Real, Real)>) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidObject(format!("fuzzy number: {m}")));
        if levels.is_empty() || levels.len() != intervals.len() {
            return invalid("one interval per level, at least one level".into());
        }
        if levels[0].is_zero() || !levels.last().is_some_and(NonnegScalar::is_one) {
            return invalid("levels must lie in (0, 1] and include 1".into());
        }
        if levels.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("levels must be strictly increasing".into());
        }
        if let Some((l, r)) = intervals.iter().find(|(l, r)| l > r) {
            return invalid(format!("empty cut [{l}, {r}]"));
        }
        // Higher levels have smaller cuts.
        if let Some(w) = intervals.windows(2).find(|w| w[1].0 < w[0].0 || w[1].1 > w[0].1) {
            return invalid(format!("cuts not nested: [{}, {}] inside [{}, {}]", w[1].0, w[1].1, w[0].0, w[0].1));
        }
        Ok(FuzzyNumber { levels, intervals })
    }

    /// The crisp number `c`: every cut is `[c, c]`.
    pub fn crisp_on(c: Real, levels: Vec<NonnegScalar>) -> Result<Self> {
        let intervals = levels.iter().map(|_| (c.clone(), c.clone())).collect();
        Self::new(levels, intervals)
    }

    pub fn crisp(c: Real) -> Self {
        Self::crisp_on(c, default_levels()).expect("default grid")
    }

    /// Triangular `(a, b, c)` with `a <= b <= c`: the cut at `α` is
    /// `[a + α(b - a), c - α(c - b)]`.
    pub fn triangular_on(a: Real, b: Real, c: Real, levels: Vec<NonnegScalar>) -> Result<Self> {
        if a > b || b > c {
            return Err(Error::InvalidObject("triangular number needs a <= b <= c".into()));
        }
        let intervals = levels
            .iter()
            .map(|alpha| {
                let al = alpha.as_rational();
                (
                    Real(&a.0 + al * (&b.0 - &a.0)),
                    Real(&c.0 - al * (&c.0 - &b.0)),
                )
            })
            .collect();
        Self::new(levels, intervals)
    }

    pub fn triangular(a: Real, b: Real, c: Real) -> Result<Self> {
        Self::triangular_on(a, b, c, default_levels())
    }

    pub fn levels(&self) -> &[NonnegScalar] {
        &self.levels
    }

    pub fn intervals(&self) -> &[(Real, Real)] {
        &self.intervals
    }

    /// The α-cut for any `α` in `(0, 1]`.
    pub fn cut(&self, alpha: &NonnegScalar) -> Result<&(Real, Real)> {
        if alpha.is_zero() || alpha > &NonnegScalar::one() {
            return Err(Error::InvalidParameter(format!("level {alpha} outside (0, 1]")));
        }
        let k = self.levels.partition_point(|l| l < alpha);
        Ok(&self.intervals[k])
    }

    /// The same fuzzy number on the union of both grids.
    fn refine(&self, levels: &[NonnegScalar]) -> Result<Vec<(Real, Real)>> {
        levels.iter().map(|a| self.cut(a).cloned()).collect()
    }

    fn common_grid(&self, other: &Self) -> Vec<NonnegScalar> {
        let mut ls: Vec<NonnegScalar> = self.levels.iter().chain(&other.levels).cloned().collect();
        ls.sort();
        ls.dedup();
        ls
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&(Real, Real), &(Real, Real)) -> (Real, Real)) -> Result<Self> {
        let levels = self.common_grid(other);
        let (a, b) = (self.refine(&levels)?, other.refine(&levels)?);
        let intervals = a.iter().zip(&b).map(|(x, y)| op(x, y)).collect();
        Self::new(levels, intervals)
    }
}

/// `[l₁ + l₂, r₁ + r₂]` at every level.
pub fn fz_add(x: &FuzzyNumber, y: &FuzzyNumber) -> Result<FuzzyNumber> {
    x.zip_with(y, |(l1, r1), (l2, r2)| (Real(&l1.0 + &l2.0), Real(&r1.0 + &r2.0)))
}

/// Interval product at every level: the hull of the four endpoint products.
pub fn fz_mul(x: &FuzzyNumber, y: &FuzzyNumber) -> Result<FuzzyNumber> {
    x.zip_with(y, |(l1, r1), (l2, r2)| {
        if !l1.0.is_negative() && !l2.0.is_negative() {
            return (Real(&l1.0 * &l2.0), Real(&r1.0 * &r2.0));
        }
        let ps = [&l1.0 * &l2.0, &l1.0 * &r2.0, &r1.0 * &l2.0, &r1.0 * &r2.0];
        let lo = ps.iter().min().expect("four products").clone();
        let hi = ps.iter().max().expect("four products").clone();
        (Real(lo), Real(hi))
    })
}

pub fn fz_scale(lambda: &NonnegScalar, x: &FuzzyNumber) -> FuzzyNumber {
    let l = lambda.as_rational();
    FuzzyNumber {
        levels: x.levels.clone(),
        intervals: x
            .intervals
            .iter()
            .map(|(a, b)| (Real(&a.0 * l), Real(&b.0 * l)))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FuzzyOrder {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// `x <= y` iff both endpoints are `<=` at every level.
pub fn fz_leq(x: &FuzzyNumber, y: &FuzzyNumber) -> Result<FuzzyOrder> {
    let levels = x.common_grid(y);
    let (a, b) = (x.refine(&levels)?, y.refine(&levels)?);
    let le = a.iter().zip(&b).all(|((l1, r1), (l2, r2))| l1 <= l2 && r1 <= r2);
    let ge = a.iter().zip(&b).all(|((l1, r1), (l2, r2))| l1 >= l2 && r1 >= r2);
    Ok(match (le, ge) {
        (true, true) => FuzzyOrder::Equal,
        (true, false) => FuzzyOrder::Less,
        (false, true) => FuzzyOrder::Greater,
        (false, false) => FuzzyOrder::Incomparable,
    })
}

/// A nondecreasing vector in `[0, 1]ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<NonnegScalar>", into = "Vec<NonnegScalar>")]
pub struct LnVector(Vec<NonnegScalar>);

impl TryFrom<Vec<NonnegScalar>> for LnVector {
    type Error = Error;

    fn try_from(v: Vec<NonnegScalar>) -> Result<Self> {
        LnVector::new(v)
    }
}

impl From<LnVector> for Vec<NonnegScalar> {
    fn from(v: LnVector) -> Self {
        v.0
    }
}

impl fmt::Display for LnVector {
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

fn unit_interval(x: &NonnegScalar) -> bool {
    x <= &NonnegScalar::one()
}

impl LnVector {
    pub fn new(coords: Vec<NonnegScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("L_n vector"));
        }
        if !coords.iter().all(unit_interval) {
            return Err(Error::InvalidObject("L_n coordinates must lie in [0, 1]".into()));
        }
        if coords.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidObject("L_n coordinates must be nondecreasing".into()));
        }
        Ok(LnVector(coords))
    }

    pub fn zeros(n: usize) -> Self {
        LnVector(vec![NonnegScalar::zero(); n])
    }

    /// `c` in every coordinate.
    pub fn constant(n: usize, c: NonnegScalar) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[NonnegScalar] {
        &self.0
    }

    /// Projection `πᵢ`.
    pub fn pi(&self, i: usize) -> &NonnegScalar {
        &self.0[i]
    }

    pub fn random(n: usize, grid: u64, sampler: &mut Sampler) -> Self {
        let mut c: Vec<NonnegScalar> = (0..n)
            .map(|_| NonnegScalar::new(sampler.small_integer(grid).numer().try_into().expect("small"), grid).expect("grid"))
            .collect();
        c.sort();
        LnVector(c)
    }
}

fn same_len(u: &LnVector, v: &LnVector) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    Ok(())
}

/// `x ⊕ y = min{1, x + y}`; the flag reports truncation.
pub fn truncated_sum(x: &NonnegScalar, y: &NonnegScalar) -> (NonnegScalar, bool) {
    let s = x + y;
    if s > NonnegScalar::one() {
        (NonnegScalar::one(), true)
    } else {
        (s, false)
    }
}

/// `u ∔ v = (x₁ ⊕ y₁, ..., xₙ ⊕ yₙ)`.
pub fn ln_oplus(u: &LnVector, v: &LnVector) -> Result<LnVector> {
    Ok(ln_oplus_traced(u, v)?.0)
}

/// [`ln_oplus`] together with the coordinates where `⊕` truncated.
pub fn ln_oplus_traced(u: &LnVector, v: &LnVector) -> Result<(LnVector, Vec<usize>)> {
    same_len(u, v)?;
    let mut truncated = Vec::new();
    let coords = u
        .0
        .iter()
        .zip(&v.0)
        .enumerate()
        .map(|(i, (x, y))| {
            let (s, t) = truncated_sum(x, y);
            if t {
                truncated.push(i);
            }
            s
        })
        .collect();
    // Monotone in each argument, so sortedness is preserved.
    Ok((LnVector(coords), truncated))
}

/// `r ⊙ v = (r x₁, ..., r xₙ)` for `r` in `[0, 1]`.
pub fn ln_scale(r: &NonnegScalar, v: &LnVector) -> Result<LnVector> {
    if !unit_interval(r) {
        return Err(Error::InvalidParameter(format!("scalar {r} outside [0, 1]")));
    }
    Ok(LnVector(v.0.iter().map(|x| r * x).collect()))
}

/// `u ≤ₙᵖ v` iff `πᵢ(u) <= πᵢ(v)` for every `i`.
pub fn product_order_leq(u: &LnVector, v: &LnVector) -> Result<bool> {
    same_len(u, v)?;
    Ok((0..u.dim()).all(|i| u.pi(i) <= v.pi(i)))
}

/// A bijection of `{0, ..., n-1}`. Parsed from 1-based text such as `"2,1,3"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(p: Vec<usize>) -> Result<Self> {
        Permutation::new(p)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(p: Vec<usize>) -> Result<Self> {
        check_permutation(&p)?;
        Ok(Permutation(p))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(p.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
            p.swap(i, j);
            p[i + 1..].reverse();
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let one_based: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad permutation {s:?}"))))
            .collect::<Result<_>>()?;
        let n = one_based.len();
        let p = one_based
            .into_iter()
            .map(|k| k.checked_sub(1).ok_or(Error::NotABijection(n)))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(p)
    }
}

/// `⪯_f`: lexicographic comparison of `(x_{f(1)}, ..., x_{f(n)})`.
pub fn admissible_cmp(u: &LnVector, v: &LnVector, f: &Permutation) -> Result<Ordering> {
    same_len(u, v)?;
    if f.len() != u.dim() {
        return Err(Error::NotABijection(u.dim()));
    }
    Ok(f.0
        .iter()
        .map(|&i| u.pi(i).cmp(v.pi(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}

/// `u ⪯_f v`.
pub fn admissible_leq(u: &LnVector, v: &LnVector, f: &Permutation) -> Result<bool> {
    Ok(admissible_cmp(u, v, f)? != Ordering::Greater)
}

/// Every sorted vector in `[0,1]ⁿ` with coordinates in `{0, 1/d, ..., 1}`.
pub fn ln_grid(n: usize, d: u64) -> Vec<LnVector> {
    fn rec(n: usize, d: u64, lo: u64, cur: &mut Vec<u64>, out: &mut Vec<LnVector>) {
        if cur.len() == n {
            let coords = cur.iter().map(|&k| NonnegScalar::new(k, d).expect("grid")).collect();
            out.push(LnVector(coords));
            return;
        }
        for k in lo..=d {
            cur.push(k);
            rec(n, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleReport {
    pub vectors: usize,
    pub permutations: usize,
    pub pairs: usize,
    /// Exactly one of `<`, `=`, `>` with `>` the mirror of `<`.
    pub totality: AxiomCheck,
    /// `u ≤ₙᵖ v` implies `u ⪯_f v`.
    pub refinement: AxiomCheck,
}

/// Checks totality, antisymmetry and refinement of `≤ₙᵖ` over all ordered
/// pairs of `vectors` for every permutation in `perms`.
pub fn admissible_audit(vectors: &[LnVector], perms: &[Permutation]) -> Result<AdmissibleReport> {
    let mut totality = AxiomCheck::new();
    let mut refinement = AxiomCheck::new();
    let mut pairs = 0;
    for f in perms {
        for u in vectors {
            for v in vectors {
                pairs += 1;
                let (uv, vu) = (admissible_cmp(u, v, f)?, admissible_cmp(v, u, f)?);
                let ok = uv == vu.reverse() && ((uv == Ordering::Equal) == (u == v));
                totality.record(ok, || format!("{u} vs {v} under {f:?}: {uv:?} / {vu:?}"));
                if product_order_leq(u, v)? {
                    refinement.record(uv != Ordering::Greater, || format!("{u} <=np {v} but {u} > {v} under {f:?}"));
                }
            }
        }
    }
    Ok(AdmissibleReport {
        vectors: vectors.len(),
        permutations: perms.len(),
        pairs,
        totality,
        refinement,
    })
}

/// Same as [`admissible_audit`] on `samples` random pairs.
pub fn admissible_audit_sampled(n: usize, samples: usize, sampler: &mut Sampler) -> Result<AdmissibleReport> {
    let mut totality = AxiomCheck::new();
    let mut refinement = AxiomCheck::new();
    for _ in 0..samples {
        let f = Permutation(sampler.permutation(n));
        let u = LnVector::random(n, 10, sampler);
        // Half the pairs are built to be ≤ₙᵖ-comparable.
        let v = if sampler.coin(0.5) {
            let bump = LnVector::random(n, 10, sampler);
            ln_oplus(&u, &ln_scale(&NonnegScalar::new(1, 2)?, &bump)?)?
        } else {
            LnVector::random(n, 10, sampler)
        };
        let (uv, vu) = (admissible_cmp(&u, &v, &f)?, admissible_cmp(&v, &u, &f)?);
        let ok = uv == vu.reverse() && ((uv == Ordering::Equal) == (u == v));
        totality.record(ok, || format!("{u} vs {v} under {f:?}"));
        if product_order_leq(&u, &v)? {
            refinement.record(uv != Ordering::Greater, || format!("{u} <=np {v} but {u} > {v} under {f:?}"));
        }
    }
    Ok(AdmissibleReport {
        vectors: 2 * samples,
        permutations: samples,
        pairs: samples,
        totality,
        refinement,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LnLaw {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    Cancellation,
    ScalarDistributesOverVectorSum,
    VectorDistributesOverScalarSum,
    ScalarMultiplicationCompatible,
    UnitScalar,
    ZeroScalarAnnihilates,
    AddMonotone,
    ScaleMonotone,
}

impl LnLaw {
    pub const ALL: [LnLaw; 11] = [
        LnLaw::AddAssociative,
        LnLaw::AddCommutative,
        LnLaw::AddIdentity,
        LnLaw::Cancellation,
        LnLaw::ScalarDistributesOverVectorSum,
        LnLaw::VectorDistributesOverScalarSum,
        LnLaw::ScalarMultiplicationCompatible,
        LnLaw::UnitScalar,
        LnLaw::ZeroScalarAnnihilates,
        LnLaw::AddMonotone,
        LnLaw::ScaleMonotone,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LnLawResult {
    pub law: LnLaw,
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

/// Per-law outcome; failing laws are findings, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LnAuditReport {
    pub n: usize,
    pub results: Vec<LnLawResult>,
}

impl LnAuditReport {
    pub fn get(&self, law: LnLaw) -> &LnLawResult {
        self.results.iter().find(|r| r.law == law).expect("every law is reported")
    }
}

struct LnProbe {
    u: LnVector,
    v: LnVector,
    w: LnVector,
    r: NonnegScalar,
    s: NonnegScalar,
}

fn check_probe(p: &LnProbe, checks: &mut [AxiomCheck]) -> Result<()> {
    let LnProbe { u, v, w, r, s } = p;
    let n = u.dim();
    let one = NonnegScalar::one();
    let (uv, uw) = (ln_oplus(u, v)?, ln_oplus(u, w)?);
    let rs_sum = truncated_sum(r, s).0;
    let results = [
        (ln_oplus(u, &ln_oplus(v, w)?)? == ln_oplus(&uv, w)?, "u ∔ (v ∔ w) != (u ∔ v) ∔ w"),
        (uv == ln_oplus(v, u)?, "u ∔ v != v ∔ u"),
        (ln_oplus(u, &LnVector::zeros(n))? == *u, "u ∔ 0 != u"),
        ((uv == uw) == (v == w), "u ∔ v = u ∔ w with v != w"),
        (
            ln_scale(r, &uv)? == ln_oplus(&ln_scale(r, u)?, &ln_scale(r, v)?)?,
            "r ⊙ (u ∔ v) != (r ⊙ u) ∔ (r ⊙ v)",
        ),
        (
            ln_scale(&rs_sum, u)? == ln_oplus(&ln_scale(r, u)?, &ln_scale(s, u)?)?,
            "(r ⊕ s) ⊙ u != (r ⊙ u) ∔ (s ⊙ u)",
        ),
        (ln_scale(&(r * s), u)? == ln_scale(r, &ln_scale(s, u)?)?, "(r s) ⊙ u != r ⊙ (s ⊙ u)"),
        (ln_scale(&one, u)? == *u, "1 ⊙ u != u"),
        (ln_scale(&NonnegScalar::zero(), u)? == LnVector::zeros(n), "0 ⊙ u != 0"),
        (
            !product_order_leq(u, v)? || product_order_leq(&uw, &ln_oplus(v, w)?)?,
            "u ≤ v but u ∔ w > v ∔ w",
        ),
        (
            !product_order_leq(u, v)? || product_order_leq(&ln_scale(r, u)?, &ln_scale(r, v)?)?,
            "u ≤ v but r ⊙ u > r ⊙ v",
        ),
    ];
    for (c, (ok, what)) in checks.iter_mut().zip(results) {
        c.record(ok, || format!("{what} at u={u} v={v} w={w} r={r} s={s}"));
    }
    Ok(())
}

/// Audits every semi-vector space law, plus order compatibility, for
/// `(Lₙ([0,1]), ∔, ⊙)`.
///
/// Two canonical probes run first: `r = 1/2, u = v = 0.8`, where
/// `r ⊙ (u ∔ v) = 0.5` but `(r ⊙ u) ∔ (r ⊙ v) = 0.8` (distributivity), and
/// `0.8 ∔ 0.5 = 0.8 ∔ 0.6 = 1` (cancellation). For `n <= 2` every pair on
/// the 0.1-grid follows, then `samples` random probes.
pub fn axiom_audit_ln(n: usize, samples: usize, sampler: &mut Sampler) -> Result<LnAuditReport> {
    let tenth = |k: u64| NonnegScalar::new(k, 10).expect("grid");
    let c = |k: u64| LnVector::constant(n, tenth(k));
    let mut checks = vec![AxiomCheck::new(); LnLaw::ALL.len()];
    let canonical = [
        LnProbe { u: c(8)?, v: c(8)?, w: c(8)?, r: tenth(5), s: tenth(5) },
        LnProbe { u: c(8)?, v: c(5)?, w: c(6)?, r: tenth(5), s: tenth(5) },
    ];
    for p in &canonical {
        check_probe(p, &mut checks)?;
    }
    if n <= 2 {
        let grid = ln_grid(n, 10);
        let scalars: Vec<NonnegScalar> = (0..=10).map(tenth).collect();
        for (a, u) in grid.iter().enumerate() {
            for (b, v) in grid.iter().enumerate() {
                let w = &grid[(a * 7 + b * 3) % grid.len()];
                let (r, s) = (&scalars[(a + b) % 11], &scalars[(a * b + 1) % 11]);
                let p = LnProbe { u: u.clone(), v: v.clone(), w: w.clone(), r: r.clone(), s: s.clone() };
                check_probe(&p, &mut checks)?;
            }
        }
    }
    for _ in 0..samples {
        let p = LnProbe {
            u: LnVector::random(n, 10, sampler),
            v: LnVector::random(n, 10, sampler),
            w: LnVector::random(n, 10, sampler),
            r: tenth(sampler.small_integer(10).numer().try_into().expect("small")),
            s: tenth(sampler.small_integer(10).numer().try_into().expect("small")),
        };
        check_probe(&p, &mut checks)?;
    }
    Ok(LnAuditReport {
        n,
        results: LnLaw::ALL
            .iter()
            .zip(checks)
            .map(|(&law, c)| LnLawResult {
                law,
                holds: c.valid,
                checked: c.checked,
                witness: c.witness,
            })
            .collect(),
    })
}

/// One `⊕` truncation during scoring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncationEvent {
    pub alternative: usize,
    /// Index of the criterion vector being added.
    pub term: usize,
    pub coordinate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedAlternative {
    pub index: usize,
    pub score: LnVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McdmResult {
    pub method: &'static str,
    /// Best first.
    pub ranking: Vec<RankedAlternative>,
    pub truncations: Vec<TruncationEvent>,
}

pub const MCDM_METHOD: &str =
    "score = w_1 ⊙ a_1 ∔ ... ∔ w_k ⊙ a_k per alternative; sorted descending by ⪯_f; ties keep input order";

/// Ranks alternatives, each a list of `Lₙ` vectors (one per criterion or
/// expert), by the `⊙`-weighted `∔`-combination of its vectors.
///
/// ```
/// use semikit::fuzzy::{mcdm_rank, LnVector, Permutation};
/// use semikit::q;
/// let a = LnVector::new(vec![q("0.2"), q("0.3")]).unwrap();
/// let b = LnVector::new(vec![q("0.4"), q("0.5")]).unwrap();
/// let r = mcdm_rank(&[vec![a], vec![b]], &[q("1")], &Permutation::identity(2)).unwrap();
/// assert_eq!(r.ranking[0].index, 1);
/// ```
pub fn mcdm_rank(alternatives: &[Vec<LnVector>], weights: &[NonnegScalar], f: &Permutation) -> Result<McdmResult> {
    let first = alternatives
        .first()
        .ok_or(Error::EmptyInput("mcdm needs at least one alternative"))?;
    let n = first.first().ok_or(Error::EmptyInput("alternative with no criteria"))?.dim();
    if f.len() != n {
        return Err(Error::NotABijection(n));
    }
    let mut truncations = Vec::new();
    let mut ranking = Vec::with_capacity(alternatives.len());
    for (index, alt) in alternatives.iter().enumerate() {
        if alt.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: weights.len(),
                found: alt.len(),
            });
        }
        let mut score = LnVector::zeros(n);
        for (term, (a, w)) in alt.iter().zip(weights).enumerate() {
            let (s, cut) = ln_oplus_traced(&score, &ln_scale(w, a)?)?;
            truncations.extend(cut.into_iter().map(|coordinate| TruncationEvent {
                alternative: index,
                term,
                coordinate,
            }));
            score = s;
        }
        ranking.push(RankedAlternative { index, score });
    }
    // Stable, so ties keep input order.
    ranking.sort_by(|a, b| admissible_cmp(&b.score, &a.score, f).expect("checked dimensions"));
    Ok(McdmResult {
        method: MCDM_METHOD,
        ranking,
        truncations,
    })
}
