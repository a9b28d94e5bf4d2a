//! Spaces of functionals: semi-metrics, metric-preserving functions,
//! semi-norms and their pullbacks, semi-inner products and sublinear
//! functionals.
//!
//! Each family is closed under pointwise `+` and nonnegative scaling. The
//! audits here build sums and multiples and re-validate the family axioms:
//! exhaustively for finite semi-metrics, on seeded samples of the
//! nonnegative orthant for functionals. A passing sampled audit means "not
//! falsified", not "proven".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PiecewiseLinearFn;
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semilinear::SemiLinearMap;
use crate::semimodule::{SemiMatrix, SemiVector};

/// Outcome of re-validating one object against its family axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub valid: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Default for AxiomCheck {
    fn default() -> Self {
        Self::new()
    }
}

impl AxiomCheck {
    pub fn new() -> Self {
        AxiomCheck {
            valid: true,
            checked: 0,
            witness: None,
        }
    }

    /// Counts one check, keeping the first failure's witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.valid {
            self.valid = false;
            self.witness = Some(witness());
        }
    }
}

/// A family of objects forming a semi-vector space under pointwise
/// operations.
pub trait DerivedFamily: Sized + Clone {
    const NAME: &'static str;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn times(&self, lambda: &NonnegScalar) -> Self;
    /// Re-checks the defining axioms. `samples` is ignored by families that
    /// are validated exhaustively.
    fn validate(&self, samples: usize, sampler: &mut Sampler) -> Result<AxiomCheck>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub family: &'static str,
    pub operands: [AxiomCheck; 2],
    pub sum: AxiomCheck,
    pub scaled: AxiomCheck,
    pub lambda: NonnegScalar,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.sum.valid && self.scaled.valid
    }
}

/// Builds `a + b` and `λ a` and re-validates both.
pub fn space_closure_audit<F: DerivedFamily>(
    a: &F,
    b: &F,
    lambda: &NonnegScalar,
    samples: usize,
    sampler: &mut Sampler,
) -> Result<ClosureReport> {
    let operands = [a.validate(samples, sampler)?, b.validate(samples, sampler)?];
    let sum = a.plus(b)?.validate(samples, sampler)?;
    let scaled = a.times(lambda).validate(samples, sampler)?;
    Ok(ClosureReport {
        family: F::NAME,
        operands,
        sum,
        scaled,
        lambda: lambda.clone(),
    })
}

/// First axiom failure of a distance table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum MetricViolation {
    NonzeroDiagonal { i: usize },
    Asymmetric { i: usize, j: usize },
    /// `d(i,k) > d(i,j) + d(j,k)`.
    Triangle {
        i: usize,
        j: usize,
        k: usize,
        lhs: NonnegScalar,
        rhs: NonnegScalar,
    },
}

/// First violation in a square table, scanning all ordered triples.
pub fn metric_violation(table: &[Vec<NonnegScalar>]) -> Option<MetricViolation> {
    let n = table.len();
    for i in 0..n {
        if !table[i][i].is_zero() {
            return Some(MetricViolation::NonzeroDiagonal { i });
        }
        for j in 0..n {
            if table[i][j] != table[j][i] {
                return Some(MetricViolation::Asymmetric { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rhs = &table[i][j] + &table[j][k];
                if table[i][k] > rhs {
                    return Some(MetricViolation::Triangle {
                        i,
                        j,
                        k,
                        lhs: table[i][k].clone(),
                        rhs,
                    });
                }
            }
        }
    }
    None
}

/// A semi-metric on `{0, ..., n-1}`: zero diagonal, symmetric, triangle
/// inequality. Distinct points may be at distance zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<NonnegScalar>>", into = "Vec<Vec<NonnegScalar>>")]
pub struct FiniteSemiMetric {
    table: Vec<Vec<NonnegScalar>>,
}

impl TryFrom<Vec<Vec<NonnegScalar>>> for FiniteSemiMetric {
    type Error = Error;

    fn try_from(table: Vec<Vec<NonnegScalar>>) -> Result<Self> {
        FiniteSemiMetric::new(table)
    }
}

impl From<FiniteSemiMetric> for Vec<Vec<NonnegScalar>> {
    fn from(m: FiniteSemiMetric) -> Self {
        m.table
    }
}

impl FiniteSemiMetric {
    pub fn new(table: Vec<Vec<NonnegScalar>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyInput("semi-metric carrier"));
        }
        if let Some(row) = table.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if let Some(v) = metric_violation(&table) {
            return Err(Error::InvalidObject(format!("not a semi-metric: {v:?}")));
        }
        Ok(FiniteSemiMetric { table })
    }

    /// `d(i, j) = f(i, j)`; fails unless the result is a semi-metric.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> NonnegScalar) -> Result<Self> {
        Self::new((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    /// `d(i, j) = |pᵢ - pⱼ|` for points on a line.
    pub fn line(points: &[NonnegScalar]) -> Result<Self> {
        Self::from_fn(points.len(), |i, j| points[i].ordered_diff(&points[j]).gap)
    }

    /// `d(i, j) = 1` for `i != j`.
    pub fn discrete(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                NonnegScalar::zero()
            } else {
                NonnegScalar::one()
            }
        })
        .expect("discrete metric")
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| NonnegScalar::zero()).expect("zero semi-metric")
    }

    /// Shortest-path closure of random symmetric edge weights; zero
    /// weights are allowed, so distinct points may be at distance zero.
    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        let mut d = vec![vec![NonnegScalar::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let w = sampler.scalar();
                d[i][j] = w.clone();
                d[j][i] = w;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = &d[i][k] + &d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        FiniteSemiMetric { table: d }
    }

    pub fn carrier_size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<NonnegScalar>] {
        &self.table
    }

    pub fn distance(&self, i: usize, j: usize) -> &NonnegScalar {
        &self.table[i][j]
    }

    pub fn max_entry(&self) -> NonnegScalar {
        self.table.iter().flatten().max().cloned().unwrap_or_else(NonnegScalar::zero)
    }

    fn map_entries(&self, f: impl Fn(&NonnegScalar) -> NonnegScalar) -> Vec<Vec<NonnegScalar>> {
        self.table.iter().map(|r| r.iter().map(&f).collect()).collect()
    }

    fn check_carrier(&self, other: &Self) -> Result<()> {
        if self.carrier_size() != other.carrier_size() {
            return Err(Error::CarrierMismatch {
                left: self.carrier_size(),
                right: other.carrier_size(),
            });
        }
        Ok(())
    }
}

impl DerivedFamily for FiniteSemiMetric {
    const NAME: &'static str = "semimetric";

    /// Pointwise sum. The result is stored without validation so that
    /// [`DerivedFamily::validate`] can re-check it.
    fn plus(&self, other: &Self) -> Result<Self> {
        self.check_carrier(other)?;
        let n = self.carrier_size();
        let table = (0..n)
            .map(|i| (0..n).map(|j| &self.table[i][j] + &other.table[i][j]).collect())
            .collect();
        Ok(FiniteSemiMetric { table })
    }

    fn times(&self, lambda: &NonnegScalar) -> Self {
        FiniteSemiMetric {
            table: self.map_entries(|x| x * lambda),
        }
    }

    fn validate(&self, _samples: usize, _sampler: &mut Sampler) -> Result<AxiomCheck> {
        let n = self.carrier_size();
        let violation = metric_violation(&self.table);
        Ok(AxiomCheck {
            valid: violation.is_none(),
            checked: n * n * n,
            witness: violation.map(|v| format!("{v:?}")),
        })
    }
}

/// A small fixed collection of semi-metrics used to falsify candidate
/// preservers. Distances are integers in `0..=6`.
pub fn bundled_metrics() -> Vec<FiniteSemiMetric> {
    let ints = |xs: &[u64]| xs.iter().map(|&x| NonnegScalar::from_integer(x)).collect::<Vec<_>>();
    let tree = [
        [0, 1, 2, 3],
        [1, 0, 3, 4],
        [2, 3, 0, 5],
        [3, 4, 5, 0],
    ];
    let cycle = [
        [0, 1, 2, 1],
        [1, 0, 1, 2],
        [2, 1, 0, 1],
        [1, 2, 1, 0],
    ];
    vec![
        FiniteSemiMetric::line(&ints(&[0, 1, 2])).expect("line"),
        FiniteSemiMetric::discrete(4),
        FiniteSemiMetric::from_fn(4, |i, j| NonnegScalar::from_integer(tree[i][j])).expect("star tree"),
        FiniteSemiMetric::from_fn(4, |i, j| NonnegScalar::from_integer(cycle[i][j])).expect("4-cycle"),
        FiniteSemiMetric::line(&ints(&[0, 1, 3, 6])).expect("line"),
        FiniteSemiMetric::from_fn(3, |i, j| NonnegScalar::from_integer(if i / 2 == j / 2 { 0 } else { 2 }))
            .expect("pseudo"),
    ]
}

/// A candidate metric-preserving function `f: [0, M] -> [0, ∞)` with
/// `f(0) = 0`, piecewise linear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PiecewiseLinearFn", into = "PiecewiseLinearFn")]
pub struct CandidatePreserver {
    f: PiecewiseLinearFn,
}

impl TryFrom<PiecewiseLinearFn> for CandidatePreserver {
    type Error = Error;

    fn try_from(f: PiecewiseLinearFn) -> Result<Self> {
        CandidatePreserver::new(f)
    }
}

impl From<CandidatePreserver> for PiecewiseLinearFn {
    fn from(c: CandidatePreserver) -> Self {
        c.f
    }
}

impl CandidatePreserver {
    pub fn new(f: PiecewiseLinearFn) -> Result<Self> {
        let (a, _) = f.interval();
        if !a.is_zero() || !f.values()[0].is_zero() {
            return Err(Error::InvalidObject("a preserver candidate is defined on [0, M] with f(0) = 0".into()));
        }
        Ok(CandidatePreserver { f })
    }

    /// `t ↦ c t` on `[0, m]`.
    pub fn linear(c: NonnegScalar, m: NonnegScalar) -> Result<Self> {
        let f = PiecewiseLinearFn::new(NonnegScalar::zero(), m.clone(), vec![NonnegScalar::zero(), m.clone()], vec![
            NonnegScalar::zero(),
            c * m,
        ])?;
        Self::new(f)
    }

    /// `t ↦ min(t, c)` on `[0, m]`, `c > 0`.
    pub fn capped(c: NonnegScalar, m: NonnegScalar) -> Result<Self> {
        let zero = NonnegScalar::zero();
        let mut ts = vec![zero.clone()];
        if c < m {
            ts.push(c.clone());
        }
        ts.push(m.clone());
        ts.dedup();
        let f = PiecewiseLinearFn::from_fn(zero, m, ts, |t| t.clone().min(c.clone()))?;
        Self::new(f)
    }

    /// `t ↦ t²` at the integers `0..=m`, linear in between. Exact on every
    /// metric with integer distances.
    pub fn square_on_integers(m: u64) -> Result<Self> {
        let ts: Vec<NonnegScalar> = (0..=m).map(NonnegScalar::from_integer).collect();
        let f = PiecewiseLinearFn::from_fn(NonnegScalar::zero(), NonnegScalar::from_integer(m), ts, |t| t.pow(2))?;
        Self::new(f)
    }

    pub fn function(&self) -> &PiecewiseLinearFn {
        &self.f
    }

    pub fn domain_max(&self) -> &NonnegScalar {
        self.f.interval().1
    }

    pub fn eval(&self, t: &NonnegScalar) -> Result<NonnegScalar> {
        self.f.eval(t)
    }

    /// `f ∘ d` as a table, not yet validated.
    pub fn compose(&self, d: &FiniteSemiMetric) -> Result<Vec<Vec<NonnegScalar>>> {
        let needed = d.max_entry();
        if &needed > self.domain_max() {
            return Err(Error::DomainTooSmall {
                domain_max: self.domain_max().to_string(),
                needed: needed.to_string(),
            });
        }
        d.table
            .iter()
            .map(|r| r.iter().map(|x| self.eval(x)).collect())
            .collect()
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        Self::new(self.f.add(&other.f)?)
    }

    pub fn times(&self, lambda: &NonnegScalar) -> Self {
        CandidatePreserver { f: self.f.scale(lambda) }
    }
}

/// Verdict of [`preserver_falsify`]. `NotFalsified` is evidence on the
/// tested metrics only, not a proof that `f` preserves every semi-metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PreserverVerdict {
    Falsified {
        metric: usize,
        violation: MetricViolation,
    },
    NotFalsified {
        metrics_checked: usize,
    },
}

impl PreserverVerdict {
    pub fn is_falsified(&self) -> bool {
        matches!(self, PreserverVerdict::Falsified { .. })
    }
}

/// Composes `f` with every metric and re-checks the semi-metric axioms on
/// all triples.
pub fn preserver_falsify(f: &CandidatePreserver, metrics: &[FiniteSemiMetric]) -> Result<PreserverVerdict> {
    for (idx, d) in metrics.iter().enumerate() {
        if let Some(violation) = metric_violation(&f.compose(d)?) {
            return Ok(PreserverVerdict::Falsified { metric: idx, violation });
        }
    }
    Ok(PreserverVerdict::NotFalsified {
        metrics_checked: metrics.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreserverClosureReport {
    pub candidates: usize,
    /// Sums and multiples of not-falsified candidates that were falsified.
    pub failures: Vec<String>,
}

/// Sums of pairs and multiples by `lambdas` of the not-falsified candidates
/// must stay not falsified on the same metrics.
pub fn preserver_closure_audit(
    candidates: &[CandidatePreserver],
    lambdas: &[NonnegScalar],
    metrics: &[FiniteSemiMetric],
) -> Result<PreserverClosureReport> {
    let mut kept = Vec::new();
    for c in candidates {
        if !preserver_falsify(c, metrics)?.is_falsified() {
            kept.push(c);
        }
    }
    let mut failures = Vec::new();
    for (i, a) in kept.iter().enumerate() {
        for (j, b) in kept.iter().enumerate().skip(i) {
            if preserver_falsify(&a.plus(b)?, metrics)?.is_falsified() {
                failures.push(format!("candidate {i} + candidate {j}"));
            }
        }
        for l in lambdas {
            if preserver_falsify(&a.times(l), metrics)?.is_falsified() {
                failures.push(format!("{l} * candidate {i}"));
            }
        }
    }
    Ok(PreserverClosureReport {
        candidates: kept.len(),
        failures,
    })
}

/// A semi-norm on `[Q+]^n`, evaluated exactly on the nonnegative orthant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiNorm {
    /// `Σ wᵢ xᵢ`.
    WeightedL1(SemiVector),
    /// `max wᵢ xᵢ`.
    WeightedMax(SemiVector),
    /// `max_k ⟨a_k, x⟩`; all `a_k` share one dimension.
    MaxOfLinear(Vec<SemiVector>),
    Sum(Box<SemiNorm>, Box<SemiNorm>),
    Scaled(NonnegScalar, Box<SemiNorm>),
    /// `N ∘ T`.
    Pullback(Box<SemiNorm>, SemiMatrix),
    Zero(usize),
}

impl SemiNorm {
    pub fn l1(n: usize) -> Self {
        SemiNorm::WeightedL1(SemiVector::new(vec![NonnegScalar::one(); n]).expect("n >= 1"))
    }

    pub fn linf(n: usize) -> Self {
        SemiNorm::WeightedMax(SemiVector::new(vec![NonnegScalar::one(); n]).expect("n >= 1"))
    }

    /// A random weighted-`l1`, weighted-max or max-of-linear semi-norm.
    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        match sampler.index(3) {
            0 => SemiNorm::WeightedL1(sampler.vector(n)),
            1 => SemiNorm::WeightedMax(sampler.vector(n)),
            _ => SemiNorm::MaxOfLinear((0..1 + sampler.index(3)).map(|_| sampler.vector(n)).collect()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SemiNorm::WeightedL1(w) | SemiNorm::WeightedMax(w) => w.dim(),
            SemiNorm::MaxOfLinear(a) => a.first().map_or(0, SemiVector::dim),
            SemiNorm::Sum(a, _) => a.dim(),
            SemiNorm::Scaled(_, a) => a.dim(),
            SemiNorm::Pullback(_, t) => t.cols(),
            SemiNorm::Zero(n) => *n,
        }
    }

    /// Structural well-formedness: matching dimensions throughout.
    pub fn check(&self) -> Result<()> {
        let mismatch = |expected, found| Err(Error::DimensionMismatch { expected, found });
        match self {
            SemiNorm::MaxOfLinear(a) => {
                let Some(first) = a.first() else {
                    return Err(Error::EmptyInput("max of linear functionals"));
                };
                match a.iter().find(|x| x.dim() != first.dim()) {
                    Some(x) => mismatch(first.dim(), x.dim()),
                    None => Ok(()),
                }
            }
            SemiNorm::Sum(a, b) => {
                a.check()?;
                b.check()?;
                if a.dim() != b.dim() {
                    return mismatch(a.dim(), b.dim());
                }
                Ok(())
            }
            SemiNorm::Scaled(_, a) => a.check(),
            SemiNorm::Pullback(n, t) => {
                n.check()?;
                if n.dim() != t.rows() {
                    return mismatch(n.dim(), t.rows());
                }
                Ok(())
            }
            SemiNorm::WeightedL1(_) | SemiNorm::WeightedMax(_) | SemiNorm::Zero(_) => Ok(()),
        }
    }

    pub fn eval(&self, x: &SemiVector) -> Result<NonnegScalar> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(match self {
            SemiNorm::WeightedL1(w) => w.iter().zip(x.iter()).map(|(a, b)| a * b).sum(),
            SemiNorm::WeightedMax(w) => w
                .iter()
                .zip(x.iter())
                .map(|(a, b)| a * b)
                .max()
                .unwrap_or_else(NonnegScalar::zero),
            SemiNorm::MaxOfLinear(a) => {
                let mut best = NonnegScalar::zero();
                for f in a {
                    let y: NonnegScalar = f.iter().zip(x.iter()).map(|(p, q)| p * q).sum();
                    best = best.max(y);
                }
                best
            }
            SemiNorm::Sum(a, b) => a.eval(x)? + b.eval(x)?,
            SemiNorm::Scaled(l, a) => l * a.eval(x)?,
            SemiNorm::Pullback(n, t) => n.eval(&t.mul_vec(x)?)?,
            SemiNorm::Zero(_) => NonnegScalar::zero(),
        })
    }
}

impl DerivedFamily for SemiNorm {
    const NAME: &'static str = "seminorm";

    fn plus(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::CarrierMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(SemiNorm::Sum(Box::new(self.clone()), Box::new(other.clone())))
    }

    fn times(&self, lambda: &NonnegScalar) -> Self {
        SemiNorm::Scaled(lambda.clone(), Box::new(self.clone()))
    }

    /// `N(0) = 0`, `N(αx) = α N(x)` and `N(x + y) <= N(x) + N(y)` on samples.
    fn validate(&self, samples: usize, sampler: &mut Sampler) -> Result<AxiomCheck> {
        self.check()?;
        let n = self.dim();
        let mut c = AxiomCheck::new();
        c.record(self.eval(&SemiVector::zeros(n))?.is_zero(), || "N(0) != 0".into());
        for _ in 0..samples {
            let (x, y, alpha) = (sampler.vector(n), sampler.vector(n), sampler.scalar());
            let (nx, ny) = (self.eval(&x)?, self.eval(&y)?);
            let nxy = self.eval(&x.add(&y)?)?;
            c.record(nxy <= &nx + &ny, || format!("N({x} + {y}) = {nxy} > {nx} + {ny}"));
            let nax = self.eval(&x.scale(&alpha))?;
            c.record(nax == &alpha * &nx, || format!("N({alpha} * {x}) = {nax} != {alpha} * {nx}"));
        }
        Ok(c)
    }
}

/// `N ∘ T` for `T: V -> W` and a semi-norm `N` on `W`.
pub fn pullback_seminorm(n: &SemiNorm, t: &SemiLinearMap) -> Result<SemiNorm> {
    if n.dim() != t.codomain_dim() {
        return Err(Error::DimensionMismatch {
            expected: n.dim(),
            found: t.codomain_dim(),
        });
    }
    Ok(SemiNorm::Pullback(Box::new(n.clone()), t.matrix().clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PullbackReport {
    pub seminorm: AxiomCheck,
    /// Present when `T` is injective: `(N ∘ T)(x) > 0` on sampled `x != 0`.
    pub definite: Option<AxiomCheck>,
}

/// Validates `N ∘ T` as a semi-norm, and as a norm on samples when `T` is
/// exactly injective.
pub fn pullback_audit(n: &SemiNorm, t: &SemiLinearMap, samples: usize, sampler: &mut Sampler) -> Result<PullbackReport> {
    let p = pullback_seminorm(n, t)?;
    let seminorm = p.validate(samples, sampler)?;
    let definite = if t.is_injective() {
        let mut c = AxiomCheck::new();
        for _ in 0..samples {
            let x = sampler.nonzero_vector(p.dim());
            let nx = p.eval(&x)?;
            c.record(!nx.is_zero(), || format!("(N o T)({x}) = 0"));
        }
        Some(c)
    } else {
        None
    };
    Ok(PullbackReport { seminorm, definite })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PullbackClosureReport {
    pub sums: AxiomCheck,
    pub scalings: AxiomCheck,
}

/// `(N₁∘T) + (N₂∘T) = (N₁+N₂)∘T` for every pair of `norms`, and
/// `λ(N∘T) = (λN)∘T`, pointwise on samples.
pub fn pullback_closure_audit(
    t: &SemiLinearMap,
    norms: &[SemiNorm],
    lambda: &NonnegScalar,
    samples: usize,
    sampler: &mut Sampler,
) -> Result<PullbackClosureReport> {
    let mut sums = AxiomCheck::new();
    let mut scalings = AxiomCheck::new();
    let n = t.domain_dim();
    let xs: Vec<SemiVector> = (0..samples).map(|_| sampler.vector(n)).collect();
    for (i, a) in norms.iter().enumerate() {
        let pa = pullback_seminorm(a, t)?;
        let scaled_after = pa.times(lambda);
        let scaled_before = pullback_seminorm(&a.times(lambda), t)?;
        for x in &xs {
            let (l, r) = (scaled_after.eval(x)?, scaled_before.eval(x)?);
            scalings.record(l == r, || format!("norm {i}, x = {x}: {l} != {r}"));
        }
        for (j, b) in norms.iter().enumerate().skip(i) {
            let separate = pa.plus(&pullback_seminorm(b, t)?)?;
            let joint = pullback_seminorm(&a.plus(b)?, t)?;
            for x in &xs {
                let (l, r) = (separate.eval(x)?, joint.eval(x)?);
                sums.record(l == r, || format!("norms {i},{j}, x = {x}: {l} != {r}"));
            }
        }
    }
    Ok(PullbackClosureReport { sums, scalings })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryLaw {
    pub law: &'static str,
    pub check: AxiomCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryReport {
    pub laws: Vec<CategoryLaw>,
}

impl CategoryReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(|l| l.check.valid)
    }
}

/// The pullback functor `F_T(N) = N ∘ T`.
fn functor(t: &SemiLinearMap, n: &SemiNorm) -> Result<SemiNorm> {
    pullback_seminorm(n, t)
}

/// Category laws for the chain `X --t3--> W --t2--> V --t1--> U` and
/// semi-norms on `U`, as exact pointwise equalities on samples of `X`
/// (and of `V`, `W` where the law lives there).
pub fn category_laws_audit(
    t1: &SemiLinearMap,
    t2: &SemiLinearMap,
    t3: &SemiLinearMap,
    norms: &[SemiNorm],
    lambda: &NonnegScalar,
    samples: usize,
    sampler: &mut Sampler,
) -> Result<CategoryReport> {
    if t1.domain_dim() != t2.codomain_dim() || t2.domain_dim() != t3.codomain_dim() {
        return Err(Error::NonComposableChain(format!(
            "{} <- {} | {} <- {} | {} <- {}",
            t1.codomain_dim(),
            t1.domain_dim(),
            t2.codomain_dim(),
            t2.domain_dim(),
            t3.codomain_dim(),
            t3.domain_dim()
        )));
    }
    if let Some(n) = norms.iter().find(|n| n.dim() != t1.codomain_dim()) {
        return Err(Error::NonComposableChain(format!(
            "semi-norm on dimension {} but the chain ends in dimension {}",
            n.dim(),
            t1.codomain_dim()
        )));
    }
    let sample_on = |dim: usize, sampler: &mut Sampler| -> Vec<SemiVector> {
        (0..samples).map(|_| sampler.vector(dim)).collect()
    };
    let xs_v = sample_on(t1.domain_dim(), sampler);
    let xs_x = sample_on(t3.domain_dim(), sampler);
    let agree = |c: &mut AxiomCheck, f: &SemiNorm, g: &SemiNorm, xs: &[SemiVector]| -> Result<()> {
        for x in xs {
            let (l, r) = (f.eval(x)?, g.eval(x)?);
            c.record(l == r, || format!("x = {x}: {l} != {r}"));
        }
        Ok(())
    };

    let mut left_identity = AxiomCheck::new();
    let mut right_identity = AxiomCheck::new();
    let mut homogeneity = AxiomCheck::new();
    let mut additivity = AxiomCheck::new();
    let mut composite = AxiomCheck::new();
    let mut associativity = AxiomCheck::new();

    let id_u = SemiLinearMap::identity(t1.codomain_dim());
    let id_v = SemiLinearMap::identity(t1.domain_dim());
    let t12_3 = t1.compose(t2)?.compose(t3)?;
    let t1_23 = t1.compose(&t2.compose(t3)?)?;
    associativity.record(t12_3 == t1_23, || "(t1 t2) t3 != t1 (t2 t3)".into());

    for (i, n) in norms.iter().enumerate() {
        let f1 = functor(t1, n)?;
        // F_{T ∘ Id} = F_T = F_{Id ∘ T}.
        agree(&mut right_identity, &functor(&t1.compose(&id_v)?, n)?, &f1, &xs_v)?;
        agree(&mut left_identity, &functor(&id_u.compose(t1)?, n)?, &f1, &xs_v)?;
        agree(&mut left_identity, &functor(&id_v, &f1)?, &f1, &xs_v)?;
        agree(&mut homogeneity, &functor(t1, &n.times(lambda))?, &f1.times(lambda), &xs_v)?;
        for m in &norms[i..] {
            agree(&mut additivity, &functor(t1, &n.plus(m)?)?, &f1.plus(&functor(t1, m)?)?, &xs_v)?;
        }
        let stepwise = functor(t3, &functor(t2, &f1)?)?;
        agree(&mut composite, &stepwise, &functor(&t12_3, n)?, &xs_x)?;
        agree(&mut associativity, &functor(&t12_3, n)?, &functor(&t1_23, n)?, &xs_x)?;
    }
    Ok(CategoryReport {
        laws: vec![
            CategoryLaw { law: "left_identity", check: left_identity },
            CategoryLaw { law: "right_identity", check: right_identity },
            CategoryLaw { law: "associativity", check: associativity },
            CategoryLaw { law: "functor_homogeneous", check: homogeneity },
            CategoryLaw { law: "functor_additive", check: additivity },
            CategoryLaw { law: "composite_formula", check: composite },
        ],
    })
}

/// `(u, v) ↦ uᵀ G v` on `[Q+]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub gram: SemiMatrix,
}

impl BilinearForm {
    pub fn new(gram: SemiMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &SemiVector, v: &SemiVector) -> Result<NonnegScalar> {
        crate::geometry::dot(u, &self.gram.mul_vec(v)?)
    }

    /// Symmetry, and additivity and homogeneity in each argument, on
    /// samples. `⟨v, v⟩ >= 0` holds by the type of the result.
    pub fn audit(&self, samples: usize, sampler: &mut Sampler) -> Result<AxiomCheck> {
        let n = self.dim();
        let mut c = AxiomCheck::new();
        for _ in 0..samples {
            let (u, v, w, a) = (sampler.vector(n), sampler.vector(n), sampler.vector(n), sampler.scalar());
            let uv = self.eval(&u, &v)?;
            let vu = self.eval(&v, &u)?;
            c.record(uv == vu, || format!("<{u}, {v}> = {uv} != {vu} = <{v}, {u}>"));
            let lhs = self.eval(&u.add(&w)?, &v)?;
            let rhs = &uv + self.eval(&w, &v)?;
            c.record(lhs == rhs, || format!("<{u} + {w}, {v}> not additive"));
            let lhs = self.eval(&u, &v.add(&w)?)?;
            let rhs = &uv + self.eval(&u, &w)?;
            c.record(lhs == rhs, || format!("<{u}, {v} + {w}> not additive"));
            let lhs = self.eval(&u.scale(&a), &v)?;
            c.record(lhs == &a * &uv, || format!("<{a} * {u}, {v}> not homogeneous"));
        }
        Ok(c)
    }
}

/// A symmetric bilinear form with nonnegative Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BilinearForm", into = "BilinearForm")]
pub struct SemiInner {
    form: BilinearForm,
}

impl TryFrom<BilinearForm> for SemiInner {
    type Error = Error;

    fn try_from(form: BilinearForm) -> Result<Self> {
        SemiInner::new(form.gram)
    }
}

impl From<SemiInner> for BilinearForm {
    fn from(s: SemiInner) -> Self {
        s.form
    }
}

impl SemiInner {
    pub fn new(gram: SemiMatrix) -> Result<Self> {
        let form = BilinearForm::new(gram)?;
        if form.gram != form.gram.transpose() {
            return Err(Error::InvalidObject("semi-inner product needs a symmetric Gram matrix".into()));
        }
        Ok(SemiInner { form })
    }

    /// The Gram form `MᵀM`.
    pub fn gram_of(m: &SemiMatrix) -> Self {
        Self::new(m.transpose().mul(m).expect("MᵀM is defined")).expect("MᵀM is symmetric")
    }

    pub fn dot(n: usize) -> Self {
        Self::new(SemiMatrix::identity(n)).expect("identity is symmetric")
    }

    /// `MᵀM` for a random `n×n` matrix `M`.
    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        Self::gram_of(&sampler.matrix(n, n))
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn eval(&self, u: &SemiVector, v: &SemiVector) -> Result<NonnegScalar> {
        self.form.eval(u, v)
    }
}

impl DerivedFamily for SemiInner {
    const NAME: &'static str = "semiinner";

    fn plus(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::CarrierMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(SemiInner {
            form: BilinearForm::new(self.form.gram.add(&other.form.gram)?)?,
        })
    }

    fn times(&self, lambda: &NonnegScalar) -> Self {
        SemiInner {
            form: BilinearForm {
                gram: self.form.gram.scale(lambda),
            },
        }
    }

    fn validate(&self, samples: usize, sampler: &mut Sampler) -> Result<AxiomCheck> {
        self.form.audit(samples, sampler)
    }
}

/// `(u, v) ↦ ⟨T₁ u, T₂ v⟩`, with Gram matrix `T₁ᵀ G T₂`. Symmetric when
/// `T₁ = T₂`; otherwise [`BilinearForm::audit`] reports the witness.
pub fn pullback_inner(p: &SemiInner, t1: &SemiLinearMap, t2: &SemiLinearMap) -> Result<BilinearForm> {
    for t in [t1, t2] {
        if t.codomain_dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: t.codomain_dim(),
            });
        }
    }
    if t1.domain_dim() != t2.domain_dim() {
        return Err(Error::DimensionMismatch {
            expected: t1.domain_dim(),
            found: t2.domain_dim(),
        });
    }
    BilinearForm::new(t1.matrix().transpose().mul(&p.form.gram)?.mul(t2.matrix())?)
}

/// `x ↦ max_k ⟨a_k, x⟩` on `[Q+]^n`: subadditive and positively
/// homogeneous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<SemiVector>", into = "Vec<SemiVector>")]
pub struct Sublinear {
    functionals: Vec<SemiVector>,
}

impl TryFrom<Vec<SemiVector>> for Sublinear {
    type Error = Error;

    fn try_from(f: Vec<SemiVector>) -> Result<Self> {
        Sublinear::new(f)
    }
}

impl From<Sublinear> for Vec<SemiVector> {
    fn from(s: Sublinear) -> Self {
        s.functionals
    }
}

impl Sublinear {
    pub fn new(functionals: Vec<SemiVector>) -> Result<Self> {
        let Some(first) = functionals.first() else {
            return Err(Error::EmptyInput("sublinear functional needs at least one linear piece"));
        };
        if let Some(f) = functionals.iter().find(|f| f.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: f.dim(),
            });
        }
        Ok(Sublinear { functionals })
    }

    pub fn dim(&self) -> usize {
        self.functionals[0].dim()
    }

    pub fn random(n: usize, sampler: &mut Sampler) -> Self {
        Sublinear {
            functionals: (0..1 + sampler.index(3)).map(|_| sampler.vector(n)).collect(),
        }
    }

    pub fn functionals(&self) -> &[SemiVector] {
        &self.functionals
    }

    pub fn eval(&self, x: &SemiVector) -> Result<NonnegScalar> {
        let mut best = NonnegScalar::zero();
        for f in &self.functionals {
            best = best.max(crate::geometry::dot(f, x)?);
        }
        Ok(best)
    }
}

impl DerivedFamily for Sublinear {
    const NAME: &'static str = "sublinear";

    /// `max_i ⟨a_i, x⟩ + max_j ⟨b_j, x⟩ = max_{i,j} ⟨a_i + b_j, x⟩`.
    fn plus(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::CarrierMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let mut functionals = Vec::with_capacity(self.functionals.len() * other.functionals.len());
        for a in &self.functionals {
            for b in &other.functionals {
                functionals.push(a.add(b)?);
            }
        }
        Sublinear::new(functionals)
    }

    fn times(&self, lambda: &NonnegScalar) -> Self {
        Sublinear {
            functionals: self.functionals.iter().map(|f| f.scale(lambda)).collect(),
        }
    }

    /// `t(x + y) <= t(x) + t(y)` and `t(αx) = α t(x)` on samples.
    fn validate(&self, samples: usize, sampler: &mut Sampler) -> Result<AxiomCheck> {
        let n = self.dim();
        let mut c = AxiomCheck::new();
        for _ in 0..samples {
            let (x, y, alpha) = (sampler.vector(n), sampler.vector(n), sampler.scalar());
            let (tx, ty, txy) = (self.eval(&x)?, self.eval(&y)?, self.eval(&x.add(&y)?)?);
            c.record(txy <= &tx + &ty, || format!("t({x} + {y}) = {txy} > {tx} + {ty}"));
            let tax = self.eval(&x.scale(&alpha))?;
            c.record(tax == &alpha * &tx, || format!("t({alpha} * {x}) != {alpha} * t({x})"));
        }
        Ok(c)
    }
}
