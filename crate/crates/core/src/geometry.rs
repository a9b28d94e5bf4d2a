//! Norms, metrics and operator norms built from ordered differences.
//!
//! Every distance is computed from the gaps `cᵢ = max(xᵢ, yᵢ) - min(xᵢ, yᵢ)`
//! supplied by [`NonnegScalar::ordered_diff`]. Euclidean quantities are kept
//! as exact radicands; see [`Magnitude`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalar::NonnegScalar;
use crate::semilinear::SemiLinearMap;
use crate::semimodule::{SemiMatrix, SemiVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormKind {
    #[serde(rename = "l2", alias = "euclidean")]
    Euclidean,
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "linf", alias = "max")]
    LInf,
}

impl NormKind {
    pub const ALL: [NormKind; 3] = [NormKind::Euclidean, NormKind::L1, NormKind::LInf];

    pub fn name(self) -> &'static str {
        match self {
            NormKind::Euclidean => "l2",
            NormKind::L1 => "l1",
            NormKind::LInf => "linf",
        }
    }
}

impl std::str::FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l2" | "euclidean" => Ok(NormKind::Euclidean),
            "l1" => Ok(NormKind::L1),
            "linf" | "max" => Ok(NormKind::LInf),
            other => Err(Error::InvalidParameter(format!("unknown norm kind {other:?}"))),
        }
    }
}

/// A nonnegative real that is rational, an exact root of a rational, or a
/// float approximation.
///
/// `Root { radicand, index }` is `radicand^(1/index)` and is only produced
/// when the root is irrational.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(NonnegScalar),
    Root { radicand: NonnegScalar, index: u32 },
    Approx(f64),
}

impl Magnitude {
    /// `radicand^(1/index)`, collapsed to [`Magnitude::Exact`] when rational.
    pub fn root(radicand: NonnegScalar, index: u32) -> Self {
        match radicand.exact_root(index) {
            Some(r) => Magnitude::Exact(r),
            None => Magnitude::Root { radicand, index },
        }
    }

    pub fn sqrt(radicand: NonnegScalar) -> Self {
        Self::root(radicand, 2)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Magnitude::Exact(x) => x.to_f64(),
            Magnitude::Root { radicand, index } => radicand.to_f64().powf(1.0 / *index as f64),
            Magnitude::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&NonnegScalar> {
        match self {
            Magnitude::Exact(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Magnitude::Approx(_))
    }

    /// `self^k` as a rational, for `k` a multiple of the root index.
    fn exact_power(&self, k: u32) -> Option<NonnegScalar> {
        match self {
            Magnitude::Exact(x) => Some(x.pow(k)),
            Magnitude::Root { radicand, index } if k.is_multiple_of(*index) => Some(radicand.pow(k / index)),
            _ => None,
        }
    }

    fn index(&self) -> u32 {
        match self {
            Magnitude::Root { index, .. } => *index,
            _ => 1,
        }
    }

    /// Exact when neither side is [`Magnitude::Approx`].
    pub fn compare(&self, other: &Magnitude) -> Option<Ordering> {
        let l = num_integer::lcm(self.index(), other.index());
        match (self.exact_power(l), other.exact_power(l)) {
            (Some(a), Some(b)) => Some(a.cmp(&b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Exact(x) => write!(f, "{x}"),
            Magnitude::Root { radicand, index: 2 } => write!(f, "sqrt({radicand})"),
            Magnitude::Root { radicand, index } => write!(f, "({radicand})^(1/{index})"),
            Magnitude::Approx(x) => write!(f, "~{x}"),
        }
    }
}

#[derive(Serialize)]
struct MagnitudeRepr<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<&'a NonnegScalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radicand: Option<&'a NonnegScalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<u32>,
    approx: f64,
}

impl Serialize for Magnitude {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (exact, radicand, index) = match self {
            Magnitude::Exact(x) => (Some(x), None, None),
            Magnitude::Root { radicand, index } => (None, Some(radicand), Some(*index)),
            Magnitude::Approx(_) => (None, None, None),
        };
        MagnitudeRepr {
            exact,
            radicand,
            index,
            approx: self.to_f64(),
        }
        .serialize(s)
    }
}

/// `√a <= √b + √c`, decided exactly: either `a <= b + c`, or squaring once
/// more gives `(a - b - c)² <= 4bc`.
pub fn sqrt_le_sqrt_sum(a: &NonnegScalar, b: &NonnegScalar, c: &NonnegScalar) -> bool {
    let bc = b + c;
    if a <= &bc {
        return true;
    }
    let gap = a.ordered_diff(&bc).gap;
    gap.pow(2) <= NonnegScalar::from_integer(4) * b * c
}

fn same_dim(x: &SemiVector, y: &SemiVector) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(())
}

/// `Σ xᵢ²`, the radicand of the Euclidean norm.
pub fn sum_of_squares(v: &SemiVector) -> NonnegScalar {
    v.iter().map(|x| x * x).sum()
}

pub fn l1(v: &SemiVector) -> NonnegScalar {
    v.iter().sum()
}

pub fn linf(v: &SemiVector) -> NonnegScalar {
    v.iter().max().cloned().unwrap_or_else(NonnegScalar::zero)
}

/// ```
/// use semikit::geometry::{norm, Magnitude, NormKind};
/// use semikit::{q, semimodule::v};
/// assert_eq!(norm(&v(&["3", "4"]), NormKind::Euclidean), Magnitude::Exact(q("5")));
/// assert_eq!(norm(&v(&["1", "1"]), NormKind::Euclidean), Magnitude::Root { radicand: q("2"), index: 2 });
/// ```
pub fn norm(v: &SemiVector, kind: NormKind) -> Magnitude {
    match kind {
        NormKind::Euclidean => Magnitude::sqrt(sum_of_squares(v)),
        NormKind::L1 => Magnitude::Exact(l1(v)),
        NormKind::LInf => Magnitude::Exact(linf(v)),
    }
}

/// The coordinatewise gaps `cᵢ`.
pub fn gaps(x: &SemiVector, y: &SemiVector) -> Result<SemiVector> {
    same_dim(x, y)?;
    SemiVector::new(x.iter().zip(y.iter()).map(|(a, b)| a.ordered_diff(b).gap).collect())
}

pub fn metric(x: &SemiVector, y: &SemiVector, kind: NormKind) -> Result<Magnitude> {
    Ok(norm(&gaps(x, y)?, kind))
}

pub fn dot(u: &SemiVector, v: &SemiVector) -> Result<NonnegScalar> {
    same_dim(u, v)?;
    Ok(u.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
}

/// Triangle inequality `d(x,z) <= d(x,y) + d(y,z)` for one of the three
/// metrics, decided exactly.
pub fn triangle_holds(x: &SemiVector, y: &SemiVector, z: &SemiVector, kind: NormKind) -> Result<bool> {
    let (xz, xy, yz) = (gaps(x, z)?, gaps(x, y)?, gaps(y, z)?);
    Ok(match kind {
        NormKind::Euclidean => sqrt_le_sqrt_sum(&sum_of_squares(&xz), &sum_of_squares(&xy), &sum_of_squares(&yz)),
        NormKind::L1 => l1(&xz) <= l1(&xy) + l1(&yz),
        NormKind::LInf => linf(&xz) <= linf(&xy) + linf(&yz),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub samples: usize,
    pub max_dim: usize,
    /// Vectors for which `‖v‖∞ <= ‖v‖ <= ‖v‖₁ <= n ‖v‖∞` failed.
    pub violations: Vec<SemiVector>,
}

/// `‖v‖∞ <= ‖v‖ <= ‖v‖₁ <= n ‖v‖∞`, checked on squares.
pub fn norm_chain_holds(v: &SemiVector) -> bool {
    let (m, s, l) = (linf(v), sum_of_squares(v), l1(v));
    let n = NonnegScalar::from_integer(v.dim() as u64);
    m.pow(2) <= s && s <= l.pow(2) && l <= n * m
}

/// Draws `samples` vectors for every dimension `1..=max_dim` and checks the
/// norm chain on each.
pub fn norm_equivalence_audit(samples: usize, max_dim: usize, sampler: &mut Sampler) -> EquivalenceReport {
    let mut violations = Vec::new();
    for n in 1..=max_dim {
        for _ in 0..samples {
            let v = sampler.vector(n);
            if !norm_chain_holds(&v) {
                violations.push(v);
            }
        }
    }
    EquivalenceReport {
        samples: samples * max_dim,
        max_dim,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorNorm {
    pub kind: NormKind,
    pub value: Magnitude,
    /// A unit vector with `‖T v‖ = ‖T‖`, when the norm is attained exactly.
    pub attained_at: Option<SemiVector>,
    /// `[lower, upper]` for the Euclidean case.
    pub bracket: Option<(f64, f64)>,
}

/// `‖T‖ = sup_{‖v‖ = 1} ‖T v‖`.
///
/// For nonnegative matrices the `l1` supremum is the largest column sum,
/// attained at a standard basis vector, and the `linf` supremum is the
/// largest row sum, attained at the all-ones vector. The Euclidean norm is
/// bracketed by power iteration on `AᵀA`.
pub fn operator_norm(t: &SemiLinearMap, kind: NormKind) -> Result<OperatorNorm> {
    let a = t.matrix();
    let n = a.cols();
    Ok(match kind {
        NormKind::L1 => {
            let sums: Vec<NonnegScalar> = (0..n).map(|j| l1(&a.column(j))).collect();
            let best = argmax(&sums);
            OperatorNorm {
                kind,
                value: Magnitude::Exact(sums[best].clone()),
                attained_at: Some(SemiVector::unit(n, best)),
                bracket: None,
            }
        }
        NormKind::LInf => {
            let sums: Vec<NonnegScalar> = (0..a.rows()).map(|i| l1(&a.row(i))).collect();
            OperatorNorm {
                kind,
                value: Magnitude::Exact(sums[argmax(&sums)].clone()),
                attained_at: Some(SemiVector::new(vec![NonnegScalar::one(); n])?),
                bracket: None,
            }
        }
        NormKind::Euclidean => {
            let (lo, hi) = spectral_bracket(a, 1e-12, 10_000);
            OperatorNorm {
                kind,
                value: Magnitude::Approx(hi),
                attained_at: None,
                bracket: Some((lo, hi)),
            }
        }
    })
}

fn argmax(xs: &[NonnegScalar]) -> usize {
    let mut best = 0;
    for (i, x) in xs.iter().enumerate() {
        if x > &xs[best] {
            best = i;
        }
    }
    best
}

/// Bounds on `sqrt(ρ(AᵀA))`. The lower bound is a Rayleigh quotient; the
/// upper bound is the Collatz-Wielandt maximum for a positive vector,
/// capped by `sqrt(‖A‖₁ ‖A‖∞)`.
fn spectral_bracket(a: &SemiMatrix, tol: f64, max_iter: usize) -> (f64, f64) {
    let s = a.transpose().mul(a).expect("AᵀA is square");
    let n = s.rows();
    let sf: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| s.get(i, j).to_f64()).collect())
        .collect();
    let col_max = (0..a.cols()).map(|j| l1(&a.column(j)).to_f64()).fold(0.0, f64::max);
    let row_max = (0..a.rows()).map(|i| l1(&a.row(i)).to_f64()).fold(0.0, f64::max);
    let cap = col_max * row_max;
    if cap == 0.0 {
        return (0.0, 0.0);
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        sf.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    };
    let mut v = vec![1.0 / n as f64; n];
    let (mut lo, mut hi) = (0.0f64, cap);
    for _ in 0..max_iter {
        let sv = apply(&v);
        let vv: f64 = v.iter().map(|x| x * x).sum();
        let rayleigh = v.iter().zip(&sv).map(|(x, y)| x * y).sum::<f64>() / vv;
        lo = lo.max(rayleigh);
        let cw = sv
            .iter()
            .zip(&v)
            .map(|(y, x)| if *x > 0.0 { y / x } else { f64::INFINITY })
            .fold(0.0, f64::max);
        hi = hi.min(cw);
        if hi - lo <= tol * hi {
            break;
        }
        // Shifting by the identity keeps every coordinate positive and
        // removes periodicity.
        let next: Vec<f64> = sv.iter().zip(&v).map(|(y, x)| y + x).collect();
        let total: f64 = next.iter().sum();
        v = next
            .iter()
            .map(|x| (x / total).max(f64::MIN_POSITIVE))
            .collect();
    }
    (lo.sqrt(), hi.max(lo).sqrt())
}

/// A sequence that is constant from index `prefix.len()` on.
///
/// Bounded by construction; the finitely supported sequences of `lᵖ` are
/// those with `tail = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventuallyConstSeq {
    pub prefix: Vec<NonnegScalar>,
    pub tail: NonnegScalar,
}

impl EventuallyConstSeq {
    pub fn new(prefix: Vec<NonnegScalar>, tail: NonnegScalar) -> Self {
        EventuallyConstSeq { prefix, tail }
    }

    pub fn finite(prefix: Vec<NonnegScalar>) -> Self {
        Self::new(prefix, NonnegScalar::zero())
    }

    /// Term `i`, 0-based.
    pub fn get(&self, i: usize) -> &NonnegScalar {
        self.prefix.get(i).unwrap_or(&self.tail)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.prefix.len().max(other.prefix.len());
        Self::new(
            (0..len).map(|i| self.get(i) + other.get(i)).collect(),
            &self.tail + &other.tail,
        )
    }

    pub fn scale(&self, lambda: &NonnegScalar) -> Self {
        Self::new(self.prefix.iter().map(|x| x * lambda).collect(), &self.tail * lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeqSpace {
    Linf,
    /// `lᵖ` for integer `p >= 1`; non-integer exponents use [`SeqSpace::LpReal`].
    Lp(u32),
    LpReal(f64),
}

/// `sup cᵢ` on `l∞`, or `(Σ cᵢᵖ)^(1/p)` on `lᵖ`.
pub fn seq_metric(x: &EventuallyConstSeq, y: &EventuallyConstSeq, space: SeqSpace) -> Result<Magnitude> {
    let len = x.prefix.len().max(y.prefix.len());
    let mut cs: Vec<NonnegScalar> = (0..len).map(|i| x.get(i).ordered_diff(y.get(i)).gap).collect();
    match space {
        SeqSpace::Linf => {
            cs.push(x.tail.ordered_diff(&y.tail).gap);
            Ok(Magnitude::Exact(cs.into_iter().max().expect("tail gap present")))
        }
        SeqSpace::Lp(_) | SeqSpace::LpReal(_) if !x.tail.is_zero() || !y.tail.is_zero() => {
            p_check(space)?;
            Err(Error::UnsupportedTail)
        }
        SeqSpace::Lp(p) => {
            p_check(space)?;
            Ok(Magnitude::root(cs.iter().map(|c| c.pow(p)).sum(), p))
        }
        SeqSpace::LpReal(p) => {
            p_check(space)?;
            let s: f64 = cs.iter().map(|c| c.to_f64().powf(p)).sum();
            Ok(Magnitude::Approx(s.powf(1.0 / p)))
        }
    }
}

fn p_check(space: SeqSpace) -> Result<()> {
    let ok = match space {
        SeqSpace::Linf => true,
        SeqSpace::Lp(p) => p >= 1,
        SeqSpace::LpReal(p) => p >= 1.0 && p.is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter("lp needs p >= 1".into()))
    }
}

/// A continuous piecewise-linear function on `[a, b]` with `a < b`.
///
/// The breakpoints are strictly increasing, start at `a` and end at `b`;
/// between breakpoints the function interpolates linearly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlRepr")]
pub struct PiecewiseLinearFn {
    a: NonnegScalar,
    b: NonnegScalar,
    breakpoints: Vec<NonnegScalar>,
    values: Vec<NonnegScalar>,
}

#[derive(Deserialize)]
struct PlRepr {
    a: NonnegScalar,
    b: NonnegScalar,
    breakpoints: Vec<NonnegScalar>,
    values: Vec<NonnegScalar>,
}

impl TryFrom<PlRepr> for PiecewiseLinearFn {
    type Error = Error;

    fn try_from(r: PlRepr) -> Result<Self> {
        PiecewiseLinearFn::new(r.a, r.b, r.breakpoints, r.values)
    }
}

impl PiecewiseLinearFn {
    pub fn new(
        a: NonnegScalar,
        b: NonnegScalar,
        breakpoints: Vec<NonnegScalar>,
        values: Vec<NonnegScalar>,
    ) -> Result<Self> {
        let invalid = |m: &str| Err(Error::InvalidObject(format!("piecewise-linear function: {m}")));
        if a >= b {
            return invalid("need a < b");
        }
        if breakpoints.len() != values.len() {
            return invalid("one value per breakpoint");
        }
        if breakpoints.first() != Some(&a) || breakpoints.last() != Some(&b) {
            return invalid("breakpoints must start at a and end at b");
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("breakpoints must be strictly increasing");
        }
        Ok(PiecewiseLinearFn {
            a,
            b,
            breakpoints,
            values,
        })
    }

    pub fn constant(a: NonnegScalar, b: NonnegScalar, c: NonnegScalar) -> Result<Self> {
        Self::new(a.clone(), b.clone(), vec![a, b], vec![c.clone(), c])
    }

    /// Samples `f` at the given breakpoints; exact for functions that are
    /// linear between them.
    pub fn from_fn(
        a: NonnegScalar,
        b: NonnegScalar,
        breakpoints: Vec<NonnegScalar>,
        f: impl Fn(&NonnegScalar) -> NonnegScalar,
    ) -> Result<Self> {
        let values = breakpoints.iter().map(f).collect();
        Self::new(a, b, breakpoints, values)
    }

    pub fn interval(&self) -> (&NonnegScalar, &NonnegScalar) {
        (&self.a, &self.b)
    }

    pub fn breakpoints(&self) -> &[NonnegScalar] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[NonnegScalar] {
        &self.values
    }

    /// `f(t)` for `t` in `[a, b]`, as a convex combination of the two
    /// neighbouring breakpoint values.
    pub fn eval(&self, t: &NonnegScalar) -> Result<NonnegScalar> {
        if t < &self.a || t > &self.b {
            return Err(Error::InvalidParameter(format!("{t} outside [{}, {}]", self.a, self.b)));
        }
        let k = self.breakpoints.partition_point(|x| x <= t);
        if k == self.breakpoints.len() {
            return Ok(self.values[k - 1].clone());
        }
        let (t0, t1) = (&self.breakpoints[k - 1], &self.breakpoints[k]);
        let width = t1.ordered_diff(t0).gap;
        let left = t1.ordered_diff(t).gap;
        let right = t.ordered_diff(t0).gap;
        (left * &self.values[k - 1] + right * &self.values[k]).checked_div(&width)
    }

    fn same_interval(&self, other: &Self) -> Result<()> {
        if self.a != other.a || self.b != other.b {
            return Err(Error::IntervalMismatch);
        }
        Ok(())
    }

    fn merged_breakpoints(&self, other: &Self) -> Vec<NonnegScalar> {
        let mut ts: Vec<NonnegScalar> = self.breakpoints.iter().chain(&other.breakpoints).cloned().collect();
        ts.sort();
        ts.dedup();
        ts
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_interval(other)?;
        let ts = self.merged_breakpoints(other);
        let values = ts
            .iter()
            .map(|t| Ok(self.eval(t)? + other.eval(t)?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.a.clone(), self.b.clone(), ts, values)
    }

    pub fn scale(&self, lambda: &NonnegScalar) -> Self {
        PiecewiseLinearFn {
            values: self.values.iter().map(|v| v * lambda).collect(),
            ..self.clone()
        }
    }
}

/// `max_t c(t)`, attained at a breakpoint of the common refinement.
pub fn fn_metric(f: &PiecewiseLinearFn, g: &PiecewiseLinearFn) -> Result<NonnegScalar> {
    f.same_interval(g)?;
    let mut best = NonnegScalar::zero();
    for t in f.merged_breakpoints(g) {
        let c = f.eval(&t)?.ordered_diff(&g.eval(&t)?).gap;
        if c > best {
            best = c;
        }
    }
    Ok(best)
}

/// One stage of a Cauchy schedule: every pair of terms with index in
/// `start..start + window` must be within `epsilon`.
#[derive(Debug, Clone)]
pub struct CauchyStage {
    pub epsilon: NonnegScalar,
    pub start: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub stages: usize,
    pub pairs_checked: usize,
    pub cauchy: bool,
    /// Whether every probed term from each stage on is within `epsilon` of
    /// the proposed limit.
    pub converges_to_limit: Option<bool>,
    pub violations: Vec<String>,
}

/// Checks the Cauchy property of `family` along a schedule, and convergence
/// to `limit` if one is proposed.
pub fn cauchy_probe<T>(
    family: impl Fn(usize) -> T,
    distance: impl Fn(&T, &T) -> Result<Magnitude>,
    schedule: &[CauchyStage],
    window: usize,
    limit: Option<&T>,
) -> Result<CauchyReport> {
    let within = |d: &Magnitude, eps: &NonnegScalar| {
        d.compare(&Magnitude::Exact(eps.clone())) != Some(Ordering::Greater)
    };
    let mut report = CauchyReport {
        stages: schedule.len(),
        pairs_checked: 0,
        cauchy: true,
        converges_to_limit: limit.map(|_| true),
        violations: Vec::new(),
    };
    for stage in schedule {
        let terms: Vec<T> = (stage.start..stage.start + window).map(&family).collect();
        for (i, x) in terms.iter().enumerate() {
            for (j, y) in terms.iter().enumerate().skip(i + 1) {
                report.pairs_checked += 1;
                let d = distance(x, y)?;
                if !within(&d, &stage.epsilon) {
                    report.cauchy = false;
                    report.violations.push(format!(
                        "d(x_{}, x_{}) = {d} > {}",
                        stage.start + i,
                        stage.start + j,
                        stage.epsilon
                    ));
                }
            }
            if let Some(l) = limit {
                let d = distance(x, l)?;
                if !within(&d, &stage.epsilon) {
                    report.converges_to_limit = Some(false);
                    report
                        .violations
                        .push(format!("d(x_{}, limit) = {d} > {}", stage.start + i, stage.epsilon));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::semimodule::{m, v};

    #[test]
    fn norm_examples() {
        let x = v(&["3", "4"]);
        assert_eq!(norm(&x, NormKind::Euclidean), Magnitude::Exact(q("5")));
        assert_eq!(norm(&x, NormKind::L1), Magnitude::Exact(q("7")));
        assert_eq!(norm(&x, NormKind::LInf), Magnitude::Exact(q("4")));
    }

    #[test]
    fn metric_examples() {
        let (x, y) = (v(&["3", "1"]), v(&["1", "2"]));
        assert_eq!(
            metric(&x, &y, NormKind::Euclidean).unwrap(),
            Magnitude::Root { radicand: q("5"), index: 2 }
        );
        assert_eq!(metric(&x, &y, NormKind::L1).unwrap(), Magnitude::Exact(q("3")));
        for kind in NormKind::ALL {
            assert_eq!(metric(&x, &x, kind).unwrap(), Magnitude::Exact(q("0")));
        }
        assert!(metric(&x, &v(&["1"]), NormKind::L1).is_err());
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&v(&["1", "2"]), &v(&["3", "4"])).unwrap(), q("11"));
        let x = v(&["1/2", "3", "2"]);
        assert_eq!(dot(&x, &x).unwrap(), sum_of_squares(&x));
        assert_eq!(dot(&x, &SemiVector::zeros(3)).unwrap(), q("0"));
    }

    #[test]
    fn magnitude_comparison() {
        let r2 = Magnitude::sqrt(q("2"));
        let c3 = Magnitude::root(q("3"), 3);
        assert_eq!(r2.compare(&c3), Some(Ordering::Less));
        assert_eq!(r2.compare(&Magnitude::Exact(q("3/2"))), Some(Ordering::Less));
        assert_eq!(Magnitude::sqrt(q("9/4")), Magnitude::Exact(q("3/2")));
    }

    #[test]
    fn radical_triangle() {
        assert!(sqrt_le_sqrt_sum(&q("4"), &q("1"), &q("1")));
        assert!(!sqrt_le_sqrt_sum(&q("5"), &q("1"), &q("1")));
        assert!(!sqrt_le_sqrt_sum(&q("2"), &q("1"), &q("0")));
        assert!(sqrt_le_sqrt_sum(&q("0"), &q("0"), &q("0")));
    }

    #[test]
    fn norm_chain_examples() {
        assert!(norm_chain_holds(&v(&["3", "4"])));
        assert!(norm_chain_holds(&SemiVector::unit(5, 2)));
        let r = norm_equivalence_audit(200, 4, &mut Sampler::new(3));
        assert!(r.violations.is_empty());
    }

    #[test]
    fn operator_norm_examples() {
        let t = SemiLinearMap::new(m(&[&["1", "2"], &["3", "4"]]));
        let l1n = operator_norm(&t, NormKind::L1).unwrap();
        assert_eq!(l1n.value, Magnitude::Exact(q("6")));
        assert_eq!(l1n.attained_at, Some(v(&["0", "1"])));
        assert_eq!(operator_norm(&t, NormKind::LInf).unwrap().value, Magnitude::Exact(q("7")));
        let (lo, hi) = operator_norm(&t, NormKind::Euclidean).unwrap().bracket.unwrap();
        let sigma = 15.0 + 221f64.sqrt();
        assert!(lo <= sigma.sqrt() + 1e-9 && sigma.sqrt() <= hi + 1e-9 && hi - lo < 1e-9);
        for kind in NormKind::ALL {
            let id = operator_norm(&SemiLinearMap::identity(3), kind).unwrap();
            assert!((id.value.to_f64() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn spectral_bracket_reducible() {
        let (lo, hi) = spectral_bracket(&m(&[&["2", "0"], &["0", "5"]]), 1e-12, 10_000);
        assert!((lo - 5.0).abs() < 1e-9 && (hi - 5.0).abs() < 1e-9);
        assert_eq!(spectral_bracket(&SemiMatrix::zeros(2, 2), 1e-12, 10), (0.0, 0.0));
    }

    #[test]
    fn seq_metric_examples() {
        let x = EventuallyConstSeq::finite(vec![q("1"), q("2")]);
        let y = EventuallyConstSeq::finite(vec![q("0"), q("2")]);
        assert_eq!(seq_metric(&x, &y, SeqSpace::Linf).unwrap(), Magnitude::Exact(q("1")));
        assert_eq!(seq_metric(&x, &x, SeqSpace::Lp(3)).unwrap(), Magnitude::Exact(q("0")));
        let a = EventuallyConstSeq::finite(vec![q("3")]);
        let b = EventuallyConstSeq::finite(vec![q("0"), q("4")]);
        assert_eq!(seq_metric(&a, &b, SeqSpace::Lp(2)).unwrap(), Magnitude::Exact(q("5")));
        let c = EventuallyConstSeq::new(vec![], q("1"));
        assert_eq!(seq_metric(&a, &c, SeqSpace::Lp(2)), Err(Error::UnsupportedTail));
        assert_eq!(seq_metric(&a, &c, SeqSpace::Linf).unwrap(), Magnitude::Exact(q("2")));
    }

    #[test]
    fn fn_metric_examples() {
        let (zero, one, two) = (q("0"), q("1"), q("2"));
        let f = PiecewiseLinearFn::constant(zero.clone(), one.clone(), two.clone()).unwrap();
        let g = PiecewiseLinearFn::constant(zero.clone(), one.clone(), q("5")).unwrap();
        assert_eq!(fn_metric(&f, &g).unwrap(), q("3"));
        assert_eq!(fn_metric(&f, &f).unwrap(), q("0"));
        let id = PiecewiseLinearFn::from_fn(zero.clone(), two.clone(), vec![q("0"), q("1"), q("2")], |t| t.clone())
            .unwrap();
        let c = PiecewiseLinearFn::constant(zero.clone(), two.clone(), one.clone()).unwrap();
        assert_eq!(fn_metric(&id, &c).unwrap(), q("1"));
        assert_eq!(fn_metric(&f, &c), Err(Error::IntervalMismatch));
    }

    #[test]
    fn pl_eval_and_add() {
        let f = PiecewiseLinearFn::new(q("0"), q("2"), vec![q("0"), q("2")], vec![q("0"), q("4")]).unwrap();
        assert_eq!(f.eval(&q("1/2")).unwrap(), q("1"));
        let g = PiecewiseLinearFn::new(q("0"), q("2"), vec![q("0"), q("1"), q("2")], vec![q("1"), q("0"), q("1")])
            .unwrap();
        let s = f.add(&g).unwrap();
        assert_eq!(s.breakpoints().len(), 3);
        assert_eq!(s.eval(&q("3/2")).unwrap(), q("7/2"));
        assert!(PiecewiseLinearFn::new(q("0"), q("1"), vec![q("0"), q("1/2")], vec![q("0"), q("0")]).is_err());
    }

    #[test]
    fn cauchy_examples() {
        let eps: Vec<CauchyStage> = [4usize, 16, 64]
            .iter()
            .map(|&n| CauchyStage { epsilon: NonnegScalar::new(1, n as u64).unwrap(), start: n })
            .collect();
        let seq = |n: usize| EventuallyConstSeq::finite(vec![NonnegScalar::new(1, n as u64).unwrap()]);
        let dist = |x: &EventuallyConstSeq, y: &EventuallyConstSeq| seq_metric(x, y, SeqSpace::Linf);
        let limit = EventuallyConstSeq::finite(vec![]);
        let r = cauchy_probe(seq, dist, &eps, 6, Some(&limit)).unwrap();
        assert!(r.cauchy && r.converges_to_limit == Some(true));

        let fam = |n: usize| {
            PiecewiseLinearFn::constant(q("0"), q("1"), q("1") + NonnegScalar::new(1, n as u64).unwrap()).unwrap()
        };
        let fdist = |f: &PiecewiseLinearFn, g: &PiecewiseLinearFn| fn_metric(f, g).map(Magnitude::Exact);
        let one = PiecewiseLinearFn::constant(q("0"), q("1"), q("1")).unwrap();
        assert!(cauchy_probe(fam, fdist, &eps, 6, Some(&one)).unwrap().cauchy);

        let diverging = |n: usize| EventuallyConstSeq::finite(vec![NonnegScalar::from_integer(n as u64)]);
        assert!(!cauchy_probe(diverging, dist, &eps, 3, None).unwrap().cauchy);
    }
}
