//! Eigenpairs of semi-linear operators without characteristic polynomials.
//!
//! Exact results come from verification and the structured 2x2 solvers.
//! General nonnegative matrices go through [`perron_power_iteration`], which
//! only adds, multiplies and divides by positive numbers and returns a
//! float certificate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::NonnegScalar;
use crate::semilinear::SemiLinearMap;
use crate::semimodule::{coords, SemiBasis, SemiMatrix, SemiVector};

/// An exactly verified eigenpair: `T v = λ v` with `v != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenPair {
    pub value: NonnegScalar,
    pub vector: SemiVector,
}

/// Approximate dominant eigenpair of a primitive matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronPair {
    pub value: f64,
    /// Positive, with `‖v‖₁ = 1`.
    pub vector: Vec<f64>,
    pub certificate: PerronCertificate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronCertificate {
    /// `‖Av - λv‖∞ / ‖v‖∞`.
    pub residual: f64,
    pub tol: f64,
    /// Collatz-Wielandt bracket `min (Av)ᵢ/vᵢ <= ρ(A) <= max (Av)ᵢ/vᵢ`.
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
}

fn require_square(t: &SemiMatrix) -> Result<()> {
    if !t.is_square() {
        return Err(Error::NotSquare {
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    Ok(())
}

/// Exact check of `T v = λ v`.
///
/// ```
/// use semikit::eigen::verify_eigenpair;
/// use semikit::semilinear::SemiLinearMap;
/// use semikit::semimodule::{m, v};
/// use semikit::q;
/// let t = SemiLinearMap::new(m(&[&["2", "0"], &["0", "5"]]));
/// assert!(verify_eigenpair(&t, &q("2"), &v(&["1", "0"])).unwrap());
/// assert!(!verify_eigenpair(&t, &q("3"), &v(&["1", "1"])).unwrap());
/// ```
pub fn verify_eigenpair(t: &SemiLinearMap, lambda: &NonnegScalar, v: &SemiVector) -> Result<bool> {
    require_square(t.matrix())?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(t.apply(v)? == v.scale(lambda))
}

fn pair(t: &SemiLinearMap, value: NonnegScalar, vector: SemiVector) -> EigenPair {
    debug_assert!(verify_eigenpair(t, &value, &vector).unwrap_or(false));
    EigenPair { value, vector }
}

fn ray(i: usize) -> SemiVector {
    SemiVector::unit(2, i)
}

/// Eigenpairs of `diag(a, b)` with `a != b`. Each entry stands for the ray
/// of positive multiples of its vector.
pub fn solve_2x2_diagonal(a: &NonnegScalar, b: &NonnegScalar) -> Result<Vec<EigenPair>> {
    if a == b {
        return Err(Error::UnsupportedCase("diagonal solver needs a != b"));
    }
    let t = SemiLinearMap::new(SemiMatrix::diagonal(&[a.clone(), b.clone()]));
    let mut out = Vec::new();
    if !a.is_zero() {
        out.push(pair(&t, a.clone(), ray(0)));
    }
    if !b.is_zero() {
        out.push(pair(&t, b.clone(), ray(1)));
    }
    Ok(out)
}

/// Eigenpairs of `[[a, b], [0, a]]` with `a != b` and both positive.
///
/// From `(a x + b y, a y) = λ (x, y)`: if `y != 0` then `λ = a` and
/// `b y = 0`, impossible; so `y = 0`, `x > 0` and `λ = a`.
pub fn solve_2x2_upper_triangular(a: &NonnegScalar, b: &NonnegScalar) -> Result<Vec<EigenPair>> {
    if a == b || a.is_zero() || b.is_zero() {
        return Err(Error::UnsupportedCase("upper-triangular solver needs a != b, a > 0, b > 0"));
    }
    let t = SemiLinearMap::new(SemiMatrix::from_rows(vec![
        vec![a.clone(), b.clone()],
        vec![NonnegScalar::zero(), a.clone()],
    ])?);
    Ok(vec![pair(&t, a.clone(), ray(0))])
}

/// One closure probe: `u, v` expected in `V_λ`, `alpha` a scalar.
#[derive(Debug, Clone)]
pub struct EigenspaceSample {
    pub u: SemiVector,
    pub v: SemiVector,
    pub alpha: NonnegScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenspaceReport {
    pub checked: usize,
    /// Samples whose inputs were not in `V_λ`.
    pub skipped: usize,
    pub zero_member: bool,
    pub failures: Vec<String>,
}

impl EigenspaceReport {
    pub fn closed(&self) -> bool {
        self.zero_member && self.failures.is_empty()
    }
}

fn in_eigenspace(t: &SemiLinearMap, lambda: &NonnegScalar, v: &SemiVector) -> Result<bool> {
    Ok(t.apply(v)? == v.scale(lambda))
}

/// Checks that `V_λ = {v : T v = λ v}` (zero included) is closed under
/// sums and nonnegative multiples on the given samples.
pub fn eigenspace_closure_check(
    t: &SemiLinearMap,
    lambda: &NonnegScalar,
    samples: &[EigenspaceSample],
) -> Result<EigenspaceReport> {
    require_square(t.matrix())?;
    let n = t.domain_dim();
    let mut report = EigenspaceReport {
        checked: 0,
        skipped: 0,
        zero_member: in_eigenspace(t, lambda, &SemiVector::zeros(n))?,
        failures: Vec::new(),
    };
    for s in samples {
        if !in_eigenspace(t, lambda, &s.u)? || !in_eigenspace(t, lambda, &s.v)? {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let sum = s.u.add(&s.v)?;
        if !in_eigenspace(t, lambda, &sum)? {
            report.failures.push(format!("u + v = {sum} left V_{lambda}"));
        }
        let scaled = s.u.scale(&s.alpha);
        if !in_eigenspace(t, lambda, &scaled)? {
            report.failures.push(format!("{} * u = {scaled} left V_{lambda}", s.alpha));
        }
    }
    Ok(report)
}

/// Boolean pattern of `A` is primitive: some power `k <= (n-1)^2 + 1` is
/// entrywise positive.
pub fn is_primitive(a: &SemiMatrix) -> bool {
    let n = a.rows();
    let base: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| !a.get(i, j).is_zero()).collect())
        .collect();
    let mut power = base.clone();
    let bound = (n - 1) * (n - 1) + 1;
    for _ in 1..=bound {
        if power.iter().all(|row| row.iter().all(|&x| x)) {
            return true;
        }
        power = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|k| power[i][k] && base[k][j])).collect())
            .collect();
    }
    false
}

/// `|a - b|` computed as larger minus smaller.
fn gap(a: f64, b: f64) -> f64 {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Dominant eigenpair of a primitive nonnegative matrix by power iteration
/// with `‖·‖₁` normalisation.
///
/// Stops once the residual is at most `tol` and the Collatz-Wielandt
/// bracket is at most `tol * λ` wide.
///
/// ```
/// use semikit::eigen::perron_power_iteration;
/// use semikit::semimodule::m;
/// let p = perron_power_iteration(&m(&[&["2", "1"], &["1", "2"]]), 1e-12, 1000).unwrap();
/// assert!((p.value - 3.0).abs() < 1e-12);
/// assert!((p.vector[0] - 0.5).abs() < 1e-12);
/// ```
pub fn perron_power_iteration(a: &SemiMatrix, tol: f64, max_iter: usize) -> Result<PerronPair> {
    require_square(a)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
    }
    let n = a.rows();
    let af: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).to_f64()).collect())
        .collect();
    if n == 1 {
        return Ok(PerronPair {
            value: af[0][0],
            vector: vec![1.0],
            certificate: PerronCertificate {
                residual: 0.0,
                tol,
                lower: af[0][0],
                upper: af[0][0],
                iterations: 0,
            },
        });
    }
    if !is_primitive(a) {
        return Err(Error::NotPrimitive);
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        af.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    };
    let mut v = vec![1.0 / n as f64; n];
    for iter in 1..=max_iter {
        let av = apply(&v);
        // ‖v‖₁ = 1 and v > 0, so ‖Av‖₁ is a weighted mean of the ratios.
        let lambda: f64 = av.iter().sum();
        let (mut lower, mut upper) = (f64::INFINITY, 0.0f64);
        for (x, y) in av.iter().zip(&v) {
            let r = x / y;
            lower = lower.min(r);
            upper = upper.max(r);
        }
        let vmax = v.iter().cloned().fold(0.0, f64::max);
        let residual = av
            .iter()
            .zip(&v)
            .map(|(x, y)| gap(*x, lambda * y))
            .fold(0.0, f64::max)
            / vmax;
        if residual <= tol && gap(upper, lower) <= tol * lambda {
            return Ok(PerronPair {
                value: lambda,
                vector: v,
                certificate: PerronCertificate {
                    residual,
                    tol,
                    lower,
                    upper,
                    iterations: iter,
                },
            });
        }
        v = av.iter().map(|x| x / lambda).collect();
    }
    Err(Error::NoConvergence(max_iter))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalVerdict {
    /// `[T]_B^B`: column `i` holds the coordinates of `T(bᵢ)`.
    pub matrix: SemiMatrix,
    pub diagonal: bool,
    /// `Some(λ)` when `bᵢ` is an eigenvector with eigenvalue `λ`.
    pub eigenvalues: Vec<Option<NonnegScalar>>,
}

impl DiagonalVerdict {
    /// Indices of basis vectors that are not eigenvectors.
    pub fn non_eigenvectors(&self) -> Vec<usize> {
        (0..self.eigenvalues.len()).filter(|&i| self.eigenvalues[i].is_none()).collect()
    }
}

/// Computes `[T]_B^B` and decides whether it is diagonal, cross-checked
/// against eigenvector tests of the individual basis vectors.
pub fn diagonal_representation_check(t: &SemiLinearMap, basis: &SemiBasis) -> Result<DiagonalVerdict> {
    require_square(t.matrix())?;
    let n = t.domain_dim();
    if basis.dim() != n || basis.len() != n || !basis.is_independent() {
        return Err(Error::NotABasis(format!(
            "need {n} independent vectors of dimension {n}"
        )));
    }
    let mut columns = Vec::with_capacity(n);
    let mut eigenvalues = Vec::with_capacity(n);
    for (i, b) in basis.elements().iter().enumerate() {
        let image = t.apply(b)?;
        let c = coords(&image, basis).map_err(|e| match e {
            Error::NotRepresentable => Error::CoordsFailure { index: i },
            other => other,
        })?;
        columns.push(SemiVector::new(c.dense(n))?);
        let lambda = c.support.first().map_or_else(NonnegScalar::zero, |(_, x)| x.clone());
        eigenvalues.push(verify_eigenpair(t, &lambda, b)?.then_some(lambda));
    }
    let matrix = SemiMatrix::from_columns(&columns)?;
    let diagonal = matrix.is_diagonal();
    assert_eq!(
        diagonal,
        eigenvalues.iter().all(Option::is_some),
        "diagonal form disagrees with eigenvector tests"
    );
    Ok(DiagonalVerdict {
        matrix,
        diagonal,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::semimodule::{m, v};

    fn diag25() -> SemiLinearMap {
        SemiLinearMap::new(m(&[&["2", "0"], &["0", "5"]]))
    }

    #[test]
    fn verify_examples() {
        assert!(verify_eigenpair(&diag25(), &q("2"), &v(&["1", "0"])).unwrap());
        assert!(verify_eigenpair(&SemiLinearMap::identity(3), &q("1"), &v(&["1/2", "0", "7"])).unwrap());
        assert!(!verify_eigenpair(&diag25(), &q("3"), &v(&["1", "1"])).unwrap());
        assert_eq!(
            verify_eigenpair(&diag25(), &q("2"), &v(&["0", "0"])),
            Err(Error::ZeroVector)
        );
        let rect = SemiLinearMap::new(m(&[&["1", "2"]]));
        assert!(matches!(verify_eigenpair(&rect, &q("1"), &v(&["1", "0"])), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn zero_eigenvalue_on_kernel() {
        let t = SemiLinearMap::new(m(&[&["1", "0"], &["0", "0"]]));
        assert!(verify_eigenpair(&t, &q("0"), &v(&["0", "1"])).unwrap());
    }

    #[test]
    fn diagonal_solver_cases() {
        let both = solve_2x2_diagonal(&q("2"), &q("5")).unwrap();
        assert_eq!(
            both,
            vec![
                EigenPair { value: q("2"), vector: v(&["1", "0"]) },
                EigenPair { value: q("5"), vector: v(&["0", "1"]) },
            ]
        );
        assert_eq!(
            solve_2x2_diagonal(&q("3"), &q("0")).unwrap(),
            vec![EigenPair { value: q("3"), vector: v(&["1", "0"]) }]
        );
        assert_eq!(
            solve_2x2_diagonal(&q("0"), &q("7")).unwrap(),
            vec![EigenPair { value: q("7"), vector: v(&["0", "1"]) }]
        );
        assert!(solve_2x2_diagonal(&q("4"), &q("4")).is_err());
        assert!(solve_2x2_diagonal(&q("0"), &q("0")).is_err());
    }

    #[test]
    fn upper_triangular_solver_cases() {
        assert_eq!(
            solve_2x2_upper_triangular(&q("3"), &q("2")).unwrap(),
            vec![EigenPair { value: q("3"), vector: v(&["1", "0"]) }]
        );
        assert_eq!(
            solve_2x2_upper_triangular(&q("1"), &q("5")).unwrap(),
            vec![EigenPair { value: q("1"), vector: v(&["1", "0"]) }]
        );
        assert!(matches!(
            solve_2x2_upper_triangular(&q("2"), &q("2")),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(solve_2x2_upper_triangular(&q("0"), &q("2")).is_err());
    }

    #[test]
    fn eigenspace_examples() {
        let s = EigenspaceSample { u: v(&["1", "0"]), v: v(&["3", "0"]), alpha: q("2/3") };
        let r = eigenspace_closure_check(&diag25(), &q("2"), &[s]).unwrap();
        assert!(r.closed());
        assert_eq!(r.checked, 1);

        let outside = EigenspaceSample { u: v(&["1", "1"]), v: v(&["3", "0"]), alpha: q("1") };
        let r = eigenspace_closure_check(&diag25(), &q("2"), &[outside]).unwrap();
        assert_eq!((r.checked, r.skipped), (0, 1));
        assert!(r.zero_member);

        let s = EigenspaceSample { u: v(&["1", "4"]), v: v(&["0", "1/2"]), alpha: q("5") };
        assert!(eigenspace_closure_check(&SemiLinearMap::identity(2), &q("1"), &[s]).unwrap().closed());
    }

    #[test]
    fn perron_examples() {
        let p = perron_power_iteration(&m(&[&["7/2"]]), 1e-9, 10).unwrap();
        assert_eq!((p.value, p.vector.clone()), (3.5, vec![1.0]));
        let p = perron_power_iteration(&m(&[&["1", "2"], &["3", "4"]]), 1e-10, 1000).unwrap();
        let expected = (5.0 + 33f64.sqrt()) / 2.0;
        assert!((p.value - expected).abs() < 1e-9);
        assert!(p.certificate.lower <= expected + 1e-12 && expected <= p.certificate.upper + 1e-12);
        assert!(p.certificate.residual <= 1e-10);
    }

    #[test]
    fn perron_rejects_imprimitive() {
        let swap = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(perron_power_iteration(&swap, 1e-9, 100), Err(Error::NotPrimitive));
        let tri = m(&[&["1", "1"], &["0", "1"]]);
        assert_eq!(perron_power_iteration(&tri, 1e-9, 100), Err(Error::NotPrimitive));
        assert!(is_primitive(&m(&[&["0", "1"], &["1", "1"]])));
    }

    #[test]
    fn diagonal_representation_examples() {
        let r = diagonal_representation_check(&diag25(), &SemiBasis::standard(2)).unwrap();
        assert!(r.diagonal);
        assert_eq!(r.eigenvalues, vec![Some(q("2")), Some(q("5"))]);

        let t = SemiLinearMap::new(m(&[&["3", "2"], &["0", "3"]]));
        let r = diagonal_representation_check(&t, &SemiBasis::standard(2)).unwrap();
        assert!(!r.diagonal);
        assert_eq!(r.non_eigenvectors(), vec![1]);

        let b = SemiBasis::from_elements(vec![v(&["1", "0"]), v(&["1", "1"])]).unwrap();
        let r = diagonal_representation_check(&SemiLinearMap::identity(2), &b).unwrap();
        assert_eq!(r.eigenvalues, vec![Some(q("1")), Some(q("1"))]);
    }

    #[test]
    fn diagonal_representation_errors() {
        let b = SemiBasis::from_elements(vec![v(&["1", "0"]), v(&["1", "1"])]).unwrap();
        let swap = SemiLinearMap::new(m(&[&["0", "1"], &["1", "0"]]));
        // swap(1,0) = (0,1) is not a nonnegative combination of (1,0), (1,1).
        assert_eq!(
            diagonal_representation_check(&swap, &b),
            Err(Error::CoordsFailure { index: 0 })
        );
        let short = SemiBasis::from_elements(vec![v(&["1", "0"])]).unwrap();
        assert!(matches!(diagonal_representation_check(&diag25(), &short), Err(Error::NotABasis(_))));
    }
}
