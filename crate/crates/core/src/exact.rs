//! Signed rational linear algebra used internally by the exact decision
//! procedures (coordinates, cone membership, inverses).
//!
//! Nothing in here is exported: callers get back [`NonnegScalar`] values
//! and re-verify them with nonnegative arithmetic only.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::NonnegScalar;
use crate::semimodule::{SemiMatrix, SemiVector};

type Q = BigRational;

pub(crate) fn to_signed_matrix(m: &SemiMatrix) -> Vec<Vec<Q>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).as_rational().clone()).collect())
        .collect()
}

fn to_signed_vector(v: &SemiVector) -> Vec<Q> {
    v.iter().map(|x| x.as_rational().clone()).collect()
}

fn to_nonneg(xs: &[Q]) -> Option<Vec<NonnegScalar>> {
    xs.iter().map(|x| NonnegScalar::from_rational(x.clone())).collect()
}

/// Reduced row echelon form of `[a | b]` for the system `a x = b`.
pub(crate) struct Echelon {
    cols: usize,
    /// Reduced rows, one per pivot, each with its right-hand side last.
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    consistent: bool,
}

impl Echelon {
    pub(crate) fn new(a: &[Vec<Q>], b: &[Q], cols: usize) -> Self {
        let mut m: Vec<Vec<Q>> = a
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let lead = m[r][c].clone();
            for x in m[r].iter_mut() {
                *x /= &lead;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in c..=cols {
                        let t = &f * &m[r][k];
                        m[i][k] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        let consistent = m[r..].iter().all(|row| row[cols].is_zero());
        m.truncate(r);
        Echelon {
            cols,
            rows: m,
            pivots,
            consistent,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// The solution with all free variables set to zero.
    fn particular(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.cols];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            x[p] = row[self.cols].clone();
        }
        x
    }

    /// One null-space vector per free column.
    fn null_basis(&self) -> Vec<Vec<Q>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut d = vec![Q::zero(); self.cols];
                d[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    d[p] = -row[f].clone();
                }
                d
            })
            .collect()
    }
}

/// `coeffs . x <= rhs`, tagged with the original rows it was built from.
#[derive(Clone)]
struct Ineq {
    coeffs: Vec<Q>,
    rhs: Q,
    ancestors: u128,
}

impl Ineq {
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Fourier–Motzkin elimination with Chernikov pruning and witness
/// back-substitution. Returns a point satisfying every inequality, or
/// `None` when the system is infeasible.
fn fourier_motzkin(system: Vec<Ineq>, vars: usize) -> Option<Vec<Q>> {
    assert!(system.len() <= 128, "too many inequalities for ancestor tracking");
    // stages[k] holds the system over variables 0..k.
    let mut stages: Vec<Vec<Ineq>> = vec![Vec::new(); vars + 1];
    stages[vars] = prune(system)?;
    for var in (0..vars).rev() {
        let eliminated = vars - var;
        let current = &stages[var + 1];
        let mut next = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for ineq in current {
            if ineq.coeffs[var].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                neg.push(ineq);
            } else {
                next.push(ineq.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let ancestors = p.ancestors | n.ancestors;
                if ancestors.count_ones() as usize > eliminated + 1 {
                    continue;
                }
                let wp = n.coeffs[var].abs();
                let wn = p.coeffs[var].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(a, b)| a * &wp + b * &wn)
                    .collect();
                let rhs = &p.rhs * &wp + &n.rhs * &wn;
                next.push(Ineq {
                    coeffs,
                    rhs,
                    ancestors,
                });
            }
        }
        stages[var] = prune(next)?;
    }

    let mut x: Vec<Q> = Vec::with_capacity(vars);
    for var in 0..vars {
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for ineq in &stages[var + 1] {
            let a = &ineq.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let mut slack = ineq.rhs.clone();
            for (c, xv) in ineq.coeffs.iter().zip(&x) {
                slack -= c * xv;
            }
            let bound = slack / a;
            if a.is_positive() {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            } else {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            }
        }
        let zero = Q::zero();
        let value = match (lower, upper) {
            (None, None) => zero,
            (Some(l), None) => if l > zero { l } else { zero },
            (None, Some(u)) => if u < zero { u } else { zero },
            (Some(l), Some(u)) => {
                debug_assert!(l <= u);
                if l > zero {
                    l
                } else if u < zero {
                    u
                } else {
                    zero
                }
            }
        };
        x.push(value);
    }
    Some(x)
}

/// Drops trivially satisfied rows and duplicates; `None` on a row `0 <= negative`.
fn prune(system: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut out: Vec<Ineq> = Vec::with_capacity(system.len());
    for ineq in system {
        let ineq = ineq.normalized();
        if ineq.coeffs.iter().all(|c| c.is_zero()) {
            if ineq.rhs.is_negative() {
                return None;
            }
            continue;
        }
        if let Some(same) = out.iter_mut().find(|o| o.coeffs == ineq.coeffs) {
            if ineq.rhs < same.rhs
                || (ineq.rhs == same.rhs && ineq.ancestors.count_ones() < same.ancestors.count_ones())
            {
                *same = ineq;
            }
            continue;
        }
        out.push(ineq);
    }
    Some(out)
}

/// Inequalities `x(t) >= 0` where `x(t) = base + sum_f t_f dirs[f]`,
/// written as `-dirs . t <= base` per coordinate.
fn nonneg_constraints(base: &[Q], dirs: &[Vec<Q>], rows: impl Iterator<Item = usize>) -> Vec<Ineq> {
    rows.enumerate()
        .map(|(k, i)| Ineq {
            coeffs: dirs.iter().map(|d| -d[i].clone()).collect(),
            rhs: base[i].clone(),
            ancestors: 1u128 << k,
        })
        .collect()
}

fn apply_params(base: &[Q], dirs: &[Vec<Q>], t: &[Q]) -> Vec<Q> {
    let mut x = base.to_vec();
    for (d, tf) in dirs.iter().zip(t) {
        for (xi, di) in x.iter_mut().zip(d) {
            *xi += di * tf;
        }
    }
    x
}

/// Some `x >= 0` with `a x = b`, if one exists.
pub(crate) fn nonneg_solve(a: &SemiMatrix, b: &SemiVector) -> Option<Vec<NonnegScalar>> {
    let ech = Echelon::new(&to_signed_matrix(a), &to_signed_vector(b), a.cols());
    if !ech.consistent {
        return None;
    }
    let base = ech.particular();
    let dirs = ech.null_basis();
    let system = nonneg_constraints(&base, &dirs, 0..a.cols());
    let t = fourier_motzkin(system, dirs.len())?;
    let x = apply_params(&base, &dirs, &t);
    Some(to_nonneg(&x).expect("feasible point is nonnegative"))
}

/// Outcome of solving `a x = b` over `x >= 0` with a uniqueness decision.
pub(crate) enum UniqueSolve {
    None,
    /// Unique; `independent` is true when the columns of `a` are linearly
    /// independent, false when uniqueness came from an empty direction cone.
    Unique { x: Vec<NonnegScalar>, independent: bool },
    Multiple { first: Vec<NonnegScalar>, second: Vec<NonnegScalar> },
}

pub(crate) fn unique_nonneg_solve(a: &SemiMatrix, b: &SemiVector) -> UniqueSolve {
    let n = a.cols();
    let am = to_signed_matrix(a);
    let ech = Echelon::new(&am, &to_signed_vector(b), n);
    if !ech.consistent {
        return UniqueSolve::None;
    }
    if ech.rank() == n {
        return match to_nonneg(&ech.particular()) {
            Some(x) => UniqueSolve::Unique { x, independent: true },
            None => UniqueSolve::None,
        };
    }
    let Some(first) = nonneg_solve(a, b) else {
        return UniqueSolve::None;
    };
    let c0: Vec<Q> = first.iter().map(|x| x.as_rational().clone()).collect();
    let support: Vec<usize> = (0..n).filter(|&i| !c0[i].is_zero()).collect();
    let zeros: Vec<usize> = (0..n).filter(|&i| c0[i].is_zero()).collect();

    // A feasible direction d != 0 with a d = 0 and d >= 0 off the support.
    let direction = {
        let sub: Vec<Vec<Q>> = am
            .iter()
            .map(|row| support.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let rhs = vec![Q::zero(); am.len()];
        let sub_ech = Echelon::new(&sub, &rhs, support.len());
        if let Some(d_s) = sub_ech.null_basis().into_iter().next() {
            let mut d = vec![Q::zero(); n];
            for (k, &j) in support.iter().enumerate() {
                d[j] = d_s[k].clone();
            }
            Some(d)
        } else {
            let dirs = Echelon::new(&am, &vec![Q::zero(); am.len()], n).null_basis();
            let zero_base = vec![Q::zero(); n];
            let mut system = nonneg_constraints(&zero_base, &dirs, zeros.iter().copied());
            let total: Vec<Q> = (0..dirs.len())
                .map(|f| zeros.iter().map(|&i| dirs[f][i].clone()).sum())
                .collect();
            let k = system.len();
            system.push(Ineq {
                coeffs: total.clone(),
                rhs: Q::one(),
                ancestors: 1u128 << k,
            });
            system.push(Ineq {
                coeffs: total.iter().map(|c| -c.clone()).collect(),
                rhs: -Q::one(),
                ancestors: 1u128 << (k + 1),
            });
            fourier_motzkin(system, dirs.len()).map(|t| apply_params(&zero_base, &dirs, &t))
        }
    };
    let Some(d) = direction else {
        return UniqueSolve::Unique { x: first, independent: false };
    };

    let step = support
        .iter()
        .filter(|&&i| d[i].is_negative())
        .map(|&i| &c0[i] / d[i].abs())
        .min()
        .map(|m| m / Q::from_integer(2.into()))
        .unwrap_or_else(Q::one);
    let second: Vec<Q> = c0.iter().zip(&d).map(|(c, di)| c + di * &step).collect();
    let second = to_nonneg(&second).expect("step keeps the point nonnegative");
    UniqueSolve::Multiple { first, second }
}

pub(crate) fn column_rank(a: &SemiMatrix) -> usize {
    Echelon::new(&to_signed_matrix(a), &vec![Q::zero(); a.rows()], a.cols()).rank()
}

/// The signed inverse of a square matrix, if it is nonsingular.
pub(crate) fn signed_inverse(a: &SemiMatrix) -> Option<Vec<Vec<Q>>> {
    let n = a.rows();
    let am = to_signed_matrix(a);
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Q> = (0..n).map(|i| if i == j { Q::one() } else { Q::zero() }).collect();
        let ech = Echelon::new(&am, &e, n);
        if !ech.consistent || ech.rank() < n {
            return None;
        }
        columns.push(ech.particular());
    }
    Some((0..n).map(|i| (0..n).map(|j| columns[j][i].clone()).collect()).collect())
}

/// The inverse as a nonnegative matrix, when the signed inverse exists and
/// has no negative entry.
pub(crate) fn nonneg_inverse(a: &SemiMatrix) -> Option<SemiMatrix> {
    let inv = signed_inverse(a)?;
    let n = a.rows();
    let entries: Option<Vec<NonnegScalar>> =
        inv.into_iter().flatten().map(NonnegScalar::from_rational).collect();
    Some(SemiMatrix::new(n, n, entries?).expect("square inverse"))
}
