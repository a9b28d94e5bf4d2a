//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use semikit::derived::{
    bundled_metrics, category_laws_audit, preserver_falsify, pullback_seminorm, space_closure_audit,
    CandidatePreserver, DerivedFamily, FiniteSemiMetric, MetricViolation, PreserverVerdict, SemiInner, SemiNorm,
    Sublinear,
};
use semikit::eigen::{perron_power_iteration, solve_2x2_diagonal, solve_2x2_upper_triangular, verify_eigenpair};
use semikit::fuzzy::{
    admissible_audit, admissible_audit_sampled, axiom_audit_ln, ln_grid, ln_oplus, ln_scale, LnLaw, LnVector,
    Permutation,
};
use semikit::geometry::{metric, norm, norm_chain_holds, operator_norm, triangle_holds, Magnitude, NormKind};
use semikit::sample::Sampler;
use semikit::semialgebra::{
    embed_audit, inverse, inverse_laws_audit, lie_audit, BracketStructure, LieVerdict, Monomial,
};
use semikit::semilinear::SemiLinearMap;
use semikit::semimodule::{audit_laws, regularity_audit, LawSample, SemiMatrix, SemiModule, SemiVector};
use semikit::NonnegScalar;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn signed(x: &NonnegScalar) -> BigRational {
    BigRational::new(BigInt::from(x.numer()), BigInt::from(x.denom()))
}

fn scalar(x: &BigRational) -> NonnegScalar {
    x.to_string().parse().expect("nonnegative")
}

fn int(n: u64) -> NonnegScalar {
    NonnegScalar::from_integer(n)
}

fn samples<M: SemiModule>(count: usize, s: &mut Sampler, mut gen: impl FnMut(&mut Sampler) -> M) -> Vec<LawSample<M>> {
    (0..count)
        .map(|_| LawSample { u: gen(s), v: gen(s), w: gen(s), alpha: s.scalar(), beta: s.scalar() })
        .collect()
}

fn laws_hold<M: SemiModule>(label: &str, batch: &[LawSample<M>]) -> Result<(), String> {
    let r = audit_laws(batch).map_err(|e| e.to_string())?;
    ensure(r.results.len() == 9, || format!("{label}: expected nine laws"))?;
    for l in &r.results {
        ensure(l.failures == 0 && l.checked == batch.len(), || format!("{label}: {:?} {:?}", l.law, l.witness))?;
    }
    Ok(())
}

fn c1_axioms() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(1);
    for n in 1..=8 {
        laws_hold(&format!("n={n}"), &samples(10_000, &mut s, |s| s.vector(n)))?;
    }
    laws_hold("matrices", &samples(2_000, &mut s, |s| s.matrix(2, 3)))?;
    laws_hold("polynomials", &samples(2_000, &mut s, |s| s.polynomial(4)))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("9 laws x 80000 vector triples + matrices + polynomials in {t:.2?}"))
}

fn c2_regularity() -> Outcome {
    let mut s = Sampler::new(2);
    let mut total = 0;
    for n in 1..=8 {
        let c = regularity_audit(n, 1_250, &mut s);
        ensure(c.valid, || format!("n={n}: {:?}", c.witness))?;
        total += c.checked;
    }
    // Independent restatement on nonzero v: av = 0 iff a = 0, and av = bv iff a = b.
    for _ in 0..10_000 {
        let n = 1 + s.index(8);
        let v = s.nonzero_vector(n);
        let (a, b) = (s.scalar(), if s.coin(0.3) { int(0) } else { s.scalar() });
        let (av, bv) = (signed_scale(&v, &a), signed_scale(&v, &b));
        ensure(av.iter().all(Zero::is_zero) == a.is_zero(), || format!("{a} {v:?}"))?;
        ensure((av == bv) == (a == b), || format!("{a} {b} {v:?}"))?;
    }
    Ok(format!("{total} library checks + 10000 oracle instances"))
}

fn signed_scale(v: &SemiVector, a: &NonnegScalar) -> Vec<BigRational> {
    v.iter().map(|x| signed(x) * signed(a)).collect()
}

/// Eigen rays stated in the case tables: `(value, index of the unit vector)`.
fn diagonal_table(a: &NonnegScalar, b: &NonnegScalar) -> Vec<(NonnegScalar, usize)> {
    match (a.is_zero(), b.is_zero()) {
        (false, false) => vec![(a.clone(), 0), (b.clone(), 1)],
        (false, true) => vec![(a.clone(), 0)],
        (true, false) => vec![(b.clone(), 1)],
        (true, true) => unreachable!("a != b"),
    }
}

fn c3_eigen_cases() -> Outcome {
    let mut s = Sampler::new(3);
    let mut counts = [0usize; 3];
    let mut k = 0;
    while k < 500 {
        let (a, b) = match k % 3 {
            0 => (s.positive_scalar(), s.positive_scalar()),
            1 => (s.positive_scalar(), int(0)),
            _ => (int(0), s.positive_scalar()),
        };
        if a == b {
            continue;
        }
        counts[k % 3] += 1;
        k += 1;
        let diag = SemiLinearMap::new(SemiMatrix::diagonal(&[a.clone(), b.clone()]));
        let got = solve_2x2_diagonal(&a, &b).map_err(|e| e.to_string())?;
        let want = diagonal_table(&a, &b);
        ensure(got.len() == want.len(), || format!("diag({a}, {b}): {got:?}"))?;
        for (p, (lambda, i)) in got.iter().zip(&want) {
            ensure(&p.value == lambda && p.vector == SemiVector::unit(2, *i), || format!("diag({a}, {b}): {p:?}"))?;
            ensure(verify_eigenpair(&diag, &p.value, &p.vector).map_err(|e| e.to_string())?, || format!("{p:?}"))?;
        }
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let upper = SemiLinearMap::new(
            SemiMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![int(0), a.clone()]]).map_err(|e| e.to_string())?,
        );
        let got = solve_2x2_upper_triangular(&a, &b).map_err(|e| e.to_string())?;
        ensure(got.len() == 1 && got[0].value == a && got[0].vector == SemiVector::unit(2, 0), || format!("{got:?}"))?;
        ensure(verify_eigenpair(&upper, &a, &got[0].vector).map_err(|e| e.to_string())?, || "upper".into())?;
    }
    Ok(format!("{} both positive, {} with b = 0, {} with a = 0", counts[0], counts[1], counts[2]))
}

fn c4_perron() -> Outcome {
    let mut s = Sampler::new(4);
    let tol = 1e-9;
    let mut elapsed = Duration::ZERO;
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let n = 1 + k % 8;
        let a = s.positive_matrix(n, n);
        let start = Instant::now();
        let p = perron_power_iteration(&a, tol, 100_000).map_err(|e| e.to_string())?;
        elapsed += start.elapsed();
        let d = DMatrix::from_fn(n, n, |i, j| a.get(i, j).to_f64());
        let oracle = d.complex_eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max);
        let rel = (p.value - oracle).abs() / oracle;
        worst = worst.max(rel);
        ensure(rel <= 1e-9, || format!("n={n}: {} vs {oracle}", p.value))?;
        ensure(p.certificate.residual <= tol, || format!("residual {}", p.certificate.residual))?;
    }
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("100 matrices, worst relative error {worst:.1e}, {elapsed:.2?}"))
}

/// Textbook distance with signed subtraction; Euclidean returned squared.
fn textbook(x: &SemiVector, y: &SemiVector, kind: NormKind) -> BigRational {
    let d = x.iter().zip(y.iter()).map(|(a, b)| (signed(a) - signed(b)).abs());
    match kind {
        NormKind::L1 => d.sum(),
        NormKind::LInf => d.fold(BigRational::zero(), |m, t| if t > m { t } else { m }),
        NormKind::Euclidean => d.map(|t| &t * &t).sum(),
    }
}

fn agrees(x: &SemiVector, y: &SemiVector, kind: NormKind) -> Result<bool, String> {
    let got = metric(x, y, kind).map_err(|e| e.to_string())?;
    let want = scalar(&textbook(x, y, kind));
    Ok(match kind {
        NormKind::Euclidean => got.compare(&Magnitude::sqrt(want)) == Some(std::cmp::Ordering::Equal),
        _ => got == Magnitude::Exact(want),
    })
}

fn c5_metrics() -> Outcome {
    let grid: Vec<SemiVector> = (0..125u64)
        .map(|k| SemiVector::new(vec![int(k / 25), int(k / 5 % 5), int(k % 5)]).expect("grid"))
        .collect();
    let mut pairs = 0;
    for x in &grid {
        for y in &grid {
            for kind in NormKind::ALL {
                ensure(agrees(x, y, kind)?, || format!("{kind:?} {x:?} {y:?}"))?;
            }
            pairs += 1;
        }
    }
    let mut s = Sampler::new(5);
    for _ in 0..10_000 {
        let n = 1 + s.index(8);
        let (x, y) = (s.vector(n), s.vector(n));
        for kind in NormKind::ALL {
            ensure(agrees(&x, &y, kind)?, || format!("{kind:?} {x:?} {y:?}"))?;
        }
    }
    for _ in 0..10_000 {
        let n = 1 + s.index(8);
        let (x, y, z) = (s.vector(n), s.vector(n), s.vector(n));
        for kind in NormKind::ALL {
            ensure(triangle_holds(&x, &y, &z, kind).map_err(|e| e.to_string())?, || format!("{kind:?}"))?;
        }
    }
    Ok(format!("{pairs} grid pairs, 10000 random pairs, 10000 triples, 3 metrics each"))
}

fn c6_norm_chain() -> Outcome {
    let mut s = Sampler::new(6);
    for n in 1..=8 {
        for _ in 0..10_000 {
            let v = s.vector(n);
            ensure(norm_chain_holds(&v), || format!("{v:?}"))?;
            // Oracle on signed squares: m² <= s <= l² and l <= n m.
            let xs: Vec<BigRational> = v.iter().map(signed).collect();
            let m = xs.iter().cloned().fold(BigRational::zero(), |a, b| if b > a { b } else { a });
            let sq: BigRational = xs.iter().map(|x| x * x).sum();
            let l: BigRational = xs.iter().cloned().sum();
            let nn = BigRational::from_integer(BigInt::from(n));
            ensure(&m * &m <= sq && sq <= &l * &l && l <= nn * m, || format!("{v:?}"))?;
        }
    }
    Ok("80000 samples, n = 1..8".into())
}

fn cube_vertices(n: usize) -> impl Iterator<Item = SemiVector> {
    (0..1u32 << n).map(move |bits| {
        SemiVector::new((0..n).map(|i| int(u64::from(bits >> i & 1))).collect()).expect("vertex")
    })
}

fn c7_operator_norm() -> Outcome {
    let mut s = Sampler::new(7);
    let mut probes = 0;
    for k in 0..6 {
        let (r, c) = (1 + k % 4, 1 + (k + 2) % 5);
        let t = SemiLinearMap::new(s.matrix(r, c));
        let l1 = operator_norm(&t, NormKind::L1).map_err(|e| e.to_string())?;
        let brute_l1 = (0..c)
            .map(|j| norm(&t.apply(&SemiVector::unit(c, j)).expect("dims"), NormKind::L1))
            .filter_map(|m| m.as_exact().cloned())
            .max()
            .expect("nonempty");
        ensure(l1.value == Magnitude::Exact(brute_l1.clone()), || format!("l1 {:?} vs {brute_l1}", l1.value))?;
        // The linf unit ball meets the orthant in [0,1]^c, maximised at a vertex.
        let linf = operator_norm(&t, NormKind::LInf).map_err(|e| e.to_string())?;
        let brute_linf = cube_vertices(c)
            .map(|x| norm(&t.apply(&x).expect("dims"), NormKind::LInf).as_exact().cloned().expect("exact"))
            .max()
            .expect("nonempty");
        ensure(linf.value == Magnitude::Exact(brute_linf.clone()), || format!("linf {:?} vs {brute_linf}", linf.value))?;
        let l2 = operator_norm(&t, NormKind::Euclidean).map_err(|e| e.to_string())?;
        let (_, upper) = l2.bracket.ok_or("no euclidean bracket")?;
        for _ in 0..10_000 {
            let v = s.vector(c);
            let tv = t.apply(&v).map_err(|e| e.to_string())?;
            for (kind, op) in [(NormKind::L1, &brute_l1), (NormKind::LInf, &brute_linf)] {
                let (lhs, rhs) = (norm(&tv, kind), norm(&v, kind));
                let bound = op * rhs.as_exact().expect("exact");
                ensure(lhs.as_exact().expect("exact") <= &bound, || format!("{kind:?} {v:?}"))?;
            }
            let (lhs, rhs) = (norm(&tv, NormKind::Euclidean).to_f64(), norm(&v, NormKind::Euclidean).to_f64());
            ensure(lhs <= upper * rhs * (1.0 + 1e-12) + 1e-300, || format!("l2 {lhs} > {upper} * {rhs}"))?;
            probes += 1;
        }
    }
    Ok(format!("6 maps, {probes} probe vectors per norm"))
}

fn is_semimetric(t: &[Vec<NonnegScalar>]) -> bool {
    let n = t.len();
    (0..n).all(|i| t[i][i].is_zero())
        && (0..n).all(|i| (0..n).all(|j| t[i][j] == t[j][i]))
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| t[i][k] <= &t[i][j] + &t[j][k])))
}

fn sublinear_on(f: impl Fn(&SemiVector) -> NonnegScalar, s: &mut Sampler, n: usize) -> bool {
    (0..3).all(|_| {
        let (x, y, a) = (s.vector(n), s.vector(n), s.scalar());
        f(&x.add(&y).expect("dims")) <= f(&x) + f(&y) && f(&x.scale(&a)) == &a * &f(&x)
    })
}

fn inner_on(f: impl Fn(&SemiVector, &SemiVector) -> NonnegScalar, s: &mut Sampler, n: usize) -> bool {
    (0..3).all(|_| {
        let (x, y, z, a) = (s.vector(n), s.vector(n), s.vector(n), s.scalar());
        f(&x, &y) == f(&y, &x)
            && f(&x.add(&z).expect("dims"), &y) == f(&x, &y) + f(&z, &y)
            && f(&x.scale(&a), &y) == &a * &f(&x, &y)
    })
}

fn closure<F: DerivedFamily>(objects: &[F], s: &mut Sampler, mut oracle: impl FnMut(&F, &mut Sampler) -> bool) -> Result<(), String> {
    for w in objects.windows(2) {
        let l = s.scalar();
        let r = space_closure_audit(&w[0], &w[1], &l, 3, s).map_err(|e| e.to_string())?;
        ensure(r.closed(), || format!("{}: {:?} {:?}", F::NAME, r.sum, r.scaled))?;
        let sum = w[0].plus(&w[1]).map_err(|e| e.to_string())?;
        ensure(oracle(&sum, s) && oracle(&w[0].times(&l), s), || format!("{} oracle", F::NAME))?;
    }
    Ok(())
}

fn c8_derived_closure() -> Outcome {
    let mut s = Sampler::new(8);
    let dim = |s: &mut Sampler| 1 + s.index(4);
    let metrics: Vec<_> = (0..1000).map(|_| FiniteSemiMetric::random(4, &mut s)).collect();
    closure(&metrics, &mut s, |m, _| is_semimetric(m.table()))?;
    let n = dim(&mut s);
    let norms: Vec<_> = (0..1000).map(|_| SemiNorm::random(n, &mut s)).collect();
    closure(&norms, &mut s, |m, s| sublinear_on(|x| m.eval(x).expect("dims"), s, n))?;
    let n = dim(&mut s);
    let inners: Vec<_> = (0..1000).map(|_| SemiInner::random(n, &mut s)).collect();
    closure(&inners, &mut s, |p, s| inner_on(|x, y| p.eval(x, y).expect("dims"), s, n))?;
    let n = dim(&mut s);
    let subs: Vec<_> = (0..1000).map(|_| Sublinear::random(n, &mut s)).collect();
    closure(&subs, &mut s, |f, s| sublinear_on(|x| f.eval(x).expect("dims"), s, n))?;

    let bundle = bundled_metrics();
    let square = CandidatePreserver::square_on_integers(6).map_err(|e| e.to_string())?;
    let verdict = preserver_falsify(&square, &bundle).map_err(|e| e.to_string())?;
    let PreserverVerdict::Falsified { metric, violation: MetricViolation::Triangle { i, j, k, lhs, rhs } } = &verdict
    else {
        return Err(format!("t^2 not falsified by a triangle: {verdict:?}"));
    };
    // Recompute the witness from the table itself.
    let d = bundle[*metric].table();
    let sq = |x: &NonnegScalar| x * x;
    ensure(
        *lhs == sq(&d[*i][*k]) && *rhs == sq(&d[*i][*j]) + sq(&d[*j][*k]) && lhs > rhs,
        || format!("witness does not reproduce: {verdict:?}"),
    )?;
    let six = int(6);
    for f in [
        CandidatePreserver::linear(int(2), six.clone()).map_err(|e| e.to_string())?,
        CandidatePreserver::capped(int(1), six).map_err(|e| e.to_string())?,
    ] {
        let v = preserver_falsify(&f, &bundle).map_err(|e| e.to_string())?;
        ensure(!v.is_falsified(), || format!("{v:?}"))?;
        for m in &bundle {
            ensure(is_semimetric(&f.compose(m).map_err(|e| e.to_string())?), || "compose".into())?;
        }
    }
    Ok(format!("4 families x 1000 objects; t^2 witness ({i},{j},{k}): {lhs} > {rhs}; 2t and min(t,1) accepted"))
}

fn c9_category() -> Outcome {
    let mut s = Sampler::new(9);
    for _ in 0..100 {
        let d: Vec<usize> = (0..4).map(|_| 1 + s.index(4)).collect();
        let t1 = SemiLinearMap::new(s.matrix(d[0], d[1]));
        let t2 = SemiLinearMap::new(s.matrix(d[1], d[2]));
        let t3 = SemiLinearMap::new(s.matrix(d[2], d[3]));
        let norms = [SemiNorm::random(d[0], &mut s), SemiNorm::random(d[0], &mut s)];
        let l = s.scalar();
        let r = category_laws_audit(&t1, &t2, &t3, &norms, &l, 100, &mut s).map_err(|e| e.to_string())?;
        ensure(r.all_hold(), || format!("{r:?}"))?;
        let composite = t1.compose(&t2.compose(&t3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let pulled = pullback_seminorm(&norms[0], &composite).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let x = s.vector(d[3]);
            let direct = t1.apply(&t2.apply(&t3.apply(&x).expect("dims")).expect("dims")).expect("dims");
            ensure(pulled.eval(&x).expect("dims") == norms[0].eval(&direct).expect("dims"), || format!("{x:?}"))?;
        }
    }
    Ok("100 chains, 100 probes each".into())
}

/// Signed Kronecker product `A ⊗ I`, the matrix of `X ↦ A X` on row-major vec(X).
fn kron_identity(a: &SemiMatrix) -> Vec<Vec<BigRational>> {
    let n = a.rows();
    let mut out = vec![vec![BigRational::zero(); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i * n + k][j * n + k] = signed(a.get(i, j));
            }
        }
    }
    out
}

fn random_bracket(n: usize, s: &mut Sampler) -> BracketStructure {
    match s.index(3) {
        0 => BracketStructure::zero(n),
        1 => BracketStructure::single(n, s.index(n), s.index(n), s.index(n), s.positive_scalar()),
        _ => BracketStructure::random(n, s),
    }
}

fn c10_semialgebra() -> Outcome {
    let mut s = Sampler::new(10);
    for n in [2, 3] {
        let r = embed_audit(n, 500, &mut s).map_err(|e| e.to_string())?;
        ensure(r.holds() && r.additive.checked >= 500, || format!("n={n}: {r:?}"))?;
        for _ in 0..50 {
            let a = s.matrix(n, n);
            let l = semikit::semialgebra::left_regular_embed(&a).map_err(|e| e.to_string())?;
            let got: Vec<Vec<BigRational>> =
                (0..n * n).map(|i| (0..n * n).map(|j| signed(l.matrix().get(i, j))).collect()).collect();
            ensure(got == kron_identity(&a), || format!("embedding of {a:?}"))?;
        }
    }
    for _ in 0..500 {
        let n = 1 + s.index(4);
        let (u, v) = (Monomial::random(n, &mut s).matrix(), Monomial::random(n, &mut s).matrix());
        let r = inverse_laws_audit(&u, &v).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{r:?}"))?;
        // Oracle: u⁻¹ u = u u⁻¹ = I by exact products.
        let ui = inverse(&u).map_err(|e| e.to_string())?;
        let id = SemiMatrix::identity(n);
        ensure(ui.mul(&u).expect("dims") == id && u.mul(&ui).expect("dims") == id, || format!("{u:?}"))?;
    }
    let mut verdicts = [0usize; 3];
    for _ in 0..300 {
        let n = 1 + s.index(4);
        let b = random_bracket(n, &mut s);
        let all_zero = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| b.constant(i, j, k).is_zero())));
        let r = lie_audit(&b, 20, &mut s).map_err(|e| e.to_string())?;
        match &r.verdict {
            LieVerdict::Abelian => {
                ensure(all_zero, || format!("abelian verdict on nonzero constants {b:?}"))?;
                verdicts[0] += 1;
            }
            LieVerdict::AlternatingFails { v, bracket } | LieVerdict::Contradiction { v, bracket, .. } => {
                ensure(!all_zero && !bracket.is_zero(), || format!("{r:?}"))?;
                ensure(&b.bracket(v, v).map_err(|e| e.to_string())? == bracket, || format!("witness {r:?}"))?;
                verdicts[if matches!(r.verdict, LieVerdict::AlternatingFails { .. }) { 1 } else { 2 }] += 1;
            }
        }
    }
    Ok(format!(
        "embeddings 2x2 and 3x3, 500 monomial pairs, brackets: {} zero, {} alternating failures, {} contradictions",
        verdicts[0], verdicts[1], verdicts[2]
    ))
}

fn ln(xs: &[&str]) -> LnVector {
    LnVector::new(xs.iter().map(|x| x.parse().expect("literal")).collect()).expect("sorted")
}

fn c11_fuzzy() -> Outcome {
    let grid = ln_grid(2, 10);
    ensure(grid.len() == 66, || format!("{} grid vectors", grid.len()))?;
    let r = admissible_audit(&grid, &Permutation::all(2)).map_err(|e| e.to_string())?;
    ensure(r.pairs == 66 * 66 * 2 && r.totality.valid && r.refinement.valid, || format!("{r:?}"))?;
    let mut s = Sampler::new(11);
    let r5 = admissible_audit_sampled(5, 10_000, &mut s).map_err(|e| e.to_string())?;
    ensure(r5.pairs >= 10_000 && r5.totality.valid && r5.refinement.valid, || format!("{r5:?}"))?;

    let (a, b, c) = (ln(&["0.8"]), ln(&["0.5"]), ln(&["0.6"]));
    let one = ln(&["1"]);
    ensure(ln_oplus(&a, &b).expect("dims") == one && ln_oplus(&a, &c).expect("dims") == one, || "saturation".into())?;
    let half: NonnegScalar = "1/2".parse().expect("literal");
    let lhs = ln_scale(&half, &ln_oplus(&a, &a).expect("dims")).expect("r in [0,1]");
    let rhs = ln_oplus(&ln_scale(&half, &a).expect("r"), &ln_scale(&half, &a).expect("r")).expect("dims");
    ensure(lhs == ln(&["0.5"]) && rhs == ln(&["0.8"]), || format!("{lhs} vs {rhs}"))?;

    let audit = axiom_audit_ln(2, 1_000, &mut s).map_err(|e| e.to_string())?;
    let canc = audit.get(LnLaw::Cancellation);
    let dist = audit.get(LnLaw::ScalarDistributesOverVectorSum);
    let witness = |w: &Option<String>| w.clone().unwrap_or_default();
    ensure(!canc.holds && witness(&canc.witness).contains("u=(4/5, 4/5) v=(1/2, 1/2) w=(3/5, 3/5)"), || format!("{canc:?}"))?;
    ensure(!dist.holds && witness(&dist.witness).contains("u=(4/5, 4/5) v=(4/5, 4/5)"), || format!("{dist:?}"))?;
    ensure(witness(&dist.witness).contains("r=1/2"), || format!("{dist:?}"))?;
    Ok(format!("{} grid pairs, {} sampled pairs at n = 5, both saturation witnesses", r.pairs, r5.pairs))
}

fn c12_reproducible() -> Outcome {
    let run = |seed: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_semikit"))
            .args(["suite", "--seed", seed])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("suite exited {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr)))?;
        Ok(out.stdout)
    };
    let mut sizes = Vec::new();
    for seed in ["0", "12345"] {
        let (a, b) = (run(seed)?, run(seed)?);
        ensure(a == b, || format!("seed {seed}: reports differ"))?;
        sizes.push(a.len());
    }
    ensure(run("0")? != run("12345")?, || "different seeds gave identical reports".into())?;
    Ok(format!("byte-identical reports for two seeds ({} and {} bytes)", sizes[0], sizes[1]))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("axiom suite", c1_axioms),
        ("regularity", c2_regularity),
        ("eigen case tables", c3_eigen_cases),
        ("perron iteration", c4_perron),
        ("metric oracle equivalence", c5_metrics),
        ("norm equivalence chain", c6_norm_chain),
        ("operator norm", c7_operator_norm),
        ("derived-space closure", c8_derived_closure),
        ("category laws", c9_category),
        ("semi-algebra", c10_semialgebra),
        ("fuzzy layer", c11_fuzzy),
        ("reproducibility", c12_reproducible),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
