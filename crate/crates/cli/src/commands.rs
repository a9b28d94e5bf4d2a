use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use semikit::derived::{
    category_laws_audit, preserver_closure_audit, preserver_falsify, space_closure_audit, AxiomCheck,
    CandidatePreserver, DerivedFamily, FiniteSemiMetric, SemiInner, SemiNorm, Sublinear,
};
use semikit::eigen::{perron_power_iteration, solve_2x2_diagonal, solve_2x2_upper_triangular, verify_eigenpair};
use semikit::fuzzy::{
    admissible_audit, admissible_audit_sampled, axiom_audit_ln, ln_grid, mcdm_rank, LnAuditReport, LnLaw, LnVector,
    Permutation,
};
use semikit::geometry::{
    fn_metric, metric, norm, norm_equivalence_audit, operator_norm, seq_metric, EventuallyConstSeq, Magnitude,
    NormKind, PiecewiseLinearFn, SeqSpace,
};
use semikit::sample::Sampler;
use semikit::semialgebra::{embed_audit, hom_verify, left_regular_embed, lie_audit, AlgebraHom, BracketStructure, LieVerdict};
use semikit::semilinear::SemiLinearMap;
use semikit::semimodule::{audit_laws, regularity_audit, LawReport, LawSample, SemiMatrix, SemiModule};
use semikit::{Error, NonnegScalar};

use crate::input::{read_json, read_matrix};
use crate::report::{Check, Provenance, Report};
use crate::{AlgebraCommand, AuditArgs, AxiomArgs, Cli, CliError, Command, EigenArgs, Family, Kind, McdmCommand, Space};

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let cap = cli.max_dim as usize;
    let mut sampler = Sampler::new(cli.seed);
    let seed = cli.seed;
    match &cli.command {
        Command::Eigen(a) => eigen(a, seed, &cli.tol, cap),
        Command::Metric { kind, x, y } => metric_cmd(*kind, x, y, seed, cap),
        Command::Opnorm { kind, matrix } => opnorm(*kind, matrix, seed, cap),
        Command::Audit(a) => audit(a, seed, cap, &mut sampler),
        Command::Algebra { command } => algebra(command, seed, cap, &mut sampler),
        Command::Mcdm { command: McdmCommand::Rank { alts, weights, perm } } => {
            mcdm(alts, weights, perm.as_deref(), seed, cap)
        }
        Command::Axioms(a) => axioms(a, seed, cap, &mut sampler),
        Command::Suite => Ok(suite(seed)?),
    }
}

fn within_cap(found: usize, cap: usize) -> Result<(), CliError> {
    if found > cap {
        return Err(Error::DimensionCap { cap, found }.into());
    }
    Ok(())
}

fn parse_tol(text: &str) -> Result<f64, CliError> {
    match text.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(CliError::Input(format!("--tol must be a positive decimal, got {text:?}"))),
    }
}

fn axiom_check(name: impl Into<String>, c: &AxiomCheck) -> Check {
    Check::new(name, Provenance::Axiom, c.valid, c)
}

fn law_checks(prefix: &str, r: &LawReport) -> Vec<Check> {
    r.results
        .iter()
        .map(|l| {
            let name = serde_json::to_value(l.law).expect("law names serialize");
            Check::new(format!("{prefix}{}", name.as_str().unwrap_or("law")), Provenance::Axiom, l.failures == 0, l)
        })
        .collect()
}

fn magnitude_detail(kind: NormKind, m: &Magnitude) -> Value {
    json!({ "kind": kind.name(), "value": m, "display": m.to_string() })
}

fn eigen(a: &EigenArgs, seed: u64, tol: &str, cap: usize) -> Result<Report, CliError> {
    let m = read_matrix(&a.matrix)?;
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    within_cap(m.rows(), cap)?;
    let mut checks = Vec::new();
    if a.exact_2x2 {
        if m.rows() != 2 {
            return Err(Error::UnsupportedCase("the closed-form solver covers 2x2 matrices only").into());
        }
        let (p, r, s, t) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let pairs = if m.is_diagonal() {
            solve_2x2_diagonal(p, t)?
        } else if s.is_zero() && p == t {
            solve_2x2_upper_triangular(p, r)?
        } else {
            return Err(Error::UnsupportedCase("closed forms exist for diag(a, b) and [[a, b], [0, a]] only").into());
        };
        let map = SemiLinearMap::new(m.clone());
        for (i, pair) in pairs.iter().enumerate() {
            let ok = verify_eigenpair(&map, &pair.value, &pair.vector)?;
            checks.push(Check::new(format!("eigenpair[{i}]"), Provenance::ClosedForm, ok, pair));
        }
    } else {
        let tol = parse_tol(tol)?;
        let p = perron_power_iteration(&m, tol, a.max_iter)?;
        let ok = p.certificate.residual <= tol;
        checks.push(Check::new("perron", Provenance::CrossCheck, ok, &p));
    }
    Ok(Report::new("eigen", seed, checks, false))
}

enum Operand {
    Vector(semikit::semimodule::SemiVector),
    Sequence(EventuallyConstSeq),
    Function(PiecewiseLinearFn),
}

fn read_operand(path: &Path) -> Result<Operand, CliError> {
    let v: Value = read_json(path)?;
    let parse = |e: serde_json::Error| CliError::Input(format!("{}: {e}", path.display()));
    Ok(match &v {
        Value::Object(o) if o.contains_key("prefix") => Operand::Sequence(serde_json::from_value(v).map_err(parse)?),
        Value::Object(o) if o.contains_key("breakpoints") => {
            Operand::Function(serde_json::from_value(v).map_err(parse)?)
        }
        _ => Operand::Vector(serde_json::from_value(v).map_err(parse)?),
    })
}

fn metric_cmd(kind: Kind, x: &Path, y: &Path, seed: u64, cap: usize) -> Result<Report, CliError> {
    let nk: NormKind = kind.into();
    let check = match (read_operand(x)?, read_operand(y)?) {
        (Operand::Vector(a), Operand::Vector(b)) => {
            within_cap(a.dim().max(b.dim()), cap)?;
            let d = metric(&a, &b, nk)?;
            Check::new("metric", Provenance::ClosedForm, true, magnitude_detail(nk, &d))
        }
        (Operand::Sequence(a), Operand::Sequence(b)) => {
            let space = match kind {
                Kind::L1 => SeqSpace::Lp(1),
                Kind::L2 => SeqSpace::Lp(2),
                Kind::Linf => SeqSpace::Linf,
            };
            let d = seq_metric(&a, &b, space)?;
            Check::new("sequence_metric", Provenance::ClosedForm, true, magnitude_detail(nk, &d))
        }
        (Operand::Function(f), Operand::Function(g)) => {
            if kind != Kind::Linf {
                return Err(CliError::Input("functions on an interval use the sup metric: pass --kind linf".into()));
            }
            let d = fn_metric(&f, &g)?;
            Check::new("function_metric", Provenance::ClosedForm, true, json!({ "kind": "linf", "value": d }))
        }
        _ => return Err(CliError::Input("both operands must be vectors, sequences, or functions".into())),
    };
    Ok(Report::new("metric", seed, vec![check], false))
}

fn opnorm(kind: Kind, path: &Path, seed: u64, cap: usize) -> Result<Report, CliError> {
    let m = read_matrix(path)?;
    within_cap(m.rows().max(m.cols()), cap)?;
    let nk: NormKind = kind.into();
    let t = SemiLinearMap::new(m);
    let op = operator_norm(&t, nk)?;
    let mut checks = Vec::new();
    let provenance = if op.value.is_exact() { Provenance::ClosedForm } else { Provenance::CrossCheck };
    checks.push(Check::new("operator_norm", provenance, true, &op));
    if let (Some(x), Some(value)) = (&op.attained_at, op.value.as_exact()) {
        let image = norm(&t.apply(x)?, nk);
        let bound = Magnitude::Exact(value * norm(x, nk).as_exact().expect("l1 and linf are rational"));
        let ok = image.compare(&bound) == Some(std::cmp::Ordering::Equal);
        checks.push(Check::new("attained", Provenance::CrossCheck, ok, json!({ "at": x, "image_norm": image })));
    }
    Ok(Report::new("opnorm", seed, checks, false))
}

#[derive(Deserialize)]
struct FamilySpec<T> {
    objects: Vec<T>,
    #[serde(default)]
    lambdas: Vec<NonnegScalar>,
}

fn default_lambdas() -> Vec<NonnegScalar> {
    ["0", "1/2", "3"].iter().map(|s| s.parse().expect("literal")).collect()
}

/// Validates every object, then `a + b` and `λ a` for each pair and `λ`.
fn family_checks<F: DerivedFamily + Serialize>(
    objects: &[F],
    lambdas: &[NonnegScalar],
    samples: usize,
    sampler: &mut Sampler,
) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for (i, o) in objects.iter().enumerate() {
        checks.push(axiom_check(format!("{}[{i}]", F::NAME), &o.validate(samples, sampler)?));
    }
    for i in 0..objects.len() {
        for j in i..objects.len() {
            for l in lambdas {
                let r = space_closure_audit(&objects[i], &objects[j], l, samples, sampler)?;
                checks.push(Check::new(
                    format!("{}_closure[{i}+{j}, {l}]", F::NAME),
                    Provenance::Axiom,
                    r.closed(),
                    &r,
                ));
            }
        }
    }
    Ok(checks)
}

fn load_family<F: DeserializeOwned>(
    spec: Option<&Path>,
    random: impl FnMut(&mut Sampler) -> F,
    sampler: &mut Sampler,
) -> Result<(Vec<F>, Vec<NonnegScalar>), CliError> {
    match spec {
        Some(path) => {
            let s: FamilySpec<F> = read_json(path)?;
            if s.objects.is_empty() {
                return Err(Error::EmptyInput("family spec lists no objects").into());
            }
            let lambdas = if s.lambdas.is_empty() { default_lambdas() } else { s.lambdas };
            Ok((s.objects, lambdas))
        }
        None => {
            let mut random = random;
            Ok(((0..3).map(|_| random(sampler)).collect(), default_lambdas()))
        }
    }
}

fn audit(a: &AuditArgs, seed: u64, cap: usize, sampler: &mut Sampler) -> Result<Report, CliError> {
    within_cap(a.dim, cap)?;
    let n = a.dim;
    let spec = a.spec.as_deref();
    let checks = match a.family {
        Family::Semimetric => {
            let (objs, ls) = load_family(spec, |s| FiniteSemiMetric::random(n, s), sampler)?;
            objs.iter().try_for_each(|o| within_cap(o.carrier_size(), cap))?;
            family_checks(&objs, &ls, a.samples, sampler)?
        }
        Family::Seminorm => {
            let (objs, ls) = load_family(spec, |s| SemiNorm::random(n, s), sampler)?;
            for o in &objs {
                o.check()?;
                within_cap(o.dim(), cap)?;
            }
            family_checks(&objs, &ls, a.samples, sampler)?
        }
        Family::Semiinner => {
            let (objs, ls) = load_family(spec, |s| SemiInner::random(n, s), sampler)?;
            objs.iter().try_for_each(|o| within_cap(o.dim(), cap))?;
            family_checks(&objs, &ls, a.samples, sampler)?
        }
        Family::Sublinear => {
            let (objs, ls) = load_family(spec, |s| Sublinear::random(n, s), sampler)?;
            objs.iter().try_for_each(|o| within_cap(o.dim(), cap))?;
            family_checks(&objs, &ls, a.samples, sampler)?
        }
        Family::Preserver => preserver(a.function.as_deref().or(spec))?,
        Family::Category => category(spec, a.samples, cap, sampler)?,
    };
    let name = serde_json::to_value(format!("{:?}", a.family).to_lowercase()).expect("string");
    Ok(Report::new(format!("audit {}", name.as_str().unwrap_or("")), seed, checks, false))
}

#[derive(Deserialize)]
struct PreserverSpec {
    candidates: Vec<CandidatePreserver>,
    #[serde(default)]
    metrics: Option<Vec<FiniteSemiMetric>>,
    #[serde(default)]
    lambdas: Vec<NonnegScalar>,
}

fn preserver(path: Option<&Path>) -> Result<Vec<Check>, CliError> {
    let six = NonnegScalar::from_integer(6);
    let spec = match path {
        None => PreserverSpec {
            candidates: vec![
                CandidatePreserver::linear(NonnegScalar::from_integer(2), six.clone())?,
                CandidatePreserver::capped(NonnegScalar::one(), six)?,
            ],
            metrics: None,
            lambdas: Vec::new(),
        },
        Some(p) => {
            let v: Value = read_json(p)?;
            let parse = |e: serde_json::Error| CliError::Input(format!("{}: {e}", p.display()));
            if v.get("candidates").is_some() {
                serde_json::from_value(v).map_err(parse)?
            } else {
                PreserverSpec {
                    candidates: vec![serde_json::from_value(v).map_err(parse)?],
                    metrics: None,
                    lambdas: Vec::new(),
                }
            }
        }
    };
    let metrics = spec.metrics.unwrap_or_else(semikit::derived::bundled_metrics);
    let lambdas = if spec.lambdas.is_empty() { default_lambdas() } else { spec.lambdas };
    let mut checks = Vec::new();
    for (i, c) in spec.candidates.iter().enumerate() {
        let verdict = preserver_falsify(c, &metrics)?;
        checks.push(Check::new(format!("preserver[{i}]"), Provenance::Axiom, !verdict.is_falsified(), &verdict));
    }
    let closure = preserver_closure_audit(&spec.candidates, &lambdas, &metrics)?;
    checks.push(Check::new("preserver_closure", Provenance::Axiom, closure.failures.is_empty(), &closure));
    Ok(checks)
}

#[derive(Deserialize)]
struct CategorySpec {
    maps: [SemiMatrix; 3],
    norms: Vec<SemiNorm>,
    lambda: NonnegScalar,
}

fn category(spec: Option<&Path>, samples: usize, cap: usize, sampler: &mut Sampler) -> Result<Vec<Check>, CliError> {
    let chains: Vec<CategorySpec> = match spec {
        Some(p) => vec![read_json(p)?],
        None => (0..5)
            .map(|_| {
                let d: Vec<usize> = (0..4).map(|_| 1 + sampler.index(cap.min(4))).collect();
                CategorySpec {
                    maps: [sampler.matrix(d[0], d[1]), sampler.matrix(d[1], d[2]), sampler.matrix(d[2], d[3])],
                    norms: vec![SemiNorm::random(d[0], sampler), SemiNorm::random(d[0], sampler)],
                    lambda: sampler.scalar(),
                }
            })
            .collect(),
    };
    let mut checks = Vec::new();
    for (i, c) in chains.iter().enumerate() {
        for m in &c.maps {
            within_cap(m.rows().max(m.cols()), cap)?;
        }
        c.norms.iter().try_for_each(SemiNorm::check)?;
        let [t1, t2, t3] = c.maps.clone().map(SemiLinearMap::new);
        let r = category_laws_audit(&t1, &t2, &t3, &c.norms, &c.lambda, samples, sampler)?;
        checks.push(Check::new(format!("chain[{i}]"), Provenance::Axiom, r.all_hold(), &r));
    }
    Ok(checks)
}

fn algebra(cmd: &AlgebraCommand, seed: u64, cap: usize, sampler: &mut Sampler) -> Result<Report, CliError> {
    let (name, checks) = match cmd {
        AlgebraCommand::CheckHom { spec, samples, unital } => {
            let h: AlgebraHom = read_json(spec)?;
            h.check()?;
            within_cap(h.domain_order().max(h.codomain_order()), cap)?;
            let r = hom_verify(&h, *samples, *unital, sampler)?;
            let mut checks = vec![
                axiom_check("additive", &r.additive),
                axiom_check("homogeneous", &r.homogeneous),
                axiom_check("multiplicative", &r.multiplicative),
                Check::new("maps_zero", Provenance::Axiom, r.maps_zero, r.maps_zero),
            ];
            if let Some(u) = r.unital {
                checks.push(Check::new("unital", Provenance::Axiom, u, u));
            }
            ("algebra check-hom", checks)
        }
        AlgebraCommand::Embed { spec, order, samples } => {
            let element = spec.as_deref().map(read_matrix).transpose()?;
            let n = element.as_ref().map_or(*order, SemiMatrix::rows);
            within_cap(n * n, cap)?;
            let mut checks = Vec::new();
            if let Some(v) = &element {
                let l = left_regular_embed(v)?;
                let recovered = SemiMatrix::from_flat(n, n, &l.apply(&SemiMatrix::identity(n).flatten())?)?;
                checks.push(Check::new(
                    "embedding",
                    Provenance::CrossCheck,
                    &recovered == v,
                    json!({ "element": v, "matrix": l.matrix() }),
                ));
            }
            let r = embed_audit(n, *samples, sampler)?;
            checks.extend([
                axiom_check("additive", &r.additive),
                axiom_check("homogeneous", &r.homogeneous),
                axiom_check("multiplicative", &r.multiplicative),
                axiom_check("injective", &r.injective),
                Check::new("preserves_identity", Provenance::Axiom, r.preserves_identity, r.preserves_identity),
            ]);
            ("algebra embed", checks)
        }
        AlgebraCommand::LieAudit { spec, dim, samples } => {
            let b = match spec {
                Some(p) => read_json::<BracketStructure>(p)?,
                None => {
                    within_cap(*dim, cap)?;
                    BracketStructure::random(*dim, sampler)
                }
            };
            within_cap(b.dim(), cap)?;
            ("algebra lie-audit", lie_checks(&b, *samples, sampler)?)
        }
    };
    Ok(Report::new(name, seed, checks, false))
}

fn lie_checks(b: &BracketStructure, samples: usize, sampler: &mut Sampler) -> Result<Vec<Check>, CliError> {
    let r = lie_audit(b, samples, sampler)?;
    Ok(vec![
        axiom_check("alternating_sampled", &r.alternating_sampled),
        axiom_check("jacobi_sampled", &r.jacobi_sampled),
        Check::new("zero_bracket", Provenance::Axiom, matches!(r.verdict, LieVerdict::Abelian), &r.verdict),
    ])
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Alternative {
    Single(LnVector),
    Many(Vec<LnVector>),
}

fn mcdm(alts: &Path, weights: &Path, perm: Option<&str>, seed: u64, cap: usize) -> Result<Report, CliError> {
    let raw: Vec<Value> = read_json(alts)?;
    let alternatives = raw
        .into_iter()
        .map(|v| match serde_json::from_value::<Alternative>(v) {
            Ok(Alternative::Single(x)) => Ok(vec![x]),
            Ok(Alternative::Many(xs)) => Ok(xs),
            Err(_) => Err(CliError::Input(format!(
                "{}: each alternative is a sorted vector in [0,1]^n or a list of them",
                alts.display()
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let weights: Vec<NonnegScalar> = read_json(weights)?;
    let n = alternatives
        .first()
        .and_then(|a| a.first())
        .map(LnVector::dim)
        .ok_or(Error::EmptyInput("mcdm needs at least one alternative"))?;
    within_cap(n, cap)?;
    for a in &alternatives {
        for x in a {
            if x.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: x.dim() }.into());
            }
        }
    }
    let f = match perm {
        Some(p) => p.parse::<Permutation>()?,
        None => Permutation::identity(n),
    };
    let result = mcdm_rank(&alternatives, &weights, &f)?;
    let check = Check::new("ranking", Provenance::ClosedForm, true, &result);
    Ok(Report::new("mcdm rank", seed, vec![check], false))
}

fn law_samples<M: SemiModule>(samples: usize, sampler: &mut Sampler, mut gen: impl FnMut(&mut Sampler) -> M) -> Vec<LawSample<M>> {
    (0..samples)
        .map(|_| LawSample {
            u: gen(sampler),
            v: gen(sampler),
            w: gen(sampler),
            alpha: sampler.scalar(),
            beta: sampler.scalar(),
        })
        .collect()
}

fn ln_checks(r: &LnAuditReport) -> Vec<Check> {
    r.results
        .iter()
        .map(|l| {
            let name = serde_json::to_value(l.law).expect("law names serialize");
            Check::new(format!("ln_{}", name.as_str().unwrap_or("law")), Provenance::Axiom, l.holds, l)
        })
        .collect()
}

fn admissible_checks(n: usize, samples: usize, sampler: &mut Sampler) -> Result<Vec<Check>, CliError> {
    let r = if n <= 2 {
        admissible_audit(&ln_grid(n, 10), &Permutation::all(n))?
    } else {
        admissible_audit_sampled(n, samples, sampler)?
    };
    Ok(vec![
        Check::new("admissible_total", Provenance::Axiom, r.totality.valid, &r.totality),
        Check::new("admissible_refines_product_order", Provenance::Axiom, r.refinement.valid, &r.refinement),
    ])
}

fn axioms(a: &AxiomArgs, seed: u64, cap: usize, sampler: &mut Sampler) -> Result<Report, CliError> {
    if a.dim == 0 {
        return Err(CliError::Input("--dim must be at least 1".into()));
    }
    within_cap(a.dim, cap)?;
    let n = a.dim;
    let (checks, informational) = match a.space {
        Space::Rn => {
            let mut checks = law_checks("", &audit_laws(&law_samples(a.samples, sampler, |s| s.vector(n)))?);
            checks.push(axiom_check("regularity", &regularity_audit(n, a.samples, sampler)));
            (checks, false)
        }
        Space::Matrix => (law_checks("", &audit_laws(&law_samples(a.samples, sampler, |s| s.matrix(n, n)))?), false),
        Space::Poly => (law_checks("", &audit_laws(&law_samples(a.samples, sampler, |s| s.polynomial(n)))?), false),
        Space::Ln => {
            let mut checks = ln_checks(&axiom_audit_ln(n, a.samples, sampler)?);
            checks.extend(admissible_checks(n, a.samples, sampler)?);
            (checks, true)
        }
    };
    let space = match a.space {
        Space::Rn => "rn",
        Space::Matrix => "matrix",
        Space::Poly => "poly",
        Space::Ln => "ln",
    };
    Ok(Report::new(format!("axioms {space}"), seed, checks, informational))
}

/// Every randomized audit at fixed sizes.
pub fn suite(seed: u64) -> Result<Report, CliError> {
    let mut s = Sampler::new(seed);
    let mut checks = Vec::new();
    for n in 1..=4 {
        checks.extend(law_checks(&format!("rn{n}_"), &audit_laws(&law_samples(200, &mut s, |s| s.vector(n)))?));
        checks.push(axiom_check(format!("rn{n}_regularity"), &regularity_audit(n, 200, &mut s)));
    }
    checks.extend(law_checks("matrix_", &audit_laws(&law_samples(100, &mut s, |s| s.matrix(2, 2)))?));
    checks.extend(law_checks("poly_", &audit_laws(&law_samples(100, &mut s, |s| s.polynomial(3)))?));

    let eq = norm_equivalence_audit(500, 6, &mut s);
    checks.push(Check::new("norm_chain", Provenance::Axiom, eq.violations.is_empty(), &eq));
    for k in 0..5 {
        let n = 2 + k % 3;
        let a = s.positive_matrix(n, n);
        let p = perron_power_iteration(&a, 1e-9, 100_000)?;
        checks.push(Check::new(format!("perron[{k}]"), Provenance::CrossCheck, p.certificate.residual <= 1e-9, &p));
    }

    let ls = default_lambdas();
    let metrics: Vec<_> = (0..3).map(|_| FiniteSemiMetric::random(4, &mut s)).collect();
    checks.extend(family_checks(&metrics, &ls, 0, &mut s)?);
    let norms: Vec<_> = (0..3).map(|_| SemiNorm::random(3, &mut s)).collect();
    checks.extend(family_checks(&norms, &ls, 50, &mut s)?);
    let inners: Vec<_> = (0..3).map(|_| SemiInner::random(3, &mut s)).collect();
    checks.extend(family_checks(&inners, &ls, 50, &mut s)?);
    let subs: Vec<_> = (0..3).map(|_| Sublinear::random(3, &mut s)).collect();
    checks.extend(family_checks(&subs, &ls, 50, &mut s)?);
    checks.extend(preserver(None)?);
    let square = CandidatePreserver::square_on_integers(6)?;
    let verdict = preserver_falsify(&square, &semikit::derived::bundled_metrics())?;
    checks.push(Check::new("square_falsified", Provenance::ClosedForm, verdict.is_falsified(), &verdict));
    checks.extend(category(None, 20, 4, &mut s)?);

    for n in [2, 3] {
        let r = embed_audit(n, 50, &mut s)?;
        checks.push(Check::new(format!("embed{n}"), Provenance::Axiom, r.holds(), &r));
    }
    checks.extend(lie_checks(&BracketStructure::zero(3), 50, &mut s)?);
    let random_bracket = BracketStructure::random(3, &mut s);
    let r = lie_audit(&random_bracket, 20, &mut s)?;
    let consistent = match &r.verdict {
        LieVerdict::Abelian => false,
        LieVerdict::AlternatingFails { v, bracket } | LieVerdict::Contradiction { v, bracket, .. } => {
            &random_bracket.bracket(v, v)? == bracket && !bracket.is_zero()
        }
    };
    checks.push(Check::new("lie_witness", Provenance::CrossCheck, consistent || random_bracket == BracketStructure::zero(3), &r));

    let ln = axiom_audit_ln(2, 200, &mut s)?;
    let monoid = [LnLaw::AddAssociative, LnLaw::AddCommutative, LnLaw::AddIdentity, LnLaw::AddMonotone, LnLaw::ScaleMonotone];
    let monoid_ok = monoid.iter().all(|&l| ln.get(l).holds);
    checks.push(Check::new("ln_monoid_and_order_laws", Provenance::Axiom, monoid_ok, &ln));
    let findings = !ln.get(LnLaw::Cancellation).holds && !ln.get(LnLaw::ScalarDistributesOverVectorSum).holds;
    checks.push(Check::new(
        "ln_saturation_findings",
        Provenance::ClosedForm,
        findings,
        json!({
            "cancellation": ln.get(LnLaw::Cancellation),
            "scalar_distributivity": ln.get(LnLaw::ScalarDistributesOverVectorSum),
        }),
    ));
    checks.extend(admissible_checks(2, 0, &mut s)?);
    checks.extend(admissible_checks(5, 1000, &mut s)?);
    Ok(Report::new("suite", seed, checks, false))
}
