//! Subcommand implementations. Each returns a [`Report`] or an error whose
//! variant fixes the exit code.

use std::path::Path;

use num_bigint::BigInt;
use purecone_core::hilbert::{alternating_betti_poly, DimensionVector};
use purecone_core::intpoly::{
    certificate_step2, certificate_step3_at, membership, rectangle_defect, sample_d_elements,
    sampled_int_check, step3_bound, KPoly, RatFunc2,
};
use purecone_core::obstruction::{
    krull_verdict, lie_verdict, lie_verdict_for, verify_bs61, verify_bs62, LieOptions,
    SearchParams, Target, MAX_LIE_DIM,
};
use purecone_core::groupring::{
    ann_syzygy_correspondence, build_f, gr_mul, syzygy_basis, top_identity_check,
    GroupRingElement,
};
use purecone_core::pureray::{
    hk_residual, is_on_ray, primitive_point_products, primitive_point_solve, DegreeSequence,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{self, PointInput};
use crate::report::{
    degrees_value, dims_value, int_string, ints_value, membership_value, point_value, poly_value,
    ratfunc_value, valuation_value, verdict_value, Report,
};
use crate::search::{run_search, threads_from_env};
use crate::{Command, LieFlags};

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn verification_err(msg: impl Into<String>) -> CliError {
    CliError::Verification(msg.into())
}

fn lie_options(flags: &LieFlags) -> LieOptions {
    LieOptions {
        prune_lie_constraints: flags.prune_lie,
        nonnegative_quotient: flags.nonneg_quotient,
    }
}

fn options_value(opts: LieOptions) -> Value {
    json!({
        "prune_lie": opts.prune_lie_constraints,
        "nonneg_quotient": opts.nonnegative_quotient,
    })
}

pub fn dispatch(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Hk { d } => hk(d),
        Command::Obstruct { d, beta, n_vars, lie_dim, h, input, lie } => {
            let request = match input {
                Some(path) => input::parse_point_input(&input::read_text(path)?)?,
                None => PointInput {
                    d: d.clone(),
                    beta: beta
                        .as_deref()
                        .map(input::parse_big_list)
                        .transpose()?
                        .map(|b| b.iter().map(|x| Value::String(x.to_string())).collect()),
                    n_vars: *n_vars,
                    lie_dim: *lie_dim,
                },
            };
            let restrict = h
                .iter()
                .map(|s| parse_dims(s))
                .collect::<Result<Vec<_>, _>>()?;
            obstruct(&request, &restrict, lie_options(lie))
        }
        Command::Search { n, dmax, targets, threads, lie } => {
            search(*n, *dmax, targets.as_deref(), *threads, lie_options(lie))
        }
        Command::VerifyBs61 => bs61(),
        Command::VerifyBs62 => bs62(),
        Command::VerifyGroupring { input } => groupring(input),
        Command::VerifyIntd { n, decomp } => intd(*n, decomp.as_deref()),
        Command::Batch { input, lie } => batch(input, lie_options(lie)),
    }
}

fn parse_dims(s: &str) -> Result<DimensionVector, CliError> {
    let entries = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| input_err(format!("bad dimension vector {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DimensionVector::new(entries)?)
}

fn hk(d: &[i64]) -> Result<Report, CliError> {
    let degrees = DegreeSequence::new(d.to_vec())?;
    let point = primitive_point_products(&degrees);
    let solved = primitive_point_solve(&degrees)?;
    if solved != point {
        return Err(verification_err(format!(
            "product formula gives {point}, linear solve gives {solved}"
        )));
    }
    let residuals = hk_residual(&degrees, &point)?;
    if residuals.iter().any(|r| r != &BigInt::from(0)) {
        return Err(verification_err("primitive point has nonzero HK residuals"));
    }
    let canonical = degrees.canonical();
    let poly = alternating_betti_poly(&canonical, &point)?;
    let mut report = Report::new("hk", json!({ "d": degrees_value(&degrees) }));
    report.verdicts.push(json!({
        "kind": "pure_ray",
        "degrees": degrees_value(&degrees),
        "canonical_degrees": degrees_value(&canonical),
        "primitive_point": point_value(&point),
        "hk_residuals": ints_value(&residuals),
        "methods_agree": true,
    }));
    report.witness("alternating_betti_poly", poly_value(&poly));
    Ok(report)
}

fn obstruct(
    request: &PointInput,
    restrict: &[DimensionVector],
    opts: LieOptions,
) -> Result<Report, CliError> {
    let degrees = request.degrees()?;
    let point = match request.point()? {
        Some(p) => p,
        None => primitive_point_products(&degrees),
    };
    if point.len() != degrees.len() {
        return Err(input_err(format!(
            "beta has {} entries but d has {}",
            point.len(),
            degrees.len()
        )));
    }
    if !is_on_ray(&degrees, &point)? {
        return Err(input_err(format!("{point} is not on the pure ray of {degrees}")));
    }
    let codim = degrees.codim() as u32;
    let n_vars = request.n_vars.unwrap_or(codim);
    let lie_dim = request.lie_dim.unwrap_or(codim);
    if n_vars == 0 || lie_dim == 0 {
        return Err(input_err("n_vars and lie_dim must be positive"));
    }
    if lie_dim > MAX_LIE_DIM {
        return Err(input_err(format!("lie_dim must be at most {MAX_LIE_DIM}")));
    }
    for h in restrict {
        if h.total() != lie_dim {
            return Err(input_err(format!("dimension vector {h} does not sum to {lie_dim}")));
        }
    }
    let poly_ring = krull_verdict(n_vars, &point);
    let lie = if restrict.is_empty() {
        lie_verdict(&degrees, &point, lie_dim, opts)?
    } else {
        lie_verdict_for(&degrees, &point, restrict, opts)?
    };
    let inputs = json!({
        "d": degrees_value(&degrees),
        "beta": point_value(&point),
        "n_vars": n_vars,
        "lie_dim": lie_dim,
        "h": restrict.iter().map(dims_value).collect::<Vec<_>>(),
        "options": options_value(opts),
    });
    let mut report = Report::new("obstruct", inputs);
    report.verdicts.push(verdict_value("polynomial_ring", &poly_ring));
    report.verdicts.push(verdict_value("lie", &lie));
    let poly = alternating_betti_poly(&degrees.canonical(), &point)?;
    report.witness("alternating_betti_poly", poly_value(&poly));
    Ok(report)
}

fn parse_targets(text: &str) -> Result<Vec<Target>, CliError> {
    text.split(',')
        .map(|t| {
            let (kind, k) = t
                .trim()
                .split_once(':')
                .ok_or_else(|| input_err(format!("target {t:?} must look like krull:3 or lie:3")))?;
            let k: u32 = k
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| input_err(format!("bad target size in {t:?}")))?;
            match kind {
                "krull" => Ok(Target::Krull { n_vars: k }),
                "lie" => Ok(Target::Lie { dim: k }),
                _ => Err(input_err(format!("unknown target kind {kind:?}"))),
            }
        })
        .collect()
}

fn target_ring(t: &Target) -> String {
    t.to_string()
}

fn search(
    n: usize,
    d_max: i64,
    targets: Option<&str>,
    threads: Option<usize>,
    opts: LieOptions,
) -> Result<Report, CliError> {
    let mut params = SearchParams::standard(n, d_max);
    if let Some(t) = targets {
        params.targets = parse_targets(t)?;
    }
    params.options = opts;
    let threads = match threads {
        Some(0) => return Err(input_err("--threads must be positive")),
        Some(t) => Some(t),
        None => threads_from_env()?,
    };
    let outcome = run_search(&params, threads)?;
    let inputs = json!({
        "n": n,
        "dmax": d_max,
        "targets": params.targets.iter().map(target_ring).collect::<Vec<_>>(),
        "options": options_value(opts),
    });
    let mut report = Report::new("search", inputs);
    for f in &outcome.findings {
        report.verdicts.push(json!({
            "kind": "finding",
            "degrees": degrees_value(&f.degrees),
            "primitive_point": point_value(&f.point),
            "verdicts": f.verdicts.iter().map(|(t, v)| verdict_value(&target_ring(t), v)).collect::<Vec<_>>(),
        }));
    }
    report.witness("scanned", json!(outcome.scanned));
    report.witness("findings", json!(outcome.findings.len()));
    Ok(report)
}

fn bs61() -> Result<Report, CliError> {
    let cert = verify_bs61()?;
    let mut report = Report::new("verify-bs61", json!({}));
    report.verdicts.push(verdict_value("polynomial_ring", &cert.polynomial_ring));
    report.verdicts.push(verdict_value("heisenberg", &cert.heisenberg));
    report.witness("degrees", degrees_value(&cert.degrees));
    report.witness("primitive_point", point_value(&cert.point));
    report.witness("hk_residuals", ints_value(&cert.residuals));
    report.witness("P", poly_value(&cert.polynomial));
    report.witness("P_at_minus_one", int_string(&cert.value_at_minus_one));
    Ok(report)
}

fn bs62() -> Result<Report, CliError> {
    let cert = verify_bs62()?;
    let mut report = Report::new("verify-bs62", json!({}));
    report.verdicts.push(verdict_value("lie_dim_4", &cert.verdict));
    report.witness("degrees", degrees_value(&cert.degrees));
    report.witness("primitive_point", point_value(&cert.point));
    report.witness("p", poly_value(&cert.polynomial));
    report.witness("quotient", poly_value(&cert.quotient));
    report.witness("factorization", json!(format!("p = (1-t)^4 * ({})", cert.quotient)));
    report.witness("q_at_minus_one", int_string(&cert.quotient_at_minus_one));
    report.witness("q_mod_1_plus_t_plus_t2", poly_value(&cert.quotient_mod_geometric3));
    Ok(report)
}

fn element_value(e: &GroupRingElement, names: &[String]) -> Value {
    json!(e.format_with(names))
}

fn groupring(path: &Path) -> Result<Report, CliError> {
    let text = input::read_text(path)?;
    let spec = input::parse_groupring(&text)?;
    let names = &spec.variables;
    let a = &spec.generators;
    let m = a.len();
    let nvars = names.len();
    let inputs = json!({
        "variables": names,
        "m": m,
        "generators": a.iter().map(|g| g.format_with(names)).collect::<Vec<_>>(),
        "degree_bound": spec.degree_bound,
    });
    let mut report = Report::new("verify-groupring", inputs);

    let squares_vanish = (0..m).all(|i| {
        let e = GroupRingElement::epsilon(m, nvars, i);
        gr_mul(&e, &e).map(|p| p.is_zero()).unwrap_or(false)
    });
    if !squares_vanish {
        return Err(verification_err("some epsilon_i^2 is nonzero"));
    }
    let f = build_f(a)?;
    let f_squared = gr_mul(&f, &f)?;
    report.verdicts.push(json!({
        "kind": "epsilon_squares",
        "holds": squares_vanish,
        "f": element_value(&f, names),
        "f_squared_is_zero": f_squared.is_zero(),
    }));

    let mut all_hold = true;
    for bound in 0..=spec.degree_bound {
        let c = ann_syzygy_correspondence(a, bound)?;
        all_hold &= c.holds();
        report.verdicts.push(json!({
            "kind": "ann_syzygy_correspondence",
            "deg_bound": bound,
            "syzygy_dim": c.syzygy_dim,
            "ann_dim": c.ann_dim,
            "images_annihilate": c.images_annihilate,
            "images_in_span": c.images_in_span,
            "holds": c.holds(),
        }));
    }

    let syzygies = syzygy_basis(a, spec.degree_bound)?;
    let mut tops = Vec::with_capacity(syzygies.len());
    for xi in &syzygies {
        let top = top_identity_check(a, xi)?;
        all_hold &= top.equal;
        tops.push(json!({
            "xi": xi.iter().map(|p| p.format_with(names)).collect::<Vec<_>>(),
            "lhs": element_value(&top.lhs, names),
            "rhs": element_value(&top.rhs, names),
            "equal": top.equal,
        }));
    }
    report.verdicts.push(json!({
        "kind": "top_identity",
        "checked": tops.len(),
        "holds": tops.iter().all(|t| t["equal"] == json!(true)),
    }));
    report.witness("syzygy_basis", json!(tops));
    if !all_hold {
        return Err(verification_err("group-ring identities failed"));
    }
    Ok(report)
}

fn in_int_d_sampled(p: &KPoly, samples: &[RatFunc2]) -> bool {
    samples.iter().all(|x| membership(&p.eval(x)).in_d)
}

fn intd(n: u32, decomp: Option<&Path>) -> Result<Report, CliError> {
    if n == 0 {
        return Err(input_err("--n must be at least 1"));
    }
    let (source, text) = match decomp {
        Some(path) => (path.display().to_string(), input::read_text(path)?),
        None => ("bundled".to_string(), input::BUNDLED_DECOMPOSITIONS.to_string()),
    };
    let decomps = input::parse_decompositions(&text)?;
    let inputs = json!({ "n": n, "decompositions": source });
    let mut report = Report::new("verify-intd", inputs);

    let step2 = certificate_step2(n)?;
    report.verdicts.push(json!({
        "kind": "step2",
        "n": n,
        "u": ratfunc_value(&step2.u),
        "q_value": ratfunc_value(&step2.q_value),
        "g_value": ratfunc_value(&step2.g_value),
        "q_v0": valuation_value(step2.q_v0),
        "q_membership": membership_value(&step2.q_membership),
        "g_membership": membership_value(&step2.g_membership),
        "decomposition_holds": step2.decomposition_holds,
        "holds": true,
    }));

    let samples = sample_d_elements();
    let sampled = sampled_int_check(&samples);
    report.verdicts.push(json!({
        "kind": "sampled_g_in_M",
        "certificate": "sampled",
        "samples": sampled.samples,
        "in_D": sampled.in_d,
        "g_in_M": sampled.g_in_m,
        "square_plus_x_in_mT": sampled.square_plus_x_in_m,
        "holds": sampled.passed(),
    }));
    let mut failures = Vec::new();
    if !sampled.passed() {
        failures.push("sampled g(D) in M check".to_string());
    }

    for d in &decomps {
        let members_in_int_d = d
            .terms
            .iter()
            .all(|(f, h)| in_int_d_sampled(f, &samples) && in_int_d_sampled(h, &samples));
        let hs: Vec<KPoly> = d.terms.iter().flat_map(|(f, h)| [f.clone(), h.clone()]).collect();
        let n_used = n.max(step3_bound(&hs));
        let step3 = certificate_step3_at(&hs, n_used);
        let rect = rectangle_defect(&d.terms, n_used)?;
        let refuted = rect.value_in_m2 && !rect.comparison_in_m2;
        if members_in_int_d && !(refuted && step3.all_in_m()) {
            failures.push(format!("decomposition {}", d.name));
        }
        report.verdicts.push(json!({
            "kind": "rectangle_defect",
            "certificate": "given decomposition only",
            "name": d.name,
            "terms": d.terms.len(),
            "members_in_int_d_sampled": members_in_int_d,
            "n_used": n_used,
            "step3": {
                "all_in_N1": step3.all_in_n1(),
                "all_in_M": step3.all_in_m(),
                "v0": step3.records.iter().map(|r| valuation_value(r.v0)).collect::<Vec<_>>(),
                "v1": step3.records.iter().map(|r| valuation_value(r.v1)).collect::<Vec<_>>(),
            },
            "value": ratfunc_value(&rect.value),
            "value_in_M2": rect.value_in_m2,
            "comparison": ratfunc_value(&rect.comparison),
            "comparison_in_M2": rect.comparison_in_m2,
            "refuted": refuted,
        }));
    }
    report.witness("q", json!(KPoly::q().to_string()));
    report.witness("g", json!(KPoly::g().to_string()));
    if !failures.is_empty() {
        return Err(verification_err(format!("failed: {}", failures.join(", "))));
    }
    Ok(report)
}

fn batch(path: &Path, opts: LieOptions) -> Result<Report, CliError> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())?
    } else {
        input::read_text(path)?
    };
    let requests = input::parse_batch(&text)?;
    let mut report = Report::new(
        "batch",
        json!({ "lines": requests.len(), "options": options_value(opts) }),
    );
    for (i, req) in requests.iter().enumerate() {
        let one = obstruct(req, &[], opts)
            .map_err(|e| input_err(format!("entry {}: {e}", i + 1)))?;
        report.verdicts.push(json!({
            "kind": "point",
            "inputs": one.inputs,
            "verdicts": one.verdicts,
            "witnesses": one.witnesses,
        }));
    }
    Ok(report)
}
