use a3z_algebra::{expr_eval_numeric, Numeric};
use a3z_lattice::{LatticeLabel, TwistLabel};
use a3z_relations::{
    derive_evaluation, lhs_terms, theorem_rhs, uniform_evaluation, verify_relation, witten_value, Derivation, Exponent, Part,
    RelationParams, TheoremId, Verdict,
};
use a3z_series::{eval_zeta3, LatticeSeriesSpec, NumericValue, Precision, C};
use serde_json::{json, Value};

use crate::acceptance::{golden_suite, run_all};
use crate::golden::{for_derivation, for_relation, for_series, GoldenEntry};
use crate::report::{bound_text, digits, numeric_json};
use crate::{pretty, CliError, DeriveFamily, Outcome};

fn series_name<T: std::fmt::Display>(t: &[T], twist: TwistLabel, lattice: LatticeLabel) -> String {
    format!("zeta3({}, {twist}; {})", pretty::tuple(t), lattice.group_name())
}

fn params_json(p: &RelationParams) -> Value {
    json!({ "p": p.p, "q": p.q, "a": p.a, "b": p.b, "c": p.c })
}

fn precision_json(prec: &Precision) -> Value {
    json!({ "prec_bits": prec.significand_bits, "effective_bits": prec.effective_bits(), "cutoff": prec.cutoff })
}

fn value_lines(v: &NumericValue, prec: &Precision) -> String {
    let (re, im) = v.decimal(digits(prec));
    format!("  value       = {re} + {im}*i\n  error bound = {}\n", bound_text(v.error_bound()))
}

/// Relative agreement |got − want| ≤ tol·|want| + bound.
fn agrees(got: C, want: C, tol: f64, bound: f64) -> (bool, f64) {
    let dev = (got - want).abs();
    (dev <= tol * want.abs() + bound, dev)
}

fn golden_compare(g: &GoldenEntry, v: &NumericValue, prec: &Precision, tol: f64) -> Result<(String, Value, bool), CliError> {
    let c = g.constant()?;
    let closed = expr_eval_numeric(Numeric::Constant(&c), prec)?;
    let real_only = g.real_part_only();
    let got = if real_only { C::real(v.value.re) } else { v.value };
    let (ok, dev) = agrees(got, closed.value, tol, v.error_bound() + closed.error_bound());
    let what = if real_only { "real part matches" } else { "matches" };
    let mut text = if ok {
        format!("{what} {}\n", pretty::constant(&c))
    } else {
        format!("does NOT match {} (deviation {dev:.3e})\n", pretty::constant(&c))
    };
    if let Some(note) = &g.ambiguous {
        text.push_str(&format!("  note: {note}\n"));
    }
    let j = json!({ "key": g.key, "expr": g.expr, "real_part_only": real_only, "matches": ok, "deviation": bound_text(dev) });
    Ok((text, j, ok))
}

pub fn eval(t: &[f64; 6], twist: TwistLabel, lattice: LatticeLabel, golden_on: bool, prec: &Precision, tol: f64) -> Result<Outcome, CliError> {
    let v = eval_zeta3(&LatticeSeriesSpec::new(*t, twist, lattice), prec)?;
    let name = series_name(t, twist, lattice);
    let mut text = format!("{name}\n{}", value_lines(&v, prec));
    let mut ok = true;
    let mut golden = Value::Null;
    if golden_on {
        if let Some(g) = for_series(t, twist, lattice) {
            let (line, j, m) = golden_compare(g, &v, prec, tol)?;
            text.push_str(&line);
            golden = j;
            ok = m;
        }
    }
    Ok(Outcome {
        text,
        inputs: json!({
            "tuple": t.map(|x| x.to_string()),
            "twist": twist,
            "lattice": lattice,
            "precision": precision_json(prec),
            "tol": tol.to_string(),
        }),
        result: json!({ "series": name, "value": numeric_json(&v, prec), "golden": golden }),
        error_bound: Some(v.error_bound()),
        ok,
    })
}

pub fn relation(th: TheoremId, params: &RelationParams, s: Option<f64>, prec: &Precision) -> Result<Outcome, CliError> {
    let (twist, lattice) = th.context();
    let rows = lhs_terms(params);
    let mut text = format!(
        "relation {th} at (p,q,a,b,c) = ({},{},{},{},{}), twist {twist} on {}\nleft-hand side:\n",
        params.p, params.q, params.a, params.b, params.c,
        lattice.group_name()
    );
    let mut lhs = Vec::new();
    for r in &rows {
        let t = r.instantiate(params, Exponent::S);
        text.push_str(&format!("  {} zeta3{}\n", if r.sign > 0 { '+' } else { '-' }, pretty::tuple(&t)));
        lhs.push(json!({ "sign": r.sign, "tuple": t }));
    }
    let rhs = theorem_rhs(th, params)?;
    text.push_str(&format!("right-hand side:\n  {rhs}\n"));
    let mut ok = true;
    let mut golden = Value::Null;
    if let Some(g) = for_relation(th, params) {
        let same = g.shifted()? == rhs;
        ok = same;
        text.push_str(if same { "matches the recorded right-hand side\n" } else { "does NOT match the recorded right-hand side\n" });
        golden = json!({ "key": g.key, "matches": same });
    }
    let mut value = Value::Null;
    let mut bound = None;
    if let Some(s0) = s {
        let v = expr_eval_numeric(Numeric::Shifted(&rhs, s0), prec)?;
        text.push_str(&format!("right-hand side at s = {s0}:\n{}", value_lines(&v, prec)));
        value = numeric_json(&v, prec);
        bound = Some(v.error_bound());
    }
    Ok(Outcome {
        text,
        inputs: json!({ "theorem": th, "params": params_json(params), "s": s.map(|x| x.to_string()), "precision": precision_json(prec) }),
        result: json!({
            "theorem": th,
            "twist": twist,
            "lattice": lattice,
            "lhs": lhs,
            "rhs": rhs,
            "rhs_text": rhs.to_string(),
            "rhs_value": value,
            "golden": golden,
        }),
        error_bound: bound,
        ok,
    })
}

pub fn verify(th: TheoremId, params: &RelationParams, s: f64, prec: &Precision, tol: f64) -> Result<Outcome, CliError> {
    if !s.is_finite() {
        return Err(CliError::Usage(format!("--s must be finite, got {s}")));
    }
    let rep = verify_relation(th, params, s, prec, tol)?;
    let verdict = match rep.verdict {
        Verdict::Passed => "passed",
        Verdict::Failed => "failed",
        Verdict::Degenerate => "degenerate",
    };
    let (lre, lim) = rep.lhs.decimal(digits(prec));
    let (rre, rim) = rep.rhs.decimal(digits(prec));
    let bound = rep.lhs.error_bound() + rep.rhs.error_bound();
    let mut text = format!(
        "verify {th} at (p,q,a,b,c) = ({},{},{},{},{}), s = {s}\n  lhs      = {lre} + {lim}*i\n  rhs      = {rre} + {rim}*i\n  residual = {} (tolerance {tol:e}, error bound {})\n",
        params.p, params.q, params.a, params.b, params.c,
        bound_text(rep.residual),
        bound_text(bound)
    );
    text.push_str(&match rep.verdict {
        Verdict::Degenerate if rep.passed => "  verdict: degenerate, the left-hand side cancels and both sides vanish\n".to_string(),
        Verdict::Degenerate => "  verdict: degenerate, but a side does not vanish\n".to_string(),
        Verdict::Passed => "  verdict: passed\n".to_string(),
        Verdict::Failed => "  verdict: FAILED\n".to_string(),
    });
    Ok(Outcome {
        text,
        inputs: json!({ "theorem": th, "params": params_json(params), "s": s.to_string(), "tol": tol.to_string(), "precision": precision_json(prec) }),
        result: json!({
            "theorem": th,
            "params": params_json(params),
            "s": s.to_string(),
            "lhs": numeric_json(&rep.lhs, prec),
            "rhs": numeric_json(&rep.rhs, prec),
            "residual": bound_text(rep.residual),
            "tolerance": tol.to_string(),
            "passed": rep.passed,
            "verdict": verdict,
        }),
        error_bound: Some(bound),
        ok: rep.passed,
    })
}

fn derivation_source(family: DeriveFamily, d: &Derivation) -> String {
    let k = d.k;
    match family {
        DeriveFamily::Pnew => format!(
            "from {} at (p,q,a,b,c) = ({},{},{},{},{}), s = {}",
            d.theorem,
            2 * k + 1,
            2 * k,
            2 * k + 1,
            2 * k + 1,
            2 * k + 1,
            2 * k + 1
        ),
        DeriveFamily::Uniform => format!("from {} with p = q = a = b = c = s = {}", d.theorem, 2 * k),
    }
}

pub fn derive(family: DeriveFamily, k: u32, target: TheoremId, prec: &Precision, tol: f64) -> Result<Outcome, CliError> {
    if k == 0 {
        return Err(CliError::Usage("--k must be >= 1".into()));
    }
    let d = match family {
        DeriveFamily::Pnew => derive_evaluation(k, target)?,
        DeriveFamily::Uniform => uniform_evaluation(k, target)?,
    };
    let (twist, lattice) = target.context();
    let name = series_name(&d.tuple, twist, lattice);
    let real_only = d.part == Part::RealPart;
    let shown = if real_only { format!("Re {name}") } else { name.clone() };
    let mut text = format!(
        "{shown}\n  = {}\n  canonical: {}\n  {}; the left-hand side collapses to {}·{name}{}\n",
        pretty::constant(&d.value),
        d.value,
        derivation_source(family, &d),
        d.coefficient,
        if real_only { " plus its complex conjugate" } else { "" }
    );

    let series = eval_zeta3(&LatticeSeriesSpec::new(d.tuple.map(|x| x as f64), twist, lattice), prec)?;
    let closed = expr_eval_numeric(Numeric::Constant(&d.value), prec)?;
    let got = if real_only { C::real(series.value.re) } else { series.value };
    let (num_ok, dev) = agrees(got, closed.value, tol, series.error_bound() + closed.error_bound());
    let (cre, _) = closed.decimal(digits(prec));
    text.push_str(&format!(
        "  closed form = {cre}\n  series      = {}\n  {} (deviation {dev:.3e}, tolerance {tol:e})\n",
        series.decimal(digits(prec)).0,
        if num_ok { "numeric check passed" } else { "numeric check FAILED" }
    ));
    if real_only {
        text.push_str(&format!(
            "  imaginary part of the series: {:.6e} (not fixed by the relation)\n",
            series.im()
        ));
    }

    let mut ok = num_ok;
    let mut golden = Value::Null;
    if family == DeriveFamily::Pnew {
        if let Some(g) = for_derivation(target, k) {
            let same = g.constant()? == d.value;
            ok &= same;
            text.push_str(&format!("  {} recorded value {}\n", if same { "matches" } else { "does NOT match" }, g.key));
            if let Some(note) = &g.ambiguous {
                text.push_str(&format!("  note: {note}\n"));
            }
            golden = json!({ "key": g.key, "matches": same });
        }
    }
    let mut witten = Value::Null;
    if family == DeriveFamily::Uniform && target == TheoremId::A3 {
        let (_, w) = witten_value(k)?;
        text.push_str(&format!("  Witten zeta value zeta_W({}; su(4)) = 12^{}·(the above) = {}\n", 2 * k, 2 * k, pretty::constant(&w)));
        witten = json!({ "expr": w.to_string(), "value": w });
    }

    Ok(Outcome {
        text,
        inputs: json!({ "family": format!("{family:?}").to_lowercase(), "k": k, "target": target, "precision": precision_json(prec), "tol": tol.to_string() }),
        result: json!({
            "series": name,
            "tuple": d.tuple,
            "part": if real_only { "real" } else { "value" },
            "coefficient": d.coefficient,
            "expr": d.value.to_string(),
            "value": d.value,
            "closed_form_numeric": numeric_json(&closed, prec),
            "series_numeric": numeric_json(&series, prec),
            "numeric_check": { "passed": num_ok, "deviation": bound_text(dev) },
            "golden": golden,
            "witten": witten,
        }),
        error_bound: Some(series.error_bound() + closed.error_bound()),
        ok,
    })
}

pub fn suite(paper_examples: bool, only: &[u8], prec: &Precision) -> Result<Outcome, CliError> {
    if let Some(bad) = only.iter().find(|&&i| !(1..=12).contains(&i)) {
        return Err(CliError::Usage(format!("--only: no criterion {bad}")));
    }
    let inputs = json!({ "paper_examples": paper_examples, "only": only, "precision": precision_json(prec) });
    if !paper_examples {
        let checks = golden_suite();
        let mut text = String::new();
        for c in &checks {
            text.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.label));
        }
        let ok = checks.iter().all(|c| c.passed);
        let list: Vec<Value> = checks.iter().map(|c| json!({ "label": c.label, "passed": c.passed, "detail": c.detail })).collect();
        return Ok(Outcome { text, inputs, result: json!({ "checks": list, "passed": ok }), error_bound: None, ok });
    }
    let results = run_all(prec, only);
    let mut text = String::new();
    for c in &results {
        text.push_str(&c.line());
        text.push('\n');
        for f in c.failures() {
            text.push_str(&format!("    {}: {}\n", f.label, f.detail));
        }
    }
    let ok = results.iter().all(|c| c.passed());
    let failed: Vec<u8> = results.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    text.push_str(&if ok { "all criteria passed\n".to_string() } else { format!("failing criteria: {failed:?}\n") });
    let list: Vec<Value> = results
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "title": c.title,
                "passed": c.passed(),
                "seconds": format!("{:.3}", c.seconds),
                "checks": c.checks.iter().map(|k| json!({ "label": k.label, "passed": k.passed, "known_false": k.known_false, "detail": k.detail })).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome { text, inputs, result: json!({ "criteria": list, "passed": ok }), error_bound: None, ok })
}
