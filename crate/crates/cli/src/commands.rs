use std::fmt::Write as _;

use chromatic_core::sequence::{
    count_real_roots_nonpositive, is_log_concave, is_pf_up_to_order, is_q_log_convex, newton_inequalities,
};
use chromatic_core::stirling::bell_sequence;
use chromatic_core::stirling::identities::verify_identity;
use chromatic_core::{
    BigInt, Error, Family, IdentityId, IdentityParams, IntegerPolynomial, QlcDirection, SequenceVerdict,
    VerificationReport,
};
use serde_json::{json, Value};

use crate::render::{csv_field, csv_triples, join, json as pretty, padded};
use crate::source::{self, SourceArgs};
use crate::{usage, AlphaMethod, Ctx, Failure, Format, Outcome, PropertyName};

pub fn poly(ctx: &Ctx, spec: &str) -> Result<Outcome, Failure> {
    let g = ctx.graph(spec)?;
    let res = ctx.engine.analyze(&g)?;
    let text = match ctx.global.format {
        Format::Text => format!("{}; ff: {}; chi={}\n", res.poly, res.alpha, res.chromatic_number),
        Format::Json => {
            let mut v = serde_json::to_value(&res)?;
            v["spec"] = json!(spec);
            v["order"] = json!(g.order());
            pretty(&v)?
        }
        Format::Csv => {
            let alpha = padded(res.alpha.coeffs(), g.order() + 1);
            csv_triples([(g.order(), alpha.as_slice())])
        }
    };
    Ok(Outcome::ok(text))
}

pub fn alpha(ctx: &Ctx, spec: &str, method: AlphaMethod) -> Result<Outcome, Failure> {
    let g = ctx.graph(spec)?;
    let n = g.order();
    let alpha = match method {
        AlphaMethod::Dc => padded(ctx.engine.alpha_coeffs(&g)?.coeffs(), n + 1),
        AlphaMethod::Fd => (0..=n)
            .map(|k| ctx.engine.alpha_via_finite_difference(&g, k))
            .collect::<Result<_, _>>()?,
        AlphaMethod::Oracle => ctx.oracle.independent_partition_counts(&g)?,
    };
    let text = match ctx.global.format {
        Format::Text => format!("{}\n", join(&alpha)),
        Format::Json => {
            let strings: Vec<String> = alpha.iter().map(ToString::to_string).collect();
            pretty(&json!({ "spec": spec, "order": n, "alpha": strings }))?
        }
        Format::Csv => csv_triples([(n, alpha.as_slice())]),
    };
    Ok(Outcome::ok(text))
}

pub fn stirling(ctx: &Ctx, family: &Family, n_max: usize) -> Result<Outcome, Failure> {
    let table = ctx.table(family, n_max)?;
    let text = match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            for (n, row) in table.rows().iter().enumerate() {
                writeln!(out, "n={n}: {}", join(row)).expect("writing to a String");
            }
            out
        }
        Format::Json => {
            let mut s = table.to_json()?;
            s.push('\n');
            s
        }
        Format::Csv => csv_triples(table.rows().iter().map(Vec::as_slice).enumerate()),
    };
    Ok(Outcome::ok(text))
}

fn select(id: &str, use_amended: bool) -> Result<Vec<IdentityId>, Failure> {
    let ids: Vec<IdentityId> = match id.trim().to_ascii_lowercase().as_str() {
        "all" => IdentityId::all().to_vec(),
        "catalog" => IdentityId::catalog().to_vec(),
        "amended" => IdentityId::amended().to_vec(),
        _ => vec![id.parse()?],
    };
    if !use_amended {
        return Ok(ids);
    }
    let mut out = Vec::new();
    for id in ids.into_iter().map(|id| id.amended_form().unwrap_or(id)) {
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

fn report_text(r: &VerificationReport, out: &mut String) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    write!(out, "{} {status} checked={}", r.identity, r.checked).expect("writing to a String");
    if !r.passed() {
        write!(out, " failures={}", r.failures_total).expect("writing to a String");
    }
    out.push('\n');
    if let Some(c) = r.counterexamples.first() {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "  counterexample {}: lhs={} rhs={}", params.join(" "), c.lhs, c.rhs)
            .expect("writing to a String");
    }
}

pub fn verify(
    ctx: &Ctx,
    id: &str,
    r: Option<Vec<usize>>,
    nmax: Option<usize>,
    quick: bool,
    use_amended: bool,
) -> Result<Outcome, Failure> {
    let single = id.parse::<IdentityId>().is_ok();
    let ids = select(id, use_amended)?;
    let mut params = if quick { IdentityParams::quick() } else { IdentityParams::desk() };
    params = params.with_seed(ctx.global.seed);
    if let Some(r) = r {
        params = params.with_r(r);
    }
    if let Some(n) = nmax {
        params.n_max = n;
    }
    let reports: Vec<VerificationReport> = ids
        .iter()
        .map(|&id| verify_identity(id, &params))
        .collect::<Result<_, _>>()?;
    let passed = reports.iter().all(VerificationReport::passed);
    let text = match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                report_text(r, &mut out);
            }
            if reports.len() > 1 {
                let ok = reports.iter().filter(|r| r.passed()).count();
                let status = if passed { "PASS" } else { "FAIL" };
                writeln!(out, "summary: {status} {ok}/{} identities hold", reports.len())
                    .expect("writing to a String");
            }
            out
        }
        Format::Json if single && !use_amended => pretty(&serde_json::to_value(&reports[0])?)?,
        Format::Json => pretty(&serde_json::to_value(&reports)?)?,
        Format::Csv => {
            let mut out = String::from("identity,passed,checked,failures\n");
            for r in &reports {
                writeln!(out, "{},{},{},{}", r.identity, r.passed(), r.checked, r.failures_total)
                    .expect("writing to a String");
            }
            out
        }
    };
    Ok(Outcome { text, passed })
}

pub fn check(
    ctx: &Ctx,
    property: PropertyName,
    src: &SourceArgs,
    order: usize,
    pad: usize,
    reversed: bool,
) -> Result<Outcome, Failure> {
    let items = source::resolve(ctx, src, property == PropertyName::Qlc)?.items;
    if items.is_empty() {
        return Err(usage("the source produced no sequences"));
    }
    let verdicts: Vec<(Option<usize>, SequenceVerdict)> = if property == PropertyName::Qlc {
        let polys: Vec<IntegerPolynomial> = items.into_iter().map(|(_, c)| IntegerPolynomial::new(c)).collect();
        let direction = if reversed { QlcDirection::Reversed } else { QlcDirection::Standard };
        vec![(None, is_q_log_convex(&polys, direction)?)]
    } else {
        items
            .into_iter()
            .map(|(label, seq)| decide(property, &seq, order, pad).map(|v| (label, v)))
            .collect::<Result<_, _>>()?
    };
    let passed = verdicts.iter().all(|(_, v)| v.holds);
    let text = match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            for (label, v) in &verdicts {
                if verdicts.len() > 1 {
                    if let Some(n) = label {
                        write!(out, "n={n}: ").expect("writing to a String");
                    }
                }
                out.push_str(if v.holds { "PASS " } else { "FAIL " });
                write!(out, "{}", v.property).expect("writing to a String");
                if let Some(w) = &v.witness {
                    write!(out, " witness {w}").expect("writing to a String");
                }
                out.push('\n');
            }
            if verdicts.len() > 1 {
                let ok = verdicts.iter().filter(|(_, v)| v.holds).count();
                let status = if passed { "PASS" } else { "FAIL" };
                writeln!(out, "summary: {status} {ok}/{} sequences", verdicts.len()).expect("writing to a String");
            }
            out
        }
        Format::Json if verdicts.len() == 1 => pretty(&serde_json::to_value(&verdicts[0].1)?)?,
        Format::Json => {
            let list = verdicts
                .iter()
                .map(|(label, v)| {
                    let mut value = serde_json::to_value(v)?;
                    value["n"] = json!(label);
                    Ok(value)
                })
                .collect::<Result<Vec<Value>, serde_json::Error>>()?;
            pretty(&Value::Array(list))?
        }
        Format::Csv => {
            let mut out = String::from("n,property,holds,witness\n");
            for (label, v) in &verdicts {
                let n = label.map(|n| n.to_string()).unwrap_or_default();
                let w = v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                writeln!(out, "{n},{},{},{}", v.property, v.holds, csv_field(&w)).expect("writing to a String");
            }
            out
        }
    };
    Ok(Outcome { text, passed })
}

fn decide(property: PropertyName, seq: &[BigInt], order: usize, pad: usize) -> Result<SequenceVerdict, Error> {
    match property {
        PropertyName::Lc => is_log_concave(seq),
        PropertyName::Pf => is_pf_up_to_order(seq, order, pad),
        PropertyName::Newton => newton_inequalities(seq),
        PropertyName::Realroots => count_real_roots_nonpositive(&IntegerPolynomial::new(seq.to_vec())),
        PropertyName::Qlc => unreachable!("handled over the whole sequence"),
    }
}

pub fn bell(ctx: &Ctx, r: &[usize], n_max: usize) -> Result<Outcome, Failure> {
    if n_max > ctx.global.cap_rows {
        return Err(Error::CapExceeded {
            what: "Bell polynomials",
            value: n_max,
            cap: ctx.global.cap_rows,
        }
        .into());
    }
    let seq = bell_sequence(r, n_max);
    let text = match ctx.global.format {
        Format::Text => {
            let mut out = String::new();
            for (n, p) in seq.polys.iter().enumerate() {
                writeln!(out, "n={n}: {p}").expect("writing to a String");
            }
            out
        }
        Format::Json => pretty(&serde_json::to_value(&seq)?)?,
        Format::Csv => csv_triples(seq.polys.iter().map(IntegerPolynomial::coeffs).enumerate()),
    };
    Ok(Outcome::ok(text))
}
