use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde_json::{json, Value};

use cyclowalk::period::{check_walk_necessary, walk_period_detailed};
use cyclowalk::walk::{angle_fraction, suggest_rational, write_probability_csv};
use cyclowalk::{
    build_blocks, char_poly_exact, evolve as run_walk, spectrum_numeric, PeriodResult, WalkSpec,
    WalkState,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_VIOLATED: u8 = 3;

/// Denominator bound and tolerance for the reported rational angles.
const MAX_DENOMINATOR: u64 = 10_000;
const RATIONAL_TOLERANCE: f64 = 1e-9;

pub struct Report {
    pub json: Value,
    pub csv: Option<String>,
    pub exit: u8,
}

fn describe(spec: &WalkSpec) -> Value {
    json!({
        "n": spec.n(),
        "shift": spec.shift().to_string(),
        "coin_level": spec.coin().level(),
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

pub fn period(spec: &WalkSpec, t_max: u64) -> Result<Report> {
    let (result, orders) = walk_period_detailed(spec, t_max)?;
    let exit = match result {
        PeriodResult::UnknownUpTo(_) => EXIT_UNKNOWN,
        _ => EXIT_OK,
    };
    let json = merge(
        serde_json::to_value(&result)?,
        merge(
            json!({ "block_orders": orders, "t_max": t_max }),
            describe(spec),
        ),
    );
    Ok(Report {
        json,
        csv: None,
        exit,
    })
}

fn suggested(angle: f64) -> Value {
    match suggest_rational(angle, MAX_DENOMINATOR, RATIONAL_TOLERANCE) {
        Some((p, 1)) => json!(p.to_string()),
        Some((p, q)) => json!(format!("{p}/{q}")),
        None => Value::Null,
    }
}

pub fn spectrum(spec: &WalkSpec) -> Result<Report> {
    let blocks = build_blocks(spec)?;
    let values = spectrum_numeric(spec)?;
    let mut csv = String::from("k,index,re,im,angle,suggested_rational\n");
    let mut worst: f64 = 0.0;
    let mut out = Vec::with_capacity(blocks.len());
    for (k, (block, eig)) in blocks.iter().zip(&values).enumerate() {
        let mut list = Vec::with_capacity(eig.len());
        for (i, z) in eig.iter().enumerate() {
            worst = worst.max((z.norm() - 1.0).abs());
            let angle = angle_fraction(*z);
            let rational = suggested(angle);
            csv.push_str(&format!(
                "{k},{i},{:.15e},{:.15e},{:.15e},{}\n",
                z.re,
                z.im,
                angle,
                rational.as_str().unwrap_or("")
            ));
            list.push(json!({
                "re": z.re,
                "im": z.im,
                "angle": angle,
                "suggested_rational": rational,
            }));
        }
        out.push(json!({
            "k": k,
            "char_poly": char_poly_exact(block),
            "eigenvalues": list,
        }));
    }
    let json = merge(
        describe(spec),
        json!({
            "level": spec.level()?,
            "blocks": out,
            "max_modulus_error": worst,
        }),
    );
    Ok(Report {
        json,
        csv: Some(csv),
        exit: EXIT_OK,
    })
}

/// `uniform` or `VERTEX:A,B,C`.
pub fn parse_initial(text: &str, n: usize) -> Result<WalkState> {
    let text = text.trim();
    if text == "uniform" {
        return Ok(WalkState::uniform(n));
    }
    let Some((vertex, weights)) = text.split_once(':') else {
        bail!("initial state must be `uniform` or `VERTEX:A,B,C`, got {text:?}");
    };
    let vertex: usize = vertex
        .trim()
        .parse()
        .with_context(|| format!("bad vertex index {vertex:?}"))?;
    let parts: Vec<&str> = weights.split(',').collect();
    if parts.len() != 3 {
        bail!("expected three chirality weights, got {}", parts.len());
    }
    let mut w = [Complex64::new(0.0, 0.0); 3];
    for (slot, p) in w.iter_mut().zip(&parts) {
        *slot = p
            .trim()
            .parse::<Complex64>()
            .map_err(|e| anyhow::anyhow!("bad weight {p:?}: {e}"))?;
    }
    Ok(WalkState::localized(n, vertex, w)?)
}

pub fn evolve(spec: &WalkSpec, initial: &str, steps: usize) -> Result<Report> {
    let start = parse_initial(initial, spec.n())?;
    let states = run_walk(spec, &start, steps)?;
    let mut buf = Vec::new();
    write_probability_csv(&mut buf, &states)?;
    let rows: Vec<Value> = states
        .iter()
        .enumerate()
        .map(|(t, s)| {
            let total = s.norm().powi(2);
            let p: Vec<Value> = (0..s.vertices())
                .map(|x| {
                    let [l, m, r] = s.vertex(x);
                    json!([l.norm_sqr(), m.norm_sqr(), r.norm_sqr()])
                })
                .collect();
            json!({ "t": t, "total": total, "probabilities": p })
        })
        .collect();
    let json = merge(describe(spec), json!({ "steps": steps, "states": rows }));
    Ok(Report {
        json,
        csv: Some(String::from_utf8(buf)?),
        exit: EXIT_OK,
    })
}

pub fn check_coin(spec: &WalkSpec, t: u64) -> Result<Report> {
    let report = check_walk_necessary(spec, t)?;
    let exit = if report.passes {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    };
    let json = merge(
        serde_json::to_value(&report)?,
        json!({ "shift": spec.shift().to_string() }),
    );
    Ok(Report {
        json,
        csv: None,
        exit,
    })
}
