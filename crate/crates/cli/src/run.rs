//! The single-shot subcommands: construct, size, bound, enumerate, verify.

use serde_json::{json, Value};

use setfam_core::bounds::{
    binom_exact, bollobas_limit, cross_easy_bound, cross_j_bound, f2s_size, f_of_z, hk_bound,
    hm_bound, kk_shadow_lb, kk_threshold_x, kz_bound, size_e_l, size_h_u, size_j_i, BoundValue,
    ExactCount,
};
use setfam_core::constructions::{e_l, f2s, full_star, h_u, j_i, t2s};
use setfam_core::oracles::{
    collect_maximal_intersecting, enumerate_minimal_tau2, verify_cor5, verify_cross, verify_hk,
    verify_lemma7, verify_thm1, verify_thm4_part1, verify_thm4_part2, CrossParams, EnumBudget,
    VerificationReport,
};
use setfam_core::{Family, Params};

use crate::manifest::{write_bytes, write_csv, ManifestBuilder};
use crate::{
    exit_code, BoundArgs, BoundName, BudgetArgs, ConstructArgs, EnumMode, EnumerateArgs,
    FamilyArgs, FamilyKind, TheoremName, VerifyArgs,
};

fn need<T>(opt: Option<T>, flag: &str) -> Result<T, String> {
    opt.ok_or_else(|| format!("missing required flag --{flag}"))
}

fn params(n: u32, k: u32) -> Result<Params, String> {
    Params::new(n, k).map_err(|e| e.to_string())
}

/// Counts that fit in u64 serialize as numbers, larger ones as decimal
/// strings.
fn exact_value(x: &ExactCount) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn bound_json(b: &BoundValue) -> Value {
    match b {
        BoundValue::Exact(v) => json!({ "value": exact_value(v) }),
        BoundValue::Real(r) => json!({ "value": r.value, "tolerance": r.tolerance }),
    }
}

pub fn budget_from(args: &BudgetArgs, seed: u64) -> EnumBudget {
    EnumBudget {
        max_families: args.max_families,
        max_nodes: Some(args.max_nodes.unwrap_or(10_000_000)),
        max_millis: Some(args.budget_ms.unwrap_or(600_000)),
        seed,
    }
}

fn build_family(args: &FamilyArgs) -> Result<(Family, String), String> {
    let built = match args.family {
        FamilyKind::Star => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            (full_star(p, args.center), format!("star({})", args.center))
        }
        FamilyKind::H => {
            let u = need(args.u, "u")?;
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            (h_u(p, u), format!("h_{u}"))
        }
        FamilyKind::J => {
            let i = need(args.i, "i")?;
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            (j_i(p, i), format!("j_{i}"))
        }
        FamilyKind::E => {
            let l = need(args.l, "l")?;
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            (e_l(p, l), format!("e_{l}"))
        }
        FamilyKind::T2s => {
            let (m, s) = (need(args.m, "m")?, need(args.s, "s")?);
            (t2s(m, s), format!("t2s(m={m},s={s})"))
        }
        FamilyKind::F2s => {
            let (m, k, s) = (need(args.m, "m")?, need(args.k, "k")?, need(args.s, "s")?);
            (f2s(m, k, s), format!("f2s(m={m},k={k},s={s})"))
        }
    };
    Ok((built.0.map_err(|e| e.to_string())?, built.1))
}

pub fn construct(args: ConstructArgs) -> Result<i32, String> {
    let (family, label) = build_family(&args.family)?;
    let mut bytes = serde_json::to_vec(&family).map_err(|e| e.to_string())?;
    bytes.push(b'\n');
    write_bytes(&bytes, args.out.as_deref())?;
    eprintln!(
        "{label} at (n={}, k={}): {} sets{}",
        family.n(),
        family.k(),
        family.size(),
        args.out.as_deref().map(|p| format!(" -> {p}")).unwrap_or_default()
    );
    Ok(0)
}

pub fn size(args: FamilyArgs) -> Result<i32, String> {
    let value = match args.family {
        FamilyKind::Star => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            params(n, k)?;
            binom_exact(n as i64 - 1, k as i64 - 1).map_err(|e| e.to_string())?
        }
        FamilyKind::H => size_h_u(need(args.n, "n")?, need(args.k, "k")?, need(args.u, "u")?)
            .map_err(|e| e.to_string())?,
        FamilyKind::J => size_j_i(need(args.n, "n")?, need(args.k, "k")?, need(args.i, "i")?)
            .map_err(|e| e.to_string())?,
        FamilyKind::E => size_e_l(need(args.n, "n")?, need(args.k, "k")?, need(args.l, "l")?)
            .map_err(|e| e.to_string())?,
        FamilyKind::T2s => {
            t2s(need(args.m, "m")?, need(args.s, "s")?).map_err(|e| e.to_string())?;
            ExactCount::from(2u32)
        }
        FamilyKind::F2s => f2s_size(need(args.m, "m")?, need(args.k, "k")?, need(args.s, "s")?)
            .map_err(|e| e.to_string())?,
    };
    let mut bytes = serde_json::to_vec(&json!({ "value": exact_value(&value) }))
        .map_err(|e| e.to_string())?;
    bytes.push(b'\n');
    write_bytes(&bytes, None)?;
    Ok(0)
}

pub fn bound(args: BoundArgs) -> Result<i32, String> {
    let err = |e: setfam_core::Error| e.to_string();
    let body = match args.name {
        BoundName::Hm => {
            json!({ "value": exact_value(&hm_bound(need(args.n, "n")?, need(args.k, "k")?).map_err(err)?) })
        }
        BoundName::Hk => {
            json!({ "value": exact_value(&hk_bound(need(args.n, "n")?, need(args.k, "k")?).map_err(err)?) })
        }
        BoundName::Kz => bound_json(
            &kz_bound(need(args.n, "n")?, need(args.k, "k")?, need(args.u, "u")?).map_err(err)?,
        ),
        BoundName::FOfZ => {
            let v = f_of_z(
                need(args.m, "m")?,
                need(args.k, "k")?,
                need(args.s, "s")?,
                need(args.z, "z")?,
            )
            .map_err(err)?;
            json!({ "value": exact_value(&v) })
        }
        BoundName::KkX => {
            let size = ExactCount::from(need(args.size, "size")?);
            let r = kk_threshold_x(&size, need(args.r, "r")?).map_err(err)?;
            json!({ "value": r.value, "tolerance": r.tolerance })
        }
        BoundName::KkShadow => {
            let size = ExactCount::from(need(args.size, "size")?);
            let r = kk_shadow_lb(&size, need(args.r, "r")?).map_err(err)?;
            json!({ "value": r.value, "tolerance": r.tolerance })
        }
        BoundName::CrossEasy => {
            let v = cross_easy_bound(need(args.n, "n")?, need(args.a, "a")?, need(args.b, "b")?)
                .map_err(err)?;
            json!({ "value": exact_value(&v) })
        }
        BoundName::CrossJ => {
            let v = cross_j_bound(
                need(args.n, "n")?,
                need(args.a, "a")?,
                need(args.b, "b")?,
                need(args.j, "j")?,
            )
            .map_err(err)?;
            json!({ "value": exact_value(&v) })
        }
        BoundName::Bollobas => {
            json!({ "value": exact_value(&bollobas_limit(need(args.s, "s")?).map_err(err)?) })
        }
    };
    let mut bytes = serde_json::to_vec(&body).map_err(|e| e.to_string())?;
    bytes.push(b'\n');
    write_bytes(&bytes, args.out.as_deref())?;
    Ok(0)
}

pub fn enumerate(args: EnumerateArgs) -> Result<i32, String> {
    let mb = ManifestBuilder::start();
    let (body, complete, summary) = match args.mode {
        EnumMode::Maximal => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            let budget = budget_from(&args.budget, 0);
            let (families, usage) = collect_maximal_intersecting(p, &budget, args.dedup_iso)
                .map_err(|e| e.to_string())?;
            let summary = format!(
                "maximal census at (n={}, k={}): {} families, complete={}",
                p.n(),
                p.k(),
                families.len(),
                usage.complete
            );
            let mut body = json!({
                "mode": "maximal",
                "params": { "n": p.n(), "k": p.k(), "dedup_iso": args.dedup_iso },
                "usage": usage,
                "count": families.len(),
            });
            if !args.count_only {
                body["families"] = json!(families);
            }
            (body, usage.complete, summary)
        }
        EnumMode::Tau2 => {
            let (m, s) = (need(args.m, "m")?, need(args.s, "s")?);
            let mut families = Vec::new();
            let outcome = enumerate_minimal_tau2(m, s, |h| {
                families.push(h.clone());
            })
            .map_err(|e| e.to_string())?;
            let summary = format!(
                "minimal covering-pair census at (m={m}, s={s}): {} families",
                families.len()
            );
            let mut body = json!({
                "mode": "tau2",
                "params": { "m": m, "s": s },
                "usage": outcome.usage,
                "count": families.len(),
            });
            if !args.count_only {
                body["families"] = json!(families);
            }
            (body, outcome.usage.complete, summary)
        }
    };
    mb.write_report(&body, args.out.as_deref())?;
    eprintln!("{summary}");
    Ok(if complete { 0 } else { 2 })
}

pub fn verify(args: VerifyArgs) -> Result<i32, String> {
    let mut mb = ManifestBuilder::start();
    if let Some(seed) = args.seed {
        mb.seed(seed);
    }
    let budget = budget_from(&args.budget, args.seed.unwrap_or(0));
    let err = |e: setfam_core::Error| e.to_string();
    let report: VerificationReport = match args.theorem {
        TheoremName::Thm1 => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            verify_thm1(p, need(args.u, "u")?, &budget).map_err(err)?
        }
        TheoremName::Hk => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            verify_hk(p, &budget).map_err(err)?
        }
        TheoremName::Thm4p1 => {
            let f_bytes = mb.read_input(&need(args.family, "family")?)?;
            let m_bytes = mb.read_input(&need(args.msub, "msub")?)?;
            let f: Family = serde_json::from_slice(&f_bytes).map_err(|e| e.to_string())?;
            let m_sub: Family = serde_json::from_slice(&m_bytes).map_err(|e| e.to_string())?;
            verify_thm4_part1(&f, &m_sub)
        }
        TheoremName::Thm4p2 => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            verify_thm4_part2(p, need(args.t, "t")?, &budget).map_err(err)?
        }
        TheoremName::Cor5 => {
            let p = params(need(args.n, "n")?, need(args.k, "k")?)?;
            // The stream is materialized, so default to a families cap
            // rather than the full node budget.
            let mut budget = budget;
            if budget.max_families.is_none() {
                budget.max_families = Some(100_000);
            }
            let (families, usage) =
                collect_maximal_intersecting(p, &budget, false).map_err(err)?;
            verify_cor5(p, families.iter(), usage).map_err(err)?
        }
        TheoremName::Lemma7 => {
            verify_lemma7(need(args.m, "m")?, need(args.s, "s")?, need(args.k, "k")?)
                .map_err(err)?
        }
        TheoremName::Cross => {
            let cp = CrossParams {
                n: need(args.n, "n")?,
                a: need(args.a, "a")?,
                b: need(args.b, "b")?,
            };
            let seed = args.seed.ok_or("--seed is required for randomized checks")?;
            verify_cross(cp, args.samples.unwrap_or(10_000), seed).map_err(err)?
        }
    };
    if let Some(csv_path) = &args.csv {
        write_csv(&[&report], csv_path)?;
    }
    let status = report.status;
    let summary = format!(
        "{}: {} (examined {}, checked {}, equality {}, counterexamples {})",
        report.theorem,
        serde_json::to_value(status)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        report.stats.families_examined,
        report.stats.families_checked,
        report.stats.equality_cases,
        report.counterexamples.len()
    );
    let body = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    mb.write_report(&body, args.report.as_deref())?;
    eprintln!("{summary}");
    Ok(exit_code(status))
}
