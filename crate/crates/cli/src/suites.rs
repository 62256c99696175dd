//! Batch replication driver: each suite re-runs one results table and
//! reports the worst outcome across its items.

use serde::Serialize;
use serde_json::json;

use setfam_core::bounds::{binom_exact, f2s_size, hk_bound, hm_bound, kz_bound, size_e_l, size_h_u, size_j_i, ExactCount};
use setfam_core::constructions::{e_l, f2s, h_u, j_i};
use setfam_core::oracles::{
    verify_cross, verify_ekr, verify_hk, verify_lemma7, verify_thm1, verify_thm4_part1,
    verify_thm4_part2, CrossParams, EnumBudget, ReportStatus, VerificationReport,
};
use setfam_core::{delete, Family, Params};

use crate::manifest::{write_csv, ManifestBuilder};
use crate::run::budget_from;
use crate::{exit_code, ReplicateArgs, SuiteName};

#[derive(Serialize)]
struct SuiteItem {
    id: String,
    status: ReportStatus,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<VerificationReport>,
}

impl SuiteItem {
    fn from_report(id: &str, report: VerificationReport) -> Self {
        let detail = format!(
            "examined {}, checked {}, equality {}, counterexamples {}",
            report.stats.families_examined,
            report.stats.families_checked,
            report.stats.equality_cases,
            report.counterexamples.len()
        );
        SuiteItem {
            id: id.to_string(),
            status: report.status,
            detail,
            report: Some(report),
        }
    }

    fn from_table(id: &str, checked: u64, mismatches: Vec<String>) -> Self {
        let status = if mismatches.is_empty() {
            ReportStatus::Verified
        } else {
            ReportStatus::Counterexample
        };
        let detail = if mismatches.is_empty() {
            format!("{checked} identities hold")
        } else {
            format!("{} mismatches: {}", mismatches.len(), mismatches.join("; "))
        };
        SuiteItem {
            id: id.to_string(),
            status,
            detail,
            report: None,
        }
    }
}

fn severity(status: ReportStatus) -> u8 {
    match status {
        ReportStatus::Verified => 0,
        ReportStatus::Inconclusive => 1,
        ReportStatus::Counterexample => 2,
    }
}

fn big(x: u64) -> ExactCount {
    ExactCount::from(x)
}

fn p(n: u32, k: u32) -> Params {
    Params::new(n, k).expect("suite parameters are valid")
}

/// One closed-form vs constructed-cardinality table per uniformity.
fn suite_formulas() -> Result<Vec<SuiteItem>, String> {
    let mut items = Vec::new();
    for k in [4u32, 5] {
        let mut checked = 0u64;
        let mut bad = Vec::new();
        let mut check = |label: String, formula: ExactCount, family: &Family| {
            checked += 1;
            if formula != big(family.size() as u64) {
                bad.push(format!("{label}: {formula} vs {}", family.size()));
            }
        };
        for n in (2 * k + 1)..=12 {
            let params = p(n, k);
            let e = |e: setfam_core::Error| e.to_string();
            for u in 2..=k {
                check(format!("h({n},{k},{u})"), size_h_u(n, k, u).map_err(e)?, &h_u(params, u).map_err(e)?);
            }
            for u in 3..=k {
                let bound = kz_bound(n, k, u as f64).map_err(e)?;
                let exact = bound.exact().ok_or("integer threshold should be exact")?.clone();
                check(format!("kz({n},{k},{u})"), exact, &h_u(params, u).map_err(e)?);
            }
            for i in 1..=k {
                check(format!("j({n},{k},{i})"), size_j_i(n, k, i).map_err(e)?, &j_i(params, i).map_err(e)?);
            }
            for l in 2..=(n - k) {
                check(format!("e({n},{k},{l})"), size_e_l(n, k, l).map_err(e)?, &e_l(params, l).map_err(e)?);
            }
            check(format!("hm({n},{k})"), hm_bound(n, k).map_err(e)?, &j_i(params, 1).map_err(e)?);
            check(format!("hk({n},{k})"), hk_bound(n, k).map_err(e)?, &j_i(params, 2).map_err(e)?);
        }
        for m in (k + 1)..=12 {
            for s in 1..=(m - k).min((m - 1) / 2) {
                let e = |e: setfam_core::Error| e.to_string();
                check(format!("f2s({m},{k},{s})"), f2s_size(m, k, s).map_err(e)?, &f2s(m, k, s).map_err(e)?);
            }
        }
        items.push(SuiteItem::from_table(&format!("formulas/k{k}"), checked, bad));
    }
    Ok(items)
}

/// Complete small censuses for the star bound and the diversity-threshold
/// bound, plus the non-star table anchor.
fn suite_hm_kz() -> Result<Vec<SuiteItem>, String> {
    let open = EnumBudget::default();
    let e = |e: setfam_core::Error| e.to_string();
    let mut items = vec![
        SuiteItem::from_report("ekr/n5k2", verify_ekr(p(5, 2), &open).map_err(e)?),
        SuiteItem::from_report("ekr/n7k3", verify_ekr(p(7, 3), &open).map_err(e)?),
        SuiteItem::from_report("thm1/n7k3u3", verify_thm1(p(7, 3), 3.0, &open).map_err(e)?),
    ];
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in [4u32, 5] {
        for n in (2 * k + 1)..=12 {
            checked += 1;
            let hm = hm_bound(n, k).map_err(e)?;
            let j1 = size_j_i(n, k, 1).map_err(e)?;
            if hm != j1 {
                bad.push(format!("hm({n},{k}) = {hm} vs {j1}"));
            }
        }
    }
    items.push(SuiteItem::from_table("hm/table", checked, bad));
    Ok(items)
}

fn suite_hk(budget: &EnumBudget) -> Result<Vec<SuiteItem>, String> {
    let report = verify_hk(p(9, 4), budget).map_err(|e| e.to_string())?;
    Ok(vec![SuiteItem::from_report("hk/n9k4", report)])
}

/// Maximal-extension spot checks on the named families whose bar-1 parts
/// are genuinely minimal, plus the budgeted census classification.
fn suite_thm4(budget: &EnumBudget) -> Result<Vec<SuiteItem>, String> {
    let e = |e: setfam_core::Error| e.to_string();
    let mut items = vec![SuiteItem::from_report(
        "thm4p2/n9k4t3",
        verify_thm4_part2(p(9, 4), 3, budget).map_err(e)?,
    )];
    let cases: [(&str, Family); 4] = [
        ("thm4p1/j2-n9k4", j_i(p(9, 4), 2).map_err(e)?),
        ("thm4p1/e2-n9k4", e_l(p(9, 4), 2).map_err(e)?),
        ("thm4p1/j2-n11k5", j_i(p(11, 5), 2).map_err(e)?),
        ("thm4p1/j3-n11k5", j_i(p(11, 5), 3).map_err(e)?),
    ];
    for (id, f) in cases {
        let m_sub = delete(&f, 1).map_err(e)?;
        items.push(SuiteItem::from_report(id, verify_thm4_part1(&f, &m_sub)));
    }
    Ok(items)
}

fn suite_lemma7() -> Result<Vec<SuiteItem>, String> {
    let e = |e: setfam_core::Error| e.to_string();
    Ok(vec![
        SuiteItem::from_report("lemma7/m8s3k4", verify_lemma7(8, 3, 4).map_err(e)?),
        SuiteItem::from_report("lemma7/m9s3k5", verify_lemma7(9, 3, 5).map_err(e)?),
    ])
}

fn suite_cross(seed: u64) -> Result<Vec<SuiteItem>, String> {
    let mut items = Vec::new();
    for (idx, (n, a, b)) in [(9u32, 4u32, 3u32), (9, 3, 3), (10, 4, 2)].iter().enumerate() {
        let report = verify_cross(
            CrossParams { n: *n, a: *a, b: *b },
            10_000,
            seed.wrapping_add(idx as u64),
        )
        .map_err(|e| e.to_string())?;
        items.push(SuiteItem::from_report(&format!("cross/n{n}a{a}b{b}"), report));
    }
    Ok(items)
}

/// The two-block chain difference table, one item per uniformity.
fn suite_chains() -> Result<Vec<SuiteItem>, String> {
    let e = |e: setfam_core::Error| e.to_string();
    let zero = big(0);
    let mut items = Vec::new();
    for k in 4u32..=8 {
        let mut checked = 0u64;
        let mut bad = Vec::new();
        for n in (2 * k)..=40 {
            let mut gaps = vec![(
                1u32,
                size_j_i(n, k, 1).map_err(e)? - size_j_i(n, k, 2).map_err(e)?,
                binom_exact(n as i64 - k as i64 - 2, k as i64 - 2).map_err(e)? - big(1),
                n >= 2 * k + 1,
            )];
            for i in 2..=(k - 1) {
                gaps.push((
                    i,
                    size_j_i(n, k, i).map_err(e)? - size_j_i(n, k, i + 1).map_err(e)?,
                    binom_exact(n as i64 - (k + i) as i64 - 1, k as i64 - 2).map_err(e)?,
                    n >= 2 * k + i - 1,
                ));
            }
            for (i, gap, expected, strict) in gaps {
                checked += 1;
                if gap != expected {
                    bad.push(format!("gap({n},{k},{i}) = {gap}, expected {expected}"));
                } else if (gap > zero) != strict {
                    bad.push(format!("strictness({n},{k},{i}) with gap {gap}"));
                }
            }
        }
        items.push(SuiteItem::from_table(&format!("chains/k{k}"), checked, bad));
    }
    Ok(items)
}

pub fn replicate(args: ReplicateArgs) -> Result<i32, String> {
    let mut mb = ManifestBuilder::start();
    if let Some(seed) = args.seed {
        mb.seed(seed);
    }
    let budget = budget_from(&args.budget, args.seed.unwrap_or(0));
    let (name, mut items) = match args.suite {
        SuiteName::Formulas => ("formulas", suite_formulas()?),
        SuiteName::HmKz => ("hm-kz", suite_hm_kz()?),
        SuiteName::Hk => ("hk", suite_hk(&budget)?),
        SuiteName::Thm4 => ("thm4", suite_thm4(&budget)?),
        SuiteName::Lemma7 => ("lemma7", suite_lemma7()?),
        SuiteName::Cross => {
            let seed = args.seed.ok_or("--seed is required for randomized suites")?;
            ("cross", suite_cross(seed)?)
        }
        SuiteName::Chains => ("chains", suite_chains()?),
    };
    items.sort_by(|a, b| a.id.cmp(&b.id));
    let worst = items
        .iter()
        .map(|it| it.status)
        .max_by_key(|s| severity(*s))
        .unwrap_or(ReportStatus::Verified);
    if let Some(csv_path) = &args.csv {
        let reports: Vec<&VerificationReport> =
            items.iter().filter_map(|it| it.report.as_ref()).collect();
        write_csv(&reports, csv_path)?;
    }
    let body = json!({
        "suite": name,
        "status": worst,
        "items": items,
    });
    mb.write_report(&body, args.report.as_deref())?;
    for line in body["items"].as_array().into_iter().flatten() {
        eprintln!(
            "  {}: {} ({})",
            line["id"].as_str().unwrap_or("?"),
            line["status"].as_str().unwrap_or("?"),
            line["detail"].as_str().unwrap_or("")
        );
    }
    eprintln!("suite {name}: {}", serde_json::to_value(worst).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default());
    Ok(exit_code(worst))
}
