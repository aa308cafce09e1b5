//! Command implementations. Each builds a [`Report`] holding every output
//! encoding; the caller prints the one selected by `--format`.

use std::io::Write;

use gramdet_core::closed::{closed_det, epi_det, trace_poly, ClosedForm};
use gramdet_core::gram::{gram_matrix, weingarten_matrix, GramInstance};
use gramdet_core::matrix::det_exact;
use gramdet_core::orthopoly::{
    hnplus_jacobi, jacobi_from_moments, moments, orthogonality_check, Family,
};
use gramdet_core::partition::{enumerate, enumerate_epi, invariant_bundle};
use gramdet_core::poly::IntPolynomial;
use gramdet_core::report::FailureReport;
use gramdet_core::{format_rational, Category};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::render::{
    aligned, closed_from_json, closed_to_json, csv_string, matrix_to_strings, poly_from_json,
    poly_to_json,
};
use crate::{Cli, CliError, Command, Format, Method, Target};

/// Enumerated moment sequences need partitions of up to `2 * depth` points.
const MAX_ENUMERATED_DEPTH: usize = 6;
const DEFAULT_HPLUS_DEPTH: usize = 8;

struct Report {
    json: Value,
    text: String,
    /// CSV records, header first.
    table: Vec<Vec<String>>,
    failures: Vec<FailureReport>,
}

impl Report {
    fn new(json: Value, text: String, table: Vec<Vec<String>>) -> Self {
        Report {
            json,
            text,
            table,
            failures: Vec::new(),
        }
    }
}

fn failure_json(f: &FailureReport) -> Value {
    json!({
        "claim": f.claim,
        "category": f.category.map(Category::name),
        "k": f.k,
        "n": f.n,
        "pi": f.pi,
        "sigma": f.sigma,
        "expected": f.expected,
        "actual": f.actual,
    })
}

/// Runs the command; `Ok(false)` means a verification failed.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    let cache = Cache::new(&cli.cache_dir, cli.no_cache);
    let report = match &cli.command {
        Command::Enumerate { category, k } => enumerate_cmd(*category, *k),
        Command::Gram { category, k, n } => gram_cmd(*category, *k, *n),
        Command::Det {
            category,
            k,
            target,
            method,
        } => det_cmd(&cache, err, *category, *k, *target, *method)?,
        Command::Weingarten { category, k, n } => weingarten_cmd(*category, *k, *n)?,
        Command::Trace { category, k } => trace_cmd(*category, *k),
        Command::Epi { category, k } => epi_cmd(*category, *k)?,
        Command::Verify { category, max_k } => verify_cmd(&cache, err, *category, *max_k)?,
        Command::Orthopoly { category, depth } => orthopoly_cmd(*category, *depth)?,
    };
    match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
            s.push('\n');
            out.write_all(s.as_bytes())?;
        }
        Format::Text => out.write_all(report.text.as_bytes())?,
        Format::Csv => out.write_all(csv_string(&report.table)?.as_bytes())?,
    }
    if report.failures.is_empty() {
        return Ok(true);
    }
    let failures: Vec<Value> = report.failures.iter().map(failure_json).collect();
    let mut s = serde_json::to_string_pretty(&json!({ "failures": failures }))
        .expect("JSON values serialize");
    s.push('\n');
    err.write_all(s.as_bytes())?;
    Ok(false)
}

fn enumerate_cmd(category: Category, k: usize) -> Report {
    let parts = enumerate(category, k);
    let texts: Vec<String> = parts.iter().map(ToString::to_string).collect();
    let json =
        json!({ "category": category.name(), "k": k, "count": parts.len(), "partitions": texts });
    let text = texts.iter().map(|t| format!("{t}\n")).collect();
    let mut table = vec![vec!["index".into(), "partition".into(), "blocks".into()]];
    for (i, p) in parts.iter().enumerate() {
        table.push(vec![
            i.to_string(),
            p.to_string(),
            p.num_blocks().to_string(),
        ]);
    }
    Report::new(json, text, table)
}

/// Matrix with a header row and a label column of partitions.
fn labeled(labels: &[String], rows: Vec<Vec<String>>) -> Vec<Vec<String>> {
    let mut table = vec![std::iter::once(String::new())
        .chain(labels.iter().cloned())
        .collect::<Vec<_>>()];
    for (label, row) in labels.iter().zip(rows) {
        table.push(std::iter::once(label.clone()).chain(row).collect());
    }
    table
}

fn matrix_report(category: Category, k: usize, n: i64, rows: Vec<Vec<String>>) -> Report {
    let labels: Vec<String> = enumerate(category, k)
        .iter()
        .map(ToString::to_string)
        .collect();
    let json = json!({
        "category": category.name(),
        "k": k,
        "n": n,
        "partitions": labels,
        "matrix": rows,
    });
    let table = labeled(&labels, rows);
    Report::new(json, aligned(&table), table)
}

fn gram_cmd(category: Category, k: usize, n: i64) -> Report {
    let g = gram_matrix(category, k, &BigInt::from(n));
    matrix_report(category, k, n, matrix_to_strings(&g))
}

fn weingarten_cmd(category: Category, k: usize, n: i64) -> Result<Report, CliError> {
    let w = weingarten_matrix(category, k, &BigInt::from(n))?;
    let rows = w
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    Ok(matrix_report(category, k, n, rows))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Closed => "closed",
        Method::Epi => "epi",
        Method::Both => "both",
    }
}

fn brute_poly(
    cache: &Cache,
    warn: &mut dyn Write,
    category: Category,
    k: usize,
) -> Result<IntPolynomial, CliError> {
    let key = format!("det-poly/v1/brute/{}/{k}", category.name());
    let (v, _) = cache.get_or_compute(&key, warn, || {
        Ok(poly_to_json(&GramInstance::new(category, k).det_poly()))
    })?;
    poly_from_json(&v)
}

fn product_form(
    cache: &Cache,
    warn: &mut dyn Write,
    category: Category,
    k: usize,
    epi: bool,
) -> Result<ClosedForm, CliError> {
    let key = format!(
        "det-poly/v1/{}/{}/{k}",
        if epi { "epi" } else { "closed" },
        category.name()
    );
    let (v, _) = cache.get_or_compute(&key, warn, || {
        let c = if epi {
            epi_det(category, k)?
        } else {
            closed_det(category, k)?
        };
        Ok(closed_to_json(&c))
    })?;
    closed_from_json(&v)
}

fn coefficient_table(header: &[&str], polys: &[&IntPolynomial]) -> Vec<Vec<String>> {
    let len = polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let mut table = vec![header.iter().map(|s| s.to_string()).collect()];
    for d in 0..len {
        table.push(
            std::iter::once(d.to_string())
                .chain(polys.iter().map(|p| p.coeff(d).to_string()))
                .collect(),
        );
    }
    table
}

fn closed_text(c: &ClosedForm) -> String {
    let factored = c.to_string();
    let expanded = c.poly.to_string();
    if factored == expanded {
        format!("{expanded}\n")
    } else {
        format!("{factored}\n= {expanded}\n")
    }
}

fn det_cmd(
    cache: &Cache,
    warn: &mut dyn Write,
    category: Category,
    k: usize,
    target: Target,
    method: Method,
) -> Result<Report, CliError> {
    let head = json!({ "category": category.name(), "k": k, "method": method_name(method) });
    let mut json = head;
    if let Some(n) = target.n {
        let n = BigInt::from(n);
        let value = |m: Method| -> Result<BigInt, CliError> {
            Ok(match m {
                Method::Brute => det_exact(&gram_matrix(category, k, &n))?,
                Method::Epi => epi_det(category, k)?.poly.eval(&n),
                _ => closed_det(category, k)?.poly.eval(&n),
            })
        };
        json["n"] = json!(n.to_string());
        if method == Method::Both {
            let (b, c) = (value(Method::Brute)?, value(Method::Closed)?);
            json["brute"] = json!(b.to_string());
            json["closed"] = json!(c.to_string());
            json["agree"] = json!(b == c);
            let table = vec![
                vec!["n".into(), "brute".into(), "closed".into()],
                vec![n.to_string(), b.to_string(), c.to_string()],
            ];
            let text = format!("brute:  {b}\nclosed: {c}\n");
            let mut r = Report::new(json, text, table);
            if b != c {
                r.failures.push(
                    FailureReport::new("closed-form determinant value", Some(category), k)
                        .at_n(&n)
                        .values(&b, &c),
                );
            }
            return Ok(r);
        }
        let v = value(method)?;
        json["value"] = json!(v.to_string());
        let table = vec![
            vec!["n".into(), "value".into()],
            vec![n.to_string(), v.to_string()],
        ];
        return Ok(Report::new(json, format!("{v}\n"), table));
    }
    Ok(match method {
        Method::Brute => {
            let p = brute_poly(cache, warn, category, k)?;
            json["poly"] = poly_to_json(&p);
            Report::new(
                json,
                format!("{p}\n"),
                coefficient_table(&["degree", "coefficient"], &[&p]),
            )
        }
        Method::Closed | Method::Epi => {
            let c = product_form(cache, warn, category, k, method == Method::Epi)?;
            json["factored"] = closed_to_json(&c);
            json["poly"] = poly_to_json(&c.poly);
            Report::new(
                json,
                closed_text(&c),
                coefficient_table(&["degree", "coefficient"], &[&c.poly]),
            )
        }
        Method::Both => {
            let b = brute_poly(cache, warn, category, k)?;
            let c = product_form(cache, warn, category, k, false)?;
            json["brute"] = poly_to_json(&b);
            json["factored"] = closed_to_json(&c);
            json["agree"] = json!(b == c.poly);
            let text = format!("brute:  {b}\nclosed: {}", closed_text(&c));
            let mut r = Report::new(
                json,
                text,
                coefficient_table(&["degree", "brute", "closed"], &[&b, &c.poly]),
            );
            if b != c.poly {
                r.failures.push(
                    FailureReport::new("closed-form determinant", Some(category), k)
                        .values(&b, &c.poly),
                );
            }
            r
        }
    })
}

fn trace_cmd(category: Category, k: usize) -> Report {
    let t = trace_poly(category, k);
    let inv = invariant_bundle(category, k);
    let m = format!("{}", inv.m);
    let json = json!({
        "category": category.name(),
        "k": k,
        "trace": poly_to_json(&t),
        "stirling": inv.stirling,
        "b": inv.b,
        "s": inv.s,
        "m": m,
        "a": inv.a,
    });
    let text = format!(
        "T(t) = {t}\nb = {}, s = {}, m = {m}, a = {}\n",
        inv.b, inv.s, inv.a
    );
    let mut table = vec![vec!["r".into(), "count".into()]];
    for (r, c) in inv.stirling.iter().enumerate() {
        table.push(vec![r.to_string(), c.to_string()]);
    }
    Report::new(json, text, table)
}

fn epi_cmd(category: Category, k: usize) -> Result<Report, CliError> {
    let groups = enumerate_epi(category, k)?;
    let texts: Vec<Vec<String>> = groups
        .iter()
        .map(|g| g.iter().map(|e| e.to_text()).collect())
        .collect();
    let counts: Vec<usize> = groups.iter().map(Vec::len).collect();
    let json = json!({ "category": category.name(), "k": k, "counts": counts, "diagrams": texts });
    let mut text = String::new();
    let mut table = vec![vec!["r".into(), "diagram".into()]];
    for (r, g) in texts.iter().enumerate() {
        text.push_str(&format!("r = {r}: {}\n", g.len()));
        for d in g {
            text.push_str(&format!("  {d}\n"));
            table.push(vec![r.to_string(), d.clone()]);
        }
    }
    Ok(Report::new(json, text, table))
}

/// Largest k checked by `verify` when `--max-k` is absent.
pub fn default_max_k(category: Category) -> usize {
    match category {
        Category::S | Category::H | Category::HStar | Category::B => 6,
        Category::O | Category::OStar | Category::BPlus => 8,
        Category::OPlus | Category::HPlus => 10,
        Category::SPlus => 7,
    }
}

fn has_epi_form(category: Category) -> bool {
    matches!(
        category,
        Category::OPlus | Category::BPlus | Category::SPlus
    )
}

fn verify_cmd(
    cache: &Cache,
    warn: &mut dyn Write,
    category: Option<Category>,
    max_k: Option<usize>,
) -> Result<Report, CliError> {
    let cats: Vec<Category> = category.map_or_else(|| Category::ALL.to_vec(), |c| vec![c]);
    let mut failures = Vec::new();
    let mut per_cat = Vec::new();
    let mut table = vec![vec![
        "category".into(),
        "k".into(),
        "closed_agrees".into(),
        "epi_agrees".into(),
    ]];
    let mut total = 0usize;
    for &cat in &cats {
        let top = max_k.unwrap_or_else(|| default_max_k(cat));
        let before = failures.len();
        for k in 1..=top {
            let brute = brute_poly(cache, warn, cat, k)?;
            let closed = product_form(cache, warn, cat, k, false)?.poly;
            let closed_ok = closed == brute;
            if !closed_ok {
                failures.push(
                    FailureReport::new("closed-form determinant", Some(cat), k)
                        .values(&brute, &closed),
                );
            }
            let epi_ok = if has_epi_form(cat) {
                let epi = product_form(cache, warn, cat, k, true)?.poly;
                if epi != brute {
                    failures.push(
                        FailureReport::new("epi-count determinant", Some(cat), k)
                            .values(&brute, &epi),
                    );
                }
                Some(epi == brute)
            } else {
                None
            };
            table.push(vec![
                cat.name().into(),
                k.to_string(),
                closed_ok.to_string(),
                epi_ok.map(|b| b.to_string()).unwrap_or_default(),
            ]);
        }
        total += top;
        per_cat.push((cat, top, failures.len() - before));
    }
    let line = |compared: usize, failed: usize| {
        format!("{compared} determinants compared, {failed} failures")
    };
    let text = if let [(_, top, failed)] = per_cat[..] {
        format!("{}\n", line(top, failed))
    } else {
        let mut s: String = per_cat
            .iter()
            .map(|(c, top, f)| format!("{}: {}\n", c.name(), line(*top, *f)))
            .collect();
        s.push_str(&format!("total: {}\n", line(total, failures.len())));
        s
    };
    let json = json!({
        "categories": per_cat.iter().map(|(c, top, f)| json!({
            "category": c.name(),
            "max_k": top,
            "compared": top,
            "failures": f,
        })).collect::<Vec<_>>(),
        "compared": total,
        "failures": failures.len(),
    });
    let mut r = Report::new(json, text, table);
    r.failures = failures;
    Ok(r)
}

fn orthopoly_cmd(category: Option<Category>, depth: Option<usize>) -> Result<Report, CliError> {
    match category {
        None | Some(Category::HPlus) => hplus_table(depth.unwrap_or(DEFAULT_HPLUS_DEPTH)),
        Some(cat) => family_table(cat, depth.unwrap_or(MAX_ENUMERATED_DEPTH)),
    }
}

fn hplus_table(depth: usize) -> Result<Report, CliError> {
    let rows = hnplus_jacobi(depth)?;
    let mut table = vec![["k", "gamma", "beta", "conjectured_beta", "match"]
        .map(String::from)
        .to_vec()];
    let mut json_rows = Vec::new();
    for r in &rows {
        let cells = vec![
            r.k.to_string(),
            format_rational(&r.gamma),
            format_rational(&r.beta),
            format_rational(&r.conjectured),
            r.matches().to_string(),
        ];
        json_rows.push(json!({
            "k": r.k,
            "gamma": cells[1],
            "beta": cells[2],
            "conjectured_beta": cells[3],
            "match": r.matches(),
        }));
        table.push(cells);
    }
    let json = json!({ "category": Category::HPlus.name(), "depth": depth, "rows": json_rows });
    Ok(Report::new(json, aligned(&table), table))
}

fn family_table(category: Category, depth: usize) -> Result<Report, CliError> {
    let family =
        Family::from_category(category).ok_or(gramdet_core::Error::UnsupportedCategory {
            op: "orthogonal polynomial recurrence",
            category,
        })?;
    if depth > MAX_ENUMERATED_DEPTH {
        return Err(CliError::Usage(format!(
            "--depth {depth} exceeds {MAX_ENUMERATED_DEPTH}, the limit for moments counted by enumeration"
        )));
    }
    let m = moments(category, 2 * depth);
    let j = jacobi_from_moments(&m, depth)?;
    let orthogonal = orthogonality_check(&j, &m)?;
    let header = [
        "k",
        "alpha",
        "beta",
        "gamma",
        "recurrence_alpha",
        "recurrence_beta",
        "match",
        "q",
    ];
    let mut table = vec![header.map(String::from).to_vec()];
    let mut json_rows = Vec::new();
    for k in 0..=depth {
        let alpha = j.alpha.get(k).map(format_rational);
        let beta = k
            .checked_sub(1)
            .and_then(|i| j.beta.get(i))
            .map(format_rational);
        let rec_alpha = (k < depth).then(|| family.alpha(k).to_string());
        let rec_beta = (k >= 1).then(|| family.beta(k).to_string());
        let ok = alpha == rec_alpha && beta == rec_beta;
        let gamma = format_rational(&j.gamma[k]);
        let q = j.q[k].to_string();
        json_rows.push(json!({
            "k": k,
            "alpha": alpha,
            "beta": beta,
            "gamma": gamma,
            "recurrence_alpha": rec_alpha,
            "recurrence_beta": rec_beta,
            "match": ok,
            "q": q,
        }));
        table.push(vec![
            k.to_string(),
            alpha.unwrap_or_default(),
            beta.unwrap_or_default(),
            gamma,
            rec_alpha.unwrap_or_default(),
            rec_beta.unwrap_or_default(),
            ok.to_string(),
            q,
        ]);
    }
    let json = json!({
        "category": category.name(),
        "depth": depth,
        "orthogonal": orthogonal,
        "rows": json_rows,
    });
    let text = format!("{}orthogonal: {orthogonal}\n", aligned(&table));
    Ok(Report::new(json, text, table))
}
