use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigUint;
use serde::Serialize;

use mstd_core::bounds::{self, BoundReport};
use mstd_core::enumerate::{count_avoiding, count_mstd, EnumerationResult, ScanConfig};
use mstd_core::family::Family;
use mstd_core::fib::fib_index_exact;
use mstd_core::forbiddance::{build_graph, decompose, DecompositionReport, ForbiddanceSpec};
use mstd_core::verify::{self, CheckOutcome, VerifyConfig};
use mstd_core::{GroupElement, GroupSpec};

use crate::args::{BoundArgs, Common, ForbidArgs, Format, GroupArgs, TableArgs, VerifyArgs};
use crate::output::emit;

fn scan_config(common: &Common) -> ScanConfig {
    ScanConfig {
        threads: common.threads,
        count_cap: common.cap,
        progress: common.progress.map(Duration::from_secs_f64),
        ..ScanConfig::default()
    }
}

fn parse_group(s: &str) -> Result<GroupSpec> {
    Ok(s.parse::<GroupSpec>()?)
}

/// An element as a plain index (`5`) or as digits, first factor first (`1:2`).
pub fn parse_element(group: &GroupSpec, s: &str) -> Result<GroupElement> {
    let s = s.trim();
    if s.contains(':') {
        let digits = s
            .split(':')
            .map(|d| d.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("bad element `{s}`"))?;
        Ok(group.from_digits(&digits)?)
    } else {
        let i: usize = s.parse().with_context(|| format!("bad element `{s}`"))?;
        Ok(group.element(i)?)
    }
}

fn precision(common: &Common, group: &GroupSpec) -> u32 {
    common
        .precision_bits
        .unwrap_or_else(|| bounds::default_precision(group))
}

// ----------------------------------------------------------------------------
// count
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct CountRow {
    group: String,
    order: usize,
    total_subsets: String,
    count: String,
    wall_time_secs: f64,
    threads: usize,
}

pub fn count(common: &Common, args: &GroupArgs) -> Result<()> {
    let scan = scan_config(common);
    let mut results: Vec<EnumerationResult> = Vec::new();
    for g in &args.groups {
        let group = parse_group(g)?;
        results.push(count_mstd(&group, &scan)?);
    }
    let rows: Vec<CountRow> = results
        .iter()
        .map(|r| CountRow {
            group: r.group.to_string(),
            order: r.group.order(),
            total_subsets: r.total_subsets.to_string(),
            count: r.mstd_count.to_string(),
            wall_time_secs: r.elapsed.as_secs_f64(),
            threads: r.thread_count,
        })
        .collect();
    emit(common.format.unwrap_or(Format::Json), &results, &rows)
}

// ----------------------------------------------------------------------------
// bound
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct BoundRow {
    group: String,
    order: usize,
    parity: &'static str,
    k: usize,
    upper: String,
    lower: String,
    lower_vacuous: bool,
    asymptotic: String,
    exact: Option<String>,
    ratio: Option<f64>,
    ratio_cap: Option<f64>,
    sandwich: Option<bool>,
    precision_bits: u32,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        BoundRow {
            group: r.group.to_string(),
            order: r.order,
            parity: r.parity,
            k: r.k,
            upper: r.upper.clone(),
            lower: r.lower.clone(),
            lower_vacuous: r.lower_vacuous,
            asymptotic: r.asymptotic.clone(),
            exact: r.exact.clone(),
            ratio: r.ratio,
            ratio_cap: r.ratio_cap,
            sandwich: r.sandwich,
            precision_bits: r.precision_bits,
        }
    }
}

pub fn bound(common: &Common, args: &BoundArgs) -> Result<()> {
    let scan = scan_config(common);
    let mut reports = Vec::new();
    for g in &args.group.groups {
        let group = parse_group(g)?;
        let exact = if args.exact && group.order() <= common.cap {
            Some(count_mstd(&group, &scan)?.mstd_count)
        } else {
            None
        };
        reports.push(bounds::bound_report(&group, precision(common, &group), exact.as_ref())?);
    }
    let rows: Vec<BoundRow> = reports.iter().map(BoundRow::from).collect();
    emit(common.format.unwrap_or(Format::Json), &reports, &rows)
}

// ----------------------------------------------------------------------------
// forbid
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct ForbidRecord {
    group: String,
    diffs: Vec<usize>,
    sums: Vec<usize>,
    #[serde(flatten)]
    decomposition: DecompositionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct ForbidRow {
    group: String,
    diffs: String,
    sums: String,
    components: String,
    prisms: usize,
    ladders: usize,
    looped_vertices: usize,
    index: String,
    oracle: Option<String>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn forbid(common: &Common, args: &ForbidArgs) -> Result<()> {
    let group = parse_group(&args.group)?;
    let diffs = args
        .diffs
        .iter()
        .map(|s| parse_element(&group, s))
        .collect::<Result<Vec<_>>>()?;
    let sums = args
        .sums
        .iter()
        .map(|s| parse_element(&group, s))
        .collect::<Result<Vec<_>>>()?;
    let graph = build_graph(&group, &ForbiddanceSpec::new(&group, &diffs, &sums));
    if args.edges {
        print!("{}", graph.to_edge_list());
        return Ok(());
    }
    let dec = decompose(&graph);
    let index = fib_index_exact(&graph)?;
    let oracle: Option<BigUint> = if args.oracle {
        Some(count_avoiding(&group, &diffs, &sums, &scan_config(common))?)
    } else {
        None
    };
    let record = ForbidRecord {
        group: group.to_string(),
        diffs: diffs.iter().map(|d| d.0).collect(),
        sums: sums.iter().map(|s| s.0).collect(),
        decomposition: dec.report(Some(&index)),
        oracle: oracle.as_ref().map(BigUint::to_string),
        matches: oracle.as_ref().map(|o| *o == index),
    };
    let row = ForbidRow {
        group: record.group.clone(),
        diffs: join(&record.diffs),
        sums: join(&record.sums),
        components: record
            .decomposition
            .components
            .iter()
            .map(|c| format!("{}x{}", c.multiplicity, c.kind))
            .collect::<Vec<_>>()
            .join(" "),
        prisms: record.decomposition.prisms,
        ladders: record.decomposition.ladders,
        looped_vertices: record.decomposition.looped_vertices,
        index: index.to_string(),
        oracle: record.oracle.clone(),
        matches: record.matches,
    };
    emit(common.format.unwrap_or(Format::Json), &[&record], &[row])?;
    if record.matches == Some(false) {
        bail!("graph index {index} disagrees with direct count");
    }
    Ok(())
}

// ----------------------------------------------------------------------------
// verify
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyRow<'a> {
    status: &'static str,
    check: &'a str,
    cases: u64,
    detail: &'a str,
}

/// Returns whether every selected check passed.
pub fn verify(common: &Common, args: &VerifyArgs) -> Result<bool> {
    if args.list {
        for name in verify::CHECK_NAMES {
            println!("{name}");
        }
        return Ok(true);
    }
    for name in &args.only {
        if !verify::CHECK_NAMES.contains(&name.as_str()) {
            bail!("unknown check `{name}`; try --list");
        }
    }
    let cfg = VerifyConfig {
        max_order: args.max_order,
        scan: scan_config(common),
        seed: common.seed,
        bits: common.precision_bits.unwrap_or(256),
    };
    let outcomes: Vec<CheckOutcome> = verify::run_all(&cfg, &args.only)?;
    let rows: Vec<VerifyRow> = outcomes
        .iter()
        .map(|o| VerifyRow {
            status: if o.passed { "PASS" } else { "FAIL" },
            check: &o.name,
            cases: o.cases,
            detail: &o.detail,
        })
        .collect();
    emit(common.format.unwrap_or(Format::Table), &outcomes, &rows)?;
    Ok(outcomes.iter().all(|o| o.passed))
}

// ----------------------------------------------------------------------------
// table
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct TableRow {
    group: String,
    order: usize,
    parity: &'static str,
    k: usize,
    exact: Option<String>,
    upper: String,
    lower: String,
    asymptotic: String,
    ratio: Option<f64>,
    upper_ratio: f64,
    ratio_cap: Option<f64>,
    sandwich: Option<bool>,
    hypothesis: Option<f64>,
}

pub fn table(common: &Common, args: &TableArgs) -> Result<()> {
    let family = Family::parse(&args.family).ok_or_else(|| {
        anyhow!(
            "unknown family `{}`; expected cyclic, cyclic-even, cyclic-odd, Zn-x-Z2 or all",
            args.family
        )
    })?;
    if args.min > args.max {
        bail!("--min {} exceeds --max {}", args.min, args.max);
    }
    let mut groups = family.members(args.min, args.max);
    groups.sort_by(|a, b| (a.order(), a.factors()).cmp(&(b.order(), b.factors())));
    let scan = ScanConfig {
        count_cap: args.exact_cap,
        ..scan_config(common)
    };
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for group in groups.iter().filter(|g| g.order() >= 2) {
        let exact = if group.order() <= args.exact_cap {
            Some(count_mstd(group, &scan)?.mstd_count)
        } else {
            None
        };
        let bits = precision(common, group);
        let report = bounds::bound_report(group, bits, exact.as_ref())?;
        let asym = bounds::asymptotic(group, bits)?;
        let upper: f64 = report.upper.parse().unwrap_or(f64::NAN);
        rows.push(TableRow {
            group: group.to_string(),
            order: report.order,
            parity: report.parity,
            k: report.k,
            exact: report.exact.clone(),
            upper: report.upper.clone(),
            lower: report.lower.clone(),
            asymptotic: report.asymptotic.clone(),
            ratio: report.ratio,
            upper_ratio: upper / asym.midpoint_f64(),
            ratio_cap: report.ratio_cap,
            sandwich: report.sandwich,
            hypothesis: report
                .hypothesis
                .order_two_density
                .or(report.hypothesis.small_order_fraction),
        });
        reports.push(report);
    }
    emit(common.format.unwrap_or(Format::Csv), &reports, &rows)
}
