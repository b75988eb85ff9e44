//! Verification runs: every per-cluster check over an atlas, aggregated into
//! a report with one status line per check.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cluster_algebra::ExploreOptions;
use crate::error::{Error, Result};
use crate::quiver::census::census;
use crate::root_system::DynkinType;
use crate::tilting::checks::{
    denominator_check, exchange_check, module_count_check, quiver_check, relations_check,
    winding_numbers, Context, CountVerdict, DenominatorVerdict, ExchangeVerdict, QuiverVerdict,
    RelationVerdict, WindingFinding,
};
use crate::tilting::example::find_d5_example;
use crate::tilting::Convention;

/// Failure payloads kept per check; the count is always exact.
pub const MAX_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Quivers,
    Relations,
    Bb,
    Exchange,
    Denominators,
    Counts,
    Appendix,
    Winding,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Quivers,
        Check::Relations,
        Check::Bb,
        Check::Exchange,
        Check::Denominators,
        Check::Counts,
        Check::Appendix,
        Check::Winding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Quivers => "quivers",
            Check::Relations => "relations",
            Check::Bb => "bb",
            Check::Exchange => "exchange",
            Check::Denominators => "denominators",
            Check::Counts => "counts",
            Check::Appendix => "appendix",
            Check::Winding => "winding",
        }
    }

    /// Checks whose outcome is reported but never fails a run.
    pub fn is_finding_only(self) -> bool {
        self == Check::Winding
    }

    /// Parse a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub status: Status,
    /// Number of individual verdicts evaluated.
    pub checked: usize,
    pub failed: usize,
    pub summary: Value,
    /// The first few failing verdicts in full.
    pub failures: Vec<Value>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub dynkin_type: DynkinType,
    pub rank: usize,
    pub convention_flip: bool,
    pub clusters: usize,
    /// `None` when every cluster was checked.
    pub cluster: Option<usize>,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn check(&self, c: Check) -> Option<&CheckReport> {
        self.checks.iter().find(|r| r.check == c)
    }

    /// JSON with every timing zeroed, for comparing runs.
    pub fn to_json_without_timings(&self) -> Value {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        serde_json::to_value(r).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let scope = self
            .cluster
            .map_or_else(|| format!("{} clusters", self.clusters), |c| format!("cluster {c}"));
        let flip = if self.convention_flip { "flipped" } else { "no flip" };
        let _ = writeln!(s, "type {}  rank {}  {scope}  convention {flip}", self.dynkin_type, self.rank);
        let _ = writeln!(s, "{:<14}{:<9}{:>9}{:>9}{:>10}", "check", "status", "checked", "failed", "ms");
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{:<14}{:<9}{:>9}{:>9}{:>10}",
                c.check.name(),
                c.status.to_string(),
                c.checked,
                c.failed,
                c.elapsed_ms
            );
        }
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "overall {verdict}");
        s
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub checks: Vec<Check>,
    pub cluster: Option<usize>,
    pub explore: ExploreOptions,
    pub convention: Convention,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            checks: Check::ALL.to_vec(),
            cluster: None,
            explore: ExploreOptions::default(),
            convention: Convention::default(),
        }
    }
}

/// Everything computed for one cluster.
#[derive(Default)]
struct ClusterResult {
    quiver: Option<QuiverVerdict>,
    relations: Vec<RelationVerdict>,
    exchanges: Vec<ExchangeVerdict>,
    windings: Vec<WindingFinding>,
    denominators: Option<DenominatorVerdict>,
    counts: Option<CountVerdict>,
    millis: BTreeMap<Check, f64>,
}

pub fn verify(ty: DynkinType, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let ctx = Context::new(ty, opts.explore, opts.convention)?;
    verify_in(&ctx, opts).map(|mut r| {
        r.elapsed_ms = start.elapsed().as_millis() as u64;
        r
    })
}

/// Run the selected checks against a prepared context.
pub fn verify_in(ctx: &Context, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let ty = ctx.rs.dynkin_type();
    let clusters: Vec<usize> = match opts.cluster {
        Some(c) if c >= ctx.atlas.num_clusters() => {
            return Err(Error::Parse(format!(
                "cluster {c} out of range: {} has {} clusters",
                ty,
                ctx.atlas.num_clusters()
            )))
        }
        Some(c) => vec![c],
        None => (0..ctx.atlas.num_clusters()).collect(),
    };
    let want = |c: Check| opts.checks.contains(&c);
    let per_cluster: Vec<ClusterResult> = clusters
        .par_iter()
        .map(|&c| run_cluster(ctx, c, &want))
        .collect::<Result<_>>()?;

    let mut checks = Vec::new();
    for &check in &opts.checks {
        let t = Instant::now();
        let mut report = match check {
            Check::Appendix => appendix_report(ty)?,
            _ => aggregate(check, &per_cluster),
        };
        if check == Check::Denominators && ty == DynkinType::d(5) {
            add_d5_example(ctx, &clusters, &mut report)?;
        }
        let cluster_ms: f64 = per_cluster.iter().filter_map(|r| r.millis.get(&check)).sum();
        report.elapsed_ms = (cluster_ms + t.elapsed().as_secs_f64() * 1e3).round() as u64;
        checks.push(report);
    }
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerificationReport {
        dynkin_type: ty,
        rank: ctx.rs.rank(),
        convention_flip: ctx.convention.flip,
        clusters: ctx.atlas.num_clusters(),
        cluster: opts.cluster,
        checks,
        passed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn run_cluster(ctx: &Context, c: usize, want: &dyn Fn(Check) -> bool) -> Result<ClusterResult> {
    let mut r = ClusterResult::default();
    let needs_pres = [Check::Quivers, Check::Relations, Check::Bb, Check::Exchange, Check::Winding]
        .into_iter()
        .any(want);
    let timed = |check: Check, t: Instant, r: &mut ClusterResult| {
        *r.millis.entry(check).or_default() += t.elapsed().as_secs_f64() * 1e3;
    };
    if needs_pres {
        let t = Instant::now();
        let (qv, pres) = quiver_check(ctx, c)?;
        r.quiver = Some(qv);
        timed(Check::Quivers, t, &mut r);
        if let Some(pres) = pres {
            if want(Check::Relations) {
                let t = Instant::now();
                r.relations = relations_check(ctx, c, &pres)?;
                timed(Check::Relations, t, &mut r);
            }
            if want(Check::Winding) {
                let t = Instant::now();
                r.windings = winding_numbers(c, &pres)?;
                timed(Check::Winding, t, &mut r);
            }
            if want(Check::Bb) || want(Check::Exchange) {
                let t = Instant::now();
                r.exchanges = (0..ctx.rs.rank())
                    .map(|p| exchange_check(ctx, c, p, &pres))
                    .collect::<Result<_>>()?;
                let check = if want(Check::Bb) { Check::Bb } else { Check::Exchange };
                timed(check, t, &mut r);
            }
        }
    }
    if want(Check::Denominators) {
        let t = Instant::now();
        r.denominators = Some(denominator_check(ctx, c)?);
        timed(Check::Denominators, t, &mut r);
    }
    if want(Check::Counts) {
        let t = Instant::now();
        r.counts = Some(module_count_check(ctx, c)?);
        timed(Check::Counts, t, &mut r);
    }
    Ok(r)
}

fn bb_passed(v: &ExchangeVerdict) -> bool {
    v.bb_ok
        && v.complements_ok
        && v.negative_simple.as_ref().is_none_or(|ns| ns.passed())
}

fn exchange_passed(v: &ExchangeVerdict) -> bool {
    v.identity_ok && v.matrix_ok
}

/// Collect per-cluster verdicts of one kind into a check report.
fn aggregate(check: Check, results: &[ClusterResult]) -> CheckReport {
    let mut checked = 0;
    let mut failures: Vec<Value> = Vec::new();
    let mut failed = 0;
    let mut record = |ok: bool, payload: &dyn Fn() -> Value| {
        checked += 1;
        if !ok {
            failed += 1;
            if failures.len() < MAX_FAILURES {
                failures.push(payload());
            }
        }
    };
    let summary = match check {
        Check::Quivers => {
            let mut hom_bound = 0;
            for v in results.iter().filter_map(|r| r.quiver.as_ref()) {
                hom_bound += v.hom_bound_violations.len();
                record(v.matches && v.hom_bound_violations.is_empty(), &|| json!(v));
            }
            json!({ "hom_bound_violations": hom_bound })
        }
        Check::Relations => {
            let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
            let mut other_paths = 0;
            for v in results.iter().flat_map(|r| &r.relations) {
                *kinds.entry(format!("{:?}", v.kind).to_lowercase()).or_default() += 1;
                other_paths += v.other_paths;
                record(v.passed(), &|| json!(v));
            }
            json!({ "kinds": kinds, "non_shortest_paths": other_paths })
        }
        Check::Bb => {
            let mut zero_approximations = 0;
            let mut negative_simple = 0;
            for v in results.iter().flat_map(|r| &r.exchanges) {
                zero_approximations += usize::from(v.b.is_none()) + usize::from(v.b_prime.is_none());
                negative_simple += usize::from(v.negative_simple.is_some());
                record(bb_passed(v), &|| json!(v));
            }
            json!({
                "zero_approximations": zero_approximations,
                "negative_simple_exchanges": negative_simple,
            })
        }
        Check::Exchange => {
            let mut negative_side = 0;
            for v in results.iter().flat_map(|r| &r.exchanges) {
                negative_side += usize::from(v.i_is_negative_side);
                record(exchange_passed(v), &|| json!(v));
            }
            json!({ "i_is_negative_side": negative_side })
        }
        Check::Denominators => {
            let mut variables = 0;
            for v in results.iter().filter_map(|r| r.denominators.as_ref()) {
                variables += v.checked;
                record(v.mismatches.is_empty(), &|| json!(v));
            }
            json!({ "cluster_variable_pairs": variables })
        }
        Check::Counts => {
            let mut distinct: BTreeMap<usize, usize> = BTreeMap::new();
            for v in results.iter().filter_map(|r| r.counts.as_ref()) {
                *distinct.entry(v.distinct).or_default() += 1;
                record(v.passed(), &|| json!(v));
            }
            json!({ "distinct_d_vectors": distinct })
        }
        Check::Winding => {
            let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
            for f in results.iter().flat_map(|r| &r.windings) {
                *histogram.entry(f.winding).or_default() += 1;
                record(f.winding == 1, &|| json!(f));
            }
            json!({ "histogram": histogram })
        }
        Check::Appendix => unreachable!("appendix runs on the mutation class"),
    };
    let status = match (failed, check.is_finding_only()) {
        (0, _) => Status::Pass,
        (_, true) => Status::Finding,
        (_, false) => Status::Fail,
    };
    CheckReport {
        check,
        status,
        checked,
        failed,
        summary,
        failures,
        elapsed_ms: 0,
    }
}

fn appendix_report(ty: DynkinType) -> Result<CheckReport> {
    let r = census(ty)?;
    let ok = r.passed();
    Ok(CheckReport {
        check: Check::Appendix,
        status: if ok { Status::Pass } else { Status::Fail },
        checked: r.class_size,
        failed: usize::from(!ok),
        failures: if ok { Vec::new() } else { vec![json!(r)] },
        summary: json!(r),
        elapsed_ms: 0,
    })
}

/// Attach the worked `D_5` example when its cluster is among those checked.
fn add_d5_example(ctx: &Context, clusters: &[usize], report: &mut CheckReport) -> Result<()> {
    let ex = find_d5_example(ctx)?;
    if clusters.contains(&ex.cluster) {
        if let Value::Object(m) = &mut report.summary {
            m.insert("d5_example".into(), json!(ex));
        }
    }
    Ok(())
}
