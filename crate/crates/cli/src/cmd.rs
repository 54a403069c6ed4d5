//! Command implementations. Every command writes one document to stdout (or
//! `--out`) and logs to stderr; exit codes are part of the contract:
//! 0 success/Exact, 2 input error, 3 timeout/incomplete, 4 refuted.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use itertools::Itertools;
use serde::Serialize;
use zdmetric::families::{
    self, classify_case, family_labels, TheoremCase, Verdict, VerificationRecord, VerifyOptions,
};
use zdmetric::{
    all_pairs_distances, barycentric_subdivision, build_gamma, canonical_pq_labeling, corpus,
    is_ft_resolving, is_ft_resolving_by_removal, is_resolving, metric_code, pair_coverage,
    solver, zdgraph, Graph, LabeledGraph, LandmarkSet, PartLabel, PqPartition, SearchLimits,
    SolveReport, SolveStatus, Strategy,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_REFUTED: i32 = 4;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Graphml,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Dim,
    Fdim,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyArg {
    /// Incumbent-pruned branch and bound.
    Bb,
    /// Iterative deepening on the target cardinality.
    Iterative,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Bb => Strategy::BranchAndBound,
            StrategyArg::Iterative => Strategy::IterativeDeepening,
        }
    }
}

pub fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(doc: &crate::formats::GraphDoc, format: Format) -> String {
    match format {
        Format::Json => crate::formats::to_json(doc),
        Format::Csv => crate::formats::to_csv_edges(doc),
        Format::Dot => crate::formats::to_dot(doc),
        Format::Graphml => crate::formats::to_graphml(doc),
    }
}

/// Splits n into distinct odd primes p < q, if it has that shape.
fn split_odd_semiprime(n: u64) -> Option<(u64, u64)> {
    for p in (3..).take_while(|p| p * p < n) {
        if n % p == 0 {
            let q = n / p;
            if zdgraph::is_prime(p) && zdgraph::is_prime(q) && q % 2 == 1 && p < q {
                return Some((p, q));
            }
            return None;
        }
    }
    None
}

fn bs_with_partition(n: u64) -> Result<(LabeledGraph, PqPartition)> {
    let (p, q) = split_odd_semiprime(n)
        .ok_or_else(|| anyhow!("n = {n} is not a product of two distinct odd primes"))?;
    let bs = barycentric_subdivision(&build_gamma(n)?);
    let part = canonical_pq_labeling(&bs, p, q)?;
    Ok((bs, part))
}

// -------------------------------------------------------------------------
// gamma / subdivide
// -------------------------------------------------------------------------

pub fn gamma(n: u64, format: Format, out: &Option<PathBuf>) -> Result<i32> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    let g = build_gamma(n)?;
    let doc = crate::formats::gamma_doc(&g, n);
    write_output(out, &render(&doc, format))?;
    Ok(EXIT_OK)
}

pub fn subdivide(n: u64, format: Format, out: &Option<PathBuf>) -> Result<i32> {
    let (bs, part) = bs_with_partition(n)?;
    let doc = crate::formats::subdivision_doc(&bs, &part, n);
    write_output(out, &render(&doc, format))?;
    Ok(EXIT_OK)
}

// -------------------------------------------------------------------------
// solve
// -------------------------------------------------------------------------

#[derive(Serialize)]
pub struct SolveDoc {
    pub kind: String,
    pub optimum: Option<usize>,
    pub witness: Option<Vec<String>>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub status: String,
    pub nodes: u64,
    pub millis: u128,
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Exact => "exact",
        SolveStatus::BoundsOnly => "bounds_only",
        SolveStatus::Timeout => "timeout",
    }
}

fn solve_doc(kind: &str, report: &SolveReport, label: &dyn Fn(usize) -> String) -> SolveDoc {
    SolveDoc {
        kind: kind.to_string(),
        optimum: report.optimum,
        witness: report
            .witness
            .as_ref()
            .map(|w| w.iter().map(label).collect()),
        lower_bound: report.lower_bound,
        upper_bound: report.upper_bound,
        status: status_name(report.status).to_string(),
        nodes: report.nodes_explored,
        millis: report.elapsed.as_millis(),
    }
}

pub struct SolveArgs {
    pub n: Option<u64>,
    pub edges: Option<PathBuf>,
    pub kind: Kind,
    pub limits: SearchLimits,
    pub strategy: StrategyArg,
    pub out: Option<PathBuf>,
}

pub fn solve(args: &SolveArgs) -> Result<i32> {
    let (graph, label): (Graph, Box<dyn Fn(usize) -> String>) = match (&args.n, &args.edges) {
        (Some(n), None) => {
            let (bs, part) = bs_with_partition(*n)?;
            let part_owned = part.clone();
            (
                bs.graph().clone(),
                Box::new(move |v| part_owned.label_of(v).to_string()),
            )
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let doc = if text.trim_start().starts_with('{') {
                crate::formats::from_json(&text)?
            } else {
                crate::formats::from_edge_list(&text)?
            };
            let labels: Vec<String> = (0..doc.vertex_count())
                .map(|v| {
                    if doc.vertices[v].label.is_some() {
                        doc.display_label(v)
                    } else {
                        format!("v{v}")
                    }
                })
                .collect();
            (doc.to_graph()?, Box::new(move |v| labels[v].clone()))
        }
        _ => bail!("exactly one of --n and --edges is required"),
    };

    let k = match args.kind {
        Kind::Dim => 1,
        Kind::Fdim => 2,
    };
    let cov = pair_coverage(&all_pairs_distances(&graph));
    let report = solver::solve_min_multicover_with(&cov, k, &args.limits, args.strategy.into())?;
    let kind_name = if k == 1 { "dim" } else { "fdim" };
    let doc = solve_doc(kind_name, &report, label.as_ref());
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    write_output(&args.out, &text)?;
    Ok(match report.status {
        SolveStatus::Exact => EXIT_OK,
        _ => EXIT_TIMEOUT,
    })
}

// -------------------------------------------------------------------------
// codes
// -------------------------------------------------------------------------

pub fn codes(n: u64, landmarks: &str, out: &Option<PathBuf>) -> Result<i32> {
    let (bs, part) = bs_with_partition(n)?;
    let labels: Vec<PartLabel> = if landmarks == "paper-E" {
        let case = classify_case(part.p(), part.q())?;
        family_labels(case, part.p(), part.q())
            .map_err(|e| anyhow!("no reference landmark family for n = {n}: {e}"))?
    } else {
        landmarks
            .split(',')
            .map(|s| s.trim().parse::<PartLabel>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let ids = labels
        .iter()
        .map(|l| {
            part.vertex_of(*l)
                .ok_or_else(|| anyhow!("label {l} does not exist in BS(Γ(Z_{n}))"))
        })
        .collect::<Result<Vec<_>>>()?;
    let w = LandmarkSet::new(ids).map_err(|e| anyhow!("duplicate landmark: {e}"))?;
    let d = all_pairs_distances(bs.graph());

    let mut csv = String::from("label");
    for l in &labels {
        csv.push(',');
        csv.push_str(&l.to_string());
    }
    csv.push('\n');
    for v in 0..bs.vertex_count() {
        csv.push_str(&part.label_of(v).to_string());
        for entry in metric_code(v, &w, &d).entries {
            csv.push(',');
            csv.push_str(&entry.to_string());
        }
        csv.push('\n');
    }
    write_output(out, &csv)?;
    Ok(EXIT_OK)
}

// -------------------------------------------------------------------------
// verify / sweep
// -------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyDoc {
    p: u64,
    q: u64,
    case: String,
    expected_dim: Option<usize>,
    expected_fdim: Option<usize>,
    dim_min: usize,
    fdim_min: usize,
    e_size: usize,
    e_labels: Vec<String>,
    e_is_ftrs: Option<bool>,
    dim: Option<SolveDoc>,
    fdim: Option<SolveDoc>,
    verdict: String,
    notes: Vec<String>,
}

fn verify_doc(record: &VerificationRecord) -> VerifyDoc {
    let with_labels = |report: &SolveReport, kind: &str, part: Option<&PqPartition>| match part {
        Some(part) => {
            let part = part.clone();
            solve_doc(kind, report, &move |v| part.label_of(v).to_string())
        }
        None => solve_doc(kind, report, &|v| format!("v{v}")),
    };
    // Rebuild the partition for witness labels; cheap at these sizes.
    let part = canonical_pq_labeling(
        &barycentric_subdivision(&build_gamma(record.p * record.q).expect("valid semiprime")),
        record.p,
        record.q,
    )
    .ok();
    VerifyDoc {
        p: record.p,
        q: record.q,
        case: record.case.to_string(),
        expected_dim: record.expected.dim,
        expected_fdim: record.expected.fdim,
        dim_min: record.expected.dim_min,
        fdim_min: record.expected.fdim_min,
        e_size: record.e_labels.len(),
        e_labels: record.e_labels.iter().map(|l| l.to_string()).collect(),
        e_is_ftrs: record.e_is_ftrs,
        dim: record
            .dim_report
            .as_ref()
            .map(|r| with_labels(r, "dim", part.as_ref())),
        fdim: record
            .fdim_report
            .as_ref()
            .map(|r| with_labels(r, "fdim", part.as_ref())),
        verdict: format!("{:?}", record.verdict),
        notes: record.notes.clone(),
    }
}

fn verdict_exit(records: &[VerificationRecord], strict: bool) -> i32 {
    if records.iter().any(|r| r.verdict == Verdict::Refuted) {
        EXIT_REFUTED
    } else if strict && records.iter().any(|r| r.verdict != Verdict::Confirmed) {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    }
}

pub fn verify(
    p: u64,
    q: u64,
    limits: SearchLimits,
    strict: bool,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let record = families::verify_instance(p, q, &VerifyOptions { limits, strict })?;
    let mut text = serde_json::to_string_pretty(&verify_doc(&record))?;
    text.push('\n');
    write_output(out, &text)?;
    Ok(verdict_exit(std::slice::from_ref(&record), strict))
}

/// Inclusive range "a..b" (or a single number).
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    match s.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().context("bad range start")?;
            let hi = b.trim().parse().context("bad range end")?;
            if lo > hi {
                bail!("empty range {s}");
            }
            Ok((lo, hi))
        }
        None => {
            let v = s.trim().parse().context("bad range")?;
            Ok((v, v))
        }
    }
}

pub fn sweep(
    p_range: &str,
    q_range: &str,
    limits: SearchLimits,
    strict: bool,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let (p_lo, p_hi) = parse_range(p_range)?;
    let (q_lo, q_hi) = parse_range(q_range)?;
    let mut pairs = Vec::new();
    for p in (p_lo..=p_hi).filter(|&p| p % 2 == 1 && zdgraph::is_prime(p)) {
        for q in (q_lo..=q_hi).filter(|&q| q % 2 == 1 && zdgraph::is_prime(q)) {
            if p < q {
                match classify_case(p, q) {
                    Ok(TheoremCase::Unclassified) => {
                        eprintln!("sweep: skipping ({p},{q}): outside every known case");
                    }
                    Ok(_) => pairs.push((p, q)),
                    Err(e) => eprintln!("sweep: skipping ({p},{q}): {e}"),
                }
            }
        }
    }

    use rayon::prelude::*;
    let opts = VerifyOptions { limits, strict };
    let records = pairs
        .par_iter()
        .map(|&(p, q)| families::verify_instance(p, q, &opts))
        .collect::<Result<Vec<_>, _>>()?;

    let mut csv = String::from(
        "p,q,case,expected_dim,expected_fdim,e_size,e_is_ftrs,\
         dim_status,dim_lower,dim_upper,dim_optimum,\
         fdim_status,fdim_lower,fdim_upper,fdim_optimum,verdict\n",
    );
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in &records {
        let (ds, dl, du, do_) = match &r.dim_report {
            Some(d) => (
                status_name(d.status).to_string(),
                d.lower_bound.to_string(),
                d.upper_bound.to_string(),
                opt(d.optimum),
            ),
            None => Default::default(),
        };
        let (fs, fl, fu, fo) = match &r.fdim_report {
            Some(f) => (
                status_name(f.status).to_string(),
                f.lower_bound.to_string(),
                f.upper_bound.to_string(),
                opt(f.optimum),
            ),
            None => Default::default(),
        };
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{ds},{dl},{du},{do_},{fs},{fl},{fu},{fo},{:?}\n",
            r.p,
            r.q,
            r.case,
            opt(r.expected.dim),
            opt(r.expected.fdim),
            r.e_labels.len(),
            r.e_is_ftrs.map(|b| b.to_string()).unwrap_or_default(),
            r.verdict,
        ));
    }
    write_output(out, &csv)?;
    Ok(verdict_exit(&records, strict))
}

// -------------------------------------------------------------------------
// selftest
// -------------------------------------------------------------------------

#[derive(Serialize)]
struct SelftestDoc {
    seed: u64,
    graphs: usize,
    oracle_mismatches: usize,
    path_mismatches: usize,
    predicate_mismatches: usize,
    eq1_violations: usize,
}

/// Independent oracle: subsets in ascending cardinality, definitional
/// predicates only.
fn brute_force_min(g: &Graph, k: usize) -> usize {
    let d = all_pairs_distances(g);
    let n = g.vertex_count();
    for size in 0..=n {
        for subset in (0..n).combinations(size) {
            let w = LandmarkSet::new(subset).unwrap();
            let ok = if k == 1 {
                is_resolving(&w, &d)
            } else {
                is_ft_resolving(&w, &d)
            };
            if ok {
                return size;
            }
        }
    }
    unreachable!("the full vertex set resolves")
}

pub fn selftest(seed: u64, count: usize, out: &Option<PathBuf>) -> Result<i32> {
    let mut rng = corpus::rng(seed);
    let mut doc = SelftestDoc {
        seed,
        graphs: count,
        oracle_mismatches: 0,
        path_mismatches: 0,
        predicate_mismatches: 0,
        eq1_violations: 0,
    };

    for round in 0..count {
        let g = corpus::random_connected_graph(&mut rng, 2, 10);
        let cov = pair_coverage(&all_pairs_distances(&g));
        let mut exact = [0usize; 2];
        for k in [1usize, 2] {
            let got = solver::solve_min_multicover(&cov, k, &SearchLimits::UNLIMITED)?
                .optimum
                .expect("unlimited search is exact");
            let want = brute_force_min(&g, k);
            if got != want {
                eprintln!("selftest: oracle mismatch on graph {round}, k={k}: {got} vs {want}");
                doc.oracle_mismatches += 1;
            }
            exact[k - 1] = got;
        }
        if exact[1] < exact[0] + 1 {
            eprintln!("selftest: fdim < dim + 1 on graph {round}");
            doc.eq1_violations += 1;
        }
        if g.vertex_count() <= 9 && (exact[1] == 2) != g.is_path() {
            eprintln!("selftest: path characterization failed on graph {round}");
            doc.path_mismatches += 1;
        }
    }

    for n in 2..=12 {
        let g = corpus::path(n);
        let f = solver::fdim(&g, &SearchLimits::UNLIMITED)?
            .optimum
            .expect("paths are tiny");
        if f != 2 {
            eprintln!("selftest: fdim(P_{n}) = {f}");
            doc.path_mismatches += 1;
        }
    }

    for round in 0..200 {
        let g = corpus::random_connected_graph(&mut rng, 2, 12);
        let d = all_pairs_distances(&g);
        let w = LandmarkSet::new(corpus::random_subset(&mut rng, g.vertex_count())).unwrap();
        if is_ft_resolving(&w, &d) != is_ft_resolving_by_removal(&w, &d) {
            eprintln!("selftest: predicate disagreement on graph {round}");
            doc.predicate_mismatches += 1;
        }
    }

    let failures = doc.oracle_mismatches
        + doc.path_mismatches
        + doc.predicate_mismatches
        + doc.eq1_violations;
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    write_output(out, &text)?;
    Ok(if failures == 0 { EXIT_OK } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semiprime_splitting() {
        assert_eq!(split_odd_semiprime(15), Some((3, 5)));
        assert_eq!(split_odd_semiprime(91), Some((7, 13)));
        assert_eq!(split_odd_semiprime(45), None); // 3^2 * 5
        assert_eq!(split_odd_semiprime(9), None); // p = q
        assert_eq!(split_odd_semiprime(10), None); // even prime factor
        assert_eq!(split_odd_semiprime(7), None); // prime
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("3..7").unwrap(), (3, 7));
        assert_eq!(parse_range("11").unwrap(), (11, 11));
        assert!(parse_range("7..3").is_err());
        assert!(parse_range("x..3").is_err());
    }
}
