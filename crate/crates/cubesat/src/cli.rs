//! Batch front-end: construction, verification, exact search and bound
//! reporting as reproducible subcommands. Every JSON document printed on
//! stdout carries a `version` field; graph files use the bit-exact format of
//! [`crate::format`]. Exit codes: 0 on success, 1 when a requested check
//! fails, 2 on invalid configuration.

use crate::bounds::{lower_bound_certificate, schedule};
use crate::codes::LinearCode;
use crate::constructions::{
    base_family, increment_step, iterate_construction, q2_saturated, semi_saturated,
    weak_sat_tree, CoveredFamily, GreedyOrder,
};
use crate::cube::{CubeGraph, Dim};
use crate::format::{read_graph, write_graph};
use crate::verify::{self, is_weakly_saturated, verdict, Mode, SaturationVerdict, Witness};
use crate::{Error, OUTPUT_VERSION};
use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "cubesat", version, about = "Saturated subgraphs of the hypercube")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one of the graph families and write it to disk.
    Construct(ConstructArgs),
    /// Run the saturation verdict on a graph file.
    Verify(VerifyArgs),
    /// Exact minimum saturation numbers for tiny cubes.
    Exact(ExactArgs),
    /// Bound certificates for a graph, or the density schedule.
    Bounds(BoundsArgs),
    /// CSV summary of constructions across a dimension range.
    Table(TableArgs),
    /// Hamming / approximate Hamming code parameters and certificates.
    Codes(CodesArgs),
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// base | increment | iterate | semisat | q2sat | weaktree
    #[arg(long)]
    pub kind: String,
    /// Host dimension for semisat / q2sat / weaktree.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    /// Starting dimension for base / increment / iterate.
    #[arg(long)]
    pub n0: Option<u32>,
    /// Number of increment steps for iterate.
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    /// Automorphism samples per increment step (0 = exhaustive, n <= 6).
    #[arg(long, default_value_t = 32)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Shuffle greedy-completion order with the seed instead of (base, dir).
    #[arg(long)]
    pub shuffle_greedy: bool,
    /// Output file for single-graph kinds.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output directory for family kinds (one file per member + manifest).
    #[arg(long)]
    pub out_family: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    /// free | semisat | sat | wsat: exit 1 unless the graph passes.
    #[arg(long)]
    pub check: Option<String>,
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    /// sat | ssat | wsat
    #[arg(long)]
    pub mode: String,
    /// Where to write the witness graph; defaults to
    /// `witness_<mode>_n<N>_m<M>.json` in the working directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Graph file to certify.
    #[arg(long, conflicts_with = "schedule")]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    /// Evaluate the density schedule instead of certifying a graph.
    #[arg(long)]
    pub schedule: bool,
    #[arg(long)]
    pub n0: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    /// json | csv (schedule output only).
    #[arg(long, default_value = "json")]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long)]
    pub n_from: u32,
    #[arg(long)]
    pub n_to: u32,
    /// Comma-separated: semisat, q2sat, weaktree.
    #[arg(long)]
    pub kinds: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CodesArgs {
    /// Code length; the code is the approximate Hamming code of that length
    /// (genuine when n = 2^r - 1).
    #[arg(long)]
    pub n: u32,
    /// Run the exhaustive property certification.
    #[arg(long)]
    pub certify: bool,
}

/// Exit code for a CLI invocation; errors print to stderr.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Construct(args) => run_construct(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Exact(args) => run_exact(&args),
        Command::Bounds(args) => run_bounds(&args),
        Command::Table(args) => run_table_cmd(&args),
        Command::Codes(args) => run_codes(&args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn greedy_order(args: &ConstructArgs) -> GreedyOrder {
    if args.shuffle_greedy {
        GreedyOrder::Shuffled { seed: args.seed }
    } else {
        GreedyOrder::Lex
    }
}

fn run_construct(args: &ConstructArgs) -> Result<i32, String> {
    let order = greedy_order(args);
    match args.kind.as_str() {
        "base" => {
            let n0 = dim_arg(args.n0, "--n0")?;
            let fam = base_family(n0, args.m, order).map_err(fail)?;
            emit_family(args, &fam, "base")
        }
        "increment" => {
            let n0 = dim_arg(args.n0, "--n0")?;
            let fam = base_family(n0, args.m, order).map_err(fail)?;
            let lower = iterate_construction(args.m - 1, n0, 0, 0, 0, order).map_err(fail)?;
            let next =
                increment_step(&fam, &lower, args.trials, args.seed, order).map_err(fail)?;
            emit_family(args, &next, "increment")
        }
        "iterate" => {
            let n0 = dim_arg(args.n0, "--n0")?;
            let g = iterate_construction(args.m, n0, args.t, args.trials, args.seed, order)
                .map_err(fail)?;
            emit_graph(args, &g, "iterate")
        }
        "semisat" => {
            let n = dim_arg(args.n, "--n")?;
            let g = semi_saturated(n, args.m).map_err(fail)?;
            emit_graph(args, &g, "semisat")
        }
        "q2sat" => {
            let n = dim_arg(args.n, "--n")?;
            let g = q2_saturated(n, order).map_err(fail)?;
            emit_graph(args, &g, "q2sat")
        }
        "weaktree" => {
            let n = dim_arg(args.n, "--n")?;
            emit_graph(args, &weak_sat_tree(n), "weaktree")
        }
        other => Err(format!(
            "unknown kind {other:?}; expected base|increment|iterate|semisat|q2sat|weaktree"
        )),
    }
}

fn dim_arg(value: Option<u32>, flag: &str) -> Result<Dim, String> {
    let v = value.ok_or_else(|| format!("{flag} is required for this kind"))?;
    Dim::new(v).map_err(fail)
}

fn emit_graph(args: &ConstructArgs, g: &CubeGraph, kind: &str) -> Result<i32, String> {
    if let Some(path) = &args.out {
        write_graph(path, g).map_err(fail)?;
    }
    let doc = json!({
        "version": OUTPUT_VERSION,
        "kind": kind,
        "n": g.n(),
        "m": args.m,
        "seed": args.seed,
        "edges": g.edge_count(),
        "density": g.density(),
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    });
    println!("{doc}");
    Ok(0)
}

fn emit_family(args: &ConstructArgs, fam: &CoveredFamily, kind: &str) -> Result<i32, String> {
    let mut members = Vec::new();
    if let Some(dir) = &args.out_family {
        std::fs::create_dir_all(dir).map_err(fail)?;
        for (i, g) in fam.graphs.iter().enumerate() {
            let name = format!("{kind}_m{}_n{}_{i}.json", fam.m, fam.dim.get());
            write_graph(&dir.join(&name), g).map_err(fail)?;
            members.push(json!({
                "file": name,
                "edges": g.edge_count(),
                "density": g.density(),
            }));
        }
        let manifest = json!({
            "version": OUTPUT_VERSION,
            "kind": kind,
            "n": fam.dim.get(),
            "m": fam.m,
            "n0": fam.n0,
            "seed": args.seed,
            "trials": args.trials,
            "members": members,
        });
        std::fs::write(
            dir.join("manifest.json"),
            format!("{manifest}\n"),
        )
        .map_err(fail)?;
        println!("{manifest}");
    } else {
        let summary = json!({
            "version": OUTPUT_VERSION,
            "kind": kind,
            "n": fam.dim.get(),
            "m": fam.m,
            "n0": fam.n0,
            "members": fam.graphs.iter().map(|g| g.edge_count()).collect::<Vec<_>>(),
        });
        println!("{summary}");
    }
    Ok(0)
}

fn witness_json(n: u32, w: Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(Witness::Copy(p)) => json!({
            "type": "copy",
            "free_mask": p.free_mask,
            "values": p.values,
            "pattern": p.pattern_string(n),
        }),
        Some(Witness::NonEdge(e)) => json!({
            "type": "non_edge",
            "base": e.base,
            "dir": e.dir,
        }),
    }
}

fn verdict_json(g: &CubeGraph, v: &SaturationVerdict) -> Value {
    json!({
        "version": OUTPUT_VERSION,
        "n": v.n,
        "m": v.m,
        "edges": g.edge_count(),
        "is_free": v.is_free,
        "is_semi_saturated": v.is_semi_saturated,
        "is_saturated": v.is_saturated,
        "witness": witness_json(v.n, v.witness),
    })
}

fn run_verify(args: &VerifyArgs) -> Result<i32, String> {
    let g = read_graph(&args.input).map_err(fail)?;
    let v = verdict(&g, args.m);
    let mut doc = verdict_json(&g, &v);
    let pass = match args.check.as_deref() {
        None => None,
        Some("free") => Some(v.is_free),
        Some("semisat") => Some(v.is_semi_saturated),
        Some("sat") => Some(v.is_saturated),
        Some("wsat") => {
            let w = is_weakly_saturated(&g, args.m);
            doc["is_weakly_saturated"] = json!(w);
            Some(w)
        }
        Some(other) => {
            return Err(format!(
                "unknown check {other:?}; expected free|semisat|sat|wsat"
            ))
        }
    };
    if let Some(p) = pass {
        doc["check"] = json!(args.check.as_deref().unwrap());
        doc["pass"] = json!(p);
    }
    println!("{doc}");
    Ok(if pass == Some(false) { 1 } else { 0 })
}

fn run_exact(args: &ExactArgs) -> Result<i32, String> {
    let mode = Mode::parse(&args.mode)
        .ok_or_else(|| format!("unknown mode {:?}; expected sat|ssat|wsat", args.mode))?;
    let n = Dim::new(args.n).map_err(fail)?;
    let res = verify::exact_min(n, args.m, mode).map_err(fail)?;
    let out = args.out.clone().unwrap_or_else(|| {
        PathBuf::from(format!("witness_{}_n{}_m{}.json", mode.as_str(), args.n, args.m))
    });
    write_graph(&out, &res.witness).map_err(fail)?;
    let doc = json!({
        "version": OUTPUT_VERSION,
        "n": res.n,
        "m": res.m,
        "mode": mode.as_str(),
        "value": res.value,
        "witness": serde_json::from_str::<Value>(&crate::format::graph_to_json(&res.witness))
            .expect("graph json is valid"),
        "out": out.display().to_string(),
    });
    println!("{doc}");
    Ok(0)
}

fn rational_json(r: &BigRational) -> Value {
    json!({
        "exact": r.to_string(),
        "approx": r.to_f64(),
    })
}

fn run_bounds(args: &BoundsArgs) -> Result<i32, String> {
    if args.schedule {
        let n0 = args.n0.ok_or("--n0 is required with --schedule")?;
        let s = schedule(args.m, n0, args.t, &BigRational::zero()).map_err(fail)?;
        match args.format.as_str() {
            "json" => {
                let doc = json!({
                    "version": OUTPUT_VERSION,
                    "m": s.m,
                    "n0": s.n0,
                    "t": s.t,
                    "k": s.ks,
                    "n": s.ns,
                    "rho": s.rhos.iter().map(rational_json).collect::<Vec<_>>(),
                    "a_prev": rational_json(&s.a_prev),
                    "a_m": rational_json(&s.a_m),
                    "recommended_t": s.recommended_t,
                });
                println!("{doc}");
            }
            "csv" => {
                let mut out = String::from("i,k_i,n_i,rho_i\n");
                for i in 0..=s.t as usize {
                    let k = if i < s.ks.len() {
                        s.ks[i].to_string()
                    } else {
                        String::new()
                    };
                    out.push_str(&format!(
                        "{i},{k},{},{}\n",
                        s.ns[i],
                        s.rhos[i].to_f64().unwrap_or(f64::NAN)
                    ));
                }
                print!("{out}");
            }
            other => return Err(format!("unknown format {other:?}; expected json|csv")),
        }
        return Ok(0);
    }
    let input = args.input.as_ref().ok_or("--input or --schedule required")?;
    let g = read_graph(input).map_err(fail)?;
    let rep = lower_bound_certificate(&g, args.m);
    let doc = json!({
        "version": OUTPUT_VERSION,
        "n": rep.n,
        "m": rep.m,
        "edges": rep.edges,
        "density": g.density(),
        "connected": rep.connected,
        "spanning_tree_ok": rep.spanning_tree_ok,
        "min_degree": rep.min_degree,
        "min_degree_ok": rep.min_degree_ok,
        "good_pair_lhs": rep.good_pair_lhs,
        "good_pair_rhs": rep.good_pair_rhs,
        "good_pair_ok": rep.good_pair_ok,
    });
    println!("{doc}");
    Ok(if rep.all() { 0 } else { 1 })
}

/// Edge-count bound implied by the construction for the given kind, when
/// one applies.
fn kind_bound(kind: &str, n: u32, m: u32) -> Option<u64> {
    match kind {
        "semisat" => {
            let r = remainder(n, m);
            Some(if r == 0 {
                ((m as u64) * (m as u64 + 1)) << (n - 1)
            } else {
                ((m as u64) * (2 * m as u64 + 1)) << (n - 1)
            })
        }
        "q2sat" => {
            let r = remainder(n, 2);
            Some(if r == 0 { 6 << n } else { 10 << n })
        }
        "weaktree" => Some((1 << n) - 1),
        _ => None,
    }
}

fn remainder(n: u32, m: u32) -> u32 {
    let mut t = 1;
    while m * ((1 << (t + 1)) - 1) <= n {
        t += 1;
    }
    n - m * ((1 << t) - 1)
}

/// One CSV row per (kind, n): edge count, density, construction bound and
/// verdict flags. Per-row failures land in the error column and the run
/// continues.
pub fn run_table(m: u32, n_range: std::ops::RangeInclusive<u32>, kinds: &[&str]) -> String {
    let mut csv = String::from(
        "kind,n,m,edges,density,bound,bound_ok,is_free,is_semi_saturated,is_saturated,is_weakly_saturated,error\n",
    );
    for &kind in kinds {
        for n in n_range.clone() {
            let row = table_row(kind, n, m);
            csv.push_str(&row);
            csv.push('\n');
        }
    }
    csv
}

fn table_row(kind: &str, n: u32, m: u32) -> String {
    let built: Result<CubeGraph, Error> = (|| {
        let dim = Dim::new(n)?;
        match kind {
            "semisat" => semi_saturated(dim, m),
            "q2sat" => q2_saturated(dim, GreedyOrder::Lex),
            "weaktree" => Ok(weak_sat_tree(dim)),
            other => Err(Error::Unsupported(format!(
                "kind {other:?} is not tabulated; use semisat|q2sat|weaktree"
            ))),
        }
    })();
    match built {
        Ok(g) => {
            let v = verdict(&g, m);
            let wsat = is_weakly_saturated(&g, m);
            let bound = kind_bound(kind, n, m);
            let bound_ok = match (kind, bound) {
                ("weaktree", Some(b)) => g.edge_count() == b,
                (_, Some(b)) => g.edge_count() <= b,
                (_, None) => true,
            };
            format!(
                "{kind},{n},{m},{},{:.6},{},{},{},{},{},{},",
                g.edge_count(),
                g.density(),
                bound.map_or(String::new(), |b| b.to_string()),
                bound_ok,
                v.is_free,
                v.is_semi_saturated,
                v.is_saturated,
                wsat
            )
        }
        Err(e) => format!("{kind},{n},{m},,,,,,,,,{e}"),
    }
}

fn run_table_cmd(args: &TableArgs) -> Result<i32, String> {
    if args.n_from > args.n_to {
        // empty range: header-only CSV
    }
    let kinds: Vec<&str> = args
        .kinds
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let csv = run_table(args.m, args.n_from..=args.n_to, &kinds);
    match &args.out {
        Some(path) => std::fs::write(path, &csv).map_err(fail)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

fn run_codes(args: &CodesArgs) -> Result<i32, String> {
    let code = LinearCode::approximate(args.n).map_err(fail)?;
    let genuine = args.n == (1 << code.redundancy()) - 1;
    let mut doc = json!({
        "version": OUTPUT_VERSION,
        "n": code.len(),
        "r": code.redundancy(),
        "size": code.size(),
        "hamming": genuine,
    });
    if args.certify {
        let cert = code.certify();
        doc["certificate"] = json!({
            "size_ok": cert.size_ok,
            "min_dist_3": cert.min_dist_3,
            "dominating": cert.dominating,
        });
    }
    println!("{doc}");
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn table_header_only_for_empty_range() {
        let csv = run_table(2, 7..=6, &["semisat"]);
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("kind,n,m,"));
    }

    #[test]
    fn table_records_row_errors_and_continues() {
        let csv = run_table(2, 4..=4, &["q2sat", "weaktree"]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].contains("needs n >= 6"));
        assert!(lines[2].starts_with("weaktree,4,2,15,"));
    }

    #[test]
    fn kind_bounds_match_the_remarks() {
        assert_eq!(kind_bound("semisat", 6, 2), Some(192));
        assert_eq!(kind_bound("semisat", 12, 3), Some(43008));
        assert_eq!(kind_bound("q2sat", 6, 2), Some(384));
        assert_eq!(kind_bound("q2sat", 14, 2), Some(6 << 14));
        assert_eq!(kind_bound("weaktree", 4, 2), Some(15));
    }
}
