//! Command-line front end: enumeration of twisted involutions, generator
//! action tables, the verification suites, canonical bases, and the
//! finite-field counting checks.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 I/O error.
//! Identical configuration produces byte-identical output; files are
//! written atomically (temp file + rename).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hecke_core::barcanon::canonical_basis;
use hecke_core::extweyl::group_by_block;
use hecke_core::fforacle::{exhaustive_check, gf_build};
use hecke_core::heckemod::HeckeModule;
use hecke_core::rootdata::{build_root_datum, CartanType, RootDatum};
use hecke_core::torusquot::{orbit_of, parse_torus_point, torus_point_strings, TorusPoint};
use hecke_core::verify::{run_suites, SUITE_NAMES};
use hecke_core::wire;

#[derive(Parser)]
#[command(
    name = "hecke",
    about = "Extended Weyl groups, twisted involutions, and their Hecke modules",
    version
)]
struct Cli {
    /// Flat key = value configuration file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Cartan type, e.g. A2, B3, A1xA1.
    #[arg(long = "type")]
    cartan_type: Option<String>,

    /// Twist parameter m ≥ 1.
    #[arg(long)]
    m: Option<i64>,

    /// Denominator N ≥ 1: points are taken in the (1/N)-lattice.
    #[arg(long)]
    denominator: Option<i64>,

    /// Restrict to the Weyl orbit of this point, e.g. "0/1,1/3".
    #[arg(long)]
    orbit: Option<String>,

    /// Output format: json, csv, or text.
    #[arg(long)]
    format: Option<String>,

    /// Output file (stdout when absent); written atomically.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker pool size for the verification suites.
    #[arg(long)]
    threads: Option<usize>,

    /// Refuse index sets larger than |W|·N^rank = this cap.
    #[arg(long)]
    max_index: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// List the m-twisted involutions with decompositions, signs, and the
    /// block summary.
    Enumerate(CommonArgs),
    /// Export the action table of one generator.
    Act {
        #[command(flatten)]
        common: CommonArgs,
        /// Generator name, e.g. s1.
        #[arg(long)]
        gen: Option<String>,
    },
    /// Run the verification suites and report pass/fail.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated suite names (default: all).
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Compute the canonical basis.
    Canonical(CommonArgs),
    /// Check the finite-field counting identities for one prime.
    Ffcheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Odd prime q.
        #[arg(long)]
        q: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invariant(_) => 1,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invariant(m) | Failure::Io(m) => m,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Fully resolved job configuration: flags > config file > defaults, with
/// HECKE_THREADS overriding the parallelism degree.
struct JobConfig {
    cartan_type: String,
    m: i64,
    denominator: i64,
    orbit: Option<String>,
    format: String,
    out: Option<PathBuf>,
    threads: usize,
    max_index: u128,
    suites: Vec<String>,
}

const DEFAULT_MAX_INDEX: u128 = 1_000_000;

fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return usage(format!(
                "config {}: line {} is not `key = value`",
                path.display(),
                line_no + 1
            ));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn resolve_config(
    common: &CommonArgs,
    config_path: Option<&Path>,
    suites: &[String],
) -> Result<JobConfig, Failure> {
    let file = match config_path {
        Some(p) => read_config_file(p)?,
        None => BTreeMap::new(),
    };
    let from_file = |key: &str| file.get(key).cloned();

    let cartan_type = common
        .cartan_type
        .clone()
        .or_else(|| from_file("type"))
        .unwrap_or_else(|| "A1".to_string());
    let m = match common.m {
        Some(m) => m,
        None => match from_file("m") {
            Some(v) => v.parse().map_err(|_| Failure::Usage(format!("bad m in config: {v}")))?,
            None => 1,
        },
    };
    let denominator = match common.denominator {
        Some(n) => n,
        None => match from_file("denominator") {
            Some(v) => v
                .parse()
                .map_err(|_| Failure::Usage(format!("bad denominator in config: {v}")))?,
            None => 1,
        },
    };
    if m < 1 {
        return usage("m must be ≥ 1");
    }
    if denominator < 1 {
        return usage("denominator must be ≥ 1");
    }
    let orbit = common.orbit.clone().or_else(|| from_file("orbit"));
    let format = common
        .format
        .clone()
        .or_else(|| from_file("format"))
        .unwrap_or_else(|| "text".to_string());
    if !["json", "csv", "text"].contains(&format.as_str()) {
        return usage(format!("unknown format: {format}"));
    }
    let out = common.out.clone().or_else(|| from_file("out").map(PathBuf::from));
    let mut threads = match common.threads {
        Some(t) => t,
        None => match from_file("threads") {
            Some(v) => v
                .parse()
                .map_err(|_| Failure::Usage(format!("bad threads in config: {v}")))?,
            None => 1,
        },
    };
    if let Ok(env_threads) = std::env::var("HECKE_THREADS") {
        threads = env_threads
            .parse()
            .map_err(|_| Failure::Usage(format!("bad HECKE_THREADS: {env_threads}")))?;
    }
    let max_index = match common.max_index {
        Some(c) => c,
        None => match from_file("max-index") {
            Some(v) => v
                .parse()
                .map_err(|_| Failure::Usage(format!("bad max-index in config: {v}")))?,
            None => DEFAULT_MAX_INDEX,
        },
    };
    let suites = if suites.is_empty() {
        match from_file("suites") {
            Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
            None => Vec::new(),
        }
    } else {
        suites.to_vec()
    };
    for s in &suites {
        if !SUITE_NAMES.contains(&s.as_str()) {
            return usage(format!(
                "unknown suite {s}; known suites: {}",
                SUITE_NAMES.join(", ")
            ));
        }
    }
    Ok(JobConfig {
        cartan_type,
        m,
        denominator,
        orbit,
        format,
        out,
        threads: threads.max(1),
        max_index,
        suites,
    })
}

fn build_datum(cfg: &JobConfig) -> Result<RootDatum, Failure> {
    let ct = CartanType::parse(&cfg.cartan_type)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let weyl = ct.weyl_order();
    let lattice = (cfg.denominator as u128).pow(ct.rank() as u32);
    let size = weyl.saturating_mul(lattice);
    if size > cfg.max_index {
        return usage(format!(
            "index set |W|·N^rank = {size} exceeds the cap of {} (raise --max-index to override)",
            cfg.max_index
        ));
    }
    build_root_datum(&ct).map_err(|e| Failure::Usage(e.to_string()))
}

fn resolve_orbit(
    cfg: &JobConfig,
    datum: &RootDatum,
) -> Result<Option<Vec<TorusPoint>>, Failure> {
    let Some(base) = &cfg.orbit else {
        return Ok(None);
    };
    let Some(point) = parse_torus_point(base, datum.rank()) else {
        return usage(format!("cannot parse orbit base point: {base}"));
    };
    // the base point must live in the (1/N)-lattice
    if !point.scale(cfg.denominator).is_zero() {
        return usage(format!(
            "orbit base point {base} has a denominator not dividing N = {}",
            cfg.denominator
        ));
    }
    Ok(Some(orbit_of(datum, &point)))
}

fn emit(cfg: &JobConfig, content: &str) -> Result<(), Failure> {
    match &cfg.out {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, format!("{content}\n"))
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", tmp.display())))?;
            std::fs::rename(&tmp, path)
                .map_err(|e| Failure::Io(format!("cannot rename onto {}: {e}", path.display())))?;
            Ok(())
        }
    }
}

fn meta_json(cfg: &JobConfig, schema: &str) -> Value {
    json!({
        "schema": format!("hecke/{schema}/1"),
        "type": cfg.cartan_type,
        "m": cfg.m,
        "denominator": cfg.denominator,
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    let (Value::Object(b), Value::Object(e)) = (&mut base, extra) else {
        unreachable!("merge called on non-objects");
    };
    for (k, v) in e {
        b.insert(k, v);
    }
    base
}

fn word_text(d: &RootDatum, w: &hecke_core::rootdata::WeylElt) -> String {
    let word = d.reduced_word(w);
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn point_text(lam: &TorusPoint) -> String {
    torus_point_strings(lam).join(",")
}

fn cmd_enumerate(cfg: &JobConfig) -> Result<(), Failure> {
    let datum = build_datum(cfg)?;
    let orbit = resolve_orbit(cfg, &datum)?;
    let module = HeckeModule::new(&datum, cfg.m, cfg.denominator)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    let keep: Vec<usize> = (0..module.dim())
        .filter(|&i| match &orbit {
            Some(lams) => lams.contains(&module.element(i).lam),
            None => true,
        })
        .collect();

    let items: Vec<hecke_core::extweyl::TwistedInvolution> =
        keep.iter().map(|&i| module.element(i).clone()).collect();
    let by_block = group_by_block(&items);
    let mut blocks: Vec<(TorusPoint, hecke_core::rootdata::WeylElt, usize)> = by_block
        .into_iter()
        .map(|((lam, z), members)| (lam, z, members.len()))
        .collect();
    blocks.sort();
    let block_total: usize = blocks.iter().map(|(_, _, k)| k).sum();
    if block_total != items.len() {
        return Err(Failure::Invariant(format!(
            "block sizes sum to {block_total}, expected {}",
            items.len()
        )));
    }

    match cfg.format.as_str() {
        "json" => {
            let elements: Vec<Value> = items
                .iter()
                .map(|ti| wire::twisted_involution_json(&datum, ti))
                .collect();
            let block_rows: Vec<Value> = blocks
                .iter()
                .map(|(lam, z, k)| {
                    json!({
                        "lambda": wire::torus_point_json(lam),
                        "z": wire::word_json(&datum, z),
                        "size": k,
                    })
                })
                .collect();
            let body = json!({
                "count": items.len(),
                "elements": elements,
                "blocks": block_rows,
                "reconciliation": {
                    "sum_of_block_sizes": block_total,
                    "element_count": items.len(),
                    "bijective": true,
                },
            });
            emit(
                cfg,
                &serde_json::to_string_pretty(&merge(meta_json(cfg, "enumerate"), body)).unwrap(),
            )
        }
        "csv" => {
            let mut out = String::from("w,lambda,z,u,sign\n");
            for ti in &items {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    word_text(&datum, &ti.w),
                    point_text(&ti.lam).replace(',', ";"),
                    word_text(&datum, &ti.z),
                    word_text(&datum, &ti.u),
                    ti.sign
                );
            }
            emit(cfg, out.trim_end())
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "twisted involutions for {} (m = {}, N = {}): {}",
                cfg.cartan_type,
                cfg.m,
                cfg.denominator,
                items.len()
            );
            for ti in &items {
                let _ = writeln!(
                    out,
                    "  w = {:<12} λ = ({})  z = {:<10} u = {:<10} sign = {:+}",
                    word_text(&datum, &ti.w),
                    point_text(&ti.lam),
                    word_text(&datum, &ti.z),
                    word_text(&datum, &ti.u),
                    ti.sign
                );
            }
            let _ = writeln!(out, "blocks: {}", blocks.len());
            for (lam, z, k) in &blocks {
                let _ = writeln!(
                    out,
                    "  z = {:<10} λ = ({})  members = {k}",
                    word_text(&datum, z),
                    point_text(lam)
                );
            }
            let _ = write!(
                out,
                "reconciliation: Σ block sizes = {block_total} = element count"
            );
            emit(cfg, &out)
        }
    }
}

fn parse_generator(d: &RootDatum, gen: &Option<String>) -> Result<usize, Failure> {
    let Some(gen) = gen else {
        return usage("--gen is required, e.g. --gen s1");
    };
    let idx: usize = gen
        .strip_prefix('s')
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| Failure::Usage(format!("cannot parse generator: {gen}")))?;
    if idx == 0 || idx > d.rank() {
        return usage(format!("generator index out of range 1..={}: {gen}", d.rank()));
    }
    Ok(idx - 1)
}

fn cmd_act(cfg: &JobConfig, gen: &Option<String>) -> Result<(), Failure> {
    let datum = build_datum(cfg)?;
    let s = parse_generator(&datum, gen)?;
    let module = HeckeModule::new(&datum, cfg.m, cfg.denominator)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    match cfg.format.as_str() {
        "json" => {
            let rows = wire::action_table_json(&module, s)
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            let body = json!({"generator": format!("s{}", s + 1), "rows": rows});
            emit(
                cfg,
                &serde_json::to_string_pretty(&merge(meta_json(cfg, "act"), body)).unwrap(),
            )
        }
        "csv" => {
            let table = module
                .action_table(s)
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            let mut out = String::from("source,target,coefficient\n");
            for (idx, row) in table.iter().enumerate() {
                let ti = module.element(idx);
                for (j, c) in row {
                    let tj = module.element(*j);
                    let _ = writeln!(
                        out,
                        "{},{},{}",
                        wire::index_key(&datum, &ti.w, &ti.lam),
                        wire::index_key(&datum, &tj.w, &tj.lam),
                        c
                    );
                }
            }
            emit(cfg, out.trim_end())
        }
        _ => {
            let table = module
                .action_table(s)
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "action of T_s{} on {} (m = {}, N = {})",
                s + 1,
                cfg.cartan_type,
                cfg.m,
                cfg.denominator
            );
            for (idx, row) in table.iter().enumerate() {
                let ti = module.element(idx);
                let terms: Vec<String> = row
                    .iter()
                    .map(|(j, c)| {
                        let tj = module.element(*j);
                        format!("({c})·a[{}]", wire::index_key(&datum, &tj.w, &tj.lam))
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  T a[{}] = {}",
                    wire::index_key(&datum, &ti.w, &ti.lam),
                    terms.join(" + ")
                );
            }
            emit(cfg, out.trim_end())
        }
    }
}

fn cmd_verify(cfg: &JobConfig) -> Result<(), Failure> {
    let datum = build_datum(cfg)?;
    let module = HeckeModule::new(&datum, cfg.m, cfg.denominator)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    let outcomes = run_suites(&module, &cfg.suites, cfg.threads)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    let all_passed = outcomes.iter().all(|o| o.passed());

    match cfg.format.as_str() {
        "json" => {
            let suites: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "name": o.name,
                        "checks": o.checks,
                        "passed": o.passed(),
                        "failures": o.failures,
                    })
                })
                .collect();
            let body = json!({"suites": suites, "passed": all_passed});
            emit(
                cfg,
                &serde_json::to_string_pretty(&merge(meta_json(cfg, "verify"), body)).unwrap(),
            )?;
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "verification of {} (m = {}, N = {}), {} basis elements",
                cfg.cartan_type,
                cfg.m,
                cfg.denominator,
                module.dim()
            );
            for o in &outcomes {
                let _ = writeln!(
                    out,
                    "  {:<10} {:>8} checks  {}",
                    o.name,
                    o.checks,
                    if o.passed() { "PASS" } else { "FAIL" }
                );
                for f in o.failures.iter().take(5) {
                    let _ = writeln!(out, "    {f}");
                }
            }
            let _ = write!(out, "overall: {}", if all_passed { "PASS" } else { "FAIL" });
            emit(cfg, &out)?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Invariant("verification suites reported failures".into()))
    }
}

fn cmd_canonical(cfg: &JobConfig) -> Result<(), Failure> {
    let datum = build_datum(cfg)?;
    let orbit = resolve_orbit(cfg, &datum)?;
    let module = HeckeModule::new(&datum, cfg.m, cfg.denominator)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    let table = canonical_basis(&module, orbit.as_deref(), false)
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    match cfg.format.as_str() {
        "json" => {
            let body = json!({"elements": wire::canonical_table_json(&module, &table)});
            emit(
                cfg,
                &serde_json::to_string_pretty(&merge(meta_json(cfg, "canonical"), body)).unwrap(),
            )
        }
        "csv" => {
            let mut out = String::from("index,term,coefficient\n");
            for (&idx, hat) in &table.elements {
                let ti = module.element(idx);
                for (j, c) in hat.terms() {
                    let tj = module.element(j);
                    let _ = writeln!(
                        out,
                        "{},{},{}",
                        wire::index_key(&datum, &ti.w, &ti.lam),
                        wire::index_key(&datum, &tj.w, &tj.lam),
                        c
                    );
                }
            }
            emit(cfg, out.trim_end())
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "canonical basis for {} (m = {}, N = {}): {} elements",
                cfg.cartan_type,
                cfg.m,
                cfg.denominator,
                table.elements.len()
            );
            for (&idx, hat) in &table.elements {
                let ti = module.element(idx);
                let terms: Vec<String> = hat
                    .terms()
                    .map(|(j, c)| {
                        let tj = module.element(j);
                        format!("({c})·a[{}]", wire::index_key(&datum, &tj.w, &tj.lam))
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  â[{}] = {}",
                    wire::index_key(&datum, &ti.w, &ti.lam),
                    terms.join(" + ")
                );
            }
            emit(cfg, out.trim_end())
        }
    }
}

fn cmd_ffcheck(cfg: &JobConfig, q: &Option<u64>) -> Result<(), Failure> {
    let Some(q) = q else {
        return usage("--q is required, e.g. --q 3");
    };
    let field = gf_build(*q).map_err(|e| Failure::Usage(e.to_string()))?;
    let rows = exhaustive_check(&field).map_err(|e| Failure::Invariant(e.to_string()))?;
    let all_passed = rows.iter().all(|r| r.passed());
    match cfg.format.as_str() {
        "json" => {
            let row_values: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "identity": r.identity.to_string(),
                        "a": [r.a.0, r.a.1],
                        "b": [r.b.0, r.b.1],
                        "count": r.count,
                        "expected": r.expected,
                        "passed": r.passed(),
                    })
                })
                .collect();
            let body = json!({
                "schema": "hecke/ffcheck/1",
                "q": q,
                "nonresidue": field.modulus_nonresidue(),
                "rows": row_values,
                "passed": all_passed,
            });
            emit(cfg, &serde_json::to_string_pretty(&body).unwrap())?;
        }
        "csv" => {
            let mut out = String::from("identity,a,b,count,expected,passed\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{}+{}x,{}+{}x,{},{},{}",
                    r.identity,
                    r.a.0,
                    r.a.1,
                    r.b.0,
                    r.b.1,
                    r.count,
                    r.expected,
                    r.passed()
                );
            }
            emit(cfg, out.trim_end())?;
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "finite-field identities over F_{} (modulus x² − {}): {} parameter pairs",
                q * q,
                field.modulus_nonresidue(),
                rows.len()
            );
            let fails: Vec<_> = rows.iter().filter(|r| !r.passed()).collect();
            for r in fails.iter().take(10) {
                let _ = writeln!(
                    out,
                    "  FAIL ({}) a = {:?}, b = {:?}: counted {}, expected {}",
                    r.identity, r.a, r.b, r.count, r.expected
                );
            }
            let _ = write!(
                out,
                "identity (e): {} pairs; identity (f): {} pairs; overall: {}",
                rows.iter().filter(|r| r.identity == 'e').count(),
                rows.iter().filter(|r| r.identity == 'f').count(),
                if all_passed { "PASS" } else { "FAIL" }
            );
            emit(cfg, &out)?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Invariant("finite-field identities failed".into()))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config_path = cli.config.as_deref();
    match &cli.command {
        Command::Enumerate(common) => {
            let cfg = resolve_config(common, config_path, &[])?;
            cmd_enumerate(&cfg)
        }
        Command::Act { common, gen } => {
            let cfg = resolve_config(common, config_path, &[])?;
            cmd_act(&cfg, gen)
        }
        Command::Verify { common, suites } => {
            let cfg = resolve_config(common, config_path, suites)?;
            cmd_verify(&cfg)
        }
        Command::Canonical(common) => {
            let cfg = resolve_config(common, config_path, &[])?;
            cmd_canonical(&cfg)
        }
        Command::Ffcheck { common, q } => {
            let cfg = resolve_config(common, config_path, &[])?;
            cmd_ffcheck(&cfg, q)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
