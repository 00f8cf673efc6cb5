//! Command-line surface, serialization and the persistent GW cache.
//!
//! Subcommands: `info`, `euler`, `tevelev`, `gw`, `verify`. All
//! configuration is on flags; output is deterministic for identical
//! inputs (sorted keys, canonical "p/q" rationals). Exit codes:
//! 0 success, 2 validation error, 3 identity-check failure (`verify`).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::euler::{euler_constructive, euler_closed, euler_shifted};
use crate::gw::{DescendantKey, GWTable};
use crate::qring::{RingContext, RingElement};
use crate::rational::{rat_from_str, rat_to_string};
use crate::space::{validate_space, FanoSpace};
use crate::tevelev::tevelev_direct;
use crate::verify::run_all;
use crate::{Error, Result};

#[derive(Parser)]
#[command(name = "qfano", version, about = "Quantum cohomology of Fano complete intersections, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scalar invariants of the space (χ, index, primitive rank, …).
    Info(CommonArgs),
    /// The quantum Euler class.
    Euler {
        #[command(flatten)]
        common: CommonArgs,
        /// Also emit the constructive route (and re-verify agreement).
        #[arg(long)]
        both: bool,
    },
    /// A virtual Tevelev degree with its full decomposition.
    Tevelev {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
    },
    /// Two-point descendant and α tables up to a curve-degree bound.
    Gw {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        k: u32,
    },
    /// Run the full identity suite on the configured space.
    Verify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Complex dimension r of the complete intersection (r >= 3).
    #[arg(long)]
    dim: u32,
    /// Comma-separated hypersurface degrees, e.g. `2,3`.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Optional persistent GW-table cache (JSON).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Runs the CLI on the given argv; returns (exit code, stdout text).
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(Into::into)) {
        Ok(cli) => cli,
        Err(e) => return (2, e.to_string()),
    };
    let (common, format) = {
        let c = match &cli.command {
            Command::Info(c) | Command::Verify(c) => c,
            Command::Euler { common, .. }
            | Command::Tevelev { common, .. }
            | Command::Gw { common, .. } => common,
        };
        (c, c.format)
    };
    match execute(&cli.command, common) {
        Ok((code, doc)) => (code, render(&doc, format)),
        Err(e) => (2, render(&error_document(&e), format)),
    }
}

fn execute(command: &Command, common: &CommonArgs) -> Result<(i32, Value)> {
    let space = validate_space(common.dim, common.degrees.clone())?;
    let mut table = GWTable::new(space.clone(), 4);
    if let Some(path) = &common.cache {
        if path.exists() {
            load_cache(path, &mut table)?;
        }
    }
    let (code, payload) = match command {
        Command::Info(_) => (0, json!({ "kind": "info" })),
        Command::Euler { both, .. } => {
            let ctx = RingContext::hstar(space.clone());
            let closed = euler_closed(&ctx)?;
            let mut doc = json!({
                "kind": "euler",
                "case": if space.borderline { "borderline" } else { "strict" },
                "closed": ring_element_doc(&closed),
            });
            if space.borderline {
                doc["shifted"] = ring_element_doc(&euler_shifted(&ctx)?);
            }
            if *both {
                let constructive = euler_constructive(&ctx, &mut table)?;
                doc["routes_agree"] = json!(constructive == closed);
                doc["constructive"] = ring_element_doc(&constructive);
            }
            (0, doc)
        }
        Command::Tevelev { genus, points, .. } => {
            let b = tevelev_direct(&space, &mut table, *genus, *points)?;
            let doc = json!({
                "kind": "tevelev",
                "g": b.query.g,
                "n": b.query.n,
                "k": b.query.k,
                "P": b.p_coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
                "b": b.b_coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
                "disc": rat_to_string(&b.discrepancy),
                "value": rat_to_string(&b.value_direct),
                "routes_agree": b.value_direct == b.value_closed,
                "extra_terms": b.extra_terms.iter().map(|(i, q, c)| {
                    json!({ "basis_index": i, "q_power": q, "value": rat_to_string(c) })
                }).collect::<Vec<_>>(),
            });
            (0, doc)
        }
        Command::Gw { k, .. } => (0, gw_tables_doc(&space, &mut table, *k)?),
        Command::Verify(_) => {
            let checks = run_all(&space)?;
            let all_pass = checks.iter().all(|c| c.pass);
            let doc = json!({
                "kind": "verify",
                "all_pass": all_pass,
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            });
            (if all_pass { 0 } else { 3 }, doc)
        }
    };
    if let Some(path) = &common.cache {
        save_cache(path, &table)?;
    }
    Ok((code, json!({ "schema": 1, "space": space_doc(&space), "payload": payload })))
}

fn space_doc(space: &FanoSpace) -> Value {
    json!({
        "dim": space.r,
        "degrees": space.degrees.as_slice(),
        "codim": space.codim,
        "total_degree": space.total_degree,
        "fano_index": space.fano_index,
        "degree": space.degree.to_string(),
        "m_factorial": space.m_factorial.to_string(),
        "euler_characteristic": space.euler_char.to_string(),
        "primitive_rank": space.prim_rank.to_string(),
        "borderline": space.borderline,
    })
}

fn ring_element_doc(el: &RingElement) -> Value {
    json!({
        "basis": el.context.basis.tag(),
        "coefficients": el.terms().iter().map(|(i, q, c)| json!({
            "basis_index": i,
            "q_power": q,
            "value": rat_to_string(c),
        })).collect::<Vec<_>>(),
    })
}

fn gw_tables_doc(space: &FanoSpace, table: &mut GWTable, k_bound: u32) -> Result<Value> {
    table.ensure_k_max(k_bound);
    let r = space.r;
    let mut alphas = Vec::new();
    let mut base_rows = Vec::new();
    let mut two_point = Vec::new();
    for k in 1..=k_bound {
        for s in 0..=r {
            alphas.push(json!({ "k": k, "s": s, "value": rat_to_string(&table.alpha(k, s as i64)) }));
        }
        let row: Vec<String> = (0..=r)
            .map(|i| rat_to_string(&crate::gw::base_descendant(space, k, i)))
            .collect();
        base_rows.push(json!({ "k": k, "row": row }));
        for i in 0..=r {
            let key = DescendantKey { k, a: 0, i };
            let j = key.second_exponent(space);
            if (0..=r as i64).contains(&j) {
                let value = table.descendant(key)?;
                two_point.push(json!({
                    "k": k, "i": i, "j": j, "value": rat_to_string(&value),
                }));
            }
        }
    }
    Ok(json!({
        "kind": "gw",
        "k_max": k_bound,
        "alpha": alphas,
        "base_rows": base_rows,
        "two_point": two_point,
    }))
}

fn error_document(e: &Error) -> Value {
    let kind = match e {
        Error::InvalidSpace(_) => "invalid_space",
        Error::InvalidQuery(_) => "invalid_query",
        Error::OutOfRange(_) => "out_of_range",
        Error::BasisMismatch(_) => "basis_mismatch",
        Error::CurveDegreeBound { .. } => "curve_degree_bound",
        Error::Cache(_) => "cache",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
    };
    json!({ "schema": 1, "error": { "kind": kind, "message": e.to_string() } })
}

fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in flatten(doc) {
                out.push_str(&format!("{k},{v}\n"));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in flatten(doc) {
                out.push_str(&format!("{k} = {v}\n"));
            }
            out
        }
    }
}

/// Flattens a JSON document to sorted `dotted.path -> scalar` pairs.
fn flatten(doc: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, v, out);
                }
            }
            Value::Array(items) => {
                for (i, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), v, out);
                }
            }
            Value::String(s) => out.push((prefix.to_string(), s.clone())),
            other => out.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut out = Vec::new();
    walk("", doc, &mut out);
    out
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    dim: u32,
    degrees: Vec<u32>,
    entries: BTreeMap<String, String>,
}

/// Loads a cache file and merges its entries into the table after the
/// header has been checked against the active space.
pub fn load_cache(path: &Path, table: &mut GWTable) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("malformed cache: {e}")))?;
    let space = table.space();
    if file.schema != 1 {
        return Err(Error::Cache(format!("unsupported cache schema {}", file.schema)));
    }
    if file.dim != space.r || file.degrees != space.degrees.as_slice() {
        return Err(Error::Cache(format!(
            "cache header (dim {}, degrees {:?}) does not match the active space (dim {}, degrees {:?})",
            file.dim,
            file.degrees,
            space.r,
            space.degrees.as_slice()
        )));
    }
    let mut parsed = Vec::with_capacity(file.entries.len());
    for (key, value) in &file.entries {
        let parts: Vec<&str> = key.split(',').collect();
        let [k, a, i] = parts.as_slice() else {
            return Err(Error::Cache(format!("malformed cache key {key:?}")));
        };
        let parse_u32 = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| Error::Cache(format!("malformed cache key {key:?}")))
        };
        let key = DescendantKey {
            k: parse_u32(k)?,
            a: parse_u32(a)?,
            i: parse_u32(i)?,
        };
        if key.k == 0 || key.i > table.space().r || key.second_exponent(table.space()) < 0 {
            return Err(Error::Cache(format!("cache entry {key:?} is inconsistent")));
        }
        parsed.push((key, rat_from_str(value)?));
    }
    for (key, value) in parsed {
        table.insert_entry(key, value);
    }
    Ok(())
}

/// Writes the full memo, sorted by key, for deterministic diffs.
pub fn save_cache(path: &Path, table: &GWTable) -> Result<()> {
    let space = table.space();
    let mut entries: Vec<(DescendantKey, String)> = table
        .memo_entries()
        .map(|(k, v)| (*k, rat_to_string(v)))
        .collect();
    entries.sort();
    let file = CacheFile {
        schema: 1,
        dim: space.r,
        degrees: space.degrees.as_slice().to_vec(),
        entries: entries
            .into_iter()
            .map(|(k, v)| (format!("{},{},{}", k.k, k.a, k.i), v))
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serializable cache");
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
