use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand, ValueEnum};
use genuine_smalls::cache::{table_to_json, Ctx};
use genuine_smalls::checks::{self, Status};
use genuine_smalls::{cartan, json, tables};
use genuine_smalls_core::ktypes::{d_rows, family, ktypes_a, pairs, ARep, PairsGrid};
use genuine_smalls_core::orbits::{real_forms, springer_label, Table1Orbit};
use genuine_smalls_core::params::star_trace;
use genuine_smalls_core::rd::{enumerate_rd, rd_class, render, DynkinDiagram};
use genuine_smalls_core::rootsys::canonical_lambda;
use genuine_smalls_core::weylrep::{classical_labels, degree_b_labels};
use genuine_smalls_core::{CartanKind, CartanType, RootSystem};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "genuine-smalls", version, about = "Tables and checks for small genuine representations of split double covers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Small orbits attached to ρ/2: Δ(λ), dim O, O and j(sgn).
    Table1 {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Real forms of the small orbit, computed and printed.
    Table2 {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Elements of R_D with their classes in P/(2P+R).
    Table3,
    /// Run the claim registry.
    Verify {
        /// `all`, a module name, or a claim id prefix.
        #[arg(long, default_value = "all")]
        scope: String,
        /// Include the slow oracle targets.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Parameter schemes surviving condition (★).
    CountStar {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: usize,
        /// One JSON line per examined scheme.
        #[arg(long)]
        trace: bool,
    },
    /// K-type families by representation.
    Ktypes {
        /// `spin44`, `spin(n,n)` or `slN`.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// The (central character × real orbit) grid.
    Pairs {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// JSON document for one entity.
    Dump {
        entity: String,
        #[arg(long = "type")]
        kind: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
}

/// Bad arguments that clap cannot see.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

fn parse_type(kind: Option<&str>, rank: Option<usize>) -> Result<CartanType> {
    let k = kind.ok_or_else(|| usage("--type is required"))?;
    cartan(k, rank).map_err(|e| usage(format!("{e:#}")))
}

fn family_kind(kind: &str) -> Result<CartanKind> {
    match kind.trim() {
        "A" | "a" => Ok(CartanKind::A),
        "D" | "d" => Ok(CartanKind::D),
        other => Err(usage(format!("--type must be A or D, got {other}"))),
    }
}

/// `(kind, n)` for `spin44`, `spin(5,5)`, `sl6`.
fn parse_group(g: &str) -> Result<(CartanKind, usize)> {
    let s = g.trim().to_ascii_lowercase();
    let bad = || usage(format!("unknown group {g}; use spin44, spin(n,n) or slN"));
    if s == "spin44" {
        return Ok((CartanKind::D, 4));
    }
    if let Some(rest) = s.strip_prefix("spin(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = rest.split_once(',').ok_or_else(bad)?;
        let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        return if a == b && a >= 4 { Ok((CartanKind::D, a)) } else { Err(bad()) };
    }
    if let Some(n) = s.strip_prefix("sl").and_then(|r| r.trim_start_matches('(').split([',', ')']).next()) {
        let n: usize = n.parse().map_err(|_| bad())?;
        return if n >= 2 { Ok((CartanKind::A, n)) } else { Err(bad()) };
    }
    Err(bad())
}

fn ktype_families(kind: CartanKind, n: usize, bound: usize) -> Result<Value> {
    let mut out = serde_json::Map::new();
    match kind {
        CartanKind::D => {
            for row in d_rows(n)? {
                let fam: Vec<Value> = family(&row, n, bound).iter().map(json::ktype).collect();
                out.insert(row.name(n / 2).to_string(), json!({ "source": row.source, "k_types": fam }));
            }
        }
        _ => {
            let reps: Vec<ARep> = if n % 2 == 1 { vec![ARep::Sh1] } else { ARep::all().to_vec() };
            for r in reps {
                let fam: Vec<Value> = ktypes_a(r, n, bound)?.iter().map(json::ktype).collect();
                out.insert(r.name().to_string(), json!({ "k_types": fam }));
            }
        }
    }
    let group = if kind == CartanKind::D { format!("Spin({n},{n})") } else { format!("SL({n},R)") };
    Ok(json!({ "group": group, "bound": bound, "families": out }))
}

fn pairs_text(g: &PairsGrid) -> String {
    let mut s = format!("χ \\ O   {}\n", (1..=g.orbits).map(|o| format!("{:<26}", format!("O{o}"))).collect::<String>().trim_end());
    for chi in 1..=g.chars {
        s += &format!("χ{chi:<6} ");
        for o in 1..=g.orbits {
            let cell: Vec<String> = g
                .entries
                .iter()
                .filter(|e| e.chi == chi && e.orbit == o)
                .map(|e| format!("{} {}", e.name, e.lowest))
                .collect();
            s += &format!("{:<26}", if cell.is_empty() { "·".to_string() } else { cell.join("; ") });
        }
        s = s.trim_end().to_string() + "\n";
    }
    s
}

fn dump_orbits(t: CartanType) -> Result<Value> {
    match genuine_smalls_core::orbits::orbit_from_table1(t)? {
        Table1Orbit::Classical(o) => {
            let springer = springer_label(&o)?;
            let mut forms = Vec::new();
            for col in genuine_smalls::fixtures::TABLE2.iter().filter(|c| c.kind == t.kind) {
                let n = genuine_smalls::fixtures::row_n(t.kind, t.rank);
                if !col.applies(n) {
                    continue;
                }
                for rf in col.real_forms(n) {
                    let diagrams: Vec<Value> = real_forms(&o, rf)?.iter().map(json::signed_partition).collect();
                    forms.push(json!({ "real_form": rf.to_string(), "orbits": diagrams }));
                }
            }
            Ok(json!({ "orbit": json::orbit(&o, &springer), "real_forms": forms }))
        }
        Table1Orbit::Exceptional { name, dim } => Ok(json!({ "orbit": { "type": t.to_string(), "label": name, "dim": dim } })),
    }
}

fn dump_rd(t: CartanType) -> Result<Value> {
    let rs = RootSystem::from_type(t)?;
    let d = DynkinDiagram::of(&rs)?;
    let subsets: Vec<Value> = enumerate_rd(&d)
        .iter()
        .map(|s| Ok(json!({ "subset": s.0, "diagram": render(&d, s), "class": rd_class(&rs, s)?.0 })))
        .collect::<Result<_>>()?;
    Ok(json!({ "type": t.to_string(), "diagram": d.label, "subsets": subsets }))
}

fn dump_chartable(ctx: &Ctx, t: CartanType) -> Result<Value> {
    let o = ctx.oracle(t)?;
    let labels = if t.kind.is_classical() { classical_labels(&o.group, &o.table)? } else { degree_b_labels(&o.table) };
    let mut v = table_to_json(&o.table);
    for (x, l) in v["irreps"].as_array_mut().unwrap().iter_mut().zip(&labels) {
        x["label"] = json::label(l);
        x["name"] = json!(l.to_string());
    }
    Ok(v)
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn out(text: &str) {
    let mut o = std::io::stdout().lock();
    if let Err(e) = o.write_all(text.as_bytes()).and_then(|_| o.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn emit(fmt: Format, text: &str, v: &Value) {
    match fmt {
        Format::Text => out(text),
        Format::Json => out(&(serde_json::to_string_pretty(v).unwrap() + "\n")),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Table1 { max_rank } => {
            if !(2..=12).contains(&max_rank) {
                return Err(usage("--max-rank must lie in 2..=12"));
            }
            let r = tables::table1(max_rank)?;
            emit(fmt, &r.text, &r.json);
        }
        Cmd::Table2 { max_n } => {
            if !(4..=12).contains(&max_n) {
                return Err(usage("--max-n must lie in 4..=12"));
            }
            let r = tables::table2(max_n)?;
            emit(fmt, &r.text, &r.json);
        }
        Cmd::Table3 => {
            let r = tables::table3()?;
            emit(fmt, &r.text, &r.json);
        }
        Cmd::Verify { scope, deep, threads } => {
            let claims = checks::select(&scope, deep).map_err(|e| usage(format!("{e:#}")))?;
            let mut ctx = Ctx::from_env();
            ctx.progress = deep;
            let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let lines = checks::run(&claims, &ctx, threads);
            emit(fmt, &checks::report_text(&lines), &checks::report_json(&lines));
            if lines.iter().any(|l| l.status == Status::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::CountStar { kind, n, trace } => {
            let k = family_kind(&kind)?;
            let min = if k == CartanKind::D { 4 } else { 2 };
            if n < min || n > 12 {
                return Err(usage(format!("--n must lie in {min}..=12")));
            }
            let t = star_trace(k, n)?;
            let count = genuine_smalls_core::params::count_star(k, n)?;
            let summary = json!({ "type": k.letter().to_string(), "n": n, "count": count });
            if fmt == Format::Json || trace {
                if trace {
                    for s in &t {
                        out(&(serde_json::to_string(&json::scheme_trace(s))? + "\n"));
                    }
                }
                out(&(serde_json::to_string(&summary)? + "\n"));
            } else {
                out(&format!("count_star({}, {n}) = {count}\n", k.letter()));
            }
        }
        Cmd::Ktypes { group, bound } => {
            let (k, n) = parse_group(&group)?;
            let v = ktype_families(k, n, bound)?;
            let mut text = String::new();
            for (name, f) in v["families"].as_object().unwrap() {
                let ks: Vec<&str> = f["k_types"].as_array().unwrap().iter().map(|x| x["text"].as_str().unwrap()).collect();
                text += &format!("{name}: {}\n", ks.join(", "));
            }
            emit(fmt, &text, &v);
        }
        Cmd::Pairs { kind, n, bound } => {
            let k = family_kind(&kind)?;
            let g = pairs(k, n, bound).map_err(|e| usage(e.to_string()))?;
            emit(fmt, &pairs_text(&g), &json::pairs_grid(&g));
        }
        Cmd::Dump { entity, kind, rank, n, group, bound } => {
            let ctx = Ctx::from_env();
            let v = match entity.as_str() {
                "rootsys" => {
                    let rs = RootSystem::from_type(parse_type(kind.as_deref(), rank)?)?;
                    json::root_system(&rs, &canonical_lambda(&rs))
                }
                "orbits" => dump_orbits(parse_type(kind.as_deref(), rank)?)?,
                "rd" => dump_rd(parse_type(kind.as_deref(), rank)?)?,
                "chartable" => dump_chartable(&ctx, parse_type(kind.as_deref(), rank)?)?,
                "ktypes" => {
                    let (k, n) = match (group, kind, n) {
                        (Some(g), _, _) => parse_group(&g)?,
                        (None, Some(k), Some(n)) => (family_kind(&k)?, n),
                        _ => return Err(usage("dump ktypes needs --group, or --type and --n")),
                    };
                    ktype_families(k, n, bound)?
                }
                "pairs" => {
                    let k = family_kind(kind.as_deref().ok_or_else(|| usage("--type is required"))?)?;
                    let n = n.ok_or_else(|| usage("--n is required"))?;
                    json::pairs_grid(&pairs(k, n, bound).map_err(|e| usage(e.to_string()))?)
                }
                other => {
                    return Err(usage(format!(
                        "unknown entity {other}; use rootsys, orbits, rd, chartable, ktypes or pairs"
                    )))
                }
            };
            out(&(serde_json::to_string_pretty(&v)? + "\n"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
