use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use k3cr3::catalog::{self, canonical_json};
use k3cr3::exec::{self, Exec};
use k3cr3::extensions;
use k3cr3::orbits::{self, Hypothesis};
use k3cr3::partitions::enumerate_extensions;
use k3cr3::reproduce::{self, Options, Report};
use k3cr3::rr::{self, Basket};
use k3cr3::AbelianGroup;

#[derive(Parser)]
#[command(name = "k3cr3", version, about = "Finite abelian groups acting on rationally connected threefolds: classification tables")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Order bound for brute-force sweeps and oracles.
    #[arg(long, default_value_t = 128, global = true)]
    max_order: u64,
    /// Run sequentially even when built with the parallel feature.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Hyp {
    General,
    AllCyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Product type / K3 exceptional / unresolved verdict for a group.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// All extensions of QUOT by SUB.
    Extensions {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        quot: String,
    },
    /// Baskets allowed by orbifold Riemann-Roch and the Miyaoka bound.
    Baskets {
        #[arg(long, default_value_t = 1)]
        h0: i64,
        #[arg(long, default_value_t = 1)]
        index: u32,
    },
    /// Keep the baskets of a JSON file whose points group into admissible orbits.
    FilterBaskets {
        #[arg(long)]
        group: String,
        /// JSON array of baskets, each an array of {"r","b","n"} objects.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Hyp::AllCyclic)]
        hypothesis: Hyp,
    },
    /// Regenerate a table and compare with the expected data.
    Reproduce {
        #[arg(long, required_unless_present = "all")]
        target: Option<String>,
        #[arg(long)]
        all: bool,
        /// Rewrite the expected snapshots instead of comparing.
        #[arg(long)]
        bless: bool,
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,
    },
    /// Static catalog data.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    Dump,
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn parse_group(s: &str) -> Result<AbelianGroup, Failure> {
    s.parse().map_err(|e| usage(format!("bad group {s:?}: {e}")))
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => print!("{}", canonical_json(value)),
        Format::Table => print!("{}", table()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    exec::init_threads_from_env();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match cli.command {
        Command::Classify { group } => {
            let g = parse_group(&group)?;
            let c = extensions::classify_group(&g);
            let v = json!({"group": c.group, "verdict": c.verdict, "family": c.family, "witnesses": c.witnesses});
            emit(cli.format, &v, || {
                let mut s = format!("{}: {:?}\n", c.group, c.verdict);
                if let Some(f) = c.family {
                    s += &format!("  product-type family {f}\n");
                }
                for w in &c.witnesses {
                    s += &format!("  0 -> Z/{} -> G -> {} -> 0\n", w.m, w.h);
                }
                s
            });
            Ok(0)
        }
        Command::Extensions { sub, quot } => {
            let (a, b) = (parse_group(&sub)?, parse_group(&quot)?);
            let exts: Vec<AbelianGroup> = enumerate_extensions(&a, &b).into_iter().collect();
            let v = json!({"sub": a, "quot": b, "extensions": exts});
            emit(cli.format, &v, || exts.iter().map(|g| format!("{g}\n")).collect());
            Ok(0)
        }
        Command::Baskets { h0, index } => {
            let all = rr::enumerate_baskets(h0, index, exec).map_err(|e| usage(e.to_string()))?;
            let v = json!({"h0": h0, "index": index, "count": all.len(), "baskets": all});
            emit(cli.format, &v, || {
                let mut s = format!("{} baskets\n", all.len());
                for b in &all {
                    s += &format!("{b}    (-K)^3 = {}\n", b.anticanonical_cube(h0));
                }
                s
            });
            Ok(0)
        }
        Command::FilterBaskets { group, input, hypothesis } => {
            let h = parse_group(&group)?;
            let text = fs::read_to_string(&input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
            let baskets: Vec<Basket> = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", input.display())))?;
            let baskets = baskets
                .into_iter()
                .map(|b| Basket::new(b.points().iter().copied()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(e.to_string()))?;
            let hyp = match hypothesis {
                Hyp::General => Hypothesis::General,
                Hyp::AllCyclic => Hypothesis::AllCyclic,
            };
            let kept = orbits::filter_basket_table(&h, &baskets, hyp, exec).map_err(|e| usage(e.to_string()))?;
            let v = json!({"group": h, "kept": kept.iter().map(|f| json!({
                "basket": f.basket,
                "groupings": f.groupings.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>()});
            emit(cli.format, &v, || {
                let mut s = format!("{} of {} baskets kept for {h}\n", kept.len(), baskets.len());
                for f in &kept {
                    let gr: Vec<String> = f.groupings.iter().map(|g| g.to_string()).collect();
                    s += &format!("{}    {}\n", f.basket, gr.join(" | "));
                }
                s
            });
            Ok(0)
        }
        Command::Reproduce { target, all, bless, data_dir } => {
            let opts = Options { max_order: cli.max_order, exec };
            let targets: Vec<String> = if all {
                reproduce::TARGETS.iter().map(|s| s.to_string()).collect()
            } else {
                let t = target.expect("clap enforces --target or --all");
                if !reproduce::TARGETS.contains(&t.as_str()) {
                    return Err(usage(format!("unknown target {t:?}; known: {}", reproduce::TARGETS.join(", "))));
                }
                vec![t]
            };
            let mut ok = true;
            let mut values = Vec::new();
            let mut text = String::new();
            for t in &targets {
                let report = reproduce::reproduce(t, &opts).map_err(|e| usage(e.to_string()))?;
                let snap = check_snapshot(&data_dir, &report, bless)?;
                ok &= report.ok() && snap.is_none();
                text += &report.render_table();
                if let Some(diff) = &snap {
                    text += &format!("snapshot mismatch: {diff}\n");
                }
                values.push(report.to_json());
            }
            let v = if values.len() == 1 { values.pop().expect("one report") } else { Value::Array(values) };
            emit(cli.format, &v, || text);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Catalog { action: CatalogAction::Dump } => {
            match cli.format {
                Format::Json => print!("{}", catalog::catalog_json()),
                Format::Table => print!("{}", catalog::catalog_json()),
            }
            Ok(0)
        }
    }
}

fn snapshot_path(dir: &Path, target: &str) -> PathBuf {
    dir.join("expected").join(format!("{target}.json"))
}

/// With `bless`, writes the snapshot; otherwise compares against it if present.
fn check_snapshot(dir: &Path, report: &Report, bless: bool) -> Result<Option<String>, Failure> {
    let path = snapshot_path(dir, &report.target);
    let text = canonical_json(&report.to_json());
    if bless {
        fs::create_dir_all(path.parent().expect("has parent")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(None);
    }
    match fs::read_to_string(&path) {
        Ok(old) if old == text => Ok(None),
        Ok(_) => Ok(Some(format!("{} differs from the regenerated output", path.display()))),
        Err(_) => Ok(None),
    }
}
