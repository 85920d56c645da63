//! The `dpl` command line. Exit codes: 0 success, 1 mathematical rejection,
//! 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arrangement::Arrangement;
use crate::catalog;
use crate::chirotope::{self, Chirotope, ReconstructOptions};
use crate::error::DplError;
use crate::flags::KeyMode;
use crate::mutation::{self, EnumerateOptions, Setting};

#[derive(Parser, Debug)]
#[command(name = "dpl", version, about = "Arrangements of double pseudolines")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an arrangement file and report its invariants.
    Validate { file: String },
    /// Decide whether two arrangements are isomorphic.
    Iso {
        a: String,
        b: String,
        /// Keep the indices fixed.
        #[arg(long)]
        indexed: bool,
        /// Keep the orientations fixed.
        #[arg(long)]
        oriented: bool,
        /// Compare with a marked admissible cell.
        #[arg(long)]
        marked: bool,
    },
    /// Print the chirotope of an arrangement.
    Chirotope { file: String },
    /// Check whether a chirotope has all its k-restrictions realized.
    Check {
        file: String,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Rebuild the arrangement of a chirotope.
    Reconstruct {
        file: String,
        /// Write the arrangement here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accept any genus instead of requiring genus one.
        #[arg(long)]
        any_genus: bool,
    },
    /// Enumerate isomorphism classes by mutation-graph traversal.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = SettingArg::Projective)]
        setting: SettingArg,
        /// Only simple arrangements, connected by flips (the default).
        #[arg(long, conflicts_with = "non_simple")]
        simple_only: bool,
        /// Include arrangements with multiple points, connected by splits and merges.
        #[arg(long)]
        non_simple: bool,
        /// Print the census as one CSV row.
        #[arg(long)]
        table: bool,
        /// Write every class as an arrangement file into this directory.
        #[arg(long)]
        emit_classes: Option<PathBuf>,
        /// Stop after this many classes.
        #[arg(long, env = "DPL_STATE_LIMIT")]
        limit_states: Option<usize>,
        /// Shuffle the traversal order with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the catalog or print one fixture.
    Catalog { name: Option<String> },
    /// Graphviz output for the flag graph or the dual graph.
    Dot {
        file: String,
        #[arg(long, value_enum, default_value_t = GraphArg::Flag)]
        graph: GraphArg,
    },
    /// Face vector, automorphisms, orbit size and Möbius counts.
    Stats { file: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SettingArg {
    Projective,
    Moebius,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphArg {
    Flag,
    Dual,
}

/// Result of a command: exit code and stdout text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn reject(stdout: String) -> Outcome {
        Outcome { code: 1, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: msg }
    }
}

fn line(v: &Value) -> String {
    format!("{v}\n")
}

fn error_kind(e: &DplError) -> String {
    let d = format!("{e:?}");
    d.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
}

fn is_usage(e: &DplError) -> bool {
    matches!(e, DplError::Parse(_) | DplError::UnknownFixture(_) | DplError::MalformedWord(_))
}

fn failure(e: DplError) -> Outcome {
    if is_usage(&e) {
        return Outcome::usage(format!("error: {e}\n"));
    }
    Outcome::reject(line(&json!({"ok": false, "error": error_kind(&e), "message": e.to_string()})))
}

/// Reads a file, falling back to a catalog entry of that name.
fn read_input(name: &str, chirotope: bool) -> Result<String, Outcome> {
    if Path::new(name).exists() {
        return std::fs::read_to_string(name).map_err(|e| Outcome::usage(format!("error: {name}: {e}\n")));
    }
    let fixture = catalog::get(name).ok().map(|f| f.text);
    let found = if chirotope { catalog::chirotope_text(name).ok().or(fixture) } else { fixture };
    found.map(str::to_string).ok_or_else(|| Outcome::usage(format!("error: no such file or catalog entry: {name}\n")))
}

fn load_arrangement(name: &str) -> Result<Arrangement, Outcome> {
    Arrangement::parse(&read_input(name, false)?).map_err(failure)
}

fn load_chirotope(name: &str) -> Result<Chirotope, Outcome> {
    let text = read_input(name, true)?;
    match Chirotope::parse(&text) {
        Ok(c) => Ok(c),
        Err(e) if !is_usage(&e) => Err(failure(e)),
        Err(e) => match Arrangement::parse(&text) {
            Ok(a) => Chirotope::of(&a).map_err(failure),
            Err(_) => Err(failure(e)),
        },
    }
}

fn human_map(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(m) = v {
        for (k, x) in m {
            let _ = writeln!(s, "{k}: {}", if let Value::String(t) = x { t.clone() } else { x.to_string() });
        }
    }
    s
}

fn emit(human: bool, v: Value) -> String {
    if human {
        human_map(&v)
    } else {
        line(&v)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match dispatch(&cli) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Outcome> {
    let human = cli.human;
    match &cli.command {
        Command::Validate { file } => {
            let a = load_arrangement(file)?;
            let v = serde_json::to_value(a.summary()).expect("serializable");
            Ok(Outcome::ok(emit(human, v)))
        }
        Command::Iso { a, b, indexed, oriented, marked } => {
            let x = load_arrangement(a)?;
            let y = load_arrangement(b)?;
            let (fx, fy) = (x.flags(), y.flags());
            let same = if *indexed || *oriented {
                let pinned = |p: &Arrangement| -> Result<Vec<String>, Outcome> {
                    if *indexed && *oriented {
                        return Ok(vec![p.indexed_key()]);
                    }
                    let mut keys = Vec::new();
                    for g in crate::words::SignedPermutation::all(p.indices()) {
                        let keep = g.images().iter().zip(p.indices()).all(|(im, &i)| {
                            (!*indexed || im.base == i) && (!*oriented || im.positive)
                        });
                        if keep {
                            keys.push(p.act(&g).map_err(failure)?.indexed_key());
                        }
                    }
                    keys.sort();
                    Ok(keys)
                };
                x.indices() == y.indices() && pinned(&x)?.contains(&y.indexed_key())
            } else if *marked {
                let keys = |fc: &crate::FlagComplex| -> Vec<Vec<u8>> {
                    let mut v: Vec<_> =
                        fc.admissible_faces().into_iter().map(|f| fc.canonical_key(KeyMode::Marked(f))).collect();
                    v.sort();
                    v
                };
                let kx = keys(&fx);
                !kx.is_empty() && keys(&fy).iter().any(|k| kx.contains(k))
            } else {
                fx.canonical_key(KeyMode::Plain) == fy.canonical_key(KeyMode::Plain)
            };
            let text = emit(human, json!({"isomorphic": same}));
            Ok(if same { Outcome::ok(text) } else { Outcome::reject(text) })
        }
        Command::Chirotope { file } => {
            let a = load_arrangement(file)?;
            let chi = Chirotope::of(&a).map_err(failure)?;
            if human {
                return Ok(Outcome::ok(chi.to_text()));
            }
            let entries: BTreeMap<String, String> = chi
                .names()
                .into_iter()
                .map(|(t, n)| (format!("{} {} {}", t[0], t[1], t[2]), n))
                .collect();
            Ok(Outcome::ok(line(&json!({"indices": chi.indices(), "entries": entries}))))
        }
        Command::Check { file, k } => {
            let chi = load_chirotope(file)?;
            let r = chirotope::is_k_chirotope(&chi, *k);
            let v = json!({
                "accepted": r.accepted,
                "k": k,
                "failing_subset": r.failing_subset,
                "reason": r.reason,
            });
            let text = emit(human, v);
            Ok(if r.accepted { Outcome::ok(text) } else { Outcome::reject(text) })
        }
        Command::Reconstruct { file, out, any_genus } => {
            let chi = load_chirotope(file)?;
            let opts = ReconstructOptions { genus: if *any_genus { None } else { Some(1) } };
            let a = chirotope::reconstruct(&chi, &opts).map_err(failure)?;
            match out {
                Some(p) => {
                    std::fs::write(p, a.to_text()).map_err(|e| Outcome::usage(format!("error: {}: {e}\n", p.display())))?;
                    let v = serde_json::to_value(a.summary()).expect("serializable");
                    Ok(Outcome::ok(emit(human, v)))
                }
                None => Ok(Outcome::ok(a.to_text())),
            }
        }
        Command::Enumerate { n, setting, simple_only: _, non_simple, table, emit_classes, limit_states, seed } => {
            if *n < 2 {
                return Err(Outcome::usage("error: --n must be at least 2\n".into()));
            }
            let opts = EnumerateOptions { simple_only: !*non_simple, state_limit: *limit_states, shuffle_seed: *seed };
            let setting = match setting {
                SettingArg::Projective => Setting::Projective,
                SettingArg::Moebius => Setting::Moebius,
            };
            let census = mutation::census(*n, setting, &opts).map_err(failure)?;
            if let Some(dir) = emit_classes {
                std::fs::create_dir_all(dir).map_err(|e| Outcome::usage(format!("error: {}: {e}\n", dir.display())))?;
                for (i, a) in census.classes.classes.values().enumerate() {
                    let p = dir.join(format!("class{:06}.dpl", i + 1));
                    let a = a.clone().with_name(format!("class{:06}", i + 1));
                    std::fs::write(&p, a.to_text()).map_err(|e| Outcome::usage(format!("error: {}: {e}\n", p.display())))?;
                }
            }
            let r = census.row;
            let complete = census.classes.complete;
            let text = if *table {
                match setting {
                    Setting::Moebius => format!("{},{},{},{},{}\n", r.n, r.a, r.b, r.c, r.d),
                    Setting::Projective => format!("{},{}\n", r.n, census.classes.len()),
                }
            } else {
                let mut v = json!({
                    "n": n,
                    "setting": format!("{setting:?}").to_lowercase(),
                    "classes": census.classes.len(),
                    "complete": complete,
                });
                if setting == Setting::Moebius {
                    v["a"] = json!(r.a);
                    v["b"] = json!(r.b);
                    v["c"] = json!(r.c);
                    v["d"] = json!(r.d);
                } else {
                    v["connected"] = json!(mutation::connectivity_check(&census.classes));
                }
                emit(human, v)
            };
            Ok(if complete { Outcome::ok(text) } else { Outcome::reject(text) })
        }
        Command::Catalog { name } => match name {
            None => {
                let names: Vec<&str> = catalog::all().iter().map(|f| f.name).collect();
                let chis = catalog::chirotope_names();
                if human {
                    Ok(Outcome::ok(names.iter().chain(chis.iter()).map(|s| format!("{s}\n")).collect()))
                } else {
                    Ok(Outcome::ok(line(&json!({"arrangements": names, "chirotopes": chis}))))
                }
            }
            Some(n) => match catalog::get(n) {
                Ok(f) => Ok(Outcome::ok(f.text.to_string())),
                Err(e) => catalog::chirotope_text(n).map(|t| Outcome::ok(t.to_string())).map_err(|_| failure(e)),
            },
        },
        Command::Dot { file, graph } => {
            let fc = load_arrangement(file)?.flags();
            Ok(Outcome::ok(match graph {
                GraphArg::Flag => fc.flag_dot(),
                GraphArg::Dual => fc.dual_dot(),
            }))
        }
        Command::Stats { file } => {
            let a = load_arrangement(file)?;
            let fc = a.flags();
            let m = mutation::moebius_counts(&a);
            let mut v = json!({
                "indices": a.indices(),
                "genus": fc.genus(),
                "vertices": fc.vertex_count(),
                "edges": fc.edge_count(),
                "faces": fc.face_count(),
                "f_vector": fc.face_vector(),
                "simple": a.is_simple(),
                "thin": a.is_thin(),
                "automorphisms": fc.automorphism_order(),
                "orbit_count": a.orbit_count().map_err(failure)?,
                "admissible_cells": fc.admissible_faces().len(),
                "moebius": {"a": m.a, "b": m.b, "c": m.c, "d": m.d},
            });
            if a.n() == 3 {
                v["class"] = json!(chirotope::class_name(&a));
            }
            Ok(Outcome::ok(emit(human, v)))
        }
    }
}
