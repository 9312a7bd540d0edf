//! `wlgenus`: command-line access to refinement, genus, necklace, CFI and
//! experiment operations.
//!
//! Graph arguments take a JSON file or a name such as `K5`, `K3,3`, `C6`,
//! `P4`, `T3x3` or `petersen`. Embedding arguments take a JSON file or
//! `torus-RxC`, `toroidal-K5`, `toroidal-K3,3` or `double-torus`.
//!
//! Exit status: 0 on success, 1 when a predicate is false, 2 on error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;
use wlgenus::cfi::{cfi_pair, cfi_threshold};
use wlgenus::corpus::{corpus, named_embedding, named_graph, Corpus};
use wlgenus::dot::{graph_to_dot, necklace_to_dot, styled_dot, Style};
use wlgenus::experiment::{run_experiment, ExperimentConfig};
use wlgenus::graph::json as gjson;
use wlgenus::oracle::{enumerate_graphs, find_isomorphism};
use wlgenus::surface::{
    embedding_euler_genus, graph_euler_genus_with, json as ejson, trace_faces, EmbeddedGraph, GenusConfig,
};
use wlgenus::topo::{cut_graph, find_reducing_necklace, report};
use wlgenus::wl::{colouring_to_json, distinguishes, wl_dimension_within, wl_refine};
use wlgenus::{ColouredGraph, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "wlgenus", version, about = "Weisfeiler-Leman refinement and surface-embedded graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Wall-clock budget for genus searches and experiments.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stable k-WL colouring of a graph.
    Refine {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        graph: String,
    },
    /// Whether k-WL distinguishes two graphs.
    Distinguish {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Least k for which k-WL identifies a graph within a family.
    WlDim {
        #[arg(long)]
        graph: String,
        /// Corpus name or JSON corpus file; all graphs of the same order by default.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
    /// Euler genus of a graph, or of a given embedding.
    Genus {
        #[arg(long, conflicts_with = "embedding", required_unless_present = "embedding")]
        graph: Option<String>,
        #[arg(long)]
        embedding: Option<String>,
    },
    /// Facial walks of an embedding.
    Faces {
        #[arg(long)]
        embedding: String,
    },
    /// A reducing necklace of an embedding.
    Necklace {
        #[arg(long)]
        embedding: String,
    },
    /// The cut graph of a reducing necklace.
    Cut {
        #[arg(long)]
        embedding: String,
    },
    /// The CFI pair over a base graph.
    Cfi {
        #[arg(long)]
        base: String,
        /// Writes `<prefix>_untwisted.json` and `<prefix>_twisted.json`.
        #[arg(long)]
        out_prefix: Option<String>,
        /// Also report the least distinguishing k up to this bound.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Whether two graphs are isomorphic.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// One graph per isomorphism class of the given order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Runs a named experiment.
    Experiment {
        #[arg(long)]
        name: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
}

enum Outcome {
    Ok,
    False,
}

fn read_json(path: &str) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?;
    Ok(serde_json::from_str(&text)?)
}

fn load_graph(arg: &str) -> Result<ColouredGraph, Error> {
    if Path::new(arg).is_file() {
        return gjson::from_json(&read_json(arg)?);
    }
    named_graph(arg).ok_or_else(|| Error::InvalidArgument(format!("{arg}: no such file or graph name")))
}

fn load_embedding(arg: &str) -> Result<EmbeddedGraph, Error> {
    if Path::new(arg).is_file() {
        return ejson::from_json(&read_json(arg)?);
    }
    named_embedding(arg).ok_or_else(|| Error::InvalidArgument(format!("{arg}: no such file or embedding name")))
}

fn load_family(arg: &str) -> Result<Vec<ColouredGraph>, Error> {
    if Path::new(arg).is_file() {
        return Ok(Corpus::from_json(&read_json(arg)?)?.graphs());
    }
    Ok(corpus(arg)?.graphs())
}

fn genus_config(g: &Global) -> GenusConfig {
    GenusConfig {
        time_limit: g.budget_ms.map(Duration::from_millis),
        ..GenusConfig::default()
    }
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn verdict(flag: bool) -> Outcome {
    if flag {
        Outcome::Ok
    } else {
        Outcome::False
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    let dot = g.format == Format::Dot;
    match cli.command {
        Command::Refine { k, graph } => {
            let graph = load_graph(&graph)?;
            let s = wl_refine(&graph, k)?;
            if dot {
                let mut style = Style::default();
                for v in 0..graph.order() {
                    style.vertex.insert(v, format!("label=\"{v}:c{}\"", s.vertex_colour(v).0));
                }
                print!("{}", styled_dot(&graph, &style));
            } else {
                emit(&colouring_to_json(&s));
            }
            Ok(Outcome::Ok)
        }
        Command::Distinguish { k, a, b } => {
            let d = distinguishes(&load_graph(&a)?, &load_graph(&b)?, k)?;
            emit(&json!({"k": k, "distinguished": d}));
            Ok(verdict(d))
        }
        Command::WlDim { graph, family, kmax } => {
            let graph = load_graph(&graph)?;
            let family = match family {
                Some(f) => load_family(&f)?,
                None => enumerate_graphs(graph.order(), false)?,
            };
            let dim = wl_dimension_within(&graph, &family, kmax)?;
            emit(&json!({"dimension": dim, "kmax": kmax, "family_size": family.len()}));
            Ok(verdict(dim.is_some()))
        }
        Command::Genus { graph, embedding } => {
            if let Some(e) = embedding {
                let emb = load_embedding(&e)?;
                let faces = trace_faces(&emb)?.len();
                emit(&json!({
                    "embedding_euler_genus": embedding_euler_genus(&emb)?,
                    "faces": faces,
                    "orientable": emb.is_orientable(),
                }));
            } else {
                let graph = load_graph(graph.as_deref().expect("clap requires one input"))?;
                emit(&json!({"euler_genus": graph_euler_genus_with(&graph, &genus_config(g))?}));
            }
            Ok(Outcome::Ok)
        }
        Command::Faces { embedding } => {
            let emb = load_embedding(&embedding)?;
            let faces: Vec<Vec<usize>> = trace_faces(&emb)?.iter().map(|f| f.vertices(&emb)).collect();
            emit(&json!({"faces": faces, "euler_genus": embedding_euler_genus(&emb)?}));
            Ok(Outcome::Ok)
        }
        Command::Necklace { embedding } => {
            let emb = load_embedding(&embedding)?;
            let b = find_reducing_necklace(&emb)?;
            if dot {
                print!("{}", necklace_to_dot(emb.graph(), &b, None));
            } else {
                emit(&report::necklace_json(&b));
            }
            Ok(Outcome::Ok)
        }
        Command::Cut { embedding } => {
            let emb = load_embedding(&embedding)?;
            let b = find_reducing_necklace(&emb)?;
            let cut = cut_graph(&emb, &b)?;
            if dot {
                print!("{}", necklace_to_dot(emb.graph(), &b, Some(&cut)));
            } else {
                emit(&report::cut_json(&emb, &cut, &genus_config(g))?);
            }
            Ok(Outcome::Ok)
        }
        Command::Cfi { base, out_prefix, kmax } => {
            let pair = cfi_pair(&load_graph(&base)?)?;
            let mut out = json!({
                "order": pair.untwisted.order(),
                "twist": [pair.twist.0, pair.twist.1],
            });
            if let Some(kmax) = kmax {
                out["threshold"] = json!(cfi_threshold(&pair, kmax, &Default::default())?);
            }
            match out_prefix {
                Some(p) => {
                    let (ext, render): (&str, fn(&ColouredGraph) -> String) = if dot {
                        ("dot", graph_to_dot)
                    } else {
                        ("json", |x| serde_json::to_string_pretty(&gjson::to_json(x)).expect("json"))
                    };
                    for (tag, x) in [("untwisted", &pair.untwisted), ("twisted", &pair.twisted)] {
                        let path = format!("{p}_{tag}.{ext}");
                        std::fs::write(&path, render(x)).map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?;
                        out[tag] = json!(path);
                    }
                }
                None => {
                    out["untwisted"] = gjson::to_json(&pair.untwisted);
                    out["twisted"] = gjson::to_json(&pair.twisted);
                }
            }
            emit(&out);
            Ok(Outcome::Ok)
        }
        Command::Iso { a, b } => {
            let w = find_isomorphism(&load_graph(&a)?, &load_graph(&b)?)?;
            emit(&json!({"isomorphic": w.is_some(), "witness": w}));
            Ok(verdict(w.is_some()))
        }
        Command::Enumerate { n, connected } => {
            let graphs = enumerate_graphs(n, connected)?;
            if dot {
                for x in &graphs {
                    print!("{}", graph_to_dot(x));
                }
            } else {
                let list: Vec<Value> = graphs.iter().map(gjson::to_json).collect();
                emit(&json!({"n": n, "connected": connected, "count": graphs.len(), "graphs": list}));
            }
            Ok(Outcome::Ok)
        }
        Command::Experiment { name, max_order, samples } => {
            let cfg = ExperimentConfig {
                seed: g.seed,
                budget: g.budget_ms.map(Duration::from_millis),
                max_order,
                samples,
                ..ExperimentConfig::default()
            };
            let r = run_experiment(&name, &cfg)?;
            println!("{}", r.to_pretty());
            Ok(verdict(r.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
