//! Command-line front end. Results go to stdout (or `--out`), diagnostics to stderr.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on usage or input errors.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bench::{half_filled_plan, run_benchmark, to_csv, BenchCase, BenchOptions, MIN_REPS};
use crate::branching::BranchingGraph;
use crate::error::{Error, Result};
use crate::extension::{extend_tableau, shape_tally, shape_tally_parallel, tableau_momentum};
use crate::oracle::{dominant_shapes, irrep_tallies, SubspaceMethod};
use crate::partitions::{decompose_product, enumerate_fillings, su_dimension, ProblemConfig, Shape};
use crate::tally::MomentumTally;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "eyt", version, about = "Momentum classification of SU(n) multiplets via extended Young tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for tally computation (default: one lane).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub sigma: u32,
    #[arg(long = "N")]
    pub sites: u32,
}

impl ConfigArgs {
    fn config(&self) -> Result<ProblemConfig> {
        ProblemConfig::new(self.n, self.sigma, self.sites)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irreps of V_sigma^{(x)N} with multiplicities and dimensions.
    Decompose {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long)]
        json: bool,
    },
    /// Every tableau of a shape with its extended tableau and momentum.
    Tableaux {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long)]
        shape: Shape,
    },
    /// Momentum tallies per shape (all shapes in the product if none given).
    Momenta {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long)]
        shape: Option<Shape>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        per_tableau: bool,
    },
    /// Recompute every tally with the product-basis oracle and compare.
    Verify {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long)]
        shape: Option<Shape>,
        #[arg(long, default_value = "orbit")]
        method: SubspaceMethod,
    },
    /// Branching graph of a shape.
    Graph {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        shape: Shape,
        /// Emit Graphviz DOT instead of the plain listing.
        #[arg(long)]
        dot: bool,
    },
    /// Time the graph walk against the orbit oracle and print CSV.
    Bench {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        sigma: Option<u32>,
        #[arg(long = "N")]
        sites: Option<u32>,
        #[arg(long)]
        shape: Option<Shape>,
        #[arg(long, default_value_t = MIN_REPS)]
        reps: usize,
        /// Also time the parallel walk.
        #[arg(long)]
        parallel: bool,
    },
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32> {
    let threads = cli.threads.unwrap_or(1).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let mut buf = Vec::new();
    let code = pool.install(|| dispatch(&cli.command, threads > 1, &mut buf))?;
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buf)),
        None => io::stdout().write_all(&buf),
    };
    written.map_err(|e| Error::InvalidConfig(format!("cannot write output: {e}")))?;
    Ok(code)
}

fn dispatch(cmd: &Command, parallel: bool, out: &mut Vec<u8>) -> Result<i32> {
    match cmd {
        Command::Decompose { cfg, json } => decompose(&cfg.config()?, *json, out),
        Command::Tableaux { cfg, shape } => tableaux(&cfg.config()?, shape, out),
        Command::Momenta { cfg, shape, json, per_tableau } => {
            momenta(&cfg.config()?, shape.as_ref(), *json, *per_tableau, parallel, out)
        }
        Command::Verify { cfg, shape, method } => verify(&cfg.config()?, shape.as_ref(), *method, out),
        Command::Graph { sigma, shape, dot } => graph(*sigma, shape, *dot, out),
        Command::Bench { n, sigma, sites, shape, reps, parallel } => {
            let plan = match (n, sigma, sites, shape) {
                (None, None, None, None) => half_filled_plan(&[8, 10, 12, 14])?,
                (Some(n), Some(sigma), Some(sites), Some(shape)) => {
                    vec![BenchCase { config: ProblemConfig::new(*n, *sigma, *sites)?, shape: shape.clone() }]
                }
                _ => return Err(Error::InvalidConfig("bench takes either all of --n --sigma --N --shape or none".into())),
            };
            let records = run_benchmark(&plan, &BenchOptions { reps: *reps, parallel: *parallel })?;
            out.extend_from_slice(to_csv(&records).as_bytes());
            Ok(EXIT_OK)
        }
    }
}

fn write_json(out: &mut Vec<u8>, value: &Value) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    out.extend_from_slice(s.as_bytes());
    out.push(b'\n');
    Ok(())
}

fn envelope(config: &ProblemConfig, irreps: Vec<Value>) -> Value {
    json!({ "n": config.n, "sigma": config.sigma, "N": config.sites, "irreps": irreps })
}

/// Numbers that may exceed `u64` are written as JSON strings.
fn big_json(v: &num_bigint::BigUint) -> Value {
    use num_traits::ToPrimitive;
    v.to_u64().map_or_else(|| Value::from(v.to_string()), Value::from)
}

fn decompose(config: &ProblemConfig, as_json: bool, out: &mut Vec<u8>) -> Result<i32> {
    let dec = decompose_product(config);
    if as_json {
        let irreps = dec
            .entries
            .iter()
            .map(|(s, a)| {
                let dim = su_dimension(s, config.n)?;
                Ok(json!({ "shape": s.parts(), "multiplicity": big_json(a), "dimension": big_json(&dim) }))
            })
            .collect::<Result<Vec<_>>>()?;
        return write_json(out, &envelope(config, irreps)).map(|_| EXIT_OK);
    }
    for (s, a) in &dec.entries {
        let _ = writeln!(out, "{s}\tmultiplicity {a}\tdimension {}", su_dimension(s, config.n)?);
    }
    let _ = writeln!(out, "total dimension {}", dec.total_dimension());
    Ok(EXIT_OK)
}

fn tableaux(config: &ProblemConfig, shape: &Shape, out: &mut Vec<u8>) -> Result<i32> {
    config.check_shape(shape)?;
    for t in enumerate_fillings(shape, config.sigma)? {
        let m = tableau_momentum(&t, config)?;
        let _ = writeln!(out, "{t}\t{}\tm={}", extend_tableau(&t), m.m);
    }
    Ok(EXIT_OK)
}

fn tally_for(shape: &Shape, config: &ProblemConfig, parallel: bool) -> Result<MomentumTally> {
    if parallel {
        shape_tally_parallel(shape, config)
    } else {
        shape_tally(shape, config)
    }
}

fn momenta(
    config: &ProblemConfig,
    shape: Option<&Shape>,
    as_json: bool,
    per_tableau: bool,
    parallel: bool,
    out: &mut Vec<u8>,
) -> Result<i32> {
    let shapes: Vec<(Shape, num_bigint::BigUint)> = match shape {
        Some(s) => {
            config.check_shape(s)?;
            let a = decompose_product(config).multiplicity(s);
            vec![(s.clone(), a)]
        }
        None => decompose_product(config).entries,
    };
    let mut irreps = Vec::new();
    for (s, a) in &shapes {
        let tally = tally_for(s, config, parallel)?;
        if as_json {
            let dim = su_dimension(s, config.n)?;
            let mut entry = json!({ "shape": s.parts(), "multiplicity": big_json(a), "dimension": big_json(&dim), "tally": tally.to_json() });
            if per_tableau {
                let rows = enumerate_fillings(s, config.sigma)?
                    .map(|t| {
                        let m = tableau_momentum(&t, config)?;
                        Ok(json!({ "tableau": t.rows(), "extended": extend_tableau(&t).runs(), "m": m.m }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                entry["tableaux"] = Value::from(rows);
            }
            irreps.push(entry);
        } else {
            let _ = writeln!(out, "{s}\t{tally}");
            if per_tableau {
                for t in enumerate_fillings(s, config.sigma)? {
                    let m = tableau_momentum(&t, config)?;
                    let _ = writeln!(out, "  {t}\t{}\tm={}", extend_tableau(&t), m.m);
                }
            }
        }
    }
    if as_json {
        write_json(out, &envelope(config, irreps))?;
    }
    Ok(EXIT_OK)
}

fn verify(config: &ProblemConfig, shape: Option<&Shape>, method: SubspaceMethod, out: &mut Vec<u8>) -> Result<i32> {
    let oracle = irrep_tallies(config, method)?;
    let shapes = match shape {
        Some(s) => {
            config.check_shape(s)?;
            vec![s.clone()]
        }
        None => dominant_shapes(config),
    };
    let mut bad = 0;
    for s in &shapes {
        let ours = shape_tally(s, config)?;
        let theirs = &oracle[s];
        if &ours == theirs {
            let _ = writeln!(out, "ok\t{s}\t{ours}");
        } else {
            bad += 1;
            let _ = writeln!(out, "MISMATCH\t{s}\textension {ours}\toracle {theirs}");
        }
    }
    let _ = writeln!(out, "{} shapes, {bad} mismatches", shapes.len());
    Ok(if bad == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn graph(sigma: u32, shape: &Shape, dot: bool, out: &mut Vec<u8>) -> Result<i32> {
    let g = BranchingGraph::build(shape, sigma)?;
    if dot {
        out.extend_from_slice(g.to_dot().as_bytes());
        return Ok(EXIT_OK);
    }
    for node in g.nodes() {
        let children: Vec<String> = node
            .children
            .iter()
            .map(|e| format!("{} via rows {:?}", g.nodes()[e.child].shape, e.rows))
            .collect();
        let _ = writeln!(out, "{} d={}: {}", node.shape, node.depth, children.join("; "));
    }
    let _ = writeln!(out, "{} nodes, {} tableaux", g.node_count(), g.path_count());
    Ok(EXIT_OK)
}
