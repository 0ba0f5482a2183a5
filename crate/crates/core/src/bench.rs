//! Wall-clock comparison of the branching-graph walk against the orbit oracle.

use std::fmt::Write as _;
use std::time::Instant;

use crate::branching::BranchingGraph;
use crate::error::{Error, Result};
use crate::oracle::{irrep_tally, SubspaceMethod};
use crate::partitions::{ProblemConfig, Shape};
use crate::tally::MomentumTally;

pub const CSV_HEADER: &str = "method,n,sigma,N,shape,reps,median_ns,tableaux_or_states,checksum";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Extension,
    /// The walk split over the root's subtrees on the rayon pool.
    ExtensionParallel,
    OrbitSift,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Extension => "extension",
            Method::ExtensionParallel => "extension-parallel",
            Method::OrbitSift => "orbit-sift",
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub method: Method,
    pub config: ProblemConfig,
    pub shape: Shape,
    pub reps: usize,
    pub times_ns: Vec<u128>,
    /// Tableaux visited for the walk, basis states enumerated for the oracle.
    pub work: u64,
    pub checksum: u64,
}

impl BenchRecord {
    pub fn median_ns(&self) -> u128 {
        let mut t = self.times_ns.clone();
        t.sort_unstable();
        t[t.len() / 2]
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},\"{}\",{},{},{},{:016x}",
            self.method.name(),
            self.config.n,
            self.config.sigma,
            self.config.sites,
            self.shape.to_csv(),
            self.reps,
            self.median_ns(),
            self.work,
            self.checksum
        )
    }
}

#[derive(Clone, Debug)]
pub struct BenchCase {
    pub config: ProblemConfig,
    pub shape: Shape,
}

#[derive(Clone, Debug, Default)]
pub struct BenchOptions {
    pub reps: usize,
    pub parallel: bool,
}

pub const MIN_REPS: usize = 5;

fn time_runs<T>(reps: usize, mut f: impl FnMut() -> Result<T>) -> Result<(Vec<u128>, T)> {
    let mut times = Vec::with_capacity(reps);
    let mut last = None;
    for _ in 0..reps {
        let start = Instant::now();
        let out = f()?;
        times.push(start.elapsed().as_nanos());
        last = Some(out);
    }
    Ok((times, last.expect("reps >= 1")))
}

fn extension_run(case: &BenchCase) -> Result<(MomentumTally, u64)> {
    let graph = BranchingGraph::build(&case.shape, case.config.sigma)?.augment();
    let mut tally = MomentumTally::new(case.config.sites);
    let visits = graph.iterate_tableaux(&case.config, |v| tally.add(v.momentum().m, 1))?;
    Ok((tally, visits))
}

fn extension_parallel_run(case: &BenchCase) -> Result<(MomentumTally, u64)> {
    let graph = BranchingGraph::build(&case.shape, case.config.sigma)?.augment();
    let tally = graph.tally_parallel(&case.config)?;
    let visits = tally.total();
    Ok((tally, visits))
}

fn oracle_run(case: &BenchCase) -> Result<(MomentumTally, u64)> {
    let out = irrep_tally(&case.config, &case.shape, SubspaceMethod::Orbit)?;
    Ok((out.tally, out.states_enumerated))
}

/// Times every method on one case. Fails with [`Error::Mismatch`] before
/// reporting anything if the tallies disagree.
pub fn bench_case(case: &BenchCase, opts: &BenchOptions) -> Result<Vec<BenchRecord>> {
    case.config.check_shape(&case.shape)?;
    let reps = opts.reps.max(MIN_REPS);
    let mut methods = vec![Method::Extension, Method::OrbitSift];
    if opts.parallel {
        methods.push(Method::ExtensionParallel);
    }
    let mut records = Vec::new();
    for method in methods {
        let (times_ns, (tally, work)) = match method {
            Method::Extension => time_runs(reps, || extension_run(case))?,
            Method::ExtensionParallel => time_runs(reps, || extension_parallel_run(case))?,
            Method::OrbitSift => time_runs(reps, || oracle_run(case))?,
        };
        records.push(BenchRecord {
            method,
            config: case.config,
            shape: case.shape.clone(),
            reps,
            times_ns,
            work,
            checksum: tally.checksum(),
        });
    }
    let reference = records[0].checksum;
    if let Some(bad) = records.iter().find(|r| r.checksum != reference) {
        return Err(Error::Mismatch {
            method: bad.method.name().to_string(),
            context: format!("{} {}: checksum {:016x} vs {:016x}", case.config, case.shape, bad.checksum, reference),
        });
    }
    Ok(records)
}

pub fn run_benchmark(plan: &[BenchCase], opts: &BenchOptions) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for case in plan {
        out.extend(bench_case(case, opts)?);
    }
    Ok(out)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        let _ = writeln!(s, "{}", r.csv_row());
    }
    s
}

/// The (N/2, N/2) family for SU(2) spin-1/2 chains.
pub fn half_filled_plan(sizes: &[u32]) -> Result<Vec<BenchCase>> {
    sizes
        .iter()
        .map(|&sites| {
            Ok(BenchCase {
                config: ProblemConfig::new(2, 1, sites)?,
                shape: Shape::new(vec![sites / 2, sites - sites / 2])?,
            })
        })
        .collect()
}
