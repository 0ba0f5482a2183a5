//! Brute-force momentum tallies from the product basis of `V_σ^{⊗N}`.
//!
//! A total-weight subspace is spanned by product states and is closed under the
//! translation `C_N` (site `j` to `j + 1`), which permutes the basis. Its tally is
//! obtained either from the orbits of that permutation or from the cyclic
//! characters `Tr C_N^k`. Per-irrep tallies follow by unit-triangular elimination
//! with Kostka numbers, from the highest weight down.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{kostka, partitions_with_max_rows, ProblemConfig, Shape};
use crate::tally::MomentumTally;

/// Largest product basis the oracle will enumerate by default.
pub const DEFAULT_BUDGET: u128 = 20_000_000;

/// Basis states of one site: the multisets of `|σ|` colours out of `n`, as occupation vectors.
pub fn site_states(n: u32, sigma: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n as usize];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    rec(0, sigma, &mut cur, &mut out);
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SubspaceMethod {
    /// Orbits of the translation on the basis (diagonalising a permutation matrix).
    #[default]
    Orbit,
    /// Cyclic characters via fixed-point counts.
    Character,
}

impl std::str::FromStr for SubspaceMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orbit" => Ok(SubspaceMethod::Orbit),
            "character" => Ok(SubspaceMethod::Character),
            other => Err(Error::InvalidConfig(format!("unknown method {other:?}"))),
        }
    }
}

/// Product states with a fixed total content, stored as site-state indices.
#[derive(Clone, Debug)]
pub struct WeightSubspace {
    config: ProblemConfig,
    weight: Vec<u32>,
    site_states: Vec<Vec<u32>>,
    /// `dim * N` indices, one row per basis state.
    states: Vec<u16>,
}

impl WeightSubspace {
    pub fn weight(&self) -> &[u32] {
        &self.weight
    }

    pub fn dimension(&self) -> usize {
        self.states.len() / self.config.sites as usize
    }

    pub fn site_states(&self) -> &[Vec<u32>] {
        &self.site_states
    }

    pub fn states(&self) -> impl Iterator<Item = &[u16]> {
        self.states.chunks_exact(self.config.sites as usize)
    }

    /// Total content of one basis state.
    pub fn content(&self, state: &[u16]) -> Vec<u32> {
        let mut w = vec![0; self.config.n as usize];
        for &s in state {
            for (a, b) in w.iter_mut().zip(&self.site_states[s as usize]) {
                *a += b;
            }
        }
        w
    }

    pub fn tally(&self, method: SubspaceMethod) -> MomentumTally {
        match method {
            SubspaceMethod::Orbit => orbit_tally(self),
            SubspaceMethod::Character => character_tally(self),
        }
    }
}

pub fn weight_subspace(config: &ProblemConfig, weight: &[u32]) -> Result<WeightSubspace> {
    weight_subspace_with_budget(config, weight, DEFAULT_BUDGET)
}

/// Enumerates every product state of total content `weight`, in lexicographic
/// order of site-state indices.
pub fn weight_subspace_with_budget(config: &ProblemConfig, weight: &[u32], budget: u128) -> Result<WeightSubspace> {
    if weight.len() != config.n as usize || weight.iter().sum::<u32>() != config.total_boxes() {
        return Err(Error::WeightMismatch { weight: weight.to_vec(), expected: config.total_boxes() });
    }
    let site_states = site_states(config.n, config.sigma);
    if site_states.len() > usize::from(u16::MAX) {
        return Err(Error::BudgetExceeded { required: site_states.len() as u128, budget: u128::from(u16::MAX) });
    }
    let sites = config.sites as usize;
    let mut states = Vec::new();
    let mut cur = vec![0u16; sites];
    let mut left = weight.to_vec();
    let mut count: u128 = 0;
    let mut over = false;
    enumerate_sites(&site_states, 0, &mut cur, &mut left, &mut |s| {
        count += 1;
        if count > budget {
            over = true;
            return false;
        }
        states.extend_from_slice(s);
        true
    });
    if over {
        return Err(Error::BudgetExceeded { required: count, budget });
    }
    Ok(WeightSubspace { config: *config, weight: weight.to_vec(), site_states, states })
}

fn enumerate_sites(
    site_states: &[Vec<u32>],
    i: usize,
    cur: &mut [u16],
    left: &mut [u32],
    emit: &mut impl FnMut(&[u16]) -> bool,
) -> bool {
    if i == cur.len() {
        return emit(cur);
    }
    for (idx, occ) in site_states.iter().enumerate() {
        if occ.iter().zip(left.iter()).all(|(o, l)| o <= l) {
            left.iter_mut().zip(occ).for_each(|(l, o)| *l -= o);
            cur[i] = idx as u16;
            let go_on = enumerate_sites(site_states, i + 1, cur, left, emit);
            left.iter_mut().zip(occ).for_each(|(l, o)| *l += o);
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// `Some(period)` if `state` is the lexicographically smallest of its rotations.
fn canonical_period(state: &[u16]) -> Option<usize> {
    let n = state.len();
    let mut period = n;
    for k in 1..n {
        let rotated = state[k..].iter().chain(&state[..k]);
        match rotated.cmp(state.iter()) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => {
                if period == n {
                    period = k;
                }
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    Some(period)
}

fn add_orbit(tally: &mut MomentumTally, sites: u32, period: usize) {
    // an orbit of size d carries the momenta 0, N/d, 2N/d, ...
    let step = sites as usize / period;
    for i in 0..period {
        tally.add((i * step) as u32, 1);
    }
}

/// Tally from the orbits of the translation: each orbit is counted once, at its
/// lexicographically smallest rotation.
pub fn orbit_tally(space: &WeightSubspace) -> MomentumTally {
    let sites = space.config.sites;
    let mut tally = MomentumTally::new(sites);
    for state in space.states() {
        if let Some(period) = canonical_period(state) {
            add_orbit(&mut tally, sites, period);
        }
    }
    tally
}

/// Möbius function by trial division.
fn moebius(mut q: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            q /= p;
            if q % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if q > 1 {
        sign = -sign;
    }
    sign
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Ramanujan sum `c_q(m) = Σ_{gcd(k,q)=1} exp(2πi km/q) = Σ_{d | gcd(q,m)} μ(q/d) d`.
pub fn ramanujan_sum(q: u64, m: u64) -> i64 {
    let g = gcd(q, m);
    (1..=g).filter(|d| g % d == 0).map(|d| moebius(q / d) * d as i64).sum()
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `f_m = (1/N) Σ_k exp(2πi mk/N) Tr C_N^k`, with `Tr C_N^k` the number of basis
/// states fixed by a shift of `k` sites. Terms with equal `g = gcd(k, N)` share
/// the trace and sum to the integer `c_{N/g}(m)`, so the result is exact.
pub fn character_tally(space: &WeightSubspace) -> MomentumTally {
    let sites = u64::from(space.config.sites);
    let divs = divisors(sites);
    let fixed: Vec<i128> = divs
        .iter()
        .map(|&g| {
            let g = g as usize;
            space
                .states()
                .filter(|s| (0..s.len()).all(|i| s[i] == s[(i + g) % s.len()]))
                .count() as i128
        })
        .collect();
    let counts = (0..sites)
        .map(|m| {
            let sum: i128 = divs
                .iter()
                .zip(&fixed)
                .map(|(&g, &f)| f * i128::from(ramanujan_sum(sites / g, m)))
                .sum();
            assert!(sum >= 0 && sum % i128::from(sites) == 0, "character sum not a multiple of N");
            (sum / i128::from(sites)) as u64
        })
        .collect();
    MomentumTally::from_counts(counts)
}

/// Dominant weights (shapes with at most `n` rows and `N|σ|` boxes), highest first.
pub fn dominant_shapes(config: &ProblemConfig) -> Vec<Shape> {
    partitions_with_max_rows(config.total_boxes(), config.n as usize)
}

/// Linear combination of weight-subspace tallies equal to the tally of one irrep.
///
/// Inverting the unit-triangular Kostka matrix restricted to shapes at or above
/// `target` gives `tally(target) = Σ_μ c_μ tally(w(μ))`; only the weights with
/// `c_μ ≠ 0` have to be enumerated.
#[derive(Clone, Debug)]
pub struct SiftPlan {
    pub target: Shape,
    /// `(μ, c_μ)` with `c_μ ≠ 0`, highest first.
    pub terms: Vec<(Shape, i64)>,
}

impl SiftPlan {
    pub fn new(config: &ProblemConfig, target: &Shape) -> Result<Self> {
        config.check_shape(target)?;
        let n = config.n as usize;
        let above: Vec<Shape> = dominant_shapes(config).into_iter().take_while(|s| s >= target).collect();
        // coeffs[i][j]: coefficient of tally(w(above[j])) in the irrep tally of above[i]
        let mut coeffs: Vec<Vec<i64>> = Vec::with_capacity(above.len());
        for (i, s) in above.iter().enumerate() {
            let w = s.padded(n);
            let mut row = vec![0i64; above.len()];
            row[i] = 1;
            for (h, hrow) in above[..i].iter().zip(&coeffs) {
                let k = kostka(h, &w);
                if k == num_bigint::BigUint::default() {
                    continue;
                }
                let k = k.to_i64().ok_or_else(|| Error::Overflow(format!("K({h}, {w:?})")))?;
                for (r, &c) in row.iter_mut().zip(hrow) {
                    *r = c
                        .checked_mul(k)
                        .and_then(|x| r.checked_sub(x))
                        .ok_or_else(|| Error::Overflow("sift coefficient".into()))?;
                }
            }
            coeffs.push(row);
        }
        let last = coeffs.pop().expect("target is among the shapes at or above itself");
        let terms = above.into_iter().zip(last).filter(|(_, c)| *c != 0).collect();
        Ok(SiftPlan { target: target.clone(), terms })
    }

    /// `h_w`: number of weight subspaces entering the combination.
    pub fn h(&self) -> usize {
        self.terms.len()
    }
}

/// Irrep tallies from weight-subspace tallies keyed by padded dominant weight.
/// Shapes are processed from the highest weight down; every weight above a
/// processed one must be present.
pub fn sift(config: &ProblemConfig, tallies: &BTreeMap<Vec<u32>, MomentumTally>) -> Result<BTreeMap<Shape, MomentumTally>> {
    let n = config.n as usize;
    let mut done: Vec<(Shape, MomentumTally)> = Vec::new();
    for shape in dominant_shapes(config) {
        let w = shape.padded(n);
        let Some(weight_tally) = tallies.get(&w) else {
            break;
        };
        let mut counts: Vec<i128> = weight_tally.counts().iter().map(|&c| i128::from(c)).collect();
        for (higher, tally) in &done {
            let k = kostka(higher, &w).to_u64().ok_or_else(|| Error::Overflow(format!("K({higher}, {w:?})")))?;
            if k == 0 {
                continue;
            }
            for (c, &t) in counts.iter_mut().zip(tally.counts()) {
                *c -= i128::from(k) * i128::from(t);
            }
        }
        if let Some(m) = counts.iter().position(|&c| c < 0) {
            return Err(Error::NegativeSift { shape: shape.to_string(), m });
        }
        let tally = MomentumTally::from_counts(counts.into_iter().map(|c| c as u64).collect());
        done.push((shape, tally));
    }
    Ok(done.into_iter().collect())
}

/// Per-weight tallies for the given dominant shapes, computed in parallel.
pub fn weight_tallies(
    config: &ProblemConfig,
    shapes: &[Shape],
    method: SubspaceMethod,
) -> Result<BTreeMap<Vec<u32>, (usize, MomentumTally)>> {
    shapes
        .par_iter()
        .map(|s| {
            let w = s.padded(config.n as usize);
            let space = weight_subspace(config, &w)?;
            Ok((w, (space.dimension(), space.tally(method))))
        })
        .collect()
}

/// Oracle tallies for every irrep in `V_σ^{⊗N}` (shapes with zero multiplicity included).
pub fn irrep_tallies(config: &ProblemConfig, method: SubspaceMethod) -> Result<BTreeMap<Shape, MomentumTally>> {
    let shapes = dominant_shapes(config);
    let per_weight = weight_tallies(config, &shapes, method)?;
    let tallies = per_weight.into_iter().map(|(w, (_, t))| (w, t)).collect();
    sift(config, &tallies)
}

/// Oracle tally of a single irrep, enumerating only the weights at or above it.
#[derive(Clone, Debug)]
pub struct IrrepOracle {
    pub tally: MomentumTally,
    /// Basis states enumerated over all weight subspaces used.
    pub states_enumerated: u64,
    /// `n_w` of the target weight.
    pub target_dimension: u64,
    pub h: usize,
}

pub fn irrep_tally(config: &ProblemConfig, target: &Shape, method: SubspaceMethod) -> Result<IrrepOracle> {
    let plan = SiftPlan::new(config, target)?;
    let mut counts = vec![0i128; config.sites as usize];
    let mut states_enumerated = 0u64;
    let mut target_dimension = 0u64;
    for (s, c) in &plan.terms {
        let space = weight_subspace(config, &s.padded(config.n as usize))?;
        states_enumerated += space.dimension() as u64;
        if s == target {
            target_dimension = space.dimension() as u64;
        }
        let tally = space.tally(method);
        for (acc, &t) in counts.iter_mut().zip(tally.counts()) {
            *acc += i128::from(*c) * i128::from(t);
        }
    }
    if let Some(m) = counts.iter().position(|&c| c < 0) {
        return Err(Error::NegativeSift { shape: target.to_string(), m });
    }
    Ok(IrrepOracle {
        tally: MomentumTally::from_counts(counts.into_iter().map(|c| c as u64).collect()),
        states_enumerated,
        target_dimension,
        h: plan.h(),
    })
}

/// Orbit tally of the whole product basis.
pub fn full_space_tally(config: &ProblemConfig, budget: u128) -> Result<MomentumTally> {
    let site_states = site_states(config.n, config.sigma);
    let d = site_states.len() as u128;
    let required = (0..config.sites).try_fold(1u128, |acc, _| acc.checked_mul(d)).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let sites = config.sites as usize;
    let mut tally = MomentumTally::new(config.sites);
    let mut state = vec![0u16; sites];
    loop {
        if let Some(period) = canonical_period(&state) {
            add_orbit(&mut tally, config.sites, period);
        }
        // odometer increment, last site fastest
        let mut i = sites;
        loop {
            if i == 0 {
                return Ok(tally);
            }
            i -= 1;
            state[i] += 1;
            if u128::from(state[i]) < d {
                break;
            }
            state[i] = 0;
        }
    }
}
