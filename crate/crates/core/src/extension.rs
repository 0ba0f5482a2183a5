//! Extended Young tableaux: columns of consecutive labels, column numbers
//! `b_c`, the momentum offset `b_0` and the momentum number of a tableau.
//!
//! All arithmetic on `b_c` stays in exact half-integers ([`Half`]).

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Sub};

use crate::branching::BranchingGraph;
use crate::error::{Error, Result};
use crate::partitions::{ProblemConfig, Shape, Tableau};
use crate::tally::MomentumTally;

/// An exact multiple of 1/2, stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn from_doubled(doubled: i64) -> Self {
        Half(doubled)
    }

    pub fn from_int(v: i64) -> Self {
        Half(2 * v)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl std::iter::Sum for Half {
    fn sum<I: Iterator<Item = Half>>(iter: I) -> Half {
        Half(iter.map(|h| h.0).sum())
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A column of an extended tableau: the labels `top_label ..= top_label + len - 1`.
///
/// Boxes keep their source position: row (1-based) and slot, the ordinal of the
/// box among the equal labels of its row counted from the left. Rows increase
/// strictly down a column but may skip; the skipped rows hold dots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub top_label: u32,
    pub len: u32,
    pub top_row: u32,
    pub top_slot: u32,
    pub bottom_row: u32,
    pub bottom_slot: u32,
}

impl Column {
    pub fn single(label: u32, row: u32, slot: u32) -> Self {
        Column { top_label: label, len: 1, top_row: row, top_slot: slot, bottom_row: row, bottom_slot: slot }
    }

    pub fn bottom_label(&self) -> u32 {
        self.top_label + self.len - 1
    }

    /// `2⟨i⟩_c = 2 j_c + k_c - 1`.
    pub fn doubled_mean(&self) -> i64 {
        2 * i64::from(self.top_label) + i64::from(self.len) - 1
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> {
        self.top_label..=self.bottom_label()
    }

    /// Puts `below` (starting one label lower than this column ends) underneath.
    fn extend(&mut self, below: &Column) {
        debug_assert_eq!(self.bottom_label() + 1, below.top_label);
        self.len += below.len;
        self.bottom_row = below.bottom_row;
        self.bottom_slot = below.bottom_slot;
    }

    fn sort_key(&self) -> (u32, u32, u32) {
        (self.top_label, self.top_row, self.top_slot)
    }
}

/// Which open columns a box may continue.
///
/// Boxes of one label are placed in increasing row order (left to right within a
/// row). Among the eligible columns the box takes the one whose bottom box is in
/// the lowest row, leftmost on ties. Every eligible column ends in the same
/// label, so the choice does not change the momentum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PlacementRule {
    /// Any column whose bottom box lies in a higher row.
    #[default]
    Gapped,
    /// Only a column whose bottom box lies in the row directly above. Kept for comparison.
    Adjacent,
}

impl PlacementRule {
    /// Index into `open` of the column continued by a box in `row`.
    fn pick(self, open: &[Column], row: u32) -> Option<usize> {
        open.iter()
            .enumerate()
            .filter(|(_, c)| match self {
                PlacementRule::Gapped => c.bottom_row < row,
                PlacementRule::Adjacent => c.bottom_row + 1 == row,
            })
            .max_by_key(|(_, c)| (c.bottom_row, std::cmp::Reverse(c.bottom_slot)))
            .map(|(i, _)| i)
    }
}

/// Glues `upper` starts (columns beginning with one label, ordered by row and
/// slot) onto `open` columns ending one label lower. Returns, per start, the
/// index into `open` it continues.
fn match_starts(open: &[Column], starts: &[Column], rule: PlacementRule) -> Vec<Option<usize>> {
    let mut free: Vec<(usize, Column)> = open.iter().copied().enumerate().collect();
    starts
        .iter()
        .map(|u| {
            let cands: Vec<Column> = free.iter().map(|(_, c)| *c).collect();
            rule.pick(&cands, u.top_row).map(|k| free.remove(k).0)
        })
        .collect()
}

/// Extended tableau restricted to the labels `lo ..= hi`; complete when `lo = 1, hi = N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedTableau {
    lo: u32,
    hi: u32,
    columns: Vec<Column>,
}

impl ExtendedTableau {
    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn label_range(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Label runs of each column, in column order.
    pub fn runs(&self) -> Vec<Vec<u32>> {
        self.columns.iter().map(|c| c.labels().collect()).collect()
    }

    /// Glues an extension of the labels directly above this one onto it.
    pub fn join(&self, upper: &ExtendedTableau) -> ExtendedTableau {
        self.join_with(upper, PlacementRule::default())
    }

    pub fn join_with(&self, upper: &ExtendedTableau, rule: PlacementRule) -> ExtendedTableau {
        assert_eq!(self.hi + 1, upper.lo, "joined extensions must cover adjacent label ranges");
        let mut columns = self.columns.clone();
        let open: Vec<usize> = (0..columns.len()).filter(|&i| columns[i].bottom_label() == self.hi).collect();
        let open_cols: Vec<Column> = open.iter().map(|&i| columns[i]).collect();
        let mut starts: Vec<Column> = upper.columns.iter().filter(|c| c.top_label == upper.lo).copied().collect();
        starts.sort_by_key(|c| (c.top_row, c.top_slot));
        for (u, m) in starts.iter().zip(match_starts(&open_cols, &starts, rule)) {
            match m {
                Some(k) => columns[open[k]].extend(u),
                None => columns.push(*u),
            }
        }
        columns.extend(upper.columns.iter().filter(|c| c.top_label != upper.lo));
        columns.sort_by_key(Column::sort_key);
        ExtendedTableau { lo: self.lo, hi: upper.hi, columns }
    }

    pub fn summary(&self) -> Segment {
        let mut seg = Segment {
            lo: self.lo,
            hi: self.hi,
            columns: self.columns.len() as i64,
            doubled_means: self.columns.iter().map(Column::doubled_mean).sum(),
            bottom: Vec::new(),
            top: Vec::new(),
        };
        for c in &self.columns {
            if c.top_label == self.lo {
                seg.bottom.push(*c);
            }
            if c.bottom_label() == self.hi {
                seg.top.push(*c);
            }
        }
        seg.canonicalize();
        seg
    }
}

impl fmt::Display for ExtendedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| format!("({})", c.labels().map(|l| l.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&cols.join(" "))
    }
}

/// Slot of each box: its ordinal among equal labels in the same row.
fn with_slots(rows: &[u32]) -> impl Iterator<Item = (u32, u32)> + '_ {
    rows.iter().enumerate().map(move |(i, &r)| {
        let slot = rows[..i].iter().filter(|&&q| q == r).count() as u32;
        (r, slot)
    })
}

/// Extends the labels `lo, lo + 1, …`, where `label_rows[i]` lists the (ascending)
/// source rows of the boxes labelled `lo + i`.
pub fn extend_label_rows(lo: u32, label_rows: &[Vec<u32>], rule: PlacementRule) -> ExtendedTableau {
    let mut columns: Vec<Column> = Vec::new();
    // indices of the columns ending in the previous label
    let mut open: Vec<usize> = Vec::new();
    for (i, rows) in label_rows.iter().enumerate() {
        let label = lo + i as u32;
        let open_cols: Vec<Column> = open.iter().map(|&c| columns[c]).collect();
        let starts: Vec<Column> = with_slots(rows).map(|(r, slot)| Column::single(label, r, slot)).collect();
        let mut next = Vec::with_capacity(starts.len());
        for (u, m) in starts.iter().zip(match_starts(&open_cols, &starts, rule)) {
            match m {
                Some(k) => {
                    columns[open[k]].extend(u);
                    next.push(open[k]);
                }
                None => {
                    columns.push(*u);
                    next.push(columns.len() - 1);
                }
            }
        }
        open = next;
    }
    columns.sort_by_key(Column::sort_key);
    let hi = lo + label_rows.len() as u32 - 1;
    ExtendedTableau { lo, hi, columns }
}

/// Builds `E(T)` label by label, handling the boxes of each label in increasing row order.
pub fn extend_tableau(t: &Tableau) -> ExtendedTableau {
    extend_label_rows(1, &t.label_rows(), PlacementRule::default())
}

pub fn extend_tableau_with(t: &Tableau, rule: PlacementRule) -> ExtendedTableau {
    extend_label_rows(1, &t.label_rows(), rule)
}

/// Aggregate view of an extension over a label range: enough to evaluate the
/// momentum and to glue adjacent ranges in `O(|σ|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    lo: u32,
    hi: u32,
    columns: i64,
    doubled_means: i64,
    /// Columns whose top label is `lo`, by top row and slot.
    bottom: Vec<Column>,
    /// Columns whose bottom label is `hi`, by bottom row and slot.
    top: Vec<Column>,
}

impl Segment {
    /// Single-label segment: each box starts its own column.
    pub fn fresh(label: u32, rows: &[u32]) -> Self {
        let cols: Vec<Column> = with_slots(rows).map(|(r, slot)| Column::single(label, r, slot)).collect();
        Segment {
            lo: label,
            hi: label,
            columns: cols.len() as i64,
            doubled_means: cols.iter().map(Column::doubled_mean).sum(),
            bottom: cols.clone(),
            top: cols,
        }
    }

    pub fn label_range(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn column_count(&self) -> i64 {
        self.columns
    }

    /// `Σ_c 2⟨i⟩_c`.
    pub fn doubled_mean_sum(&self) -> i64 {
        self.doubled_means
    }

    /// Glues `upper` (labels `hi + 1 ..`) on top of `self`.
    pub fn join(&self, upper: &Segment) -> Segment {
        assert_eq!(self.hi + 1, upper.lo, "joined segments must cover adjacent label ranges");
        let mut out = Segment {
            lo: self.lo,
            hi: upper.hi,
            columns: self.columns + upper.columns,
            doubled_means: self.doubled_means + upper.doubled_means,
            bottom: self.bottom.clone(),
            top: upper.top.clone(),
        };
        for (u, m) in upper.bottom.iter().zip(match_starts(&self.top, &upper.bottom, PlacementRule::default())) {
            let Some(k) = m else { continue };
            let l = &self.top[k];
            let mut merged = *l;
            merged.extend(u);
            out.columns -= 1;
            out.doubled_means += merged.doubled_mean() - l.doubled_mean() - u.doubled_mean();
            if let Some(b) = out.bottom.iter_mut().find(|b| *b == l) {
                *b = merged;
            }
            if let Some(t) = out.top.iter_mut().find(|t| *t == u) {
                *t = merged;
            }
        }
        out.canonicalize();
        out
    }

    fn canonicalize(&mut self) {
        self.bottom.sort_by_key(|c| (c.top_row, c.top_slot));
        self.top.sort_by_key(|c| (c.bottom_row, c.bottom_slot));
    }

    pub fn join_opt(lower: &Segment, upper: Option<&Segment>) -> Segment {
        match upper {
            Some(u) => lower.join(u),
            None => lower.clone(),
        }
    }

    /// Momentum of a complete segment (labels `1..=N`).
    ///
    /// Uses `Σ_c k_c⟨i⟩_c = |σ|N(N+1)/2` and `Σ_c k_c = |σ|N`, so only the column
    /// count and `Σ_c ⟨i⟩_c` are needed.
    pub fn momentum(&self, config: &ProblemConfig) -> Result<Momentum> {
        assert_eq!((self.lo, self.hi), (1, config.sites), "momentum needs a complete extension");
        let n = i64::from(config.n);
        let sigma = i64::from(config.sigma);
        let big_n = i64::from(config.sites);
        let sum_b2 = n * self.doubled_means - n * self.columns - sigma * big_n * (big_n + 1) + sigma * big_n;
        Momentum::from_parts(momentum_offset(config), Half::from_doubled(sum_b2), config)
    }
}

/// Column number `b_c = (n - k_c)(⟨i⟩_c - 1/2)` and the number of dots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnStats {
    pub b: Half,
    pub dots: u32,
}

pub fn column_stats(col: &Column, n: u32) -> Result<ColumnStats> {
    if col.len > n {
        return Err(Error::ColumnTooTall { height: col.len, n });
    }
    let dots = n - col.len;
    Ok(ColumnStats { b: Half::from_doubled(i64::from(dots) * (col.doubled_mean() - 1)), dots })
}

/// `b_0 = -(n - 1)|σ|N²/2`.
pub fn momentum_offset(config: &ProblemConfig) -> Half {
    let n = i64::from(config.n);
    let big_n = i64::from(config.sites);
    Half::from_doubled(-(n - 1) * i64::from(config.sigma) * big_n * big_n)
}

/// Momentum number `m` of a tableau; the eigenvalue of the translation is `exp(2πi m/N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Momentum {
    pub m: u32,
    pub b0: Half,
    /// `b_0 + Σ_c b_c`, always a multiple of `n`.
    pub raw: Half,
}

impl Momentum {
    fn from_parts(b0: Half, sum_b: Half, config: &ProblemConfig) -> Result<Momentum> {
        let raw = b0 + sum_b;
        let two_n = 2 * i64::from(config.n);
        if raw.doubled() % two_n != 0 {
            return Err(Error::Divisibility { raw2: raw.doubled(), n: config.n });
        }
        let m = (raw.doubled() / two_n).rem_euclid(i64::from(config.sites)) as u32;
        Ok(Momentum { m, b0, raw })
    }

    /// Crystal momentum `p = 2π m / N`.
    pub fn p(&self, sites: u32) -> f64 {
        2.0 * PI * f64::from(self.m) / f64::from(sites)
    }
}

/// Momentum of a complete extension, evaluated column by column.
pub fn extension_momentum(e: &ExtendedTableau, config: &ProblemConfig) -> Result<Momentum> {
    assert_eq!((e.lo, e.hi), (1, config.sites), "momentum needs a complete extension");
    let mut sum = Half::ZERO;
    for c in &e.columns {
        sum = sum + column_stats(c, config.n)?.b;
    }
    Momentum::from_parts(momentum_offset(config), sum, config)
}

pub fn tableau_momentum(t: &Tableau, config: &ProblemConfig) -> Result<Momentum> {
    check_tableau(t, config)?;
    extension_momentum(&extend_tableau(t), config)
}

pub fn tableau_momentum_with(t: &Tableau, config: &ProblemConfig, rule: PlacementRule) -> Result<Momentum> {
    check_tableau(t, config)?;
    extension_momentum(&extend_tableau_with(t, rule), config)
}

fn check_tableau(t: &Tableau, config: &ProblemConfig) -> Result<()> {
    if t.sigma() != config.sigma || t.sites() != config.sites {
        return Err(Error::InvalidConfig(format!("tableau {t} does not belong to {config}")));
    }
    if t.shape().row_count() > config.n as usize {
        return Err(Error::TooManyRows { shape: t.shape().to_string(), rows: t.shape().row_count(), n: config.n });
    }
    Ok(())
}

/// Spinon numbers `a_i` of every column, with the single-spinon momenta.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinonSet {
    /// Per column, `n - k_c` values with spacing 1 and mean `⟨i⟩_c`.
    pub columns: Vec<Vec<Half>>,
    pub sites: u32,
    /// `p_0 = π(n - 1)N/n`.
    pub p0: f64,
}

impl SpinonSet {
    /// `p_i = 2π(a_i - 1/2)/N` for every dot, column by column.
    pub fn momenta(&self) -> Vec<Vec<f64>> {
        self.columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|a| 2.0 * PI * (a.to_f64() - 0.5) / f64::from(self.sites))
                    .collect()
            })
            .collect()
    }
}

pub fn spinon_numbers(e: &ExtendedTableau, config: &ProblemConfig) -> Result<SpinonSet> {
    let mut columns = Vec::with_capacity(e.columns.len());
    for c in &e.columns {
        let stats = column_stats(c, config.n)?;
        let d = i64::from(stats.dots);
        let first = c.doubled_mean() - (d - 1);
        let dots: Vec<Half> = (0..d).map(|i| Half::from_doubled(first + 2 * i)).collect();
        let check: Half = dots.iter().map(|&a| a - Half::from_doubled(1)).sum();
        if check != stats.b {
            return Err(Error::InvalidConfig(format!("spinon numbers of column {c:?} do not reproduce b_c")));
        }
        columns.push(dots);
    }
    let n = f64::from(config.n);
    Ok(SpinonSet { columns, sites: config.sites, p0: PI * (n - 1.0) / n * f64::from(config.sites) })
}

/// Momentum tally of all tableaux of `shape`, via the branching-graph walk.
pub fn shape_tally(shape: &Shape, config: &ProblemConfig) -> Result<MomentumTally> {
    config.check_shape(shape)?;
    let graph = BranchingGraph::build(shape, config.sigma)?.augment();
    let mut tally = MomentumTally::new(config.sites);
    graph.iterate_tableaux(config, |visit| tally.add(visit.momentum().m, 1))?;
    Ok(tally)
}

/// [`shape_tally`] with the walk split over the root's subtrees and run on the rayon pool.
pub fn shape_tally_parallel(shape: &Shape, config: &ProblemConfig) -> Result<MomentumTally> {
    config.check_shape(shape)?;
    let graph = BranchingGraph::build(shape, config.sigma)?.augment();
    graph.tally_parallel(config)
}
