//! Integer partitions, tableaux of content `(|σ|, …, |σ|)`, SU(n) dimensions
//! and the branching decomposition of `V_σ^{⊗N}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A Young diagram, stored as weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<u32>,
}

impl Shape {
    /// Validates a nonempty weakly decreasing sequence of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape { parts, reason: "empty partition" });
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape { parts, reason: "parts must be positive" });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape { parts, reason: "parts must be weakly decreasing" });
        }
        Ok(Shape { parts })
    }

    /// The empty diagram. Only produced internally as the result of removing the last strip.
    pub fn empty() -> Self {
        Shape { parts: Vec::new() }
    }

    /// Builds a shape from a content/weight vector, dropping trailing zeros.
    /// The caller guarantees the vector is weakly decreasing.
    pub(crate) fn from_padded(padded: &[u32]) -> Self {
        Shape { parts: padded.iter().copied().take_while(|&p| p > 0).collect() }
    }

    pub fn single_row(len: u32) -> Self {
        Shape { parts: vec![len] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn box_count(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn row_count(&self) -> usize {
        self.parts.len()
    }

    pub fn first_row(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `r` (0-based), zero past the last row.
    pub fn row(&self, r: usize) -> u32 {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Row lengths padded with zeros to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Height of column `c` (0-based).
    pub fn column_height(&self, c: u32) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    /// Comma separated row lengths, as accepted on the command line.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidShape { parts: Vec::new(), reason: "not a list of integers" })?;
        Shape::new(parts)
    }
}

/// SU(n), elementary single-row shape with `sigma` boxes, `sites` tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProblemConfig {
    pub n: u32,
    pub sigma: u32,
    pub sites: u32,
}

impl ProblemConfig {
    pub fn new(n: u32, sigma: u32, sites: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConfig(format!("n must be at least 2, got {n}")));
        }
        if sigma < 1 {
            return Err(Error::InvalidConfig("sigma must be at least 1".into()));
        }
        if sites < 1 {
            return Err(Error::InvalidConfig("N must be at least 1".into()));
        }
        Ok(ProblemConfig { n, sigma, sites })
    }

    pub fn total_boxes(&self) -> u32 {
        self.sigma * self.sites
    }

    pub fn elementary_shape(&self) -> Shape {
        Shape::single_row(self.sigma)
    }

    /// Checks that `shape` can label an irrep in this product space.
    pub fn check_shape(&self, shape: &Shape) -> Result<()> {
        if shape.row_count() > self.n as usize {
            return Err(Error::TooManyRows { shape: shape.to_string(), rows: shape.row_count(), n: self.n });
        }
        if shape.box_count() != self.total_boxes() {
            return Err(Error::InvalidConfig(format!(
                "shape {shape} has {} boxes, expected N*|sigma| = {}",
                shape.box_count(),
                self.total_boxes()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ProblemConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU({}) sigma={} N={}", self.n, self.sigma, self.sites)
    }
}

/// A semistandard filling of a shape in which each label `1..=N` occurs `sigma` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    sigma: u32,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>, sigma: u32) -> Result<Self> {
        let shape = Shape::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        if sigma == 0 || shape.box_count() % sigma != 0 {
            return Err(Error::IndivisibleBoxCount { boxes: shape.box_count(), sigma });
        }
        let sites = shape.box_count() / sigma;
        let mut counts = vec![0u32; sites as usize + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > sites {
                    return Err(Error::InvalidTableau(format!("label {v} outside 1..={sites}")));
                }
                counts[v as usize] += 1;
                if c > 0 && row[c - 1] > v {
                    return Err(Error::InvalidTableau(format!("row {} decreases at column {}", r + 1, c + 1)));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        if let Some(label) = (1..=sites).find(|&t| counts[t as usize] != sigma) {
            return Err(Error::InvalidTableau(format!(
                "label {label} occurs {} times, expected {sigma}",
                counts[label as usize]
            )));
        }
        Ok(Tableau { shape, sigma, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn sites(&self) -> u32 {
        self.shape.box_count() / self.sigma
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row-major concatenation of the entries.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// For each label `t` (index `t - 1`), the 1-based rows of its boxes, ascending.
    pub fn label_rows(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::with_capacity(self.sigma as usize); self.sites() as usize];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v as usize - 1].push(r as u32 + 1);
            }
        }
        out
    }

    /// Rebuilds a tableau from per-label row lists (inverse of [`Tableau::label_rows`]).
    pub fn from_label_rows(label_rows: &[Vec<u32>], sigma: u32) -> Result<Self> {
        let height = label_rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut rows = vec![Vec::new(); height];
        for (i, rs) in label_rows.iter().enumerate() {
            for &r in rs {
                rows[r as usize - 1].push(i as u32 + 1);
            }
        }
        Tableau::new(rows, sigma)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&rows.join(""))
    }
}

/// Dimension of the SU(n) irrep labelled by `shape`, by the hook-content formula.
pub fn su_dimension(shape: &Shape, n: u32) -> Result<BigUint> {
    if shape.row_count() > n as usize {
        return Err(Error::TooManyRows { shape: shape.to_string(), rows: shape.row_count(), n });
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            num *= n + c - r as u32;
            den *= hook(shape, r, c);
        }
    }
    Ok(num / den)
}

fn hook(shape: &Shape, r: usize, c: u32) -> u32 {
    let arm = shape.row(r) - c - 1;
    let leg = (shape.column_height(c) - r - 1) as u32;
    arm + leg + 1
}

/// Number of standard Young tableaux, `|λ|! / Π hooks`.
pub fn hook_length_count(shape: &Shape) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=shape.box_count() {
        num *= k;
    }
    let mut den = BigUint::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            den *= hook(shape, r, c);
        }
    }
    num / den
}

/// All shapes obtained by removing a horizontal strip of `size` boxes, each with
/// the sorted 1-based rows of the removed boxes. Sorted by that row list.
pub fn remove_horizontal_strips(shape: &Shape, size: u32) -> Vec<(Shape, Vec<u32>)> {
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut new_parts = vec![0u32; parts.len()];
    fn rec(parts: &[u32], r: usize, left: u32, new_parts: &mut Vec<u32>, out: &mut Vec<(Shape, Vec<u32>)>) {
        if r == parts.len() {
            if left == 0 {
                let mut rows = Vec::new();
                for (i, (&old, &new)) in parts.iter().zip(new_parts.iter()).enumerate() {
                    rows.extend(std::iter::repeat(i as u32 + 1).take((old - new) as usize));
                }
                out.push((Shape::from_padded(new_parts), rows));
            }
            return;
        }
        let below = parts.get(r + 1).copied().unwrap_or(0);
        let max_remove = (parts[r] - below).min(left);
        for k in 0..=max_remove {
            new_parts[r] = parts[r] - k;
            rec(parts, r + 1, left - k, new_parts, out);
        }
    }
    rec(parts, 0, size, &mut new_parts, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// All shapes with at most `max_rows` rows obtained by adding a horizontal strip of `size` boxes.
pub fn add_horizontal_strips(shape: &Shape, size: u32, max_rows: usize) -> Vec<Shape> {
    let rows = (shape.row_count() + 1).min(max_rows);
    let mut out = Vec::new();
    let mut new_parts = shape.padded(rows);
    fn rec(old: &Shape, r: usize, rows: usize, left: u32, new_parts: &mut Vec<u32>, out: &mut Vec<Shape>) {
        if r == rows {
            if left == 0 {
                out.push(Shape::from_padded(new_parts));
            }
            return;
        }
        let cur = old.row(r);
        let cap = if r == 0 { cur + left } else { old.row(r - 1) };
        let max_add = cap.saturating_sub(cur).min(left);
        for k in 0..=max_add {
            new_parts[r] = cur + k;
            rec(old, r + 1, rows, left - k, new_parts, out);
        }
        new_parts[r] = cur;
    }
    rec(shape, 0, rows, size, &mut new_parts, &mut out);
    out
}

/// Number of semistandard tableaux of `shape` with the given content.
pub fn kostka(shape: &Shape, content: &[u32]) -> BigUint {
    let content: Vec<u32> = content.iter().copied().filter(|&c| c > 0).collect();
    if content.iter().sum::<u32>() != shape.box_count() {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    kostka_rec(shape, &content, &mut memo)
}

fn kostka_rec(shape: &Shape, content: &[u32], memo: &mut HashMap<(Shape, usize), BigUint>) -> BigUint {
    if content.is_empty() {
        return if shape.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    if shape.row_count() > content.len() {
        return BigUint::zero();
    }
    let key = (shape.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (last, rest) = content.split_last().expect("nonempty");
    let mut total = BigUint::zero();
    for (smaller, _) in remove_horizontal_strips(shape, *last) {
        total += kostka_rec(&smaller, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Multiplicities `a_λ` of SU(n) irreps in `V_σ^{⊗N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepDecomposition {
    pub config: ProblemConfig,
    /// Highest shape first.
    pub entries: Vec<(Shape, BigUint)>,
}

impl IrrepDecomposition {
    pub fn multiplicity(&self, shape: &Shape) -> BigUint {
        self.entries
            .iter()
            .find(|(s, _)| s == shape)
            .map(|(_, a)| a.clone())
            .unwrap_or_default()
    }

    /// `Σ a_λ · dim(λ)`; equals `dim(V_σ)^N`.
    pub fn total_dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|(s, a)| a * su_dimension(s, self.config.n).expect("entries respect the row bound"))
            .sum()
    }
}

/// Decomposes `V_σ^{⊗N}` by adding `N` horizontal strips of `|σ|` boxes, never exceeding `n` rows.
pub fn decompose_product(config: &ProblemConfig) -> IrrepDecomposition {
    let mut layer: BTreeMap<Shape, BigUint> = BTreeMap::new();
    layer.insert(Shape::empty(), BigUint::one());
    for _ in 0..config.sites {
        let mut next: BTreeMap<Shape, BigUint> = BTreeMap::new();
        for (shape, mult) in &layer {
            for grown in add_horizontal_strips(shape, config.sigma, config.n as usize) {
                *next.entry(grown).or_default() += mult;
            }
        }
        layer = next;
    }
    IrrepDecomposition { config: *config, entries: layer.into_iter().rev().collect() }
}

/// All partitions of `total` into at most `max_rows` parts, lexicographically decreasing.
pub fn partitions_with_max_rows(total: u32, max_rows: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, cap: u32, max_rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Shape>) {
        if left == 0 {
            out.push(Shape { parts: cur.clone() });
            return;
        }
        if cur.len() == max_rows {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, max_rows, cur, out);
            cur.pop();
        }
    }
    if total == 0 {
        return vec![Shape::empty()];
    }
    rec(total, total, max_rows, &mut cur, &mut out);
    out
}

/// Streams every filling of `shape` with content `(sigma, …, sigma)` in
/// lexicographic order of the row-major reading word.
pub fn enumerate_fillings(shape: &Shape, sigma: u32) -> Result<Fillings> {
    if sigma == 0 || shape.box_count() % sigma != 0 {
        return Err(Error::IndivisibleBoxCount { boxes: shape.box_count(), sigma });
    }
    let mut cells = Vec::new();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            cells.push((r, c as usize));
        }
    }
    let mut offsets = Vec::with_capacity(shape.row_count());
    let mut acc = 0;
    for &len in shape.parts() {
        offsets.push(acc);
        acc += len as usize;
    }
    let sites = shape.box_count() / sigma;
    let heights = (0..shape.first_row()).map(|c| shape.column_height(c)).collect();
    Ok(Fillings {
        shape: shape.clone(),
        sigma,
        sites,
        vals: vec![0; cells.len()],
        cells,
        offsets,
        heights,
        counts: vec![0; sites as usize + 1],
        pos: 0,
        started: false,
        done: false,
    })
}

/// Iterator returned by [`enumerate_fillings`].
pub struct Fillings {
    shape: Shape,
    sigma: u32,
    sites: u32,
    cells: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    heights: Vec<usize>,
    vals: Vec<u32>,
    counts: Vec<u32>,
    pos: usize,
    started: bool,
    done: bool,
}

impl Fillings {
    fn lower_bound(&self, idx: usize) -> u32 {
        let (r, c) = self.cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(self.vals[idx - 1]);
        }
        if r > 0 {
            lo = lo.max(self.vals[self.offsets[r - 1] + c] + 1);
        }
        lo
    }

    fn build(&self) -> Tableau {
        let rows = self
            .shape
            .parts()
            .iter()
            .zip(&self.offsets)
            .map(|(&len, &off)| self.vals[off..off + len as usize].to_vec())
            .collect();
        Tableau { shape: self.shape.clone(), sigma: self.sigma, rows }
    }
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if self.cells.is_empty() {
            self.done = true;
            return None;
        }
        let mut backtrack = self.started;
        self.started = true;
        loop {
            let from = if backtrack {
                if self.pos == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                let v = self.vals[self.pos];
                self.counts[v as usize] -= 1;
                v + 1
            } else {
                1
            };
            let idx = self.pos;
            let (r, c) = self.cells[idx];
            // Column strictness leaves room for the boxes still below this one.
            let below = (self.heights[c] - r - 1) as u32;
            let hi = self.sites.saturating_sub(below);
            let lo = from.max(self.lower_bound(idx));
            match (lo..=hi).find(|&v| self.counts[v as usize] < self.sigma) {
                Some(v) => {
                    self.vals[idx] = v;
                    self.counts[v as usize] += 1;
                    self.pos += 1;
                    backtrack = false;
                    if self.pos == self.cells.len() {
                        return Some(self.build());
                    }
                }
                None => {
                    self.vals[idx] = 0;
                    backtrack = true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[u32]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    #[test]
    fn make_shape_examples() {
        let s = shape(&[5, 3, 2, 1]);
        assert_eq!((s.box_count(), s.row_count()), (11, 4));
        let s = shape(&[1]);
        assert_eq!((s.box_count(), s.row_count()), (1, 1));
        assert!(Shape::new(vec![3, 5]).is_err());
        assert!(Shape::new(vec![2, 0]).is_err());
        assert!(Shape::new(vec![]).is_err());
        assert_eq!("4,2".parse::<Shape>().unwrap(), shape(&[4, 2]));
    }

    #[test]
    fn su_dimension_examples() {
        assert_eq!(su_dimension(&shape(&[2, 1]), 3).unwrap(), BigUint::from(8u32));
        for n in 2..7 {
            assert_eq!(su_dimension(&shape(&[1]), n).unwrap(), BigUint::from(n));
        }
        assert_eq!(su_dimension(&shape(&[3, 3]), 2).unwrap(), BigUint::one());
        assert_eq!(su_dimension(&shape(&[3]), 2).unwrap(), BigUint::from(4u32));
        assert!(matches!(su_dimension(&shape(&[1, 1, 1]), 2), Err(Error::TooManyRows { .. })));
    }

    #[test]
    fn fillings_examples() {
        assert_eq!(enumerate_fillings(&shape(&[4, 2]), 1).unwrap().count(), 9);
        for sigma in 1..4 {
            let all: Vec<_> = enumerate_fillings(&shape(&[3 * sigma]), sigma).unwrap().collect();
            assert_eq!(all.len(), 1);
        }
        let all: Vec<_> = enumerate_fillings(&shape(&[3, 3]), 2).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), &[vec![1, 1, 2], vec![2, 3, 3]]);
        assert!(enumerate_fillings(&shape(&[3, 2]), 2).is_err());
    }

    #[test]
    fn fillings_are_lexicographic_and_valid() {
        let all: Vec<_> = enumerate_fillings(&shape(&[3, 2, 1]), 2).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
        for t in &all {
            Tableau::new(t.rows().to_vec(), 2).unwrap();
        }
        assert_eq!(BigUint::from(all.len()), kostka(&shape(&[3, 2, 1]), &[2, 2, 2]));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&shape(&[2, 1]), &[1, 1, 1]), BigUint::from(2u32));
        assert_eq!(kostka(&shape(&[4, 2, 1]), &[4, 2, 1]), BigUint::one());
        assert_eq!(kostka(&shape(&[3, 1]), &[2, 2]), BigUint::one());
        assert_eq!(kostka(&shape(&[3, 1]), &[2, 1]), BigUint::zero());
        assert_eq!(kostka(&shape(&[1, 1, 1]), &[3]), BigUint::zero());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_product(&ProblemConfig::new(2, 1, 3).unwrap());
        assert_eq!(
            d.entries,
            vec![(shape(&[3]), BigUint::one()), (shape(&[2, 1]), BigUint::from(2u32))]
        );
        let d = decompose_product(&ProblemConfig::new(3, 1, 3).unwrap());
        assert_eq!(d.entries.len(), 3);
        assert_eq!(d.multiplicity(&shape(&[2, 1])), BigUint::from(2u32));
        assert_eq!(d.multiplicity(&shape(&[1, 1, 1])), BigUint::one());
        assert_eq!(d.total_dimension(), BigUint::from(27u32));
        let d = decompose_product(&ProblemConfig::new(2, 2, 3).unwrap());
        let expect = [(vec![6], 1u32), (vec![5, 1], 2), (vec![4, 2], 3), (vec![3, 3], 1)];
        assert_eq!(d.entries.len(), 4);
        for (p, a) in expect {
            assert_eq!(d.multiplicity(&shape(&p)), BigUint::from(a));
        }
        assert_eq!(d.total_dimension(), BigUint::from(27u32));
    }

    #[test]
    fn strip_removal() {
        let r = remove_horizontal_strips(&shape(&[2, 2]), 2);
        assert_eq!(r, vec![(shape(&[2]), vec![2, 2])]);
        let r = remove_horizontal_strips(&shape(&[2, 2, 1]), 1);
        assert_eq!(r, vec![(shape(&[2, 1, 1]), vec![2]), (shape(&[2, 2]), vec![3])]);
    }

    #[test]
    fn partitions_listing() {
        let p = partitions_with_max_rows(4, 2);
        assert_eq!(p, vec![shape(&[4]), shape(&[3, 1]), shape(&[2, 2])]);
        assert_eq!(partitions_with_max_rows(6, 6).len(), 11);
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 1, 2], vec![2, 3], vec![3]], 2).is_ok());
        assert!(Tableau::new(vec![vec![1, 2], vec![1, 2]], 2).is_err());
        assert!(Tableau::new(vec![vec![2, 1]], 1).is_err());
        assert!(Tableau::new(vec![vec![1, 1, 1]], 1).is_err());
        let t = Tableau::new(vec![vec![1, 3], vec![2, 4]], 1).unwrap();
        assert_eq!(Tableau::from_label_rows(&t.label_rows(), 1).unwrap(), t);
    }
}
