//! Branching graph of a shape: every sub-shape reachable by repeated removal
//! of horizontal `|σ|`-strips, with the strip rows on the edges. Root-to-leaf
//! paths are in bijection with the tableaux of the root shape.
//!
//! After [`BranchingGraph::augment`] each node carries its leftmost path to the
//! leaf, the depths on that path where a walk may later branch off, and the
//! extension of the labels along it. The walk in [`AugmentedGraph::iterate_tableaux`]
//! then produces each tableau's momentum with `O(|σ|)` work: it only glues the
//! precomputed extension below the newly chosen edge to a summary of the labels above it.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extension::{extend_label_rows, ExtendedTableau, Momentum, PlacementRule, Segment};
use crate::partitions::{remove_horizontal_strips, ProblemConfig, Shape, Tableau};
use crate::tally::MomentumTally;

pub type NodeId = usize;

/// Result of one regular removal: the smaller shape and the sorted rows the strip came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Removal {
    pub shape: Shape,
    pub rows: Vec<u32>,
}

impl Removal {
    /// Removing the last strip leaves nothing; such a removal marks the leaf boundary.
    pub fn is_leaf_boundary(&self) -> bool {
        self.shape.is_empty()
    }
}

/// All removals of a horizontal strip of `sigma` boxes, ordered by their row labels.
pub fn regular_removals(shape: &Shape, sigma: u32) -> Vec<Removal> {
    if shape.box_count() < sigma {
        return Vec::new();
    }
    remove_horizontal_strips(shape, sigma)
        .into_iter()
        .map(|(shape, rows)| Removal { shape, rows })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub rows: Vec<u32>,
    pub child: NodeId,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub shape: Shape,
    pub depth: u32,
    pub children: Vec<Edge>,
}

#[derive(Clone, Debug)]
pub struct BranchingGraph {
    sigma: u32,
    sites: u32,
    /// Breadth-first order; `nodes[0]` is the root. Empty if the root has no tableau.
    nodes: Vec<Node>,
}

impl BranchingGraph {
    pub fn build(shape: &Shape, sigma: u32) -> Result<Self> {
        if sigma == 0 || shape.box_count() % sigma != 0 {
            return Err(Error::IndivisibleBoxCount { boxes: shape.box_count(), sigma });
        }
        let sites = shape.box_count() / sigma;
        let leaf_shape = Shape::single_row(sigma);

        let mut nodes = vec![Node { shape: shape.clone(), depth: 0, children: Vec::new() }];
        let mut index: HashMap<Shape, NodeId> = HashMap::from([(shape.clone(), 0)]);
        let mut at = 0;
        while at < nodes.len() {
            if nodes[at].shape.box_count() > sigma {
                let depth = nodes[at].depth + 1;
                let mut children = Vec::new();
                for r in regular_removals(&nodes[at].shape, sigma) {
                    let id = *index.entry(r.shape.clone()).or_insert_with(|| {
                        nodes.push(Node { shape: r.shape.clone(), depth, children: Vec::new() });
                        nodes.len() - 1
                    });
                    children.push(Edge { rows: r.rows, child: id });
                }
                nodes[at].children = children;
            }
            at += 1;
        }

        // Drop shapes from which the leaf cannot be reached.
        let mut alive = vec![false; nodes.len()];
        for id in (0..nodes.len()).rev() {
            alive[id] = if nodes[id].shape.box_count() == sigma {
                nodes[id].shape == leaf_shape
            } else {
                nodes[id].children.iter().any(|e| alive[e.child])
            };
        }
        let mut remap = vec![usize::MAX; nodes.len()];
        let mut kept = Vec::new();
        for (id, node) in nodes.into_iter().enumerate() {
            if alive[id] {
                remap[id] = kept.len();
                kept.push(node);
            }
        }
        for node in &mut kept {
            node.children.retain(|e| alive[e.child]);
            for e in &mut node.children {
                e.child = remap[e.child];
            }
        }
        Ok(BranchingGraph { sigma, sites, nodes: kept })
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn sites(&self) -> u32 {
        self.sites
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> Option<&Node> {
        self.nodes.first()
    }

    pub fn find(&self, shape: &Shape) -> Option<NodeId> {
        self.nodes.iter().position(|n| &n.shape == shape)
    }

    /// Number of root-to-leaf paths, i.e. the number of tableaux of the root shape.
    pub fn path_count(&self) -> BigUint {
        let mut counts = vec![BigUint::default(); self.nodes.len()];
        for id in (0..self.nodes.len()).rev() {
            counts[id] = if self.nodes[id].children.is_empty() {
                BigUint::from(1u32)
            } else {
                self.nodes[id].children.iter().map(|e| &counts[e.child]).sum()
            };
        }
        counts.into_iter().next().unwrap_or_default()
    }

    /// Depth-first walk that re-descends from the root for every path. Reference
    /// implementation for [`AugmentedGraph::iterate_tableaux`]; the visitor gets
    /// the rows of every label (index `t - 1`).
    pub fn walk_naive(&self, mut visitor: impl FnMut(&[Vec<u32>])) -> u64 {
        if self.nodes.is_empty() {
            return 0;
        }
        let mut rows = vec![Vec::new(); self.sites as usize];
        rows[0] = vec![1; self.sigma as usize];
        let mut count = 0;
        self.walk_rec(0, &mut rows, &mut visitor, &mut count);
        count
    }

    fn walk_rec(&self, id: NodeId, rows: &mut Vec<Vec<u32>>, visitor: &mut impl FnMut(&[Vec<u32>]), count: &mut u64) {
        let node = &self.nodes[id];
        if node.children.is_empty() {
            *count += 1;
            visitor(rows);
            return;
        }
        let label = self.sites - node.depth;
        for e in &node.children {
            rows[label as usize - 1] = e.rows.clone();
            self.walk_rec(e.child, rows, visitor, count);
        }
    }

    /// Graphviz rendering: one node per shape, edges labelled with the strip rows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph branching {\n  node [shape=box];\n");
        for node in &self.nodes {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\\nd={}\"];", node.shape, node.shape, node.depth);
        }
        for node in &self.nodes {
            for e in &node.children {
                let label = e.rows.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", node.shape, self.nodes[e.child].shape, label);
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn augment(self) -> AugmentedGraph {
        let mut aug: Vec<Option<Augment>> = vec![None; self.nodes.len()];
        for id in (0..self.nodes.len()).rev() {
            let node = &self.nodes[id];
            let label = self.sites - node.depth;
            let entry = match node.children.first() {
                None => {
                    let rows = vec![1; self.sigma as usize];
                    Augment {
                        leftmost_path: vec![id],
                        backtrack: Vec::new(),
                        bands: vec![Segment::fresh(label, &rows)],
                        lower: extend_label_rows(label, &[rows], PlacementRule::default()),
                    }
                }
                Some(first) => {
                    let below = aug[first.child].as_ref().expect("children come later in breadth-first order");
                    let fresh = Segment::fresh(label, &first.rows);
                    let mut leftmost_path = Vec::with_capacity(below.leftmost_path.len() + 1);
                    leftmost_path.push(id);
                    leftmost_path.extend_from_slice(&below.leftmost_path);
                    let mut backtrack = Vec::new();
                    if node.children.len() > 1 {
                        backtrack.push(node.depth);
                    }
                    backtrack.extend_from_slice(&below.backtrack);
                    let mut bands = Vec::with_capacity(below.bands.len() + 1);
                    bands.push(fresh.clone());
                    bands.extend(below.bands.iter().map(|b| b.join(&fresh)));
                    let top = extend_label_rows(label, std::slice::from_ref(&first.rows), PlacementRule::default());
                    Augment { leftmost_path, backtrack, bands, lower: below.lower.join(&top) }
                }
            };
            aug[id] = Some(entry);
        }
        AugmentedGraph { graph: self, aug: aug.into_iter().map(|a| a.expect("every node visited")).collect() }
    }
}

/// Per-node data for the fast walk.
#[derive(Clone, Debug)]
pub struct Augment {
    /// Nodes from this one down to the leaf, always taking the first child.
    pub leftmost_path: Vec<NodeId>,
    /// Depths of the nodes with more than one child on that path, shallowest first.
    pub backtrack: Vec<u32>,
    /// `bands[i]` summarises the labels `top - i ..= top` along the leftmost path,
    /// where `top = N - depth` is the largest label below this node.
    pub bands: Vec<Segment>,
    /// Extension of the leftmost tableau of this node (labels `1 ..= top`).
    pub lower: ExtendedTableau,
}

impl Augment {
    fn lower_summary(&self) -> &Segment {
        self.bands.last().expect("at least the node's own label")
    }
}

#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    graph: BranchingGraph,
    aug: Vec<Augment>,
}

/// A point where the current path leaves the leftmost path of the node above it.
#[derive(Clone, Debug)]
struct Anchor {
    /// Depth of `child`; the choice was made one level higher.
    child_depth: u32,
    choice: usize,
    child: NodeId,
    /// Labels above `child`, i.e. `N - child_depth + 1 ..= N`. `None` for the root.
    upper: Option<Segment>,
}

/// One tableau produced by the walk.
pub struct Visit<'a> {
    graph: &'a AugmentedGraph,
    anchors: &'a [Anchor],
    summary: &'a Segment,
    momentum: Momentum,
}

impl Visit<'_> {
    pub fn momentum(&self) -> Momentum {
        self.momentum
    }

    /// Column count and `Σ 2⟨i⟩_c` as maintained incrementally.
    pub fn summary(&self) -> &Segment {
        self.summary
    }

    /// Rows of each label (index `t - 1`); `O(N)`.
    pub fn label_rows(&self) -> Vec<Vec<u32>> {
        let g = &self.graph.graph;
        let mut rows = vec![Vec::new(); g.sites as usize];
        rows[0] = vec![1; g.sigma as usize];
        let mut anchors = self.anchors.iter().skip(1).peekable();
        let mut id = 0;
        loop {
            let node = &g.nodes[id];
            if node.children.is_empty() {
                break;
            }
            let choice = match anchors.peek() {
                Some(a) if a.child_depth == node.depth + 1 => {
                    let choice = a.choice;
                    anchors.next();
                    choice
                }
                _ => 0,
            };
            let e = &node.children[choice];
            rows[(g.sites - node.depth) as usize - 1] = e.rows.clone();
            id = e.child;
        }
        rows
    }

    pub fn tableau(&self) -> Tableau {
        Tableau::from_label_rows(&self.label_rows(), self.graph.graph.sigma).expect("paths encode valid tableaux")
    }

    /// Materialises `E(T)` by joining the stored extension below the deepest
    /// branch point with a fresh extension of the labels above it; `O(N)`.
    pub fn extended(&self) -> ExtendedTableau {
        let last = self.anchors.last().expect("base anchor");
        let below = &self.graph.aug[last.child].lower;
        if last.child_depth == 0 {
            return below.clone();
        }
        let rows = self.label_rows();
        let sites = self.graph.graph.sites;
        let from = sites - last.child_depth + 1;
        let upper = extend_label_rows(from, &rows[from as usize - 1..], PlacementRule::default());
        below.join(&upper)
    }
}

impl AugmentedGraph {
    pub fn graph(&self) -> &BranchingGraph {
        &self.graph
    }

    pub fn augment_of(&self, id: NodeId) -> &Augment {
        &self.aug[id]
    }

    fn check_config(&self, config: &ProblemConfig) -> Result<()> {
        if config.sigma != self.graph.sigma || config.sites != self.graph.sites {
            return Err(Error::InvalidConfig(format!("graph is for sigma={} N={}, got {config}", self.graph.sigma, self.graph.sites)));
        }
        if let Some(root) = self.graph.root() {
            if root.shape.row_count() > config.n as usize {
                return Err(Error::TooManyRows { shape: root.shape.to_string(), rows: root.shape.row_count(), n: config.n });
            }
        }
        Ok(())
    }

    /// Calls `visitor` once per tableau of the root shape, in the order of the
    /// naive depth-first walk, and returns the number of visits.
    pub fn iterate_tableaux(&self, config: &ProblemConfig, visitor: impl FnMut(&Visit)) -> Result<u64> {
        self.check_config(config)?;
        self.walk(config, None, visitor)
    }

    /// Walks only the subtree below the root's `choice`-th child.
    pub fn iterate_subtree(&self, config: &ProblemConfig, choice: usize, visitor: impl FnMut(&Visit)) -> Result<u64> {
        self.check_config(config)?;
        self.walk(config, Some(choice), visitor)
    }

    /// Momentum tally with the root's subtrees walked in parallel.
    pub fn tally_parallel(&self, config: &ProblemConfig) -> Result<MomentumTally> {
        self.check_config(config)?;
        let fanout = self.graph.root().map_or(0, |r| r.children.len());
        let run = |choice: Option<usize>| -> Result<MomentumTally> {
            let mut tally = MomentumTally::new(config.sites);
            self.walk(config, choice, |v| tally.add(v.momentum().m, 1))?;
            Ok(tally)
        };
        if fanout < 2 {
            return run(None);
        }
        (0..fanout)
            .into_par_iter()
            .map(|c| run(Some(c)))
            .try_reduce(|| MomentumTally::new(config.sites), |mut a, b| {
                a += &b;
                Ok(a)
            })
    }

    fn walk(&self, config: &ProblemConfig, first: Option<usize>, mut visitor: impl FnMut(&Visit)) -> Result<u64> {
        let g = &self.graph;
        if g.nodes.is_empty() {
            return Ok(0);
        }
        let sites = g.sites;
        let mut anchors = vec![Anchor { child_depth: 0, choice: 0, child: 0, upper: None }];
        let mut stack: Vec<u32>;
        let mut summary: Segment;
        match first {
            None => {
                stack = self.aug[0].backtrack.clone();
                summary = self.aug[0].lower_summary().clone();
            }
            Some(choice) => {
                let edge = g.nodes[0].children.get(choice).ok_or_else(|| {
                    Error::InvalidConfig(format!("root has no child {choice}"))
                })?;
                let upper = Segment::fresh(sites, &edge.rows);
                summary = self.aug[edge.child].lower_summary().join(&upper);
                stack = self.aug[edge.child].backtrack.clone();
                anchors.push(Anchor { child_depth: 1, choice, child: edge.child, upper: Some(upper) });
            }
        }
        let floor = u32::from(first.is_some());

        let mut visits = 1;
        let momentum = summary.momentum(config)?;
        visitor(&Visit { graph: self, anchors: &anchors, summary: &summary, momentum });

        while let Some(j) = stack.pop() {
            debug_assert!(j >= floor);
            while anchors.last().is_some_and(|a| a.child_depth > j + 1) {
                anchors.pop();
            }
            let previous = match anchors.last() {
                Some(a) if a.child_depth == j + 1 => anchors.pop().map_or(0, |a| a.choice),
                _ => 0,
            };
            let top = anchors.last().expect("base anchor is never popped");
            let path = &self.aug[top.child];
            let node_id = path.leftmost_path[(j - top.child_depth) as usize];
            let node = &g.nodes[node_id];
            let choice = previous + 1;
            debug_assert!(choice < node.children.len());
            let edge = &node.children[choice];

            // labels N - j + 1 ..= N of the current path
            let above = if j == top.child_depth {
                top.upper.clone()
            } else {
                let band = &path.bands[(j - top.child_depth - 1) as usize];
                Some(Segment::join_opt(band, top.upper.as_ref()))
            };
            let fresh = Segment::fresh(sites - j, &edge.rows);
            let upper = Segment::join_opt(&fresh, above.as_ref());

            if choice + 1 < node.children.len() {
                stack.push(j);
            }
            let below = &self.aug[edge.child];
            stack.extend_from_slice(&below.backtrack);
            summary = below.lower_summary().join(&upper);
            anchors.push(Anchor { child_depth: j + 1, choice, child: edge.child, upper: Some(upper) });

            visits += 1;
            let momentum = summary.momentum(config)?;
            visitor(&Visit { graph: self, anchors: &anchors, summary: &summary, momentum });
        }
        Ok(visits)
    }
}

/// Node count of the branching graph of `shape`, with the bound `C(λ_1 + k, k)`.
pub fn node_count_bounds(shape: &Shape, sigma: u32) -> Result<(u64, BigUint)> {
    let graph = BranchingGraph::build(shape, sigma)?;
    Ok((graph.node_count() as u64, binomial(shape.first_row() + shape.row_count() as u32, shape.row_count() as u32)))
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    let k = k.min(n.saturating_sub(k));
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
