//! Leveled DAGs whose source-to-sink paths are enumerated with constant delay.
//!
//! A skeleton has a source on level 0 and a sink on level `m`. Every other
//! node has exactly one edge to a higher level (its *down* edge), and the
//! nodes of each inner level are chained in a total *sibling* order. The
//! source may have several down edges, all to different levels. Paths are
//! taken in the expanded graph, where a node may jump from its down target to
//! any later sibling of that target.

mod count;
mod enumerate;
mod words;

pub use count::count_paths;
pub use enumerate::{apply_script, enumerate_paths, PathEnumerator, Paths};
pub use words::WordSkeleton;

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub const NONE: NodeId = NodeId(u32::MAX);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_none(self) -> bool {
        self == NodeId::NONE
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Plain description of a leveled graph, checked by [`validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeveledGraph {
    pub levels: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoNodes,
    EdgeOutOfRange(usize, usize),
    EmptyLevel(usize),
    SourceCount(usize),
    SinkCount(usize),
    EdgeGoesUp(usize, usize),
    SiblingOutsideInnerLevel(usize, usize),
    BrokenSiblingChain(usize),
    DownDegree { node: usize, count: usize },
    SourceLevelRepeated(usize),
}

/// Lists every way in which `g` fails to be a skeleton.
pub fn validate(g: &LeveledGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.levels.len();
    if n == 0 {
        out.push(Violation::NoNodes);
        return out;
    }
    let m = *g.levels.iter().max().unwrap();
    let mut per_level = vec![0usize; m + 1];
    for &l in &g.levels {
        per_level[l] += 1;
    }
    for (l, &c) in per_level.iter().enumerate() {
        if c == 0 {
            out.push(Violation::EmptyLevel(l));
        }
    }
    if per_level[0] != 1 {
        out.push(Violation::SourceCount(per_level[0]));
    }
    if m == 0 {
        out.push(Violation::SinkCount(0));
    } else if per_level[m] != 1 {
        out.push(Violation::SinkCount(per_level[m]));
    }

    let mut down_count = vec![0usize; n];
    let mut sib_out = vec![0usize; n];
    let mut sib_in = vec![0usize; n];
    let mut sib_next = vec![usize::MAX; n];
    let mut source_levels = Vec::new();
    for &(u, v) in &g.edges {
        if u >= n || v >= n {
            out.push(Violation::EdgeOutOfRange(u, v));
            continue;
        }
        let (lu, lv) = (g.levels[u], g.levels[v]);
        if lv < lu {
            out.push(Violation::EdgeGoesUp(u, v));
        } else if lv == lu {
            if lu == 0 || lu == m {
                out.push(Violation::SiblingOutsideInnerLevel(u, v));
            } else {
                sib_out[u] += 1;
                sib_in[v] += 1;
                sib_next[u] = v;
            }
        } else {
            down_count[u] += 1;
            if lu == 0 {
                source_levels.push(lv);
            }
        }
    }
    source_levels.sort_unstable();
    for w in source_levels.windows(2) {
        if w[0] == w[1] {
            out.push(Violation::SourceLevelRepeated(w[0]));
        }
    }
    for v in 0..n {
        let l = g.levels[v];
        if l == 0 {
            continue;
        } else if l == m {
            if down_count[v] != 0 {
                out.push(Violation::DownDegree { node: v, count: down_count[v] });
            }
        } else if down_count[v] != 1 {
            out.push(Violation::DownDegree { node: v, count: down_count[v] });
        }
    }
    // each inner level must be one chain through all its nodes
    for l in 1..m {
        let nodes: Vec<usize> = (0..n).filter(|&v| g.levels[v] == l).collect();
        if nodes.is_empty() {
            continue;
        }
        let ok = nodes.iter().all(|&v| sib_out[v] <= 1 && sib_in[v] <= 1) && {
            let heads: Vec<usize> = nodes.iter().copied().filter(|&v| sib_in[v] == 0).collect();
            heads.len() == 1 && {
                let mut seen = 1;
                let mut v = heads[0];
                while sib_next[v] != usize::MAX && seen <= nodes.len() {
                    v = sib_next[v];
                    seen += 1;
                }
                seen == nodes.len()
            }
        };
        if !ok {
            out.push(Violation::BrokenSiblingChain(l));
        }
    }
    out
}

/// Compact skeleton with sibling links and default-path data.
#[derive(Clone, Debug)]
pub struct SkeletonDag {
    level: Vec<u32>,
    down: Vec<NodeId>,
    source: NodeId,
    sink: NodeId,
    m: usize,
    source_targets: Vec<NodeId>,
    order: Vec<NodeId>,
    level_start: Vec<u32>,
    pos: Vec<u32>,
    d: Vec<u32>,
    nb: Vec<NodeId>,
}

impl SkeletonDag {
    /// Builds a skeleton from already consistent parts.
    ///
    /// `level_orders[l]` lists the nodes of level `l` in sibling order and
    /// `down[v]` is the down target of every node except source and sink.
    pub(crate) fn from_parts(
        level: Vec<u32>,
        down: Vec<NodeId>,
        source: NodeId,
        sink: NodeId,
        mut source_targets: Vec<NodeId>,
        level_orders: Vec<Vec<NodeId>>,
    ) -> SkeletonDag {
        let count = level.len();
        let m = level_orders.len() - 1;
        let mut order = Vec::with_capacity(count);
        let mut level_start = Vec::with_capacity(m + 2);
        let mut pos = vec![0u32; count];
        for nodes in &level_orders {
            level_start.push(order.len() as u32);
            for &v in nodes {
                pos[v.index()] = order.len() as u32;
                order.push(v);
            }
        }
        level_start.push(order.len() as u32);
        source_targets.sort_by_key(|t| level[t.index()]);
        let mut g = SkeletonDag {
            level,
            down,
            source,
            sink,
            m,
            source_targets,
            order,
            level_start,
            pos,
            d: vec![0; count],
            nb: vec![NodeId::NONE; count],
        };
        g.compute_defaults();
        g
    }

    /// Checks `g` and converts it.
    pub fn from_graph(g: &LeveledGraph) -> Result<SkeletonDag> {
        let violations = validate(g);
        if !violations.is_empty() {
            return Err(Error::InvalidSkeleton(violations));
        }
        let n = g.levels.len();
        let m = *g.levels.iter().max().unwrap();
        let source = g.levels.iter().position(|&l| l == 0).unwrap();
        let sink = g.levels.iter().position(|&l| l == m).unwrap();
        let mut down = vec![NodeId::NONE; n];
        let mut sib_next = vec![usize::MAX; n];
        let mut has_prev = vec![false; n];
        let mut targets = Vec::new();
        for &(u, v) in &g.edges {
            if g.levels[u] == g.levels[v] {
                sib_next[u] = v;
                has_prev[v] = true;
            } else if u == source {
                targets.push(NodeId(v as u32));
            } else {
                down[u] = NodeId(v as u32);
            }
        }
        let mut level_orders = vec![Vec::new(); m + 1];
        for v in 0..n {
            if !has_prev[v] {
                let mut x = v;
                let l = g.levels[v];
                loop {
                    level_orders[l].push(NodeId(x as u32));
                    if sib_next[x] == usize::MAX {
                        break;
                    }
                    x = sib_next[x];
                }
            }
        }
        let level = g.levels.iter().map(|&l| l as u32).collect();
        Ok(SkeletonDag::from_parts(level, down, NodeId(source as u32), NodeId(sink as u32), targets, level_orders))
    }

    /// Plain edge-list view, used to re-check engine output.
    pub fn to_graph(&self) -> LeveledGraph {
        let mut edges = Vec::new();
        for &t in &self.source_targets {
            edges.push((self.source.index(), t.index()));
        }
        for v in 0..self.node_count() {
            let id = NodeId(v as u32);
            if !self.down[v].is_none() {
                edges.push((v, self.down[v].index()));
            }
            let next = self.link(id);
            if !next.is_none() {
                edges.push((v, next.index()));
            }
        }
        LeveledGraph { levels: self.level.iter().map(|&l| l as usize).collect(), edges }
    }

    fn compute_defaults(&mut self) {
        // walk levels from the sink upwards so every down target is done first
        for l in (1..self.m).rev() {
            let (s, e) = (self.level_start[l] as usize, self.level_start[l + 1] as usize);
            for k in s..e {
                let v = self.order[k];
                let t = self.down[v.index()];
                self.d[v.index()] = self.d[t.index()] + 1;
                self.nb[v.index()] = if !self.link(t).is_none() { v } else { self.nb[t.index()] };
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.level.len()
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn sink(&self) -> NodeId {
        self.sink
    }

    /// Level of the sink.
    pub fn depth(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn level(&self, v: NodeId) -> usize {
        self.level[v.index()] as usize
    }

    #[inline]
    pub fn down(&self, v: NodeId) -> NodeId {
        self.down[v.index()]
    }

    /// Next sibling, or `NONE`.
    #[inline]
    pub fn link(&self, v: NodeId) -> NodeId {
        let p = self.pos[v.index()] as usize + 1;
        let l = self.level[v.index()] as usize;
        if l > 0 && l < self.m && p < self.level_start[l + 1] as usize {
            self.order[p]
        } else {
            NodeId::NONE
        }
    }

    /// Length of the default path from `v` to the sink.
    #[inline]
    pub fn d(&self, v: NodeId) -> usize {
        self.d[v.index()] as usize
    }

    /// First node on the default path from `v` whose down target has a later
    /// sibling, `v` included; `NONE` if there is none.
    #[inline]
    pub fn nb(&self, v: NodeId) -> NodeId {
        self.nb[v.index()]
    }

    pub fn source_targets(&self) -> &[NodeId] {
        &self.source_targets
    }

    pub fn level_nodes(&self, l: usize) -> &[NodeId] {
        &self.order[self.level_start[l] as usize..self.level_start[l + 1] as usize]
    }

    /// Children of `v` in the expanded graph, in enumeration order.
    pub fn expanded_children(&self, v: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let starts: Vec<NodeId> = if v == self.source { self.source_targets.clone() } else { vec![self.down(v)] };
        for mut t in starts {
            while !t.is_none() {
                out.push(t);
                t = self.link(t);
            }
        }
        out
    }

    /// Whether `(u, v)` is an edge of the expanded graph.
    pub fn is_expanded_edge(&self, u: NodeId, v: NodeId) -> bool {
        let starts: &[NodeId] =
            if u == self.source { &self.source_targets } else { std::slice::from_ref(&self.down[u.index()]) };
        starts
            .iter()
            .any(|&t| !t.is_none() && self.level(t) == self.level(v) && self.pos[v.index()] >= self.pos[t.index()])
    }

    /// Appends the nodes of the default path after `from` up to `to`.
    pub fn push_default_path(&self, from: NodeId, to: NodeId, out: &mut Vec<NodeId>) {
        let mut v = from;
        while v != to {
            v = self.down(v);
            debug_assert!(!v.is_none(), "target not on the default path");
            out.push(v);
        }
    }
}

/// A small skeleton with four levels: s=0, v1..v8 = 1..8, f=9.
pub fn sample() -> LeveledGraph {
    let levels = vec![0, 1, 1, 1, 2, 2, 3, 3, 3, 4];
    let edges = vec![
        (0, 1),
        (0, 4),
        (1, 5),
        (2, 7),
        (3, 5),
        (4, 9),
        (5, 6),
        (6, 9),
        (7, 9),
        (8, 9),
        (1, 2),
        (2, 3),
        (4, 5),
        (6, 7),
        (7, 8),
    ];
    LeveledGraph { levels, edges }
}
