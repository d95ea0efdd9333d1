//! Shortest absent subsequences through a skeleton with `O(k·sigma)` nodes.
//!
//! With `k` arches, level `l <= k` holds the first occurrence in arch `l` of
//! every letter from which an absent subsequence of the right length can
//! still start, level `k+1` holds one node per closing letter, and the sink
//! sits on level `k+2`.

use num_bigint::BigUint;

use crate::index::WordIndex;
use crate::script::{EditScript, Replayer};
use crate::skeleton::{count_paths, NodeId, PathEnumerator, SkeletonDag, WordSkeleton};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SasNode {
    Source,
    Sink,
    /// A position of the word.
    Position(usize),
    /// The node `n + a` for closing letter `a`.
    Closing(Letter),
}

#[derive(Clone, Debug)]
pub struct SasSkeleton {
    words: WordSkeleton,
    labels: Vec<SasNode>,
}

pub fn build_sas_skeleton(ix: &WordIndex) -> SasSkeleton {
    let n = ix.n();
    let sigma = ix.sigma();
    let k = ix.iota();
    let w = |i: usize| ix.letter(i);

    let mut b = Nodes {
        labels: vec![SasNode::Source, SasNode::Sink],
        letter: vec![Letter::from_idx(1); 2],
        level: vec![0, (k + 2) as u32],
        down: vec![NodeId::NONE; 2],
    };
    let mut level_orders: Vec<Vec<NodeId>> = vec![vec![NodeId(0)]];

    // nodes of the previous level and its filtered last occurrences
    let mut prev_nodes: Vec<(usize, NodeId)> = Vec::new();
    let mut prev_g: Vec<usize> = Vec::new();
    let mut by_letter = vec![NodeId::NONE; sigma + 1];

    for l in 1..=k + 1 {
        // nodes of level l
        let mut nodes: Vec<(usize, NodeId)> = Vec::new();
        by_letter.iter_mut().for_each(|x| *x = NodeId::NONE);
        if l <= k {
            let (s, e) = ix.arches().arch(l);
            for i in s..=e {
                if ix.first_pos_arch(l, w(i)) == i && ix.dist(i) == k - l + 2 {
                    let id = b.add(SasNode::Position(i), w(i), l);
                    by_letter[w(i).idx()] = id;
                    nodes.push((i, id));
                }
            }
        } else {
            for &j in &prev_g {
                let a = w(j);
                let id = b.add(SasNode::Closing(a), a, l);
                by_letter[a.idx()] = id;
                nodes.push((n + a.idx(), id));
            }
        }

        // down edges of level l - 1 and sibling order of level l
        if l == 1 {
            level_orders.push(nodes.iter().rev().map(|&(_, v)| v).collect());
        } else {
            let mut t = 0;
            for &(i, v) in &prev_nodes {
                while t + 1 < prev_g.len() && prev_g[t + 1] <= i {
                    t += 1;
                }
                let j = prev_g[t];
                debug_assert!(j <= i, "level {} node {} has no down target", l - 1, i);
                b.down[v.index()] = by_letter[w(j).idx()];
            }
            level_orders.push(prev_g.iter().rev().map(|&j| by_letter[w(j).idx()]).collect());
        }

        // G_l: last occurrences in arch l whose letter continues on level l + 1
        if l <= k {
            let (s, e) = ix.arches().arch(l);
            prev_g =
                (s..=e)
                    .filter(|&i| ix.last_pos_arch(l, w(i)) == i)
                    .filter(|&i| {
                        if l < k {
                            ix.dist(ix.first_pos_arch(l + 1, w(i))) == k - l + 1
                        } else {
                            !ix.in_rest(w(i))
                        }
                    })
                    .collect();
        }
        prev_nodes = nodes;
    }
    for &(_, v) in &prev_nodes {
        b.down[v.index()] = NodeId(1);
    }
    level_orders.push(vec![NodeId(1)]);

    let first = level_orders[1][0];
    let dag = SkeletonDag::from_parts(b.level, b.down, NodeId(0), NodeId(1), vec![first], level_orders);
    SasSkeleton { words: WordSkeleton { dag, letter: b.letter, closing: None }, labels: b.labels }
}

struct Nodes {
    labels: Vec<SasNode>,
    letter: Vec<Letter>,
    level: Vec<u32>,
    down: Vec<NodeId>,
}

impl Nodes {
    fn add(&mut self, label: SasNode, a: Letter, l: usize) -> NodeId {
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(label);
        self.letter.push(a);
        self.level.push(l as u32);
        self.down.push(NodeId::NONE);
        id
    }
}

impl SasSkeleton {
    pub fn dag(&self) -> &SkeletonDag {
        self.words.dag()
    }

    pub fn words(&self) -> &WordSkeleton {
        &self.words
    }

    pub fn label(&self, v: NodeId) -> SasNode {
        self.labels[v.index()]
    }

    pub fn labels(&self) -> &[SasNode] {
        &self.labels
    }

    pub fn scripts(&self) -> PathEnumerator<'_> {
        self.words.scripts()
    }

    pub fn replayer(&self) -> Replayer<'_, WordSkeleton> {
        Replayer::new(&self.words)
    }
}

/// Every shortest absent subsequence, explicitly.
pub fn enumerate_sas(sk: &SasSkeleton) -> impl Iterator<Item = Vec<Letter>> + '_ {
    sk.words.words()
}

/// Edit scripts, one per shortest absent subsequence.
pub fn enumerate_sas_incremental(sk: &SasSkeleton) -> impl Iterator<Item = EditScript<NodeId>> + '_ {
    sk.scripts()
}

pub fn count_sas(sk: &SasSkeleton) -> BigUint {
    count_paths(sk.dag())
}
