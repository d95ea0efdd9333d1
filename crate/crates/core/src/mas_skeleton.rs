//! Minimal absent subsequences through a skeleton with `O(n·sigma)` nodes.
//!
//! For every prefix `w[1..i]` the set `P_i` holds the last occurrence of each
//! letter seen so far. Node `(i, j)` with `j` in `P_i` sits on level `i`; a
//! path `s, (i_1, j_1), .., (i_m, j_m), f` spells `w[i_1]..w[i_m] w[j_m]`.

use num_bigint::BigUint;

use crate::index::WordIndex;
use crate::script::{EditScript, Replayer};
use crate::skeleton::{count_paths, NodeId, PathEnumerator, SkeletonDag, WordSkeleton};
use crate::word::Letter;

pub const INFINITY: u32 = u32::MAX;

/// The sets `P_1..P_n` as an `n × sigma` matrix, rows padded with [`INFINITY`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSets {
    sigma: usize,
    cells: Vec<u32>,
}

impl PSets {
    /// Sorted elements of `P_i`.
    pub fn row(&self, i: usize) -> &[u32] {
        let r = &self.cells[(i - 1) * self.sigma..i * self.sigma];
        let len = r.partition_point(|&x| x != INFINITY);
        &r[..len]
    }

    pub fn padded_row(&self, i: usize) -> &[u32] {
        &self.cells[(i - 1) * self.sigma..i * self.sigma]
    }
}

pub fn compute_p_sets(ix: &WordIndex) -> PSets {
    let n = ix.n();
    let sigma = ix.sigma();
    const NIL: usize = usize::MAX;
    // letters ordered by their latest occurrence, as a doubly linked list
    let mut before = vec![NIL; sigma + 1];
    let mut after = vec![NIL; sigma + 1];
    let mut latest = vec![0u32; sigma + 1];
    let (mut head, mut tail) = (NIL, NIL);
    let mut cells = vec![INFINITY; n * sigma];
    for i in 1..=n {
        let a = ix.letter(i).idx();
        if latest[a] != 0 {
            if before[a] != NIL {
                after[before[a]] = after[a];
            } else {
                head = after[a];
            }
            if after[a] != NIL {
                before[after[a]] = before[a];
            } else {
                tail = before[a];
            }
        }
        before[a] = tail;
        after[a] = NIL;
        if tail != NIL {
            after[tail] = a;
        } else {
            head = a;
        }
        tail = a;
        latest[a] = i as u32;

        let row = &mut cells[(i - 1) * sigma..i * sigma];
        let mut x = head;
        let mut t = 0;
        while x != NIL {
            row[t] = latest[x];
            t += 1;
            x = after[x];
        }
    }
    PSets { sigma, cells }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MasNodeLabel {
    Source,
    Sink,
    /// The pair `(i, j)` with `j` in `P_i`.
    Pair(usize, usize),
}

#[derive(Clone, Debug)]
pub struct MasSkeleton {
    words: WordSkeleton,
    labels: Vec<MasNodeLabel>,
}

/// Builds the skeleton and drops nodes that no path from the source reaches.
pub fn build_mas_skeleton(ix: &WordIndex) -> MasSkeleton {
    let n = ix.n();
    let p = compute_p_sets(ix);
    let mut start = vec![0usize; n + 2];
    for i in 1..=n {
        start[i + 1] = start[i] + p.row(i).len();
    }
    let total = start[n + 1];
    // full node t belongs to level i with t in start[i]..start[i+1]
    let mut target = vec![u32::MAX; total];
    let mut ptr: Vec<usize> = vec![0; n + 1];
    for i in 1..=n {
        for (l, &j) in p.row(i).iter().enumerate() {
            let k = ix.next(j as usize);
            if k <= n {
                let row = p.row(k);
                while row[ptr[k]] as usize <= i {
                    ptr[k] += 1;
                }
                target[start[i] + l] = (start[k] + ptr[k]) as u32;
            }
        }
    }

    // reachable nodes form a suffix of each level's sibling order
    let mut first_live = vec![usize::MAX; n + 2];
    for a in 1..=ix.sigma() {
        first_live[ix.first_occurrence(Letter::from_idx(a))] = 0;
    }
    for i in 1..=n {
        if first_live[i] == usize::MAX {
            continue;
        }
        for (l, &j) in p.row(i).iter().enumerate().skip(first_live[i]) {
            let k = ix.next(j as usize);
            if k <= n {
                let u = target[start[i] + l] as usize;
                first_live[k] = first_live[k].min(u - start[k]);
            }
        }
    }

    let mut id = vec![NodeId::NONE; total];
    let mut labels = vec![MasNodeLabel::Source, MasNodeLabel::Sink];
    let mut letter = vec![Letter::from_idx(1); 2];
    let mut closing = vec![Letter::from_idx(1); 2];
    let mut level = vec![0u32, 0];
    let mut level_orders = vec![vec![NodeId(0)]];
    for i in 1..=n {
        if first_live[i] == usize::MAX {
            continue;
        }
        let l = level_orders.len() as u32;
        let mut nodes = Vec::new();
        for (t, &j) in p.row(i).iter().enumerate().skip(first_live[i]) {
            let v = NodeId(labels.len() as u32);
            id[start[i] + t] = v;
            labels.push(MasNodeLabel::Pair(i, j as usize));
            letter.push(ix.letter(i));
            closing.push(ix.letter(j as usize));
            level.push(l);
            nodes.push(v);
        }
        level_orders.push(nodes);
    }
    level[1] = level_orders.len() as u32;
    level_orders.push(vec![NodeId(1)]);

    let mut down = vec![NodeId::NONE; labels.len()];
    for t in 0..total {
        if !id[t].is_none() {
            down[id[t].index()] = if target[t] == u32::MAX { NodeId(1) } else { id[target[t] as usize] };
        }
    }
    let sources: Vec<NodeId> = (1..=ix.sigma()).map(|a| id[start[ix.first_occurrence(Letter::from_idx(a))]]).collect();
    let dag = SkeletonDag::from_parts(level, down, NodeId(0), NodeId(1), sources, level_orders);
    MasSkeleton { words: WordSkeleton { dag, letter, closing: Some(closing) }, labels }
}

impl MasSkeleton {
    pub fn dag(&self) -> &SkeletonDag {
        self.words.dag()
    }

    pub fn words(&self) -> &WordSkeleton {
        &self.words
    }

    pub fn label(&self, v: NodeId) -> MasNodeLabel {
        self.labels[v.index()]
    }

    pub fn labels(&self) -> &[MasNodeLabel] {
        &self.labels
    }

    pub fn scripts(&self) -> PathEnumerator<'_> {
        self.words.scripts()
    }

    pub fn replayer(&self) -> Replayer<'_, WordSkeleton> {
        Replayer::new(&self.words)
    }
}

pub fn enumerate_mas_via_skeleton(sk: &MasSkeleton) -> impl Iterator<Item = Vec<Letter>> + '_ {
    sk.words.words()
}

pub fn enumerate_mas_via_skeleton_incremental(sk: &MasSkeleton) -> impl Iterator<Item = EditScript<NodeId>> + '_ {
    sk.scripts()
}

pub fn count_mas(sk: &MasSkeleton) -> BigUint {
    count_paths(sk.dag())
}
