//! Minimal absent subsequences straight from the word, without a skeleton.
//!
//! The search graph has a node `(i, j)` for "the last letter read sits at `i`
//! and the one before at `j`". Its children are `(next[g], i)` for the
//! positions `g` in `j+1..=i` whose letter does not reappear before `i + 1`,
//! and a child `next[g] = n + 1` closes the word with `w[g]`. Children are
//! found one at a time by range-maximum queries over the next-occurrence
//! array.

use std::collections::VecDeque;

use crate::index::WordIndex;
use crate::script::{EditScript, Expand, Replayer, Segment};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DwNode {
    Source,
    Pair(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DwChild {
    Node(usize, usize),
    /// The edge into the sink.
    Sink,
}

/// Children of `(i, j)` in enumeration order: the default child `(next[i], i)`
/// first, then the rest as discovered by splitting `j+1..=i-1`.
pub struct DwChildren<'a> {
    ix: &'a WordIndex,
    i: usize,
    queue: VecDeque<(u32, u32)>,
}

impl<'a> DwChildren<'a> {
    fn reset(&mut self, i: usize, j: usize) {
        self.i = i;
        self.queue.clear();
        self.queue.push_back((i as u32, i as u32));
        if j + 1 < i {
            self.queue.push_back((j as u32 + 1, i as u32 - 1));
        }
    }
}

impl Iterator for DwChildren<'_> {
    type Item = (DwChild, Letter);

    fn next(&mut self) -> Option<(DwChild, Letter)> {
        let (x, y) = self.queue.pop_front()?;
        let (x, y) = (x as usize, y as usize);
        let g = split(self.ix, &mut self.queue, x, y, self.i);
        let k = self.ix.next(g);
        let child = if k > self.ix.n() { DwChild::Sink } else { DwChild::Node(k, self.i) };
        Some((child, self.ix.letter(g)))
    }
}

// Takes the maximum of x..=y and queues the two sides that still hold a child
// of a node at position `i`.
#[inline]
fn split(ix: &WordIndex, queue: &mut VecDeque<(u32, u32)>, x: usize, y: usize, i: usize) -> usize {
    let g = ix.range_max_next(x, y).expect("queued intervals are non-empty");
    if let Some(l) = ix.range_max_next(x, g - 1) {
        if ix.next(l) > i {
            queue.push_back((x as u32, g as u32 - 1));
        }
    }
    if let Some(r) = ix.range_max_next(g + 1, y) {
        if ix.next(r) > i {
            queue.push_back((g as u32 + 1, y as u32));
        }
    }
    g
}

pub fn dw_children(ix: &WordIndex, i: usize, j: usize) -> DwChildren<'_> {
    let mut c = DwChildren { ix, i, queue: VecDeque::new() };
    c.reset(i, j);
    c
}

/// Depth-first enumeration with output-linear delay.
pub struct MasDfs<'a> {
    ix: &'a WordIndex,
    frames: Vec<(Letter, DwChildren<'a>)>,
    depth: usize,
    next_letter: usize,
}

pub fn enumerate_mas(ix: &WordIndex) -> MasDfs<'_> {
    MasDfs { ix, frames: Vec::new(), depth: 0, next_letter: 1 }
}

impl MasDfs<'_> {
    fn enter(&mut self, i: usize, j: usize) {
        let a = self.ix.letter(i);
        if self.depth == self.frames.len() {
            self.frames.push((a, dw_children(self.ix, i, j)));
        } else {
            let f = &mut self.frames[self.depth];
            f.0 = a;
            f.1.reset(i, j);
        }
        self.depth += 1;
    }
}

impl Iterator for MasDfs<'_> {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        loop {
            if self.depth == 0 {
                if self.next_letter > self.ix.sigma() {
                    return None;
                }
                let i = self.ix.first_occurrence(Letter::from_idx(self.next_letter));
                self.next_letter += 1;
                self.enter(i, 0);
            }
            match self.frames[self.depth - 1].1.next() {
                Some((DwChild::Node(k, i), _)) => self.enter(k, i),
                Some((DwChild::Sink, c)) => {
                    let mut out: Vec<Letter> = self.frames[..self.depth].iter().map(|f| f.0).collect();
                    out.push(c);
                    return Some(out);
                }
                None => self.depth -= 1,
            }
        }
    }
}

/// Per-position tables for the incremental enumerator.
#[derive(Clone, Debug)]
pub struct GapTables {
    // (x, y): y is the first position of the run of w[i] ending at i, x the
    // occurrence before it, and y - x > 1; (0, 0) if there is none
    last_gap: Vec<(u32, u32)>,
    last_pair: Vec<(u32, u32)>,
}

impl GapTables {
    pub fn last_gap(&self, i: usize) -> Option<(usize, usize)> {
        let (x, y) = self.last_gap[i];
        (y != 0).then_some((x as usize, y as usize))
    }

    /// Last two occurrences of `a`; the second is `n + 1` if `a` occurs once.
    pub fn last_pair(&self, a: Letter) -> (usize, usize) {
        let (x, y) = self.last_pair[a.idx()];
        (x as usize, y as usize)
    }
}

pub fn compute_gap_tables(ix: &WordIndex) -> GapTables {
    let n = ix.n();
    let mut last_gap = vec![(0u32, 0u32); n + 1];
    let mut last_pair = vec![(0u32, 0u32); ix.sigma() + 1];
    for a in 1..=ix.sigma() {
        let a = Letter::from_idx(a);
        let occ = ix.occurrences(a);
        for t in 1..occ.len() {
            let (j, i) = (occ[t - 1], occ[t]);
            last_gap[i as usize] = if i - j > 1 { (j, i) } else { last_gap[j as usize] };
        }
        last_pair[a.idx()] = match occ.len() {
            1 => (occ[0], n as u32 + 1),
            k => (occ[k - 2], occ[k - 1]),
        };
    }
    GapTables { last_gap, last_pair }
}

// A run of default edges through the occurrences of `letter` from `start.0`
// to `end`, with the rightmost node on it that still has children to visit.
#[derive(Clone, Debug)]
struct Stretch {
    start: (usize, usize),
    end: usize,
    letter: Letter,
    depth: u32,
    branch: (usize, usize),
    queue: VecDeque<(u32, u32)>,
    marked: bool,
}

/// Constant-delay enumeration as edit scripts over [`DwNode`]s.
pub struct MasIncremental<'a> {
    ix: &'a WordIndex,
    gaps: GapTables,
    stack: Vec<Stretch>,
    top: usize,
    marks: Vec<u32>,
    final_letter: Option<Letter>,
    next_letter: usize,
    steps: u64,
}

pub fn enumerate_mas_incremental(ix: &WordIndex) -> MasIncremental<'_> {
    MasIncremental {
        ix,
        gaps: compute_gap_tables(ix),
        stack: Vec::new(),
        top: 0,
        marks: Vec::new(),
        final_letter: None,
        next_letter: 1,
        steps: 0,
    }
}

impl<'a> MasIncremental<'a> {
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn index(&self) -> &'a WordIndex {
        self.ix
    }

    pub fn replayer(&self) -> Replayer<'a, WordIndex> {
        Replayer::new(self.ix)
    }

    /// Rightmost node with more than one child on the default path from
    /// `start` to the node at position `end`.
    fn rightmost_branching(&self, start: (usize, usize), end: usize) -> Option<(usize, usize)> {
        if end > start.0 {
            if let Some((x, y)) = self.gaps.last_gap(end) {
                if y > start.0 {
                    return Some((y, x));
                }
            }
        }
        (start.0 > start.1 + 1).then_some(start)
    }

    fn push(&mut self, start: (usize, usize), end: usize, depth: u32) {
        let branch = self.rightmost_branching(start, end);
        if self.top == self.stack.len() {
            self.stack.push(Stretch {
                start,
                end,
                letter: self.ix.letter(start.0),
                depth,
                branch: (0, 0),
                queue: VecDeque::new(),
                marked: false,
            });
        }
        let s = &mut self.stack[self.top];
        s.start = start;
        s.end = end;
        s.letter = self.ix.letter(start.0);
        s.depth = depth;
        s.queue.clear();
        s.marked = branch.is_some();
        if let Some((z, v)) = branch {
            s.branch = (z, v);
            s.queue.push_back((v as u32 + 1, z as u32 - 1));
            self.marks.push(self.top as u32);
        }
        self.top += 1;
        self.steps += 1;
    }

    fn start_letter(&mut self) -> Option<EditScript<DwNode>> {
        if self.next_letter > self.ix.sigma() {
            return None;
        }
        let a = Letter::from_idx(self.next_letter);
        self.next_letter += 1;
        let i = self.ix.first_occurrence(a);
        let e = self.ix.last_occurrence(a);
        self.top = 0;
        self.push((i, 0), e, 1);
        self.final_letter = Some(a);
        let mut script = EditScript::new(DwNode::Source, 0);
        script.push(Segment::Edge(DwNode::Source, DwNode::Pair(i, 0)));
        if e != i {
            script.push(Segment::DefaultPath(DwNode::Pair(i, 0), DwNode::Pair(e, self.ix.prev(e))));
        }
        script.push(Segment::FinalLetter(a));
        Some(script)
    }

    fn step(&mut self) -> EditScript<DwNode> {
        let ix = self.ix;
        let p = *self.marks.last().unwrap() as usize;
        self.top = p + 1;
        // the pop, the truncation and three range queries
        self.steps += 5;
        let s = &mut self.stack[p];
        let (bi, bj) = s.branch;
        let (x, y) = s.queue.pop_front().expect("marked stretches have pending children");
        let g = split(ix, &mut s.queue, x as usize, y as usize, bi);
        s.end = bi;
        let start = s.start;
        let depth = s.depth as usize + ix.rank(bi) - ix.rank(start.0);
        if s.queue.is_empty() {
            let earlier = if (bi, bj) == start { None } else { self.rightmost_branching(start, bj) };
            let s = &mut self.stack[p];
            match earlier {
                Some((z, v)) => {
                    s.branch = (z, v);
                    s.queue.push_back((v as u32 + 1, z as u32 - 1));
                }
                None => {
                    s.marked = false;
                    self.marks.pop();
                }
            }
            self.steps += 1;
        }

        let here = DwNode::Pair(bi, bj);
        let mut script = EditScript::new(here, depth);
        let b = ix.letter(g);
        let k = ix.next(g);
        if k <= ix.n() {
            let e = ix.last_occurrence(b);
            self.push((k, bi), e, depth as u32 + 1);
            script.push(Segment::Edge(here, DwNode::Pair(k, bi)));
            if e != k {
                script.push(Segment::DefaultPath(DwNode::Pair(k, bi), DwNode::Pair(e, ix.prev(e))));
            }
        }
        script.push(Segment::FinalLetter(b));
        self.final_letter = Some(b);
        script
    }

    /// The word produced by the last script.
    pub fn materialize_current(&self) -> crate::Result<Vec<Letter>> {
        let last = self.final_letter.ok_or(crate::Error::NoCurrentPath)?;
        let mut out = Vec::new();
        for s in &self.stack[..self.top] {
            let count = self.ix.rank(s.end) - self.ix.rank(s.start.0) + 1;
            out.extend(std::iter::repeat_n(s.letter, count));
        }
        out.push(last);
        Ok(out)
    }
}

impl Iterator for MasIncremental<'_> {
    type Item = EditScript<DwNode>;

    fn next(&mut self) -> Option<EditScript<DwNode>> {
        if self.marks.is_empty() {
            self.start_letter()
        } else {
            Some(self.step())
        }
    }
}

impl Expand for WordIndex {
    type Node = DwNode;

    fn expand(&self, seg: &Segment<DwNode>, out: &mut Vec<Letter>) {
        match *seg {
            Segment::Edge(_, DwNode::Pair(k, _)) => out.push(self.letter(k)),
            Segment::Edge(_, DwNode::Source) => {}
            Segment::DefaultPath(DwNode::Pair(i, _), DwNode::Pair(e, _)) => {
                let count = self.rank(e) - self.rank(i);
                out.extend(std::iter::repeat_n(self.letter(i), count));
            }
            Segment::DefaultPath(..) => {}
            Segment::FinalLetter(c) => out.push(c),
        }
    }
}
