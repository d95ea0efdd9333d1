use super::{NodeId, SkeletonDag};
use crate::error::{Error, Result};
use crate::script::{EditScript, Segment};

// One stretch of the current path. `v` is where it starts; `alt` is the next
// sibling still to try as the successor of `v`; `branch` is the next branching
// node on the default path from `v` that has not been explored yet.
#[derive(Clone, Copy, Debug)]
struct PathObject {
    v: NodeId,
    alt: NodeId,
    branch: NodeId,
    u: NodeId,
    depth: u32,
    marked: bool,
}

const EMPTY: PathObject =
    PathObject { v: NodeId::NONE, alt: NodeId::NONE, branch: NodeId::NONE, u: NodeId::NONE, depth: 0, marked: false };

/// Constant-delay enumerator of source-to-sink paths, one edit script per path.
pub struct PathEnumerator<'g> {
    g: &'g SkeletonDag,
    stack: Vec<PathObject>,
    top: usize,
    marks: Vec<u32>,
    mtop: usize,
    next_source: usize,
    produced: bool,
    steps: u64,
    audit: bool,
}

impl<'g> PathEnumerator<'g> {
    pub fn new(g: &'g SkeletonDag) -> PathEnumerator<'g> {
        let cap = g.depth() + 2;
        PathEnumerator {
            g,
            stack: vec![EMPTY; cap],
            top: 0,
            marks: vec![0; cap],
            mtop: 0,
            next_source: 0,
            produced: false,
            steps: 0,
            audit: cfg!(debug_assertions) && g.node_count() <= 512,
        }
    }

    /// Elementary operations performed so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn set_audit(&mut self, on: bool) {
        self.audit = on;
    }

    pub fn skeleton(&self) -> &'g SkeletonDag {
        self.g
    }

    #[inline]
    fn push(&mut self, x: PathObject) {
        self.stack[self.top] = x;
        if x.marked {
            self.marks[self.mtop] = self.top as u32;
            self.mtop += 1;
        }
        self.top += 1;
        self.steps += 1;
    }

    fn tail(&self, v: NodeId, depth: u32) -> PathObject {
        let g = self.g;
        let t = g.down(v);
        let alt = g.link(t);
        let branch = g.nb(t);
        PathObject { v, alt, branch, u: g.sink(), depth, marked: !alt.is_none() || !branch.is_none() }
    }

    fn start_source_edge(&mut self) -> Option<EditScript<NodeId>> {
        let g = self.g;
        let v = *g.source_targets().get(self.next_source)?;
        self.next_source += 1;
        self.top = 0;
        self.mtop = 0;
        let alt = g.link(v);
        self.push(PathObject { v: g.source(), alt, branch: NodeId::NONE, u: v, depth: 0, marked: !alt.is_none() });
        let mut script = EditScript::new(g.source(), 0);
        script.push(Segment::Edge(g.source(), v));
        if v != g.sink() {
            let x = self.tail(v, 1);
            self.push(x);
            script.push(Segment::DefaultPath(v, g.sink()));
        }
        Some(script)
    }

    fn step(&mut self) -> EditScript<NodeId> {
        let g = self.g;
        let p = self.marks[self.mtop - 1] as usize;
        self.top = p + 1;
        let x = self.stack[p];
        self.steps += 2;
        let mut script = EditScript::new(x.v, x.depth as usize);
        if !x.branch.is_none() {
            let b = x.branch;
            let further = g.nb(g.down(b));
            if !further.is_none() && g.d(further) >= g.d(x.u) {
                self.stack[p].branch = further;
            } else {
                self.stack[p].branch = NodeId::NONE;
                if x.alt.is_none() {
                    self.stack[p].marked = false;
                    self.mtop -= 1;
                }
            }
            let u1 = g.link(g.down(b));
            let depth = x.depth + (g.d(x.v) - g.d(b)) as u32;
            let alt = g.link(u1);
            self.push(PathObject { v: b, alt, branch: NodeId::NONE, u: u1, depth, marked: !alt.is_none() });
            let z = self.tail(u1, depth + 1);
            self.push(z);
            script.push(Segment::DefaultPath(x.v, b));
            script.push(Segment::Edge(b, u1));
            script.push(Segment::DefaultPath(u1, g.sink()));
        } else {
            let a = x.alt;
            let after = g.link(a);
            self.stack[p].alt = after;
            if after.is_none() {
                self.stack[p].marked = false;
                self.mtop -= 1;
            }
            let y = self.tail(a, x.depth + 1);
            self.push(y);
            script.push(Segment::Edge(x.v, a));
            script.push(Segment::DefaultPath(a, g.sink()));
        }
        script
    }

    fn check_invariants(&self) {
        let mut k = 0;
        for i in 0..self.top {
            if self.stack[i].marked {
                assert!(k < self.mtop && self.marks[k] as usize == i, "mark stack out of order");
                k += 1;
            }
        }
        assert_eq!(k, self.mtop, "stale mark above the stack top");
    }

    /// Current path from source to sink, both included.
    pub fn materialize_current(&self) -> Result<Vec<NodeId>> {
        if !self.produced || self.top == 0 {
            return Err(Error::NoCurrentPath);
        }
        let g = self.g;
        let mut out = vec![g.source()];
        let mut prev = g.source();
        let firsts = self.stack[1..self.top].iter().map(|x| x.v).chain(std::iter::once(g.sink()));
        for v in firsts {
            if g.is_expanded_edge(prev, v) {
                out.push(v);
            } else {
                g.push_default_path(prev, v, &mut out);
            }
            prev = v;
        }
        Ok(out)
    }
}

impl Iterator for PathEnumerator<'_> {
    type Item = EditScript<NodeId>;

    fn next(&mut self) -> Option<EditScript<NodeId>> {
        let out = if self.mtop == 0 { self.start_source_edge() } else { Some(self.step()) };
        if out.is_some() {
            self.produced = true;
            if self.audit {
                self.check_invariants();
            }
        }
        out
    }
}

/// Paths as explicit node lists, in the same order as the edit scripts.
pub struct Paths<'g> {
    inner: PathEnumerator<'g>,
}

impl Iterator for Paths<'_> {
    type Item = Vec<NodeId>;

    fn next(&mut self) -> Option<Vec<NodeId>> {
        self.inner.next()?;
        Some(self.inner.materialize_current().expect("a path was just produced"))
    }
}

pub fn enumerate_paths(g: &SkeletonDag) -> Paths<'_> {
    Paths { inner: PathEnumerator::new(g) }
}

/// Applies an edit script to an explicit node path.
pub fn apply_script(g: &SkeletonDag, path: &mut Vec<NodeId>, script: &EditScript<NodeId>) {
    if path.is_empty() {
        path.push(g.source());
    }
    path.truncate(script.rewind_depth + 1);
    debug_assert_eq!(path.last(), Some(&script.rewind_to));
    for seg in &script.segments {
        match *seg {
            Segment::Edge(_, b) => path.push(b),
            Segment::DefaultPath(a, b) => g.push_default_path(a, b, path),
            Segment::FinalLetter(_) => {}
        }
    }
}
