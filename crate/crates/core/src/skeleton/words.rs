use super::{NodeId, PathEnumerator, SkeletonDag};
use crate::script::{Expand, Segment};
use crate::word::Letter;

/// A skeleton whose paths spell words.
///
/// Entering a node appends its letter; when `closing` is set, entering the
/// sink from `v` appends `closing[v]`.
#[derive(Clone, Debug)]
pub struct WordSkeleton {
    pub(crate) dag: SkeletonDag,
    pub(crate) letter: Vec<Letter>,
    pub(crate) closing: Option<Vec<Letter>>,
}

impl WordSkeleton {
    pub fn dag(&self) -> &SkeletonDag {
        &self.dag
    }

    fn enter(&self, from: NodeId, to: NodeId, out: &mut Vec<Letter>) {
        if to == self.dag.sink() {
            if let Some(c) = &self.closing {
                out.push(c[from.index()]);
            }
        } else {
            out.push(self.letter[to.index()]);
        }
    }

    pub fn spell(&self, path: &[NodeId]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(path.len());
        for w in path.windows(2) {
            self.enter(w[0], w[1], &mut out);
        }
        out
    }

    /// Incremental enumeration; replay the scripts with a [`crate::script::Replayer`].
    pub fn scripts(&self) -> PathEnumerator<'_> {
        PathEnumerator::new(&self.dag)
    }

    /// Explicit words in enumeration order.
    pub fn words(&self) -> impl Iterator<Item = Vec<Letter>> + '_ {
        let mut e = PathEnumerator::new(&self.dag);
        std::iter::from_fn(move || {
            e.next()?;
            Some(self.spell(&e.materialize_current().expect("a path was just produced")))
        })
    }
}

impl Expand for WordSkeleton {
    type Node = NodeId;

    fn expand(&self, seg: &Segment<NodeId>, out: &mut Vec<Letter>) {
        match *seg {
            Segment::Edge(a, b) => self.enter(a, b, out),
            Segment::DefaultPath(a, b) => {
                let mut v = a;
                while v != b {
                    let t = self.dag.down(v);
                    self.enter(v, t, out);
                    v = t;
                }
            }
            Segment::FinalLetter(c) => out.push(c),
        }
    }
}
