//! Edit scripts emitted by the incremental enumerators.
//!
//! A script rewinds the previous path to one of its nodes and appends at most
//! four segments. Default paths stay symbolic; a consumer expands them.

use arrayvec::ArrayVec;

use crate::word::Letter;

pub const MAX_SEGMENTS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Segment<N> {
    /// A single edge `from -> to`.
    Edge(N, N),
    /// The default path from the first node to the second, both included.
    DefaultPath(N, N),
    /// The closing letter on the edge into the sink.
    FinalLetter(Letter),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditScript<N> {
    pub rewind_to: N,
    /// Nodes kept after the source, the rewind node included.
    pub rewind_depth: usize,
    pub segments: ArrayVec<Segment<N>, MAX_SEGMENTS>,
}

impl<N: Copy> EditScript<N> {
    pub fn new(rewind_to: N, rewind_depth: usize) -> EditScript<N> {
        EditScript { rewind_to, rewind_depth, segments: ArrayVec::new() }
    }

    pub(crate) fn push(&mut self, seg: Segment<N>) {
        self.segments.push(seg);
    }
}

/// Turns segments into letters; implemented by each engine.
pub trait Expand {
    type Node: Copy;
    fn expand(&self, seg: &Segment<Self::Node>, out: &mut Vec<Letter>);
}

/// Rebuilds explicit words from a stream of edit scripts.
pub struct Replayer<'a, E: Expand> {
    expander: &'a E,
    current: Vec<Letter>,
}

impl<'a, E: Expand> Replayer<'a, E> {
    pub fn new(expander: &'a E) -> Self {
        Replayer { expander, current: Vec::new() }
    }

    pub fn apply(&mut self, script: &EditScript<E::Node>) -> &[Letter] {
        self.current.truncate(script.rewind_depth);
        for seg in &script.segments {
            self.expander.expand(seg, &mut self.current);
        }
        &self.current
    }

    pub fn current(&self) -> &[Letter] {
        &self.current
    }
}
