//! Line-delimited structured output and its replay.
//!
//! A stream starts with the line `v=1`, then one JSON object per line. A
//! `header` names the word, then `init` records carry a whole result and
//! `edit` records carry `keep` (letters kept from the previous result) and the
//! segments to append, with default paths left symbolic.

use std::collections::HashMap;
use std::io::BufRead;

use absentseq::mas_direct::DwNode;
use absentseq::mas_skeleton::{build_mas_skeleton, MasNodeLabel};
use absentseq::sas::{build_sas_skeleton, SasNode};
use absentseq::script::{EditScript, Expand, Segment};
use absentseq::skeleton::{NodeId, WordSkeleton};
use absentseq::{AlphabetMode, Letter, Word, WordIndex};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const VERSION_LINE: &str = "v=1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Sas,
    Mas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineName {
    Skeleton,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    Bytes,
    Ints,
}

impl From<AlphabetMode> for Alphabet {
    fn from(m: AlphabetMode) -> Alphabet {
        match m {
            AlphabetMode::Bytes => Alphabet::Bytes,
            AlphabetMode::Ints => Alphabet::Ints,
        }
    }
}

impl From<Alphabet> for AlphabetMode {
    fn from(a: Alphabet) -> AlphabetMode {
        match a {
            Alphabet::Bytes => AlphabetMode::Bytes,
            Alphabet::Ints => AlphabetMode::Ints,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentRecord {
    Edge(String, String),
    Path(String, String),
    Final(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Record {
    Header {
        target: Target,
        engine: EngineName,
        alphabet: Alphabet,
        /// Original symbol of letters `1..=sigma`.
        symbols: Vec<u64>,
        /// The word as letters.
        word: Vec<u32>,
    },
    Init {
        letters: Vec<u32>,
    },
    Edit {
        keep: usize,
        append: Vec<SegmentRecord>,
    },
    Count {
        value: String,
    },
    Arches {
        arches: Vec<String>,
        rest: String,
        iota: usize,
    },
    Universality {
        iota: usize,
    },
    Check {
        kind: String,
        result: bool,
    },
    Longest {
        length: usize,
        word: Option<String>,
    },
}

pub fn header(ix: &WordIndex, target: Target, engine: EngineName) -> Record {
    let w = ix.word();
    Record::Header {
        target,
        engine,
        alphabet: w.mode().into(),
        symbols: w.symbols().to_vec(),
        word: w.letters().iter().map(|a| a.get()).collect(),
    }
}

pub fn line(r: &Record) -> String {
    serde_json::to_string(r).expect("records always serialize")
}

pub fn letters_of(v: &[Letter]) -> Vec<u32> {
    v.iter().map(|a| a.get()).collect()
}

/// Node names as they appear on the wire.
pub trait Tokens {
    type Node: Copy;
    fn token(&self, v: Self::Node) -> String;
    fn node(&self, t: &str) -> Option<Self::Node>;
}

pub fn edit_record<T: Tokens>(t: &T, s: &EditScript<T::Node>) -> Record {
    let append = s
        .segments
        .iter()
        .map(|seg| match *seg {
            Segment::Edge(a, b) => SegmentRecord::Edge(t.token(a), t.token(b)),
            Segment::DefaultPath(a, b) => SegmentRecord::Path(t.token(a), t.token(b)),
            Segment::FinalLetter(c) => SegmentRecord::Final(c.get()),
        })
        .collect();
    Record::Edit { keep: s.rewind_depth, append }
}

fn pair(t: &str) -> Option<(usize, usize)> {
    let (i, j) = t.split_once(':')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

/// Skeleton engines: tokens are the labels of the skeleton nodes.
pub struct SkeletonTokens {
    names: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl SkeletonTokens {
    pub fn new(names: Vec<String>) -> SkeletonTokens {
        let ids = names.iter().enumerate().map(|(k, s)| (s.clone(), NodeId(k as u32))).collect();
        SkeletonTokens { names, ids }
    }
}

pub fn sas_names(labels: &[SasNode], n: usize) -> Vec<String> {
    labels
        .iter()
        .map(|l| match *l {
            SasNode::Source => "s".to_string(),
            SasNode::Sink => "f".to_string(),
            SasNode::Position(p) => p.to_string(),
            SasNode::Closing(a) => format!("{}+{}", n, a.get()),
        })
        .collect()
}

pub fn mas_names(labels: &[MasNodeLabel]) -> Vec<String> {
    labels
        .iter()
        .map(|l| match *l {
            MasNodeLabel::Source => "s".to_string(),
            MasNodeLabel::Sink => "f".to_string(),
            MasNodeLabel::Pair(i, j) => format!("{i}:{j}"),
        })
        .collect()
}

impl Tokens for SkeletonTokens {
    type Node = NodeId;

    fn token(&self, v: NodeId) -> String {
        self.names[v.index()].clone()
    }

    fn node(&self, t: &str) -> Option<NodeId> {
        self.ids.get(t).copied()
    }
}

/// The direct engine: tokens are position pairs `i:j`.
pub struct DirectTokens<'a> {
    pub ix: &'a WordIndex,
}

impl Tokens for DirectTokens<'_> {
    type Node = DwNode;

    fn token(&self, v: DwNode) -> String {
        match v {
            DwNode::Source => "s".to_string(),
            DwNode::Pair(i, j) => format!("{i}:{j}"),
        }
    }

    fn node(&self, t: &str) -> Option<DwNode> {
        if t == "s" {
            return Some(DwNode::Source);
        }
        let (i, j) = pair(t)?;
        let n = self.ix.n();
        // (i, j): j is an earlier position, or 0 for the first letter
        let valid = (1..=n).contains(&i) && j < i && (j > 0 || self.ix.first_occurrence(self.ix.letter(i)) == i);
        valid.then_some(DwNode::Pair(i, j))
    }
}

fn bad(line_no: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("replay: line {line_no}: {msg}"))
}

#[allow(clippy::too_many_arguments)]
fn apply<T: Tokens>(
    t: &T,
    e: &impl Expand<Node = T::Node>,
    sound: impl Fn(&Segment<T::Node>) -> bool,
    current: &mut Vec<Letter>,
    sigma: usize,
    keep: usize,
    append: &[SegmentRecord],
    line_no: usize,
) -> Result<(), CliError> {
    if keep > current.len() {
        return Err(bad(line_no, format!("keep {keep} exceeds the previous result ({})", current.len())));
    }
    current.truncate(keep);
    let node = |s: &str| t.node(s).ok_or_else(|| bad(line_no, format!("unknown node {s:?}")));
    for seg in append {
        let seg = match seg {
            SegmentRecord::Edge(a, b) => Segment::Edge(node(a)?, node(b)?),
            SegmentRecord::Path(a, b) => Segment::DefaultPath(node(a)?, node(b)?),
            SegmentRecord::Final(c) => {
                Segment::FinalLetter(letter(*c, sigma).ok_or_else(|| bad(line_no, "bad letter"))?)
            }
        };
        if !sound(&seg) {
            return Err(bad(line_no, "segment does not follow the graph"));
        }
        e.expand(&seg, current);
    }
    Ok(())
}

fn letter(c: u32, sigma: usize) -> Option<Letter> {
    Letter::new(c).filter(|a| a.get() as usize <= sigma)
}

/// Reads a structured stream and writes the plain words it encodes.
pub fn replay(
    input: &mut dyn BufRead,
    emit: &mut dyn FnMut(&Word, &[Letter]) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let mut lines = input.lines().enumerate().map(|(k, l)| (k + 1, l));
    match lines.next() {
        Some((_, Ok(l))) if l.trim_end() == VERSION_LINE => {}
        Some((_, Err(e))) => return Err(CliError::Io(e)),
        _ => return Err(bad(1, format!("expected {VERSION_LINE:?}"))),
    }

    let mut ctx: Option<Context> = None;
    let mut current: Vec<Letter> = Vec::new();
    for (line_no, l) in lines {
        let l = l.map_err(CliError::Io)?;
        if l.trim().is_empty() {
            continue;
        }
        let rec: Record = serde_json::from_str(&l).map_err(|e| bad(line_no, e))?;
        match rec {
            Record::Header { target, engine, alphabet, symbols, word } => {
                ctx = Some(Context::new(target, engine, alphabet, &symbols, &word).map_err(|e| bad(line_no, e))?);
            }
            Record::Init { letters } => {
                let c = ctx.as_ref().ok_or_else(|| bad(line_no, "record before header"))?;
                let sigma = c.ix.sigma();
                current = letters
                    .iter()
                    .map(|&a| letter(a, sigma).ok_or_else(|| bad(line_no, "bad letter")))
                    .collect::<Result<_, _>>()?;
                emit(c.ix.word(), &current)?;
            }
            Record::Edit { keep, append } => {
                let c = ctx.as_ref().ok_or_else(|| bad(line_no, "record before header"))?;
                c.apply(&mut current, keep, &append, line_no)?;
                emit(c.ix.word(), &current)?;
            }
            _ => return Err(bad(line_no, "not an enumeration record")),
        }
    }
    Ok(())
}

struct Context {
    ix: WordIndex,
    engine: Built,
}

enum Built {
    Skeleton(WordSkeleton, SkeletonTokens),
    Direct,
}

impl Context {
    fn new(
        target: Target,
        engine: EngineName,
        alphabet: Alphabet,
        symbols: &[u64],
        word: &[u32],
    ) -> Result<Context, String> {
        let syms = word
            .iter()
            .map(|&a| symbols.get((a as usize).wrapping_sub(1)).copied().ok_or("letter outside the symbol table"))
            .collect::<Result<Vec<u64>, _>>()?;
        let w = Word::from_symbols(syms, alphabet.into()).map_err(|e| e.to_string())?;
        if w.symbols() != symbols || !w.letters().iter().map(|a| a.get()).eq(word.iter().copied()) {
            return Err("letters are not numbered by first occurrence".into());
        }
        let ix = WordIndex::new(w);
        let engine = match (target, engine) {
            (Target::Sas, EngineName::Skeleton) => {
                let sk = build_sas_skeleton(&ix);
                let names = sas_names(sk.labels(), ix.n());
                Built::Skeleton(sk.words().clone(), SkeletonTokens::new(names))
            }
            (Target::Mas, EngineName::Skeleton) => {
                let sk = build_mas_skeleton(&ix);
                let names = mas_names(sk.labels());
                Built::Skeleton(sk.words().clone(), SkeletonTokens::new(names))
            }
            (Target::Mas, EngineName::Direct) => Built::Direct,
            (Target::Sas, EngineName::Direct) => return Err("no direct engine for sas".into()),
        };
        Ok(Context { ix, engine })
    }

    fn apply(
        &self,
        current: &mut Vec<Letter>,
        keep: usize,
        append: &[SegmentRecord],
        line_no: usize,
    ) -> Result<(), CliError> {
        let sigma = self.ix.sigma();
        match &self.engine {
            Built::Skeleton(words, t) => {
                let g = words.dag();
                let sound = |seg: &Segment<NodeId>| match *seg {
                    Segment::Edge(a, b) => a != g.sink() && g.is_expanded_edge(a, b),
                    Segment::DefaultPath(a, b) => {
                        let mut v = a;
                        while v != b && !v.is_none() && v != g.sink() {
                            v = g.down(v);
                        }
                        v == b
                    }
                    Segment::FinalLetter(_) => true,
                };
                apply(t, words, sound, current, sigma, keep, append, line_no)
            }
            Built::Direct => {
                let ix = &self.ix;
                let sound = |seg: &Segment<DwNode>| match *seg {
                    Segment::DefaultPath(DwNode::Pair(i, _), DwNode::Pair(e, _)) => {
                        e >= i && ix.letter(e) == ix.letter(i)
                    }
                    Segment::DefaultPath(..) => false,
                    Segment::Edge(_, b) => b != DwNode::Source,
                    Segment::FinalLetter(_) => true,
                };
                apply(&DirectTokens { ix }, ix, sound, current, sigma, keep, append, line_no)
            }
        }
    }
}
