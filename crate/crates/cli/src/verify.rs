//! `--verify`: recompute answers with the exhaustive checkers when the word
//! is short enough for them.

use std::collections::HashSet;

use absentseq::oracle;
use absentseq::{Letter, WordIndex};

use crate::CliError;

pub enum Oracle {
    Ready(Vec<Vec<Letter>>),
    Skipped(String),
}

fn skipped(e: absentseq::Error) -> Oracle {
    Oracle::Skipped(e.to_string())
}

pub fn sas(ix: &WordIndex) -> Oracle {
    let w = ix.word().letters();
    let r = if w.len() <= oracle::SAS_LIMIT { oracle::brute_sas(w) } else { oracle::sas_by_conditions(w) };
    r.map(Oracle::Ready).unwrap_or_else(skipped)
}

pub fn mas(ix: &WordIndex) -> Oracle {
    let w = ix.word().letters();
    let r = if w.len() <= oracle::MAS_LIMIT { oracle::brute_mas(w) } else { oracle::mas_by_conditions(w) };
    r.map(Oracle::Ready).unwrap_or_else(skipped)
}

pub fn warn(reason: &str) {
    eprintln!("absentseq: --verify skipped: {reason}");
}

pub fn mismatch(msg: impl Into<String>) -> CliError {
    CliError::Verify(msg.into())
}

/// Checks a produced stream; `complete` is false when `--limit` cut it short.
pub fn stream(want: &[Vec<Letter>], got: &[Vec<Letter>], complete: bool) -> Result<(), CliError> {
    let set: HashSet<&Vec<Letter>> = got.iter().collect();
    if set.len() != got.len() {
        return Err(mismatch("the stream repeats a word"));
    }
    let want_set: HashSet<&Vec<Letter>> = want.iter().collect();
    if let Some(v) = got.iter().find(|v| !want_set.contains(v)) {
        return Err(mismatch(format!("unexpected word {:?}", v.iter().map(|a| a.get()).collect::<Vec<_>>())));
    }
    if complete && got.len() != want.len() {
        return Err(mismatch(format!("{} words produced, {} expected", got.len(), want.len())));
    }
    Ok(())
}
