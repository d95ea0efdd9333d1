//! Membership tests for subsequences, shortest absent subsequences, minimal
//! absent subsequences and their prefixes, all in time linear in the pattern
//! (up to a logarithmic lookup per letter).
//!
//! A word `v = v[1..m+1]` is a minimal absent subsequence exactly when the
//! leftmost embedding `i_1 < .. < i_m` of `v[1..m]` exists, `v[m+1]` does not
//! occur after `i_m`, and each `v[r]` occurs in `w[i_{r-2}+1 ..= i_{r-1}]`.

use crate::error::{Error, Result};
use crate::index::WordIndex;
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// Leftmost positions of every letter.
    Present(Vec<usize>),
    /// Only the first `matched` letters embed.
    Absent { matched: usize },
}

fn check_alphabet(ix: &WordIndex, v: &[Letter]) -> Result<()> {
    match v.iter().position(|a| a.idx() > ix.sigma()) {
        Some(index) => Err(Error::AlphabetMismatch { index }),
        None => Ok(()),
    }
}

pub fn canonical_embedding(ix: &WordIndex, v: &[Letter]) -> Result<Embedding> {
    check_alphabet(ix, v)?;
    let n = ix.n();
    let mut out = Vec::with_capacity(v.len());
    let mut at = 0;
    for (r, &a) in v.iter().enumerate() {
        let p = ix.next_pos_unchecked(a, at + 1);
        if p > n {
            return Ok(Embedding::Absent { matched: r });
        }
        out.push(p);
        at = p;
    }
    Ok(Embedding::Present(out))
}

pub fn is_subsequence(ix: &WordIndex, v: &[Letter]) -> Result<bool> {
    Ok(matches!(canonical_embedding(ix, v)?, Embedding::Present(_)))
}

pub fn is_sas(ix: &WordIndex, v: &[Letter]) -> Result<bool> {
    check_alphabet(ix, v)?;
    Ok(v.len() == ix.iota() + 1 && !is_subsequence(ix, v)?)
}

// Embedding of a MAS-prefix, or None.
fn prefix_embedding(ix: &WordIndex, v: &[Letter]) -> Result<Option<Vec<usize>>> {
    if v.is_empty() {
        return Ok(None);
    }
    let pos = match canonical_embedding(ix, v)? {
        Embedding::Present(p) => p,
        Embedding::Absent { .. } => return Ok(None),
    };
    for r in 1..pos.len() {
        let before = if r >= 2 { pos[r - 2] } else { 0 };
        if ix.prev(pos[r]) <= before {
            return Ok(None);
        }
    }
    Ok(Some(pos))
}

pub fn is_mas_prefix(ix: &WordIndex, v: &[Letter]) -> Result<bool> {
    Ok(prefix_embedding(ix, v)?.is_some())
}

pub fn is_mas(ix: &WordIndex, v: &[Letter]) -> Result<bool> {
    check_alphabet(ix, v)?;
    if v.len() < 2 {
        return Ok(false);
    }
    let (head, last) = v.split_at(v.len() - 1);
    let Some(pos) = prefix_embedding(ix, head)? else {
        return Ok(false);
    };
    let b = last[0];
    let im = pos[pos.len() - 1];
    if ix.next_pos_unchecked(b, im + 1) <= ix.n() {
        return Ok(false);
    }
    let before = if pos.len() >= 2 { pos[pos.len() - 2] } else { 0 };
    Ok(ix.last_occurrence(b) > before)
}

/// Extends a MAS-prefix `v` to the MAS `v · a^(l+1)`, where `a` is the last
/// letter of `v` and `l` counts its occurrences after the embedding of `v`.
pub fn complete_mas_prefix(ix: &WordIndex, v: &[Letter]) -> Result<Vec<Letter>> {
    let pos = prefix_embedding(ix, v)?.ok_or(Error::NotMasPrefix)?;
    let im = pos[pos.len() - 1];
    let a = v[v.len() - 1];
    let later = ix.occurrences(a).len() - ix.rank(im) - 1;
    let mut out = v.to_vec();
    out.extend(std::iter::repeat_n(a, later + 1));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn setup(w: &str) -> WordIndex {
        WordIndex::new(Word::from_str_bytes(w).unwrap())
    }

    fn p(ix: &WordIndex, s: &str) -> Vec<Letter> {
        ix.word().parse_pattern(s.as_bytes()).unwrap()
    }

    #[test]
    fn embeddings() {
        let ix = setup("1223313");
        assert_eq!(canonical_embedding(&ix, &p(&ix, "23")).unwrap(), Embedding::Present(vec![2, 4]));
        assert_eq!(canonical_embedding(&ix, &p(&ix, "32")).unwrap(), Embedding::Absent { matched: 1 });
        assert!(is_sas(&ix, &p(&ix, "32")).unwrap());
        assert!(!is_sas(&ix, &p(&ix, "23")).unwrap());
    }

    #[test]
    fn mas_membership() {
        let ix = setup("11211111");
        for s in ["22", "1112", "2111111", "11111111"] {
            assert!(is_mas(&ix, &p(&ix, s)).unwrap(), "{s}");
        }
        for s in ["2", "12", "1122", "111111111", "21111111"] {
            assert!(!is_mas(&ix, &p(&ix, s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn prefixes_and_completion() {
        let ix = setup("1223313");
        // the 2 in "12" is not available before the embedding of the 1
        assert!(!is_mas_prefix(&ix, &p(&ix, "12")).unwrap());
        let ix = setup("11211111");
        let two = p(&ix, "2");
        assert_eq!(complete_mas_prefix(&ix, &two).unwrap(), p(&ix, "22"));
        assert_eq!(complete_mas_prefix(&ix, &p(&ix, "1")).unwrap(), p(&ix, "11111111"));
        assert_eq!(complete_mas_prefix(&ix, &p(&ix, "112")), Err(Error::NotMasPrefix));
        assert_eq!(complete_mas_prefix(&ix, &p(&ix, "111")).unwrap(), p(&ix, "11111111"));
    }

    #[test]
    fn foreign_letters_rejected() {
        let ix = setup("1212");
        let bad = [Letter::new(1).unwrap(), Letter::new(3).unwrap()];
        assert_eq!(is_mas(&ix, &bad), Err(Error::AlphabetMismatch { index: 1 }));
    }
}
