//! Exhaustive reference implementations for small words.
//!
//! Nothing here uses the tables of [`crate::index`]; every check scans the
//! word directly.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::Letter;

pub const SAS_LIMIT: usize = 16;
pub const MAS_LIMIT: usize = 12;
/// Limit for the search driven by the positional characterization.
pub const CONDITIONS_LIMIT: usize = 48;

fn guard(w: &[Letter], limit: usize) -> Result<()> {
    if w.len() > limit {
        Err(Error::TooLarge { n: w.len(), limit })
    } else {
        Ok(())
    }
}

fn alphabet(w: &[Letter]) -> Vec<Letter> {
    let set: BTreeSet<Letter> = w.iter().copied().collect();
    set.into_iter().collect()
}

pub fn is_subsequence(w: &[Letter], v: &[Letter]) -> bool {
    let mut it = w.iter();
    v.iter().all(|a| it.any(|b| b == a))
}

fn all_words(alpha: &[Letter], len: usize, f: &mut impl FnMut(&[Letter])) {
    fn go(alpha: &[Letter], len: usize, cur: &mut Vec<Letter>, f: &mut impl FnMut(&[Letter])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for &a in alpha {
            cur.push(a);
            go(alpha, len, cur, f);
            cur.pop();
        }
    }
    go(alpha, len, &mut Vec::with_capacity(len), f);
}

/// Largest `k` such that every word of length `k` over the alphabet of `w`
/// is a subsequence of `w`.
pub fn brute_iota(w: &[Letter]) -> Result<usize> {
    guard(w, SAS_LIMIT)?;
    let alpha = alphabet(w);
    let mut k = 0;
    loop {
        let mut all = true;
        all_words(&alpha, k + 1, &mut |v| all &= is_subsequence(w, v));
        if !all {
            return Ok(k);
        }
        k += 1;
    }
}

/// All shortest absent subsequences, sorted.
pub fn brute_sas(w: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    let k = brute_iota(w)?;
    let alpha = alphabet(w);
    let mut out = Vec::new();
    all_words(&alpha, k + 1, &mut |v| {
        if !is_subsequence(w, v) {
            out.push(v.to_vec());
        }
    });
    Ok(out)
}

fn is_mas_by_definition(w: &[Letter], v: &[Letter]) -> bool {
    !is_subsequence(w, v)
        && (0..v.len()).all(|d| {
            let mut u = v.to_vec();
            u.remove(d);
            is_subsequence(w, &u)
        })
}

/// All minimal absent subsequences, sorted.
///
/// Every distinct subsequence `u` is visited once; each absent `u·a` is kept
/// if deleting any single letter makes it a subsequence. The result is
/// cross-checked against [`mas_by_conditions`].
pub fn brute_mas(w: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    guard(w, MAS_LIMIT)?;
    let alpha = alphabet(w);
    let mut out = Vec::new();
    // (subsequence, end of its leftmost embedding)
    let mut todo: Vec<(Vec<Letter>, usize)> = vec![(Vec::new(), 0)];
    while let Some((u, end)) = todo.pop() {
        for &a in &alpha {
            let mut ua = u.clone();
            ua.push(a);
            match w[end..].iter().position(|&b| b == a) {
                Some(p) => todo.push((ua, end + p + 1)),
                None => {
                    if is_mas_by_definition(w, &ua) {
                        out.push(ua);
                    }
                }
            }
        }
    }
    out.sort();
    let other = mas_by_conditions(w)?;
    assert_eq!(out, other, "the two exhaustive strategies disagree");
    Ok(out)
}

/// All minimal absent subsequences through the positional characterization:
/// `v[1..m]` embeds leftmost at `i_1 < .. < i_m`, each `v[r]` occurs in
/// `w[i_{r-2}+1 ..= i_{r-1}]`, and `v[m+1]` does not occur after `i_m`.
pub fn mas_by_conditions(w: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    guard(w, CONDITIONS_LIMIT)?;
    let alpha = alphabet(w);
    let n = w.len();
    let occurs = |a: Letter, from: usize, to: usize| (from..=to).any(|i| i >= 1 && i <= n && w[i - 1] == a);
    let mut out = Vec::new();

    fn go(
        w: &[Letter],
        alpha: &[Letter],
        occurs: &dyn Fn(Letter, usize, usize) -> bool,
        v: &mut Vec<Letter>,
        pos: &mut Vec<usize>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        let m = pos.len();
        let last = pos.last().copied().unwrap_or(0);
        let before = if m >= 2 { pos[m - 2] } else { 0 };
        for &a in alpha {
            if m >= 1 && !occurs(a, before + 1, last) {
                continue;
            }
            match w[last..].iter().position(|&b| b == a) {
                Some(p) => {
                    v.push(a);
                    pos.push(last + p + 1);
                    go(w, alpha, occurs, v, pos, out);
                    v.pop();
                    pos.pop();
                }
                None => {
                    if m >= 1 {
                        let mut x = v.clone();
                        x.push(a);
                        out.push(x);
                    }
                }
            }
        }
    }
    go(w, &alpha, &occurs, &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Shortest absent subsequences as the shortest minimal ones; usable for
/// words beyond [`SAS_LIMIT`].
pub fn sas_by_conditions(w: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    let all = mas_by_conditions(w)?;
    let min = all.iter().map(|v| v.len()).min().unwrap_or(0);
    Ok(all.into_iter().filter(|v| v.len() == min).collect())
}

pub fn brute_longest_mas(w: &[Letter]) -> Result<usize> {
    Ok(mas_by_conditions(w)?.iter().map(|v| v.len()).max().unwrap_or(0))
}

/// Length of a shortest word starting with `w[i]` that is not a subsequence
/// of `w[i..n]` (1-based `i`).
pub fn brute_dist(w: &[Letter], i: usize) -> Result<usize> {
    guard(w, SAS_LIMIT)?;
    let alpha = alphabet(w);
    let suffix = &w[i - 1..];
    for len in 1.. {
        let mut found = false;
        all_words(&alpha, len - 1, &mut |tail| {
            if !found {
                let mut v = vec![w[i - 1]];
                v.extend_from_slice(tail);
                found = !is_subsequence(suffix, &v);
            }
        });
        if found {
            return Ok(len);
        }
    }
    unreachable!()
}

/// Length reached by the frequency heuristic: the most frequent letter repeated once
/// more than it occurs. Always a minimal absent subsequence, rarely longest.
pub fn greedy_mas_length(w: &[Letter]) -> usize {
    let mut counts = std::collections::HashMap::new();
    for &a in w {
        *counts.entry(a).or_insert(0usize) += 1;
    }
    counts.values().max().copied().unwrap_or(0) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn letters(s: &str) -> Vec<Letter> {
        Word::from_str_bytes(s).unwrap().letters().to_vec()
    }

    fn strings(w: &str, vs: &[Vec<Letter>]) -> Vec<String> {
        let word = Word::from_str_bytes(w).unwrap();
        vs.iter().map(|v| word.render_string(v)).collect()
    }

    #[test]
    fn known_mas_set() {
        let w = "11211111";
        let mut got = strings(w, &brute_mas(&letters(w)).unwrap());
        got.sort();
        assert_eq!(got, vec!["11111111", "1112", "2111111", "22"]);
        assert_eq!(strings(w, &brute_sas(&letters(w)).unwrap()), vec!["22"]);
    }

    #[test]
    fn single_sas_word() {
        let w = "1223313";
        assert_eq!(brute_iota(&letters(w)).unwrap(), 1);
        assert_eq!(strings(w, &brute_sas(&letters(w)).unwrap()), vec!["32"]);
    }

    #[test]
    fn guards() {
        let long = letters(&"12".repeat(7));
        assert_eq!(brute_mas(&long), Err(Error::TooLarge { n: 14, limit: MAS_LIMIT }));
        assert!(brute_sas(&long).is_ok());
    }
}
