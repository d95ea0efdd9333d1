//! A longest minimal absent subsequence in `O(n log sigma)`.
//!
//! `D[i]` is the length of a longest MAS-prefix whose canonical embedding ends
//! at `i`, and `back[i]` the position before `i` on it. A position `h` with
//! predecessor `i = prev[h]` extends a prefix ending at `g` iff `i <= g < h`
//! and the prefix's own predecessor `back[g]` lies before `i`; the set `E`
//! holds exactly those `g` that are still open at step `i`.

use crate::index::WordIndex;
use crate::range_max_set::RangeMaxSet;
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestMasState {
    /// `d[i]`, 0 where no MAS-prefix ends at `i`.
    pub d: Vec<usize>,
    /// `back[i]`, 0 for prefixes of length 1.
    pub back: Vec<usize>,
}

/// Runs the dynamic program; `observe` sees the state after every step `i`.
pub fn longest_mas_state_with(
    ix: &WordIndex,
    mut observe: impl FnMut(usize, &LongestMasState, &RangeMaxSet),
) -> LongestMasState {
    let n = ix.n();
    let mut st = LongestMasState { d: vec![0; n + 1], back: vec![0; n + 1] };
    let mut e = RangeMaxSet::new(ix.sigma());
    // lists L[q] through head/link: positions entering E once step q is over
    let mut head = vec![u32::MAX; n + 1];
    let mut link = vec![u32::MAX; n + 1];
    for a in 1..=ix.sigma() {
        let i = ix.first_occurrence(Letter::from_idx(a));
        st.d[i] = 1;
        e.insert(i, 1).expect("one first occurrence per letter");
    }
    for i in 1..=n {
        let h = ix.next(i);
        if h <= n {
            if let Some((q, r)) = e.range_max(i, h - 1) {
                st.d[h] = r + 1;
                st.back[h] = q;
                link[h] = head[q];
                head[q] = h as u32;
            }
        }
        if e.get(i).is_some() {
            e.delete(i).unwrap();
        }
        let mut s = head[i];
        while s != u32::MAX {
            e.insert(s as usize, st.d[s as usize]).expect("at most one open prefix per letter");
            s = link[s as usize];
        }
        observe(i, &st, &e);
    }
    st
}

pub fn longest_mas_state(ix: &WordIndex) -> LongestMasState {
    longest_mas_state_with(ix, |_, _, _| {})
}

fn best_end(st: &LongestMasState) -> usize {
    let max = *st.d.iter().max().unwrap();
    st.d.iter().position(|&x| x == max).unwrap()
}

pub fn longest_mas(ix: &WordIndex) -> Vec<Letter> {
    let st = longest_mas_state(ix);
    let h = best_end(&st);
    let mut out = Vec::with_capacity(st.d[h] + 1);
    let mut i = h;
    while i != 0 {
        out.push(ix.letter(i));
        i = st.back[i];
    }
    out.reverse();
    out.push(ix.letter(h));
    out
}

pub fn longest_mas_length(ix: &WordIndex) -> usize {
    let st = longest_mas_state(ix);
    st.d[best_end(&st)] + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_mas, is_mas_prefix};
    use crate::word::Word;

    fn setup(s: &str) -> WordIndex {
        WordIndex::new(Word::from_str_bytes(s).unwrap())
    }

    #[test]
    fn known_words() {
        let ix = setup("11121222");
        assert_eq!(ix.word().render_string(&longest_mas(&ix)), "11112222");
        let ix = setup("11211111");
        assert_eq!(ix.word().render_string(&longest_mas(&ix)), "11111111");
        let ix = setup("aaaaa");
        assert_eq!(longest_mas_length(&ix), 6);
    }

    // Longest MAS-prefix per end position, by trying every prefix of every
    // candidate in the positional search.
    fn brute_d(ix: &WordIndex) -> Vec<usize> {
        let n = ix.n();
        let mut d = vec![0; n + 1];
        let mut stack: Vec<Vec<Letter>> = (1..=ix.sigma()).map(|a| vec![Letter::from_idx(a)]).collect();
        while let Some(v) = stack.pop() {
            if !is_mas_prefix(ix, &v).unwrap() {
                continue;
            }
            let end = crate::classify::canonical_embedding(ix, &v).unwrap();
            if let crate::classify::Embedding::Present(pos) = end {
                let last = *pos.last().unwrap();
                d[last] = d[last].max(v.len());
                for a in 1..=ix.sigma() {
                    let mut u = v.clone();
                    u.push(Letter::from_idx(a));
                    stack.push(u);
                }
            }
        }
        d
    }

    #[test]
    fn loop_invariants_on_small_words() {
        for w in ["1121332211322", "1223313", "11211111", "abcacbbca", "3121", "12121212"] {
            let ix = setup(w);
            let want = brute_d(&ix);
            let st = longest_mas_state_with(&ix, |i, st, e| {
                // every D[l] with prev[l] <= i is final
                for l in 1..=ix.n() {
                    if ix.prev(l) <= i {
                        assert_eq!(st.d[l], want[l], "{w}: D[{l}] after step {i}");
                    }
                }
                // E holds the prefixes still open after step i
                let open: Vec<(usize, usize)> = (i + 1..=ix.n())
                    .filter(|&g| st.d[g] > 0 && st.back[g] <= i && ix.prev(g) <= i)
                    .map(|g| (g, st.d[g]))
                    .collect();
                assert_eq!(e.to_vec(), open, "{w}: E after step {i}");
                assert!(e.len() <= ix.sigma());
            });
            for l in 1..=ix.n() {
                if st.back[l] > 0 {
                    assert_eq!(st.d[st.back[l]], st.d[l] - 1);
                }
            }
            let v = longest_mas(&ix);
            assert!(is_mas(&ix, &v).unwrap(), "{w}");
            assert_eq!(v.len(), crate::oracle::brute_longest_mas(ix.word().letters()).unwrap());
        }
    }
}
