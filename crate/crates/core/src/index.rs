//! Linear-time tables over a word: arch factorization, next/previous
//! occurrences, the `dist` array, per-arch first/last positions and range
//! maxima over the next-occurrence array.

use crate::error::{Error, Result};
use crate::rmq::RangeMax;
use crate::word::{Letter, Word};

/// Greedy left-to-right factorization into arches plus a rest.
///
/// An arch is the shortest factor, starting where the previous one ended,
/// that contains every letter of the alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchFactorization {
    ends: Vec<usize>,
    n: usize,
}

impl ArchFactorization {
    pub fn new(word: &Word) -> ArchFactorization {
        let sigma = word.sigma();
        let mut stamp = vec![0usize; sigma + 1];
        let mut seen = 0;
        let mut ends = Vec::new();
        for i in 1..=word.len() {
            let a = word.at(i).idx();
            let gen = ends.len() + 1;
            if stamp[a] != gen {
                stamp[a] = gen;
                seen += 1;
                if seen == sigma {
                    ends.push(i);
                    seen = 0;
                }
            }
        }
        ArchFactorization { ends, n: word.len() }
    }

    /// Number of arches, i.e. the universality index.
    pub fn iota(&self) -> usize {
        self.ends.len()
    }

    /// Positions `(start, end)` of arch `l` in `1..=iota`.
    pub fn arch(&self, l: usize) -> (usize, usize) {
        let start = if l == 1 { 1 } else { self.ends[l - 2] + 1 };
        (start, self.ends[l - 1])
    }

    /// Start position of the rest; equals `n + 1` when the rest is empty.
    pub fn rest_start(&self) -> usize {
        self.ends.last().map_or(1, |&e| e + 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[derive(Clone, Debug)]
pub struct WordIndex {
    word: Word,
    arches: ArchFactorization,
    rmq: RangeMax,
    prev: Vec<u32>,
    dist: Vec<u32>,
    first_arch: Vec<u32>,
    last_arch: Vec<u32>,
    // occurrences grouped by letter
    occ_start: Vec<u32>,
    occ: Vec<u32>,
    rank: Vec<u32>,
    in_rest: Vec<bool>,
}

impl WordIndex {
    pub fn new(word: Word) -> WordIndex {
        let n = word.len();
        let sigma = word.sigma();
        let arches = ArchFactorization::new(&word);
        let k = arches.iota();

        let mut next = vec![0u32; n];
        let mut prev = vec![0u32; n + 2];
        let mut last = vec![0u32; sigma + 1];
        for i in 1..=n {
            let a = word.at(i).idx();
            prev[i] = last[a];
            last[a] = i as u32;
        }
        let mut after = vec![(n + 1) as u32; sigma + 1];
        for i in (1..=n).rev() {
            let a = word.at(i).idx();
            next[i - 1] = after[a];
            after[a] = i as u32;
        }

        // dist[i] = 2 + number of right-to-left arches inside w[i+1..n]
        let mut dist = vec![0u32; n + 2];
        let mut stamp = vec![0u32; sigma + 1];
        let mut gen = 1u32;
        let mut seen = 0;
        let mut count = 0u32;
        for i in (1..=n).rev() {
            dist[i] = 2 + count;
            let a = word.at(i).idx();
            if stamp[a] != gen {
                stamp[a] = gen;
                seen += 1;
                if seen == sigma {
                    count += 1;
                    gen += 1;
                    seen = 0;
                }
            }
        }

        let mut first_arch = vec![0u32; k * sigma];
        let mut last_arch = vec![0u32; k * sigma];
        for l in 1..=k {
            let (s, e) = arches.arch(l);
            let row = (l - 1) * sigma;
            for i in s..=e {
                let c = row + word.at(i).idx() - 1;
                if first_arch[c] == 0 {
                    first_arch[c] = i as u32;
                }
                last_arch[c] = i as u32;
            }
        }

        let mut occ_start = vec![0u32; sigma + 2];
        for i in 1..=n {
            occ_start[word.at(i).idx() + 1] += 1;
        }
        for a in 1..=sigma + 1 {
            occ_start[a] += occ_start[a - 1];
        }
        let mut fill = occ_start.clone();
        let mut occ = vec![0u32; n];
        let mut rank = vec![0u32; n + 1];
        for i in 1..=n {
            let a = word.at(i).idx();
            let slot = fill[a] as usize;
            rank[i] = slot as u32 - occ_start[a];
            occ[slot] = i as u32;
            fill[a] += 1;
        }

        let mut in_rest = vec![false; sigma + 1];
        for i in arches.rest_start()..=n {
            in_rest[word.at(i).idx()] = true;
        }

        WordIndex {
            word,
            arches,
            rmq: RangeMax::new(next),
            prev,
            dist,
            first_arch,
            last_arch,
            occ_start,
            occ,
            rank,
            in_rest,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn sigma(&self) -> usize {
        self.word.sigma()
    }

    #[inline]
    pub fn letter(&self, i: usize) -> Letter {
        self.word.at(i)
    }

    pub fn arches(&self) -> &ArchFactorization {
        &self.arches
    }

    pub fn iota(&self) -> usize {
        self.arches.iota()
    }

    /// Next position of `w[i]` after `i`, or `n + 1`.
    #[inline]
    pub fn next(&self, i: usize) -> usize {
        self.rmq.value(i - 1) as usize
    }

    /// Previous position of `w[i]` before `i`, or 0.
    #[inline]
    pub fn prev(&self, i: usize) -> usize {
        self.prev[i] as usize
    }

    /// Length of a shortest absent subsequence of `w[i..n]` starting with `w[i]`.
    #[inline]
    pub fn dist(&self, i: usize) -> usize {
        self.dist[i] as usize
    }

    /// Leftmost position of `a` in arch `l`, 0 if none.
    #[inline]
    pub fn first_pos_arch(&self, l: usize, a: Letter) -> usize {
        self.first_arch[(l - 1) * self.sigma() + a.idx() - 1] as usize
    }

    /// Rightmost position of `a` in arch `l`, 0 if none.
    #[inline]
    pub fn last_pos_arch(&self, l: usize, a: Letter) -> usize {
        self.last_arch[(l - 1) * self.sigma() + a.idx() - 1] as usize
    }

    pub fn in_rest(&self, a: Letter) -> bool {
        self.in_rest[a.idx()]
    }

    /// Sorted positions of `a`.
    #[inline]
    pub fn occurrences(&self, a: Letter) -> &[u32] {
        let s = self.occ_start[a.idx()] as usize;
        let e = self.occ_start[a.idx() + 1] as usize;
        &self.occ[s..e]
    }

    /// 0-based index of position `i` among the occurrences of `w[i]`.
    #[inline]
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i] as usize
    }

    pub fn first_occurrence(&self, a: Letter) -> usize {
        self.occurrences(a)[0] as usize
    }

    pub fn last_occurrence(&self, a: Letter) -> usize {
        *self.occurrences(a).last().unwrap() as usize
    }

    /// `min({n+1} ∪ {j >= i : w[j] = a})` for `i` in `1..=n+1`.
    pub fn next_pos(&self, a: Letter, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() + 1 {
            return Err(Error::OutOfRange { pos: i, max: self.n() + 1 });
        }
        if a.idx() > self.sigma() {
            return Err(Error::AlphabetMismatch { index: 0 });
        }
        Ok(self.next_pos_unchecked(a, i))
    }

    #[inline]
    pub(crate) fn next_pos_unchecked(&self, a: Letter, i: usize) -> usize {
        let occ = self.occurrences(a);
        let k = occ.partition_point(|&p| (p as usize) < i);
        occ.get(k).map_or(self.n() + 1, |&p| p as usize)
    }

    /// Leftmost position in `i..=j` whose next occurrence is furthest away.
    #[inline]
    pub fn range_max_next(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || i > j {
            return None;
        }
        self.rmq.query(i - 1, j - 1).map(|p| p + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> WordIndex {
        WordIndex::new(Word::from_str_bytes(s).unwrap())
    }

    fn arch_strings(ix: &WordIndex) -> Vec<String> {
        let w = ix.word();
        let mut out: Vec<String> = (1..=ix.iota())
            .map(|l| {
                let (s, e) = ix.arches().arch(l);
                w.render_string(&w.letters()[s - 1..e])
            })
            .collect();
        out.push(w.render_string(&w.letters()[ix.arches().rest_start() - 1..]));
        out
    }

    #[test]
    fn arches_of_reference_words() {
        let a = idx("1121332211322");
        assert_eq!(arch_strings(&a), vec!["11213", "3221", "132", "2"]);
        assert_eq!(a.iota(), 3);
        let b = idx("1223313");
        assert_eq!(arch_strings(&b), vec!["1223", "313"]);
        assert_eq!(b.iota(), 1);
    }

    #[test]
    fn next_prev_and_arch_positions() {
        let ix = idx("1121332211322");
        assert_eq!(ix.next(1), 2);
        assert_eq!(ix.next(3), 7);
        assert_eq!(ix.next(13), 14);
        assert_eq!(ix.prev(7), 3);
        assert_eq!(ix.prev(1), 0);
        let one = Letter::new(1).unwrap();
        let three = Letter::new(3).unwrap();
        assert_eq!(ix.first_pos_arch(2, three), 6);
        assert_eq!(ix.last_pos_arch(1, one), 4);
        assert_eq!(ix.next_pos(one, 5).unwrap(), 9);
        assert_eq!(ix.next_pos(one, 14).unwrap(), 14);
        assert!(ix.next_pos(one, 15).is_err());
        assert!(ix.in_rest(Letter::new(2).unwrap()));
    }

    #[test]
    fn range_max_next_basic() {
        let ix = idx("1121332211322");
        // next: 2 4 7 9 6 11 8 12 10 14 14 13 14
        assert_eq!(ix.range_max_next(1, 13), Some(10));
        assert_eq!(ix.range_max_next(1, 4), Some(4));
        assert_eq!(ix.range_max_next(5, 4), None);
    }
}
