//! Static range-maximum queries in O(1) after linear preprocessing.
//!
//! Positions are split into blocks of 64. Inside a block every position keeps a
//! bitmask of the non-increasing stack of candidates ending there, and a sparse
//! table covers whole blocks. Ties resolve to the leftmost index.

const B: usize = 64;

#[derive(Clone, Debug)]
pub struct RangeMax {
    values: Vec<u32>,
    masks: Vec<u64>,
    // table[k][b] = best index over blocks b..b + 2^k
    table: Vec<Vec<u32>>,
}

impl RangeMax {
    pub fn new(values: Vec<u32>) -> RangeMax {
        let n = values.len();
        let mut masks = vec![0u64; n];
        let mut stack = [0usize; B];
        for start in (0..n).step_by(B) {
            let end = (start + B).min(n);
            let mut sp = 0;
            let mut mask = 0u64;
            for t in 0..end - start {
                let v = values[start + t];
                while sp > 0 && values[start + stack[sp - 1]] < v {
                    sp -= 1;
                    mask &= !(1u64 << stack[sp]);
                }
                stack[sp] = t;
                sp += 1;
                mask |= 1u64 << t;
                masks[start + t] = mask;
            }
        }
        let blocks = n.div_ceil(B);
        let mut rm = RangeMax { values, masks, table: Vec::new() };
        let mut level: Vec<u32> = (0..blocks).map(|b| rm.in_block(b * B, ((b + 1) * B).min(n) - 1) as u32).collect();
        let mut width = 1;
        while !level.is_empty() {
            let next: Vec<u32> = if 2 * width <= blocks {
                (0..=blocks - 2 * width)
                    .map(|b| rm.better(level[b] as usize, level[b + width] as usize) as u32)
                    .collect()
            } else {
                Vec::new()
            };
            rm.table.push(level);
            level = next;
            width *= 2;
        }
        rm
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, i: usize) -> u32 {
        self.values[i]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    fn better(&self, left: usize, right: usize) -> usize {
        if self.values[right] > self.values[left] {
            right
        } else {
            left
        }
    }

    #[inline]
    fn in_block(&self, l: usize, r: usize) -> usize {
        let base = l - l % B;
        let m = self.masks[r] & (!0u64 << (l - base));
        base + m.trailing_zeros() as usize
    }

    /// Leftmost index of a maximum in `l..=r` (0-based), or `None` if `l > r`.
    #[inline]
    pub fn query(&self, l: usize, r: usize) -> Option<usize> {
        if l > r || r >= self.values.len() {
            return None;
        }
        let (bl, br) = (l / B, r / B);
        if bl == br {
            return Some(self.in_block(l, r));
        }
        let mut best = self.in_block(l, bl * B + B - 1);
        if bl + 1 < br {
            let (lo, hi) = (bl + 1, br - 1);
            let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
            let row = &self.table[k];
            best = self.better(best, row[lo] as usize);
            best = self.better(best, row[hi + 1 - (1 << k)] as usize);
        }
        Some(self.better(best, self.in_block(br * B, r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(v: &[u32], l: usize, r: usize) -> Option<usize> {
        if l > r {
            return None;
        }
        let mut best = l;
        for i in l..=r {
            if v[i] > v[best] {
                best = i;
            }
        }
        Some(best)
    }

    #[test]
    fn empty_range() {
        let rm = RangeMax::new(vec![3, 1, 2]);
        assert_eq!(rm.query(2, 1), None);
        assert_eq!(rm.query(0, 2), Some(0));
        assert_eq!(rm.query(1, 2), Some(2));
    }

    #[test]
    fn ties_go_left_across_blocks() {
        let v = vec![5u32; 700];
        let rm = RangeMax::new(v);
        assert_eq!(rm.query(3, 699), Some(3));
        assert_eq!(rm.query(130, 640), Some(130));
    }

    proptest! {
        #[test]
        fn matches_naive(v in prop::collection::vec(0u32..6, 1..400), a in 0usize..400, b in 0usize..400) {
            let rm = RangeMax::new(v.clone());
            let (l, r) = (a % v.len(), b % v.len());
            prop_assert_eq!(rm.query(l, r), naive(&v, l, r));
        }
    }
}
