//! A bounded set of `(key, value)` pairs with range-maximum queries, kept in
//! an AVL tree whose nodes cache the best pair of their subtree.

use crate::error::{Error, Result};

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Node {
    key: usize,
    value: usize,
    left: u32,
    right: u32,
    height: u8,
    // best (key, value) in the subtree
    best: (usize, usize),
}

/// Larger value wins; equal values go to the smaller key.
#[inline]
fn better(a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
        b
    } else {
        a
    }
}

fn pick(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Option<(usize, usize)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(better(a, b)),
        (a, None) => a,
        (None, b) => b,
    }
}

#[derive(Clone, Debug)]
pub struct RangeMaxSet {
    nodes: Vec<Node>,
    free: Vec<u32>,
    root: u32,
    len: usize,
    capacity: usize,
}

impl RangeMaxSet {
    pub fn new(capacity: usize) -> RangeMaxSet {
        RangeMaxSet { nodes: Vec::with_capacity(capacity), free: Vec::new(), root: NIL, len: 0, capacity }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn get(&self, key: usize) -> Option<usize> {
        let mut t = self.root;
        while t != NIL {
            let x = &self.nodes[t as usize];
            if key == x.key {
                return Some(x.value);
            }
            t = if key < x.key { x.left } else { x.right };
        }
        None
    }

    pub fn insert(&mut self, key: usize, value: usize) -> Result<()> {
        if self.get(key).is_some() {
            return Err(Error::DuplicateKey(key));
        }
        if self.len == self.capacity {
            return Err(Error::CapacityExceeded(self.capacity));
        }
        let node = Node { key, value, left: NIL, right: NIL, height: 1, best: (key, value) };
        let id = match self.free.pop() {
            Some(id) => {
                self.nodes[id as usize] = node;
                id
            }
            None => {
                self.nodes.push(node);
                (self.nodes.len() - 1) as u32
            }
        };
        self.root = self.insert_at(self.root, id);
        self.len += 1;
        Ok(())
    }

    pub fn delete(&mut self, key: usize) -> Result<()> {
        if self.get(key).is_none() {
            return Err(Error::NotFound(key));
        }
        self.root = self.delete_at(self.root, key);
        self.len -= 1;
        Ok(())
    }

    /// Pair with the largest value among keys in `x..=y`, smallest key on ties.
    pub fn range_max(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        if x > y {
            return None;
        }
        let mut t = self.root;
        // descend to the first node inside the range
        while t != NIL {
            let n = &self.nodes[t as usize];
            if n.key < x {
                t = n.right;
            } else if n.key > y {
                t = n.left;
            } else {
                break;
            }
        }
        if t == NIL {
            return None;
        }
        let n = &self.nodes[t as usize];
        let here = Some((n.key, n.value));
        pick(pick(self.from(n.left, x), here), self.upto(n.right, y))
    }

    // best among keys >= x
    fn from(&self, mut t: u32, x: usize) -> Option<(usize, usize)> {
        let mut acc = None;
        while t != NIL {
            let n = &self.nodes[t as usize];
            if n.key < x {
                t = n.right;
            } else {
                acc = pick(acc, Some((n.key, n.value)));
                acc = pick(acc, self.best(n.right));
                t = n.left;
            }
        }
        acc
    }

    // best among keys <= y
    fn upto(&self, mut t: u32, y: usize) -> Option<(usize, usize)> {
        let mut acc = None;
        while t != NIL {
            let n = &self.nodes[t as usize];
            if n.key > y {
                t = n.left;
            } else {
                acc = pick(acc, self.best(n.left));
                acc = pick(acc, Some((n.key, n.value)));
                t = n.right;
            }
        }
        acc
    }

    /// All pairs in key order.
    pub fn to_vec(&self) -> Vec<(usize, usize)> {
        fn go(s: &RangeMaxSet, t: u32, out: &mut Vec<(usize, usize)>) {
            if t != NIL {
                let n = &s.nodes[t as usize];
                go(s, n.left, out);
                out.push((n.key, n.value));
                go(s, n.right, out);
            }
        }
        let mut out = Vec::with_capacity(self.len);
        go(self, self.root, &mut out);
        out
    }

    #[inline]
    fn best(&self, t: u32) -> Option<(usize, usize)> {
        (t != NIL).then(|| self.nodes[t as usize].best)
    }

    #[inline]
    fn height(&self, t: u32) -> u8 {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].height
        }
    }

    fn update(&mut self, t: u32) {
        let n = self.nodes[t as usize];
        let h = self.height(n.left).max(self.height(n.right)) + 1;
        let best = pick(pick(self.best(n.left), Some((n.key, n.value))), self.best(n.right)).unwrap();
        let n = &mut self.nodes[t as usize];
        n.height = h;
        n.best = best;
    }

    fn rotate_right(&mut self, t: u32) -> u32 {
        let l = self.nodes[t as usize].left;
        self.nodes[t as usize].left = self.nodes[l as usize].right;
        self.nodes[l as usize].right = t;
        self.update(t);
        self.update(l);
        l
    }

    fn rotate_left(&mut self, t: u32) -> u32 {
        let r = self.nodes[t as usize].right;
        self.nodes[t as usize].right = self.nodes[r as usize].left;
        self.nodes[r as usize].left = t;
        self.update(t);
        self.update(r);
        r
    }

    fn rebalance(&mut self, t: u32) -> u32 {
        self.update(t);
        let n = self.nodes[t as usize];
        let (hl, hr) = (self.height(n.left) as i32, self.height(n.right) as i32);
        if hl > hr + 1 {
            let l = self.nodes[n.left as usize];
            if self.height(l.right) > self.height(l.left) {
                let nl = self.rotate_left(n.left);
                self.nodes[t as usize].left = nl;
            }
            self.rotate_right(t)
        } else if hr > hl + 1 {
            let r = self.nodes[n.right as usize];
            if self.height(r.left) > self.height(r.right) {
                let nr = self.rotate_right(n.right);
                self.nodes[t as usize].right = nr;
            }
            self.rotate_left(t)
        } else {
            t
        }
    }

    fn insert_at(&mut self, t: u32, id: u32) -> u32 {
        if t == NIL {
            return id;
        }
        if self.nodes[id as usize].key < self.nodes[t as usize].key {
            let l = self.insert_at(self.nodes[t as usize].left, id);
            self.nodes[t as usize].left = l;
        } else {
            let r = self.insert_at(self.nodes[t as usize].right, id);
            self.nodes[t as usize].right = r;
        }
        self.rebalance(t)
    }

    fn delete_at(&mut self, t: u32, key: usize) -> u32 {
        let n = self.nodes[t as usize];
        if key < n.key {
            let l = self.delete_at(n.left, key);
            self.nodes[t as usize].left = l;
        } else if key > n.key {
            let r = self.delete_at(n.right, key);
            self.nodes[t as usize].right = r;
        } else {
            self.free.push(t);
            if n.left == NIL {
                return n.right;
            }
            if n.right == NIL {
                return n.left;
            }
            // replace by the smallest node of the right subtree
            let (r, m) = self.detach_min(n.right);
            self.nodes[m as usize].left = n.left;
            self.nodes[m as usize].right = r;
            return self.rebalance(m);
        }
        self.rebalance(t)
    }

    fn detach_min(&mut self, t: u32) -> (u32, u32) {
        let l = self.nodes[t as usize].left;
        if l == NIL {
            return (self.nodes[t as usize].right, t);
        }
        let (nl, m) = self.detach_min(l);
        self.nodes[t as usize].left = nl;
        (self.rebalance(t), m)
    }

    #[cfg(test)]
    fn check_balanced(&self) {
        fn go(s: &RangeMaxSet, t: u32) -> u8 {
            if t == NIL {
                return 0;
            }
            let n = &s.nodes[t as usize];
            let (a, b) = (go(s, n.left), go(s, n.right));
            assert!(a.abs_diff(b) <= 1);
            assert_eq!(n.height, a.max(b) + 1);
            n.height
        }
        go(self, self.root);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ties_and_empty() {
        let mut s = RangeMaxSet::new(4);
        s.insert(3, 5).unwrap();
        s.insert(1, 5).unwrap();
        assert_eq!(s.range_max(1, 3), Some((1, 5)));
        assert_eq!(s.range_max(4, 9), None);
        assert_eq!(s.range_max(3, 2), None);
        assert_eq!(s.insert(3, 1), Err(Error::DuplicateKey(3)));
        assert_eq!(s.delete(7), Err(Error::NotFound(7)));
        s.insert(0, 0).unwrap();
        s.insert(9, 0).unwrap();
        assert_eq!(s.insert(10, 0), Err(Error::CapacityExceeded(4)));
    }

    proptest! {
        #[test]
        fn matches_naive(ops in prop::collection::vec((0u8..3, 0usize..40, 0usize..8, 0usize..40), 1..200)) {
            let mut s = RangeMaxSet::new(16);
            let mut naive: Vec<(usize, usize)> = Vec::new();
            for (op, a, b, c) in ops {
                match op {
                    0 => {
                        let want = if naive.iter().any(|p| p.0 == a) {
                            Err(Error::DuplicateKey(a))
                        } else if naive.len() == 16 {
                            Err(Error::CapacityExceeded(16))
                        } else {
                            naive.push((a, b));
                            Ok(())
                        };
                        prop_assert_eq!(s.insert(a, b), want);
                    }
                    1 => {
                        let want = match naive.iter().position(|p| p.0 == a) {
                            Some(t) => { naive.remove(t); Ok(()) }
                            None => Err(Error::NotFound(a)),
                        };
                        prop_assert_eq!(s.delete(a), want);
                    }
                    _ => {
                        let want = naive
                            .iter()
                            .filter(|p| a <= p.0 && p.0 <= c)
                            .copied()
                            .reduce(better);
                        prop_assert_eq!(s.range_max(a, c), want);
                    }
                }
                s.check_balanced();
                prop_assert_eq!(s.len(), naive.len());
            }
        }
    }
}
