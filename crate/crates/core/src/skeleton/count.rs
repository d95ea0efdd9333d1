use num_bigint::BigUint;

use super::SkeletonDag;

/// Number of source-to-sink paths in the expanded graph.
pub fn count_paths(g: &SkeletonDag) -> BigUint {
    let n = g.node_count();
    let zero = BigUint::from(0u32);
    // suffix[v] = paths from v plus paths from every later sibling of v
    let mut suffix = vec![zero.clone(); n];
    suffix[g.sink().index()] = BigUint::from(1u32);
    for l in (1..g.depth()).rev() {
        let nodes = g.level_nodes(l);
        let mut acc = zero.clone();
        for &v in nodes.iter().rev() {
            acc += &suffix[g.down(v).index()];
            suffix[v.index()] = acc.clone();
        }
    }
    let mut total = zero;
    for &t in g.source_targets() {
        total += &suffix[t.index()];
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::tests::example;
    use crate::skeleton::{enumerate_paths, LeveledGraph};

    #[test]
    fn example_count() {
        let g = SkeletonDag::from_graph(&example()).unwrap();
        assert_eq!(count_paths(&g), BigUint::from(enumerate_paths(&g).count()));
    }

    #[test]
    fn single_edge() {
        let g = SkeletonDag::from_graph(&LeveledGraph { levels: vec![0, 1], edges: vec![(0, 1)] }).unwrap();
        assert_eq!(count_paths(&g), BigUint::from(1u32));
    }
}
