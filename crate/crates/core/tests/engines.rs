mod common;

use absentseq::oracle;
use absentseq::WordIndex;
use common::{all_words, check_against_oracle, check_incremental, check_skeletons_valid, index_of};
use proptest::prelude::*;

fn check_all(ix: &WordIndex) -> Result<(), String> {
    check_skeletons_valid(ix)?;
    check_against_oracle(ix)?;
    check_incremental(ix)
}

#[test]
fn exhaustive_small_words() {
    for sigma in 1..=3 {
        for w in all_words(sigma, 7) {
            let ix = index_of(&w);
            if let Err(e) = check_all(&ix) {
                panic!("{w:?}: {e}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_words_match_oracles(w in prop::collection::vec(1u64..=5, 1..=24)) {
        let ix = index_of(&w);
        prop_assert_eq!(check_all(&ix), Ok(()));
    }

    #[test]
    fn dist_matches_exhaustive_search(w in prop::collection::vec(1u64..=3, 1..=12)) {
        let ix = index_of(&w);
        for i in 1..=ix.n() {
            prop_assert_eq!(ix.dist(i), oracle::brute_dist(ix.word().letters(), i).unwrap());
        }
        prop_assert_eq!(ix.iota(), oracle::brute_iota(ix.word().letters()).unwrap());
    }

    #[test]
    fn range_max_next_matches_scan(w in prop::collection::vec(1u64..=6, 1..=64)) {
        let ix = index_of(&w);
        for i in 1..=ix.n() {
            for j in i..=ix.n() {
                let want = (i..=j).fold(i, |best, x| if ix.next(x) > ix.next(best) { x } else { best });
                prop_assert_eq!(ix.range_max_next(i, j), Some(want));
            }
        }
    }

    #[test]
    fn next_and_prev_match_scan(w in prop::collection::vec(1u64..=4, 1..=40)) {
        let ix = index_of(&w);
        let n = ix.n();
        for i in 1..=n {
            let next = (i + 1..=n).find(|&j| ix.letter(j) == ix.letter(i)).unwrap_or(n + 1);
            let prev = (1..i).rev().find(|&j| ix.letter(j) == ix.letter(i)).unwrap_or(0);
            prop_assert_eq!((ix.next(i), ix.prev(i)), (next, prev));
        }
    }
}
