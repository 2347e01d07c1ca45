//! The greedy layered index against `max { n : w ∈ D_n^+ P_n }` computed
//! from towers built by brute force. A tower is cut at a length bound, so
//! each sweep first checks that the prefix sets it relies on no longer grow
//! with the bound.

mod common;

use commafree::{index, Alphabet, Word};
use common::{all_words, DipTower};

fn assert_stable(small: &DipTower, large: &DipTower, prefix_len: usize) {
    for (n, (s, l)) in small.levels.iter().zip(&large.levels).enumerate() {
        let cut = |t: &std::collections::HashSet<Vec<u8>>| {
            t.iter()
                .filter(|p| p.len() <= prefix_len)
                .cloned()
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(
            cut(&s.prefixes),
            cut(&l.prefixes),
            "level {} prefixes moved",
            n + 1
        );
    }
}

fn sweep(letters: &str, tower: &DipTower, max_len: usize) {
    let a = Alphabet::new(letters).unwrap();
    let k = a.size() as u8;
    let mut seen = [0usize; 3];
    for n in 1..=max_len {
        for w in all_words(k, n) {
            let expected = tower.index(&w);
            assert_eq!(
                index(&a, &Word::new(w.clone())).unwrap(),
                expected,
                "word {}",
                a.render(&w)
            );
            seen[expected.min(2)] += 1;
        }
    }
    // the sweep has to reach level 2 to mean anything
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
}

#[test]
fn binary_words_up_to_ten() {
    let tower = DipTower::new(2, 18, 9, 2);
    assert_stable(&tower, &DipTower::new(2, 20, 9, 2), 9);
    sweep("ab", &tower, 10);
}

#[test]
fn ternary_words_up_to_seven() {
    // a level-2 dip is at least six letters long, so only level-2 prefixes
    // of length <= 1 ever matter here
    let tower = DipTower::new(3, 13, 5, 2);
    assert_stable(&DipTower::new(3, 11, 5, 2), &tower, 3);
    sweep("abc", &tower, 7);
}
