//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the greedy parsers of the library.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use commafree::{Alphabet, Word};

pub fn radix(u: &[u8], v: &[u8]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Every word of length exactly `n` over `k` letters.
pub fn all_words(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..k).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Naive divisor test for primitivity.
pub fn is_primitive(w: &[u8]) -> bool {
    let n = w.len();
    !(1..n).any(|d| n.is_multiple_of(d) && (0..n).all(|i| w[i] == w[i % d]))
}

pub fn rotations(w: &[u8]) -> Vec<Vec<u8>> {
    (0..w.len())
        .map(|i| w[i..].iter().chain(&w[..i]).copied().collect())
        .collect()
}

pub fn least_rotation(w: &[u8]) -> Vec<u8> {
    rotations(w).into_iter().min().unwrap()
}

/// Number of primitive conjugacy classes, by enumeration.
pub fn class_count(k: u8, n: usize) -> usize {
    all_words(k, n)
        .into_iter()
        .filter(|w| is_primitive(w))
        .map(|w| least_rotation(&w))
        .collect::<BTreeSet<_>>()
        .len()
}

/// One level of the dip tower cut at a length bound.
pub struct Level {
    /// `D_n` with the letter count of each dip.
    pub dips: HashMap<Vec<u8>, usize>,
    /// `S_n`.
    pub superdips: Vec<Vec<u8>>,
    /// Proper prefixes of `D_n` words, kept up to `prefix_len`.
    pub prefixes: HashSet<Vec<u8>>,
}

/// `D_n(A)` and `S_n(A)` built straight from their definitions.
pub struct DipTower {
    pub bound: usize,
    pub levels: Vec<Level>,
}

fn grow_dips(
    letters: &[Vec<u8>],
    bound: usize,
    word: &mut Vec<u8>,
    last: usize,
    count: usize,
    out: &mut HashMap<Vec<u8>, usize>,
) {
    for (i, l) in letters.iter().enumerate() {
        if word.len() + l.len() > bound {
            continue;
        }
        let len = word.len();
        word.extend_from_slice(l);
        if i > last {
            out.insert(word.clone(), count + 1);
        } else {
            grow_dips(letters, bound, word, i, count + 1, out);
        }
        word.truncate(len);
    }
}

impl DipTower {
    /// Levels `1..=max_level` over `k` letters, every set cut at `bound`.
    pub fn new(k: u8, bound: usize, prefix_len: usize, max_level: usize) -> Self {
        let mut letters: Vec<Vec<u8>> = (0..k).map(|l| vec![l]).collect();
        let mut levels = Vec::new();
        for _ in 0..max_level {
            letters.sort_by(|a, b| radix(a, b));
            let mut dips = HashMap::new();
            for (i, l) in letters.iter().enumerate() {
                let mut w = l.clone();
                grow_dips(&letters, bound, &mut w, i, 1, &mut dips);
            }
            let odd: Vec<&Vec<u8>> = dips
                .iter()
                .filter(|(_, c)| **c % 2 == 1)
                .map(|(d, _)| d)
                .collect();
            let even: Vec<&Vec<u8>> = dips
                .iter()
                .filter(|(_, c)| **c % 2 == 0)
                .map(|(d, _)| d)
                .collect();
            let mut superdips = Vec::new();
            let mut stack: Vec<Vec<u8>> = odd.into_iter().cloned().collect();
            while let Some(s) = stack.pop() {
                for e in &even {
                    if s.len() + e.len() <= bound {
                        let mut t = s.clone();
                        t.extend_from_slice(e);
                        stack.push(t);
                    }
                }
                superdips.push(s);
            }
            let mut prefixes = HashSet::new();
            for d in dips.keys() {
                for p in 0..d.len().min(prefix_len + 1) {
                    prefixes.insert(d[..p].to_vec());
                }
            }
            let done = superdips.is_empty();
            levels.push(Level {
                dips,
                superdips: superdips.clone(),
                prefixes,
            });
            if done {
                break;
            }
            letters = superdips;
        }
        DipTower { bound, levels }
    }

    /// `w ∈ D_n(A)^+ P_n(A)` by dynamic programming over all cut points.
    pub fn in_dips_plus_prefix(&self, w: &[u8], n: usize) -> bool {
        let level = match self.levels.get(n - 1) {
            Some(l) => l,
            None => return false,
        };
        let m = w.len();
        // reach[j]: w[..j] is a nonempty product of n-dips
        let mut reach = vec![false; m + 1];
        for j in 1..=m {
            reach[j] = (0..j).any(|i| (i == 0 || reach[i]) && level.dips.contains_key(&w[i..j]));
        }
        (1..=m).any(|j| reach[j] && level.prefixes.contains(&w[j..]))
    }

    /// Largest `n` with `w ∈ D_n(A)^+ P_n(A)`, zero if none.
    pub fn index(&self, w: &[u8]) -> usize {
        (1..=self.levels.len())
            .take_while(|&n| self.in_dips_plus_prefix(w, n))
            .last()
            .unwrap_or(0)
    }

    pub fn is_superdip(&self, w: &[u8], n: usize) -> bool {
        self.levels
            .get(n - 1)
            .is_some_and(|l| l.superdips.iter().any(|s| s == w))
    }
}

pub fn parse_all(a: &Alphabet, words: &[&str]) -> Vec<Word> {
    words.iter().map(|w| a.parse(w).unwrap()).collect()
}

/// `a_1 >= ... >= a_{j-1} < a_j` with `j >= 2`, read straight off the definition.
pub fn is_dip(w: &[u8]) -> bool {
    let j = w.len();
    j >= 2 && w[j - 2] < w[j - 1] && w[..j - 1].windows(2).all(|p| p[0] >= p[1])
}

/// Membership in `D(A)^*` over all cut points, without assuming a prefix code.
pub fn in_dip_star(w: &[u8]) -> bool {
    let mut reach = vec![false; w.len() + 1];
    reach[0] = true;
    for j in 1..=w.len() {
        reach[j] = (0..j).any(|i| reach[i] && is_dip(&w[i..j]));
    }
    reach[w.len()]
}

/// Comma-freeness as `uxv ∈ X^* ⇒ u, v ∈ X^*`, scanning products of up to
/// three code words for an occurrence of a code word off the block grid.
pub fn comma_free_by_products(code: &[Vec<u8>]) -> bool {
    let Some(n) = code.first().map(Vec::len) else {
        return true;
    };
    let set: HashSet<&[u8]> = code.iter().map(Vec::as_slice).collect();
    let mut products: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..3 {
        products = products
            .iter()
            .flat_map(|p| code.iter().map(move |c| [p.as_slice(), c].concat()))
            .collect();
        for p in &products {
            for start in 0..=p.len() - n {
                if start % n != 0 && set.contains(&p[start..start + n]) {
                    return false;
                }
            }
        }
    }
    true
}
