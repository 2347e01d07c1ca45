//! Property checkers for codes: comma-freeness, the superdip overlap
//! property, synchronization of dips, and side-by-side code comparison.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::dips::{base_letters, factor_dips, is_dip};
use crate::error::{Error, Result};
use crate::words::{compare_radix, necklace_count, Alphabet, Word};

/// `x` occurs in `yz` at `offset`, strictly inside the concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommaWitness {
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    /// The code, deduplicated and in radix order.
    pub code: Vec<Word>,
    pub uniform_length: Option<usize>,
    pub is_comma_free: bool,
    pub witness: Option<CommaWitness>,
    /// Number of primitive conjugacy classes the code meets.
    pub class_coverage: usize,
    /// `ℓ_n(k)` for the code's length, when the code is nonempty.
    pub expected: Option<u64>,
}

impl CodeReport {
    /// Comma-free and meeting every primitive class of its length.
    pub fn is_maximal(&self) -> bool {
        self.is_comma_free && self.expected == Some(self.class_coverage as u64)
    }
}

fn sorted_unique(code: &[Word]) -> Vec<Word> {
    let mut words: Vec<Word> = code
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    words.sort_by(|a, b| compare_radix(a, b));
    words
}

fn uniform_length(code: &[Word]) -> Result<Option<usize>> {
    let Some(first) = code.first() else {
        return Ok(None);
    };
    if first.is_empty() {
        return Err(Error::invalid("codes cannot contain the empty word"));
    }
    match code.iter().find(|w| w.len() != first.len()) {
        Some(other) => Err(Error::invalid(format!(
            "code is not uniform: lengths {} and {}",
            first.len(),
            other.len()
        ))),
        None => Ok(Some(first.len())),
    }
}

/// Scans every ordered pair `y, z` for a code word occurring in `yz` at an
/// offset strictly between 0 and `n`.
///
/// The first witness in radix order of `(y, z, offset)` is reported.
pub fn check_comma_free(alphabet: &Alphabet, code: &[Word]) -> Result<CodeReport> {
    let code = sorted_unique(code);
    let n = uniform_length(&code)?;
    let members: HashSet<&[u8]> = code.iter().map(|w| w.letters()).collect();

    let mut witness = None;
    if let Some(n) = n {
        'scan: for y in &code {
            for z in &code {
                let yz = y.concat(z);
                for offset in 1..n {
                    let factor = &yz[offset..offset + n];
                    if members.contains(factor) {
                        witness = Some(CommaWitness {
                            x: Word::from(factor),
                            y: y.clone(),
                            z: z.clone(),
                            offset,
                        });
                        break 'scan;
                    }
                }
            }
        }
    }

    let class_coverage = code
        .iter()
        .filter(|w| w.is_primitive().unwrap_or(false))
        .map(Word::necklace)
        .collect::<HashSet<_>>()
        .len();
    let expected = match n {
        Some(n) => Some(necklace_count(n, alphabet.size())?.count),
        None => None,
    };
    Ok(CodeReport {
        code,
        uniform_length: n,
        is_comma_free: witness.is_none(),
        witness,
        class_coverage,
        expected,
    })
}

/// Which triples `x, y, z` to examine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Random { triples: usize, seed: u64 },
}

/// `x = x₁x₂` with `x₁` suffix-comparable to `y` and `x₂` prefix-comparable to `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapWitness {
    pub x: Word,
    pub split: usize,
    pub y: Word,
    pub z: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapReport {
    pub overlap_free: bool,
    pub witness: Option<OverlapWitness>,
    pub triples_checked: usize,
}

fn suffix_comparable(a: &[u8], b: &[u8]) -> bool {
    a.ends_with(b) || b.ends_with(a)
}

fn prefix_comparable(a: &[u8], b: &[u8]) -> bool {
    a.starts_with(b) || b.starts_with(a)
}

fn overlap_at(x: &Word, y: &Word, z: &Word) -> Option<OverlapWitness> {
    (1..x.len())
        .find(|&split| suffix_comparable(&x[..split], y) && prefix_comparable(&x[split..], z))
        .map(|split| OverlapWitness {
            x: x.clone(),
            split,
            y: y.clone(),
            z: z.clone(),
        })
}

/// Checks that no word of the set overlaps a product of two words of the set.
pub fn check_overlap_free(code: &[Word], sampling: Sampling) -> OverlapReport {
    let code = sorted_unique(code);
    let mut checked = 0;
    let mut witness = None;
    match sampling {
        Sampling::Exhaustive => {
            'scan: for x in &code {
                for y in &code {
                    for z in &code {
                        checked += 1;
                        if let Some(w) = overlap_at(x, y, z) {
                            witness = Some(w);
                            break 'scan;
                        }
                    }
                }
            }
        }
        Sampling::Random { triples, seed } if !code.is_empty() => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut pick = || &code[rng.gen_range(0..code.len())];
            for _ in 0..triples {
                let (x, y, z) = (pick(), pick(), pick());
                checked += 1;
                if let Some(w) = overlap_at(x, y, z) {
                    witness = Some(w);
                    break;
                }
            }
        }
        Sampling::Random { .. } => {}
    }
    OverlapReport {
        overlap_free: witness.is_none(),
        witness,
        triples_checked: checked,
    }
}

/// True iff the greedy dip scan of `word` leaves no residual.
pub fn in_dip_star(word: &[u8]) -> bool {
    factor_dips(word, &base_letters(word)).is_complete()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncReport {
    pub synchronizing: bool,
    /// Least `u` in radix order with `ux ∉ D(A)^*`.
    pub witness: Option<Word>,
    pub prefixes_checked: usize,
}

/// Checks `ux ∈ D(A)^*` for every `u` with `|u| <= max_u`.
pub fn check_synchronizing(alphabet: &Alphabet, x: &Word, max_u: usize) -> Result<SyncReport> {
    alphabet.require_nonunary()?;
    if !is_dip(x) {
        return Err(Error::invalid("synchronization is only checked for dips"));
    }
    let mut checked = 0;
    for len in 0..=max_u {
        for u in alphabet.words_of_length(len) {
            checked += 1;
            if !in_dip_star(&u.concat(x)) {
                return Ok(SyncReport {
                    synchronizing: false,
                    witness: Some(u),
                    prefixes_checked: checked,
                });
            }
        }
    }
    Ok(SyncReport {
        synchronizing: true,
        witness: None,
        prefixes_checked: checked,
    })
}

/// Side-by-side view of two uniform codes of the same length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CodeComparison {
    pub common: Vec<Word>,
    pub only_left: Vec<Word>,
    pub only_right: Vec<Word>,
    /// Distinct conjugate representatives of the same class.
    pub pairs: Vec<(Word, Word)>,
    /// Words whose class the other code misses entirely.
    pub unpaired_left: Vec<Word>,
    pub unpaired_right: Vec<Word>,
}

impl CodeComparison {
    pub fn identical(&self) -> bool {
        self.only_left.is_empty() && self.only_right.is_empty()
    }
}

pub fn compare_codes(left: &[Word], right: &[Word]) -> Result<CodeComparison> {
    let left = sorted_unique(left);
    let right = sorted_unique(right);
    let (ln, rn) = (uniform_length(&left)?, uniform_length(&right)?);
    if let (Some(a), Some(b)) = (ln, rn) {
        if a != b {
            return Err(Error::invalid(format!(
                "codes have different lengths {a} and {b}"
            )));
        }
    }
    let right_set: HashSet<&Word> = right.iter().collect();
    let left_set: HashSet<&Word> = left.iter().collect();
    let mut right_classes: BTreeMap<Word, Vec<&Word>> = BTreeMap::new();
    for w in &right {
        right_classes.entry(w.necklace()).or_default().push(w);
    }

    let mut out = CodeComparison::default();
    let mut paired_right: HashSet<&Word> = HashSet::new();
    for w in &left {
        if right_set.contains(w) {
            out.common.push(w.clone());
            continue;
        }
        out.only_left.push(w.clone());
        let partners: Vec<&&Word> = right_classes
            .get(&w.necklace())
            .map(|ws| ws.iter().filter(|r| !left_set.contains(**r)).collect())
            .unwrap_or_default();
        if partners.is_empty() {
            out.unpaired_left.push(w.clone());
        }
        for r in partners {
            paired_right.insert(r);
            out.pairs.push((w.clone(), (*r).clone()));
        }
    }
    for w in &right {
        if !left_set.contains(w) {
            out.only_right.push(w.clone());
            if !paired_right.contains(w) {
                out.unpaired_right.push(w.clone());
            }
        }
    }
    Ok(out)
}
