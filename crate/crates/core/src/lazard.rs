//! Truncated Lazard elimination, standard factorizations and Hall trees.
//!
//! Starting from `Z_1 = A`, each step removes the least word `z_i` of the
//! working set and replaces it by `z_i^*(Z_i \ z_i)`. Everything is cut at
//! length `N`; nothing of length `<= N` is ever built from a longer word, so
//! the truncated sets are exact.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::dips::layered_parse_unchecked;
use crate::error::{Error, Result};
use crate::order::{check_lazard_law, OrderKey, WordOrder};
use crate::words::{Alphabet, Letter, Word};

/// Largest word count the up-front Lazard-law check enumerates.
const LAW_CHECK_WORDS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    nu: usize,
    /// Length of the left factor `z_nu`; `None` for letters.
    split: Option<usize>,
}

/// Result of one elimination run.
#[derive(Clone, Debug)]
pub struct EliminationTrace {
    order: String,
    bound: usize,
    zs: Vec<Word>,
    entries: HashMap<Word, Entry>,
    position: HashMap<Word, usize>,
    snapshots: Option<Vec<Vec<Word>>>,
}

fn law_check_len(alphabet: &Alphabet, bound: usize) -> usize {
    let k = alphabet.size();
    let mut len = 0;
    let mut count = 0;
    while len < bound.min(8) {
        count += k.pow(len as u32 + 1);
        if count > LAW_CHECK_WORDS {
            break;
        }
        len += 1;
    }
    len.max(1)
}

/// Runs the elimination with every set cut at length `bound`.
///
/// The order is first checked against the Lazard law on short words.
pub fn eliminate(
    alphabet: &Alphabet,
    order: &dyn WordOrder,
    bound: usize,
    keep_snapshots: bool,
) -> Result<EliminationTrace> {
    if bound == 0 {
        return Err(Error::invalid("elimination bound must be positive"));
    }
    check_lazard_law(order, alphabet, law_check_len(alphabet, bound))?;

    let mut ordered: BTreeSet<OrderKey> = BTreeSet::new();
    let mut by_len: Vec<HashSet<Word>> = vec![HashSet::new(); bound + 1];
    let mut entries = HashMap::new();
    for letter in alphabet.letter_words() {
        ordered.insert(order.key(&letter));
        entries.insert(letter.clone(), Entry { nu: 0, split: None });
        by_len[1].insert(letter);
    }

    let mut zs = Vec::new();
    let mut snapshots = keep_snapshots.then(Vec::new);
    let mut step = 0;
    while let Some(min) = ordered.pop_first() {
        step += 1;
        if let Some(snaps) = snapshots.as_mut() {
            let mut snap: Vec<Word> = by_len.iter().flatten().cloned().collect();
            snap.sort();
            snaps.push(snap);
        }
        let z = min.word;
        by_len[z.len()].remove(&z);

        // New words z^j u for u in Z_i \ z with |z^j u| <= bound.
        let mut fresh = Vec::new();
        for bucket in &by_len[1..=bound.saturating_sub(z.len())] {
            for u in bucket {
                let mut suffix = u.clone();
                while suffix.len() + z.len() <= bound {
                    let word = z.concat(&suffix);
                    fresh.push(word.clone());
                    suffix = word;
                }
            }
        }
        for word in fresh {
            entries.insert(
                word.clone(),
                Entry {
                    nu: step,
                    split: Some(z.len()),
                },
            );
            ordered.insert(order.key(&word));
            by_len[word.len()].insert(word);
        }
        zs.push(z);
    }
    if let Some(snaps) = snapshots.as_mut() {
        snaps.push(Vec::new());
    }
    let position = zs.iter().enumerate().map(|(i, z)| (z.clone(), i)).collect();
    Ok(EliminationTrace {
        order: order.name().to_string(),
        bound,
        zs,
        entries,
        position,
        snapshots,
    })
}

impl EliminationTrace {
    pub fn order_name(&self) -> &str {
        &self.order
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `z_1 < z_2 < ... < z_M`, every word of the Lazard set up to the bound.
    pub fn zs(&self) -> &[Word] {
        &self.zs
    }

    pub fn contains(&self, z: &Word) -> bool {
        self.position.contains_key(z)
    }

    /// `ν(z)`: the step after which `z` first appeared (0 for letters).
    pub fn nu(&self, z: &Word) -> Option<usize> {
        self.entries.get(z).map(|e| e.nu)
    }

    /// `δ(z_i) = i`.
    pub fn delta(&self, z: &Word) -> Option<usize> {
        self.position.get(z).map(|p| p + 1)
    }

    /// `Z_1, ..., Z_{M+1}` cut at the bound, each sorted lexicographically.
    /// The last one is empty.
    pub fn snapshots(&self) -> Option<&[Vec<Word>]> {
        self.snapshots.as_deref()
    }

    /// The words of length `m` in the Lazard set, in elimination order.
    pub fn lazard_words(&self, m: usize) -> Result<Vec<Word>> {
        if m > self.bound {
            return Err(Error::invalid(format!(
                "length {m} exceeds the elimination bound {}",
                self.bound
            )));
        }
        Ok(self.zs.iter().filter(|z| z.len() == m).cloned().collect())
    }

    fn entry(&self, z: &Word) -> Result<Entry> {
        self.entries
            .get(z)
            .copied()
            .ok_or_else(|| Error::invalid("word is not in the Lazard set up to the bound"))
    }

    /// `(z_ν, y)` with `z = z_ν y`, as recorded when `z` was created.
    pub fn standard_factorization(&self, z: &Word) -> Result<(Word, Word)> {
        match self.entry(z)?.split {
            Some(split) => Ok((Word::from(&z[..split]), Word::from(&z[split..]))),
            None => Err(Error::invalid("letters have no standard factorization")),
        }
    }

    pub fn hall_tree(&self, z: &Word) -> Result<HallTree> {
        match self.entry(z)?.split {
            None => Ok(HallTree::Leaf(z[0])),
            Some(split) => Ok(HallTree::Node(
                Box::new(self.hall_tree(&Word::from(&z[..split]))?),
                Box::new(self.hall_tree(&Word::from(&z[split..]))?),
            )),
        }
    }

    /// Whether the top standard factorization of a `(k+1)`-dip `z` cuts
    /// right after its first `S_k` letter.
    pub fn is_consistently_dip(&self, z: &Word, k: usize) -> Result<bool> {
        let entry = self.entry(z)?;
        let first_letter = first_letter_of_dip(z, k)
            .ok_or_else(|| Error::invalid(format!("word is not a {}-dip", k + 1)))?;
        Ok(entry.split == Some(first_letter))
    }
}

/// Base length of the first `S_k` letter when `word ∈ D_{k+1}(A)`.
fn first_letter_of_dip(word: &Word, k: usize) -> Option<usize> {
    if word.len() < 2 {
        return None;
    }
    let parse = layered_parse_unchecked(word);
    for lp in &parse.levels[..k.min(parse.levels.len())] {
        if lp.residual.is_some() || lp.head.is_some() {
            return None;
        }
    }
    let top = parse.levels.get(k)?;
    let whole = top.dips.len() == 1 && top.residual.is_none() && top.dips[0] == (0..word.len());
    whole.then(|| top.letters[0].len())
}

/// A complete binary tree with letters at the leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HallTree {
    Leaf(Letter),
    Node(Box<HallTree>, Box<HallTree>),
}

impl HallTree {
    /// The word read along the leaves.
    pub fn foliage(&self) -> Word {
        let mut letters = Vec::new();
        self.collect(&mut letters);
        Word::new(letters)
    }

    fn collect(&self, out: &mut Vec<Letter>) {
        match self {
            HallTree::Leaf(l) => out.push(*l),
            HallTree::Node(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// Nested parentheses such as `((a,b),b)`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        Rendered(self, alphabet).to_string()
    }
}

struct Rendered<'a>(&'a HallTree, &'a Alphabet);

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            HallTree::Leaf(l) => write!(f, "{}", self.1.letters()[usize::from(*l)]),
            HallTree::Node(l, r) => write!(f, "({},{})", Rendered(l, self.1), Rendered(r, self.1)),
        }
    }
}

/// One snapshot line: `Z_i ∩ A^{<=N} = {w1, w2, …}`.
pub fn render_snapshot(alphabet: &Alphabet, i: usize, bound: usize, snapshot: &[Word]) -> String {
    let words: Vec<String> = snapshot.iter().map(|w| alphabet.render(w)).collect();
    format!("Z_{i} ∩ A^{{<={bound}}} = {{{}}}", words.join(", "))
}
