//! Dips, superdips and their towers.
//!
//! A dip is a nonempty run `l_1 >= ... >= l_{j-1} < l_j` with `j >= 2`; a
//! superdip is one dip of odd length followed by dips of even length. Level
//! `n` repeats both constructions over the superdips of level `n - 1`, which
//! are compared by the radix order of the base words they cover.
//!
//! Dips form a prefix code over their level alphabet, so the greedy
//! left-to-right scan is the unique factorization.

use std::cmp::Ordering;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::words::{compare_radix, Alphabet, Letter, Word};

/// A letter of the level-`level` alphabet, stored as the span of base letters it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelLetter {
    pub start: usize,
    pub end: usize,
    pub level: usize,
}

impl LevelLetter {
    pub fn span(&self) -> Range<usize> {
        self.start..self.end
    }

    /// Length in base letters; odd at every level.
    pub fn degree(&self) -> usize {
        self.end - self.start
    }

    pub fn base<'a>(&self, word: &'a [Letter]) -> &'a [Letter] {
        &word[self.start..self.end]
    }
}

/// The base letters of `word` as level-0 letters.
pub fn base_letters(word: &[Letter]) -> Vec<LevelLetter> {
    (0..word.len())
        .map(|i| LevelLetter {
            start: i,
            end: i + 1,
            level: 0,
        })
        .collect()
}

/// Greedy dip factorization of a letter sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DipParse<T> {
    pub dips: Vec<Vec<T>>,
    /// The trailing ascent-free run, a proper prefix of a dip.
    pub residual: Vec<T>,
}

impl<T: Clone> DipParse<T> {
    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn letters(&self) -> Vec<T> {
        self.dips
            .iter()
            .flatten()
            .chain(self.residual.iter())
            .cloned()
            .collect()
    }
}

/// Cuts a dip after each first strict ascent.
pub fn factor_dips_by<T, F>(letters: &[T], mut cmp: F) -> DipParse<T>
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut dips = Vec::new();
    let mut start = 0;
    let mut i = 1;
    while i < letters.len() {
        if i > start && cmp(&letters[i - 1], &letters[i]) == Ordering::Less {
            dips.push(letters[start..=i].to_vec());
            start = i + 1;
            i = start + 1;
        } else {
            i += 1;
        }
    }
    DipParse {
        dips,
        residual: letters[start.min(letters.len())..].to_vec(),
    }
}

/// Dip factorization of level letters, ordered by radix order on the base word.
pub fn factor_dips(word: &[Letter], letters: &[LevelLetter]) -> DipParse<LevelLetter> {
    factor_dips_by(letters, |a, b| compare_radix(a.base(word), b.base(word)))
}

/// Dips grouped into superdips.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperdipParse<T> {
    /// Even dips that precede the first odd dip.
    pub head: Vec<Vec<T>>,
    pub superdips: Vec<Vec<Vec<T>>>,
    pub open_tail: Vec<T>,
}

impl<T: Clone> SuperdipParse<T> {
    pub fn is_complete(&self) -> bool {
        self.head.is_empty() && self.open_tail.is_empty()
    }
}

pub fn factor_superdips<T: Clone>(parse: DipParse<T>) -> SuperdipParse<T> {
    let mut head = Vec::new();
    let mut superdips: Vec<Vec<Vec<T>>> = Vec::new();
    for dip in parse.dips {
        if dip.len() % 2 == 1 {
            superdips.push(vec![dip]);
        } else if let Some(last) = superdips.last_mut() {
            last.push(dip);
        } else {
            head.push(dip);
        }
    }
    SuperdipParse {
        head,
        superdips,
        open_tail: parse.residual,
    }
}

/// Merges a run of level letters into one letter of the next level.
pub fn merge_letters(parts: &[LevelLetter]) -> LevelLetter {
    let first = parts.first().expect("merging an empty run");
    let last = parts.last().expect("merging an empty run");
    LevelLetter {
        start: first.start,
        end: last.end,
        level: first.level + 1,
    }
}

/// One level of a [`LayeredParse`]; every range is a span of the base word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelParse {
    pub level: usize,
    /// Letters of the alphabet `S_{level-1}` the level was built from.
    pub letters: Vec<Range<usize>>,
    pub dips: Vec<Range<usize>>,
    /// Letter count of each dip, to keep the parity visible.
    pub dip_lengths: Vec<usize>,
    pub residual: Option<Range<usize>>,
    pub head: Option<Range<usize>>,
    pub superdips: Vec<Range<usize>>,
}

/// The tower of dip and superdip parses of a word.
///
/// Level `i + 1` is only built when level `i` has an empty head and at least
/// two superdips, since otherwise the next level has no dip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredParse {
    pub word: Word,
    pub levels: Vec<LevelParse>,
}

fn covering(letters: &[LevelLetter]) -> Option<Range<usize>> {
    match (letters.first(), letters.last()) {
        (Some(f), Some(l)) => Some(f.start..l.end),
        _ => None,
    }
}

pub(crate) fn layered_parse_unchecked(word: &Word) -> LayeredParse {
    let mut levels = Vec::new();
    let mut letters = base_letters(word);
    for level in 1.. {
        let dips = factor_dips(word, &letters);
        let dip_spans = dips
            .dips
            .iter()
            .map(|d| d[0].start..d[d.len() - 1].end)
            .collect();
        let dip_lengths = dips.dips.iter().map(Vec::len).collect();
        let grouped = factor_superdips(dips);
        let next: Vec<LevelLetter> = grouped
            .superdips
            .iter()
            .map(|s| merge_letters(&s.concat()))
            .collect();
        levels.push(LevelParse {
            level,
            letters: letters.iter().map(LevelLetter::span).collect(),
            dips: dip_spans,
            dip_lengths,
            residual: covering(&grouped.open_tail),
            head: covering(&grouped.head.concat()),
            superdips: next.iter().map(LevelLetter::span).collect(),
        });
        if !grouped.head.is_empty() || next.len() < 2 {
            break;
        }
        letters = next;
    }
    LayeredParse {
        word: word.clone(),
        levels,
    }
}

pub fn layered_parse(alphabet: &Alphabet, word: &Word) -> Result<LayeredParse> {
    alphabet.require_nonunary()?;
    if word.is_empty() {
        return Err(Error::invalid("cannot parse the empty word"));
    }
    Ok(layered_parse_unchecked(word))
}

/// Why a word fails to be a superdip product at some level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// The dip scan ended inside an unfinished dip.
    Residual,
    /// The word starts with an even dip.
    Head,
}

/// Membership of a word in `Σ`, the union of all `S_n(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaClassification {
    /// The word is a single element of `S_n(A)`.
    Level(usize),
    /// The word is a product of `count > 1` elements of `S_level(A)` and
    /// the next level fails for `reason`.
    Star {
        level: usize,
        count: usize,
        reason: Rejection,
    },
    /// The word is not even in `S_1(A)^*`.
    Rejected { level: usize, reason: Rejection },
}

impl SigmaClassification {
    pub fn sigma_level(&self) -> Option<usize> {
        match *self {
            SigmaClassification::Level(n) => Some(n),
            _ => None,
        }
    }
}

impl LayeredParse {
    pub fn classification(&self) -> SigmaClassification {
        if self.word.len() == 1 {
            return SigmaClassification::Level(0);
        }
        for lp in &self.levels {
            let reason = if lp.residual.is_some() {
                Some(Rejection::Residual)
            } else if lp.head.is_some() {
                Some(Rejection::Head)
            } else {
                None
            };
            match reason {
                Some(reason) if lp.level == 1 => {
                    return SigmaClassification::Rejected { level: 1, reason }
                }
                Some(reason) => {
                    return SigmaClassification::Star {
                        level: lp.level - 1,
                        count: lp.letters.len(),
                        reason,
                    }
                }
                None if lp.superdips.len() == 1 => return SigmaClassification::Level(lp.level),
                None => {}
            }
        }
        unreachable!("the layered parse stops at a rejection or a single superdip")
    }

    /// Deepest level whose dip scan finds a complete dip.
    pub fn index(&self) -> usize {
        self.levels
            .iter()
            .take_while(|lp| !lp.dips.is_empty())
            .count()
    }
}

pub fn classify(alphabet: &Alphabet, word: &Word) -> Result<SigmaClassification> {
    Ok(layered_parse(alphabet, word)?.classification())
}

/// Largest `n` with `word ∈ D_n(A)^+ P_n(A)`.
pub fn index(alphabet: &Alphabet, word: &Word) -> Result<usize> {
    Ok(layered_parse(alphabet, word)?.index())
}

pub(crate) fn index_unchecked(word: &Word) -> usize {
    if word.is_empty() {
        0
    } else {
        layered_parse_unchecked(word).index()
    }
}

pub fn is_dip(word: &[Letter]) -> bool {
    let n = word.len();
    n >= 2 && word[n - 2] < word[n - 1] && word[..n - 1].windows(2).all(|p| p[0] >= p[1])
}

/// All dips of length at most `max_len`, in radix order.
pub fn enumerate_dips(alphabet: &Alphabet, max_len: usize) -> Result<Vec<Word>> {
    alphabet.require_nonunary()?;
    let k = alphabet.size() as Letter;
    let mut out = Vec::new();
    // Grow nonincreasing prefixes, closing each with every larger letter.
    let mut stack: Vec<Vec<Letter>> = (0..k).map(|l| vec![l]).collect();
    while let Some(prefix) = stack.pop() {
        if prefix.len() >= max_len {
            continue;
        }
        let last = *prefix.last().expect("prefixes are nonempty");
        for next in last + 1..k {
            let mut dip = prefix.clone();
            dip.push(next);
            out.push(Word::new(dip));
        }
        for next in 0..=last {
            let mut longer = prefix.clone();
            longer.push(next);
            stack.push(longer);
        }
    }
    out.sort_by(|a, b| compare_radix(a, b));
    Ok(out)
}

/// Renders a parse as `rac·ad·ab·raab | residual: -`.
pub fn render_dip_parse(
    alphabet: &Alphabet,
    word: &[Letter],
    parse: &DipParse<LevelLetter>,
) -> String {
    let dips: Vec<String> = parse
        .dips
        .iter()
        .map(|d| alphabet.render(&word[d[0].start..d[d.len() - 1].end]))
        .collect();
    let residual = match covering(&parse.residual) {
        Some(r) => alphabet.render(&word[r]),
        None => "-".to_string(),
    };
    format!("{} | residual: {}", dips.join("·"), residual)
}
