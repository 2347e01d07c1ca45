//! Alphabets, words and the conjugacy machinery everything else builds on.
//!
//! A [`Word`] is a sequence of letter indices; the owning [`Alphabet`] only
//! matters when parsing or rendering. Comparing two words with the derived
//! `Ord` gives the lexicographic order, [`compare_radix`] gives the radix
//! (length-first) order. Callers pick one explicitly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Position of a letter in its alphabet.
pub type Letter = u8;

/// A finite totally ordered alphabet. The order is the order of `letters`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from an ordered string, so `"abc"` means `a < b < c`.
    pub fn new(ordered: &str) -> Result<Self> {
        let letters: Vec<char> = ordered.chars().collect();
        if letters.is_empty() {
            return Err(Error::invalid("alphabet is empty"));
        }
        if letters.len() > usize::from(Letter::MAX) + 1 {
            return Err(Error::invalid(format!(
                "alphabet has {} letters, at most 256 are supported",
                letters.len()
            )));
        }
        for (i, c) in letters.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::invalid(format!(
                    "alphabet letter {c:?} is not printable"
                )));
            }
            if letters[..i].contains(c) {
                return Err(Error::invalid(format!("alphabet letter {c:?} is repeated")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// The alphabet letters as one-letter words, in increasing order.
    pub fn letter_words(&self) -> Vec<Word> {
        (0..self.size())
            .map(|i| Word::new(vec![i as Letter]))
            .collect()
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| {
                self.letters
                    .iter()
                    .position(|&l| l == c)
                    .map(|i| i as Letter)
                    .ok_or_else(|| {
                        Error::invalid(format!("letter {c:?} of {text:?} is not in the alphabet"))
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.letters[usize::from(l)]).collect()
    }

    /// Dip-based constructions need at least two letters.
    pub fn require_nonunary(&self) -> Result<()> {
        if self.size() < 2 {
            Err(Error::invalid(
                "operation needs an alphabet with at least two letters",
            ))
        } else {
            Ok(())
        }
    }

    /// Every word of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let k = self.size();
        let total = k.pow(len as u32);
        (0..total)
            .map(|mut code| {
                let mut letters = vec![0; len];
                for slot in letters.iter_mut().rev() {
                    *slot = (code % k) as Letter;
                    code /= k;
                }
                Word::new(letters)
            })
            .collect()
    }

    /// Every nonempty word of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (1..=max_len)
            .flat_map(|n| self.words_of_length(n))
            .collect()
    }
}

/// A finite sequence of letters. The derived `Ord` is lexicographic.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(other);
        Word(letters)
    }

    pub fn power(&self, exponent: usize) -> Word {
        Word(self.0.repeat(exponent))
    }

    /// The conjugate starting at position `offset` (taken modulo the length).
    pub fn rotate(&self, offset: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let offset = offset % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.0[offset..]);
        letters.extend_from_slice(&self.0[..offset]);
        Word(letters)
    }

    /// Smallest period of the word, from the prefix function.
    fn smallest_period(&self) -> usize {
        let s = &self.0;
        let mut border = vec![0usize; s.len()];
        for i in 1..s.len() {
            let mut k = border[i - 1];
            while k > 0 && s[i] != s[k] {
                k = border[k - 1];
            }
            if s[i] == s[k] {
                k += 1;
            }
            border[i] = k;
        }
        s.len() - border[s.len() - 1]
    }

    /// True iff the word is not `u^j` for any `j >= 2`.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid("primitivity of the empty word is undefined"));
        }
        let p = self.smallest_period();
        Ok(p == self.len() || !self.len().is_multiple_of(p))
    }

    pub(crate) fn require_primitive(&self) -> Result<()> {
        if self.is_primitive()? {
            Ok(())
        } else {
            Err(Error::invalid("word is not primitive"))
        }
    }

    /// Offset of the lexicographically least conjugate (first one on ties).
    pub fn least_rotation_offset(&self) -> usize {
        let s = &self.0;
        let n = s.len();
        let (mut i, mut j, mut k) = (0, 1, 0);
        while i < n && j < n && k < n {
            let (a, b) = (s[(i + k) % n], s[(j + k) % n]);
            if a == b {
                k += 1;
                continue;
            }
            if a > b {
                i += k + 1;
            } else {
                j += k + 1;
            }
            if i == j {
                j += 1;
            }
            k = 0;
        }
        i.min(j)
    }

    /// The Lyndon conjugate of a primitive word.
    pub fn least_rotation(&self) -> Result<Word> {
        self.require_primitive()?;
        Ok(self.rotate(self.least_rotation_offset()))
    }

    /// Canonical representative of the conjugacy class, defined for any nonempty word.
    pub fn necklace(&self) -> Word {
        self.rotate(self.least_rotation_offset())
    }

    pub fn is_conjugate_of(&self, other: &Word) -> bool {
        self.len() == other.len() && (self.is_empty() || self.necklace() == other.necklace())
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Letters as a..z, which is how every test alphabet starts.
        let text: String = self
            .0
            .iter()
            .map(|&l| char::from_u32(u32::from(b'a') + u32::from(l)).unwrap_or('?'))
            .collect();
        write!(f, "Word({text})")
    }
}

/// Radix order: shorter words first, equal lengths lexicographically.
pub fn compare_radix(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// The Lyndon words of length `n`, in lexicographic order.
pub fn lyndon_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let k = alphabet.size();
    let max = (k - 1) as Letter;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // Duval's successor: extend periodically, drop trailing maximal letters, bump.
    let mut w: Vec<Letter> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word::new(w.clone()));
        }
        let period = w.len();
        while w.len() < n {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&max) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// `ℓ_n(k)`: how many conjugacy classes of primitive words of length `n`
/// exist over `k` letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugacyClassCount {
    pub length: usize,
    pub alphabet_size: usize,
    pub count: u64,
}

fn mobius(mut n: usize) -> i128 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Necklace formula `(1/n) Σ_{d|n} μ(d) k^{n/d}`, with overflow reported.
pub fn necklace_count(n: usize, k: usize) -> Result<ConjugacyClassCount> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("necklace count needs n >= 1 and k >= 1"));
    }
    let overflow = || Error::Overflow(format!("l_{n}({k})"));
    let base = i128::try_from(k).map_err(|_| overflow())?;
    let mut total: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(n / d).map_err(|_| overflow())?;
        let term = base.checked_pow(exp).ok_or_else(overflow)?;
        total = total.checked_add(mu * term).ok_or_else(overflow)?;
    }
    let count = u64::try_from(total / n as i128).map_err(|_| overflow())?;
    Ok(ConjugacyClassCount {
        length: n,
        alphabet_size: k,
        count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    #[test]
    fn alphabet_rejects_bad_letters() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aba").is_err());
        assert!(Alphabet::new("a b").is_err());
        assert!(ab().parse("abc").is_err());
    }

    #[test]
    fn radix_examples() {
        let a = ab();
        let w = |s| a.parse(s).unwrap();
        assert_eq!(compare_radix(&w("b"), &w("aab")), Ordering::Less);
        assert_eq!(compare_radix(&w("aab"), &w("abb")), Ordering::Less);
        assert_eq!(compare_radix(&w("abab"), &w("abab")), Ordering::Equal);
        // lexicographic order disagrees on the first pair
        assert!(w("b") > w("aab"));
    }

    #[test]
    fn rotate_examples() {
        let a = Alphabet::new("abcdr").unwrap();
        let w = a.parse("abracadabra").unwrap();
        assert_eq!(a.render(&w.rotate(2)), "racadabraab");
        // starting after the prefix abrac
        assert_eq!(a.render(&w.rotate(5)), "adabraabrac");
        assert_eq!(w.rotate(0), w);
        assert_eq!(w.rotate(11), w);
        assert_eq!(ab().render(&ab().parse("ab").unwrap().rotate(1)), "ba");
        assert_eq!(Word::empty().rotate(3), Word::empty());
    }

    #[test]
    fn primitivity() {
        let a = ab();
        assert!(!a.parse("abab").unwrap().is_primitive().unwrap());
        assert!(a.parse("a").unwrap().is_primitive().unwrap());
        assert!(a.parse("aab").unwrap().is_primitive().unwrap());
        assert!(!a.parse("aaa").unwrap().is_primitive().unwrap());
        assert!(Word::empty().is_primitive().is_err());
        let abr = Alphabet::new("abcdr").unwrap();
        assert!(abr.parse("abracadabra").unwrap().is_primitive().unwrap());
    }

    #[test]
    fn least_rotation_examples() {
        let a = ab();
        let lr = |s| a.render(&a.parse(s).unwrap().least_rotation().unwrap());
        assert_eq!(lr("bab"), "abb");
        assert_eq!(lr("aaab"), "aaab");
        assert_eq!(lr("ba"), "ab");
        assert!(a.parse("abab").unwrap().least_rotation().is_err());
    }

    #[test]
    fn lyndon_examples() {
        let a = ab();
        let render = |ws: Vec<Word>| ws.iter().map(|w| a.render(w)).collect::<Vec<_>>();
        assert_eq!(render(lyndon_words(&a, 4)), ["aaab", "aabb", "abbb"]);
        assert_eq!(render(lyndon_words(&a, 1)), ["a", "b"]);
        assert_eq!(lyndon_words(&a, 5).len(), 6);
        let unary = Alphabet::new("a").unwrap();
        assert_eq!(lyndon_words(&unary, 1).len(), 1);
        assert!(lyndon_words(&unary, 2).is_empty());
    }

    fn brute_force_classes(n: usize, k: usize) -> usize {
        let a = Alphabet::new(&"abcdefgh"[..k]).unwrap();
        a.words_of_length(n)
            .into_iter()
            .filter(|w| w.is_primitive().unwrap())
            .map(|w| w.necklace())
            .collect::<BTreeSet<_>>()
            .len()
    }

    #[test]
    fn necklace_formula_matches_brute_force() {
        for k in 1..=4usize {
            for n in 1..=12 {
                if k.pow(n as u32) > 1 << 20 {
                    continue;
                }
                let formula = necklace_count(n, k).unwrap().count as usize;
                assert_eq!(formula, brute_force_classes(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn necklace_examples_and_errors() {
        assert_eq!(necklace_count(3, 2).unwrap().count, 2);
        assert_eq!(necklace_count(9, 2).unwrap().count, 56);
        assert_eq!(necklace_count(1, 7).unwrap().count, 7);
        assert!(necklace_count(0, 2).is_err());
        assert!(matches!(necklace_count(200, 10), Err(Error::Overflow(_))));
    }

    #[test]
    fn lyndon_counts_match_necklaces() {
        for k in 1..=3 {
            let a = Alphabet::new(&"abc"[..k]).unwrap();
            for n in 1..=10 {
                let words = lyndon_words(&a, n);
                assert_eq!(words.len() as u64, necklace_count(n, k).unwrap().count);
                for w in &words {
                    assert_eq!(&w.least_rotation().unwrap(), w);
                }
            }
        }
    }
}
