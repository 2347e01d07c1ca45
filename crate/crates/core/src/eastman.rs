//! Eastman's two-step rotation and the comma-free codes it produces.

use crate::dips::{base_letters, factor_dips, factor_superdips, merge_letters, LevelLetter};
use crate::error::{Error, Result};
use crate::words::{compare_radix, lyndon_words, Alphabet, Word};

/// What one level of the rotation did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationStep {
    pub level: usize,
    /// Base offset of the first rotation, which starts after the shortest
    /// prefix of `w²` ending with a dip of length at least 3.
    pub first_cut: usize,
    pub after_first: Word,
    /// The level dips of `after_first`, as base words.
    pub dips: Vec<Word>,
    /// Base offset (into `after_first`) of the first odd dip.
    pub second_cut: usize,
    pub after_second: Word,
    /// Number of superdips of `after_second`; odd and decreasing level by level.
    pub superdips: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationTrace {
    pub input: Word,
    pub steps: Vec<RotationStep>,
    pub output: Word,
    pub final_level: usize,
}

/// Level letters of `word` rotated to start at letter `first`.
fn rotate_letters(letters: &[LevelLetter], first: usize) -> Vec<LevelLetter> {
    let mut start = 0;
    letters[first..]
        .iter()
        .chain(&letters[..first])
        .map(|l| {
            let moved = LevelLetter {
                start,
                end: start + l.degree(),
                level: l.level,
            };
            start = moved.end;
            moved
        })
        .collect()
}

/// Rotates a primitive word of odd length to its unique conjugate in `Σ`.
pub fn eastman_rotate(alphabet: &Alphabet, word: &Word) -> Result<RotationTrace> {
    if word.is_empty() {
        return Err(Error::invalid("cannot rotate the empty word"));
    }
    word.require_primitive()?;
    if word.len().is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "Eastman rotation needs odd length, got {}",
            word.len()
        )));
    }
    if word.len() == 1 {
        return Ok(RotationTrace {
            input: word.clone(),
            steps: Vec::new(),
            output: word.clone(),
            final_level: 0,
        });
    }
    alphabet.require_nonunary()?;

    let mut current = word.clone();
    let mut letters = base_letters(&current);
    let mut steps = Vec::new();
    for level in 1.. {
        let t = letters.len();
        debug_assert!(t >= 3 && t % 2 == 1);
        let less = |w: &Word, a: &LevelLetter, b: &LevelLetter| {
            compare_radix(a.base(w), b.base(w)).is_lt()
        };

        // Step 1: earliest i >= 2 of the doubled sequence with l[i-2] >= l[i-1] < l[i].
        let at = |i: usize| &letters[i % t];
        let end = (2..2 * t)
            .find(|&i| !less(&current, at(i - 2), at(i - 1)) && less(&current, at(i - 1), at(i)))
            .ok_or_else(|| Error::invalid("word is not primitive at some level"))?;
        let first_letter = (end + 1) % t;
        let first_cut = letters[first_letter].start;
        let after_first = current.rotate(first_cut);
        let rotated = rotate_letters(&letters, first_letter);

        let parse = factor_dips(&after_first, &rotated);
        if !parse.is_complete() {
            return Err(Error::invalid("rotation did not land in D_n(A)^*"));
        }
        let dips = parse
            .dips
            .iter()
            .map(|d| Word::from(&after_first[d[0].start..d[d.len() - 1].end]))
            .collect();

        // Step 2: start before the first odd dip.
        let (odd_pos, odd_dip) = parse
            .dips
            .iter()
            .enumerate()
            .find(|(_, d)| d.len() % 2 == 1)
            .ok_or_else(|| Error::invalid("no odd dip in a word of odd length"))?;
        let second_cut = odd_dip[0].start;
        let odd_letter = parse.dips[..odd_pos].iter().map(Vec::len).sum::<usize>();
        let after_second = after_first.rotate(second_cut);
        let rotated = rotate_letters(&rotated, odd_letter);

        let grouped = factor_superdips(factor_dips(&after_second, &rotated));
        debug_assert!(grouped.is_complete());
        let superdips: Vec<LevelLetter> = grouped
            .superdips
            .iter()
            .map(|s| merge_letters(&s.concat()))
            .collect();

        steps.push(RotationStep {
            level,
            first_cut,
            after_first,
            dips,
            second_cut,
            after_second: after_second.clone(),
            superdips: superdips.len(),
        });
        current = after_second;
        if superdips.len() == 1 {
            return Ok(RotationTrace {
                input: word.clone(),
                steps,
                output: current,
                final_level: level,
            });
        }
        letters = superdips;
    }
    unreachable!()
}

/// Renders a trace as `level n: cut@i → w'; dips: …; cut@j → w''` lines.
pub fn render_trace(alphabet: &Alphabet, trace: &RotationTrace) -> String {
    let mut lines = Vec::new();
    for s in &trace.steps {
        let dips: Vec<String> = s.dips.iter().map(|d| alphabet.render(d)).collect();
        lines.push(format!(
            "level {}: cut@{} → {}; dips: {}; cut@{} → {}",
            s.level,
            s.first_cut,
            alphabet.render(&s.after_first),
            dips.join(" "),
            s.second_cut,
            alphabet.render(&s.after_second)
        ));
    }
    lines.push(format!(
        "result: {} (level {})",
        alphabet.render(&trace.output),
        trace.final_level
    ));
    lines.join("\n")
}

/// The Eastman comma-free code of odd length `m`, in radix order.
///
/// One word per primitive conjugacy class, found by rotating each Lyndon word.
pub fn eastman_code(alphabet: &Alphabet, m: usize) -> Result<Vec<Word>> {
    if m.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "Eastman codes need odd length, got {m}"
        )));
    }
    if m > 1 {
        alphabet.require_nonunary()?;
    }
    let mut code = lyndon_words(alphabet, m)
        .iter()
        .map(|w| eastman_rotate(alphabet, w).map(|t| t.output))
        .collect::<Result<Vec<_>>>()?;
    code.sort_by(|a, b| compare_radix(a, b));
    Ok(code)
}
