//! Melançon's merging algorithm.
//!
//! Starting from the letters of a primitive word, repeatedly merge the least
//! element of the cyclic sequence with its successor until one word is left.
//! That word is the conjugate of the input lying in the Lazard set of the
//! order. The loop runs `|w| - 1` times and each step scans the sequence, so
//! the whole thing is quadratic in `|w|`.

use crate::error::{Error, Result};
use crate::order::{OrderKey, WordOrder};
use crate::words::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeStep {
    /// Zero-based position of the chosen `s_i`.
    pub index: usize,
    pub merged: Word,
}

/// The initial sequence and the merges applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeSequence {
    pub initial: Vec<Word>,
    pub steps: Vec<MergeStep>,
}

fn apply(items: &mut Vec<Word>, index: usize) -> Word {
    let n = items.len();
    if index + 1 < n {
        let right = items.remove(index + 1);
        items[index] = items[index].concat(&right);
        items[index].clone()
    } else {
        let last = items.pop().expect("nonempty sequence");
        items[0] = last.concat(&items[0]);
        items[0].clone()
    }
}

impl MergeSequence {
    /// Every state of the sequence, the initial one included.
    pub fn states(&self) -> Vec<Vec<Word>> {
        let mut current = self.initial.clone();
        let mut out = vec![current.clone()];
        for step in &self.steps {
            apply(&mut current, step.index);
            out.push(current.clone());
        }
        out
    }
}

/// Renders a state as `s=(raab,rac,ad,ab)`.
pub fn render_state(alphabet: &Alphabet, state: &[Word]) -> String {
    let parts: Vec<String> = state.iter().map(|w| alphabet.render(w)).collect();
    format!("s=({})", parts.join(","))
}

/// Picks the first position holding the least value whose cyclic successor is larger.
fn choose(keys: &[OrderKey]) -> Option<usize> {
    let n = keys.len();
    let least = keys.iter().min()?;
    (0..n).find(|&i| &keys[i] == least && keys[i] < keys[(i + 1) % n])
}

pub fn melancon_rotate(word: &Word, order: &dyn WordOrder) -> Result<(Word, MergeSequence)> {
    if word.is_empty() {
        return Err(Error::invalid("cannot merge the empty word"));
    }
    word.require_primitive()?;

    let initial: Vec<Word> = word.iter().map(|&l| Word::new(vec![l])).collect();
    let mut items = initial.clone();
    let mut keys: Vec<OrderKey> = items.iter().map(|w| order.key(w)).collect();
    let mut steps = Vec::with_capacity(word.len().saturating_sub(1));
    while items.len() > 1 {
        let index = choose(&keys)
            .ok_or_else(|| Error::invalid("all elements are equal: the word is not primitive"))?;
        let merged = apply(&mut items, index);
        let key = order.key(&merged);
        if index + 1 < keys.len() {
            keys.remove(index + 1);
            keys[index] = key;
        } else {
            keys.pop();
            keys[0] = key;
        }
        steps.push(MergeStep { index, merged });
    }
    let output = items.pop().expect("one word remains");
    Ok((output, MergeSequence { initial, steps }))
}
