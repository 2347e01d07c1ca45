//! Total orders on nonempty words that drive Lazard elimination.
//!
//! Each order maps a word to an [`OrderKey`]; keys compare field by field,
//! which keeps the three provided orders total and cheap to cache.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::dips::index_unchecked;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Sort key: `ranks` first, then the word lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey {
    pub ranks: [usize; 3],
    pub word: Word,
}

pub trait WordOrder: Send + Sync {
    fn name(&self) -> &str;

    fn key(&self, word: &Word) -> OrderKey;

    fn compare(&self, u: &Word, v: &Word) -> Ordering {
        self.key(u).cmp(&self.key(v))
    }
}

fn parity(word: &[Letter]) -> usize {
    usize::from(word.len().is_multiple_of(2))
}

/// Plain lexicographic order; its Lazard set is the set of Lyndon words.
#[derive(Clone, Copy, Debug, Default)]
pub struct LexOrder;

impl WordOrder for LexOrder {
    fn name(&self) -> &str {
        "lex"
    }

    fn key(&self, word: &Word) -> OrderKey {
        OrderKey {
            ranks: [0; 3],
            word: word.clone(),
        }
    }
}

/// Odd lengths before even lengths, radix order within a parity class.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScholtzOrder;

impl WordOrder for ScholtzOrder {
    fn name(&self) -> &str {
        "scholtz"
    }

    fn key(&self, word: &Word) -> OrderKey {
        OrderKey {
            ranks: [parity(word), word.len(), 0],
            word: word.clone(),
        }
    }
}

/// Odd before even, then by dip index, then radix.
#[derive(Clone, Copy, Debug, Default)]
pub struct EastmanOrder;

impl WordOrder for EastmanOrder {
    fn name(&self) -> &str {
        "eastman"
    }

    fn key(&self, word: &Word) -> OrderKey {
        OrderKey {
            ranks: [parity(word), index_unchecked(word), word.len()],
            word: word.clone(),
        }
    }
}

/// The provided orders, selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Scholtz,
    Eastman,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Lex, OrderKind::Scholtz, OrderKind::Eastman];

    pub fn order(self) -> &'static dyn WordOrder {
        match self {
            OrderKind::Lex => &LexOrder,
            OrderKind::Scholtz => &ScholtzOrder,
            OrderKind::Eastman => &EastmanOrder,
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "scholtz" => Ok(OrderKind::Scholtz),
            "eastman" => Ok(OrderKind::Eastman),
            other => Err(Error::invalid(format!(
                "unknown order {other:?} (expected lex, scholtz or eastman)"
            ))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.order().name())
    }
}

/// Checks `u < v => u < uv` for all nonempty `u, v` of length at most `max_len`.
pub fn check_lazard_law(order: &dyn WordOrder, alphabet: &Alphabet, max_len: usize) -> Result<()> {
    let words = alphabet.words_up_to(max_len);
    let keys: Vec<OrderKey> = words.iter().map(|w| order.key(w)).collect();
    for (u, ku) in words.iter().zip(&keys) {
        for (v, kv) in words.iter().zip(&keys) {
            if ku < kv && *ku >= order.key(&u.concat(v)) {
                return Err(Error::LazardLaw {
                    order: order.name().to_string(),
                    u: u.letters().to_vec(),
                    v: v.letters().to_vec(),
                });
            }
        }
    }
    Ok(())
}
