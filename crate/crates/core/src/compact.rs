//! Bitmask encodings used by the enumeration routines.
//!
//! Atoms of a [`Universe`] are numbered by their lexicographic rank, so an
//! atom set is a `u64` and numeric order of masks never leaks into output:
//! everything is decoded back into sorted symbol sets before it leaves the
//! crate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::symbol::Symbol;

pub(crate) const MAX_ATOMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Universe {
    atoms: Vec<Symbol>,
}

impl Universe {
    pub(crate) fn new(atoms: impl IntoIterator<Item = Symbol>) -> Result<Self> {
        let atoms: BTreeSet<Symbol> = atoms.into_iter().collect();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atoms.len(), MAX_ATOMS));
        }
        Ok(Universe {
            atoms: atoms.into_iter().collect(),
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.atoms.len()
    }

    pub(crate) fn atoms(&self) -> &[Symbol] {
        &self.atoms
    }

    pub(crate) fn index(&self, atom: &Symbol) -> Option<usize> {
        self.atoms.binary_search(atom).ok()
    }

    /// Bit of an atom that is known to be in the universe.
    pub(crate) fn bit(&self, atom: &Symbol) -> u64 {
        let i = self
            .index(atom)
            .unwrap_or_else(|| panic!("atom {atom} outside the universe"));
        1 << i
    }

    pub(crate) fn mask<'a>(&self, atoms: impl IntoIterator<Item = &'a Symbol>) -> u64 {
        atoms.into_iter().fold(0, |m, a| m | self.bit(a))
    }

    pub(crate) fn decode(&self, mask: u64) -> BTreeSet<Symbol> {
        bits(mask).map(|i| self.atoms[i].clone()).collect()
    }
}

/// Indices of the set bits, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct CompactRule {
    pub id: u32,
    pub head: u8,
    pub pos: u64,
    pub neg: u64,
}

impl CompactRule {
    pub(crate) fn head_bit(&self) -> u64 {
        1 << self.head
    }
}

/// Least model of the rules that survive the reduct w.r.t. `candidate`.
fn reduct_minimal_model(rules: &[CompactRule], candidate: u64, atomic: bool) -> u64 {
    if atomic {
        return rules
            .iter()
            .filter(|r| r.neg & candidate == 0)
            .fold(0, |m, r| m | r.head_bit());
    }
    let mut model = 0u64;
    loop {
        let next = rules
            .iter()
            .filter(|r| r.neg & candidate == 0 && r.pos & !model == 0)
            .fold(model, |m, r| m | r.head_bit());
        if next == model {
            return model;
        }
        model = next;
    }
}

/// Appends every answer set of `rules` to `out`, in increasing mask order.
///
/// Only subsets of the head atoms are candidates; the search visits
/// `2^|heads|` of them.
pub(crate) fn answer_sets(rules: &[CompactRule], out: &mut Vec<u64>) {
    let heads = rules.iter().fold(0u64, |m, r| m | r.head_bit());
    let atomic = rules.iter().all(|r| r.pos == 0);
    let mut candidate = 0u64;
    loop {
        if reduct_minimal_model(rules, candidate, atomic) == candidate {
            out.push(candidate);
        }
        if candidate == heads {
            break;
        }
        candidate = candidate.wrapping_sub(heads) & heads;
    }
}

/// Appends every stable extension of the framework whose `i`-th argument is
/// attacked by the arguments in `attackers[i]`.
pub(crate) fn stable_extensions(attackers: &[u64], out: &mut Vec<u64>) {
    let n = attackers.len();
    assert!(
        n < MAX_ATOMS,
        "stable enumeration supports fewer than {MAX_ATOMS} arguments"
    );
    for ext in 0..(1u64 << n) {
        // Stable: an argument is in `ext` exactly when `ext` does not attack it.
        let stable = attackers
            .iter()
            .enumerate()
            .all(|(i, att)| (ext >> i) & 1 == u64::from(att & ext == 0));
        if stable {
            out.push(ext);
        }
    }
}

/// Rule refinement keyed by head; inserts when the head is new.
pub(crate) fn head_update(rules: &mut Vec<CompactRule>, delta: &CompactRule) {
    match rules.iter_mut().find(|r| r.head == delta.head) {
        Some(r) => {
            r.pos |= delta.pos;
            r.neg |= delta.neg;
        }
        None => rules.push(*delta),
    }
}

/// Rule refinement keyed by id; inserts when the id is new.
pub(crate) fn id_update(rules: &mut Vec<CompactRule>, delta: &CompactRule) {
    match rules.iter_mut().find(|r| r.id == delta.id) {
        Some(r) => {
            r.pos |= delta.pos;
            r.neg |= delta.neg;
        }
        None => rules.push(*delta),
    }
}
