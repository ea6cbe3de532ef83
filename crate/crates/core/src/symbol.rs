use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A name over `[a-z][A-Za-z0-9_]*`, shared by atoms, arguments and claims.
///
/// Ordering is plain lexicographic order of the name. The translations move
/// names between the three formalisms unchanged, so one type serves all.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

pub type Atom = Symbol;
pub type Argument = Symbol;
pub type Claim = Symbol;

impl Symbol {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(Symbol(Arc::from(name)))
        } else {
            Err(Error::InvalidSymbol(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    name != "not" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::new(s)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Shorthand used throughout the tests: panics on an invalid name.
pub fn sym(name: &str) -> Symbol {
    Symbol::new(name).unwrap_or_else(|e| panic!("{e}"))
}

/// Builds a set of symbols from names.
pub fn syms<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> BTreeSet<Symbol> {
    names.into_iter().map(|n| sym(n.as_ref())).collect()
}

/// Canonical collection of atom, argument or claim sets.
///
/// Members are sorted sets and the collection itself is sorted
/// lexicographically, so two equal collections render identically.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct InterpretationSet(BTreeSet<BTreeSet<Symbol>>);

impl InterpretationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, set: BTreeSet<Symbol>) -> bool {
        self.0.insert(set)
    }

    pub fn contains(&self, set: &BTreeSet<Symbol>) -> bool {
        self.0.contains(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BTreeSet<Symbol>> {
        self.0.iter()
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference<'a>(&'a self, other: &'a Self) -> impl Iterator<Item = &'a BTreeSet<Symbol>> {
        self.0.difference(&other.0)
    }
}

impl FromIterator<BTreeSet<Symbol>> for InterpretationSet {
    fn from_iter<I: IntoIterator<Item = BTreeSet<Symbol>>>(iter: I) -> Self {
        InterpretationSet(iter.into_iter().collect())
    }
}

impl IntoIterator for InterpretationSet {
    type Item = BTreeSet<Symbol>;
    type IntoIter = std::collections::btree_set::IntoIter<BTreeSet<Symbol>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Writes `{a,b}`.
pub(crate) fn fmt_set(f: &mut impl fmt::Write, set: &BTreeSet<Symbol>) -> fmt::Result {
    f.write_char('{')?;
    for (i, s) in set.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        f.write_str(s.as_str())?;
    }
    f.write_char('}')
}

impl fmt::Display for InterpretationSet {
    /// One member per line, e.g. `{a,d}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for set in &self.0 {
            fmt_set(f, set)?;
            writeln!(f)?;
        }
        Ok(())
    }
}
