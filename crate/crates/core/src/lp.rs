//! Normal logic programs with identified rules and their answer sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::num::NonZeroU32;

use serde::Serialize;

use crate::compact::{self, CompactRule, Universe};
use crate::error::{Error, Result};
use crate::symbol::{Atom, InterpretationSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RuleId(NonZeroU32);

impl RuleId {
    pub fn new(value: u32) -> Result<Self> {
        NonZeroU32::new(value).map(RuleId).ok_or(Error::ZeroRuleId)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `id: head :- pos, not neg.`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rule {
    pub id: RuleId,
    pub head: Atom,
    pub pos: BTreeSet<Atom>,
    pub neg: BTreeSet<Atom>,
}

impl Rule {
    pub fn new(id: RuleId, head: Atom, pos: BTreeSet<Atom>, neg: BTreeSet<Atom>) -> Self {
        Rule { id, head, pos, neg }
    }

    /// A rule without positive body.
    pub fn atomic(id: RuleId, head: Atom, neg: impl IntoIterator<Item = Atom>) -> Self {
        Rule {
            id,
            head,
            pos: BTreeSet::new(),
            neg: neg.into_iter().collect(),
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn is_fact(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    /// The head occurs in the rule's own negative body.
    pub fn is_loop(&self) -> bool {
        self.neg.contains(&self.head)
    }

    pub fn body_len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn with_id(&self, id: RuleId) -> Rule {
        Rule { id, ..self.clone() }
    }

    /// Head and body, without the id.
    pub fn same_content(&self, other: &Rule) -> bool {
        self.head == other.head && self.pos == other.pos && self.neg == other.neg
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        std::iter::once(&self.head).chain(&self.pos).chain(&self.neg)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.head)?;
        let body = self
            .pos
            .iter()
            .map(|a| a.to_string())
            .chain(self.neg.iter().map(|a| format!("not {a}")))
            .collect::<Vec<_>>();
        if !body.is_empty() {
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

/// Class membership of a program; always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProgramClass {
    pub atomic: bool,
    pub strict: bool,
    pub h_unique: bool,
}

/// A finite set of rules with pairwise distinct ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Program {
    rules: BTreeMap<RuleId, Rule>,
}

impl Program {
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let mut program = Program::default();
        for rule in rules {
            program.insert(rule)?;
        }
        Ok(program)
    }

    /// Builds an h-unique program, numbering rules by the lexicographic
    /// rank of their head. Incoming ids are ignored.
    pub fn head_ranked(rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let mut by_head: BTreeMap<Atom, Rule> = BTreeMap::new();
        for rule in rules {
            let head = rule.head.clone();
            if by_head.insert(head.clone(), rule).is_some() {
                return Err(Error::NotHUnique(head));
            }
        }
        let mut program = Program::default();
        for (rank, rule) in by_head.into_values().enumerate() {
            let id = RuleId::new(rank as u32 + 1)?;
            program.rules.insert(id, rule.with_id(id));
        }
        Ok(program)
    }

    pub fn insert(&mut self, rule: Rule) -> Result<()> {
        if self.rules.contains_key(&rule.id) {
            return Err(Error::DuplicateRuleId(rule.id));
        }
        self.rules.insert(rule.id, rule);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules in id order.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values()
    }

    pub fn get(&self, id: RuleId) -> Option<&Rule> {
        self.rules.get(&id)
    }

    pub(crate) fn get_mut(&mut self, id: RuleId) -> Option<&mut Rule> {
        self.rules.get_mut(&id)
    }

    pub fn ids(&self) -> BTreeSet<RuleId> {
        self.rules.keys().copied().collect()
    }

    pub fn max_id(&self) -> u32 {
        self.rules.keys().next_back().map_or(0, |id| id.get())
    }

    pub fn heads(&self) -> BTreeSet<Atom> {
        self.rules().map(|r| r.head.clone()).collect()
    }

    pub fn neg_atoms(&self) -> BTreeSet<Atom> {
        self.rules().flat_map(|r| r.neg.iter().cloned()).collect()
    }

    /// The rules whose head is `atom`.
    pub fn rules_with_head<'a>(&'a self, atom: &'a Atom) -> impl Iterator<Item = &'a Rule> {
        self.rules().filter(move |r| &r.head == atom)
    }

    pub fn class(&self) -> ProgramClass {
        class_of(self)
    }

    pub fn is_atomic(&self) -> bool {
        self.rules().all(Rule::is_atomic)
    }

    pub fn is_h_unique(&self) -> bool {
        self.first_repeated_head().is_none()
    }

    fn first_repeated_head(&self) -> Option<&Atom> {
        let mut seen = BTreeSet::new();
        self.rules().map(|r| &r.head).find(|h| !seen.insert(*h))
    }

    pub(crate) fn require_atomic(&self) -> Result<()> {
        match self.rules().find(|r| !r.is_atomic()) {
            Some(r) => Err(Error::NotAtomic(r.id)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_h_unique(&self) -> Result<()> {
        match self.first_repeated_head() {
            Some(h) => Err(Error::NotHUnique(h.clone())),
            None => Ok(()),
        }
    }

    /// Same program numbered by head rank. Requires h-uniqueness.
    pub fn with_head_rank_ids(&self) -> Result<Program> {
        Program::head_ranked(self.rules().cloned())
    }

    /// Equality of the rule multisets with ids ignored.
    pub fn same_rules_ignoring_ids(&self, other: &Program) -> bool {
        let key = |p: &Program| {
            let mut v: Vec<_> = p.rules().map(|r| (&r.head, &r.pos, &r.neg)).collect();
            v.sort();
            v.into_iter()
                .map(|(h, p, n)| (h.clone(), p.clone(), n.clone()))
                .collect::<Vec<_>>()
        };
        key(self) == key(other)
    }

    /// The set union `self ∪ other` of rules.
    ///
    /// Rules of `other` already present in `self` (same head and body) are
    /// dropped; the others are renumbered after the largest id of `self`,
    /// in the id order of `other`.
    pub fn union(&self, other: &Program) -> Program {
        let mut out = self.clone();
        let mut next = self.max_id();
        for rule in other.rules() {
            if self.rules().any(|r| r.same_content(rule)) {
                continue;
            }
            next += 1;
            let id = RuleId::new(next).expect("ids above zero");
            out.rules.insert(id, rule.with_id(id));
        }
        out
    }

    pub(crate) fn encode(&self, universe: &Universe) -> Vec<CompactRule> {
        self.rules()
            .map(|r| CompactRule {
                id: r.id.get(),
                head: universe.index(&r.head).expect("head in universe") as u8,
                pos: universe.mask(&r.pos),
                neg: universe.mask(&r.neg),
            })
            .collect()
    }
}

impl fmt::Display for Program {
    /// One rule per line in id order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in self.rules() {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// All atoms occurring in the program.
pub fn language(program: &Program) -> BTreeSet<Atom> {
    program.rules().flat_map(|r| r.atoms().cloned()).collect()
}

pub fn class_of(program: &Program) -> ProgramClass {
    let heads = program.heads();
    ProgramClass {
        atomic: program.is_atomic(),
        strict: language(program).is_subset(&heads),
        h_unique: program.is_h_unique(),
    }
}

/// The negation-free program `P^S`: rules blocked by `s` are deleted, the
/// survivors lose their negative bodies. Ids are kept.
pub fn reduct(program: &Program, s: &BTreeSet<Atom>) -> Program {
    Program {
        rules: program
            .rules()
            .filter(|r| r.neg.is_disjoint(s))
            .map(|r| {
                (
                    r.id,
                    Rule {
                        neg: BTreeSet::new(),
                        ..r.clone()
                    },
                )
            })
            .collect(),
    }
}

/// Least model of a negation-free program.
pub fn minimal_model(program: &Program) -> Result<BTreeSet<Atom>> {
    if let Some(r) = program.rules().find(|r| !r.neg.is_empty()) {
        return Err(Error::NotNegationFree(r.id));
    }
    let mut model = BTreeSet::new();
    loop {
        let fired: Vec<&Atom> = program
            .rules()
            .filter(|r| !model.contains(&r.head) && r.pos.is_subset(&model))
            .map(|r| &r.head)
            .collect();
        if fired.is_empty() {
            return Ok(model);
        }
        model.extend(fired.into_iter().cloned());
    }
}

pub fn is_answer_set(program: &Program, s: &BTreeSet<Atom>) -> bool {
    minimal_model(&reduct(program, s)).is_ok_and(|m| &m == s)
}

/// Every answer set, found by testing the subsets of `head(P)`.
///
/// Atoms outside `head(P)` are never derived, so no other candidate can be
/// a minimal model of its own reduct. The search costs `2^|head(P)|` reduct
/// evaluations; programs with more than 64 atoms are rejected by panic.
pub fn answer_sets(program: &Program) -> InterpretationSet {
    let universe = Universe::new(language(program)).unwrap_or_else(|e| panic!("{e}"));
    let rules = program.encode(&universe);
    let mut masks = Vec::new();
    compact::answer_sets(&rules, &mut masks);
    masks.into_iter().map(|m| universe.decode(m)).collect()
}

/// The atoms `b` with `not b` in some body and no rule headed by `b`.
pub fn ungrounded_vulnerabilities(program: &Program) -> BTreeSet<Atom> {
    let heads = program.heads();
    program.neg_atoms().into_iter().filter(|b| !heads.contains(b)).collect()
}

/// `P↓head`: every rule loses its ungrounded vulnerabilities.
pub fn strict_projection(program: &Program) -> Result<Program> {
    program.require_atomic()?;
    let uv = ungrounded_vulnerabilities(program);
    Ok(Program {
        rules: program
            .rules()
            .map(|r| {
                let neg = r.neg.difference(&uv).cloned().collect();
                (r.id, Rule { neg, ..r.clone() })
            })
            .collect(),
    })
}

/// `AS(P) = AS(Q)`.
pub fn equivalent(p: &Program, q: &Program) -> bool {
    answer_sets(p) == answer_sets(q)
}
