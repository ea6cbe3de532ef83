//! Rule refinement and the two update operators built on it.
//!
//! `⊎` ([`head_update`]) matches rules by head and is meant for h-unique
//! programs; `⊎⁺` ([`id_update`]) matches by rule id and works on any
//! atomic program. Either way a matched rule keeps its head and id and
//! absorbs the body of the incoming rule; an unmatched rule is added.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{Program, Rule};

/// How an update program is combined with a base program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpdateMode {
    /// Plain set union `P ∪ R`.
    Union,
    /// `P ⊎ R`, rules matched by head.
    Head,
    /// `P ⊎⁺ R`, rules matched by id.
    Id,
}

impl fmt::Display for UpdateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UpdateMode::Union => "union",
            UpdateMode::Head => "head",
            UpdateMode::Id => "id",
        })
    }
}

/// Applies `delta` to `program` under `mode`.
pub fn apply(mode: UpdateMode, program: &Program, delta: &Program) -> Result<Program> {
    match mode {
        UpdateMode::Union => Ok(program.union(delta)),
        UpdateMode::Head => head_update_program(program, delta),
        UpdateMode::Id => id_update_program(program, delta),
    }
}

/// `id(r): head(r) :- body(r) ∪ body(r2).`
pub fn refine(r: &Rule, r2: &Rule) -> Rule {
    Rule {
        id: r.id,
        head: r.head.clone(),
        pos: r.pos.union(&r2.pos).cloned().collect(),
        neg: r.neg.union(&r2.neg).cloned().collect(),
    }
}

fn require_atomic_rule(rule: &Rule) -> Result<()> {
    if rule.is_atomic() {
        Ok(())
    } else {
        Err(Error::RuleNotAtomic)
    }
}

/// `P ⊎ r2`. The result is numbered by head rank.
pub fn head_update(program: &Program, r2: &Rule) -> Result<Program> {
    program.require_atomic()?;
    program.require_h_unique()?;
    require_atomic_rule(r2)?;
    Ok(head_update_unchecked(program, r2))
}

fn head_update_unchecked(program: &Program, r2: &Rule) -> Program {
    let mut rules: Vec<Rule> = program.rules().cloned().collect();
    match rules.iter_mut().find(|r| r.head == r2.head) {
        Some(r) => *r = refine(r, r2),
        None => rules.push(r2.clone()),
    }
    Program::head_ranked(rules).expect("⊎ keeps heads unique")
}

/// `P ⊎ Q = P ⊎ r₁ ⊎ … ⊎ rₙ`, folding over `Q` in id order. `Q` may repeat
/// heads; such rules end up merged into one refined rule.
pub fn head_update_program(program: &Program, delta: &Program) -> Result<Program> {
    program.require_atomic()?;
    program.require_h_unique()?;
    delta.require_atomic()?;
    let start = program.with_head_rank_ids()?;
    Ok(delta.rules().fold(start, |acc, r| head_update_unchecked(&acc, r)))
}

/// `P ⊎⁺ r2`. On refinement the head of `r2` is discarded.
pub fn id_update(program: &Program, r2: &Rule) -> Result<Program> {
    program.require_atomic()?;
    require_atomic_rule(r2)?;
    Ok(id_update_unchecked(program.clone(), r2))
}

fn id_update_unchecked(mut program: Program, r2: &Rule) -> Program {
    match program.get_mut(r2.id) {
        Some(r) => *r = refine(r, r2),
        None => program.insert(r2.clone()).expect("id is fresh"),
    }
    program
}

/// `P ⊎⁺ Q`, folding over `Q` in id order.
pub fn id_update_program(program: &Program, delta: &Program) -> Result<Program> {
    program.require_atomic()?;
    delta.require_atomic()?;
    Ok(delta
        .rules()
        .fold(program.clone(), id_update_unchecked))
}
