use std::collections::BTreeSet;

use crate::error::Result;
use crate::lp::{Program, Rule};
use crate::symbol::Atom;

use super::{RuleMismatchKind, SeVerdict, Witness};

/// Drops from every rule the negative literals over heads of the *other*
/// loop rules. A loop rule keeps its own literal.
pub fn lp_kernel(program: &Program) -> Result<Program> {
    program.require_atomic()?;
    program.require_h_unique()?;
    let loop_heads: BTreeSet<Atom> = program
        .rules()
        .filter(|r| r.is_loop())
        .map(|r| r.head.clone())
        .collect();
    let rules = program.rules().map(|r| Rule {
        neg: r
            .neg
            .iter()
            .filter(|a| **a == r.head || !loop_heads.contains(*a))
            .cloned()
            .collect(),
        ..r.clone()
    });
    Program::new(rules)
}

fn content(program: &Program) -> BTreeSet<(Atom, BTreeSet<Atom>)> {
    program.rules().map(|r| (r.head.clone(), r.neg.clone())).collect()
}

/// Equivalence under `⊎` for h-unique atomic programs: equal kernels.
pub fn rr_se_hunique(p: &Program, q: &Program) -> Result<SeVerdict> {
    let (kp, kq) = (lp_kernel(p)?.with_head_rank_ids()?, lp_kernel(q)?.with_head_rank_ids()?);
    let (cp, cq) = (content(&kp), content(&kq));
    if cp == cq {
        return Ok(SeVerdict::exact());
    }
    let only = |k: &Program, other: &BTreeSet<(Atom, BTreeSet<Atom>)>| {
        k.rules()
            .filter(|r| !other.contains(&(r.head.clone(), r.neg.clone())))
            .cloned()
            .collect()
    };
    Ok(SeVerdict::distinct(Witness::ProgramKernelDiff {
        left_only: only(&kp, &cq),
        right_only: only(&kq, &cp),
    }))
}

/// Equivalence under `⊎⁺` for atomic programs: the same ids, equal bodies
/// per id, and equal heads unless both rules of an id are loop rules.
pub fn rr_se_atomic(p: &Program, q: &Program) -> Result<SeVerdict> {
    p.require_atomic()?;
    q.require_atomic()?;
    let ids: BTreeSet<_> = p.ids().union(&q.ids()).copied().collect();
    for id in ids {
        let (l, r) = (p.get(id), q.get(id));
        let reason = match (l, r) {
            (Some(l), Some(r)) if l.neg != r.neg => Some(RuleMismatchKind::Body),
            (Some(l), Some(r)) if l.head != r.head && !(l.is_loop() && r.is_loop()) => Some(RuleMismatchKind::Head),
            (Some(_), Some(_)) => None,
            _ => Some(RuleMismatchKind::MissingId),
        };
        if let Some(reason) = reason {
            return Ok(SeVerdict::distinct(Witness::RuleMismatch {
                id,
                reason,
                left: l.cloned(),
                right: r.cloned(),
            }));
        }
    }
    Ok(SeVerdict::exact())
}
